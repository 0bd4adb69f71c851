//! Symmetric quadric pencils, their symmetroids and plane sections.
//!
//! A pencil is a family `A_λ = Σ_k λ_k A_k` of symmetric `n × n` rational
//! matrices with `n` parameters. Its symmetroid is `det A_λ`, a form of
//! degree `n` in `λ`.

mod scan;
mod singular;

use num_rational::BigRational;
use num_traits::Zero;
use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra::linalg::{kernel, rank, rref};
use crate::algebra::ring::{parse_rational, rational_to_string};
use crate::algebra::{Field, MPoly, NfElem, NumberField, Rationals};

pub use scan::{base_locus_count, rank3_on_plane_count};
pub use singular::{classify_singularity, singular_points, singular_points_with_order, Classification, SingularPoint};

/// The shipped example pencil.
pub const EXAMPLE_PENCIL_JSON: &str = include_str!("../../data/example_pencil.json");

/// The line `⟨z, w⟩` of the shipped example.
pub const EXAMPLE_Z: [i64; 5] = [-1, 0, 0, 1, 2];
pub const EXAMPLE_W: [i64; 5] = [-1, 2, 0, -1, 0];

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PencilError {
    #[error("matrix {k} is not symmetric at ({i},{j})")]
    NotSymmetric { k: usize, i: usize, j: usize },
    #[error("bad rational literal {0:?}")]
    BadRational(String),
    #[error("wrong shape: {0}")]
    WrongShape(String),
    #[error("determinant vanishes identically")]
    IdenticallyZero,
    #[error("z and w are linearly dependent")]
    DependentVectors,
    #[error("the two defining forms of the plane are dependent")]
    DegenerateSystem,
    #[error("the plane lies inside the hypersurface")]
    PlaneInsideHypersurface,
    #[error("curve is not reduced")]
    NonReducedCurve,
    #[error("partials share a curve component in every tried coordinate system")]
    ResultantDegenerate,
    #[error("point is not a singular point of the curve")]
    NotSingular,
    #[error("{0} is not a usable prime here")]
    BadPrime(u64),
    #[error("singularity is not a node")]
    NonNodalSingularity,
    #[error("invalid JSON: {0}")]
    Json(String),
}

pub type Form = MPoly<Rationals>;

#[derive(Clone, Debug, PartialEq)]
pub struct Pencil {
    /// `matrices[k][i][j] = (A_k)_{ij}`.
    matrices: Vec<Vec<Vec<BigRational>>>,
}

impl Pencil {
    /// Validates size, symmetry and non-degeneracy.
    pub fn new(matrices: Vec<Vec<Vec<BigRational>>>) -> Result<Self, PencilError> {
        let n = matrices.len();
        if n == 0 {
            return Err(PencilError::WrongShape("no matrices".into()));
        }
        for (k, m) in matrices.iter().enumerate() {
            if m.len() != n || m.iter().any(|row| row.len() != n) {
                return Err(PencilError::WrongShape(format!("matrix {k} is not {n}x{n}")));
            }
            for i in 0..n {
                for j in i + 1..n {
                    if m[i][j] != m[j][i] {
                        return Err(PencilError::NotSymmetric { k, i, j });
                    }
                }
            }
        }
        if matrices.iter().flatten().flatten().all(Zero::is_zero) {
            return Err(PencilError::WrongShape("all entries are zero".into()));
        }
        Ok(Self { matrices })
    }

    pub fn from_json(v: &Value) -> Result<Self, PencilError> {
        let n = v
            .get("n")
            .and_then(Value::as_u64)
            .ok_or_else(|| PencilError::Json("missing integer \"n\"".into()))? as usize;
        let mats = v
            .get("matrices")
            .and_then(Value::as_array)
            .ok_or_else(|| PencilError::Json("missing \"matrices\" array".into()))?;
        if mats.len() != n {
            return Err(PencilError::WrongShape(format!(
                "expected {n} matrices, got {}",
                mats.len()
            )));
        }
        let mut matrices = Vec::with_capacity(n);
        for m in mats {
            let rows = m
                .as_array()
                .ok_or_else(|| PencilError::WrongShape("matrix is not an array".into()))?;
            let mut mat = Vec::with_capacity(rows.len());
            for row in rows {
                let row = row
                    .as_array()
                    .ok_or_else(|| PencilError::WrongShape("row is not an array".into()))?;
                let mut out = Vec::with_capacity(row.len());
                for e in row {
                    let s = e.as_str().ok_or_else(|| PencilError::BadRational(e.to_string()))?;
                    out.push(parse_rational(s).ok_or_else(|| PencilError::BadRational(s.to_string()))?);
                }
                mat.push(out);
            }
            matrices.push(mat);
        }
        Self::new(matrices)
    }

    pub fn from_json_str(text: &str) -> Result<Self, PencilError> {
        let v: Value = serde_json::from_str(text).map_err(|e| PencilError::Json(e.to_string()))?;
        Self::from_json(&v)
    }

    pub fn example() -> Self {
        Self::from_json_str(EXAMPLE_PENCIL_JSON).expect("shipped example is valid")
    }

    pub fn to_json(&self) -> Value {
        let mats: Vec<Vec<Vec<String>>> = self
            .matrices
            .iter()
            .map(|m| m.iter().map(|r| r.iter().map(rational_to_string).collect()).collect())
            .collect();
        json!({"n": self.n(), "matrices": mats})
    }

    pub fn n(&self) -> usize {
        self.matrices.len()
    }

    pub fn matrices(&self) -> &[Vec<Vec<BigRational>>] {
        &self.matrices
    }

    /// `A_λ` with entries linear forms in `λ`.
    pub fn symbolic_matrix(&self) -> Vec<Vec<Form>> {
        let n = self.n();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let coeffs: Vec<BigRational> = self.matrices.iter().map(|m| m[i][j].clone()).collect();
                        MPoly::linear(&Rationals, &coeffs)
                    })
                    .collect()
            })
            .collect()
    }

    /// `A_λ` at a point with coordinates in `field`.
    pub fn evaluate<F: Field>(
        &self,
        field: &F,
        lambda: &[F::Elem],
        embed: impl Fn(&BigRational) -> F::Elem,
    ) -> Vec<Vec<F::Elem>> {
        let n = self.n();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        self.matrices.iter().zip(lambda).fold(field.zero(), |acc, (m, l)| {
                            if m[i][j].is_zero() {
                                acc
                            } else {
                                field.add(&acc, &field.mul(&embed(&m[i][j]), l))
                            }
                        })
                    })
                    .collect()
            })
            .collect()
    }

    /// `ᵗz A_k w` for every `k`.
    pub fn bilinear(&self, z: &[BigRational], w: &[BigRational]) -> Vec<BigRational> {
        self.matrices
            .iter()
            .map(|m| {
                let mut acc = BigRational::zero();
                for (i, zi) in z.iter().enumerate() {
                    if zi.is_zero() {
                        continue;
                    }
                    for (j, wj) in w.iter().enumerate() {
                        acc += zi * &m[i][j] * wj;
                    }
                }
                acc
            })
            .collect()
    }
}

/// `det A_λ` by cofactor expansion over column subsets.
pub fn symmetroid(p: &Pencil) -> Result<Form, PencilError> {
    let m = p.symbolic_matrix();
    let n = p.n();
    // memo[mask] = det of rows (n - popcount(mask))..n restricted to columns in mask.
    let mut memo: Vec<Option<Form>> = vec![None; 1 << n];
    memo[0] = Some(MPoly::one(&Rationals, n));
    for size in 1..=n {
        let row = n - size;
        for mask in 0usize..(1 << n) {
            if mask.count_ones() as usize != size {
                continue;
            }
            let mut acc = MPoly::zero(&Rationals, n);
            let mut sign_pos = 0;
            for col in 0..n {
                if mask & (1 << col) == 0 {
                    continue;
                }
                let entry = &m[row][col];
                if !entry.is_zero() {
                    let minor = memo[mask & !(1 << col)].as_ref().unwrap();
                    let term = entry.mul(minor);
                    acc = if sign_pos % 2 == 0 {
                        acc.add(&term)
                    } else {
                        acc.sub(&term)
                    };
                }
                sign_pos += 1;
            }
            memo[mask] = Some(acc);
        }
    }
    let det = memo[(1 << n) - 1].take().unwrap();
    if det.is_zero() {
        return Err(PencilError::IdenticallyZero);
    }
    Ok(det)
}

fn independent(z: &[BigRational], w: &[BigRational]) -> bool {
    rank(&Rationals, &vec![z.to_vec(), w.to_vec()]) == 2
}

/// Whether the line `⟨z, w⟩` is isotropic for every quadric pair, i.e.
/// `ᵗz A_k w = 0` for all `k`.
pub fn line_in_x(p: &Pencil, z: &[BigRational], w: &[BigRational]) -> Result<bool, PencilError> {
    check_vector_len(p, z)?;
    check_vector_len(p, w)?;
    if !independent(z, w) {
        return Err(PencilError::DependentVectors);
    }
    Ok(p.bilinear(z, w).iter().all(Zero::is_zero))
}

fn check_vector_len(p: &Pencil, v: &[BigRational]) -> Result<(), PencilError> {
    if v.len() != p.n() {
        return Err(PencilError::WrongShape(format!(
            "vector of length {} for n = {}",
            v.len(),
            p.n()
        )));
    }
    Ok(())
}

/// The linear space `{ᵗzA_λz = ᵗwA_λw = 0}` in `λ`-space.
#[derive(Clone, Debug, PartialEq)]
pub struct PlaneData {
    /// Coefficient vectors of `ᵗzA_λz` and `ᵗwA_λw`.
    pub forms: [Vec<BigRational>; 2],
    /// A rational basis of the solution space; `λ = Σ_j x_j · basis[j]`.
    pub basis: Vec<Vec<BigRational>>,
}

impl PlaneData {
    /// Whether the span of the two forms equals the span of `others`.
    pub fn same_span(&self, others: &[Vec<BigRational>]) -> bool {
        let mine = rank(&Rationals, &self.forms.to_vec());
        let theirs = rank(&Rationals, &others.to_vec());
        let mut both = self.forms.to_vec();
        both.extend(others.iter().cloned());
        mine == theirs && rank(&Rationals, &both) == mine
    }

    /// `λ(x)` for a point `x` of the parameter space over `field`.
    pub fn to_ambient<F: Field>(
        &self,
        field: &F,
        x: &[F::Elem],
        embed: impl Fn(&BigRational) -> F::Elem,
    ) -> Vec<F::Elem> {
        let n = self.basis.first().map_or(0, Vec::len);
        (0..n)
            .map(|k| {
                self.basis.iter().zip(x).fold(field.zero(), |acc, (b, xi)| {
                    if b[k].is_zero() {
                        acc
                    } else {
                        field.add(&acc, &field.mul(&embed(&b[k]), xi))
                    }
                })
            })
            .collect()
    }
}

pub fn plane_px(p: &Pencil, z: &[BigRational], w: &[BigRational]) -> Result<PlaneData, PencilError> {
    check_vector_len(p, z)?;
    check_vector_len(p, w)?;
    if !independent(z, w) {
        return Err(PencilError::DependentVectors);
    }
    let fz = p.bilinear(z, z);
    let fw = p.bilinear(w, w);
    let forms = vec![fz.clone(), fw.clone()];
    if rank(&Rationals, &forms) < 2 {
        return Err(PencilError::DegenerateSystem);
    }
    let basis = kernel(&Rationals, &forms, p.n());
    Ok(PlaneData { forms: [fz, fw], basis })
}

/// Pulls a form in `λ` back along `λ = Σ_j x_j · basis[j]`.
pub fn restrict_to_plane(q: &Form, plane: &PlaneData) -> Result<Form, PencilError> {
    let m = plane.basis.len();
    let images: Vec<Form> = (0..q.nvars())
        .map(|k| {
            let coeffs: Vec<BigRational> = plane.basis.iter().map(|b| b[k].clone()).collect();
            MPoly::linear(&Rationals, &coeffs)
        })
        .collect();
    if images.is_empty() || m == 0 {
        return Err(PencilError::WrongShape("empty parametrization".into()));
    }
    let out = q.substitute(&images);
    if out.is_zero() {
        return Err(PencilError::PlaneInsideHypersurface);
    }
    Ok(out)
}

/// Rank of `A_λ` at a point over a number field.
pub fn rank_at(p: &Pencil, field: &NumberField, lambda: &[NfElem]) -> usize {
    let a = p.evaluate(field, lambda, |q| field.from_rational(q));
    rank(field, &a)
}

/// Whether `ker A_λ` meets the line `⟨z, w⟩`.
pub fn kernel_in_line(
    p: &Pencil,
    field: &NumberField,
    lambda: &[NfElem],
    z: &[BigRational],
    w: &[BigRational],
) -> bool {
    let a = p.evaluate(field, lambda, |q| field.from_rational(q));
    let embed = |v: &[BigRational]| -> Vec<NfElem> { v.iter().map(|x| field.from_rational(x)).collect() };
    let az = crate::algebra::linalg::mat_vec(field, &a, &embed(z));
    let aw = crate::algebra::linalg::mat_vec(field, &a, &embed(w));
    let mut m: Vec<Vec<NfElem>> = (0..az.len()).map(|i| vec![az[i].clone(), aw[i].clone()]).collect();
    rref(field, &mut m).len() < 2
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct GenusReport {
    pub degree: u32,
    pub arithmetic_genus: i64,
    pub geometric_genus: i64,
}

/// Genus of the normalization of a plane curve whose complete singular set
/// is `points`, all nodes. Each point counts with its residue degree.
pub fn curve_genus_report(c: &Form, points: &[SingularPoint]) -> Result<GenusReport, PencilError> {
    let d = c.total_degree().ok_or(PencilError::IdenticallyZero)?;
    if points.iter().any(|pt| !pt.classification.node) {
        return Err(PencilError::NonNodalSingularity);
    }
    let nodes: usize = points.iter().map(|pt| pt.field.degree()).sum();
    let pa = (d as i64 - 1) * (d as i64 - 2) / 2;
    Ok(GenusReport {
        degree: d,
        arithmetic_genus: pa,
        geometric_genus: pa - nodes as i64,
    })
}

/// Integer vector to rationals.
pub fn rational_vector(v: &[i64]) -> Vec<BigRational> {
    v.iter().map(|&x| BigRational::from_integer(x.into())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ring::rat;
    use crate::algebra::Ring;

    fn diagonal() -> Pencil {
        let mats = (0..5)
            .map(|k| {
                (0..5)
                    .map(|i| (0..5).map(|j| rat((i == j && j == k) as i64)).collect())
                    .collect()
            })
            .collect();
        Pencil::new(mats).unwrap()
    }

    #[test]
    fn json_round_trip_is_exact() {
        let p = Pencil::example();
        let v = p.to_json();
        let back = Pencil::from_json(&v).unwrap();
        assert_eq!(back, p);
        assert_eq!(back.to_json(), v);
    }

    #[test]
    fn load_errors() {
        let mut v = Pencil::example().to_json();
        v["matrices"][0][0][1] = json!("7");
        assert_eq!(
            Pencil::from_json(&v),
            Err(PencilError::NotSymmetric { k: 0, i: 0, j: 1 })
        );
        let mut v = Pencil::example().to_json();
        v["matrices"][0][0][0] = json!("0.5");
        assert_eq!(Pencil::from_json(&v), Err(PencilError::BadRational("0.5".into())));
        let zeros = json!({"n": 2, "matrices": [[["0","0"],["0","0"]], [["0","0"],["0","0"]]]});
        assert!(matches!(Pencil::from_json(&zeros), Err(PencilError::WrongShape(_))));
        let short = json!({"n": 2, "matrices": [[["0","0"],["0","0"]]]});
        assert!(matches!(Pencil::from_json(&short), Err(PencilError::WrongShape(_))));
    }

    #[test]
    fn diagonal_symmetroid_is_product() {
        let det = symmetroid(&diagonal()).unwrap();
        assert_eq!(det, MPoly::monomial(&Rationals, vec![1, 1, 1, 1, 1], rat(1)));
    }

    #[test]
    fn common_kernel_gives_zero_determinant() {
        let mut mats = Pencil::example().matrices().to_vec();
        for m in &mut mats {
            for i in 0..5 {
                m[0][i] = rat(0);
                m[i][0] = rat(0);
            }
        }
        assert_eq!(
            symmetroid(&Pencil::new(mats).unwrap()),
            Err(PencilError::IdenticallyZero)
        );
    }

    #[test]
    fn example_line_and_plane() {
        let p = Pencil::example();
        let z = rational_vector(&EXAMPLE_Z);
        let w = rational_vector(&EXAMPLE_W);
        assert!(line_in_x(&p, &z, &w).unwrap());
        let e1 = rational_vector(&[1, 0, 0, 0, 0]);
        let e2 = rational_vector(&[0, 1, 0, 0, 0]);
        assert!(!line_in_x(&p, &e1, &e2).unwrap());
        assert_eq!(line_in_x(&p, &z, &z), Err(PencilError::DependentVectors));
        let plane = plane_px(&p, &z, &w).unwrap();
        assert!(plane.same_span(&[rational_vector(&[3, 0, 0, 2, -1]), rational_vector(&[2, -1, -1, 0, 0])]));
        assert_eq!(plane.basis.len(), 3);
    }

    #[test]
    fn diagonal_plane_and_restriction() {
        let p = diagonal();
        let e1 = rational_vector(&[1, 0, 0, 0, 0]);
        let e2 = rational_vector(&[0, 1, 0, 0, 0]);
        let plane = plane_px(&p, &e1, &e2).unwrap();
        assert_eq!(plane.forms, [e1.clone(), e2.clone()]);
        let det = symmetroid(&p).unwrap();
        assert_eq!(
            restrict_to_plane(&det, &plane),
            Err(PencilError::PlaneInsideHypersurface)
        );
        let mut mats = p.matrices().to_vec();
        mats[0][0][0] = rat(0);
        let q = Pencil::new(mats).unwrap();
        assert_eq!(plane_px(&q, &e1, &e2), Err(PencilError::DegenerateSystem));
    }

    #[test]
    fn fifth_power_restricts_to_fifth_power() {
        let l1 = MPoly::var(&Rationals, 5, 0).pow(5);
        let plane = PlaneData {
            forms: [rational_vector(&[0, 0, 0, 1, 0]), rational_vector(&[0, 0, 0, 0, 1])],
            basis: vec![
                rational_vector(&[1, 0, 0, 0, 0]),
                rational_vector(&[2, 1, 0, 0, 0]),
                rational_vector(&[-1, 0, 1, 0, 0]),
            ],
        };
        let r = restrict_to_plane(&l1, &plane).unwrap();
        let lin = MPoly::linear(&Rationals, &rational_vector(&[1, 2, -1]));
        assert_eq!(r, lin.pow(5));
    }

    #[test]
    fn ranks() {
        let q = NumberField::rationals();
        let p = diagonal();
        let e1: Vec<NfElem> = (0..5).map(|i| q.from_int((i == 0) as i64)).collect();
        assert_eq!(rank_at(&p, &q, &e1), 1);
        let ex = Pencil::example();
        let generic: Vec<NfElem> = [1, 2, -3, 5, 7].iter().map(|&v| q.from_int(v)).collect();
        assert_eq!(rank_at(&ex, &q, &generic), 5);
    }
}
