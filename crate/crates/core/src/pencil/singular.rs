//! Singular points of plane curves by resultants and exact factorization.

use super::{Form, PencilError, PlaneData};
use crate::algebra::factor::factor_rational;
use crate::algebra::resultant::{coefficients_in, resultant};
use crate::algebra::ring::rat;
use crate::algebra::{Field, MPoly, NfElem, NumberField, Rationals, Ring, UPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Classification {
    pub multiplicity: u32,
    /// Multiplicity two with a nondegenerate quadratic part.
    pub node: bool,
}

/// A Galois orbit of singular points: one point with coordinates in its
/// residue field, standing for `field.degree()` conjugate points.
#[derive(Clone, Debug)]
pub struct SingularPoint {
    pub field: NumberField,
    /// Projective coordinates with the first nonzero entry equal to 1.
    pub coords: Vec<NfElem>,
    pub classification: Classification,
}

impl SingularPoint {
    /// Number of geometric points in the orbit.
    pub fn degree(&self) -> usize {
        self.field.degree()
    }

    /// Whether `c` and its three partials vanish exactly at the point.
    pub fn verify(&self, c: &Form) -> bool {
        vanishes_with_partials(c, &self.field, &self.coords)
    }

    /// The point pushed into the ambient `λ`-space, first nonzero entry 1.
    pub fn ambient_lambda(&self, plane: &PlaneData) -> Vec<NfElem> {
        let k = &self.field;
        normalize(k, plane.to_ambient(k, &self.coords, |q| k.from_rational(q)))
    }
}

fn normalize(k: &NumberField, mut v: Vec<NfElem>) -> Vec<NfElem> {
    if let Some(lead) = v.iter().find(|x| !k.is_zero(x)).cloned() {
        let inv = k.inv(&lead).unwrap();
        for x in &mut v {
            *x = k.mul(x, &inv);
        }
    }
    v
}

fn lift(c: &Form, k: &NumberField) -> MPoly<NumberField> {
    c.map_ring(k, |q| k.from_rational(q))
}

fn vanishes_with_partials(c: &Form, k: &NumberField, pt: &[NfElem]) -> bool {
    let ck = lift(c, k);
    k.is_zero(&ck.eval(pt)) && (0..3).all(|i| k.is_zero(&ck.derivative(i).eval(pt)))
}

fn check_curve(c: &Form) -> Result<u32, PencilError> {
    if c.nvars() != 3 {
        return Err(PencilError::WrongShape(format!(
            "plane curve needs 3 variables, got {}",
            c.nvars()
        )));
    }
    if c.is_zero() {
        return Err(PencilError::IdenticallyZero);
    }
    if !c.is_homogeneous() {
        return Err(PencilError::WrongShape("curve equation is not homogeneous".into()));
    }
    Ok(c.total_degree().unwrap())
}

fn to_upoly(p: &MPoly<Rationals>) -> UPoly<Rationals> {
    let deg = p.total_degree().unwrap_or(0) as usize;
    let mut c = vec![rat(0); deg + 1];
    for (e, v) in p.terms() {
        c[e[0] as usize] = v.clone();
    }
    UPoly::new(&Rationals, c)
}

/// A squarefree restriction to some line certifies that `c` is reduced.
fn is_reduced(c: &Form, d: u32) -> bool {
    for k in 1..=24i64 {
        let a = [rat(1), rat(k), rat(k * k + 1)];
        let b = [rat(k + 2), rat(1), rat(-k)];
        let images: Vec<MPoly<Rationals>> = (0..3)
            .map(|i| {
                MPoly::var(&Rationals, 1, 0)
                    .scale(&a[i])
                    .add(&MPoly::constant(&Rationals, 1, b[i].clone()))
            })
            .collect();
        let u = to_upoly(&c.substitute(&images));
        if u.degree() == Some(d as usize) && u.is_squarefree() {
            return true;
        }
    }
    false
}

fn eval_at_generator(k: &NumberField, coeffs: &[UPoly<Rationals>]) -> UPoly<NumberField> {
    UPoly::new(k, coeffs.iter().map(|p| k.reduce(p)).collect())
}

const SHEARS: [i64; 13] = [0, 1, -1, 2, -2, 3, -3, 5, -5, 7, -7, 11, -11];

/// Affine singular points in the chart `u = 1`, as `[x : y : 1]`.
fn affine_points(c: &Form) -> Result<Vec<(NumberField, Vec<NfElem>)>, PencilError> {
    let f = c.substitute(&[
        MPoly::var(&Rationals, 2, 0),
        MPoly::var(&Rationals, 2, 1),
        MPoly::one(&Rationals, 2),
    ]);
    if f.total_degree().unwrap_or(0) == 0 {
        return Ok(vec![]);
    }
    'shear: for &shear in &SHEARS {
        // x = x' - shear·y
        let g = f.substitute(&[
            MPoly::var(&Rationals, 2, 0).sub(&MPoly::var(&Rationals, 2, 1).scale(&rat(shear))),
            MPoly::var(&Rationals, 2, 1),
        ]);
        let gc = coefficients_in(&g, 1);
        if gc.last().and_then(UPoly::degree) != Some(0) {
            continue;
        }
        let gx = g.derivative(0);
        let gy = g.derivative(1);
        let r2 = resultant(&g, &gy, 1);
        if r2.is_zero() {
            continue;
        }
        let r1 = if gx.is_zero() {
            UPoly::zero(&Rationals)
        } else {
            resultant(&g, &gx, 1)
        };
        let r = if r1.is_zero() { r2 } else { r1.gcd(&r2) };
        let mut out = Vec::new();
        for (m, _) in factor_rational(&r) {
            let k = NumberField::new(&m).expect("factor is irreducible");
            let gk = eval_at_generator(&k, &gc);
            let gxk = eval_at_generator(&k, &coefficients_in(&gx, 1));
            let gyk = eval_at_generator(&k, &coefficients_in(&gy, 1));
            let h = gk.gcd(&gxk).gcd(&gyk);
            if h.degree().unwrap_or(0) == 0 {
                continue;
            }
            let h = h.div_exact(&h.gcd(&h.derivative())).unwrap();
            if h.degree() != Some(1) {
                continue 'shear;
            }
            let y0 = k.neg(&h.coeff(0));
            let x0 = k.sub(&k.generator(), &k.mul(&k.from_int(shear), &y0));
            out.push((k.clone(), vec![x0, y0, k.one()]));
        }
        return Ok(out);
    }
    Err(PencilError::ResultantDegenerate)
}

/// Singular points on `u = 0`.
fn points_at_infinity(c: &Form) -> Result<Vec<(NumberField, Vec<NfElem>)>, PencilError> {
    let on_line = |p: &Form| -> UPoly<Rationals> {
        to_upoly(&p.substitute(&[
            MPoly::var(&Rationals, 1, 0),
            MPoly::one(&Rationals, 1),
            MPoly::zero(&Rationals, 1),
        ]))
    };
    let partials: Vec<UPoly<Rationals>> = (0..3).map(|i| on_line(&c.derivative(i))).collect();
    let g = partials.iter().fold(UPoly::zero(&Rationals), |acc, p| acc.gcd(p));
    if g.is_zero() {
        return Err(PencilError::NonReducedCurve);
    }
    let mut out = Vec::new();
    for (m, _) in factor_rational(&g) {
        let k = NumberField::new(&m).expect("factor is irreducible");
        out.push((k.clone(), vec![k.generator(), k.one(), k.zero()]));
    }
    let q = NumberField::rationals();
    let e1 = vec![q.one(), q.zero(), q.zero()];
    if (0..3).all(|i| c.derivative(i).eval(&[rat(1), rat(0), rat(0)]) == rat(0)) {
        out.push((q, e1));
    }
    Ok(out)
}

/// All singular points of a reduced plane curve `c(s, t, u)`.
pub fn singular_points(c: &Form) -> Result<Vec<SingularPoint>, PencilError> {
    singular_points_with_order(c, [0, 1, 2])
}

/// As [`singular_points`], dehomogenizing first at `order[2]`, then at
/// `order[1]`, and eliminating `order[1]` in the affine chart.
pub fn singular_points_with_order(c: &Form, order: [usize; 3]) -> Result<Vec<SingularPoint>, PencilError> {
    let d = check_curve(c)?;
    let mut sorted = order;
    sorted.sort_unstable();
    assert_eq!(sorted, [0, 1, 2], "order must be a permutation");
    if !is_reduced(c, d) {
        return Err(PencilError::NonReducedCurve);
    }
    // Variable order[i] of c becomes variable i of cp.
    let mut perm = [0; 3];
    for (i, &o) in order.iter().enumerate() {
        perm[o] = i;
    }
    let cp = c.permute_vars(&perm);
    let mut raw = affine_points(&cp)?;
    raw.extend(points_at_infinity(&cp)?);
    let mut out = Vec::with_capacity(raw.len());
    for (k, pt) in raw {
        let coords: Vec<NfElem> = (0..3).map(|v| pt[perm[v]].clone()).collect();
        let coords = normalize(&k, coords);
        if !vanishes_with_partials(c, &k, &coords) {
            unreachable!("candidate failed exact verification");
        }
        let classification = classify(c, &k, &coords)?;
        out.push(SingularPoint {
            field: k,
            coords,
            classification,
        });
    }
    Ok(out)
}

/// Multiplicity and node test at a point.
pub fn classify_singularity(c: &Form, pt: &SingularPoint) -> Result<Classification, PencilError> {
    check_curve(c)?;
    if !pt.verify(c) {
        return Err(PencilError::NotSingular);
    }
    classify(c, &pt.field, &pt.coords)
}

fn classify(c: &Form, k: &NumberField, coords: &[NfElem]) -> Result<Classification, PencilError> {
    let chart = coords
        .iter()
        .position(|x| !k.is_zero(x))
        .ok_or(PencilError::NotSingular)?;
    let lead_inv = k.inv(&coords[chart]).unwrap();
    let mut images = Vec::with_capacity(3);
    let mut next = 0;
    for (i, a) in coords.iter().enumerate() {
        if i == chart {
            images.push(MPoly::one(k, 2));
        } else {
            let shifted = MPoly::var(k, 2, next).add(&MPoly::constant(k, 2, k.mul(a, &lead_inv)));
            images.push(shifted);
            next += 1;
        }
    }
    let local = lift(c, k).substitute(&images);
    let multiplicity = local.terms().map(|(e, _)| e[0] + e[1]).min().unwrap_or(0);
    if multiplicity < 2 {
        return Err(PencilError::NotSingular);
    }
    let node = multiplicity == 2 && {
        let a = local.coeff(&[2, 0]);
        let b = local.coeff(&[1, 1]);
        let cc = local.coeff(&[0, 2]);
        let disc = k.sub(&k.mul(&b, &b), &k.mul(&k.from_int(4), &k.mul(&a, &cc)));
        !k.is_zero(&disc)
    };
    Ok(Classification { multiplicity, node })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn var(i: usize) -> Form {
        MPoly::var(&Rationals, 3, i)
    }

    fn rational_point(v: &[BigRational]) -> (NumberField, Vec<NfElem>) {
        let q = NumberField::rationals();
        let coords = v.iter().map(|x| q.from_rational(x)).collect();
        (q.clone(), normalize(&q, coords))
    }

    fn as_rational_point(p: &SingularPoint) -> Vec<BigRational> {
        p.coords.iter().map(|x| p.field.as_rational(x).unwrap()).collect()
    }

    #[test]
    fn fermat_quintic_is_smooth() {
        let c = var(0).pow(5).add(&var(1).pow(5)).add(&var(2).pow(5));
        assert!(singular_points(&c).unwrap().is_empty());
    }

    #[test]
    fn cusp_like_quintic() {
        // t²u³ − s⁵
        let c = var(1).pow(2).mul(&var(2).pow(3)).sub(&var(0).pow(5));
        let pts = singular_points(&c).unwrap();
        let mut got: Vec<(Vec<BigRational>, Classification)> =
            pts.iter().map(|p| (as_rational_point(p), p.classification)).collect();
        got.sort_by(|a, b| a.0.cmp(&b.0));
        assert_eq!(
            got,
            vec![
                (
                    vec![rat(0), rat(0), rat(1)],
                    Classification {
                        multiplicity: 2,
                        node: false
                    }
                ),
                (
                    vec![rat(0), rat(1), rat(0)],
                    Classification {
                        multiplicity: 3,
                        node: false
                    }
                ),
            ]
        );
    }

    #[test]
    fn nodal_cubic() {
        // t²u − s²(s + u): node at [0:0:1].
        let c = var(1).pow(2).mul(&var(2)).sub(&var(0).pow(2).mul(&var(0).add(&var(2))));
        let pts = singular_points(&c).unwrap();
        assert_eq!(pts.len(), 1);
        assert_eq!(as_rational_point(&pts[0]), vec![rat(0), rat(0), rat(1)]);
        assert_eq!(
            pts[0].classification,
            Classification {
                multiplicity: 2,
                node: true
            }
        );
    }

    #[test]
    fn non_reduced_rejected() {
        let l = var(0).add(&var(1));
        let c = l.pow(2).mul(&var(2));
        assert!(matches!(singular_points(&c), Err(PencilError::NonReducedCurve)));
    }

    #[test]
    fn smooth_point_is_not_singular() {
        let c = var(0).pow(5).add(&var(1).pow(5)).add(&var(2).pow(5));
        let (field, coords) = rational_point(&[rat(1), rat(-1), rat(0)]);
        let pt = SingularPoint {
            field,
            coords,
            classification: Classification {
                multiplicity: 0,
                node: false,
            },
        };
        assert_eq!(classify_singularity(&c, &pt), Err(PencilError::NotSingular));
    }

    #[test]
    fn irrational_nodes_of_line_arrangement() {
        // (s² − 2u²)·t: the two lines s = ±√2 u meet t = 0 at a conjugate pair.
        let c = var(0).pow(2).sub(&var(2).pow(2).scale(&rat(2))).mul(&var(1));
        let pts = singular_points(&c).unwrap();
        let total: usize = pts.iter().map(SingularPoint::degree).sum();
        // plus the common point [0:1:0] of the two parallel lines
        assert_eq!(total, 3);
        assert!(pts.iter().all(|p| p.classification.node));
        assert!(pts.iter().any(|p| p.degree() == 2));
    }
}
