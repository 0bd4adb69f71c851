//! Resultants of bivariate polynomials over ℚ.

use num_rational::BigRational;

use super::linalg::determinant;
use super::mpoly::MPoly;
use super::ring::{rat, Rationals, Ring};
use super::upoly::UPoly;

/// Coefficients of `f` as a polynomial in variable `var`, each a univariate
/// polynomial in the other variable. `f` must have exactly two variables.
pub fn coefficients_in(f: &MPoly<Rationals>, var: usize) -> Vec<UPoly<Rationals>> {
    assert_eq!(f.nvars(), 2);
    let other = 1 - var;
    let deg = f.degree_in(var).unwrap_or(0) as usize;
    let mut raw = vec![Vec::<BigRational>::new(); deg + 1];
    for (e, c) in f.terms() {
        let slot = &mut raw[e[var] as usize];
        let k = e[other] as usize;
        if slot.len() <= k {
            slot.resize(k + 1, rat(0));
        }
        slot[k] = c.clone();
    }
    raw.into_iter().map(|c| UPoly::new(&Rationals, c)).collect()
}

fn sylvester_det(a: &[BigRational], b: &[BigRational]) -> BigRational {
    // a, b: coefficients in the eliminated variable, highest degree first.
    let m = a.len() - 1;
    let n = b.len() - 1;
    let size = m + n;
    if size == 0 {
        return rat(1);
    }
    let mut mat = vec![vec![rat(0); size]; size];
    for i in 0..n {
        for (j, c) in a.iter().enumerate() {
            mat[i][i + j] = c.clone();
        }
    }
    for i in 0..m {
        for (j, c) in b.iter().enumerate() {
            mat[n + i][i + j] = c.clone();
        }
    }
    determinant(&Rationals, &mat)
}

/// `Res_var(f, g)` as a polynomial in the remaining variable, computed by
/// evaluating the Sylvester determinant at enough integer points and
/// interpolating.
pub fn resultant(f: &MPoly<Rationals>, g: &MPoly<Rationals>, var: usize) -> UPoly<Rationals> {
    if f.is_zero() || g.is_zero() {
        return UPoly::zero(&Rationals);
    }
    let fa = coefficients_in(f, var);
    let ga = coefficients_in(g, var);
    let m = fa.len() - 1;
    let n = ga.len() - 1;
    let max_deg = |cs: &[UPoly<Rationals>]| cs.iter().filter_map(UPoly::degree).max().unwrap_or(0);
    let bound = n * max_deg(&fa) + m * max_deg(&ga);
    let xs: Vec<BigRational> = (0..=bound as i64).map(rat).collect();
    let ys: Vec<BigRational> = xs
        .iter()
        .map(|x| {
            let a: Vec<BigRational> = fa.iter().rev().map(|p| p.eval(x)).collect();
            let b: Vec<BigRational> = ga.iter().rev().map(|p| p.eval(x)).collect();
            sylvester_det(&a, &b)
        })
        .collect();
    interpolate(&xs, &ys)
}

/// Newton interpolation through distinct nodes.
pub fn interpolate(xs: &[BigRational], ys: &[BigRational]) -> UPoly<Rationals> {
    let n = xs.len();
    let mut div = ys.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            div[i] = (&div[i] - &div[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    let mut acc = UPoly::zero(&Rationals);
    for i in (0..n).rev() {
        let factor = UPoly::new(&Rationals, vec![Rationals.neg(&xs[i]), rat(1)]);
        acc = acc.mul(&factor).add(&UPoly::constant(&Rationals, div[i].clone()));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(i: usize) -> MPoly<Rationals> {
        MPoly::var(&Rationals, 2, i)
    }

    #[test]
    fn circle_and_line() {
        // x^2 + y^2 - 1 and y - x: eliminating y gives 2x^2 - 1.
        let f = v(0).pow(2).add(&v(1).pow(2)).sub(&MPoly::one(&Rationals, 2));
        let g = v(1).sub(&v(0));
        let r = resultant(&f, &g, 1);
        assert_eq!(r, UPoly::new(&Rationals, vec![rat(-1), rat(0), rat(2)]));
    }

    #[test]
    fn common_component_gives_zero() {
        let h = v(0).add(&v(1));
        let f = h.mul(&v(0));
        let g = h.mul(&v(1).add(&MPoly::one(&Rationals, 2)));
        assert!(resultant(&f, &g, 1).is_zero());
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let p = UPoly::new(&Rationals, vec![rat(3), rat(-1), rat(0), rat(5)]);
        let xs: Vec<_> = (0..4).map(rat).collect();
        let ys: Vec<_> = xs.iter().map(|x| p.eval(x)).collect();
        assert_eq!(interpolate(&xs, &ys), p);
    }
}
