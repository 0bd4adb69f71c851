use proptest::prelude::*;
use symmetroid_core::algebra::factor::factor_rational;
use symmetroid_core::algebra::ring::rat;
use symmetroid_core::algebra::{Field, NfElem, NumberField, Rationals, Ring, UPoly};

fn upoly(c: &[i64]) -> UPoly<Rationals> {
    UPoly::new(&Rationals, c.iter().map(|&x| rat(x)).collect())
}

fn element(k: &NumberField, c: &[i64]) -> NfElem {
    k.reduce(&upoly(c))
}

fn cubic_field() -> NumberField {
    NumberField::new(&upoly(&[-26, -13, -1, 4])).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn number_field_axioms(a in prop::array::uniform3(-9i64..=9), b in prop::array::uniform3(-9i64..=9), c in prop::array::uniform3(-9i64..=9)) {
        let k = cubic_field();
        let (a, b, c) = (element(&k, &a), element(&k, &b), element(&k, &c));
        prop_assert_eq!(k.mul(&k.mul(&a, &b), &c), k.mul(&a, &k.mul(&b, &c)));
        prop_assert_eq!(k.mul(&a, &k.add(&b, &c)), k.add(&k.mul(&a, &b), &k.mul(&a, &c)));
        if !k.is_zero(&a) {
            prop_assert_eq!(k.mul(&a, &k.inv(&a).unwrap()), k.one());
        }
    }

    #[test]
    fn factorization_reconstructs(roots in prop::collection::vec(-6i64..=6, 1..4), quad in 1i64..=7, lead in 1i64..=5) {
        let mut f = upoly(&[quad, 0, 1]).scale(&rat(lead));
        for r in &roots {
            f = f.mul(&upoly(&[-r, 1]));
        }
        let factors = factor_rational(&f);
        let back = factors.iter().fold(UPoly::one(&Rationals), |acc, (g, e)| acc.mul(&g.pow(*e)));
        prop_assert_eq!(back, f.monic());
        let degree_one: u32 = factors.iter().filter(|(g, _)| g.degree() == Some(1)).map(|(_, e)| e).sum();
        prop_assert_eq!(degree_one as usize, roots.len());
    }
}
