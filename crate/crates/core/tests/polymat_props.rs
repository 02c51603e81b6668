use bsynth_core::polymat::{
    col_gcd_bezout, hermite_form, is_unimodular, smith_form, solve_left_division, HermiteForm,
};
use bsynth_core::{Poly, PolyMatrix};
use bsynth_testkit::Gen;
use proptest::prelude::*;

fn assert_hermite_shape(hf: &HermiteForm) {
    let h = &hf.h;
    let rank = hf.pivots.len();
    for i in rank..h.rows() {
        assert!(h.is_zero_row(i), "zero rows must sit at the bottom");
    }
    for (k, &j) in hf.pivots.iter().enumerate() {
        if k > 0 {
            assert!(j > hf.pivots[k - 1], "pivots move right");
        }
        let piv = &h[(k, j)];
        assert!(piv.monic() == *piv, "pivot must be monic");
        for jj in 0..j {
            assert!(h[(k, jj)].is_zero(), "entries left of a pivot vanish");
        }
        for i in k + 1..h.rows() {
            assert!(h[(i, j)].is_zero(), "entries below a pivot vanish");
        }
        for i in 0..k {
            let above = &h[(i, j)];
            assert!(
                above.is_zero() || above.degree() < piv.degree(),
                "entries above a pivot are reduced"
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hermite_reconstructs(seed in any::<u64>()) {
        let mut g = Gen::new(seed);
        let (r, c) = (g.range(0, 4), g.range(0, 4));
        let m = g.matrix(r, c, 3);
        let hf = hermite_form(&m).unwrap();
        prop_assert_eq!(&hf.h, &(&hf.u * &m));
        prop_assert!(is_unimodular(&hf.u));
        prop_assert_eq!(hf.rank(), m.rank());
        prop_assert!(hf.basis().is_full_row_rank());
        assert_hermite_shape(&hf);
    }

    #[test]
    fn smith_reconstructs_with_divisibility(seed in any::<u64>()) {
        let mut g = Gen::new(seed);
        let (r, c) = (g.range(0, 4), g.range(0, 4));
        let m = g.matrix(r, c, 3);
        let sf = smith_form(&m).unwrap();
        prop_assert_eq!(&(&(&sf.u * &sf.d) * &sf.v), &m);
        prop_assert!(is_unimodular(&sf.u) && is_unimodular(&sf.v));
        prop_assert!((&sf.u * &sf.u_inv).is_identity());
        prop_assert!((&sf.v * &sf.v_inv).is_identity());
        let f = sf.invariant_factors();
        prop_assert_eq!(f.len(), m.rank());
        for (k, d) in f.iter().enumerate() {
            prop_assert!(d.monic() == *d);
            if k + 1 < f.len() {
                prop_assert!(d.divides(&f[k + 1]));
            }
        }
        for i in 0..sf.d.rows() {
            for j in 0..sf.d.cols() {
                if i != j {
                    prop_assert!(sf.d[(i, j)].is_zero());
                }
            }
        }
    }

    #[test]
    fn rank_is_unimodular_invariant(seed in any::<u64>()) {
        let mut g = Gen::new(seed);
        let (r, c) = (g.range(1, 4), g.range(1, 4));
        let m = g.matrix(r, c, 2);
        let u = g.unimodular(r, 5, 1);
        let v = g.unimodular(c, 5, 1);
        prop_assert_eq!((&(&u * &m) * &v).rank(), m.rank());
    }

    #[test]
    fn gcd_scales(seed in any::<u64>()) {
        let mut g = Gen::new(seed);
        let (a, b, c) = (g.poly(3), g.poly(3), g.nonzero_poly(2));
        let lhs = Poly::gcd(&(&a * &c), &(&b * &c));
        prop_assert_eq!(lhs, &c.monic() * &Poly::gcd(&a, &b));
    }

    #[test]
    fn column_bezout_witness(seed in any::<u64>()) {
        let mut g = Gen::new(seed);
        let n = g.range(1, 4);
        let col: Vec<Poly> = (0..n).map(|_| g.poly(3)).collect();
        let (pi, v) = col_gcd_bezout(&col);
        let mut acc = Poly::zero();
        for (a, b) in v.iter().zip(&col) {
            acc = &acc + &(a * b);
        }
        prop_assert_eq!(&acc, &pi);
        for e in &col {
            prop_assert!(pi.divides(e));
        }
    }

    #[test]
    fn left_division_recovers_products(seed in any::<u64>()) {
        let mut g = Gen::new(seed);
        let (k, r, c) = (g.range(0, 3), g.range(0, 3), g.range(1, 4));
        let a = g.matrix(r, c, 2);
        let x = g.matrix(k, r, 2);
        let b = &x * &a;
        let sol = solve_left_division(&a, &b).unwrap().expect("b is in the row module");
        prop_assert_eq!(&(&sol * &a), &b);
    }
}

#[test]
fn small_examples() {
    let p = |c: &[i64]| Poly::from_ints(c);
    let (g, x, y) = Poly::gcd_bezout(&p(&[0, 1]), &p(&[1, 1]));
    assert!(g.is_one());
    assert_eq!(x, p(&[-1]));
    assert_eq!(y, p(&[1]));
    assert_eq!(Poly::gcd(&p(&[0, -1, 1]), &p(&[-1, 1])), p(&[-1, 1]));

    let m = PolyMatrix::from_int_rows(&[&[&[1], &[-1], &[-1]], &[&[], &[], &[1]]]);
    assert_eq!(m.rank(), 2);
    let ex3 = PolyMatrix::from_int_rows(&[&[&[0, 1], &[0, 1]], &[&[1, 1], &[0, 1]]]);
    assert_eq!(ex3.rank(), 2);
    let sf = smith_form(&ex3).unwrap();
    assert_eq!(sf.invariant_factors(), vec![Poly::one(), Poly::x()]);

    let a = PolyMatrix::from_int_rows(&[&[&[-1, 1]]]);
    let b = PolyMatrix::from_int_rows(&[&[&[0, -1, 1]]]);
    assert_eq!(
        solve_left_division(&a, &b).unwrap(),
        Some(PolyMatrix::from_int_rows(&[&[&[0, 1]]]))
    );
}
