use enl_core::catalogue::*;
use enl_core::doubles::{check_bialgebra, Bialgebra, BialgebraLevel};
use enl_core::io::bundle::{raw_lie, raw_operator};
use enl_core::io::{parse_bundle, serialize_bundle, RawBundle};
use enl_core::operators::{
    centroid_basis, check_averaging, check_equivariant, deformed_bracket, nijenhuis_torsion, DeformMode,
};
use enl_core::prelie::{check_pre_enl, prelie_strong_basis, subadjacent_enl, PreEnlMode, PreLieAlgebra};
use enl_core::rational::frac;
use enl_core::representations::Representation;
use enl_core::yang_baxter::{
    check_en_rmatrix, check_relative_rb, cobracket_from_r, lift_r_from_relrb, r_plus, RelLevel, RelativeRb,
};
use enl_core::{check_lie, LieAlgebra, Matrix, Rational};
use proptest::prelude::*;

fn small_q() -> impl Strategy<Value = Rational> {
    prop_oneof![
        2 => Just(frac(0, 1)),
        3 => (-3i64..=3).prop_map(|n| frac(n, 1)),
        1 => (-3i64..=3, 1i64..=3).prop_map(|(n, d)| frac(n, d)),
    ]
}

fn coeffs(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(small_q(), n)
}

fn combination(basis: &[Matrix], c: &[Rational]) -> Matrix {
    let n = basis[0].rows();
    basis
        .iter()
        .zip(c)
        .fold(Matrix::zeros(n, n), |acc, (b, x)| &acc + &b.scale(x))
}

fn small_algebra() -> impl Strategy<Value = LieAlgebra> {
    prop::sample::select(vec![
        aff1(),
        heisenberg(),
        sl2(),
        so3(),
        LieAlgebra::abelian(2),
        LieAlgebra::abelian(3),
    ])
}

/// An algebra together with a random element of its centroid.
fn algebra_with_centroid() -> impl Strategy<Value = (LieAlgebra, Matrix)> {
    small_algebra().prop_flat_map(|g| {
        let basis = centroid_basis(&g);
        coeffs(basis.len()).prop_map(move |c| (g.clone(), combination(&basis, &c)))
    })
}

fn skew(n: usize, c: &[Rational]) -> Matrix {
    let mut r = Matrix::zeros(n, n);
    let mut it = c.iter();
    for i in 0..n {
        for j in i + 1..n {
            let v = it.next().unwrap().clone();
            r[(j, i)] = -v.clone();
            r[(i, j)] = v;
        }
    }
    r
}

fn prelie_with_strong() -> impl Strategy<Value = (PreLieAlgebra, Matrix)> {
    prop::sample::select(vec![prelie_dim2(), PreLieAlgebra::zero(2)]).prop_flat_map(|p| {
        let basis = prelie_strong_basis(&p);
        coeffs(basis.len()).prop_map(move |c| (p.clone(), combination(&basis, &c)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn centroid_elements_are_nijenhuis_and_averaging((g, e) in algebra_with_centroid()) {
        prop_assert!(check_equivariant(&g, &e).unwrap().is_pass());
        prop_assert!(nijenhuis_torsion(&g, &e).unwrap().is_zero());
        prop_assert!(check_averaging(&g, &e).unwrap().is_pass());
    }

    #[test]
    fn equivariant_deformation_is_lie((g, e) in algebra_with_centroid()) {
        let d = deformed_bracket(&g, &e, DeformMode::Equivariant).unwrap();
        prop_assert!(check_lie(&d).is_pass());
        let general = deformed_bracket(&g, &e, DeformMode::General).unwrap();
        prop_assert!(check_lie(&general).is_pass());
    }

    #[test]
    fn strong_pre_enl_implies_weak((p, e) in prelie_with_strong()) {
        prop_assert!(check_pre_enl(&p, &e, PreEnlMode::Strong).unwrap().is_pass());
        prop_assert!(check_pre_enl(&p, &e, PreEnlMode::Weak).unwrap().is_pass());
    }

    #[test]
    fn scalar_relative_rb_lifts((p, e) in prelie_with_strong(), k in small_q()) {
        let (g, l, v) = subadjacent_enl(&p, &e).unwrap();
        prop_assert!(v.is_pass());
        let rb = RelativeRb { rep: l, k: Matrix::scalar(2, k) };
        prop_assert!(check_relative_rb(&g, &rb, &e, RelLevel::En).unwrap().is_pass());
        let lift = lift_r_from_relrb(&g, &rb, &e).unwrap();
        prop_assert!(lift.verdict.is_pass(), "{}", lift.verdict);
    }

    #[test]
    fn en_rmatrix_iff_relative_rb((g, e) in algebra_with_centroid(), c in coeffs(3)) {
        let n = g.dim();
        let r = skew(n, &c[..n * (n - 1) / 2]);
        let en = check_en_rmatrix(&g, &r, &e).unwrap().is_pass();
        let rep = Representation::coadjoint(&g).with_t(e.transpose()).unwrap();
        let rb = RelativeRb { rep, k: r_plus(&r) };
        let rel = check_relative_rb(&g, &rb, &e, RelLevel::En).unwrap().is_pass();
        prop_assert_eq!(en, rel);
        if en {
            let delta = cobracket_from_r(&g, &r).unwrap();
            let b = Bialgebra::new(g.clone(), delta, Some(e.clone())).unwrap();
            prop_assert!(check_bialgebra(&b, BialgebraLevel::Enl).unwrap().is_pass());
        }
    }

    #[test]
    fn bialgebra_levels_are_nested(c in coeffs(16), ex in any::<bool>()) {
        let e = Matrix::from_fn(4, 4, |i, j| c[4 * i + j].clone());
        let delta = if ex { g4_nl_cobracket() } else { g4_enl_cobracket() };
        let b = Bialgebra::new(g4(), delta, Some(e)).unwrap();
        let enl = check_bialgebra(&b, BialgebraLevel::Enl).unwrap().is_pass();
        let nl = check_bialgebra(&b, BialgebraLevel::Nl).unwrap().is_pass();
        let lie = check_bialgebra(&b, BialgebraLevel::Lie).unwrap().is_pass();
        prop_assert!(lie);
        prop_assert!(!enl || nl);
    }

    #[test]
    fn bundle_round_trip((g, e) in algebra_with_centroid()) {
        let mut raw = RawBundle::default();
        raw.lie_algebras.insert("g".into(), raw_lie(&g));
        raw.operators.insert("E".into(), raw_operator(Some("g"), &e));
        let text = serialize_bundle(&raw);
        let back: RawBundle = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(&back, &raw);
        let bundle = parse_bundle(&text).unwrap();
        prop_assert_eq!(&bundle.lie_algebras["g"], &g);
        prop_assert_eq!(bundle.operator("E").unwrap(), &e);
    }

    #[test]
    fn inverse_and_determinant(c in coeffs(9), d in coeffs(9)) {
        let a = Matrix::from_fn(3, 3, |i, j| c[3 * i + j].clone());
        let b = Matrix::from_fn(3, 3, |i, j| d[3 * i + j].clone());
        let ab = a.try_mul(&b).unwrap();
        prop_assert_eq!(ab.determinant().unwrap(), a.determinant().unwrap() * b.determinant().unwrap());
        if let Ok(inv) = a.inverse() {
            prop_assert_eq!(a.try_mul(&inv).unwrap(), Matrix::identity(3));
        }
    }
}
