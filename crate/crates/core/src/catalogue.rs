//! Small named algebras and operators used by tests, benches and bundles.

use crate::lie::{default_names, direct_sum, BilinearForm, Cobracket, LieAlgebra};
use crate::matrix::Matrix;
use crate::prelie::PreLieAlgebra;
use crate::rational::{frac, q};

fn names(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

/// `[X1, X2] = X2`.
pub fn aff1() -> LieAlgebra {
    LieAlgebra::from_brackets(default_names(2), &[(0, 1, 1, q(1))]).unwrap()
}

/// `aff(1) ⊕ aff(1)`: `[X1, X2] = X2`, `[X3, X4] = X4`.
pub fn g4() -> LieAlgebra {
    LieAlgebra::from_brackets(default_names(4), &[(0, 1, 1, q(1)), (2, 3, 3, q(1))]).unwrap()
}

/// `[X1, X2] = X3`.
pub fn heisenberg() -> LieAlgebra {
    LieAlgebra::from_brackets(default_names(3), &[(0, 1, 2, q(1))]).unwrap()
}

/// Basis `(h, e, f)`: `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`.
pub fn sl2() -> LieAlgebra {
    LieAlgebra::from_brackets(
        names(&["h", "e", "f"]),
        &[(0, 1, 1, q(2)), (0, 2, 2, q(-2)), (1, 2, 0, q(1))],
    )
    .unwrap()
}

/// `[X1,X2] = X3`, `[X2,X3] = X1`, `[X3,X1] = X2`.
pub fn so3() -> LieAlgebra {
    LieAlgebra::from_brackets(default_names(3), &[(0, 1, 2, q(1)), (1, 2, 0, q(1)), (0, 2, 1, q(-1))]).unwrap()
}

/// `sl2 ⊕ ℚ`, basis `(h, e, f, z)`.
pub fn gl2() -> LieAlgebra {
    direct_sum(&sl2(), &LieAlgebra::abelian(1).with_names(names(&["z"])).unwrap())
}

/// `heisenberg ⊕ aff(1)`, dimension 5.
pub fn heisenberg_aff1() -> LieAlgebra {
    let s = direct_sum(&heisenberg(), &aff1());
    let n = s.dim();
    s.with_names(default_names(n)).unwrap()
}

/// `sl2 ⊕ sl2`, dimension 6.
pub fn sl2_sl2() -> LieAlgebra {
    direct_sum(&sl2(), &sl2())
}

/// Algebras of dimension ≤ 6 used for catalogue-wide property sweeps.
pub fn catalogue() -> Vec<(&'static str, LieAlgebra)> {
    vec![
        ("abelian3", LieAlgebra::abelian(3)),
        ("aff1", aff1()),
        ("heisenberg", heisenberg()),
        ("sl2", sl2()),
        ("so3", so3()),
        ("g4", g4()),
        ("gl2", gl2()),
        ("heisenberg_aff1", heisenberg_aff1()),
        ("sl2_sl2", sl2_sl2()),
    ]
}

/// `S(h,h) = 2`, `S(e,f) = S(f,e) = 1`.
pub fn sl2_form() -> BilinearForm {
    BilinearForm::new(
        Matrix::from_rows(vec![
            vec![q(2), q(0), q(0)],
            vec![q(0), q(0), q(1)],
            vec![q(0), q(1), q(0)],
        ])
        .unwrap(),
    )
}

/// Weight-1 Rota–Baxter operator on sl2: `h ↦ -h/2`, `e ↦ 0`, `f ↦ -f`.
pub fn sl2_rb() -> Matrix {
    Matrix::diagonal(&[frac(-1, 2), q(0), q(-1)])
}

/// `X1 ↦ X2`, `X2 ↦ 0` on a 2-dimensional space.
pub fn n0() -> Matrix {
    Matrix::from_rows(vec![vec![q(0), q(0)], vec![q(1), q(0)]]).unwrap()
}

/// `Δ(X3) = Δ(X4) = X3 ∧ X4` on g4.
pub fn g4_nl_cobracket() -> Cobracket {
    Cobracket::from_entries(4, &[(2, 2, 3, q(1)), (3, 2, 3, q(1))]).unwrap()
}

/// `X1 ↦ X1`, `X2 ↦ X2`, `X3 ↦ X4`, `X4 ↦ 0`.
pub fn g4_nl_operator() -> Matrix {
    let mut m = Matrix::zeros(4, 4);
    m[(0, 0)] = q(1);
    m[(1, 1)] = q(1);
    m[(3, 2)] = q(1);
    m
}

/// `Δ(X2) = 2 X1 ∧ X2`, `Δ(X3) = X3 ∧ X4` on g4.
pub fn g4_enl_cobracket() -> Cobracket {
    Cobracket::from_entries(4, &[(1, 0, 1, q(2)), (2, 2, 3, q(1))]).unwrap()
}

/// `diag(1, 1, 0, 0)`.
pub fn g4_enl_operator() -> Matrix {
    Matrix::diagonal(&[q(1), q(1), q(0), q(0)])
}

/// The 2-dimensional pre-Lie algebra `{X1, X2} = X2`.
pub fn prelie_dim2() -> PreLieAlgebra {
    PreLieAlgebra::from_products(default_names(2), &[(0, 1, 1, q(1))]).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::check_lie;

    #[test]
    fn catalogue_is_lie() {
        for (name, g) in catalogue() {
            assert!(check_lie(&g).is_pass(), "{name}");
            assert!(g.dim() <= 6);
        }
    }
}
