//! Fixture builders for the kernel benchmarks. Sizes scale with a parameter
//! so the benches can sweep dimension.

use enl_core::lie::default_names;
use enl_core::rational::q;
use enl_core::{Cobracket, LieAlgebra, Matrix, Rational};

/// gl(n) on the matrix units `E_ab`, index `a*n + b`.
pub fn gl(n: usize) -> LieAlgebra {
    let idx = |a: usize, b: usize| a * n + b;
    let mut entries = Vec::new();
    for (a, b, c, d) in (0..n.pow(4)).map(|t| (t / n.pow(3), t / n.pow(2) % n, t / n % n, t % n)) {
        let (i, j) = (idx(a, b), idx(c, d));
        if i >= j {
            continue;
        }
        // [E_ab, E_cd] = δ_bc E_ad - δ_da E_cb
        let mut v = vec![q(0); n * n];
        if b == c {
            v[idx(a, d)] += q(1);
        }
        if d == a {
            v[idx(c, b)] -= q(1);
        }
        for (k, x) in v.into_iter().enumerate() {
            if x != q(0) {
                entries.push((i, j, k, x));
            }
        }
    }
    LieAlgebra::from_brackets(default_names(n * n), &entries).unwrap()
}

/// Heisenberg algebra of dimension `2k+1`: `[x_i, y_i] = z`.
pub fn heisenberg(k: usize) -> LieAlgebra {
    let entries: Vec<_> = (0..k).map(|i| (i, k + i, 2 * k, q(1))).collect();
    LieAlgebra::from_brackets(default_names(2 * k + 1), &entries).unwrap()
}

/// Deterministic entries in {-2,...,2}.
fn pattern(i: usize, j: usize, salt: usize) -> Rational {
    q(((i * 7 + j * 13 + salt * 5) % 5) as i64 - 2)
}

pub fn skew_matrix(n: usize) -> Matrix {
    Matrix::from_fn(n, n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Less => pattern(i, j, 1),
        std::cmp::Ordering::Greater => -pattern(j, i, 1),
        std::cmp::Ordering::Equal => q(0),
    })
}

pub fn dense_matrix(n: usize) -> Matrix {
    Matrix::from_fn(n, n, |i, j| pattern(i, j, 3))
}

/// Coboundary of [`skew_matrix`]; a cobracket of the right shape, not
/// necessarily a bialgebra.
pub fn cobracket(g: &LieAlgebra) -> Cobracket {
    enl_core::yang_baxter::cobracket_from_r_unchecked(g, &skew_matrix(g.dim()))
}
