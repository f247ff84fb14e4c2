//! Naive nested-loop oracles and seeded random generators shared by the
//! integration suites. The oracles work from the defining formulas on plain
//! vectors and never call the library's contraction code.
#![allow(dead_code, clippy::needless_range_loop)]

use enl_core::rational::{frac, q};
use enl_core::{Cobracket, LieAlgebra, Matrix, Rational, Tensor3};
use num_traits::Zero;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type Vector = Vec<Rational>;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Mostly small integers, sometimes a fraction, often zero.
pub fn small_rational(r: &mut ChaCha8Rng) -> Rational {
    match r.gen_range(0..10) {
        0..=3 => q(0),
        4..=7 => q(r.gen_range(-3..=3)),
        _ => frac(r.gen_range(-3..=3), r.gen_range(1..=3)),
    }
}

pub fn random_matrix(r: &mut ChaCha8Rng, rows: usize, cols: usize) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| small_rational(r))
}

/// Antisymmetric in the first two slots; Jacobi not enforced.
pub fn random_bracket(r: &mut ChaCha8Rng, n: usize) -> LieAlgebra {
    let mut c = Tensor3::cube(n);
    for i in 0..n {
        for j in i + 1..n {
            for k in 0..n {
                let v = small_rational(r);
                c[(j, i, k)] = -v.clone();
                c[(i, j, k)] = v;
            }
        }
    }
    LieAlgebra::new(enl_core::lie::default_names(n), c).unwrap()
}

/// Coantisymmetric in the last two slots; co-Jacobi not enforced.
pub fn random_cobracket(r: &mut ChaCha8Rng, n: usize) -> Cobracket {
    let mut d = Tensor3::cube(n);
    for k in 0..n {
        for i in 0..n {
            for j in i + 1..n {
                let v = small_rational(r);
                d[(k, j, i)] = -v.clone();
                d[(k, i, j)] = v;
            }
        }
    }
    Cobracket::new(d).unwrap()
}

fn zeros(n: usize) -> Vector {
    vec![Rational::zero(); n]
}

fn basis(n: usize, i: usize) -> Vector {
    let mut v = zeros(n);
    v[i] = q(1);
    v
}

fn apply(m: &Matrix, x: &[Rational]) -> Vector {
    (0..m.rows())
        .map(|i| (0..m.cols()).fold(Rational::zero(), |acc, j| acc + &m[(i, j)] * &x[j]))
        .collect()
}

fn axpy(acc: &mut [Rational], s: &Rational, x: &[Rational]) {
    for (a, b) in acc.iter_mut().zip(x) {
        *a += s * b;
    }
}

/// `[x, y]` straight from the structure constants.
pub fn bracket(c: &Tensor3, x: &[Rational], y: &[Rational]) -> Vector {
    let n = x.len();
    let mut out = zeros(n);
    for i in 0..n {
        for j in 0..n {
            let s = &x[i] * &y[j];
            if s.is_zero() {
                continue;
            }
            for (k, o) in out.iter_mut().enumerate() {
                *o += &s * &c[(i, j, k)];
            }
        }
    }
    out
}

/// `⟦r,r⟧` by expanding `r = Σ r^{ij} e_i⊗e_j` into elementary tensors.
pub fn schouten(c: &Tensor3, r: &Matrix) -> Vec<Vec<Vec<Rational>>> {
    let n = r.rows();
    let mut out = vec![vec![zeros(n); n]; n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let w = &r[(i, j)] * &r[(k, l)];
                    if w.is_zero() {
                        continue;
                    }
                    // [r12, r13] = Σ [e_i, e_k] ⊗ e_j ⊗ e_l
                    let b = bracket(c, &basis(n, i), &basis(n, k));
                    for a in 0..n {
                        out[a][j][l] += &w * &b[a];
                    }
                    // [r12, r23] = Σ e_i ⊗ [e_j, e_k] ⊗ e_l
                    let b = bracket(c, &basis(n, j), &basis(n, k));
                    for m in 0..n {
                        out[i][m][l] += &w * &b[m];
                    }
                    // [r13, r23] = Σ e_i ⊗ e_k ⊗ [e_j, e_l]
                    let b = bracket(c, &basis(n, j), &basis(n, l));
                    for m in 0..n {
                        out[i][k][m] += &w * &b[m];
                    }
                }
            }
        }
    }
    out
}

/// `T(e_i, e_j)` as vectors.
pub fn torsion(c: &Tensor3, nop: &Matrix) -> Vec<Vec<Vector>> {
    let n = nop.rows();
    let mut out = vec![vec![zeros(n); n]; n];
    for i in 0..n {
        for j in 0..n {
            let (x, y) = (basis(n, i), basis(n, j));
            let (nx, ny) = (apply(nop, &x), apply(nop, &y));
            let mut inner = bracket(c, &nx, &y);
            axpy(&mut inner, &q(1), &bracket(c, &x, &ny));
            axpy(&mut inner, &q(-1), &apply(nop, &bracket(c, &x, &y)));
            let mut t = bracket(c, &nx, &ny);
            axpy(&mut t, &q(-1), &apply(nop, &inner));
            out[i][j] = t;
        }
    }
    out
}

/// `Δ(x)` as a bilinear array `[a][b]`.
fn delta_of(d: &Tensor3, x: &[Rational]) -> Vec<Vector> {
    let n = x.len();
    let mut out = vec![zeros(n); n];
    for (k, xk) in x.iter().enumerate() {
        for a in 0..n {
            for b in 0..n {
                out[a][b] += xk * &d[(k, a, b)];
            }
        }
    }
    out
}

/// `(ad_x ⊗ 1 + 1 ⊗ ad_x) P` for `P = Σ P^{pq} e_p ⊗ e_q`.
fn ad_action(c: &Tensor3, x: &[Rational], p: &[Vector]) -> Vec<Vector> {
    let n = x.len();
    let mut out = vec![zeros(n); n];
    for pi in 0..n {
        for qi in 0..n {
            let w = &p[pi][qi];
            if w.is_zero() {
                continue;
            }
            let left = bracket(c, x, &basis(n, pi));
            let right = bracket(c, x, &basis(n, qi));
            for m in 0..n {
                out[m][qi] += w * &left[m];
                out[pi][m] += w * &right[m];
            }
        }
    }
    out
}

/// `Δ([e_i,e_j]) - (ad_i Δ(e_j) - ad_j Δ(e_i))`, indexed `[i][j][a][b]`.
pub fn cocycle(c: &Tensor3, d: &Tensor3) -> Vec<Vec<Vec<Vector>>> {
    let n = c.dims()[0];
    let mut out = vec![vec![vec![zeros(n); n]; n]; n];
    for i in 0..n {
        for j in 0..n {
            let (x, y) = (basis(n, i), basis(n, j));
            let lhs = delta_of(d, &bracket(c, &x, &y));
            let t1 = ad_action(c, &x, &delta_of(d, &y));
            let t2 = ad_action(c, &y, &delta_of(d, &x));
            for a in 0..n {
                for b in 0..n {
                    out[i][j][a][b] = &lhs[a][b] - &(&t1[a][b] - &t2[a][b]);
                }
            }
        }
    }
    out
}

/// Jacobiator of the dual bracket `[ξ_i, ξ_j] = Σ_k d_k^{ij} ξ_k`, as
/// `[k][p][q][r]` = coefficient of `ξ_k` in the cyclic sum over `(ξ_p, ξ_q, ξ_r)`.
pub fn cojacobi(d: &Tensor3) -> Vec<Vec<Vec<Vector>>> {
    let n = d.dims()[0];
    let dual = Tensor3::from_fn([n, n, n], |i, j, k| d[(k, i, j)].clone());
    let mut out = vec![vec![vec![zeros(n); n]; n]; n];
    for p in 0..n {
        for qq in 0..n {
            for r in 0..n {
                let (a, b, cc) = (basis(n, p), basis(n, qq), basis(n, r));
                let mut s = bracket(&dual, &a, &bracket(&dual, &b, &cc));
                axpy(&mut s, &q(1), &bracket(&dual, &b, &bracket(&dual, &cc, &a)));
                axpy(&mut s, &q(1), &bracket(&dual, &cc, &bracket(&dual, &a, &b)));
                for k in 0..n {
                    out[k][p][qq][r] = s[k].clone();
                }
            }
        }
    }
    out
}

/// `(ad*_x ξ)(z) = -ξ([x, z])`.
fn coad(c: &Tensor3, x: &[Rational], xi: &[Rational]) -> Vector {
    let n = x.len();
    (0..n)
        .map(|m| {
            let b = bracket(c, x, &basis(n, m));
            -b.iter().zip(xi).fold(Rational::zero(), |acc, (u, v)| acc + u * v)
        })
        .collect()
}

/// `(N* ξ)(z) = ξ(N z)`.
fn dual_op(nop: &Matrix, xi: &[Rational]) -> Vector {
    let n = xi.len();
    (0..n)
        .map(|m| {
            apply(nop, &basis(n, m))
                .iter()
                .zip(xi)
                .fold(Rational::zero(), |acc, (u, v)| acc + u * v)
        })
        .collect()
}

/// `ι_φ P (ξ_p, η_q) = P(φξ_p, η_q) + P(ξ_p, φη_q)`, with `images[p] = φ(ξ_p)`.
fn iota(images: &[Vector], p: &[Vector], a: usize, b: usize) -> Rational {
    let n = images.len();
    let mut acc = Rational::zero();
    for m in 0..n {
        acc += &images[a][m] * &p[m][b];
        acc += &p[a][m] * &images[b][m];
    }
    acc
}

/// `C(Δ,N)(x, y; ξ, η)` indexed `[a][b][p][q]` with `x = e_a`, `ξ = e_p*`.
pub fn concomitant(c: &Tensor3, d: &Tensor3, nop: &Matrix) -> Vec<Vec<Vec<Vector>>> {
    let n = c.dims()[0];
    let duals: Vec<Vector> = (0..n).map(|p| basis(n, p)).collect();
    let coads: Vec<Vec<Vector>> = (0..n)
        .map(|a| duals.iter().map(|xi| coad(c, &basis(n, a), xi)).collect())
        .collect();
    let n_coads: Vec<Vec<Vector>> = coads
        .iter()
        .map(|imgs| imgs.iter().map(|v| dual_op(nop, v)).collect())
        .collect();
    let mut out = vec![vec![vec![zeros(n); n]; n]; n];
    for a in 0..n {
        for b in 0..n {
            let (x, y) = (basis(n, a), basis(n, b));
            let dy = delta_of(d, &y);
            let dx = delta_of(d, &x);
            let dny = delta_of(d, &apply(nop, &y));
            let dnx = delta_of(d, &apply(nop, &x));
            for p in 0..n {
                for qq in 0..n {
                    out[a][b][p][qq] =
                        iota(&n_coads[a], &dy, p, qq) - iota(&n_coads[b], &dx, p, qq) - iota(&coads[a], &dny, p, qq)
                            + iota(&coads[b], &dnx, p, qq);
                }
            }
        }
    }
    out
}

/// Runs the five oracle comparisons on `cases` seeded inputs per kind and
/// returns the first mismatch, if any.
pub fn oracle_sweep(seed: u64, cases: usize) -> Result<(), String> {
    use enl_core::doubles::{cocycle_defect, concomitant as lib_concomitant};
    use enl_core::operators::nijenhuis_torsion;
    use enl_core::yang_baxter::schouten as lib_schouten;
    let mut r = rng(seed);
    for case in 0..cases {
        let n = r.gen_range(1..=5);
        let g = random_bracket(&mut r, n);
        let c = g.structure().clone();
        let m = random_matrix(&mut r, n, n);
        let d = random_cobracket(&mut r, n);

        let s = lib_schouten(&g, &m).unwrap();
        let o = schouten(&c, &m);
        for (a, b, k) in triples(n) {
            if s[(a, b, k)] != o[a][b][k] {
                return Err(format!("schouten case {case} at ({a},{b},{k})"));
            }
        }

        let t = nijenhuis_torsion(&g, &m).unwrap();
        let o = torsion(&c, &m);
        for (i, j, k) in triples(n) {
            if t[(i, j, k)] != o[i][j][k] {
                return Err(format!("torsion case {case} at ({i},{j},{k})"));
            }
        }

        let lib = cocycle_defect(&g, &d);
        let o = cocycle(&c, d.tensor());
        for idx in quads(n) {
            if *lib.get(&idx) != o[idx[0]][idx[1]][idx[2]][idx[3]] {
                return Err(format!("cocycle case {case} at {idx:?}"));
            }
        }

        let lib = d.cojacobi_defect();
        let o = cojacobi(d.tensor());
        for idx in quads(n) {
            if *lib.get(&idx) != o[idx[0]][idx[1]][idx[2]][idx[3]] {
                return Err(format!("co-Jacobi case {case} at {idx:?}"));
            }
        }

        let lib = lib_concomitant(&g, &d, &m).unwrap();
        let o = concomitant(&c, d.tensor(), &m);
        for idx in quads(n) {
            if *lib.get(&idx) != o[idx[0]][idx[1]][idx[2]][idx[3]] {
                return Err(format!("concomitant case {case} at {idx:?}"));
            }
        }
    }
    Ok(())
}

fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n).flat_map(move |a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c))))
}

fn quads(n: usize) -> impl Iterator<Item = Vec<usize>> {
    triples(n).flat_map(move |(a, b, c)| (0..n).map(move |d| vec![a, b, c, d]))
}
