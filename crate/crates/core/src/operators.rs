//! Endomorphism-level checks on one algebra: torsion, equivariance, deformed
//! brackets, averaging and Rota–Baxter operators, quadratic compatibility and
//! the centroid solver.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lie::{basis_vector, check_invariant_form, BilinearForm, LieAlgebra};
use crate::matrix::Matrix;
use crate::rational::Rational;
use crate::tensor::Tensor3;
use crate::verdict::{render_pair, render_vector, Verdict};

pub(crate) fn check_square(g: &LieAlgebra, m: &Matrix, what: &str) -> Result<()> {
    let n = g.dim();
    if m.rows() != n || m.cols() != n {
        return Err(Error::shape(format!(
            "{what} is {}x{}, algebra has dimension {n}",
            m.rows(),
            m.cols()
        )));
    }
    Ok(())
}

fn vsub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn vadd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn vscale(a: &[Rational], c: &Rational) -> Vec<Rational> {
    a.iter().map(|x| x * c).collect()
}

/// `[Nx,y] + [x,Ny] - N[x,y]` on vectors.
fn n_deformed(g: &LieAlgebra, n: &Matrix, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    let a = g.bracket(&n.mul_vec(x), y);
    let b = g.bracket(x, &n.mul_vec(y));
    let c = n.mul_vec(&g.bracket(x, y));
    vsub(&vadd(&a, &b), &c)
}

/// `T_N(e_i, e_j) = [Ne_i, Ne_j] - N([Ne_i, e_j] + [e_i, Ne_j] - N[e_i, e_j])`,
/// stored at `(i, j, ·)`.
pub fn nijenhuis_torsion(g: &LieAlgebra, n: &Matrix) -> Result<Tensor3> {
    check_square(g, n, "operator")?;
    let d = g.dim();
    let mut t = Tensor3::cube(d);
    for i in 0..d {
        let ei = basis_vector(d, i);
        let ni = n.col(i);
        for j in 0..d {
            let ej = basis_vector(d, j);
            let lhs = g.bracket(&ni, &n.col(j));
            let rhs = n.mul_vec(&n_deformed(g, n, &ei, &ej));
            for (k, v) in vsub(&lhs, &rhs).into_iter().enumerate() {
                t[(i, j, k)] = v;
            }
        }
    }
    Ok(t)
}

/// Verdict form of [`nijenhuis_torsion`].
pub fn check_nijenhuis(g: &LieAlgebra, n: &Matrix) -> Result<Verdict> {
    let t = nijenhuis_torsion(g, n)?;
    Ok(match t.first_nonzero() {
        None => Verdict::Pass,
        Some((i, j, _)) => Verdict::fail(
            "Nijenhuis torsion T_N(x,y) = 0",
            vec![i, j],
            render_pair(g.names(), i, j),
            render_vector(&t.fibre(i, j), g.names()),
            "0",
        ),
    })
}

/// Checks `E[x,y] = [x,Ey]` and `E[x,y] = [Ex,y]` on all basis pairs.
pub fn check_equivariant(g: &LieAlgebra, e: &Matrix) -> Result<Verdict> {
    check_square(g, e, "operator")?;
    let d = g.dim();
    for i in 0..d {
        let ei = basis_vector(d, i);
        for j in 0..d {
            let ej = basis_vector(d, j);
            let lhs = e.mul_vec(&g.bracket_basis(i, j));
            let right = g.bracket(&ei, &e.col(j));
            if lhs != right {
                return Ok(Verdict::fail(
                    "E[x,y] = [x,Ey]",
                    vec![i, j],
                    render_pair(g.names(), i, j),
                    render_vector(&lhs, g.names()),
                    render_vector(&right, g.names()),
                ));
            }
            let left = g.bracket(&e.col(i), &ej);
            if lhs != left {
                return Ok(Verdict::fail(
                    "E[x,y] = [Ex,y]",
                    vec![i, j],
                    render_pair(g.names(), i, j),
                    render_vector(&lhs, g.names()),
                    render_vector(&left, g.names()),
                ));
            }
        }
    }
    Ok(Verdict::Pass)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DeformMode {
    /// `[Nx,y] + [x,Ny] - N[x,y]`, requires zero torsion.
    General,
    /// `[Ex,y]`, requires equivariance.
    Equivariant,
}

pub fn deformed_bracket(g: &LieAlgebra, n: &Matrix, mode: DeformMode) -> Result<LieAlgebra> {
    match mode {
        DeformMode::General => {
            if let Verdict::Fail(w) = check_nijenhuis(g, n)? {
                return Err(Error::NotNijenhuis(format!("torsion at {} is {}", w.at, w.got)));
            }
            Ok(deformed_general_unchecked(g, n))
        }
        DeformMode::Equivariant => {
            if let Verdict::Fail(w) = check_equivariant(g, n)? {
                return Err(Error::NotEquivariant(format!(
                    "{} fails at {}: got {}, expected {}",
                    w.clause, w.at, w.got, w.expected
                )));
            }
            Ok(deformed_equivariant_unchecked(g, n))
        }
    }
}

/// `[x,y]_N` with no torsion check.
pub fn deformed_general_unchecked(g: &LieAlgebra, n: &Matrix) -> LieAlgebra {
    let d = g.dim();
    LieAlgebra::from_basis_bracket(g.names().to_vec(), |i, j| {
        n_deformed(g, n, &basis_vector(d, i), &basis_vector(d, j))
    })
}

/// `[Ex,y]` on basis pairs with no equivariance check.
pub fn deformed_equivariant_unchecked(g: &LieAlgebra, e: &Matrix) -> LieAlgebra {
    let d = g.dim();
    LieAlgebra::from_basis_bracket(g.names().to_vec(), |i, j| g.bracket(&e.col(i), &basis_vector(d, j)))
}

/// Levels `k = 1..=depth`: `(g with [E^k x, y], E^k)`.
pub fn hierarchy(g: &LieAlgebra, e: &Matrix, depth: usize) -> Result<Vec<(LieAlgebra, Matrix)>> {
    if let Verdict::Fail(w) = check_equivariant(g, e)? {
        return Err(Error::NotEquivariant(format!("{} fails at {}", w.clause, w.at)));
    }
    let mut out = Vec::with_capacity(depth);
    let mut ek = e.clone();
    for _ in 0..depth {
        out.push((deformed_equivariant_unchecked(g, &ek), ek.clone()));
        ek = &ek * e;
    }
    Ok(out)
}

/// `[Px, Py] = P[Px, y]` on all basis pairs.
pub fn check_averaging(g: &LieAlgebra, p: &Matrix) -> Result<Verdict> {
    check_square(g, p, "operator")?;
    let d = g.dim();
    for i in 0..d {
        for j in 0..d {
            let lhs = g.bracket(&p.col(i), &p.col(j));
            let rhs = p.mul_vec(&g.bracket(&p.col(i), &basis_vector(d, j)));
            if lhs != rhs {
                return Ok(Verdict::fail(
                    "[Px,Py] = P[Px,y]",
                    vec![i, j],
                    render_pair(g.names(), i, j),
                    render_vector(&lhs, g.names()),
                    render_vector(&rhs, g.names()),
                ));
            }
        }
    }
    Ok(Verdict::Pass)
}

/// The product `m(x, y) = [Px, y]` induced by an averaging operator.
pub fn averaging_product(g: &LieAlgebra, p: &Matrix) -> Tensor3 {
    let d = g.dim();
    let mut m = Tensor3::cube(d);
    for i in 0..d {
        for j in 0..d {
            for (k, v) in g.bracket(&p.col(i), &basis_vector(d, j)).into_iter().enumerate() {
                m[(i, j, k)] = v;
            }
        }
    }
    m
}

/// `[Bx,By] = B([Bx,y] + [x,By] + λ[x,y])` on all basis pairs.
pub fn check_rota_baxter(g: &LieAlgebra, b: &Matrix, weight: &Rational) -> Result<Verdict> {
    check_square(g, b, "operator")?;
    let d = g.dim();
    for i in 0..d {
        for j in 0..d {
            let lhs = g.bracket(&b.col(i), &b.col(j));
            let inner = rb_bracket(g, b, weight, i, j);
            let rhs = b.mul_vec(&inner);
            if lhs != rhs {
                return Ok(Verdict::fail(
                    "[Bx,By] = B([Bx,y] + [x,By] + λ[x,y])",
                    vec![i, j],
                    render_pair(g.names(), i, j),
                    render_vector(&lhs, g.names()),
                    render_vector(&rhs, g.names()),
                ));
            }
        }
    }
    Ok(Verdict::Pass)
}

fn rb_bracket(g: &LieAlgebra, b: &Matrix, weight: &Rational, i: usize, j: usize) -> Vec<Rational> {
    let d = g.dim();
    let (ei, ej) = (basis_vector(d, i), basis_vector(d, j));
    let a = g.bracket(&b.col(i), &ej);
    let c = g.bracket(&ei, &b.col(j));
    vadd(&vadd(&a, &c), &vscale(&g.bracket_basis(i, j), weight))
}

/// `[x,y]_B = [Bx,y] + [x,By] + λ[x,y]`.
pub fn descendent_bracket(g: &LieAlgebra, b: &Matrix, weight: &Rational) -> Result<LieAlgebra> {
    if let Verdict::Fail(w) = check_rota_baxter(g, b, weight)? {
        return Err(Error::NotRotaBaxter(format!(
            "fails at {}: got {}, expected {}",
            w.at, w.got, w.expected
        )));
    }
    Ok(LieAlgebra::from_basis_bracket(g.names().to_vec(), |i, j| {
        rb_bracket(g, b, weight, i, j)
    }))
}

/// `S(Ex,y) = S(x,Ey)` and `S(x,[y,z])`-intertwining as plain clauses, with
/// the form and equivariance prerequisites reported as clauses too.
pub(crate) fn quadratic_enl_clauses(g: &LieAlgebra, e: &Matrix, form: &BilinearForm) -> Result<Verdict> {
    check_square(g, e, "operator")?;
    let v = check_invariant_form(g, form)?.context("invariant form");
    if !v.is_pass() {
        return Ok(v);
    }
    let v = check_equivariant(g, e)?.context("equivariance");
    if !v.is_pass() {
        return Ok(v);
    }
    Ok(s_symmetry(g, e, form))
}

fn s_symmetry(g: &LieAlgebra, e: &Matrix, form: &BilinearForm) -> Verdict {
    let s = &form.s;
    let se = s * e;
    let ets = &e.transpose() * s;
    let d = g.dim();
    for i in 0..d {
        for j in 0..d {
            if se[(i, j)] != ets[(i, j)] {
                return Verdict::fail(
                    "S(Ex,y) = S(x,Ey)",
                    vec![i, j],
                    format!("({},{})", g.names()[i], g.names()[j]),
                    ets[(i, j)].to_string(),
                    se[(i, j)].to_string(),
                );
            }
        }
    }
    // S♯ intertwines ad with ad* = -adᵀ.
    for x in 0..d {
        let ad = g.ad(x);
        let l = s * &ad;
        let r = &(-&ad.transpose()) * s;
        if l != r {
            return Verdict::fail(
                "S♯∘ad_x = ad*_x∘S♯",
                vec![x],
                g.names()[x].clone(),
                l.to_string(),
                r.to_string(),
            );
        }
    }
    Verdict::Pass
}

/// S-symmetry of an equivariant `E` on a quadratic algebra.
pub fn check_quadratic_enl(g: &LieAlgebra, e: &Matrix, form: &BilinearForm) -> Result<Verdict> {
    check_square(g, e, "operator")?;
    if let Verdict::Fail(w) = check_invariant_form(g, form)? {
        return Err(Error::prereq(format!("invariant form: {} at {}", w.clause, w.at)));
    }
    if let Verdict::Fail(w) = check_equivariant(g, e)? {
        return Err(Error::prereq(format!("equivariance: {} at {}", w.clause, w.at)));
    }
    Ok(s_symmetry(g, e, form))
}

/// Quadratic ENL Rota–Baxter data `(g, B, S, E)` of weight `λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticEnlRb {
    pub g: LieAlgebra,
    pub b: Matrix,
    pub s: BilinearForm,
    pub e: Matrix,
    pub weight: Rational,
}

/// `S(x,By) + S(Bx,y) + λS(x,y) = 0` on basis pairs.
pub fn check_quadratic_rb(g: &LieAlgebra, b: &Matrix, form: &BilinearForm, weight: &Rational) -> Verdict {
    let s = &form.s;
    let m = &(&(s * b) + &(&b.transpose() * s)) + &s.scale(weight);
    match m.entries().iter().position(|x| !x.is_zero()) {
        None => Verdict::Pass,
        Some(pos) => {
            let (i, j) = (pos / m.cols(), pos % m.cols());
            Verdict::fail(
                "S(x,By) + S(Bx,y) + λS(x,y) = 0",
                vec![i, j],
                format!("({},{})", g.names()[i], g.names()[j]),
                m[(i, j)].to_string(),
                "0",
            )
        }
    }
}

/// Rota–Baxter, quadratic RB compatibility, quadratic ENL, then `EB = BE`.
pub fn check_enl_rb(t: &QuadraticEnlRb) -> Result<Verdict> {
    if t.weight.is_zero() {
        return Err(Error::prereq("weight must be nonzero"));
    }
    check_square(&t.g, &t.b, "Rota-Baxter operator")?;
    check_square(&t.g, &t.e, "operator E")?;
    check_square(&t.g, &t.s.s, "bilinear form")?;
    let v = check_rota_baxter(&t.g, &t.b, &t.weight)?;
    if !v.is_pass() {
        return Ok(v);
    }
    let v = check_quadratic_rb(&t.g, &t.b, &t.s, &t.weight);
    if !v.is_pass() {
        return Ok(v);
    }
    let v = quadratic_enl_clauses(&t.g, &t.e, &t.s)?;
    if !v.is_pass() {
        return Ok(v);
    }
    let eb = &t.e * &t.b;
    let be = &t.b * &t.e;
    if let Some(pos) = eb.entries().iter().zip(be.entries()).position(|(a, b)| a != b) {
        let n = t.g.dim();
        let (i, j) = (pos / n, pos % n);
        return Ok(Verdict::fail(
            "E∘B = B∘E",
            vec![i, j],
            format!("({},{})", t.g.names()[i], t.g.names()[j]),
            eb[(i, j)].to_string(),
            be[(i, j)].to_string(),
        ));
    }
    Ok(Verdict::Pass)
}

/// Coefficient matrix of the linear system `E ad_x - ad_x E = 0` over all
/// basis `x`, in the row-major unknowns `E[p][q] ↦ p*n + q`.
pub fn centroid_system(g: &LieAlgebra) -> Matrix {
    let n = g.dim();
    let ads: Vec<Matrix> = (0..n).map(|i| g.ad(i)).collect();
    let mut sys = Matrix::zeros(n * n * n, n * n);
    for (x, ad) in ads.iter().enumerate() {
        for a in 0..n {
            for b in 0..n {
                let row = (x * n + a) * n + b;
                for p in 0..n {
                    // (E ad)[a][b] = Σ_p E[a][p] ad[p][b]
                    sys[(row, a * n + p)] += &ad[(p, b)];
                    // (ad E)[a][b] = Σ_p ad[a][p] E[p][b]
                    sys[(row, p * n + b)] -= &ad[(a, p)];
                }
            }
        }
    }
    sys
}

/// Basis of the centroid `{E : E∘ad_x = ad_x∘E}`.
pub fn centroid_basis(g: &LieAlgebra) -> Vec<Matrix> {
    let n = g.dim();
    centroid_system(g)
        .kernel_basis()
        .into_iter()
        .map(|v| Matrix::from_fn(n, n, |p, q| v[(p * n + q, 0)].clone()))
        .collect()
}

/// Inverse of an invertible equivariant operator.
pub fn operator_inverse(g: &LieAlgebra, e: &Matrix) -> Result<Matrix> {
    check_square(g, e, "operator")?;
    let inv = e.inverse()?;
    if let Verdict::Fail(w) = check_equivariant(g, e)? {
        return Err(Error::NotEquivariant(format!("{} fails at {}", w.clause, w.at)));
    }
    Ok(inv)
}
