//! Pre-Lie (left-symmetric) algebras with Nijenhuis and equivariant
//! operators, subadjacent ENL algebras and the canonical r-matrix.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lie::{default_names, LieAlgebra};
use crate::matrix::Matrix;
use crate::operators::check_equivariant;
use crate::rational::Rational;
use crate::representations::{check_en_representation, semidirect_unchecked, EnMode, Representation};
use crate::tensor::Tensor3;
use crate::verdict::{render_pair, render_tuple, render_vector, Verdict};
use crate::yang_baxter::{check_relative_rb, en_rmatrix_clauses, RelLevel, RelativeRb};

/// Product `{e_i, e_j} = Σ m[(i, j, k)] e_k`, no symmetry assumed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PreLieAlgebra {
    names: Vec<String>,
    m: Tensor3,
}

impl PreLieAlgebra {
    pub fn new(names: Vec<String>, m: Tensor3) -> Result<Self> {
        if !m.is_cubic() || m.dims()[0] != names.len() {
            return Err(Error::shape(format!(
                "product tensor {:?} does not match {} names",
                m.dims(),
                names.len()
            )));
        }
        Ok(PreLieAlgebra { names, m })
    }

    pub fn from_products(names: Vec<String>, entries: &[(usize, usize, usize, Rational)]) -> Result<Self> {
        let n = names.len();
        let mut m = Tensor3::cube(n);
        let mut seen = std::collections::HashSet::new();
        for (i, j, k, v) in entries {
            let (i, j, k) = (*i, *j, *k);
            if i >= n || j >= n || k >= n {
                return Err(Error::InvalidAlgebra(format!(
                    "product entry ({i},{j},{k}) out of range"
                )));
            }
            if !seen.insert((i, j, k)) {
                return Err(Error::InvalidAlgebra(format!("duplicate product entry ({i},{j},{k})")));
            }
            m[(i, j, k)] = v.clone();
        }
        Ok(PreLieAlgebra { names, m })
    }

    pub fn zero(n: usize) -> Self {
        PreLieAlgebra {
            names: default_names(n),
            m: Tensor3::cube(n),
        }
    }

    fn from_fn(names: Vec<String>, f: impl Fn(usize, usize) -> Vec<Rational>) -> Self {
        let n = names.len();
        let mut m = Tensor3::cube(n);
        for i in 0..n {
            for j in 0..n {
                for (k, v) in f(i, j).into_iter().enumerate() {
                    m[(i, j, k)] = v;
                }
            }
        }
        PreLieAlgebra { names, m }
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn structure(&self) -> &Tensor3 {
        &self.m
    }

    pub fn product_basis(&self, i: usize, j: usize) -> Vec<Rational> {
        self.m.fibre(i, j)
    }

    #[allow(clippy::needless_range_loop)]
    pub fn product(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let n = self.dim();
        let mut out = vec![Rational::zero(); n];
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() {
                    continue;
                }
                let s = &x[i] * &y[j];
                for (k, o) in out.iter_mut().enumerate() {
                    if !self.m[(i, j, k)].is_zero() {
                        *o += &s * &self.m[(i, j, k)];
                    }
                }
            }
        }
        out
    }

    /// `L(e_i)` as a representation of the subadjacent algebra.
    pub fn left_multiplication(&self) -> Representation {
        Representation::left_multiplication(self.names.clone(), &self.m)
    }

    /// `[x,y] = {x,y} - {y,x}`.
    pub fn subadjacent(&self) -> LieAlgebra {
        LieAlgebra::from_basis_bracket(self.names.clone(), |i, j| {
            let a = self.product_basis(i, j);
            let b = self.product_basis(j, i);
            a.iter().zip(&b).map(|(x, y)| x - y).collect()
        })
    }

    pub fn sparse_products(&self) -> Vec<(usize, usize, usize, Rational)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if !self.m[(i, j, k)].is_zero() {
                        out.push((i, j, k, self.m[(i, j, k)].clone()));
                    }
                }
            }
        }
        out
    }
}

fn basis(n: usize, i: usize) -> Vec<Rational> {
    crate::lie::basis_vector(n, i)
}

fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn add(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn square(p: &PreLieAlgebra, m: &Matrix, what: &str) -> Result<()> {
    if m.rows() != p.dim() || m.cols() != p.dim() {
        return Err(Error::shape(format!(
            "{what} is {}x{}, expected {n}x{n}",
            m.rows(),
            m.cols(),
            n = p.dim()
        )));
    }
    Ok(())
}

/// `(x,y,z) = (y,x,z)` for the associator `(x,y,z) = {{x,y},z} - {x,{y,z}}`.
pub fn check_prelie(p: &PreLieAlgebra) -> Verdict {
    let n = p.dim();
    let assoc = |x: usize, y: usize, z: usize| {
        let (ex, ey, ez) = (basis(n, x), basis(n, y), basis(n, z));
        sub(
            &p.product(&p.product(&ex, &ey), &ez),
            &p.product(&ex, &p.product(&ey, &ez)),
        )
    };
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let a = assoc(x, y, z);
                let b = assoc(y, x, z);
                if a != b {
                    return Verdict::fail(
                        "associator symmetry (x,y,z) = (y,x,z)",
                        vec![x, y, z],
                        render_tuple(&[&p.names[x], &p.names[y], &p.names[z]]),
                        render_vector(&a, &p.names),
                        render_vector(&b, &p.names),
                    );
                }
            }
        }
    }
    Verdict::Pass
}

fn require_prelie(p: &PreLieAlgebra) -> Result<()> {
    match check_prelie(p) {
        Verdict::Pass => Ok(()),
        Verdict::Fail(w) => Err(Error::prereq(format!("not pre-Lie: {} at {}", w.clause, w.at))),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PreEnlMode {
    /// `E[x,y] = [x,Ey]` on the subadjacent bracket.
    Weak,
    /// `E{x,y} = {Ex,y} = {x,Ey}`.
    Strong,
}

pub fn check_pre_enl(p: &PreLieAlgebra, e: &Matrix, mode: PreEnlMode) -> Result<Verdict> {
    square(p, e, "operator")?;
    require_prelie(p)?;
    Ok(pre_enl_clauses(p, e, mode))
}

fn pre_enl_clauses(p: &PreLieAlgebra, e: &Matrix, mode: PreEnlMode) -> Verdict {
    let n = p.dim();
    let names = &p.names;
    let fail = |clause: &str, x: usize, y: usize, got: &[Rational], expected: &[Rational]| {
        Verdict::fail(
            clause,
            vec![x, y],
            render_pair(names, x, y),
            render_vector(got, names),
            render_vector(expected, names),
        )
    };
    match mode {
        PreEnlMode::Weak => {
            let g = p.subadjacent();
            for x in 0..n {
                for y in 0..n {
                    let lhs = e.mul_vec(&g.bracket_basis(x, y));
                    let rhs = g.bracket(&basis(n, x), &e.col(y));
                    if lhs != rhs {
                        return fail("E[x,y] = [x,Ey]", x, y, &rhs, &lhs);
                    }
                }
            }
        }
        PreEnlMode::Strong => {
            for x in 0..n {
                for y in 0..n {
                    let lhs = e.mul_vec(&p.product_basis(x, y));
                    let rhs = p.product(&e.col(x), &basis(n, y));
                    if lhs != rhs {
                        return fail("E{x,y} = {Ex,y}", x, y, &rhs, &lhs);
                    }
                }
            }
            for x in 0..n {
                for y in 0..n {
                    let lhs = e.mul_vec(&p.product_basis(x, y));
                    let rhs = p.product(&basis(n, x), &e.col(y));
                    if lhs != rhs {
                        return fail("E{x,y} = {x,Ey}", x, y, &rhs, &lhs);
                    }
                }
            }
        }
    }
    Verdict::Pass
}

fn require_strong(p: &PreLieAlgebra, e: &Matrix) -> Result<()> {
    match check_pre_enl(p, e, PreEnlMode::Strong)? {
        Verdict::Pass => Ok(()),
        Verdict::Fail(w) => Err(Error::prereq(format!("not strong pre-ENL: {} at {}", w.clause, w.at))),
    }
}

/// Basis of `{E : E{x,y} = {Ex,y} = {x,Ey}}`, unknowns `E[p][q] ↦ p*n + q`.
pub fn prelie_strong_basis(p: &PreLieAlgebra) -> Vec<Matrix> {
    let n = p.dim();
    let m = &p.m;
    let mut sys = Matrix::zeros(2 * n * n * n, n * n);
    for x in 0..n {
        for y in 0..n {
            for k in 0..n {
                let r1 = (x * n + y) * n + k;
                let r2 = n * n * n + r1;
                for q in 0..n {
                    // (E{x,y})_k = Σ_q E[k][q] m_xy^q
                    sys[(r1, k * n + q)] += &m[(x, y, q)];
                    sys[(r2, k * n + q)] += &m[(x, y, q)];
                }
                for s in 0..n {
                    // {Ex,y}_k = Σ_s E[s][x] m_sy^k ; {x,Ey}_k = Σ_s E[s][y] m_xs^k
                    sys[(r1, s * n + x)] -= &m[(s, y, k)];
                    sys[(r2, s * n + y)] -= &m[(x, s, k)];
                }
            }
        }
    }
    sys.kernel_basis()
        .into_iter()
        .map(|v| Matrix::from_fn(n, n, |a, b| v[(a * n + b, 0)].clone()))
        .collect()
}

/// Subadjacent ENL algebra `(g, E)`, the representation `(g; E, L)` and
/// whether `Id` is an EN relative Rota–Baxter operator on it.
pub fn subadjacent_enl(p: &PreLieAlgebra, e: &Matrix) -> Result<(LieAlgebra, Representation, Verdict)> {
    require_strong(p, e)?;
    let g = p.subadjacent();
    let l = p.left_multiplication().with_t(e.clone())?;
    let rb = RelativeRb {
        rep: l.clone(),
        k: Matrix::identity(p.dim()),
    };
    let verdict = check_equivariant(&g, e)?
        .context("E equivariant on the subadjacent algebra")
        .and_then(|| {
            check_en_representation(&g, &l, e, EnMode::Equivariant)
                .expect("shapes")
                .context("(g; E, L) EN-representation")
        })
        .and_then(|| check_relative_rb(&g, &rb, e, RelLevel::En).expect("prerequisites checked"));
    Ok((g, l, verdict))
}

/// Torsion `{Nx,Ny} - N({Nx,y} + {x,Ny} - N{x,y})` and, when it vanishes,
/// the deformed product `{x,y}_N = {Nx,y} + {x,Ny} - N{x,y}`.
pub fn prelie_nijenhuis(p: &PreLieAlgebra, n_op: &Matrix) -> Result<(Tensor3, Option<PreLieAlgebra>)> {
    square(p, n_op, "operator")?;
    let n = p.dim();
    let deformed = |i: usize, j: usize| {
        let a = p.product(&n_op.col(i), &basis(n, j));
        let b = p.product(&basis(n, i), &n_op.col(j));
        let c = n_op.mul_vec(&p.product_basis(i, j));
        sub(&add(&a, &b), &c)
    };
    let mut torsion = Tensor3::cube(n);
    for i in 0..n {
        for j in 0..n {
            let lhs = p.product(&n_op.col(i), &n_op.col(j));
            let rhs = n_op.mul_vec(&deformed(i, j));
            for (k, v) in sub(&lhs, &rhs).into_iter().enumerate() {
                torsion[(i, j, k)] = v;
            }
        }
    }
    let out = if torsion.is_zero() {
        Some(PreLieAlgebra::from_fn(p.names.clone(), deformed))
    } else {
        None
    };
    Ok((torsion, out))
}

/// `{u,v}_K = ρ(Ku)v` on `W`, with operator `T`.
pub fn prelie_from_relrb(g: &LieAlgebra, rb: &RelativeRb, e: &Matrix) -> Result<(PreLieAlgebra, Matrix)> {
    require_relrb(g, rb, e)?;
    let p = PreLieAlgebra::from_fn(rb.rep.names().to_vec(), |u, v| rb.rep.rho_of(&rb.k.col(u)).col(v));
    Ok((p, rb.rep.t().expect("checked").clone()))
}

fn require_relrb(g: &LieAlgebra, rb: &RelativeRb, e: &Matrix) -> Result<()> {
    match check_relative_rb(g, rb, e, RelLevel::En)? {
        Verdict::Pass => Ok(()),
        Verdict::Fail(w) => Err(Error::prereq(format!("{} at {}", w.clause, w.at))),
    }
}

/// `{x,y} = K(ρ(x)K⁻¹y)` on `g`, for invertible `K`.
pub fn prelie_transport(g: &LieAlgebra, rb: &RelativeRb, e: &Matrix) -> Result<PreLieAlgebra> {
    if rb.k.rows() != rb.k.cols() {
        return Err(Error::SingularMatrix);
    }
    let k_inv = rb.k.inverse()?;
    require_relrb(g, rb, e)?;
    Ok(PreLieAlgebra::from_fn(g.names().to_vec(), |x, y| {
        rb.k.mul_vec(&rb.rep.rho()[x].mul_vec(&k_inv.col(y)))
    }))
}

/// `g ⋉_{L*} g*`, `Ê = E ⊕ Eᵀ` and `r = Σ e_i⊗e_i* - e_i*⊗e_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalR {
    pub double: LieAlgebra,
    pub e_hat: Matrix,
    pub r: Matrix,
    pub verdict: Verdict,
}

pub fn canonical_r_prelie(p: &PreLieAlgebra, e: &Matrix) -> Result<CanonicalR> {
    require_strong(p, e)?;
    let n = p.dim();
    let g = p.subadjacent();
    let double = semidirect_unchecked(&g, &p.left_multiplication().dual());
    let e_hat = e.block_diag(&e.transpose());
    let mut r = Matrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        r[(i, n + i)] = crate::rational::q(1);
        r[(n + i, i)] = crate::rational::q(-1);
    }
    let verdict = check_equivariant(&double, &e_hat)?
        .context("Ê equivariant on the double")
        .and_then(|| en_rmatrix_clauses(&double, &r, &e_hat).expect("square"));
    Ok(CanonicalR {
        double,
        e_hat,
        r,
        verdict,
    })
}
