//! Representations on auxiliary spaces, EN-compatibility, duals and
//! semidirect sums.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lie::{check_lie, dual_names, merge_names, LieAlgebra};
use crate::matrix::Matrix;
use crate::operators::{check_equivariant, check_square};
use crate::rational::Rational;
use crate::tensor::Tensor3;
use crate::verdict::{render_pair, Verdict};

/// `ρ(e_i)` for each basis element of the acting algebra, plus an optional
/// compatibility operator `T` on `W`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Representation {
    names: Vec<String>,
    rho: Vec<Matrix>,
    t: Option<Matrix>,
}

impl Representation {
    /// `names` label the basis of `W`.
    pub fn new(names: Vec<String>, rho: Vec<Matrix>, t: Option<Matrix>) -> Result<Self> {
        let m = names.len();
        if let Some(bad) = rho.iter().position(|r| r.rows() != m || r.cols() != m) {
            return Err(Error::shape(format!("rho[{bad}] is not {m}x{m}")));
        }
        if let Some(t) = &t {
            if t.rows() != m || t.cols() != m {
                return Err(Error::shape(format!("T is not {m}x{m}")));
            }
        }
        Ok(Representation { names, rho, t })
    }

    pub fn adjoint(g: &LieAlgebra) -> Self {
        Representation {
            names: g.names().to_vec(),
            rho: (0..g.dim()).map(|i| g.ad(i)).collect(),
            t: None,
        }
    }

    /// `ad*_x = -ad_xᵀ` on the dual basis.
    pub fn coadjoint(g: &LieAlgebra) -> Self {
        Representation::adjoint(g).dual()
    }

    /// Left multiplications of an arbitrary product tensor: `ρ(e_i)[k][j] = m_{ij}^k`.
    pub fn left_multiplication(names: Vec<String>, m: &Tensor3) -> Self {
        let n = names.len();
        let rho = (0..n)
            .map(|i| Matrix::from_fn(n, n, |k, j| m[(i, j, k)].clone()))
            .collect();
        Representation { names, rho, t: None }
    }

    pub fn with_t(mut self, t: Matrix) -> Result<Self> {
        let m = self.dim();
        if t.rows() != m || t.cols() != m {
            return Err(Error::shape(format!("T is not {m}x{m}")));
        }
        self.t = Some(t);
        Ok(self)
    }

    pub fn without_t(mut self) -> Self {
        self.t = None;
        self
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    /// Dimension of the acting algebra.
    pub fn algebra_dim(&self) -> usize {
        self.rho.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn rho(&self) -> &[Matrix] {
        &self.rho
    }

    pub fn t(&self) -> Option<&Matrix> {
        self.t.as_ref()
    }

    /// `ρ(x) = Σ x_i ρ(e_i)`.
    pub fn rho_of(&self, x: &[Rational]) -> Matrix {
        let m = self.dim();
        let mut out = Matrix::zeros(m, m);
        for (xi, r) in x.iter().zip(&self.rho) {
            if !xi.is_zero() {
                out = &out + &r.scale(xi);
            }
        }
        out
    }

    /// `ρ*(x) = -ρ(x)ᵀ`, `T* = Tᵀ`, without validating `ρ`.
    pub fn dual(&self) -> Self {
        Representation {
            names: dual_names(&self.names),
            rho: self.rho.iter().map(|r| -&r.transpose()).collect(),
            t: self.t.as_ref().map(Matrix::transpose),
        }
    }
}

fn check_algebra_dim(g: &LieAlgebra, r: &Representation) -> Result<()> {
    if r.algebra_dim() != g.dim() {
        return Err(Error::shape(format!(
            "representation has {} action matrices, algebra has dimension {}",
            r.algebra_dim(),
            g.dim()
        )));
    }
    Ok(())
}

/// `ρ([e_i, e_j]) = [ρ(e_i), ρ(e_j)]` on all basis pairs.
pub fn check_representation(g: &LieAlgebra, r: &Representation) -> Result<Verdict> {
    check_algebra_dim(g, r)?;
    let n = g.dim();
    for i in 0..n {
        for j in 0..n {
            let lhs = r.rho_of(&g.bracket_basis(i, j));
            let rhs = r.rho[i].commutator(&r.rho[j]);
            if lhs != rhs {
                return Ok(Verdict::fail(
                    "ρ([x,y]) = ρ(x)ρ(y) - ρ(y)ρ(x)",
                    vec![i, j],
                    render_pair(g.names(), i, j),
                    lhs.to_string(),
                    rhs.to_string(),
                ));
            }
        }
    }
    Ok(Verdict::Pass)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnMode {
    /// `T²ρ(x) + ρ(Nx)T - Tρ(Nx) - Tρ(x)T = 0`.
    NCompatible,
    /// `Tρ(x) = ρ(Ex) = ρ(x)T`.
    Equivariant,
    /// `Tρ(Px) = ρ(Px)T`.
    AveragingCompatible,
}

/// Checks the selected compatibility of `R.T` with `E` for every basis `x`.
pub fn check_en_representation(g: &LieAlgebra, r: &Representation, e: &Matrix, mode: EnMode) -> Result<Verdict> {
    check_square(g, e, "operator")?;
    let t = r.t.as_ref().ok_or(Error::MissingT)?;
    if let Verdict::Fail(w) = check_representation(g, r)? {
        return Err(Error::prereq(format!("not a representation: {} at {}", w.clause, w.at)));
    }
    Ok(en_clauses(g, r, t, e, mode))
}

pub(crate) fn en_clauses(g: &LieAlgebra, r: &Representation, t: &Matrix, e: &Matrix, mode: EnMode) -> Verdict {
    let fail = |clause: &str, x: usize, got: &Matrix, expected: &Matrix| {
        Verdict::fail(
            clause,
            vec![x],
            g.names()[x].clone(),
            got.to_string(),
            expected.to_string(),
        )
    };
    for x in 0..g.dim() {
        let rx = &r.rho[x];
        let rex = r.rho_of(&e.col(x));
        match mode {
            EnMode::Equivariant => {
                let trx = t * rx;
                if trx != rex {
                    return fail("T(ρ(x)u) = ρ(Ex)u", x, &trx, &rex);
                }
                let rxt = rx * t;
                if rex != rxt {
                    return fail("ρ(Ex)u = ρ(x)(Tu)", x, &rex, &rxt);
                }
            }
            EnMode::NCompatible => {
                let lhs = &(&(&(&(t * t) * rx) + &(&rex * t)) - &(t * &rex)) - &(&(t * rx) * t);
                if !lhs.is_zero() {
                    let z = Matrix::zeros(lhs.rows(), lhs.cols());
                    return fail("T²ρ(x) + ρ(Nx)T - Tρ(Nx) - Tρ(x)T = 0", x, &lhs, &z);
                }
            }
            EnMode::AveragingCompatible => {
                let l = t * &rex;
                let rr = &rex * t;
                if l != rr {
                    return fail("T(ρ(Px)u) = ρ(Px)(Tu)", x, &l, &rr);
                }
            }
        }
    }
    Verdict::Pass
}

/// `ρ* = -ρᵀ`, `T* = Tᵀ`.
pub fn dual_representation(g: &LieAlgebra, r: &Representation) -> Result<Representation> {
    if let Verdict::Fail(w) = check_representation(g, r)? {
        return Err(Error::prereq(format!("not a representation: {} at {}", w.clause, w.at)));
    }
    Ok(r.dual())
}

/// `(adjoint, coadjoint)`.
pub fn canonical_representations(g: &LieAlgebra) -> Result<(Representation, Representation)> {
    if let Verdict::Fail(w) = check_lie(g) {
        return Err(Error::InvalidAlgebra(format!("{} at {}", w.clause, w.at)));
    }
    let ad = Representation::adjoint(g);
    let coad = ad.dual();
    Ok((ad, coad))
}

/// `g ⋉_ρ W` with `[x+u, y+v] = [x,y] + ρ(x)v - ρ(y)u`, g block first.
pub fn semidirect_unchecked(g: &LieAlgebra, r: &Representation) -> LieAlgebra {
    let n = g.dim();
    let m = r.dim();
    let names = merge_names(g.names(), r.names());
    LieAlgebra::from_basis_bracket(names, |i, j| {
        let mut out = vec![Rational::zero(); n + m];
        if j < n {
            // both in g
            for (k, v) in g.bracket_basis(i, j).into_iter().enumerate() {
                out[k] = v;
            }
        } else if i < n {
            // [e_i, w_a] = ρ(e_i) w_a
            let a = j - n;
            for b in 0..m {
                out[n + b] = r.rho[i][(b, a)].clone();
            }
        }
        out
    })
}

/// Semidirect sum with `Ê = E ⊕ T`, after checking both prerequisites.
pub fn semidirect_sum(g: &LieAlgebra, e: &Matrix, r: &Representation) -> Result<(LieAlgebra, Matrix)> {
    check_algebra_dim(g, r)?;
    if let Verdict::Fail(w) = check_equivariant(g, e)? {
        return Err(Error::prereq(format!("E not equivariant: {} at {}", w.clause, w.at)));
    }
    let v = check_en_representation(g, r, e, EnMode::Equivariant)
        .map_err(|err| Error::prereq(format!("EN-representation: {err}")))?;
    if let Verdict::Fail(w) = v {
        return Err(Error::prereq(format!("EN-representation: {} at {}", w.clause, w.at)));
    }
    let t = r.t().expect("checked above");
    Ok((semidirect_unchecked(g, r), e.block_diag(t)))
}
