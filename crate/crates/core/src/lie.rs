//! Lie algebras, invariant bilinear forms, cobrackets and their duals.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rational::Rational;
use crate::tensor::{contract, Array, Tensor3};
use crate::verdict::{render_pair, render_tuple, render_vector, Verdict};

/// Finite-dimensional algebra with antisymmetric bracket given by structure
/// constants: `c[(i, j, k)]` is the coefficient of `e_k` in `[e_i, e_j]`.
///
/// Construction only checks shapes; use [`check_lie`] for the identities.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LieAlgebra {
    names: Vec<String>,
    c: Tensor3,
}

impl LieAlgebra {
    pub fn new(names: Vec<String>, c: Tensor3) -> Result<Self> {
        let n = names.len();
        if c.dims() != [n, n, n] {
            return Err(Error::shape(format!(
                "structure tensor {:?} does not match {} basis names",
                c.dims(),
                n
            )));
        }
        Ok(LieAlgebra { names, c })
    }

    /// Builds from sparse `[e_i, e_j] ∋ c e_k` entries with `i < j`; the
    /// `j > i` half is filled by antisymmetry.
    pub fn from_brackets(names: Vec<String>, entries: &[(usize, usize, usize, Rational)]) -> Result<Self> {
        let n = names.len();
        let mut c = Tensor3::cube(n);
        let mut seen = std::collections::HashSet::new();
        for (i, j, k, v) in entries {
            let (i, j, k) = (*i, *j, *k);
            if i >= n || j >= n || k >= n {
                return Err(Error::InvalidAlgebra(format!(
                    "bracket entry ({i},{j},{k}) out of range for dimension {n}"
                )));
            }
            if i >= j {
                return Err(Error::InvalidAlgebra(format!(
                    "bracket entry ({i},{j},{k}) must have i < j"
                )));
            }
            if !seen.insert((i, j, k)) {
                return Err(Error::InvalidAlgebra(format!("duplicate bracket entry ({i},{j},{k})")));
            }
            c[(i, j, k)] = v.clone();
            c[(j, i, k)] = -v.clone();
        }
        Ok(LieAlgebra { names, c })
    }

    /// Builds `c` from a bracket evaluated on basis pairs `i < j`.
    pub fn from_basis_bracket(names: Vec<String>, mut f: impl FnMut(usize, usize) -> Vec<Rational>) -> Self {
        let n = names.len();
        let mut c = Tensor3::cube(n);
        for i in 0..n {
            for j in i + 1..n {
                let v = f(i, j);
                for (k, x) in v.into_iter().enumerate() {
                    if !x.is_zero() {
                        c[(j, i, k)] = -x.clone();
                        c[(i, j, k)] = x;
                    }
                }
            }
        }
        LieAlgebra { names, c }
    }

    /// Same as [`LieAlgebra::from_basis_bracket`] but evaluates every ordered
    /// pair, so non-antisymmetric input is kept verbatim.
    pub fn from_full_bracket(names: Vec<String>, mut f: impl FnMut(usize, usize) -> Vec<Rational>) -> Self {
        let n = names.len();
        let mut c = Tensor3::cube(n);
        for i in 0..n {
            for j in 0..n {
                for (k, x) in f(i, j).into_iter().enumerate() {
                    c[(i, j, k)] = x;
                }
            }
        }
        LieAlgebra { names, c }
    }

    pub fn abelian(n: usize) -> Self {
        LieAlgebra {
            names: default_names(n),
            c: Tensor3::cube(n),
        }
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.dim() {
            return Err(Error::shape("wrong number of basis names"));
        }
        self.names = names;
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn structure(&self) -> &Tensor3 {
        &self.c
    }

    /// `[e_i, e_j]` as a coefficient vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Rational> {
        self.c.fibre(i, j)
    }

    #[allow(clippy::needless_range_loop)]
    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
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
                let xy = &x[i] * &y[j];
                for (k, o) in out.iter_mut().enumerate() {
                    let c = &self.c[(i, j, k)];
                    if !c.is_zero() {
                        *o += &xy * c;
                    }
                }
            }
        }
        out
    }

    /// `ad_{e_i}` with `ad[k][j] = c_{ij}^k`.
    pub fn ad(&self, i: usize) -> Matrix {
        let n = self.dim();
        Matrix::from_fn(n, n, |k, j| self.c[(i, j, k)].clone())
    }

    pub fn ad_of(&self, x: &[Rational]) -> Matrix {
        let n = self.dim();
        Matrix::from_fn(n, n, |k, j| {
            let mut acc = Rational::zero();
            for (i, xi) in x.iter().enumerate() {
                if !xi.is_zero() {
                    acc += xi * &self.c[(i, j, k)];
                }
            }
            acc
        })
    }

    /// Nonzero `(i, j, k, c)` with `i < j`, in lexicographic order.
    pub fn sparse_brackets(&self) -> Vec<(usize, usize, usize, Rational)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in 0..n {
                    let v = &self.c[(i, j, k)];
                    if !v.is_zero() {
                        out.push((i, j, k, v.clone()));
                    }
                }
            }
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        self.c.is_zero()
    }
}

pub fn default_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("X{i}")).collect()
}

/// Toggles a trailing `*`: `X1 ↔ X1*`.
pub fn dual_name(s: &str) -> String {
    match s.strip_suffix('*') {
        Some(base) => base.to_string(),
        None => format!("{s}*"),
    }
}

pub fn dual_names(names: &[String]) -> Vec<String> {
    names.iter().map(|s| dual_name(s)).collect()
}

pub(crate) fn basis_vector(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = num_traits::One::one();
    v
}

/// Checks antisymmetry, then Jacobi; witness is the first violation in
/// lexicographic index order.
pub fn check_lie(g: &LieAlgebra) -> Verdict {
    let n = g.dim();
    let c = g.structure();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let s = &c[(i, j, k)] + &c[(j, i, k)];
                if !s.is_zero() {
                    return Verdict::fail(
                        "antisymmetry [x,y] = -[y,x]",
                        vec![i, j, k],
                        render_pair(g.names(), i, j),
                        render_vector(&g.bracket_basis(i, j), g.names()),
                        render_vector(&g.bracket_basis(j, i).iter().map(|x| -x).collect::<Vec<_>>(), g.names()),
                    );
                }
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let v = jacobi_sum(g, i, j, k);
                if let Some(l) = v.iter().position(|x| !x.is_zero()) {
                    let nm = g.names();
                    return Verdict::fail(
                        "Jacobi [[x,y],z] + [[y,z],x] + [[z,x],y] = 0",
                        vec![i, j, k, l],
                        render_tuple(&[&nm[i], &nm[j], &nm[k]]),
                        render_vector(&v, nm),
                        "0",
                    );
                }
            }
        }
    }
    Verdict::Pass
}

fn jacobi_sum(g: &LieAlgebra, i: usize, j: usize, k: usize) -> Vec<Rational> {
    let n = g.dim();
    let ek = basis_vector(n, k);
    let ei = basis_vector(n, i);
    let ej = basis_vector(n, j);
    let a = g.bracket(&g.bracket_basis(i, j), &ek);
    let b = g.bracket(&g.bracket_basis(j, k), &ei);
    let c = g.bracket(&g.bracket_basis(k, i), &ej);
    a.iter().zip(&b).zip(&c).map(|((x, y), z)| x + y + z).collect()
}

/// Symmetric bilinear form given by its Gram matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BilinearForm {
    pub s: Matrix,
}

impl BilinearForm {
    pub fn new(s: Matrix) -> Self {
        BilinearForm { s }
    }

    pub fn dim(&self) -> usize {
        self.s.rows()
    }

    pub fn eval(&self, x: &[Rational], y: &[Rational]) -> Rational {
        let sy = self.s.mul_vec(y);
        x.iter().zip(&sy).map(|(a, b)| a * b).sum()
    }
}

/// Symmetry, nondegeneracy, then `S([x,y],z) + S(y,[x,z]) = 0`.
pub fn check_invariant_form(g: &LieAlgebra, form: &BilinearForm) -> Result<Verdict> {
    let n = g.dim();
    let s = &form.s;
    if s.rows() != n || s.cols() != n {
        return Err(Error::shape(format!(
            "form is {}x{}, algebra has dimension {n}",
            s.rows(),
            s.cols()
        )));
    }
    for i in 0..n {
        for j in 0..n {
            if s[(i, j)] != s[(j, i)] {
                return Ok(Verdict::fail(
                    "symmetry S(x,y) = S(y,x)",
                    vec![i, j],
                    render_tuple(&[&g.names()[i], &g.names()[j]]),
                    s[(i, j)].to_string(),
                    s[(j, i)].to_string(),
                ));
            }
        }
    }
    let det = s.determinant()?;
    if det.is_zero() {
        return Ok(Verdict::fail("nondegeneracy det S != 0", vec![], "S", "0", "nonzero"));
    }
    for x in 0..n {
        for y in 0..n {
            let xy = g.bracket_basis(x, y);
            for z in 0..n {
                let xz = g.bracket_basis(x, z);
                let lhs = form.eval(&xy, &basis_vector(n, z)) + form.eval(&basis_vector(n, y), &xz);
                if !lhs.is_zero() {
                    let nm = g.names();
                    return Ok(Verdict::fail(
                        "invariance S([x,y],z) + S(y,[x,z]) = 0",
                        vec![x, y, z],
                        render_tuple(&[&nm[x], &nm[y], &nm[z]]),
                        lhs.to_string(),
                        "0",
                    ));
                }
            }
        }
    }
    Ok(Verdict::Pass)
}

/// Cobracket `Δ(e_k) = Σ d[(k, i, j)] e_i ⊗ e_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cobracket {
    d: Tensor3,
}

impl Cobracket {
    pub fn new(d: Tensor3) -> Result<Self> {
        if !d.is_cubic() {
            return Err(Error::shape(format!("cobracket tensor {:?} is not cubic", d.dims())));
        }
        Ok(Cobracket { d })
    }

    pub fn zero(n: usize) -> Self {
        Cobracket { d: Tensor3::cube(n) }
    }

    /// Sparse `[k, i, j, c]` entries with `i < j`, filled by coantisymmetry.
    pub fn from_entries(n: usize, entries: &[(usize, usize, usize, Rational)]) -> Result<Self> {
        let mut d = Tensor3::cube(n);
        let mut seen = std::collections::HashSet::new();
        for (k, i, j, v) in entries {
            let (k, i, j) = (*k, *i, *j);
            if i >= n || j >= n || k >= n {
                return Err(Error::InvalidCobracket(format!(
                    "entry ({k},{i},{j}) out of range for dimension {n}"
                )));
            }
            if i >= j {
                return Err(Error::InvalidCobracket(format!("entry ({k},{i},{j}) must have i < j")));
            }
            if !seen.insert((k, i, j)) {
                return Err(Error::InvalidCobracket(format!("duplicate entry ({k},{i},{j})")));
            }
            d[(k, i, j)] = v.clone();
            d[(k, j, i)] = -v.clone();
        }
        Ok(Cobracket { d })
    }

    /// The cobracket whose dual bracket is `h`: `d_k^{ij} = c_h[(i, j, k)]`.
    pub fn from_dual_bracket(h: &LieAlgebra) -> Self {
        let n = h.dim();
        let c = h.structure();
        Cobracket {
            d: Tensor3::from_fn([n, n, n], |k, i, j| c[(i, j, k)].clone()),
        }
    }

    pub fn dim(&self) -> usize {
        self.d.dims()[0]
    }

    pub fn tensor(&self) -> &Tensor3 {
        &self.d
    }

    /// `Δ(e_k)` as the matrix `D_k[i][j] = d_k^{ij}`.
    pub fn component(&self, k: usize) -> Matrix {
        let n = self.dim();
        Matrix::from_fn(n, n, |i, j| self.d[(k, i, j)].clone())
    }

    /// `Δ(x)` as a matrix.
    pub fn apply(&self, x: &[Rational]) -> Matrix {
        let n = self.dim();
        Matrix::from_fn(n, n, |i, j| {
            let mut acc = Rational::zero();
            for (k, xk) in x.iter().enumerate() {
                if !xk.is_zero() {
                    acc += xk * &self.d[(k, i, j)];
                }
            }
            acc
        })
    }

    pub fn is_zero(&self) -> bool {
        self.d.is_zero()
    }

    /// Nonzero `(k, i, j, c)` with `i < j`.
    pub fn sparse_entries(&self) -> Vec<(usize, usize, usize, Rational)> {
        let n = self.dim();
        let mut out = Vec::new();
        for k in 0..n {
            for i in 0..n {
                for j in i + 1..n {
                    let v = &self.d[(k, i, j)];
                    if !v.is_zero() {
                        out.push((k, i, j, v.clone()));
                    }
                }
            }
        }
        out
    }

    /// Co-Jacobi defect indexed `[k, p, q, r]`: with
    /// `A^{iab}_k = Σ_j d_k^{ij} d_j^{ab}` it is the cyclic sum
    /// `A^{pqr} + A^{qrp} + A^{rpq}`.
    pub fn cojacobi_defect(&self) -> Array {
        let d = Array::from(&self.d);
        let a = contract("kij,jab->kiab", &[&d, &d]).expect("cubic operands");
        let n = self.dim();
        let mut out = Array::zeros(&[n, n, n, n]);
        for k in 0..n {
            for p in 0..n {
                for q in 0..n {
                    for r in 0..n {
                        let v = a.get(&[k, p, q, r]) + a.get(&[k, q, r, p]) + a.get(&[k, r, p, q]);
                        *out.get_mut(&[k, p, q, r]) = v;
                    }
                }
            }
        }
        out
    }

    /// Coantisymmetry, then co-Jacobi. `names` label the basis of `g`.
    pub fn check(&self, names: &[String]) -> Verdict {
        let n = self.dim();
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if !(&self.d[(k, i, j)] + &self.d[(k, j, i)]).is_zero() {
                        return Verdict::fail(
                            "coantisymmetry d_k^{ij} = -d_k^{ji}",
                            vec![k, i, j],
                            format!("Δ({}) at ({},{})", names[k], names[i], names[j]),
                            self.d[(k, i, j)].to_string(),
                            (-self.d[(k, j, i)].clone()).to_string(),
                        );
                    }
                }
            }
        }
        let defect = self.cojacobi_defect();
        if let Some(idx) = defect.first_nonzero() {
            let [k, p, q, r] = idx[..] else { unreachable!() };
            return Verdict::fail(
                "co-Jacobi (Id + ε + ε²)(Id⊗Δ)Δ = 0",
                idx.clone(),
                format!(
                    "Δ({}) at {}",
                    names[k],
                    render_tuple(&[&names[p], &names[q], &names[r]])
                ),
                defect.get(&[k, p, q, r]).to_string(),
                "0",
            );
        }
        Verdict::Pass
    }
}

/// Lie algebra on the dual basis with `[e_i*, e_j*] = Σ d_k^{ij} e_k*`.
pub fn dualize(g: &LieAlgebra, delta: &Cobracket) -> Result<LieAlgebra> {
    if delta.dim() != g.dim() {
        return Err(Error::shape("cobracket dimension differs from algebra dimension"));
    }
    if let Verdict::Fail(w) = delta.check(g.names()) {
        return Err(Error::InvalidCobracket(format!("{} at {}", w.clause, w.at)));
    }
    Ok(dualize_unchecked(g, delta))
}

/// [`dualize`] without validating `Δ`.
pub fn dualize_unchecked(g: &LieAlgebra, delta: &Cobracket) -> LieAlgebra {
    let n = g.dim();
    let d = delta.tensor();
    LieAlgebra {
        names: dual_names(g.names()),
        c: Tensor3::from_fn([n, n, n], |i, j, k| d[(k, i, j)].clone()),
    }
}

/// Left Leibniz identity `[x,[y,z]] = [[x,y],z] + [y,[x,z]]` for an arbitrary
/// product with basis labels `e1..en`.
pub fn check_leibniz(m: &Tensor3) -> Result<Verdict> {
    if !m.is_cubic() {
        return Err(Error::shape(format!("product tensor {:?} is not cubic", m.dims())));
    }
    let names: Vec<String> = (1..=m.dims()[0]).map(|i| format!("e{i}")).collect();
    Ok(check_leibniz_named(m, &names))
}

pub fn check_leibniz_named(m: &Tensor3, names: &[String]) -> Verdict {
    let n = m.dims()[0];
    let prod = |x: &[Rational], y: &[Rational]| -> Vec<Rational> {
        let mut out = vec![Rational::zero(); n];
        for i in 0..n {
            for j in 0..n {
                if x[i].is_zero() || y[j].is_zero() {
                    continue;
                }
                let s = &x[i] * &y[j];
                for (k, o) in out.iter_mut().enumerate() {
                    *o += &s * &m[(i, j, k)];
                }
            }
        }
        out
    };
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let (ex, ey, ez) = (basis_vector(n, x), basis_vector(n, y), basis_vector(n, z));
                let lhs = prod(&ex, &prod(&ey, &ez));
                let r1 = prod(&prod(&ex, &ey), &ez);
                let r2 = prod(&ey, &prod(&ex, &ez));
                let rhs: Vec<Rational> = r1.iter().zip(&r2).map(|(a, b)| a + b).collect();
                if lhs != rhs {
                    return Verdict::fail(
                        "left Leibniz [x,[y,z]] = [[x,y],z] + [y,[x,z]]",
                        vec![x, y, z],
                        render_tuple(&[&names[x], &names[y], &names[z]]),
                        render_vector(&lhs, names),
                        render_vector(&rhs, names),
                    );
                }
            }
        }
    }
    Verdict::Pass
}

/// Concatenates two name lists; on any collision every name gets a `_1` or
/// `_2` suffix by side.
pub(crate) fn merge_names(a: &[String], b: &[String]) -> Vec<String> {
    if a.iter().any(|x| b.contains(x)) {
        a.iter()
            .map(|s| format!("{s}_1"))
            .chain(b.iter().map(|s| format!("{s}_2")))
            .collect()
    } else {
        a.iter().chain(b).cloned().collect()
    }
}

/// Block-diagonal sum. Colliding basis names get `_1` / `_2` suffixes.
pub fn direct_sum(g: &LieAlgebra, h: &LieAlgebra) -> LieAlgebra {
    let (n, m) = (g.dim(), h.dim());
    let names = merge_names(g.names(), h.names());
    let mut c = Tensor3::cube(n + m);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                c[(i, j, k)] = g.structure()[(i, j, k)].clone();
            }
        }
    }
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                c[(n + i, n + j, n + k)] = h.structure()[(i, j, k)].clone();
            }
        }
    }
    LieAlgebra { names, c }
}
