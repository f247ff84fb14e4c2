//! Matched pairs, bicrossed products, Manin triples, Lie/NL/ENL bialgebras,
//! the concomitant and Drinfel'd doubles.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lie::{
    basis_vector, check_invariant_form, dual_names, dualize_unchecked, merge_names, BilinearForm, Cobracket, LieAlgebra,
};
use crate::matrix::Matrix;
use crate::operators::{
    check_equivariant, check_nijenhuis, check_quadratic_enl, deformed_equivariant_unchecked, deformed_general_unchecked,
};
use crate::rational::Rational;
use crate::representations::{check_representation, en_clauses, EnMode, Representation};
use crate::tensor::Array;
use crate::verdict::{render_pair, render_tuple, render_vector, Verdict};

/// `(g, h; ρ, μ)` with optional operators on each side. `rho` acts on `h`
/// (its names are `h`'s), `mu` acts on `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchedPair {
    pub g: LieAlgebra,
    pub h: LieAlgebra,
    pub rho: Representation,
    pub mu: Representation,
    pub eg: Option<Matrix>,
    pub eh: Option<Matrix>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairLevel {
    Lie,
    Enl,
}

impl MatchedPair {
    /// The trivial pair: both actions zero.
    pub fn trivial(g: LieAlgebra, h: LieAlgebra) -> Self {
        let (n, m) = (g.dim(), h.dim());
        let rho = Representation::new(h.names().to_vec(), vec![Matrix::zeros(m, m); n], None).unwrap();
        let mu = Representation::new(g.names().to_vec(), vec![Matrix::zeros(n, n); m], None).unwrap();
        MatchedPair {
            g,
            h,
            rho,
            mu,
            eg: None,
            eh: None,
        }
    }

    pub fn with_operators(mut self, eg: Matrix, eh: Matrix) -> Self {
        self.eg = Some(eg);
        self.eh = Some(eh);
        self
    }
}

fn vsub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn vadd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn check_shapes(mp: &MatchedPair) -> Result<()> {
    let (n, m) = (mp.g.dim(), mp.h.dim());
    if mp.rho.algebra_dim() != n || mp.rho.dim() != m {
        return Err(Error::shape("rho must be a g-action on h"));
    }
    if mp.mu.algebra_dim() != m || mp.mu.dim() != n {
        return Err(Error::shape("mu must be an h-action on g"));
    }
    for (op, d, what) in [(&mp.eg, n, "Eg"), (&mp.eh, m, "Eh")] {
        if let Some(e) = op {
            if e.rows() != d || e.cols() != d {
                return Err(Error::shape(format!(
                    "{what} is {}x{}, expected {d}x{d}",
                    e.rows(),
                    e.cols()
                )));
            }
        }
    }
    Ok(())
}

/// Matched-pair identities on all basis tuples; at `Enl` level also
/// equivariance of both operators and the two EN-representation conditions.
pub fn check_matched_pair(mp: &MatchedPair, level: PairLevel) -> Result<Verdict> {
    check_shapes(mp)?;
    let (g, h) = (&mp.g, &mp.h);
    if level == PairLevel::Enl && (mp.eg.is_none() || mp.eh.is_none()) {
        return Err(Error::MissingOperator(
            if mp.eg.is_none() { "Eg" } else { "Eh" }.to_string(),
        ));
    }
    if let Verdict::Fail(w) = check_representation(g, &mp.rho)? {
        return Err(Error::prereq(format!("rho: {} at {}", w.clause, w.at)));
    }
    if let Verdict::Fail(w) = check_representation(h, &mp.mu)? {
        return Err(Error::prereq(format!("mu: {} at {}", w.clause, w.at)));
    }
    let (n, m) = (g.dim(), h.dim());
    // ρ(x)[ξ,η] = [ρ(x)ξ,η] + [ξ,ρ(x)η] + ρ(μ(η)x)ξ - ρ(μ(ξ)x)η
    for x in 0..n {
        let rx = &mp.rho.rho()[x];
        for xi in 0..m {
            for eta in 0..m {
                let lhs = rx.mul_vec(&h.bracket_basis(xi, eta));
                let a = h.bracket(&rx.col(xi), &basis_vector(m, eta));
                let b = h.bracket(&basis_vector(m, xi), &rx.col(eta));
                let c = mp.rho.rho_of(&mp.mu.rho()[eta].col(x)).col(xi);
                let d = mp.rho.rho_of(&mp.mu.rho()[xi].col(x)).col(eta);
                let rhs = vsub(&vadd(&vadd(&a, &b), &c), &d);
                if lhs != rhs {
                    return Ok(Verdict::fail(
                        "ρ(x)[ξ,η] = [ρ(x)ξ,η] + [ξ,ρ(x)η] + ρ(μ(η)x)ξ - ρ(μ(ξ)x)η",
                        vec![x, xi, eta],
                        render_tuple(&[&g.names()[x], &h.names()[xi], &h.names()[eta]]),
                        render_vector(&lhs, h.names()),
                        render_vector(&rhs, h.names()),
                    ));
                }
            }
        }
    }
    // μ(ξ)[x,y] = [μ(ξ)x,y] + [x,μ(ξ)y] + μ(ρ(y)ξ)x - μ(ρ(x)ξ)y
    for xi in 0..m {
        let mxi = &mp.mu.rho()[xi];
        for x in 0..n {
            for y in 0..n {
                let lhs = mxi.mul_vec(&g.bracket_basis(x, y));
                let a = g.bracket(&mxi.col(x), &basis_vector(n, y));
                let b = g.bracket(&basis_vector(n, x), &mxi.col(y));
                let c = mp.mu.rho_of(&mp.rho.rho()[y].col(xi)).col(x);
                let d = mp.mu.rho_of(&mp.rho.rho()[x].col(xi)).col(y);
                let rhs = vsub(&vadd(&vadd(&a, &b), &c), &d);
                if lhs != rhs {
                    return Ok(Verdict::fail(
                        "μ(ξ)[x,y] = [μ(ξ)x,y] + [x,μ(ξ)y] + μ(ρ(y)ξ)x - μ(ρ(x)ξ)y",
                        vec![xi, x, y],
                        render_tuple(&[&h.names()[xi], &g.names()[x], &g.names()[y]]),
                        render_vector(&lhs, g.names()),
                        render_vector(&rhs, g.names()),
                    ));
                }
            }
        }
    }
    if level == PairLevel::Lie {
        return Ok(Verdict::Pass);
    }
    let eg = mp.eg.as_ref().unwrap();
    let eh = mp.eh.as_ref().unwrap();
    let v = check_equivariant(g, eg)?.context("Eg equivariant on g");
    if !v.is_pass() {
        return Ok(v);
    }
    let v = check_equivariant(h, eh)?.context("Eh equivariant on h");
    if !v.is_pass() {
        return Ok(v);
    }
    let v = en_clauses(g, &mp.rho, eh, eg, EnMode::Equivariant).context("(h; Eh, ρ) EN-representation of (g, Eg)");
    if !v.is_pass() {
        return Ok(v);
    }
    Ok(en_clauses(h, &mp.mu, eg, eh, EnMode::Equivariant).context("(g; Eg, μ) EN-representation of (h, Eh)"))
}

/// Bracket on `g ⊕ h` from a (not necessarily valid) matched pair.
pub fn bicrossed_unchecked(mp: &MatchedPair) -> LieAlgebra {
    let (g, h) = (&mp.g, &mp.h);
    let (n, m) = (g.dim(), h.dim());
    let names = merge_names(g.names(), h.names());
    LieAlgebra::from_basis_bracket(names, |i, j| {
        let mut out = vec![Rational::zero(); n + m];
        if j < n {
            out[..n].clone_from_slice(&g.bracket_basis(i, j));
        } else if i >= n {
            out[n..].clone_from_slice(&h.bracket_basis(i - n, j - n));
        } else {
            // [x, ξ] = ρ(x)ξ - μ(ξ)x
            let a = j - n;
            for (k, v) in mp.mu.rho()[a].col(i).into_iter().enumerate() {
                out[k] = -v;
            }
            for (k, v) in mp.rho.rho()[i].col(a).into_iter().enumerate() {
                out[n + k] = v;
            }
        }
        out
    })
}

/// `g ⋈ h`, with `Eg ⊕ Eh` when the pair passes at ENL level.
pub fn bicrossed_product(mp: &MatchedPair) -> Result<(LieAlgebra, Option<Matrix>)> {
    if let Verdict::Fail(w) =
        check_matched_pair(mp, PairLevel::Lie).map_err(|e| Error::NotMatchedPair(e.to_string()))?
    {
        return Err(Error::NotMatchedPair(format!("{} at {}", w.clause, w.at)));
    }
    let algebra = bicrossed_unchecked(mp);
    let op = match (&mp.eg, &mp.eh) {
        (Some(eg), Some(eh)) if check_matched_pair(mp, PairLevel::Enl)?.is_pass() => Some(eg.block_diag(eh)),
        _ => None,
    };
    Ok((algebra, op))
}

/// Deformed pair on `(g_E, h_ℰ)` with `ρ'(x) = ρ(Ex)`, `μ'(ξ) = μ(ℰξ)`, and
/// the verdict that its bicrossed product is `(g ⋈ h)_{E⊕ℰ}` tensorwise.
pub fn deform_matched_pair(mp: &MatchedPair) -> Result<(MatchedPair, Verdict)> {
    let v = check_matched_pair(mp, PairLevel::Enl).map_err(|e| Error::NotMatchedPair(e.to_string()))?;
    if let Verdict::Fail(w) = v {
        return Err(Error::NotMatchedPair(format!("{} at {}", w.clause, w.at)));
    }
    let eg = mp.eg.clone().unwrap();
    let eh = mp.eh.clone().unwrap();
    let deformed = deform_unchecked(mp, &eg, &eh);
    let lhs = bicrossed_unchecked(&deformed);
    let rhs = deformed_equivariant_unchecked(&bicrossed_unchecked(mp), &eg.block_diag(&eh));
    let verdict = compare_structures(&lhs, &rhs, "g_E ⋈ h_ℰ = (g ⋈ h)_{E⊕ℰ}");
    Ok((deformed, verdict))
}

fn deform_unchecked(mp: &MatchedPair, eg: &Matrix, eh: &Matrix) -> MatchedPair {
    let (n, m) = (mp.g.dim(), mp.h.dim());
    let rho: Vec<Matrix> = (0..n).map(|x| mp.rho.rho_of(&eg.col(x))).collect();
    let mu: Vec<Matrix> = (0..m).map(|xi| mp.mu.rho_of(&eh.col(xi))).collect();
    MatchedPair {
        g: deformed_equivariant_unchecked(&mp.g, eg),
        h: deformed_equivariant_unchecked(&mp.h, eh),
        rho: Representation::new(mp.h.names().to_vec(), rho, None).unwrap(),
        mu: Representation::new(mp.g.names().to_vec(), mu, None).unwrap(),
        eg: Some(eg.clone()),
        eh: Some(eh.clone()),
    }
}

/// Tensor equality of two brackets, with the first differing pair as witness.
pub fn compare_structures(a: &LieAlgebra, b: &LieAlgebra, clause: &str) -> Verdict {
    if a.dim() != b.dim() {
        return Verdict::fail(clause, vec![], "dimension", a.dim().to_string(), b.dim().to_string());
    }
    let n = a.dim();
    for i in 0..n {
        for j in 0..n {
            let (x, y) = (a.bracket_basis(i, j), b.bracket_basis(i, j));
            if x != y {
                return Verdict::fail(
                    clause,
                    vec![i, j],
                    render_pair(a.names(), i, j),
                    render_vector(&x, a.names()),
                    render_vector(&y, a.names()),
                );
            }
        }
    }
    Verdict::Pass
}

/// Quadratic algebra with a candidate pair of complementary subalgebras.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ManinTripleInput {
    pub d: LieAlgebra,
    pub ed: Matrix,
    pub s: BilinearForm,
    pub g_basis: Vec<Vec<Rational>>,
    pub h_basis: Vec<Vec<Rational>>,
}

impl ManinTripleInput {
    /// Canonical blocks `g = span(e_0..e_{n-1})`, `h = span(e_n..e_{2n-1})`.
    pub fn canonical(d: LieAlgebra, ed: Matrix, s: BilinearForm) -> Self {
        let total = d.dim();
        let n = total / 2;
        let g_basis = (0..n).map(|i| basis_vector(total, i)).collect();
        let h_basis = (n..total).map(|i| basis_vector(total, i)).collect();
        ManinTripleInput {
            d,
            ed,
            s,
            g_basis,
            h_basis,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ManinOutcome {
    pub verdict: Verdict,
    /// Restriction of `Ed` to the `g` factor in the given sub-basis.
    pub e_g: Option<Matrix>,
    /// Restriction of `Ed` to the `h` factor.
    pub e_h: Option<Matrix>,
}

fn span_coords(basis: &[Vec<Rational>], v: &[Rational]) -> Option<Vec<Rational>> {
    if basis.is_empty() {
        return v.iter().all(Zero::is_zero).then(Vec::new);
    }
    Matrix::from_columns(v.len(), basis).solve(v)
}

/// Isotropy, bracket closure and `Ed`-stability of each factor, then
/// complementarity.
pub fn check_manin_triple(input: &ManinTripleInput) -> Result<ManinOutcome> {
    let d = &input.d;
    let total = d.dim();
    for v in input.g_basis.iter().chain(&input.h_basis) {
        if v.len() != total {
            return Err(Error::shape(format!(
                "subspace vector of length {}, expected {total}",
                v.len()
            )));
        }
    }
    if let Verdict::Fail(w) = check_invariant_form(d, &input.s)? {
        return Err(Error::prereq(format!("invariant form: {} at {}", w.clause, w.at)));
    }
    check_quadratic_enl(d, &input.ed, &input.s).and_then(|v| match v {
        Verdict::Pass => Ok(()),
        Verdict::Fail(w) => Err(Error::prereq(format!("quadratic ENL: {} at {}", w.clause, w.at))),
    })?;
    let fail = |v| {
        Ok(ManinOutcome {
            verdict: v,
            e_g: None,
            e_h: None,
        })
    };
    let factors = [("g", &input.g_basis), ("h", &input.h_basis)];
    for (label, basis) in factors {
        for (a, x) in basis.iter().enumerate() {
            for (b, y) in basis.iter().enumerate() {
                let s = input.s.eval(x, y);
                if !s.is_zero() {
                    return fail(Verdict::fail(
                        format!("isotropy S({label},{label}) = 0"),
                        vec![a, b],
                        format!("({},{})", render_vector(x, d.names()), render_vector(y, d.names())),
                        s.to_string(),
                        "0",
                    ));
                }
            }
        }
    }
    for (label, basis) in factors {
        for (a, x) in basis.iter().enumerate() {
            for (b, y) in basis.iter().enumerate() {
                let xy = d.bracket(x, y);
                if span_coords(basis, &xy).is_none() {
                    return fail(Verdict::fail(
                        format!("{label} closed under the bracket"),
                        vec![a, b],
                        format!("[{},{}]", render_vector(x, d.names()), render_vector(y, d.names())),
                        render_vector(&xy, d.names()),
                        format!("element of {label}"),
                    ));
                }
            }
        }
    }
    let mut restrictions = Vec::new();
    for (label, basis) in factors {
        let mut cols = Vec::new();
        for (a, x) in basis.iter().enumerate() {
            let ex = input.ed.mul_vec(x);
            match span_coords(basis, &ex) {
                Some(c) => cols.push(c),
                None => {
                    return fail(Verdict::fail(
                        format!("{label} stable under Ed"),
                        vec![a],
                        render_vector(x, d.names()),
                        render_vector(&ex, d.names()),
                        format!("element of {label}"),
                    ))
                }
            }
        }
        restrictions.push(Matrix::from_columns(basis.len(), &cols));
    }
    let all: Vec<Vec<Rational>> = input.g_basis.iter().chain(&input.h_basis).cloned().collect();
    let rank = Matrix::from_columns(total, &all).rank();
    if all.len() != total || rank != total {
        return Err(Error::NotComplementary(format!(
            "{} + {} vectors of rank {rank} in dimension {total}",
            input.g_basis.len(),
            input.h_basis.len()
        )));
    }
    let e_h = restrictions.pop();
    let e_g = restrictions.pop();
    Ok(ManinOutcome {
        verdict: Verdict::Pass,
        e_g,
        e_h,
    })
}

/// `[[0, I], [I, 0]]` on `g ⊕ g*`.
pub fn standard_pairing(n: usize) -> BilinearForm {
    let mut s = Matrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        s[(i, n + i)] = Rational::one();
        s[(n + i, i)] = Rational::one();
    }
    BilinearForm::new(s)
}

/// `(g, Δ)` with an optional operator `E` (or `N`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bialgebra {
    pub g: LieAlgebra,
    pub delta: Cobracket,
    pub e: Option<Matrix>,
}

impl Bialgebra {
    pub fn new(g: LieAlgebra, delta: Cobracket, e: Option<Matrix>) -> Result<Self> {
        if delta.dim() != g.dim() {
            return Err(Error::shape("cobracket dimension differs from algebra dimension"));
        }
        if let Some(e) = &e {
            crate::operators::check_square(&g, e, "operator")?;
        }
        Ok(Bialgebra { g, delta, e })
    }

    /// `g*` with the bracket dual to `Δ`, no validation.
    pub fn dual_algebra(&self) -> LieAlgebra {
        dualize_unchecked(&self.g, &self.delta)
    }

    fn operator(&self) -> Result<&Matrix> {
        self.e.as_ref().ok_or_else(|| Error::MissingOperator("E".into()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BialgebraLevel {
    Lie,
    Nl,
    Enl,
}

/// `Σ_k c_ij^k D_k - (ad_i D_j + D_j ad_iᵀ - ad_j D_i - D_i ad_jᵀ)`, indexed
/// `[i, j, a, b]`. Zero iff `Δ` is a 1-cocycle for the adjoint action.
pub fn cocycle_defect(g: &LieAlgebra, delta: &Cobracket) -> Array {
    let n = g.dim();
    let ads: Vec<Matrix> = (0..n).map(|i| g.ad(i)).collect();
    let ds: Vec<Matrix> = (0..n).map(|k| delta.component(k)).collect();
    let mut out = Array::zeros(&[n, n, n, n]);
    for i in 0..n {
        for j in 0..n {
            let lhs = delta.apply(&g.bracket_basis(i, j));
            let t1 = &(&ads[i] * &ds[j]) + &(&ds[j] * &ads[i].transpose());
            let t2 = &(&ads[j] * &ds[i]) + &(&ds[i] * &ads[j].transpose());
            let defect = &lhs - &(&t1 - &t2);
            for a in 0..n {
                for b in 0..n {
                    *out.get_mut(&[i, j, a, b]) = defect[(a, b)].clone();
                }
            }
        }
    }
    out
}

fn cocycle_verdict(g: &LieAlgebra, delta: &Cobracket, clause: &str) -> Verdict {
    let defect = cocycle_defect(g, delta);
    match defect.first_nonzero() {
        None => Verdict::Pass,
        Some(idx) => {
            let [i, j, a, b] = idx[..] else { unreachable!() };
            let nm = g.names();
            let got = delta.apply(&g.bracket_basis(i, j))[(a, b)].clone();
            let expected = &got - defect.get(&idx);
            Verdict::fail(
                clause,
                idx.clone(),
                format!("Δ([{},{}]) at {}⊗{}", nm[i], nm[j], nm[a], nm[b]),
                got.to_string(),
                expected.to_string(),
            )
        }
    }
}

/// `ι_φ P = φᵀ P + P φ` for `P` a bilinear form on `g*` and `φ` acting on `g*`.
fn iota(phi: &Matrix, p: &Matrix) -> Matrix {
    &(&phi.transpose() * p) + &(p * phi)
}

/// `C(Δ,N)` indexed `[a, b, ξ, η]` over all basis pairs `(e_a, e_b)`.
pub fn concomitant(g: &LieAlgebra, delta: &Cobracket, n: &Matrix) -> Result<Array> {
    crate::operators::check_square(g, n, "operator")?;
    if delta.dim() != g.dim() {
        return Err(Error::shape("cobracket dimension differs from algebra dimension"));
    }
    let d = g.dim();
    let nt = n.transpose();
    let coad: Vec<Matrix> = (0..d).map(|i| -&g.ad(i).transpose()).collect();
    let mut out = Array::zeros(&[d, d, d, d]);
    for a in 0..d {
        for b in 0..d {
            let t1 = iota(&(&nt * &coad[a]), &delta.component(b));
            let t2 = iota(&(&nt * &coad[b]), &delta.component(a));
            let t3 = iota(&coad[a], &delta.apply(&n.col(b)));
            let t4 = iota(&coad[b], &delta.apply(&n.col(a)));
            let c = &(&(&t1 - &t2) - &t3) + &t4;
            for x in 0..d {
                for y in 0..d {
                    *out.get_mut(&[a, b, x, y]) = c[(x, y)].clone();
                }
            }
        }
    }
    Ok(out)
}

/// How the concomitant behaves under the two readings of its domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConcomitantReading {
    /// Vanishes on every basis pair.
    pub all_pairs: bool,
    /// Vanishes on every basis pair with nonzero bracket.
    pub bracket_pairs: bool,
}

impl ConcomitantReading {
    /// The weaker reading passes while the stronger fails.
    pub fn flagged(&self) -> bool {
        self.bracket_pairs && !self.all_pairs
    }
}

pub fn concomitant_reading(g: &LieAlgebra, c: &Array) -> ConcomitantReading {
    let d = g.dim();
    let mut all_pairs = true;
    let mut bracket_pairs = true;
    for a in 0..d {
        for b in 0..d {
            let nonzero = (0..d).any(|x| (0..d).any(|y| !c.get(&[a, b, x, y]).is_zero()));
            if nonzero {
                all_pairs = false;
                if g.bracket_basis(a, b).iter().any(|v| !v.is_zero()) {
                    bracket_pairs = false;
                }
            }
        }
    }
    ConcomitantReading {
        all_pairs,
        bracket_pairs,
    }
}

fn concomitant_verdict(b: &Bialgebra, n: &Matrix) -> Result<Verdict> {
    let c = concomitant(&b.g, &b.delta, n)?;
    Ok(match c.first_nonzero() {
        None => Verdict::Pass,
        Some(idx) => {
            let nm = b.g.names();
            let dn = dual_names(nm);
            Verdict::fail(
                "concomitant C(Δ,N) = 0",
                idx.clone(),
                format!("({},{};{},{})", nm[idx[0]], nm[idx[1]], dn[idx[2]], dn[idx[3]]),
                c.get(&idx).to_string(),
                "0",
            )
        }
    })
}

/// Level-specific bialgebra check, clauses in a fixed order.
///
/// `lie`: `Δ` valid, then 1-cocycle. `nl`: `lie`, `N` and `N*` Nijenhuis,
/// `Δ` a cocycle for `[·,·]_N`, concomitant zero. `enl`: `lie`, `E*`
/// equivariant on `g*`, `E` equivariant on `g`, and the resulting `nl` pass.
pub fn check_bialgebra(b: &Bialgebra, level: BialgebraLevel) -> Result<Verdict> {
    let g = &b.g;
    let v = b.delta.check(g.names()).context("cobracket");
    if !v.is_pass() {
        return Ok(v);
    }
    let v = cocycle_verdict(g, &b.delta, "1-cocycle Δ([x,y]) = ad_x·Δ(y) - ad_y·Δ(x)");
    if !v.is_pass() || level == BialgebraLevel::Lie {
        return Ok(v);
    }
    let e = b.operator()?;
    match level {
        BialgebraLevel::Lie => unreachable!(),
        BialgebraLevel::Nl => nl_clauses(b, e),
        BialgebraLevel::Enl => {
            let gs = b.dual_algebra();
            let v = check_equivariant(&gs, &e.transpose())?.context("E* equivariant on g*");
            if !v.is_pass() {
                return Ok(v);
            }
            let v = check_equivariant(g, e)?.context("E equivariant on g");
            if !v.is_pass() {
                return Ok(v);
            }
            Ok(nl_clauses(b, e)?.context("ENL implies NL"))
        }
    }
}

fn nl_clauses(b: &Bialgebra, n: &Matrix) -> Result<Verdict> {
    let g = &b.g;
    let v = check_nijenhuis(g, n)?.context("N Nijenhuis on g");
    if !v.is_pass() {
        return Ok(v);
    }
    let gs = b.dual_algebra();
    let v = check_nijenhuis(&gs, &n.transpose())?.context("N* Nijenhuis on g*");
    if !v.is_pass() {
        return Ok(v);
    }
    let gn = deformed_general_unchecked(g, n);
    let v = cocycle_verdict(&gn, &b.delta, "1-cocycle for [·,·]_N");
    if !v.is_pass() {
        return Ok(v);
    }
    concomitant_verdict(b, n)
}

/// The matched pair `(g, g*; ad*, 𝔞𝔡*)` of a bialgebra, with `(E, Eᵀ)` when
/// an operator is present.
pub fn bialgebra_matched_pair(b: &Bialgebra) -> MatchedPair {
    let gs = b.dual_algebra();
    let rho = Representation::coadjoint(&b.g);
    let mu = Representation::coadjoint(&gs);
    MatchedPair {
        g: b.g.clone(),
        h: gs,
        rho,
        mu,
        eg: b.e.clone(),
        eh: b.e.as_ref().map(Matrix::transpose),
    }
}

/// Drinfel'd double `g ⋈ g*`: the algebra, `E ⊕ Eᵀ` when the bialgebra is
/// ENL, and the standard pairing.
pub fn drinfeld_double(b: &Bialgebra) -> Result<(LieAlgebra, Option<Matrix>, BilinearForm)> {
    let v = check_bialgebra(b, BialgebraLevel::Lie)?;
    if let Verdict::Fail(w) = v {
        return Err(Error::NotBialgebra(format!("{} at {}", w.clause, w.at)));
    }
    let g = &b.g;
    let n = g.dim();
    let gs = b.dual_algebra();
    let d = b.delta.tensor();
    let c = g.structure();
    let names = merge_names(g.names(), gs.names());
    let double = LieAlgebra::from_basis_bracket(names, |i, j| {
        let mut out = vec![Rational::zero(); 2 * n];
        if j < n {
            out[..n].clone_from_slice(&g.bracket_basis(i, j));
        } else if i >= n {
            out[n..].clone_from_slice(&gs.bracket_basis(i - n, j - n));
        } else {
            // [e_i, ξ_a] = -Σ_b c_ib^a ξ_b + Σ_b d_i^{ab} e_b
            let a = j - n;
            for bb in 0..n {
                out[n + bb] = -c[(i, bb, a)].clone();
                out[bb] = d[(i, a, bb)].clone();
            }
        }
        out
    });
    let op = match &b.e {
        Some(e) if check_bialgebra(b, BialgebraLevel::Enl)?.is_pass() => Some(e.block_diag(&e.transpose())),
        _ => None,
    };
    Ok((double, op, standard_pairing(n)))
}

/// Canonical `r = Σ e_i ⊗ ξ_i` on the double, the split dual bracket on
/// `𝔡*`, and whether `𝔈ᵀ` is equivariant on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiTriangular {
    pub double: LieAlgebra,
    pub operator: Matrix,
    pub r: Matrix,
    pub dual: LieAlgebra,
    pub verdict: Verdict,
}

pub fn double_quasitriangular(b: &Bialgebra) -> Result<QuasiTriangular> {
    let (double, op, _) = drinfeld_double(b)?;
    let op = op.ok_or_else(|| Error::NotEnlBialgebra("double carries no ENL operator".into()))?;
    let n = b.g.dim();
    let mut r = Matrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        r[(i, n + i)] = Rational::one();
    }
    let gs = b.dual_algebra();
    let g = &b.g;
    // Slots 0..n pair with g (so carry g*), slots n..2n carry g.
    let dual = LieAlgebra::from_basis_bracket(dual_names(double.names()), |i, j| {
        let mut out = vec![Rational::zero(); 2 * n];
        if j < n {
            for (k, v) in gs.bracket_basis(i, j).into_iter().enumerate() {
                out[k] = -v;
            }
        } else if i >= n {
            out[n..].clone_from_slice(&g.bracket_basis(i - n, j - n));
        }
        out
    });
    let verdict = check_equivariant(&dual, &op.transpose())?.context("𝔈ᵀ equivariant on 𝔡*_r");
    Ok(QuasiTriangular {
        double,
        operator: op,
        r,
        dual,
        verdict,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HierarchyLevel {
    /// Requires an ENL bialgebra; level `k` uses `[E^k x, y]`.
    Enl,
    /// Requires only a Nijenhuis `N`; level `k` uses the `N^k`-deformed bracket.
    Lie,
}

/// Per-level Lie-bialgebra verdicts for `k = 1..=depth`.
pub fn bialgebra_hierarchy(b: &Bialgebra, depth: usize, level: HierarchyLevel) -> Result<Vec<Verdict>> {
    let e = b.operator()?.clone();
    match level {
        HierarchyLevel::Enl => {
            if let Verdict::Fail(w) = check_bialgebra(b, BialgebraLevel::Enl)? {
                return Err(Error::NotEnlBialgebra(format!("{} at {}", w.clause, w.at)));
            }
        }
        HierarchyLevel::Lie => {
            if let Verdict::Fail(w) = check_nijenhuis(&b.g, &e)? {
                return Err(Error::NotNijenhuis(format!("torsion at {} is {}", w.at, w.got)));
            }
        }
    }
    let mut out = Vec::with_capacity(depth);
    let mut ek = e.clone();
    for _ in 0..depth {
        let gk = match level {
            HierarchyLevel::Enl => deformed_equivariant_unchecked(&b.g, &ek),
            HierarchyLevel::Lie => deformed_general_unchecked(&b.g, &ek),
        };
        let level_b = Bialgebra {
            g: gk,
            delta: b.delta.clone(),
            e: None,
        };
        out.push(check_bialgebra(&level_b, BialgebraLevel::Lie)?);
        ek = &ek * &e;
    }
    Ok(out)
}
