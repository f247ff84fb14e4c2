//! Tensors `r ∈ g⊗g`: Schouten bracket, EN r-matrices, coboundary
//! cobrackets, factorizability, the Rota–Baxter bridge and relative
//! Rota–Baxter operators.
//!
//! An r-matrix is stored as the square matrix `r[(i, j)] = r^{ij}`.

use num_traits::Zero;

use crate::doubles::MatchedPair;
use crate::error::{Error, Result};
use crate::lie::BilinearForm;
use crate::lie::{Cobracket, LieAlgebra};
use crate::matrix::Matrix;
use crate::operators::{
    check_enl_rb, check_equivariant, check_quadratic_enl, check_rota_baxter, check_square, QuadraticEnlRb,
};
use crate::rational::Rational;
use crate::representations::{check_representation, en_clauses, semidirect_unchecked, EnMode, Representation};
use crate::tensor::{contract, Array, Tensor3};
use crate::verdict::{render_pair, render_vector, Verdict};

/// `⟦r,r⟧ = [r12,r13] + [r12,r23] + [r13,r23]` as a `g⊗g⊗g` tensor.
pub fn schouten(g: &LieAlgebra, r: &Matrix) -> Result<Tensor3> {
    check_square(g, r, "r-matrix")?;
    let ra = Array::from(r);
    let c = Array::from(g.structure());
    let a = contract("ib,jc,ija->abc", &[&ra, &ra, &c])?;
    let b = contract("ai,jc,ijb->abc", &[&ra, &ra, &c])?;
    let cc = contract("ai,bj,ijc->abc", &[&ra, &ra, &c])?;
    Tensor3::try_from(&(&a + &b) + &cc)
}

fn schouten_verdict(g: &LieAlgebra, r: &Matrix) -> Result<Verdict> {
    let s = schouten(g, r)?;
    Ok(match s.first_nonzero() {
        None => Verdict::Pass,
        Some((a, b, c)) => {
            let nm = g.names();
            Verdict::fail(
                "CYBE ⟦r,r⟧ = 0",
                vec![a, b, c],
                format!("{}⊗{}⊗{}", nm[a], nm[b], nm[c]),
                s[(a, b, c)].to_string(),
                "0",
            )
        }
    })
}

/// `(Id⊗E - E⊗Id)(r) = 0`, i.e. `E·r = r·Eᵀ`.
fn commutes_verdict(g: &LieAlgebra, r: &Matrix, e: &Matrix) -> Verdict {
    let er = e * r;
    let ret = r * &e.transpose();
    let n = g.dim();
    for i in 0..n {
        for j in 0..n {
            if er[(i, j)] != ret[(i, j)] {
                let nm = g.names();
                return Verdict::fail(
                    "(Id⊗E - E⊗Id)(r) = 0",
                    vec![i, j],
                    format!("{}⊗{}", nm[i], nm[j]),
                    ret[(i, j)].to_string(),
                    er[(i, j)].to_string(),
                );
            }
        }
    }
    Verdict::Pass
}

/// Both EN r-matrix clauses, without the equivariance prerequisite.
pub fn en_rmatrix_clauses(g: &LieAlgebra, r: &Matrix, e: &Matrix) -> Result<Verdict> {
    let v = schouten_verdict(g, r)?;
    if !v.is_pass() {
        return Ok(v);
    }
    Ok(commutes_verdict(g, r, e))
}

/// `⟦r,r⟧ = 0` and `E·r = r·Eᵀ`, for equivariant `E`.
pub fn check_en_rmatrix(g: &LieAlgebra, r: &Matrix, e: &Matrix) -> Result<Verdict> {
    check_square(g, r, "r-matrix")?;
    if let Verdict::Fail(w) = check_equivariant(g, e)? {
        return Err(Error::prereq(format!("E not equivariant: {} at {}", w.clause, w.at)));
    }
    en_rmatrix_clauses(g, r, e)
}

/// `⟦r,r⟧ = 0` and the weaker identity
/// `(ad_{Ex}⊗Id + Id⊗ad_{Ex})(r) = (E⊗Id)(ad_x⊗Id + Id⊗ad_x)(r)`.
pub fn check_en_rmatrix_weak(g: &LieAlgebra, r: &Matrix, e: &Matrix) -> Result<Verdict> {
    check_square(g, r, "r-matrix")?;
    if let Verdict::Fail(w) = check_equivariant(g, e)? {
        return Err(Error::prereq(format!("E not equivariant: {} at {}", w.clause, w.at)));
    }
    let v = schouten_verdict(g, r)?;
    if !v.is_pass() {
        return Ok(v);
    }
    for x in 0..g.dim() {
        let ad = g.ad(x);
        let adex = g.ad_of(&e.col(x));
        let lhs = &(&adex * r) + &(r * &adex.transpose());
        let rhs = e * &(&(&ad * r) + &(r * &ad.transpose()));
        if lhs != rhs {
            return Ok(Verdict::fail(
                "(ad_Ex⊗Id + Id⊗ad_Ex)(r) = (E⊗Id)(ad_x⊗Id + Id⊗ad_x)(r)",
                vec![x],
                g.names()[x].clone(),
                lhs.to_string(),
                rhs.to_string(),
            ));
        }
    }
    Ok(Verdict::Pass)
}

/// Whether `(ad_x⊗Id + Id⊗ad_x)(r + rᵀ) = 0` for every basis `x`.
pub fn symmetric_part_verdict(g: &LieAlgebra, r: &Matrix) -> Verdict {
    let sym = r + &r.transpose();
    for x in 0..g.dim() {
        let ad = g.ad(x);
        let m = &(&ad * &sym) + &(&sym * &ad.transpose());
        if !m.is_zero() {
            return Verdict::fail(
                "(ad_x⊗Id + Id⊗ad_x)(r + σ(r)) = 0",
                vec![x],
                g.names()[x].clone(),
                m.to_string(),
                "0",
            );
        }
    }
    Verdict::Pass
}

/// `Δ_r(e_k) = (ad_k⊗Id + Id⊗ad_k)(r)`.
pub fn cobracket_from_r(g: &LieAlgebra, r: &Matrix) -> Result<Cobracket> {
    check_square(g, r, "r-matrix")?;
    if let Verdict::Fail(w) = symmetric_part_verdict(g, r) {
        return Err(Error::SymmetricPartNotInvariant(format!("at {}", w.at)));
    }
    Ok(cobracket_from_r_unchecked(g, r))
}

pub fn cobracket_from_r_unchecked(g: &LieAlgebra, r: &Matrix) -> Cobracket {
    let n = g.dim();
    let mut d = Tensor3::cube(n);
    for k in 0..n {
        let ad = g.ad(k);
        let dk = &(&ad * r) + &(r * &ad.transpose());
        for i in 0..n {
            for j in 0..n {
                d[(k, i, j)] = dk[(i, j)].clone();
            }
        }
    }
    Cobracket::new(d).expect("cubic")
}

/// `r_+ : g* → g`, `r_+(ξ) = r(ξ, ·)`; as a matrix this is `rᵀ`.
pub fn r_plus(r: &Matrix) -> Matrix {
    r.transpose()
}

/// `r_- : g* → g`, `⟨η, r_-ξ⟩ = -r(η, ξ)`; as a matrix this is `-r`.
pub fn r_minus(r: &Matrix) -> Matrix {
    -r
}

/// `g*_r` with `[ξ,η]_r = ad*_{r_+ξ}η - ad*_{r_-η}ξ`, and the
/// factorizability verdict for `I = r_+ - r_-`.
pub fn dual_bracket_from_r(g: &LieAlgebra, r: &Matrix) -> Result<(LieAlgebra, Verdict)> {
    check_square(g, r, "r-matrix")?;
    if let Verdict::Fail(w) = schouten_verdict(g, r)? {
        return Err(Error::prereq(format!("CYBE fails at {}", w.at)));
    }
    if let Verdict::Fail(w) = symmetric_part_verdict(g, r) {
        return Err(Error::prereq(format!("symmetric part not ad-invariant at {}", w.at)));
    }
    let n = g.dim();
    let rp = r_plus(r);
    let rm = r_minus(r);
    let coad = |x: &[Rational]| -&g.ad_of(x).transpose();
    let names = crate::lie::dual_names(g.names());
    let dual = LieAlgebra::from_full_bracket(names, |a, b| {
        let t1 = coad(&rp.col(a)).col(b);
        let t2 = coad(&rm.col(b)).col(a);
        t1.iter().zip(&t2).map(|(x, y)| x - y).collect()
    });
    let i_map = &rp - &rm;
    let verdict = if i_map.determinant()?.is_zero() {
        Verdict::fail(
            "factorizable: I = r_+ - r_- nondegenerate",
            vec![],
            "I",
            "det 0",
            "nonzero",
        )
    } else {
        let mut v = Verdict::Pass;
        for x in 0..n {
            let ad = g.ad(x);
            let lhs = &i_map * &(-&ad.transpose());
            let rhs = &ad * &i_map;
            if lhs != rhs {
                v = Verdict::fail(
                    "factorizable: I∘ad*_x = ad_x∘I",
                    vec![x],
                    g.names()[x].clone(),
                    lhs.to_string(),
                    rhs.to_string(),
                );
                break;
            }
        }
        v
    };
    Ok((dual, verdict))
}

/// `r^{B,S}` with `r_+ = (1/λ)(B + λ Id)∘(S♯)⁻¹`.
pub fn rb_to_rmatrix(t: &QuadraticEnlRb) -> Result<Matrix> {
    match check_enl_rb(t)? {
        Verdict::Pass => {}
        Verdict::Fail(w) => return Err(Error::prereq(format!("{} at {}", w.clause, w.at))),
    }
    let n = t.g.dim();
    let s_inv = t.s.s.inverse()?;
    let shifted = &t.b + &Matrix::scalar(n, t.weight.clone());
    let rp = (&shifted * &s_inv).scale(&t.weight.recip());
    Ok(rp.transpose())
}

/// Relative Rota–Baxter operator `K : W → g` for a representation of `g` on `W`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelativeRb {
    pub rep: Representation,
    /// `dim g × dim W`.
    pub k: Matrix,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RelLevel {
    Plain,
    En,
}

fn relrb_shapes(g: &LieAlgebra, rb: &RelativeRb) -> Result<()> {
    if rb.rep.algebra_dim() != g.dim() {
        return Err(Error::shape("representation does not act on this algebra"));
    }
    if rb.k.rows() != g.dim() || rb.k.cols() != rb.rep.dim() {
        return Err(Error::shape(format!(
            "K is {}x{}, expected {}x{}",
            rb.k.rows(),
            rb.k.cols(),
            g.dim(),
            rb.rep.dim()
        )));
    }
    Ok(())
}

/// `[u,v]_K = ρ(Ku)v - ρ(Kv)u` on basis vectors.
fn k_bracket(rb: &RelativeRb, u: usize, v: usize) -> Vec<Rational> {
    let a = rb.rep.rho_of(&rb.k.col(u)).col(v);
    let b = rb.rep.rho_of(&rb.k.col(v)).col(u);
    a.iter().zip(&b).map(|(x, y)| x - y).collect()
}

/// O-operator identity `[Ku,Kv] = K(ρ(Ku)v - ρ(Kv)u)`; at `En` level also
/// `E∘K = K∘T`.
pub fn check_relative_rb(g: &LieAlgebra, rb: &RelativeRb, e: &Matrix, level: RelLevel) -> Result<Verdict> {
    relrb_shapes(g, rb)?;
    check_square(g, e, "operator")?;
    if let Verdict::Fail(w) = check_representation(g, &rb.rep)? {
        return Err(Error::prereq(format!("not a representation: {} at {}", w.clause, w.at)));
    }
    if level == RelLevel::En {
        let t = rb.rep.t().ok_or(Error::MissingT)?;
        if let Verdict::Fail(w) = check_equivariant(g, e)? {
            return Err(Error::prereq(format!("E not equivariant: {} at {}", w.clause, w.at)));
        }
        if let Verdict::Fail(w) = en_clauses(g, &rb.rep, t, e, EnMode::Equivariant) {
            return Err(Error::prereq(format!(
                "not an EN-representation: {} at {}",
                w.clause, w.at
            )));
        }
    }
    Ok(relrb_clauses(g, rb, e, level))
}

fn relrb_clauses(g: &LieAlgebra, rb: &RelativeRb, e: &Matrix, level: RelLevel) -> Verdict {
    let m = rb.rep.dim();
    for u in 0..m {
        for v in 0..m {
            let lhs = g.bracket(&rb.k.col(u), &rb.k.col(v));
            let rhs = rb.k.mul_vec(&k_bracket(rb, u, v));
            if lhs != rhs {
                return Verdict::fail(
                    "[Ku,Kv] = K(ρ(Ku)v - ρ(Kv)u)",
                    vec![u, v],
                    render_pair(rb.rep.names(), u, v),
                    render_vector(&lhs, g.names()),
                    render_vector(&rhs, g.names()),
                );
            }
        }
    }
    if level == RelLevel::En {
        let t = rb.rep.t().expect("checked");
        let ek = e * &rb.k;
        let kt = &rb.k * t;
        for u in 0..m {
            let (a, b) = (ek.col(u), kt.col(u));
            if a != b {
                return Verdict::fail(
                    "E∘K = K∘T",
                    vec![u],
                    rb.rep.names()[u].clone(),
                    render_vector(&a, g.names()),
                    render_vector(&b, g.names()),
                );
            }
        }
    }
    Verdict::Pass
}

fn require_en(g: &LieAlgebra, rb: &RelativeRb, e: &Matrix) -> Result<()> {
    match check_relative_rb(g, rb, e, RelLevel::En)? {
        Verdict::Pass => Ok(()),
        Verdict::Fail(w) => Err(Error::prereq(format!("{} at {}", w.clause, w.at))),
    }
}

/// Descendent bracket on `W`, without checks.
pub fn descendent_algebra(rb: &RelativeRb) -> LieAlgebra {
    LieAlgebra::from_basis_bracket(rb.rep.names().to_vec(), |u, v| k_bracket(rb, u, v))
}

/// `(W, [·,·]_K, T)` and the verdict that `K` is an EN-homomorphism into `(g, E)`.
pub fn descendent_enl(g: &LieAlgebra, rb: &RelativeRb, e: &Matrix) -> Result<(LieAlgebra, Matrix, Verdict)> {
    require_en(g, rb, e)?;
    let w = descendent_algebra(rb);
    let t = rb.rep.t().expect("checked").clone();
    let m = w.dim();
    let mut hom = Verdict::Pass;
    'outer: for u in 0..m {
        for v in 0..m {
            let lhs = rb.k.mul_vec(&w.bracket_basis(u, v));
            let rhs = g.bracket(&rb.k.col(u), &rb.k.col(v));
            if lhs != rhs {
                hom = Verdict::fail(
                    "K[u,v]_K = [Ku,Kv]",
                    vec![u, v],
                    render_pair(w.names(), u, v),
                    render_vector(&lhs, g.names()),
                    render_vector(&rhs, g.names()),
                );
                break 'outer;
            }
        }
    }
    if hom.is_pass() && (e * &rb.k) != (&rb.k * &t) {
        hom = Verdict::fail(
            "E∘K = K∘T",
            vec![],
            "K",
            (e * &rb.k).to_string(),
            (&rb.k * &t).to_string(),
        );
    }
    Ok((w, t, hom))
}

/// `(g, W_K; ρ, μ)` with `μ(u)x = K(ρ(x)u) - [x, Ku]` and operators `(E, T)`.
pub fn matched_pair_from_relrb(g: &LieAlgebra, rb: &RelativeRb, e: &Matrix) -> Result<MatchedPair> {
    require_en(g, rb, e)?;
    let n = g.dim();
    let m = rb.rep.dim();
    let h = descendent_algebra(rb);
    let t = rb.rep.t().expect("checked").clone();
    let mu: Vec<Matrix> = (0..m)
        .map(|u| {
            let ku = rb.k.col(u);
            let ad_ku = g.ad_of(&ku);
            let cols: Vec<Vec<Rational>> = (0..n)
                .map(|x| {
                    let a = rb.k.mul_vec(&rb.rep.rho()[x].col(u));
                    // [x, Ku] = -ad_{Ku} x
                    let b = ad_ku.col(x);
                    a.iter().zip(&b).map(|(p, q)| p + q).collect()
                })
                .collect();
            Matrix::from_columns(n, &cols)
        })
        .collect();
    Ok(MatchedPair {
        g: g.clone(),
        h,
        rho: rb.rep.clone().without_t(),
        mu: Representation::new(g.names().to_vec(), mu, None)?,
        eg: Some(e.clone()),
        eh: Some(t),
    })
}

/// The semidirect double `g ⋉_{ρ*} W*`, `Ê = E ⊕ Tᵀ`, the skew tensor
/// `r_K = K̄ - σ(K̄)` and whether it is an EN r-matrix there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lift {
    pub double: LieAlgebra,
    pub e_hat: Matrix,
    pub r: Matrix,
    pub verdict: Verdict,
}

pub fn lift_r_from_relrb(g: &LieAlgebra, rb: &RelativeRb, e: &Matrix) -> Result<Lift> {
    require_en(g, rb, e)?;
    let n = g.dim();
    let m = rb.rep.dim();
    let dual = rb.rep.dual();
    let double = semidirect_unchecked(g, &dual);
    let t = rb.rep.t().expect("checked");
    let e_hat = e.block_diag(&t.transpose());
    let mut r = Matrix::zeros(n + m, n + m);
    for i in 0..n {
        for a in 0..m {
            r[(i, n + a)] = rb.k[(i, a)].clone();
            r[(n + a, i)] = -rb.k[(i, a)].clone();
        }
    }
    let verdict = check_equivariant(&double, &e_hat)?
        .context("Ê equivariant on the double")
        .and_then(|| en_rmatrix_clauses(&double, &r, &e_hat).expect("square"));
    Ok(Lift {
        double,
        e_hat,
        r,
        verdict,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    KToB,
    BToK,
}

/// `B = K∘S♯` (or `K = B∘(S♯)⁻¹`) and the verdict that "K is an EN relative
/// RB operator on the coadjoint representation with `T = Eᵀ`" agrees with
/// "B is weight-0 Rota–Baxter commuting with E".
pub fn coadjoint_correspondence(
    g: &LieAlgebra,
    e: &Matrix,
    form: &BilinearForm,
    input: &Matrix,
    direction: Direction,
) -> Result<(Matrix, Verdict)> {
    check_square(g, input, "input")?;
    match check_quadratic_enl(g, e, form)? {
        Verdict::Pass => {}
        Verdict::Fail(w) => return Err(Error::prereq(format!("quadratic ENL: {} at {}", w.clause, w.at))),
    }
    let s = &form.s;
    let (k, b, out) = match direction {
        Direction::KToB => {
            let b = input * s;
            (input.clone(), b.clone(), b)
        }
        Direction::BToK => {
            let k = input * &s.inverse()?;
            (k.clone(), input.clone(), k)
        }
    };
    let rb = RelativeRb {
        rep: Representation::coadjoint(g).with_t(e.transpose())?,
        k,
    };
    let rel = check_relative_rb(g, &rb, e, RelLevel::En)?.is_pass();
    let rota = check_rota_baxter(g, &b, &Rational::zero())?.is_pass() && (e * &b) == (&b * e);
    let verdict = if rel == rota {
        Verdict::Pass
    } else {
        Verdict::fail(
            "relative RB on g* ⇔ weight-0 RB commuting with E",
            vec![],
            "K, B",
            format!("relative RB {rel}"),
            format!("Rota-Baxter {rota}"),
        )
    };
    Ok((out, verdict))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalogue::*;
    use crate::doubles::{check_bialgebra, Bialgebra, BialgebraLevel};
    use crate::lie::{check_lie, dualize};
    use crate::rational::q;

    fn wedge12() -> Matrix {
        Matrix::from_rows(vec![vec![q(0), q(1)], vec![q(-1), q(0)]]).unwrap()
    }

    #[test]
    fn aff1_wedge_solves_cybe() {
        assert!(schouten(&aff1(), &wedge12()).unwrap().is_zero());
        assert!(schouten(&aff1(), &Matrix::zeros(2, 2)).unwrap().is_zero());
        let x1x2 = Matrix::from_rows(vec![vec![q(0), q(1)], vec![q(0), q(0)]]).unwrap();
        assert!(!schouten(&aff1(), &x1x2).unwrap().is_zero());
    }

    #[test]
    fn en_rmatrix_scalar_and_zero() {
        let g = aff1();
        assert!(check_en_rmatrix(&g, &wedge12(), &Matrix::scalar(2, q(5)))
            .unwrap()
            .is_pass());
        assert!(check_en_rmatrix(&g, &Matrix::zeros(2, 2), &Matrix::identity(2))
            .unwrap()
            .is_pass());
        assert!(matches!(
            check_en_rmatrix(&g, &wedge12(), &n0()),
            Err(Error::PrereqFailed(_))
        ));
        // The commuting clause on its own.
        let v = en_rmatrix_clauses(&g, &wedge12(), &n0()).unwrap();
        assert!(v.witness().unwrap().clause.starts_with("(Id⊗E"));
    }

    #[test]
    fn aff1_coboundary() {
        let g = aff1();
        let d = cobracket_from_r(&g, &wedge12()).unwrap();
        assert_eq!(d.sparse_entries(), vec![(0, 0, 1, q(1))]);
        let (dual, fact) = dual_bracket_from_r(&g, &wedge12()).unwrap();
        assert_eq!(dual.structure(), dualize(&g, &d).unwrap().structure());
        assert!(!fact.is_pass());
    }

    #[test]
    fn sl2_pipeline() {
        let t = QuadraticEnlRb {
            g: sl2(),
            b: sl2_rb(),
            s: sl2_form(),
            e: Matrix::identity(3),
            weight: q(1),
        };
        let r = rb_to_rmatrix(&t).unwrap();
        assert!(schouten(&t.g, &r).unwrap().is_zero());
        assert!(symmetric_part_verdict(&t.g, &r).is_pass());
        let d = cobracket_from_r(&t.g, &r).unwrap();
        let b = Bialgebra::new(t.g.clone(), d, Some(t.e.clone())).unwrap();
        assert!(check_bialgebra(&b, BialgebraLevel::Enl).unwrap().is_pass());
        let (dual, fact) = dual_bracket_from_r(&t.g, &r).unwrap();
        assert!(check_lie(&dual).is_pass());
        assert!(fact.is_pass(), "{fact}");
    }

    #[test]
    fn casimir_gives_zero_cobracket() {
        let g = sl2();
        let casimir = sl2_form().s.inverse().unwrap();
        assert!(cobracket_from_r(&g, &casimir).unwrap().is_zero());
        let bad = Matrix::diagonal(&[q(1), q(0), q(0)]);
        assert!(matches!(
            cobracket_from_r(&g, &bad),
            Err(Error::SymmetricPartNotInvariant(_))
        ));
    }

    #[test]
    fn zero_relative_rb() {
        let g = aff1();
        let rep = Representation::coadjoint(&g).with_t(Matrix::identity(2)).unwrap();
        let rb = RelativeRb {
            rep,
            k: Matrix::zeros(2, 2),
        };
        let e = Matrix::identity(2);
        assert!(check_relative_rb(&g, &rb, &e, RelLevel::Plain).unwrap().is_pass());
        assert!(check_relative_rb(&g, &rb, &e, RelLevel::En).unwrap().is_pass());
        let (w, _, hom) = descendent_enl(&g, &rb, &e).unwrap();
        assert!(w.is_abelian() && hom.is_pass());
        let lift = lift_r_from_relrb(&g, &rb, &e).unwrap();
        assert!(lift.r.is_zero() && lift.verdict.is_pass());
    }

    #[test]
    fn r_plus_of_aff1_wedge() {
        let g = aff1();
        let e = Matrix::identity(2);
        let rep = Representation::coadjoint(&g).with_t(e.transpose()).unwrap();
        let rb = RelativeRb {
            rep,
            k: r_plus(&wedge12()),
        };
        assert!(check_relative_rb(&g, &rb, &e, RelLevel::En).unwrap().is_pass());
        let (w, _, hom) = descendent_enl(&g, &rb, &e).unwrap();
        assert!(check_lie(&w).is_pass() && hom.is_pass());
        let mp = matched_pair_from_relrb(&g, &rb, &e).unwrap();
        assert!(crate::doubles::check_matched_pair(&mp, crate::doubles::PairLevel::Enl)
            .unwrap()
            .is_pass());
        let lift = lift_r_from_relrb(&g, &rb, &e).unwrap();
        assert_eq!(lift.double.dim(), 4);
        assert!(lift.verdict.is_pass(), "{}", lift.verdict);
    }

    #[test]
    fn correspondence_round_trip() {
        let g = sl2();
        let e = Matrix::identity(3);
        let (b, v) = coadjoint_correspondence(&g, &e, &sl2_form(), &Matrix::zeros(3, 3), Direction::KToB).unwrap();
        assert!(b.is_zero() && v.is_pass());
        let k = Matrix::from_fn(3, 3, |i, j| q((i * 3 + j) as i64 - 4));
        let (b, _) = coadjoint_correspondence(&g, &e, &sl2_form(), &k, Direction::KToB).unwrap();
        let (k2, _) = coadjoint_correspondence(&g, &e, &sl2_form(), &b, Direction::BToK).unwrap();
        assert_eq!(k, k2);
    }
}
