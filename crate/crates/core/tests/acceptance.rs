//! Acceptance run: one line per criterion, one indented line per claim.
//!
//! A handful of claims are mathematically false for the stated data. They are
//! listed in `KNOWN_RED` with the reason, still evaluated and still printed as
//! FAIL. The process exits nonzero if any other claim fails or if a known-red
//! claim unexpectedly passes.

mod common;

use std::process::ExitCode;

use enl_core::catalogue::*;
use enl_core::doubles::{
    bialgebra_matched_pair, check_bialgebra, check_manin_triple, deform_matched_pair, double_quasitriangular,
    drinfeld_double, standard_pairing, Bialgebra, BialgebraLevel, ManinTripleInput, MatchedPair,
};
use enl_core::lie::{check_invariant_form, dualize};
use enl_core::operators::{
    centroid_basis, check_averaging, check_enl_rb, check_equivariant, check_quadratic_enl, deformed_bracket,
    nijenhuis_torsion, DeformMode, QuadraticEnlRb,
};
use enl_core::prelie::{
    canonical_r_prelie, check_pre_enl, prelie_transport, subadjacent_enl, PreEnlMode, PreLieAlgebra,
};
use enl_core::rational::{frac, q};
use enl_core::representations::Representation;
use enl_core::yang_baxter::{
    check_en_rmatrix, check_relative_rb, cobracket_from_r, dual_bracket_from_r, lift_r_from_relrb, r_plus,
    rb_to_rmatrix, schouten, symmetric_part_verdict, RelLevel, RelativeRb,
};
use enl_core::{check_lie, LieAlgebra, Matrix, Rational, Verdict};
use rand::Rng;

/// `(criterion, claim, reason)`.
const KNOWN_RED: &[(u8, &str, &str)] = &[
    (
        1,
        "check_equivariant(g4,N) passes",
        "N[X3,X3] = 0 but [X3,N X3] = [X3,X4] = X4; N is Nijenhuis, not equivariant",
    ),
    (
        3,
        "centroid(aff1) has 2 elements",
        "E commuting with ad_X1 is diagonal, ad_X2 forces equal entries; the centroid is the scalars",
    ),
    (
        9,
        "N0 weak pre-ENL passes",
        "N0[X1,X1] = 0 but [X1,N0 X1] = [X1,X2] = X2 on the subadjacent aff(1)",
    ),
];

struct Claim {
    name: String,
    ok: bool,
    detail: String,
}

struct Criterion {
    id: u8,
    title: &'static str,
    claims: Vec<Claim>,
}

impl Criterion {
    fn new(id: u8, title: &'static str) -> Self {
        Criterion {
            id,
            title,
            claims: Vec::new(),
        }
    }

    fn claim(&mut self, name: impl Into<String>, ok: bool, detail: impl Into<String>) {
        self.claims.push(Claim {
            name: name.into(),
            ok,
            detail: detail.into(),
        });
    }

    fn verdict(&mut self, name: impl Into<String>, v: &Verdict, want_pass: bool) {
        let detail = v.to_string();
        self.claim(name, v.is_pass() == want_pass, detail);
    }
}

fn scalar(n: usize, c: Rational) -> Matrix {
    Matrix::scalar(n, c)
}

fn combination(basis: &[Matrix], coeffs: &[Rational]) -> Matrix {
    let n = basis[0].rows();
    basis
        .iter()
        .zip(coeffs)
        .fold(Matrix::zeros(n, n), |acc, (b, c)| &acc + &b.scale(c))
}

fn criterion_1() -> Criterion {
    let mut c = Criterion::new(1, "g4 with a Nijenhuis N: NL but not ENL bialgebra");
    let g = g4();
    let n = g4_nl_operator();
    c.verdict("check_lie(g4) passes", &check_lie(&g), true);
    c.claim("torsion(g4,N) = 0", nijenhuis_torsion(&g, &n).unwrap().is_zero(), "");
    c.verdict(
        "check_equivariant(g4,N) passes",
        &check_equivariant(&g, &n).unwrap(),
        true,
    );
    let gs = dualize(&g, &g4_nl_cobracket()).unwrap();
    let ns = n.transpose();
    let v = check_equivariant(&gs, &ns).unwrap();
    let w = v.witness();
    c.claim(
        "check_equivariant(g4*,N*) fails at [X3*,X4*]",
        w.is_some_and(|w| w.at == "[X3*,X4*]" && w.got == "X3*" && w.expected == "0"),
        v.to_string(),
    );
    let b = Bialgebra::new(g.clone(), g4_nl_cobracket(), Some(n.clone())).unwrap();
    c.verdict(
        "bialgebra nl passes",
        &check_bialgebra(&b, BialgebraLevel::Nl).unwrap(),
        true,
    );
    c.verdict(
        "bialgebra enl fails",
        &check_bialgebra(&b, BialgebraLevel::Enl).unwrap(),
        false,
    );
    let dn = deformed_bracket(&g, &n, DeformMode::General).unwrap();
    c.claim(
        "only deformed bracket on g4 is [X1,X2]_N = X2",
        dn.sparse_brackets() == vec![(0, 1, 1, q(1))],
        format!("{:?}", dn.sparse_brackets()),
    );
    let dns = deformed_bracket(&gs, &ns, DeformMode::General).unwrap();
    c.claim(
        "only deformed bracket on g4* is [X3*,X4*]_N* = -X3*",
        dns.sparse_brackets() == vec![(2, 3, 2, q(-1))],
        format!("{:?}", dns.sparse_brackets()),
    );
    c
}

fn criterion_2() -> Criterion {
    let mut c = Criterion::new(2, "g4 with E = diag(1,1,0,0): ENL bialgebra and its double");
    let b = Bialgebra::new(g4(), g4_enl_cobracket(), Some(g4_enl_operator())).unwrap();
    c.verdict(
        "bialgebra enl passes",
        &check_bialgebra(&b, BialgebraLevel::Enl).unwrap(),
        true,
    );
    let (d, op, form) = drinfeld_double(&b).unwrap();
    c.claim("double has dimension 8", d.dim() == 8, "");
    c.verdict("check_lie(double) passes", &check_lie(&d), true);
    c.claim("form is standard_pairing(4)", form == standard_pairing(4), "");
    let op = op.expect("enl passed");
    c.claim(
        "operator is E ⊕ E*",
        op == g4_enl_operator().block_diag(&g4_enl_operator().transpose()),
        "",
    );
    c.verdict(
        "quadratic ENL with E ⊕ E*",
        &check_quadratic_enl(&d, &op, &form).unwrap(),
        true,
    );
    c.verdict("invariant form", &check_invariant_form(&d, &form).unwrap(), true);
    let manin = check_manin_triple(&ManinTripleInput::canonical(d, op, form)).unwrap();
    c.verdict("Manin triple on canonical blocks", &manin.verdict, true);
    c.verdict(
        "quasi-triangular verdict",
        &double_quasitriangular(&b).unwrap().verdict,
        true,
    );
    c
}

fn criterion_3() -> Criterion {
    let mut c = Criterion::new(3, "centroid solver");
    let aff = centroid_basis(&aff1()).len();
    c.claim("centroid(aff1) has 2 elements", aff == 2, format!("found {aff}"));
    let sl = centroid_basis(&sl2());
    c.claim(
        "centroid(sl2) is the scalars",
        sl == vec![Matrix::identity(3)],
        format!("found {}", sl.len()),
    );
    for n in 1..=4 {
        let k = centroid_basis(&LieAlgebra::abelian(n)).len();
        c.claim(
            format!("centroid(abelian{n}) has {} elements", n * n),
            k == n * n,
            format!("found {k}"),
        );
    }
    let mut rng = common::rng(3);
    for (name, g) in catalogue().into_iter().filter(|(_, g)| (2..=4).contains(&g.dim())) {
        let basis = centroid_basis(&g);
        let ok = (0..200).all(|_| {
            let coeffs: Vec<Rational> = basis.iter().map(|_| common::small_rational(&mut rng)).collect();
            nijenhuis_torsion(&g, &combination(&basis, &coeffs)).unwrap().is_zero()
        });
        c.claim(format!("200 centroid combinations on {name} have zero torsion"), ok, "");
    }
    c
}

fn criterion_4() -> Criterion {
    let mut c = Criterion::new(
        4,
        "equivariant ⇒ Nijenhuis ⇒ averaging, invertible averaging ⇒ equivariant",
    );
    let cat = catalogue();
    c.claim(
        "catalogue has at least 6 algebras of dim ≤ 6",
        cat.len() >= 6 && cat.iter().all(|(_, g)| g.dim() <= 6),
        "",
    );
    for (name, g) in &cat {
        let ok = centroid_basis(g)
            .iter()
            .all(|e| nijenhuis_torsion(g, e).unwrap().is_zero() && check_averaging(g, e).unwrap().is_pass());
        c.claim(format!("centroid of {name}: torsion 0 and averaging"), ok, "");
    }
    let vals = [q(-1), q(0), q(1)];
    for (name, g) in [("abelian2", LieAlgebra::abelian(2)), ("aff1", aff1())] {
        let mut found = 0;
        let mut bad = Vec::new();
        for idx in 0..81 {
            let e: Vec<Rational> = (0..4).map(|k| vals[(idx / 3usize.pow(k)) % 3].clone()).collect();
            let p =
                Matrix::from_rows(vec![vec![e[0].clone(), e[1].clone()], vec![e[2].clone(), e[3].clone()]]).unwrap();
            if p.determinant().unwrap() == q(0) || !check_averaging(&g, &p).unwrap().is_pass() {
                continue;
            }
            found += 1;
            if !check_equivariant(&g, &p).unwrap().is_pass() {
                bad.push(p.to_string());
            }
        }
        c.claim(
            format!("{found} invertible averaging operators on {name} are equivariant"),
            found > 0 && bad.is_empty(),
            bad.join(" "),
        );
    }
    c
}

fn criterion_5() -> Criterion {
    let mut c = Criterion::new(
        5,
        "deformed matched pair is isomorphic to the deformed bicrossed product",
    );
    let b = Bialgebra::new(g4(), g4_enl_cobracket(), Some(g4_enl_operator())).unwrap();
    let mp = bialgebra_matched_pair(&b);
    c.verdict(
        "bialgebra matched pair of g4",
        &deform_matched_pair(&mp).unwrap().1,
        true,
    );
    let mut rng = common::rng(5);
    let pool: Vec<LieAlgebra> = catalogue()
        .into_iter()
        .map(|(_, g)| g)
        .filter(|g| g.dim() <= 4)
        .collect();
    let mut failures = Vec::new();
    for case in 0..50 {
        let g = pool[rng.gen_range(0..pool.len())].clone();
        let bg = centroid_basis(&g);
        let coeffs: Vec<Rational> = bg.iter().map(|_| common::small_rational(&mut rng)).collect();
        let eg = combination(&bg, &coeffs);
        let pair = if case % 2 == 0 {
            let h = pool[rng.gen_range(0..pool.len())].clone();
            let bh = centroid_basis(&h);
            let coeffs: Vec<Rational> = bh.iter().map(|_| common::small_rational(&mut rng)).collect();
            MatchedPair::trivial(g, h).with_operators(eg, combination(&bh, &coeffs))
        } else {
            // g acting on an abelian copy of itself by ad, with T = E.
            let n = g.dim();
            let h = LieAlgebra::abelian(n);
            let rho = Representation::adjoint(&g).rho().to_vec();
            let mu = vec![Matrix::zeros(n, n); n];
            MatchedPair {
                rho: Representation::new(h.names().to_vec(), rho, None).unwrap(),
                mu: Representation::new(g.names().to_vec(), mu, None).unwrap(),
                g,
                h,
                eg: Some(eg.clone()),
                eh: Some(eg),
            }
        };
        match deform_matched_pair(&pair) {
            Ok((_, v)) if v.is_pass() => {}
            Ok((_, v)) => failures.push(format!("case {case}: {v}")),
            Err(e) => failures.push(format!("case {case}: {e}")),
        }
    }
    c.claim(
        "50 randomized trivial and semidirect pairs",
        failures.is_empty(),
        failures.join("; "),
    );
    c
}

fn criterion_6() -> Criterion {
    let mut c = Criterion::new(6, "Rota–Baxter to r-matrix bridge on sl2");
    for k in 0..=2 {
        let t = QuadraticEnlRb {
            g: sl2(),
            b: sl2_rb(),
            s: sl2_form(),
            e: scalar(3, q(k)),
            weight: q(1),
        };
        c.verdict(format!("E = {k}·Id: check_enl_rb"), &check_enl_rb(&t).unwrap(), true);
        let r = rb_to_rmatrix(&t).unwrap();
        c.claim(
            format!("E = {k}·Id: ⟦r,r⟧ = 0"),
            schouten(&t.g, &r).unwrap().is_zero(),
            "",
        );
        c.verdict(
            format!("E = {k}·Id: symmetric part invariant"),
            &symmetric_part_verdict(&t.g, &r),
            true,
        );
        let delta = cobracket_from_r(&t.g, &r).unwrap();
        let b = Bialgebra::new(t.g.clone(), delta, Some(t.e.clone())).unwrap();
        c.verdict(
            format!("E = {k}·Id: coboundary bialgebra enl"),
            &check_bialgebra(&b, BialgebraLevel::Enl).unwrap(),
            true,
        );
        let (_, fact) = dual_bracket_from_r(&t.g, &r).unwrap();
        c.verdict(format!("E = {k}·Id: factorizable"), &fact, true);
    }
    c
}

/// Skew r with entries in {-1,0,1}, for each centroid basis element `E`:
/// `(E, r, EN r-matrix?, relative RB on r_+?)`.
fn rrr_sweep(g: &LieAlgebra) -> Vec<(Matrix, Matrix, bool, bool)> {
    let n = g.dim();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let vals = [q(-1), q(0), q(1)];
    let mut out = Vec::new();
    for e in centroid_basis(g) {
        for idx in 0..3usize.pow(pairs.len() as u32) {
            let mut r = Matrix::zeros(n, n);
            for (p, (i, j)) in pairs.iter().enumerate() {
                let v = vals[(idx / 3usize.pow(p as u32)) % 3].clone();
                r[(*j, *i)] = -v.clone();
                r[(*i, *j)] = v;
            }
            let en = check_en_rmatrix(g, &r, &e).unwrap().is_pass();
            let rep = Representation::coadjoint(g).with_t(e.transpose()).unwrap();
            let rb = RelativeRb { rep, k: r_plus(&r) };
            let rel = check_relative_rb(g, &rb, &e, RelLevel::En).unwrap().is_pass();
            out.push((e.clone(), r, en, rel));
        }
    }
    out
}

fn criterion_7() -> Criterion {
    let mut c = Criterion::new(7, "r_K lift solves the equation on the semidirect double");
    let mut instances: Vec<(String, LieAlgebra, RelativeRb, Matrix)> = Vec::new();
    let a = aff1();
    instances.push((
        "K = 0 on coadjoint aff1".into(),
        a.clone(),
        RelativeRb {
            rep: Representation::coadjoint(&a).with_t(Matrix::identity(2)).unwrap(),
            k: Matrix::zeros(2, 2),
        },
        Matrix::identity(2),
    ));
    let h = heisenberg();
    let eh = centroid_basis(&h).into_iter().last().unwrap();
    instances.push((
        "K = 0 on adjoint heisenberg".into(),
        h.clone(),
        RelativeRb {
            rep: Representation::adjoint(&h).with_t(eh.clone()).unwrap(),
            k: Matrix::zeros(3, 3),
        },
        eh,
    ));
    for (label, p, e) in [
        ("dim-2 pre-Lie, E = Id", prelie_dim2(), Matrix::identity(2)),
        ("dim-2 pre-Lie, E = 3·Id", prelie_dim2(), scalar(2, q(3))),
        ("abelian pre-Lie, E = N0", PreLieAlgebra::zero(2), n0()),
    ] {
        let (g, l, _) = subadjacent_enl(&p, &e).unwrap();
        instances.push((
            format!("K = Id, {label}"),
            g,
            RelativeRb {
                rep: l,
                k: Matrix::identity(2),
            },
            e,
        ));
    }
    for (name, g) in [("aff1", aff1()), ("heisenberg", heisenberg())] {
        for (e, r, en, _) in rrr_sweep(&g) {
            if en && !r.is_zero() {
                let rep = Representation::coadjoint(&g).with_t(e.transpose()).unwrap();
                instances.push((
                    format!("r_+ of {r} on {name}, E = {e}"),
                    g.clone(),
                    RelativeRb { rep, k: r_plus(&r) },
                    e,
                ));
            }
        }
    }
    let mut failures = Vec::new();
    let mut count = 0;
    for (label, g, rb, e) in &instances {
        if !check_relative_rb(g, rb, e, RelLevel::En).unwrap().is_pass() {
            failures.push(format!("{label}: not en"));
            continue;
        }
        count += 1;
        let lift = lift_r_from_relrb(g, rb, e).unwrap();
        if !lift.verdict.is_pass() {
            failures.push(format!("{label}: {}", lift.verdict));
        }
    }
    c.claim(
        format!("{count} en-passing instances lift to EN r-matrices"),
        failures.is_empty() && count > 5,
        failures.join("; "),
    );
    c
}

fn criterion_8() -> Criterion {
    let mut c = Criterion::new(8, "EN r-matrix ⇔ relative RB r_+ on the coadjoint representation");
    for (name, g) in [("aff1", aff1()), ("heisenberg", heisenberg())] {
        let sweep = rrr_sweep(&g);
        let disagreements: Vec<String> = sweep
            .iter()
            .filter(|(_, _, en, rel)| en != rel)
            .map(|(e, r, en, rel)| format!("E={e} r={r} en={en} rel={rel}"))
            .collect();
        let passing = sweep.iter().filter(|s| s.2).count();
        c.claim(
            format!("{name}: {} cases agree ({passing} EN r-matrices)", sweep.len()),
            disagreements.is_empty(),
            disagreements.join("; "),
        );
    }
    c
}

fn criterion_9() -> Criterion {
    let mut c = Criterion::new(9, "pre-Lie suite on {X1,X2} = X2");
    let p = prelie_dim2();
    c.verdict(
        "N0 weak pre-ENL passes",
        &check_pre_enl(&p, &n0(), PreEnlMode::Weak).unwrap(),
        true,
    );
    c.verdict(
        "N0 strong pre-ENL fails",
        &check_pre_enl(&p, &n0(), PreEnlMode::Strong).unwrap(),
        false,
    );
    for k in [-1, 0, 1, 2, 3] {
        c.verdict(
            format!("{k}·Id strong"),
            &check_pre_enl(&p, &scalar(2, q(k)), PreEnlMode::Strong).unwrap(),
            true,
        );
    }
    for k in [1, 2] {
        let (_, _, v) = subadjacent_enl(&p, &scalar(2, q(k))).unwrap();
        c.verdict(format!("subadjacent_enl with {k}·Id"), &v, true);
    }
    for k in [1, 3] {
        c.verdict(
            format!("canonical r with {k}·Id"),
            &canonical_r_prelie(&p, &scalar(2, q(k))).unwrap().verdict,
            true,
        );
    }
    let e = Matrix::identity(2);
    let (g, l, _) = subadjacent_enl(&p, &e).unwrap();
    for k in [q(1), q(2), q(-3), frac(1, 2)] {
        let rb = RelativeRb {
            rep: l.clone(),
            k: scalar(2, k.clone()),
        };
        let t = prelie_transport(&g, &rb, &e).unwrap();
        c.claim(format!("transport with K = {k}·Id recovers the product"), t == p, "");
    }
    c
}

fn criterion_10() -> Criterion {
    let mut c = Criterion::new(10, "library kernels agree with naive oracles");
    let res = common::oracle_sweep(10, 100);
    c.claim(
        "schouten, torsion, cocycle, co-Jacobi, concomitant on 100 inputs each",
        res.is_ok(),
        res.err().unwrap_or_default(),
    );
    c
}

fn main() -> ExitCode {
    let criteria = [
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(),
        criterion_8(),
        criterion_9(),
        criterion_10(),
    ];
    let mut unexpected = 0;
    for crit in &criteria {
        let all = crit.claims.iter().all(|cl| cl.ok);
        println!(
            "{} criterion {:>2}: {}",
            if all { "PASS" } else { "FAIL" },
            crit.id,
            crit.title
        );
        for cl in &crit.claims {
            let known = KNOWN_RED
                .iter()
                .find(|(id, name, _)| *id == crit.id && *name == cl.name);
            let status = if cl.ok { "pass" } else { "FAIL" };
            let mut line = format!("    {status} {}", cl.name);
            if !cl.ok && !cl.detail.is_empty() {
                line.push_str(&format!(" | {}", cl.detail));
            }
            match (known, cl.ok) {
                (Some((_, _, why)), false) => line.push_str(&format!(" | known: {why}")),
                (Some(_), true) => {
                    unexpected += 1;
                    line.push_str(" | listed as known-red but passed");
                }
                (None, false) => unexpected += 1,
                (None, true) => {}
            }
            println!("{line}");
        }
    }
    let red = criteria.iter().filter(|c| c.claims.iter().any(|cl| !cl.ok)).count();
    println!(
        "{} of {} criteria pass; {unexpected} unexpected outcomes",
        criteria.len() - red,
        criteria.len()
    );
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
