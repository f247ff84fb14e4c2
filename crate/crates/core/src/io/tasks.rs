//! Named-task dispatch: each task kind maps onto one library operation.

use indexmap::IndexMap;
use rayon::prelude::*;
use serde_json::Value;

use crate::doubles::{
    bialgebra_hierarchy, bicrossed_product, check_bialgebra, check_manin_triple, check_matched_pair, concomitant,
    concomitant_reading, deform_matched_pair, double_quasitriangular, drinfeld_double, BialgebraLevel, HierarchyLevel,
    ManinTripleInput, PairLevel,
};
use crate::error::{Error, Result};
use crate::lie::{check_invariant_form, check_lie, dualize, BilinearForm, LieAlgebra};
use crate::matrix::Matrix;
use crate::operators::{
    centroid_basis, check_averaging, check_enl_rb, check_equivariant, check_nijenhuis, check_quadratic_enl,
    check_rota_baxter, deformed_bracket, descendent_bracket, hierarchy, nijenhuis_torsion, DeformMode, QuadraticEnlRb,
};
use crate::prelie::{
    canonical_r_prelie, check_pre_enl, check_prelie, prelie_from_relrb, prelie_nijenhuis, prelie_transport,
    subadjacent_enl, PreEnlMode, PreLieAlgebra,
};
use crate::rational::{parse_rational, Rational};
use crate::representations::{check_en_representation, check_representation, semidirect_sum, EnMode};
use crate::verdict::Verdict;
use crate::yang_baxter::{
    check_en_rmatrix, check_en_rmatrix_weak, check_relative_rb, cobracket_from_r, descendent_enl, dual_bracket_from_r,
    lift_r_from_relrb, rb_to_rmatrix, RelLevel,
};

use super::bundle::{raw_cobracket, raw_form, raw_lie, raw_operator, raw_prelie, Bundle, NamedRelativeRb, RawBundle};
use super::report::{Report, Status};

/// Every task kind `run_task` understands.
pub const TASK_KINDS: &[&str] = &[
    "check_lie",
    "check_equivariant",
    "torsion",
    "check_averaging",
    "check_rota_baxter",
    "check_invariant_form",
    "check_quadratic_enl",
    "check_representation",
    "check_en_representation",
    "check_bialgebra",
    "check_matched_pair",
    "check_manin_triple",
    "check_en_rmatrix",
    "check_relative_rb",
    "check_prelie",
    "check_pre_enl",
    "check_enl_rb",
    "double",
    "quasitriangular",
    "bicross",
    "semidirect",
    "descendent",
    "hierarchy",
    "rbs_rmatrix",
    "coboundary",
    "rk_lift",
    "canonical_r",
    "centroid",
    "dualize",
    "deform",
    "prelie_deform",
    "subadjacent",
    "prelie_from_relrb",
    "transport",
];

/// Verdict, remarks and constructed entities of one task.
#[derive(Default)]
struct Outcome {
    verdict: Option<Verdict>,
    notes: Vec<String>,
    outputs: RawBundle,
}

impl Outcome {
    fn check(v: Verdict) -> Self {
        Outcome {
            verdict: Some(v),
            ..Default::default()
        }
    }
}

struct Args<'a> {
    bundle: &'a Bundle,
    task: &'a str,
    args: &'a IndexMap<String, Value>,
}

impl<'a> Args<'a> {
    fn bad(&self, msg: impl Into<String>) -> Error {
        Error::validation(self.task, msg)
    }

    fn opt_str(&self, key: &str) -> Result<Option<&'a str>> {
        match self.args.get(key) {
            None | Some(Value::Null) => Ok(None),
            Some(Value::String(s)) => Ok(Some(s)),
            Some(_) => Err(self.bad(format!("`{key}` must be a string"))),
        }
    }

    fn str(&self, key: &str) -> Result<&'a str> {
        self.opt_str(key)?.ok_or_else(|| self.bad(format!("missing `{key}`")))
    }

    fn rational(&self, key: &str) -> Result<Rational> {
        match self.args.get(key) {
            Some(Value::String(s)) => parse_rational(s).map_err(|e| self.bad(e.to_string())),
            Some(Value::Number(n)) if n.is_i64() => Ok(Rational::from_integer(n.as_i64().unwrap().into())),
            None => Err(self.bad(format!("missing `{key}`"))),
            Some(_) => Err(self.bad(format!("`{key}` must be a rational string"))),
        }
    }

    fn usize(&self, key: &str, default: usize) -> Result<usize> {
        match self.args.get(key) {
            None => Ok(default),
            Some(v) => v
                .as_u64()
                .map(|n| n as usize)
                .ok_or_else(|| self.bad(format!("`{key}` must be a non-negative integer"))),
        }
    }

    fn flag(&self, key: &str) -> Result<bool> {
        match self.args.get(key) {
            None => Ok(false),
            Some(Value::Bool(b)) => Ok(*b),
            Some(_) => Err(self.bad(format!("`{key}` must be a boolean"))),
        }
    }

    fn choice<T: Copy>(&self, key: &str, default: Option<T>, options: &[(&str, T)]) -> Result<T> {
        match self.opt_str(key)? {
            None => default.ok_or_else(|| self.bad(format!("missing `{key}`"))),
            Some(s) => options
                .iter()
                .find(|(name, _)| *name == s)
                .map(|(_, v)| *v)
                .ok_or_else(|| {
                    self.bad(format!(
                        "`{key}` = `{s}` is not one of {:?}",
                        options.iter().map(|o| o.0).collect::<Vec<_>>()
                    ))
                }),
        }
    }

    fn out(&self, default: &str) -> Result<String> {
        Ok(self.opt_str("out")?.unwrap_or(default).to_string())
    }

    fn lie(&self, key: &str) -> Result<&'a LieAlgebra> {
        let name = self.str(key)?;
        self.bundle
            .lie_algebras
            .get(name)
            .ok_or_else(|| self.bad(format!("unknown Lie algebra `{name}`")))
    }

    fn prelie(&self) -> Result<&'a PreLieAlgebra> {
        let name = self.str("prelie")?;
        self.bundle
            .prelie_algebras
            .get(name)
            .ok_or_else(|| self.bad(format!("unknown pre-Lie algebra `{name}`")))
    }

    fn op(&self, key: &str) -> Result<&'a Matrix> {
        let name = self.str(key)?;
        self.bundle
            .operators
            .get(name)
            .map(|m| &m.matrix)
            .ok_or_else(|| self.bad(format!("unknown operator `{name}`")))
    }

    fn form(&self) -> Result<BilinearForm> {
        let name = self.str("form")?;
        self.bundle
            .bilinear_forms
            .get(name)
            .map(|m| BilinearForm::new(m.matrix.clone()))
            .ok_or_else(|| self.bad(format!("unknown bilinear form `{name}`")))
    }

    fn rmatrix(&self) -> Result<(&'a LieAlgebra, &'a Matrix)> {
        let name = self.str("rmatrix")?;
        let r = self
            .bundle
            .rmatrices
            .get(name)
            .ok_or_else(|| self.bad(format!("unknown r-matrix `{name}`")))?;
        let alg = r
            .algebra
            .as_deref()
            .ok_or_else(|| self.bad(format!("r-matrix `{name}` names no algebra")))?;
        let g = self
            .bundle
            .lie_algebras
            .get(alg)
            .ok_or_else(|| self.bad(format!("unknown Lie algebra `{alg}`")))?;
        Ok((g, &r.matrix))
    }

    fn relrb(&self) -> Result<(&'a LieAlgebra, &'a NamedRelativeRb)> {
        let name = self.str("relative_rb")?;
        let rb = self
            .bundle
            .relative_rb
            .get(name)
            .ok_or_else(|| self.bad(format!("unknown relative RB operator `{name}`")))?;
        Ok((&self.bundle.lie_algebras[&rb.algebra], rb))
    }

    fn bialgebra(&self) -> Result<&'a crate::doubles::Bialgebra> {
        let name = self.str("bialgebra")?;
        self.bundle
            .bialgebras
            .get(name)
            .ok_or_else(|| self.bad(format!("unknown bialgebra `{name}`")))
    }

    fn vectors(&self, key: &str) -> Result<Option<Vec<Vec<Rational>>>> {
        let Some(v) = self.args.get(key) else { return Ok(None) };
        let rows = v
            .as_array()
            .ok_or_else(|| self.bad(format!("`{key}` must be a list of vectors")))?;
        rows.iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(|| self.bad(format!("`{key}` must be a list of vectors")))?
                    .iter()
                    .map(|c| {
                        c.as_str()
                            .ok_or_else(|| self.bad("vector entries must be rational strings"))
                            .and_then(|s| parse_rational(s).map_err(|e| self.bad(e.to_string())))
                    })
                    .collect()
            })
            .collect::<Result<Vec<_>>>()
            .map(Some)
    }
}

fn first_failure(vs: Vec<Verdict>) -> Verdict {
    vs.into_iter().find(|v| !v.is_pass()).unwrap_or(Verdict::Pass)
}

fn dispatch(kind: &str, a: &Args) -> Result<Outcome> {
    let lie_levels = [
        ("lie", BialgebraLevel::Lie),
        ("nl", BialgebraLevel::Nl),
        ("enl", BialgebraLevel::Enl),
    ];
    let pair_levels = [("lie", PairLevel::Lie), ("enl", PairLevel::Enl)];
    let rel_levels = [("plain", RelLevel::Plain), ("en", RelLevel::En)];
    Ok(match kind {
        "check_lie" => Outcome::check(check_lie(a.lie("algebra")?)),
        "check_equivariant" => Outcome::check(check_equivariant(a.lie("algebra")?, a.op("operator")?)?),
        "torsion" => {
            let g = a.lie("algebra")?;
            let n = a.op("operator")?;
            let mut o = Outcome::check(check_nijenhuis(g, n)?);
            if o.verdict.as_ref().is_some_and(Verdict::is_pass) {
                let d = deformed_bracket(g, n, DeformMode::General)?;
                o.outputs.lie_algebras.insert(a.out("deformed")?, raw_lie(&d));
            } else {
                let nonzero = nijenhuis_torsion(g, n)?
                    .entries()
                    .iter()
                    .filter(|v| !num_traits::Zero::is_zero(*v))
                    .count();
                o.notes.push(format!("{nonzero} nonzero torsion components"));
            }
            o
        }
        "check_averaging" => Outcome::check(check_averaging(a.lie("algebra")?, a.op("operator")?)?),
        "check_rota_baxter" => Outcome::check(check_rota_baxter(
            a.lie("algebra")?,
            a.op("operator")?,
            &a.rational("weight")?,
        )?),
        "check_invariant_form" => Outcome::check(check_invariant_form(a.lie("algebra")?, &a.form()?)?),
        "check_quadratic_enl" => Outcome::check(check_quadratic_enl(a.lie("algebra")?, a.op("operator")?, &a.form()?)?),
        "check_representation" | "check_en_representation" => {
            let name = a.str("representation")?;
            let r = a
                .bundle
                .representations
                .get(name)
                .ok_or_else(|| a.bad(format!("unknown representation `{name}`")))?;
            let g = &a.bundle.lie_algebras[&r.algebra];
            if kind == "check_representation" {
                Outcome::check(check_representation(g, &r.rep)?)
            } else {
                let mode = a.choice(
                    "mode",
                    Some(EnMode::Equivariant),
                    &[
                        ("n_compatible", EnMode::NCompatible),
                        ("equivariant", EnMode::Equivariant),
                        ("averaging", EnMode::AveragingCompatible),
                    ],
                )?;
                Outcome::check(check_en_representation(g, &r.rep, a.op("operator")?, mode)?)
            }
        }
        "check_bialgebra" => {
            let b = a.bialgebra()?;
            let level = a.choice("level", None, &lie_levels)?;
            let mut o = Outcome::check(check_bialgebra(b, level)?);
            if level != BialgebraLevel::Lie {
                if let Some(e) = &b.e {
                    let reading = concomitant_reading(&b.g, &concomitant(&b.g, &b.delta, e)?);
                    if reading.flagged() {
                        o.notes.push("concomitant vanishes on bracket pairs only".into());
                    }
                }
            }
            o
        }
        "check_matched_pair" => {
            let name = a.str("matched_pair")?;
            let mp = a
                .bundle
                .matched_pairs
                .get(name)
                .ok_or_else(|| a.bad(format!("unknown matched pair `{name}`")))?;
            Outcome::check(check_matched_pair(mp, a.choice("level", None, &pair_levels)?)?)
        }
        "check_manin_triple" => {
            let d = a.lie("algebra")?.clone();
            let mut input = ManinTripleInput::canonical(d, a.op("operator")?.clone(), a.form()?);
            if let Some(g) = a.vectors("g_basis")? {
                input.g_basis = g;
            }
            if let Some(h) = a.vectors("h_basis")? {
                input.h_basis = h;
            }
            let out = check_manin_triple(&input)?;
            let mut o = Outcome::check(out.verdict);
            let base = a.out("manin")?;
            if let Some(e) = out.e_g {
                o.outputs.operators.insert(format!("{base}_Eg"), raw_operator(None, &e));
            }
            if let Some(e) = out.e_h {
                o.outputs.operators.insert(format!("{base}_Eh"), raw_operator(None, &e));
            }
            o
        }
        "check_en_rmatrix" => {
            let (g, r) = a.rmatrix()?;
            let e = a.op("operator")?;
            Outcome::check(if a.flag("weak")? {
                check_en_rmatrix_weak(g, r, e)?
            } else {
                check_en_rmatrix(g, r, e)?
            })
        }
        "check_relative_rb" => {
            let (g, rb) = a.relrb()?;
            let level = a.choice("level", None, &rel_levels)?;
            let e = match level {
                RelLevel::En => a.op("operator")?.clone(),
                RelLevel::Plain => match a.opt_str("operator")? {
                    Some(_) => a.op("operator")?.clone(),
                    None => Matrix::zeros(g.dim(), g.dim()),
                },
            };
            Outcome::check(check_relative_rb(g, &rb.rb, &e, level)?)
        }
        "check_prelie" => Outcome::check(check_prelie(a.prelie()?)),
        "check_pre_enl" => {
            let mode = a.choice(
                "mode",
                None,
                &[("weak", PreEnlMode::Weak), ("strong", PreEnlMode::Strong)],
            )?;
            Outcome::check(check_pre_enl(a.prelie()?, a.op("operator")?, mode)?)
        }
        "check_enl_rb" | "rbs_rmatrix" => {
            let t = QuadraticEnlRb {
                g: a.lie("algebra")?.clone(),
                b: a.op("rota_baxter")?.clone(),
                s: a.form()?,
                e: a.op("operator")?.clone(),
                weight: a.rational("weight")?,
            };
            if kind == "check_enl_rb" {
                Outcome::check(check_enl_rb(&t)?)
            } else {
                let r = rb_to_rmatrix(&t)?;
                let mut o = Outcome::default();
                o.outputs
                    .rmatrices
                    .insert(a.out("r")?, raw_operator(a.opt_str("algebra")?, &r));
                o
            }
        }
        "double" => {
            let (d, op, form) = drinfeld_double(a.bialgebra()?)?;
            let base = a.out("double")?;
            let mut o = Outcome::default();
            o.outputs.lie_algebras.insert(base.clone(), raw_lie(&d));
            if let Some(op) = op {
                o.outputs
                    .operators
                    .insert(format!("{base}_E"), raw_operator(Some(&base), &op));
            } else {
                o.notes.push("no ENL operator on the double".into());
            }
            o.outputs
                .bilinear_forms
                .insert(format!("{base}_S"), raw_form(Some(&base), &form));
            o
        }
        "quasitriangular" => {
            let qt = double_quasitriangular(a.bialgebra()?)?;
            let base = a.out("double")?;
            let mut o = Outcome::check(qt.verdict);
            o.outputs.lie_algebras.insert(base.clone(), raw_lie(&qt.double));
            o.outputs
                .lie_algebras
                .insert(format!("{base}_dual_r"), raw_lie(&qt.dual));
            o.outputs
                .operators
                .insert(format!("{base}_E"), raw_operator(Some(&base), &qt.operator));
            o.outputs
                .rmatrices
                .insert(format!("{base}_r"), raw_operator(Some(&base), &qt.r));
            o
        }
        "bicross" => {
            let name = a.str("matched_pair")?;
            let mp = a
                .bundle
                .matched_pairs
                .get(name)
                .ok_or_else(|| a.bad(format!("unknown matched pair `{name}`")))?;
            let (d, op) = bicrossed_product(mp)?;
            let base = a.out("bicross")?;
            let mut o = Outcome::default();
            o.outputs.lie_algebras.insert(base.clone(), raw_lie(&d));
            if let Some(op) = op {
                o.outputs
                    .operators
                    .insert(format!("{base}_E"), raw_operator(Some(&base), &op));
            }
            o
        }
        "semidirect" => {
            let name = a.str("representation")?;
            let r = a
                .bundle
                .representations
                .get(name)
                .ok_or_else(|| a.bad(format!("unknown representation `{name}`")))?;
            let (s, op) = semidirect_sum(&a.bundle.lie_algebras[&r.algebra], a.op("operator")?, &r.rep)?;
            let base = a.out("semidirect")?;
            let mut o = Outcome::default();
            o.outputs.lie_algebras.insert(base.clone(), raw_lie(&s));
            o.outputs
                .operators
                .insert(format!("{base}_E"), raw_operator(Some(&base), &op));
            o
        }
        "descendent" => {
            let base = a.out("descendent")?;
            let mut o = Outcome::default();
            if a.args.contains_key("relative_rb") {
                let (g, rb) = a.relrb()?;
                let (w, t, hom) = descendent_enl(g, &rb.rb, a.op("operator")?)?;
                o.verdict = Some(hom);
                o.outputs.lie_algebras.insert(base.clone(), raw_lie(&w));
                o.outputs
                    .operators
                    .insert(format!("{base}_T"), raw_operator(Some(&base), &t));
            } else {
                let d = descendent_bracket(a.lie("algebra")?, a.op("operator")?, &a.rational("weight")?)?;
                o.outputs.lie_algebras.insert(base, raw_lie(&d));
            }
            o
        }
        "hierarchy" => {
            let depth = a.usize("depth", 1)?;
            let mut o = Outcome::default();
            if a.args.contains_key("bialgebra") {
                let level = a.choice(
                    "level",
                    Some(HierarchyLevel::Enl),
                    &[("enl", HierarchyLevel::Enl), ("lie", HierarchyLevel::Lie)],
                )?;
                let vs = bialgebra_hierarchy(a.bialgebra()?, depth, level)?;
                for (k, v) in vs.iter().enumerate() {
                    o.notes.push(format!("level {}: {v}", k + 1));
                }
                o.verdict = Some(first_failure(vs));
            } else {
                let base = a.out("level")?;
                for (k, (gk, ek)) in hierarchy(a.lie("algebra")?, a.op("operator")?, depth)?
                    .into_iter()
                    .enumerate()
                {
                    let name = format!("{base}_{}", k + 1);
                    o.outputs
                        .operators
                        .insert(format!("{name}_E"), raw_operator(Some(&name), &ek));
                    o.outputs.lie_algebras.insert(name, raw_lie(&gk));
                }
            }
            o
        }
        "coboundary" => {
            let (g, r) = a.rmatrix()?;
            let delta = cobracket_from_r(g, r)?;
            let alg = a.bundle.rmatrices[a.str("rmatrix")?]
                .algebra
                .clone()
                .unwrap_or_default();
            let base = a.out("coboundary")?;
            let mut o = Outcome::default();
            o.outputs.cobrackets.insert(base.clone(), raw_cobracket(&alg, &delta));
            if let Ok((dual, fact)) = dual_bracket_from_r(g, r) {
                o.outputs.lie_algebras.insert(format!("{base}_dual"), raw_lie(&dual));
                o.notes.push(format!("factorizable: {fact}"));
            }
            o
        }
        "rk_lift" => {
            let (g, rb) = a.relrb()?;
            let lift = lift_r_from_relrb(g, &rb.rb, a.op("operator")?)?;
            let base = a.out("lift")?;
            let mut o = Outcome::check(lift.verdict);
            o.outputs.lie_algebras.insert(base.clone(), raw_lie(&lift.double));
            o.outputs
                .operators
                .insert(format!("{base}_E"), raw_operator(Some(&base), &lift.e_hat));
            o.outputs
                .rmatrices
                .insert(format!("{base}_r"), raw_operator(Some(&base), &lift.r));
            o
        }
        "canonical_r" => {
            let c = canonical_r_prelie(a.prelie()?, a.op("operator")?)?;
            let base = a.out("canonical")?;
            let mut o = Outcome::check(c.verdict);
            o.outputs.lie_algebras.insert(base.clone(), raw_lie(&c.double));
            o.outputs
                .operators
                .insert(format!("{base}_E"), raw_operator(Some(&base), &c.e_hat));
            o.outputs
                .rmatrices
                .insert(format!("{base}_r"), raw_operator(Some(&base), &c.r));
            o
        }
        "centroid" => {
            let name = a.str("algebra")?;
            let basis = centroid_basis(a.lie("algebra")?);
            let base = a.out("centroid")?;
            let mut o = Outcome::default();
            o.notes.push(format!("dimension {}", basis.len()));
            for (k, e) in basis.iter().enumerate() {
                o.outputs
                    .operators
                    .insert(format!("{base}_{}", k + 1), raw_operator(Some(name), e));
            }
            o
        }
        "dualize" => {
            let name = a.str("cobracket")?;
            let c = a
                .bundle
                .cobrackets
                .get(name)
                .ok_or_else(|| a.bad(format!("unknown cobracket `{name}`")))?;
            let d = dualize(&a.bundle.lie_algebras[&c.algebra], &c.delta)?;
            let mut o = Outcome::default();
            o.outputs.lie_algebras.insert(a.out("dual")?, raw_lie(&d));
            o
        }
        "deform" => {
            let mut o = Outcome::default();
            if a.args.contains_key("matched_pair") {
                let name = a.str("matched_pair")?;
                let mp = a
                    .bundle
                    .matched_pairs
                    .get(name)
                    .ok_or_else(|| a.bad(format!("unknown matched pair `{name}`")))?;
                let (def, v) = deform_matched_pair(mp)?;
                let base = a.out("deformed")?;
                o.verdict = Some(v);
                o.outputs.lie_algebras.insert(format!("{base}_g"), raw_lie(&def.g));
                o.outputs.lie_algebras.insert(format!("{base}_h"), raw_lie(&def.h));
            } else {
                let mode = a.choice(
                    "mode",
                    Some(DeformMode::Equivariant),
                    &[
                        ("general", DeformMode::General),
                        ("equivariant", DeformMode::Equivariant),
                    ],
                )?;
                let d = deformed_bracket(a.lie("algebra")?, a.op("operator")?, mode)?;
                o.outputs.lie_algebras.insert(a.out("deformed")?, raw_lie(&d));
            }
            o
        }
        "prelie_deform" => {
            let (torsion, deformed) = prelie_nijenhuis(a.prelie()?, a.op("operator")?)?;
            let mut o = Outcome::default();
            match deformed {
                Some(p) => {
                    o.outputs.prelie_algebras.insert(a.out("deformed")?, raw_prelie(&p));
                    o.verdict = Some(Verdict::Pass);
                }
                None => {
                    let (i, j, k) = torsion.first_nonzero().expect("nonzero torsion");
                    let names = a.prelie()?.names();
                    o.verdict = Some(Verdict::fail(
                        "{Nx,Ny} = N({Nx,y} + {x,Ny} - N{x,y})",
                        vec![i, j, k],
                        format!("[{},{}]", names[i], names[j]),
                        torsion[(i, j, k)].to_string(),
                        "0",
                    ));
                }
            }
            o
        }
        "subadjacent" => {
            let (g, _, v) = subadjacent_enl(a.prelie()?, a.op("operator")?)?;
            let base = a.out("subadjacent")?;
            let mut o = Outcome::check(v);
            o.outputs.lie_algebras.insert(base.clone(), raw_lie(&g));
            o
        }
        "prelie_from_relrb" | "transport" => {
            let (g, rb) = a.relrb()?;
            let e = a.op("operator")?;
            let mut o = Outcome::default();
            if kind == "transport" {
                let p = prelie_transport(g, &rb.rb, e)?;
                o.verdict = Some(check_pre_enl(&p, e, PreEnlMode::Strong)?);
                o.outputs.prelie_algebras.insert(a.out("transport")?, raw_prelie(&p));
            } else {
                let (p, t) = prelie_from_relrb(g, &rb.rb, e)?;
                let base = a.out("prelie")?;
                o.verdict = Some(check_pre_enl(&p, &t, PreEnlMode::Strong)?);
                o.outputs
                    .operators
                    .insert(format!("{base}_T"), raw_operator(Some(&base), &t));
                o.outputs.prelie_algebras.insert(base, raw_prelie(&p));
            }
            o
        }
        other => return Err(Error::UnknownTask(format!("kind `{other}`"))),
    })
}

/// Runs one declared task. Failures inside the library become `error` reports.
pub fn run_task(bundle: &Bundle, name: &str) -> Report {
    let Some(task) = bundle.tasks.get(name) else {
        return Report::error(name, "", &Error::UnknownTask(name.to_string()));
    };
    let args = Args {
        bundle,
        task: name,
        args: &task.args,
    };
    match dispatch(&task.kind, &args) {
        Ok(o) => {
            let verdict = o.verdict.unwrap_or(Verdict::Pass);
            Report {
                task: name.to_string(),
                kind: task.kind.clone(),
                status: if verdict.is_pass() { Status::Pass } else { Status::Fail },
                witness: verdict.witness().cloned(),
                error: None,
                notes: o.notes,
                outputs: if o.outputs == RawBundle::default() {
                    None
                } else {
                    Some(o.outputs)
                },
            }
        }
        Err(e) => Report::error(
            name,
            &task.kind,
            &Error::Task {
                task: name.to_string(),
                source: Box::new(e),
            },
        ),
    }
}

/// Every declared task, evaluated in parallel, reported in declaration order.
pub fn run_all(bundle: &Bundle) -> Vec<Report> {
    let names: Vec<&String> = bundle.tasks.keys().collect();
    names.par_iter().map(|n| run_task(bundle, n)).collect()
}
