//! Pass/fail outcomes with a located, rendered witness.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::rational::Rational;

/// First violated instance of an identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// Which identity failed, e.g. `"E[x,y] = [x,Ey]"`.
    pub clause: String,
    /// Basis indices locating the violation.
    pub indices: Vec<usize>,
    /// Human-readable location, e.g. `"[X3*,X4*]"`.
    pub at: String,
    pub got: String,
    pub expected: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(Box<Witness>),
}

impl Verdict {
    pub fn fail(
        clause: impl Into<String>,
        indices: Vec<usize>,
        at: impl Into<String>,
        got: impl Into<String>,
        expected: impl Into<String>,
    ) -> Self {
        Verdict::Fail(Box::new(Witness {
            clause: clause.into(),
            indices,
            at: at.into(),
            got: got.into(),
            expected: expected.into(),
        }))
    }

    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Pass => None,
            Verdict::Fail(w) => Some(w),
        }
    }

    /// Runs `next` only if `self` passed.
    pub fn and_then(self, next: impl FnOnce() -> Verdict) -> Verdict {
        match self {
            Verdict::Pass => next(),
            fail => fail,
        }
    }

    /// Prefixes the clause of a failing verdict.
    pub fn context(self, prefix: &str) -> Verdict {
        match self {
            Verdict::Pass => Verdict::Pass,
            Verdict::Fail(mut w) => {
                w.clause = format!("{prefix}: {}", w.clause);
                Verdict::Fail(w)
            }
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => write!(f, "pass"),
            Verdict::Fail(w) => write!(
                f,
                "fail ({}) witness={} got={} expected={}",
                w.clause, w.at, w.got, w.expected
            ),
        }
    }
}

/// Renders `Σ v_i names_i`, e.g. `"1/2 X1 + X2"`, `"-X3*"`, `"0"`.
pub fn render_vector(v: &[Rational], names: &[String]) -> String {
    let mut out = String::new();
    for (c, name) in v.iter().zip(names) {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        if !mag.is_one() {
            out.push_str(&mag.to_string());
            out.push(' ');
        }
        out.push_str(name);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Renders a pair location `[a,b]`.
pub fn render_pair(names: &[String], i: usize, j: usize) -> String {
    format!("[{},{}]", names[i], names[j])
}

/// Renders a tuple location `(a,b,c,...)`.
pub fn render_tuple(names: &[&str]) -> String {
    format!("({})", names.join(","))
}

/// Generic names `e1..en` for spaces without stored names.
pub fn generic_names(n: usize, prefix: &str) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}
