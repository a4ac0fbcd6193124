//! Cross-checks between the three degree computations, and parallel lemma
//! checking.

use clawdeg_core::geometry::{fmt_rat, Rat};
use clawdeg_core::group::GroupId;
use clawdeg_core::lemmas::{self, LemmaId, Outcome, Verdict};
use clawdeg_core::volume::{self, TriangulateOptions};
use clawdeg_core::{claw, cuts, formulas, Result};
use rayon::prelude::*;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Method {
    Formula,
    InclusionExclusion,
    Triangulation,
    All,
}

pub type DegreeFn = fn(GroupId, usize, TriangulateOptions) -> Result<Rat>;

/// The three independent routes to the degree. Tests swap one out to make
/// sure a disagreement is caught.
#[derive(Debug, Clone, Copy)]
pub struct Oracles {
    pub formula: DegreeFn,
    pub assembly: DegreeFn,
    pub triangulation: DegreeFn,
}

impl Default for Oracles {
    fn default() -> Self {
        Oracles {
            formula: |g, n, _| formulas::degree_rational(g, n),
            assembly: |g, n, _| cuts::assemble(g, n),
            triangulation: triangulated_degree,
        }
    }
}

/// Normalized volume of `conv(vertices)` in the vertex lattice.
pub fn triangulated_degree(g: GroupId, n: usize, opts: TriangulateOptions) -> Result<Rat> {
    let p = claw::vertices(g, n)?;
    volume::lattice_volume_with(&p, Some(&claw::lattice(g, n)?), opts)
}

impl Oracles {
    pub fn compute(&self, m: Method, g: GroupId, n: usize, opts: TriangulateOptions) -> Result<Rat> {
        match m {
            Method::Formula | Method::All => (self.formula)(g, n, opts),
            Method::InclusionExclusion => (self.assembly)(g, n, opts),
            Method::Triangulation => (self.triangulation)(g, n, opts),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossCheck {
    pub group: String,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub formula: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inclusion_exclusion: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub triangulation: Option<String>,
    pub agree: bool,
}

/// Runs the formula and the requested other route(s) and compares them.
/// The formula alone passes when it evaluates to an integer.
pub fn cross_check(o: &Oracles, m: Method, g: GroupId, n: usize, opts: TriangulateOptions) -> Result<CrossCheck> {
    let f = (o.formula)(g, n, opts)?;
    let ie = matches!(m, Method::InclusionExclusion | Method::All)
        .then(|| (o.assembly)(g, n, opts))
        .transpose()?;
    let tr = matches!(m, Method::Triangulation | Method::All)
        .then(|| (o.triangulation)(g, n, opts))
        .transpose()?;
    let agree = f.is_integer() && ie.iter().chain(&tr).all(|v| *v == f);
    Ok(CrossCheck {
        group: g.to_string(),
        n,
        formula: Some(fmt_rat(&f)),
        inclusion_exclusion: ie.as_ref().map(fmt_rat),
        triangulation: tr.as_ref().map(fmt_rat),
        agree,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaRecord {
    pub lemma: String,
    pub n: usize,
    pub hypothesis: String,
    pub expected: String,
    pub computed: String,
    pub verdict: String,
}

impl From<&Outcome> for LemmaRecord {
    fn from(o: &Outcome) -> Self {
        LemmaRecord {
            lemma: o.lemma.to_string(),
            n: o.n,
            hypothesis: o.hypothesis.clone(),
            expected: o.expected.clone(),
            computed: o.computed.clone(),
            verdict: match &o.verdict {
                Verdict::Confirmed => "confirmed".into(),
                Verdict::Refuted(_) => "refuted".into(),
            },
        }
    }
}

/// Every instance of every `(lemma, n)` job, checked in parallel; output
/// order follows the input order.
pub fn check_lemmas(jobs: &[(LemmaId, usize)]) -> Result<Vec<Outcome>> {
    let mut insts = Vec::new();
    for &(l, n) in jobs {
        insts.extend(lemmas::instances(l, n)?);
    }
    insts.par_iter().map(lemmas::check).collect()
}

/// All lemmas at `n = 2, 3`, plus the `Z2` lemmas at `n = 4`.
pub fn standard_jobs() -> Vec<(LemmaId, usize)> {
    let mut jobs: Vec<(LemmaId, usize)> = LemmaId::ALL
        .iter()
        .flat_map(|&l| [(l, 2), (l, 3)])
        .collect();
    jobs.extend(
        LemmaId::ALL
            .iter()
            .filter(|l| l.group() == GroupId::Z2)
            .map(|&l| (l, 4)),
    );
    jobs
}
