//! Computational checks of the cut-piece lemmas.
//!
//! Each [`LemmaInstance`] fixes the index data, validates the side
//! conditions, and carries a [`Claim`] that [`check`] tests by enumerating
//! the vertices of the piece.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::{One, Zero};

use crate::claw::{self, OddSubsetCut, Side};
use crate::cuts::{self, CutSpec};
use crate::error::{Error, Result};
use crate::formulas::{self, FormulaId};
use crate::geometry::{fmt_rat, HPolytope, HalfSpace, Rat};
use crate::group::GroupId;
use crate::volume;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LemmaId {
    Z2Simplex,
    Z2EmptyIntersection,
    Z22EmptyIntersection,
    Z22Integers,
    Z22OneFacet,
    Z22TwoFacet,
    Z22ThreeFacet,
    Z3EmptyIntersection,
    Z3TwoOfSameType,
    Z3TwoOfDifType,
    Z3TwoTwo,
    Z3OneFacet,
    Z3TwoFacet,
}

impl LemmaId {
    pub const ALL: [LemmaId; 13] = [
        LemmaId::Z2Simplex,
        LemmaId::Z2EmptyIntersection,
        LemmaId::Z22EmptyIntersection,
        LemmaId::Z22Integers,
        LemmaId::Z22OneFacet,
        LemmaId::Z22TwoFacet,
        LemmaId::Z22ThreeFacet,
        LemmaId::Z3EmptyIntersection,
        LemmaId::Z3TwoOfSameType,
        LemmaId::Z3TwoOfDifType,
        LemmaId::Z3TwoTwo,
        LemmaId::Z3OneFacet,
        LemmaId::Z3TwoFacet,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LemmaId::Z2Simplex => "z2-simplex",
            LemmaId::Z2EmptyIntersection => "z2-empty-intersection",
            LemmaId::Z22EmptyIntersection => "z22-empty-intersection",
            LemmaId::Z22Integers => "z22-integers",
            LemmaId::Z22OneFacet => "z22-1facet",
            LemmaId::Z22TwoFacet => "z22-2facet",
            LemmaId::Z22ThreeFacet => "z22-3facet",
            LemmaId::Z3EmptyIntersection => "z3-empty-intersection",
            LemmaId::Z3TwoOfSameType => "z3-two-of-same-type",
            LemmaId::Z3TwoOfDifType => "z3-two-of-dif-type",
            LemmaId::Z3TwoTwo => "z3-two-two",
            LemmaId::Z3OneFacet => "z3-1facet",
            LemmaId::Z3TwoFacet => "z3-2facet",
        }
    }

    pub fn group(self) -> GroupId {
        match self {
            LemmaId::Z2Simplex | LemmaId::Z2EmptyIntersection => GroupId::Z2,
            LemmaId::Z22EmptyIntersection
            | LemmaId::Z22Integers
            | LemmaId::Z22OneFacet
            | LemmaId::Z22TwoFacet
            | LemmaId::Z22ThreeFacet => GroupId::Z2xZ2,
            _ => GroupId::Z3,
        }
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LemmaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        LemmaId::ALL
            .into_iter()
            .find(|l| l.name() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown lemma {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Claim {
    /// Lattice volume in `Z^d` equals the value.
    Volume(Rat),
    /// Empty or of lower affine dimension.
    ZeroVolume,
    /// Every point lies in the minus side of this cut.
    ContainedIn(OddSubsetCut),
    /// Contained in the minus side of at least one of the candidates.
    ContainedInSome(Vec<OddSubsetCut>),
    /// All vertices are integral.
    IntegralVertices,
}

impl Claim {
    pub fn describe(&self) -> String {
        match self {
            Claim::Volume(v) => format!("volume {}", fmt_rat(v)),
            Claim::ZeroVolume => "not full-dimensional".into(),
            Claim::ContainedIn(c) => format!("contained in H-{}", cut_label(c)),
            Claim::ContainedInSome(cs) => format!("contained in H- of one of {} cuts", cs.len()),
            Claim::IntegralVertices => "integral vertices".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaInstance {
    lemma: LemmaId,
    n: usize,
    hypothesis: String,
    polytope: HPolytope,
    claim: Claim,
}

impl LemmaInstance {
    pub fn lemma(&self) -> LemmaId {
        self.lemma
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn hypothesis(&self) -> &str {
        &self.hypothesis
    }

    pub fn polytope(&self) -> &HPolytope {
        &self.polytope
    }

    pub fn claim(&self) -> &Claim {
        &self.claim
    }

    fn from_cuts(lemma: LemmaId, cuts: Vec<OddSubsetCut>, claim: Claim) -> Result<Self> {
        let group = lemma.group();
        let n = cuts.first().map_or(0, OddSubsetCut::n);
        if let Some(c) = cuts.iter().find(|c| c.group() != group) {
            return Err(Error::GroupMismatch(group, c.group()));
        }
        let hypothesis = cuts.iter().map(cut_label).collect::<Vec<_>>().join(" ");
        let polytope = cuts::cut_piece(&CutSpec::new(group, n, cuts)?)?;
        Ok(LemmaInstance {
            lemma,
            n,
            hypothesis,
            polytope,
            claim,
        })
    }
}

/// `A` rendered as its digit string, followed by the channel.
pub fn cut_label(c: &OddSubsetCut) -> String {
    let digits: String = c.a().iter().map(|d| char::from(b'0' + d)).collect();
    let ch = match (c.group(), c.channel()) {
        (GroupId::Z2, _) => "",
        (GroupId::Z2xZ2, 1) => "a",
        (GroupId::Z2xZ2, 2) => "b",
        (GroupId::Z2xZ2, _) => "c",
        (GroupId::Z3, 1) => "1",
        (GroupId::Z3, _) => "2",
    };
    if ch.is_empty() {
        digits
    } else {
        format!("{digits}/{ch}")
    }
}

fn hyp(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Hypothesis(msg.into()))
    }
}

fn same_n(cuts: &[&OddSubsetCut]) -> Result<usize> {
    let n = cuts[0].n();
    hyp(cuts.iter().all(|c| c.n() == n), "index sets on different leaf counts")?;
    hyp(n >= 2, "n >= 2 required")?;
    Ok(n)
}

fn size(c: &OddSubsetCut) -> u32 {
    c.mask().count_ones()
}

fn sum3(c: &OddSubsetCut) -> i64 {
    c.digit_sum() % 3
}

/// `#{i : a_i + b_i ≡ 0 (mod 3)}`.
fn zero_sum_positions(a: &OddSubsetCut, b: &OddSubsetCut) -> usize {
    a.a().iter().zip(b.a()).filter(|(x, y)| (*x + *y) % 3 == 0).count()
}

fn differing_positions(a: &OddSubsetCut, b: &OddSubsetCut) -> usize {
    a.a().iter().zip(b.a()).filter(|(x, y)| x != y).count()
}

pub fn z2_simplex(a: OddSubsetCut) -> Result<LemmaInstance> {
    hyp(a.group() == GroupId::Z2, "Z2 cut expected")?;
    same_n(&[&a])?;
    LemmaInstance::from_cuts(LemmaId::Z2Simplex, vec![a], Claim::Volume(Rat::one()))
}

pub fn z2_empty_intersection(a: OddSubsetCut, b: OddSubsetCut) -> Result<LemmaInstance> {
    same_n(&[&a, &b])?;
    hyp(a != b, "A and B must differ")?;
    hyp((size(&a) + size(&b)).is_multiple_of(2), "|A| + |B| must be even")?;
    LemmaInstance::from_cuts(LemmaId::Z2EmptyIntersection, vec![a, b], Claim::ZeroVolume)
}

pub fn z22_empty_intersection(a: OddSubsetCut, b: OddSubsetCut) -> Result<LemmaInstance> {
    same_n(&[&a, &b])?;
    hyp(a.channel() == b.channel(), "both cuts on one channel")?;
    hyp(a != b, "A and B must differ")?;
    hyp((size(&a) + size(&b)).is_multiple_of(2), "|A| + |B| must be even")?;
    LemmaInstance::from_cuts(LemmaId::Z22EmptyIntersection, vec![a, b], Claim::ZeroVolume)
}

pub fn z22_one_facet(a: OddSubsetCut) -> Result<LemmaInstance> {
    let n = same_n(&[&a])?;
    let v = formulas::cut_formula(FormulaId::Z22OneFacet, n, None)?;
    LemmaInstance::from_cuts(LemmaId::Z22OneFacet, vec![a], Claim::Volume(v))
}

pub fn z22_two_facet(a: OddSubsetCut, b: OddSubsetCut) -> Result<LemmaInstance> {
    let n = same_n(&[&a, &b])?;
    hyp(a.channel() != b.channel(), "channels must differ")?;
    let v = formulas::cut_formula(FormulaId::Z22TwoFacet, n, None)?;
    LemmaInstance::from_cuts(LemmaId::Z22TwoFacet, vec![a, b], Claim::Volume(v))
}

/// `a`, `b`, `c` on channels α, β, γ respectively.
pub fn z22_three_facet(a: OddSubsetCut, b: OddSubsetCut, c: OddSubsetCut) -> Result<LemmaInstance> {
    let n = same_n(&[&a, &b, &c])?;
    hyp(
        (a.channel(), b.channel(), c.channel()) == (1, 2, 3),
        "channels must be α, β, γ in order",
    )?;
    hyp((size(&a) + size(&b) + size(&c)) % 2 == 1, "|A| + |B| + |C| must be odd")?;
    let v = formulas::cut_formula(FormulaId::Z22ThreeFacet, n, Some([a.mask(), b.mask(), c.mask()]))?;
    LemmaInstance::from_cuts(LemmaId::Z22ThreeFacet, vec![a, b, c], Claim::Volume(v))
}

pub fn z3_empty_intersection(a: OddSubsetCut, b: OddSubsetCut) -> Result<LemmaInstance> {
    same_n(&[&a, &b])?;
    hyp(a.channel() == b.channel(), "both cuts on one channel")?;
    hyp(a != b, "A and B must differ")?;
    hyp(sum3(&a) == sum3(&b), "sums must agree mod 3")?;
    hyp(differing_positions(&a, &b) > 2, "A and B must differ in more than two places")?;
    LemmaInstance::from_cuts(LemmaId::Z3EmptyIntersection, vec![a, b], Claim::ZeroVolume)
}

pub fn z3_two_of_same_type(a: OddSubsetCut, b: OddSubsetCut) -> Result<LemmaInstance> {
    let n = same_n(&[&a, &b])?;
    hyp(a.channel() == b.channel(), "both cuts on one channel")?;
    hyp(sum3(&a) == 2 && sum3(&b) == 2, "both sums must be 2 mod 3")?;
    hyp(differing_positions(&a, &b) == 2, "A and B must differ in exactly two places")?;
    let other = 3 - a.channel();
    let candidates = claw::facet_cuts(GroupId::Z3, n)?
        .into_iter()
        .filter(|c| c.channel() == other)
        .collect();
    LemmaInstance::from_cuts(LemmaId::Z3TwoOfSameType, vec![a, b], Claim::ContainedInSome(candidates))
}

/// `a` on channel 1, `b` on channel 2.
pub fn z3_two_of_dif_type(a: OddSubsetCut, b: OddSubsetCut) -> Result<LemmaInstance> {
    let n = same_n(&[&a, &b])?;
    hyp((a.channel(), b.channel()) == (1, 2), "channels must be 1 and 2")?;
    hyp(a.a() != b.a(), "A and B must differ")?;
    hyp((a.digit_sum() + b.digit_sum()) % 3 == 1, "ΣA + ΣB must be 1 mod 3")?;
    hyp(zero_sum_positions(&a, &b) + 1 < n, "fewer than n - 1 positions with a_i + b_i ≡ 0")?;
    LemmaInstance::from_cuts(LemmaId::Z3TwoOfDifType, vec![a, b], Claim::ZeroVolume)
}

/// `a`, `b` on channel 1 and `c`, `d` on channel 2.
pub fn z3_two_two(a: OddSubsetCut, b: OddSubsetCut, c: OddSubsetCut, d: OddSubsetCut) -> Result<LemmaInstance> {
    same_n(&[&a, &b, &c, &d])?;
    hyp(
        (a.channel(), b.channel(), c.channel(), d.channel()) == (1, 1, 2, 2),
        "channels must be 1, 1, 2, 2",
    )?;
    hyp([&a, &b, &c, &d].iter().all(|x| sum3(x) == 2), "all sums must be 2 mod 3")?;
    hyp(a != b && c != d, "A ≠ B and C ≠ D required")?;
    LemmaInstance::from_cuts(LemmaId::Z3TwoTwo, vec![a, b, c, d], Claim::ZeroVolume)
}

pub fn z3_one_facet(a: OddSubsetCut) -> Result<LemmaInstance> {
    let n = same_n(&[&a])?;
    hyp(a.group() == GroupId::Z3, "Z3 cut expected")?;
    let v = formulas::cut_formula(FormulaId::Z3OneFacet, n, None)?;
    LemmaInstance::from_cuts(LemmaId::Z3OneFacet, vec![a], Claim::Volume(v))
}

/// `a` on channel 1, `b` on channel 2.
pub fn z3_two_facet(a: OddSubsetCut, b: OddSubsetCut) -> Result<LemmaInstance> {
    let n = same_n(&[&a, &b])?;
    hyp((a.channel(), b.channel()) == (1, 2), "channels must be 1 and 2")?;
    hyp(a.a() != b.a(), "A and B must differ")?;
    hyp((a.digit_sum() + b.digit_sum()) % 3 == 1, "ΣA + ΣB must be 1 mod 3")?;
    hyp(zero_sum_positions(&a, &b) + 1 == n, "exactly n - 1 positions with a_i + b_i ≡ 0")?;
    let v = formulas::cut_formula(FormulaId::Z3TwoFacet, n, None)?;
    LemmaInstance::from_cuts(LemmaId::Z3TwoFacet, vec![a, b], Claim::Volume(v))
}

/// Integer data of a polytope in `R^{3n}` cut out by coordinate bounds,
/// block-sum bounds, and one inequality `S_{A,h} >= c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerBoxData {
    pub lower: Vec<i64>,
    pub upper: Vec<i64>,
    pub sum_lower: Vec<i64>,
    pub sum_upper: Vec<i64>,
    pub cut: OddSubsetCut,
    pub c: i64,
}

pub fn z22_integers(data: IntegerBoxData) -> Result<LemmaInstance> {
    let n = data.cut.n();
    hyp(data.cut.group() == GroupId::Z2xZ2, "Z2×Z2 cut expected")?;
    let d = 3 * n;
    hyp(
        data.lower.len() == d && data.upper.len() == d && data.sum_lower.len() == n && data.sum_upper.len() == n,
        "bound vectors have the wrong length",
    )?;
    let mut hs = Vec::with_capacity(2 * d + 2 * n + 1);
    for i in 0..d {
        let mut e = vec![0i64; d];
        e[i] = 1;
        hs.push(HalfSpace::from_ints(&e, data.upper[i])?);
        e[i] = -1;
        hs.push(HalfSpace::from_ints(&e, -data.lower[i])?);
    }
    for j in 0..n {
        let mut e = vec![0i64; d];
        e[3 * j..3 * j + 3].fill(1);
        hs.push(HalfSpace::from_ints(&e, data.sum_upper[j])?);
        e[3 * j..3 * j + 3].fill(-1);
        hs.push(HalfSpace::from_ints(&e, -data.sum_lower[j])?);
    }
    let f: Vec<i64> = data.cut.functional().iter().map(|x| -x).collect();
    hs.push(HalfSpace::from_ints(&f, -data.c)?);
    let hypothesis = format!(
        "x in [{:?}, {:?}], block sums in [{:?}, {:?}], S_{} >= {}",
        data.lower,
        data.upper,
        data.sum_lower,
        data.sum_upper,
        cut_label(&data.cut),
        data.c
    );
    Ok(LemmaInstance {
        lemma: LemmaId::Z22Integers,
        n,
        hypothesis,
        polytope: HPolytope::new(d, hs)?,
        claim: Claim::IntegralVertices,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Confirmed,
    Refuted(String),
}

impl Verdict {
    pub fn is_confirmed(&self) -> bool {
        matches!(self, Verdict::Confirmed)
    }
}

/// The record written for one checked instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub lemma: LemmaId,
    pub n: usize,
    pub hypothesis: String,
    pub expected: String,
    pub computed: String,
    pub verdict: Verdict,
}

pub fn check(inst: &LemmaInstance) -> Result<Outcome> {
    let verts = inst.polytope.vertex_enumeration()?;
    let d = inst.polytope.dim();
    let (computed, ok) = match &inst.claim {
        Claim::Volume(v) => {
            let got = if verts.is_empty() {
                Rat::zero()
            } else {
                volume::lattice_volume(&verts, None)?
            };
            (format!("volume {}", fmt_rat(&got)), got == *v)
        }
        Claim::ZeroVolume => {
            if verts.is_empty() {
                ("empty".into(), true)
            } else {
                let k = verts.affine_dim()?;
                (format!("affine dimension {k} of {d}"), k < d)
            }
        }
        Claim::ContainedIn(c) => {
            let h = c.halfspace(Side::Minus);
            let bad = verts.vertices().iter().filter(|p| !h.contains(p)).count();
            (format!("{bad} vertices outside"), bad == 0)
        }
        Claim::ContainedInSome(cs) => {
            let witness = cs.iter().find(|c| {
                let h = c.halfspace(Side::Minus);
                verts.vertices().iter().all(|p| h.contains(p))
            });
            match witness {
                Some(c) => (format!("contained in H-{}", cut_label(c)), true),
                None => ("no candidate contains the piece".into(), false),
            }
        }
        Claim::IntegralVertices => {
            let bad = verts.vertices().iter().filter(|p| !p.is_integral()).count();
            (format!("{} vertices, {bad} non-integral", verts.len()), bad == 0)
        }
    };
    let verdict = if ok {
        Verdict::Confirmed
    } else {
        Verdict::Refuted(format!("expected {}, got {computed}", inst.claim.describe()))
    };
    Ok(Outcome {
        lemma: inst.lemma,
        n: inst.n,
        hypothesis: inst.hypothesis.clone(),
        expected: inst.claim.describe(),
        computed,
        verdict,
    })
}

fn masks(n: usize) -> impl Iterator<Item = u64> + Clone {
    0..1u64 << n
}

fn sub(g: GroupId, n: usize, m: u64, ch: u8) -> OddSubsetCut {
    OddSubsetCut::from_mask(g, n, m, ch).expect("mask in range")
}

fn tup(a: &[u8], ch: u8) -> OddSubsetCut {
    OddSubsetCut::general(GroupId::Z3, a.to_vec(), ch).expect("ternary digits")
}

/// The exhaustive instance family of a lemma at `n` leaves, in a fixed order.
///
/// `z22-2facet` takes every pair of subsets, odd or not, on channel pairs
/// `g < h`. The `z22-integers` family uses 0/1 or 0/2 coordinate boxes,
/// block-sum bounds `[lo, hi]` with `lo` in `{0, 1}` (first block only for
/// `n > 2`), every `A`, `h`, and `c` in `[-n, n]`.
pub fn instances(lemma: LemmaId, n: usize) -> Result<Vec<LemmaInstance>> {
    hyp(n >= 2, "n >= 2 required")?;
    if n > 8 {
        return Err(Error::GuardRail(format!("lemma families are enumerated for n <= 8, got {n}")));
    }
    let g = lemma.group();
    let t3 = claw::ternary_tuples(n);
    let twos: Vec<&Vec<u8>> = t3.iter().filter(|a| a.iter().map(|&x| x as u32).sum::<u32>() % 3 == 2).collect();
    let mut out = Vec::new();
    match lemma {
        LemmaId::Z2Simplex => {
            for m in masks(n) {
                out.push(z2_simplex(sub(g, n, m, 1))?);
            }
        }
        LemmaId::Z2EmptyIntersection => {
            for a in masks(n) {
                for b in (a + 1)..1 << n {
                    if (a.count_ones() + b.count_ones()) % 2 == 0 {
                        out.push(z2_empty_intersection(sub(g, n, a, 1), sub(g, n, b, 1))?);
                    }
                }
            }
        }
        LemmaId::Z22EmptyIntersection => {
            for ch in 1..=3 {
                for a in masks(n) {
                    for b in (a + 1)..1 << n {
                        if (a.count_ones() + b.count_ones()) % 2 == 0 {
                            out.push(z22_empty_intersection(sub(g, n, a, ch), sub(g, n, b, ch))?);
                        }
                    }
                }
            }
        }
        LemmaId::Z22Integers => {
            let lows: Vec<Vec<i64>> = if n == 2 {
                vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]
            } else {
                let mut first = vec![0; n];
                first[0] = 1;
                vec![vec![0; n], first]
            };
            for hi in [1, 2] {
                for lo in &lows {
                    for ch in 1..=3 {
                        for m in masks(n) {
                            for c in -(n as i64)..=n as i64 {
                                out.push(z22_integers(IntegerBoxData {
                                    lower: vec![0; 3 * n],
                                    upper: vec![hi; 3 * n],
                                    sum_lower: lo.clone(),
                                    sum_upper: vec![hi; n],
                                    cut: sub(g, n, m, ch),
                                    c,
                                })?);
                            }
                        }
                    }
                }
            }
        }
        LemmaId::Z22OneFacet => {
            for ch in 1..=3 {
                for m in masks(n) {
                    out.push(z22_one_facet(sub(g, n, m, ch))?);
                }
            }
        }
        LemmaId::Z22TwoFacet => {
            for (g1, g2) in [(1, 2), (1, 3), (2, 3)] {
                for a in masks(n) {
                    for b in masks(n) {
                        out.push(z22_two_facet(sub(g, n, a, g1), sub(g, n, b, g2))?);
                    }
                }
            }
        }
        LemmaId::Z22ThreeFacet => {
            for a in masks(n) {
                for b in masks(n) {
                    for c in masks(n) {
                        if (a.count_ones() + b.count_ones() + c.count_ones()) % 2 == 1 {
                            out.push(z22_three_facet(sub(g, n, a, 1), sub(g, n, b, 2), sub(g, n, c, 3))?);
                        }
                    }
                }
            }
        }
        LemmaId::Z3EmptyIntersection => {
            for ch in 1..=2 {
                for (i, a) in t3.iter().enumerate() {
                    for b in &t3[i + 1..] {
                        let (ca, cb) = (tup(a, ch), tup(b, ch));
                        if sum3(&ca) == sum3(&cb) && differing_positions(&ca, &cb) > 2 {
                            out.push(z3_empty_intersection(ca, cb)?);
                        }
                    }
                }
            }
        }
        LemmaId::Z3TwoOfSameType => {
            for ch in 1..=2 {
                for (i, a) in twos.iter().enumerate() {
                    for b in &twos[i + 1..] {
                        let (ca, cb) = (tup(a, ch), tup(b, ch));
                        if differing_positions(&ca, &cb) == 2 {
                            out.push(z3_two_of_same_type(ca, cb)?);
                        }
                    }
                }
            }
        }
        LemmaId::Z3TwoOfDifType | LemmaId::Z3TwoFacet => {
            for a in &t3 {
                for b in &t3 {
                    let (ca, cb) = (tup(a, 1), tup(b, 2));
                    if a == b || (ca.digit_sum() + cb.digit_sum()) % 3 != 1 {
                        continue;
                    }
                    let z = zero_sum_positions(&ca, &cb);
                    if lemma == LemmaId::Z3TwoFacet && z + 1 == n {
                        out.push(z3_two_facet(ca, cb)?);
                    } else if lemma == LemmaId::Z3TwoOfDifType && z + 1 < n {
                        out.push(z3_two_of_dif_type(ca, cb)?);
                    }
                }
            }
        }
        LemmaId::Z3TwoTwo => {
            for (i, a) in twos.iter().enumerate() {
                for b in &twos[i + 1..] {
                    for (k, c) in twos.iter().enumerate() {
                        for d in &twos[k + 1..] {
                            out.push(z3_two_two(tup(a, 1), tup(b, 1), tup(c, 2), tup(d, 2))?);
                        }
                    }
                }
            }
        }
        LemmaId::Z3OneFacet => {
            for ch in 1..=2 {
                for a in &t3 {
                    out.push(z3_one_facet(tup(a, ch))?);
                }
            }
        }
    }
    Ok(out)
}

pub fn check_lemma(inst: &LemmaInstance) -> Result<Verdict> {
    Ok(check(inst)?.verdict)
}
