use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::action::{Category, Identity};
use crate::algebra::{Algebra, Law, LawReport, DEFAULT_WITNESS_CAP};
use crate::error::{Error, Result};
use crate::linalg::{Field, Scalar};
use crate::multiplier::{bim, Variant};
use crate::socle::b_identity_scan;

/// Hits kept in a report; the count covers all of them.
pub const HIT_CAP: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    /// g-alternative but not flexible.
    GaltNotAlt,
    /// g-alternative, and the bimultiplication closure fails B1.
    B1Failure,
    /// g-alternative, and the canonical action of the closure fails I1.
    I1Failure,
    /// g-alternative, anticommutative, zero annihilator, nonzero.
    AnticommAnn0Nonzero,
    /// Satisfies the first law and fails the second.
    CustomLawPair { holds: Law, fails: Law },
}

impl Target {
    pub fn name(&self) -> String {
        match self {
            Target::GaltNotAlt => "galt-not-alt".into(),
            Target::B1Failure => "b1-failure".into(),
            Target::I1Failure => "i1-failure".into(),
            Target::AnticommAnn0Nonzero => "anticomm-ann0-nonzero".into(),
            Target::CustomLawPair { holds, fails } => format!("custom-law-pair:{holds},{fails}"),
        }
    }

    /// Fast filter, cheapest laws first.
    fn matches(&self, a: &Algebra) -> bool {
        let galt = |a: &Algebra| Law::Axiom21.holds(a) && Law::Axiom22.holds(a);
        match self {
            Target::GaltNotAlt => !Law::Flexible.holds(a) && galt(a),
            Target::AnticommAnn0Nonzero => {
                a.dim() > 0 && Law::Anticommutative.holds(a) && a.annihilator().is_zero() && galt(a)
            }
            Target::B1Failure => {
                galt(a)
                    && bim(a, Variant::Galt)
                        .map(|act| !b_identity_scan(&act)[0].holds)
                        .unwrap_or(false)
            }
            Target::I1Failure => {
                galt(a)
                    && bim(a, Variant::Galt)
                        .map(|act| !act.canonical_action().check_identity(Identity::I1).holds)
                        .unwrap_or(false)
            }
            Target::CustomLawPair { holds, fails } => !fails.holds(a) && holds.holds(a),
        }
    }

    /// Full reports for a candidate; the hit stands only if they confirm it.
    fn verify(&self, a: &Algebra) -> (bool, Vec<LawReport>) {
        let law = |l: Law| l.check(a, DEFAULT_WITNESS_CAP);
        let galt = || vec![law(Law::Axiom21), law(Law::Axiom22)];
        let all_hold = |r: &[LawReport]| r.iter().all(|r| r.holds);
        match self {
            Target::GaltNotAlt => {
                let mut r = galt();
                let ok = all_hold(&r);
                let flex = law(Law::Flexible);
                let ok = ok && !flex.holds;
                r.push(flex);
                (ok, r)
            }
            Target::AnticommAnn0Nonzero => {
                let mut r = galt();
                let anti = law(Law::Anticommutative);
                let ok = all_hold(&r) && anti.holds && a.dim() > 0 && a.annihilator().is_zero();
                r.push(anti);
                (ok, r)
            }
            Target::B1Failure | Target::I1Failure => {
                let mut r = galt();
                let ok = all_hold(&r);
                let Ok(actor) = bim(a, Variant::Galt) else {
                    return (false, r);
                };
                let failing = if *self == Target::B1Failure {
                    b_identity_scan(&actor).swap_remove(0)
                } else {
                    actor.canonical_action().check_identity(Identity::I1)
                };
                let ok = ok && !failing.holds && Category::Galt.contains(a);
                r.push(failing);
                (ok, r)
            }
            Target::CustomLawPair { holds, fails } => {
                let (h, f) = (law(*holds), law(*fails));
                (h.holds && !f.holds, vec![h, f])
            }
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for Target {
    type Err = Error;

    /// Also accepts `custom-law-pair:<holds>,<fails>`.
    fn from_str(s: &str) -> Result<Target> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("custom-law-pair") {
            let rest = rest.trim_start_matches(':');
            let (h, f) = rest
                .split_once(',')
                .ok_or_else(|| Error::Precondition("custom-law-pair needs two laws: custom-law-pair:L1,L2".into()))?;
            return Ok(Target::CustomLawPair {
                holds: h.parse()?,
                fails: f.parse()?,
            });
        }
        match s {
            "galt-not-alt" => Ok(Target::GaltNotAlt),
            "b1-failure" => Ok(Target::B1Failure),
            "i1-failure" => Ok(Target::I1Failure),
            "anticomm-ann0-nonzero" => Ok(Target::AnticommAnn0Nonzero),
            _ => Err(Error::Precondition(format!("unknown search target {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchSpec {
    pub dim: usize,
    pub field: Field,
    pub target: Target,
    pub budget: u64,
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchMode {
    Exhaustive,
    Random,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchHit {
    /// Enumeration index (exhaustive) or sample number (random).
    pub index: u64,
    pub algebra: Algebra,
    pub reports: Vec<LawReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub target: String,
    pub field: String,
    pub dim: usize,
    pub seed: u64,
    pub mode: SearchMode,
    pub examined: u64,
    pub hit_count: u64,
    /// The first [`HIT_CAP`] hits in enumeration order.
    pub hits: Vec<SearchHit>,
}

fn table_count(field: Field, dim: usize) -> Option<u64> {
    let p = field.order()?;
    let exp = u32::try_from(dim.pow(3)).ok()?;
    p.checked_pow(exp)
}

fn decode(field: Field, dim: usize, mut index: u64) -> Algebra {
    let p = field.order().expect("finite field");
    let table: Vec<Scalar> = (0..dim.pow(3))
        .map(|_| {
            let digit = index % p;
            index /= p;
            field.element(digit)
        })
        .collect();
    Algebra::new(field, crate::algebra::default_names(dim), table).expect("table of the right size")
}

/// One random table with i.i.d. uniform constants. When `structured`, only
/// `e_i e_j` landing on `e_k` with `k > max(i, j)` may be nonzero, which
/// makes nilpotent g-alternative tables such as w4 reachable. The random
/// search alternates the two kinds.
pub fn sample_table<R: Rng>(field: Field, dim: usize, rng: &mut R, structured: bool) -> Algebra {
    let p = field.order().expect("finite field");
    let mut table = Vec::with_capacity(dim.pow(3));
    for i in 0..dim {
        for j in 0..dim {
            for k in 0..dim {
                let allowed = !structured || k > i.max(j);
                table.push(if allowed {
                    field.element(rng.random_range(0..p))
                } else {
                    field.zero()
                });
            }
        }
    }
    Algebra::new(field, crate::algebra::default_names(dim), table).expect("table of the right size")
}

/// A seeded g-alternative algebra of the given dimension, by rejection from
/// the same mixture as the random search. Falls back to the zero algebra.
pub fn random_galt(field: Field, dim: usize, seed: u64) -> Algebra {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..10_000u32 {
        let a = sample_table(field, dim, &mut rng, attempt % 2 == 1);
        if Category::Galt.contains(&a) {
            return a;
        }
    }
    Algebra::zero(field, dim)
}

/// Exhaustive when every table fits in the budget, otherwise `budget`
/// seeded samples. Deterministic in the spec.
pub fn search(spec: &SearchSpec) -> Result<SearchReport> {
    if spec.budget == 0 {
        return Err(Error::Precondition("budget must be positive".into()));
    }
    if !spec.field.is_finite() {
        return Err(Error::Precondition("search runs over finite fields only".into()));
    }
    let (mode, examined) = match table_count(spec.field, spec.dim) {
        Some(total) if total <= spec.budget => (SearchMode::Exhaustive, total),
        _ => (SearchMode::Random, spec.budget),
    };
    let candidate = |i: u64| -> Algebra {
        match mode {
            SearchMode::Exhaustive => decode(spec.field, spec.dim, i),
            SearchMode::Random => {
                let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
                rng.set_stream(i);
                sample_table(spec.field, spec.dim, &mut rng, i.is_multiple_of(2))
            }
        }
    };
    let found: Vec<u64> = (0..examined)
        .into_par_iter()
        .filter(|&i| spec.target.matches(&candidate(i)))
        .collect();
    let mut hits = Vec::new();
    let mut hit_count = 0;
    for i in found {
        let algebra = candidate(i);
        let (ok, reports) = spec.target.verify(&algebra);
        if !ok {
            continue;
        }
        hit_count += 1;
        if hits.len() < HIT_CAP {
            hits.push(SearchHit {
                index: i,
                algebra,
                reports,
            });
        }
    }
    Ok(SearchReport {
        target: spec.target.name(),
        field: spec.field.to_string(),
        dim: spec.dim,
        seed: spec.seed,
        mode,
        examined,
        hit_count,
        hits,
    })
}
