//! The law catalogue for a single algebra.
//!
//! Multilinear laws are checked on basis tuples. Laws in which a variable
//! occurs twice are checked on the diagonal and, polarized, on the pairs
//! `t[p] < t[q]`: `f(.., e_i, .., e_j, ..) + f(.., e_j, .., e_i, ..)`. Together
//! these are equivalent to the law over every field, characteristic 2
//! included.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use super::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{vector, Scalar};

pub const DEFAULT_WITNESS_CAP: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Law {
    Axiom21,
    Axiom22,
    Flexible,
    LeftAlternative,
    RightAlternative,
    Associative,
    Antiassociative,
    Commutative,
    Anticommutative,
    SecondLevelAssociative,
    Eq25,
    Eq31,
    Eq32,
    Eq33,
    Eq34,
    Eq35,
    Eq36,
    Eq37,
    Eq38,
}

impl Law {
    pub const ALL: [Law; 19] = [
        Law::Axiom21,
        Law::Axiom22,
        Law::Flexible,
        Law::LeftAlternative,
        Law::RightAlternative,
        Law::Associative,
        Law::Antiassociative,
        Law::Commutative,
        Law::Anticommutative,
        Law::SecondLevelAssociative,
        Law::Eq25,
        Law::Eq31,
        Law::Eq32,
        Law::Eq33,
        Law::Eq34,
        Law::Eq35,
        Law::Eq36,
        Law::Eq37,
        Law::Eq38,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Law::Axiom21 => "axiom-2-1",
            Law::Axiom22 => "axiom-2-2",
            Law::Flexible => "flexible-E1",
            Law::LeftAlternative => "left-alternative",
            Law::RightAlternative => "right-alternative",
            Law::Associative => "associative",
            Law::Antiassociative => "antiassociative",
            Law::Commutative => "commutative",
            Law::Anticommutative => "anticommutative",
            Law::SecondLevelAssociative => "second-level-associative",
            Law::Eq25 => "eq25",
            Law::Eq31 => "eq31",
            Law::Eq32 => "eq32",
            Law::Eq33 => "eq33",
            Law::Eq34 => "eq34",
            Law::Eq35 => "eq35",
            Law::Eq36 => "eq36",
            Law::Eq37 => "eq37",
            Law::Eq38 => "eq38",
        }
    }

    /// Number of basis slots the residual takes.
    pub fn arity(self) -> usize {
        match self {
            Law::Commutative | Law::Anticommutative => 2,
            Law::SecondLevelAssociative => 4,
            _ => 3,
        }
    }

    /// Slots that carry the same variable, if any.
    pub fn tie(self) -> Option<(usize, usize)> {
        match self {
            Law::Flexible => Some((0, 2)),
            Law::LeftAlternative => Some((0, 1)),
            Law::RightAlternative => Some((1, 2)),
            Law::Eq25 => Some((1, 2)),
            _ => None,
        }
    }

    /// Variable names of the slots, with tied slots sharing a name.
    pub fn variables(self) -> &'static [&'static str] {
        match self {
            Law::Commutative | Law::Anticommutative => &["x", "y"],
            Law::SecondLevelAssociative => &["x", "y", "z", "a"],
            Law::Flexible => &["x", "y", "x"],
            Law::LeftAlternative => &["x", "x", "y"],
            Law::RightAlternative => &["y", "x", "x"],
            Law::Eq25 => &["x", "y", "y"],
            _ => &["x", "y", "z"],
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            Law::Axiom21 => "x(yz) = (xy)z + (yx)z - y(xz)",
            Law::Axiom22 => "(xy)z = x(yz) + x(zy) - (xz)y",
            Law::Flexible => "(xy)x = x(yx)",
            Law::LeftAlternative => "(xx)y = x(xy)",
            Law::RightAlternative => "y(xx) = (yx)x",
            Law::Associative => "(xy)z = x(yz)",
            Law::Antiassociative => "x(yz) = -(xy)z",
            Law::Commutative => "xy = yx",
            Law::Anticommutative => "xy = -yx",
            Law::SecondLevelAssociative => "((xy)z)a = (x(yz))a",
            Law::Eq25 => "x(yy) = (xy)y + (yx)y - y(xy)",
            Law::Eq31 => "(xy)z - x(yz) = -(yx)z + y(xz)",
            Law::Eq32 => "(xy)z - x(yz) = -(zy)x + z(yx)",
            Law::Eq33 => "(xy)z - x(yz) = -(xz)y + x(zy)",
            Law::Eq34 => "(xy)z - x(yz) = (yz)x - y(zx)",
            Law::Eq35 => "(xy)z - x(yz) = (zx)y - z(xy)",
            Law::Eq36 => "(xy)z + z(xy) = x(yz) + (zx)y",
            Law::Eq37 => "(xy)z + (yx)z = x(yz) + y(xz)",
            Law::Eq38 => "z(xy) + z(yx) = (zx)y + (zy)x",
        }
    }

    /// Residual of the (multilinear form of the) law at the given vectors;
    /// zero exactly when the instance holds.
    pub fn residual(self, a: &Algebra, v: &[&[Scalar]]) -> Vec<Scalar> {
        let m = |x: &[Scalar], y: &[Scalar]| a.mul(x, y);
        let f = a.field();
        let n = a.dim();
        let c = |terms: Vec<(i64, Vec<Scalar>)>| vector::combine(f, n, &terms);
        match self {
            Law::Commutative => c(vec![(1, m(v[0], v[1])), (-1, m(v[1], v[0]))]),
            Law::Anticommutative => c(vec![(1, m(v[0], v[1])), (1, m(v[1], v[0]))]),
            Law::SecondLevelAssociative => {
                let (x, y, z, w) = (v[0], v[1], v[2], v[3]);
                let l = m(&m(&m(x, y), z), w);
                let r = m(&m(x, &m(y, z)), w);
                vector::sub(&l, &r)
            }
            _ => {
                let (x, y, z) = (v[0], v[1], v[2]);
                let xy_z = || m(&m(x, y), z);
                let x_yz = || m(x, &m(y, z));
                match self {
                    Law::Axiom21 => c(vec![
                        (1, x_yz()),
                        (-1, xy_z()),
                        (-1, m(&m(y, x), z)),
                        (1, m(y, &m(x, z))),
                    ]),
                    Law::Axiom22 => c(vec![
                        (1, xy_z()),
                        (-1, x_yz()),
                        (-1, m(x, &m(z, y))),
                        (1, m(&m(x, z), y)),
                    ]),
                    // slots (x, y, x')
                    Law::Flexible => vector::sub(&xy_z(), &x_yz()),
                    // slots (x, x', y)
                    Law::LeftAlternative => vector::sub(&xy_z(), &x_yz()),
                    // slots (y, x, x')
                    Law::RightAlternative => vector::sub(&x_yz(), &xy_z()),
                    Law::Associative => vector::sub(&xy_z(), &x_yz()),
                    Law::Antiassociative => vector::add(&x_yz(), &xy_z()),
                    // slots (x, y, y')
                    Law::Eq25 => c(vec![
                        (1, x_yz()),
                        (-1, xy_z()),
                        (-1, m(&m(y, x), z)),
                        (1, m(y, &m(x, z))),
                    ]),
                    Law::Eq31 => c(vec![
                        (1, xy_z()),
                        (-1, x_yz()),
                        (1, m(&m(y, x), z)),
                        (-1, m(y, &m(x, z))),
                    ]),
                    Law::Eq32 => c(vec![
                        (1, xy_z()),
                        (-1, x_yz()),
                        (1, m(&m(z, y), x)),
                        (-1, m(z, &m(y, x))),
                    ]),
                    Law::Eq33 => c(vec![
                        (1, xy_z()),
                        (-1, x_yz()),
                        (1, m(&m(x, z), y)),
                        (-1, m(x, &m(z, y))),
                    ]),
                    Law::Eq34 => c(vec![
                        (1, xy_z()),
                        (-1, x_yz()),
                        (-1, m(&m(y, z), x)),
                        (1, m(y, &m(z, x))),
                    ]),
                    Law::Eq35 => c(vec![
                        (1, xy_z()),
                        (-1, x_yz()),
                        (-1, m(&m(z, x), y)),
                        (1, m(z, &m(x, y))),
                    ]),
                    Law::Eq36 => c(vec![
                        (1, xy_z()),
                        (1, m(z, &m(x, y))),
                        (-1, x_yz()),
                        (-1, m(&m(z, x), y)),
                    ]),
                    Law::Eq37 => c(vec![
                        (1, xy_z()),
                        (1, m(&m(y, x), z)),
                        (-1, x_yz()),
                        (-1, m(y, &m(x, z))),
                    ]),
                    Law::Eq38 => c(vec![
                        (1, m(z, &m(x, y))),
                        (1, m(z, &m(y, x))),
                        (-1, m(&m(z, x), y)),
                        (-1, m(&m(z, y), x)),
                    ]),
                    _ => unreachable!(),
                }
            }
        }
    }

    pub fn check(self, a: &Algebra, cap: usize) -> LawReport {
        let dims = vec![a.dim(); self.arity()];
        let units: Vec<Vec<Scalar>> = (0..a.dim()).map(|i| a.unit_vector(i)).collect();
        let eval = |t: &[usize]| {
            let args: Vec<&[Scalar]> = t.iter().map(|&i| units[i].as_slice()).collect();
            self.residual(a, &args)
        };
        let scan = scan_tuples(&dims, self.tie(), cap, false, eval);
        LawReport::from_scan(self.name(), scan, |t| label(a.names(), t))
    }

    /// Short-circuiting form of [`Law::check`].
    pub fn holds(self, a: &Algebra) -> bool {
        let dims = vec![a.dim(); self.arity()];
        let units: Vec<Vec<Scalar>> = (0..a.dim()).map(|i| a.unit_vector(i)).collect();
        let eval = |t: &[usize]| {
            let args: Vec<&[Scalar]> = t.iter().map(|&i| units[i].as_slice()).collect();
            self.residual(a, &args)
        };
        scan_tuples(&dims, self.tie(), 1, true, eval).count == 0
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Law {
    type Err = Error;

    fn from_str(s: &str) -> Result<Law> {
        let key = s.trim().to_ascii_lowercase();
        let alias = match key.as_str() {
            "flexible" | "e1" => Some(Law::Flexible),
            "axiom21" | "axiom-21" => Some(Law::Axiom21),
            "axiom22" | "axiom-22" => Some(Law::Axiom22),
            _ => None,
        };
        alias
            .or_else(|| Law::ALL.into_iter().find(|l| l.name().eq_ignore_ascii_case(&key)))
            .ok_or_else(|| Error::UnknownLaw(s.to_string()))
    }
}

fn label(names: &[String], t: &[usize]) -> String {
    let parts: Vec<&str> = t.iter().map(|&i| names[i].as_str()).collect();
    format!("({})", parts.join(","))
}

/// One failing basis tuple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub tuple: Vec<usize>,
    pub label: String,
    /// True when the residual is the symmetrized value over a tie.
    pub polarized: bool,
    pub residual: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub law: String,
    pub holds: bool,
    /// Total number of failing tuples; `witnesses` holds at most the cap.
    pub failures: usize,
    pub witnesses: Vec<Witness>,
}

impl LawReport {
    pub(crate) fn from_scan(name: &str, scan: Scan, label: impl Fn(&[usize]) -> String) -> LawReport {
        LawReport {
            law: name.to_string(),
            holds: scan.count == 0,
            failures: scan.count,
            witnesses: scan
                .hits
                .into_iter()
                .map(|(tuple, polarized, residual)| Witness {
                    label: label(&tuple),
                    tuple,
                    polarized,
                    residual,
                })
                .collect(),
        }
    }
}

pub(crate) struct Scan {
    pub count: usize,
    pub hits: Vec<(Vec<usize>, bool, Vec<Scalar>)>,
}

const PARALLEL_THRESHOLD: usize = 4096;

/// Evaluates `residual` over every tuple in `dims[0] × dims[1] × …` in
/// lexicographic order, with polarization over `tie`. Keeps the first `cap`
/// failures and counts all of them, or stops at the first when `stop_early`.
pub(crate) fn scan_tuples<F>(
    dims: &[usize],
    tie: Option<(usize, usize)>,
    cap: usize,
    stop_early: bool,
    residual: F,
) -> Scan
where
    F: Fn(&[usize]) -> Vec<Scalar> + Sync,
{
    let total: usize = dims.iter().product();
    let visit = |t: &[usize]| -> Option<(bool, Vec<Scalar>)> {
        let (r, polarized) = match tie {
            Some((p, q)) if t[p] > t[q] => return None,
            Some((p, q)) if t[p] < t[q] => {
                let mut s = t.to_vec();
                s.swap(p, q);
                (vector::add(&residual(t), &residual(&s)), true)
            }
            _ => (residual(t), false),
        };
        (!vector::is_zero(&r)).then_some((polarized, r))
    };
    if total == 0 {
        return Scan {
            count: 0,
            hits: Vec::new(),
        };
    }
    if stop_early || total < PARALLEL_THRESHOLD || dims.len() < 2 {
        let mut scan = Scan {
            count: 0,
            hits: Vec::new(),
        };
        let mut t = vec![0; dims.len()];
        loop {
            if let Some((pol, r)) = visit(&t) {
                scan.count += 1;
                if scan.hits.len() < cap {
                    scan.hits.push((t.clone(), pol, r));
                }
                if stop_early {
                    return scan;
                }
            }
            if !advance(&mut t, dims, 0) {
                return scan;
            }
        }
    }
    let parts: Vec<Scan> = (0..dims[0])
        .into_par_iter()
        .map(|first| {
            let mut scan = Scan {
                count: 0,
                hits: Vec::new(),
            };
            let mut t = vec![0; dims.len()];
            t[0] = first;
            loop {
                if let Some((pol, r)) = visit(&t) {
                    scan.count += 1;
                    if scan.hits.len() < cap {
                        scan.hits.push((t.clone(), pol, r));
                    }
                }
                if !advance(&mut t, dims, 1) {
                    return scan;
                }
            }
        })
        .collect();
    let mut scan = Scan {
        count: 0,
        hits: Vec::new(),
    };
    for p in parts {
        scan.count += p.count;
        for h in p.hits {
            if scan.hits.len() < cap {
                scan.hits.push(h);
            }
        }
    }
    scan
}

/// Odometer increment over slots `from..`; false once it wraps.
fn advance(t: &mut [usize], dims: &[usize], from: usize) -> bool {
    for s in (from..t.len()).rev() {
        t[s] += 1;
        if t[s] < dims[s] {
            return true;
        }
        t[s] = 0;
    }
    false
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub galt: bool,
    pub alt: bool,
    pub associative: bool,
    pub commutative: bool,
    pub anticommutative: bool,
    pub flexible: bool,
}

impl Classification {
    pub fn flags(&self) -> Vec<&'static str> {
        [
            (self.galt, "galt"),
            (self.alt, "alt"),
            (self.associative, "associative"),
            (self.commutative, "commutative"),
            (self.anticommutative, "anticommutative"),
            (self.flexible, "flexible"),
        ]
        .into_iter()
        .filter_map(|(on, name)| on.then_some(name))
        .collect()
    }
}

pub fn classify(a: &Algebra) -> Classification {
    let galt = Law::Axiom21.holds(a) && Law::Axiom22.holds(a);
    let flexible = Law::Flexible.holds(a);
    Classification {
        galt,
        alt: galt && flexible,
        associative: Law::Associative.holds(a),
        commutative: Law::Commutative.holds(a),
        anticommutative: Law::Anticommutative.holds(a),
        flexible,
    }
}
