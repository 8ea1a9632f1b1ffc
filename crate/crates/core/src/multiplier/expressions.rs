use std::fmt;
use std::str::FromStr;

use super::MultiplierPair;
use crate::error::{Error, Result};
use crate::linalg::{vector, Scalar};

/// The second-level identities for three acting pairs, read through their
/// action on `a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BIdentity {
    B1,
    B2,
    B3,
    B4,
}

impl BIdentity {
    pub const ALL: [BIdentity; 4] = [BIdentity::B1, BIdentity::B2, BIdentity::B3, BIdentity::B4];

    pub fn name(self) -> &'static str {
        match self {
            BIdentity::B1 => "B1",
            BIdentity::B2 => "B2",
            BIdentity::B3 => "B3",
            BIdentity::B4 => "B4",
        }
    }
}

impl fmt::Display for BIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BIdentity {
    type Err = Error;

    fn from_str(s: &str) -> Result<BIdentity> {
        BIdentity::ALL
            .into_iter()
            .find(|b| b.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

fn check(pairs: [&MultiplierPair; 3], a: &[Scalar]) -> Result<()> {
    let n = a.len();
    if pairs.iter().any(|p| p.size() != n) {
        return Err(Error::DimensionMismatch(format!(
            "pairs and a vector of length {n} disagree"
        )));
    }
    if let Some(s) = a.iter().find(|s| s.field() != pairs[0].field()) {
        return Err(Error::FieldMismatch {
            expected: pairs[0].field(),
            found: s.field(),
        });
    }
    Ok(())
}

/// Residual of `which` at `(b1, b2, b3; a)`:
///
/// * B1: `−(b1(b2b3))a + ((b1b2)b3)a + ((b2b1)b3)a − (b2(b1b3))a`
/// * B2: the same with the pairs acting on the right of `a`
/// * B3: `−((b1b2)b3)a + (b1(b2b3))a + (b1(b3b2))a − ((b1b3)b2)a`
/// * B4: B3 with right actions
pub fn identity_b(
    which: BIdentity,
    b1: &MultiplierPair,
    b2: &MultiplierPair,
    b3: &MultiplierPair,
    a: &[Scalar],
) -> Result<Vec<Scalar>> {
    check([b1, b2, b3], a)?;
    let m = |x: &MultiplierPair, y: &MultiplierPair| x.mul_unchecked(y);
    let terms: [(i64, MultiplierPair); 4] = match which {
        BIdentity::B1 | BIdentity::B2 => [
            (-1, m(b1, &m(b2, b3))),
            (1, m(&m(b1, b2), b3)),
            (1, m(&m(b2, b1), b3)),
            (-1, m(b2, &m(b1, b3))),
        ],
        BIdentity::B3 | BIdentity::B4 => [
            (-1, m(&m(b1, b2), b3)),
            (1, m(b1, &m(b2, b3))),
            (1, m(b1, &m(b3, b2))),
            (-1, m(&m(b1, b3), b2)),
        ],
    };
    let left = matches!(which, BIdentity::B1 | BIdentity::B3);
    let applied: Vec<(i64, Vec<Scalar>)> = terms
        .iter()
        .map(|(s, p)| (*s, if left { p.act_left(a) } else { p.act_right(a) }))
        .collect();
    Ok(vector::combine(b1.field(), a.len(), &applied))
}

/// The expressions A1…A11 (index `i` from 1):
///
/// ```text
/// A1  = b1(b2(b3a)) + b1(b2(ab3))      A7  = b1(b2(ab3)) + b1((ab3)b2)
/// A2  = b1((ab2)b3) + b1((b2a)b3)      A8  = (b1(b2a))b3 + (b1(ab2))b3
/// A3  = ((b1a)b2)b3 + (b2(b1a))b3      A9  = ((ab1)b2)b3 + (b2(ab1))b3
/// A4  = b1(b2(ab3)) + b2(b1(ab3))      A10 = ((ab3)b1)b2 + ((ab3)b2)b1
/// A5  = ((b1a)b2)b3 + ((b2a)b1)b3      A11 = b3(b2(ab1)) + b3(b1(ab2))
/// A6  = b1(b2(b3a)) + b1((b3a)b2)
/// ```
pub fn expression_a(
    i: usize,
    b1: &MultiplierPair,
    b2: &MultiplierPair,
    b3: &MultiplierPair,
    a: &[Scalar],
) -> Result<Vec<Scalar>> {
    check([b1, b2, b3], a)?;
    let l = |b: &MultiplierPair, x: &[Scalar]| b.act_left(x);
    let r = |x: &[Scalar], b: &MultiplierPair| b.act_right(x);
    let (u, v) = match i {
        1 => (l(b1, &l(b2, &l(b3, a))), l(b1, &l(b2, &r(a, b3)))),
        2 => (l(b1, &r(&r(a, b2), b3)), l(b1, &r(&l(b2, a), b3))),
        3 => (r(&r(&l(b1, a), b2), b3), r(&l(b2, &l(b1, a)), b3)),
        4 => (l(b1, &l(b2, &r(a, b3))), l(b2, &l(b1, &r(a, b3)))),
        5 => (r(&r(&l(b1, a), b2), b3), r(&r(&l(b2, a), b1), b3)),
        6 => (l(b1, &l(b2, &l(b3, a))), l(b1, &r(&l(b3, a), b2))),
        7 => (l(b1, &l(b2, &r(a, b3))), l(b1, &r(&r(a, b3), b2))),
        8 => (r(&l(b1, &l(b2, a)), b3), r(&l(b1, &r(a, b2)), b3)),
        9 => (r(&r(&r(a, b1), b2), b3), r(&l(b2, &r(a, b1)), b3)),
        10 => (r(&r(&r(a, b3), b1), b2), r(&r(&r(a, b3), b2), b1)),
        11 => (l(b3, &l(b2, &r(a, b1))), l(b3, &l(b1, &r(a, b2)))),
        _ => return Err(Error::UnknownIdentity(format!("A{i}"))),
    };
    Ok(vector::add(&u, &v))
}
