//! Bilinear actions of one algebra on another, the derived-action identity
//! systems, and semidirect products.

mod extension;

pub use extension::SplitExtensionData;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::algebra::{scan_tuples, Algebra, Law, LawReport, Witness, DEFAULT_WITNESS_CAP};
use crate::error::{Error, Result};
use crate::linalg::{vector, Field, Matrix, Scalar};

/// Target category for derived actions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Category {
    Galt,
    Alt,
}

impl Category {
    pub fn name(self) -> &'static str {
        match self {
            Category::Galt => "galt",
            Category::Alt => "alt",
        }
    }

    /// Whether `a` is an object of the category.
    pub fn contains(self, a: &Algebra) -> bool {
        let galt = Law::Axiom21.holds(a) && Law::Axiom22.holds(a);
        match self {
            Category::Galt => galt,
            Category::Alt => galt && Law::Flexible.holds(a),
        }
    }

    pub fn identities(self) -> &'static [Identity] {
        match self {
            Category::Galt => &Identity::ALL[..8],
            Category::Alt => &Identity::ALL,
        }
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Category {
    type Err = Error;

    fn from_str(s: &str) -> Result<Category> {
        match s.trim().to_ascii_lowercase().as_str() {
            "galt" => Ok(Category::Galt),
            "alt" => Ok(Category::Alt),
            _ => Err(Error::Precondition(format!(
                "unknown category {s:?}, expected galt or alt"
            ))),
        }
    }
}

/// Which algebra a slot of an identity ranges over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Acting,
    Target,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Identity {
    I1,
    I2,
    I3,
    I4,
    II1,
    II2,
    II3,
    II4,
    III1,
    III2,
}

impl Identity {
    pub const ALL: [Identity; 10] = [
        Identity::I1,
        Identity::I2,
        Identity::I3,
        Identity::I4,
        Identity::II1,
        Identity::II2,
        Identity::II3,
        Identity::II4,
        Identity::III1,
        Identity::III2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::I1 => "I1",
            Identity::I2 => "I2",
            Identity::I3 => "I3",
            Identity::I4 => "I4",
            Identity::II1 => "II1",
            Identity::II2 => "II2",
            Identity::II3 => "II3",
            Identity::II4 => "II4",
            Identity::III1 => "III1",
            Identity::III2 => "III2",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            Identity::I1 => "b(a1a2) = (ba1)a2 + (a1b)a2 - a1(ba2)",
            Identity::I2 => "(a1a2)b = a1(a2b) + a1(ba2) - (a1b)a2",
            Identity::I3 => "(ba1)a2 = b(a1a2) + b(a2a1) - (ba2)a1",
            Identity::I4 => "a1(a2b) = (a1a2)b + (a2a1)b - a2(a1b)",
            Identity::II1 => "(b1b2)a = b1(b2a) + b1(ab2) - (b1a)b2",
            Identity::II2 => "a(b1b2) = (ab1)b2 + (b1a)b2 - b1(ab2)",
            Identity::II3 => "(ab1)b2 = a(b1b2) + a(b2b1) - (ab2)b1",
            Identity::II4 => "b1(b2a) = (b1b2)a + (b2b1)a - b2(b1a)",
            Identity::III1 => "a(ba) = (ab)a",
            Identity::III2 => "b(ab) = (ba)b",
        }
    }

    /// Slot kinds in residual order.
    pub fn slots(self) -> [Side; 3] {
        use Side::*;
        match self {
            Identity::I1 | Identity::I2 | Identity::I3 | Identity::I4 => [Acting, Target, Target],
            Identity::II1 | Identity::II2 | Identity::II3 | Identity::II4 => [Acting, Acting, Target],
            Identity::III1 => [Target, Acting, Target],
            Identity::III2 => [Acting, Target, Acting],
        }
    }

    pub fn tie(self) -> Option<(usize, usize)> {
        match self {
            Identity::III1 | Identity::III2 => Some((0, 2)),
            _ => None,
        }
    }

    /// Residual at `(u, v, w)` whose kinds follow [`Identity::slots`].
    pub fn residual<O: ActionOps + ?Sized>(self, ops: &O, u: &[Scalar], v: &[Scalar], w: &[Scalar]) -> Vec<Scalar> {
        let n = ops.target_dim();
        let c = |terms: Vec<(i64, Vec<Scalar>)>| vector::combine(ops.field(), n, &terms);
        let aa = |x: &[Scalar], y: &[Scalar]| ops.aa(x, y);
        let ba = |x: &[Scalar], y: &[Scalar]| ops.ba(x, y);
        let ab = |x: &[Scalar], y: &[Scalar]| ops.ab(x, y);
        let bb = |x: &[Scalar], y: &[Scalar]| ops.bb(x, y);
        match self {
            Identity::I1 => {
                let (b, a1, a2) = (u, v, w);
                c(vec![
                    (1, ba(b, &aa(a1, a2))),
                    (-1, aa(&ba(b, a1), a2)),
                    (-1, aa(&ab(a1, b), a2)),
                    (1, aa(a1, &ba(b, a2))),
                ])
            }
            Identity::I2 => {
                let (b, a1, a2) = (u, v, w);
                c(vec![
                    (1, ab(&aa(a1, a2), b)),
                    (-1, aa(a1, &ab(a2, b))),
                    (-1, aa(a1, &ba(b, a2))),
                    (1, aa(&ab(a1, b), a2)),
                ])
            }
            Identity::I3 => {
                let (b, a1, a2) = (u, v, w);
                c(vec![
                    (1, aa(&ba(b, a1), a2)),
                    (-1, ba(b, &aa(a1, a2))),
                    (-1, ba(b, &aa(a2, a1))),
                    (1, aa(&ba(b, a2), a1)),
                ])
            }
            Identity::I4 => {
                let (b, a1, a2) = (u, v, w);
                c(vec![
                    (1, aa(a1, &ab(a2, b))),
                    (-1, ab(&aa(a1, a2), b)),
                    (-1, ab(&aa(a2, a1), b)),
                    (1, aa(a2, &ab(a1, b))),
                ])
            }
            Identity::II1 => {
                let (b1, b2, a) = (u, v, w);
                c(vec![
                    (1, ba(&bb(b1, b2), a)),
                    (-1, ba(b1, &ba(b2, a))),
                    (-1, ba(b1, &ab(a, b2))),
                    (1, ab(&ba(b1, a), b2)),
                ])
            }
            Identity::II2 => {
                let (b1, b2, a) = (u, v, w);
                c(vec![
                    (1, ab(a, &bb(b1, b2))),
                    (-1, ab(&ab(a, b1), b2)),
                    (-1, ab(&ba(b1, a), b2)),
                    (1, ba(b1, &ab(a, b2))),
                ])
            }
            Identity::II3 => {
                let (b1, b2, a) = (u, v, w);
                c(vec![
                    (1, ab(&ab(a, b1), b2)),
                    (-1, ab(a, &bb(b1, b2))),
                    (-1, ab(a, &bb(b2, b1))),
                    (1, ab(&ab(a, b2), b1)),
                ])
            }
            Identity::II4 => {
                let (b1, b2, a) = (u, v, w);
                c(vec![
                    (1, ba(b1, &ba(b2, a))),
                    (-1, ba(&bb(b1, b2), a)),
                    (-1, ba(&bb(b2, b1), a)),
                    (1, ba(b2, &ba(b1, a))),
                ])
            }
            Identity::III1 => {
                let (a, b, a2) = (u, v, w);
                vector::sub(&aa(a, &ba(b, a2)), &aa(&ab(a, b), a2))
            }
            Identity::III2 => {
                let (b, a, b2) = (u, v, w);
                vector::sub(&ba(b, &ab(a, b2)), &ab(&ba(b, a), b2))
            }
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Identity> {
        let key = s.trim().to_ascii_uppercase();
        Identity::ALL
            .into_iter()
            .find(|i| i.name() == key)
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

/// The four bilinear operations an identity evaluates. Acting elements are
/// vectors of length `acting_dim`; the acting product `bb` returns one too.
pub trait ActionOps: Sync {
    fn field(&self) -> Field;
    fn acting_dim(&self) -> usize;
    fn target_dim(&self) -> usize;
    fn aa(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar>;
    fn ba(&self, b: &[Scalar], a: &[Scalar]) -> Vec<Scalar>;
    fn ab(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar>;
    fn bb(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar>;
}

/// Checks one identity on all basis tuples. `names` label the acting and
/// target bases.
pub fn check_identity<O: ActionOps>(
    ops: &O,
    id: Identity,
    acting_names: &[String],
    target_names: &[String],
    cap: usize,
) -> LawReport {
    let f = ops.field();
    let (nb, na) = (ops.acting_dim(), ops.target_dim());
    let slots = id.slots();
    let dims: Vec<usize> = slots.iter().map(|s| if *s == Side::Acting { nb } else { na }).collect();
    let units = |s: Side, i: usize| match s {
        Side::Acting => vector::unit(f, nb, i),
        Side::Target => vector::unit(f, na, i),
    };
    let eval = |t: &[usize]| {
        id.residual(
            ops,
            &units(slots[0], t[0]),
            &units(slots[1], t[1]),
            &units(slots[2], t[2]),
        )
    };
    let scan = scan_tuples(&dims, id.tie(), cap, false, eval);
    LawReport::from_scan(id.name(), scan, |t| {
        let parts: Vec<&str> = t
            .iter()
            .zip(slots)
            .map(|(&i, s)| match s {
                Side::Acting => acting_names[i].as_str(),
                Side::Target => target_names[i].as_str(),
            })
            .collect();
        format!("({})", parts.join(","))
    })
}

/// A pair of bilinear maps `B × A → A` and `A × B → A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionData {
    acting: Algebra,
    target: Algebra,
    /// `l[b][a][k]`, flat `(b * na + a) * na + k`.
    left: Vec<Scalar>,
    /// `r[a][b][k]`, flat `(a * nb + b) * na + k`.
    right: Vec<Scalar>,
}

impl ActionData {
    pub fn new(acting: Algebra, target: Algebra, left: Vec<Scalar>, right: Vec<Scalar>) -> Result<ActionData> {
        if acting.field() != target.field() {
            return Err(Error::FieldMismatch {
                expected: target.field(),
                found: acting.field(),
            });
        }
        let (nb, na) = (acting.dim(), target.dim());
        if left.len() != nb * na * na || right.len() != na * nb * na {
            return Err(Error::DimensionMismatch(format!(
                "action tensors of sizes {} and {}, expected {}",
                left.len(),
                right.len(),
                nb * na * na
            )));
        }
        let f = target.field();
        if let Some(s) = left.iter().chain(&right).find(|s| s.field() != f) {
            return Err(Error::FieldMismatch {
                expected: f,
                found: s.field(),
            });
        }
        Ok(ActionData {
            acting,
            target,
            left,
            right,
        })
    }

    pub fn zero(acting: Algebra, target: Algebra) -> Result<ActionData> {
        let f = target.field();
        let size = acting.dim() * target.dim() * target.dim();
        ActionData::new(acting, target, vec![f.zero(); size], vec![f.zero(); size])
    }

    /// `A` acting on itself by multiplication.
    pub fn regular(a: &Algebra) -> ActionData {
        let n = a.dim();
        let mut right = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                right.extend_from_slice(a.basis_product(i, j));
            }
        }
        ActionData {
            acting: a.clone(),
            target: a.clone(),
            left: a.table().to_vec(),
            right,
        }
    }

    /// The one-dimensional unital algebra acting by scalars.
    pub fn scalar(target: &Algebra) -> ActionData {
        let f = target.field();
        let n = target.dim();
        let mut id = Vec::with_capacity(n * n);
        for i in 0..n {
            id.extend(vector::unit(f, n, i));
        }
        ActionData {
            acting: Algebra::scalars(f),
            target: target.clone(),
            left: id.clone(),
            right: id,
        }
    }

    /// Action given by basis operators: `left_ops[b]` is the matrix of
    /// `a ↦ b a`, `right_ops[b]` of `a ↦ a b`.
    pub fn from_operators(
        acting: Algebra,
        target: Algebra,
        left_ops: &[Matrix],
        right_ops: &[Matrix],
    ) -> Result<ActionData> {
        let (nb, na) = (acting.dim(), target.dim());
        if left_ops.len() != nb || right_ops.len() != nb {
            return Err(Error::DimensionMismatch(format!(
                "{} operators for an acting algebra of dimension {nb}",
                left_ops.len()
            )));
        }
        let f = target.field();
        let mut left = vec![f.zero(); nb * na * na];
        let mut right = vec![f.zero(); na * nb * na];
        for b in 0..nb {
            for m in [&left_ops[b], &right_ops[b]] {
                if m.rows() != na || m.cols() != na {
                    return Err(Error::DimensionMismatch("operator of wrong size".into()));
                }
            }
            for a in 0..na {
                for k in 0..na {
                    left[(b * na + a) * na + k] = left_ops[b].get(k, a).clone();
                    right[(a * nb + b) * na + k] = right_ops[b].get(k, a).clone();
                }
            }
        }
        ActionData::new(acting, target, left, right)
    }

    pub fn acting(&self) -> &Algebra {
        &self.acting
    }

    pub fn target(&self) -> &Algebra {
        &self.target
    }

    pub fn left_tensor(&self) -> &[Scalar] {
        &self.left
    }

    pub fn right_tensor(&self) -> &[Scalar] {
        &self.right
    }

    pub fn field(&self) -> Field {
        self.target.field()
    }

    fn nb(&self) -> usize {
        self.acting.dim()
    }

    fn na(&self) -> usize {
        self.target.dim()
    }

    /// Coordinates of `e_b e_a` (acting basis on target basis).
    pub fn left_basis(&self, b: usize, a: usize) -> &[Scalar] {
        let na = self.na();
        let start = (b * na + a) * na;
        &self.left[start..start + na]
    }

    /// Coordinates of `e_a e_b`.
    pub fn right_basis(&self, a: usize, b: usize) -> &[Scalar] {
        let (nb, na) = (self.nb(), self.na());
        let start = (a * nb + b) * na;
        &self.right[start..start + na]
    }

    pub fn left_entry_mut(&mut self, b: usize, a: usize, k: usize) -> &mut Scalar {
        let na = self.na();
        &mut self.left[(b * na + a) * na + k]
    }

    pub fn right_entry_mut(&mut self, a: usize, b: usize, k: usize) -> &mut Scalar {
        let (nb, na) = (self.nb(), self.na());
        &mut self.right[(a * nb + b) * na + k]
    }

    fn bilinear(
        &self,
        x: &[Scalar],
        y: &[Scalar],
        pick: impl Fn(usize, usize) -> usize,
        data: &[Scalar],
    ) -> Vec<Scalar> {
        let na = self.na();
        let mut out = vector::zero(self.field(), na);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                let start = pick(i, j) * na;
                for (o, t) in out.iter_mut().zip(&data[start..start + na]) {
                    if !t.is_zero() {
                        o.add_assign_mul(&c, t);
                    }
                }
            }
        }
        out
    }

    pub fn act_left(&self, b: &[Scalar], a: &[Scalar]) -> Vec<Scalar> {
        let na = self.na();
        self.bilinear(b, a, |i, j| i * na + j, &self.left)
    }

    pub fn act_right(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let nb = self.nb();
        self.bilinear(a, b, |i, j| i * nb + j, &self.right)
    }

    /// Matrix of `a ↦ b a`.
    pub fn left_operator(&self, b: &[Scalar]) -> Matrix {
        let f = self.field();
        let cols: Vec<Vec<Scalar>> = (0..self.na())
            .map(|j| self.act_left(b, &vector::unit(f, self.na(), j)))
            .collect();
        Matrix::from_columns(f, self.na(), &cols).expect("well-formed columns")
    }

    /// Matrix of `a ↦ a b`.
    pub fn right_operator(&self, b: &[Scalar]) -> Matrix {
        let f = self.field();
        let cols: Vec<Vec<Scalar>> = (0..self.na())
            .map(|j| self.act_right(&vector::unit(f, self.na(), j), b))
            .collect();
        Matrix::from_columns(f, self.na(), &cols).expect("well-formed columns")
    }

    pub fn check_identity(&self, id: Identity) -> LawReport {
        check_identity(self, id, self.acting.names(), self.target.names(), DEFAULT_WITNESS_CAP)
    }

    /// Per-identity reports for the category's system.
    pub fn identity_reports(&self, category: Category) -> Vec<LawReport> {
        category
            .identities()
            .iter()
            .map(|&id| self.check_identity(id))
            .collect()
    }

    /// All identities of the category's system at once. Witness labels carry
    /// the identity name.
    pub fn check_derived(&self, category: Category) -> LawReport {
        merge_reports(&format!("derived-action-{category}"), self.identity_reports(category))
    }

    pub fn is_derived(&self, category: Category) -> bool {
        self.identity_reports(category).iter().all(|r| r.holds)
    }

    /// `B ⋉ A` on the basis of `B` followed by that of `A`:
    /// `(b', a')(b, a) = (b'b, a'a + a'b + b'a)`.
    pub fn semidirect(&self) -> Algebra {
        let f = self.field();
        let (nb, na) = (self.nb(), self.na());
        let d = nb + na;
        let mut table = vec![f.zero(); d * d * d];
        let mut put = |i: usize, j: usize, offset: usize, coords: &[Scalar]| {
            for (k, c) in coords.iter().enumerate() {
                table[(i * d + j) * d + offset + k] = c.clone();
            }
        };
        for i in 0..nb {
            for j in 0..nb {
                put(i, j, 0, self.acting.basis_product(i, j));
            }
            for j in 0..na {
                put(i, nb + j, nb, self.left_basis(i, j));
            }
        }
        for i in 0..na {
            for j in 0..nb {
                put(nb + i, j, nb, self.right_basis(i, j));
            }
            for j in 0..na {
                put(nb + i, nb + j, nb, self.target.basis_product(i, j));
            }
        }
        let names = semidirect_names(self.acting.names(), self.target.names());
        Algebra::new(f, names, table).expect("consistent semidirect table")
    }

    /// Both sides of the equivalence between derived actions and semidirect
    /// products lying in the category: `(derived, semidirect_in_category)`.
    pub fn semidirect_equivalence(&self, category: Category) -> Result<(bool, bool)> {
        for (role, alg) in [("acting", &self.acting), ("target", &self.target)] {
            if !category.contains(alg) {
                return Err(Error::Precondition(format!("{role} algebra is not in {category}")));
            }
        }
        Ok((self.is_derived(category), category.contains(&self.semidirect())))
    }
}

impl ActionOps for ActionData {
    fn field(&self) -> Field {
        self.target.field()
    }

    fn acting_dim(&self) -> usize {
        self.acting.dim()
    }

    fn target_dim(&self) -> usize {
        self.target.dim()
    }

    fn aa(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.target.mul(x, y)
    }

    fn ba(&self, b: &[Scalar], a: &[Scalar]) -> Vec<Scalar> {
        self.act_left(b, a)
    }

    fn ab(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        self.act_right(a, b)
    }

    fn bb(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.acting.mul(x, y)
    }
}

pub fn merge_reports(name: &str, reports: Vec<LawReport>) -> LawReport {
    let mut failures = 0;
    let mut witnesses = Vec::new();
    for r in reports {
        failures += r.failures;
        for w in r.witnesses {
            if witnesses.len() < DEFAULT_WITNESS_CAP {
                witnesses.push(Witness {
                    label: format!("{} {}", r.law, w.label),
                    ..w
                });
            }
        }
    }
    LawReport {
        law: name.to_string(),
        holds: failures == 0,
        failures,
        witnesses,
    }
}

fn semidirect_names(b: &[String], a: &[String]) -> Vec<String> {
    let clash = b.iter().any(|n| a.contains(n));
    if !clash {
        return b.iter().chain(a).cloned().collect();
    }
    b.iter()
        .map(|n| format!("{n}.B"))
        .chain(a.iter().map(|n| format!("{n}.A")))
        .collect()
}
