//! The S-sets, `soci(A)`, the `asociⁿ(A)` chain, the actor decision, and the
//! congruence audit.
//!
//! Everything here is relative to a finite family of acting pairs. The
//! default family is the image of `d` together with a basis of the
//! bimultiplication space; user-supplied derived actions are added to it.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::action::{ActionData, Category};
use crate::algebra::{Algebra, Law, LawReport, Witness, DEFAULT_WITNESS_CAP};
use crate::error::{Error, Result};
use crate::linalg::{vector, EchelonBasis, Scalar, Subspace};
use crate::multiplier::{
    bim, certify, d, identity_b, solve_pair_space, ActorAlgebra, BIdentity, MultiplierPair, Variant,
};

/// Which element types an S-set collects.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SetType {
    /// `x(yz)+x(zy)` and `(yz)x+(zy)x`.
    Sac,
    /// `x(yz)−(xy)z`.
    As,
    /// `x(yz)+(xy)z`.
    Aas,
    /// `x(yz)+y(xz)` and `(yz)x+(yx)z`.
    Ap,
}

impl SetType {
    pub const ALL: [SetType; 4] = [SetType::Sac, SetType::As, SetType::Aas, SetType::Ap];

    pub fn name(self) -> &'static str {
        match self {
            SetType::Sac => "sac",
            SetType::As => "as",
            SetType::Aas => "aas",
            SetType::Ap => "ap",
        }
    }
}

impl fmt::Display for SetType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SetType {
    type Err = Error;

    fn from_str(s: &str) -> Result<SetType> {
        SetType::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Precondition(format!("unknown element type {s:?}")))
    }
}

/// The algebra, the actor pairs, and the family of acting pairs.
#[derive(Clone, Debug)]
pub struct SocleContext {
    algebra: Algebra,
    actor: ActorAlgebra,
    family: Vec<MultiplierPair>,
    family_note: String,
}

impl SocleContext {
    /// Default family (image of `d` and the bimultiplication space) plus the
    /// basis pairs of each supplied action, which must be derived.
    pub fn new(a: &Algebra, actions: &[ActionData]) -> Result<SocleContext> {
        let actor = bim(a, Variant::Galt)?;
        let mut family = d_image(a);
        let space = solve_pair_space(a, Variant::Galt)?;
        for v in space.basis_vectors() {
            family.push(MultiplierPair::from_vector(a.field(), a.dim(), &v)?);
        }
        family.extend(action_pairs(a, actions)?);
        let note = format!(
            "regular action and bimultiplication space{}",
            if actions.is_empty() {
                String::new()
            } else {
                format!(" plus {} supplied action(s)", actions.len())
            }
        );
        Ok(SocleContext::from_parts(a.clone(), actor, family, note))
    }

    /// Family consisting of the regular action alone (and any supplied
    /// actions); the actor is still the bimultiplication closure.
    pub fn regular(a: &Algebra, actions: &[ActionData]) -> Result<SocleContext> {
        let actor = bim(a, Variant::Galt)?;
        let mut family = d_image(a);
        family.extend(action_pairs(a, actions)?);
        let note = if actions.is_empty() {
            "regular action".to_string()
        } else {
            format!("regular action plus {} supplied action(s)", actions.len())
        };
        Ok(SocleContext::from_parts(a.clone(), actor, family, note))
    }

    pub fn from_parts(
        algebra: Algebra,
        actor: ActorAlgebra,
        family: Vec<MultiplierPair>,
        note: String,
    ) -> SocleContext {
        SocleContext {
            algebra,
            actor,
            family,
            family_note: note,
        }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn actor(&self) -> &ActorAlgebra {
        &self.actor
    }

    pub fn family(&self) -> &[MultiplierPair] {
        &self.family
    }

    pub fn family_note(&self) -> &str {
        &self.family_note
    }

    /// Whether every family pair acts anticommutatively: `f a = −a f`.
    pub fn family_anticommutative(&self) -> bool {
        self.family
            .iter()
            .all(|p| p.left.add(&p.right).map(|m| m.is_zero()).unwrap_or(false))
    }
}

fn d_image(a: &Algebra) -> Vec<MultiplierPair> {
    (0..a.dim()).map(|i| d(a, &a.unit_vector(i))).collect()
}

fn action_pairs(a: &Algebra, actions: &[ActionData]) -> Result<Vec<MultiplierPair>> {
    let mut out = Vec::new();
    for (idx, act) in actions.iter().enumerate() {
        if act.target().field() != a.field() || act.target().table() != a.table() {
            return Err(Error::Precondition(format!(
                "action {idx} does not act on this algebra"
            )));
        }
        let report = act.check_derived(Category::Galt);
        if !report.holds {
            return Err(Error::NotDerived(format!(
                "action {idx} fails {} identity instance(s)",
                report.failures
            )));
        }
        let nb = act.acting().dim();
        for b in 0..nb {
            let e = vector::unit(a.field(), nb, b);
            out.push(MultiplierPair {
                left: act.left_operator(&e),
                right: act.right_operator(&e),
            });
        }
    }
    Ok(out)
}

/// An element of `A` or of the acting side.
#[derive(Clone, Debug)]
enum Elem {
    A(Vec<Scalar>),
    B(MultiplierPair),
}

fn emul(alg: &Algebra, x: &Elem, y: &Elem) -> Elem {
    match (x, y) {
        (Elem::A(u), Elem::A(v)) => Elem::A(alg.mul(u, v)),
        (Elem::B(f), Elem::A(v)) => Elem::A(f.act_left(v)),
        (Elem::A(u), Elem::B(g)) => Elem::A(g.act_right(u)),
        (Elem::B(f), Elem::B(g)) => Elem::B(f.mul_unchecked(g)),
    }
}

fn avec(e: Elem) -> Vec<Scalar> {
    match e {
        Elem::A(v) => v,
        Elem::B(_) => unreachable!("expressions with an A slot land in A"),
    }
}

/// Values of the type's expressions at `(x, y, z)`.
fn expressions(alg: &Algebra, t: SetType, x: &Elem, y: &Elem, z: &Elem) -> Vec<Vec<Scalar>> {
    let m = |p: &Elem, q: &Elem| emul(alg, p, q);
    let x_yz = || avec(m(x, &m(y, z)));
    match t {
        SetType::Sac => vec![
            vector::add(&x_yz(), &avec(m(x, &m(z, y)))),
            vector::add(&avec(m(&m(y, z), x)), &avec(m(&m(z, y), x))),
        ],
        SetType::As => vec![vector::sub(&x_yz(), &avec(m(&m(x, y), z)))],
        SetType::Aas => vec![vector::add(&x_yz(), &avec(m(&m(x, y), z)))],
        SetType::Ap => vec![
            vector::add(&x_yz(), &avec(m(y, &m(x, z)))),
            vector::add(&avec(m(&m(y, z), x)), &avec(m(&m(y, x), z))),
        ],
    }
}

/// Span of the type's values with exactly `level` slots taken from the
/// acting side (every placement), the rest from the basis of `A`. With
/// `bar` the acting side is the actor basis, otherwise the family.
pub fn s_set(ctx: &SocleContext, t: SetType, level: usize, bar: bool) -> Result<Subspace> {
    if !(1..=2).contains(&level) {
        return Err(Error::Precondition(format!("level must be 1 or 2, got {level}")));
    }
    let alg = &ctx.algebra;
    let n = alg.dim();
    let acting: Vec<Elem> = if bar { ctx.actor.pairs() } else { &ctx.family[..] }
        .iter()
        .cloned()
        .map(Elem::B)
        .collect();
    let basis: Vec<Elem> = (0..n).map(|i| Elem::A(alg.unit_vector(i))).collect();
    let mut eb = EchelonBasis::new(alg.field(), n);
    let placements: Vec<[bool; 3]> = (0..8u8)
        .map(|mask| [mask & 1 != 0, mask & 2 != 0, mask & 4 != 0])
        .filter(|p| p.iter().filter(|&&b| b).count() == level)
        .collect();
    for p in placements {
        let pools: Vec<&[Elem]> = p.iter().map(|&b| if b { &acting[..] } else { &basis[..] }).collect();
        for x in pools[0] {
            for y in pools[1] {
                for z in pools[2] {
                    for v in expressions(alg, t, x, y, z) {
                        eb.insert(&v);
                    }
                }
            }
        }
    }
    Ok(Subspace::from_echelon(&eb))
}

/// Smallest subspace containing `start` and stable under multiplication by
/// `A` and under every actor pair, on both sides.
fn stable_closure(ctx: &SocleContext, start: &Subspace) -> Subspace {
    let alg = &ctx.algebra;
    let mut eb = start.to_echelon();
    let mut frontier = start.basis_vectors();
    let units: Vec<Vec<Scalar>> = (0..alg.dim()).map(|i| alg.unit_vector(i)).collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for v in &frontier {
            let mut images = Vec::new();
            for p in ctx.actor.pairs() {
                images.push(p.act_left(v));
                images.push(p.act_right(v));
            }
            for e in &units {
                images.push(alg.mul(e, v));
                images.push(alg.mul(v, e));
            }
            for w in images {
                if eb.insert(&w) {
                    next.push(w);
                }
            }
        }
        frontier = next;
    }
    Subspace::from_echelon(&eb)
}

/// The substructure generated by the level-one `sac` set of the family.
pub fn soci(ctx: &SocleContext) -> Result<Subspace> {
    let s1 = s_set(ctx, SetType::Sac, 1, false)?;
    Ok(stable_closure(ctx, &s1))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SocleResult {
    pub family: String,
    pub soci: Subspace,
    /// `asoci¹ ⊂ asoci² ⊂ …`, strictly increasing; the last member is the
    /// fixpoint.
    pub chain: Vec<Subspace>,
    pub asoci: Subspace,
}

impl SocleResult {
    pub fn chain_dims(&self) -> Vec<usize> {
        self.chain.iter().map(Subspace::dim).collect()
    }
}

/// `{ x : x e_a ∈ w for every basis element e_a }`.
fn right_preimage(alg: &Algebra, w: &Subspace) -> Result<Subspace> {
    let mut v = Subspace::full(alg.field(), alg.dim());
    for i in 0..alg.dim() {
        let pre = Subspace::preimage_under(&alg.right_basis_operator(i), w)?;
        v = v.intersect(&pre)?;
    }
    Ok(v)
}

/// `asociⁿ = { x : (…((x a1) a2)…) an ∈ soci }`; by linearity it is enough
/// to take the `a_i` from a basis, so `asociⁿ⁺¹` is the right preimage of
/// `asociⁿ`.
pub fn asoci(ctx: &SocleContext) -> Result<SocleResult> {
    let alg = &ctx.algebra;
    let s = soci(ctx)?;
    let mut chain = vec![right_preimage(alg, &s)?];
    loop {
        let last = chain.last().expect("nonempty");
        let next = right_preimage(alg, last)?;
        if next == *last {
            break;
        }
        chain.push(next);
    }
    let asoci = chain.last().expect("nonempty").clone();
    Ok(SocleResult {
        family: ctx.family_note.clone(),
        soci: s,
        chain,
        asoci,
    })
}

/// The three conditions whose equivalence the theory asserts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ThreeWay {
    pub asoci_zero: bool,
    pub asoci1_zero: bool,
    pub family_anticommutative_and_ann_zero: bool,
}

impl ThreeWay {
    pub fn consistent(&self) -> bool {
        self.asoci_zero == self.asoci1_zero && self.asoci1_zero == self.family_anticommutative_and_ann_zero
    }
}

pub fn three_way(ctx: &SocleContext, result: &SocleResult) -> ThreeWay {
    ThreeWay {
        asoci_zero: result.asoci.is_zero(),
        asoci1_zero: result.chain[0].is_zero(),
        family_anticommutative_and_ann_zero: ctx.family_anticommutative() && ctx.algebra.annihilator().is_zero(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ActorCertificate {
    pub dim: usize,
    pub actor_laws: LawReport,
    pub derived_galt: LawReport,
    /// Present when `A` is alternative.
    pub derived_alt: Option<LawReport>,
    pub actor_flexible: Option<LawReport>,
}

impl ActorCertificate {
    pub fn holds(&self) -> bool {
        self.actor_laws.holds
            && self.derived_galt.holds
            && self.derived_alt.as_ref().is_none_or(|r| r.holds)
            && self.actor_flexible.as_ref().is_none_or(|r| r.holds)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ActorDecision {
    pub family: String,
    pub caveat: &'static str,
    pub anticommutative: bool,
    pub ann_zero: bool,
    pub alternative: bool,
    pub socle: SocleResult,
    pub three_way: ThreeWay,
    pub actor_dim: usize,
    pub exactness: String,
    /// `Some(true)` when `asoci = 0` and every certification check passes.
    pub exists: bool,
    pub certificate: Option<ActorCertificate>,
    /// When `asoci ≠ 0`: what fails for the bimultiplication closure.
    pub failures: Vec<LawReport>,
}

const FAMILY_CAVEAT: &str = "soci and asoci are computed relative to the listed family; \
the existence decision depends only on anticommutativity of the actions and the annihilator";

/// Decides whether the bimultiplication closure is certified as an actor.
pub fn actor_decision(a: &Algebra, actions: &[ActionData]) -> Result<ActorDecision> {
    if !Category::Galt.contains(a) {
        return Err(Error::Precondition("the algebra is not g-alternative".into()));
    }
    let ctx = SocleContext::new(a, actions)?;
    let socle = asoci(&ctx)?;
    let tw = three_way(&ctx, &socle);
    let actor = ctx.actor();
    let alternative = Category::Alt.contains(a);
    let cert = {
        let (actor_laws, derived_galt) = certify(actor, Category::Galt);
        let (derived_alt, actor_flexible) = if alternative {
            let (_, alt) = certify(actor, Category::Alt);
            (Some(alt), Some(actor.algebra().check_law(Law::Flexible)))
        } else {
            (None, None)
        };
        ActorCertificate {
            dim: actor.dim(),
            actor_laws,
            derived_galt,
            derived_alt,
            actor_flexible,
        }
    };
    let asoci_zero = socle.asoci.is_zero();
    let mut failures = Vec::new();
    if !asoci_zero {
        for r in [&cert.derived_galt, &cert.actor_laws] {
            if !r.holds {
                failures.push(r.clone());
            }
        }
        if let Some(r) = cert.derived_alt.as_ref().filter(|r| !r.holds) {
            failures.push(r.clone());
        }
        failures.extend(b_identity_scan(actor).into_iter().filter(|r| !r.holds));
    }
    let exists = asoci_zero && cert.holds();
    Ok(ActorDecision {
        family: ctx.family_note().to_string(),
        caveat: FAMILY_CAVEAT,
        anticommutative: Law::Anticommutative.holds(a),
        ann_zero: a.annihilator().is_zero(),
        alternative,
        socle,
        three_way: tw,
        actor_dim: actor.dim(),
        exactness: actor.exactness().describe().to_string(),
        exists,
        certificate: asoci_zero.then_some(cert),
        failures,
    })
}

/// B1–B4 over all basis triples of the actor and basis elements of `A`.
pub fn b_identity_scan(actor: &ActorAlgebra) -> Vec<LawReport> {
    BIdentity::ALL
        .iter()
        .map(|&which| {
            triple_scan(which.name(), actor.pairs(), actor.target(), |x, y, z, a| {
                identity_b(which, x, y, z, a).expect("pairs on A")
            })
        })
        .collect()
}

/// Evaluates `f` on every triple of `pairs` and basis element of `a`;
/// nonzero values are failures.
pub fn triple_scan<F>(name: &str, pairs: &[MultiplierPair], a: &Algebra, f: F) -> LawReport
where
    F: Fn(&MultiplierPair, &MultiplierPair, &MultiplierPair, &[Scalar]) -> Vec<Scalar>,
{
    let k = pairs.len();
    let mut failures = 0;
    let mut witnesses = Vec::new();
    for i in 0..k {
        for j in 0..k {
            for l in 0..k {
                for x in 0..a.dim() {
                    let r = f(&pairs[i], &pairs[j], &pairs[l], &a.unit_vector(x));
                    if !vector::is_zero(&r) {
                        failures += 1;
                        if witnesses.len() < DEFAULT_WITNESS_CAP {
                            witnesses.push(Witness {
                                tuple: vec![i, j, l, x],
                                label: format!("(f{i},f{j},f{l};{})", a.names()[x]),
                                polarized: false,
                                residual: r,
                            });
                        }
                    }
                }
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

/// One congruence statement: `set ∼ 0` means containment in soci, `set ≃ 0`
/// containment in asoci.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditEntry {
    pub statement: String,
    pub holds: bool,
    pub set_dim: usize,
    /// Basis vectors of the set outside the target subspace.
    pub outside: Vec<Vec<Scalar>>,
}

/// Checks the containments `S₁^aas ∼ 0`, `S₁^as ≃ 0`, `S₂^sac ≃ 0`,
/// `S̄₁^sac ≃ 0`, `S₂^as ≃ 0`, `S₂^aas ≃ 0`, `S̄₂^sac ≃ 0`, `S̄₁^as ≃ 0`,
/// `S̄₁^aas ≃ 0`, `S̄₂^as ≃ 0`, `S̄₂^aas ≃ 0`, `S̄₁^ap ≃ 0`, `S̄₂^ap ≃ 0`.
pub fn congruence_audit(ctx: &SocleContext) -> Result<Vec<AuditEntry>> {
    let result = asoci(ctx)?;
    let statements: [(SetType, usize, bool, bool); 13] = [
        (SetType::Aas, 1, false, false),
        (SetType::As, 1, false, true),
        (SetType::Sac, 2, false, true),
        (SetType::Sac, 1, true, true),
        (SetType::As, 2, false, true),
        (SetType::Aas, 2, false, true),
        (SetType::Sac, 2, true, true),
        (SetType::As, 1, true, true),
        (SetType::Aas, 1, true, true),
        (SetType::As, 2, true, true),
        (SetType::Aas, 2, true, true),
        (SetType::Ap, 1, true, true),
        (SetType::Ap, 2, true, true),
    ];
    statements
        .iter()
        .map(|&(t, level, bar, modulo_asoci)| {
            let set = s_set(ctx, t, level, bar)?;
            let target = if modulo_asoci { &result.asoci } else { &result.soci };
            let outside: Vec<Vec<Scalar>> = set
                .basis_vectors()
                .into_iter()
                .filter(|v| !target.contains(v).unwrap_or(false))
                .collect();
            Ok(AuditEntry {
                statement: format!(
                    "{}S{}^{} {} 0",
                    if bar { "bar-" } else { "" },
                    level,
                    t,
                    if modulo_asoci { "≃" } else { "∼" }
                ),
                holds: outside.is_empty(),
                set_dim: set.dim(),
                outside,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Field;

    fn gf4() -> Algebra {
        Algebra::from_sparse(
            Field::Prime(2),
            &["1", "t"],
            &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 0, 1), (1, 1, 1, 1)],
        )
    }

    fn h5() -> Algebra {
        Algebra::from_sparse(Field::Prime(5), &["x1", "x2", "z"], &[(0, 1, 2, 1), (1, 0, 2, -1)])
    }

    fn unital_gf5() -> Algebra {
        Algebra::from_sparse(
            Field::Prime(5),
            &["e", "n"],
            &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)],
        )
    }

    #[test]
    fn gf4_socle_vanishes() {
        let ctx = SocleContext::new(&gf4(), &[]).unwrap();
        assert!(s_set(&ctx, SetType::Sac, 1, false).unwrap().is_zero());
        let r = asoci(&ctx).unwrap();
        assert!(r.soci.is_zero());
        assert!(r.asoci.is_zero());
        assert_eq!(r.chain_dims(), vec![0]);
    }

    #[test]
    fn h5_chains() {
        let a = h5();
        // regular family: soci = 0, asoci¹ = ann = span{z}, asoci² = A
        let reg = SocleContext::regular(&a, &[]).unwrap();
        assert!(s_set(&reg, SetType::Sac, 1, false).unwrap().is_zero());
        let r = asoci(&reg).unwrap();
        assert!(r.soci.is_zero());
        assert_eq!(r.chain_dims(), vec![1, 3]);
        assert_eq!(r.chain[0], a.annihilator());
        // scalar action in the family: S₁^sac contains x1(x2·1 + 1·x2) = 2z
        let scalar = SocleContext::regular(&a, &[ActionData::scalar(&a)]).unwrap();
        let s1 = s_set(&scalar, SetType::Sac, 1, false).unwrap();
        assert_eq!(s1, a.annihilator());
        let full = asoci(&SocleContext::new(&a, &[]).unwrap()).unwrap();
        assert!(full.asoci.is_full());
    }

    #[test]
    fn unital_example_soci_is_everything() {
        let a = unital_gf5();
        let ctx = SocleContext::new(&a, &[]).unwrap();
        assert!(soci(&ctx).unwrap().is_full());
        for e in congruence_audit(&ctx).unwrap() {
            assert!(e.holds, "{}", e.statement);
        }
    }

    #[test]
    fn zero_algebra_asoci_is_full() {
        let a = Algebra::zero(Field::Prime(3), 3);
        let r = asoci(&SocleContext::new(&a, &[]).unwrap()).unwrap();
        assert!(r.asoci.is_full());
        assert_eq!(r.chain_dims(), vec![3]);
    }

    #[test]
    fn decisions() {
        let g = actor_decision(&gf4(), &[]).unwrap();
        assert!(g.exists);
        assert_eq!(g.actor_dim, 2);
        let h = actor_decision(&h5(), &[]).unwrap();
        assert!(!h.exists);
        assert!(!h.failures.is_empty());
        let z = actor_decision(&Algebra::zero(Field::Prime(2), 0), &[]).unwrap();
        assert!(z.exists);
        assert_eq!(z.actor_dim, 0);
    }
}
