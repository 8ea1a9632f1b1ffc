use rayon::prelude::*;
use serde::Serialize;

use super::conditions::{solve_pair_space, Variant};
use super::{d, MultiplierPair};
use crate::action::{merge_reports, ActionData, Category};
use crate::algebra::{scan_tuples, Algebra, Law, LawReport, DEFAULT_WITNESS_CAP};
use crate::error::{Error, Result};
use crate::linalg::{vector, EchelonBasis, Scalar, Subspace};

/// How the computed algebra relates to the universal one over all acting
/// algebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Exactness {
    /// `A` is anticommutative with zero annihilator, so the bimultiplication
    /// closure is the universal algebra itself.
    Exact,
    /// Bimultiplication closure outside those hypotheses: an upper
    /// approximation.
    Approximation,
    /// Closure over a finite family of actions: a lower approximation.
    Relative,
    /// Closure of caller-supplied generators.
    Generated,
}

impl Exactness {
    pub fn describe(self) -> &'static str {
        match self {
            Exactness::Exact => "exact: A is anticommutative with zero annihilator",
            Exactness::Approximation => "approximation: bimultiplication closure, hypotheses for exactness fail",
            Exactness::Relative => "relative: closure over the supplied family of actions",
            Exactness::Generated => "generated: closure of the given pairs",
        }
    }
}

/// A subspace of pair space closed under the pair product, with its
/// structure constants in the canonical (reduced echelon) basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActorAlgebra {
    target: Algebra,
    span: Subspace,
    pairs: Vec<MultiplierPair>,
    algebra: Algebra,
    exactness: Exactness,
    alt_filter: Option<LawReport>,
}

impl ActorAlgebra {
    pub fn target(&self) -> &Algebra {
        &self.target
    }

    pub fn dim(&self) -> usize {
        self.pairs.len()
    }

    /// The span in pair space (ambient `2n²`).
    pub fn span(&self) -> &Subspace {
        &self.span
    }

    pub fn pairs(&self) -> &[MultiplierPair] {
        &self.pairs
    }

    /// The algebra structure on the basis pairs.
    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn exactness(&self) -> Exactness {
        self.exactness
    }

    /// For the alt variant: the quadratic condition `f(af) = (fa)f` checked
    /// on the whole span.
    pub fn alt_filter(&self) -> Option<&LawReport> {
        self.alt_filter.as_ref()
    }

    pub fn contains(&self, p: &MultiplierPair) -> bool {
        self.span.contains(&p.to_vector()).unwrap_or(false)
    }

    pub fn coordinates(&self, p: &MultiplierPair) -> Option<Vec<Scalar>> {
        self.span.coordinates(&p.to_vector()).ok().flatten()
    }

    /// Basis pair `i` acts on `A` by its maps.
    pub fn canonical_action(&self) -> ActionData {
        let lefts: Vec<_> = self.pairs.iter().map(|p| p.left.clone()).collect();
        let rights: Vec<_> = self.pairs.iter().map(|p| p.right.clone()).collect();
        ActionData::from_operators(self.algebra.clone(), self.target.clone(), &lefts, &rights)
            .expect("pairs act on the target")
    }

    /// The pair of a coordinate vector.
    pub fn pair_of(&self, coords: &[Scalar]) -> MultiplierPair {
        let f = self.target.field();
        let n = self.target.dim();
        let mut acc = vector::zero(f, 2 * n * n);
        for (c, p) in coords.iter().zip(&self.pairs) {
            if !c.is_zero() {
                vector::add_assign(&mut acc, &vector::scale(c, &p.to_vector()));
            }
        }
        MultiplierPair::from_vector(f, n, &acc).expect("pair vector")
    }
}

/// Smallest subspace of pair space containing the generators and closed
/// under the pair product. Rounds multiply every pair of spanning elements
/// involving at least one new element, in lexicographic index order.
pub fn closure(a: &Algebra, generators: &[MultiplierPair]) -> Result<ActorAlgebra> {
    for g in generators {
        if g.size() != a.dim() || g.field() != a.field() {
            return Err(Error::DimensionMismatch(format!(
                "pair on dimension {} for an algebra of dimension {}",
                g.size(),
                a.dim()
            )));
        }
    }
    Ok(closure_with(a, generators, Exactness::Generated))
}

fn closure_with(a: &Algebra, generators: &[MultiplierPair], exactness: Exactness) -> ActorAlgebra {
    let field = a.field();
    let n = a.dim();
    let mut eb = EchelonBasis::new(field, 2 * n * n);
    let mut elements: Vec<MultiplierPair> = Vec::new();
    for g in generators {
        if eb.insert(&g.to_vector()) {
            elements.push(g.clone());
        }
    }
    let mut start = 0;
    while start < elements.len() {
        let len = elements.len();
        let index_pairs: Vec<(usize, usize)> = (0..len)
            .flat_map(|i| (0..len).map(move |j| (i, j)))
            .filter(|&(i, j)| i >= start || j >= start)
            .collect();
        let products: Vec<MultiplierPair> = index_pairs
            .par_iter()
            .map(|&(i, j)| elements[i].mul_unchecked(&elements[j]))
            .collect();
        for p in products {
            if eb.insert(&p.to_vector()) {
                elements.push(p);
            }
        }
        start = len;
    }
    package(a, Subspace::from_echelon(&eb), exactness)
}

fn package(a: &Algebra, span: Subspace, exactness: Exactness) -> ActorAlgebra {
    let field = a.field();
    let n = a.dim();
    let pairs: Vec<MultiplierPair> = span
        .basis_vectors()
        .iter()
        .map(|v| MultiplierPair::from_vector(field, n, v).expect("pair vector"))
        .collect();
    let k = pairs.len();
    let rows: Vec<Vec<Scalar>> = (0..k * k)
        .into_par_iter()
        .map(|ij| {
            let p = pairs[ij / k].mul_unchecked(&pairs[ij % k]);
            span.coordinates(&p.to_vector())
                .expect("matching ambient")
                .expect("span is closed")
        })
        .collect();
    let names = (0..k).map(|i| format!("f{i}")).collect();
    let algebra = Algebra::new(field, names, rows.concat()).expect("closed table");
    ActorAlgebra {
        target: a.clone(),
        span,
        pairs,
        algebra,
        exactness,
        alt_filter: None,
    }
}

/// `f(af) = (fa)f` on the span: `L R − R L` vanishes, polarized over pairs
/// of basis elements.
fn alt_quadratic_report(pairs: &[MultiplierPair]) -> LawReport {
    let k = pairs.len();
    let eval = |t: &[usize]| {
        let (f, g) = (&pairs[t[0]], &pairs[t[1]]);
        let lr = f.left.mul_unchecked(&g.right);
        let rl = g.right.mul_unchecked(&f.left);
        lr.sub(&rl).expect("square maps").data().to_vec()
    };
    let scan = scan_tuples(&[k, k], Some((0, 1)), DEFAULT_WITNESS_CAP, false, eval);
    LawReport::from_scan("alt-f(af)=(fa)f", scan, |t| format!("(f{},f{})", t[0], t[1]))
}

/// Closure of the solution space of the variant's linear conditions.
pub fn bim(a: &Algebra, variant: Variant) -> Result<ActorAlgebra> {
    let space = solve_pair_space(a, variant)?;
    let n = a.dim();
    let generators: Vec<MultiplierPair> = space
        .basis_vectors()
        .iter()
        .map(|v| MultiplierPair::from_vector(a.field(), n, v).expect("pair vector"))
        .collect();
    let exact = Law::Anticommutative.holds(a) && a.annihilator().is_zero();
    let exactness = if exact && variant == Variant::Galt {
        Exactness::Exact
    } else {
        Exactness::Approximation
    };
    let mut actor = closure_with(a, &generators, exactness);
    if variant == Variant::Alt {
        actor.alt_filter = Some(alt_quadratic_report(&actor.pairs));
    }
    Ok(actor)
}

/// Closure of the pairs of every family member's basis together with the
/// image of `d`.
pub fn relative_actor(a: &Algebra, family: &[ActionData]) -> Result<ActorAlgebra> {
    let mut generators: Vec<MultiplierPair> = (0..a.dim()).map(|i| d(a, &a.unit_vector(i))).collect();
    for (idx, act) in family.iter().enumerate() {
        if act.target().field() != a.field() || act.target().table() != a.table() {
            return Err(Error::Precondition(format!(
                "family member {idx} does not act on this algebra"
            )));
        }
        let report = act.check_derived(Category::Galt);
        if !report.holds {
            let first = report
                .witnesses
                .first()
                .map(|w| format!(", first failure {} residual {}", w.label, a.format_vector(&w.residual)))
                .unwrap_or_default();
            return Err(Error::NotDerived(format!(
                "family member {idx}: {} failing tuples{first}",
                report.failures
            )));
        }
        let f = act.field();
        for b in 0..act.acting().dim() {
            let e = vector::unit(f, act.acting().dim(), b);
            generators.push(MultiplierPair {
                left: act.left_operator(&e),
                right: act.right_operator(&e),
            });
        }
    }
    Ok(closure_with(a, &generators, Exactness::Relative))
}

/// Certification of an actor algebra: its own galt laws, and the derived
/// action identities of its canonical action.
pub fn certify(actor: &ActorAlgebra, category: Category) -> (LawReport, LawReport) {
    let alg = actor.algebra();
    let laws = merge_reports(
        "actor-galt-laws",
        vec![alg.check_law(Law::Axiom21), alg.check_law(Law::Axiom22)],
    );
    let action = actor.canonical_action().check_derived(category);
    (laws, action)
}
