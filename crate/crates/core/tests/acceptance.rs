//! Acceptance criteria. Each criterion prints one PASS/FAIL line with its
//! runtime; all arithmetic is exact, so every comparison is equality.

use std::io::Write;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use altactor::action::{ActionData, Category, Identity, SplitExtensionData};
use altactor::cli::{run, Cli};
use altactor::linalg::vector;
use altactor::multiplier::{bim, certify, d, identity_b, pair_mul, BIdentity, MultiplierPair, Variant};
use altactor::socle::{actor_decision, asoci, three_way, SocleContext};
use altactor::witness::{canonical, example_5_1, random_galt, search, SearchSpec, Target};
use altactor::{Algebra, Field, Law, Scalar, Subspace};
use clap::Parser;

/// A structure-constant table over Z/p with plain integers, independent of
/// the library's scalar and algebra types.
#[derive(Clone)]
struct Tab {
    p: i64,
    n: usize,
    c: Vec<i64>,
}

impl Tab {
    fn new(p: i64, n: usize, entries: &[(usize, usize, usize, i64)]) -> Tab {
        let mut c = vec![0; n * n * n];
        for &(i, j, k, v) in entries {
            c[(i * n + j) * n + k] = v.rem_euclid(p);
        }
        Tab { p, n, c }
    }

    fn mul(&self, x: &[i64], y: &[i64]) -> Vec<i64> {
        let n = self.n;
        let mut out = vec![0; n];
        for (i, &xi) in x.iter().enumerate().filter(|(_, &v)| v != 0) {
            for (j, &yj) in y.iter().enumerate().filter(|(_, &v)| v != 0) {
                let row = &self.c[(i * n + j) * n..(i * n + j + 1) * n];
                for (o, &c) in out.iter_mut().zip(row) {
                    *o = (*o + xi * yj * c).rem_euclid(self.p);
                }
            }
        }
        out
    }

    fn comb(&self, terms: &[(i64, Vec<i64>)]) -> Vec<i64> {
        let mut out = vec![0; self.n];
        for (s, v) in terms {
            for k in 0..self.n {
                out[k] = (out[k] + s * v[k]).rem_euclid(self.p);
            }
        }
        out
    }

    fn vectors(&self) -> Vec<Vec<i64>> {
        let total = (self.p as usize).pow(self.n as u32);
        (0..total)
            .map(|mut idx| {
                (0..self.n)
                    .map(|_| {
                        let d = (idx % self.p as usize) as i64;
                        idx /= self.p as usize;
                        d
                    })
                    .collect()
            })
            .collect()
    }

    fn units(&self) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|i| {
                let mut v = vec![0; self.n];
                v[i] = 1;
                v
            })
            .collect()
    }

    fn axiom21(&self, x: &[i64], y: &[i64], z: &[i64]) -> bool {
        let m = |a: &[i64], b: &[i64]| self.mul(a, b);
        let r = self.comb(&[
            (1, m(x, &m(y, z))),
            (-1, m(&m(x, y), z)),
            (-1, m(&m(y, x), z)),
            (1, m(y, &m(x, z))),
        ]);
        r.iter().all(|&v| v == 0)
    }

    fn axiom22(&self, x: &[i64], y: &[i64], z: &[i64]) -> bool {
        let m = |a: &[i64], b: &[i64]| self.mul(a, b);
        let r = self.comb(&[
            (1, m(&m(x, y), z)),
            (-1, m(x, &m(y, z))),
            (-1, m(x, &m(z, y))),
            (1, m(&m(x, z), y)),
        ]);
        r.iter().all(|&v| v == 0)
    }

    /// Both laws are trilinear, so basis triples decide them.
    fn galt(&self) -> bool {
        let u = self.units();
        u.iter().all(|x| {
            u.iter()
                .all(|y| u.iter().all(|z| self.axiom21(x, y, z) && self.axiom22(x, y, z)))
        })
    }

    /// Quadratic in `x`: every vector `x`, basis `y`.
    fn flexible(&self) -> bool {
        let u = self.units();
        self.vectors().iter().all(|x| {
            u.iter().all(|y| {
                let r = self.comb(&[(1, self.mul(&self.mul(x, y), x)), (-1, self.mul(x, &self.mul(y, x)))]);
                r.iter().all(|&v| v == 0)
            })
        })
    }

    fn anticommutative(&self) -> bool {
        self.vectors().iter().all(|x| self.mul(x, x).iter().all(|&v| v == 0))
    }

    fn ann_zero(&self) -> bool {
        let u = self.units();
        self.vectors().iter().filter(|z| z.iter().any(|&v| v != 0)).all(|z| {
            u.iter()
                .any(|a| self.mul(a, z).iter().any(|&v| v != 0) || self.mul(z, a).iter().any(|&v| v != 0))
        })
    }

    fn decode(p: i64, n: usize, mut idx: u64) -> Tab {
        let c = (0..n * n * n)
            .map(|_| {
                let d = (idx % p as u64) as i64;
                idx /= p as u64;
                d
            })
            .collect();
        Tab { p, n, c }
    }

    fn to_algebra(&self) -> Algebra {
        let mut entries = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                for k in 0..self.n {
                    let v = self.c[(i * self.n + j) * self.n + k];
                    if v != 0 {
                        entries.push((i, j, k, v));
                    }
                }
            }
        }
        let names: Vec<String> = (0..self.n).map(|i| format!("e{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        Algebra::from_sparse(Field::Prime(self.p as u32), &refs, &entries)
    }
}

fn ints(v: &[Scalar]) -> Vec<i64> {
    v.iter().map(|s| s.to_string().parse().unwrap()).collect()
}

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        pass,
        detail: detail.into(),
    }
}

fn criterion_1() -> Verdict {
    let w = canonical("w4").unwrap();
    let lib_galt = w.check_law(Law::Axiom21).holds && w.check_law(Law::Axiom22).holds;
    let mut witnessed = true;
    for law in [Law::Flexible, Law::LeftAlternative, Law::RightAlternative] {
        let r = w.check_law(law);
        witnessed &= !r.holds && r.witnesses.first().map(|x| x.label.as_str()) == Some("(x,x,x)");
    }
    // oracle: every vector triple over GF(2)^4
    let t = Tab::new(2, 4, &[(0, 0, 1, 1), (0, 1, 2, 1), (1, 0, 3, 1)]);
    let vs = t.vectors();
    let oracle_galt = vs.iter().all(|x| {
        vs.iter()
            .all(|y| vs.iter().all(|z| t.axiom21(x, y, z) && t.axiom22(x, y, z)))
    });
    let x = &t.units()[0];
    let x_xx = t.mul(x, &t.mul(x, x));
    let xx_x = t.mul(&t.mul(x, x), x);
    let oracle = x_xx == vec![0, 0, 1, 0] && xx_x == vec![0, 0, 0, 1] && !t.flexible();
    verdict(
        lib_galt && witnessed && oracle_galt && oracle,
        format!("galt {lib_galt}, (x,x,x) witnesses {witnessed}, oracle galt {oracle_galt}, x(xx)=v≠w=(xx)x {oracle}"),
    )
}

fn criterion_2() -> Verdict {
    let o = canonical("octonions").unwrap();
    let laws = [
        Law::LeftAlternative,
        Law::RightAlternative,
        Law::Flexible,
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
    let failing: Vec<String> = laws
        .iter()
        .filter(|&&l| !o.check_law(l).holds)
        .map(|l| l.to_string())
        .collect();
    let assoc = o.check_law(Law::Associative);
    let witness = assoc.witnesses.first().map(|w| w.label.clone()).unwrap_or_default();
    // oracle: the norm is multiplicative on integer vectors, and an explicit
    // associator is nonzero
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let q = Field::Rationals;
    let norm = |v: &[Scalar]| v.iter().fold(q.zero(), |acc, c| &acc + &(c * c));
    let mut composition = true;
    for _ in 0..20 {
        let x: Vec<Scalar> = (0..8).map(|_| q.from_i64(rng.random_range(-5..=5))).collect();
        let y: Vec<Scalar> = (0..8).map(|_| q.from_i64(rng.random_range(-5..=5))).collect();
        composition &= norm(&o.multiply(&x, &y).unwrap()) == &norm(&x) * &norm(&y);
    }
    let e = |i| o.unit_vector(i);
    let assoc_oracle = o.multiply(&o.multiply(&e(1), &e(2)).unwrap(), &e(4)).unwrap()
        != o.multiply(&e(1), &o.multiply(&e(2), &e(4)).unwrap()).unwrap();
    verdict(
        failing.is_empty() && !assoc.holds && !witness.is_empty() && composition && assoc_oracle,
        format!(
            "failing laws {failing:?}, associativity witness {witness}, composition oracle {composition}, (e1e2)e4≠e1(e2e4) {assoc_oracle}"
        ),
    )
}

fn criterion_3() -> Verdict {
    let spec = SearchSpec {
        dim: 2,
        field: Field::Prime(3),
        target: Target::GaltNotAlt,
        budget: 6561,
        seed: 0,
    };
    let r = search(&spec).unwrap();
    // oracle: integer enumeration of all 3^8 tables
    let mut galt_tables = 0;
    let mut oracle_counter = 0;
    let mut disagreements = 0;
    for idx in 0..6561u64 {
        let t = Tab::decode(3, 2, idx);
        let g = t.galt();
        let a = t.to_algebra();
        if g != Category::Galt.contains(&a) {
            disagreements += 1;
        }
        if g {
            galt_tables += 1;
            let f = t.flexible();
            if f != Law::Flexible.holds(&a) {
                disagreements += 1;
            }
            if !f {
                oracle_counter += 1;
            }
        }
    }
    verdict(
        r.examined == 6561 && r.hit_count == 0 && oracle_counter == 0 && disagreements == 0,
        format!(
            "{} tables, {galt_tables} g-alternative, {} counterexamples (oracle {oracle_counter}, disagreements {disagreements})",
            r.examined, r.hit_count
        ),
    )
}

fn criterion_4() -> Verdict {
    let a = canonical("gf4").unwrap();
    let ann = a.annihilator().is_zero();
    let anti = Law::Anticommutative.holds(&a);
    let ctx = SocleContext::new(&a, &[]).unwrap();
    let asoci_zero = asoci(&ctx).unwrap().asoci.is_zero();
    let spans: Vec<Subspace> = Variant::ALL
        .iter()
        .map(|&v| bim(&a, v).unwrap().span().clone())
        .collect();
    let same = spans.iter().all(|s| *s == spans[0]) && spans[0].dim() == 2;
    // oracle: all 256 pairs on GF(2)^2 checked against the pair conditions
    // written out on vectors
    let t = Tab::new(
        2,
        2,
        &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 0, 1), (1, 1, 1, 1)],
    );
    let apply = |m: &[i64], v: &[i64]| vec![(m[0] * v[0] + m[1] * v[1]) % 2, (m[2] * v[0] + m[3] * v[1]) % 2];
    let mut solutions = 0;
    for bits in 0..256u32 {
        let e: Vec<i64> = (0..8).map(|k| ((bits >> k) & 1) as i64).collect();
        let (l, r) = (&e[..4], &e[4..]);
        let u = t.units();
        let mut ok = true;
        for x in &u {
            for y in &u {
                let xy = t.mul(x, y);
                let fx = apply(l, x);
                let xf = apply(r, x);
                let fy = apply(l, y);
                // the four conditions with f in the acting slot
                let yf = apply(r, y);
                let yx = t.mul(y, x);
                let c1 = t.comb(&[
                    (1, apply(l, &xy)),
                    (-1, t.mul(&fx, y)),
                    (-1, t.mul(&xf, y)),
                    (1, t.mul(x, &fy)),
                ]);
                let c2 = t.comb(&[
                    (1, apply(r, &xy)),
                    (-1, t.mul(x, &yf)),
                    (-1, t.mul(x, &fy)),
                    (1, t.mul(&xf, y)),
                ]);
                let c3 = t.comb(&[
                    (1, t.mul(&fx, y)),
                    (-1, apply(l, &xy)),
                    (-1, apply(l, &yx)),
                    (1, t.mul(&fy, x)),
                ]);
                let c4 = t.comb(&[
                    (1, t.mul(x, &yf)),
                    (-1, apply(r, &xy)),
                    (-1, apply(r, &yx)),
                    (1, t.mul(y, &xf)),
                ]);
                ok &= [c1, c2, c3, c4].iter().all(|c| c.iter().all(|&v| v == 0));
            }
        }
        if ok {
            solutions += 1;
        }
    }
    let actor = bim(&a, Variant::Galt).unwrap();
    let alg = actor.algebra();
    let actor_ok = Law::Associative.holds(alg) && Law::Anticommutative.holds(alg) && alg.annihilator().is_zero();
    let act = actor.canonical_action();
    let identities_ok = Identity::ALL.iter().all(|&id| act.check_identity(id).holds);
    let (laws, derived) = certify(&actor, Category::Alt);
    verdict(
        ann && anti && asoci_zero && same && solutions == 4 && actor_ok && identities_ok && laws.holds && derived.holds,
        format!(
            "ann=0 {ann}, anticommutative {anti}, asoci=0 {asoci_zero}, variants agree in dim 2 {same}, oracle solutions {solutions}, actor assoc/anticomm/ann0 {actor_ok}, I1–III2 {identities_ok}"
        ),
    )
}

fn criterion_5() -> Verdict {
    let a = canonical("h5").unwrap();
    let ann = a.annihilator();
    let z = a.unit_vector(2);
    let ann_ok = ann.dim() == 1 && ann.contains(&z).unwrap();
    // oracle: count vectors killed on both sides by every basis element
    let t = Tab::new(5, 3, &[(0, 1, 2, 1), (1, 0, 2, -1)]);
    let u = t.units();
    let killed = t
        .vectors()
        .iter()
        .filter(|v| {
            u.iter()
                .all(|e| t.mul(e, v).iter().chain(t.mul(v, e).iter()).all(|&c| c == 0))
        })
        .count();
    let regular = asoci(&SocleContext::regular(&a, &[]).unwrap()).unwrap();
    let default = asoci(&SocleContext::new(&a, &[]).unwrap()).unwrap();
    let chain_ok = regular.chain_dims() == vec![1, 3] && regular.chain[0] == ann && regular.asoci.is_full();
    let dec = actor_decision(&a, &[]).unwrap();
    let witness = dec
        .failures
        .iter()
        .find_map(|r| r.witnesses.first().map(|w| format!("{} {}", r.law, w.label)))
        .unwrap_or_default();
    verdict(
        ann_ok && killed == 5 && chain_ok && default.asoci.is_full() && !dec.exists && !witness.is_empty(),
        format!(
            "ann dim {} (oracle {} vectors), chain {:?} with the regular family (default family: soci dim {}, chain {:?}), certified {}, witness {witness}",
            ann.dim(),
            killed,
            regular.chain_dims(),
            default.soci.dim(),
            default.chain_dims(),
            dec.exists
        ),
    )
}

/// The B1 residual at `(λ = x₁, 1, 1; (x₂, 0))` computed from the action
/// table on `A × A`, with pair products evaluated pointwise.
fn example_oracle(p: i64) -> Vec<i64> {
    let h = Tab::new(p, 3, &[(0, 1, 2, 1), (1, 0, 2, -1)]);
    type V = Vec<i64>;
    type Op = Box<dyn Fn(&V) -> V>;
    struct P {
        l: Op,
        r: Op,
    }
    let split = |v: &V| (v[..3].to_vec(), v[3..].to_vec());
    let join = |a: V, b: V| a.into_iter().chain(b).collect::<V>();
    let zero = vec![0i64; 3];
    let x1 = vec![1, 0, 0];
    let h1 = h.clone();
    let h2 = h.clone();
    let (z1, z2) = (zero.clone(), zero);
    let lambda = P {
        l: Box::new(move |v| {
            let (a, _) = split(v);
            join(z1.clone(), h1.mul(&x1, &a))
        }),
        r: Box::new(move |v| {
            let (a, _) = split(v);
            join(z2.clone(), h2.mul(&a, &[1, 0, 0]))
        }),
    };
    let unit = || P {
        l: Box::new(move |v: &V| {
            let (a, _) = split(v);
            join(a, vec![0; 3])
        }),
        r: Box::new(move |v: &V| {
            let (a, _) = split(v);
            join(a, vec![0; 3])
        }),
    };
    let add = move |terms: Vec<(i64, V)>| {
        let mut out = vec![0i64; 6];
        for (s, v) in terms {
            for k in 0..6 {
                out[k] = (out[k] + s * v[k]).rem_euclid(p);
            }
        }
        out
    };
    fn prod(f: std::rc::Rc<P>, g: std::rc::Rc<P>, p: i64) -> P {
        let add = move |terms: Vec<(i64, Vec<i64>)>| {
            let mut out = vec![0i64; 6];
            for (s, v) in terms {
                for k in 0..6 {
                    out[k] = (out[k] + s * v[k]).rem_euclid(p);
                }
            }
            out
        };
        let (f1, g1, f2, g2) = (f.clone(), g.clone(), f, g);
        P {
            // (fg)a = f(ga) + f(ag) − (fa)g
            l: Box::new(move |a| {
                add(vec![
                    (1, (f1.l)(&(g1.l)(a))),
                    (1, (f1.l)(&(g1.r)(a))),
                    (-1, (g1.r)(&(f1.l)(a))),
                ])
            }),
            // a(fg) = (af)g + (fa)g − f(ag)
            r: Box::new(move |a| {
                add(vec![
                    (1, (g2.r)(&(f2.r)(a))),
                    (1, (g2.r)(&(f2.l)(a))),
                    (-1, (f2.l)(&(g2.r)(a))),
                ])
            }),
        }
    }
    use std::rc::Rc;
    let lam = Rc::new(lambda);
    let one = Rc::new(unit());
    let one_one = Rc::new(prod(one.clone(), one.clone(), p));
    let lam_one = Rc::new(prod(lam.clone(), one.clone(), p));
    let one_lam = Rc::new(prod(one.clone(), lam.clone(), p));
    let lhs = prod(lam.clone(), one_one, p);
    let t1 = prod(lam_one.clone(), one.clone(), p);
    let t2 = prod(one_lam, one.clone(), p);
    let t3 = prod(one.clone(), lam_one, p);
    let a: V = vec![0, 1, 0, 0, 0, 0];
    add(vec![
        (-1, (lhs.l)(&a)),
        (1, (t1.l)(&a)),
        (1, (t2.l)(&a)),
        (-1, (t3.l)(&a)),
    ])
}

fn criterion_6() -> Verdict {
    let mut pass = true;
    let mut notes = Vec::new();
    for p in [5u32, 7] {
        let e = example_5_1(p).unwrap();
        let residual = ints(&e.residual);
        let oracle = example_oracle(p as i64);
        let expected: Vec<i64> = vec![0, 0, 0, 0, 0, 3 % p as i64];
        let derived = e.unital_report.holds && e.lambda_report.holds;
        let ok = derived
            && residual == oracle
            && residual == expected
            && e.coefficient == Field::Prime(p).from_i64(3)
            && !e.closure_axiom21.holds;
        pass &= ok;
        notes.push(format!(
            "p={p}: derived {derived}, residual {residual:?} (oracle {oracle:?}), coefficient {}, closure dim {} axiom-2-1 {}",
            e.coefficient,
            e.closure.dim(),
            if e.closure_axiom21.holds { "holds" } else { "fails" }
        ));
    }
    verdict(pass, notes.join("; "))
}

/// A split extension of a seeded g-alternative algebra over GF(2), found by
/// trying ideals generated by single vectors and complementary subalgebras.
/// Extensions with a nonzero action are preferred.
fn split_extension(seed: u64) -> Option<SplitExtensionData> {
    let f = Field::Prime(2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut fallback = None;
    for _ in 0..50 {
        let n = rng.random_range(2..=4usize);
        let e = random_galt(f, n, rng.random());
        let vecs: Vec<Vec<Scalar>> = (1..(1u64 << n))
            .map(|m| (0..n).map(|k| f.element((m >> k) & 1)).collect())
            .collect();
        for v in &vecs {
            let ideal = e
                .ideal_generated(&Subspace::span(f, n, std::slice::from_ref(v)).unwrap())
                .unwrap();
            let k = ideal.dim();
            if k == 0 || k == n || n - k > 3 || k > 3 {
                continue;
            }
            for _ in 0..64 {
                let gens: Vec<Vec<Scalar>> = (0..n - k)
                    .map(|_| vecs[rng.random_range(0..vecs.len())].clone())
                    .collect();
                let c = Subspace::span(f, n, &gens).unwrap();
                if c.dim() != n - k {
                    continue;
                }
                if let Ok(ext) = SplitExtensionData::from_ideal(&e, &ideal, &c) {
                    let act = ext.action_from_section().ok()?;
                    let nonzero = act.left_tensor().iter().chain(act.right_tensor()).any(|x| !x.is_zero());
                    if nonzero || fallback.is_none() {
                        if nonzero {
                            return Some(ext);
                        }
                        fallback = Some(ext);
                    }
                }
            }
        }
    }
    fallback
}

fn criterion_7() -> Verdict {
    let mut derived_pass = 0;
    let mut perturbed_fail = 0;
    let mut nontrivial = 0;
    let mut built = 0;
    let mut seed = 0u64;
    while built < 20 && seed < 1000 {
        seed += 1;
        let Some(ext) = split_extension(seed) else { continue };
        let act = ext.action_from_section().unwrap();
        if !act.is_derived(Category::Galt) {
            continue;
        }
        built += 1;
        if act.left_tensor().iter().chain(act.right_tensor()).any(|c| !c.is_zero()) {
            nontrivial += 1;
        }
        let (derived, semidirect_galt) = act.semidirect_equivalence(Category::Galt).unwrap();
        if derived && semidirect_galt {
            derived_pass += 1;
        }
        // flip single entries until some identity breaks
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        for _ in 0..200 {
            let mut bad = act.clone();
            let (nb, na) = (act.acting().dim(), act.target().dim());
            let (x, y, k) = (
                rng.random_range(0..nb),
                rng.random_range(0..na),
                rng.random_range(0..na),
            );
            let entry = if rng.random_bool(0.5) {
                bad.left_entry_mut(x, y, k)
            } else {
                bad.right_entry_mut(y, x, k)
            };
            *entry = &entry.clone() + &Field::Prime(2).one();
            if bad.is_derived(Category::Galt) {
                continue;
            }
            let (d2, s2) = bad.semidirect_equivalence(Category::Galt).unwrap();
            if !d2 && !s2 {
                perturbed_fail += 1;
            }
            break;
        }
    }
    verdict(
        built == 20 && derived_pass == 20 && perturbed_fail == 20,
        format!(
            "{built} extensions ({nontrivial} with nonzero action): semidirect galt in {derived_pass}; perturbed semidirect fails in {perturbed_fail}"
        ),
    )
}

fn d_multiplicative(a: &Algebra) -> bool {
    (0..a.dim()).all(|i| {
        (0..a.dim()).all(|j| {
            let (x, y) = (a.unit_vector(i), a.unit_vector(j));
            pair_mul(&d(a, &x), &d(a, &y)).unwrap() == d(a, &a.multiply(&x, &y).unwrap())
        })
    })
}

fn criterion_8() -> Vec<(String, bool, Duration)> {
    let mut out = Vec::new();
    for name in ["zero(3)", "gf4", "h5", "w4", "octonions", "unital-gf5-dim2"] {
        let t = Instant::now();
        let ok = d_multiplicative(&canonical(name).unwrap());
        out.push((name.to_string(), ok, t.elapsed()));
    }
    let spec = SearchSpec {
        dim: 4,
        field: Field::Prime(2),
        target: Target::GaltNotAlt,
        budget: 2000,
        seed: 11,
    };
    for h in search(&spec).unwrap().hits {
        let t = Instant::now();
        let ok = d_multiplicative(&h.algebra);
        out.push((format!("search hit {}", h.index), ok, t.elapsed()));
    }
    out
}

/// Structural checks for one algebra; returns the failed items.
fn socle_checks(a: &Algebra) -> Vec<String> {
    let mut bad = Vec::new();
    let ctx = SocleContext::new(a, &[]).unwrap();
    let r = asoci(&ctx).unwrap();
    for (label, s) in [("soci", &r.soci), ("asoci", &r.asoci)] {
        if a.ideal_generated(s).unwrap() != *s {
            bad.push(format!("{label} not an ideal"));
        }
    }
    for p in ctx.actor().pairs() {
        for v in r.asoci.basis_vectors() {
            if !r.asoci.contains(&p.act_left(&v)).unwrap() || !r.asoci.contains(&p.act_right(&v)).unwrap() {
                bad.push("asoci not stable under the actor".into());
            }
        }
    }
    let preimage = |w: &Subspace| {
        (0..a.dim()).fold(Subspace::full(a.field(), a.dim()), |acc, i| {
            acc.intersect(&Subspace::preimage_under(&a.right_basis_operator(i), w).unwrap())
                .unwrap()
        })
    };
    if !r.soci.is_subspace_of(&r.chain[0]).unwrap() || r.chain[0] != preimage(&r.soci) {
        bad.push("asoci¹ is not the preimage of soci".into());
    }
    for w in r.chain.windows(2) {
        if !w[0].is_subspace_of(&w[1]).unwrap() || w[0].dim() >= w[1].dim() || w[1] != preimage(&w[0]) {
            bad.push("chain not strictly increasing by preimages".into());
        }
    }
    let last = r.chain.last().unwrap();
    if preimage(last) != *last || *last != r.asoci {
        bad.push("chain does not end at its fixpoint".into());
    }
    let tw = three_way(&ctx, &r);
    if !tw.consistent() {
        bad.push(format!("three-way mismatch {tw:?}"));
    }
    bad
}

fn criterion_9() -> Verdict {
    let mut algebras: Vec<(String, Algebra)> = ["zero(3)", "gf4", "h5", "w4", "unital-gf5-dim2"]
        .iter()
        .map(|n| (n.to_string(), canonical(n).unwrap()))
        .collect();
    for i in 0..50u64 {
        let f = Field::Prime(if i % 2 == 0 { 2 } else { 3 });
        let dim = 1 + (i as usize / 2) % 3;
        algebras.push((format!("random #{i} over {f} dim {dim}"), random_galt(f, dim, 1000 + i)));
    }
    let mut failures = Vec::new();
    let mut zero_asoci = 0;
    for (name, a) in &algebras {
        if !Category::Galt.contains(a) {
            failures.push(format!("{name}: not galt"));
            continue;
        }
        if asoci(&SocleContext::new(a, &[]).unwrap()).unwrap().asoci.is_zero() {
            zero_asoci += 1;
        }
        for b in socle_checks(a) {
            failures.push(format!("{name}: {b}"));
        }
    }
    verdict(
        failures.is_empty(),
        format!(
            "{} algebras ({} with asoci = 0); failures: {}",
            algebras.len(),
            zero_asoci,
            if failures.is_empty() {
                "none".to_string()
            } else {
                failures.join("; ")
            }
        ),
    )
}

fn criterion_10() -> Verdict {
    let mut pass = true;
    let mut notes = Vec::new();
    for (p, dim) in [(3u32, 1usize), (3, 2), (5, 1), (5, 2)] {
        let args = [
            "altactor",
            "--format",
            "machine",
            "witness",
            "--target",
            "anticomm-ann0-nonzero",
            "--dim",
            &dim.to_string(),
            "--field",
            &format!("GF({p})"),
            "--budget",
            "1000000",
        ];
        let cli = Cli::try_parse_from(args).unwrap();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(cli, &mut out, &mut err);
        let rec: serde_json::Value = serde_json::from_slice(&out).unwrap();
        let hits = rec["hit_count"].as_u64().unwrap();
        let exhaustive = rec["mode"] == "exhaustive";
        // oracle: the same predicate on integer tables, GF(3) only
        let oracle = if p == 3 {
            let total = 3u64.pow((dim * dim * dim) as u32);
            (0..total)
                .filter(|&i| {
                    let t = Tab::decode(3, dim, i);
                    t.anticommutative() && t.ann_zero() && t.galt()
                })
                .count()
                .to_string()
        } else {
            "-".into()
        };
        pass &= code == 0 && hits == 0 && exhaustive && (oracle == "0" || oracle == "-");
        notes.push(format!(
            "GF({p}) dim {dim}: {} tables, {hits} hits, exit {code}, oracle {oracle}",
            rec["examined"]
        ));
    }
    verdict(pass, notes.join("; "))
}

fn report(n: usize, title: &str, limit: Duration, f: fn() -> Verdict) -> bool {
    let t = Instant::now();
    let v = f();
    let el = t.elapsed();
    let pass = v.pass && el < limit;
    let _ = writeln!(
        std::io::stdout(),
        "[{}] criterion {n}: {title} ({:.3}s, limit {}s) {}",
        if pass { "PASS" } else { "FAIL" },
        el.as_secs_f64(),
        limit.as_secs(),
        v.detail
    );
    pass
}

#[test]
fn acceptance_criteria() {
    let mut all = true;
    let s = Duration::from_secs;
    all &= report(1, "W4 separates g-alternative from alternative", s(1), criterion_1);
    all &= report(2, "octonion laws", s(5), criterion_2);
    all &= report(3, "GF(3) dim 2: g-alternative implies flexible", s(10), criterion_3);
    all &= report(4, "GF4 actor pipeline", s(1), criterion_4);
    all &= report(5, "H5 negative case", s(1), criterion_5);
    all &= report(6, "product-algebra counterexample at p = 5, 7", s(1), criterion_6);
    all &= report(7, "semidirect product equivalence fuzz", s(5), criterion_7);
    {
        let t = Instant::now();
        let rows = criterion_8();
        let ok = rows.iter().all(|(_, ok, el)| *ok && *el < s(1));
        let worst = rows.iter().map(|r| r.2).max().unwrap_or_default();
        let _ = writeln!(
            std::io::stdout(),
            "[{}] criterion 8: d is multiplicative ({:.3}s total, slowest algebra {:.3}s, limit 1s each) {} algebras: {}",
            if ok { "PASS" } else { "FAIL" },
            t.elapsed().as_secs_f64(),
            worst.as_secs_f64(),
            rows.len(),
            rows.iter().map(|r| format!("{} {}", r.0, if r.1 { "ok" } else { "FAILED" })).collect::<Vec<_>>().join(", ")
        );
        all &= ok;
    }
    all &= report(9, "socle audit", s(30), criterion_9);
    all &= report(
        10,
        "no nonzero anticommutative g-alternative algebra with zero annihilator",
        s(60),
        criterion_10,
    );
    assert!(all, "some acceptance criteria failed; see the lines above");
}

#[test]
fn b1_direct_residual_matches_library_helper() {
    // guards the orientation used above: the library's identity_b against
    // the same expression composed from pair_mul
    let e = example_5_1(5).unwrap();
    let pair = |act: &ActionData| MultiplierPair {
        left: act.left_operator(&act.acting().unit_vector(0)),
        right: act.right_operator(&act.acting().unit_vector(0)),
    };
    let (l, one) = (pair(&e.lambda_action), pair(&e.unital_action));
    let a = e.product.unit_vector(1);
    let m = |x: &MultiplierPair, y: &MultiplierPair| pair_mul(x, y).unwrap();
    let f = e.product.field();
    let manual = vector::combine(
        f,
        6,
        &[
            (-1, m(&l, &m(&one, &one)).act_left(&a)),
            (1, m(&m(&l, &one), &one).act_left(&a)),
            (1, m(&m(&one, &l), &one).act_left(&a)),
            (-1, m(&one, &m(&l, &one)).act_left(&a)),
        ],
    );
    assert_eq!(manual, identity_b(BIdentity::B1, &l, &one, &one, &a).unwrap());
}
