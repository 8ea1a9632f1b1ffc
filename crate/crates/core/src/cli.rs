//! The `altactor` command line.
//!
//! Exit codes: 0 when the computation succeeded and every requested property
//! holds, 1 when a requested property fails, 2 on malformed input.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::action::{ActionData, Category, Identity};
use crate::algebra::{Algebra, Law, LawReport};
use crate::error::{Error, Result};
use crate::io::{format_algebra, load_action, load_algebra};
use crate::linalg::Subspace;
use crate::multiplier::{bim, certify, expression_a, relative_actor, ActorAlgebra, BIdentity, Variant};
use crate::socle::{actor_decision, asoci, congruence_audit, triple_scan, SocleContext};
use crate::witness::{canonical, example_5_1, search, SearchSpec};

#[derive(Parser, Debug)]
#[command(
    name = "altactor",
    version,
    about = "Exact computations with g-alternative algebras and their actions"
)]
pub struct Cli {
    /// `text` for people, `machine` for one JSON object per line.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Machine,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyChoice {
    /// Regular action, bimultiplication space, and supplied actions.
    Default,
    /// Regular action and supplied actions only.
    Regular,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check laws on an algebra (a file path or @name).
    Check {
        algebra: String,
        /// Comma-separated law names.
        #[arg(long, value_delimiter = ',')]
        laws: Option<Vec<String>>,
    },
    /// Basis of the annihilator.
    Ann { algebra: String },
    /// Bimultiplication closure for one variant of the pair conditions.
    Bim {
        algebra: String,
        #[arg(long, default_value = "galt")]
        variant: String,
    },
    /// Decide whether the bimultiplication closure is certified as an actor.
    Actor {
        algebra: String,
        #[arg(long = "action")]
        actions: Vec<String>,
    },
    /// soci relative to the acting family.
    Soci {
        algebra: String,
        #[arg(long = "action")]
        actions: Vec<String>,
        #[arg(long, value_enum, default_value_t = FamilyChoice::Default)]
        family: FamilyChoice,
    },
    /// The asoci chain relative to the acting family.
    Asoci {
        algebra: String,
        #[arg(long = "action")]
        actions: Vec<String>,
        #[arg(long, value_enum, default_value_t = FamilyChoice::Default)]
        family: FamilyChoice,
    },
    /// Containments of the S-sets in soci and asoci.
    Audit {
        algebra: String,
        #[arg(long = "action")]
        actions: Vec<String>,
        #[arg(long, value_enum, default_value_t = FamilyChoice::Default)]
        family: FamilyChoice,
    },
    /// Semidirect product of an action file, with the category check.
    Semidirect {
        action: String,
        #[arg(long, default_value = "galt")]
        category: String,
    },
    /// Residual scan for B1–B4, A1–A11 or the action identities I1–III2.
    Identities {
        algebra: String,
        #[arg(long)]
        which: String,
        #[arg(long = "action")]
        actions: Vec<String>,
    },
    /// Seeded search for algebras witnessing a target.
    Witness {
        #[arg(long)]
        target: String,
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        field: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100_000)]
        budget: u64,
    },
    /// Reconstruct the product-algebra counterexample over GF(p).
    Example51 {
        #[arg(long, default_value_t = 5)]
        p: u32,
    },
    /// Print a canonical algebra in file format.
    Canonical { name: String },
}

/// One output record: the text rendering and the machine object.
struct Record {
    text: String,
    machine: Value,
}

struct Outcome {
    records: Vec<Record>,
    ok: bool,
}

fn record(kind: &str, text: String, payload: impl Serialize) -> Record {
    let mut machine = serde_json::to_value(payload).expect("serializable");
    if let Value::Object(map) = &mut machine {
        map.insert("record".into(), Value::String(kind.into()));
    } else {
        machine = json!({ "record": kind, "value": machine });
    }
    Record { text, machine }
}

fn law_text(r: &LawReport) -> String {
    let mut s = format!("{} {}", if r.holds { "PASS" } else { "FAIL" }, r.law);
    if !r.holds {
        s.push_str(&format!(" ({} failing instance(s))", r.failures));
        for w in &r.witnesses {
            let res: Vec<String> = w.residual.iter().map(|c| c.to_string()).collect();
            s.push_str(&format!(
                "\n    {}{} residual [{}]",
                w.label,
                if w.polarized { " polarized" } else { "" },
                res.join(", ")
            ));
        }
    }
    s
}

fn subspace_text(a: &Algebra, label: &str, s: &Subspace) -> String {
    let mut out = format!("{label}: dim {}", s.dim());
    for v in s.basis_vectors() {
        out.push_str(&format!("\n    {}", a.format_vector(&v)));
    }
    out
}

fn load_actions(paths: &[String]) -> Result<Vec<ActionData>> {
    paths.iter().map(|p| load_action(p)).collect()
}

fn context(a: &Algebra, actions: &[String], family: FamilyChoice) -> Result<SocleContext> {
    let acts = load_actions(actions)?;
    match family {
        FamilyChoice::Default => SocleContext::new(a, &acts),
        FamilyChoice::Regular => SocleContext::regular(a, &acts),
    }
}

const DEFAULT_LAWS: [Law; 5] = [
    Law::Axiom21,
    Law::Axiom22,
    Law::Flexible,
    Law::LeftAlternative,
    Law::RightAlternative,
];

fn actor_json(actor: &ActorAlgebra) -> Value {
    json!({
        "dim": actor.dim(),
        "exactness": actor.exactness().describe(),
        "pairs": actor.pairs(),
        "algebra": actor.algebra(),
    })
}

fn execute(command: Command) -> Result<Outcome> {
    let mut records = Vec::new();
    let ok = match command {
        Command::Check { algebra, laws } => {
            let a = load_algebra(&algebra)?;
            let laws: Vec<Law> = match laws {
                Some(names) => names.iter().map(|n| n.parse()).collect::<Result<_>>()?,
                None => DEFAULT_LAWS.to_vec(),
            };
            let mut ok = true;
            for law in laws {
                let r = a.check_law(law);
                ok &= r.holds;
                records.push(record("law", law_text(&r), &r));
            }
            ok
        }
        Command::Ann { algebra } => {
            let a = load_algebra(&algebra)?;
            let ann = a.annihilator();
            records.push(record("annihilator", subspace_text(&a, "ann", &ann), &ann));
            true
        }
        Command::Bim { algebra, variant } => {
            let a = load_algebra(&algebra)?;
            let variant: Variant = variant.parse()?;
            let actor = bim(&a, variant)?;
            let (laws, derived) = certify(&actor, Category::Galt);
            let mut text = format!(
                "bim {} : dim {} ({})\n{}",
                variant.name(),
                actor.dim(),
                actor.exactness().describe(),
                format_algebra(actor.algebra())
            );
            text.push_str(&law_text(&laws));
            text.push('\n');
            text.push_str(&law_text(&derived));
            if let Some(f) = actor.alt_filter() {
                text.push('\n');
                text.push_str(&law_text(f));
            }
            let mut m = actor_json(&actor);
            m["variant"] = json!(variant.name());
            m["actor_laws"] = json!(laws);
            m["canonical_action"] = json!(derived);
            m["alt_filter"] = json!(actor.alt_filter());
            records.push(record("bim", text, m));
            true
        }
        Command::Actor { algebra, actions } => {
            let a = load_algebra(&algebra)?;
            let d = actor_decision(&a, &load_actions(&actions)?)?;
            let mut text = format!(
                "actor {}: dim {} ({})\nfamily: {}\nanticommutative: {}, ann = 0: {}, asoci = 0: {}\nasoci chain dims: {:?}",
                if d.exists { "certified" } else { "not certified" },
                d.actor_dim,
                d.exactness,
                d.family,
                d.anticommutative,
                d.ann_zero,
                d.socle.asoci.is_zero(),
                d.socle.chain_dims()
            );
            if let Some(c) = &d.certificate {
                for r in [
                    Some(&c.actor_laws),
                    Some(&c.derived_galt),
                    c.derived_alt.as_ref(),
                    c.actor_flexible.as_ref(),
                ]
                .into_iter()
                .flatten()
                {
                    text.push('\n');
                    text.push_str(&law_text(r));
                }
            }
            for r in &d.failures {
                text.push('\n');
                text.push_str(&law_text(r));
            }
            records.push(record("actor", text, &d));
            d.exists
        }
        Command::Soci {
            algebra,
            actions,
            family,
        } => {
            let a = load_algebra(&algebra)?;
            let ctx = context(&a, &actions, family)?;
            let r = asoci(&ctx)?;
            let text = format!("family: {}\n{}", r.family, subspace_text(&a, "soci", &r.soci));
            records.push(record("soci", text, &r));
            true
        }
        Command::Asoci {
            algebra,
            actions,
            family,
        } => {
            let a = load_algebra(&algebra)?;
            let ctx = context(&a, &actions, family)?;
            let r = asoci(&ctx)?;
            let text = format!(
                "family: {}\nsoci dim {}\nchain dims {:?}\n{}",
                r.family,
                r.soci.dim(),
                r.chain_dims(),
                subspace_text(&a, "asoci", &r.asoci)
            );
            records.push(record("asoci", text, &r));
            true
        }
        Command::Audit {
            algebra,
            actions,
            family,
        } => {
            let a = load_algebra(&algebra)?;
            let ctx = context(&a, &actions, family)?;
            let mut ok = true;
            for e in congruence_audit(&ctx)? {
                ok &= e.holds;
                let text = format!(
                    "{} {} (set dim {})",
                    if e.holds { "PASS" } else { "FAIL" },
                    e.statement,
                    e.set_dim
                );
                records.push(record("audit", text, &e));
            }
            ok
        }
        Command::Semidirect { action, category } => {
            let cat: Category = category.parse()?;
            let act = load_action(&action)?;
            let product = act.semidirect();
            let laws: Vec<LawReport> = [Law::Axiom21, Law::Axiom22]
                .into_iter()
                .chain((cat == Category::Alt).then_some(Law::Flexible))
                .map(|l| product.check_law(l))
                .collect();
            let in_category = laws.iter().all(|r| r.holds);
            let derived = act.check_derived(cat);
            let mut text = format_algebra(&product);
            text.push_str(&format!(
                "# {}: {}\n# derived action: {}",
                cat.name(),
                if in_category { "PASS" } else { "FAIL" },
                if derived.holds { "PASS" } else { "FAIL" }
            ));
            for r in laws.iter().filter(|r| !r.holds) {
                for line in law_text(r).lines() {
                    text.push_str(&format!("\n# {line}"));
                }
            }
            records.push(record(
                "semidirect",
                text,
                json!({
                    "algebra": product,
                    "category": cat.name(),
                    "in_category": in_category,
                    "laws": laws,
                    "derived": derived,
                }),
            ));
            in_category
        }
        Command::Identities {
            algebra,
            which,
            actions,
        } => {
            let a = load_algebra(&algebra)?;
            let acts = load_actions(&actions)?;
            let reports = identity_reports(&a, &which, &acts)?;
            let ok = reports.iter().all(|r| r.holds);
            for r in reports {
                records.push(record("identity", law_text(&r), &r));
            }
            ok
        }
        Command::Witness {
            target,
            dim,
            field,
            seed,
            budget,
        } => {
            let spec = SearchSpec {
                dim,
                field: field.parse()?,
                target: target.parse()?,
                budget,
                seed,
            };
            let r = search(&spec)?;
            let mut text = format!(
                "search {} over {} dim {} ({:?}, {} examined): {} hit(s)",
                r.target, r.field, r.dim, r.mode, r.examined, r.hit_count
            );
            for h in &r.hits {
                text.push_str(&format!("\n# hit {}\n{}", h.index, format_algebra(&h.algebra)));
                for rep in &h.reports {
                    text.push_str(&format!("# {}\n", law_text(rep).replace('\n', "\n# ")));
                }
            }
            records.push(record("search", text.trim_end().to_string(), &r));
            true
        }
        Command::Example51 { p } => {
            let e = example_5_1(p)?;
            let residual: Vec<String> = e.residual.iter().map(|c| c.to_string()).collect();
            let ok =
                e.unital_report.holds && e.lambda_report.holds && !e.coefficient.is_zero() && !e.closure_axiom21.holds;
            let text = format!(
                "product algebra h5 x h5 over GF({p})\n{} (unital action)\n{} (lambda action)\nB1 residual at (x1, 1, 1; (x2, 0)): [{}], coefficient on (0, z): {}\nclosure dim {}\n{}",
                law_text(&e.unital_report),
                law_text(&e.lambda_report),
                residual.join(", "),
                e.coefficient,
                e.closure.dim(),
                law_text(&e.closure_axiom21)
            );
            records.push(record("example51", text, &e));
            ok
        }
        Command::Canonical { name } => {
            let a = canonical(&name)?;
            records.push(record("algebra", format_algebra(&a).trim_end().to_string(), &a));
            true
        }
    };
    Ok(Outcome { records, ok })
}

/// Reports for `which` on `a`. B and A expressions run over the actor
/// pairs (relative to the supplied actions if any); the action identities
/// run over each supplied action, or the actor's canonical action.
pub fn identity_reports(a: &Algebra, which: &str, actions: &[ActionData]) -> Result<Vec<LawReport>> {
    let actor = || -> Result<ActorAlgebra> {
        if actions.is_empty() {
            bim(a, Variant::Galt)
        } else {
            relative_actor(a, actions)
        }
    };
    if let Ok(b) = which.parse::<BIdentity>() {
        let act = actor()?;
        return Ok(vec![triple_scan(b.name(), act.pairs(), a, |x, y, z, v| {
            crate::multiplier::identity_b(b, x, y, z, v).expect("pairs on A")
        })]);
    }
    let lower = which.trim().to_ascii_lowercase();
    if let Some(i) = lower.strip_prefix('a').and_then(|d| d.parse::<usize>().ok()) {
        if !(1..=11).contains(&i) {
            return Err(Error::UnknownIdentity(which.to_string()));
        }
        let act = actor()?;
        return Ok(vec![triple_scan(&format!("A{i}"), act.pairs(), a, |x, y, z, v| {
            expression_a(i, x, y, z, v).expect("pairs on A")
        })]);
    }
    let id: Identity = which.parse()?;
    let targets: Vec<ActionData> = if actions.is_empty() {
        vec![actor()?.canonical_action()]
    } else {
        actions.to_vec()
    };
    Ok(targets.iter().map(|t| t.check_identity(id)).collect())
}

/// Runs a parsed command, writing to `out` and errors to `err`.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match execute(cli.command) {
        Ok(outcome) => {
            for r in outcome.records {
                let line = match cli.format {
                    Format::Text => r.text,
                    Format::Machine => r.machine.to_string(),
                };
                let _ = writeln!(out, "{line}");
            }
            if outcome.ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = match cli.format {
                Format::Text => writeln!(err, "error: {e}"),
                Format::Machine => writeln!(err, "{}", json!({ "record": "error", "message": e.to_string() })),
            };
            2
        }
    }
}
