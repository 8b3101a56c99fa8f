use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use qcones::acceptance;
use qcones::conelab::{
    check_conjecture, degree_cone, lusztig_cone, negative_tight_cone, position_dictionary, Verdict,
};
use qcones::hallalg::{HallAlgebra, HallElement};
use qcones::polycone::Comparison;
use qcones::quiverrep::{
    ar_quiver, check_superfluous_conjecture, enumerate_adapted_words, is_adapted, ktheory_cones,
    DynkinQuiver, MiddleTermMode, ModuleClass,
};
use qcones::rootsys::{
    beta_sequence, enumerate_reduced_words, num_positive_roots, CartanMatrix, CartanType,
    ReducedWord, DEFAULT_WORD_CAP,
};
use qcones::tropflag::{initial_form, phi, phi_rank, pluecker_relations, trop_membership};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(
    name = "qcones",
    version,
    about = "Cones of quantum group degrees, AR quivers and Hall algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format; JSON is the only one.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Root system data.
    Roots {
        #[command(subcommand)]
        verb: RootsVerb,
    },
    /// Lusztig, negative tight and degree cones.
    Cone {
        #[command(subcommand)]
        verb: ConeVerb,
    },
    /// Auslander-Reiten quivers and middle terms.
    Quiver {
        #[command(subcommand)]
        verb: QuiverVerb,
    },
    /// Ringel-Hall algebra of equioriented A_n.
    Hall {
        #[command(subcommand)]
        verb: HallVerb,
    },
    /// Tropical flag variety checks.
    Trop {
        #[command(subcommand)]
        verb: TropVerb,
    },
    /// Runs the acceptance suite.
    PaperCheck,
}

#[derive(Args, Debug, Serialize)]
struct TypeArgs {
    /// Cartan type such as "A3", or a family letter together with --rank.
    #[arg(long = "type")]
    #[serde(rename = "type")]
    cartan_type: String,
    #[arg(long)]
    rank: Option<usize>,
}

#[derive(Args, Debug, Serialize)]
struct WordArgs {
    #[command(flatten)]
    #[serde(flatten)]
    ty: TypeArgs,
    /// Reduced word of w0, comma-separated 1-based letters.
    #[arg(long)]
    word: String,
}

#[derive(Args, Debug, Serialize)]
struct QuiverArgs {
    #[command(flatten)]
    #[serde(flatten)]
    ty: TypeArgs,
    /// Arrows such as "1>2,2>3"; inferred from --word when omitted.
    #[arg(long)]
    quiver: Option<String>,
    /// Adapted reduced word; the first adapted word when omitted.
    #[arg(long)]
    word: Option<String>,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
enum RootsVerb {
    /// The sequence β_1, …, β_N of a reduced word.
    Betas(WordArgs),
    /// All reduced words of the longest element.
    Words {
        #[command(flatten)]
        #[serde(flatten)]
        ty: TypeArgs,
        #[arg(long, default_value_t = DEFAULT_WORD_CAP)]
        cap: usize,
    },
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
enum ConeVerb {
    Lusztig(WordArgs),
    Negative(WordArgs),
    Degree(QuiverArgs),
    /// Compares the degree cone with the dual negative tight cone.
    Check(QuiverArgs),
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
enum QuiverVerb {
    Ar(QuiverArgs),
    Middle {
        #[command(flatten)]
        #[serde(flatten)]
        q: QuiverArgs,
        /// 1-based position of U.
        #[arg(long)]
        k: usize,
        /// 1-based position of V.
        #[arg(long)]
        l: usize,
        #[arg(long, value_enum, default_value_t = Mode::Oracle)]
        mode: Mode,
    },
    Ktheory {
        #[command(flatten)]
        #[serde(flatten)]
        q: QuiverArgs,
        /// Total dimension bound for degenerations.
        #[arg(long)]
        bound: Option<i64>,
    },
    Superfluous(QuiverArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
enum Mode {
    Oracle,
    Prop43,
    Relaxed,
}

impl From<Mode> for MiddleTermMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Oracle => MiddleTermMode::Oracle,
            Mode::Prop43 => MiddleTermMode::Prop43,
            Mode::Relaxed => MiddleTermMode::Relaxed,
        }
    }
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
enum HallVerb {
    /// H^X_{V,W}: submodules of X isomorphic to W with quotient V.
    Poly {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        v: String,
        #[arg(long)]
        w: String,
        #[arg(long)]
        x: String,
    },
    /// F_V · F_W.
    Prod {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        v: String,
        #[arg(long)]
        w: String,
    },
    /// [F_V, F_U]_q for indecomposables U before V.
    Comm {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        v: String,
        #[arg(long)]
        u: String,
    },
    /// Predicted PBW term of [F_{β_k[1]}, F_{β_k}]_q; every k when --k is omitted.
    VerifyTerm {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
    },
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
enum TropVerb {
    Relations {
        #[arg(long)]
        n: usize,
    },
    /// Membership of φ(d) on the incidence-Plücker generators.
    Check {
        #[arg(long)]
        n: usize,
        /// d_{1,1}, d_{1,2}, …, d_{n-1,n-1}, comma-separated.
        #[arg(long)]
        d: String,
    },
    Initial {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: String,
    },
    Rank {
        #[arg(long)]
        n: usize,
    },
}

enum Status {
    Verified,
    Failed,
}

struct Output {
    result: Value,
    status: Status,
}

impl Output {
    fn ok(result: impl Serialize) -> Result<Self> {
        Ok(Output {
            result: serde_json::to_value(result)?,
            status: Status::Verified,
        })
    }

    fn checked(result: impl Serialize, verified: bool) -> Result<Self> {
        Ok(Output {
            result: serde_json::to_value(result)?,
            status: if verified {
                Status::Verified
            } else {
                Status::Failed
            },
        })
    }
}

fn cartan(t: &TypeArgs) -> Result<CartanMatrix> {
    let s = t.cartan_type.trim();
    let parsed: CartanType = match (s.len(), t.rank) {
        (1, Some(r)) => format!("{s}{r}").parse(),
        (1, None) => bail!("--type {s:?} needs --rank"),
        (_, Some(r)) => {
            let ct: CartanType = s.parse().with_context(|| format!("invalid --type {s:?}"))?;
            if ct.rank != r {
                bail!("--rank {r} disagrees with --type {s}");
            }
            Ok(ct)
        }
        (_, None) => s.parse(),
    }
    .with_context(|| format!("invalid --type {s:?}"))?;
    Ok(CartanMatrix::of_type(parsed))
}

fn word(s: &str, c: &CartanMatrix) -> Result<ReducedWord> {
    let w: ReducedWord = s.parse().with_context(|| format!("invalid --word {s:?}"))?;
    beta_sequence(c, &w).with_context(|| format!("invalid --word {s:?}"))?;
    let big_n = num_positive_roots(c);
    if w.len() != big_n {
        bail!(
            "--word {s:?} has length {}, a reduced word of w0 has length {big_n}",
            w.len()
        );
    }
    Ok(w)
}

fn quiver_and_word(a: &QuiverArgs) -> Result<(DynkinQuiver, ReducedWord)> {
    let c = cartan(&a.ty)?;
    let w = a.word.as_deref().map(|s| word(s, &c)).transpose()?;
    let q = match (&a.quiver, &w) {
        (Some(s), _) => {
            DynkinQuiver::parse(c.clone(), s).with_context(|| format!("invalid --quiver {s:?}"))?
        }
        (None, Some(w)) => DynkinQuiver::all_orientations(&c)?
            .into_iter()
            .find(|q| is_adapted(q, w))
            .ok_or_else(|| anyhow!("--word is not adapted to any orientation"))?,
        (None, None) => bail!("one of --quiver or --word is required"),
    };
    let w = match w {
        Some(w) => {
            if !is_adapted(&q, &w) {
                bail!("--word is not adapted to --quiver {q}");
            }
            w
        }
        None => enumerate_adapted_words(&q)
            .into_iter()
            .next()
            .ok_or_else(|| anyhow!("--quiver has no adapted word"))?,
    };
    Ok((q, w))
}

fn module(h: &HallAlgebra, flag: &str, s: &str) -> Result<ModuleClass> {
    h.parse_module(s)
        .with_context(|| format!("invalid --{flag} {s:?}"))
}

fn labelled(h: &HallAlgebra, e: &HallElement) -> Value {
    Value::Array(
        e.terms()
            .into_iter()
            .map(|t| json!({ "module": h.format_module(&t.module), "class": t.module, "coeff": t.coeff, "display": t.coeff.to_string() }))
            .collect(),
    )
}

fn degree_vector(n: usize, s: &str) -> Result<Vec<num_rational::BigRational>> {
    let d = s
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<num_rational::BigRational>()
                .map_err(|_| anyhow!("invalid --d entry {t:?}"))
        })
        .collect::<Result<Vec<_>>>()?;
    let want = n * n.saturating_sub(1) / 2;
    if d.len() != want {
        bail!("--d needs {want} entries for n = {n}, got {}", d.len());
    }
    Ok(d)
}

fn execute(cmd: &Command) -> Result<Output> {
    match cmd {
        Command::Roots { verb } => match verb {
            RootsVerb::Betas(a) => {
                let c = cartan(&a.ty)?;
                let w = word(&a.word, &c)?;
                Output::ok(beta_sequence(&c, &w)?)
            }
            RootsVerb::Words { ty, cap } => {
                let c = cartan(ty)?;
                let words = enumerate_reduced_words(&c, *cap)?;
                Output::ok(json!({ "count": words.len(), "words": words }))
            }
        },
        Command::Cone { verb } => match verb {
            ConeVerb::Lusztig(a) | ConeVerb::Negative(a) => {
                let c = cartan(&a.ty)?;
                let w = word(&a.word, &c)?;
                let cone = match verb {
                    ConeVerb::Lusztig(_) => lusztig_cone(&c, &w)?,
                    _ => negative_tight_cone(&c, &w)?,
                };
                Output::ok(
                    json!({ "dictionary": position_dictionary(&c, &w)?, "cone": cone.to_json()? }),
                )
            }
            ConeVerb::Degree(a) => {
                let (q, w) = quiver_and_word(a)?;
                let cone = degree_cone(&q, &w)?;
                Output::ok(json!({
                    "quiver": q.to_string(),
                    "word": w,
                    "dictionary": position_dictionary(q.cartan(), &w)?,
                    "cone": cone.to_json()?,
                }))
            }
            ConeVerb::Check(a) => {
                let (q, w) = quiver_and_word(a)?;
                let report = check_conjecture(&q, &w)?;
                let equal = report.verdict == Verdict::Equal;
                Output::checked(report, equal)
            }
        },
        Command::Quiver { verb } => match verb {
            QuiverVerb::Ar(a) => {
                let (q, w) = quiver_and_word(a)?;
                Output::ok(ar_quiver(&q, &w)?.to_json())
            }
            QuiverVerb::Middle { q, k, l, mode } => {
                let (quiver, w) = quiver_and_word(q)?;
                let ar = ar_quiver(&quiver, &w)?;
                if *k == 0 || *l == 0 {
                    bail!("--k and --l are 1-based");
                }
                let terms = ar.middle_terms(k - 1, l - 1, (*mode).into())?;
                Output::ok(json!({
                    "k": k,
                    "l": l,
                    "mode": mode,
                    "ext": ar.ext_indec(l - 1, k - 1),
                    "middle_terms": terms,
                }))
            }
            QuiverVerb::Ktheory { q, bound } => {
                let (quiver, w) = quiver_and_word(q)?;
                let ar = ar_quiver(&quiver, &w)?;
                let r = ktheory_cones(&ar, *bound)?;
                let ok = r.duality_verdict == Comparison::Equal && r.stabilized;
                Output::checked(r, ok)
            }
            QuiverVerb::Superfluous(a) => {
                let (q, w) = quiver_and_word(a)?;
                let r = check_superfluous_conjecture(&ar_quiver(&q, &w)?)?;
                let ok = r.counterexamples.is_empty();
                Output::checked(r, ok)
            }
        },
        Command::Hall { verb } => match verb {
            HallVerb::Poly { n, v, w, x } => {
                let h = HallAlgebra::equioriented(*n)?;
                let (v, w, x) = (
                    module(&h, "v", v)?,
                    module(&h, "w", w)?,
                    module(&h, "x", x)?,
                );
                let p = h.hall_polynomial(&v, &w, &x)?;
                Output::ok(json!({ "poly": p, "display": p.to_string() }))
            }
            HallVerb::Prod { n, v, w } => {
                let h = HallAlgebra::equioriented(*n)?;
                let (v, w) = (module(&h, "v", v)?, module(&h, "w", w)?);
                Output::ok(labelled(&h, &h.hall_product(&v, &w)?))
            }
            HallVerb::Comm { n, v, u } => {
                let h = HallAlgebra::equioriented(*n)?;
                let (v, u) = (module(&h, "v", v)?, module(&h, "u", u)?);
                Output::ok(labelled(&h, &h.q_commutator(&v, &u)?))
            }
            HallVerb::VerifyTerm { n, k } => {
                let h = HallAlgebra::equioriented(*n)?;
                let ks: Vec<usize> = match k {
                    Some(0) => bail!("--k is 1-based"),
                    Some(k) => vec![k - 1],
                    None => h
                        .ar()
                        .word()
                        .successor_pairs()
                        .into_iter()
                        .map(|(k, _)| k)
                        .collect(),
                };
                let checks = ks
                    .into_iter()
                    .map(|k| h.verify_term_theorem(k))
                    .collect::<qcones::Result<Vec<_>>>()?;
                let ok = checks.iter().all(|c| c.holds);
                Output::checked(checks, ok)
            }
        },
        Command::Trop { verb } => match verb {
            TropVerb::Relations { n } => {
                let rels = pluecker_relations(*n)?;
                let shown: Vec<String> = rels.iter().map(ToString::to_string).collect();
                Output::ok(json!({ "count": rels.len(), "relations": rels, "display": shown }))
            }
            TropVerb::Check { n, d } => {
                let w = phi(*n, &degree_vector(*n, d)?)?;
                let r = trop_membership(&w, &pluecker_relations(*n)?)?;
                let ok = r.passed;
                Output::checked(json!({ "weights": w, "report": r }), ok)
            }
            TropVerb::Initial { n, d } => {
                let w = phi(*n, &degree_vector(*n, d)?)?;
                let forms = pluecker_relations(*n)?
                    .iter()
                    .map(|rel| Ok(json!({ "relation": rel.to_string(), "initial": initial_form(&w, rel)? })))
                    .collect::<Result<Vec<_>>>()?;
                Output::ok(json!({ "weights": w, "initial_forms": forms }))
            }
            TropVerb::Rank { n } => Output::ok(
                json!({ "n": n, "rank": phi_rank(*n)?, "expected": n * n.saturating_sub(1) / 2 }),
            ),
        },
        Command::PaperCheck => {
            let outcomes = acceptance::run_all();
            for o in &outcomes {
                eprintln!("{}", o.line());
            }
            let rows: Vec<Value> = outcomes
                .iter()
                .map(|o| json!({ "id": o.id, "name": o.name, "passed": o.passed, "detail": o.detail, "bound_ms": o.bound_ms }))
                .collect();
            let ok = outcomes.iter().all(|o| o.passed);
            Output::checked(
                json!({ "criteria": rows, "passed": outcomes.iter().filter(|o| o.passed).count(), "total": outcomes.len() }),
                ok,
            )
        }
    }
}

fn command_name(cmd: &Command) -> (String, Value) {
    fn verb<T: Serialize>(group: &str, v: &T) -> (String, Value) {
        // Externally tagged enums serialize as {"verb": {inputs}}.
        match serde_json::to_value(v).unwrap_or(Value::Null) {
            Value::Object(m) if m.len() == 1 => {
                let (k, inputs) = m.into_iter().next().expect("one entry");
                (format!("{group} {k}"), inputs)
            }
            other => (group.to_string(), other),
        }
    }
    match cmd {
        Command::Roots { verb: v } => verb("roots", v),
        Command::Cone { verb: v } => verb("cone", v),
        Command::Quiver { verb: v } => verb("quiver", v),
        Command::Hall { verb: v } => verb("hall", v),
        Command::Trop { verb: v } => verb("trop", v),
        Command::PaperCheck => ("paper-check".to_string(), json!({})),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let Format::Json = cli.format;
    let (name, inputs) = command_name(&cli.command);
    let start = Instant::now();
    let out = execute(&cli.command);
    eprintln!("{name}: {:.1} ms", start.elapsed().as_secs_f64() * 1e3);
    match out {
        Ok(out) => {
            let verified = matches!(out.status, Status::Verified);
            let manifest = json!({
                "command": name,
                "inputs": inputs,
                "version": env!("CARGO_PKG_VERSION"),
                "deterministic": true,
                "verified": verified,
                "result": out.result,
            });
            let text = serde_json::to_string_pretty(&manifest).expect("serializable");
            // A closed pipe is not an error worth reporting.
            let _ = writeln!(std::io::stdout(), "{text}");
            ExitCode::from(if verified { 0 } else { 2 })
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
