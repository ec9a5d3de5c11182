use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use mathieu_core::algebra::{
    format_poly, format_qpoly, format_rational, parse_poly, parse_qpoly, parse_rational,
    parse_ring_element, Poly, QPoly, RingDescriptor, RingElement,
};
use mathieu_core::certificate::{
    certificate_nonmembership, verify_certificate, Certificate, DEFAULT_BUDGET,
};
use mathieu_core::moments::{equivalence_check, matched_operator, MomentFunctional, WeightSpec};
use mathieu_core::operator::{lzero, member, reduce, OperatorSpec};
use mathieu_core::radical::{
    escape_exponent, largest_ideal, mathieu_check, radical_member_cofinite,
    radical_of_largest_ideal, radical_probe, CofiniteSubspace, MathieuStatus, SearchConfig,
};
use mathieu_core::ufd::{
    cor73_bound, lemma72_member, lemma72_radical, lemma74_lift, member_ufd, substitute_at,
    theorem77_check, T77Status, TruncContext, UfdContext,
};
use mathieu_core::{Error, Result};

/// Exact computations with Mathieu subspaces of ℚ[t].
#[derive(Parser)]
#[command(name = "mathieu", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Shorthand for `--format pretty`.
    #[arg(long, global = true)]
    pretty: bool,
    /// Seed for every randomized search.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    /// Worker threads for candidate searches.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Exit with status 1 on a negative verdict.
    #[arg(long = "assert", global = true)]
    assert_mode: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Pretty,
}

#[derive(Subcommand)]
enum Command {
    /// Normal form of a polynomial modulo the image of an operator.
    Reduce(OpPoly),
    /// Whether a polynomial is an image, with a preimage.
    Member(OpPoly),
    /// Constant term of the normal form.
    Lzero(OpPoly),
    /// Smallest m with f^m outside the image.
    Escape {
        #[command(flatten)]
        input: OpPoly,
        #[arg(long, default_value_t = 50)]
        budget: u64,
    },
    /// Certificate that f^{m(d+1)} is not an image of ∂ + α/t − t^d.
    Certify {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        d: u64,
        #[arg(long, default_value = "0")]
        alpha: String,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Recheck a certificate given as JSON text or `@path`.
    VerifyCert {
        #[arg(long)]
        cert: String,
    },
    /// Normalized moments ν₀, …, ν_n.
    Moments {
        #[arg(long)]
        weight: String,
        #[arg(long)]
        n: usize,
    },
    /// Whether the integral of a polynomial against the weight vanishes.
    VbMember {
        #[arg(long)]
        weight: String,
        #[arg(long)]
        poly: String,
    },
    /// Monic orthogonal polynomial of degree n.
    Orthopoly {
        #[arg(long)]
        weight: String,
        #[arg(long)]
        n: usize,
    },
    /// Compare image membership with vanishing integrals.
    Equiv {
        #[arg(long)]
        weight: String,
        /// Defaults to the operator matched with the weight.
        #[arg(long)]
        op: Option<String>,
        #[arg(long, default_value_t = 12)]
        deg: usize,
    },
    /// Mathieu verdict for a cofinite subspace.
    Mathieu {
        #[command(flatten)]
        space: Space,
        /// Coefficient bound for combinations of the basis of V̄.
        #[arg(long, default_value_t = 2)]
        height: i64,
        /// Random residues tried after the enumeration.
        #[arg(long, default_value_t = 200)]
        samples: usize,
        /// Extra radical candidate; may be repeated.
        #[arg(long = "candidate")]
        candidates: Vec<String>,
        /// Include I_V, its radical, the reason and the budget spent.
        #[arg(long)]
        details: bool,
    },
    /// Generator of the largest ideal in a cofinite subspace, and its radical.
    LargestIdeal {
        #[command(flatten)]
        space: Space,
    },
    /// Whether f^m lies in the image or subspace for every m in a window.
    RadicalProbe {
        #[arg(long, conflicts_with = "space", required_unless_present = "space")]
        op: Option<String>,
        #[arg(long)]
        space: Option<String>,
        #[arg(long)]
        poly: String,
        #[arg(long, default_value_t = 1)]
        from: u64,
        #[arg(long, default_value_t = 20)]
        to: u64,
    },
    /// Membership in the image of ∂ − a over ℚ[x]; `--p` gives f = p(a·t).
    UfdMember {
        #[arg(long)]
        ctx: String,
        #[arg(long, conflicts_with = "p", required_unless_present = "p")]
        poly: Option<String>,
        /// Polynomial in u (or t), substituted at u = a·t.
        #[arg(long)]
        p: Option<String>,
    },
    /// Whether p(a·t) lies in the radical of the image.
    UfdRadical {
        #[arg(long)]
        ctx: String,
        #[arg(long)]
        p: String,
    },
    /// Exponent bound N(d+1) for g·p(a·t)^m.
    Cor73 {
        #[arg(long)]
        ctx: String,
        #[arg(long)]
        p: String,
        #[arg(long, default_value = "1")]
        g: String,
    },
    /// u and d̃ᵢ with u·dᵢ = d̃ᵢ·a.
    Lift74 {
        #[arg(long)]
        a: String,
        /// Element dᵢ; repeat for each.
        #[arg(long = "d", required = true)]
        d: Vec<String>,
    },
    /// Surjectivity check for c∂ − a(t) over ℚ[x]/(x^k).
    T77 {
        #[arg(long)]
        ctx: String,
        #[arg(long, default_value_t = 10)]
        deg: usize,
    },
}

#[derive(Args)]
struct OpPoly {
    /// Operator, e.g. `mono:c=1,alpha=1,lambda=1,d=0` or `jacobi:alpha=1,beta=2`.
    #[arg(long)]
    op: String,
    #[arg(long)]
    poly: String,
}

#[derive(Args)]
struct Space {
    /// `{"modulus": [["t",1],["t - 1",1]], "vbar_basis": [[1,0]]}`
    #[arg(long)]
    space: String,
}

/// A command's JSON payload and whether it is a negative verdict.
struct Outcome {
    payload: Value,
    negative: bool,
    diagnostics: Vec<String>,
}

impl Outcome {
    fn new(payload: Value) -> Self {
        Outcome {
            payload,
            negative: false,
            diagnostics: Vec::new(),
        }
    }

    fn negative_if(mut self, negative: bool) -> Self {
        self.negative = negative;
        self
    }
}

fn qpoly(text: &str) -> Result<QPoly> {
    parse_qpoly(text)
}

fn over_qx(text: &str) -> Result<Poly<RingElement>> {
    parse_poly(text, RingDescriptor::QqPoly)
}

/// Reads a polynomial written in `u`, the variable of the factorial criteria.
fn in_u(text: &str) -> Result<Poly<RingElement>> {
    over_qx(&text.replace('u', "t"))
}

fn subspace(text: &str) -> Result<(CofiniteSubspace, Vec<String>)> {
    let v = CofiniteSubspace::from_json(text)?;
    let notes = v
        .unverified_factors()
        .iter()
        .map(|p| {
            format!(
                "factor {} accepted without an irreducibility check",
                format_qpoly(p)
            )
        })
        .collect();
    Ok((v, notes))
}

fn opt_poly(p: Option<&QPoly>) -> Value {
    p.map_or(Value::Null, |p| Value::String(format_qpoly(p)))
}

fn opt_ring_poly(p: Option<&Poly<RingElement>>) -> Value {
    p.map_or(Value::Null, |p| Value::String(format_poly(p)))
}

fn run(cli: &Cli) -> Result<Outcome> {
    let global = &cli.global;
    Ok(match &cli.command {
        Command::Reduce(input) => {
            let op: OperatorSpec = input.op.parse()?;
            let r = reduce(&op, &qpoly(&input.poly)?)?;
            Outcome::new(json!({
                "normal_form": format_qpoly(&r.normal_form),
                "witness": format_qpoly(&r.witness),
                "admissible": r.admissible,
            }))
        }
        Command::Member(input) => {
            let op: OperatorSpec = input.op.parse()?;
            let m = member(&op, &qpoly(&input.poly)?)?;
            Outcome::new(json!({"member": m.member, "witness": opt_poly(m.witness.as_ref())}))
                .negative_if(!m.member)
        }
        Command::Lzero(input) => {
            let op: OperatorSpec = input.op.parse()?;
            Outcome::new(json!({"value": format_rational(&lzero(&op, &qpoly(&input.poly)?)?)}))
        }
        Command::Escape { input, budget } => {
            let op: OperatorSpec = input.op.parse()?;
            let m = escape_exponent(&op, &qpoly(&input.poly)?, *budget)?;
            Outcome::new(json!({"exponent": m, "budget": budget})).negative_if(m.is_none())
        }
        Command::Certify {
            poly,
            d,
            alpha,
            budget,
        } => {
            let cert =
                certificate_nonmembership(&qpoly(poly)?, *d, &parse_rational(alpha)?, *budget)?;
            Outcome::new(serde_json::to_value(&cert).expect("certificates serialize"))
        }
        Command::VerifyCert { cert } => {
            let text = match cert.strip_prefix('@') {
                Some(path) => std::fs::read_to_string(path)
                    .map_err(|e| Error::BadInput(format!("cannot read {path}: {e}")))?,
                None => cert.clone(),
            };
            let cert: Certificate = serde_json::from_str(&text)
                .map_err(|e| Error::BadInput(format!("certificate JSON: {e}")))?;
            let valid = verify_certificate(&cert);
            Outcome::new(json!({"valid": valid})).negative_if(!valid)
        }
        Command::Moments { weight, n } => {
            let mut functional = MomentFunctional::new(weight.parse()?)?;
            let values: Vec<String> = functional.moments(*n).iter().map(format_rational).collect();
            Outcome::new(json!({"moments": values}))
        }
        Command::VbMember { weight, poly } => {
            let mut functional = MomentFunctional::new(weight.parse()?)?;
            let f = qpoly(poly)?;
            let integral = functional.integral(&f);
            let inside = functional.vb_member(&f);
            Outcome::new(json!({"member": inside, "integral": format_rational(&integral)}))
                .negative_if(!inside)
        }
        Command::Orthopoly { weight, n } => {
            let mut functional = MomentFunctional::new(weight.parse()?)?;
            Outcome::new(json!({"poly": format_qpoly(&functional.orthopoly(*n)?)}))
        }
        Command::Equiv { weight, op, deg } => {
            let w: WeightSpec = weight.parse()?;
            let op = match op {
                Some(text) => text.parse()?,
                None => matched_operator(&w)?,
            };
            let report = equivalence_check(&w, &op, *deg)?;
            let clean = report.disagreements.is_empty();
            Outcome::new(serde_json::to_value(&report).expect("reports serialize"))
                .negative_if(!clean)
        }
        Command::Mathieu {
            space,
            height,
            samples,
            candidates,
            details,
        } => {
            let (v, diagnostics) = subspace(&space.space)?;
            let config = SearchConfig {
                height: *height,
                samples: *samples,
                seed: global.seed,
                candidates: candidates.iter().map(|c| qpoly(c)).collect::<Result<_>>()?,
                jobs: global.jobs,
                ..SearchConfig::default()
            };
            let verdict = mathieu_check(&v, &config)?;
            let (a, b) = match &verdict.witness {
                Some((a, b)) => (Some(a), Some(b)),
                None => (None, None),
            };
            let mut payload = json!({
                "status": verdict.status,
                "witness_a": opt_poly(a),
                "witness_b": opt_poly(b),
            });
            if *details {
                let extra = json!({
                    "i_v": format_qpoly(&verdict.i_v_generator),
                    "radical_i_v": format_qpoly(&verdict.radical_iv_generator),
                    "reason": verdict.reason,
                    "budget_used": verdict.budget_used,
                });
                merge(&mut payload, extra);
            }
            Outcome {
                payload,
                negative: verdict.status == MathieuStatus::NotMathieu,
                diagnostics,
            }
        }
        Command::LargestIdeal { space } => {
            let (v, diagnostics) = subspace(&space.space)?;
            Outcome {
                payload: json!({
                    "i_v": format_qpoly(&largest_ideal(&v)),
                    "radical_i_v": format_qpoly(&radical_of_largest_ideal(&v)),
                }),
                negative: false,
                diagnostics,
            }
        }
        Command::RadicalProbe {
            op,
            space,
            poly,
            from,
            to,
        } => {
            let f = qpoly(poly)?;
            let window = *from..=*to;
            match (op, space) {
                (Some(op), _) => {
                    let op: OperatorSpec = op.parse()?;
                    let inside = radical_probe(|g| Ok(member(&op, g)?.member), &f, window)?;
                    Outcome::new(json!({"in_window": inside})).negative_if(!inside)
                }
                (None, Some(space)) => {
                    let (v, diagnostics) = subspace(space)?;
                    let inside = radical_probe(|g| Ok(v.contains(g)), &f, window)?;
                    Outcome {
                        payload: json!({"in_window": inside, "in_radical": radical_member_cofinite(&v, &f)}),
                        negative: !inside,
                        diagnostics,
                    }
                }
                (None, None) => return Err(Error::BadInput("give --op or --space".into())),
            }
        }
        Command::UfdMember { ctx, poly, p } => {
            let ctx: UfdContext = ctx.parse()?;
            let (f, criterion) = match (poly, p) {
                (Some(poly), _) => (over_qx(poly)?, None),
                (None, Some(p)) => {
                    let p = in_u(p)?;
                    (substitute_at(&ctx, &p)?, Some(lemma72_member(&ctx, &p)?))
                }
                (None, None) => return Err(Error::BadInput("give --poly or --p".into())),
            };
            let m = member_ufd(&ctx, &f)?;
            let mut payload =
                json!({"member": m.member, "witness": opt_ring_poly(m.witness.as_ref())});
            if let Some(criterion) = criterion {
                merge(
                    &mut payload,
                    json!({"poly": format_poly(&f), "factorial_criterion": criterion}),
                );
            }
            Outcome::new(payload).negative_if(!m.member)
        }
        Command::UfdRadical { ctx, p } => {
            let ctx: UfdContext = ctx.parse()?;
            let inside = lemma72_radical(&ctx, &in_u(p)?)?;
            Outcome::new(json!({"radical": inside})).negative_if(!inside)
        }
        Command::Cor73 { ctx, p, g } => {
            let ctx: UfdContext = ctx.parse()?;
            let report = cor73_bound(&ctx, &in_u(p)?, &over_qx(g)?)?;
            let valid = report.validated.iter().all(|&ok| ok);
            Outcome::new(serde_json::to_value(&report).expect("reports serialize"))
                .negative_if(!valid)
        }
        Command::Lift74 { a, d } => {
            let ring = RingDescriptor::QqPoly;
            let a = parse_ring_element(a, ring)?;
            let d = d
                .iter()
                .map(|x| parse_ring_element(x, ring))
                .collect::<Result<Vec<_>>>()?;
            let lift = lemma74_lift(&a, &d)?;
            Outcome::new(json!({
                "b": lift.b.to_string(),
                "u": lift.u.to_string(),
                "d_tilde": lift.d_tilde.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "outside_radical": lift.outside_radical,
            }))
        }
        Command::T77 { ctx, deg } => {
            let ctx: TruncContext = ctx.parse()?;
            let report = theorem77_check(&ctx, *deg)?;
            let probes: Vec<Value> = report
                .probes
                .iter()
                .map(|p| json!({"n": p.n, "witness": opt_ring_poly(p.witness.as_ref())}))
                .collect();
            Outcome::new(json!({
                "status": report.status,
                "one_witness": opt_ring_poly(report.one_witness.as_ref()),
                "degree_slack": report.degree_slack,
                "probes": probes,
                "counterexamples": report.counterexamples,
                "note": report.note,
            }))
            .negative_if(report.status != T77Status::Found || !report.counterexamples.is_empty())
        }
    })
}

fn merge(target: &mut Value, extra: Value) {
    if let (Value::Object(target), Value::Object(extra)) = (target, extra) {
        target.extend(extra);
    }
}

fn pretty(value: &Value) -> String {
    match value {
        Value::Object(map) => pretty_object(map, 0),
        other => plain(other),
    }
}

fn pretty_object(map: &Map<String, Value>, indent: usize) -> String {
    let pad = "  ".repeat(indent);
    let mut out = String::new();
    for (key, value) in map {
        match value {
            Value::Object(inner) => {
                out.push_str(&format!("{pad}{key}:\n"));
                out.push_str(&pretty_object(inner, indent + 1));
            }
            other => out.push_str(&format!("{pad}{key}: {}\n", plain(other))),
        }
    }
    out
}

fn plain(value: &Value) -> String {
    match value {
        Value::String(s) => s.clone(),
        Value::Null => "none".into(),
        Value::Array(items) => format!(
            "[{}]",
            items.iter().map(plain).collect::<Vec<_>>().join(", ")
        ),
        other => other.to_string(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            for line in &outcome.diagnostics {
                eprintln!("note: {line}");
            }
            if cli.global.pretty || cli.global.format == Format::Pretty {
                print!("{}", pretty(&outcome.payload));
            } else {
                println!("{}", outcome.payload);
            }
            if cli.global.assert_mode && outcome.negative {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
