//! `idempair`: classify elements, compute Drazin and group inverses,
//! dump structure tables and matrix models, and run the verification
//! suites. All output is deterministic JSON; exit codes are 0 (success),
//! 1 (a check failed), 2 (input error), 3 (violated hypothesis).

use clap::{Args, Parser, Subcommand, ValueEnum};
use idempair_cli::report::{CheckLine, RunReport, Stopwatch};
use idempair_cli::rng::Sampler;
use idempair_cli::schema::{
    checks_json, choice_of_input, combination_coeffs_json, drazin_element_json,
    drazin_matrix_json, element_coeffs_json, matrix_json, parse_choice, parse_rational,
    parse_rationals, presentation_json, rational_str, verdict_json, AlgebraChoice, ElementInput,
};
use idempair_cli::{exit_code_for, suites};
use idempair_core::classify::{classify_family, classify_zm_flagged, CoefficientProfile};
use idempair_core::drazin::{algebra_drazin, closed_form_drazin_alpha_pq, closed_form_group_lambda, matrix_drazin};
use idempair_core::element::Element;
use idempair_core::models::{
    ambient_unit_in_span, build_family_pair, build_lambda_pair, build_zn_pair, pinned_z3_pair,
    verify_relations, word_image_rank, LambdaSpec,
};
use idempair_core::pres::OddZero;
use idempair_core::table::StructureTable;
use idempair_core::word::Gen;
use num_rational::BigRational;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "idempair", version, about = "Exact computations in algebras spanned by two idempotents")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit JSON (the default; accepted for explicitness).
    #[arg(long, global = true)]
    json: bool,
    /// Indent the JSON output.
    #[arg(long, global = true)]
    pretty: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Classify an element: invertibility kind, spectrum, rule fired.
    Classify(ClassifyArgs),
    /// Compute a Drazin or group inverse by oracle and/or closed form.
    Drazin(DrazinArgs),
    /// Dump the multiplication table of a presentation.
    Table(TableArgs),
    /// Build a matrix model and verify its relations.
    Models(ModelsArgs),
    /// Run the verification suites.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FlagArg {
    /// The odd top word starting with q vanishes.
    QpZero,
    /// The odd top word starting with p vanishes.
    PqZero,
}

impl FlagArg {
    fn flag(self) -> OddZero {
        match self {
            FlagArg::QpZero => OddZero::QpZero,
            FlagArg::PqZero => OddZero::PqZero,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Oracle,
    ClosedForm,
    Both,
}

#[derive(Args)]
struct ClassifyArgs {
    /// Algebra: Zn or F1..F4.
    #[arg(long)]
    family: Option<String>,
    /// Chain length for Zn.
    #[arg(long)]
    n: Option<usize>,
    /// Family parameter for F1..F4.
    #[arg(long)]
    m: Option<usize>,
    /// Which odd top word vanishes in a chain of odd length.
    #[arg(long, value_enum, default_value = "qp-zero")]
    flag: FlagArg,
    /// Treat the chain as containing its ambient unit.
    #[arg(long)]
    with_unit: bool,
    /// Classify the zero element.
    #[arg(long)]
    zero: bool,
    /// Coefficients of p, pq, pqp, ... (comma separated rationals).
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    x: Vec<String>,
    /// Coefficients of q, qp, qpq, ...
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    y: Vec<String>,
    /// Read the element from a JSON file ("-" for stdin).
    #[arg(long)]
    profile: Option<String>,
    /// Draw a random profile instead of reading one.
    #[arg(long)]
    random: bool,
    /// Seed for --random.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct DrazinArgs {
    /// Algebra: Zn or F1..F4. Omit when using --lambda.
    #[arg(long)]
    family: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    /// Family parameter, or collapse exponent for chain closed forms,
    /// or cell parameter for --lambda.
    #[arg(long)]
    m: Option<usize>,
    #[arg(long, value_enum, default_value = "qp-zero")]
    flag: FlagArg,
    /// Invert alpha*p + q.
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    /// Use the two-parameter matrix cell model instead of a presentation.
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    /// oracle, closed-form, or both (default: both when --alpha or
    /// --lambda is given, oracle otherwise).
    #[arg(long, value_enum)]
    method: Option<MethodArg>,
    /// Coefficients of a general element (oracle route only).
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    x: Vec<String>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    y: Vec<String>,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long, value_enum, default_value = "qp-zero")]
    flag: FlagArg,
}

#[derive(Args)]
struct ModelsArgs {
    #[arg(long)]
    family: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long, value_enum, default_value = "qp-zero")]
    flag: FlagArg,
    /// Build the chain model with the ambient unit in its span.
    #[arg(long)]
    with_unit: bool,
    /// Cell parameter for the two-parameter model.
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    /// Emit the pinned three-by-three reference pair.
    #[arg(long)]
    example: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// dims, radical, drazin, classify, index, countzero, or all.
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

struct Failure {
    code: i32,
    message: String,
}

impl From<idempair_core::Error> for Failure {
    fn from(e: idempair_core::Error) -> Failure {
        Failure {
            code: exit_code_for(&e),
            message: e.to_string(),
        }
    }
}

impl From<String> for Failure {
    fn from(message: String) -> Failure {
        Failure { code: 2, message }
    }
}

impl From<&str> for Failure {
    fn from(message: &str) -> Failure {
        Failure {
            code: 2,
            message: message.to_string(),
        }
    }
}

fn main() {
    let cli = Cli::parse();
    let mut watch = Stopwatch::new();
    match run(&cli.command, &mut watch) {
        Ok(report) => {
            watch.write_sidecar(&report.command);
            // A closed pipe on stdout is the consumer's business, not an
            // error worth a panic.
            use std::io::Write;
            let _ = writeln!(std::io::stdout(), "{}", report.render(cli.pretty));
            std::process::exit(if report.all_pass() { 0 } else { 1 });
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            std::process::exit(f.code);
        }
    }
}

fn run(command: &Command, watch: &mut Stopwatch) -> Result<RunReport, Failure> {
    match command {
        Command::Classify(args) => cmd_classify(args, watch),
        Command::Drazin(args) => cmd_drazin(args, watch),
        Command::Table(args) => cmd_table(args, watch),
        Command::Models(args) => cmd_models(args, watch),
        Command::Verify(args) => cmd_verify(args, watch),
    }
}

fn rationals_json(v: &[BigRational]) -> Value {
    json!(v.iter().map(rational_str).collect::<Vec<_>>())
}

fn cmd_classify(args: &ClassifyArgs, watch: &mut Stopwatch) -> Result<RunReport, Failure> {
    let (choice, with_unit, xs, ys, seed_echo): (AlgebraChoice, bool, _, _, Option<u64>) =
        if let Some(path) = &args.profile {
            if args.family.is_some() {
                Err("pass either --profile or inline flags, not both".to_string())?;
            }
            let text = if path == "-" {
                use std::io::Read;
                let mut s = String::new();
                std::io::stdin()
                    .read_to_string(&mut s)
                    .map_err(|e| format!("could not read stdin: {e}"))?;
                s
            } else {
                std::fs::read_to_string(path)
                    .map_err(|e| format!("could not read {path}: {e}"))?
            };
            let input: ElementInput =
                serde_json::from_str(&text).map_err(|e| format!("malformed JSON: {e}"))?;
            let choice = choice_of_input(&input)?;
            let (xs, ys) = idempair_cli::schema::profile_vectors(&input.coeffs)?;
            (choice, input.with_unit.unwrap_or(false), xs, ys, None)
        } else {
            let family = args
                .family
                .as_deref()
                .ok_or("classify needs --family or --profile")?;
            let choice = parse_choice(family, args.n, args.m, args.flag.flag())?;
            let (xs, ys) = if args.random {
                let pres = choice.presentation()?;
                let horizon = pres.max_order(Gen::P).max(pres.max_order(Gen::Q));
                let mut sampler = Sampler::new(args.seed);
                sampler.profile(horizon + 2)
            } else if args.zero {
                (Vec::new(), Vec::new())
            } else {
                (parse_rationals(&args.x)?, parse_rationals(&args.y)?)
            };
            let seed = args.random.then_some(args.seed);
            (choice, args.with_unit, xs, ys, seed)
        };

    if with_unit && !matches!(choice, AlgebraChoice::Chain { .. }) {
        Err("--with-unit only applies to Zn".to_string())?;
    }
    let profile = CoefficientProfile::new(xs.clone(), ys.clone());
    let verdict = match choice {
        AlgebraChoice::Chain { n, flag } => classify_zm_flagged(&profile, n, flag, with_unit)?,
        AlgebraChoice::Family { kind, m } => classify_family(&profile, kind, m)?,
    };
    watch.lap("classify");
    let mut inputs = json!({
        "algebra": choice.json(),
        "with_unit": with_unit,
        "profile": {"x": rationals_json(&xs), "y": rationals_json(&ys)},
    });
    if let Some(seed) = seed_echo {
        inputs["seed"] = json!(seed);
    }
    Ok(RunReport::new(
        "classify",
        inputs,
        verdict_json(&verdict),
        Vec::new(),
    ))
}

fn cmd_drazin(args: &DrazinArgs, watch: &mut Stopwatch) -> Result<RunReport, Failure> {
    let method = args.method.unwrap_or({
        if args.alpha.is_some() || args.lambda.is_some() {
            MethodArg::Both
        } else {
            MethodArg::Oracle
        }
    });

    if let Some(lambda) = &args.lambda {
        let lambda = parse_rational(lambda)?;
        let m = args.m.ok_or("--lambda needs --m")?;
        let alpha = parse_rational(args.alpha.as_deref().ok_or("--lambda needs --alpha")?)?;
        let spec = LambdaSpec::new(m, lambda.clone())?;
        let pair = build_lambda_pair(&spec)?;
        let a = pair.p().scale(&alpha).add(pair.q());
        let inputs = json!({
            "model": {"lambda": rational_str(&lambda), "m": m},
            "alpha": rational_str(&alpha),
            "method": method_name(method),
        });
        let mut results = json!({});
        let mut checks = Vec::new();
        let mut closed_inverse = None;
        if method != MethodArg::Oracle {
            let (kernel, result) = closed_form_group_lambda(&pair, &spec, &alpha)?;
            checks.push(CheckLine::new(
                "closed-form-axioms",
                result.checks.all(),
                "group axioms in the cell model",
            ));
            checks.push(CheckLine::new(
                "closed-form-index",
                result.index == 1,
                format!("index {}", result.index),
            ));
            results["closed_form"] = json!({
                "kernel": combination_coeffs_json(&kernel),
                "inverse": matrix_json(&result.inverse),
                "index": result.index,
                "checks": checks_json(&result.checks),
            });
            closed_inverse = Some(result.inverse);
            watch.lap("closed-form");
        }
        if method != MethodArg::ClosedForm {
            let oracle = matrix_drazin(&a);
            if let Some(closed) = &closed_inverse {
                checks.push(CheckLine::new(
                    "methods-agree",
                    *closed == oracle.inverse,
                    "closed form equals the matrix route",
                ));
                checks.push(CheckLine::new(
                    "oracle-index-at-most-one",
                    oracle.index <= 1,
                    format!("measured index {}", oracle.index),
                ));
            }
            results["oracle"] = drazin_matrix_json(&oracle);
            watch.lap("oracle");
        }
        return Ok(RunReport::new("drazin", inputs, results, checks));
    }

    let family = args
        .family
        .as_deref()
        .ok_or("drazin needs --family or --lambda")?;
    let choice = parse_choice(family, args.n, args.m, args.flag.flag())?;
    let pres = choice.presentation()?;
    let table = StructureTable::build(pres)?;
    let alpha = args.alpha.as_deref().map(parse_rational).transpose()?;
    let a = match &alpha {
        Some(alpha) => Element::from_profile(
            pres,
            std::slice::from_ref(alpha),
            &[num_traits::One::one()],
        ),
        None => {
            let xs = parse_rationals(&args.x)?;
            let ys = parse_rationals(&args.y)?;
            if xs.is_empty() && ys.is_empty() {
                Err("drazin needs --alpha or --x/--y".to_string())?;
            }
            Element::from_profile(pres, &xs, &ys)
        }
    };
    let mut inputs = json!({
        "algebra": choice.json(),
        "element": element_coeffs_json(&a),
        "method": method_name(method),
    });
    if let Some(alpha) = &alpha {
        inputs["alpha"] = json!(rational_str(alpha));
    }
    let mut results = json!({});
    let mut checks = Vec::new();
    let mut closed = None;
    if method != MethodArg::Oracle {
        let alpha = alpha
            .as_ref()
            .ok_or("the closed form inverts alpha*p + q: pass --alpha")?;
        let m_form = match choice {
            AlgebraChoice::Family { m, .. } => m,
            AlgebraChoice::Chain { .. } => args
                .m
                .ok_or("chain closed forms need --m (the collapse exponent)")?,
        };
        let result = closed_form_drazin_alpha_pq(&table, m_form, alpha)?;
        checks.push(CheckLine::new(
            "closed-form-axioms",
            result.checks.all(),
            "Drazin axioms at the measured index",
        ));
        results["closed_form"] = drazin_element_json(&result);
        closed = Some(result);
        watch.lap("closed-form");
    }
    if method != MethodArg::ClosedForm {
        let oracle = algebra_drazin(&table, &a)?;
        if let Some(closed) = &closed {
            checks.push(CheckLine::new(
                "methods-agree",
                closed.inverse == oracle.inverse && closed.index == oracle.index,
                "closed form equals the core-nilpotent route",
            ));
        }
        results["oracle"] = drazin_element_json(&oracle);
        watch.lap("oracle");
    }
    Ok(RunReport::new("drazin", inputs, results, checks))
}

fn method_name(m: MethodArg) -> &'static str {
    match m {
        MethodArg::Oracle => "oracle",
        MethodArg::ClosedForm => "closed-form",
        MethodArg::Both => "both",
    }
}

fn cmd_table(args: &TableArgs, watch: &mut Stopwatch) -> Result<RunReport, Failure> {
    let choice = parse_choice(&args.family, args.n, args.m, args.flag.flag())?;
    let pres = choice.presentation()?;
    let table = StructureTable::build(pres)?;
    watch.lap("build");
    let dim = table.dim();
    let basis: Vec<String> = table.basis().iter().map(|w| w.to_string()).collect();
    let products: Vec<Vec<Value>> = (0..dim)
        .map(|i| {
            (0..dim)
                .map(|j| rationals_json(&table.entry(i, j).coeff_vector()))
                .collect()
        })
        .collect();
    let internal_unit = table
        .internal_unit()
        .map(|u| element_coeffs_json(&u))
        .unwrap_or(Value::Null);
    let results = json!({
        "presentation": presentation_json(&pres),
        "dimension": dim,
        "basis": basis,
        "products": products,
        "radical_dimension": table.radical_dimension(),
        "internal_unit": internal_unit,
    });
    watch.lap("serialize");
    Ok(RunReport::new(
        "table",
        json!({"algebra": choice.json()}),
        results,
        Vec::new(),
    ))
}

fn cmd_models(args: &ModelsArgs, watch: &mut Stopwatch) -> Result<RunReport, Failure> {
    if let Some(lambda) = &args.lambda {
        let lambda = parse_rational(lambda)?;
        let m = args.m.ok_or("--lambda needs --m")?;
        let spec = LambdaSpec::new(m, lambda.clone())?;
        let pair = build_lambda_pair(&spec)?;
        watch.lap("build");
        let hypothesis = idempair_core::drazin::verify_lambda_hypothesis(&pair, &spec);
        let checks = vec![CheckLine::new(
            "model-collapse-hypothesis",
            hypothesis.is_ok(),
            match &hypothesis {
                Ok(()) => "first collapse exactly at the intended exponent".to_string(),
                Err(e) => e.to_string(),
            },
        )];
        let results = json!({
            "p": matrix_json(pair.p()),
            "q": matrix_json(pair.q()),
            "size": pair.size(),
            "contains_ambient_unit": pair.contains_ambient_unit(),
        });
        return Ok(RunReport::new(
            "models",
            json!({"model": {"lambda": rational_str(&lambda), "m": m}}),
            results,
            checks,
        ));
    }

    let family = args
        .family
        .as_deref()
        .ok_or("models needs --family or --lambda")?;
    let choice = parse_choice(family, args.n, args.m, args.flag.flag())?;
    let pres = choice.presentation()?;
    if args.example
        && choice
            != (AlgebraChoice::Chain {
                n: 3,
                flag: OddZero::QpZero,
            })
    {
        Err("--example is the pinned chain of length 3".to_string())?;
    }
    let pair = match choice {
        _ if args.example => pinned_z3_pair(),
        AlgebraChoice::Chain { n, flag } => build_zn_pair(n, flag, args.with_unit)?,
        AlgebraChoice::Family { kind, m } => build_family_pair(kind, m)?,
    };
    watch.lap("build");
    let max_order = pres.max_order(Gen::P) + pres.max_order(Gen::Q) + 2;
    let relations = verify_relations(&pair, &pres, max_order)?;
    let rank = word_image_rank(&pair, &pres);
    let checks = vec![
        CheckLine::new(
            "model-relations",
            true,
            format!("{relations} word normal forms verified"),
        ),
        CheckLine::new(
            "model-word-image-rank",
            rank == pres.dimension(),
            format!("rank {rank}, dimension {}", pres.dimension()),
        ),
    ];
    watch.lap("verify");
    let results = json!({
        "presentation": presentation_json(&pres),
        "p": matrix_json(pair.p()),
        "q": matrix_json(pair.q()),
        "size": pair.size(),
        "contains_ambient_unit": pair.contains_ambient_unit(),
        "ambient_unit_in_span": ambient_unit_in_span(&pair, &pres),
    });
    Ok(RunReport::new(
        "models",
        json!({
            "algebra": choice.json(),
            "with_unit": args.with_unit,
            "example": args.example,
        }),
        results,
        checks,
    ))
}

fn cmd_verify(args: &VerifyArgs, watch: &mut Stopwatch) -> Result<RunReport, Failure> {
    let checks = suites::run_suite(&args.suite, args.seed, &mut |label| watch.lap(label))?;
    let passed = checks.iter().filter(|c| c.pass).count();
    let results = json!({
        "suite": args.suite,
        "passed": passed,
        "failed": checks.len() - passed,
        "total": checks.len(),
    });
    Ok(RunReport::new(
        "verify",
        json!({"suite": args.suite, "seed": args.seed}),
        results,
        checks,
    ))
}
