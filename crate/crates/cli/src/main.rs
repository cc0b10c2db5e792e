//! `detkrs`: command-line front end to the `detkrs` library.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use detkrs::greene::{evaluate, Mode, Stat};
use detkrs::ideals::{gkrs_failure_witness, in_ini, IdealExpr};
use detkrs::krs::{krs, krs_inverse};
use detkrs::paths::{
    certify_shelling, facets, giambelli_multiplicity, gv_multiplicity, hilbert_series, restrictions,
};
use detkrs::poly::format_rational;
use detkrs::rees::{self, BigradedMonomial};
use detkrs::straighten::{straighten, straighten_oracle, ORACLE_DEFAULT_BOUND};
use detkrs::verify::{run_suites, Bounds, Suite, DEFAULT_SEED};
use detkrs::{Bitableau, PositionMonomial, Tableau, TwoLineArray};

const SCHEMA: u32 = 1;

#[derive(Parser)]
#[command(
    name = "detkrs",
    version,
    about = "KRS correspondence, determinantal ideals and path complexes"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Map a standard bitableau to its two-line array.
    Krs(BitableauInput),
    /// Map a two-line array or monomial to its standard bitableau.
    KrsInverse(ArrayInput),
    /// Greene-type statistics of a sequence.
    Greene(GreeneArgs),
    /// Membership of a monomial in the initial ideal of an ideal of minors.
    Membership(MembershipArgs),
    /// Straighten a product of minors.
    Straighten(StraightenArgs),
    /// Facets of the path complex, in shelling order.
    Facets(Grid),
    /// Restriction sets of the shelling, optionally certified.
    Shelling(ShellingArgs),
    /// Hilbert series of the quotient by the ideal of t-minors.
    Hilbert(HilbertArgs),
    /// Multiplicity by counting facets, by a determinant and by a product.
    Multiplicity(MultiplicityArgs),
    /// Membership in initial algebras of Rees algebras and algebras of minors.
    Rees(ReesArgs),
    /// Gorenstein property of the algebra of t-minors.
    Gorenstein(Grid),
    /// Run verification suites.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct BitableauInput {
    /// JSON file with {"left": {"rows": ..}, "right": {"rows": ..}}; `-` reads stdin.
    #[arg(long, conflicts_with_all = ["left", "right"])]
    file: Option<PathBuf>,
    /// Rows of the left tableau, e.g. "1 3 4 5;2 6".
    #[arg(long, requires = "right")]
    left: Option<String>,
    /// Rows of the right tableau.
    #[arg(long, requires = "left")]
    right: Option<String>,
}

#[derive(Args)]
struct ArrayInput {
    /// JSON file with {"top": [..], "bottom": [..]} or a monomial {"m","n","terms"}.
    #[arg(long, conflicts_with_all = ["top", "bottom", "monomial"])]
    file: Option<PathBuf>,
    #[arg(long, requires = "bottom")]
    top: Option<String>,
    #[arg(long, requires = "top")]
    bottom: Option<String>,
    /// Monomial as "i,j[^e] ...", with -m and -n.
    #[arg(long, requires_all = ["m", "n"])]
    monomial: Option<String>,
    #[arg(short)]
    m: Option<usize>,
    #[arg(short)]
    n: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum StatArg {
    Alpha,
    Gamma,
    AlphaStar,
    W,
}

#[derive(Args)]
struct GreeneArgs {
    /// Comma-separated sequence.
    #[arg(long, required_unless_present = "monomial")]
    seq: Option<String>,
    /// Use the bottom row of a monomial instead, with -m and -n.
    #[arg(long, conflicts_with = "seq", requires_all = ["m", "n"])]
    monomial: Option<String>,
    #[arg(short)]
    m: Option<usize>,
    #[arg(short)]
    n: Option<usize>,
    #[arg(long, value_enum)]
    stat: StatArg,
    /// Parameter k (or t).
    #[arg(long)]
    k: usize,
    /// Exhaustive search with a witness decomposition.
    #[arg(long)]
    brute: bool,
    /// Longest sequence accepted in brute mode.
    #[arg(long, default_value_t = detkrs::greene::BRUTE_DEFAULT_BOUND)]
    bound: usize,
}

#[derive(Args)]
struct MembershipArgs {
    /// Ideal, e.g. "I[4]*I[2]", "I[2]^2", "I[2]^(3)", "I[1]^(4) & I[2]^(2)".
    #[arg(long)]
    ideal: String,
    #[arg(long, required_unless_present = "file")]
    monomial: Option<String>,
    /// JSON monomial {"m","n","terms"}.
    #[arg(long, conflicts_with = "monomial")]
    file: Option<PathBuf>,
    #[arg(short)]
    m: Option<usize>,
    #[arg(short)]
    n: Option<usize>,
    /// For products: also search for a dividing bitableau initial monomial.
    #[arg(long)]
    gkrs: bool,
}

#[derive(Args)]
struct StraightenArgs {
    #[command(flatten)]
    input: BitableauInput,
    #[arg(short)]
    m: usize,
    #[arg(short)]
    n: usize,
    /// Solve a linear system instead of applying Plücker relations.
    #[arg(long)]
    oracle: bool,
}

#[derive(Args)]
struct Grid {
    #[arg(short)]
    m: usize,
    #[arg(short)]
    n: usize,
    #[arg(short)]
    t: usize,
}

#[derive(Args)]
struct ShellingArgs {
    #[command(flatten)]
    grid: Grid,
    /// Check the shelling condition and the right-turn description.
    #[arg(long)]
    certify: bool,
}

#[derive(Args)]
struct HilbertArgs {
    #[command(flatten)]
    grid: Grid,
    /// Also print the Hilbert function up to this degree.
    #[arg(long)]
    degree: Option<usize>,
}

#[derive(Args)]
struct MultiplicityArgs {
    #[command(flatten)]
    grid: Grid,
    /// Skip facet enumeration.
    #[arg(long)]
    no_facets: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Algebra {
    Symbolic,
    Rees,
    ReesProduct,
    At,
    CanonicalRees,
    CanonicalAt,
}

#[derive(Args)]
struct ReesArgs {
    #[arg(long, value_enum)]
    algebra: Algebra,
    #[arg(short)]
    m: usize,
    #[arg(short)]
    n: usize,
    /// Minor size; not used with rees-product.
    #[arg(short, required_unless_present = "factors")]
    t: Option<usize>,
    /// Factor sizes for rees-product, e.g. "4,2".
    #[arg(long)]
    factors: Option<String>,
    #[arg(long)]
    monomial: String,
    /// Exponent of T.
    #[arg(long)]
    k: usize,
}

#[derive(Args)]
struct VerifyArgs {
    /// Comma-separated list from krs, greene, groebner, symbolic, powers,
    /// products, straight, paths, hilbert, rees, all (decomp and destr are aliases).
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long)]
    max_m: Option<usize>,
    #[arg(long)]
    max_n: Option<usize>,
    #[arg(long)]
    max_degree: Option<usize>,
    #[arg(long)]
    max_seq_len: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Include elapsed times in the output.
    #[arg(long)]
    timing: bool,
}

/// Result of a command: the JSON value, its text rendering, and whether a
/// check failed.
struct Output {
    json: Value,
    text: String,
    failed: bool,
}

impl Output {
    fn ok(json: Value, text: String) -> Self {
        Output {
            json,
            text,
            failed: false,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            match cli.format {
                Format::Json => {
                    let mut v = out.json;
                    if let Value::Object(map) = &mut v {
                        map.insert("schema".into(), json!(SCHEMA));
                    }
                    println!("{}", serde_json::to_string(&v).expect("values serialize"));
                }
                Format::Text => print!("{}", out.text),
            }
            if out.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command) -> Result<Output> {
    match cmd {
        Command::Krs(a) => cmd_krs(a),
        Command::KrsInverse(a) => cmd_krs_inverse(a),
        Command::Greene(a) => cmd_greene(a),
        Command::Membership(a) => cmd_membership(a),
        Command::Straighten(a) => cmd_straighten(a),
        Command::Facets(g) => cmd_facets(g),
        Command::Shelling(a) => cmd_shelling(a),
        Command::Hilbert(a) => cmd_hilbert(a),
        Command::Multiplicity(a) => cmd_multiplicity(a),
        Command::Rees(a) => cmd_rees(a),
        Command::Gorenstein(g) => cmd_gorenstein(g),
        Command::Verify(a) => cmd_verify(a),
    }
}

fn read_json(path: &PathBuf) -> Result<Value> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text)?;
    } else {
        text =
            std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    }
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn parse_list(text: &str) -> Result<Vec<usize>> {
    text.split([',', ' '])
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>()
                .with_context(|| format!("bad integer {s:?}"))
        })
        .collect()
}

fn parse_rows(text: &str) -> Result<Tableau> {
    Ok(Tableau::new(
        text.split(';').map(parse_list).collect::<Result<_>>()?,
    ))
}

fn read_bitableau(input: &BitableauInput) -> Result<Bitableau> {
    let b = match (&input.file, &input.left, &input.right) {
        (Some(path), _, _) => serde_json::from_value(read_json(path)?)?,
        (None, Some(l), Some(r)) => Bitableau {
            left: parse_rows(l)?,
            right: parse_rows(r)?,
        },
        _ => bail!("give --file or both --left and --right"),
    };
    b.validate()?;
    Ok(b)
}

fn join(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn bool_word(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn cmd_krs(a: BitableauInput) -> Result<Output> {
    let b = read_bitableau(&a)?;
    let arr = krs(&b)?;
    let text = format!("{}\n{}\n", join(&arr.top), join(&arr.bottom));
    Ok(Output::ok(
        json!({"top": arr.top, "bottom": arr.bottom}),
        text,
    ))
}

fn cmd_krs_inverse(a: ArrayInput) -> Result<Output> {
    let arr = if let Some(path) = &a.file {
        let v = read_json(path)?;
        if v.get("terms").is_some() {
            serde_json::from_value::<PositionMonomial>(v)?.to_array()
        } else {
            serde_json::from_value::<TwoLineArray>(v)?
        }
    } else if let (Some(t), Some(b)) = (&a.top, &a.bottom) {
        TwoLineArray::new(parse_list(t)?, parse_list(b)?)?
    } else if let (Some(mon), Some(m), Some(n)) = (&a.monomial, a.m, a.n) {
        PositionMonomial::parse(m, n, mon)?.to_array()
    } else {
        bail!("give --file, --top/--bottom, or --monomial with -m and -n");
    };
    arr.validate()?;
    let b = krs_inverse(&arr)?;
    Ok(Output::ok(serde_json::to_value(&b)?, format!("{b}\n")))
}

fn cmd_greene(a: GreeneArgs) -> Result<Output> {
    let seq = match (&a.seq, &a.monomial, a.m, a.n) {
        (Some(s), _, _, _) => parse_list(s)?,
        (None, Some(mon), Some(m), Some(n)) => PositionMonomial::parse(m, n, mon)?.bottom_row(),
        _ => bail!("give --seq or --monomial with -m and -n"),
    };
    let stat = match a.stat {
        StatArg::Alpha => Stat::Alpha,
        StatArg::Gamma => Stat::Gamma,
        StatArg::AlphaStar => Stat::AlphaStar,
        StatArg::W => Stat::W,
    };
    let mode = if a.brute {
        Mode::Brute { bound: a.bound }
    } else {
        Mode::Fast
    };
    let (value, witness) = evaluate(&seq, stat, a.k, mode)?;
    let mut text = format!("{value}\n");
    if let Some(w) = &witness {
        text.push_str(&format!("{}\n", serde_json::to_string(w)?));
    }
    Ok(Output::ok(
        json!({"sequence": seq, "stat": stat, "k": a.k, "value": value, "witness": witness}),
        text,
    ))
}

fn cmd_membership(a: MembershipArgs) -> Result<Output> {
    let expr = IdealExpr::parse(&a.ideal)?;
    let mon = match (&a.file, &a.monomial, a.m, a.n) {
        (Some(path), _, _, _) => serde_json::from_value::<PositionMonomial>(read_json(path)?)?,
        (None, Some(text), Some(m), Some(n)) => PositionMonomial::parse(m, n, text)?,
        _ => bail!("give --file or --monomial with -m and -n"),
    };
    expr.validate(mon.m(), mon.n())?;
    let member = in_ini(&expr, &mon)?;
    let shape = detkrs::greene::ins_shape(&mon.bottom_row());
    let mut json =
        json!({"ideal": expr.to_string(), "monomial": mon, "member": member, "shape": shape});
    let mut text = format!("{}\n", bool_word(member));
    if a.gkrs {
        let factors = match expr.product_shape() {
            Some(s) => s.parts().to_vec(),
            None => bail!("--gkrs needs a product of determinantal ideals"),
        };
        let report = gkrs_failure_witness(&mon, &factors)?;
        text.push_str(&format!(
            "dividing bitableau initial monomial: {}\n",
            bool_word(report.bitableau_initial_exists)
        ));
        json["gkrs"] = serde_json::to_value(&report)?;
    }
    Ok(Output::ok(json, text))
}

fn cmd_straighten(a: StraightenArgs) -> Result<Output> {
    let b = read_bitableau(&a.input)?;
    let rep = if a.oracle {
        straighten_oracle(&b, a.m, a.n, ORACLE_DEFAULT_BOUND)?
    } else {
        straighten(&b, a.m, a.n)?
    };
    let terms: Vec<Value> = rep
        .iter()
        .map(|(c, t)| json!({"coeff": format_rational(c), "bitableau": t}))
        .collect();
    let text = if rep.is_empty() {
        "0\n".to_string()
    } else {
        rep.iter()
            .map(|(c, t)| format!("{} {t}\n", format_rational(c)))
            .collect()
    };
    Ok(Output::ok(json!({"input": b, "terms": terms}), text))
}

fn facet_json(paths: &[Vec<(usize, usize)>]) -> Value {
    json!(paths
        .iter()
        .map(|p| p.iter().map(|&(i, j)| [i, j]).collect::<Vec<_>>())
        .collect::<Vec<_>>())
}

fn facet_text(paths: &[Vec<(usize, usize)>]) -> String {
    paths
        .iter()
        .map(|p| {
            p.iter()
                .map(|(i, j)| format!("{i},{j}"))
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join(" | ")
}

fn cmd_facets(g: Grid) -> Result<Output> {
    let fs = facets(g.m, g.n, g.t)?;
    let json = json!({
        "m": g.m, "n": g.n, "t": g.t, "count": fs.len(),
        "facets": fs.iter().map(|f| facet_json(&f.paths)).collect::<Vec<_>>(),
    });
    let text = fs
        .iter()
        .map(|f| format!("{}\n", facet_text(&f.paths)))
        .collect();
    Ok(Output::ok(json, text))
}

fn cmd_shelling(a: ShellingArgs) -> Result<Output> {
    let g = a.grid;
    let fs = facets(g.m, g.n, g.t)?;
    let cs = restrictions(&fs);
    let entries: Vec<Value> = fs
        .iter()
        .zip(&cs)
        .map(|(f, c)| {
            json!({
                "facet": facet_json(&f.paths),
                "restriction": c.iter().map(|&(i, j)| [i, j]).collect::<Vec<_>>(),
            })
        })
        .collect();
    let mut json = json!({"m": g.m, "n": g.n, "t": g.t, "order": entries});
    let mut text: String = fs
        .iter()
        .zip(&cs)
        .map(|(f, c)| {
            let r: Vec<String> = c.iter().map(|(i, j)| format!("{i},{j}")).collect();
            format!("{}  ; {}\n", facet_text(&f.paths), r.join(" "))
        })
        .collect();
    let mut failed = false;
    if a.certify {
        let cert = certify_shelling(&fs);
        failed = !(cert.valid && cert.restrictions_are_right_turns);
        text.push_str(&format!(
            "shelling: {}\nrestrictions are right turns: {}\n",
            bool_word(cert.valid),
            bool_word(cert.restrictions_are_right_turns)
        ));
        json["certificate"] = json!({
            "valid": cert.valid,
            "restrictions_are_right_turns": cert.restrictions_are_right_turns,
            "first_failure": cert.first_failure,
        });
    }
    Ok(Output { json, text, failed })
}

fn cmd_hilbert(a: HilbertArgs) -> Result<Output> {
    let g = a.grid;
    let hs = hilbert_series(g.m, g.n, g.t)?;
    let mut json = json!({
        "numerator": hs.numerator,
        "denominator_degree": hs.denominator_degree,
        "multiplicity": hs.multiplicity(),
        "dimension": hs.denominator_degree,
    });
    let terms: Vec<String> = hs
        .numerator
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, c)| match i {
            0 => c.to_string(),
            1 => format!("{c}z"),
            _ => format!("{c}z^{i}"),
        })
        .collect();
    let mut text = format!(
        "({}) / (1-z)^{}\nmultiplicity {}\ndimension {}\n",
        terms.join(" + "),
        hs.denominator_degree,
        hs.multiplicity(),
        hs.denominator_degree
    );
    if let Some(d) = a.degree {
        let values: Vec<String> = (0..=d).map(|i| hs.coefficient(i).to_string()).collect();
        text.push_str(&format!("hilbert function {}\n", values.join(" ")));
        json["hilbert_function"] = json!(values);
    }
    Ok(Output::ok(json, text))
}

fn cmd_multiplicity(a: MultiplicityArgs) -> Result<Output> {
    let g = a.grid;
    let giambelli = giambelli_multiplicity(g.m, g.n, g.t)?;
    let gv = gv_multiplicity(g.m, g.n, g.t);
    let count = if a.no_facets {
        None
    } else {
        Some(facets(g.m, g.n, g.t)?.len().to_string())
    };
    let agree = gv == giambelli && count.as_ref().is_none_or(|c| *c == gv.to_string());
    let text = format!(
        "facets {}\ndeterminant {gv}\nproduct {giambelli}\n",
        count.as_deref().unwrap_or("-")
    );
    let json = json!({
        "facets": count,
        "determinant": gv.to_string(),
        "product": giambelli.to_string(),
        "agree": agree,
    });
    Ok(Output {
        json,
        text,
        failed: !agree,
    })
}

fn cmd_rees(a: ReesArgs) -> Result<Output> {
    let mon = PositionMonomial::parse(a.m, a.n, &a.monomial)?;
    let x = BigradedMonomial::new(mon, a.k);
    let t = || {
        a.t.ok_or_else(|| anyhow!("-t is required for this algebra"))
    };
    let check_t = |t: usize| -> Result<usize> {
        if t == 0 || t > a.m.min(a.n) {
            bail!("t = {t} outside [1, {}]", a.m.min(a.n));
        }
        Ok(t)
    };
    let (name, member) = match a.algebra {
        Algebra::Symbolic => ("symbolic", rees::in_ini_symbolic_rees(&x, check_t(t()?)?)),
        Algebra::Rees => ("rees", rees::in_ini_rees(&x, check_t(t()?)?)),
        Algebra::At => ("at", rees::in_ini_at(&x, check_t(t()?)?)),
        Algebra::CanonicalRees => (
            "canonical-rees",
            rees::in_canonical_rees(&x, check_t(t()?)?),
        ),
        Algebra::CanonicalAt => ("canonical-at", rees::in_canonical_at(&x, check_t(t()?)?)),
        Algebra::ReesProduct => {
            let factors = parse_list(
                a.factors
                    .as_deref()
                    .ok_or_else(|| anyhow!("--factors is required"))?,
            )?;
            if factors.iter().any(|&f| f > a.m.min(a.n)) {
                bail!("factor sizes {factors:?} exceed {}", a.m.min(a.n));
            }
            ("rees-product", rees::in_ini_rees_product(&x, &factors)?)
        }
    };
    Ok(Output::ok(
        json!({"algebra": name, "monomial": x.mon, "k": x.k, "t": a.t, "factors": a.factors, "member": member}),
        format!("{}\n", bool_word(member)),
    ))
}

fn cmd_gorenstein(g: Grid) -> Result<Output> {
    let reason = rees::is_gorenstein_at(g.m, g.n, g.t)?;
    let dim = rees::dim_at(g.m, g.n, g.t)?;
    let clause = reason.map(|r| r.clause().to_string());
    let text = match (&reason, &clause) {
        (Some(r), Some(c)) => format!("gorenstein: yes ({c}: {r:?})\ndimension {dim}\n"),
        _ => format!("gorenstein: no\ndimension {dim}\n"),
    };
    Ok(Output::ok(
        json!({"m": g.m, "n": g.n, "t": g.t, "gorenstein": reason.is_some(), "reason": reason, "clause": clause, "dimension": dim}),
        text,
    ))
}

fn cmd_verify(a: VerifyArgs) -> Result<Output> {
    let suites = Suite::parse_selection(&a.suite)?;
    let bounds = Bounds {
        max_m: a.max_m,
        max_n: a.max_n,
        max_degree: a.max_degree,
        max_seq_len: a.max_seq_len,
        seed: a.seed,
    };
    let reports = run_suites(&suites, &bounds);
    let passed = reports.iter().all(|r| r.passed());
    let mut text = String::new();
    let mut list = Vec::new();
    for r in &reports {
        let status = if r.passed() { "PASS" } else { "FAIL" };
        text.push_str(&format!(
            "{status} {} cases={} failures={}",
            r.suite, r.cases, r.failure_count
        ));
        if a.timing {
            text.push_str(&format!(" elapsed_ms={}", r.elapsed_ms));
        }
        text.push('\n');
        for f in &r.failures {
            text.push_str(&format!(
                "  {}: {} expected {} got {}\n",
                f.check, f.input, f.expected, f.actual
            ));
        }
        let mut v = serde_json::to_value(r)?;
        if a.timing {
            v["elapsed_ms"] = json!(r.elapsed_ms as u64);
        }
        list.push(v);
    }
    Ok(Output {
        json: json!({"seed": a.seed, "passed": passed, "reports": list}),
        text,
        failed: !passed,
    })
}
