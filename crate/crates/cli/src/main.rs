//! `reslat`: command-line front end for the workbench.
//!
//! Exit codes: 0 holds or passes, 1 fails with a witness, 2 usage or parse
//! error, 3 search bound exhausted.

use std::cmp::Ordering;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use reslat::battery::{run_battery, BatteryConfig, Defect};
use reslat::finite::json::{from_json, to_json};
use reslat::finite::library::{by_name, m3_order, n5_order, square_order};
use reslat::finite::{
    chain_order, check_named_property, enumerate_models, FiniteResLat, NamedProperty,
    DEFAULT_ENUMERATION_CAP,
};
use reslat::nilpotent::{DyadicPair, HeisTriple, S2Element};
use reslat::omon::{hamvty_witness, residual, residual_search, BoundedSearch, M1Element, OmonError, Side, M1, S2};
use reslat::ore::{conucleus_sigma, frac_cmp_group, frac_cmp_witness, verify_conucleus, Fraction};
use reslat::term::{check_quasiequation, parse_quasiequation, Assignment};

#[derive(Parser)]
#[command(name = "reslat", version, about = "Exact computations with residuated lattices and ordered groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a finite structure, or check a property or law on it.
    Check(CheckArgs),
    /// List every residuated lattice on a given lattice order.
    Enumerate(EnumerateArgs),
    /// Residual in an integral totally ordered monoid.
    Residual(ResidualArgs),
    /// Fractions over S₂.
    Ore {
        #[command(subcommand)]
        command: OreCommand,
    },
    /// Arithmetic in the free 2-nilpotent group.
    Heis {
        #[command(subcommand)]
        command: HeisCommand,
    },
    /// The positive cone S₂.
    S2 {
        #[command(subcommand)]
        command: S2Command,
    },
    /// The dyadic affine group.
    Dyadic {
        #[command(subcommand)]
        command: DyadicCommand,
    },
    /// Ordered-monoid tools.
    Omon {
        #[command(subcommand)]
        command: OmonCommand,
    },
    /// Run the verification battery.
    VerifyPaper(VerifyArgs),
}

#[derive(Args)]
struct CheckArgs {
    /// A JSON structure file or a library name.
    #[arg(long)]
    structure: String,
    #[arg(long, conflicts_with = "equation")]
    property: Option<String>,
    /// An equation `t = s`, inequation `t <= s`, or quasi-equation.
    #[arg(long)]
    equation: Option<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderName {
    Square,
    M3,
    N5,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Carrier size, used with `--chain`.
    #[arg(long, requires = "chain")]
    size: Option<usize>,
    #[arg(long, conflicts_with = "order")]
    chain: bool,
    /// A named lattice order instead of a chain.
    #[arg(long)]
    order: Option<OrderName>,
    /// Keep only models with this property; repeatable.
    #[arg(long)]
    require: Vec<String>,
    /// Write each model as JSON into this directory.
    #[arg(long)]
    emit: Option<PathBuf>,
    #[arg(long, env = "RESLAT_MAX_SIZE", default_value_t = DEFAULT_ENUMERATION_CAP)]
    max_size: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Instance {
    M1,
    S2,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Left => Side::Left,
            SideArg::Right => Side::Right,
        }
    }
}

#[derive(Args)]
struct ResidualArgs {
    #[arg(long)]
    instance: Instance,
    #[arg(long)]
    a: String,
    #[arg(long)]
    b: String,
    /// `left` gives a\b, `right` gives b/a.
    #[arg(long, default_value = "left")]
    side: SideArg,
    /// Use the bounded search instead of the closed form.
    #[arg(long)]
    search: bool,
    /// Search bound; defaults to the sum of input sizes plus 4.
    #[arg(long)]
    bound: Option<usize>,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum CmpMethod {
    Witness,
    Group,
}

#[derive(Subcommand)]
enum OreCommand {
    /// Compare two fractions in the extended order.
    Cmp {
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
        #[arg(long, default_value = "group")]
        method: CmpMethod,
        /// Weight bound for the witness search.
        #[arg(long, default_value_t = 48)]
        bound: u64,
        #[arg(long)]
        json: bool,
    },
    /// σ(a⁻¹b) = a\b.
    Sigma {
        #[arg(long)]
        f: String,
        #[arg(long)]
        json: bool,
    },
    /// Check the conucleus laws on random fractions.
    Verify {
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 8)]
        radius: i64,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum HeisCommand {
    Mul { g: String, h: String },
    Inv { g: String },
    /// [g, h] = h⁻¹g⁻¹hg.
    Comm { g: String, h: String },
    Pow { g: String, n: i64 },
    /// The unique n-th root, if one exists.
    Root { g: String, n: u64 },
    /// The matrix [[1,β,γ],[0,1,α],[0,0,1]].
    Matrix { g: String },
}

#[derive(Subcommand)]
enum S2Command {
    /// Prints `<`, `=` or `>` for g versus h under ≤*.
    Cmp { g: String, h: String },
    Member { g: String },
}

#[derive(Subcommand)]
enum DyadicCommand {
    /// The inequalities at a = (−1,0), b = (0,−2) for n = 1..N.
    Claims {
        #[arg(long, default_value_t = 12)]
        n: u32,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum OmonCommand {
    Residual(ResidualArgs),
    /// Witness coordinates in the truncated product.
    Hamvty {
        #[arg(long)]
        trunc: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum DefectArg {
    HeisCrossTerm,
}

#[derive(Args)]
struct VerifyArgs {
    /// Run a single claim.
    #[arg(long)]
    only: Option<String>,
    #[arg(long, env = "RESLAT_MAX_SIZE", default_value_t = DEFAULT_ENUMERATION_CAP)]
    max_size: usize,
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    #[arg(long, default_value_t = 2024)]
    seed: u64,
    #[arg(long)]
    json: bool,
    /// Include wall times in the output.
    #[arg(long)]
    timings: bool,
    #[arg(long, hide = true)]
    inject_defect: Option<DefectArg>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            let exhausted = matches!(e.downcast_ref::<OmonError>(), Some(OmonError::Exhausted { .. }));
            ExitCode::from(if exhausted { 3 } else { 2 })
        }
    }
}

fn run(command: Command) -> Result<u8> {
    match command {
        Command::Check(args) => check(args),
        Command::Enumerate(args) => enumerate(args),
        Command::Residual(args) | Command::Omon { command: OmonCommand::Residual(args) } => residual_cmd(args),
        Command::Omon { command: OmonCommand::Hamvty { trunc, json } } => hamvty(trunc, json),
        Command::Ore { command } => ore(command),
        Command::Heis { command } => heis(command),
        Command::S2 { command } => s2(command),
        Command::Dyadic { command: DyadicCommand::Claims { n, json } } => dyadic_claims(n, json),
        Command::VerifyPaper(args) => verify(args),
    }
}

/// Prints a line, ignoring a closed stdout (for example when piped into `head`).
fn say(text: impl std::fmt::Display) {
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn emit(json: bool, value: &Value, human: impl FnOnce() -> String) {
    if json {
        say(value);
    } else {
        say(human());
    }
}

fn load_structure(source: &str) -> Result<FiniteResLat> {
    let path = Path::new(source);
    if path.is_file() {
        let text = fs::read_to_string(path).with_context(|| format!("reading {source}"))?;
        return from_json(&text).with_context(|| format!("loading {source}"));
    }
    by_name(source).ok_or_else(|| anyhow!("`{source}` is neither a file nor a library structure"))
}

fn named_witness(s: &FiniteResLat, w: &Assignment<usize>) -> Value {
    w.iter().map(|(k, &v)| (k.clone(), json!(s.name(v)))).collect::<serde_json::Map<_, _>>().into()
}

fn check(args: CheckArgs) -> Result<u8> {
    let raw = load_structure(&args.structure)?;
    let s = match raw.validated() {
        Ok(s) => s,
        Err(report) => {
            let violations: Vec<String> = report.violations.iter().map(|v| v.to_string()).collect();
            let value = json!({ "structure": args.structure, "valid": false, "violations": violations });
            emit(args.json, &value, || format!("not a residuated lattice:\n  {}", violations.join("\n  ")));
            return Ok(1);
        }
    };
    let (label, verdict) = match (&args.property, &args.equation) {
        (Some(p), _) => {
            let p: NamedProperty = p.parse()?;
            (p.to_string(), check_named_property(&s, p)?)
        }
        (None, Some(text)) => {
            let q = parse_quasiequation(text)?;
            (q.to_string(), check_quasiequation(&q, &s)?)
        }
        (None, None) => {
            let value = json!({ "structure": args.structure, "valid": true, "size": s.size() });
            emit(args.json, &value, || format!("{}: valid residuated lattice on {} elements", args.structure, s.size()));
            return Ok(0);
        }
    };
    let witness = verdict.witness().map(|w| named_witness(&s, w));
    let value = json!({ "structure": args.structure, "check": label, "holds": verdict.holds(), "witness": witness });
    emit(args.json, &value, || match verdict.witness() {
        None => format!("holds: {label}"),
        Some(w) => {
            let parts: Vec<String> = w.iter().map(|(k, &v)| format!("{k} = {}", s.name(v))).collect();
            format!("fails: {label}\n  witness: {}", parts.join(", "))
        }
    });
    Ok(if verdict.holds() { 0 } else { 1 })
}

fn enumerate(args: EnumerateArgs) -> Result<u8> {
    let leq = match (args.chain, args.size, args.order) {
        (true, Some(n), _) => {
            if n > args.max_size {
                bail!("size {n} exceeds the enumeration cap {} (set RESLAT_MAX_SIZE)", args.max_size);
            }
            chain_order(n)
        }
        (false, _, Some(OrderName::Square)) => square_order(),
        (false, _, Some(OrderName::M3)) => m3_order(),
        (false, _, Some(OrderName::N5)) => n5_order(),
        _ => bail!("give `--chain --size N` or `--order square|m3|n5`"),
    };
    let constraints: Vec<NamedProperty> = args.require.iter().map(|p| p.parse()).collect::<Result<_, _>>()?;
    let models = enumerate_models(&leq, &constraints)?;
    if let Some(dir) = &args.emit {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        for (i, m) in models.iter().enumerate() {
            let path = dir.join(format!("model-{i}.json"));
            fs::write(&path, to_json(m)).with_context(|| format!("writing {}", path.display()))?;
        }
    }
    let list: Vec<Value> = models
        .iter()
        .map(|m| serde_json::from_str(&to_json(m)).expect("serializer output parses"))
        .collect();
    let value = json!({ "count": models.len(), "models": list });
    emit(args.json, &value, || {
        let mut out = format!("{} models", models.len());
        for (i, m) in models.iter().enumerate() {
            out.push_str(&format!("\n#{i} unit {} mul {:?}", m.unit(), m.mul_table()));
        }
        out
    });
    Ok(0)
}

fn residual_cmd(args: ResidualArgs) -> Result<u8> {
    let side = Side::from(args.side);
    let (a, b, c) = match args.instance {
        Instance::M1 => {
            let (a, b): (M1Element, M1Element) = (args.a.parse()?, args.b.parse()?);
            let c = solve(&M1, &a, &b, side, args.search, args.bound)?;
            (a.to_string(), b.to_string(), c.to_string())
        }
        Instance::S2 => {
            let (a, b): (S2Element, S2Element) = (args.a.parse()?, args.b.parse()?);
            let c = solve(&S2, &a, &b, side, args.search, args.bound)?;
            (a.to_string(), b.to_string(), c.to_string())
        }
    };
    let expr = match side {
        Side::Left => format!("{a}\\{b}"),
        Side::Right => format!("{b}/{a}"),
    };
    let value = json!({ "a": a, "b": b, "side": format!("{side:?}").to_lowercase(), "residual": c });
    emit(args.json, &value, || format!("{expr} = {c}"));
    Ok(0)
}

fn solve<M: BoundedSearch>(
    inst: &M,
    a: &M::Elem,
    b: &M::Elem,
    side: Side,
    search: bool,
    bound: Option<usize>,
) -> Result<M::Elem, OmonError> {
    if search || bound.is_some() {
        residual_search(inst, a, b, side, bound.unwrap_or_else(|| inst.default_bound(a, b)))
    } else {
        residual(inst, a, b, side)
    }
}

fn hamvty(trunc: usize, json: bool) -> Result<u8> {
    if trunc == 0 {
        bail!("--trunc must be at least 1");
    }
    let report = hamvty_witness(trunc);
    emit(json, &report.to_json(), || {
        let mut out = format!("a = {}, b = {}, truncation N = {trunc}", report.a, report.b);
        for r in &report.rows {
            match (&r.coordinate, &r.conjugate) {
                (Some(i), Some(c)) => out.push_str(&format!("\nn = {}: coordinate {i}, a^n = {} ≰ {c}", r.n, r.power)),
                _ => out.push_str(&format!("\nn = {}: no witness", r.n)),
            }
        }
        out
    });
    Ok(if report.certified() { 0 } else { 1 })
}

/// `DEN;NUM` for `den⁻¹·num` with both in `S₂`, or any group element.
fn parse_fraction(text: &str) -> Result<Fraction> {
    match text.split_once(';') {
        Some((den, num)) => Ok(Fraction::new(den.parse()?, num.parse()?)),
        None => Ok(Fraction::from_group(&text.parse()?)),
    }
}

fn ordering_symbol(o: Ordering) -> &'static str {
    match o {
        Ordering::Less => "<",
        Ordering::Equal => "=",
        Ordering::Greater => ">",
    }
}

fn ore(command: OreCommand) -> Result<u8> {
    match command {
        OreCommand::Cmp { f, g, method, bound, json } => {
            let (f, g) = (parse_fraction(&f)?, parse_fraction(&g)?);
            let o = match method {
                CmpMethod::Group => frac_cmp_group(&f, &g),
                CmpMethod::Witness => frac_cmp_witness(&f, &g, bound)?,
            };
            let value = json!({ "f": f.value().to_string(), "g": g.value().to_string(), "order": ordering_symbol(o) });
            emit(json, &value, || format!("{} {} {}", f.value(), ordering_symbol(o), g.value()));
            Ok(0)
        }
        OreCommand::Sigma { f, json } => {
            let f = parse_fraction(&f)?;
            let s = conucleus_sigma(&f);
            let value = json!({ "fraction": f.to_string(), "value": f.value().to_string(), "sigma": s.to_string() });
            emit(json, &value, || format!("σ({}) = {s}", f.value()));
            Ok(0)
        }
        OreCommand::Verify { samples, radius, seed, json } => {
            let report = verify_conucleus(samples, radius, seed);
            let failures: Vec<Value> =
                report.failures.iter().map(|(law, w)| json!({ "law": law, "witness": w })).collect();
            let value = json!({ "samples": samples, "passed": report.passed(), "failures": failures });
            emit(json, &value, || {
                if report.passed() {
                    format!("all conucleus laws hold on {samples} random fractions")
                } else {
                    report.failures.iter().map(|(law, w)| format!("fails: {law}\n  witness: {w}")).collect::<Vec<_>>().join("\n")
                }
            });
            Ok(if report.passed() { 0 } else { 1 })
        }
    }
}

fn heis(command: HeisCommand) -> Result<u8> {
    let p = |s: &str| -> Result<HeisTriple> { Ok(s.parse()?) };
    let out = match command {
        HeisCommand::Mul { g, h } => p(&g)?.mul(&p(&h)?).to_string(),
        HeisCommand::Inv { g } => p(&g)?.inv().to_string(),
        HeisCommand::Comm { g, h } => p(&g)?.commutator(&p(&h)?).to_string(),
        HeisCommand::Pow { g, n } => p(&g)?.pow(n).to_string(),
        HeisCommand::Root { g, n } => match p(&g)?.nth_root(n) {
            Some(r) => r.to_string(),
            None => {
                say(format!("no root of degree {n}"));
                return Ok(1);
            }
        },
        HeisCommand::Matrix { g } => {
            let m = p(&g)?.to_matrix();
            m.iter().map(|row| row.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")).collect::<Vec<_>>().join("\n")
        }
    };
    say(out);
    Ok(0)
}

fn s2(command: S2Command) -> Result<u8> {
    match command {
        S2Command::Cmp { g, h } => {
            let (g, h): (S2Element, S2Element) = (g.parse()?, h.parse()?);
            say(ordering_symbol(g.cmp(&h)));
            Ok(0)
        }
        S2Command::Member { g } => {
            let g: HeisTriple = g.parse()?;
            let member = reslat::nilpotent::s2_member(&g);
            say(member);
            Ok(if member { 0 } else { 1 })
        }
    }
}

fn dyadic_claims(n: u32, json: bool) -> Result<u8> {
    if !(1..=62).contains(&n) {
        bail!("--n must be between 1 and 62");
    }
    let (a, b) = (DyadicPair::int(-1, 0), DyadicPair::int(0, -2));
    let mut rows = Vec::new();
    let mut all = a.mul(&b) < b.mul(&a.pow(2));
    for k in 1..=n as i64 {
        let bk = b.pow(k);
        let first = a.pow(k).mul(&b) < b.mul(&a.pow(2 * k));
        let second = a.mul(&bk) < bk.mul(&a.pow(1 << k));
        let conj = a.conjugate(&bk);
        let third = conj < a.pow(k);
        all &= first && second && third;
        rows.push(json!({
            "n": k,
            "anb_lt_ba2n": first,
            "abn_lt_bna2n": second,
            "conjugate": conj.to_json(),
            "conjugate_lt_an": third,
        }));
    }
    let value = json!({ "a": a.to_json(), "b": b.to_json(), "holds": all, "rows": rows });
    emit(json, &value, || {
        let mut out = format!("a = {a}, b = {b}: ab = {} < ba² = {}", a.mul(&b), b.mul(&a.pow(2)));
        for (k, row) in (1..).zip(&rows) {
            let ok = |key: &str| if row[key].as_bool() == Some(true) { "yes" } else { "NO" };
            out.push_str(&format!(
                "\nn = {k}: aⁿb < ba²ⁿ {}, abⁿ < bⁿa^(2ⁿ) {}, bⁿ\\abⁿ = {} < aⁿ {}",
                ok("anb_lt_ba2n"),
                ok("abn_lt_bna2n"),
                a.conjugate(&b.pow(k)),
                ok("conjugate_lt_an")
            ));
        }
        out
    });
    Ok(if all { 0 } else { 1 })
}

fn verify(args: VerifyArgs) -> Result<u8> {
    let config = BatteryConfig {
        max_size: args.max_size,
        samples: args.samples,
        seed: args.seed,
        only: args.only,
        defect: args.inject_defect.map(|DefectArg::HeisCrossTerm| Defect::HeisCrossTerm),
    };
    let report = run_battery(&config)?;
    emit(args.json, &report.to_json(args.timings), || {
        let mut out = report.to_string();
        if args.timings {
            for r in &report.results {
                out.push_str(&format!("{:<26} {:?}\n", r.id, r.elapsed));
            }
        }
        out.trim_end().to_string()
    });
    Ok(if report.passed() { 0 } else { 1 })
}
