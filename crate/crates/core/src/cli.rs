//! Command-line front end. [`run`] is the whole program minus process I/O.

use std::ffi::OsString;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::census::{
    census_45, census_two_prime, count_double, enumerate_case1_bruteforce, enumerate_case2_bruteforce,
    sample_singularity, CensusReport, Scientific,
};
use crate::circulant::{det_elimination, det_resultant, is_singular, CirculantSpec};
use crate::construct::{construct_singular_with, ConstructError, ExponentChoice};
use crate::cyclo::{factorize, CyclotomicCache};
use crate::decomp::{decompose_bounded, decompose_rational, uniformize_p, Decomposition};

#[derive(Debug, Parser)]
#[command(name = "circulant", version, about = "Singularity of circulant 0/1 matrices", propagate_version = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the n-th cyclotomic polynomial
    Cyclotomic {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long)]
        json: bool,
    },
    /// Decide singularity of the circulant with the given first-row support
    Check {
        #[command(flatten)]
        row: RowArgs,
        #[arg(long)]
        json: bool,
    },
    /// Exact determinant
    Det {
        #[command(flatten)]
        row: RowArgs,
        #[arg(long, value_enum, default_value_t = Method::Resultant)]
        method: Method,
        #[arg(long)]
        json: bool,
    },
    /// Recurrent decomposition of a row divisible by Φ_n
    Decompose {
        #[command(flatten)]
        row: RowArgs,
        /// Require multipliers with coefficients in 0..=bound (two-prime orders)
        #[arg(long)]
        bound: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Build a singular weight-k row of order 2k+1
    Construct {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
        /// Pick the free exponents at random from this seed
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Count singular weight-k rows of order n
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Re-derive the counts by direct enumeration
        #[arg(long)]
        verify_bruteforce: bool,
        /// Allow orders other than 45
        #[arg(long)]
        experimental: bool,
        #[arg(long)]
        json: bool,
    },
    /// Monte-Carlo estimate of the singular fraction
    Sample {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long)]
        k: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, clap::Args)]
struct RowArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    n: u64,
    /// Comma-separated positions of the ones in the first row
    #[arg(long, value_parser = parse_support)]
    support: Support,
}

#[derive(Debug, Clone)]
struct Support(Vec<usize>);

fn parse_support(s: &str) -> Result<Support, String> {
    let mut items: Vec<usize> = s
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|e| format!("invalid position {t:?}: {e}")))
        .collect::<Result<_, _>>()?;
    items.sort_unstable();
    if let Some(w) = items.windows(2).find(|w| w[0] == w[1]) {
        return Err(format!("duplicate position {}", w[0]));
    }
    Ok(Support(items))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Resultant,
    Elimination,
    Both,
}

/// Exit code with everything written to the two streams.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;

enum Failure {
    Usage(String),
    Domain(String),
}

type Output = Result<String, Failure>;

fn json_line(v: &Value) -> String {
    format!("{}\n", serde_json::to_string(v).expect("serializable"))
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    Outcome { code: EXIT_OK, stdout: text, stderr: String::new() }
                }
                _ => Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text },
            };
        }
    };
    match dispatch(cli.command) {
        Ok(stdout) => Outcome { code: EXIT_OK, stdout, stderr: String::new() },
        Err(Failure::Usage(msg)) => Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {msg}\n") },
        Err(Failure::Domain(msg)) => Outcome { code: EXIT_DOMAIN, stdout: String::new(), stderr: format!("error: {msg}\n") },
    }
}

fn dispatch(command: Command) -> Output {
    let cache = CyclotomicCache::new();
    match command {
        Command::Cyclotomic { n, json } => {
            let phi = cache.get(n as usize);
            Ok(if json { json_line(&json!(phi.to_json_coeffs())) } else { format!("{phi}\n") })
        }
        Command::Check { row, .. } => {
            let spec = row.spec()?;
            let verdict = is_singular(&spec, &cache);
            Ok(json_line(&json!({
                "singular": verdict.singular,
                "witnesses": verdict.witnesses,
                "weight": spec.support().len(),
            })))
        }
        Command::Det { row, method, json } => det(&row.spec()?, method, json),
        Command::Decompose { row, bound, .. } => decompose(&row.spec()?, bound, &cache),
        Command::Construct { k, seed, .. } => construct(k as usize, seed, &cache),
        Command::Count { n, k, verify_bruteforce, experimental, json } => {
            count(n, k, verify_bruteforce, experimental, json)
        }
        Command::Sample { n, k, trials, seed, json } => {
            if k > n {
                return Err(Failure::Usage(format!("k = {k} exceeds n = {n}")));
            }
            let out = sample_singularity(n as usize, k as usize, trials, seed);
            Ok(if json {
                json_line(&json!({
                    "n": n,
                    "k": k,
                    "seed": seed.to_string(),
                    "trials": out.trials.to_string(),
                    "hits": out.hits.to_string(),
                }))
            } else {
                format!("{} singular of {} sampled (rate {:.3e})\n", out.hits, out.trials, out.rate())
            })
        }
    }
}

impl RowArgs {
    fn spec(&self) -> Result<CirculantSpec, Failure> {
        CirculantSpec::from_support(self.n as usize, &self.support.0).map_err(|e| Failure::Usage(e.to_string()))
    }
}

fn det(spec: &CirculantSpec, method: Method, json: bool) -> Output {
    let mut values = Vec::new();
    if matches!(method, Method::Resultant | Method::Both) {
        values.push(("resultant", det_resultant(spec)));
    }
    if matches!(method, Method::Elimination | Method::Both) {
        values.push(("elimination", det_elimination(spec).map_err(|e| Failure::Domain(e.to_string()))?));
    }
    if json {
        let map: serde_json::Map<String, Value> =
            values.iter().map(|(k, v)| (k.to_string(), Value::String(v.to_string()))).collect();
        return Ok(json_line(&Value::Object(map)));
    }
    Ok(match &values[..] {
        [(_, v)] => format!("{v}\n"),
        _ => values.iter().map(|(k, v)| format!("{k}: {v}\n")).collect(),
    })
}

fn decompose(spec: &CirculantSpec, bound: Option<u64>, cache: &CyclotomicCache) -> Output {
    let n = spec.n();
    let f = spec.row();
    let domain = |e: crate::decomp::DecompError| Failure::Domain(e.to_string());
    let two_primes = factorize(n).is_ok_and(|o| o.distinct_primes() == 2);
    let dec: Decomposition = match bound {
        Some(d) => decompose_bounded(f, n, d, cache).map_err(domain)?,
        None => {
            let raw = decompose_rational(f, n, cache).map_err(domain)?;
            if two_primes {
                uniformize_p(&raw).map_err(domain)?
            } else {
                raw
            }
        }
    };
    let parts: serde_json::Map<String, Value> = dec
        .parts()
        .iter()
        .map(|(p, h)| (p.to_string(), json!(h.to_json_coeffs())))
        .collect();
    Ok(json_line(&json!({
        "n": n,
        "parts": parts,
        "uniformized": dec.is_p_uniformized(),
        "unital": dec.is_unital(),
    })))
}

fn construct(k: usize, seed: Option<u64>, cache: &CyclotomicCache) -> Output {
    let choice = seed.map_or(ExponentChoice::Smallest, ExponentChoice::Seeded);
    let c = construct_singular_with(k, choice).map_err(|e| match e {
        ConstructError::ZeroK => Failure::Usage(e.to_string()),
        ConstructError::NoSingularGuarantee { .. } => Failure::Domain(e.to_string()),
    })?;
    Ok(json_line(&json!({
        "n": c.n(),
        "p": c.p,
        "q": c.q,
        "r": c.r,
        "a": c.a,
        "b": c.b,
        "R_a": c.r_a,
        "support": c.spec.support(),
        "singular": is_singular(&c.spec, cache).singular,
    })))
}

fn count(n: usize, k: usize, verify: bool, experimental: bool, json: bool) -> Output {
    let report = if (n, k) == (45, 22) {
        census_45()
    } else if experimental {
        census_two_prime(n, k).map_err(|e| Failure::Domain(e.to_string()))?
    } else {
        return Err(Failure::Domain(format!(
            "the census covers n = 45, k = 22; pass --experimental for other two-prime orders (got n = {n}, k = {k})"
        )));
    };
    let check = if verify {
        if (n, k) != (45, 22) {
            return Err(Failure::Domain("--verify-bruteforce is only available for n = 45, k = 22".into()));
        }
        Some(bruteforce_check(&report))
    } else {
        None
    };
    if let Some((_, false)) = &check {
        let detail = check.as_ref().map(|(v, _)| v.to_string()).unwrap_or_default();
        return Err(Failure::Domain(format!("enumeration disagrees with the counts: {detail}")));
    }
    if json {
        let mut value = report.to_json();
        if let Some((v, _)) = check {
            value["bruteforce"] = v;
        }
        return Ok(json_line(&value));
    }
    let mut text = render_report(&report);
    if let Some((v, _)) = check {
        text.push_str(&format!(
            "enumeration: {} + {} - {} (agrees)\n",
            v["case1"].as_str().unwrap_or_default(),
            v["case2"].as_str().unwrap_or_default(),
            v["double"].as_str().unwrap_or_default()
        ));
    }
    Ok(text)
}

fn bruteforce_check(report: &CensusReport) -> (Value, bool) {
    let case1 = enumerate_case1_bruteforce().len();
    let scan = enumerate_case2_bruteforce();
    let double = count_double().divisible;
    let agrees = report.count_phi_n == case1.into()
        && report.count_phi_sub == scan.weighted.into()
        && report.count_both == double.into();
    let value = json!({
        "case1": case1.to_string(),
        "case2": scan.weighted.to_string(),
        "case2_vectors": scan.vectors.len().to_string(),
        "double": double.to_string(),
        "agrees": agrees,
    });
    (value, agrees)
}

fn render_report(r: &CensusReport) -> String {
    let mut out = format!("n = {}, k = {}\n", r.n, r.k);
    out.push_str(&format!("divisible by Φ_{}: {}\n", r.n, r.count_phi_n));
    if let Some(d) = r.sub_order {
        out.push_str(&format!("divisible by Φ_{d}: {}\n", r.count_phi_sub));
        out.push_str(&format!("divisible by both: {}\n", r.count_both));
    }
    out.push_str(&format!("singular: {}\n", r.total));
    out.push_str(&format!("all rows: {}\n", r.universe));
    out.push_str(&format!(
        "probability: {}/{} ≈ {}\n",
        r.total,
        r.universe,
        Scientific::round(&r.probability, 3)
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> Outcome {
        run(std::iter::once("circulant").chain(args.iter().copied()))
    }

    #[test]
    fn support_parsing() {
        assert_eq!(parse_support("3, 1,2").unwrap().0, vec![1, 2, 3]);
        assert!(parse_support("").unwrap().0.is_empty());
        assert!(parse_support("1,1").is_err());
        assert!(parse_support("1,-2").is_err());
    }

    #[test]
    fn usage_errors_go_to_stderr() {
        for args in [&["check", "--n", "5", "--support", "1,1"][..], &["bogus"], &[], &["check", "--n", "5", "--support", "7"]] {
            let out = call(args);
            assert_eq!(out.code, EXIT_USAGE, "{args:?}");
            assert!(out.stdout.is_empty());
            assert!(!out.stderr.is_empty());
        }
    }

    #[test]
    fn help_and_version_succeed() {
        let out = call(&["--version"]);
        assert_eq!(out.code, EXIT_OK);
        assert!(out.stdout.starts_with("circulant "));
        assert_eq!(call(&["check", "--help"]).code, EXIT_OK);
        assert_eq!(call(&["count", "--version"]).code, EXIT_OK);
    }

    #[test]
    fn cyclotomic_text_and_json() {
        assert_eq!(call(&["cyclotomic", "6"]).stdout, "1 - x + x^2\n");
        assert_eq!(call(&["cyclotomic", "3", "--json"]).stdout, "[\"1\",\"1\",\"1\"]\n");
        assert_eq!(call(&["cyclotomic", "0"]).code, EXIT_USAGE);
    }

    #[test]
    fn det_methods() {
        let both = call(&["det", "--n", "3", "--support", "0,1", "--method", "both"]);
        assert_eq!(both.stdout, "resultant: 2\nelimination: 2\n");
        let json = call(&["det", "--n", "3", "--support", "0,1", "--method", "both", "--json"]);
        assert_eq!(json.stdout, "{\"elimination\":\"2\",\"resultant\":\"2\"}\n");
        let big = call(&["det", "--n", "65", "--support", "0", "--method", "elimination"]);
        assert_eq!(big.code, EXIT_DOMAIN);
    }

    #[test]
    fn decompose_reports_parts() {
        let out = call(&["decompose", "--n", "15", "--support", "0,5,10"]);
        assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["parts"]["3"], json!(["1"]));
        assert_eq!(v["unital"], true);
        assert_eq!(v["uniformized"], true);
        let bad = call(&["decompose", "--n", "15", "--support", "0"]);
        assert_eq!(bad.code, EXIT_DOMAIN);
        let m3 = call(&["decompose", "--n", "30", "--support", "0,15"]);
        let v: Value = serde_json::from_str(&m3.stdout).unwrap();
        assert_eq!(v["uniformized"], false);
    }

    #[test]
    fn count_needs_experimental_elsewhere() {
        assert_eq!(call(&["count", "--n", "63", "--k", "31"]).code, EXIT_DOMAIN);
        let out = call(&["count", "--n", "21", "--k", "10", "--experimental", "--json"]);
        assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["total"], "0");
    }

    #[test]
    fn sample_is_reproducible() {
        let args = ["sample", "--n", "12", "--k", "4", "--trials", "2000", "--seed", "5", "--json"];
        assert_eq!(call(&args), call(&args));
        assert_eq!(call(&["sample", "--n", "5", "--k", "7", "--trials", "3", "--seed", "1"]).code, EXIT_USAGE);
    }
}
