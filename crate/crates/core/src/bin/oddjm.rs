use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use oddjm::averages::{average_at, average_poly, AvgSpec};
use oddjm::error::Error;
use oddjm::group_algebra::{
    class_expansion, coset_expansion, eval_at_jm, eval_at_odd_jm, BruteForce, GroupAlgebraElement,
    Verification, BRUTE_FORCE_ENV,
};
use oddjm::haar_mc::mc_moment;
use oddjm::jack::{jack_plancherel, jack_table};
use oddjm::partition::Partition;
use oddjm::rational::{parse_rational, Rational};
use oddjm::symfunc::SymFunc;
use oddjm::verify::{self, Config, Report, Suite};
use oddjm::weingarten::{integrate_monomial, wg_exact, wg_series};

#[derive(Parser)]
#[command(name = "oddjm", version, about = "Symmetric functions in odd Jucys-Murphy elements, Jack-Plancherel averages and orthogonal Weingarten functions")]
struct Cli {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Tsv, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Brute-force expansion of F(J_1, J_3, ..., J_{2n-1}) P_n in double cosets (default),
    /// or of F(J_1, ..., J_n) in conjugacy classes with --all
    Expand(ExpandArgs),
    /// Jack-Plancherel average of F at reduced type mu, at one n or as a polynomial in n
    Avg(AvgArgs),
    /// Jack function tables
    #[command(subcommand)]
    Jack(JackCommand),
    /// Orthogonal Weingarten function and Haar integrals
    #[command(subcommand)]
    Wg(WgCommand),
    /// Run a property suite (props-3, props-4, props-5, props-8, tables-9-1,
    /// tables-9-2, conjectures, mc) or all of them
    Verify(VerifyArgs),
}

#[derive(Args)]
struct ExpandArgs {
    /// Symmetric function, e.g. "h[3]" or "m[2,1] - 2*p[1]"
    #[arg(long = "F")]
    f: String,
    #[arg(long)]
    n: usize,
    /// Odd Jucys-Murphy elements times P_n, expanded in psi_mu(n)
    #[arg(long, conflicts_with = "all")]
    odd: bool,
    /// All Jucys-Murphy elements in S_n, expanded in class sums
    #[arg(long)]
    all: bool,
}

#[derive(Args)]
struct AvgArgs {
    #[arg(long)]
    alpha: String,
    /// Reduced type, e.g. "1" or "2,1" or "0"
    #[arg(long)]
    mu: String,
    #[arg(long = "F")]
    f: String,
    #[arg(long, conflicts_with = "poly", required_unless_present = "poly")]
    n: Option<usize>,
    /// Polynomial in n
    #[arg(long)]
    poly: bool,
}

#[derive(Subcommand)]
enum JackCommand {
    /// theta^lambda_rho: rows lambda, columns rho
    Theta {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        alpha: String,
    },
    /// Jack-Plancherel measure on partitions of n
    Measure {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        alpha: String,
    },
}

#[derive(Subcommand)]
enum WgCommand {
    /// Exact Wg on every reduced coset type
    Exact {
        #[arg(long)]
        n: usize,
        #[arg(long = "N")]
        big_n: usize,
    },
    /// Signed coefficients of the 1/N expansion at one coset type
    Series {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        coset: String,
        #[arg(long, default_value_t = 6)]
        order: usize,
    },
    /// Exact integral of g_{i1 j1} ... g_{ik jk} over O(N)
    Integrate(MonomialArgs),
    /// Monte Carlo estimate of the same integral
    Mc {
        #[command(flatten)]
        monomial: MonomialArgs,
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

#[derive(Args)]
struct MonomialArgs {
    /// Row indices, comma separated
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    i: Vec<usize>,
    /// Column indices, comma separated
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    j: Vec<usize>,
    #[arg(long = "N")]
    big_n: usize,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name or "all"
    suite: String,
    /// Largest k in the G^(k+1)_(k) polynomial check
    #[arg(long, default_value_t = 4)]
    max_k: usize,
    /// Samples per monomial in the mc suite
    #[arg(long, default_value_t = 100_000)]
    samples: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
}

enum Failure {
    Usage(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = std::result::Result<(), Failure>;

fn print_rows(format: Format, rows: &[(String, String)], key: &str, value: &str) {
    match format {
        Format::Tsv => {
            for (k, v) in rows {
                println!("{k}\t{v}");
            }
        }
        Format::Json => {
            let arr: Vec<Value> = rows.iter().map(|(k, v)| json!({ key: k, value: v })).collect();
            println!("{}", serde_json::to_string_pretty(&arr).expect("json"));
        }
    }
}

fn map_rows<'a>(entries: impl IntoIterator<Item = (&'a Partition, &'a Rational)>) -> Vec<(String, String)> {
    entries.into_iter().map(|(k, v)| (k.to_string(), v.to_string())).collect()
}

fn expand(format: Format, a: ExpandArgs) -> Outcome {
    let f: SymFunc = a.f.parse()?;
    let limit = BruteForce::from_env()?;
    if a.all {
        let x = eval_at_jm(&f, a.n, &limit)?;
        let c = class_expansion(&x, Verification::Generators)?;
        print_rows(format, &map_rows(&c), "class", "coefficient");
    } else {
        let p = GroupAlgebraElement::hyperoctahedral_sum(a.n, false);
        let x = eval_at_odd_jm(&f, a.n, &limit)?.multiply(&p)?;
        let h = coset_expansion(&x, false, Verification::Generators)?;
        print_rows(format, &map_rows(h.coeffs()), "coset-type", "coefficient");
    }
    Ok(())
}

fn avg(format: Format, a: AvgArgs) -> Outcome {
    let spec = AvgSpec::new(a.f.parse()?, a.mu.parse()?, parse_rational(&a.alpha)?)?;
    match a.n {
        Some(n) => {
            let v = average_at(&spec, n)?;
            match format {
                Format::Tsv => println!("{v}"),
                Format::Json => println!("{}", json!({ "n": n, "value": v.to_string() })),
            }
        }
        None => {
            let p = average_poly(&spec)?;
            match format {
                Format::Tsv => println!("{p}"),
                Format::Json => {
                    let coeffs: Vec<String> = p.coeffs().iter().map(|c| c.to_string()).collect();
                    println!("{}", json!({ "polynomial": p.to_string(), "coefficients": coeffs }));
                }
            }
        }
    }
    Ok(())
}

fn jack(format: Format, c: JackCommand) -> Outcome {
    match c {
        JackCommand::Theta { n, alpha } => {
            let t = jack_table(n, &parse_rational(&alpha)?)?;
            let parts = t.partitions();
            match format {
                Format::Tsv => {
                    let header: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                    println!("lambda\t{}", header.join("\t"));
                    for lam in parts {
                        let row = parts
                            .iter()
                            .map(|rho| t.theta(lam, rho).map(|v| v.to_string()))
                            .collect::<Result<Vec<_>, _>>()?;
                        println!("{lam}\t{}", row.join("\t"));
                    }
                }
                Format::Json => {
                    let mut rows = Vec::new();
                    for lam in parts {
                        let mut cols = serde_json::Map::new();
                        for rho in parts {
                            cols.insert(rho.to_string(), Value::String(t.theta(lam, rho)?.to_string()));
                        }
                        rows.push(json!({ "lambda": lam.to_string(), "theta": cols }));
                    }
                    println!("{}", serde_json::to_string_pretty(&rows).expect("json"));
                }
            }
        }
        JackCommand::Measure { n, alpha } => {
            let alpha = parse_rational(&alpha)?;
            let t = jack_table(n, &alpha)?;
            let rows = t
                .partitions()
                .iter()
                .map(|lam| Ok((lam.to_string(), jack_plancherel(lam, &alpha)?.to_string())))
                .collect::<Result<Vec<_>, Error>>()?;
            print_rows(format, &rows, "lambda", "probability");
        }
    }
    Ok(())
}

fn odd_degree_note(i: &[usize], j: &[usize], format: Format) -> bool {
    if i.len() == j.len() && i.len() % 2 == 1 {
        eprintln!("note: odd total degree; the integral vanishes by the sign symmetry g -> -g");
        match format {
            Format::Tsv => println!("0"),
            Format::Json => println!("{}", json!({ "value": "0" })),
        }
        true
    } else {
        false
    }
}

fn wg(format: Format, c: WgCommand) -> Outcome {
    match c {
        WgCommand::Exact { n, big_n } => {
            let w = wg_exact(n, big_n)?;
            print_rows(format, &map_rows(w.coeffs()), "coset-type", "value");
        }
        WgCommand::Series { n, coset, order } => {
            let mu: Partition = coset.parse()?;
            let s = wg_series(n, &mu, order)?;
            let signed = s.signed_coefficients();
            let rows: Vec<(String, String)> = signed
                .iter()
                .enumerate()
                .map(|(j, c)| (format!("N^-{}", s.leading_power() + j), c.to_string()))
                .collect();
            print_rows(format, &rows, "power", "coefficient");
        }
        WgCommand::Integrate(m) => {
            if !odd_degree_note(&m.i, &m.j, format) {
                let v = integrate_monomial(&m.i, &m.j, m.big_n)?;
                match format {
                    Format::Tsv => println!("{v}"),
                    Format::Json => println!("{}", json!({ "value": v.to_string() })),
                }
            }
        }
        WgCommand::Mc {
            monomial: m,
            samples,
            seed,
        } => {
            if !odd_degree_note(&m.i, &m.j, format) {
                let est = mc_moment(&m.i, &m.j, m.big_n, samples, seed)?;
                let exact = integrate_monomial(&m.i, &m.j, m.big_n).ok();
                let exact_f = exact.as_ref().and_then(num_traits::ToPrimitive::to_f64);
                let z = exact_f.map(|x| est.z_score(x));
                match format {
                    Format::Tsv => {
                        println!("mean\t{}", est.mean);
                        println!("stderr\t{}", est.stderr);
                        match &exact {
                            Some(e) => println!("exact\t{e}"),
                            None => println!("exact\tunavailable (N < degree/2)"),
                        }
                        if let Some(z) = z {
                            println!("z\t{z:.3}");
                        }
                    }
                    Format::Json => println!(
                        "{}",
                        json!({
                            "mean": est.mean,
                            "stderr": est.stderr,
                            "samples": est.samples,
                            "exact": exact.map(|e| e.to_string()),
                            "z": z,
                        })
                    ),
                }
            }
        }
    }
    Ok(())
}

fn print_report(format: Format, r: &Report) {
    match format {
        Format::Tsv => {
            for c in &r.checks {
                let status = if c.passed { "PASS" } else { "FAIL" };
                println!("{}\t{status}\t{}\t{}", r.suite, c.name, c.detail);
            }
            for n in &r.notes {
                println!("{}\tNOTE\t{n}", r.suite);
            }
        }
        Format::Json => println!("{}", serde_json::to_string_pretty(r).expect("json")),
    }
}

fn verify_cmd(format: Format, a: VerifyArgs) -> Outcome {
    let suites: Vec<Suite> = if a.suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![a.suite.parse()?]
    };
    let mut cfg = Config {
        max_k: a.max_k,
        mc_samples: a.samples,
        mc_seed: a.seed,
        ..Config::default()
    };
    if std::env::var(BRUTE_FORCE_ENV).is_ok() {
        cfg.limit = BruteForce::from_env()?;
    }
    let mut ok = true;
    for s in suites {
        let r = verify::run(s, &cfg)?;
        ok &= r.passed();
        print_report(format, &r);
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    let outcome = match cli.command {
        Command::Expand(a) => expand(format, a),
        Command::Avg(a) => avg(format, a),
        Command::Jack(c) => jack(format, c),
        Command::Wg(c) => wg(format, c),
        Command::Verify(a) => verify_cmd(format, a),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
