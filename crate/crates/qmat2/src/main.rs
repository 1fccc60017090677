//! Thin CLI over the library: matrix powers, the polynomial family, the
//! verification suite, and the mixed-power relations.
//!
//! Exit codes: 0 on success, 1 when an identity check fails, 2 on usage
//! errors.

use clap::{Parser, Subcommand, ValueEnum};

use qmat2::closedform::{power_ch1, power_ch2};
use qmat2::identities::{reports_to_json, vzw_relation_reports, CheckReport};
use qmat2::{f_rec, f_sum, run_suite, FPoly, QMatrix2};

#[derive(Parser)]
#[command(name = "qmat2", version, about = "Exact 2x2 quantum matrix calculator")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the n-th power of the generator matrix
    Power {
        /// exponent (>= 0 for brute force, >= 1 for the closed forms)
        #[arg(long)]
        n: u32,
        /// computation route: brute-force products or a closed form
        #[arg(long, value_enum, default_value_t = Method::Brute)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// compute all methods and print an equality verdict
        #[arg(long)]
        compare: bool,
    },
    /// Print the two-variable Chebyshev-type polynomial f_n(x, y)
    Fpoly {
        /// family index (>= -1; f_{-1} is zero)
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// cross-validate the binomial sum against the recurrence
        #[arg(long)]
        check: bool,
    },
    /// Run the full verification suite over powers up to a bound
    Verify {
        /// largest power in the parameter grids
        #[arg(long, default_value_t = 8)]
        max: u32,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Check the five mixed-power relation families for one (m, n) pair
    Vzw {
        /// adjoint-power index
        #[arg(long)]
        m: u32,
        /// plain-power index
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Brute,
    Ch1,
    Ch2,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    std::process::exit(run(cli));
}

fn run(cli: Cli) -> i32 {
    match cli.cmd {
        Cmd::Power {
            n,
            method,
            format,
            compare,
        } => cmd_power(n, method, format, compare),
        Cmd::Fpoly { n, format, check } => cmd_fpoly(n, format, check),
        Cmd::Verify { max, format } => cmd_verify(max, format),
        Cmd::Vzw { m, n, format } => cmd_vzw(m, n, format),
    }
}

fn usage(msg: &str) -> i32 {
    eprintln!("error: {msg}");
    2
}

fn print_power(m: &QMatrix2, n: u32, format: Format) {
    match format {
        Format::Json => println!("{}", m.to_json_string()),
        Format::Text => {
            for (label, e) in ["a", "b", "c", "d"].iter().zip(m.entries()) {
                println!("{label}_{n} = {e}");
            }
        }
        Format::Latex => {
            for (label, e) in ["a", "b", "c", "d"].iter().zip(m.entries()) {
                println!("{label}_{{{n}}} = {}", e.latex());
            }
        }
    }
}

fn cmd_power(n: u32, method: Method, format: Format, compare: bool) -> i32 {
    let gen = QMatrix2::generator();
    if compare {
        if n == 0 {
            return usage("--compare requires --n >= 1 (the closed forms start at 1)");
        }
        let brute = gen.pow(n);
        let (ch1, ch2) = match (power_ch1(&gen, n), power_ch2(&gen, n)) {
            (Ok(x), Ok(y)) => (x, y),
            (Err(e), _) | (_, Err(e)) => {
                eprintln!("closed form failed: {e}");
                return 1;
            }
        };
        let equal = brute == ch1 && ch1 == ch2;
        match format {
            Format::Json => println!(
                "{{\"n\":{n},\"equal\":{equal},\"matrix\":{}}}",
                brute.to_json_string()
            ),
            _ => {
                print_power(&brute, n, format);
                println!("ch1 == ch2 == brute: {}", if equal { "OK" } else { "MISMATCH" });
            }
        }
        return i32::from(!equal);
    }
    let result = match method {
        Method::Brute => gen.pow(n),
        Method::Ch1 | Method::Ch2 => {
            if n == 0 {
                return usage("--method ch1/ch2 requires --n >= 1");
            }
            let computed = if method == Method::Ch1 {
                power_ch1(&gen, n)
            } else {
                power_ch2(&gen, n)
            };
            match computed {
                Ok(m) => m,
                Err(e) => {
                    eprintln!("closed form failed: {e}");
                    return 1;
                }
            }
        }
    };
    print_power(&result, n, format);
    0
}

fn fpoly_json(n: i64, f: &FPoly) -> String {
    let terms: Vec<serde_json::Value> = f
        .to_triples()
        .into_iter()
        .map(|(xe, ye, c)| serde_json::json!([xe, ye, c]))
        .collect();
    serde_json::json!({ "n": n, "terms": terms }).to_string()
}

fn cmd_fpoly(n: i64, format: Format, check: bool) -> i32 {
    if n < -1 {
        return usage("--n must be at least -1");
    }
    let f = f_sum(n).expect("index validated");
    match format {
        Format::Text => println!("{f}"),
        Format::Latex => println!("{}", f.latex()),
        Format::Json => println!("{}", fpoly_json(n, &f)),
    }
    if check {
        let rec = f_rec(n).expect("index validated");
        let ok = rec == f;
        println!("sum == recurrence: {}", if ok { "OK" } else { "MISMATCH" });
        if !ok {
            return 1;
        }
    }
    0
}

fn print_reports(reports: &[CheckReport], format: ReportFormat) -> i32 {
    let failed = reports.iter().filter(|r| !r.passed).count();
    match format {
        ReportFormat::Json => println!("{}", reports_to_json(reports)),
        ReportFormat::Text => {
            for r in reports {
                println!("{}", r.line());
            }
            println!("{} checks, {} failed", reports.len(), failed);
        }
    }
    i32::from(failed > 0)
}

fn cmd_verify(max: u32, format: ReportFormat) -> i32 {
    if max < 1 {
        return usage("--max must be at least 1");
    }
    print_reports(&run_suite(max), format)
}

fn cmd_vzw(m: u32, n: u32, format: ReportFormat) -> i32 {
    let reports = vzw_relation_reports(m, n);
    if format == ReportFormat::Text {
        if let Some(note) = &reports[0].note {
            println!("{note}");
        }
    }
    print_reports(&reports, format)
}
