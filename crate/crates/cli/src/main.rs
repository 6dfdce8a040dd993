//! cubicp: test single numbers, run pseudoprime search campaigns, and
//! benchmark per-bit operation counts.
//!
//! Exit codes: 0 probable prime / prime / clean campaign, 1 composite,
//! 2 usage or operational error (including "test not applicable"),
//! 3 campaign found counterexamples.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cubic_primality::bpsw::{bpsw, is_prime_oracle};
use cubic_primality::counters::OpCounters;
use cubic_primality::cubic::{cubic_test, CompositeWitness, CubicParams, TestPolicy, Verdict};
use cubic_primality::harness::campaigns::{
    regression_section4, scan_all_k, scan_list_file, scan_odd_range, scan_power_of_two_a,
    scan_random, scan_semiprimes, ListPolicy, OddRangePolicy, QForm, ScanOptions, ALL_Q_FORMS,
};
use cubic_primality::harness::prng::Prng;
use cubic_primality::harness::Campaign;
use cubic_primality::intmath::is_prime_u64;
use cubic_primality::quadratic::{quadratic_test, QuadReason, QuadVerdict};
use num_bigint::BigUint;
use num_traits::Zero;
use serde_json::json;

const EXIT_OK: u8 = 0;
const EXIT_COMPOSITE: u8 = 1;
const EXIT_ERROR: u8 = 2;
const EXIT_COUNTEREXAMPLE: u8 = 3;

#[derive(Parser)]
#[command(name = "cubicp", version, about = "Primality testing in Z[x]/(x^3 - ax - a)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Test one number (decimal or 0x-hex)
    Test(TestArgs),
    /// Run a pseudoprime search campaign and report counterexamples
    Scan(ScanArgs),
    /// Measure per-bit big-integer operation counts on random primes
    Bench(BenchArgs),
}

#[derive(Args)]
struct TestArgs {
    /// the candidate, decimal or 0x-prefixed hex
    n: String,
    #[arg(long, value_enum, default_value_t = Method::All)]
    method: Method,
    /// fixed parameter index k instead of the minimal-k search (cubic only)
    #[arg(long)]
    k: Option<u64>,
    /// emit one JSON document on stdout
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Cubic,
    Quadratic,
    Bpsw,
    All,
}

#[derive(Args)]
struct ScanArgs {
    #[command(subcommand)]
    campaign: CampaignCmd,
    /// write the JSON report to this file
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// emit the JSON report on stdout (summary goes to stderr)
    #[arg(long, global = true)]
    json: bool,
    /// worker threads; falls back to CUBIC_THREADS, then 1
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Subcommand)]
enum CampaignCmd {
    /// Every odd composite in [9, limit) against the minimal-k test
    OddRange {
        #[arg(long)]
        limit: u64,
        /// check the first M nontrivial B values instead of the minimal k
        #[arg(long, value_name = "M")]
        first_b: Option<u64>,
    },
    /// Numbers from a file, one per line (# starts a comment)
    List {
        #[arg(long)]
        file: PathBuf,
        /// sweep every admissible k up to this bound
        #[arg(long, conflicts_with = "first_b")]
        k_max: Option<u64>,
        /// check the first M nontrivial B values
        #[arg(long, value_name = "M")]
        first_b: Option<u64>,
    },
    /// Every k up to n/2 for each base-2 Fermat pseudoprime n <= limit
    AllK {
        #[arg(long)]
        limit: u64,
    },
    /// a = 2^r parameters with square discriminant over base-2 pseudoprimes
    PowerOfTwoA {
        #[arg(long)]
        limit: u64,
    },
    /// CRT k-search over semiprimes pq with structured q
    Semiprimes {
        #[arg(long)]
        p_limit: u64,
        #[arg(long, default_value_t = 4)]
        j_min: u64,
        #[arg(long, default_value_t = 16)]
        j_max: u64,
        #[arg(long, value_enum, default_value_t = FormArg::All)]
        form: FormArg,
    },
    /// Deterministic fixed-seed random candidates against an exact oracle
    Random {
        #[arg(long)]
        count: u64,
        /// exclusive upper bound on candidates (default: full 64-bit range)
        #[arg(long)]
        bound: Option<u128>,
    },
    /// The 13040299 / k = 262910 worked example, re-derived from scratch
    Regression,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormArg {
    All,
    /// q = 1 + 2j(p-1)
    PMinus1,
    /// q = 1 + 2j(p^2-1)
    P2Minus1,
    /// q = 1 + 2j(p^2+p+1)
    P2PlusPPlus1,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, default_value_t = 256)]
    bits: u64,
    #[arg(long, default_value_t = 20)]
    samples: u64,
    /// emit one JSON document on stdout
    #[arg(long)]
    json: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match &cli.command {
        Command::Test(args) => cmd_test(args),
        Command::Scan(args) => cmd_scan(args),
        Command::Bench(args) => cmd_bench(args),
    };
    ExitCode::from(code)
}

fn parse_candidate(s: &str) -> Option<BigUint> {
    let t = s.trim().replace('_', "");
    if let Some(hex) = t.strip_prefix("0x").or_else(|| t.strip_prefix("0X")) {
        BigUint::parse_bytes(hex.as_bytes(), 16)
    } else {
        BigUint::parse_bytes(t.as_bytes(), 10)
    }
}

/// Solve a(k) = 7 + k(k-1) = n for k: 4n - 27 must be the square (2k-1)^2.
fn family_k(n: &BigUint) -> Option<u64> {
    let four_n = n * 4u32;
    if four_n < BigUint::from(27u32) {
        return None;
    }
    let d = four_n - 27u32;
    let r = d.sqrt();
    if &r * &r != d {
        return None;
    }
    let k = u64::try_from((r + 1u32) >> 1).ok()?;
    (k >= 1 && CubicParams::from_k(k).a == *n).then_some(k)
}

struct MethodReport {
    line: String,
    value: serde_json::Value,
    exit: u8,
}

fn counters_json(c: &OpCounters) -> serde_json::Value {
    serde_json::to_value(c).expect("counter serialization")
}

fn run_cubic(n: &BigUint, policy: TestPolicy) -> MethodReport {
    match cubic_test(n, policy) {
        Err(e) => MethodReport {
            line: format!("error: {e}"),
            value: json!({ "method": "cubic", "error": e.to_string() }),
            exit: EXIT_ERROR,
        },
        Ok(out) => {
            let c = counters_json(&out.counters);
            match out.verdict {
                Verdict::Prime => {
                    let (line, k) = match family_k(n) {
                        Some(k) => (format!("prime (a = n at k = {k})"), json!(k)),
                        None => ("prime".into(), serde_json::Value::Null),
                    };
                    MethodReport {
                        line,
                        value: json!({
                            "method": "cubic", "verdict": "prime", "k": k, "counters": c,
                        }),
                        exit: EXIT_OK,
                    }
                }
                Verdict::ProbablePrime { k } => {
                    let a = CubicParams::from_k(k).a;
                    MethodReport {
                        line: format!("probable prime (k = {k}, a = {a})"),
                        value: json!({
                            "method": "cubic", "verdict": "probable-prime",
                            "k": k, "a": a.to_string(), "counters": c,
                        }),
                        exit: EXIT_OK,
                    }
                }
                Verdict::Composite(w) => {
                    let (line, witness) = match w {
                        CompositeWitness::PerfectCube { root } => (
                            format!("composite (perfect cube, root = {root})"),
                            json!({ "kind": "perfect-cube", "root": root.to_string() }),
                        ),
                        CompositeWitness::Gcd { g } => (
                            format!("composite (gcd witness g = {g})"),
                            json!({ "kind": "gcd", "g": g.to_string() }),
                        ),
                        CompositeWitness::CongruenceFailed { k, a } => (
                            format!("composite (congruence failed at k = {k}, a = {a})"),
                            json!({ "kind": "congruence-failed", "k": k, "a": a.to_string() }),
                        ),
                    };
                    MethodReport {
                        line,
                        value: json!({
                            "method": "cubic", "verdict": "composite",
                            "witness": witness, "counters": c,
                        }),
                        exit: EXIT_COMPOSITE,
                    }
                }
            }
        }
    }
}

fn run_quadratic(n: &BigUint) -> MethodReport {
    if !n.bit(0) || *n < BigUint::from(3u32) {
        return MethodReport {
            line: "inapplicable (defined for odd n >= 3)".into(),
            value: json!({ "method": "quadratic", "verdict": "inapplicable" }),
            exit: EXIT_ERROR,
        };
    }
    let (v, c) = quadratic_test(n);
    let c = counters_json(&c);
    match v {
        QuadVerdict::ProbablePrime => MethodReport {
            line: "probable prime".into(),
            value: json!({ "method": "quadratic", "verdict": "probable-prime", "counters": c }),
            exit: EXIT_OK,
        },
        QuadVerdict::Inapplicable => MethodReport {
            line: "inapplicable (jacobi(5, n) != -1)".into(),
            value: json!({ "method": "quadratic", "verdict": "inapplicable", "counters": c }),
            exit: EXIT_ERROR,
        },
        QuadVerdict::Composite { reason } => {
            let (line, reason) = match reason {
                QuadReason::EulerFailed => ("composite (Euler check failed)".into(), json!("euler-failed")),
                QuadReason::ZPowerFailed => {
                    ("composite (z-power check failed)".into(), json!("z-power-failed"))
                }
                QuadReason::SharedFactor { g } => (
                    format!("composite (shared factor g = {g})"),
                    json!({ "shared-factor": g.to_string() }),
                ),
            };
            MethodReport {
                line,
                value: json!({
                    "method": "quadratic", "verdict": "composite",
                    "reason": reason, "counters": c,
                }),
                exit: EXIT_COMPOSITE,
            }
        }
    }
}

fn run_bpsw(n: &BigUint) -> MethodReport {
    let (prime, c) = bpsw(n);
    let c = counters_json(&c);
    if prime {
        MethodReport {
            line: "probable prime".into(),
            value: json!({ "method": "bpsw", "verdict": "probable-prime", "counters": c }),
            exit: EXIT_OK,
        }
    } else {
        MethodReport {
            line: "composite".into(),
            value: json!({ "method": "bpsw", "verdict": "composite", "counters": c }),
            exit: EXIT_COMPOSITE,
        }
    }
}

fn cmd_test(args: &TestArgs) -> u8 {
    let Some(n) = parse_candidate(&args.n) else {
        eprintln!("error: cannot parse {:?} as a decimal or 0x-hex integer", args.n);
        return EXIT_ERROR;
    };
    if args.k.is_some() && args.method != Method::Cubic {
        eprintln!("error: --k applies to --method cubic only");
        return EXIT_ERROR;
    }
    let policy = match args.k {
        Some(k) if k >= 1 => TestPolicy::FixedK(k),
        Some(_) => {
            eprintln!("error: --k must be at least 1");
            return EXIT_ERROR;
        }
        None => TestPolicy::MinimalK,
    };
    let reports: Vec<(&str, MethodReport)> = match args.method {
        Method::Cubic => vec![("cubic", run_cubic(&n, policy))],
        Method::Quadratic => vec![("quadratic", run_quadratic(&n))],
        Method::Bpsw => vec![("bpsw", run_bpsw(&n))],
        Method::All => vec![
            ("cubic", run_cubic(&n, policy)),
            ("quadratic", run_quadratic(&n)),
            ("bpsw", run_bpsw(&n)),
        ],
    };
    let exit = if args.method == Method::All {
        // the quadratic test may legitimately be inapplicable; a composite
        // verdict from any method wins, otherwise the cubic/bpsw answer
        if reports.iter().any(|(_, r)| r.exit == EXIT_COMPOSITE) {
            EXIT_COMPOSITE
        } else {
            EXIT_OK
        }
    } else {
        reports[0].1.exit
    };
    if args.json {
        let doc = json!({
            "n": n.to_string(),
            "results": reports.iter().map(|(_, r)| &r.value).collect::<Vec<_>>(),
            "exit": exit,
        });
        println!("{}", serde_json::to_string_pretty(&doc).expect("report"));
    } else {
        println!("n = {n}");
        for (name, r) in &reports {
            println!("{name}: {}", r.line);
        }
    }
    exit
}

fn resolve_threads(flag: Option<usize>) -> usize {
    flag.or_else(|| std::env::var("CUBIC_THREADS").ok().and_then(|s| s.parse().ok()))
        .unwrap_or(1)
        .max(1)
}

fn cmd_scan(args: &ScanArgs) -> u8 {
    let opts = ScanOptions { threads: resolve_threads(args.threads) };
    let campaign: Campaign = match &args.campaign {
        CampaignCmd::OddRange { limit, first_b } => {
            if *limit < 9 {
                eprintln!("error: --limit must be at least 9");
                return EXIT_ERROR;
            }
            let policy = match first_b {
                Some(m) => OddRangePolicy::FirstMB { m: *m as usize },
                None => OddRangePolicy::MinimalK,
            };
            scan_odd_range(*limit, policy, &opts)
        }
        CampaignCmd::List { file, k_max, first_b } => {
            let policy = match (k_max, first_b) {
                (Some(k), None) => ListPolicy::KRange { k_max: *k },
                (None, Some(m)) => ListPolicy::FirstMB { m: *m as usize },
                _ => {
                    eprintln!("error: pass exactly one of --k-max or --first-b");
                    return EXIT_ERROR;
                }
            };
            match scan_list_file(file, policy, &opts) {
                Ok(c) => c,
                Err(e) => {
                    eprintln!("error: {e}");
                    return EXIT_ERROR;
                }
            }
        }
        CampaignCmd::AllK { limit } => {
            if *limit < 341 {
                eprintln!("error: --limit must reach the first base-2 pseudoprime, 341");
                return EXIT_ERROR;
            }
            scan_all_k(*limit, &opts)
        }
        CampaignCmd::PowerOfTwoA { limit } => {
            if *limit < 341 {
                eprintln!("error: --limit must reach the first base-2 pseudoprime, 341");
                return EXIT_ERROR;
            }
            scan_power_of_two_a(*limit, &opts)
        }
        CampaignCmd::Semiprimes { p_limit, j_min, j_max, form } => {
            if *p_limit < 3 {
                eprintln!("error: --p-limit must be at least 3");
                return EXIT_ERROR;
            }
            if j_min > j_max {
                eprintln!("error: --j-min must not exceed --j-max");
                return EXIT_ERROR;
            }
            let forms: &[QForm] = match form {
                FormArg::All => &ALL_Q_FORMS,
                FormArg::PMinus1 => &[QForm::PMinus1],
                FormArg::P2Minus1 => &[QForm::PSquaredMinus1],
                FormArg::P2PlusPPlus1 => &[QForm::PSquaredPlusPPlus1],
            };
            scan_semiprimes(*p_limit, *j_min..=*j_max, forms, &opts)
        }
        CampaignCmd::Random { count, bound } => scan_random(*count, *bound, &opts),
        CampaignCmd::Regression => regression_section4(),
    };
    if let Some(path) = &args.out {
        if let Err(e) = std::fs::write(path, campaign.to_json()) {
            eprintln!("error: writing {}: {e}", path.display());
            return EXIT_ERROR;
        }
    }
    if args.json {
        print!("{}", campaign.to_json());
        eprintln!("{}", campaign.summary_line());
    } else {
        println!("{}", campaign.summary_line());
        for cx in &campaign.counterexamples {
            println!("counterexample: n={} k={} a={} ({})", cx.n, cx.k, cx.a, cx.detail);
        }
    }
    if campaign.is_clean() {
        EXIT_OK
    } else {
        EXIT_COUNTEREXAMPLE
    }
}

fn random_odd_with_bits(g: &mut Prng, bits: u64) -> BigUint {
    let mut x = BigUint::ZERO;
    for _ in 0..bits.div_ceil(64) {
        x = (x << 64u32) | BigUint::from(g.next_value());
    }
    x &= (BigUint::from(1u32) << bits) - 1u32;
    x.set_bit(bits - 1, true);
    x.set_bit(0, true);
    x
}

fn next_prime_with_bits(g: &mut Prng, bits: u64, small: &[BigUint]) -> BigUint {
    loop {
        let c = random_odd_with_bits(g, bits);
        if small.iter().any(|p| (&c % p).is_zero()) {
            continue;
        }
        let prime = if bits == 64 {
            is_prime_oracle(&c).expect("64-bit candidate is in oracle range")
        } else {
            bpsw(&c).0
        };
        if prime {
            return c;
        }
    }
}

fn cmd_bench(args: &BenchArgs) -> u8 {
    if args.bits < 64 {
        eprintln!("error: --bits must be at least 64");
        return EXIT_ERROR;
    }
    if args.samples < 1 {
        eprintln!("error: --samples must be at least 1");
        return EXIT_ERROR;
    }
    let mut g = Prng::default();
    let small: Vec<BigUint> =
        (3u64..2_000).filter(|&p| is_prime_u64(p)).map(BigUint::from).collect();
    let mut cubic_total = OpCounters::new();
    let mut bpsw_total = OpCounters::new();
    for _ in 0..args.samples {
        let p = next_prime_with_bits(&mut g, args.bits, &small);
        let out = cubic_test(&p, TestPolicy::MinimalK).expect("candidate is >= 2");
        cubic_total.absorb(out.counters);
        let (ok, c) = bpsw(&p);
        assert!(ok, "bench candidates are verified primes");
        bpsw_total.absorb(c);
    }
    // measured big-operand work per exponent bit, next to the classical
    // per-bit counts and the analytic FFT-pipeline transform counts
    let rows = [
        ("cubic", cubic_total, 6u32, 3u32, 3u32, 6u32),
        ("bpsw", bpsw_total, 4, 4, 4, 4),
    ];
    if args.json {
        let doc = json!({
            "bits": args.bits,
            "samples": args.samples,
            "rows": rows.iter().map(|(name, c, rm, rd, df, inv)| json!({
                "test": name,
                "mul_per_bit": c.mul_per_bit(),
                "mod_per_bit": c.mod_per_bit(),
                "ref_mul": rm, "ref_mod": rd, "dfft": df, "ifft": inv,
            })).collect::<Vec<_>>(),
        });
        println!("{}", serde_json::to_string_pretty(&doc).expect("bench report"));
    } else {
        println!(
            "per-bit cost over {} random prime{} of {} bits",
            args.samples,
            if args.samples == 1 { "" } else { "s" },
            args.bits
        );
        println!();
        println!("{:<8} {:>8} {:>8}   {:>7} {:>7} {:>5} {:>5}", "test", "MUL/bit", "MOD/bit", "ref MUL", "ref MOD", "dFFT", "iFFT");
        for (name, c, rm, rd, df, inv) in &rows {
            println!(
                "{:<8} {:>8.2} {:>8.2}   {:>7} {:>7} {:>5} {:>5}",
                name,
                c.mul_per_bit(),
                c.mod_per_bit(),
                rm, rd, df, inv
            );
        }
        println!();
        println!("ref columns: classical big-word products/reductions per bit;");
        println!("dFFT/iFFT: analytic transform counts for an FFT pipeline.");
    }
    EXIT_OK
}
