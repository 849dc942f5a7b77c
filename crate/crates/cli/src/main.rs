mod output;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use algcomb_core::apolar::{derivative_span, graded_character, irreducible_multiplicities, n_factorial_report, vandermonde};
use algcomb_core::diagcoinv::{bidegree_decomposition, diagonal_report, DEFAULT_MAX_N};
use algcomb_core::hall::{hall_fit, hall_sweep, DEFAULT_GROUP_CAP};
use algcomb_core::horn::{
    hermitian_feasible_integer, horn_feasible, horn_lr_equivalence, horn_system, horn_violations, saturation_scan,
    SpectrumTriple,
};
use algcomb_core::lis::{
    expected_is_exact, gessel_series, greene_shape, is_length, rsk, sample_chi_n, sample_second_row, Permutation,
};
use algcomb_core::poly::VarSplit;
use algcomb_core::symfunc::{lr_coefficient, schur_expand_with, SchurBasis};
use algcomb_core::tableaux::{enumerate_partitions, maj_multiplicity, q_factorial, Partition};
use algcomb_core::tracywidom::{
    gue_scaled_samples, ks_distance, painleve2_hastings_mcleod, tw_cdf, tw_moments, EmpiricalDistribution,
    PainleveConfig,
};
use algcomb_core::verify::{run_criterion, Level, CRITERIA};
use algcomb_core::Error;
use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use output::{big, bidegree_key, num, rational, read_csv_column, Emitter, Format};

#[derive(Parser)]
#[command(name = "algcomb", version, about = "Experiments in algebraic combinatorics")]
struct Cli {
    /// Worker threads for parallel sections.
    #[arg(long, global = true, env = "ALGCOMB_THREADS")]
    threads: Option<usize>,

    /// Output format.
    #[arg(long = "out", global = true, value_enum, default_value = "json")]
    format: Format,

    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Littlewood-Richardson coefficient c_{mu nu}^lambda.
    Lr {
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        nu: Partition,
        #[arg(long)]
        lambda: Partition,
    },
    /// Schur expansion of a product of Schur polynomials.
    SchurExpand {
        /// A factor s_mu; repeat for a product.
        #[arg(long = "factor", required = true)]
        factors: Vec<Partition>,
    },
    /// Saturation scan over all triples up to a size bound.
    Saturation {
        #[arg(long, default_value_t = 6)]
        bound: u32,
        #[arg(long, default_value_t = 4)]
        m_max: u32,
    },
    /// Horn inequalities for hermitian spectra.
    Horn(HornArgs),
    /// Hall polynomial g_{mu nu}^lambda from subgroup counts.
    Hall(HallArgs),
    /// Derivative span of the Garsia-Haiman determinant D_mu.
    Nfact {
        #[arg(long)]
        mu: Partition,
    },
    /// Derivative span of the Vandermonde determinant V_n.
    Coinv {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
    /// Diagonal coinvariants R^(2) via a Groebner basis.
    Diag {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: usize,
        /// Decompose a single bidegree, given as i,j.
        #[arg(long, value_parser = parse_bidegree)]
        bidegree: Option<(u32, u32)>,
    },
    /// Longest increasing subsequences.
    Lis {
        #[command(subcommand)]
        command: LisCommand,
    },
    /// Tracy-Widom distribution and GUE sampling.
    Tw {
        #[command(subcommand)]
        command: TwCommand,
    },
    /// Run the acceptance criteria.
    VerifyAll {
        #[arg(long, conflicts_with = "full")]
        quick: bool,
        #[arg(long)]
        full: bool,
        /// Run only these criteria.
        #[arg(long = "criterion")]
        criteria: Vec<u32>,
    },
}

#[derive(Args)]
struct HornArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    alpha: Option<Vec<i64>>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    beta: Option<Vec<i64>>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    gamma: Option<Vec<i64>>,
    /// Compare with LR nonvanishing for all integer triples with entries up to this bound.
    #[arg(long)]
    scan_max: Option<u32>,
}

#[derive(Args)]
struct HallArgs {
    #[arg(long)]
    lambda: Option<Partition>,
    #[arg(long)]
    mu: Option<Partition>,
    #[arg(long)]
    nu: Option<Partition>,
    #[arg(long, value_delimiter = ',', default_value = "2,3,5,7")]
    primes: Vec<u64>,
    /// Largest group order enumerated.
    #[arg(long, default_value_t = DEFAULT_GROUP_CAP)]
    cap: u64,
    /// Sweep all triples with |lambda| up to this size instead.
    #[arg(long)]
    sweep: Option<u32>,
}

#[derive(Subcommand)]
enum LisCommand {
    /// Exact expected length E(n).
    Expect {
        #[arg(long)]
        n: u32,
    },
    /// u_k(n) for n up to max-n from the Gessel determinant.
    Uk {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 20)]
        max_n: usize,
    },
    /// Greene shape of one permutation, with its insertion tableau.
    Shape {
        /// One-line notation: digits (n <= 9) or comma-separated.
        #[arg(long)]
        perm: String,
    },
    /// Random samples of chi_n = (is_n - 2 sqrt n) / n^(1/6).
    Sample {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Greene row: 1 for is_n, 2 for the second row.
        #[arg(long, default_value_t = 1)]
        row: usize,
    },
}

#[derive(Subcommand)]
enum TwCommand {
    /// F(t) on a grid.
    Cdf {
        #[arg(long, default_value_t = -5.0, allow_hyphen_values = true)]
        tmin: f64,
        #[arg(long, default_value_t = 5.0, allow_hyphen_values = true)]
        tmax: f64,
        #[arg(long, default_value_t = 0.01)]
        step: f64,
        /// Painleve solver steps per unit length.
        #[arg(long, default_value_t = 512)]
        steps_per_unit: usize,
    },
    /// Mean, variance and total mass of F.
    Moments {
        #[arg(long, default_value_t = 512)]
        steps_per_unit: usize,
    },
    /// Scaled k-th largest GUE eigenvalue.
    Gue {
        #[arg(long, default_value_t = 200)]
        n: usize,
        #[arg(long, default_value_t = 2000)]
        samples: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
    /// KS distance, mean and variance of a sample file against F.
    Compare {
        #[arg(long)]
        lis_csv: PathBuf,
        #[arg(long)]
        column: Option<String>,
    },
    /// Histograms of the scaled second Greene row and second GUE eigenvalue.
    SecondRow {
        #[arg(long, default_value_t = 10_000)]
        lis_n: usize,
        #[arg(long, default_value_t = 200)]
        gue_n: usize,
        #[arg(long, default_value_t = 2000)]
        samples: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 30)]
        bins: usize,
        #[arg(long, default_value_t = -8.0, allow_hyphen_values = true)]
        lo: f64,
        #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
        hi: f64,
    },
}

fn parse_bidegree(s: &str) -> Result<(u32, u32), String> {
    let (a, b) = s.split_once(',').ok_or("expected i,j")?;
    Ok((a.trim().parse().map_err(|e| format!("{e}"))?, b.trim().parse().map_err(|e| format!("{e}"))?))
}

enum Failure {
    Lib(Error),
    Usage(String),
    Verification,
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if t == 0 {
            eprintln!("error: --threads must be positive");
            return ExitCode::from(2);
        }
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    let start = Instant::now();
    let command = std::iter::once("algcomb".to_string()).chain(std::env::args().skip(1)).collect::<Vec<_>>().join(" ");
    let r = run(&cli, command);
    eprintln!("runtime: {:.3} s", start.elapsed().as_secs_f64());
    match r {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            match e {
                Error::ResourceCap(_) => ExitCode::from(3),
                Error::InvalidInput(_) | Error::UnsupportedSize(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn params(pairs: &[(&str, Value)]) -> Map<String, Value> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn part(p: &Partition) -> Value {
    Value::String(p.to_string())
}

fn require_json(cli: &Cli, what: &str) -> Outcome {
    if cli.format != Format::Json {
        return Err(Failure::Usage(format!("{what} only supports --out json")));
    }
    Ok(())
}

fn run(cli: &Cli, command: String) -> Outcome {
    let emitter = |p: Map<String, Value>| Emitter { command: command.clone(), params: p, output: cli.output.clone() };
    match &cli.command {
        Command::Lr { mu, nu, lambda } => {
            require_json(cli, "lr")?;
            let e = emitter(params(&[("mu", part(mu)), ("nu", part(nu)), ("lambda", part(lambda))]));
            e.json(params(&[("c", json!(lr_coefficient(mu, nu, lambda)))]))?;
        }
        Command::SchurExpand { factors } => {
            require_json(cli, "schur-expand")?;
            let n: u32 = factors.iter().map(|f| f.size()).sum();
            let mut basis = SchurBasis::new((n as usize).max(1));
            let mut prod = basis.get(&Partition::empty())?.clone();
            for f in factors {
                prod = &prod * basis.get(f)?;
            }
            let exp = schur_expand_with(&mut basis, &prod)?;
            let body: Map<String, Value> = exp.iter().map(|(l, c)| (l.to_string(), rational(c))).collect();
            let e = emitter(params(&[("factors", Value::Array(factors.iter().map(part).collect()))]));
            e.json(params(&[("expansion", Value::Object(body))]))?;
        }
        Command::Saturation { bound, m_max } => {
            let r = saturation_scan(*bound, *m_max);
            let e = emitter(params(&[("bound", json!(bound)), ("m_max", json!(m_max))]));
            let rows: Vec<Vec<Value>> = r
                .violations
                .iter()
                .map(|v| vec![part(&v.mu), part(&v.nu), part(&v.lambda), json!(v.m)])
                .collect();
            match cli.format {
                Format::Json => e.json(params(&[
                    ("triples", json!(r.triples)),
                    ("nonzero_triples", json!(r.nonzero_triples)),
                    ("checks", json!(r.checks)),
                    ("violation_count", json!(r.violations.len())),
                    ("violations", serde_json::to_value(&r.violations).expect("serialisable")),
                ]))?,
                Format::Csv => e.csv(&["mu", "nu", "lambda", "m"], rows.into_iter().map(quote_row))?,
            }
        }
        Command::Horn(a) => horn(cli, a, emitter)?,
        Command::Hall(a) => hall(cli, a, emitter)?,
        Command::Nfact { mu } => {
            require_json(cli, "nfact")?;
            let r = n_factorial_report(mu)?;
            let e = emitter(params(&[("mu", part(mu))]));
            e.json(params(&[
                ("dim", json!(r.dim)),
                ("bigraded_dims", dims_json(&r.bigraded_dims)),
                ("multiplicities", mult_json(&r.multiplicities, bidegree_key)),
            ]))?;
        }
        Command::Coinv { n, max_n } => {
            require_json(cli, "coinv")?;
            if *n == 0 {
                return Err(Failure::Usage("n must be at least 1".into()));
            }
            if n > max_n {
                return Err(Error::ResourceCap(format!("n = {n} exceeds --max-n {max_n}")).into());
            }
            let span = derivative_span(&vandermonde(*n), VarSplit::single(*n))?;
            let table = graded_character(&span, *n)?;
            let total = table.total();
            let regular = table.classes.iter().zip(&total).all(|(rho, &t)| {
                if rho.parts().iter().all(|&x| x == 1) {
                    t as usize == span.dim()
                } else {
                    t == 0
                }
            });
            let mult = irreducible_multiplicities(&table)?;
            let mut maj_agrees = true;
            for i in 0..=(n * (n - 1) / 2) as u32 {
                for lambda in enumerate_partitions(*n as u32, None) {
                    let got = mult.get(&(i, 0)).and_then(|m| m.get(&lambda)).copied().unwrap_or(0);
                    maj_agrees &= got == maj_multiplicity(&lambda, i);
                }
            }
            let e = emitter(params(&[("n", json!(n)), ("max_n", json!(max_n))]));
            e.json(params(&[
                ("dim", json!(span.dim())),
                ("hilbert_series", serde_json::to_value(span.hilbert_series()).expect("serialisable")),
                ("q_factorial", serde_json::to_value(q_factorial(*n as u32)).expect("serialisable")),
                ("regular_representation", json!(regular)),
                ("maj_agreement", json!(maj_agrees)),
                ("multiplicities", mult_json(&mult, |k| k.0.to_string())),
            ]))?;
        }
        Command::Diag { n, max_n, bidegree } => {
            require_json(cli, "diag")?;
            let e = emitter(params(&[
                ("n", json!(n)),
                ("max_n", json!(max_n)),
                ("bidegree", bidegree.map_or(Value::Null, |b| Value::String(bidegree_key(b)))),
            ]));
            if let Some(b) = bidegree {
                if *n > *max_n {
                    return Err(Error::ResourceCap(format!("n = {n} exceeds --max-n {max_n}")).into());
                }
                let d = bidegree_decomposition(*n, *b)?;
                let dim: u64 = d.iter().map(|(l, m)| m * num_traits::ToPrimitive::to_u64(&algcomb_core::tableaux::count_syt(l)).unwrap_or(0)).sum();
                e.json(params(&[
                    ("dim", json!(dim)),
                    ("multiplicities", Value::Object(d.iter().map(|(l, m)| (l.to_string(), json!(m))).collect())),
                ]))?;
            } else {
                let r = diagonal_report(*n, *max_n)?;
                let gamma: BTreeMap<(u32, u32), usize> =
                    r.antiinvariant_dims.iter().map(|(&k, &v)| (k, v as usize)).collect();
                e.json(params(&[
                    ("total", json!(r.total)),
                    ("expected_total", big(&BigInt::from(r.expected_total.clone()))),
                    ("bigraded_dims", dims_json(&r.bigraded_dims)),
                    ("gamma_dims", dims_json(&gamma)),
                    ("gamma_total", json!(r.antiinvariant_total)),
                    ("catalan", big(&r.catalan)),
                    ("catalan_check", json!(BigInt::from(r.antiinvariant_total) == r.catalan)),
                    ("groebner_size", json!(r.groebner_size)),
                    ("generators", json!(r.generators)),
                    ("multiplicities", mult_json(&r.multiplicities, bidegree_key)),
                ]))?;
            }
        }
        Command::Lis { command: c } => lis(cli, c, emitter)?,
        Command::Tw { command: c } => tw(cli, c, emitter)?,
        Command::VerifyAll { quick, full: _, criteria } => {
            require_json(cli, "verify-all")?;
            let level = if *quick { Level::Quick } else { Level::Full };
            let ids: Vec<u32> = if criteria.is_empty() { CRITERIA.iter().map(|c| c.0).collect() } else { criteria.clone() };
            let mut outcomes = Vec::new();
            for id in ids {
                let o = run_criterion(id, level);
                eprintln!("{} criterion {:>2}: {} ({:.1} s)", if o.passed { "PASS" } else { "FAIL" }, o.id, o.title, o.seconds);
                for f in o.failures() {
                    eprintln!("     {}: {}", f.name, f.detail);
                }
                outcomes.push(o);
            }
            let passed = outcomes.iter().all(|o| o.passed);
            let e = emitter(params(&[("level", serde_json::to_value(level).expect("serialisable"))]));
            e.json(params(&[
                ("passed", json!(passed)),
                ("criteria", serde_json::to_value(&outcomes).expect("serialisable")),
            ]))?;
            if !passed {
                return Err(Failure::Verification);
            }
        }
    }
    Ok(())
}

fn quote_row(row: Vec<Value>) -> Vec<Value> {
    row.into_iter()
        .map(|v| match v {
            Value::String(s) if s.contains(',') => Value::String(format!("\"{s}\"")),
            other => other,
        })
        .collect()
}

fn dims_json(d: &BTreeMap<(u32, u32), usize>) -> Value {
    Value::Object(d.iter().map(|(&k, v)| (bidegree_key(k), json!(v))).collect())
}

fn mult_json<K: Copy>(m: &BTreeMap<K, BTreeMap<Partition, u64>>, key: impl Fn(K) -> String) -> Value {
    Value::Object(
        m.iter()
            .map(|(&k, inner)| (key(k), Value::Object(inner.iter().map(|(l, c)| (l.to_string(), json!(c))).collect())))
            .collect(),
    )
}

fn horn(cli: &Cli, a: &HornArgs, emitter: impl Fn(Map<String, Value>) -> Emitter) -> Outcome {
    require_json(cli, "horn")?;
    let system = horn_system(a.n)?;
    let spectra = [&a.alpha, &a.beta, &a.gamma];
    let e = emitter(params(&[
        ("n", json!(a.n)),
        ("alpha", json!(a.alpha)),
        ("beta", json!(a.beta)),
        ("gamma", json!(a.gamma)),
        ("scan_max", json!(a.scan_max)),
    ]));
    let mut body = params(&[(
        "inequalities",
        Value::Array(system.inequalities.iter().map(|i| Value::String(i.to_string())).collect()),
    )]);
    match spectra {
        [Some(x), Some(y), Some(z)] => {
            let t = SpectrumTriple::from_integers(x, y, z)?;
            body.insert("trace_balanced".into(), json!(t.trace_balanced()));
            body.insert("feasible".into(), json!(horn_feasible(&t)?));
            body.insert(
                "violated".into(),
                Value::Array(horn_violations(&t)?.iter().map(|i| Value::String(i.to_string())).collect()),
            );
            let lr = if t.as_partitions().is_some() { json!(hermitian_feasible_integer(&t)?) } else { Value::Null };
            body.insert("lr_nonzero".into(), lr);
        }
        [None, None, None] => {}
        _ => return Err(Failure::Usage("give all of --alpha, --beta and --gamma, or none".into())),
    }
    if let Some(m) = a.scan_max {
        let r = horn_lr_equivalence(a.n, m)?;
        body.insert(
            "scan".into(),
            json!({"triples": r.triples, "feasible": r.feasible, "mismatches": r.mismatches.len()}),
        );
    }
    e.json(body)?;
    Ok(())
}

fn hall(cli: &Cli, a: &HallArgs, emitter: impl Fn(Map<String, Value>) -> Emitter) -> Outcome {
    require_json(cli, "hall")?;
    let e = emitter(params(&[
        ("lambda", a.lambda.as_ref().map_or(Value::Null, part)),
        ("mu", a.mu.as_ref().map_or(Value::Null, part)),
        ("nu", a.nu.as_ref().map_or(Value::Null, part)),
        ("primes", json!(a.primes)),
        ("cap", json!(a.cap)),
        ("sweep", json!(a.sweep)),
    ]));
    if let Some(size) = a.sweep {
        let r = hall_sweep(size, &a.primes, a.cap)?;
        return Ok(e.json(params(&[
            ("triples", json!(r.entries.len())),
            ("nonvanishing_mismatches", json!(r.nonvanishing_mismatches)),
            ("duality_mismatches", json!(r.duality_mismatches)),
            ("subgroup_total_mismatches", json!(r.subgroup_total_mismatches)),
            ("polynomials_fitted", json!(r.polynomials_fitted)),
            ("polynomials_undetermined", json!(r.polynomials_undetermined)),
            ("maley_failures", json!(r.maley_failures)),
        ]))?);
    }
    let (Some(lambda), Some(mu), Some(nu)) = (&a.lambda, &a.mu, &a.nu) else {
        return Err(Failure::Usage("give --lambda, --mu and --nu, or --sweep".into()));
    };
    let counts: Vec<(u64, u64)> = a
        .primes
        .iter()
        .map(|&p| algcomb_core::hall::hall_count_capped(lambda, mu, nu, p, a.cap).map(|c| (p, c)))
        .collect::<Result<_, _>>()?;
    let fit = hall_fit(lambda, mu, nu, &a.primes, a.cap);
    let mut body = params(&[
        ("counts", Value::Object(counts.iter().map(|(p, c)| (p.to_string(), json!(c))).collect())),
        ("lr_nonzero", json!(algcomb_core::symfunc::lr_nonzero(mu, nu, lambda))),
    ]);
    match fit {
        Ok(f) => {
            body.insert("polynomial".into(), serde_json::to_value(&f.polynomial).expect("serialisable"));
            body.insert("held_out".into(), json!(f.held_out));
            body.insert("maley_positive".into(), json!(f.maley_positive));
        }
        Err(Error::Consistency(msg)) => {
            body.insert("polynomial".into(), Value::Null);
            body.insert("note".into(), Value::String(msg));
        }
        Err(err) => return Err(err.into()),
    }
    e.json(body)?;
    Ok(())
}

fn lis(cli: &Cli, c: &LisCommand, emitter: impl Fn(Map<String, Value>) -> Emitter) -> Outcome {
    match c {
        LisCommand::Expect { n } => {
            require_json(cli, "lis expect")?;
            if *n == 0 {
                return Err(Failure::Usage("n must be at least 1".into()));
            }
            let ex = expected_is_exact(*n);
            let f = num_traits::ToPrimitive::to_f64(ex.numer()).unwrap_or(f64::NAN)
                / num_traits::ToPrimitive::to_f64(ex.denom()).unwrap_or(f64::NAN);
            emitter(params(&[("n", json!(n))])).json(params(&[
                ("expected", rational(&ex)),
                ("expected_float", num(f)),
                ("ratio_to_sqrt_n", num(f / (*n as f64).sqrt())),
            ]))?;
        }
        LisCommand::Uk { k, max_n } => {
            if *k == 0 {
                return Err(Failure::Usage("k must be at least 1".into()));
            }
            let g = gessel_series(*k, 2 * max_n)?;
            let e = emitter(params(&[("k", json!(k)), ("max_n", json!(max_n))]));
            match cli.format {
                Format::Json => e.json(params(&[("counts", Value::Array(g.counts.iter().map(big).collect()))]))?,
                Format::Csv => e.csv(
                    &["n", "u_k"],
                    g.counts.iter().enumerate().map(|(n, c)| vec![json!(n), Value::String(c.to_string())]),
                )?,
            }
        }
        LisCommand::Shape { perm } => {
            require_json(cli, "lis shape")?;
            let w = Permutation::parse(perm)?;
            let (p, _) = rsk(&w);
            let shape = greene_shape(&w);
            let sums: Vec<u32> = shape.parts().iter().scan(0, |acc, &x| {
                *acc += x;
                Some(*acc)
            }).collect();
            emitter(params(&[("perm", json!(perm))])).json(params(&[
                ("is", json!(is_length(&w))),
                ("shape", json!(shape.parts())),
                ("greene_sums", json!(sums)),
                ("insertion_tableau", json!(p.rows())),
            ]))?;
        }
        LisCommand::Sample { n, samples, seed, row } => {
            if *n == 0 || *samples == 0 {
                return Err(Failure::Usage("n and samples must be positive".into()));
            }
            let values = match row {
                1 => sample_chi_n(*n, *samples, *seed),
                2 => sample_second_row(*n, *samples, *seed),
                _ => return Err(Failure::Usage("--row must be 1 or 2".into())),
            };
            let e = emitter(params(&[("n", json!(n)), ("samples", json!(samples)), ("seed", json!(seed)), ("row", json!(row))]));
            match cli.format {
                Format::Csv => e.csv(&["chi"], values.iter().map(|&v| vec![num(v)]))?,
                Format::Json => {
                    let d = EmpiricalDistribution::new(values)?;
                    e.json(params(&[("count", json!(d.count())), ("mean", num(d.mean())), ("var", num(d.variance()))]))?
                }
            }
        }
    }
    Ok(())
}

fn tw(cli: &Cli, c: &TwCommand, emitter: impl Fn(Map<String, Value>) -> Emitter) -> Outcome {
    match c {
        TwCommand::Cdf { tmin, tmax, step, steps_per_unit } => {
            let sol = painleve2_hastings_mcleod(PainleveConfig::default().with_steps(*steps_per_unit))?;
            let g = tw_cdf(&sol, *tmin, *tmax, *step)?;
            let e = emitter(params(&[
                ("tmin", num(*tmin)),
                ("tmax", num(*tmax)),
                ("step", num(*step)),
                ("steps_per_unit", json!(steps_per_unit)),
            ]));
            match cli.format {
                Format::Csv => e.csv(&["t", "F"], g.points().map(|(t, f)| vec![num(t), num(f)]))?,
                Format::Json => e.json(params(&[
                    ("t", Value::Array(g.points().map(|p| num(p.0)).collect())),
                    ("F", Value::Array(g.points().map(|p| num(p.1)).collect())),
                ]))?,
            }
        }
        TwCommand::Moments { steps_per_unit } => {
            require_json(cli, "tw moments")?;
            let sol = painleve2_hastings_mcleod(PainleveConfig::default().with_steps(*steps_per_unit))?;
            let m = tw_moments(&sol);
            emitter(params(&[("steps_per_unit", json!(steps_per_unit))])).json(params(&[
                ("mean", num(m.mean)),
                ("variance", num(m.variance)),
                ("mass", num(m.mass)),
                ("residual", num(sol.max_residual(sol.config.x_min, sol.config.x0))),
                ("u0", num(sol.u_at(0.0))),
            ]))?;
        }
        TwCommand::Gue { n, samples, seed, k } => {
            let values = gue_scaled_samples(*n, *samples, *seed, *k)?;
            let e = emitter(params(&[("n", json!(n)), ("samples", json!(samples)), ("seed", json!(seed)), ("k", json!(k))]));
            match cli.format {
                Format::Csv => e.csv(&["scaled_alpha"], values.iter().map(|&v| vec![num(v)]))?,
                Format::Json => {
                    let d = EmpiricalDistribution::new(values)?;
                    let mut body = params(&[("count", json!(d.count())), ("mean", num(d.mean())), ("var", num(d.variance()))]);
                    if *k == 1 {
                        let f = tw_cdf(&painleve2_hastings_mcleod(PainleveConfig::default())?, -10.0, 8.0, 1e-3)?;
                        body.insert("ks".into(), num(ks_distance(&d, &f)?));
                    }
                    e.json(body)?
                }
            }
        }
        TwCommand::Compare { lis_csv, column } => {
            require_json(cli, "tw compare")?;
            let values = read_csv_column(lis_csv, column.as_deref()).map_err(Failure::Usage)?;
            let d = EmpiricalDistribution::new(values)?;
            let f = tw_cdf(&painleve2_hastings_mcleod(PainleveConfig::default())?, -10.0, 8.0, 1e-3)?;
            emitter(params(&[
                ("lis_csv", Value::String(lis_csv.display().to_string())),
                ("column", json!(column)),
            ]))
            .json(params(&[
                ("ks", num(ks_distance(&d, &f)?)),
                ("mean", num(d.mean())),
                ("var", num(d.variance())),
                ("count", json!(d.count())),
            ]))?;
        }
        TwCommand::SecondRow { lis_n, gue_n, samples, seed, bins, lo, hi } => {
            if *bins == 0 || !(hi > lo) {
                return Err(Failure::Usage("need bins > 0 and hi > lo".into()));
            }
            let l2 = EmpiricalDistribution::new(sample_second_row(*lis_n, *samples, *seed))?;
            let a2 = EmpiricalDistribution::new(gue_scaled_samples(*gue_n, *samples, *seed, 2)?)?;
            let (h1, h2) = (l2.histogram(*lo, *hi, *bins), a2.histogram(*lo, *hi, *bins));
            let w = (hi - lo) / *bins as f64;
            let e = emitter(params(&[
                ("lis_n", json!(lis_n)),
                ("gue_n", json!(gue_n)),
                ("samples", json!(samples)),
                ("seed", json!(seed)),
                ("bins", json!(bins)),
                ("lo", num(*lo)),
                ("hi", num(*hi)),
            ]));
            match cli.format {
                Format::Csv => e.csv(
                    &["bin_lo", "bin_hi", "lambda2", "alpha2"],
                    (0..*bins).map(|i| vec![num(lo + i as f64 * w), num(lo + (i + 1) as f64 * w), json!(h1[i]), json!(h2[i])]),
                )?,
                Format::Json => e.json(params(&[
                    ("lambda2_counts", json!(h1)),
                    ("alpha2_counts", json!(h2)),
                    ("lambda2_mean", num(l2.mean())),
                    ("alpha2_mean", num(a2.mean())),
                    ("lambda2_var", num(l2.variance())),
                    ("alpha2_var", num(a2.variance())),
                ]))?,
            }
        }
    }
    Ok(())
}
