//! `skein-lab`: compute skein-type knot invariants and derived bounds from
//! the command line.
//!
//! Exit codes: 0 success, 1 computation error, 2 census finished with
//! skipped or unparseable knots, 64 usage error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use skein_census::{resume as census_resume, scan as census_scan, ScanOptions};
use skein_core::bounds::{bounds_report, finiteness_experiment, twist_extend};
use skein_core::diagram::{
    certified_genus, parse_braid, parse_dt, parse_gauss, parse_pd, pretzel, seifert, torus2,
    twist_knot, Diagram, GenusBound,
};
use skein_core::homfly::{homfly_with, skein_triple};
use skein_core::kauffman::{kauffman_quad, kauffman_with, lambda_with};
use skein_core::poly::{Laurent2, Var};
use skein_core::{SkeinOptions, DEFAULT_NODE_BUDGET};

#[derive(Parser)]
#[command(name = "skein-lab", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct DiagramInput {
    /// PD code, e.g. `X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]`
    #[arg(long, conflicts_with_all = ["dt", "gauss", "braid"])]
    pd: Option<String>,
    /// DT code, e.g. "4 6 2"
    #[arg(long, conflicts_with_all = ["gauss", "braid"])]
    dt: Option<String>,
    /// Signed Gauss code, e.g. "1 -2 3 -1 2 -3"
    #[arg(long, conflicts_with = "braid")]
    gauss: Option<String>,
    /// Braid word as signed generators, e.g. "1 1 1"
    #[arg(long)]
    braid: Option<String>,
}

impl DiagramInput {
    fn parse(&self) -> Result<Diagram, String> {
        let d = if let Some(t) = &self.pd {
            parse_pd(t)
        } else if let Some(t) = &self.dt {
            parse_dt(t)
        } else if let Some(t) = &self.gauss {
            parse_gauss(t)
        } else if let Some(t) = &self.braid {
            parse_braid(t)
        } else {
            return Err("no diagram given; use one of --pd/--dt/--gauss/--braid".into());
        };
        d.map_err(|e| e.to_string())
    }
}

#[derive(Args, Clone)]
struct Common {
    /// Skein node budget (overrides SKEIN_LAB_BUDGET)
    #[arg(long)]
    budget: Option<u64>,
    /// Output format
    #[arg(long, default_value = "text", value_parser = ["text", "json"])]
    format: String,
    /// Write output to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

impl Common {
    fn skein_options(&self) -> SkeinOptions {
        let env_budget = std::env::var("SKEIN_LAB_BUDGET")
            .ok()
            .and_then(|v| v.parse().ok());
        SkeinOptions {
            node_budget: self.budget.or(env_budget).unwrap_or(DEFAULT_NODE_BUDGET),
            cache: None,
        }
    }

    fn json(&self) -> bool {
        self.format == "json"
    }

    fn emit(&self, text: String) -> Result<(), String> {
        match &self.out {
            Some(path) => std::fs::write(path, text + "\n").map_err(|e| e.to_string()),
            None => {
                println!("{text}");
                Ok(())
            }
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Skein polynomial P in (l, m)
    Poly {
        #[command(flatten)]
        input: DiagramInput,
        #[command(flatten)]
        common: Common,
    },
    /// Kauffman polynomial F in (a, z)
    Kauffman {
        #[command(flatten)]
        input: DiagramInput,
        #[command(flatten)]
        common: Common,
        /// Print the regular-isotopy polynomial Lambda instead of F
        #[arg(long)]
        lambda: bool,
    },
    /// Seifert circles, genus, blocks and homogeneity
    Seifert {
        #[command(flatten)]
        input: DiagramInput,
        #[command(flatten)]
        common: Common,
    },
    /// Degree bounds derived from P (and F unless --no-kauffman)
    Bounds {
        #[command(flatten)]
        input: DiagramInput,
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        no_kauffman: bool,
    },
    /// Extend a skein pair across n antiparallel twists at a positive
    /// crossing: P_(2n+1) from (P_1, P_inf)
    Twist {
        /// File with two lines: canonical P_1 and P_inf
        #[arg(long)]
        seed: PathBuf,
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Family diagrams; with --steps and --k runs the coefficient
    /// boundedness experiment over the series
    Family {
        /// Pretzel parameters "p,q,r" (odd); the series grows |r| by 2
        #[arg(long, conflicts_with_all = ["torus2", "twist_knot"])]
        pretzel: Option<String>,
        /// (2, n) torus knot; the series grows |n| by 2
        #[arg(long, conflicts_with = "twist_knot")]
        torus2: Option<i64>,
        /// Twist knot with j twist crossings; the series grows j by 1
        #[arg(long)]
        twist_knot: Option<u32>,
        /// Number of family members to generate (default 1)
        #[arg(long, default_value_t = 1)]
        steps: u32,
        /// Multiply P by (l^2+1)^k and tabulate coefficient growth
        #[arg(long)]
        k: Option<u32>,
        #[command(flatten)]
        common: Common,
    },
    /// Scan a knot table, writing one JSON record per knot
    Scan {
        #[arg(long)]
        table: PathBuf,
        /// Results file (JSON lines)
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 12)]
        max_crossings: usize,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        no_kauffman: bool,
        /// Worker threads for the census (0 = all cores)
        #[arg(long, default_value_t = 0)]
        threads: usize,
        /// Share the skein memo cache across knots
        #[arg(long)]
        shared_cache: bool,
        /// Also write the summary CSV here
        #[arg(long)]
        summary: Option<PathBuf>,
    },
    /// Continue a partial scan; the finished file is byte-identical to an
    /// uninterrupted run
    Resume {
        #[arg(long)]
        results: PathBuf,
        #[arg(long)]
        table: PathBuf,
        #[arg(long, default_value_t = 12)]
        max_crossings: usize,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        no_kauffman: bool,
        #[arg(long, default_value_t = 0)]
        threads: usize,
        #[arg(long)]
        shared_cache: bool,
        #[arg(long)]
        summary: Option<PathBuf>,
    },
    /// Run the invariant suite on one diagram
    Check {
        #[command(flatten)]
        input: DiagramInput,
        #[command(flatten)]
        common: Common,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 64,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Poly { input, common } => {
            let d = input.parse()?;
            let p = homfly_with(&d, &common.skein_options()).map_err(|e| e.to_string())?;
            let text = if common.json() {
                json!({ "p": p.to_string() }).to_string()
            } else {
                format!("P = {p}")
            };
            common.emit(text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Kauffman {
            input,
            common,
            lambda: want_lambda,
        } => {
            let d = input.parse()?;
            let opts = common.skein_options();
            let value = if want_lambda {
                lambda_with(&d, &opts)
            } else {
                kauffman_with(&d, &opts)
            }
            .map_err(|e| e.to_string())?;
            let label = if want_lambda { "Lambda" } else { "F" };
            let text = if common.json() {
                json!({ label.to_lowercase(): value.to_string() }).to_string()
            } else {
                format!("{label} = {value}")
            };
            common.emit(text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Seifert { input, common } => {
            let d = input.parse()?;
            let s = seifert(&d);
            let genus_status = if d.is_knot() {
                match certified_genus(&d).map_err(|e| e.to_string())? {
                    GenusBound::Certified(_) => "certified",
                    GenusBound::UpperBoundOnly(_) => "upper_bound",
                }
            } else {
                "link"
            };
            let text = if common.json() {
                json!({
                    "crossings": d.crossing_count(),
                    "components": d.component_count(),
                    "seifert_circles": s.s,
                    "genus": s.genus,
                    "genus_status": genus_status,
                    "homogeneous": s.homogeneous,
                    "positive": s.positive,
                    "negative": s.negative,
                    "writhe": s.writhe,
                    "blocks": s.blocks,
                })
                .to_string()
            } else {
                format!(
                    "crossings={}\ncomponents={}\nseifert_circles={}\ngenus={} ({genus_status})\n\
                     homogeneous={}\npositive={}\nnegative={}\nwrithe={}\nblocks={}",
                    d.crossing_count(),
                    d.component_count(),
                    s.s,
                    s.genus,
                    s.homogeneous,
                    s.positive,
                    s.negative,
                    s.writhe,
                    s.blocks.len(),
                )
            };
            common.emit(text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Bounds {
            input,
            common,
            no_kauffman,
        } => {
            let d = input.parse()?;
            let opts = common.skein_options();
            let p = homfly_with(&d, &opts).map_err(|e| e.to_string())?;
            let f = if no_kauffman {
                None
            } else {
                Some(kauffman_with(&d, &opts).map_err(|e| e.to_string())?)
            };
            let report = bounds_report(&p, f.as_ref()).map_err(|e| e.to_string())?;
            let text = if common.json() {
                serde_json::to_string(&report).map_err(|e| e.to_string())?
            } else {
                report.to_key_value().trim_end().to_string()
            };
            common.emit(text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Twist { seed, n, common } => {
            let text = std::fs::read_to_string(&seed).map_err(|e| e.to_string())?;
            let mut lines = text.lines().filter(|l| !l.trim().is_empty());
            let p1 = Laurent2::parse(lines.next().ok_or("seed file needs P_1 on line 1")?)
                .map_err(|e| e.to_string())?;
            let pinf = Laurent2::parse(lines.next().ok_or("seed file needs P_inf on line 2")?)
                .map_err(|e| e.to_string())?;
            let p = twist_extend(&p1, &pinf, n).map_err(|e| e.to_string())?;
            let text = if common.json() {
                json!({ "n": n, "p": p.to_string() }).to_string()
            } else {
                format!("P_{} = {p}", 2 * n + 1)
            };
            common.emit(text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Family {
            pretzel: pretzel_params,
            torus2: torus_n,
            twist_knot: twist_j,
            steps,
            k,
            common,
        } => {
            let mut family = Vec::new();
            let mut labels = Vec::new();
            for step in 0..steps.max(1) {
                let (label, d) = if let Some(params) = &pretzel_params {
                    let nums: Vec<i64> = params
                        .split(',')
                        .map(|s| s.trim().parse::<i64>())
                        .collect::<Result<_, _>>()
                        .map_err(|e| format!("bad pretzel parameters: {e}"))?;
                    let [p, q, r]: [i64; 3] = nums
                        .try_into()
                        .map_err(|_| "pretzel needs exactly 3 parameters".to_string())?;
                    let r = r + 2 * step as i64 * r.signum();
                    (
                        format!("pretzel({p},{q},{r})"),
                        pretzel(p, q, r).map_err(|e| e.to_string())?,
                    )
                } else if let Some(n) = torus_n {
                    let n = n + 2 * step as i64 * n.signum();
                    (format!("torus2({n})"), torus2(n).map_err(|e| e.to_string())?)
                } else if let Some(j) = twist_j {
                    let j = j + step;
                    (
                        format!("twist_knot({j})"),
                        twist_knot(j).map_err(|e| e.to_string())?,
                    )
                } else {
                    return Err("no family given; use --pretzel/--torus2/--twist-knot".into());
                };
                labels.push(label);
                family.push(d);
            }
            let opts = common.skein_options();
            match k {
                Some(k) => {
                    let rows =
                        finiteness_experiment(&family, k, &opts).map_err(|e| e.to_string())?;
                    let text = if common.json() {
                        let rows: Vec<_> = rows
                            .iter()
                            .map(|r| {
                                json!({
                                    "member": labels[r.member],
                                    "crossings": r.crossings,
                                    "genus": r.genus,
                                    "max_abs_coeff": r.max_abs_coeff.to_string(),
                                    "span_l": r.span_l,
                                })
                            })
                            .collect();
                        json!({ "k": k, "rows": rows }).to_string()
                    } else {
                        let mut out = String::from("member\tcrossings\tgenus\tmax_abs_coeff\tspan_l");
                        for r in &rows {
                            out.push_str(&format!(
                                "\n{}\t{}\t{}\t{}\t{}",
                                labels[r.member], r.crossings, r.genus, r.max_abs_coeff, r.span_l
                            ));
                        }
                        out
                    };
                    common.emit(text)?;
                }
                None => {
                    let mut out = Vec::new();
                    for (label, d) in labels.iter().zip(&family) {
                        let p = homfly_with(d, &opts).map_err(|e| e.to_string())?;
                        if common.json() {
                            out.push(
                                json!({
                                    "member": label,
                                    "crossings": d.crossing_count(),
                                    "writhe": d.writhe(),
                                    "p": p.to_string(),
                                })
                                .to_string(),
                            );
                        } else {
                            out.push(format!(
                                "{label}: crossings={} writhe={} P = {p}",
                                d.crossing_count(),
                                d.writhe()
                            ));
                        }
                    }
                    common.emit(out.join("\n"))?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Scan {
            table,
            out,
            max_crossings,
            budget,
            no_kauffman,
            threads,
            shared_cache,
            summary,
        } => {
            let opts = scan_options(max_crossings, budget, no_kauffman, threads, shared_cache);
            let (_, s) = census_scan(&table, &out, &opts).map_err(|e| e.to_string())?;
            finish_census(s, summary)
        }
        Command::Resume {
            results,
            table,
            max_crossings,
            budget,
            no_kauffman,
            threads,
            shared_cache,
            summary,
        } => {
            let opts = scan_options(max_crossings, budget, no_kauffman, threads, shared_cache);
            let (_, s) = census_resume(&results, &table, &opts).map_err(|e| e.to_string())?;
            finish_census(s, summary)
        }
        Command::Check { input, common } => check(input, common),
    }
}

fn scan_options(
    max_crossings: usize,
    budget: Option<u64>,
    no_kauffman: bool,
    threads: usize,
    shared_cache: bool,
) -> ScanOptions {
    let env_budget = std::env::var("SKEIN_LAB_BUDGET")
        .ok()
        .and_then(|v| v.parse().ok());
    ScanOptions {
        max_crossings,
        kauffman: !no_kauffman,
        budget: budget.or(env_budget).unwrap_or(DEFAULT_NODE_BUDGET),
        threads,
        shared_cache,
    }
}

fn finish_census(
    summary: skein_census::Summary,
    summary_path: Option<PathBuf>,
) -> Result<ExitCode, String> {
    let csv = summary.to_csv();
    if let Some(path) = summary_path {
        std::fs::write(&path, &csv).map_err(|e| e.to_string())?;
    }
    print!("{csv}");
    println!("pf_violations_total={}", summary.total_pf_violations());
    if summary.is_partial() {
        println!(
            "partial: skipped={} parse_errors={}",
            summary.skipped, summary.parse_errors
        );
        return Ok(ExitCode::from(2));
    }
    Ok(ExitCode::SUCCESS)
}

/// The per-diagram invariant suite: skein and Kauffman relations at every
/// crossing, the unit identity, the m-degree window, and mirror behavior.
fn check(input: DiagramInput, common: Common) -> Result<ExitCode, String> {
    use num_rational::BigRational;
    use num_traits::One;

    let d = input.parse()?;
    let opts = common.skein_options();
    let mut failures = 0;
    let mut report = |name: &str, pass: bool| {
        println!("{}: {}", name, if pass { "PASS" } else { "FAIL" });
        if !pass {
            failures += 1;
        }
    };

    let p = homfly_with(&d, &opts).map_err(|e| e.to_string())?;

    let mut skein_ok = true;
    let mut kauffman_ok = true;
    for x in 0..d.crossing_count() {
        let (sw, sm) = skein_triple(&d, x).map_err(|e| e.to_string())?;
        let psw = homfly_with(&sw, &opts).map_err(|e| e.to_string())?;
        let psm = homfly_with(&sm, &opts).map_err(|e| e.to_string())?;
        let (pos, neg) = match d.crossings()[x].sign {
            skein_core::diagram::Sign::Pos => (&p, &psw),
            skein_core::diagram::Sign::Neg => (&psw, &p),
        };
        let lhs = &(&pos.shift(-1, 0) + &neg.shift(1, 0)) + &psm.shift(0, 1);
        skein_ok &= lhs.is_zero();

        let (ksw, ka, kb) = kauffman_quad(&d, x).map_err(|e| e.to_string())?;
        let l = lambda_with(&d, &opts).map_err(|e| e.to_string())?;
        let lhs = &l + &lambda_with(&ksw, &opts).map_err(|e| e.to_string())?;
        let rhs = (&lambda_with(&ka, &opts).map_err(|e| e.to_string())?
            + &lambda_with(&kb, &opts).map_err(|e| e.to_string())?)
            .shift(0, 1);
        kauffman_ok &= lhs == rhs;
    }
    report("skein relation at every crossing", skein_ok);
    report("kauffman relation at every crossing", kauffman_ok);

    if d.is_knot() {
        let mut identity_ok = true;
        for l0 in [
            BigRational::from_integer(2.into()),
            BigRational::from_integer(3.into()),
            BigRational::new((-5).into(), 2.into()),
        ] {
            let m0 = -(&l0 + l0.recip());
            identity_ok &= p.eval_rational(&l0, &m0).map_err(|e| e.to_string())?
                == BigRational::one();
        }
        report("P(l, -l-l^-1) = 1 at 3 sample points", identity_ok);

        let g = seifert(&d).genus;
        let dm = p.degrees(Var::Second).map_err(|e| e.to_string())?;
        report(
            "m-degrees within [0, 2 g(D)]",
            dm.min >= 0 && i64::from(dm.max) <= 2 * g,
        );
    }

    let pm = homfly_with(&d.mirror(), &opts).map_err(|e| e.to_string())?;
    report("P(mirror) = conjugate_l(P)", pm == p.conjugate_l());
    let f = kauffman_with(&d, &opts).map_err(|e| e.to_string())?;
    let fm = kauffman_with(&d.mirror(), &opts).map_err(|e| e.to_string())?;
    report("F(mirror) = conjugate_a(F)", fm == f.conjugate_var(Var::First));

    Ok(if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
