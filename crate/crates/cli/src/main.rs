mod cli;

use std::fs;
use std::process::ExitCode;

use clap::Parser;
use serde_json::{json, Value};

use cli::{Cli, Command, CountArgs, Family, Format, SeriesKind, VerifyArgs};
use scpart::{
    count_table, diagonal_hooks, phi, product_form, psi, sc_from_diagonal, series, Counter,
    DiagonalHookSet, Partition, ProductKind, ScClass, VerifyParams,
};

enum CliError {
    /// Bad input: exit code 2.
    Usage(String),
    /// A verification sweep found a counterexample: exit code 1.
    Failed,
}

impl From<scpart::Error> for CliError {
    fn from(e: scpart::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

type CliResult<T> = Result<T, CliError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Failed) => ExitCode::from(1),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(cli: &Cli) -> CliResult<()> {
    let (name, output, passed) = match &cli.command {
        Command::Map { parts, diagonal } => (
            "map",
            map(cli, parts.as_deref(), diagonal.as_deref())?,
            true,
        ),
        Command::Inverse { m, mu } => ("inverse", inverse(cli, *m, mu)?, true),
        Command::Count(args) => ("count", count(cli, args)?, true),
        Command::Verify(args) => {
            let (value, passed) = verify(cli, args)?;
            ("verify", Output::Json(value), passed)
        }
        Command::Series { kind, t } => ("series", series_cmd(cli, *kind, *t)?, true),
    };
    let text = output.render(cli.format)?;
    print!("{text}");
    if let Some(dir) = &cli.output_dir {
        let path = dir.join(format!("{name}.{}", cli.format.extension()));
        fs::create_dir_all(dir)
            .and_then(|()| fs::write(&path, &text))
            .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))?;
    }
    if passed {
        Ok(())
    } else {
        Err(CliError::Failed)
    }
}

enum Output {
    Json(Value),
    Table(scpart::CountTable),
}

impl Output {
    fn render(&self, format: Format) -> CliResult<String> {
        match (self, format) {
            // serde_json maps keep keys sorted, so output is byte-stable
            (Output::Json(value), Format::Json) => Ok(pretty(value)),
            (Output::Table(table), Format::Json) => Ok(pretty(
                &serde_json::to_value(table).expect("count tables serialize"),
            )),
            (Output::Table(table), Format::Csv) => {
                let mut writer = csv::Writer::from_writer(Vec::new());
                let io = |e: csv::Error| CliError::Usage(e.to_string());
                writer.write_record(["n", "count"]).map_err(io)?;
                for (n, count) in table.rows() {
                    writer
                        .write_record([n.to_string(), count.to_string()])
                        .map_err(io)?;
                }
                let bytes = writer
                    .into_inner()
                    .map_err(|e| CliError::Usage(e.to_string()))?;
                Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
            }
            (Output::Json(_), Format::Csv) => Err(CliError::Usage(
                "csv output is only available for `count`".into(),
            )),
        }
    }
}

fn pretty(value: &Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("json values serialize");
    text.push('\n');
    text
}

fn parse_partition(text: &str) -> CliResult<Partition> {
    Ok(text.parse::<Partition>()?)
}

fn show(cli: &Cli, label: &str, p: &Partition) {
    if cli.verbose {
        eprintln!("{label} = ({p})\n{}", p.diagram());
    }
}

fn map(cli: &Cli, parts: Option<&str>, diagonal: Option<&str>) -> CliResult<Output> {
    let lambda = match (parts, diagonal) {
        (_, Some(d)) => sc_from_diagonal(&d.parse::<DiagonalHookSet>()?),
        (Some(p), None) => parse_partition(p)?,
        (None, None) => unreachable!("clap requires one of the inputs"),
    };
    let diagonal = diagonal_hooks(&lambda)?;
    let (class, mu) = phi(&lambda)?;
    show(cli, "lambda", &lambda);
    show(cli, "mu", &mu);
    let triangular = class.triangular();
    Ok(Output::Json(json!({
        "lambda": lambda,
        "diagonal": diagonal,
        "m": class.m(),
        "mu": mu,
        "weight_check": {
            "lambda_weight": lambda.weight(),
            "mu_weight": mu.weight(),
            "triangular": triangular,
            "holds": lambda.weight() == 4 * mu.weight() + triangular,
        },
    })))
}

fn inverse(cli: &Cli, m: usize, mu: &str) -> CliResult<Output> {
    let mu = parse_partition(mu)?;
    let lambda = psi(ScClass(m), &mu);
    show(cli, "mu", &mu);
    show(cli, "lambda", &lambda);
    Ok(Output::Json(json!({
        "m": m,
        "mu": mu,
        "lambda": lambda,
        "diagonal": diagonal_hooks(&lambda)?,
        "weight": lambda.weight(),
    })))
}

fn count(cli: &Cli, args: &CountArgs) -> CliResult<Output> {
    let max = cli.max.unwrap_or(10);
    let counter = match args.family {
        Family::P => Counter::Partitions,
        Family::Sc => Counter::SelfConjugate,
        Family::ScClass => Counter::ScClass {
            m: need(args.m, "--m")?,
        },
        Family::Core => Counter::Core {
            t: need(args.t, "--t")?,
        },
        Family::ScCore => Counter::ScCore {
            t: need(args.t, "--t")?,
        },
        Family::Sim => Counter::Simultaneous {
            moduli: args.ts.clone(),
        },
        Family::ScSim => match args.m {
            Some(m) => Counter::ScSimultaneousClass {
                moduli: args.ts.clone(),
                m,
            },
            None => Counter::ScSimultaneous {
                moduli: args.ts.clone(),
            },
        },
    };
    Ok(Output::Table(count_table(&counter, max)?))
}

fn need<T>(value: Option<T>, flag: &str) -> CliResult<T> {
    value.ok_or_else(|| CliError::Usage(format!("{flag} is required for this family")))
}

fn verify(cli: &Cli, args: &VerifyArgs) -> CliResult<(Value, bool)> {
    let defaults = VerifyParams::default();
    let params = VerifyParams {
        max_weight: args.max_weight.unwrap_or(defaults.max_weight),
        max_ordinary_weight: args
            .max_ordinary_weight
            .unwrap_or(defaults.max_ordinary_weight),
        max_mu_weight: args.max_mu_weight.unwrap_or(defaults.max_mu_weight),
        max_class: args.max_class.unwrap_or(defaults.max_class),
        max_index: args.max_index.unwrap_or(defaults.max_index),
        order: cli.order.unwrap_or(defaults.order),
        seed: cli.seed.unwrap_or(defaults.seed),
    };
    let mut reports = match args.id {
        Some(id) => vec![scpart::run(id, &params)?],
        None => scpart::run_all(&params)?,
    };
    if !args.timing {
        for report in &mut reports {
            report.elapsed_ms = None;
        }
    }
    for report in reports.iter().filter(|r| !r.passed) {
        eprintln!("FAIL {}: {}", report.id, report.description);
    }
    let passed = reports.iter().all(|r| r.passed);
    let value = if args.all {
        json!({ "passed": passed, "reports": reports })
    } else {
        serde_json::to_value(&reports[0]).expect("reports serialize")
    };
    Ok((value, passed))
}

fn series_cmd(cli: &Cli, kind: SeriesKind, t: Option<usize>) -> CliResult<Output> {
    let order = cli.order.unwrap_or(40);
    let need_t = || need(t, "--t");
    let series = match kind {
        SeriesKind::Core => product_form(ProductKind::CoreGf { t: need_t()? }, order)?,
        SeriesKind::Sc2t => product_form(ProductKind::Sc2tGf { t: need_t()? }, order)?,
        SeriesKind::Gauss => product_form(ProductKind::GaussRhs, order)?,
        SeriesKind::Triangular => series::triangular_series(order),
    };
    Ok(Output::Json(
        serde_json::to_value(&series).expect("series serialize"),
    ))
}
