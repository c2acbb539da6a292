use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use fusion_weights::catalog::{emit_table, render_table, CatalogSystem, Format, GoldenTable, TABLE_PRIMES};
use fusion_weights::fusion::GroupSystem;
use fusion_weights::group::input::GroupSpec;
use fusion_weights::verify::{parse_checks, verify_group};
use fusion_weights::weights::{catalog_report, WeightReport};
use fusion_weights::Error;

const EXIT_FAIL: u8 = 2;
const EXIT_INPUT: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "fweights", version, about = "Weight and character counts of saturated fusion systems")]
struct Cli {
    #[command(flatten)]
    opts: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GlobalOpts {
    /// Output format: json, csv or md
    #[arg(long, global = true, default_value = "json", value_parser = ["json", "csv", "md"])]
    format: String,
    /// Write the report here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Largest group order accepted when building an input group
    #[arg(long, global = true, default_value_t = 100_000, value_parser = clap::value_parser!(u64).range(1..))]
    cap_group_order: u64,
    /// Largest |S| for which subgroups of S are enumerated
    #[arg(long, global = true, default_value_t = 256, value_parser = clap::value_parser!(u64).range(1..))]
    cap_subgroups: u64,
    /// Accepted for compatibility; every algorithm is deterministic
    #[arg(long, global = true)]
    seedless: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Report for one catalog system on p^{1+2}_+
    Rv {
        #[arg(long)]
        system: String,
        #[arg(long)]
        prime: u32,
    },
    /// Recompute the table of m(F,0,2), m(F,0,3), w(F,0) and diff it against the golden values
    RvTable {
        /// Comma-separated primes from 3, 5, 7, 13
        #[arg(long, value_delimiter = ',', default_values_t = TABLE_PRIMES.to_vec())]
        primes: Vec<u32>,
    },
    /// Verification checks on the fusion system of a group given as JSON
    Group {
        file: PathBuf,
        #[arg(long)]
        prime: u64,
        /// Comma-separated: main2, section5, appendix, reindex, conjectures, m-vs-mstar
        #[arg(long, default_value = "main2,section5,appendix,reindex,conjectures,m-vs-mstar")]
        checks: String,
    },
}

enum Outcome {
    Pass,
    Fail,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(EXIT_FAIL),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    let format: Format = cli.opts.format.parse()?;
    let (text, outcome) = match &cli.command {
        Command::Rv { system, prime } => {
            let f = CatalogSystem::lookup(system, *prime)?;
            let r = catalog_report(&f)?;
            for finding in &r.findings {
                eprintln!("finding: {} ({} vs {})", finding.name, finding.lhs, finding.rhs);
            }
            let ok = r.checks_pass() && r.conjectures_pass();
            (render_report(&r, format)?, verdict(ok))
        }
        Command::RvTable { primes } => {
            let golden = GoldenTable::load()?;
            let t = emit_table(&golden, primes)?;
            for d in &t.diffs {
                eprintln!(
                    "diff: {} p={} {}: golden {} = {}, computed {}",
                    d.system, d.p, d.column, d.golden, d.expected, d.computed
                );
                for line in &d.trace {
                    eprintln!("  {line}");
                }
            }
            (render_table(&t, format)?, verdict(t.diffs.is_empty()))
        }
        Command::Group { file, prime, checks } => {
            let checks = parse_checks(checks)?;
            let text = std::fs::read_to_string(file).map_err(|e| Error::Input(format!("{}: {e}", file.display())))?;
            let g = GroupSpec::from_json(&text)?.build(cli.opts.cap_group_order as usize)?;
            let f = GroupSystem::from_group(label_of(file), g, *prime)?;
            let cap = cli.opts.cap_subgroups as usize;
            if f.s.order() > cap {
                return Err(Error::SubgroupCap { order: f.s.order(), cap });
            }
            let v = verify_group(&f, &checks, cap)?;
            for finding in &v.findings {
                eprintln!("finding: {} ({} vs {})", finding.name, finding.lhs, finding.rhs);
            }
            let rows: Vec<(String, String)> = std::iter::once(("k".to_string(), v.report.k.to_string()))
                .chain(std::iter::once(("m_star".to_string(), v.report.m_star.to_string())))
                .chain(checks.iter().map(|c| {
                    let r = &v.checks[c.as_str()];
                    (c.as_str().to_string(), pass_word(r.pass).to_string())
                }))
                .collect();
            let text = match format {
                Format::Json => to_json(&v)?,
                _ => render_rows(&rows, format)?,
            };
            (text, verdict(v.pass))
        }
    };
    write_output(cli.opts.out.as_deref(), &text)?;
    Ok(outcome)
}

fn verdict(ok: bool) -> Outcome {
    if ok {
        Outcome::Pass
    } else {
        Outcome::Fail
    }
}

fn pass_word(p: Option<bool>) -> &'static str {
    match p {
        Some(true) => "pass",
        Some(false) => "FAIL",
        None => "info",
    }
}

fn label_of(path: &Path) -> String {
    path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| "group".into())
}

fn to_json<T: Serialize>(v: &T) -> Result<String, Error> {
    serde_json::to_string_pretty(v).map(|s| s + "\n").map_err(|e| Error::Input(e.to_string()))
}

fn render_report(r: &WeightReport, format: Format) -> Result<String, Error> {
    if format == Format::Json {
        return to_json(r);
    }
    let opt = |v: Option<i64>| v.map_or("skipped".to_string(), |x| x.to_string());
    let mut rows = vec![
        ("system".to_string(), r.system.clone()),
        ("w".to_string(), r.w.to_string()),
        ("k".to_string(), r.k.to_string()),
        ("m".to_string(), opt(r.m)),
        ("m_star".to_string(), r.m_star.to_string()),
    ];
    if let Some(m) = &r.m_by_defect {
        rows.extend(m.iter().map(|(d, v)| (format!("m(d={d})"), v.to_string())));
    }
    rows.extend(r.checks.iter().map(|c| (c.name.clone(), pass_word(Some(c.pass)).to_string())));
    rows.extend(r.conjectures.iter().map(|(k, v)| {
        let cmp = match (v.lhs, v.rhs) {
            (Some(a), Some(b)) => format!(" ({a} vs {b})"),
            _ => String::new(),
        };
        (k.clone(), format!("{}{cmp}", pass_word(v.pass)))
    }));
    rows.extend(r.findings.iter().map(|f| ("finding".to_string(), format!("{} ({} vs {})", f.name, f.lhs, f.rhs))));
    render_rows(&rows, format)
}

fn render_rows(rows: &[(String, String)], format: Format) -> Result<String, Error> {
    match format {
        Format::Json => to_json(&rows.iter().cloned().collect::<std::collections::BTreeMap<_, _>>()),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let err = |e: csv::Error| Error::Input(e.to_string());
            w.write_record(["quantity", "value"]).map_err(err)?;
            for (k, v) in rows {
                w.write_record([k, v]).map_err(err)?;
            }
            let bytes = w.into_inner().map_err(|e| Error::Input(e.to_string()))?;
            Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
        }
        Format::Md => {
            let mut s = String::from("| quantity | value |\n|---|---|\n");
            for (k, v) in rows {
                s.push_str(&format!("| {k} | {v} |\n"));
            }
            Ok(s)
        }
    }
}

fn write_output(path: Option<&Path>, text: &str) -> Result<(), Error> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Error::Input(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
