use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use shamrock_core::arith::{formula_for, omega_finite, omega_single, shamrock_ratio_factored};
use shamrock_core::lattice::{Family, Region, RegionSpec};
use shamrock_core::oracle::{count_tilings_with, find_one_tiling_with, OracleConfig};
use shamrock_core::svg::render_svg;
use shamrock_core::verify::{ratio_convergence, run_suite, Suite, VerifyOptions};

/// Lozenge tilings of hexagons with shamrock-shaped holes.
#[derive(Parser)]
#[command(name = "shamrock", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct RegionArgs {
    /// hexagon, shamrock, cored, sc or magnet.
    #[arg(long)]
    family: String,
    /// Comma-separated parameters in the family's order.
    #[arg(long, value_delimiter = ',', required = true)]
    params: Vec<u32>,
}

impl RegionArgs {
    fn spec(&self) -> Result<RegionSpec, String> {
        let family: Family = self.family.parse().map_err(|e: shamrock_core::GeometryError| e.to_string())?;
        RegionSpec::new(family, self.params.clone()).map_err(|e| e.to_string())
    }
}

#[derive(Subcommand)]
enum Command {
    /// Count tilings with the exact counter.
    Count {
        #[command(flatten)]
        region: RegionArgs,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate the closed-form count.
    Formula {
        #[command(flatten)]
        region: RegionArgs,
        #[arg(long)]
        json: bool,
    },
    /// Run a verification suite, printing one JSON line per check.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        /// Regions with more cells than this are skipped.
        #[arg(long)]
        max_cells: Option<usize>,
        /// Perturb every closed form to make sure failures are reported.
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Limiting ratio for the shamrocks S(a,b,c,m) and S(a+b+c,0,0,m).
    Ratio {
        #[arg(long)]
        a: u32,
        #[arg(long)]
        b: u32,
        #[arg(long)]
        c: u32,
        #[arg(long)]
        m: u32,
        /// Also evaluate the finite ratio at this size.
        #[arg(long = "N")]
        n: Option<u32>,
    },
    /// Correlation of a triangular hole of side m.
    Omega {
        #[arg(long)]
        m: u32,
        /// Evaluate inside the cored hexagon with this x instead of the limit.
        #[arg(long)]
        x: Option<u32>,
    },
    /// Write an SVG picture of a region.
    Render {
        #[command(flatten)]
        region: RegionArgs,
        #[arg(long)]
        out: PathBuf,
        /// Overlay one tiling.
        #[arg(long)]
        tiling: bool,
    },
    /// Print a region's cells as JSON.
    Region {
        #[command(flatten)]
        region: RegionArgs,
    },
}

enum Failure {
    /// Bad input: exit code 2.
    Usage(String),
    /// A check failed or the request cannot be met: exit code 1.
    Failed(String),
}

type CmdResult = Result<String, Failure>;

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

fn failed(e: impl ToString) -> Failure {
    Failure::Failed(e.to_string())
}

fn build(region: &RegionArgs) -> Result<(RegionSpec, Region), Failure> {
    let spec = region.spec().map_err(usage)?;
    let built = spec.build().map_err(usage)?;
    Ok((spec, built))
}

#[derive(Serialize)]
struct CountJson<'a> {
    family: &'a str,
    params: &'a [u32],
    count: &'a str,
}

fn count_output(spec: &RegionSpec, count: String, json: bool) -> String {
    if json {
        let record = CountJson { family: spec.family.name(), params: &spec.params, count: &count };
        serde_json::to_string(&record).expect("plain struct") + "\n"
    } else {
        count + "\n"
    }
}

/// First `digits` significant digits of `v`, truncated rather than rounded.
fn truncate_significant(v: f64, digits: usize) -> String {
    let sci = format!("{:.*e}", digits + 5, v);
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("exponent");
    let digits_str: String = mantissa.chars().filter(char::is_ascii_digit).take(digits).collect();
    if exp < 0 {
        format!("0.{}{}", "0".repeat((-exp - 1) as usize), digits_str)
    } else {
        let split = (exp as usize + 1).min(digits_str.len());
        let (int, frac) = digits_str.split_at(split);
        let int = format!("{int}{}", "0".repeat(exp as usize + 1 - split));
        if frac.is_empty() {
            format!("{int}.0")
        } else {
            format!("{int}.{frac}")
        }
    }
}

fn run(cli: Cli, out: &mut impl Write) -> CmdResult {
    match cli.command {
        Command::Count { region, json } => {
            let (spec, built) = build(&region)?;
            let count = count_tilings_with(&built, &OracleConfig::from_env()).map_err(failed)?;
            Ok(count_output(&spec, count.to_string(), json))
        }
        Command::Formula { region, json } => {
            let spec = region.spec().map_err(usage)?;
            let value = formula_for(&spec).map_err(usage)?;
            Ok(count_output(&spec, value.to_string(), json))
        }
        Command::Verify { suite, max_cells, inject_fault } => {
            let suite: Suite = suite.parse().map_err(usage)?;
            let max_cells = max_cells.unwrap_or_else(|| OracleConfig::from_env().max_cells);
            let opts = VerifyOptions { corrupt_formulas: inject_fault, ..VerifyOptions::with_max_cells(max_cells) };
            let reports = run_suite(suite, &opts);
            for r in &reports {
                writeln!(out, "{}", r.to_json_line()).map_err(failed)?;
            }
            let fails = reports.iter().filter(|r| r.is_fail()).count();
            if fails > 0 {
                return Err(failed(format!("{fails} of {} checks failed", reports.len())));
            }
            Ok(String::new())
        }
        Command::Ratio { a, b, c, m, n } => {
            let (left, right) = shamrock_ratio_factored(a, b, c, m);
            let product = &left * &right;
            let mut s = format!("{product} = P({a},{b},{m})*P({},{c},{m})\n", a + b);
            if let Some(n) = n {
                let p = ratio_convergence(a, b, c, m, &[n])[0];
                s += &format!("N={n}: {} (relative distance {:.3e})\n", truncate_significant(p.value, 12), p.rel_error);
            }
            Ok(s)
        }
        Command::Omega { m, x } => {
            if m == 0 {
                // No hole: the ratio is exactly one for every x.
                return Ok("1.0\n".to_string());
            }
            let v = match x {
                Some(x) => omega_finite(m, x),
                None => omega_single(m),
            };
            Ok(truncate_significant(v, 12) + "\n")
        }
        Command::Render { region, out: path, tiling } => {
            let (_, built) = build(&region)?;
            let overlay = if tiling {
                match find_one_tiling_with(&built, &OracleConfig::from_env()).map_err(failed)? {
                    Some(t) => Some(t),
                    None => return Err(failed("region has no tilings")),
                }
            } else {
                None
            };
            std::fs::write(&path, render_svg(&built, overlay.as_ref())).map_err(failed)?;
            Ok(String::new())
        }
        Command::Region { region } => {
            let (_, built) = build(&region)?;
            Ok(serde_json::to_string(&built).map_err(failed)? + "\n")
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    match run(cli, &mut lock) {
        Ok(s) => {
            let _ = lock.write_all(s.as_bytes());
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Failed(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::truncate_significant;

    #[test]
    fn truncation() {
        assert_eq!(truncate_significant(3f64.sqrt() / (2.0 * std::f64::consts::PI), 12), "0.275664447710");
        assert_eq!(truncate_significant(1.0, 12), "1.00000000000");
        assert_eq!(truncate_significant(40.0427807486, 6), "40.0427");
        assert_eq!(truncate_significant(0.00123456789, 3), "0.00123");
    }
}
