use std::process::ExitCode;

use clap::{ArgGroup, CommandFactory, Parser};

use tetrahn::report::{self, Format, Mode, ReportRequest};

/// Exact verification of Harder-Narasimhan filtrations for normal bundles of
/// general tetragonal canonical curves.
#[derive(Parser, Debug)]
#[command(name = "tetrahn", version, about)]
#[command(group(ArgGroup::new("target").required(true).args(["genus", "sweep", "oracle"])))]
struct Cli {
    /// Genus of a single curve
    #[arg(long)]
    genus: Option<i64>,

    /// Inclusive genus range, e.g. 6..100
    #[arg(long, value_name = "LO..HI", value_parser = parse_range, conflicts_with_all = ["genus", "twists", "betti"])]
    sweep: Option<(i64, i64)>,

    /// Scroll twists overriding the balanced ones
    #[arg(long, value_name = "A1,A2,A3", value_parser = parse_triple)]
    twists: Option<[i64; 3]>,

    /// Syzygy invariants overriding the balanced ones
    #[arg(long, value_name = "B1,B2", value_parser = parse_pair)]
    betti: Option<[i64; 2]>,

    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Print verdicts only (with --genus) instead of the full report
    #[arg(long)]
    verify: bool,

    /// Run N randomized oracle cross-checks
    #[arg(long, value_name = "N", conflicts_with_all = ["genus", "sweep", "twists", "betti", "verify"])]
    oracle: Option<u64>,

    /// Seed for --oracle
    #[arg(long, value_name = "S", default_value_t = 42)]
    seed: u64,

    /// Test hook: add DELTA to every quotient degree before verification
    #[arg(long, value_name = "DELTA", hide = true, allow_hyphen_values = true)]
    corrupt_quotient_degree: Option<i64>,
}

fn parse_range(s: &str) -> Result<(i64, i64), String> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| format!("expected LO..HI, got {s:?}"))?;
    let lo = lo.trim().parse().map_err(|e| format!("bad lower bound: {e}"))?;
    let hi = hi.trim().parse().map_err(|e| format!("bad upper bound: {e}"))?;
    Ok((lo, hi))
}

fn parse_list<const N: usize>(s: &str) -> Result<[i64; N], String> {
    let parts = s
        .split(',')
        .map(|p| p.trim().parse::<i64>().map_err(|e| format!("{p:?}: {e}")))
        .collect::<Result<Vec<_>, _>>()?;
    parts
        .try_into()
        .map_err(|v: Vec<i64>| format!("expected {N} comma-separated integers, got {}", v.len()))
}

fn parse_triple(s: &str) -> Result<[i64; 3], String> {
    parse_list::<3>(s)
}

fn parse_pair(s: &str) -> Result<[i64; 2], String> {
    parse_list::<2>(s)
}

impl Cli {
    fn request(&self) -> ReportRequest {
        let mut req = if let Some(n) = self.oracle {
            ReportRequest::oracle(n, self.seed)
        } else if let Some((lo, hi)) = self.sweep {
            ReportRequest::sweep(lo, hi)
        } else {
            let g = self.genus.expect("required group");
            let mode = if self.verify { Mode::Verify } else { Mode::Report };
            ReportRequest::single(mode, g)
        };
        req.twists = self.twists;
        req.betti = self.betti;
        req.format = self.format;
        req.corrupt_quotient_degree = self.corrupt_quotient_degree;
        req
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let req = cli.request();
    let doc = match report::run(&req) {
        Ok(doc) => doc,
        Err(e) => {
            eprintln!("error: {e}");
            eprintln!();
            eprintln!("{}", Cli::command().render_usage());
            return ExitCode::from(2);
        }
    };
    print!("{}", report::render(&doc, req.format));
    for line in report::failure_lines(&doc) {
        eprintln!("failed: {line}");
    }
    ExitCode::from(doc.exit_code() as u8)
}
