use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use tableau_lab::bijection::{enumerate_m_blocks, forward_base, forward_skew, inverse_base, inverse_skew};
use tableau_lab::enumeration::{
    count_colored_noncrossing, count_perm_class, enumerate_ssyt, kostka, rect_catalan, EnumError, PermClass,
    DEFAULT_MAX_M,
};
use tableau_lab::perm::rsk;
use tableau_lab::tableau::expand_skew_weight;
use tableau_lab::{BijectionError, BijectionParams, Diagram, Permutation, RectShape};
use tableau_lab_cli::report::{to_csv, to_json};
use tableau_lab_cli::verify::exit_code;
use tableau_lab_cli::{exit, parse_params, parse_tableau_file, run_verify, Claim, Grid, InputError};

const CAP_ENV: &str = "TABLEAU_LAB_MAX_M";

#[derive(Parser)]
#[command(name = "tableau-lab", version, about = "Skewed Kostka numbers, LIS-constrained permutations and the bijections between them")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count semistandard tableaux of the w x n rectangle with content mu^{n,k}_a.
    Kostka {
        #[arg(long)]
        width: usize,
        #[arg(long)]
        height: usize,
        #[arg(long, allow_hyphen_values = true, default_value_t = 0)]
        k: i64,
        /// Repetition count of the skew weight; defaults to width - 1.
        #[arg(long)]
        a: Option<usize>,
        /// Print every tableau as a JSON line before the count.
        #[arg(long)]
        emit_tableaux: bool,
    },
    /// Count permutations of S_m in a class by brute force.
    CountPerms {
        /// lis-at-most, lis-prefix, block-head or disjoint-lis.
        #[arg(long)]
        class: PermClass,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        w: usize,
        /// Number of blocks, for block-head and disjoint-lis.
        #[arg(long)]
        k: Option<usize>,
        /// Largest m to brute-force (overrides TABLEAU_LAB_MAX_M).
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Count set partitions of 1..=n with r-colored arcs and no monochromatic crossing.
    Nc2 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        colors: u32,
    },
    /// Rectangular Catalan number A_{n,m}.
    CatalanRect {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// Map between rectangular tableaux and permutations.
    Biject {
        #[command(subcommand)]
        direction: Direction,
    },
    /// Compare both sides of an identity over a parameter grid.
    Verify {
        #[arg(long)]
        claim: Claim,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        max_m: Option<usize>,
        /// Widths to scan, comma separated.
        #[arg(long, value_delimiter = ',')]
        w: Option<Vec<usize>>,
        /// Scan k in -max_k..=max_k, k != 0.
        #[arg(long)]
        max_k: Option<usize>,
        /// Partition size bound for `hook`, n*m bound for `rect-catalan`.
        #[arg(long)]
        max_cells: Option<usize>,
        /// Largest m for the pointwise block-head / disjoint-lis comparison.
        #[arg(long)]
        pointwise_max_m: Option<usize>,
        /// Largest m to brute-force (overrides TABLEAU_LAB_MAX_M).
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Leave elapsed times out so output is reproducible.
        #[arg(long)]
        no_timing: bool,
    },
}

#[derive(Subcommand)]
enum Direction {
    /// Rectangle R (and block index) to the pair (P, Q) and its permutation.
    Forward {
        /// w,n,k
        #[arg(long, allow_hyphen_values = true)]
        params: String,
        #[arg(long)]
        input: PathBuf,
        /// Index of the top block M in canonical order.
        #[arg(long)]
        m_index: Option<usize>,
    },
    /// Permutation to the rectangle R and the top block M.
    Inverse {
        /// w,n,k
        #[arg(long, allow_hyphen_values = true)]
        params: String,
        /// One-line notation, space separated.
        #[arg(long)]
        perm: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl ToString) -> Self {
        Failure {
            code,
            message: message.to_string(),
        }
    }

    fn usage(message: impl ToString) -> Self {
        Failure::new(exit::USAGE, message)
    }
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        let code = match e {
            InputError::Params(_) => exit::USAGE,
            _ => exit::DATA,
        };
        Failure::new(code, e)
    }
}

impl From<BijectionError> for Failure {
    fn from(e: BijectionError) -> Self {
        let code = match e {
            BijectionError::Params { .. } => exit::USAGE,
            BijectionError::Step { .. } | BijectionError::ShapeLaw { .. } => exit::MISMATCH,
            _ => exit::MEMBERSHIP,
        };
        Failure::new(code, e)
    }
}

impl From<EnumError> for Failure {
    fn from(e: EnumError) -> Self {
        match e {
            EnumError::OverCap { .. } => Failure::usage(format!("{e}; raise it with --cap or {CAP_ENV}")),
            _ => Failure::usage(e),
        }
    }
}

fn cap(flag: Option<usize>) -> Result<usize, Failure> {
    if let Some(c) = flag {
        return Ok(c);
    }
    match std::env::var(CAP_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::usage(format!("{CAP_ENV}={v:?} is not a non-negative integer"))),
        Err(_) => Ok(DEFAULT_MAX_M),
    }
}

fn rect(width: usize, height: usize) -> Result<Diagram, Failure> {
    Ok(Diagram::rectangle(RectShape::new(width, height).map_err(Failure::usage)?))
}

fn run(cli: Cli) -> Result<i32, Failure> {
    let mut out = std::io::stdout().lock();
    let mut say = |s: String| writeln!(out, "{s}").map_err(|e| Failure::new(exit::DATA, e));
    match cli.command {
        Command::Kostka {
            width,
            height,
            k,
            a,
            emit_tableaux,
        } => {
            let a = a.unwrap_or(width.saturating_sub(1));
            let content = expand_skew_weight(height, k, a).map_err(Failure::usage)?;
            let shape = rect(width, height)?;
            let iter = enumerate_ssyt(&shape, &content)?;
            if emit_tableaux {
                let mut count = 0u64;
                for t in iter {
                    say(t.to_json())?;
                    count += 1;
                }
                say(count.to_string())?;
            } else {
                say(kostka(&shape, &content)?.to_string())?;
            }
        }
        Command::CountPerms { class, m, w, k, cap: c } => {
            let k = match class {
                PermClass::BlockHead | PermClass::DisjointLis => k.ok_or(EnumError::MissingK(class))?,
                _ => k.unwrap_or(0),
            };
            say(count_perm_class(class, m, w, k, cap(c)?)?.to_string())?;
        }
        Command::Nc2 { n, colors } => say(count_colored_noncrossing(n, colors).to_string())?,
        Command::CatalanRect { n, m } => {
            if n == 0 || m == 0 {
                return Err(Failure::usage("A_{n,m} needs n, m >= 1"));
            }
            say(rect_catalan(n, m).to_string())?;
        }
        Command::Biject { direction } => match direction {
            Direction::Forward { params, input, m_index } => {
                let (w, n, k) = parse_params(&params)?;
                let p = BijectionParams::new(w, n, k)?;
                let r = parse_tableau_file(&input)?;
                let pair = if k == 0 {
                    if m_index.is_some() {
                        eprintln!("note: k = 0 has no top block; --m-index ignored, using the base bijection");
                    }
                    forward_base(&r, w, n)?
                } else {
                    let blocks = enumerate_m_blocks(k, w)?;
                    let i = m_index.unwrap_or(0);
                    let block = blocks.get(i).ok_or_else(|| {
                        Failure::usage(format!("--m-index {i} out of range; there are {} blocks", blocks.len()))
                    })?;
                    forward_skew(&r, &p, block)?
                };
                let sigma = tableau_lab::perm::rsk_inverse(&pair).map_err(BijectionError::from)?;
                say(json!({ "P": pair.p, "Q": pair.q, "sigma": sigma }).to_string())?;
            }
            Direction::Inverse { params, perm } => {
                let (w, n, k) = parse_params(&params)?;
                let p = BijectionParams::new(w, n, k)?;
                let sigma: Permutation = perm.parse().map_err(|e| Failure::new(exit::DATA, e))?;
                let pair = rsk(&sigma);
                let (r, m) = if k == 0 {
                    (inverse_base(&pair, w, n)?, None)
                } else {
                    let (r, m) = inverse_skew(&pair, &p)?;
                    (r, Some(m))
                };
                say(json!({ "R": r, "M": m }).to_string())?;
            }
        },
        Command::Verify {
            claim,
            max_n,
            max_m,
            w,
            max_k,
            max_cells,
            pointwise_max_m,
            cap: c,
            format,
            no_timing,
        } => {
            if let Some(ws) = &w {
                if let Some(bad) = ws.iter().find(|&&w| w < 2) {
                    return Err(Failure::usage(format!("--w {bad}: widths must be at least 2")));
                }
            }
            let grid = Grid {
                max_n,
                max_m,
                widths: w,
                max_k,
                max_cells,
                pointwise_max_m,
                cap: cap(c)?,
            };
            let reports = run_verify(claim, &grid);
            let timing = !no_timing;
            match format {
                Format::Csv => {
                    let mut notes: Vec<&str> = reports.iter().filter_map(|r| r.note.as_deref()).collect();
                    notes.dedup();
                    for note in notes {
                        eprintln!("note: {note}");
                    }
                    write!(out, "{}", to_csv(&reports, timing))
                }
                Format::Json => write!(out, "{}", to_json(&reports, timing)),
            }
            .map_err(|e| Failure::new(exit::DATA, e))?;
            return Ok(exit_code(&reports));
        }
    }
    Ok(exit::OK)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { exit::USAGE as u8 } else { exit::OK as u8 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(f) => {
            eprintln!("tableau-lab: {}", f.message);
            ExitCode::from(f.code as u8)
        }
    }
}
