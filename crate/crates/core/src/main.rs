use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use hawking_distill::cli::{
    self, AxisRange, GridAxis, Output, Param, SweepGrid, Table, FIG1_GRID, FIG2_GRID,
    FIG3_ALPHA_GRID, FIG3_WEIGHT_GRID,
};
use hawking_distill::states::MAXIMAL_ALPHA;
use hawking_distill::{HawkingParams, WernerParams};

#[derive(Parser)]
#[command(
    name = "hawking-distill",
    version,
    about = "Werner-state entanglement under the Hawking channel"
)]
struct Opts {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full report for a single parameter point.
    Point(PointArgs),
    /// tau against the Hawking temperature (columns T,tau).
    Fig1 {
        /// Temperature grid, start:stop:count[:log].
        #[arg(long, default_value = FIG1_GRID)]
        grid: AxisRange,
        #[arg(long, default_value_t = 1.0)]
        omega: f64,
        #[command(flatten)]
        out: OutArg,
    },
    /// tau against the mode frequency (columns omega,tau).
    Fig2 {
        /// Frequency grid, start:stop:count[:log].
        #[arg(long, default_value = FIG2_GRID)]
        grid: AxisRange,
        #[arg(long, default_value_t = 1.0)]
        temperature: f64,
        #[command(flatten)]
        out: OutArg,
    },
    /// Logarithmic negativity over (F, alpha) (columns F,alpha,negativity).
    Fig3 {
        /// F grid, start:stop:count[:log].
        #[arg(long = "grid-f", default_value = FIG3_WEIGHT_GRID)]
        grid_f: AxisRange,
        /// alpha grid, start:stop:count[:log].
        #[arg(long = "grid-alpha", default_value = FIG3_ALPHA_GRID)]
        grid_alpha: AxisRange,
        #[arg(long, default_value_t = 1.5)]
        omega: f64,
        #[arg(long, default_value_t = 1.0)]
        temperature: f64,
        #[command(flatten)]
        out: OutArg,
    },
    /// General sweep over one or two parameters.
    Sweep(SweepArgs),
}

#[derive(Args)]
struct OutArg {
    /// Output file (default: standard output).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct PointArgs {
    /// Werner weight F in [0, 1].
    #[arg(short = 'F', long = "weight", allow_negative_numbers = true)]
    weight: f64,
    /// Bell amplitude alpha in (0, 1).
    #[arg(long, default_value_t = MAXIMAL_ALPHA, allow_negative_numbers = true)]
    alpha: f64,
    #[arg(long, allow_negative_numbers = true)]
    omega: f64,
    #[command(flatten)]
    thermal: Thermal,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Thermal {
    /// Hawking temperature T.
    #[arg(long, allow_negative_numbers = true)]
    temperature: Option<f64>,
    /// Black-hole mass M, with T = 1/(8 pi M).
    #[arg(long, allow_negative_numbers = true)]
    mass: Option<f64>,
}

#[derive(Args)]
struct SweepArgs {
    /// Swept axis, name=start:stop:count[:log] with name one of F, alpha, omega, T, M.
    #[arg(long = "grid", required = true)]
    grid: Vec<GridAxis>,
    #[arg(short = 'F', long = "weight")]
    weight: Option<f64>,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    omega: Option<f64>,
    #[arg(long, conflicts_with = "mass")]
    temperature: Option<f64>,
    #[arg(long)]
    mass: Option<f64>,
    /// Comma-separated: tau, negativity, pt-eigenvalues, entangled.
    #[arg(
        long,
        value_delimiter = ',',
        default_value = "tau,negativity,entangled"
    )]
    outputs: Vec<Output>,
    #[command(flatten)]
    out: OutArg,
}

fn hawking(omega: f64, thermal: &Thermal) -> hawking_distill::Result<HawkingParams> {
    match (thermal.temperature, thermal.mass) {
        (Some(t), None) => HawkingParams::new(omega, t),
        (None, Some(m)) => HawkingParams::from_mass(omega, m),
        _ => unreachable!("clap enforces exactly one of --temperature/--mass"),
    }
}

fn emit(table: &Table, out: &OutArg) -> hawking_distill::Result<()> {
    match &out.out {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            table.write_csv(&mut w)?;
            w.flush()?;
        }
        None => {
            let stdout = io::stdout();
            table.write_csv(stdout.lock())?;
        }
    }
    Ok(())
}

fn run(command: Command) -> hawking_distill::Result<()> {
    match command {
        Command::Point(args) => {
            let w = WernerParams::new(args.weight, args.alpha)?;
            let h = hawking(args.omega, &args.thermal)?;
            let report = cli::point_report(w, h)?;
            print!("{}", report.text);
            Ok(())
        }
        Command::Fig1 { grid, omega, out } => emit(&cli::fig1(grid, omega)?, &out),
        Command::Fig2 {
            grid,
            temperature,
            out,
        } => emit(&cli::fig2(grid, temperature)?, &out),
        Command::Fig3 {
            grid_f,
            grid_alpha,
            omega,
            temperature,
            out,
        } => emit(&cli::fig3(grid_f, grid_alpha, omega, temperature)?, &out),
        Command::Sweep(args) => {
            let fixed = [
                (Param::Weight, args.weight),
                (Param::Alpha, args.alpha),
                (Param::Omega, args.omega),
                (Param::Temperature, args.temperature),
                (Param::Mass, args.mass),
            ]
            .into_iter()
            .filter_map(|(p, v)| v.map(|v| (p, v)))
            .collect();
            let grid = SweepGrid::new(args.grid, fixed, args.outputs)?;
            emit(&grid.evaluate()?, &args.out)
        }
    }
}

fn main() -> ExitCode {
    let opts = Opts::parse();
    match run(opts.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_invalid_input() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
