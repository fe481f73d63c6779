//! Parameter sweeps, figure data and single-point reports behind the
//! `hawking-distill` binary.
//!
//! Every number written here comes straight from a library call; this module
//! only lays out grids and formats results.

use std::fmt::{self, Write as _};
use std::io::Write;
use std::str::FromStr;

use rayon::prelude::*;

use crate::analysis::{
    alice_rob_state, log_negativity, pt_eigs_generic, pt_eigs_maximal, pt_spectrum_numeric,
    threshold_closed_form, threshold_root_find,
};
use crate::channel::{coefficients, HawkingParams};
use crate::error::{Error, Result};
use crate::states::{WernerParams, MAXIMAL_ALPHA};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Param {
    Weight,
    Alpha,
    Omega,
    Temperature,
    Mass,
}

impl Param {
    pub fn column(self) -> &'static str {
        match self {
            Param::Weight => "F",
            Param::Alpha => "alpha",
            Param::Omega => "omega",
            Param::Temperature => "T",
            Param::Mass => "M",
        }
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.column())
    }
}

impl FromStr for Param {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "F" | "weight" => Ok(Param::Weight),
            "alpha" => Ok(Param::Alpha),
            "omega" => Ok(Param::Omega),
            "T" | "temperature" => Ok(Param::Temperature),
            "M" | "mass" => Ok(Param::Mass),
            _ => Err(Error::InvalidArgument(format!(
                "unknown parameter `{s}` (expected F, alpha, omega, T or M)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Output {
    Tau,
    Negativity,
    PtEigenvalues,
    Entangled,
}

impl FromStr for Output {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tau" => Ok(Output::Tau),
            "negativity" => Ok(Output::Negativity),
            "pt-eigenvalues" => Ok(Output::PtEigenvalues),
            "entangled" => Ok(Output::Entangled),
            _ => Err(Error::InvalidArgument(format!(
                "unknown output `{s}` (expected tau, negativity, pt-eigenvalues or entangled)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Spacing {
    #[default]
    Linear,
    Log,
}

/// `count` points from `start` to `stop` inclusive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxisRange {
    pub start: f64,
    pub stop: f64,
    pub count: usize,
    pub spacing: Spacing,
}

impl AxisRange {
    pub fn new(start: f64, stop: f64, count: usize, spacing: Spacing) -> Result<Self> {
        if count < 2 {
            return Err(Error::InvalidArgument(format!(
                "grid needs at least 2 points, got {count}"
            )));
        }
        if !(start.is_finite() && stop.is_finite() && start < stop) {
            return Err(Error::InvalidArgument(format!(
                "grid needs finite start < stop, got {start}:{stop}"
            )));
        }
        if spacing == Spacing::Log && start <= 0.0 {
            return Err(Error::InvalidArgument(format!(
                "log grid needs a positive start, got {start}"
            )));
        }
        Ok(Self {
            start,
            stop,
            count,
            spacing,
        })
    }

    pub fn values(&self) -> Vec<f64> {
        let last = (self.count - 1) as f64;
        (0..self.count)
            .map(|i| {
                if i == 0 {
                    return self.start;
                }
                if i == self.count - 1 {
                    return self.stop;
                }
                let t = i as f64 / last;
                match self.spacing {
                    Spacing::Linear => self.start + (self.stop - self.start) * t,
                    Spacing::Log => {
                        let (a, b) = (self.start.ln(), self.stop.ln());
                        (a + (b - a) * t).exp()
                    }
                }
            })
            .collect()
    }
}

/// Parses `start:stop:count[:log|:lin]`.
impl FromStr for AxisRange {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad =
            || Error::InvalidArgument(format!("bad grid `{s}`, expected start:stop:count[:log]"));
        let parts: Vec<&str> = s.split(':').collect();
        if !(3..=4).contains(&parts.len()) {
            return Err(bad());
        }
        let start: f64 = parts[0].trim().parse().map_err(|_| bad())?;
        let stop: f64 = parts[1].trim().parse().map_err(|_| bad())?;
        let count: usize = parts[2].trim().parse().map_err(|_| bad())?;
        let spacing = match parts.get(3).map(|p| p.trim()) {
            None | Some("lin") | Some("linear") => Spacing::Linear,
            Some("log") => Spacing::Log,
            Some(_) => return Err(bad()),
        };
        AxisRange::new(start, stop, count, spacing)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridAxis {
    pub param: Param,
    pub range: AxisRange,
}

/// Parses `name=start:stop:count[:log]`.
impl FromStr for GridAxis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, range) = s.split_once('=').ok_or_else(|| {
            Error::InvalidArgument(format!(
                "bad axis `{s}`, expected name=start:stop:count[:log]"
            ))
        })?;
        Ok(GridAxis {
            param: name.trim().parse()?,
            range: range.parse()?,
        })
    }
}

/// A rectangular grid over one or two parameters, with the rest held fixed.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepGrid {
    axes: Vec<GridAxis>,
    fixed: Vec<(Param, f64)>,
    outputs: Vec<Output>,
}

impl SweepGrid {
    pub fn new(
        axes: Vec<GridAxis>,
        fixed: Vec<(Param, f64)>,
        outputs: Vec<Output>,
    ) -> Result<Self> {
        if axes.is_empty() || axes.len() > 2 {
            return Err(Error::InvalidArgument(format!(
                "a sweep takes 1 or 2 axes, got {}",
                axes.len()
            )));
        }
        if outputs.is_empty() {
            return Err(Error::InvalidArgument("no outputs requested".into()));
        }
        let mut seen: Vec<Param> = Vec::new();
        for p in axes
            .iter()
            .map(|a| a.param)
            .chain(fixed.iter().map(|f| f.0))
        {
            if seen.contains(&p) {
                return Err(Error::InvalidArgument(format!(
                    "parameter `{p}` given twice"
                )));
            }
            seen.push(p);
        }
        let has = |p| seen.contains(&p);
        if has(Param::Temperature) && has(Param::Mass) {
            return Err(Error::InvalidArgument(
                "`T` and `M` are redundant (T = 1/(8πM)); give only one".into(),
            ));
        }
        if !has(Param::Temperature) && !has(Param::Mass) {
            return Err(Error::InvalidArgument("missing `T` (or `M`)".into()));
        }
        if !has(Param::Omega) {
            return Err(Error::InvalidArgument("missing `omega`".into()));
        }
        if !has(Param::Weight) && outputs.iter().any(|&o| o != Output::Tau) {
            return Err(Error::InvalidArgument("missing `F`".into()));
        }
        let grid = Self {
            axes,
            fixed,
            outputs,
        };
        // Reject bad fixed values (and bad axis endpoints) up front.
        for point in [grid.corner(false), grid.corner(true)] {
            grid.point_params(&point)?;
        }
        Ok(grid)
    }

    pub fn axes(&self) -> &[GridAxis] {
        &self.axes
    }

    pub fn outputs(&self) -> &[Output] {
        &self.outputs
    }

    fn corner(&self, high: bool) -> Vec<f64> {
        self.axes
            .iter()
            .map(|a| if high { a.range.stop } else { a.range.start })
            .collect()
    }

    fn lookup(&self, axis_values: &[f64], param: Param) -> Option<f64> {
        self.axes
            .iter()
            .zip(axis_values)
            .find(|(a, _)| a.param == param)
            .map(|(_, &v)| v)
            .or_else(|| self.fixed.iter().find(|f| f.0 == param).map(|f| f.1))
    }

    fn point_params(&self, axis_values: &[f64]) -> Result<(Option<WernerParams>, HawkingParams)> {
        let get = |p| self.lookup(axis_values, p);
        let omega = get(Param::Omega).expect("checked in new");
        let hawking = match get(Param::Mass) {
            Some(m) => HawkingParams::from_mass(omega, m)?,
            None => HawkingParams::new(omega, get(Param::Temperature).expect("checked in new"))?,
        };
        let alpha = get(Param::Alpha).unwrap_or(MAXIMAL_ALPHA);
        let werner = get(Param::Weight)
            .map(|f| WernerParams::new(f, alpha))
            .transpose()?;
        Ok((werner, hawking))
    }

    pub fn header(&self) -> Vec<String> {
        let mut h: Vec<String> = self
            .axes
            .iter()
            .map(|a| a.param.column().to_string())
            .collect();
        for o in &self.outputs {
            match o {
                Output::Tau => h.push("tau".into()),
                Output::Negativity => h.push("negativity".into()),
                Output::PtEigenvalues => h.extend((1..=4).map(|k| format!("lambda{k}"))),
                Output::Entangled => h.push("entangled".into()),
            }
        }
        h
    }

    /// Grid points in row-major order (first axis slowest).
    pub fn points(&self) -> Vec<Vec<f64>> {
        let mut points = vec![Vec::new()];
        for axis in &self.axes {
            let values = axis.range.values();
            points = points
                .into_iter()
                .flat_map(|p| {
                    values.iter().map(move |&v| {
                        let mut q = p.clone();
                        q.push(v);
                        q
                    })
                })
                .collect();
        }
        points
    }

    fn evaluate_point(&self, axis_values: &[f64]) -> Result<Vec<Cell>> {
        let (werner, hawking) = self.point_params(axis_values)?;
        let mut row: Vec<Cell> = axis_values.iter().map(|&v| Cell::Num(v)).collect();
        let spectrum = match werner {
            Some(w) if self.outputs.iter().any(|&o| o != Output::Tau) => {
                Some(pt_spectrum_numeric(&alice_rob_state(&w, &hawking)?)?)
            }
            _ => None,
        };
        for o in &self.outputs {
            match o {
                Output::Tau => row.push(Cell::Num(threshold_closed_form(&hawking).tau)),
                Output::Negativity => {
                    let w = werner.expect("checked in new");
                    row.push(Cell::Num(log_negativity(&alice_rob_state(&w, &hawking)?)?));
                }
                Output::PtEigenvalues => {
                    let s = spectrum.expect("computed above");
                    row.extend(s.eigenvalues.iter().map(|&l| Cell::Num(l)));
                }
                Output::Entangled => {
                    row.push(Cell::Flag(spectrum.expect("computed above").entangled))
                }
            }
        }
        Ok(row)
    }

    /// Evaluates every point, in parallel, keeping grid order.
    pub fn evaluate(&self) -> Result<Table> {
        let rows = self
            .points()
            .par_iter()
            .map(|p| self.evaluate_point(p))
            .collect::<Result<Vec<_>>>()?;
        Ok(Table {
            header: self.header(),
            rows,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Cell {
    Num(f64),
    Flag(bool),
}

impl Cell {
    pub fn as_f64(&self) -> Option<f64> {
        match *self {
            Cell::Num(x) => Some(x),
            Cell::Flag(_) => None,
        }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Cell::Num(x) => f.write_str(&format_sci(x)),
            Cell::Flag(b) => write!(f, "{b}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn column(&self, name: &str) -> Option<Vec<Cell>> {
        let idx = self.header.iter().position(|h| h == name)?;
        Some(self.rows.iter().map(|r| r[idx]).collect())
    }

    pub fn write_csv<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        out.write_all(self.to_csv().as_bytes())
    }

    /// Header row plus one line per row, LF-terminated.
    pub fn to_csv(&self) -> String {
        let mut s = self.header.join(",");
        s.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Cell::to_string).collect();
            s.push_str(&cells.join(","));
            s.push('\n');
        }
        s
    }
}

/// C-style `%.12e`: `1.234567890123e-05`.
pub fn format_sci(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let s = format!("{x:.12e}");
    let (mantissa, exp) = s.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    let sign = if exp < 0 { '-' } else { '+' };
    format!("{mantissa}e{sign}{:02}", exp.abs())
}

pub const FIG1_GRID: &str = "1e-6:1e6:121:log";
pub const FIG2_GRID: &str = "1e-6:1e6:121:log";
pub const FIG3_WEIGHT_GRID: &str = "0:1:101";
pub const FIG3_ALPHA_GRID: &str = "0.01:0.99:99";

/// `τ` against `T` at fixed `ω`; columns `T,tau`.
pub fn fig1(grid: AxisRange, omega: f64) -> Result<Table> {
    SweepGrid::new(
        vec![GridAxis {
            param: Param::Temperature,
            range: grid,
        }],
        vec![(Param::Omega, omega)],
        vec![Output::Tau],
    )?
    .evaluate()
}

/// `τ` against `ω` at fixed `T`; columns `omega,tau`.
pub fn fig2(grid: AxisRange, temperature: f64) -> Result<Table> {
    SweepGrid::new(
        vec![GridAxis {
            param: Param::Omega,
            range: grid,
        }],
        vec![(Param::Temperature, temperature)],
        vec![Output::Tau],
    )?
    .evaluate()
}

/// Logarithmic negativity over `(F, α)`; columns `F,alpha,negativity`.
pub fn fig3(weights: AxisRange, alphas: AxisRange, omega: f64, temperature: f64) -> Result<Table> {
    SweepGrid::new(
        vec![
            GridAxis {
                param: Param::Weight,
                range: weights,
            },
            GridAxis {
                param: Param::Alpha,
                range: alphas,
            },
        ],
        vec![(Param::Omega, omega), (Param::Temperature, temperature)],
        vec![Output::Negativity],
    )?
    .evaluate()
}

/// Everything known about one parameter point.
#[derive(Debug, Clone)]
pub struct PointReport {
    pub werner: WernerParams,
    pub hawking: HawkingParams,
    pub text: String,
    pub entangled: bool,
    pub log_negativity: f64,
    pub tau: f64,
}

pub fn point_report(werner: WernerParams, hawking: HawkingParams) -> Result<PointReport> {
    let rho = alice_rob_state(&werner, &hawking)?;
    let numeric = pt_spectrum_numeric(&rho)?;
    let generic = pt_eigs_generic(&werner, &hawking)?;
    let negativity = log_negativity(&rho)?;
    let closed = threshold_closed_form(&hawking);
    let root = threshold_root_find(werner.alpha(), &hawking)?;
    let c = coefficients(&hawking);

    let mut t = String::new();
    let fmt4 = |v: &[f64]| {
        v.iter()
            .map(|&x| format_sci(x))
            .collect::<Vec<_>>()
            .join("  ")
    };
    let mut sorted_generic = generic;
    sorted_generic.sort_by(f64::total_cmp);

    // Writing to a String cannot fail.
    let _ = writeln!(t, "F       = {}", format_sci(werner.weight()));
    let _ = writeln!(t, "alpha   = {}", format_sci(werner.alpha()));
    let _ = writeln!(t, "omega   = {}", format_sci(hawking.omega()));
    let _ = writeln!(t, "T       = {}", format_sci(hawking.temperature()));
    if let Some(m) = hawking.mass() {
        let _ = writeln!(t, "M       = {}", format_sci(m));
    }
    let _ = writeln!(t, "cos r   = {}", format_sci(c.cos_r));
    let _ = writeln!(t, "sin r   = {}", format_sci(c.sin_r));
    let _ = writeln!(t);
    let _ = writeln!(
        t,
        "rho_AI (basis |00>, |01>, |10>, |11> of Alice, region I):"
    );
    for i in 0..4 {
        let row: Vec<f64> = (0..4).map(|j| rho.get(i, j).re).collect();
        let _ = writeln!(t, "  {}", fmt4(&row));
    }
    let _ = writeln!(t);
    let _ = writeln!(
        t,
        "PT eigenvalues, numeric:      {}",
        fmt4(&numeric.eigenvalues)
    );
    let _ = writeln!(t, "PT eigenvalues, closed form:  {}", fmt4(&sorted_generic));
    if werner.alpha() == MAXIMAL_ALPHA {
        let mut maximal = pt_eigs_maximal(werner.weight(), &hawking)?;
        maximal.sort_by(f64::total_cmp);
        let _ = writeln!(t, "PT eigenvalues, maximal form: {}", fmt4(&maximal));
    }
    let _ = writeln!(
        t,
        "log negativity:               {}",
        format_sci(negativity)
    );
    let _ = writeln!(
        t,
        "threshold tau, closed form:   {}",
        format_sci(closed.tau)
    );
    let _ = writeln!(t, "threshold tau, bisection:     {}", format_sci(root.tau));
    let verdict = if numeric.entangled {
        "entangled (distillable)"
    } else {
        "separable"
    };
    let _ = writeln!(t, "verdict: {verdict}");

    Ok(PointReport {
        werner,
        hawking,
        text: t,
        entangled: numeric.entangled,
        log_negativity: negativity,
        tau: closed.tau,
    })
}
