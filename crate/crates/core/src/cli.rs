//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage error, 2 numeric/domain error or failed
//! verification. All math runs in atomic units; `--units si` rescales output.

use std::f64::consts::{PI, TAU};
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nalgebra::Vector3;

use crate::analysis::{compare_with, streamline, Trajectory};
use crate::coords::{SphericalPoint, SphericalVector};
use crate::currents::{dirac_velocity, total_current, velocity, SpinVector};
use crate::eigenstates::{
    cartesian_oscillator_state, DiracHydrogenState, OscillatorNumbers, SchrodingerState, SpinProjection,
};
use crate::error::{Error, Result};
use crate::units::{constants, convert_length, convert_time, convert_velocity, UnitSystem};
use crate::verify::{run_suite, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_NUMERIC: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "qflow",
    version,
    about = "Probability currents and flow lines of hydrogen and the isotropic oscillator"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the physical constant table.
    Constants {
        #[arg(long, default_value = "atomic")]
        units: UnitSystem,
    },
    /// Sample density, current and velocity on a spherical grid (CSV).
    Sample(SampleArgs),
    /// Run the self-checks and print a PASS/FAIL table.
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
    },
    /// Integrate a flow line of v = J / rho with fixed-step RK4 (CSV).
    Streamline(StreamlineArgs),
    /// Compare the Dirac 1s velocity with the Schrodinger + Gordon velocity (CSV).
    Compare(CompareArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SystemArg {
    Hydrogen,
    /// Spherical-basis oscillator, state = n_r,l,m
    Oscillator,
    /// Cartesian-basis oscillator, state = n_x,n_y,n_z
    OscillatorCartesian,
    /// Dirac hydrogen 1s; --spin up/down selects m = +1/2 / -1/2
    Dirac,
}

#[derive(Debug, Args)]
struct StateArgs {
    #[arg(long, value_enum, default_value_t = SystemArg::Hydrogen)]
    system: SystemArg,
    /// Quantum numbers, comma separated.
    #[arg(long, default_value = "1,0,0", allow_hyphen_values = true)]
    state: Triple,
    /// Oscillator angular frequency (atomic units).
    #[arg(long, default_value_t = 1.0)]
    omega: f64,
    /// up | down | none | auto (sign of m) | x,y,z (direction, scaled to hbar/2)
    #[arg(long, default_value = "auto", allow_hyphen_values = true)]
    spin: SpinArg,
}

#[derive(Debug, Args)]
struct SampleArgs {
    #[command(flatten)]
    state: StateArgs,
    /// r=min:max:count,theta=count,phi=count
    #[arg(long, default_value = "r=0.5:5:10,theta=6,phi=4")]
    grid: GridSpec,
    #[arg(long, default_value = "atomic")]
    units: UnitSystem,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct StreamlineArgs {
    #[command(flatten)]
    state: StateArgs,
    /// r,theta,phi in atomic units and radians.
    #[arg(long, default_value = "1,1.5707963267948966,0", allow_hyphen_values = true)]
    start: Triple,
    #[arg(long, default_value_t = 1e-3, value_parser = positive_f64)]
    dt: f64,
    #[arg(long, default_value_t = 1000)]
    steps: usize,
    #[arg(long, default_value = "atomic")]
    units: UnitSystem,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct CompareArgs {
    /// Spin projection of the Dirac state; the Schrodinger spin follows it.
    #[arg(long, default_value = "up")]
    spin: SpinArg,
    #[arg(long, default_value = "r=0.5:4:8,theta=6,phi=1")]
    grid: GridSpec,
    #[arg(long, default_value = "atomic")]
    units: UnitSystem,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

fn positive_f64(s: &str) -> std::result::Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v > 0.0 && v.is_finite() => Ok(v),
        Ok(v) => Err(format!("must be positive and finite, got {v}")),
        Err(e) => Err(e.to_string()),
    }
}

/// Three comma-separated numbers.
#[derive(Debug, Clone, Copy, PartialEq)]
struct Triple([f64; 3]);

impl FromStr for Triple {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(format!("expected three comma-separated values, got {s:?}"));
        }
        let mut out = [0.0f64; 3];
        for (o, p) in out.iter_mut().zip(&parts) {
            *o = p.parse().map_err(|_| format!("not a number: {p:?}"))?;
            if !o.is_finite() {
                return Err(format!("not finite: {p:?}"));
            }
        }
        Ok(Triple(out))
    }
}

impl Triple {
    fn integers(&self) -> Result<[i32; 3]> {
        let mut out = [0; 3];
        for (o, &v) in out.iter_mut().zip(&self.0) {
            if v.fract() != 0.0 || v.abs() > 1e6 {
                return Err(Error::Domain(format!("quantum numbers must be integers, got {v}")));
            }
            *o = v as i32;
        }
        Ok(out)
    }

    fn unsigned(&self) -> Result<[u32; 3]> {
        let v = self.integers()?;
        if v.iter().any(|&x| x < 0) {
            return Err(Error::Domain(format!("expected nonnegative integers, got {v:?}")));
        }
        Ok([v[0] as u32, v[1] as u32, v[2] as u32])
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum SpinArg {
    Up,
    Down,
    None,
    Auto,
    Direction(Vector3<f64>),
}

impl FromStr for SpinArg {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "up" => SpinArg::Up,
            "down" => SpinArg::Down,
            "none" => SpinArg::None,
            "auto" => SpinArg::Auto,
            other => {
                let Triple(v) = other
                    .parse()
                    .map_err(|e| format!("spin must be up, down, none, auto or x,y,z: {e}"))?;
                SpinArg::Direction(Vector3::from(v))
            }
        })
    }
}

impl SpinArg {
    fn resolve(self, m: i32) -> Result<SpinVector> {
        match self {
            SpinArg::Up => Ok(SpinVector::up()),
            SpinArg::Down => Ok(SpinVector::down()),
            SpinArg::None => Ok(SpinVector::zero()),
            SpinArg::Auto => Ok(SpinVector::for_magnetic_number(m)),
            SpinArg::Direction(d) if d == Vector3::zeros() => Ok(SpinVector::zero()),
            SpinArg::Direction(d) => SpinVector::along(d),
        }
    }

    fn projection(self) -> std::result::Result<SpinProjection, String> {
        match self {
            SpinArg::Up | SpinArg::Auto => Ok(SpinProjection::Up),
            SpinArg::Down => Ok(SpinProjection::Down),
            _ => Err("the Dirac state needs --spin up or --spin down".into()),
        }
    }
}

/// Sampling grid: `r` inclusive and evenly spaced, `theta` at cell midpoints
/// of `(0, pi)`, `phi` evenly spaced on `[0, 2 pi)`.
#[derive(Debug, Clone, Copy, PartialEq)]
struct GridSpec {
    r_min: f64,
    r_max: f64,
    r_count: usize,
    theta_count: usize,
    phi_count: usize,
}

impl FromStr for GridSpec {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let mut r = None;
        let mut theta = None;
        let mut phi = None;
        let count = |v: &str| -> std::result::Result<usize, String> {
            match v.parse::<usize>() {
                Ok(n) if n >= 1 => Ok(n),
                _ => Err(format!("grid counts must be integers >= 1, got {v:?}")),
            }
        };
        for part in s.split(',') {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| format!("grid entries look like key=value, got {part:?}"))?;
            match key.trim() {
                "r" => {
                    let f: Vec<&str> = value.split(':').collect();
                    if f.len() != 3 {
                        return Err(format!("r range is min:max:count, got {value:?}"));
                    }
                    let lo: f64 = f[0].parse().map_err(|_| format!("bad r min {:?}", f[0]))?;
                    let hi: f64 = f[1].parse().map_err(|_| format!("bad r max {:?}", f[1]))?;
                    if !(lo > 0.0 && hi >= lo && hi.is_finite()) {
                        return Err(format!("need 0 < r min <= r max, got {lo}:{hi}"));
                    }
                    r = Some((lo, hi, count(f[2])?));
                }
                "theta" => theta = Some(count(value)?),
                "phi" => phi = Some(count(value)?),
                other => return Err(format!("unknown grid key {other:?}")),
            }
        }
        let (r_min, r_max, r_count) = r.ok_or("grid needs an r range")?;
        Ok(GridSpec {
            r_min,
            r_max,
            r_count,
            theta_count: theta.unwrap_or(1),
            phi_count: phi.unwrap_or(1),
        })
    }
}

impl GridSpec {
    /// Points in r-outer, theta-middle, phi-inner order.
    fn points(&self) -> Result<Vec<SphericalPoint>> {
        let mut out = Vec::with_capacity(self.r_count * self.theta_count * self.phi_count);
        for i in 0..self.r_count {
            let r = if self.r_count == 1 {
                self.r_min
            } else {
                self.r_min + (self.r_max - self.r_min) * i as f64 / (self.r_count - 1) as f64
            };
            for j in 0..self.theta_count {
                let theta = PI * (j as f64 + 0.5) / self.theta_count as f64;
                for k in 0..self.phi_count {
                    out.push(SphericalPoint::new(r, theta, TAU * k as f64 / self.phi_count as f64)?);
                }
            }
        }
        Ok(out)
    }
}

/// A velocity field the CLI can sample.
enum Flow {
    Schrodinger { state: SchrodingerState, spin: SpinVector },
    Dirac(DiracHydrogenState),
}

enum Failure {
    Usage(String),
    Numeric(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Numeric(e)
    }
}

impl Flow {
    fn build(args: &StateArgs) -> std::result::Result<Self, Failure> {
        let state = match args.system {
            SystemArg::Dirac => {
                if args.state.integers()? != [1, 0, 0] {
                    return Err(Failure::Usage("only the Dirac 1s state (--state 1,0,0) is built in".into()));
                }
                return Ok(Flow::Dirac(DiracHydrogenState::ground(
                    args.spin.projection().map_err(Failure::Usage)?,
                )));
            }
            SystemArg::Hydrogen => {
                let [n, l, m] = args.state.integers()?;
                if n < 1 || l < 0 {
                    return Err(Error::Domain(format!("invalid hydrogen state {n},{l},{m}")).into());
                }
                SchrodingerState::hydrogen(n as u32, l as u32, m)?
            }
            SystemArg::Oscillator => {
                let [n_r, l, m] = args.state.integers()?;
                if n_r < 0 || l < 0 {
                    return Err(Error::Domain(format!("invalid oscillator state {n_r},{l},{m}")).into());
                }
                crate::eigenstates::oscillator_state(OscillatorNumbers::new(n_r as u32, l as u32, m)?, args.omega)?
            }
            SystemArg::OscillatorCartesian => cartesian_oscillator_state(args.state.unsigned()?, args.omega)?,
        };
        let spin = args.spin.resolve(state.magnetic_number())?;
        Ok(Flow::Schrodinger { state, spin })
    }

    fn density(&self, p: &SphericalPoint) -> Result<f64> {
        match self {
            Flow::Schrodinger { state, .. } => Ok(state.density(p)),
            Flow::Dirac(d) => d.density(p),
        }
    }

    fn current(&self, p: &SphericalPoint) -> Result<SphericalVector> {
        match self {
            Flow::Schrodinger { state, spin } => total_current(state, spin, p),
            Flow::Dirac(d) => Ok(dirac_velocity(d, p)? * d.density(p)?),
        }
    }

    fn velocity(&self, p: &SphericalPoint) -> Result<SphericalVector> {
        match self {
            Flow::Schrodinger { state, spin } => velocity(state, spin, p),
            Flow::Dirac(d) => dirac_velocity(d, p),
        }
    }

    fn label(&self) -> String {
        match self {
            Flow::Schrodinger { state, spin } => {
                let s = spin.cartesian();
                format!("{state} spin=({},{},{})", s.x, s.y, s.z)
            }
            Flow::Dirac(d) => d.to_string(),
        }
    }
}

/// Output scale factors for one unit system.
struct Scales {
    length: f64,
    density: f64,
    velocity: f64,
    current: f64,
    time: f64,
}

impl Scales {
    fn new(units: UnitSystem) -> Self {
        let length = convert_length(1.0, UnitSystem::Atomic, units);
        let velocity = convert_velocity(1.0, UnitSystem::Atomic, units);
        let density = 1.0 / (length * length * length);
        Self {
            length,
            density,
            velocity,
            current: velocity * density,
            time: convert_time(1.0, UnitSystem::Atomic, units),
        }
    }
}

fn num(out: &mut String, v: f64) {
    // 17 significant digits, stable across runs
    let _ = write!(out, "{v:.16e}");
}

fn row(out: &mut String, values: &[f64]) {
    for (i, &v) in values.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        num(out, v);
    }
    out.push('\n');
}

fn sample_csv(flow: &Flow, grid: &GridSpec, units: UnitSystem) -> Result<String> {
    let sc = Scales::new(units);
    let mut out = String::from("r,theta,phi,x,y,z,rho,J_r,J_theta,J_phi,v_r,v_theta,v_phi\n");
    let (mut on_axis, mut nodes) = (0usize, 0usize);
    for p in grid.points()? {
        if p.on_axis() {
            on_axis += 1;
            continue;
        }
        let v = match flow.velocity(&p) {
            Ok(v) => v,
            Err(Error::Node { .. }) => {
                nodes += 1;
                continue;
            }
            Err(Error::Pole(_)) => {
                on_axis += 1;
                continue;
            }
            Err(e) => return Err(e),
        };
        let rho = flow.density(&p)?;
        let j = flow.current(&p)?;
        let x = p.to_cartesian();
        row(
            &mut out,
            &[
                p.r * sc.length,
                p.theta,
                p.phi,
                x.x * sc.length,
                x.y * sc.length,
                x.z * sc.length,
                rho * sc.density,
                j.r * sc.current,
                j.theta * sc.current,
                j.phi * sc.current,
                v.r * sc.velocity,
                v.theta * sc.velocity,
                v.phi * sc.velocity,
            ],
        );
    }
    let _ = writeln!(out, "# skipped {on_axis} on-axis and {nodes} node points");
    Ok(out)
}

fn trajectory_csv(traj: &Trajectory, units: UnitSystem) -> String {
    let sc = Scales::new(units);
    let mut out = String::from("t,x,y,z,r,theta,phi\n");
    for s in &traj.samples {
        let x = s.cartesian();
        row(
            &mut out,
            &[
                s.t * sc.time,
                x.x * sc.length,
                x.y * sc.length,
                x.z * sc.length,
                s.point.r * sc.length,
                s.point.theta,
                s.point.phi,
            ],
        );
    }
    out
}

fn compare_csv(args: &CompareArgs) -> std::result::Result<String, Failure> {
    let m = args.spin.projection().map_err(Failure::Usage)?;
    let dirac = DiracHydrogenState::ground(m);
    let schrodinger = SchrodingerState::hydrogen(1, 0, 0)?;
    let rep = compare_with(&dirac, &schrodinger, &SpinVector::from_projection(m), &args.grid.points()?);
    let sc = Scales::new(args.units);
    let mut out = String::from(
        "r,theta,phi,v_dirac_phi,v_schrodinger_gordon_phi,v_classical_phi,abs_deviation,rel_deviation,classical_deviation,status\n",
    );
    for rec in &rep.records {
        let p = rec.point;
        let vals = match &rec.outcome {
            Ok(v) => [
                v.v_dirac.phi * sc.velocity,
                v.v_schrodinger_plus_gordon.phi * sc.velocity,
                v.v_classical.phi * sc.velocity,
                v.abs_deviation * sc.velocity,
                v.rel_deviation,
                v.classical_deviation * sc.velocity,
            ],
            Err(_) => [f64::NAN; 6],
        };
        let mut line = String::new();
        row(&mut line, &[&[p.r * sc.length, p.theta, p.phi][..], &vals[..]].concat());
        line.pop();
        out.push_str(&line);
        out.push_str(if rec.outcome.is_ok() { ",ok\n" } else { ",error\n" });
    }
    let _ = writeln!(
        out,
        "# max_abs_deviation={:.16e} max_rel_deviation={:.16e} max_classical_deviation={:.16e} failed={}",
        rep.max_abs_deviation * sc.velocity,
        rep.max_rel_deviation,
        rep.max_classical_deviation * sc.velocity,
        rep.n_failed
    );
    Ok(out)
}

fn emit(output: &Option<PathBuf>, text: &str) -> Result<()> {
    match output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::Numeric(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| Error::Numeric(format!("cannot write to stdout: {e}")))
        }
    }
}

fn dispatch(cli: Cli) -> std::result::Result<i32, Failure> {
    match cli.command {
        Command::Constants { units } => {
            let mut out = format!("# units = {units}\n");
            for (k, v) in constants(units).entries() {
                let _ = writeln!(out, "{k} = {v:.16e}");
            }
            emit(&None, &out)?;
        }
        Command::Sample(args) => {
            let flow = Flow::build(&args.state)?;
            let csv = sample_csv(&flow, &args.grid, args.units)?;
            emit(&args.output, &csv)?;
        }
        Command::Verify { suite } => {
            let results = run_suite(suite);
            let mut out = String::new();
            for r in &results {
                let _ = writeln!(out, "{r}");
            }
            let failed = results.iter().filter(|r| !r.passed).count();
            let _ = writeln!(out, "{} checks, {} passed, {failed} failed", results.len(), results.len() - failed);
            emit(&None, &out)?;
            return Ok(if failed == 0 { EXIT_OK } else { EXIT_NUMERIC });
        }
        Command::Streamline(args) => {
            let flow = Flow::build(&args.state)?;
            let [r, theta, phi] = args.start.0;
            let start = SphericalPoint::new(r, theta, phi)?;
            match streamline(|p| flow.velocity(p), start, args.dt, args.steps) {
                Ok(traj) => emit(&args.output, &trajectory_csv(&traj.with_label(flow.label()), args.units))?,
                Err(e) => {
                    let mut csv = trajectory_csv(&e.partial, args.units);
                    let _ = writeln!(csv, "# stopped: {}", e.cause);
                    emit(&args.output, &csv)?;
                    return Err(Failure::Numeric(e.cause));
                }
            }
        }
        Command::Compare(args) => {
            let csv = compare_csv(&args)?;
            emit(&args.output, &csv)?;
        }
    }
    Ok(EXIT_OK)
}

/// Parses `argv` (including the program name), runs the subcommand and returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Numeric(e)) => {
            eprintln!("error: {e}");
            EXIT_NUMERIC
        }
    }
}
