//! Command-line front end: evaluation, curves, phase slices, boundary
//! solving, volume estimates, the side-state summary table, the spin-dimer
//! map, unimodality trials and fidelity.
//!
//! Output is CSV (UTF-8, `\n` line endings, header row first, fixed-point
//! decimals at the configured precision) and is byte-stable for a fixed
//! configuration.

use std::f64::consts::{FRAC_PI_2, PI};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::branches::{q0, q_pi2, s_cond};
use crate::dimer::{dimer_to_state, state_to_dimer, DimerParams};
use crate::entropy::EntropyUnit;
use crate::error::{Error, Result};
use crate::optimizer::{classify_shape, discord_with_tol, find_interior_extremum};
use crate::oracle::discord_oracle;
use crate::phase::{
    deviation_curve, slice_scan, solve_bifurcation, solve_crossing, theta_star_volume,
    BoundaryKind, ScanLine,
};
use crate::search::ScanOptions;
use crate::state::{fidelity, GeneralXState, XxzState};
use crate::unimodal::{conjecture_trial, AppendixFn};

#[derive(Debug, Parser)]
#[command(name = "qdiscord", version, about = "Quantum discord phase tools for XXZ X states")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// Unit for entropy columns.
    #[arg(long, value_enum, default_value_t = UnitArg::Bit, global = true)]
    pub units: UnitArg,

    /// Decimal digits in CSV output.
    #[arg(long, default_value_t = 10, global = true)]
    pub precision: usize,

    /// Output file; stdout when absent.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Root-bracketing tolerance.
    #[arg(long = "tol-root", default_value_t = 1e-12, global = true)]
    pub tol_root: f64,

    /// Branch-match tolerance (crossing flag).
    #[arg(long = "tol-match", default_value_t = 1e-10, global = true)]
    pub tol_match: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum UnitArg {
    Bit,
    Nat,
}

impl From<UnitArg> for EntropyUnit {
    fn from(u: UnitArg) -> Self {
        match u {
            UnitArg::Bit => EntropyUnit::Bit,
            UnitArg::Nat => EntropyUnit::Nat,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    #[value(name = "crossing")]
    Crossing,
    #[value(name = "d2-0")]
    D2AtZero,
    #[value(name = "d2-pi2")]
    D2AtPiHalf,
}

impl From<KindArg> for BoundaryKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Crossing => BoundaryKind::Crossing,
            KindArg::D2AtZero => BoundaryKind::D2AtZero,
            KindArg::D2AtPiHalf => BoundaryKind::D2AtPiHalf,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WhichFn {
    F1,
    F2,
    Both,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Discord, branch, optimal angle and shape type at one state.
    Eval {
        #[arg(long, allow_negative_numbers = true)]
        s1: f64,
        #[arg(long, allow_negative_numbers = true)]
        c1: f64,
        #[arg(long, allow_negative_numbers = true)]
        c3: f64,
        /// With --c2: evaluate a general X state through the measurement oracle.
        #[arg(long, allow_negative_numbers = true)]
        s2: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        c2: Option<f64>,
        /// θ-grid for the oracle path.
        #[arg(long, default_value_t = 2001)]
        grid: usize,
    },
    /// Conditional entropy S_cond(θ) on a uniform θ grid.
    Curve {
        #[arg(long, allow_negative_numbers = true)]
        s1: f64,
        #[arg(long, allow_negative_numbers = true)]
        c1: f64,
        #[arg(long, allow_negative_numbers = true)]
        c3: f64,
        #[arg(long, default_value_t = 201)]
        steps: usize,
        /// Scan θ over [-π, π] instead of [0, π/2].
        #[arg(long, default_value_t = false)]
        full: bool,
        /// Evaluate at a single angle instead of a grid.
        #[arg(long, allow_negative_numbers = true, conflicts_with_all = ["steps", "full"])]
        theta: Option<f64>,
    },
    /// Phase labels on a (s1, c1) grid at fixed c3, plus boundary polylines.
    Phase {
        #[arg(long, allow_negative_numbers = true)]
        c3: f64,
        #[arg(long, default_value_t = 1001)]
        grid: usize,
        /// s1 samples for the root-solved boundary polylines.
        #[arg(long = "boundary-samples", default_value_t = 201)]
        boundary_samples: usize,
    },
    /// Boundary roots along a line (fix exactly one of --s1/--c1).
    Boundary {
        #[arg(long, allow_negative_numbers = true)]
        c3: f64,
        #[arg(long, allow_negative_numbers = true)]
        s1: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        c1: Option<f64>,
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Scan bracket override.
        #[arg(long, allow_negative_numbers = true)]
        lo: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        hi: Option<f64>,
        #[arg(long, default_value_t = 1000)]
        subdivisions: usize,
    },
    /// Monte Carlo θ*-region volume fraction of the tetrahedron.
    Volume {
        #[arg(long, default_value_t = 1_000_000)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Side-state summary over c3 sections: crossing and π/2 boundaries,
    /// endpoint entropy, maximum excess and fidelity.
    Table1,
    /// Deviations of the bifurcation boundaries from the crossing boundary.
    Deviation {
        #[arg(long, allow_negative_numbers = true)]
        c3: f64,
        #[arg(long, default_value_t = 101)]
        steps: usize,
        #[arg(long, allow_negative_numbers = true)]
        lo: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        hi: Option<f64>,
    },
    /// Map between state parameters and the thermal spin dimer.
    Spinmap {
        #[command(subcommand)]
        direction: SpinmapCommand,
    },
    /// Randomized unimodality-conjecture trial for the appendix functions.
    Unimodal {
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = WhichFn::Both)]
        which: WhichFn,
        #[arg(long, default_value_t = 201)]
        grid: usize,
    },
    /// Fidelity between two XXZ states.
    Fidelity {
        #[arg(long, allow_negative_numbers = true)]
        s1: f64,
        #[arg(long, allow_negative_numbers = true)]
        c1: f64,
        #[arg(long, allow_negative_numbers = true)]
        c3: f64,
        #[arg(long, allow_negative_numbers = true)]
        s1b: f64,
        #[arg(long, allow_negative_numbers = true)]
        c1b: f64,
        #[arg(long, allow_negative_numbers = true)]
        c3b: f64,
    },
}

#[derive(Debug, Subcommand)]
pub enum SpinmapCommand {
    /// (s1, c1, c3) at temperature T -> (J, Jz, B).
    ToDimer {
        #[arg(long, allow_negative_numbers = true)]
        s1: f64,
        #[arg(long, allow_negative_numbers = true)]
        c1: f64,
        #[arg(long, allow_negative_numbers = true)]
        c3: f64,
        #[arg(long = "T", allow_negative_numbers = true, default_value_t = 1.0)]
        t: f64,
    },
    /// (J, Jz, B, T) -> (s1, c1, c3) with the shape type.
    FromDimer {
        #[arg(long = "J", allow_negative_numbers = true)]
        j: f64,
        #[arg(long = "Jz", allow_negative_numbers = true)]
        jz: f64,
        #[arg(long = "B", allow_negative_numbers = true)]
        b: f64,
        #[arg(long = "T", allow_negative_numbers = true)]
        t: f64,
    },
}

/// One named CSV section; commands other than `phase` produce exactly one.
#[derive(Debug, Clone)]
pub struct OutputSection {
    /// Suffix for file output ("" for the main section).
    pub name: &'static str,
    pub csv: String,
}

fn fmt_f(v: f64, precision: usize) -> String {
    let v = if v == 0.0 { 0.0 } else { v }; // normalize -0.0
    format!("{v:.precision$}")
}

struct Csv {
    text: String,
    precision: usize,
}

impl Csv {
    fn new(header: &str, precision: usize) -> Self {
        Self {
            text: format!("{header}\n"),
            precision,
        }
    }

    fn row(&mut self, fields: &[CsvField]) {
        let mut first = true;
        for f in fields {
            if !first {
                self.text.push(',');
            }
            first = false;
            match f {
                CsvField::F(v) => self.text.push_str(&fmt_f(*v, self.precision)),
                CsvField::S(s) => self.text.push_str(s),
                CsvField::Empty => {}
            }
        }
        self.text.push('\n');
    }

    fn finish(self) -> String {
        self.text
    }
}

enum CsvField<'a> {
    F(f64),
    S(&'a str),
    Empty,
}

fn opt_field(v: Option<f64>) -> CsvField<'static> {
    match v {
        Some(x) => CsvField::F(x),
        None => CsvField::Empty,
    }
}

/// Executes a command and returns its CSV sections.
pub fn execute(command: &Command, common: &CommonArgs) -> Result<Vec<OutputSection>> {
    if common.precision == 0 || common.precision > 17 {
        return Err(Error::OutOfRange(format!(
            "precision {} outside 1..=17",
            common.precision
        )));
    }
    let tol_ok = |t: f64| t.is_finite() && t > 0.0;
    if !tol_ok(common.tol_root) || !tol_ok(common.tol_match) {
        return Err(Error::OutOfRange("tolerances must be positive".into()));
    }
    let unit: EntropyUnit = common.units.into();
    let prec = common.precision;
    let scan_opts = ScanOptions {
        xtol: common.tol_root,
        ..ScanOptions::default()
    };

    match command {
        Command::Eval {
            s1,
            c1,
            c3,
            s2,
            c2,
            grid,
        } => {
            if s2.is_some() || c2.is_some() {
                let s2 = s2.unwrap_or(*s1);
                let c2 = c2.unwrap_or(*c1);
                let state = GeneralXState::new(*s1, s2, *c1, c2, *c3)?;
                let (q, dir) = discord_oracle(&state.density_matrix(), *grid)?;
                let mut csv = Csv::new(
                    &format!("s1,s2,c1,c2,c3,q_{},theta_opt,phi_opt", unit.suffix()),
                    prec,
                );
                csv.row(&[
                    CsvField::F(*s1),
                    CsvField::F(s2),
                    CsvField::F(*c1),
                    CsvField::F(c2),
                    CsvField::F(*c3),
                    CsvField::F(q.in_unit(unit)),
                    CsvField::F(dir.theta()),
                    CsvField::F(dir.phi()),
                ]);
                return Ok(vec![OutputSection {
                    name: "",
                    csv: csv.finish(),
                }]);
            }
            let state = XxzState::new(*s1, *c1, *c3)?;
            let result = discord_with_tol(&state, common.tol_match)?;
            let shape = classify_shape(&state)?;
            let branch = result.branch.to_string();
            let shape_s = shape.to_string();
            let mut csv = Csv::new(
                &format!(
                    "s1,c1,c3,q_{u},branch,theta_opt,shape,q0_{u},q_pi2_{u},s_cond_0_{u},s_cond_pi2_{u},crossing",
                    u = unit.suffix()
                ),
                prec,
            );
            csv.row(&[
                CsvField::F(*s1),
                CsvField::F(*c1),
                CsvField::F(*c3),
                CsvField::F(result.q.in_unit(unit)),
                CsvField::S(&branch),
                CsvField::F(result.theta_opt),
                CsvField::S(&shape_s),
                CsvField::F(q0(&state).in_unit(unit)),
                CsvField::F(q_pi2(&state).in_unit(unit)),
                CsvField::F(s_cond(0.0, &state).in_unit(unit)),
                CsvField::F(s_cond(FRAC_PI_2, &state).in_unit(unit)),
                CsvField::S(if result.crossing { "true" } else { "false" }),
            ]);
            Ok(vec![OutputSection {
                name: "",
                csv: csv.finish(),
            }])
        }

        Command::Curve {
            s1,
            c1,
            c3,
            steps,
            full,
            theta,
        } => {
            if *steps < 2 {
                return Err(Error::OutOfRange("curve needs steps >= 2".into()));
            }
            let state = XxzState::new(*s1, *c1, *c3)?;
            let mut csv = Csv::new(&format!("theta,s_cond_{}", unit.suffix()), prec);
            if let Some(theta) = theta {
                csv.row(&[
                    CsvField::F(*theta),
                    CsvField::F(s_cond(*theta, &state).in_unit(unit)),
                ]);
            } else {
                let (lo, hi) = if *full { (-PI, PI) } else { (0.0, FRAC_PI_2) };
                for i in 0..*steps {
                    let theta = lo + (hi - lo) * i as f64 / (*steps - 1) as f64;
                    csv.row(&[
                        CsvField::F(theta),
                        CsvField::F(s_cond(theta, &state).in_unit(unit)),
                    ]);
                }
            }
            Ok(vec![OutputSection {
                name: "",
                csv: csv.finish(),
            }])
        }

        Command::Phase {
            c3,
            grid,
            boundary_samples,
        } => {
            let map = slice_scan(*c3, *grid, *boundary_samples)?;
            let mut csv = Csv::new("s1,c1,label", prec);
            for p in &map.points {
                let label = p.label.to_string();
                csv.row(&[CsvField::F(p.s1), CsvField::F(p.c1), CsvField::S(&label)]);
            }
            let mut bcsv = Csv::new("kind,s1,c1", prec);
            for b in &map.boundaries {
                let kind = b.kind.to_string();
                bcsv.row(&[CsvField::S(&kind), CsvField::F(b.s1), CsvField::F(b.c1)]);
            }
            Ok(vec![
                OutputSection {
                    name: "",
                    csv: csv.finish(),
                },
                OutputSection {
                    name: "boundaries",
                    csv: bcsv.finish(),
                },
            ])
        }

        Command::Boundary {
            c3,
            s1,
            c1,
            kind,
            lo,
            hi,
            subdivisions,
        } => {
            let line = match (s1, c1) {
                (Some(s1), None) => ScanLine::C1 { c3: *c3, s1: *s1 },
                (None, Some(c1)) => ScanLine::S1 { c3: *c3, c1: *c1 },
                _ => {
                    return Err(Error::OutOfRange(
                        "fix exactly one of --s1 (scan c1) or --c1 (scan s1)".into(),
                    ))
                }
            };
            let opts = ScanOptions {
                subdivisions: *subdivisions,
                ..scan_opts
            };
            let bracket = match (lo, hi) {
                (Some(a), Some(b)) => Some((*a, *b)),
                (None, None) => None,
                _ => return Err(Error::OutOfRange("provide both --lo and --hi".into())),
            };
            let sol = match BoundaryKind::from(*kind) {
                BoundaryKind::Crossing => solve_crossing(&line, bracket, &opts)?,
                k => solve_bifurcation(&line, k, bracket, &opts)?,
            };
            let scan_name = match line {
                ScanLine::C1 { .. } => "c1",
                ScanLine::S1 { .. } => "s1",
            };
            let mut csv = Csv::new("kind,scan,root,residual,tangent", prec);
            for r in &sol.roots {
                let kind_s = sol.kind.to_string();
                csv.row(&[
                    CsvField::S(&kind_s),
                    CsvField::S(scan_name),
                    CsvField::F(r.x),
                    CsvField::F(r.residual),
                    CsvField::S(if r.tangent { "true" } else { "false" }),
                ]);
            }
            Ok(vec![OutputSection {
                name: "",
                csv: csv.finish(),
            }])
        }

        Command::Volume { samples, seed } => {
            let est = theta_star_volume(*samples, *seed)?;
            let mut csv = Csv::new(
                "samples,type_iv,type_v,fraction_iv,stderr_iv,fraction_v,stderr_v,iv_min_c3",
                prec,
            );
            let samples_s = est.samples.to_string();
            let iv_s = est.type_iv.to_string();
            let v_s = est.type_v.to_string();
            csv.row(&[
                CsvField::S(&samples_s),
                CsvField::S(&iv_s),
                CsvField::S(&v_s),
                CsvField::F(est.fraction_iv),
                CsvField::F(est.stderr_iv),
                CsvField::F(est.fraction_v),
                CsvField::F(est.stderr_v),
                opt_field(est.iv_min_c3),
            ]);
            Ok(vec![OutputSection {
                name: "",
                csv: csv.finish(),
            }])
        }

        Command::Table1 => {
            let mut csv = Csv::new(
                &format!(
                    "c3,s1,c1_cross,c1_pi2,s_cond_end_{u},s_cond_max_{u},excess_pct,fidelity",
                    u = unit.suffix()
                ),
                prec,
            );
            for c3 in [-0.8, -0.5, -0.1, 0.0, 0.1, 1.0 / 3.0, 0.5] {
                let s1 = (1.0 + c3) / 2.0;
                let c_max = (1.0 - c3) / 2.0;
                let line = ScanLine::C1 { c3, s1 };
                let root_of = |sol: crate::phase::BoundarySolution| {
                    sol.roots.iter().map(|r| r.x).find(|&x| x > 1e-9)
                };
                let cross = solve_crossing(&line, Some((0.0, c_max)), &scan_opts)
                    .ok()
                    .and_then(root_of);
                let cpi2 = solve_bifurcation(
                    &line,
                    BoundaryKind::D2AtPiHalf,
                    Some((0.0, c_max)),
                    &scan_opts,
                )
                .ok()
                .and_then(root_of);
                let (mut send, mut smax, mut excess, mut fid) = (None, None, None, None);
                if let Some(cx) = cross {
                    let state = XxzState::new(s1, cx, c3)?;
                    let e = s_cond(0.0, &state);
                    send = Some(e.in_unit(unit));
                    if let Ok(report) = find_interior_extremum(&state) {
                        if let Some(v) = report.value_at_star {
                            smax = Some(v.in_unit(unit));
                            excess = Some((v.nats() - e.nats()) / e.nats() * 100.0);
                        }
                    }
                    if let Some(cp) = cpi2 {
                        fid = Some(fidelity(&state, &XxzState::new(s1, cp, c3)?));
                    }
                }
                csv.row(&[
                    CsvField::F(c3),
                    CsvField::F(s1),
                    opt_field(cross),
                    opt_field(cpi2),
                    opt_field(send),
                    opt_field(smax),
                    opt_field(excess),
                    opt_field(fid),
                ]);
            }
            Ok(vec![OutputSection {
                name: "",
                csv: csv.finish(),
            }])
        }

        Command::Deviation { c3, steps, lo, hi } => {
            if *steps < 2 {
                return Err(Error::OutOfRange("deviation needs steps >= 2".into()));
            }
            let s_max = (1.0 + c3) / 2.0;
            let (a, b) = (lo.unwrap_or(0.0), hi.unwrap_or(s_max));
            let samples: Vec<f64> = (0..*steps)
                .map(|i| a + (b - a) * i as f64 / (*steps - 1) as f64)
                .collect();
            let out = deviation_curve(*c3, &samples)?;
            let mut csv = Csv::new("s1,c1_cross,c1_0,c1_pi2,delta_0,delta_pi2", prec);
            for s in &out {
                csv.row(&[
                    CsvField::F(s.s1),
                    opt_field(s.crossing),
                    opt_field(s.boundary_0),
                    opt_field(s.boundary_pi2),
                    opt_field(s.delta_0()),
                    opt_field(s.delta_pi2()),
                ]);
            }
            Ok(vec![OutputSection {
                name: "",
                csv: csv.finish(),
            }])
        }

        Command::Spinmap { direction } => match direction {
            SpinmapCommand::ToDimer { s1, c1, c3, t } => {
                let state = XxzState::new(*s1, *c1, *c3)?;
                let p = state_to_dimer(&state, *t)?;
                let mut csv = Csv::new("j,jz,b,t,delta,b_over_j", prec);
                csv.row(&[
                    CsvField::F(p.j),
                    CsvField::F(p.jz),
                    CsvField::F(p.b),
                    CsvField::F(p.t),
                    CsvField::F(p.delta()),
                    CsvField::F(p.b_over_j()),
                ]);
                Ok(vec![OutputSection {
                    name: "",
                    csv: csv.finish(),
                }])
            }
            SpinmapCommand::FromDimer { j, jz, b, t } => {
                let p = DimerParams::new(*j, *jz, *b, *t)?;
                let state = dimer_to_state(&p)?;
                let shape = classify_shape(&state)?.to_string();
                let mut csv = Csv::new("s1,c1,c3,shape", prec);
                csv.row(&[
                    CsvField::F(state.s1()),
                    CsvField::F(state.c1()),
                    CsvField::F(state.c3()),
                    CsvField::S(&shape),
                ]);
                Ok(vec![OutputSection {
                    name: "",
                    csv: csv.finish(),
                }])
            }
        },

        Command::Unimodal {
            samples,
            seed,
            which,
            grid,
        } => {
            let fns: &[AppendixFn] = match which {
                WhichFn::F1 => &[AppendixFn::F1],
                WhichFn::F2 => &[AppendixFn::F2],
                WhichFn::Both => &[AppendixFn::F1, AppendixFn::F2],
            };
            let mut csv = Csv::new("which,samples,grid,violations,max_count_seen", prec);
            let mut viol = Csv::new("which,p1,p2,p3,p4,p5,count", prec);
            let mut any_violation = false;
            for f in fns {
                let report = conjecture_trial(*samples, *seed, *f, *grid)?;
                let which_s = f.to_string();
                let samples_s = report.samples.to_string();
                let grid_s = grid.to_string();
                let viol_s = report.violations.len().to_string();
                let max_s = report.max_count_seen.to_string();
                csv.row(&[
                    CsvField::S(&which_s),
                    CsvField::S(&samples_s),
                    CsvField::S(&grid_s),
                    CsvField::S(&viol_s),
                    CsvField::S(&max_s),
                ]);
                for v in &report.violations {
                    any_violation = true;
                    let count_s = v.count.to_string();
                    viol.row(&[
                        CsvField::S(&which_s),
                        CsvField::F(v.params.p1),
                        CsvField::F(v.params.p2),
                        CsvField::F(v.params.p3),
                        CsvField::F(v.params.p4),
                        CsvField::F(v.params.p5),
                        CsvField::S(&count_s),
                    ]);
                }
            }
            let mut out = vec![OutputSection {
                name: "",
                csv: csv.finish(),
            }];
            if any_violation {
                out.push(OutputSection {
                    name: "violations",
                    csv: viol.finish(),
                });
            }
            Ok(out)
        }

        Command::Fidelity {
            s1,
            c1,
            c3,
            s1b,
            c1b,
            c3b,
        } => {
            let a = XxzState::new(*s1, *c1, *c3)?;
            let b = XxzState::new(*s1b, *c1b, *c3b)?;
            let mut csv = Csv::new("s1_a,c1_a,c3_a,s1_b,c1_b,c3_b,fidelity", prec);
            csv.row(&[
                CsvField::F(*s1),
                CsvField::F(*c1),
                CsvField::F(*c3),
                CsvField::F(*s1b),
                CsvField::F(*c1b),
                CsvField::F(*c3b),
                CsvField::F(fidelity(&a, &b)),
            ]);
            Ok(vec![OutputSection {
                name: "",
                csv: csv.finish(),
            }])
        }
    }
}

/// Writes the sections to --out (deriving `<stem>_<name><ext>` for named
/// sections) or to stdout separated by blank lines.
pub fn write_output(sections: &[OutputSection], out: &Option<PathBuf>) -> Result<()> {
    match out {
        None => {
            let mut first = true;
            for s in sections {
                if !first {
                    println!();
                }
                first = false;
                print!("{}", s.csv);
            }
            Ok(())
        }
        Some(path) => {
            for s in sections {
                let target = if s.name.is_empty() {
                    path.clone()
                } else {
                    let stem = path
                        .file_stem()
                        .map(|s| s.to_string_lossy().into_owned())
                        .unwrap_or_default();
                    let ext = path
                        .extension()
                        .map(|e| format!(".{}", e.to_string_lossy()))
                        .unwrap_or_default();
                    path.with_file_name(format!("{stem}_{}{ext}", s.name))
                };
                std::fs::write(&target, &s.csv)
                    .map_err(|e| Error::Domain(format!("writing {}: {e}", target.display())))?;
            }
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn common() -> CommonArgs {
        CommonArgs {
            units: UnitArg::Bit,
            precision: 10,
            out: None,
            tol_root: 1e-12,
            tol_match: 1e-10,
        }
    }

    fn run_one(cmd: Command) -> String {
        execute(&cmd, &common()).unwrap()[0].csv.clone()
    }

    #[test]
    fn eval_type_iv_point() {
        let csv = run_one(Command::Eval {
            s1: 0.473267,
            c1: 0.14,
            c3: 0.34,
            s2: None,
            c2: None,
            grid: 2001,
        });
        assert!(csv.contains("QThetaStar"));
        assert!(csv.contains(",IV,"));
    }

    #[test]
    fn eval_trivial_point() {
        let csv = run_one(Command::Eval {
            s1: 0.0,
            c1: 0.0,
            c3: 0.0,
            s2: None,
            c2: None,
            grid: 2001,
        });
        assert!(csv.contains("0.0000000000,Q0"));
        assert!(csv.contains(",I,"));
    }

    #[test]
    fn eval_showcase_has_crossing_flag() {
        let csv = run_one(Command::Eval {
            s1: 0.25,
            c1: 0.6563909127,
            c3: -0.5,
            s2: None,
            c2: None,
            grid: 2001,
        });
        assert!(csv.contains(",V,"), "{csv}");
        assert!(csv.trim_end().ends_with("true"), "{csv}");
    }

    #[test]
    fn eval_rejects_invalid_state() {
        let err = execute(
            &Command::Eval {
                s1: 0.9,
                c1: 0.0,
                c3: 0.0,
                s2: None,
                c2: None,
                grid: 2001,
            },
            &common(),
        )
        .unwrap_err();
        assert!(err.to_string().contains("s1"));
    }

    #[test]
    fn curve_is_byte_stable() {
        let cmd = || Command::Curve {
            s1: 0.25,
            c1: 0.6563909127,
            c3: -0.5,
            steps: 33,
            full: false,
            theta: None,
        };
        let a = run_one(cmd());
        let b = run_one(cmd());
        assert_eq!(a, b);
        assert!(a.starts_with("theta,s_cond_bit\n"));
        assert_eq!(a.lines().count(), 34);
        // endpoint value of the showcase curve
        assert!(a.contains("0.6068441215"));
    }

    #[test]
    fn units_switch_only_changes_entropy_columns() {
        let bit = run_one(Command::Curve {
            s1: 0.0,
            c1: 0.0,
            c3: 0.0,
            steps: 3,
            full: false,
            theta: None,
        });
        let mut c = common();
        c.units = UnitArg::Nat;
        let nat = execute(
            &Command::Curve {
                s1: 0.0,
                c1: 0.0,
                c3: 0.0,
                steps: 3,
                full: false,
                theta: None,
            },
            &c,
        )
        .unwrap()[0]
            .csv
            .clone();
        assert!(bit.contains("1.0000000000"));
        assert!(nat.contains("0.6931471806"));
    }

    #[test]
    fn boundary_command_quoted_root() {
        let csv = run_one(Command::Boundary {
            c3: 0.34,
            s1: None,
            c1: Some(0.14),
            kind: KindArg::D2AtZero,
            lo: Some(0.4),
            hi: Some(0.5),
            subdivisions: 1000,
        });
        assert!(csv.contains("0.4731928814"), "{csv}");
    }

    #[test]
    fn boundary_requires_one_fixed_coordinate() {
        assert!(execute(
            &Command::Boundary {
                c3: 0.34,
                s1: Some(0.1),
                c1: Some(0.1),
                kind: KindArg::Crossing,
                lo: None,
                hi: None,
                subdivisions: 100,
            },
            &common(),
        )
        .is_err());
    }

    #[test]
    fn table1_quoted_rows() {
        let csv = run_one(Command::Table1);
        assert!(csv.contains("0.3762211396"), "{csv}");
        assert!(csv.contains("0.5177136813"));
        assert!(csv.contains("0.6563909127"));
        assert!(csv.contains("0.9996729733"));
        assert_eq!(csv.lines().count(), 8);
    }

    #[test]
    fn spinmap_round_trip_via_csv() {
        let to = run_one(Command::Spinmap {
            direction: SpinmapCommand::ToDimer {
                s1: 0.4731928814,
                c1: 0.14,
                c3: 0.34,
                t: 1.0,
            },
        });
        assert!(to.contains("1.0202484171"), "{to}");
        let from = run_one(Command::Spinmap {
            direction: SpinmapCommand::FromDimer {
                j: 1.0,
                jz: 1.02,
                b: 1.0,
                t: 0.8,
            },
        });
        assert!(from.trim_end().ends_with(",IV"), "{from}");
    }

    #[test]
    fn fidelity_command() {
        let csv = run_one(Command::Fidelity {
            s1: 0.25,
            c1: 0.6406688666,
            c3: -0.5,
            s1b: 0.25,
            c1b: 0.75,
            c3b: -0.5,
        });
        assert!(csv.contains("0.9450758951"), "{csv}");
    }

    #[test]
    fn phase_sections_and_stability() {
        let sections = execute(
            &Command::Phase {
                c3: -0.5,
                grid: 11,
                boundary_samples: 9,
            },
            &common(),
        )
        .unwrap();
        assert_eq!(sections.len(), 2);
        assert!(sections[0].csv.starts_with("s1,c1,label\n"));
        assert!(sections[1].csv.starts_with("kind,s1,c1\n"));
        let again = execute(
            &Command::Phase {
                c3: -0.5,
                grid: 11,
                boundary_samples: 9,
            },
            &common(),
        )
        .unwrap();
        assert_eq!(sections[0].csv, again[0].csv);
        assert_eq!(sections[1].csv, again[1].csv);
    }

    #[test]
    fn unimodal_smoke() {
        let csv = run_one(Command::Unimodal {
            samples: 200,
            seed: 5,
            which: WhichFn::Both,
            grid: 201,
        });
        assert!(csv.contains("f1,200,201,0,"), "{csv}");
        assert!(csv.contains("f2,200,201,0,"), "{csv}");
    }

    #[test]
    fn volume_smoke_csv() {
        let csv = run_one(Command::Volume {
            samples: 20_000,
            seed: 1,
        });
        assert!(csv.starts_with("samples,type_iv,"));
        assert!(csv.contains("20000,"));
    }

    #[test]
    fn deviation_csv() {
        let csv = run_one(Command::Deviation {
            c3: 0.34,
            steps: 3,
            lo: Some(0.47),
            hi: Some(0.48),
        });
        assert_eq!(csv.lines().count(), 4);
        assert!(csv.starts_with("s1,c1_cross,"));
    }
}
