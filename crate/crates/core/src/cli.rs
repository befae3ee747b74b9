//! Command-line front end shared by the `spinrefl` binary.

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::points::PointSpace;
use crate::report;
use crate::rootsys::{ParameterFunction, RootSystem, RootType};
use crate::scalars::{parse_rational, Rational};
use crate::selftest::{self, Context};
use crate::system::SpinSystem;
use crate::{elliptic, phi, Error};

#[derive(Parser, Debug)]
#[command(name = "spinrefl", version, about = "Spin representations of noncrystallographic reflection groups")]
pub struct Cli {
    /// Worker threads for the parallel loops.
    #[arg(long, global = true, env = "SPINREFL_THREADS")]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Reflection group summary.
    Group {
        #[command(flatten)]
        target: Target,
        action: Action,
    },
    /// Pin double cover summary.
    Cover {
        #[command(flatten)]
        target: Target,
        action: Action,
    },
    /// Character table of W or of its double cover.
    Chartable {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value_t = CoverChoice::None)]
        cover: CoverChoice,
    },
    /// Solvable points up to W-conjugacy.
    Solvable {
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        params: Params,
    },
    /// The map from genuine characters to solvable orbits.
    Phi {
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        params: Params,
    },
    /// Elliptic pairing, spin modules and the spin map.
    Elliptic {
        #[command(flatten)]
        target: Target,
    },
    /// Run the acceptance suite.
    Selftest {
        /// Run only these criteria (1-based, repeatable).
        #[arg(long)]
        only: Vec<u32>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Args, Debug)]
pub struct Target {
    /// Root system type: I2, H3 or H4.
    #[arg(long = "type")]
    pub kind: String,
    /// Dihedral order, I2 only.
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct Params {
    /// Parameter assignment c=, c1= or c2= with a rational value (repeatable; default c=1).
    #[arg(long = "param")]
    pub param: Vec<String>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Action {
    Info,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoverChoice {
    Double,
    None,
}

/// Builds the parameter function from `key=value` assignments.
///
/// I2 with n even takes `c1` and `c2` together or a lone `c` meaning both; every
/// other type takes only `c`. No assignments means c ≡ 1.
pub fn parse_params(rs: &RootSystem, assignments: &[String]) -> Result<ParameterFunction, Error> {
    let mut c = None;
    let mut c1 = None;
    let mut c2 = None;
    for a in assignments {
        let (key, value) = a.split_once('=').ok_or_else(|| Error::Usage(format!("expected key=value, got {a:?}")))?;
        let value = parse_rational(value).map_err(|e| Error::Usage(e.to_string()))?;
        let slot = match key.trim() {
            "c" => &mut c,
            "c1" => &mut c1,
            "c2" => &mut c2,
            other => return Err(Error::Usage(format!("unknown parameter {other:?}"))),
        };
        if slot.replace(value).is_some() {
            return Err(Error::Usage(format!("parameter {key} given twice")));
        }
    }
    let two_orbits = rs.num_orbits() == 2;
    match (c, c1, c2) {
        (None, None, None) => Ok(ParameterFunction::constant(rs, Rational::from_integer(1.into()))),
        (Some(c), None, None) => Ok(ParameterFunction::constant(rs, c)),
        (None, Some(a), Some(b)) if two_orbits => ParameterFunction::per_orbit(rs, vec![a, b]),
        (None, _, _) if two_orbits => Err(Error::Usage("c1 and c2 must be given together".into())),
        (Some(_), _, _) if two_orbits => Err(Error::Usage("give either c or both c1 and c2".into())),
        _ => Err(Error::Usage(format!("{} takes only c", rs.kind()))),
    }
}

/// Exit status for a library error: 1 for bad input, 2 for failed checks.
pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Usage(_) | Error::Unsupported(_) | Error::Scalar(_) => 1,
        Error::Consistency(_) | Error::TheoremViolation(_) => 2,
    }
}

fn system(t: &Target) -> Result<SpinSystem, Error> {
    SpinSystem::new(RootType::parse(&t.kind, t.n)?)
}

fn emit<T: Serialize>(out: &mut String, format: Format, value: &T, text: impl FnOnce(&T) -> String) {
    out.push_str(&match format {
        Format::Json => report::to_json(value),
        Format::Text => text(value),
    });
}

/// Runs one parsed command, writing its output to `out`; returns the exit status.
pub fn execute(command: &Command, out: &mut String) -> Result<u8, Error> {
    match command {
        Command::Group { target, action: Action::Info } => {
            let sys = system(target)?;
            emit(out, target.format, &report::group_info(&sys)?, report::GroupInfo::text);
        }
        Command::Cover { target, action: Action::Info } => {
            let sys = system(target)?;
            emit(out, target.format, &report::cover_info(&sys)?, report::CoverInfo::text);
        }
        Command::Chartable { target, cover } => {
            let sys = system(target)?;
            emit(out, target.format, &report::chartable(&sys, *cover == CoverChoice::Double)?, report::CharTableReport::text);
        }
        Command::Solvable { target, params } => {
            let sys = system(target)?;
            let c = parse_params(sys.root_system(), &params.param)?;
            let points = report::solvable(&PointSpace::new(sys.root_system())?.solvable_points(&c));
            emit(out, target.format, &points, |p| report::solvable_text(&sys.kind(), p));
        }
        Command::Phi { target, params } => {
            let sys = system(target)?;
            let c = parse_params(sys.root_system(), &params.param)?;
            let map = phi::compute(&sys, &c)?;
            let rep = report::phi(&sys, &c, &map);
            emit(out, target.format, &rep, report::PhiReport::text);
            if !rep.violations.is_empty() {
                return Ok(2);
            }
        }
        Command::Elliptic { target } => {
            let sys = system(target)?;
            let info = report::elliptic(&sys, &elliptic::analyze(&sys)?)?;
            emit(out, target.format, &info, report::EllipticInfo::text);
            if !info.consistent() {
                return Ok(2);
            }
        }
        Command::Selftest { only, format } => {
            let ids: Vec<u32> = if only.is_empty() { (1..=selftest::TITLES.len() as u32).collect() } else { only.clone() };
            if let Some(bad) = ids.iter().find(|&&i| i == 0 || i as usize > selftest::TITLES.len()) {
                return Err(Error::Usage(format!("no criterion {bad}")));
            }
            let ctx = Context::default();
            let outcomes: Vec<selftest::Outcome> = ids.iter().map(|&i| selftest::run(&ctx, i)).collect();
            emit(out, *format, &outcomes, |o| o.iter().map(|x| x.line() + "\n").collect());
            if outcomes.iter().any(|o| !o.passed) {
                return Ok(2);
            }
        }
    }
    Ok(0)
}

pub fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    let mut out = String::new();
    let code = match execute(&cli.command, &mut out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    };
    let _ = std::io::stdout().lock().write_all(out.as_bytes());
    ExitCode::from(code)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;

    fn strings(xs: &[&str]) -> Vec<String> {
        xs.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn parameter_rules() {
        let odd = RootSystem::build(RootType::I2(5)).unwrap();
        let even = RootSystem::build(RootType::I2(6)).unwrap();
        assert_eq!(parse_params(&odd, &[]).unwrap().values(), &[rat(1, 1)]);
        assert_eq!(parse_params(&odd, &strings(&["c=3/2"])).unwrap().values(), &[rat(3, 2)]);
        assert_eq!(parse_params(&even, &strings(&["c=2"])).unwrap().values(), &[rat(2, 1), rat(2, 1)]);
        assert_eq!(parse_params(&even, &strings(&["c2=3", "c1=1"])).unwrap().values(), &[rat(1, 1), rat(3, 1)]);
        for bad in [&["c1=1"][..], &["c=1", "c1=1"], &["c=1", "c=2"], &["d=1"], &["c=1/0"], &["c=x"], &["c"]] {
            assert!(matches!(parse_params(&even, &strings(bad)), Err(Error::Usage(_))), "{bad:?}");
        }
        assert!(matches!(parse_params(&odd, &strings(&["c1=1", "c2=1"])), Err(Error::Usage(_))));
    }

    #[test]
    fn solvable_at_zero_is_the_origin() {
        let cmd = Cli::try_parse_from(["spinrefl", "solvable", "--type", "I2", "--n", "5", "--param", "c=0", "--format", "json"]).unwrap();
        let mut out = String::new();
        assert_eq!(execute(&cmd.command, &mut out).unwrap(), 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        let points = v.as_array().unwrap();
        assert_eq!(points.len(), 1);
        assert!(points[0]["coords"].as_array().unwrap().iter().all(|x| x["value"] == "0"));
    }
}
