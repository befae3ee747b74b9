use std::process::{Command, Output};

use serde::de::DeserializeOwned;
use serde::Serialize;
use spinrefl::report::{self, CharTableReport, CoverInfo, EllipticInfo, GroupInfo, PhiReport, PointInfo};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spinrefl")).args(args).env_remove("SPINREFL_THREADS").output().unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

/// Parses, re-serializes and demands identical bytes.
fn round_trip<T: Serialize + DeserializeOwned>(json: &str) -> T {
    let value: T = serde_json::from_str(json).unwrap();
    assert_eq!(report::to_json(&value), json);
    value
}

#[test]
fn group_and_cover_info() {
    let text = ok(&["group", "--type", "H3", "info"]);
    assert!(text.contains("order 120") && text.contains("classes 10") && text.contains("elliptic classes 4"), "{text}");
    let info: GroupInfo = round_trip(&ok(&["group", "--type", "H3", "info", "--format", "json"]));
    assert_eq!((info.order, info.classes, info.elliptic_classes), (120, 10, 4));
    assert!(info.parabolics.iter().any(|p| p.subset == [1, 2] && p.order == 10));

    let cover: CoverInfo = round_trip(&ok(&["cover", "--type", "H4", "info", "--format", "json"]));
    assert_eq!((cover.order, cover.weyl_order, cover.genuine), (28800, 14400, 20));
    let census: Vec<(String, usize)> = cover.angle_census.into_iter().map(|a| (a.angle, a.pairs)).collect();
    assert_eq!(census, [("pi/3".to_string(), 400), ("pi/5".to_string(), 432), ("2pi/5".to_string(), 144)]);
}

#[test]
fn chartable_round_trips() {
    let t: CharTableReport = round_trip(&ok(&["chartable", "--type", "H3", "--cover", "double", "--format", "json"]));
    assert_eq!(t.classes.len(), 18);
    assert_eq!(t.chars.iter().filter(|c| c.genuine).count(), 8);
    assert_eq!(t.chars.iter().map(|c| c.dim * c.dim).sum::<usize>(), 240);
    let w: CharTableReport = round_trip(&ok(&["chartable", "--type", "I2", "--n", "7", "--format", "json"]));
    assert!(w.chars.iter().all(|c| !c.genuine));
    assert_eq!(w.classes.iter().map(|c| c.size).sum::<usize>(), 14);
}

#[test]
fn phi_verdicts() {
    let p: PhiReport = round_trip(&ok(&["phi", "--type", "H3", "--param", "c=1", "--format", "json"]));
    assert!(p.verdicts.surjective && p.verdicts.injective);
    assert!(p.violations.is_empty());
    let even: PhiReport = round_trip(&ok(&["phi", "--type", "I2", "--n", "6", "--param", "c1=1", "--param", "c2=3", "--format", "json"]));
    assert_eq!(even.params, ["1", "3"]);
    assert!(even.verdicts.surjective);
}

#[test]
fn solvable_points() {
    let zero: Vec<PointInfo> = round_trip(&ok(&["solvable", "--type", "I2", "--n", "5", "--param", "c=0", "--format", "json"]));
    assert_eq!(zero.len(), 1);
    assert!(zero[0].coords.iter().all(|x| x.value == "0"));
    let h3: Vec<PointInfo> = round_trip(&ok(&["solvable", "--type", "H3", "--format", "json"]));
    assert_eq!(h3.len(), 4);
    assert!(h3.iter().all(|p| p.distinguished && p.solvable && p.subset == [1, 2, 3]));
    let mut norms: Vec<&str> = h3.iter().map(|p| p.norm2.value.as_str()).collect();
    norms.sort();
    assert!(norms.contains(&"8"), "{norms:?}");
}

#[test]
fn elliptic_reports() {
    let odd: EllipticInfo = round_trip(&ok(&["elliptic", "--type", "I2", "--n", "9", "--format", "json"]));
    assert_eq!(odd.elliptic_rank, 4);
    assert!(odd.isometry_ok && odd.image_kernel_ok && !odd.spin_map_surjective);
    let basis = odd.orthonormal_basis.expect("odd dihedral basis");
    assert!(basis.orthonormal && basis.shape_ok);
    let h3: EllipticInfo = round_trip(&ok(&["elliptic", "--type", "H3", "--format", "json"]));
    assert!(h3.orthonormal_basis.is_none() && h3.spin_map_surjective);
}

#[test]
fn output_is_deterministic() {
    let args = ["phi", "--type", "I2", "--n", "8", "--param", "c=1", "--format", "json"];
    let first = ok(&args);
    assert_eq!(first, ok(&args));
    let mut threaded = vec!["--threads", "2"];
    threaded.extend(args);
    assert_eq!(first, ok(&threaded));
    let from_env = Command::new(env!("CARGO_BIN_EXE_spinrefl")).args(args).env("SPINREFL_THREADS", "1").output().unwrap();
    assert_eq!(String::from_utf8(from_env.stdout).unwrap(), first);
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| run(args).status.code();
    assert_eq!(code(&["--help"]), Some(0));
    assert_eq!(code(&["--version"]), Some(0));
    assert_eq!(code(&[]), Some(1));
    assert_eq!(code(&["bogus"]), Some(1));
    assert_eq!(code(&["phi"]), Some(1));
    assert_eq!(code(&["phi", "--type", "H3", "--param", "c=abc"]), Some(1));
    assert_eq!(code(&["phi", "--type", "H3", "--param", "c=1/0"]), Some(1));
    assert_eq!(code(&["phi", "--type", "H3", "--param", "c1=1", "--param", "c2=1"]), Some(1));
    assert_eq!(code(&["phi", "--type", "I2", "--n", "6", "--param", "c1=1"]), Some(1));
    assert_eq!(code(&["group", "--type", "I2", "info"]), Some(1));
    assert_eq!(code(&["group", "--type", "E8", "info"]), Some(1));
    assert_eq!(code(&["chartable", "--type", "H3", "--cover", "triple"]), Some(1));
    assert_eq!(code(&["group", "--type", "H3", "info", "--format", "yaml"]), Some(1));
    assert_eq!(code(&["selftest", "--only", "99"]), Some(1));
    assert_eq!(code(&["selftest", "--only", "7"]), Some(0));
}
