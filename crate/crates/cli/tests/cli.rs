use std::path::PathBuf;
use std::process::{Command, Output};

fn nemcone(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nemcone")).args(args).env_remove("NEMCONE_OUT_DIR").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn scratch(name: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("nemcone-cli-{}-{name}", std::process::id()));
    let _ = std::fs::remove_dir_all(&d);
    std::fs::create_dir_all(&d).unwrap();
    d
}

#[test]
fn space_reports() {
    let o = nemcone(&["space", "--n", "7", "--m", "2"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("picard 7") && s.contains("boundaries 8"), "{s}");
    assert!(stdout(&nemcone(&["space", "--n", "5", "--m", "3"])).contains("picard 4"));
    let bad = nemcone(&["space", "--n", "3", "--m", "0"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(stderr(&bad).contains("n ≥ 4 required"), "{}", stderr(&bad));
}

#[test]
fn cones_and_refusals() {
    let o = nemcone(&["cone", "--which", "nem", "--n", "8", "--m", "0", "--rep", "rays"]);
    assert!(stdout(&o).contains("4 rays"), "{}", stdout(&o));
    let o = nemcone(&["cone", "--which", "eff", "--n", "5", "--m", "2", "--rep", "rays"]);
    assert!(stdout(&o).contains("4 rays"), "{}", stdout(&o));
    let o = nemcone(&["cone", "--which", "nem", "--n", "6", "--m", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("refused"), "{}", stderr(&o));
    let o = nemcone(&["cone", "--which", "nem", "--n", "7", "--m", "1", "--format", "json"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("\"inequalities\""));
}

#[test]
fn member_and_push() {
    let inside = nemcone(&["member", "--which", "nem", "--n", "7", "--m", "1", "--vector", "10,6,3,1"]);
    assert!(inside.status.success(), "{}", stdout(&inside));
    let outside = nemcone(&["member", "--which", "nem", "--n", "7", "--m", "1", "--vector", "-1,0,0,0"]);
    assert_eq!(outside.status.code(), Some(1));
    assert!(stdout(&outside).contains("outside"));
    let p = nemcone(&["push", "--map", "m21", "--vector", "5,12,6,2"]);
    assert_eq!(stdout(&p).trim(), "(1,6,5)");
    let h = nemcone(&["push", "--map", "hyperelliptic", "--g", "3", "--vector", "1,0,0"]);
    assert_eq!(stdout(&h).trim(), "(3/14,2,0)");
    let bad = nemcone(&["push", "--map", "m21", "--vector", "1,x"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn counterexample_certificate() {
    let o = nemcone(&["counterexample", "--n", "6"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("outside the boundary cone: true"));
}

#[test]
fn verify_paper_sections() {
    let o = nemcone(&["verify-paper", "--sections", "table,m21"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let s = stdout(&o);
    assert!(s.contains("PASS  1") && s.contains("PASS 10") && s.contains("3/3 criteria passed"), "{s}");
    // the counterexample criterion fails on the printed π_*F_τ vector
    let o = nemcone(&["verify-paper", "--sections", "counterexample"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("FAIL  2"));
    assert_eq!(nemcone(&["verify-paper", "--sections", "nonsense"]).status.code(), Some(2));
}

#[test]
fn corrupted_fixture_is_reported() {
    let dir = scratch("fixture");
    let good = include_str!("../../core/data/fixtures.toml");
    let path = dir.join("bad.toml");
    std::fs::write(&path, good.replace("[1, 6, 0], [1, 6, 5]]", "[1, 6, 0], [1, 6, 4]]")).unwrap();
    let o = nemcone(&["verify-paper", "--fixtures", path.to_str().unwrap(), "--sections", "m21"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL 10"), "{}", stdout(&o));
}

#[test]
fn export_round_trips() {
    let dir = scratch("export");
    let run = |args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_nemcone")).args(args).env("NEMCONE_OUT_DIR", &dir).output().unwrap()
    };
    let o = run(&["export", "--which", "nem", "--n", "7", "--m", "1", "--format", "porta"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let ieq = std::fs::read_to_string(dir.join("nem_X7_1.ieq")).unwrap();
    assert_eq!(ieq.lines().filter(|l| l.contains(">=")).count(), 8);

    // re-export of the written file is byte-identical
    let again = dir.join("again.ieq");
    let o = run(&["export", "--input", dir.join("nem_X7_1.ieq").to_str().unwrap(), "--format", "porta", "--output", again.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(std::fs::read_to_string(&again).unwrap(), ieq);

    let o = run(&["export", "--which", "m21-nem", "--format", "json"]);
    assert!(o.status.success());
    let json = std::fs::read_to_string(dir.join("m21_pushnem.json")).unwrap();
    for row in ["[1, 1, 0]", "[1, 6, 0]", "[1, 6, 20]", "[3, 3, 10]"] {
        assert!(json.contains(row), "{json}");
    }
    let back = dir.join("back.json");
    run(&["export", "--input", dir.join("m21_pushnem.json").to_str().unwrap(), "--format", "json", "--output", back.to_str().unwrap()]);
    assert_eq!(std::fs::read_to_string(back).unwrap(), json);

    let o = run(&["export", "--which", "nem", "--n", "7", "--m", "1", "--format", "porta", "--rep", "rays"]);
    assert!(o.status.success());
    let poi = std::fs::read_to_string(dir.join("nem_X7_1.poi")).unwrap();
    assert!(poi.contains("CONE_SECTION") && poi.contains("10 6 3 1"), "{poi}");

    let o = run(&["export", "--which", "nem", "--n", "7", "--m", "1", "--format", "latex"]);
    assert!(o.status.success());
    let tex = std::fs::read_to_string(dir.join("nem_X7_1.tex")).unwrap();
    assert!(tex.contains("\\begin{aligned}") && tex.contains("\\check b_{5}"), "{tex}");
    assert_eq!(run(&["export", "--format", "xml"]).status.code(), Some(2));
}

#[test]
fn deterministic_output() {
    let a = nemcone(&["cone", "--which", "nem", "--n", "10", "--m", "1", "--rep", "rays"]);
    let b = nemcone(&["cone", "--which", "nem", "--n", "10", "--m", "1", "--rep", "rays"]);
    assert_eq!(a.stdout, b.stdout);
    let a = nemcone(&["verify-paper", "--sections", "nem-x0,eff-x2"]);
    let b = nemcone(&["verify-paper", "--sections", "nem-x0,eff-x2"]);
    assert_eq!(a.stdout, b.stdout);
}
