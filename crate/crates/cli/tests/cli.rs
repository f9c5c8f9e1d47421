use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use starkit::fixtures;
use starkit::scene::{save_scene, Scene};
use starkit::GeodesicPolygon;
use tempfile::TempDir;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_starkit"));
    c.env_remove("STARKIT_EPS");
    c
}

fn write_scene(dir: &Path, name: &str, poly: GeodesicPolygon) -> PathBuf {
    let path = dir.join(format!("{name}.scene"));
    std::fs::write(&path, save_scene(&Scene::new(poly))).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

struct Scenes {
    _dir: TempDir,
    lshape: String,
    ushape: String,
    square: String,
    htri: String,
}

fn scenes() -> Scenes {
    let dir = tempfile::tempdir().unwrap();
    let p = |n, poly| write_scene(dir.path(), n, poly).to_string_lossy().into_owned();
    Scenes {
        lshape: p("lshape", fixtures::lshape()),
        ushape: p("ushape", fixtures::ushape()),
        square: p("square", fixtures::square()),
        htri: p("htri", fixtures::htri()),
        _dir: dir,
    }
}

#[test]
fn kernel_both_methods_on_lshape() {
    let s = scenes();
    let o = run(&["kernel", &s.lshape, "--method", "both"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let blocks: Vec<&str> = text.split("method=").skip(1).collect();
    assert_eq!(blocks.len(), 2);
    for b in &blocks {
        assert!(b.contains("vertices=4\n0 0\n1 0\n1 1\n0 1\n"), "{text}");
    }
    let h: f64 = text.lines().find_map(|l| l.strip_prefix("hausdorff=")).unwrap().parse().unwrap();
    assert!(h <= 1e-6);
}

#[test]
fn kernel_ushape_empty_and_square_itself() {
    let s = scenes();
    let o = run(&["kernel", &s.ushape]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "EMPTY\n");
    let o = run(&["kernel", &s.square, "--method", "halfplane"]);
    assert_eq!(stdout(&o), "vertices=4\n0 0\n1 0\n1 1\n0 1\n");
}

#[test]
fn kernel_writes_svg() {
    let s = scenes();
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("k.svg");
    let o = run(&["kernel", &s.ushape, "--out", svg.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let doc = std::fs::read_to_string(&svg).unwrap();
    assert!(doc.contains(r#"id="layer-kernel" class="empty""#));
}

#[test]
fn extreme_and_certify_fixtures() {
    let s = scenes();
    let o = run(&["extreme", &s.lshape]);
    let text = stdout(&o);
    assert!(text.starts_with("extreme count=5\n"));
    assert_eq!(text.lines().count(), 6);
    assert!(!text.contains("\n3 1 1 "));

    let o = run(&["certify", &s.lshape]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("STARSHAPED kernel=4 vertices\n"));

    let o = run(&["certify", &s.ushape]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("NOT STARSHAPED (B empty)\n"));

    let o = run(&["certify", &s.htri]);
    assert!(stdout(&o).starts_with("STARSHAPED kernel=3 vertices\n"));
}

#[test]
fn star_queries_and_preconditions() {
    let s = scenes();
    let o = run(&["star", &s.lshape, "--point", "0.5,0.5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("vertices=6\n"));
    let o = run(&["star", &s.lshape, "--point", "1.5,1.5"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("outside"));
    let o = run(&["star", &s.htri, "--point", "0.9,0.9"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.scene");
    std::fs::write(&bad, "model: euclidean\npolygon: [[0,0],[1,0],[1,1]\n").unwrap();
    let o = run(&["kernel", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));

    std::fs::write(&bad, "model: hyperbolic-klein\npolygon: [[0,0],[1.2,0],[0,0.5]]\n").unwrap();
    assert_eq!(run(&["kernel", bad.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(run(&["kernel", "/no/such/file.scene"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--trials", "0"]).status.code(), Some(2));
}

#[test]
fn eps_override() {
    let s = scenes();
    let o = bin().args(["kernel", &s.lshape]).env("STARKIT_EPS", "1e-7").output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("vertices=4\n"));
    let o = bin().args(["kernel", &s.lshape]).env("STARKIT_EPS", "-1").output().unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("STARKIT_EPS"));
}

#[test]
fn verify_small_run_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let rep = dir.path().join("r.txt");
    let args = ["verify", "--trials", "1", "--seed", "7", rep.to_str().unwrap()];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(std::fs::read(&rep).unwrap(), a.stdout);
    let text = stdout(&a);
    assert_eq!(text.lines().filter(|l| l.starts_with("trial=")).count(), 1);
    assert!(text.contains("result=PASS"));
}

#[test]
fn injected_bug_yields_one_candidate_per_trial() {
    let o = run(&["verify", "--trials", "6", "--seed", "3", "--nmax", "10", "--inject-bug", "shift-kernel"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.starts_with("candidate ")).count(), 6);
    assert!(text.contains("candidates=6"));
}

#[test]
fn single_model_campaign() {
    let o = run(&["verify", "--trials", "4", "--seed", "1", "--model", "hyperbolic-klein", "--nmax", "9"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().filter(|l| l.starts_with("trial=")).all(|l| l.contains("model=hyperbolic-klein")));
    assert_eq!(run(&["verify", "--model", "poincare"]).status.code(), Some(2));
}

#[test]
fn render_is_deterministic_and_layered() {
    let s = scenes();
    let a = run(&["render", &s.lshape]);
    let b = run(&["render", &s.lshape]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let svg = stdout(&a);
    assert_eq!(svg.matches("<path ").count(), 6);
    let o = run(&["render", &s.htri, "--layers", "polygon,kernel"]);
    let svg = stdout(&o);
    assert_eq!(svg.matches("<path ").count(), 2);
    assert!(svg.contains("ideal-boundary"));
    assert_eq!(run(&["render", &s.htri, "--layers", "halo"]).status.code(), Some(2));
}

#[test]
fn generate_round_trips_through_kernel() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["generate", "--model", "hyperbolic-klein", "--n", "9", "--seed", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let path = dir.path().join("g.scene");
    std::fs::write(&path, &o.stdout).unwrap();
    let k = run(&["certify", path.to_str().unwrap()]);
    assert!(stdout(&k).starts_with("STARSHAPED"), "{}", stdout(&k));
}
