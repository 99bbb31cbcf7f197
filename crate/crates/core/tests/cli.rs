use std::process::{Command, Output};
use std::sync::Arc;

use stdpairs::cli_io::{load, save, Archive};
use stdpairs::covers::Cover;
use stdpairs::ideal::MonomialIdeal;
use stdpairs::linalg::IntVector;
use stdpairs::monoid::AffineMonoid;
use stdpairs::polyhedral::FaceIndex;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stdpairs")).args(args).arg("--quiet").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn q() -> Arc<AffineMonoid> {
    Arc::new(AffineMonoid::from_rows(&[[1, 2], [0, 2]]).unwrap())
}

#[test]
fn monoid_faces_from_inline_matrix() {
    let o = run(&["monoid", "--matrix", "2 2; 1 2; 0 2", "supports"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "(): (0, 1) (1, -1)\n(0,): (0, 1)\n(1,): (1, -1)\n(0, 1):\n");
}

#[test]
fn bad_matrix_exits_with_two() {
    let o = run(&["monoid", "--matrix", "2 2; 1 2", "info"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["monoid", "--matrix", "1 2; 1 -1", "info"]);
    assert_eq!(o.status.code(), Some(2), "a line is not pointed");
}

#[test]
fn missing_file_exits_with_one() {
    let o = run(&["ideal", "/nonexistent/ideal.txt", "cover"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn ideal_commands_and_cache_persistence() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("i.txt");
    let output = dir.path().join("o.txt");
    let ideal = MonomialIdeal::from_rows(q(), &[[4, 4]]).unwrap();
    save(&Archive::Ideal(ideal), &input).unwrap();
    let path = input.to_str().unwrap();

    let o = run(&["ideal", path, "cover"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "{(0,): [([[0], [0]]^T,[[1], [0]]), ([[2], [2]]^T,[[1], [0]])]}\n");
    assert_eq!(stdout(&run(&["ideal", path, "radical"])), "An ideal whose generating set is\n[[2]\n [2]]\n");
    assert_eq!(stdout(&run(&["ideal", path, "mult", "--face", "(0,)"])), "2\n");
    assert_eq!(stdout(&run(&["ideal", path, "assoc"])), "(0,): <(2, 2)>\n");

    let o = run(&["ideal", path, "decompose", "--out", output.to_str().unwrap()]);
    assert!(o.status.success());
    let Archive::Ideal(back) = load(&output).unwrap() else { panic!("ideal expected") };
    assert!(back.has_cached_cover() && back.has_cached_decomposition());
    assert!(run(&["ideal", output.to_str().unwrap(), "cover", "--verify"]).status.success());
}

#[test]
fn loop_cap_exits_with_three() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("i.txt");
    let ideal = MonomialIdeal::from_rows(q(), &[[4, 4], [5, 0]]).unwrap();
    save(&Archive::Ideal(ideal), &input).unwrap();
    let o = run(&["ideal", input.to_str().unwrap(), "cover", "--loop-cap", "0"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn pair_divides_and_export() {
    let dir = tempfile::tempdir().unwrap();
    let q = q();
    let mut c = Cover::new(q.clone());
    c.insert(IntVector::from_i64s(&[2, 0]), FaceIndex::new([0]));
    let p = dir.path().join("p.txt");
    save(&Archive::Cover(c), &p).unwrap();
    let ps = p.to_str().unwrap();
    assert_eq!(stdout(&run(&["pair", "divides", ps, ps])), "[[0 0 0]]\n");

    let i = dir.path().join("i.txt");
    save(&Archive::Ideal(MonomialIdeal::from_rows(q, &[[4, 4]]).unwrap()), &i).unwrap();
    let script = stdout(&run(&["export-m2", i.to_str().unwrap()]));
    assert!(script.contains("S = createMonomialSubalgebra {a, a^2*b^2}"), "{script}");
}
