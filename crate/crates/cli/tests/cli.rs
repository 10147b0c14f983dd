use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schurpos"))
        .args(args)
        .env_remove("SCHURPOS_CACHE")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn classify_examples() {
    let o = run(&["classify", "[6,5,3,3,3,1]"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "type2 beta=[3,3,3,3,3,1] s=2 alpha=[1] (both)\n");
    let o = run(&["classify", "[6,5,3,3,3,1]", "--format", "tsv"]);
    assert_eq!(stdout(&o), "type2\t[3,3,3,3,3,1]\t2\t[1]\tboth\n");
    assert_eq!(stdout(&run(&["classify", "[2,2]"])), "none\n");
}

#[test]
fn covers_examples() {
    let o = run(&["covers", "[6,5,4,3,3,1]", "[6,5,3,3,3,1]"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "positive\n");
    let o = run(&["covers", "[2,2,1]", "[2,2]"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("negative witness=["), "{}", stdout(&o));
    let o = run(&["covers", "[2,2,1]", "[2,2]", "--format", "tsv"]);
    assert!(stdout(&o).starts_with("negative\t["));
}

#[test]
fn expansions_round_trip_through_the_library_parser() {
    let o = run(&["expand", "[2,1]"]);
    let e: schurpos::schur::SchurExpansion = stdout(&o).parse().unwrap();
    assert_eq!(e.to_string(), stdout(&o));
    assert_eq!(e, schurpos::schur::product_conj_comp(&"[2,1]".parse().unwrap(), 4).unwrap());
    assert_eq!(stdout(&run(&["kron", "2", "0"])), "1\t[2,2]\n");
    let d = run(&["diff", "[3,2,1]", "[3,2]", "--m", "6"]);
    let d: schurpos::schur::SchurExpansion = stdout(&d).parse().unwrap();
    assert_eq!(d.coefficient(&"[7,7,7,5,4,4,1,1]".parse().unwrap()), 1.into());
}

#[test]
fn reports() {
    let o = run(&["verify", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "conjecture-sweep n=4 pairs=12 violations=0\n");
    assert_eq!(stdout(&run(&["verify", "4", "--format", "tsv"])), "");
    let o = run(&["lexmin", "[2,2,1]"]);
    assert_eq!(stdout(&o), "eta=[1] conjectured=[1] match=1\n");
    let o = run(&["inject", "[3,1,1]"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("injection nu=[3,1,1] mu=[3,2,1] algorithm=type2-col1 "));
    assert!(stdout(&o).ends_with("failures=0\n"));
}

#[test]
fn domain_errors_exit_1_with_one_line() {
    for args in [
        vec!["classify", "[3,2"],
        vec!["classify", "[3,4]"],
        vec!["covers", "[2,1]", "[3]"],
        vec!["expand", "[1]", "--m", "1"],
        vec!["lexmin", "[3,1,1]"],
        vec!["inject", "[3,1,1]", "--algorithm", "width4"],
        vec!["inject", "[3,1,1]", "--algorithm", "nope"],
        vec!["verify", "0"],
        vec!["kron", "2", "4"],
        vec!["verify", "3", "--m", "4"],
        vec!["frobnicate"],
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(1), "{:?}", args);
        let e = stderr(&o);
        assert_eq!(e.lines().count(), 1, "{:?}: {}", args, e);
        assert!(e.starts_with("error: "), "{}", e);
        assert!(o.stdout.is_empty());
    }
}

#[test]
fn unsafe_m_goes_below_the_bound() {
    let o = run(&["expand", "[1]", "--m", "1", "--unsafe-m"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1\t[1]\n");
}

fn cached(dir: &Path, args: &[&str]) -> Output {
    let mut full = vec!["--cache-dir", dir.to_str().unwrap()];
    full.extend_from_slice(args);
    run(&full)
}

#[test]
fn warm_cache_output_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        vec!["expand", "[2,1]"],
        vec!["covers", "[2,2,1]", "[2,2]"],
        vec!["classify", "[6,5,3,3,3,1]", "--format", "tsv"],
        vec!["verify", "4"],
        vec!["kron", "2", "1"],
    ] {
        let plain = run(&args);
        let cold = cached(dir.path(), &args);
        let warm = cached(dir.path(), &args);
        assert_eq!(plain.stdout, cold.stdout, "{:?}", args);
        assert_eq!(cold.stdout, warm.stdout, "{:?}", args);
        assert_eq!(warm.status.code(), Some(0));
    }
    assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 5);
}

#[test]
fn cache_dir_can_come_from_the_environment() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_schurpos"))
        .args(["classify", "[2,1]"])
        .env("SCHURPOS_CACHE", dir.path())
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 1);
}

fn only_file(dir: &Path) -> std::path::PathBuf {
    fs::read_dir(dir).unwrap().next().unwrap().unwrap().path()
}

#[test]
fn verify_fails_on_drift() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(cached(dir.path(), &["verify", "3"]).status.code(), Some(0));
    assert_eq!(cached(dir.path(), &["verify", "3"]).status.code(), Some(0));
    let file = only_file(dir.path());
    let text = fs::read_to_string(&file).unwrap().replace("pairs=7", "pairs=8");
    fs::write(&file, text).unwrap();
    let o = cached(dir.path(), &["verify", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("differs"));
}

#[test]
fn stored_status_is_replayed() {
    // a cached violation keeps exit status 2
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(cached(dir.path(), &["lexmin", "[2,2,1]"]).status.code(), Some(0));
    let file = only_file(dir.path());
    let text = fs::read_to_string(&file).unwrap();
    let (stamp, _) = text.split_once('\n').unwrap();
    let stamp = stamp.replace("status=0", "status=2");
    fs::write(&file, format!("{}\neta=[1] conjectured=[2] match=0\n", stamp)).unwrap();
    let o = cached(dir.path(), &["lexmin", "[2,2,1]"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stdout(&o), "eta=[1] conjectured=[2] match=0\n");
    // a stamp from another format version is ignored
    fs::write(&file, "schurpos-cache v0 old status=0\nbogus\n").unwrap();
    assert_eq!(stdout(&cached(dir.path(), &["lexmin", "[2,2,1]"])), "eta=[1] conjectured=[1] match=1\n");
}

#[test]
fn jobs_flag_does_not_change_output() {
    assert_eq!(run(&["verify", "5", "--jobs", "1"]).stdout, run(&["verify", "5"]).stdout);
}
