use std::path::Path;
use std::process::{Command, Output};

fn ktdom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ktdom"))
        .args(args)
        .env_remove("KTDOM_MAX_N")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

const HEADER: &str = "instance,n,delta,k,quantity,value,witness,elapsed_ms,claim,verdict";

#[test]
fn solve_cycle_and_rook() {
    let o = ktdom(&[
        "solve",
        "--family",
        "cycle:5",
        "--k",
        "1",
        "--quantity",
        "Gamma",
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(
        stdout(&o),
        format!("{HEADER}\ncycle:5,5,2,1,Gamma,3,1 2 3,,,\n")
    );

    let o = ktdom(&[
        "solve",
        "--family",
        "rook:4,4",
        "--k",
        "3",
        "--strategy",
        "bnb",
    ]);
    assert!(o.status.success());
    let row = stdout(&o).lines().nth(1).unwrap().to_string();
    assert!(row.starts_with("\"rook:4,4\",16,6,3,Gamma,12,"), "{row}");
}

#[test]
fn solve_lower_and_hypergraph_quantities() {
    let o = ktdom(&["solve", "--family", "K4", "--k", "2", "--quantity", "gamma"]);
    assert_eq!(
        stdout(&o).lines().nth(1).unwrap(),
        "complete:4,4,3,2,gamma,3,1 2 3,,,"
    );
    let o = ktdom(&[
        "solve",
        "--family",
        "C4",
        "--k",
        "2",
        "--quantity",
        "upsilon",
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).lines().nth(1).unwrap().contains(",2,upsilon,4,"));
}

#[test]
fn solve_reads_graph_and_hypergraph_files() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("c6.txt");
    let hyper = dir.path().join("c6.hg");
    assert!(
        ktdom(&["gen", "--family", "C6", "--output", graph.to_str().unwrap()])
            .status
            .success()
    );
    let o = ktdom(&[
        "gen",
        "--family",
        "C6",
        "--as-hypergraph",
        "ong",
        "--output",
        hyper.to_str().unwrap(),
    ]);
    assert!(o.status.success());

    let from_graph = ktdom(&["solve", "--input", graph.to_str().unwrap(), "--k", "1"]);
    assert!(from_graph.status.success(), "{}", stderr(&from_graph));
    assert!(stdout(&from_graph)
        .lines()
        .nth(1)
        .unwrap()
        .contains(",6,2,1,Gamma,4,"));

    let from_hyper = ktdom(&[
        "solve",
        "--input",
        hyper.to_str().unwrap(),
        "--k",
        "1",
        "--quantity",
        "upsilon",
    ]);
    assert!(from_hyper.status.success(), "{}", stderr(&from_hyper));
    assert!(stdout(&from_hyper)
        .lines()
        .nth(1)
        .unwrap()
        .contains(",upsilon,4,"));
}

#[test]
fn gen_round_trips_through_the_text_format() {
    let o = ktdom(&["gen", "--family", "rook:2,3"]);
    let text = stdout(&o);
    let g = ktdom::graph::parse_graph(&text).unwrap();
    assert_eq!(ktdom::graph::serialize_graph(&g), text);
    assert_eq!((g.n(), g.m()), (6, 9));
}

#[test]
fn domain_errors_are_json_with_exit_1() {
    let o = ktdom(&["solve", "--family", "P3", "--k", "2"]);
    assert_eq!(o.status.code(), Some(1));
    let err: serde_json::Value = serde_json::from_str(stderr(&o).trim()).unwrap();
    assert_eq!(err["error"], "domain");
    assert!(o.stdout.is_empty());
}

#[test]
fn usage_errors_exit_1_and_help_exits_0() {
    assert_eq!(ktdom(&["solve", "--k", "1"]).status.code(), Some(1));
    assert_eq!(
        ktdom(&["solve", "--family", "nope:3", "--k", "1"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(ktdom(&["verify", "--claims", "C99"]).status.code(), Some(1));
    assert_eq!(ktdom(&["--help"]).status.code(), Some(0));
    let o = ktdom(&["solve", "--input", "/nonexistent/graph.txt", "--k", "1"]);
    assert_eq!(o.status.code(), Some(1));
    let err: serde_json::Value = serde_json::from_str(stderr(&o).trim()).unwrap();
    assert_eq!(err["error"], "io");
}

#[test]
fn too_large_instances_are_resource_errors() {
    let o = Command::new(env!("CARGO_BIN_EXE_ktdom"))
        .args(["solve", "--family", "C12", "--k", "1"])
        .env("KTDOM_MAX_N", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    let err: serde_json::Value = serde_json::from_str(stderr(&o).trim()).unwrap();
    assert_eq!(err["error"], "resource");
}

#[test]
fn verify_exit_codes() {
    let o = ktdom(&["verify", "--claims", "C13", "--k", "1..3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let ledger = stdout(&o);
    assert_eq!(ledger.lines().count(), 4);
    assert!(ledger.lines().skip(1).all(|l| l.ends_with(",C13,holds")));

    // a proved claim with a wrong closed form on C_8 exits 2
    let o = ktdom(&["verify", "--claims", "C6", "--n", "8"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("C6 [violated] n=8"));

    // conjecture violations are data points, not failures
    let o = ktdom(&["scan", "--families", "C4", "--k", "2", "--no-question"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains(",C14,violated"));
}

fn ledger_with_workers(dir: &Path, workers: &str) -> Vec<u8> {
    let path = dir.join(format!("ledger-{workers}.csv"));
    let o = ktdom(&[
        "verify",
        "--claims",
        "C1,C2,C10,C18,C23,C26",
        "--corpus",
        "connected:<=6",
        "--workers",
        workers,
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    std::fs::read(path).unwrap()
}

#[test]
fn ledgers_do_not_depend_on_worker_count() {
    let dir = tempfile::tempdir().unwrap();
    let one = ledger_with_workers(dir.path(), "1");
    let four = ledger_with_workers(dir.path(), "4");
    assert!(one.len() > 1000);
    assert_eq!(one, four);
}

#[test]
fn json_ledger_carries_claim_details() {
    let o = ktdom(&[
        "verify", "--claims", "C20", "--n", "4", "--k", "2", "--format", "json",
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let rows: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let row = &rows[0];
    assert_eq!(row["claim"], "C20");
    assert_eq!(row["verdict"], "holds");
    assert_eq!(row["value"], 6);
    assert_eq!(row["expected"], "Gamma = 6");
}

#[test]
fn enumerate_lists_minimal_sets() {
    let o = ktdom(&["enumerate", "--family", "K4", "--k", "2"]);
    assert!(o.status.success());
    let sets: Vec<_> = stdout(&o).lines().map(str::to_string).collect();
    assert_eq!(sets, ["1 2 3", "1 2 4", "1 3 4", "2 3 4"]);
    let o = ktdom(&["enumerate", "--family", "K4", "--k", "2", "--limit", "2"]);
    assert_eq!(stdout(&o).lines().count(), 2);
}
