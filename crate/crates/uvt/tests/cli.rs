//! End-to-end tests of the command-line surface: analyze output, census
//! CSV/log/cache, and the group subcommands, including the generator-JSON
//! input format.

use std::process::{Command, Output};
use uvt::graphs::{write_graph6, Graph};
use uvt::grouptheory::coset_action;
use uvt::presets;

fn uvt_bin(args: &[&str], dir: &std::path::Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_uvt"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn analyze_petersen() {
    let dir = tempfile::tempdir().unwrap();
    let v = stdout_json(&uvt_bin(&["analyze", "petersen"], dir.path()));
    assert_eq!(v["aut_order"], "120");
    assert_eq!(v["vertex_transitive"], true);
    assert_eq!(v["cayley"]["status"], "no");
    assert_eq!(v["uvt"]["status"], "yes");
    assert_eq!(v["uvt"]["witness"].as_array().unwrap().len(), 10);
    assert_eq!(v["omega_deficit"], 0);
}

#[test]
fn analyze_line_of_petersen() {
    let dir = tempfile::tempdir().unwrap();
    let v = stdout_json(&uvt_bin(&["analyze", "line:petersen"], dir.path()));
    assert_eq!(v["uvt"]["status"], "no");
    assert_eq!(v["uvt"]["omega_id"], 12);
    assert_eq!(v["omega_deficit"], -2);
}

#[test]
fn analyze_circulant_is_cayley() {
    let dir = tempfile::tempdir().unwrap();
    let v = stdout_json(&uvt_bin(&["analyze", "circulant:5:1"], dir.path()));
    assert_eq!(v["cayley"]["status"], "yes");
    assert_eq!(v["cayley"]["order"], "5");
    assert_eq!(v["uvt"]["status"], "yes");
}

#[test]
fn analyze_raw_graph6_line() {
    let dir = tempfile::tempdir().unwrap();
    let v = stdout_json(&uvt_bin(&["analyze", "D~{"], dir.path()));
    assert_eq!(v["n"], 5);
    assert_eq!(v["cayley"]["status"], "yes");
}

#[test]
fn analyze_rejects_garbage_with_nonzero_exit() {
    let dir = tempfile::tempdir().unwrap();
    let out = uvt_bin(&["analyze", "kneser:not:numbers"], dir.path());
    assert!(!out.status.success());
    assert!(!out.stderr.is_empty());
}

#[test]
fn census_csv_log_and_cache() {
    let dir = tempfile::tempdir().unwrap();
    let petersen = write_graph6(&presets::petersen());
    let c5 = write_graph6(&uvt::graphs::circulant(5, &[1]).unwrap());
    let p3 = write_graph6(&Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap());
    let file = dir.path().join("mini.g6");
    std::fs::write(&file, format!(">>graph6<<\n{petersen}\n{c5}\n{p3}\n")).unwrap();

    let run = |extra: &[&str]| {
        let mut args = vec![
            "census",
            file.to_str().unwrap(),
            "--cache",
            "cache",
            "--log",
            "reports.jsonl",
        ];
        args.extend_from_slice(extra);
        uvt_bin(&args, dir.path())
    };

    let first = run(&[]);
    assert!(first.status.success());
    let csv1 = String::from_utf8(first.stdout).unwrap();
    assert_eq!(
        csv1,
        "n,vt,non_cayley,uvt,non_uvt,unknown\n\
         3,0,0,0,0,0\n\
         5,1,0,0,0,0\n\
         10,1,1,1,0,0\n"
    );

    // per-graph JSON log, one line per input graph, in input order
    let log = std::fs::read_to_string(dir.path().join("reports.jsonl")).unwrap();
    let ids: Vec<String> = log
        .lines()
        .map(|l| serde_json::from_str::<serde_json::Value>(l).unwrap()["id"]
            .as_str()
            .unwrap()
            .to_string())
        .collect();
    assert_eq!(ids, vec![petersen.clone(), c5.clone(), p3.clone()]);

    // cache populated; second run is byte-identical
    let cached_files = std::fs::read_dir(dir.path().join("cache")).unwrap().count();
    assert_eq!(cached_files, 3);
    let second = run(&[]);
    let csv2 = String::from_utf8(second.stdout).unwrap();
    assert_eq!(csv1, csv2);

    // json format option
    let third = run(&["--format", "json"]);
    let rows: serde_json::Value = serde_json::from_slice(&third.stdout).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 3);
    assert_eq!(rows[2]["uvt"], 1);
}

#[test]
fn group_subcommands() {
    let dir = tempfile::tempdir().unwrap();
    let d10 = uvt::grouptheory::PermGroup::new(
        5,
        vec![
            uvt::perms::Perm::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap(),
            uvt::perms::Perm::from_cycles(5, &[&[1, 4], &[2, 3]]).unwrap(),
        ],
    )
    .unwrap();
    let path = dir.path().join("d10.json");
    std::fs::write(&path, serde_json::to_string(&d10.to_json()).unwrap()).unwrap();
    let p = path.to_str().unwrap();

    let v = stdout_json(&uvt_bin(&["group", p, "order"], dir.path()));
    assert_eq!(v["order"], "10");
    assert_eq!(v["degree"], 5);

    let v = stdout_json(&uvt_bin(&["group", p, "uniform"], dir.path()));
    assert_eq!(v["status"], "yes");
    assert_eq!(v["witness"].as_array().unwrap().len(), 5);

    let v = stdout_json(&uvt_bin(&["group", p, "omega"], dir.path()));
    assert_eq!(v["deficit"], 0);
    assert_eq!(v["exact"], true);

    let v = stdout_json(&uvt_bin(&["group", p, "blocks"], dir.path()));
    assert_eq!(v["systems"].as_array().unwrap().len(), 0); // primitive

    let v = stdout_json(&uvt_bin(&["group", p, "kuvt", "2"], dir.path()));
    assert_eq!(v["status"], "yes");
    assert_eq!(v["witness"].as_array().unwrap().len(), 10);
}

#[test]
fn group_omega_matches_table_row() {
    // A5 on the cosets of an order-3 subgroup: omega(D(G)) - 20 = -10
    let dir = tempfile::tempdir().unwrap();
    let act = coset_action(&presets::a5_natural(), &presets::c3_in_a5())
        .unwrap()
        .group;
    let path = dir.path().join("a5deg20.json");
    std::fs::write(&path, serde_json::to_string(&act.to_json()).unwrap()).unwrap();
    let v = stdout_json(&uvt_bin(
        &["group", path.to_str().unwrap(), "omega"],
        dir.path(),
    ));
    assert_eq!(v["degree"], 20);
    assert_eq!(v["deficit"], -10);
    assert_eq!(v["exact"], true);
}

#[test]
fn env_overrides_feed_budgets() {
    // a tiny clique budget forced through the environment makes the UVT
    // decision inconclusive rather than wrong
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_uvt"))
        .args(["analyze", "petersen"])
        .env("UVT_BUDGET_CLIQUE", "1")
        .current_dir(dir.path())
        .output()
        .unwrap();
    assert!(out.status.success(), "inconclusive still exits 0");
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["uvt"]["status"], "inconclusive");
}
