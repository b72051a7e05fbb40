//! A miniature census run over self-constructed fixtures: write a graph6
//! file, classify every line, and print per-vertex-count summary rows plus
//! the per-graph verdicts. The same pipeline backs `uvt census`.
//!
//! ```bash
//! cargo run --release --example census_pipeline
//! ```

use uvt::census::{census_csv, run_census, CensusOptions};
use uvt::graphs::{circulant, johnson, line_graph, write_graph6};
use uvt::presets;

fn main() {
    let fixtures = vec![
        presets::petersen(),
        johnson(5, 2).unwrap(),
        johnson(6, 2).unwrap(),
        line_graph(&presets::petersen()).unwrap(),
        circulant(5, &[1]).unwrap(),
        circulant(6, &[1, 3]).unwrap(),
        circulant(10, &[1, 5]).unwrap(),
    ];
    let mut text = String::from(">>graph6<<\n");
    for g in &fixtures {
        text.push_str(&write_graph6(g));
        text.push('\n');
    }
    let dir = std::env::temp_dir();
    let path = dir.join("uvt_example_census.g6");
    std::fs::write(&path, &text).expect("fixture file written");

    let opts = CensusOptions {
        threads: 2,
        cache: Some(dir.join("uvt_example_cache")),
        ..CensusOptions::default()
    };
    let out = run_census(&path, &opts).expect("census runs");

    println!("per-graph verdicts:");
    for r in &out.reports {
        let uvt = match &r.uvt {
            uvt::classify::UvtVerdict::Yes { .. } => "yes",
            uvt::classify::UvtVerdict::No { .. } => "no",
            uvt::classify::UvtVerdict::Inconclusive { .. } => "unknown",
        };
        let cayley = match &r.cayley {
            uvt::classify::CayleyVerdict::Yes { .. } => "yes",
            uvt::classify::CayleyVerdict::No => "no",
            uvt::classify::CayleyVerdict::Inconclusive { .. } => "unknown",
        };
        println!(
            "  {:<22} n={:<3} vt={:<5} cayley={:<8} uvt={}",
            r.id, r.n, r.vertex_transitive, cayley, uvt
        );
    }
    println!("\nsummary rows (CSV):\n{}", census_csv(&out.rows));
}
