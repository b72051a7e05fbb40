//! The small Johnson graphs J(n,2) cover all three classes of the chain:
//! J(5,2) is UVT but not Cayley, J(6,2) is vertex-transitive but not UVT,
//! and J(7,2) is a Cayley graph for a nonabelian group of order 21.
//!
//! ```bash
//! cargo run --release --example johnson_family
//! ```

use uvt::autgrp::automorphism_group;
use uvt::classify::{classify_graph, Budgets};
use uvt::graphs::{complement, johnson, line_graph};
use uvt::grouptheory::{cayley_realization, find_regular_subgroup, RegularSearch};
use uvt::presets;

fn main() {
    let budgets = Budgets::default();

    let j52 = johnson(5, 2).unwrap();
    assert!(complement(&presets::petersen()).same_adjacency(&j52));
    let r = classify_graph(&j52, "johnson:5:2", &budgets);
    println!(
        "J(5,2) = complement(Petersen): cayley={:?} uvt_yes={}",
        r.cayley,
        r.is_uvt_yes()
    );

    let j62 = johnson(6, 2).unwrap();
    let k6 = uvt::graphs::circulant(6, &[1, 2, 3]).unwrap();
    assert!(line_graph(&k6).unwrap().same_adjacency(&j62));
    let r = classify_graph(&j62, "johnson:6:2", &budgets);
    println!(
        "J(6,2) = L(K6): uvt={:?} omega_deficit={:?}",
        r.uvt, r.omega_deficit
    );

    let j72 = johnson(7, 2).unwrap();
    let aut = automorphism_group(&j72);
    println!("J(7,2): 21 vertices, |Aut| = {}", aut.order());
    match find_regular_subgroup(&aut, 50_000, 1_000_000_000).unwrap() {
        RegularSearch::Found(reg) => {
            println!("regular subgroup of order {} found:", reg.order());
            for g in reg.generators().iter().take(3) {
                println!("  {g}");
            }
            let realization = cayley_realization(&j72, &reg).unwrap();
            println!(
                "Cayley realization verified; connection set (vertex labels): {:?}",
                realization.connection
            );
        }
        other => println!("unexpected: {other:?}"),
    }
}
