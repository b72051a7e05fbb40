//! The line graph of the Petersen graph is vertex-transitive but *not*
//! uniformly vertex-transitive: the identity neighborhood of its
//! derangement graph peaks at a 12-clique, short of the 14 required.
//!
//! ```bash
//! cargo run --release --example line_graph_petersen
//! ```

use uvt::autgrp::automorphism_group;
use uvt::classify::{classify_graph, Budgets, UvtVerdict};
use uvt::graphs::line_graph;
use uvt::perms::Perm;
use uvt::presets;

fn main() {
    let lp = line_graph(&presets::petersen()).unwrap();
    println!(
        "L(Petersen): {} vertices, {}-regular",
        lp.n(),
        lp.degree(0)
    );

    let aut = automorphism_group(&lp);
    let elems = aut.elements(50_000).unwrap();
    let derangements = elems.iter().filter(|p| p.is_derangement()).count();
    println!("|Aut| = {}, {} of them derangements", aut.order(), derangements);

    let report = classify_graph(&lp, "line:petersen", &Budgets::default());
    match report.uvt {
        UvtVerdict::No { omega_id } => {
            println!(
                "omega(D_id) = {:?} < {} - 1, so no maximal Schur set exists",
                omega_id,
                lp.n()
            );
        }
        other => println!("unexpected verdict: {other:?}"),
    }
    println!("Cayley: {:?}", report.cayley);
    println!("omega(D) - n = {:?}", report.omega_deficit);

    // a concrete Schur-orthogonal pair of automorphisms, for flavor
    let ders: Vec<&Perm> = elems.iter().filter(|p| p.is_derangement()).collect();
    if let Some(pair) = ders
        .iter()
        .flat_map(|a| ders.iter().map(move |b| (a, b)))
        .find(|(a, b)| a.schur_orthogonal(b).unwrap())
    {
        println!("orthogonal pair example:\n  {}\n  {}", pair.0, pair.1);
    }
}
