//! The line graph of the Petersen graph is not uniformly vertex-transitive,
//! but the generalized cover solver settles its 2-uniform status: thirty of
//! its automorphisms sum to 2·J_15, and the witness verifies.
//!
//! ```bash
//! cargo run --release --example two_uniform_line_petersen
//! ```

use std::time::Instant;
use uvt::autgrp::{automorphism_group, is_automorphism};
use uvt::classify::{is_uniformly_transitive, k_uvt, Budgets, KuvtDecision, UvtDecision};
use uvt::graphs::line_graph;
use uvt::perms::sum_perms;
use uvt::presets;

fn main() {
    let lp = line_graph(&presets::petersen()).unwrap();
    let aut = automorphism_group(&lp);
    let budgets = Budgets::default();
    println!("L(Petersen): 15 vertices, |Aut| = {}", aut.order());

    match is_uniformly_transitive(&aut, &budgets).unwrap() {
        UvtDecision::No { omega_id } => println!(
            "1-uniform (maximal Schur set): no — omega(D_id) = {omega_id:?} < 14"
        ),
        other => println!("unexpected: {other:?}"),
    }

    let t = Instant::now();
    match k_uvt(&aut, 2, &budgets).unwrap() {
        KuvtDecision::Yes(witness) => {
            println!(
                "2-uniform: yes — found {} automorphisms in {:?}",
                witness.perms.len(),
                t.elapsed()
            );
            let sum = sum_perms(&witness.perms).unwrap();
            let verified = sum.is_constant(2)
                && witness
                    .perms
                    .iter()
                    .all(|p| is_automorphism(&lp, p).unwrap() && aut.contains(p));
            println!("witness re-verified (sum = 2·J_15, all in Aut): {verified}");
            println!("first five members:");
            for p in witness.perms.iter().take(5) {
                println!("  {p}");
            }
        }
        KuvtDecision::No => println!("2-uniform: no"),
        KuvtDecision::Inconclusive { reason } => println!("2-uniform: inconclusive ({reason})"),
    }
}
