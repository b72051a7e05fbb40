//! Factorizing block systems: when the fixer of an invariant partition
//! carries enough mutually orthogonal elements and the quotient action on
//! the blocks is uniformly transitive, the products of the two sets form a
//! maximal Schur set for the whole group. Demonstrated on Aut(K3,3) and on
//! regular groups, which factor through every one of their block systems.
//!
//! ```bash
//! cargo run --release --example block_factorization
//! ```

use uvt::autgrp::automorphism_group;
use uvt::classify::{find_factorizing_block_system, Budgets};
use uvt::graphs::circulant;
use uvt::grouptheory::all_block_systems;
use uvt::perms::sum_perms;
use uvt::presets;

fn main() {
    let budgets = Budgets::default();

    // K3,3 as the circulant C6(1,3); its two sides form the one nontrivial
    // block system
    let k33 = circulant(6, &[1, 3]).unwrap();
    let aut = automorphism_group(&k33);
    println!("Aut(K3,3): order {}", aut.order());
    for system in all_block_systems(&aut).unwrap() {
        println!("  block system: {:?}", system.blocks);
    }
    let scan = find_factorizing_block_system(&aut, &budgets).unwrap();
    let w = scan.witness.expect("the two-sides system factorizes");
    println!("factorizing witness found:");
    println!("  inner (fixer, pairwise orthogonal):");
    for p in &w.inner {
        println!("    {p}");
    }
    println!("  outer (lifts of a quotient Schur set):");
    for p in &w.outer {
        println!("    {p}");
    }
    let sum = sum_perms(&w.product.perms).unwrap();
    println!(
        "  product of |inner| x |outer| = {} elements sums to J_6: {}",
        w.product.perms.len(),
        sum.is_constant(1)
    );

    // regular groups factor through any of their nontrivial systems
    for (name, g) in [
        ("Z6 regular", presets::cyclic_regular(6)),
        ("S3 regular", presets::s3_regular()),
        ("D4 regular", presets::d4_regular()),
    ] {
        let scan = find_factorizing_block_system(&g, &budgets).unwrap();
        match scan.witness {
            Some(w) => println!(
                "{name}: factorizes through {} blocks of size {}",
                w.system.blocks.len(),
                w.system.blocks[0].len()
            ),
            None => println!("{name}: no factorizing system"),
        }
    }
}
