//! Simple groups obstruct factorization: the fixer of any block system is a
//! normal subgroup, so for a simple group it is trivial (too small for the
//! inner orthogonal set) or everything (trivial quotient). Checked
//! exhaustively for the imprimitive A5 coset actions, together with the
//! companion fact that no graph has A5 as its full automorphism group in a
//! primitive action.
//!
//! ```bash
//! cargo run --release --example simple_group_obstruction
//! ```

use uvt::autgrp::automorphism_group;
use uvt::classify::{check_simple_group_obstruction, verify_a5_imprimitivity, Budgets};
use uvt::graphs::orbital_union_graphs;
use uvt::grouptheory::coset_action;
use uvt::presets;

fn main() {
    let budgets = Budgets::default();
    let a5 = presets::a5_natural();

    for (name, h) in [
        ("A5 on 20 points (cosets of C3)", presets::c3_in_a5()),
        ("A5 on 30 points (cosets of C2)", presets::c2_in_a5()),
    ] {
        let action = coset_action(&a5, &h).unwrap().group;
        let obstructed = check_simple_group_obstruction(&action, true, &budgets).unwrap();
        println!("{name}: no factorizing block system = {obstructed}");
    }

    // the three primitive actions of A5 never appear as a full automorphism
    // group: every invariant graph has extra symmetry
    println!();
    for (name, h) in [
        ("degree 5 (cosets of A4)", presets::a4_in_a5()),
        ("degree 6 (cosets of D10)", presets::d10_in_a5()),
        ("degree 10 (cosets of S3)", presets::s3_in_a5()),
    ] {
        let action = coset_action(&a5, &h).unwrap().group;
        let graphs = orbital_union_graphs(&action).unwrap();
        println!("A5 {name}: {} invariant graphs", graphs.len());
        for g in &graphs {
            let aut = automorphism_group(&g);
            println!(
                "  {} edges -> |Aut| = {}",
                g.edge_count(),
                aut.order()
            );
        }
    }
    println!(
        "\nno invariant graph has |Aut| = 60: {}",
        verify_a5_imprimitivity(&budgets).unwrap()
    );
}
