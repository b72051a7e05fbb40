//! Classify the Petersen graph: vertex-transitive, not Cayley, yet
//! uniformly vertex-transitive — ten automorphisms sum to the all-ones
//! matrix.
//!
//! ```bash
//! cargo run --release --example petersen
//! ```

use uvt::classify::{classify_graph, Budgets, UvtVerdict};
use uvt::perms::{is_k_uniform_sum, sum_perms};
use uvt::presets;

fn main() {
    let petersen = presets::petersen();
    let report = classify_graph(&petersen, "petersen", &Budgets::default());

    println!("graph: Petersen ({} vertices)", report.n);
    println!("|Aut| = {}", report.aut_order);
    println!("vertex-transitive: {}", report.vertex_transitive);
    println!("Cayley: {:?}", report.cayley);
    match &report.uvt {
        UvtVerdict::Yes { witness } => {
            println!("uniformly vertex-transitive: yes");
            println!("witness ({} automorphisms, cycle notation):", witness.len());
            for w in witness {
                println!("  {w}");
            }
            let sum = sum_perms(witness).unwrap();
            println!("sum of witness matrices is J_10: {}", sum.is_constant(1));
        }
        other => println!("unexpected verdict: {other:?}"),
    }

    // the classical explicit witness: powers a^i b^j of a 4-cycle and a
    // 5-cycle acting on the ten 2-subsets
    let fixture = presets::petersen_schur_witness();
    println!(
        "explicit a^i b^j witness verifies: {}",
        is_k_uniform_sum(&fixture, 1).unwrap()
    );
}
