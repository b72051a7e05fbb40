//! k-uniform transitivity: kn automorphisms summing to k·J_n. Every
//! vertex-transitive graph is s-uniform for s the vertex-stabilizer order
//! (the whole group works), k-witnesses complement to (s-k)-witnesses, and
//! Cayley graphs are k-uniform for every k up to s via coset unions.
//!
//! ```bash
//! cargo run --release --example k_uniform
//! ```

use uvt::autgrp::automorphism_group;
use uvt::classify::{complement_schur_set, k_uvt, Budgets, KuvtDecision};
use uvt::graphs::circulant;

fn main() {
    let budgets = Budgets::default();
    let c4 = circulant(4, &[1]).unwrap();
    let aut = automorphism_group(&c4);
    let s = usize::try_from(&aut.stabilizer_order().unwrap()).unwrap();
    println!("Aut(C4): order {}, vertex stabilizer order s = {s}", aut.order());

    for k in 1..=s {
        match k_uvt(&aut, k, &budgets).unwrap() {
            KuvtDecision::Yes(witness) => {
                println!(
                    "k = {k}: {} automorphisms sum to {k}·J_4",
                    witness.perms.len()
                );
                if s - k >= 1 {
                    let comp = complement_schur_set(&aut, &witness, &budgets).unwrap();
                    println!(
                        "       complement gives a {}-uniform witness of size {}",
                        comp.k,
                        comp.perms.len()
                    );
                }
            }
            other => println!("k = {k}: {other:?}"),
        }
    }

    // a non-Cayley example: the full automorphism group of the Petersen
    // graph has s = 12, and the whole group is a 12-uniform witness
    let petersen_aut = automorphism_group(&uvt::presets::petersen());
    let s = usize::try_from(&petersen_aut.stabilizer_order().unwrap()).unwrap();
    match k_uvt(&petersen_aut, s, &budgets).unwrap() {
        KuvtDecision::Yes(w) => println!(
            "Aut(Petersen), k = s = {s}: all {} elements sum to {s}·J_10",
            w.perms.len()
        ),
        other => println!("unexpected: {other:?}"),
    }
}
