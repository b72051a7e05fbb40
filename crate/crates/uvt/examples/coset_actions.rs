//! Clique deficits of derangement graphs for coset actions: A5 on the 20
//! cosets of an order-3 subgroup misses by 10; S5 on the 15 cosets of a
//! dihedral subgroup of order 8 misses by 2. A deficit of 0 would mean the
//! action is uniformly transitive.
//!
//! ```bash
//! cargo run --release --example coset_actions
//! ```

use uvt::classify::{omega_deficit_of_group, Budgets};
use uvt::grouptheory::coset_action;
use uvt::presets;

fn main() {
    let budgets = Budgets::default();
    let cases = [
        ("A5 / C3", presets::a5_natural(), presets::c3_in_a5()),
        ("A5 / A4", presets::a5_natural(), presets::a4_in_a5()),
        ("A5 / D10", presets::a5_natural(), presets::d10_in_a5()),
        ("A5 / S3", presets::a5_natural(), presets::s3_in_a5()),
        ("S5 / D8", presets::s5_natural(), presets::d8_in_s5()),
    ];
    println!("{:<10} {:>6} {:>8} {:>16}", "action", "degree", "|G|", "omega(D(G))-deg");
    for (name, g, h) in cases {
        let action = coset_action(&g, &h).unwrap();
        let report = omega_deficit_of_group(&action.group, &budgets).unwrap();
        println!(
            "{:<10} {:>6} {:>8} {:>16}",
            name,
            action.group.degree(),
            action.group.order(),
            report
                .deficit
                .map_or("?".to_string(), |d| d.to_string()),
        );
    }
}
