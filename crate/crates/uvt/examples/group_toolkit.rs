//! Permutation-group machinery on its own: orders via stabilizer chains,
//! orbits, point stabilizers, minimal blocks, block systems, and the
//! fixer/quotient decomposition of an imprimitive action.
//!
//! ```bash
//! cargo run --release --example group_toolkit
//! ```

use uvt::grouptheory::{
    all_block_systems, block_quotient, coset_action, minimal_block, PermGroup,
};
use uvt::perms::Perm;

fn main() {
    // the symmetries of a hexagon
    let d12 = PermGroup::new(
        6,
        vec![
            Perm::from_cycles(6, &[&[0, 1, 2, 3, 4, 5]]).unwrap(),
            Perm::from_cycles(6, &[&[1, 5], &[2, 4]]).unwrap(),
        ],
    )
    .unwrap();
    println!("hexagon symmetries: order {}", d12.order());
    println!("transitive: {}", d12.is_transitive());
    println!("stabilizer of 0: order {}", d12.point_stabilizer(0).order());
    println!(
        "minimal block through {{0, 3}}: {:?}",
        minimal_block(&d12, 0, 3).unwrap()
    );

    for system in all_block_systems(&d12).unwrap() {
        let qa = block_quotient(&d12, &system, 50_000).unwrap();
        println!(
            "system {:?}: |fixer| = {}, |quotient| = {}",
            system.blocks,
            qa.fixer.order(),
            qa.quotient.order()
        );
    }

    // a coset action: S4 on the 3 cosets of a dihedral subgroup
    let s4 = PermGroup::new(
        4,
        vec![
            Perm::from_cycles(4, &[&[0, 1]]).unwrap(),
            Perm::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap(),
        ],
    )
    .unwrap();
    let d8 = PermGroup::new(
        4,
        vec![
            Perm::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap(),
            Perm::from_cycles(4, &[&[1, 3]]).unwrap(),
        ],
    )
    .unwrap();
    let action = coset_action(&s4, &d8).unwrap();
    println!(
        "\nS4 on cosets of D8: degree {}, faithful: {}",
        action.group.degree(),
        action.faithful
    );
    println!(
        "elements, in deterministic order: {:?}",
        action
            .group
            .elements(100)
            .unwrap()
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
    );
}
