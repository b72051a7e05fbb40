//! Named graphs and groups used by the examples, the test suites, and the
//! coset-action spot checks.

use crate::graphs::{kneser, Graph, MulTable};
use crate::grouptheory::PermGroup;
use crate::perms::Perm;

/// The Petersen graph: 2-subsets of a 5-set, adjacent when disjoint.
pub fn petersen() -> Graph {
    kneser(5, 2).expect("kneser(5,2) is within caps")
}

/// Lexicographically ordered 2-subsets of `{0..n-1}`, matching the vertex
/// order of `johnson(n, 2)` and `kneser(n, 2)`.
pub fn pairs_lex(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for a in 0..n {
        for b in a + 1..n {
            out.push((a, b));
        }
    }
    out
}

/// The permutation induced on 2-subsets (in [`pairs_lex`] order) by a
/// permutation of the underlying points.
pub fn pair_action(sigma: &Perm) -> Perm {
    let n = sigma.degree();
    let pairs = pairs_lex(n);
    let index_of = |a: usize, b: usize| -> usize {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        pairs.iter().position(|&p| p == (a, b)).unwrap()
    };
    let images = pairs
        .iter()
        .map(|&(a, b)| index_of(sigma.apply(a), sigma.apply(b)))
        .collect();
    Perm::from_images(images).expect("induced pair action is a permutation")
}

/// The ten automorphisms `α^i β^j` (0 ≤ i ≤ 1, 0 ≤ j ≤ 4) of the Petersen
/// graph induced by α = (0 4 2 3) and β = (0 1 2 3 4) on points; their
/// permutation matrices sum to the all-ones matrix `J_10`.
pub fn petersen_schur_witness() -> Vec<Perm> {
    let alpha = pair_action(&Perm::from_cycles(5, &[&[0, 4, 2, 3]]).unwrap());
    let beta = pair_action(&Perm::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap());
    let mut out = Vec::with_capacity(10);
    for i in 0..2 {
        let mut p = Perm::identity(10);
        for _ in 0..i {
            p = alpha.compose(&p).unwrap();
        }
        for _ in 0..5 {
            out.push(p.clone());
            p = p.compose(&beta).unwrap();
        }
    }
    out
}

fn cyc(n: usize, points: &[usize]) -> Perm {
    Perm::from_cycles(n, &[points]).unwrap()
}

/// The cyclic group generated by an n-cycle: a regular group of degree n.
pub fn cyclic_regular(n: usize) -> PermGroup {
    let images: Vec<usize> = (1..n).chain([0]).collect();
    PermGroup::new(n, vec![Perm::from_images(images).unwrap()]).unwrap()
}

/// The Klein four-group acting regularly on 4 points.
pub fn klein_four_regular() -> PermGroup {
    PermGroup::new(
        4,
        vec![
            Perm::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap(),
            Perm::from_cycles(4, &[&[0, 2], &[1, 3]]).unwrap(),
        ],
    )
    .unwrap()
}

/// The left regular representation of a group: degree `|G|`, one point per
/// element in the deterministic enumeration order.
pub fn left_regular(g: &PermGroup) -> PermGroup {
    let elems = g
        .elements(crate::grouptheory::DEFAULT_ELEMENT_CAP)
        .expect("left regular representation needs full enumeration");
    let index: std::collections::HashMap<&Perm, usize> =
        elems.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let order = elems.len();
    let gens = g
        .generators()
        .iter()
        .map(|gen| {
            let images = elems
                .iter()
                .map(|x| index[&gen.compose(x).unwrap()])
                .collect();
            Perm::from_images(images).unwrap()
        })
        .collect();
    PermGroup::new(order, gens).unwrap()
}

/// S3 in its regular action on 6 points.
pub fn s3_regular() -> PermGroup {
    let s3 = PermGroup::new(3, vec![cyc(3, &[0, 1, 2]), cyc(3, &[0, 1])]).unwrap();
    left_regular(&s3)
}

/// The dihedral group of order 8 (square symmetries) in its regular action.
pub fn d4_regular() -> PermGroup {
    let d4 = PermGroup::new(4, vec![cyc(4, &[0, 1, 2, 3]), cyc(4, &[1, 3])]).unwrap();
    left_regular(&d4)
}

/// The alternating group A5 in its natural degree-5 action.
pub fn a5_natural() -> PermGroup {
    PermGroup::new(5, vec![cyc(5, &[0, 1, 2]), cyc(5, &[0, 1, 2, 3, 4])]).unwrap()
}

/// The symmetric group S5 in its natural degree-5 action.
pub fn s5_natural() -> PermGroup {
    PermGroup::new(5, vec![cyc(5, &[0, 1]), cyc(5, &[0, 1, 2, 3, 4])]).unwrap()
}

/// A4 as the stabilizer of the point 4 inside A5 (order 12, index 5).
pub fn a4_in_a5() -> PermGroup {
    PermGroup::new(5, vec![cyc(5, &[0, 1, 2]), cyc(5, &[1, 2, 3])]).unwrap()
}

/// A dihedral subgroup of order 10 in A5 (index 6).
pub fn d10_in_a5() -> PermGroup {
    PermGroup::new(
        5,
        vec![
            cyc(5, &[0, 1, 2, 3, 4]),
            Perm::from_cycles(5, &[&[1, 4], &[2, 3]]).unwrap(),
        ],
    )
    .unwrap()
}

/// An S3-isomorphic subgroup of order 6 in A5 (index 10).
pub fn s3_in_a5() -> PermGroup {
    PermGroup::new(
        5,
        vec![
            cyc(5, &[0, 1, 2]),
            Perm::from_cycles(5, &[&[0, 1], &[3, 4]]).unwrap(),
        ],
    )
    .unwrap()
}

/// An order-3 subgroup of A5 (index 20).
pub fn c3_in_a5() -> PermGroup {
    PermGroup::new(5, vec![cyc(5, &[0, 1, 2])]).unwrap()
}

/// An order-2 subgroup of A5 (index 30).
pub fn c2_in_a5() -> PermGroup {
    PermGroup::new(5, vec![Perm::from_cycles(5, &[&[0, 1], &[2, 3]]).unwrap()]).unwrap()
}

/// A dihedral subgroup of order 8 in S5 (index 15).
pub fn d8_in_s5() -> PermGroup {
    PermGroup::new(5, vec![cyc(5, &[0, 1, 2, 3]), cyc(5, &[0, 2])]).unwrap()
}

/// The multiplication table of `Z_n`, for Cayley-graph fixtures.
pub fn cyclic_table(n: usize) -> MulTable {
    MulTable::cyclic(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perms::{is_k_uniform_sum, sum_perms};

    #[test]
    fn subgroup_orders_and_indices() {
        assert_eq!(a5_natural().order_u64(), Some(60));
        assert_eq!(s5_natural().order_u64(), Some(120));
        assert_eq!(a4_in_a5().order_u64(), Some(12));
        assert_eq!(d10_in_a5().order_u64(), Some(10));
        assert_eq!(s3_in_a5().order_u64(), Some(6));
        assert_eq!(c3_in_a5().order_u64(), Some(3));
        assert_eq!(c2_in_a5().order_u64(), Some(2));
        assert_eq!(d8_in_s5().order_u64(), Some(8));
        let a5 = a5_natural();
        for sub in [a4_in_a5(), d10_in_a5(), s3_in_a5(), c3_in_a5(), c2_in_a5()] {
            assert!(sub.generators().iter().all(|g| a5.contains(g)));
        }
        let s5 = s5_natural();
        assert!(d8_in_s5().generators().iter().all(|g| s5.contains(g)));
    }

    #[test]
    fn regular_presets() {
        assert!(cyclic_regular(6).is_regular());
        assert!(klein_four_regular().is_regular());
        assert!(s3_regular().is_regular());
        assert!(d4_regular().is_regular());
    }

    #[test]
    fn petersen_witness_sums_to_all_ones() {
        let witness = petersen_schur_witness();
        assert_eq!(witness.len(), 10);
        assert!(is_k_uniform_sum(&witness, 1).unwrap());
        // every member is an automorphism of the Petersen graph
        let p = petersen();
        for w in &witness {
            assert!(crate::autgrp::is_automorphism(&p, w).unwrap());
        }
        // the two 5-element halves tile the matrix into J_5 blocks
        let m = sum_perms(&witness[0..5].to_vec()).unwrap();
        assert!((0..10).all(|u| m.row_sum(u) == 5));
    }
}
