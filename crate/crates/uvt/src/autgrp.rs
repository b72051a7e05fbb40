//! Automorphism groups of graphs by partition-refinement backtracking.
//!
//! The search individualizes a vertex in the first smallest non-singleton
//! cell of the equitable partition, recursing for the stabilizer and then
//! hunting one coset representative per remaining cell vertex, pruned by
//! orbit fusion over the generators found so far. Only the group is needed
//! downstream, so no canonical-form machinery is involved. Branching and
//! emission order are fixed (smallest vertex first), making the generator
//! list identical across runs.

use crate::graphs::Graph;
use crate::grouptheory::PermGroup;
use crate::perms::{Perm, PermError};

/// An ordered partition of the vertex set: disjoint cells covering all
/// vertices, each cell sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedPartition {
    cells: Vec<Vec<usize>>,
    n: usize,
}

impl OrderedPartition {
    pub fn unit(n: usize) -> OrderedPartition {
        OrderedPartition {
            cells: if n == 0 {
                Vec::new()
            } else {
                vec![(0..n).collect()]
            },
            n,
        }
    }

    pub fn from_cells(n: usize, cells: Vec<Vec<usize>>) -> OrderedPartition {
        let mut covered = vec![false; n];
        for c in &cells {
            for &v in c {
                assert!(v < n && !covered[v], "cells must partition 0..n");
                covered[v] = true;
            }
        }
        assert!(covered.iter().all(|&c| c), "cells must cover all vertices");
        let cells = cells
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c
            })
            .collect();
        OrderedPartition { cells, n }
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn is_discrete(&self) -> bool {
        self.cells.iter().all(|c| c.len() == 1)
    }

    pub fn cell_sizes(&self) -> Vec<usize> {
        self.cells.iter().map(Vec::len).collect()
    }

    /// Splits cell `ci` into `[{v}, rest]`, keeping the cell position.
    fn individualize(&self, ci: usize, v: usize) -> OrderedPartition {
        let mut cells = Vec::with_capacity(self.cells.len() + 1);
        for (i, c) in self.cells.iter().enumerate() {
            if i == ci {
                cells.push(vec![v]);
                cells.push(c.iter().copied().filter(|&x| x != v).collect());
            } else {
                cells.push(c.clone());
            }
        }
        OrderedPartition { cells, n: self.n }
    }

    // index of the first cell of minimal size >= 2
    fn target_cell(&self) -> Option<usize> {
        let min = self
            .cells
            .iter()
            .map(Vec::len)
            .filter(|&l| l >= 2)
            .min()?;
        self.cells.iter().position(|c| c.len() == min)
    }
}

/// Coarsest equitable refinement of `p`: repeatedly splits cells by the
/// vector of neighbor counts into every current cell, sub-cells ordered by
/// signature, vertices within a cell by index.
pub fn refine(g: &Graph, p: &OrderedPartition) -> OrderedPartition {
    let mut cells = p.cells.clone();
    loop {
        let masks: Vec<u128> = cells
            .iter()
            .map(|c| c.iter().fold(0u128, |m, &v| m | 1 << v))
            .collect();
        let mut split_at = None;
        'outer: for (ci, cell) in cells.iter().enumerate() {
            if cell.len() < 2 {
                continue;
            }
            let sig = |v: usize| -> Vec<u32> {
                masks
                    .iter()
                    .map(|&m| (g.row(v) & m).count_ones())
                    .collect()
            };
            let first = sig(cell[0]);
            for &v in &cell[1..] {
                if sig(v) != first {
                    split_at = Some(ci);
                    break 'outer;
                }
            }
        }
        let Some(ci) = split_at else {
            return OrderedPartition {
                cells,
                n: p.n,
            };
        };
        let cell = cells[ci].clone();
        let mut groups: Vec<(Vec<u32>, Vec<usize>)> = Vec::new();
        for &v in &cell {
            let s: Vec<u32> = masks
                .iter()
                .map(|&m| (g.row(v) & m).count_ones())
                .collect();
            match groups.iter_mut().find(|(gs, _)| *gs == s) {
                Some((_, vs)) => vs.push(v),
                None => groups.push((s, vec![v])),
            }
        }
        groups.sort_by(|a, b| a.0.cmp(&b.0));
        cells.splice(ci..=ci, groups.into_iter().map(|(_, vs)| vs));
    }
}

/// True iff `sigma` maps edges to edges and non-edges to non-edges.
pub fn is_automorphism(g: &Graph, sigma: &Perm) -> Result<bool, PermError> {
    let n = g.n();
    if sigma.degree() != n {
        return Err(PermError::DegreeMismatch {
            left: n,
            right: sigma.degree(),
        });
    }
    for u in 0..n {
        let mut mapped_row: u128 = 0;
        let mut row = g.row(u);
        while row != 0 {
            let v = row.trailing_zeros() as usize;
            row &= row - 1;
            mapped_row |= 1 << sigma.apply(v);
        }
        if mapped_row != g.row(sigma.apply(u)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The full automorphism group of `g` as a generator list with a stabilizer
/// chain. Output is deterministic for a fixed graph.
pub fn automorphism_group(g: &Graph) -> PermGroup {
    let n = g.n();
    let mut gens: Vec<Perm> = Vec::new();
    let root = refine(g, &OrderedPartition::unit(n));
    stabilizer_gens(g, &root, &mut gens);
    for gen in &gens {
        debug_assert!(is_automorphism(g, gen).unwrap());
    }
    PermGroup::new(n, gens).expect("automorphism generators are valid")
}

// Accumulates generators for the subgroup of Aut(g) fixing the vertices
// individualized along the path leading to the (already refined) partition.
fn stabilizer_gens(g: &Graph, pi: &OrderedPartition, gens: &mut Vec<Perm>) {
    let Some(ci) = pi.target_cell() else {
        return; // discrete: only the identity fixes the whole path
    };
    let cell = pi.cells[ci].clone();
    let t = cell[0];
    let pi_t = refine(g, &pi.individualize(ci, t));
    let local_start = gens.len();
    stabilizer_gens(g, &pi_t, gens);

    // one coset representative per orbit of the target cell; only
    // generators found in this scope fix the current path, so the fusion
    // union-find is scoped to them
    let mut uf: Vec<usize> = (0..g.n()).collect();
    for gen in &gens[local_start..] {
        fuse(&mut uf, gen);
    }
    for &u in &cell[1..] {
        if find(&mut uf, u) == find(&mut uf, t) {
            continue;
        }
        let pi_u = refine(g, &pi.individualize(ci, u));
        if let Some(sigma) = find_mapping(g, &pi_t, &pi_u) {
            fuse(&mut uf, &sigma);
            gens.push(sigma);
        }
    }
}

// Searches for one automorphism mapping the left partition onto the right
// cell-by-cell. Both sides are kept refined; the canonical refinement is
// equivariant, so isomorphic states stay aligned and diverging cell shapes
// prove no such automorphism respects the two paths.
fn find_mapping(g: &Graph, a: &OrderedPartition, b: &OrderedPartition) -> Option<Perm> {
    if a.cell_sizes() != b.cell_sizes() {
        return None;
    }
    if a.is_discrete() {
        let mut images = vec![0usize; g.n()];
        for (ca, cb) in a.cells.iter().zip(&b.cells) {
            images[ca[0]] = cb[0];
        }
        let sigma = Perm::from_images(images).ok()?;
        return match is_automorphism(g, &sigma) {
            Ok(true) => Some(sigma),
            _ => None,
        };
    }
    let ci = a.target_cell().expect("non-discrete partition has a target");
    let t = a.cells[ci][0];
    let a_next = refine(g, &a.individualize(ci, t));
    for &u in &b.cells[ci] {
        let b_next = refine(g, &b.individualize(ci, u));
        if let Some(sigma) = find_mapping(g, &a_next, &b_next) {
            return Some(sigma);
        }
    }
    None
}

fn find(uf: &mut Vec<usize>, x: usize) -> usize {
    let mut r = x;
    while uf[r] != r {
        r = uf[r];
    }
    let mut p = x;
    while uf[p] != r {
        let next = uf[p];
        uf[p] = r;
        p = next;
    }
    r
}

fn fuse(uf: &mut Vec<usize>, sigma: &Perm) {
    for p in 0..sigma.degree() {
        let (a, b) = (find(uf, p), find(uf, sigma.apply(p)));
        if a != b {
            uf[a.max(b)] = a.min(b);
        }
    }
}
