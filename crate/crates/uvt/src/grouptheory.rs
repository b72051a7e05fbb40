//! Permutation-group machinery: stabilizer chains (order, membership,
//! element enumeration), orbits and transitivity, stabilizers, coset
//! actions, regularity, block systems, fixers and quotient actions, and
//! regular-subgroup (Cayley) detection.

use crate::graphs::{cayley_graph, Graph, MulTable};
use crate::perms::Perm;
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet, HashMap};
use thiserror::Error;

/// Default cap on full element enumeration. Covers every group the census
/// pipeline resolves (largest relevant order 40,320) while bounding memory.
pub const DEFAULT_ELEMENT_CAP: usize = 50_000;
/// Degree cap for block-system enumeration.
pub const BLOCK_DEGREE_CAP: usize = 32;
/// Cap on the index of a coset action.
pub const COSET_DEGREE_CAP: usize = 1024;

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("generator degree {got} does not match group degree {expected}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("group too large: order {order} exceeds cap {cap}")]
    TooLarge { order: BigUint, cap: usize },
    #[error("group is not transitive")]
    NotTransitive,
    #[error("not a subgroup: generator outside the group")]
    NotSubgroup,
    #[error("coset action degree {index} exceeds cap {cap}")]
    IndexTooLarge { index: usize, cap: usize },
    #[error("degree {degree} exceeds block-system cap {cap}")]
    DegreeCap { degree: usize, cap: usize },
    #[error("partition is not invariant under the group")]
    NotInvariant,
    #[error("group does not act regularly")]
    NotRegular,
    #[error("realization check failed: rebuilt Cayley graph differs from input")]
    RealizationMismatch,
}

#[derive(Clone, Debug)]
struct Level {
    base: usize,
    transversal: Vec<Option<Perm>>,
    orbit: Vec<usize>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Level {
        let mut transversal = vec![None; degree];
        transversal[base] = Some(Perm::identity(degree));
        Level {
            base,
            transversal,
            orbit: vec![base],
        }
    }
}

// Deterministic Schreier–Sims. The strong set is global; level i uses every
// strong generator fixing the first i base points, and completing a level
// means every one of its Schreier generators sifts to the identity through
// the levels below. New strong generators restart the enclosing scan.
struct ChainBuilder {
    degree: usize,
    base: Vec<usize>,
    strong: Vec<Perm>,
    levels: Vec<Level>,
}

impl ChainBuilder {
    fn build(degree: usize, gens: &[Perm], preferred: &[usize]) -> ChainBuilder {
        let mut strong: Vec<Perm> = Vec::new();
        for g in gens {
            if !g.is_identity() && !strong.contains(g) {
                strong.push(g.clone());
            }
        }
        let mut b = ChainBuilder {
            degree,
            base: Vec::new(),
            strong,
            levels: Vec::new(),
        };
        for &p in preferred {
            if !b.base.contains(&p) {
                b.push_base(p);
            }
        }
        // every strong generator must move some base point
        loop {
            let fixed_by_all = b
                .strong
                .iter()
                .find(|g| b.base.iter().all(|&p| g.apply(p) == p))
                .cloned();
            match fixed_by_all {
                Some(g) => {
                    let moved = (0..degree).find(|&p| g.apply(p) != p).unwrap();
                    b.push_base(moved);
                }
                None => break,
            }
        }
        for i in (0..b.levels.len()).rev() {
            b.complete(i);
        }
        b
    }

    fn push_base(&mut self, p: usize) {
        self.base.push(p);
        self.levels.push(Level::new(p, self.degree));
    }

    fn gens_at(&self, i: usize) -> Vec<Perm> {
        self.strong
            .iter()
            .filter(|g| self.base[..i].iter().all(|&p| g.apply(p) == p))
            .cloned()
            .collect()
    }

    fn recompute(&mut self, i: usize) {
        let gens = self.gens_at(i);
        let base = self.base[i];
        let mut transversal: Vec<Option<Perm>> = vec![None; self.degree];
        let mut orbit = vec![base];
        transversal[base] = Some(Perm::identity(self.degree));
        let mut qi = 0;
        while qi < orbit.len() {
            let p = orbit[qi];
            qi += 1;
            let up = transversal[p].clone().unwrap();
            for g in &gens {
                let q = g.apply(p);
                if transversal[q].is_none() {
                    transversal[q] = Some(g.compose_unchecked(&up));
                    orbit.push(q);
                }
            }
        }
        self.levels[i].transversal = transversal;
        self.levels[i].orbit = orbit;
    }

    fn strip(&self, g: &Perm, from: usize) -> Perm {
        let mut g = g.clone();
        for l in from..self.levels.len() {
            let p = g.apply(self.base[l]);
            match &self.levels[l].transversal[p] {
                None => return g,
                Some(u) => g = u.inverse().compose_unchecked(&g),
            }
        }
        g
    }

    fn complete(&mut self, i: usize) {
        'scan: loop {
            self.recompute(i);
            let gens = self.gens_at(i);
            let orbit = self.levels[i].orbit.clone();
            for &p in &orbit {
                let up = self.levels[i].transversal[p].clone().unwrap();
                for s in &gens {
                    let q = s.apply(p);
                    let uq = self.levels[i].transversal[q].clone().unwrap();
                    let schreier = uq.inverse().compose_unchecked(&s.compose_unchecked(&up));
                    if schreier.is_identity() {
                        continue;
                    }
                    let residue = self.strip(&schreier, i + 1);
                    if residue.is_identity() {
                        continue;
                    }
                    if self
                        .base
                        .iter()
                        .all(|&b| residue.apply(b) == b)
                    {
                        let moved = (0..self.degree)
                            .find(|&x| residue.apply(x) != x)
                            .expect("non-identity residue moves a point");
                        self.push_base(moved);
                    }
                    let m = self
                        .base
                        .iter()
                        .position(|&b| residue.apply(b) != b)
                        .expect("residue moves a base point");
                    debug_assert!(m > i, "residue fixes the first i+1 base points");
                    if !self.strong.contains(&residue) {
                        self.strong.push(residue);
                    }
                    for l in (i + 1..=m).rev() {
                        self.complete(l);
                    }
                    continue 'scan;
                }
            }
            return;
        }
    }
}

/// A permutation group given by generators, with a stabilizer chain (base
/// and strong generating set) built on construction. Membership tests sift
/// through the chain; the order is the product of transversal sizes.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    strong: Vec<Perm>,
    chain: Vec<Level>,
    order: BigUint,
}

impl PermGroup {
    /// Builds the group generated by `generators` on `degree` points.
    pub fn new(degree: usize, generators: Vec<Perm>) -> Result<PermGroup, GroupError> {
        PermGroup::with_base_hint(degree, generators, &[])
    }

    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup {
            degree,
            generators: Vec::new(),
            strong: Vec::new(),
            chain: Vec::new(),
            order: BigUint::from(1u32),
        }
    }

    /// Builds the group generated by the distinct members of `members`,
    /// sifting each and keeping only those not already generated. Useful
    /// when a full element list is at hand (fixers, closure sets).
    pub fn from_members(degree: usize, members: &[Perm]) -> Result<PermGroup, GroupError> {
        let mut group = PermGroup::trivial(degree);
        for m in members {
            if m.degree() != degree {
                return Err(GroupError::DegreeMismatch {
                    expected: degree,
                    got: m.degree(),
                });
            }
            if !group.contains(m) {
                let mut gens = group.generators;
                gens.push(m.clone());
                group = PermGroup::new(degree, gens)?;
            }
        }
        Ok(group)
    }

    /// Like [`PermGroup::new`] but forces the first base points of the
    /// stabilizer chain; used to read off point stabilizers.
    fn with_base_hint(
        degree: usize,
        generators: Vec<Perm>,
        preferred: &[usize],
    ) -> Result<PermGroup, GroupError> {
        for g in &generators {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch {
                    expected: degree,
                    got: g.degree(),
                });
            }
        }
        let builder = ChainBuilder::build(degree, &generators, preferred);
        let order = builder
            .levels
            .iter()
            .map(|l| BigUint::from(l.orbit.len()))
            .product::<BigUint>();
        Ok(PermGroup {
            degree,
            generators,
            strong: builder.strong,
            chain: builder.levels,
            order,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn order(&self) -> &BigUint {
        &self.order
    }

    pub fn order_u64(&self) -> Option<u64> {
        u64::try_from(&self.order).ok()
    }

    fn sift(&self, p: &Perm) -> Perm {
        let mut g = p.clone();
        for level in &self.chain {
            let q = g.apply(level.base);
            match &level.transversal[q] {
                None => return g,
                Some(u) => g = u.inverse().compose_unchecked(&g),
            }
        }
        g
    }

    pub fn contains(&self, p: &Perm) -> bool {
        p.degree() == self.degree && self.sift(p).is_identity()
    }

    /// Every element exactly once, in a deterministic order: the chain's
    /// transversal points are scanned in ascending order level by level.
    pub fn elements(&self, cap: usize) -> Result<Vec<Perm>, GroupError> {
        if self.order > BigUint::from(cap) {
            return Err(GroupError::TooLarge {
                order: self.order.clone(),
                cap,
            });
        }
        let mut out = vec![Perm::identity(self.degree)];
        for level in self.chain.iter().rev() {
            let mut points = level.orbit.clone();
            points.sort_unstable();
            let mut next = Vec::with_capacity(out.len() * points.len());
            for &p in &points {
                let u = level.transversal[p].as_ref().unwrap();
                for e in &out {
                    next.push(u.compose_unchecked(e));
                }
            }
            out = next;
        }
        Ok(out)
    }

    /// Orbit partition of the point set, each orbit sorted, orbits ordered
    /// by least element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut uf = UnionFind::new(self.degree);
        for g in &self.generators {
            for p in 0..self.degree {
                uf.union(p, g.apply(p));
            }
        }
        let mut buckets: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for p in 0..self.degree {
            buckets.entry(uf.find(p)).or_default().push(p);
        }
        buckets.into_values().collect()
    }

    pub fn is_transitive(&self) -> bool {
        self.orbits().len() == 1
    }

    /// The stabilizer of `v`, via a chain rebuilt with `v` as first base
    /// point: the strong generators fixing `v` generate it.
    pub fn point_stabilizer(&self, v: usize) -> PermGroup {
        let rebased =
            PermGroup::with_base_hint(self.degree, self.generators.clone(), &[v]).unwrap();
        let gens: Vec<Perm> = rebased
            .strong
            .iter()
            .filter(|g| g.apply(v) == v)
            .cloned()
            .collect();
        PermGroup::new(self.degree, gens).unwrap()
    }

    /// `|G| / degree` for a transitive group.
    pub fn stabilizer_order(&self) -> Result<BigUint, GroupError> {
        if !self.is_transitive() {
            return Err(GroupError::NotTransitive);
        }
        Ok(&self.order / BigUint::from(self.degree))
    }

    /// Transitive with trivial point stabilizers, i.e. `|G| = degree`.
    pub fn is_regular(&self) -> bool {
        self.is_transitive() && self.order == BigUint::from(self.degree)
    }

    pub fn to_json(&self) -> GroupJson {
        GroupJson {
            degree: self.degree,
            generators: self.generators.clone(),
            order: self.order.to_string(),
        }
    }
}

/// JSON form of a group: `{degree, generators (image arrays), order}`.
#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct GroupJson {
    pub degree: usize,
    pub generators: Vec<Perm>,
    #[serde(default)]
    pub order: String,
}

impl GroupJson {
    pub fn into_group(self) -> Result<PermGroup, GroupError> {
        PermGroup::new(self.degree, self.generators)
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut p = x;
        while self.parent[p] != r {
            let next = self.parent[p];
            self.parent[p] = r;
            p = next;
        }
        r
    }

    // returns true when two classes were merged
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            false
        } else {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
            true
        }
    }
}

/// The transitive action of `g` on the left cosets of `h`, with cosets
/// labeled by their lexicographically minimal representative. The kernel is
/// not removed; `faithful` reports whether the action is.
pub struct CosetAction {
    pub group: PermGroup,
    pub faithful: bool,
}

pub fn coset_action(g: &PermGroup, h: &PermGroup) -> Result<CosetAction, GroupError> {
    if h.degree() != g.degree() {
        return Err(GroupError::DegreeMismatch {
            expected: g.degree(),
            got: h.degree(),
        });
    }
    for gen in h.generators() {
        if !g.contains(gen) {
            return Err(GroupError::NotSubgroup);
        }
    }
    let index_big = g.order() / h.order();
    let index = usize::try_from(&index_big).map_err(|_| GroupError::IndexTooLarge {
        index: usize::MAX,
        cap: COSET_DEGREE_CAP,
    })?;
    if index > COSET_DEGREE_CAP {
        return Err(GroupError::IndexTooLarge {
            index,
            cap: COSET_DEGREE_CAP,
        });
    }
    let h_elems = h.elements(DEFAULT_ELEMENT_CAP)?;
    let canon = |p: &Perm| -> Perm {
        h_elems
            .iter()
            .map(|x| p.compose_unchecked(x))
            .min()
            .expect("subgroup has elements")
    };

    // closure of the identity coset under the generators
    let start = canon(&Perm::identity(g.degree()));
    let mut reps: Vec<Perm> = vec![start.clone()];
    let mut seen: BTreeSet<Perm> = BTreeSet::from([start]);
    let mut qi = 0;
    while qi < reps.len() {
        let rep = reps[qi].clone();
        qi += 1;
        for gen in g.generators() {
            let moved = canon(&gen.compose_unchecked(&rep));
            if seen.insert(moved.clone()) {
                reps.push(moved);
            }
        }
    }
    if reps.len() != index {
        return Err(GroupError::NotSubgroup);
    }
    reps.sort();
    let label: BTreeMap<Perm, usize> = reps
        .iter()
        .enumerate()
        .map(|(i, r)| (r.clone(), i))
        .collect();

    let mut action_gens = Vec::with_capacity(g.generators().len());
    for gen in g.generators() {
        let images = reps
            .iter()
            .map(|r| label[&canon(&gen.compose_unchecked(r))])
            .collect::<Vec<_>>();
        action_gens.push(Perm::from_images(images).expect("coset action is a permutation"));
    }
    let group = PermGroup::new(index, action_gens)?;
    let faithful = group.order() == g.order();
    Ok(CosetAction { group, faithful })
}

/// A partition of the point set into `m` blocks of size `k` invariant under
/// a group: every generator maps each block onto a block.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockSystem {
    pub blocks: Vec<Vec<usize>>,
    #[serde(skip)]
    pub index: Vec<usize>,
}

impl BlockSystem {
    fn from_blocks(mut blocks: Vec<Vec<usize>>, degree: usize) -> BlockSystem {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort_by_key(|b| b[0]);
        let mut index = vec![usize::MAX; degree];
        for (i, b) in blocks.iter().enumerate() {
            for &p in b {
                index[p] = i;
            }
        }
        BlockSystem { blocks, index }
    }

    pub fn block_size(&self) -> usize {
        self.blocks[0].len()
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Checks the defining property against each generator of `g`.
    pub fn is_invariant_under(&self, g: &PermGroup) -> bool {
        let block_sets: BTreeSet<Vec<usize>> = self.blocks.iter().cloned().collect();
        g.generators().iter().all(|gen| {
            self.blocks.iter().all(|b| {
                let mut image: Vec<usize> = b.iter().map(|&p| gen.apply(p)).collect();
                image.sort_unstable();
                block_sets.contains(&image)
            })
        })
    }
}

// Finest G-congruence with all of `seeds` in one class; returns the class
// containing seeds[0] (the minimal block containing the seed set).
fn min_block_of_set(g: &PermGroup, seeds: &[usize]) -> Vec<usize> {
    let mut uf = UnionFind::new(g.degree());
    let mut queue: Vec<(usize, usize)> = Vec::new();
    for &s in &seeds[1..] {
        if uf.union(seeds[0], s) {
            queue.push((seeds[0], s));
        }
    }
    while let Some((a, b)) = queue.pop() {
        for gen in g.generators() {
            let (ga, gb) = (gen.apply(a), gen.apply(b));
            if uf.union(ga, gb) {
                queue.push((ga, gb));
            }
        }
    }
    let root = uf.find(seeds[0]);
    (0..g.degree()).filter(|&p| uf.find(p) == root).collect()
}

/// Smallest block containing both points of a transitive group.
pub fn minimal_block(g: &PermGroup, a: usize, b: usize) -> Result<Vec<usize>, GroupError> {
    if !g.is_transitive() {
        return Err(GroupError::NotTransitive);
    }
    Ok(min_block_of_set(g, &[a, b]))
}

/// Every nontrivial block system of a transitive group, each exactly once,
/// ordered by (block size, then blocks).
///
/// The blocks through point 0 form a lattice: each is the join of the
/// minimal blocks `⟨0, p⟩` it contains (a block `B ∋ 0` equals the minimal
/// block containing `{0} ∪ B`). So the set of all blocks through 0 is the
/// closure of the minimal ones under pairwise join, where the join is the
/// congruence closure of the union. Each block then generates its system as
/// the orbit of the block set under the generators.
pub fn all_block_systems(g: &PermGroup) -> Result<Vec<BlockSystem>, GroupError> {
    if !g.is_transitive() {
        return Err(GroupError::NotTransitive);
    }
    let n = g.degree();
    if n > BLOCK_DEGREE_CAP {
        return Err(GroupError::DegreeCap {
            degree: n,
            cap: BLOCK_DEGREE_CAP,
        });
    }
    let mut blocks: BTreeSet<Vec<usize>> = BTreeSet::new();
    for p in 1..n {
        let b = min_block_of_set(g, &[0, p]);
        if b.len() > 1 && b.len() < n {
            blocks.insert(b);
        }
    }
    loop {
        let list: Vec<Vec<usize>> = blocks.iter().cloned().collect();
        let mut grown = false;
        for i in 0..list.len() {
            for j in i + 1..list.len() {
                let mut seeds = list[i].clone();
                seeds.extend_from_slice(&list[j]);
                let joined = min_block_of_set(g, &seeds);
                if joined.len() < n && blocks.insert(joined) {
                    grown = true;
                }
            }
        }
        if !grown {
            break;
        }
    }
    let mut systems: Vec<BlockSystem> = blocks
        .into_iter()
        .map(|b| system_from_block(g, b))
        .collect();
    systems.sort_by(|a, b| {
        (a.block_size(), &a.blocks).cmp(&(b.block_size(), &b.blocks))
    });
    for s in &systems {
        debug_assert!(s.is_invariant_under(g));
    }
    Ok(systems)
}

fn system_from_block(g: &PermGroup, block: Vec<usize>) -> BlockSystem {
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::from([block.clone()]);
    let mut queue = vec![block];
    let mut qi = 0;
    while qi < queue.len() {
        let b = queue[qi].clone();
        qi += 1;
        for gen in g.generators() {
            let mut image: Vec<usize> = b.iter().map(|&p| gen.apply(p)).collect();
            image.sort_unstable();
            if seen.insert(image.clone()) {
                queue.push(image);
            }
        }
    }
    BlockSystem::from_blocks(queue, g.degree())
}

/// The action of a group on a block system: the faithful transitive
/// `quotient` on the blocks, the `fixer` (kernel: elements leaving every
/// block in place), and a lift from each quotient element to a chosen
/// preimage. `|quotient| · |fixer| = |G|` always holds.
pub struct QuotientAction {
    pub quotient: PermGroup,
    pub fixer: PermGroup,
    lift: BTreeMap<Perm, Perm>,
}

impl QuotientAction {
    pub fn lift(&self, q: &Perm) -> Option<&Perm> {
        self.lift.get(q)
    }
}

pub fn block_quotient(
    g: &PermGroup,
    system: &BlockSystem,
    element_cap: usize,
) -> Result<QuotientAction, GroupError> {
    if !system.is_invariant_under(g) {
        return Err(GroupError::NotInvariant);
    }
    let m = system.block_count();
    let block_image = |p: &Perm| -> Perm {
        let images: Vec<usize> = system
            .blocks
            .iter()
            .map(|b| system.index[p.apply(b[0])])
            .collect();
        Perm::from_images(images).expect("invariant system yields a block permutation")
    };
    let elems = g.elements(element_cap)?;
    let mut lift: BTreeMap<Perm, Perm> = BTreeMap::new();
    let mut fixer_elems: Vec<Perm> = Vec::new();
    for e in &elems {
        let q = block_image(e);
        if q.is_identity() {
            fixer_elems.push(e.clone());
        }
        lift.entry(q).or_insert_with(|| e.clone());
    }
    let quotient_gens: Vec<Perm> = g.generators().iter().map(&block_image).collect();
    let quotient = PermGroup::new(m, quotient_gens)?;
    let fixer = PermGroup::from_members(g.degree(), &fixer_elems)?;
    debug_assert_eq!(&(quotient.order() * fixer.order()), g.order());
    Ok(QuotientAction {
        quotient,
        fixer,
        lift,
    })
}

/// Outcome of the regular-subgroup search: budget exhaustion is distinct
/// from a definitive "none exists".
#[derive(Debug)]
pub enum RegularSearch {
    Found(PermGroup),
    None,
    BudgetExceeded { steps: u64 },
}

/// Searches a transitive group for a subgroup acting regularly on the
/// points (the Cayley-recognition criterion).
///
/// Every non-identity element of a regular subgroup is a derangement, so
/// candidate subgroups are grown by adjoining derangements in increasing
/// enumeration order, pruning as soon as the generated closure exceeds the
/// degree, fails to divide it, or contains a non-identity element with a
/// fixed point. Exhaustive within `budget` closure steps.
pub fn find_regular_subgroup(
    g: &PermGroup,
    element_cap: usize,
    budget: u64,
) -> Result<RegularSearch, GroupError> {
    if !g.is_transitive() {
        return Err(GroupError::NotTransitive);
    }
    let n = g.degree();
    if g.order() == &BigUint::from(n) {
        return Ok(RegularSearch::Found(g.clone()));
    }
    let order = match g.order_u64() {
        Some(o) => o,
        None => {
            return Err(GroupError::TooLarge {
                order: g.order().clone(),
                cap: element_cap,
            })
        }
    };
    if order % n as u64 != 0 {
        return Ok(RegularSearch::None);
    }
    let elems = g.elements(element_cap)?;
    let index: HashMap<Perm, usize> = elems
        .iter()
        .enumerate()
        .map(|(i, e)| (e.clone(), i))
        .collect();
    let id_idx = index[&Perm::identity(n)];
    let ders: Vec<usize> = (0..elems.len())
        .filter(|&i| elems[i].is_derangement())
        .collect();

    struct Search<'a> {
        elems: &'a [Perm],
        index: &'a HashMap<Perm, usize>,
        ders: &'a [usize],
        n: usize,
        budget: u64,
        steps: u64,
    }

    enum Step {
        Pruned,
        Closed(BTreeSet<usize>),
    }

    impl Search<'_> {
        // closure of `current ∪ {d}` with early pruning
        fn close(&mut self, current: &BTreeSet<usize>, d: usize) -> Step {
            let mut set = current.clone();
            let mut list: Vec<usize> = set.iter().copied().collect();
            set.insert(d);
            list.push(d);
            let mut qi = list.len() - 1;
            while qi < list.len() {
                let x = list[qi];
                qi += 1;
                for pos in 0..list.len() {
                    let y = list[pos];
                    for p in [
                        self.elems[x].compose_unchecked(&self.elems[y]),
                        self.elems[y].compose_unchecked(&self.elems[x]),
                    ] {
                        if !p.is_identity() && !p.is_derangement() {
                            return Step::Pruned;
                        }
                        let idx = self.index[&p];
                        if set.insert(idx) {
                            if set.len() > self.n {
                                return Step::Pruned;
                            }
                            list.push(idx);
                        }
                    }
                }
            }
            if self.n % set.len() != 0 {
                return Step::Pruned;
            }
            Step::Closed(set)
        }

        fn dfs(
            &mut self,
            current: &BTreeSet<usize>,
            min_pos: usize,
        ) -> Result<Option<BTreeSet<usize>>, u64> {
            for pos in min_pos..self.ders.len() {
                let d = self.ders[pos];
                if current.contains(&d) {
                    continue;
                }
                self.steps += 1;
                if self.steps > self.budget {
                    return Err(self.steps);
                }
                match self.close(current, d) {
                    Step::Pruned => continue,
                    Step::Closed(set) => {
                        if set.len() == self.n {
                            return Ok(Some(set));
                        }
                        if let Some(found) = self.dfs(&set, pos + 1)? {
                            return Ok(Some(found));
                        }
                    }
                }
            }
            Ok(None)
        }
    }

    let mut search = Search {
        elems: &elems,
        index: &index,
        ders: &ders,
        n,
        budget,
        steps: 0,
    };
    let start = BTreeSet::from([id_idx]);
    match search.dfs(&start, 0) {
        Err(steps) => Ok(RegularSearch::BudgetExceeded { steps }),
        Ok(None) => Ok(RegularSearch::None),
        Ok(Some(set)) => {
            let members: Vec<Perm> = set.iter().map(|&i| elems[i].clone()).collect();
            let sub = PermGroup::from_members(n, &members)?;
            debug_assert!(sub.is_regular());
            Ok(RegularSearch::Found(sub))
        }
    }
}

/// Cayley data extracted from a regular subgroup `r ≤ Aut(graph)`: each
/// vertex `v` is labeled by the unique `r_v ∈ R` with `r_v(0) = v`, the
/// connection set is `{labels of neighbors of 0}`, and the multiplication
/// table composes left-to-right (`a·b` applies `r_a` first) so that the
/// rebuilt Cayley graph equals the input graph under the identity vertex
/// labeling. The equality is checked, not assumed.
pub struct CayleyRealization {
    pub table: MulTable,
    pub connection: Vec<usize>,
}

pub fn cayley_realization(
    graph: &Graph,
    r: &PermGroup,
) -> Result<CayleyRealization, GroupError> {
    let n = graph.n();
    if r.degree() != n || !r.is_regular() {
        return Err(GroupError::NotRegular);
    }
    let elems = r.elements(n)?;
    let mut elem_of: Vec<Option<Perm>> = vec![None; n];
    for e in elems {
        let v = e.apply(0);
        if elem_of[v].is_some() {
            return Err(GroupError::NotRegular);
        }
        elem_of[v] = Some(e);
    }
    let elem_of: Vec<Perm> = elem_of.into_iter().map(Option::unwrap).collect();
    let mut rows = Vec::with_capacity(n);
    for a in 0..n {
        let row: Vec<usize> = (0..n)
            .map(|b| elem_of[b].compose_unchecked(&elem_of[a]).apply(0))
            .collect();
        rows.push(row);
    }
    let table = MulTable::new(rows).map_err(|_| GroupError::RealizationMismatch)?;
    let connection: Vec<usize> = graph.neighbors(0);
    if connection.is_empty() {
        // empty connection set realizes exactly the edgeless graph
        if graph.edge_count() != 0 {
            return Err(GroupError::RealizationMismatch);
        }
        return Ok(CayleyRealization { table, connection });
    }
    let rebuilt =
        cayley_graph(&table, &connection).map_err(|_| GroupError::RealizationMismatch)?;
    if !rebuilt.same_adjacency(graph) {
        return Err(GroupError::RealizationMismatch);
    }
    Ok(CayleyRealization { table, connection })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perms::Perm;

    fn cycle(n: usize, points: &[usize]) -> Perm {
        Perm::from_cycles(n, &[points]).unwrap()
    }

    fn symmetric(n: usize) -> PermGroup {
        let rot: Vec<usize> = (1..n).chain([0]).collect();
        PermGroup::new(
            n,
            vec![
                cycle(n, &[0, 1]),
                Perm::from_images(rot).unwrap(),
            ],
        )
        .unwrap()
    }

    fn a5() -> PermGroup {
        PermGroup::new(5, vec![cycle(5, &[0, 1, 2]), cycle(5, &[0, 1, 2, 3, 4])]).unwrap()
    }

    fn aut_c6() -> PermGroup {
        PermGroup::new(
            6,
            vec![
                cycle(6, &[0, 1, 2, 3, 4, 5]),
                Perm::from_cycles(6, &[&[1, 5], &[2, 4]]).unwrap(),
            ],
        )
        .unwrap()
    }

    fn aut_k33() -> PermGroup {
        PermGroup::new(
            6,
            vec![
                cycle(6, &[0, 1, 2]),
                cycle(6, &[0, 1]),
                cycle(6, &[3, 4, 5]),
                cycle(6, &[3, 4]),
                Perm::from_cycles(6, &[&[0, 3], &[1, 4], &[2, 5]]).unwrap(),
            ],
        )
        .unwrap()
    }

    #[test]
    fn orders() {
        let c5 = PermGroup::new(5, vec![cycle(5, &[0, 1, 2, 3, 4])]).unwrap();
        assert_eq!(c5.order_u64(), Some(5));
        assert_eq!(symmetric(5).order_u64(), Some(120));
        assert_eq!(symmetric(8).order_u64(), Some(40320));
        assert_eq!(a5().order_u64(), Some(60));
    }

    #[test]
    fn membership() {
        let g = a5();
        assert!(g.contains(&cycle(5, &[1, 2, 3])));
        assert!(!g.contains(&cycle(5, &[0, 1]))); // odd
        assert!(!g.contains(&cycle(4, &[0, 1, 2])));
    }

    #[test]
    fn element_enumeration_is_exact_and_deterministic() {
        let s4 = symmetric(4);
        let e1 = s4.elements(100).unwrap();
        let e2 = s4.elements(100).unwrap();
        assert_eq!(e1.len(), 24);
        assert_eq!(e1, e2);
        let distinct: BTreeSet<&Perm> = e1.iter().collect();
        assert_eq!(distinct.len(), 24);
    }

    #[test]
    fn element_cap_is_enforced() {
        assert!(matches!(
            symmetric(5).elements(100),
            Err(GroupError::TooLarge { .. })
        ));
    }

    #[test]
    fn orbit_examples() {
        let g = PermGroup::new(3, vec![cycle(3, &[0, 1])]).unwrap();
        assert_eq!(g.orbits(), vec![vec![0, 1], vec![2]]);
        assert!(!g.is_transitive());
        let c5 = PermGroup::new(5, vec![cycle(5, &[0, 1, 2, 3, 4])]).unwrap();
        assert!(c5.is_transitive());
    }

    #[test]
    fn stabilizers() {
        let d8 = PermGroup::new(
            4,
            vec![cycle(4, &[0, 1, 2, 3]), cycle(4, &[1, 3])],
        )
        .unwrap();
        assert_eq!(d8.order_u64(), Some(8));
        assert_eq!(d8.stabilizer_order().unwrap(), BigUint::from(2u32));
        let stab = d8.point_stabilizer(0);
        assert_eq!(stab.order_u64(), Some(2));
        assert!(stab.generators().iter().all(|g| g.apply(0) == 0));

        let c5 = PermGroup::new(5, vec![cycle(5, &[0, 1, 2, 3, 4])]).unwrap();
        assert_eq!(c5.stabilizer_order().unwrap(), BigUint::from(1u32));
    }

    #[test]
    fn regularity() {
        let c6 = PermGroup::new(6, vec![cycle(6, &[0, 1, 2, 3, 4, 5])]).unwrap();
        assert!(c6.is_regular());
        assert!(!aut_c6().is_regular()); // order 12
        assert!(PermGroup::trivial(1).is_regular());
    }

    #[test]
    fn coset_action_degrees() {
        let g = a5();
        let c3 = PermGroup::new(5, vec![cycle(5, &[0, 1, 2])]).unwrap();
        let act = coset_action(&g, &c3).unwrap();
        assert_eq!(act.group.degree(), 20);
        assert!(act.group.is_transitive());
        assert!(act.faithful);
        assert_eq!(
            act.group.point_stabilizer(0).order_u64(),
            Some(3)
        );

        let a4 = PermGroup::new(5, vec![cycle(5, &[0, 1, 2]), cycle(5, &[1, 2, 3])]).unwrap();
        assert_eq!(a4.order_u64(), Some(12));
        let nat = coset_action(&g, &a4).unwrap();
        assert_eq!(nat.group.degree(), 5);
        assert_eq!(nat.group.order_u64(), Some(60));

        let s5 = symmetric(5);
        let d8 = PermGroup::new(5, vec![cycle(5, &[0, 1, 2, 3]), cycle(5, &[0, 2])]).unwrap();
        assert_eq!(d8.order_u64(), Some(8));
        let act15 = coset_action(&s5, &d8).unwrap();
        assert_eq!(act15.group.degree(), 15);
    }

    #[test]
    fn coset_action_rejects_non_subgroups() {
        let g = a5();
        let h = PermGroup::new(5, vec![cycle(5, &[0, 1])]).unwrap();
        assert!(coset_action(&g, &h).is_err());
    }

    #[test]
    fn minimal_blocks() {
        let g = aut_c6();
        assert_eq!(minimal_block(&g, 0, 3).unwrap(), vec![0, 3]);
        let prim = a5();
        assert_eq!(minimal_block(&prim, 0, 1).unwrap(), vec![0, 1, 2, 3, 4]);
        let k33 = aut_k33();
        assert_eq!(minimal_block(&k33, 0, 1).unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn block_systems_of_c6_symmetries() {
        let systems = all_block_systems(&aut_c6()).unwrap();
        let sizes: Vec<usize> = systems.iter().map(|s| s.block_size()).collect();
        assert_eq!(sizes, vec![2, 3]);
        assert_eq!(systems[0].blocks, vec![vec![0, 3], vec![1, 4], vec![2, 5]]);
        assert_eq!(systems[1].blocks, vec![vec![0, 2, 4], vec![1, 3, 5]]);
    }

    #[test]
    fn primitive_group_has_no_systems() {
        assert!(all_block_systems(&a5()).unwrap().is_empty());
    }

    #[test]
    fn two_sides_system_of_k33() {
        let systems = all_block_systems(&aut_k33()).unwrap();
        assert!(systems
            .iter()
            .any(|s| s.blocks == vec![vec![0, 1, 2], vec![3, 4, 5]]));
    }

    #[test]
    fn quotients_and_fixers() {
        let k33 = aut_k33();
        let sides = all_block_systems(&k33)
            .unwrap()
            .into_iter()
            .find(|s| s.block_size() == 3)
            .unwrap();
        let qa = block_quotient(&k33, &sides, DEFAULT_ELEMENT_CAP).unwrap();
        assert_eq!(qa.quotient.order_u64(), Some(2));
        assert_eq!(qa.fixer.order_u64(), Some(36));
        let swap = Perm::from_images(vec![1, 0]).unwrap();
        assert!(qa.lift(&swap).is_some());

        let z6 = PermGroup::new(6, vec![cycle(6, &[0, 1, 2, 3, 4, 5])]).unwrap();
        let sys2 = all_block_systems(&z6)
            .unwrap()
            .into_iter()
            .find(|s| s.block_size() == 2)
            .unwrap();
        let qa2 = block_quotient(&z6, &sys2, DEFAULT_ELEMENT_CAP).unwrap();
        assert_eq!(qa2.quotient.order_u64(), Some(3));
        assert_eq!(qa2.fixer.order_u64(), Some(2));

        // a system under its own fixer has trivial quotient
        let fixer_qa = block_quotient(&qa2.fixer, &sys2, DEFAULT_ELEMENT_CAP).unwrap();
        assert_eq!(fixer_qa.quotient.order_u64(), Some(1));
    }

    #[test]
    fn regular_subgroup_of_pentagon_symmetries() {
        let d10 = PermGroup::new(
            5,
            vec![
                cycle(5, &[0, 1, 2, 3, 4]),
                Perm::from_cycles(5, &[&[1, 4], &[2, 3]]).unwrap(),
            ],
        )
        .unwrap();
        match find_regular_subgroup(&d10, DEFAULT_ELEMENT_CAP, 1_000_000).unwrap() {
            RegularSearch::Found(r) => {
                assert_eq!(r.order_u64(), Some(5));
                assert!(r.is_regular());
            }
            other => panic!("expected a regular subgroup, got {:?}", other),
        }
    }

    #[test]
    fn no_regular_subgroup_when_order_not_divisible() {
        // A5 degree 6 action would be needed for a real case; use a cheap
        // one: S3 acting on 3 points has order 6 = 2·3, degree 3 divides it,
        // and the rotation subgroup is regular.
        let s3 = symmetric(3);
        assert!(matches!(
            find_regular_subgroup(&s3, 100, 1000).unwrap(),
            RegularSearch::Found(_)
        ));
    }

    #[test]
    fn group_json_roundtrip() {
        let g = a5();
        let json = serde_json::to_string(&g.to_json()).unwrap();
        let parsed: GroupJson = serde_json::from_str(&json).unwrap();
        let back = parsed.into_group().unwrap();
        assert_eq!(back.order(), g.order());
    }
}
