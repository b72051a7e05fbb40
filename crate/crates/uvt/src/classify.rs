//! Decision procedures: uniform transitivity via cliques in the derangement
//! graph, factorizing block systems, the Cayley/UVT/VT chain, the
//! simple-group obstruction, the A5 imprimitivity check, and k-uniform
//! covers.

use crate::autgrp::automorphism_group;
use crate::clique::{has_clique_of_size, max_clique, CliqueSearch, MaxClique, OracleGraph};
use crate::graphs::{orbital_union_graphs, Graph, GraphError};
use crate::grouptheory::{
    all_block_systems, block_quotient, cayley_realization, coset_action, find_regular_subgroup,
    BlockSystem, GroupError, PermGroup, RegularSearch,
};
use crate::perms::{is_k_uniform_sum, Perm, PermError};
use serde::{Deserialize, Serialize};
use std::collections::HashSet;
use std::time::Instant;
use thiserror::Error;

/// Search budgets and caps. All inconclusive verdicts carry the exhausted
/// budget; the clique and cover budgets are independent knobs. The
/// regular-subgroup search shares the clique budget, being itself a
/// group-closed clique search through the identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budgets {
    pub clique_nodes: u64,
    pub cover_nodes: u64,
    pub max_group: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            clique_nodes: crate::clique::DEFAULT_NODE_BUDGET,
            cover_nodes: 100_000_000,
            max_group: crate::grouptheory::DEFAULT_ELEMENT_CAP,
        }
    }
}

#[derive(Debug, Error)]
pub enum ClassifyError {
    #[error("group error: {0}")]
    Group(#[from] GroupError),
    #[error("graph error: {0}")]
    Graph(#[from] GraphError),
    #[error("permutation error: {0}")]
    Perm(#[from] PermError),
    #[error("group is not transitive")]
    NotTransitive,
    #[error("witness verification failed: {0}")]
    BadWitness(String),
    #[error("multiplicity {k} out of range 1..={s}")]
    KOutOfRange { k: usize, s: usize },
    #[error("requested set is not contained in the group")]
    NotInGroup,
}

/// A verified k-maximal Schur set: `k·n` distinct permutations whose matrix
/// sum is `k·J_n` (for `k = 1`, a maximal Schur set).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchurSet {
    pub perms: Vec<Perm>,
    pub k: usize,
}

impl SchurSet {
    /// Checks distinctness and the `k·J_n` sum before wrapping.
    pub fn verified(perms: Vec<Perm>, k: usize) -> Result<SchurSet, ClassifyError> {
        let distinct: HashSet<&Perm> = perms.iter().collect();
        if distinct.len() != perms.len() {
            return Err(ClassifyError::BadWitness("repeated permutation".into()));
        }
        if !is_k_uniform_sum(&perms, k)? {
            return Err(ClassifyError::BadWitness(format!(
                "sum of {} matrices is not {}·J",
                perms.len(),
                k
            )));
        }
        Ok(SchurSet { perms, k })
    }
}

/// Verdict of the uniform-transitivity decision for one group action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UvtDecision {
    Yes(SchurSet),
    /// Definitively not uniformly transitive; `omega_id` is the exact clique
    /// number of the identity neighborhood of the derangement graph when it
    /// was computed within budget.
    No { omega_id: Option<usize> },
    Inconclusive {
        lower: usize,
        upper: usize,
        reason: String,
    },
}

fn derangement_oracle(ders: &[Perm]) -> OracleGraph {
    let owned: Vec<Perm> = ders.to_vec();
    OracleGraph::from_predicate(owned.len(), move |i, j| {
        i != j && owned[i].disagrees_everywhere(&owned[j])
    })
}

/// The full derangement graph of a group: vertices are all elements,
/// adjacency is Schur-orthogonality. Used by invariant tests; decisions use
/// the identity neighborhood instead.
pub fn full_derangement_graph(elems: &[Perm]) -> OracleGraph {
    let owned: Vec<Perm> = elems.to_vec();
    OracleGraph::from_predicate(owned.len(), move |i, j| {
        i != j && owned[i].disagrees_everywhere(&owned[j])
    })
}

/// Decides whether a transitive group of degree `n` contains a maximal Schur
/// set (n elements summing to `J_n`).
///
/// Any maximal Schur set left-translates to one through the identity, whose
/// other members are derangements; so the decision is a clique search of
/// size `n−1` among the fixed-point-free elements, with adjacency =
/// Schur-orthogonality. A yes-witness is re-verified by summation before
/// being returned; a definitive no carries the exact clique number when the
/// follow-up maximum-clique run stays within budget.
pub fn is_uniformly_transitive(
    g: &PermGroup,
    budgets: &Budgets,
) -> Result<UvtDecision, ClassifyError> {
    if !g.is_transitive() {
        return Err(ClassifyError::NotTransitive);
    }
    let n = g.degree();
    let elems = match g.elements(budgets.max_group) {
        Ok(e) => e,
        Err(GroupError::TooLarge { order, cap }) => {
            return Ok(UvtDecision::Inconclusive {
                lower: 0,
                upper: n.saturating_sub(1),
                reason: format!("group order {order} exceeds enumeration cap {cap}"),
            })
        }
        Err(e) => return Err(e.into()),
    };
    let ders: Vec<Perm> = elems.into_iter().filter(Perm::is_derangement).collect();
    let oracle = derangement_oracle(&ders);
    let target = n - 1;
    match has_clique_of_size(&oracle, target, budgets.clique_nodes) {
        CliqueSearch::Found(idx) => {
            let mut perms = vec![Perm::identity(n)];
            perms.extend(idx.into_iter().map(|i| ders[i].clone()));
            Ok(UvtDecision::Yes(SchurSet::verified(perms, 1)?))
        }
        CliqueSearch::None => {
            let omega_id = match max_clique(&oracle, budgets.clique_nodes) {
                MaxClique::Exact(c) => Some(c.len()),
                MaxClique::Inconclusive { .. } => None,
            };
            Ok(UvtDecision::No { omega_id })
        }
        CliqueSearch::Inconclusive { best, nodes } => Ok(UvtDecision::Inconclusive {
            lower: best,
            upper: target,
            reason: format!("clique budget exhausted after {nodes} nodes"),
        }),
    }
}

/// Exact clique data for the derangement graph of a transitive group:
/// `omega = omega_id + 1` since the derangement graph is a Cayley graph of
/// the group (hence vertex-transitive). The deficit is `omega − degree`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OmegaReport {
    pub degree: usize,
    pub omega_id: Option<usize>,
    pub omega: Option<usize>,
    pub deficit: Option<i64>,
    pub lower: usize,
    pub exact: bool,
}

pub fn omega_deficit_of_group(
    g: &PermGroup,
    budgets: &Budgets,
) -> Result<OmegaReport, ClassifyError> {
    if !g.is_transitive() {
        return Err(ClassifyError::NotTransitive);
    }
    let n = g.degree();
    let elems = g.elements(budgets.max_group)?;
    let ders: Vec<Perm> = elems.into_iter().filter(Perm::is_derangement).collect();
    let oracle = derangement_oracle(&ders);
    match max_clique(&oracle, budgets.clique_nodes) {
        MaxClique::Exact(c) => {
            let omega = c.len() + 1;
            Ok(OmegaReport {
                degree: n,
                omega_id: Some(c.len()),
                omega: Some(omega),
                deficit: Some(omega as i64 - n as i64),
                lower: omega,
                exact: true,
            })
        }
        MaxClique::Inconclusive { best, .. } => Ok(OmegaReport {
            degree: n,
            omega_id: None,
            omega: None,
            deficit: None,
            lower: best.len() + 1,
            exact: false,
        }),
    }
}

/// Certificate that a block system is factorizing: `inner` are k mutually
/// Schur-orthogonal elements of the fixer (identity included without loss of
/// generality — translating by `α₁⁻¹` stays inside the fixer and preserves
/// orthogonality), `outer` are lifts of a maximal Schur set of the quotient
/// action on the m blocks, and `product` is the resulting maximal Schur set
/// of size `mk = n`, verified to sum to `J_n`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FactorizingWitness {
    pub system: BlockSystemJson,
    pub inner: Vec<Perm>,
    pub outer: Vec<Perm>,
    pub product: SchurSet,
}

/// Serializable view of a block system (blocks only).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockSystemJson {
    pub blocks: Vec<Vec<usize>>,
}

impl From<&BlockSystem> for BlockSystemJson {
    fn from(b: &BlockSystem) -> Self {
        BlockSystemJson {
            blocks: b.blocks.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SystemStatus {
    Factorizing,
    NotFactorizing,
    Inconclusive(String),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SystemNote {
    pub blocks: usize,
    pub block_size: usize,
    pub status: SystemStatus,
}

/// Result of scanning every nontrivial block system for a factorizing one.
/// Absence of a witness is evidence only, never a "not UVT" verdict — the
/// converse of the factorization criterion is unproven.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FactorizingScan {
    pub witness: Option<FactorizingWitness>,
    pub notes: Vec<SystemNote>,
}

impl FactorizingScan {
    pub fn fully_resolved(&self) -> bool {
        self.notes
            .iter()
            .all(|n| !matches!(n.status, SystemStatus::Inconclusive(_)))
    }
}

/// Searches the nontrivial block systems of a transitive group (in
/// deterministic order: block size, then blocks) for a factorizing one,
/// returning the first witness. Per-system cap or budget exhaustion is
/// recorded in the notes and does not abort the scan.
pub fn find_factorizing_block_system(
    g: &PermGroup,
    budgets: &Budgets,
) -> Result<FactorizingScan, ClassifyError> {
    let systems = all_block_systems(g)?;
    let mut notes = Vec::with_capacity(systems.len());
    for system in systems {
        let (status, witness) = examine_system(g, &system, budgets);
        notes.push(SystemNote {
            blocks: system.block_count(),
            block_size: system.block_size(),
            status,
        });
        if witness.is_some() {
            return Ok(FactorizingScan { witness, notes });
        }
    }
    Ok(FactorizingScan {
        witness: None,
        notes,
    })
}

fn examine_system(
    g: &PermGroup,
    system: &BlockSystem,
    budgets: &Budgets,
) -> (SystemStatus, Option<FactorizingWitness>) {
    let k = system.block_size();
    let qa = match block_quotient(g, system, budgets.max_group) {
        Ok(qa) => qa,
        Err(e) => return (SystemStatus::Inconclusive(e.to_string()), None),
    };
    // (i) k mutually orthogonal fixer elements, anchored at the identity
    let fixer_elems = match qa.fixer.elements(budgets.max_group) {
        Ok(e) => e,
        Err(e) => return (SystemStatus::Inconclusive(e.to_string()), None),
    };
    let fixer_ders: Vec<Perm> = fixer_elems
        .into_iter()
        .filter(Perm::is_derangement)
        .collect();
    let oracle = derangement_oracle(&fixer_ders);
    let inner = match has_clique_of_size(&oracle, k - 1, budgets.clique_nodes) {
        CliqueSearch::Found(idx) => {
            let mut inner = vec![Perm::identity(g.degree())];
            inner.extend(idx.into_iter().map(|i| fixer_ders[i].clone()));
            inner
        }
        CliqueSearch::None => return (SystemStatus::NotFactorizing, None),
        CliqueSearch::Inconclusive { nodes, .. } => {
            return (
                SystemStatus::Inconclusive(format!(
                    "fixer clique budget exhausted after {nodes} nodes"
                )),
                None,
            )
        }
    };
    // (ii) the quotient acts uniformly transitively on the blocks
    let outer_quotient = match is_uniformly_transitive(&qa.quotient, budgets) {
        Ok(UvtDecision::Yes(s)) => s.perms,
        Ok(UvtDecision::No { .. }) => return (SystemStatus::NotFactorizing, None),
        Ok(UvtDecision::Inconclusive { reason, .. }) => {
            return (SystemStatus::Inconclusive(reason), None)
        }
        Err(e) => return (SystemStatus::Inconclusive(e.to_string()), None),
    };
    let mut outer = Vec::with_capacity(outer_quotient.len());
    for q in &outer_quotient {
        match qa.lift(q) {
            Some(l) => outer.push(l.clone()),
            None => {
                return (
                    SystemStatus::Inconclusive("missing lift for quotient element".into()),
                    None,
                )
            }
        }
    }
    // multiply out: inner ∘ outer covers every cell exactly once
    let mut product = Vec::with_capacity(inner.len() * outer.len());
    for a in &inner {
        for b in &outer {
            product.push(a.compose_unchecked(b));
        }
    }
    match SchurSet::verified(product, 1) {
        Ok(schur) => (
            SystemStatus::Factorizing,
            Some(FactorizingWitness {
                system: system.into(),
                inner,
                outer,
                product: schur,
            }),
        ),
        Err(e) => (SystemStatus::Inconclusive(e.to_string()), None),
    }
}

/// For a transitive group flagged as simple (the flag is supplied, not
/// computed): confirms that every nontrivial block system has a trivial
/// fixer and that no system is factorizing. Returns `false` for groups not
/// flagged simple or when the scan cannot be fully resolved.
pub fn check_simple_group_obstruction(
    g: &PermGroup,
    is_simple: bool,
    budgets: &Budgets,
) -> Result<bool, ClassifyError> {
    if !is_simple {
        return Ok(false);
    }
    let systems = all_block_systems(g)?;
    for system in &systems {
        let qa = block_quotient(g, system, budgets.max_group)?;
        let trivial = qa.fixer.order_u64() == Some(1);
        let whole = qa.fixer.order() == g.order();
        if !trivial && !whole {
            return Ok(false); // a proper nontrivial normal subgroup: not simple
        }
    }
    let scan = find_factorizing_block_system(g, budgets)?;
    Ok(scan.witness.is_none() && scan.fully_resolved())
}

/// Checks that none of the three primitive coset actions of A5 (degrees 5,
/// 6, and 10, on cosets of A4, D10, and S3) is the full automorphism group
/// of any invariant graph: every orbital-union graph has `|Aut| ≠ 60`.
pub fn verify_a5_imprimitivity(budgets: &Budgets) -> Result<bool, ClassifyError> {
    let a5 = crate::presets::a5_natural();
    let subgroups = [
        crate::presets::a4_in_a5(),
        crate::presets::d10_in_a5(),
        crate::presets::s3_in_a5(),
    ];
    let _ = budgets;
    for h in subgroups {
        let action = coset_action(&a5, &h)?;
        debug_assert!(action.faithful);
        for graph in orbital_union_graphs(&action.group)? {
            let aut = automorphism_group(&graph);
            debug_assert!(action
                .group
                .generators()
                .iter()
                .all(|gen| aut.contains(gen)));
            if aut.order_u64() == Some(60) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Verdict of the k-uniform decision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KuvtDecision {
    Yes(SchurSet),
    No,
    Inconclusive { reason: String },
}

/// Decides whether a transitive group is k-uniformly transitive: whether
/// `k·n` elements sum to `k·J_n`.
///
/// Shortcuts, applied in order: `k = s` (the whole group works, `s` the
/// vertex-stabilizer order); a regular subgroup (union of `k` of its left
/// cosets works); `s − k < k` (solve the cheaper complementary multiplicity
/// and take the set complement — the two are equivalent). Otherwise a
/// generalized exact-cover search runs over the `n²` matrix cells with
/// column multiplicity `k`, rows the group elements, least-slack cell
/// selection, and the identity anchored without loss of generality (any
/// witness left-translates to one containing it).
pub fn k_uvt(g: &PermGroup, k: usize, budgets: &Budgets) -> Result<KuvtDecision, ClassifyError> {
    if !g.is_transitive() {
        return Err(ClassifyError::NotTransitive);
    }
    if k == 0 {
        return Err(ClassifyError::KOutOfRange { k, s: 0 });
    }
    let n = g.degree();
    let s = match usize::try_from(&g.stabilizer_order()?) {
        Ok(s) => s,
        Err(_) => {
            return Ok(KuvtDecision::Inconclusive {
                reason: "stabilizer order exceeds machine range".into(),
            })
        }
    };
    if k > s {
        return Ok(KuvtDecision::No); // only s·n elements exist
    }
    let elems = match g.elements(budgets.max_group) {
        Ok(e) => e,
        Err(GroupError::TooLarge { order, cap }) => {
            return Ok(KuvtDecision::Inconclusive {
                reason: format!("group order {order} exceeds enumeration cap {cap}"),
            })
        }
        Err(e) => return Err(e.into()),
    };
    if k == s {
        return Ok(KuvtDecision::Yes(SchurSet::verified(elems, k)?));
    }
    match find_regular_subgroup(g, budgets.max_group, budgets.clique_nodes)? {
        RegularSearch::Found(r) => {
            return Ok(KuvtDecision::Yes(cayley_k_schur(g, &r, k, budgets)?));
        }
        RegularSearch::None | RegularSearch::BudgetExceeded { .. } => {}
    }
    if s - k >= 1 && s - k < k {
        match k_uvt(g, s - k, budgets)? {
            KuvtDecision::Yes(sset) => {
                return Ok(KuvtDecision::Yes(complement_schur_set(g, &sset, budgets)?))
            }
            KuvtDecision::No => return Ok(KuvtDecision::No),
            KuvtDecision::Inconclusive { .. } => {}
        }
    }
    match solve_k_cover(&elems, n, k, budgets.cover_nodes) {
        CoverOutcome::Found(indices) => {
            let perms: Vec<Perm> = indices.into_iter().map(|i| elems[i].clone()).collect();
            Ok(KuvtDecision::Yes(SchurSet::verified(perms, k)?))
        }
        CoverOutcome::None => Ok(KuvtDecision::No),
        CoverOutcome::Budget(nodes) => Ok(KuvtDecision::Inconclusive {
            reason: format!("cover budget exhausted after {nodes} nodes"),
        }),
    }
}

/// `Aut − S` for a verified k-maximal `S ⊆ G`: a verified `(s−k)`-maximal
/// Schur set. The boundary `k = s` (empty complement) is rejected.
pub fn complement_schur_set(
    g: &PermGroup,
    s_set: &SchurSet,
    budgets: &Budgets,
) -> Result<SchurSet, ClassifyError> {
    let s = usize::try_from(&g.stabilizer_order()?)
        .map_err(|_| ClassifyError::BadWitness("stabilizer order out of range".into()))?;
    if s_set.k >= s {
        return Err(ClassifyError::KOutOfRange {
            k: s - s_set.k,
            s,
        });
    }
    let elems = g.elements(budgets.max_group)?;
    let member: HashSet<&Perm> = s_set.perms.iter().collect();
    if !s_set.perms.iter().all(|p| g.contains(p)) {
        return Err(ClassifyError::NotInGroup);
    }
    let rest: Vec<Perm> = elems
        .into_iter()
        .filter(|e| !member.contains(e))
        .collect();
    SchurSet::verified(rest, s - s_set.k)
}

/// Union of the first `k` left cosets of a regular subgroup, in order of
/// first appearance in the deterministic element enumeration: a verified
/// k-maximal Schur set (each left coset of a regular subgroup is itself a
/// maximal Schur set).
pub fn cayley_k_schur(
    g: &PermGroup,
    r: &PermGroup,
    k: usize,
    budgets: &Budgets,
) -> Result<SchurSet, ClassifyError> {
    if !r.is_regular() || r.degree() != g.degree() {
        return Err(ClassifyError::Group(GroupError::NotRegular));
    }
    let n = g.degree();
    let s = usize::try_from(&g.stabilizer_order()?)
        .map_err(|_| ClassifyError::BadWitness("stabilizer order out of range".into()))?;
    if k < 1 || k > s {
        return Err(ClassifyError::KOutOfRange { k, s });
    }
    let elems = g.elements(budgets.max_group)?;
    let r_elems = r.elements(n)?;
    let mut assigned: HashSet<Perm> = HashSet::with_capacity(elems.len());
    let mut union: Vec<Perm> = Vec::with_capacity(k * n);
    let mut cosets = 0usize;
    for e in &elems {
        if assigned.contains(e) {
            continue;
        }
        let coset: Vec<Perm> = r_elems
            .iter()
            .map(|x| e.compose_unchecked(x))
            .collect();
        for c in &coset {
            assigned.insert(c.clone());
        }
        if cosets < k {
            union.extend(coset);
        }
        cosets += 1;
        if cosets >= k && union.len() == k * n {
            break;
        }
    }
    SchurSet::verified(union, k)
}

enum CoverOutcome {
    Found(Vec<usize>),
    None,
    Budget(u64),
}

// Generalized exact cover: choose a set of element indices (the identity is
// pre-chosen) so that every cell (u, e(u)) is covered exactly k times.
// Branching column = unfilled cell with least slack (usable candidates minus
// remaining need); candidates at a cell are taken in increasing index order
// along each path, which visits every solution set while cutting permuted
// revisits.
fn solve_k_cover(elems: &[Perm], n: usize, k: usize, budget: u64) -> CoverOutcome {
    let total = k * n;
    let ncells = n * n;
    let cell = |u: usize, v: usize| u * n + v;
    let mut cell_elems: Vec<Vec<usize>> = vec![Vec::new(); ncells];
    for (ei, e) in elems.iter().enumerate() {
        for u in 0..n {
            cell_elems[cell(u, e.apply(u))].push(ei);
        }
    }

    struct Cover<'a> {
        elems: &'a [Perm],
        cell_elems: &'a [Vec<usize>],
        n: usize,
        k: u32,
        counts: Vec<u32>,
        avail: Vec<u32>,
        alive: Vec<bool>,
        chosen: Vec<usize>,
        last_branch: Vec<usize>, // per cell: index bound along the current path
        nodes: u64,
        budget: u64,
    }

    impl Cover<'_> {
        fn kill(&mut self, ei: usize, trail: &mut Vec<usize>) {
            if !self.alive[ei] {
                return;
            }
            self.alive[ei] = false;
            trail.push(ei);
            for u in 0..self.n {
                let c = u * self.n + self.elems[ei].apply(u);
                self.avail[c] -= 1;
            }
        }

        // returns the kill trail for undo
        fn add(&mut self, ei: usize) -> Vec<usize> {
            let mut trail = Vec::new();
            self.chosen.push(ei);
            self.kill(ei, &mut trail);
            for u in 0..self.n {
                let c = u * self.n + self.elems[ei].apply(u);
                self.counts[c] += 1;
                if self.counts[c] == self.k {
                    for e2 in self.cell_elems[c].clone() {
                        self.kill(e2, &mut trail);
                    }
                }
            }
            trail
        }

        fn undo(&mut self, ei: usize, trail: Vec<usize>) {
            for u in 0..self.n {
                let c = u * self.n + self.elems[ei].apply(u);
                self.counts[c] -= 1;
            }
            for e2 in trail.into_iter().rev() {
                self.alive[e2] = true;
                for u in 0..self.n {
                    let c = u * self.n + self.elems[e2].apply(u);
                    self.avail[c] += 1;
                }
            }
            self.chosen.pop();
        }

        fn dfs(&mut self, total: usize) -> Result<bool, u64> {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(self.nodes);
            }
            if self.chosen.len() == total {
                return Ok(true);
            }
            // most constrained unfilled cell
            let mut best: Option<(i64, usize)> = None;
            for c in 0..self.counts.len() {
                if self.counts[c] < self.k {
                    let need = (self.k - self.counts[c]) as i64;
                    let slack = self.avail[c] as i64 - need;
                    if slack < 0 {
                        return Ok(false);
                    }
                    if best.map_or(true, |(bs, _)| slack < bs) {
                        best = Some((slack, c));
                    }
                }
            }
            let (_, c) = best.expect("unfilled cell exists before completion");
            let floor = self.last_branch[c];
            for pos in 0..self.cell_elems[c].len() {
                let ei = self.cell_elems[c][pos];
                if !self.alive[ei] || ei < floor {
                    continue;
                }
                let trail = self.add(ei);
                self.last_branch[c] = ei + 1;
                let found = self.dfs(total)?;
                self.last_branch[c] = floor;
                if found {
                    return Ok(true); // leave the solution on the chosen stack
                }
                self.undo(ei, trail);
            }
            Ok(false)
        }
    }

    let mut cover = Cover {
        elems,
        cell_elems: &cell_elems,
        n,
        k: k as u32,
        counts: vec![0; ncells],
        avail: cell_elems.iter().map(|l| l.len() as u32).collect(),
        alive: vec![true; elems.len()],
        chosen: Vec::new(),
        last_branch: vec![0; ncells],
        nodes: 0,
        budget,
    };
    let id_idx = elems
        .iter()
        .position(Perm::is_identity)
        .expect("group enumeration contains the identity");
    let _anchor_trail = cover.add(id_idx);
    match cover.dfs(total) {
        Err(nodes) => CoverOutcome::Budget(nodes),
        Ok(true) => CoverOutcome::Found(cover.chosen.clone()),
        Ok(false) => CoverOutcome::None,
    }
}

// ---------------------------------------------------------------------------
// Per-graph classification
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum CayleyVerdict {
    Yes {
        order: String,
        generators: Vec<Perm>,
        connection_set: Vec<usize>,
    },
    No,
    Inconclusive {
        reason: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum UvtVerdict {
    Yes {
        witness: Vec<Perm>,
    },
    No {
        omega_id: Option<usize>,
    },
    Inconclusive {
        lower: usize,
        upper: usize,
        reason: String,
    },
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct Timings {
    pub aut_ms: u64,
    pub cayley_ms: u64,
    pub uvt_ms: u64,
    pub factorizing_ms: u64,
    pub total_ms: u64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct KuvtReport {
    pub k: usize,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<Perm>>,
}

/// Per-graph verdict record. Field order is stable in JSON output.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub id: String,
    pub n: usize,
    pub aut_order: String,
    pub vertex_transitive: bool,
    pub cayley: CayleyVerdict,
    pub uvt: UvtVerdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub factorizing: Option<FactorizingWitness>,
    pub omega_deficit: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kuvt: Option<KuvtReport>,
    pub timings_ms: Timings,
    pub budget_flags: Vec<String>,
}

impl ClassificationReport {
    pub fn is_uvt_yes(&self) -> bool {
        matches!(self.uvt, UvtVerdict::Yes { .. })
    }

    pub fn is_cayley_yes(&self) -> bool {
        matches!(self.cayley, CayleyVerdict::Yes { .. })
    }

    /// The implication chain Cayley ⇒ UVT ⇒ vertex-transitive, plus the
    /// contrapositive (non-UVT ⇒ non-Cayley).
    pub fn chain_coherent(&self) -> bool {
        let cayley_yes = self.is_cayley_yes();
        let uvt_yes = self.is_uvt_yes();
        let uvt_no = matches!(self.uvt, UvtVerdict::No { .. });
        (!cayley_yes || uvt_yes)
            && (!uvt_yes || self.vertex_transitive)
            && (!uvt_no || !cayley_yes)
    }

    /// Re-verifies every embedded witness by summation.
    pub fn verify_witnesses(&self) -> bool {
        if let UvtVerdict::Yes { witness } = &self.uvt {
            if is_k_uniform_sum(witness, 1) != Ok(true) {
                return false;
            }
        }
        if let Some(fw) = &self.factorizing {
            if is_k_uniform_sum(&fw.product.perms, fw.product.k) != Ok(true) {
                return false;
            }
        }
        if let Some(kr) = &self.kuvt {
            if let Some(w) = &kr.witness {
                if is_k_uniform_sum(w, kr.k) != Ok(true) {
                    return false;
                }
            }
        }
        true
    }
}

/// Classifies one graph along the chain: automorphism group, transitivity
/// gate, regular-subgroup (Cayley) search, clique-based UVT decision, and —
/// when the clique search is inconclusive — the factorizing-block-system
/// fallback. A non-transitive graph short-circuits every verdict to no.
///
/// The Cayley check runs before the clique search because a regular subgroup
/// is itself a maximal Schur set and the subgroup search is usually cheaper
/// than an `(n−1)`-clique decision on a large derangement neighborhood.
pub fn classify_graph(g: &Graph, id: &str, budgets: &Budgets) -> ClassificationReport {
    let t_total = Instant::now();
    let mut flags: Vec<String> = Vec::new();
    let n = g.n();

    let t_aut = Instant::now();
    let aut = automorphism_group(g);
    let aut_ms = t_aut.elapsed().as_millis() as u64;
    let vt = aut.is_transitive();

    if !vt {
        return ClassificationReport {
            id: id.to_string(),
            n,
            aut_order: aut.order().to_string(),
            vertex_transitive: false,
            cayley: CayleyVerdict::No,
            uvt: UvtVerdict::No { omega_id: None },
            factorizing: None,
            omega_deficit: None,
            kuvt: None,
            timings_ms: Timings {
                aut_ms,
                total_ms: t_total.elapsed().as_millis() as u64,
                ..Timings::default()
            },
            budget_flags: flags,
        };
    }

    let t_cayley = Instant::now();
    let mut cayley = match find_regular_subgroup(&aut, budgets.max_group, budgets.clique_nodes) {
        Ok(RegularSearch::Found(r)) => {
            let realization = cayley_realization(g, &r).expect("regular subgroup realizes");
            CayleyVerdict::Yes {
                order: r.order().to_string(),
                generators: r.generators().to_vec(),
                connection_set: realization.connection,
            }
        }
        Ok(RegularSearch::None) => CayleyVerdict::No,
        Ok(RegularSearch::BudgetExceeded { steps }) => {
            flags.push("cayley_budget_exhausted".into());
            CayleyVerdict::Inconclusive {
                reason: format!("regular-subgroup budget exhausted after {steps} steps"),
            }
        }
        Err(GroupError::TooLarge { order, cap }) => {
            flags.push("group_over_enumeration_cap".into());
            CayleyVerdict::Inconclusive {
                reason: format!("group order {order} exceeds enumeration cap {cap}"),
            }
        }
        Err(e) => CayleyVerdict::Inconclusive {
            reason: e.to_string(),
        },
    };
    let cayley_ms = t_cayley.elapsed().as_millis() as u64;

    let mut factorizing = None;
    let mut uvt_ms = 0;
    let mut factorizing_ms = 0;

    let uvt = if let CayleyVerdict::Yes { generators, .. } = &cayley {
        // a regular subgroup is a maximal Schur set
        let r = PermGroup::new(n, generators.clone()).expect("verified generators");
        let members = r.elements(n).expect("regular subgroup has n elements");
        let witness = SchurSet::verified(members, 1).expect("regular subgroup sums to J");
        UvtVerdict::Yes {
            witness: witness.perms,
        }
    } else {
        let t_uvt = Instant::now();
        let decision = is_uniformly_transitive(&aut, budgets);
        uvt_ms = t_uvt.elapsed().as_millis() as u64;
        match decision {
            Ok(UvtDecision::Yes(s)) => UvtVerdict::Yes { witness: s.perms },
            Ok(UvtDecision::No { omega_id }) => {
                if omega_id.is_none() {
                    flags.push("omega_budget_exhausted".into());
                }
                UvtVerdict::No { omega_id }
            }
            Ok(UvtDecision::Inconclusive {
                lower,
                upper,
                reason,
            }) => {
                flags.push("clique_budget_or_cap".into());
                let t_fact = Instant::now();
                let fallback = find_factorizing_block_system(&aut, budgets);
                factorizing_ms = t_fact.elapsed().as_millis() as u64;
                match fallback {
                    Ok(scan) if scan.witness.is_some() => {
                        let w = scan.witness.unwrap();
                        let witness = w.product.perms.clone();
                        factorizing = Some(w);
                        UvtVerdict::Yes { witness }
                    }
                    Ok(_) => UvtVerdict::Inconclusive {
                        lower,
                        upper,
                        reason: format!("{reason}; no factorizing block system found"),
                    },
                    Err(e) => UvtVerdict::Inconclusive {
                        lower,
                        upper,
                        reason: format!("{reason}; factorizing scan failed: {e}"),
                    },
                }
            }
            Err(e) => UvtVerdict::Inconclusive {
                lower: 0,
                upper: n.saturating_sub(1),
                reason: e.to_string(),
            },
        }
    };

    // definitive non-UVT forces non-Cayley
    if matches!(uvt, UvtVerdict::No { .. }) {
        assert!(
            !matches!(cayley, CayleyVerdict::Yes { .. }),
            "verified Cayley witness contradicts a definitive non-UVT verdict"
        );
        cayley = CayleyVerdict::No;
    }

    let omega_deficit = match &uvt {
        UvtVerdict::Yes { .. } => Some(0),
        UvtVerdict::No {
            omega_id: Some(w),
        } => Some((*w as i64 + 1) - n as i64),
        _ => None,
    };

    let report = ClassificationReport {
        id: id.to_string(),
        n,
        aut_order: aut.order().to_string(),
        vertex_transitive: true,
        cayley,
        uvt,
        factorizing,
        omega_deficit,
        kuvt: None,
        timings_ms: Timings {
            aut_ms,
            cayley_ms,
            uvt_ms,
            factorizing_ms,
            total_ms: t_total.elapsed().as_millis() as u64,
        },
        budget_flags: flags,
    };
    debug_assert!(report.chain_coherent());
    debug_assert!(report.verify_witnesses());
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{circulant, johnson, kneser, line_graph, Graph};
    use crate::presets;

    fn budgets() -> Budgets {
        Budgets::default()
    }

    #[test]
    fn regular_group_is_uniformly_transitive() {
        let z6 = presets::cyclic_regular(6);
        match is_uniformly_transitive(&z6, &budgets()).unwrap() {
            UvtDecision::Yes(s) => assert_eq!(s.perms.len(), 6),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn petersen_group_is_uniformly_transitive() {
        let aut = automorphism_group(&presets::petersen());
        match is_uniformly_transitive(&aut, &budgets()).unwrap() {
            UvtDecision::Yes(s) => {
                assert_eq!(s.perms.len(), 10);
                assert!(is_k_uniform_sum(&s.perms, 1).unwrap());
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn path_graph_is_rejected_as_intransitive() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let aut = automorphism_group(&p3);
        assert!(matches!(
            is_uniformly_transitive(&aut, &budgets()),
            Err(ClassifyError::NotTransitive)
        ));
    }

    #[test]
    fn classify_petersen() {
        let report = classify_graph(&presets::petersen(), "petersen", &budgets());
        assert_eq!(report.aut_order, "120");
        assert!(report.vertex_transitive);
        assert_eq!(report.cayley, CayleyVerdict::No);
        assert!(report.is_uvt_yes());
        assert_eq!(report.omega_deficit, Some(0));
        assert!(report.chain_coherent());
    }

    #[test]
    fn classify_line_graph_of_petersen() {
        let lp = line_graph(&presets::petersen()).unwrap();
        let report = classify_graph(&lp, "line:petersen", &budgets());
        assert_eq!(report.aut_order, "120");
        assert!(report.vertex_transitive);
        assert_eq!(report.cayley, CayleyVerdict::No);
        match report.uvt {
            UvtVerdict::No { omega_id } => assert_eq!(omega_id, Some(12)),
            ref other => panic!("unexpected {other:?}"),
        }
        assert_eq!(report.omega_deficit, Some(13 - 15));
    }

    #[test]
    fn classify_path_short_circuits() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let report = classify_graph(&p3, "p3", &budgets());
        assert!(!report.vertex_transitive);
        assert_eq!(report.cayley, CayleyVerdict::No);
        assert!(matches!(report.uvt, UvtVerdict::No { omega_id: None }));
    }

    #[test]
    fn classify_cycle_is_cayley() {
        let c5 = circulant(5, &[1]).unwrap();
        let report = classify_graph(&c5, "c5", &budgets());
        assert!(report.is_cayley_yes());
        assert!(report.is_uvt_yes());
        assert_eq!(report.omega_deficit, Some(0));
    }

    #[test]
    fn factorizing_witness_for_k33() {
        let k33 = Graph::from_edges(
            6,
            &[
                (0, 3),
                (0, 4),
                (0, 5),
                (1, 3),
                (1, 4),
                (1, 5),
                (2, 3),
                (2, 4),
                (2, 5),
            ],
        )
        .unwrap();
        let aut = automorphism_group(&k33);
        assert_eq!(aut.order_u64(), Some(72));
        let scan = find_factorizing_block_system(&aut, &budgets()).unwrap();
        let w = scan.witness.expect("two-sides system factorizes");
        assert_eq!(w.inner.len(), 3);
        assert_eq!(w.outer.len(), 2);
        assert_eq!(w.product.perms.len(), 6);
        assert!(is_k_uniform_sum(&w.product.perms, 1).unwrap());
    }

    #[test]
    fn regular_groups_factor_through_their_systems() {
        for g in [
            presets::cyclic_regular(6),
            presets::cyclic_regular(4),
            presets::klein_four_regular(),
            presets::s3_regular(),
        ] {
            let scan = find_factorizing_block_system(&g, &budgets()).unwrap();
            assert!(scan.witness.is_some(), "regular group must factor");
        }
    }

    #[test]
    fn a5_coset_actions_have_no_factorizing_system() {
        let a5 = presets::a5_natural();
        for (h, degree) in [
            (presets::c3_in_a5(), 20usize),
            (presets::c2_in_a5(), 30usize),
        ] {
            let action = coset_action(&a5, &h).unwrap();
            assert_eq!(action.group.degree(), degree);
            let scan = find_factorizing_block_system(&action.group, &budgets()).unwrap();
            assert!(scan.witness.is_none());
            assert!(scan.fully_resolved());
            assert!(
                check_simple_group_obstruction(&action.group, true, &budgets()).unwrap()
            );
        }
    }

    #[test]
    fn z6_is_not_flagged_by_simple_obstruction() {
        let z6 = presets::cyclic_regular(6);
        assert!(!check_simple_group_obstruction(&z6, false, &budgets()).unwrap());
    }

    #[test]
    fn kuvt_whole_group_and_cosets() {
        // Aut(C4) = dihedral of order 8, s = 2
        let c4 = circulant(4, &[1]).unwrap();
        let aut = automorphism_group(&c4);
        match k_uvt(&aut, 2, &budgets()).unwrap() {
            KuvtDecision::Yes(s) => {
                assert_eq!(s.perms.len(), 8);
                assert_eq!(s.k, 2);
            }
            other => panic!("unexpected {other:?}"),
        }
        match k_uvt(&aut, 1, &budgets()).unwrap() {
            KuvtDecision::Yes(s) => assert_eq!(s.perms.len(), 4),
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(k_uvt(&aut, 3, &budgets()).unwrap(), KuvtDecision::No);
    }

    // the direct exact-cover path, with every shortcut inapplicable:
    // Aut(Petersen) has no regular subgroup, so k = 1 exercises the solver
    // and must agree with the clique route
    #[test]
    fn kuvt_direct_cover_path_for_k1() {
        let aut = automorphism_group(&presets::petersen());
        match k_uvt(&aut, 1, &budgets()).unwrap() {
            KuvtDecision::Yes(s) => {
                assert_eq!(s.perms.len(), 10);
                assert!(is_k_uniform_sum(&s.perms, 1).unwrap());
            }
            other => panic!("Petersen is uniformly transitive: {other:?}"),
        }
    }

    // 2-uniformity of the line graph of the Petersen graph: not uniformly
    // transitive, yet thirty automorphisms cover every matrix cell twice
    #[test]
    fn kuvt_line_petersen_is_two_uniform() {
        let lp = line_graph(&presets::petersen()).unwrap();
        let aut = automorphism_group(&lp);
        match k_uvt(&aut, 2, &budgets()).unwrap() {
            KuvtDecision::Yes(s) => {
                assert_eq!(s.perms.len(), 30);
                assert!(is_k_uniform_sum(&s.perms, 2).unwrap());
                assert!(s.perms.iter().all(|p| aut.contains(p)));
            }
            other => panic!("expected a verified 2-uniform witness: {other:?}"),
        }
    }

    #[test]
    fn complement_schur_sets() {
        let aut = automorphism_group(&circulant(6, &[1]).unwrap());
        let s = usize::try_from(&aut.stabilizer_order().unwrap()).unwrap();
        assert_eq!(s, 2);
        match k_uvt(&aut, 1, &budgets()).unwrap() {
            KuvtDecision::Yes(witness) => {
                let comp = complement_schur_set(&aut, &witness, &budgets()).unwrap();
                assert_eq!(comp.k, 1);
                assert_eq!(comp.perms.len(), 6);
                // boundary: complement of the whole group is rejected
                let whole =
                    SchurSet::verified(aut.elements(100).unwrap(), 2).unwrap();
                assert!(complement_schur_set(&aut, &whole, &budgets()).is_err());
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn johnson_5_2_is_uvt_non_cayley() {
        let j52 = johnson(5, 2).unwrap();
        let report = classify_graph(&j52, "johnson:5:2", &budgets());
        assert!(report.vertex_transitive);
        assert_eq!(report.cayley, CayleyVerdict::No);
        assert!(report.is_uvt_yes());
    }

    #[test]
    fn kneser_5_2_matches_petersen() {
        assert!(kneser(5, 2)
            .unwrap()
            .same_adjacency(&presets::petersen()));
    }

    #[test]
    fn a5_imprimitivity_verification() {
        assert!(verify_a5_imprimitivity(&budgets()).unwrap());
    }

    #[test]
    fn report_serializes_with_stable_fields() {
        let report = classify_graph(&circulant(4, &[1, 2]).unwrap(), "k4", &budgets());
        let json = serde_json::to_string(&report).unwrap();
        let round: ClassificationReport = serde_json::from_str(&json).unwrap();
        assert_eq!(round.id, "k4");
        assert!(round.verify_witnesses());
        let first = json.find("\"id\"").unwrap();
        let second = json.find("\"n\"").unwrap();
        assert!(first < second, "field order must be stable");
    }
}
