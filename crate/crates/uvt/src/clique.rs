//! Exact clique decision and maximum-clique search over an implicit
//! adjacency oracle, tuned for derangement graphs.
//!
//! The solver is branch-and-bound with a greedy coloring bound and
//! degeneracy-order candidate sorting. Derangement graphs at the scales in
//! scope are dense and structured, where coloring bounds prune well.
//! Searches are single-threaded and fully deterministic: candidate order is
//! fixed by (degeneracy, then index), so identical inputs produce identical
//! witnesses. The node budget turns an over-long search into a first-class
//! "inconclusive" outcome rather than an error.

use crate::bits::Bits;
use std::sync::{Arc, Mutex};

/// Vertex-count threshold for eager densification into bitset rows.
pub const DENSE_CAP: usize = 4096;
/// Default branch-and-bound node budget.
pub const DEFAULT_NODE_BUDGET: u64 = 1_000_000_000;

type Pred = Box<dyn Fn(usize, usize) -> bool + Send + Sync>;

enum Backing {
    Dense(Vec<Bits>),
    Lazy {
        pred: Pred,
        rows: Mutex<Vec<Option<Arc<Bits>>>>,
    },
}

/// A graph given by a symmetric, irreflexive adjacency oracle, densified
/// into bitset rows up to [`DENSE_CAP`] vertices and row-memoized beyond.
pub struct OracleGraph {
    n: usize,
    backing: Backing,
}

impl OracleGraph {
    /// Builds from a pure adjacency predicate. Symmetry and irreflexivity
    /// are asserted exactly on densification and sampled in lazy mode.
    pub fn from_predicate(
        n: usize,
        pred: impl Fn(usize, usize) -> bool + Send + Sync + 'static,
    ) -> OracleGraph {
        if n <= DENSE_CAP {
            let mut rows = vec![Bits::new(n); n];
            for u in 0..n {
                assert!(!pred(u, u), "oracle must be irreflexive");
                for v in u + 1..n {
                    if pred(u, v) {
                        assert!(pred(v, u), "oracle must be symmetric");
                        rows[u].set(v);
                        rows[v].set(u);
                    } else {
                        assert!(!pred(v, u), "oracle must be symmetric");
                    }
                }
            }
            OracleGraph {
                n,
                backing: Backing::Dense(rows),
            }
        } else {
            for i in 0..64.min(n) {
                let j = (i * 2654435761) % n;
                assert!(!pred(i, i), "oracle must be irreflexive");
                assert_eq!(pred(i, j), pred(j, i), "oracle must be symmetric");
            }
            OracleGraph {
                n,
                backing: Backing::Lazy {
                    pred: Box::new(pred),
                    rows: Mutex::new(vec![None; n]),
                },
            }
        }
    }

    pub fn from_bit_rows(rows: Vec<Bits>) -> OracleGraph {
        let n = rows.len();
        for (u, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n);
            assert!(!row.get(u), "adjacency must be irreflexive");
            for v in row.iter_ones() {
                assert!(rows[v].get(u), "adjacency must be symmetric");
            }
        }
        OracleGraph {
            n,
            backing: Backing::Dense(rows),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        match &self.backing {
            Backing::Dense(rows) => rows[u].get(v),
            Backing::Lazy { pred, .. } => pred(u, v),
        }
    }

    fn row(&self, v: usize) -> Arc<Bits> {
        match &self.backing {
            Backing::Dense(rows) => Arc::new(rows[v].clone()),
            Backing::Lazy { pred, rows } => {
                let mut guard = rows.lock().unwrap();
                if let Some(r) = &guard[v] {
                    return Arc::clone(r);
                }
                let mut bits = Bits::new(self.n);
                for u in 0..self.n {
                    if u != v && pred(v, u) {
                        bits.set(u);
                    }
                }
                let arc = Arc::new(bits);
                guard[v] = Some(Arc::clone(&arc));
                arc
            }
        }
    }

    fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices.iter().enumerate().all(|(i, &u)| {
            vertices[i + 1..]
                .iter()
                .all(|&v| self.adjacent(u, v))
        })
    }
}

/// Outcome of a target-size clique decision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliqueSearch {
    /// A clique of exactly the requested size, pairwise-verified.
    Found(Vec<usize>),
    /// The search space was exhausted: no clique of that size exists.
    None,
    /// The node budget ran out first.
    Inconclusive { best: usize, nodes: u64 },
}

/// Outcome of a maximum-clique search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MaxClique {
    /// A maximum clique; the size is exact.
    Exact(Vec<usize>),
    /// Budget ran out: best clique found so far plus a coloring upper bound.
    Inconclusive {
        best: Vec<usize>,
        upper: usize,
        nodes: u64,
    },
}

impl MaxClique {
    pub fn lower_bound(&self) -> usize {
        match self {
            MaxClique::Exact(c) => c.len(),
            MaxClique::Inconclusive { best, .. } => best.len(),
        }
    }
}

struct Solver<'g> {
    g: &'g OracleGraph,
    // internal position -> original vertex, in search priority order
    order: Vec<usize>,
    rows: Option<Vec<Bits>>, // relabeled rows when the graph is dense
    budget: u64,
    nodes: u64,
    exhausted: bool,
    target: Option<usize>,
    best: Vec<usize>, // internal labels
    done: bool,
    current: Vec<usize>,
}

impl<'g> Solver<'g> {
    fn new(g: &'g OracleGraph, budget: u64, target: Option<usize>) -> Solver<'g> {
        let n = g.n();
        let (order, rows) = if n <= DENSE_CAP {
            let order = degeneracy_order(g);
            let mut rank = vec![0usize; n];
            for (i, &v) in order.iter().enumerate() {
                rank[v] = i;
            }
            let mut rows = vec![Bits::new(n); n];
            for (i, &v) in order.iter().enumerate() {
                let orig = g.row(v);
                for u in orig.iter_ones() {
                    rows[i].set(rank[u]);
                }
            }
            (order, Some(rows))
        } else {
            ((0..n).collect(), None)
        };
        Solver {
            g,
            order,
            rows,
            budget,
            nodes: 0,
            exhausted: false,
            target,
            best: Vec::new(),
            done: false,
            current: Vec::new(),
        }
    }

    fn row(&self, internal: usize) -> Arc<Bits> {
        match &self.rows {
            Some(rows) => Arc::new(rows[internal].clone()),
            None => self.g.row(self.order[internal]),
        }
    }

    // Greedy coloring of the candidate set in internal order; returns
    // (vertex, color) with colors non-decreasing.
    fn color_sort(&self, cand: &Bits) -> Vec<(usize, usize)> {
        let mut classes: Vec<Bits> = Vec::new();
        let mut out: Vec<Vec<usize>> = Vec::new();
        for v in cand.iter_ones() {
            let row = self.row(v);
            match classes.iter().position(|cls| !cls.intersects(&row)) {
                Some(ci) => {
                    classes[ci].set(v);
                    out[ci].push(v);
                }
                None => {
                    let mut cls = Bits::new(cand.len());
                    cls.set(v);
                    classes.push(cls);
                    out.push(vec![v]);
                }
            }
        }
        let mut flat = Vec::with_capacity(cand.count_ones());
        for (ci, class) in out.into_iter().enumerate() {
            for v in class {
                flat.push((v, ci + 1));
            }
        }
        flat
    }

    fn threshold(&self) -> usize {
        match self.target {
            Some(t) => t,
            None => self.best.len() + 1,
        }
    }

    fn record_if_better(&mut self) {
        if self.current.len() > self.best.len() {
            self.best = self.current.clone();
            if let Some(t) = self.target {
                if self.best.len() >= t {
                    self.done = true;
                }
            }
        }
    }

    fn expand(&mut self, cand: Bits) {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
            return;
        }
        let ordered = self.color_sort(&cand);
        let mut pool = cand;
        for &(v, color) in ordered.iter().rev() {
            if self.current.len() + color < self.threshold() {
                return; // colors ascend: every remaining vertex bounds lower
            }
            self.current.push(v);
            self.record_if_better();
            if self.done {
                self.current.pop();
                return;
            }
            let mut next = pool.clone();
            next.intersect_with(&self.row(v));
            if !next.is_empty() {
                self.expand(next);
            }
            self.current.pop();
            if self.done || self.exhausted {
                return;
            }
            pool.clear(v);
        }
    }

    fn run(&mut self) {
        let all = Bits::full(self.g.n());
        self.expand(all);
    }

    fn best_original(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.best.iter().map(|&i| self.order[i]).collect();
        out.sort_unstable();
        out
    }
}

// Peel minimum-degree vertices (ties by index); reversed so the densest
// core is explored first.
fn degeneracy_order(g: &OracleGraph) -> Vec<usize> {
    let n = g.n();
    let mut degree: Vec<usize> = (0..n).map(|v| g.row(v).count_ones()).collect();
    let mut alive = vec![true; n];
    let mut peel = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| alive[v])
            .min_by_key(|&v| (degree[v], v))
            .unwrap();
        alive[v] = false;
        peel.push(v);
        for u in g.row(v).iter_ones() {
            if alive[u] {
                degree[u] -= 1;
            }
        }
    }
    peel.reverse();
    peel
}

/// Decides whether a clique of size exactly `t` exists, returning one if so.
/// Budget exhaustion is reported as [`CliqueSearch::Inconclusive`], distinct
/// from a definitive [`CliqueSearch::None`].
pub fn has_clique_of_size(g: &OracleGraph, t: usize, budget: u64) -> CliqueSearch {
    if t == 0 {
        return CliqueSearch::Found(Vec::new());
    }
    if t > g.n() {
        return CliqueSearch::None;
    }
    let mut solver = Solver::new(g, budget, Some(t));
    solver.run();
    if solver.best.len() >= t {
        let witness = solver.best_original();
        assert!(g.is_clique(&witness), "witness must verify");
        CliqueSearch::Found(witness)
    } else if solver.exhausted {
        CliqueSearch::Inconclusive {
            best: solver.best.len(),
            nodes: solver.nodes,
        }
    } else {
        CliqueSearch::None
    }
}

/// Finds a maximum clique. On budget exhaustion the best clique found so
/// far is returned with a greedy-coloring upper bound.
pub fn max_clique(g: &OracleGraph, budget: u64) -> MaxClique {
    if g.n() == 0 {
        return MaxClique::Exact(Vec::new());
    }
    let mut solver = Solver::new(g, budget, None);
    solver.run();
    let witness = solver.best_original();
    assert!(g.is_clique(&witness), "witness must verify");
    if solver.exhausted {
        let all = Bits::full(g.n());
        let upper = greedy_color_bound(g, &all);
        MaxClique::Inconclusive {
            best: witness,
            upper,
            nodes: solver.nodes,
        }
    } else {
        MaxClique::Exact(witness)
    }
}

/// Number of classes of a greedy legal coloring of the induced subgraph on
/// `candidates` (vertices scanned in ascending index order); an upper bound
/// on its clique number. An empty candidate set colors with 0 classes.
pub fn greedy_color_bound(g: &OracleGraph, candidates: &Bits) -> usize {
    let mut classes: Vec<Bits> = Vec::new();
    for v in candidates.iter_ones() {
        let row = g.row(v);
        match classes.iter_mut().find(|cls| !cls.intersects(&row)) {
            Some(cls) => cls.set(v),
            None => {
                let mut cls = Bits::new(candidates.len());
                cls.set(v);
                classes.push(cls);
            }
        }
    }
    classes.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn from_edges(n: usize, edges: &[(usize, usize)]) -> OracleGraph {
        let set: std::collections::HashSet<(usize, usize)> = edges
            .iter()
            .flat_map(|&(u, v)| [(u, v), (v, u)])
            .collect();
        OracleGraph::from_predicate(n, move |u, v| set.contains(&(u, v)))
    }

    fn complete(n: usize) -> OracleGraph {
        OracleGraph::from_predicate(n, |u, v| u != v)
    }

    fn cycle(n: usize) -> OracleGraph {
        OracleGraph::from_predicate(n, move |u, v| {
            let d = (u + n - v) % n;
            d == 1 || d == n - 1
        })
    }

    #[test]
    fn triangle_has_3_clique_c5_does_not() {
        let tri = complete(3);
        assert!(matches!(
            has_clique_of_size(&tri, 3, 1000),
            CliqueSearch::Found(_)
        ));
        let c5 = cycle(5);
        assert_eq!(has_clique_of_size(&c5, 3, 1000), CliqueSearch::None);
        assert!(matches!(
            has_clique_of_size(&c5, 2, 1000),
            CliqueSearch::Found(_)
        ));
    }

    #[test]
    fn zero_target_is_trivially_found() {
        let g = complete(4);
        assert_eq!(has_clique_of_size(&g, 0, 10), CliqueSearch::Found(vec![]));
        assert_eq!(has_clique_of_size(&g, 5, 10), CliqueSearch::None);
    }

    #[test]
    fn max_clique_examples() {
        match max_clique(&complete(5), 10_000) {
            MaxClique::Exact(c) => assert_eq!(c.len(), 5),
            other => panic!("unexpected {other:?}"),
        }
        // Petersen is triangle-free with edges
        let petersen = {
            let g = crate::graphs::kneser(5, 2).unwrap();
            let rows: Vec<Bits> = (0..10)
                .map(|u| {
                    let mut b = Bits::new(10);
                    for v in 0..10 {
                        if g.has_edge(u, v) {
                            b.set(v);
                        }
                    }
                    b
                })
                .collect();
            OracleGraph::from_bit_rows(rows)
        };
        match max_clique(&petersen, 100_000) {
            MaxClique::Exact(c) => assert_eq!(c.len(), 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn budget_exhaustion_is_inconclusive() {
        let g = complete(40);
        match max_clique(&g, 3) {
            MaxClique::Inconclusive { upper, nodes, .. } => {
                assert!(upper >= 40);
                assert!(nodes > 3);
            }
            MaxClique::Exact(_) => panic!("expected budget exhaustion"),
        }
        match has_clique_of_size(&cycle(101), 3, 1) {
            CliqueSearch::Inconclusive { .. } => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn color_bound_examples() {
        let k5 = complete(5);
        assert_eq!(greedy_color_bound(&k5, &Bits::full(5)), 5);
        let empty = OracleGraph::from_predicate(6, |_, _| false);
        assert_eq!(greedy_color_bound(&empty, &Bits::full(6)), 1);
        assert_eq!(greedy_color_bound(&empty, &Bits::new(6)), 0);
    }

    #[test]
    fn determinism() {
        let g = from_edges(
            8,
            &[
                (0, 1),
                (0, 2),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 6),
                (6, 7),
                (4, 6),
            ],
        );
        let a = max_clique(&g, 10_000);
        let b = max_clique(&g, 10_000);
        assert_eq!(a, b);
    }

    #[test]
    fn lazy_oracle_above_dense_cap() {
        // circulant band: max clique of C_n(1,2,3) is 4
        let n = DENSE_CAP + 100;
        let g = OracleGraph::from_predicate(n, move |u, v| {
            let d = (u as i64 - v as i64).rem_euclid(n as i64).min(
                (v as i64 - u as i64).rem_euclid(n as i64),
            );
            (1..=3).contains(&d)
        });
        match has_clique_of_size(&g, 4, 2_000_000) {
            CliqueSearch::Found(c) => assert_eq!(c.len(), 4),
            other => panic!("unexpected {other:?}"),
        }
    }

    // exhaustive subset oracle on small random graphs
    #[test]
    fn matches_brute_force_on_small_graphs() {
        let mut state: u64 = 0x9E3779B97F4A7C15;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for trial in 0..120 {
            let n = 4 + (next() % 7) as usize; // 4..=10
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if next() % 2 == 0 {
                        edges.push((u, v));
                    }
                }
            }
            let g = from_edges(n, &edges);
            let mut brute = 0usize;
            for mask in 0u32..1 << n {
                let verts: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                let ok = verts
                    .iter()
                    .enumerate()
                    .all(|(i, &u)| verts[i + 1..].iter().all(|&v| g.adjacent(u, v)));
                if ok {
                    brute = brute.max(verts.len());
                }
            }
            match max_clique(&g, 1_000_000) {
                MaxClique::Exact(c) => assert_eq!(c.len(), brute, "trial {trial}"),
                other => panic!("unexpected {other:?}"),
            }
        }
    }
}
