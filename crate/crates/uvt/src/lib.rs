//! Classification of finite simple graphs along the chain
//! Cayley ⇒ uniformly vertex-transitive ⇒ vertex-transitive.
//!
//! A graph on `n` vertices is *uniformly vertex-transitive* (UVT) when some
//! `n` of its automorphisms, viewed as permutation matrices, sum to the
//! all-ones matrix `J_n`. Such a set is a *maximal Schur set* (elsewhere:
//! sharply transitive set). Every Cayley graph is UVT and every UVT graph is
//! vertex-transitive; both inclusions are strict, with the Petersen graph and
//! its line graph as the smallest witnesses.
//!
//! Deciding UVT reduces to an exact clique problem: two automorphisms are
//! Schur-orthogonal (their matrices disagree everywhere) exactly when their
//! quotient is a derangement, so maximal Schur sets through the identity are
//! the `(n-1)`-cliques in the identity neighborhood of the derangement graph
//! `D(Γ)`. For imprimitive automorphism groups, a *factorizing block system*
//! (orthogonal elements in the fixer plus a uniformly transitive quotient)
//! certifies UVT by a product construction, and the same machinery
//! generalizes to `k`-uniform covers where `kn` automorphisms sum to `kJ_n`.
//!
//! Module map:
//! - [`graphs`]: bitset graphs, graph6/sparse6 I/O, standard constructions.
//! - [`perms`]: permutation arithmetic, derangement/orthogonality predicates,
//!   permutation-matrix sums.
//! - [`autgrp`]: automorphism groups by individualization–refinement.
//! - [`grouptheory`]: stabilizer chains, orbits, coset actions, block
//!   systems, fixers/quotients, regular-subgroup (Cayley) detection.
//! - [`clique`]: exact branch-and-bound clique solver with coloring bounds.
//! - [`classify`]: the decision procedures (UVT, factorizing systems,
//!   simple-group obstruction, k-uniform covers) and per-graph reports.
//! - [`census`]: batch classification over graph6 files with CSV summaries.
//! - [`presets`]: named graphs and groups used by the examples and tests.

pub mod autgrp;
pub mod bits;
pub mod census;
pub mod classify;
pub mod clique;
pub mod graphs;
pub mod grouptheory;
pub mod perms;
pub mod presets;

pub use classify::{classify_graph, Budgets, ClassificationReport};
pub use graphs::Graph;
pub use grouptheory::PermGroup;
pub use perms::Perm;
