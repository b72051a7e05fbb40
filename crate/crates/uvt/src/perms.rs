//! Permutation arithmetic, derangement and Schur-orthogonality predicates,
//! and permutation-matrix sums.
//!
//! Conventions, fixed project-wide:
//! - a [`Perm`] is stored as an image array, `images[i] = σ(i)`;
//! - as a 0/1 matrix, row `u` has its single 1 in column `σ(u)` (row =
//!   source);
//! - [`Perm::compose`] applies its right argument first:
//!   `compose(σ, τ)(i) = σ(τ(i))`. Under the row convention above the matrix
//!   of `compose(σ, τ)` is the product `matrix(τ) · matrix(σ)`; a unit test
//!   pins this down rather than assuming it.
//!
//! Two permutation matrices are *Schur-orthogonal* when their entrywise
//! product is zero, i.e. they disagree at every point; equivalently
//! `σ⁻¹τ` is a derangement. Both routes are implemented and tested against
//! each other.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("image array of length {len} is not a bijection of 0..{len}")]
    NotABijection { len: usize },
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("expected {expected} permutations for multiplicity {k}, got {got}")]
    SizeMismatch { expected: usize, got: usize, k: usize },
    #[error("cycle notation reuses or exceeds points (degree {degree})")]
    BadCycles { degree: usize },
}

/// A permutation of `{0..n-1}` stored as an image array.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm {
            images: (0..n).collect(),
        }
    }

    /// Validates that `images` is a bijection of `0..images.len()`.
    pub fn from_images(images: Vec<usize>) -> Result<Perm, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(PermError::NotABijection { len: n });
            }
            seen[x] = true;
        }
        Ok(Perm { images })
    }

    /// Builds a permutation of degree `n` from disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Perm, PermError> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        for cycle in cycles {
            for (i, &p) in cycle.iter().enumerate() {
                if p >= n || used[p] {
                    return Err(PermError::BadCycles { degree: n });
                }
                used[p] = true;
                images[p] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Perm { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// True iff `σ(i) ≠ i` for all `i`.
    pub fn is_derangement(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i != x)
    }

    pub fn fixed_points(&self) -> usize {
        self.images.iter().enumerate().filter(|&(i, &x)| i == x).count()
    }

    /// `compose(σ, τ)(i) = σ(τ(i))` — the right argument acts first.
    pub fn compose(&self, other: &Perm) -> Result<Perm, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Perm) -> Perm {
        Perm {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Perm { images: inv }
    }

    /// Multiplicative order of the element (lcm of cycle lengths).
    pub fn element_order(&self) -> u64 {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut order: u64 = 1;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len: u64 = 0;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.images[p];
                len += 1;
            }
            order = lcm(order, len);
        }
        order
    }

    /// True iff the matrices of `self` and `other` have entrywise product
    /// zero, i.e. `self(i) ≠ other(i)` for all `i`.
    pub fn schur_orthogonal(&self, other: &Perm) -> Result<bool, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.disagrees_everywhere(other))
    }

    #[inline]
    pub(crate) fn disagrees_everywhere(&self, other: &Perm) -> bool {
        self.images
            .iter()
            .zip(&other.images)
            .all(|(a, b)| a != b)
    }

    /// Cycle notation, cycles sorted by least element; identity prints `()`.
    pub fn cycle_string(&self) -> String {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = String::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                seen[start] = true;
                continue;
            }
            out.push('(');
            let mut p = start;
            loop {
                if !out.ends_with('(') {
                    out.push(' ');
                }
                out.push_str(&p.to_string());
                seen[p] = true;
                p = self.images[p];
                if p == start {
                    break;
                }
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_string())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.images)
    }
}

impl Serialize for Perm {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.images.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Perm {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Perm, D::Error> {
        let images = Vec::<usize>::deserialize(d)?;
        Perm::from_images(images).map_err(D::Error::custom)
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// Entrywise sum of permutation matrices; every row and column sums to the
/// number of permutations summed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SumMatrix {
    n: usize,
    entries: Vec<u32>,
}

impl SumMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, u: usize, v: usize) -> u32 {
        self.entries[u * self.n + v]
    }

    /// True iff every entry equals `k` (so the sum is `k·J_n`).
    pub fn is_constant(&self, k: u32) -> bool {
        self.entries.iter().all(|&e| e == k)
    }

    pub fn row_sum(&self, u: usize) -> u64 {
        self.entries[u * self.n..(u + 1) * self.n]
            .iter()
            .map(|&e| e as u64)
            .sum()
    }

    pub fn col_sum(&self, v: usize) -> u64 {
        (0..self.n).map(|u| self.entry(u, v) as u64).sum()
    }
}

/// Sums the permutation matrices of `perms` (all degrees must agree).
pub fn sum_perms(perms: &[Perm]) -> Result<SumMatrix, PermError> {
    let n = perms.first().map_or(0, Perm::degree);
    assert!(perms.len() < u32::MAX as usize, "sum would overflow entries");
    let mut entries = vec![0u32; n * n];
    for p in perms {
        if p.degree() != n {
            return Err(PermError::DegreeMismatch {
                left: n,
                right: p.degree(),
            });
        }
        for (u, &v) in p.images().iter().enumerate() {
            entries[u * n + v] += 1;
        }
    }
    Ok(SumMatrix { n, entries })
}

/// True iff `perms` is a `k`-maximal Schur set: `|perms| = k·n` and the
/// matrix sum is `k·J_n`. A wrong set size is an error (reported distinctly
/// from a mere entry mismatch, which yields `Ok(false)`).
pub fn is_k_uniform_sum(perms: &[Perm], k: usize) -> Result<bool, PermError> {
    let n = perms.first().map_or(0, Perm::degree);
    if perms.len() != k * n {
        return Err(PermError::SizeMismatch {
            expected: k * n,
            got: perms.len(),
            k,
        });
    }
    Ok(sum_perms(perms)?.is_constant(k as u32))
}

/// `∀ u, v ∃ i : σ_i(u) = v` — implemented independently of the matrix sum.
pub fn covers_all_pairs(perms: &[Perm]) -> bool {
    let n = perms.first().map_or(0, Perm::degree);
    (0..n).all(|u| {
        let mut hit = vec![false; n];
        for p in perms {
            hit[p.apply(u)] = true;
        }
        hit.iter().all(|&h| h)
    })
}

/// `∀ u, v ∃! i : σ_i(u) = v` — the uniqueness variant of
/// [`covers_all_pairs`], again implemented independently.
pub fn covers_all_pairs_uniquely(perms: &[Perm]) -> bool {
    let n = perms.first().map_or(0, Perm::degree);
    (0..n).all(|u| {
        let mut hits = vec![0usize; n];
        for p in perms {
            hits[p.apply(u)] += 1;
        }
        hits.iter().all(|&h| h == 1)
    })
}
