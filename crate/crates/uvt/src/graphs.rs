//! Graph representation, standard constructions, and graph6/sparse6 I/O.
//!
//! Graphs are finite and simple, stored as one `u128` adjacency bitset per
//! vertex. Constructions that name their vertices (line graphs, Johnson and
//! Kneser graphs) carry per-vertex labels recording edge or subset identity.

use crate::grouptheory::PermGroup;
use thiserror::Error;

/// Hard vertex cap: one adjacency row per `u128` word.
pub const MAX_VERTICES: usize = 128;
/// Default cap applied when parsing graph6/sparse6 input.
pub const DEFAULT_PARSE_CAP: usize = 64;
/// Cap on symmetrized non-diagonal orbital classes in
/// [`orbital_union_graphs`].
pub const ORBITAL_CLASS_CAP: usize = 20;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Parse { offset: usize, reason: String },
    #[error("vertex count {n} exceeds cap {cap}")]
    TooManyVertices { n: usize, cap: usize },
    #[error("edge ({u}, {v}) out of range or a loop")]
    BadEdge { u: usize, v: usize },
    #[error("line graph of an edgeless graph")]
    Edgeless,
    #[error("bad construction parameters: {0}")]
    BadParameters(String),
    #[error("multiplication table is not a group: {0}")]
    NotAGroup(String),
    #[error("connection set contains the identity")]
    IdentityInConnectionSet,
    #[error("connection set is empty or out of range")]
    BadConnectionSet,
    #[error("{count} orbital classes exceed cap {cap}")]
    OrbitalClassCap { count: usize, cap: usize },
    #[error("group error: {0}")]
    Group(String),
}

/// A finite simple graph on `n` labeled vertices with bitset adjacency rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    rows: Vec<u128>,
    labels: Option<Vec<String>>,
}

impl Graph {
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices {
                n,
                cap: MAX_VERTICES,
            });
        }
        Ok(Graph {
            n,
            rows: vec![0; n],
            labels: None,
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n || v >= self.n || u == v {
            return Err(GraphError::BadEdge { u, v });
        }
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    pub fn row(&self, v: usize) -> u128 {
        self.rows[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn is_regular_of_degree(&self, d: usize) -> bool {
        (0..self.n).all(|v| self.degree(v) == d)
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.n).filter(|&u| self.has_edge(v, u)).collect()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Graph {
        assert_eq!(labels.len(), self.n);
        debug_assert_eq!(
            labels.iter().collect::<std::collections::BTreeSet<_>>().len(),
            self.n,
            "labels must be pairwise distinct"
        );
        self.labels = Some(labels);
        self
    }

    /// Adjacency equality, ignoring labels.
    pub fn same_adjacency(&self, other: &Graph) -> bool {
        self.n == other.n && self.rows == other.rows
    }

    /// Bit-level validity: symmetric adjacency, no loops, no stray bits.
    pub fn check_valid(&self) -> bool {
        let mask: u128 = if self.n == 128 {
            u128::MAX
        } else {
            (1u128 << self.n) - 1
        };
        (0..self.n).all(|u| {
            self.rows[u] & !mask == 0
                && self.rows[u] >> u & 1 == 0
                && (0..self.n).all(|v| self.has_edge(u, v) == self.has_edge(v, u))
        })
    }
}

/// `u ~ v` in the output iff `u ≠ v` and `u ≁ v` in `g`. Labels carry over.
pub fn complement(g: &Graph) -> Graph {
    let mask: u128 = if g.n == 128 {
        u128::MAX
    } else {
        (1u128 << g.n) - 1
    };
    let rows = (0..g.n)
        .map(|v| !g.rows[v] & mask & !(1u128 << v))
        .collect();
    Graph {
        n: g.n,
        rows,
        labels: g.labels.clone(),
    }
}

/// Vertices are the edges of `g`, labeled `"u-v"`; two are adjacent when the
/// underlying edges share an endpoint.
pub fn line_graph(g: &Graph) -> Result<Graph, GraphError> {
    let edges = g.edges();
    if edges.is_empty() {
        return Err(GraphError::Edgeless);
    }
    let m = edges.len();
    let mut lg = Graph::empty(m)?;
    for i in 0..m {
        for j in i + 1..m {
            let (a, b) = edges[i];
            let (c, d) = edges[j];
            if a == c || a == d || b == c || b == d {
                lg.add_edge(i, j)?;
            }
        }
    }
    let labels = edges.iter().map(|&(u, v)| format!("{u}-{v}")).collect();
    Ok(lg.with_labels(labels))
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

fn subset_graph(
    n: usize,
    k: usize,
    adjacent: impl Fn(&[usize], &[usize]) -> bool,
) -> Result<Graph, GraphError> {
    if k == 0 || k >= n {
        return Err(GraphError::BadParameters(format!(
            "need 0 < k < n, got n={n} k={k}"
        )));
    }
    let subsets = k_subsets(n, k);
    if subsets.len() > MAX_VERTICES {
        return Err(GraphError::TooManyVertices {
            n: subsets.len(),
            cap: MAX_VERTICES,
        });
    }
    let mut g = Graph::empty(subsets.len())?;
    for i in 0..subsets.len() {
        for j in i + 1..subsets.len() {
            if adjacent(&subsets[i], &subsets[j]) {
                g.add_edge(i, j)?;
            }
        }
    }
    let labels = subsets
        .iter()
        .map(|s| {
            s.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect();
    Ok(g.with_labels(labels))
}

/// Vertices are the k-subsets of an n-set (lexicographic order); adjacency
/// is `|A ∩ B| = k − 1`.
pub fn johnson(n: usize, k: usize) -> Result<Graph, GraphError> {
    subset_graph(n, k, |a, b| intersection_size(a, b) == k - 1)
}

/// Vertices are the k-subsets of an n-set (lexicographic order); adjacency
/// is `A ∩ B = ∅`. `kneser(5, 2)` is the Petersen graph.
pub fn kneser(n: usize, k: usize) -> Result<Graph, GraphError> {
    subset_graph(n, k, |a, b| intersection_size(a, b) == 0)
}

fn intersection_size(a: &[usize], b: &[usize]) -> usize {
    a.iter().filter(|x| b.contains(x)).count()
}

/// Circulant graph on `Z_n` with the given connection lengths in `1..=n/2`.
pub fn circulant(n: usize, connections: &[usize]) -> Result<Graph, GraphError> {
    if n == 0 || n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices {
            n,
            cap: MAX_VERTICES,
        });
    }
    if connections.is_empty() || connections.iter().any(|&c| c == 0 || c > n / 2) {
        return Err(GraphError::BadParameters(format!(
            "circulant connections must lie in 1..={}",
            n / 2
        )));
    }
    let mut g = Graph::empty(n)?;
    for v in 0..n {
        for &c in connections {
            g.add_edge(v, (v + c) % n)?;
        }
    }
    Ok(g)
}

/// A finite group presented abstractly as an `n × n` multiplication table,
/// `table[a][b] = a·b`. Validation checks closure, that every row and column
/// is a bijection, a two-sided identity, inverses, and associativity
/// exhaustively (orders here stay at or below [`MAX_VERTICES`]).
#[derive(Clone, Debug)]
pub struct MulTable {
    n: usize,
    t: Vec<usize>,
    identity: usize,
}

impl MulTable {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<MulTable, GraphError> {
        let n = rows.len();
        if n == 0 {
            return Err(GraphError::NotAGroup("empty table".into()));
        }
        if n > MAX_VERTICES {
            return Err(GraphError::NotAGroup(format!(
                "order {n} exceeds validation cap {MAX_VERTICES}"
            )));
        }
        let mut t = Vec::with_capacity(n * n);
        for row in &rows {
            if row.len() != n || row.iter().any(|&x| x >= n) {
                return Err(GraphError::NotAGroup("table is not n×n over 0..n".into()));
            }
            t.extend_from_slice(row);
        }
        // rows and columns are bijections (Latin square)
        for i in 0..n {
            let mut row_seen = vec![false; n];
            let mut col_seen = vec![false; n];
            for j in 0..n {
                if row_seen[t[i * n + j]] || col_seen[t[j * n + i]] {
                    return Err(GraphError::NotAGroup(
                        "rows/columns are not bijections".into(),
                    ));
                }
                row_seen[t[i * n + j]] = true;
                col_seen[t[j * n + i]] = true;
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| t[e * n + x] == x && t[x * n + e] == x))
            .ok_or_else(|| GraphError::NotAGroup("no two-sided identity".into()))?;
        for x in 0..n {
            if !(0..n).any(|y| t[x * n + y] == identity && t[y * n + x] == identity) {
                return Err(GraphError::NotAGroup(format!("{x} has no inverse")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if t[t[a * n + b] * n + c] != t[a * n + t[b * n + c]] {
                        return Err(GraphError::NotAGroup(format!(
                            "associativity fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(MulTable { n, t, identity })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.t[a * self.n + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        (0..self.n)
            .find(|&b| self.mul(a, b) == self.identity)
            .expect("validated group has inverses")
    }

    /// Cyclic group table `Z_n`.
    pub fn cyclic(n: usize) -> MulTable {
        let rows = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        MulTable::new(rows).expect("cyclic table is a group")
    }
}

/// Cayley graph on the elements of the table: `a ~ b` when `a = s·b` or
/// `b = s·a` for some `s` in the connection set. The connection set is
/// symmetrized internally (closed under inverses), matching the undirected,
/// uncolored convention.
pub fn cayley_graph(table: &MulTable, connection: &[usize]) -> Result<Graph, GraphError> {
    let n = table.order();
    if connection.is_empty() || connection.iter().any(|&s| s >= n) {
        return Err(GraphError::BadConnectionSet);
    }
    if connection.contains(&table.identity()) {
        return Err(GraphError::IdentityInConnectionSet);
    }
    let mut sym: Vec<usize> = connection.to_vec();
    for &s in connection {
        sym.push(table.inv(s));
    }
    sym.sort_unstable();
    sym.dedup();
    let mut g = Graph::empty(n)?;
    for b in 0..n {
        for &s in &sym {
            let a = table.mul(s, b);
            if a != b {
                g.add_edge(a, b)?;
            }
        }
    }
    Ok(g)
}

/// All simple graphs invariant under a transitive group: one graph per union
/// of symmetrized non-diagonal orbital classes (2^c graphs, including the
/// empty and the complete graph).
pub fn orbital_union_graphs(g: &PermGroup) -> Result<Vec<Graph>, GraphError> {
    if !g.is_transitive() {
        return Err(GraphError::Group("group is not transitive".into()));
    }
    let n = g.degree();
    if n > 32 {
        return Err(GraphError::Group(format!(
            "degree {n} exceeds orbital enumeration cap 32"
        )));
    }
    // orbit classes of ordered non-diagonal pairs, then symmetrized
    let pair_id = |u: usize, v: usize| u * n + v;
    let mut class = vec![usize::MAX; n * n];
    let mut classes: Vec<Vec<(usize, usize)>> = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u == v || class[pair_id(u, v)] != usize::MAX {
                continue;
            }
            let cid = classes.len();
            let mut members = vec![(u, v)];
            class[pair_id(u, v)] = cid;
            let mut qi = 0;
            while qi < members.len() {
                let (a, b) = members[qi];
                qi += 1;
                for gen in g.generators() {
                    let (ga, gb) = (gen.apply(a), gen.apply(b));
                    if class[pair_id(ga, gb)] == usize::MAX {
                        class[pair_id(ga, gb)] = cid;
                        members.push((ga, gb));
                    }
                }
            }
            classes.push(members);
        }
    }
    // merge each class with its transpose
    let mut merged_of = vec![usize::MAX; classes.len()];
    let mut merged: Vec<Vec<(usize, usize)>> = Vec::new();
    for (cid, members) in classes.iter().enumerate() {
        if merged_of[cid] != usize::MAX {
            continue;
        }
        let mid = merged.len();
        merged_of[cid] = mid;
        let (u, v) = members[0];
        let twin = class[pair_id(v, u)];
        let mut all = members.clone();
        if twin != cid {
            merged_of[twin] = mid;
            all.extend_from_slice(&classes[twin]);
        }
        merged.push(all);
    }
    let c = merged.len();
    if c > ORBITAL_CLASS_CAP {
        return Err(GraphError::OrbitalClassCap {
            count: c,
            cap: ORBITAL_CLASS_CAP,
        });
    }
    let mut out = Vec::with_capacity(1 << c);
    for mask in 0u32..(1 << c) {
        let mut graph = Graph::empty(n)?;
        for (i, members) in merged.iter().enumerate() {
            if mask >> i & 1 == 1 {
                for &(u, v) in members {
                    graph.rows[u] |= 1 << v;
                    graph.rows[v] |= 1 << u;
                }
            }
        }
        debug_assert!(graph.check_valid());
        out.push(graph);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// graph6 / sparse6
// ---------------------------------------------------------------------------

fn parse_size(bytes: &[u8], at: &mut usize, cap: usize) -> Result<usize, GraphError> {
    let err = |offset: usize, reason: &str| GraphError::Parse {
        offset,
        reason: reason.to_string(),
    };
    let b0 = *bytes.get(*at).ok_or_else(|| err(*at, "missing size byte"))?;
    let n: usize;
    if b0 == 126 {
        // 63 <= n <= 258047: '~' then three 6-bit groups
        if bytes.len() < *at + 4 {
            return Err(err(*at, "truncated long size header"));
        }
        if bytes[*at + 1] == 126 {
            return Err(err(*at + 1, "8-byte size form exceeds supported range"));
        }
        let mut val: usize = 0;
        for i in 1..=3 {
            let b = bytes[*at + i];
            if !(63..=126).contains(&b) {
                return Err(err(*at + i, "size byte out of printable range"));
            }
            val = val << 6 | (b - 63) as usize;
        }
        n = val;
        *at += 4;
    } else {
        if !(63..=126).contains(&b0) {
            return Err(err(*at, "size byte out of printable range"));
        }
        n = (b0 - 63) as usize;
        *at += 1;
    }
    if n > cap {
        return Err(GraphError::TooManyVertices { n, cap });
    }
    Ok(n)
}

fn strip_line(line: &str) -> &str {
    let line = line.trim_end_matches(['\n', '\r', ' ', '\t']);
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    line.strip_prefix(">>sparse6<<").unwrap_or(line)
}

/// Parses one graph6 line with the default vertex cap of
/// [`DEFAULT_PARSE_CAP`].
pub fn parse_graph6(line: &str) -> Result<Graph, GraphError> {
    parse_graph6_with_cap(line, DEFAULT_PARSE_CAP)
}

pub fn parse_graph6_with_cap(line: &str, cap: usize) -> Result<Graph, GraphError> {
    let cap = cap.min(MAX_VERTICES);
    let bytes = strip_line(line).as_bytes();
    let err = |offset: usize, reason: &str| GraphError::Parse {
        offset,
        reason: reason.to_string(),
    };
    let mut at = 0;
    let n = parse_size(bytes, &mut at, cap)?;
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() != at + nbytes {
        return Err(err(
            bytes.len().min(at + nbytes),
            &format!(
                "expected {} adjacency bytes for n={}, found {}",
                nbytes,
                n,
                bytes.len() - at
            ),
        ));
    }
    let mut g = Graph::empty(n)?;
    let mut bit = 0usize;
    for (k, &byte) in bytes[at..].iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(err(at + k, "adjacency byte out of printable range"));
        }
        let group = byte - 63;
        for i in 0..6 {
            let value = group >> (5 - i) & 1 == 1;
            if bit < nbits {
                if value {
                    let (u, v) = triangle_coords(bit);
                    g.add_edge(u, v)?;
                }
            } else if value {
                return Err(err(at + k, "nonzero padding bits"));
            }
            bit += 1;
        }
    }
    Ok(g)
}

// bit index -> (u, v) with u < v, column-major upper triangle:
// (0,1), (0,2), (1,2), (0,3), ...
fn triangle_coords(bit: usize) -> (usize, usize) {
    let mut v = 1usize;
    let mut base = 0usize;
    while base + v <= bit {
        base += v;
        v += 1;
    }
    (bit - base, v)
}

/// Canonical graph6 line for a graph (short size form for `n ≤ 62`).
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut bytes: Vec<u8> = Vec::new();
    if n <= 62 {
        bytes.push(n as u8 + 63);
    } else {
        bytes.push(126);
        bytes.push(((n >> 12) & 63) as u8 + 63);
        bytes.push(((n >> 6) & 63) as u8 + 63);
        bytes.push((n & 63) as u8 + 63);
    }
    let mut group: u8 = 0;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            group = group << 1 | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                bytes.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push((group << (6 - filled)) + 63);
    }
    String::from_utf8(bytes).expect("graph6 bytes are printable ASCII")
}

/// Parses one sparse6 line (leading `:`). Sparse6 is accepted on input only.
pub fn parse_sparse6_with_cap(line: &str, cap: usize) -> Result<Graph, GraphError> {
    let cap = cap.min(MAX_VERTICES);
    let bytes = strip_line(line).as_bytes();
    let err = |offset: usize, reason: &str| GraphError::Parse {
        offset,
        reason: reason.to_string(),
    };
    if bytes.first() != Some(&b':') {
        return Err(err(0, "sparse6 line must start with ':'"));
    }
    let mut at = 1;
    let n = parse_size(bytes, &mut at, cap)?;
    let mut g = Graph::empty(n)?;
    if n <= 1 {
        return Ok(g);
    }
    let k = usize::BITS as usize - (n - 1).leading_zeros() as usize;
    let k = k.max(1);
    // flatten remaining bytes into a bit stream
    let mut bits: Vec<bool> = Vec::with_capacity((bytes.len() - at) * 6);
    for (i, &byte) in bytes[at..].iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(err(at + i, "sparse6 byte out of printable range"));
        }
        let group = byte - 63;
        for j in 0..6 {
            bits.push(group >> (5 - j) & 1 == 1);
        }
    }
    let mut v: usize = 0;
    let mut pos = 0;
    while pos + 1 + k <= bits.len() {
        let b = bits[pos];
        let mut x = 0usize;
        for i in 0..k {
            x = x << 1 | bits[pos + 1 + i] as usize;
        }
        pos += 1 + k;
        if b {
            v += 1;
        }
        if v >= n || x >= n {
            break;
        }
        if x > v {
            v = x;
        } else if x != v {
            g.add_edge(x, v)?;
        }
        // x == v would be a loop; sparse6 from simple graphs never emits one
    }
    Ok(g)
}

/// Dispatches on the sparse6 `:` prefix; strips `>>graph6<<` / `>>sparse6<<`
/// headers.
pub fn parse_any_with_cap(line: &str, cap: usize) -> Result<Graph, GraphError> {
    let stripped = strip_line(line);
    if stripped.starts_with(':') {
        parse_sparse6_with_cap(stripped, cap)
    } else {
        parse_graph6_with_cap(stripped, cap)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn k5_graph6_roundtrip() {
        let g = parse_graph6("D~{").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edge_count(), 10);
        assert!(g.same_adjacency(&k(5)));
        assert_eq!(write_graph6(&g), "D~{");
    }

    #[test]
    fn single_vertex() {
        let g = parse_graph6("@").unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(write_graph6(&g), "@");
    }

    #[test]
    fn long_size_header_roundtrip() {
        let g = circulant(70, &[1]).unwrap();
        let s = write_graph6(&g);
        assert!(s.starts_with('~'));
        let back = parse_graph6_with_cap(&s, MAX_VERTICES).unwrap();
        assert!(back.same_adjacency(&g));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(matches!(
            parse_graph6("D~"),
            Err(GraphError::Parse { .. })
        ));
        assert!(matches!(
            parse_graph6("D~{{"),
            Err(GraphError::Parse { .. })
        ));
        // n = 70 over the default cap of 64
        let big = write_graph6(&circulant(70, &[1]).unwrap());
        assert!(matches!(
            parse_graph6(&big),
            Err(GraphError::TooManyVertices { .. })
        ));
    }

    #[test]
    fn nonzero_padding_is_rejected() {
        // K3 is "Bw" (bits 111 + 000 padding); force a padding bit on
        assert!(parse_graph6("Bw").is_ok());
        assert!(matches!(
            parse_graph6("Bx"),
            Err(GraphError::Parse { .. })
        ));
    }

    #[test]
    fn sparse6_documented_example() {
        // 7 vertices, edges 0-1, 0-2, 1-2, 5-6
        let g = parse_sparse6_with_cap(":Fa@x^", 64).unwrap();
        assert_eq!(g.n(), 7);
        let mut edges = g.edges();
        edges.sort_unstable();
        assert_eq!(edges, vec![(0, 1), (0, 2), (1, 2), (5, 6)]);
    }

    #[test]
    fn header_lines_are_stripped() {
        let g = parse_any_with_cap(">>graph6<<D~{", 64).unwrap();
        assert_eq!(g.n(), 5);
    }

    #[test]
    fn complement_examples() {
        assert!(complement(&k(5)).same_adjacency(&Graph::empty(5).unwrap()));
        let g = circulant(7, &[1, 2]).unwrap();
        assert!(complement(&complement(&g)).same_adjacency(&g));
        // Petersen's complement is the Johnson graph J(5,2)
        let petersen = kneser(5, 2).unwrap();
        let j52 = johnson(5, 2).unwrap();
        assert!(complement(&petersen).same_adjacency(&j52));
    }

    #[test]
    fn line_graph_examples() {
        let triangle = k(3);
        let lg = line_graph(&triangle).unwrap();
        assert!(lg.same_adjacency(&k(3)));

        let petersen = kneser(5, 2).unwrap();
        let lp = line_graph(&petersen).unwrap();
        assert_eq!(lp.n(), 15);
        assert!(lp.is_regular_of_degree(4));

        // J(6,2) is the line graph of K6
        let j62 = johnson(6, 2).unwrap();
        assert!(line_graph(&k(6)).unwrap().same_adjacency(&j62));

        assert!(matches!(
            line_graph(&Graph::empty(3).unwrap()),
            Err(GraphError::Edgeless)
        ));
    }

    #[test]
    fn line_graph_degrees() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (1, 3)]).unwrap();
        let lg = line_graph(&g).unwrap();
        assert_eq!(lg.n(), g.edge_count());
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            assert_eq!(lg.degree(i), g.degree(u) + g.degree(v) - 2);
        }
    }

    #[test]
    fn johnson_kneser_examples() {
        let petersen = kneser(5, 2).unwrap();
        assert_eq!(petersen.n(), 10);
        assert!(petersen.is_regular_of_degree(3));

        let j72 = johnson(7, 2).unwrap();
        assert_eq!(j72.n(), 21);
        assert!(j72.is_regular_of_degree(10));

        assert!(kneser(5, 0).is_err());
        assert!(johnson(20, 10).is_err()); // 184756 vertices over cap
    }

    #[test]
    fn circulant_examples() {
        let c5 = circulant(5, &[1]).unwrap();
        assert!(c5.is_regular_of_degree(2));
        assert!(circulant(4, &[1, 2]).unwrap().same_adjacency(&k(4)));
        let g = circulant(10, &[2, 5]).unwrap();
        assert_eq!(g.n(), 10);
        assert!(g.is_regular_of_degree(3));
        assert!(circulant(6, &[4]).is_err());
    }

    #[test]
    fn cayley_graph_examples() {
        let z5 = MulTable::cyclic(5);
        let c5 = cayley_graph(&z5, &[1, 4]).unwrap();
        assert!(c5.same_adjacency(&circulant(5, &[1]).unwrap()));
        // asymmetric connection set is symmetrized
        assert!(cayley_graph(&z5, &[1])
            .unwrap()
            .same_adjacency(&c5));

        let z6 = MulTable::cyclic(6);
        let g = cayley_graph(&z6, &[2, 3, 4]).unwrap();
        assert!(g.same_adjacency(&circulant(6, &[2, 3]).unwrap()));

        assert!(matches!(
            cayley_graph(&z5, &[0]),
            Err(GraphError::IdentityInConnectionSet)
        ));
        let bad = MulTable::new(vec![vec![0, 1], vec![0, 1]]);
        assert!(bad.is_err());
    }

    #[test]
    fn mul_table_validation() {
        assert!(MulTable::new(vec![
            vec![0, 1, 2],
            vec![1, 2, 0],
            vec![2, 0, 1]
        ])
        .is_ok());
        // Latin square that is not associative (order 5 loop)
        let loop5 = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(
            MulTable::new(loop5),
            Err(GraphError::NotAGroup(_))
        ));
    }

    #[test]
    fn orbital_unions_of_z4() {
        let z4 = PermGroup::new(4, vec![Perm4()]).unwrap();
        let graphs = orbital_union_graphs(&z4).unwrap();
        assert_eq!(graphs.len(), 4);
        assert!(graphs.iter().any(|g| g.edge_count() == 0));
        assert!(graphs.iter().any(|g| g.edge_count() == 6));
        for g in &graphs {
            for gen in z4.generators() {
                assert!(crate::autgrp::is_automorphism(g, gen).unwrap());
            }
        }
    }

    #[allow(non_snake_case)]
    fn Perm4() -> crate::perms::Perm {
        crate::perms::Perm::from_images(vec![1, 2, 3, 0]).unwrap()
    }
}
