//! Finite simple graphs on vertex set {1, .., d}, stable-set combinatorics,
//! and exact perfectness tests (chromatic/clique per induced subgraph, and
//! odd-hole / odd-antihole search).
//!
//! Vertices are 1-based everywhere in the public API; bitmasks use bit `v-1`
//! for vertex `v`. Everything is sized for desk scale (d ≤ ~10).

use std::collections::{BTreeSet, HashMap, HashSet};

use crate::{Error, Result};

/// Vertex counts above this make the per-induced-subgraph perfectness check
/// unreasonable; the structural (odd hole) test has no cap.
pub const PERFECT_DEFINITION_CAP: usize = 10;

/// A subset of {1, .., d} stored as a bitmask (bit v-1 ↔ vertex v).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct VertexSubset {
    bits: u64,
}

impl VertexSubset {
    pub const EMPTY: VertexSubset = VertexSubset { bits: 0 };

    pub fn from_bits(bits: u64) -> Self {
        VertexSubset { bits }
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> Self {
        let mut bits = 0u64;
        for v in vs {
            assert!(v >= 1 && v <= 64, "vertex out of range");
            bits |= 1 << (v - 1);
        }
        VertexSubset { bits }
    }

    pub fn bits(self) -> u64 {
        self.bits
    }

    pub fn contains(self, v: usize) -> bool {
        v >= 1 && v <= 64 && self.bits >> (v - 1) & 1 == 1
    }

    pub fn cardinality(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    /// Member vertices in increasing order.
    pub fn vertices(self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.cardinality());
        let mut bits = self.bits;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize + 1;
            out.push(v);
            bits &= bits - 1;
        }
        out
    }
}

/// A finite simple graph: vertex count plus a set of unordered edges
/// `{i, j}` with `1 ≤ i < j ≤ d`. Immutable after construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    d: usize,
    edges: BTreeSet<(usize, usize)>,
    adj: Vec<u64>, // adj[v-1] = neighbor mask of v
}

impl Graph {
    pub fn new<I: IntoIterator<Item = (usize, usize)>>(d: usize, edges: I) -> Result<Graph> {
        if d == 0 || d > 64 {
            return Err(Error::InvalidGraph(format!(
                "vertex count must be in 1..=64, got {d}"
            )));
        }
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidGraph(format!("loop at vertex {a}")));
            }
            if a < 1 || a > d || b < 1 || b > d {
                return Err(Error::InvalidGraph(format!(
                    "edge ({a},{b}) outside vertex range 1..={d}"
                )));
            }
            set.insert((a.min(b), a.max(b)));
        }
        let mut adj = vec![0u64; d];
        for &(a, b) in &set {
            adj[a - 1] |= 1 << (b - 1);
            adj[b - 1] |= 1 << (a - 1);
        }
        Ok(Graph { d, edges: set, adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.d
    }

    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a != b && a >= 1 && a <= self.d && b >= 1 && b <= self.d
            && self.adj[a - 1] >> (b - 1) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].count_ones() as usize
    }

    fn neighbors_mask(&self, v: usize) -> u64 {
        self.adj[v - 1]
    }

    /// Complementary graph on the same vertex set.
    pub fn complement(&self) -> Graph {
        let mut edges = BTreeSet::new();
        for a in 1..=self.d {
            for b in a + 1..=self.d {
                if !self.has_edge(a, b) {
                    edges.insert((a, b));
                }
            }
        }
        Graph::new(self.d, edges).expect("complement of a valid graph is valid")
    }

    /// Induced subgraph on `w`, relabeled 1..|w| by the order-preserving
    /// bijection.
    pub fn induced_subgraph(&self, w: VertexSubset) -> Result<Graph> {
        if w.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        let verts = w.vertices();
        if *verts.last().unwrap() > self.d {
            return Err(Error::InvalidGraph(format!(
                "subset contains vertex {} beyond {}",
                verts.last().unwrap(),
                self.d
            )));
        }
        let index: HashMap<usize, usize> = verts
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, i + 1))
            .collect();
        let mut edges = Vec::new();
        for (i, &a) in verts.iter().enumerate() {
            for &b in &verts[i + 1..] {
                if self.has_edge(a, b) {
                    edges.push((index[&a], index[&b]));
                }
            }
        }
        Graph::new(verts.len(), edges)
    }

    /// Graph on d+1 vertices with the new vertex adjacent to every old one.
    pub fn suspension(&self) -> Graph {
        let mut edges: Vec<(usize, usize)> = self.edges.iter().copied().collect();
        for v in 1..=self.d {
            edges.push((v, self.d + 1));
        }
        Graph::new(self.d + 1, edges).expect("suspension of a valid graph is valid")
    }

    fn full_mask(&self) -> u64 {
        if self.d == 64 {
            u64::MAX
        } else {
            (1u64 << self.d) - 1
        }
    }

    fn is_stable_mask(&self, mask: u64) -> bool {
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.adj[v] & rest != 0 {
                return false;
            }
        }
        true
    }

    /// All stable-set bitmasks, unordered.
    pub(crate) fn stable_set_masks(&self) -> Vec<u64> {
        // grow subsets vertex by vertex; candidates exclude neighbors
        let mut out = vec![0u64];
        let mut stack: Vec<(u64, usize)> = vec![(0, 0)];
        while let Some((mask, next)) = stack.pop() {
            for v in next..self.d {
                if self.adj[v] & mask == 0 {
                    let grown = mask | 1 << v;
                    out.push(grown);
                    stack.push((grown, v + 1));
                }
            }
        }
        out
    }

    /// Stable sets in the canonical variable ordering used by the polytope
    /// and toric constructions: decreasing cardinality, ties broken by
    /// ascending bitmask, so the empty set comes last.
    pub fn stable_sets(&self) -> Vec<VertexSubset> {
        let mut masks = self.stable_set_masks();
        masks.sort_by_key(|&m| (std::cmp::Reverse(m.count_ones()), m));
        masks.into_iter().map(VertexSubset::from_bits).collect()
    }

    /// Maximum cardinality of a stable set.
    pub fn stability_number(&self) -> usize {
        self.stable_set_masks()
            .iter()
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    /// ω(G): maximum clique size, computed as the stability number of the
    /// complement.
    pub fn clique_number(&self) -> usize {
        self.complement().stability_number()
    }

    /// χ(G): least number of stable sets covering the vertex set, by subset
    /// dynamic programming.
    pub fn chromatic_number(&self) -> usize {
        self.chromatic_table()[self.full_mask() as usize] as usize
    }

    /// chromatic numbers of all induced subgraphs: entry `mask` is χ(G[mask]).
    fn chromatic_table(&self) -> Vec<u16> {
        let stable = self.stable_set_masks();
        let full = self.full_mask();
        let mut table = vec![u16::MAX; full as usize + 1];
        table[0] = 0;
        for mask in 1..=full {
            let low = mask & mask.wrapping_neg(); // lowest set bit
            let mut best = u16::MAX;
            for &s in &stable {
                if s & low != 0 && s & mask == s {
                    let sub = table[(mask & !s) as usize];
                    if sub != u16::MAX {
                        best = best.min(sub + 1);
                    }
                }
            }
            table[mask as usize] = best;
        }
        table
    }

    /// Definition-based perfectness: χ(H) = ω(H) for every induced subgraph
    /// H (including G). Exponential; capped at [`PERFECT_DEFINITION_CAP`].
    pub fn is_perfect_definition(&self) -> Result<bool> {
        if self.d > PERFECT_DEFINITION_CAP {
            return Err(Error::Capacity(format!(
                "perfectness by definition is capped at {PERFECT_DEFINITION_CAP} vertices, got {}",
                self.d
            )));
        }
        let chromatic = self.chromatic_table();
        // clique numbers of all induced subgraphs via stable sets of the complement
        let co_stable = self.complement().stable_set_masks();
        let full = self.full_mask();
        let mut omega = vec![0u16; full as usize + 1];
        for mask in 1..=full {
            let without_low = mask & (mask - 1);
            let mut best = omega[without_low as usize];
            for &s in &co_stable {
                if s & mask == s {
                    best = best.max(s.count_ones() as u16);
                }
            }
            omega[mask as usize] = best;
        }
        Ok((1..=full).all(|m| chromatic[m as usize] == omega[m as usize]))
    }

    /// Searches for an induced odd cycle of length ≥ 5, returned as the
    /// ordered vertex list of the first hole under the canonical DFS order
    /// (start vertices ascending, neighbors ascending).
    pub fn find_odd_hole(&self) -> Option<Vec<usize>> {
        let mut path: Vec<usize> = Vec::with_capacity(self.d);
        for start in 1..=self.d {
            path.clear();
            path.push(start);
            if let Some(hole) = self.odd_hole_dfs(start, &mut path, 1 << (start - 1)) {
                return Some(hole);
            }
        }
        None
    }

    fn odd_hole_dfs(&self, start: usize, path: &mut Vec<usize>, used: u64) -> Option<Vec<usize>> {
        let last = *path.last().unwrap();
        // interior of the path: everything but the two endpoints
        let interior: u64 = if path.len() >= 2 {
            path[1..path.len() - 1]
                .iter()
                .fold(0u64, |m, &v| m | 1 << (v - 1))
        } else {
            0
        };
        let start_bit = 1u64 << (start - 1);
        for w in start + 1..=self.d {
            let wbit = 1u64 << (w - 1);
            if used & wbit != 0 || !self.has_edge(last, w) {
                continue;
            }
            let back = self.neighbors_mask(w) & interior;
            if back != 0 {
                continue; // chord into the path interior
            }
            let closes = self.neighbors_mask(w) & start_bit != 0;
            let cycle_len = path.len() + 1;
            if closes && cycle_len >= 5 && cycle_len % 2 == 1 {
                let mut hole = path.clone();
                hole.push(w);
                return Some(hole);
            }
            if !closes || path.len() == 1 {
                // extend: w must see only `last` among path vertices
                path.push(w);
                if let Some(h) = self.odd_hole_dfs(start, path, used | wbit) {
                    return Some(h);
                }
                path.pop();
            }
        }
        None
    }

    /// Odd antihole: an odd hole of the complement, returned in the
    /// complement's cycle order.
    pub fn find_odd_antihole(&self) -> Option<Vec<usize>> {
        self.complement().find_odd_hole()
    }

    /// Perfectness via the odd hole / odd antihole characterization.
    pub fn is_perfect_spgt(&self) -> bool {
        self.find_odd_hole().is_none() && self.find_odd_antihole().is_none()
    }

    // ---- builders ----------------------------------------------------

    pub fn empty(n: usize) -> Result<Graph> {
        Graph::new(n, std::iter::empty())
    }

    pub fn complete(n: usize) -> Result<Graph> {
        let mut edges = Vec::new();
        for a in 1..=n {
            for b in a + 1..=n {
                edges.push((a, b));
            }
        }
        Graph::new(n, edges)
    }

    pub fn path(n: usize) -> Result<Graph> {
        Graph::new(n, (1..n).map(|i| (i, i + 1)))
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::InvalidGraph(format!(
                "cycle needs at least 3 vertices, got {n}"
            )));
        }
        let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i, i + 1)).collect();
        edges.push((1, n));
        Graph::new(n, edges)
    }

    /// Complete multipartite graph; part `k` consists of the consecutive
    /// block of vertices following parts 1..k-1 (so (2,2,2) has parts
    /// {1,2}, {3,4}, {5,6}).
    pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
        if parts.is_empty() || parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidGraph(
                "part sizes must be positive".to_string(),
            ));
        }
        let d: usize = parts.iter().sum();
        let mut part_of = vec![0usize; d + 1];
        let mut v = 1;
        for (k, &size) in parts.iter().enumerate() {
            for _ in 0..size {
                part_of[v] = k;
                v += 1;
            }
        }
        let mut edges = Vec::new();
        for a in 1..=d {
            for b in a + 1..=d {
                if part_of[a] != part_of[b] {
                    edges.push((a, b));
                }
            }
        }
        Graph::new(d, edges)
    }

    // ---- isomorphism-class machinery (for sweeps and cross-oracles) ---

    fn pair_index(d: usize, a: usize, b: usize) -> usize {
        debug_assert!(a < b && b <= d);
        // pairs (1,2),(1,3),..,(1,d),(2,3),..
        let a0 = a - 1;
        a0 * d - a0 * (a0 + 1) / 2 + (b - a - 1)
    }

    /// Edge set as a bitmask over vertex pairs in lexicographic order.
    pub fn edge_mask(&self) -> u64 {
        let mut m = 0u64;
        for &(a, b) in &self.edges {
            m |= 1 << Self::pair_index(self.d, a, b);
        }
        m
    }

    /// Canonical edge mask: the minimum relabeled edge mask over all vertex
    /// permutations that list degrees in non-increasing order. Equal masks
    /// characterize isomorphic graphs.
    pub fn canonical_edge_mask(&self) -> u64 {
        let d = self.d;
        let mut order: Vec<usize> = (1..=d).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(self.degree(v)));
        // group positions whose degrees tie; permutations act within groups
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut i = 0;
        while i < d {
            let mut j = i + 1;
            while j < d && self.degree(order[j]) == self.degree(order[i]) {
                j += 1;
            }
            groups.push(order[i..j].to_vec());
            i = j;
        }
        let mut best = u64::MAX;
        let mut assignment = vec![0usize; d + 1]; // old vertex -> new label
        Self::enumerate_group_perms(self, &groups, 0, 1, &mut assignment, &mut best);
        best
    }

    fn enumerate_group_perms(
        g: &Graph,
        groups: &[Vec<usize>],
        gi: usize,
        next_label: usize,
        assignment: &mut Vec<usize>,
        best: &mut u64,
    ) {
        if gi == groups.len() {
            let mut mask = 0u64;
            for &(a, b) in &g.edges {
                let (x, y) = (assignment[a], assignment[b]);
                mask |= 1 << Self::pair_index(g.d, x.min(y), x.max(y));
            }
            if mask < *best {
                *best = mask;
            }
            return;
        }
        let group = &groups[gi];
        let mut perm: Vec<usize> = group.clone();
        permute_all(&mut perm, 0, &mut |p| {
            for (offset, &v) in p.iter().enumerate() {
                assignment[v] = next_label + offset;
            }
            Self::enumerate_group_perms(g, groups, gi + 1, next_label + group.len(), assignment, best);
        });
    }

    /// Builds the graph with the given edge mask (inverse of [`edge_mask`]).
    pub fn from_edge_mask(d: usize, mut mask: u64) -> Result<Graph> {
        let mut edges = Vec::new();
        while mask != 0 {
            let idx = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            // invert pair_index
            let mut a = 1;
            let mut base = 0;
            loop {
                let row = d - a;
                if idx < base + row {
                    edges.push((a, a + 1 + (idx - base)));
                    break;
                }
                base += row;
                a += 1;
            }
        }
        Graph::new(d, edges)
    }
}

fn permute_all<F: FnMut(&[usize])>(items: &mut Vec<usize>, k: usize, f: &mut F) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute_all(items, k + 1, f);
        items.swap(k, i);
    }
}

/// One representative per isomorphism class of graphs on `d` vertices,
/// generated by vertex extension with canonical-form deduplication.
/// Deterministic order (sorted by canonical edge mask within each level).
pub fn nonisomorphic_graphs(d: usize) -> Result<Vec<Graph>> {
    if d == 0 || d > 10 {
        return Err(Error::Capacity(format!(
            "isomorphism-class enumeration supported for 1..=10 vertices, got {d}"
        )));
    }
    let mut level: Vec<Graph> = vec![Graph::empty(1)?];
    for k in 1..d {
        let mut seen: HashSet<u64> = HashSet::new();
        let mut next: Vec<(u64, Graph)> = Vec::new();
        for g in &level {
            for nbrs in 0u64..(1 << k) {
                let mut edges: Vec<(usize, usize)> = g.edges.iter().copied().collect();
                let mut bits = nbrs;
                while bits != 0 {
                    let v = bits.trailing_zeros() as usize + 1;
                    bits &= bits - 1;
                    edges.push((v, k + 1));
                }
                let cand = Graph::new(k + 1, edges)?;
                let canon = cand.canonical_edge_mask();
                if seen.insert(canon) {
                    next.push((canon, Graph::from_edge_mask(k + 1, canon)?));
                }
            }
        }
        next.sort_by_key(|(canon, _)| *canon);
        level = next.into_iter().map(|(_, g)| g).collect();
    }
    Ok(level)
}

// ---- text formats ------------------------------------------------------

/// Parses the edge-list format: first line `d`, then one `i j` pair per line
/// (1-based). Blank lines and `#` comment lines are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let first = lines
        .next()
        .ok_or_else(|| Error::Parse("empty edge-list input".to_string()))?;
    let d: usize = first
        .parse()
        .map_err(|_| Error::Parse(format!("expected vertex count, got {first:?}")))?;
    let mut edges = Vec::new();
    for line in lines {
        let mut it = line.split_whitespace();
        let a: usize = it
            .next()
            .ok_or_else(|| Error::Parse(format!("bad edge line {line:?}")))?
            .parse()
            .map_err(|_| Error::Parse(format!("bad edge line {line:?}")))?;
        let b: usize = it
            .next()
            .ok_or_else(|| Error::Parse(format!("bad edge line {line:?}")))?
            .parse()
            .map_err(|_| Error::Parse(format!("bad edge line {line:?}")))?;
        if it.next().is_some() {
            return Err(Error::Parse(format!("bad edge line {line:?}")));
        }
        edges.push((a, b));
    }
    Graph::new(d, edges)
}

/// Decodes one graph6 line (standard ASCII-63 encoding, single-byte sizes).
pub fn from_graph6(line: &str) -> Result<Graph> {
    let s = line.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Parse("empty graph6 line".to_string()));
    }
    if bytes[0] == 126 {
        return Err(Error::Parse(
            "multi-byte graph6 vertex counts (n ≥ 63) are not supported".to_string(),
        ));
    }
    if bytes[0] < 63 || bytes[0] > 125 {
        return Err(Error::Parse(format!("bad graph6 size byte {}", bytes[0])));
    }
    let n = (bytes[0] - 63) as usize;
    let bit_count = n * n.saturating_sub(1) / 2;
    let needed = bit_count.div_ceil(6);
    if bytes.len() != 1 + needed {
        return Err(Error::Parse(format!(
            "graph6 line for n={n} must have {} data bytes, got {}",
            needed,
            bytes.len() - 1
        )));
    }
    let mut bits = Vec::with_capacity(needed * 6);
    for &b in &bytes[1..] {
        if !(63..=126).contains(&b) {
            return Err(Error::Parse(format!("bad graph6 data byte {b}")));
        }
        let v = b - 63;
        for k in (0..6).rev() {
            bits.push(v >> k & 1 == 1);
        }
    }
    let mut edges = Vec::new();
    let mut idx = 0;
    for j in 2..=n {
        for i in 1..j {
            if bits[idx] {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    Graph::new(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builders_basic() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.edge_count(), 5);
        assert!(c5.has_edge(1, 5) && c5.has_edge(1, 2));
        assert!(Graph::cycle(2).is_err());
        assert_eq!(Graph::empty(3).unwrap().edge_count(), 0);
        assert_eq!(
            Graph::complete_multipartite(&[2, 2, 2]).unwrap().edge_count(),
            12
        );
        assert_eq!(Graph::complete(4).unwrap().edge_count(), 6);
    }

    #[test]
    fn complement_involution_and_c5() {
        let c5 = Graph::cycle(5).unwrap();
        let co = c5.complement();
        // complement of the 5-cycle 1-2-3-4-5 is the 5-cycle 1-3-5-2-4
        assert_eq!(co.edge_count(), 5);
        assert!(co.has_edge(1, 3) && co.has_edge(3, 5) && co.has_edge(2, 5));
        assert_eq!(co.complement(), c5);
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(k3.complement(), Graph::empty(3).unwrap());
    }

    #[test]
    fn induced_subgraphs() {
        let c5 = Graph::cycle(5).unwrap();
        let p = c5
            .induced_subgraph(VertexSubset::from_vertices([1, 2, 3]))
            .unwrap();
        assert_eq!(p, Graph::path(3).unwrap());
        let full = c5
            .induced_subgraph(VertexSubset::from_vertices(1..=5))
            .unwrap();
        assert_eq!(full, c5);
        let c7 = Graph::cycle(7).unwrap();
        let e = c7
            .induced_subgraph(VertexSubset::from_vertices([1, 3, 5]))
            .unwrap();
        assert_eq!(e, Graph::empty(3).unwrap());
        assert!(c5.induced_subgraph(VertexSubset::EMPTY).is_err());
    }

    #[test]
    fn suspension_shape() {
        let g = Graph::empty(2).unwrap();
        let hat = g.suspension();
        assert_eq!(hat, Graph::new(3, [(1, 3), (2, 3)]).unwrap());
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.suspension().edge_count(), c5.edge_count() + 5);
    }

    #[test]
    fn suspension_stable_sets_relation() {
        // S(Ĝ) = S(G) ∪ {{d+1}} for a few graphs
        for g in [
            Graph::cycle(5).unwrap(),
            Graph::path(4).unwrap(),
            Graph::empty(3).unwrap(),
            Graph::complete(4).unwrap(),
        ] {
            let d = g.vertex_count();
            let mut expected: HashSet<u64> =
                g.stable_set_masks().into_iter().collect();
            expected.insert(1 << d);
            let got: HashSet<u64> = g.suspension().stable_set_masks().into_iter().collect();
            assert_eq!(got, expected);
        }
    }

    #[test]
    fn stable_sets_of_c5() {
        let c5 = Graph::cycle(5).unwrap();
        let sets = c5.stable_sets();
        assert_eq!(sets.len(), 11);
        // decreasing cardinality, empty set last
        assert_eq!(sets[0].cardinality(), 2);
        assert_eq!(sets[10], VertexSubset::EMPTY);
        // closed under subsets
        let masks: HashSet<u64> = sets.iter().map(|s| s.bits()).collect();
        for &m in &masks {
            let mut sub = m;
            loop {
                assert!(masks.contains(&sub));
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & m;
            }
        }
    }

    #[test]
    fn stable_sets_edge_cases() {
        assert_eq!(Graph::empty(4).unwrap().stable_sets().len(), 16);
        let k3 = Graph::complete(3).unwrap();
        let sets = k3.stable_sets();
        assert_eq!(sets.len(), 4);
        assert_eq!(sets[3], VertexSubset::EMPTY);
    }

    #[test]
    fn stable_set_order_path3() {
        let p3 = Graph::path(3).unwrap();
        let sets = p3.stable_sets();
        let expect: Vec<VertexSubset> = vec![
            VertexSubset::from_vertices([1, 3]),
            VertexSubset::from_vertices([1]),
            VertexSubset::from_vertices([2]),
            VertexSubset::from_vertices([3]),
            VertexSubset::EMPTY,
        ];
        assert_eq!(sets, expect);
    }

    #[test]
    fn chromatic_and_clique() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.clique_number(), 2);
        assert_eq!(c5.chromatic_number(), 3);
        assert_eq!(Graph::complete(5).unwrap().chromatic_number(), 5);
        let bip = Graph::complete_multipartite(&[2, 3]).unwrap();
        assert_eq!(bip.chromatic_number(), 2);
        assert_eq!(Graph::empty(4).unwrap().chromatic_number(), 1);
    }

    #[test]
    fn perfectness_examples() {
        assert!(!Graph::cycle(5).unwrap().is_perfect_definition().unwrap());
        assert!(Graph::path(3).unwrap().is_perfect_definition().unwrap());
        assert!(Graph::complete_multipartite(&[2, 2, 2])
            .unwrap()
            .is_perfect_definition()
            .unwrap());
        assert!(Graph::new(11, []).unwrap().is_perfect_definition().is_err());
    }

    #[test]
    fn odd_holes() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.find_odd_hole(), Some(vec![1, 2, 3, 4, 5]));
        let c7 = Graph::cycle(7).unwrap();
        assert_eq!(c7.find_odd_hole(), Some(vec![1, 2, 3, 4, 5, 6, 7]));
        assert!(Graph::cycle(6).unwrap().find_odd_hole().is_none());
        assert!(Graph::complete(5).unwrap().find_odd_hole().is_none());
        // antihole of the complement of C7 is C7 itself
        let co7 = c7.complement();
        assert_eq!(co7.find_odd_antihole(), Some(vec![1, 2, 3, 4, 5, 6, 7]));
        assert!(!co7.is_perfect_spgt());
    }

    #[test]
    fn spgt_matches_definition_small() {
        // exhaustive on all labeled graphs with up to 5 vertices
        for d in 1..=5usize {
            let pairs = d * (d - 1) / 2;
            for mask in 0u64..(1 << pairs) {
                let g = Graph::from_edge_mask(d, mask).unwrap();
                assert_eq!(
                    g.is_perfect_spgt(),
                    g.is_perfect_definition().unwrap(),
                    "disagreement on d={d} mask={mask}"
                );
            }
        }
    }

    #[test]
    fn complement_of_perfect_is_perfect() {
        for d in 1..=6usize {
            for g in nonisomorphic_graphs(d).unwrap() {
                assert_eq!(
                    g.is_perfect_definition().unwrap(),
                    g.complement().is_perfect_definition().unwrap()
                );
            }
        }
    }

    #[test]
    fn iso_class_counts() {
        let counts: Vec<usize> = (1..=7)
            .map(|d| nonisomorphic_graphs(d).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34, 156, 1044]);
    }

    #[test]
    fn edge_list_roundtrip() {
        let g = parse_edge_list("5\n1 2\n2 3\n3 4\n4 5\n1 5\n").unwrap();
        assert_eq!(g, Graph::cycle(5).unwrap());
        assert!(parse_edge_list("3\n1 4\n").is_err());
        assert!(parse_edge_list("").is_err());
        assert!(parse_edge_list("2\n1 1\n").is_err());
    }

    #[test]
    fn graph6_decode() {
        // n=5 -> 10 bits over pairs (1,2),(1,3),(2,3),(1,4),(2,4),(3,4),(1,5),(2,5),(3,5),(4,5);
        // C5 gives 1,0,1,0,0,1,1,0,0,1 -> groups 101001=41 -> 'h', 100100=36 -> 'c'
        let g = from_graph6("Dhc").unwrap();
        assert_eq!(g, Graph::cycle(5).unwrap());
        assert!(from_graph6("").is_err());
        assert!(from_graph6("~??").is_err());
    }

    #[test]
    fn graph6_header_and_k3() {
        // K3: n=3, bits (1,2),(1,3),(2,3) = 111 -> 111000b = 56 +63 = 119 'w'
        let g = from_graph6(">>graph6<<Bw").unwrap();
        assert_eq!(g, Graph::complete(3).unwrap());
    }
}
