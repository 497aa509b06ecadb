//! Subgraphs of `Kn` (`n <= 12`) as edge indicators.
//!
//! A graph is the set of its edges. Edge `(i,j)` with `i < j` occupies slot
//! `j(j-1)/2 + i` of a bit vector, an ordering that is frozen into the
//! canonical textual form used by every certificate. Under symmetric
//! difference the subgraphs of `Kn` form a vector space over `Z2`.

use crate::{Error, Result};
use std::fmt;
use std::str::FromStr;

/// Largest supported vertex count; `C(12,2) = 66` slots fit a `u128`.
pub const MAX_VERTICES: u8 = 12;

#[inline(always)]
pub const fn edge_slot(i: u8, j: u8) -> u32 {
    // caller guarantees i < j
    (j as u32 * (j as u32 - 1)) / 2 + i as u32
}

/// Number of edge slots of `Kn`.
#[inline(always)]
pub const fn slot_count(n: u8) -> u32 {
    (n as u32 * (n as u32 - 1)) / 2
}

/// A subgraph of `Kn`, stored as an indicator over the `C(n,2)` edge slots.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeSet {
    n: u8,
    bits: u128,
}

impl EdgeSet {
    pub fn empty(n: u8) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::UnsupportedVertexCount(n));
        }
        Ok(Self { n, bits: 0 })
    }

    pub fn complete(n: u8) -> Result<Self> {
        Ok(Self::empty(n)?.complement())
    }

    /// Builds from raw slot bits; bits beyond `C(n,2)` are rejected.
    pub fn from_bits(n: u8, bits: u128) -> Result<Self> {
        let empty = Self::empty(n)?;
        if bits & !full_mask(n) != 0 {
            return Err(Error::Precondition(format!(
                "bit set beyond the {} slots of K{}",
                slot_count(n),
                n
            )));
        }
        Ok(Self { bits, ..empty })
    }

    pub fn from_edges(n: u8, edges: &[(u8, u8)]) -> Result<Self> {
        let mut set = Self::empty(n)?;
        for &(i, j) in edges {
            set.insert_edge(i, j)?;
        }
        Ok(set)
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }

    pub fn edge_count(&self) -> u32 {
        self.bits.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    fn check_edge(&self, i: u8, j: u8) -> Result<(u8, u8)> {
        if i == j {
            return Err(Error::InvalidEdge(i, j));
        }
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        if b >= self.n {
            return Err(Error::VertexOutOfRange(b, self.n));
        }
        Ok((a, b))
    }

    pub fn contains_edge(&self, i: u8, j: u8) -> bool {
        match self.check_edge(i, j) {
            Ok((a, b)) => self.bits >> edge_slot(a, b) & 1 == 1,
            Err(_) => false,
        }
    }

    pub fn insert_edge(&mut self, i: u8, j: u8) -> Result<()> {
        let (a, b) = self.check_edge(i, j)?;
        self.bits |= 1u128 << edge_slot(a, b);
        Ok(())
    }

    /// Edges in slot order.
    pub fn edges(&self) -> Vec<(u8, u8)> {
        let mut out = Vec::with_capacity(self.edge_count() as usize);
        for j in 1..self.n {
            for i in 0..j {
                if self.bits >> edge_slot(i, j) & 1 == 1 {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Neighbor bitmask per vertex.
    pub fn adjacency(&self) -> [u16; MAX_VERTICES as usize] {
        let mut adj = [0u16; MAX_VERTICES as usize];
        for j in 1..self.n {
            for i in 0..j {
                if self.bits >> edge_slot(i, j) & 1 == 1 {
                    adj[i as usize] |= 1 << j;
                    adj[j as usize] |= 1 << i;
                }
            }
        }
        adj
    }

    pub fn degree(&self, v: u8) -> u32 {
        self.adjacency()[v as usize].count_ones()
    }

    /// Edge-wise complement within `Kn`; an involution.
    pub fn complement(&self) -> EdgeSet {
        EdgeSet {
            n: self.n,
            bits: self.bits ^ full_mask(self.n),
        }
    }

    /// Symmetric difference: the group law of the edge space.
    pub fn symdiff(&self, other: &EdgeSet) -> Result<EdgeSet> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(self.n, other.n));
        }
        Ok(EdgeSet {
            n: self.n,
            bits: self.bits ^ other.bits,
        })
    }

    pub fn intersect(&self, other: &EdgeSet) -> Result<EdgeSet> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(self.n, other.n));
        }
        Ok(EdgeSet {
            n: self.n,
            bits: self.bits & other.bits,
        })
    }

    pub fn union(&self, other: &EdgeSet) -> Result<EdgeSet> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(self.n, other.n));
        }
        Ok(EdgeSet {
            n: self.n,
            bits: self.bits | other.bits,
        })
    }

    /// Agreement: edges plus non-edges on which both graphs coincide, i.e.
    /// the complement of the symmetric difference.
    pub fn agree(&self, other: &EdgeSet) -> Result<EdgeSet> {
        Ok(self.symdiff(other)?.complement())
    }

    pub fn is_subset_of(&self, other: &EdgeSet) -> bool {
        self.n == other.n && self.bits & !other.bits == 0
    }

    /// True iff some three vertices are pairwise adjacent.
    pub fn has_triangle(&self) -> bool {
        let adj = self.adjacency();
        for j in 1..self.n {
            for i in 0..j {
                if self.bits >> edge_slot(i, j) & 1 == 1
                    && adj[i as usize] & adj[j as usize] != 0
                {
                    return true;
                }
            }
        }
        false
    }

    /// Two-colorability, ignoring isolated vertices.
    pub fn is_bipartite(&self) -> bool {
        let adj = self.adjacency();
        let mut color = [2u8; MAX_VERTICES as usize]; // 2 = unvisited
        let mut stack = Vec::with_capacity(self.n as usize);
        for start in 0..self.n as usize {
            if color[start] != 2 || adj[start] == 0 {
                continue;
            }
            color[start] = 0;
            stack.push(start);
            while let Some(u) = stack.pop() {
                let mut nb = adj[u];
                while nb != 0 {
                    let v = nb.trailing_zeros() as usize;
                    nb &= nb - 1;
                    if color[v] == 2 {
                        color[v] = color[u] ^ 1;
                        stack.push(v);
                    } else if color[v] == color[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Fast cube recognizer, valid on 8 vertices: a graph spanning all 8
    /// vertices is the 3-cube iff it has 12 edges, is 3-regular and is
    /// bipartite. (3-regular bipartite on 4+4 vertices forces `K4,4` minus a
    /// perfect matching, which is `Q3`.) Returns false for `n != 8`.
    pub fn is_cube(&self) -> bool {
        if self.n != 8 || self.edge_count() != 12 {
            return false;
        }
        let adj = self.adjacency();
        if adj[..8].iter().any(|m| m.count_ones() != 3) {
            return false;
        }
        self.is_bipartite()
    }

    /// Cube recognizer by explicit isomorphism search against the standard
    /// `Q3` (`i ~ j` iff `i XOR j` is a power of two). Independent of
    /// [`EdgeSet::is_cube`]; kept as its cross-check oracle.
    pub fn is_cube_isomorphic(&self) -> bool {
        if self.n != 8 || self.edge_count() != 12 {
            return false;
        }
        let adj = self.adjacency();
        // images[u] = vertex of self playing the role of Q3 vertex u
        let mut images = [u8::MAX; 8];
        let mut used = [false; 8];
        fn fits(adj: &[u16], images: &[u8; 8], u: usize, candidate: u8) -> bool {
            for prev in 0..u {
                let q3_adjacent = ((prev as u8) ^ (u as u8)).count_ones() == 1;
                let g_adjacent = adj[images[prev] as usize] >> candidate & 1 == 1;
                if q3_adjacent != g_adjacent {
                    return false;
                }
            }
            true
        }
        fn rec(adj: &[u16], images: &mut [u8; 8], used: &mut [bool; 8], u: usize) -> bool {
            if u == 8 {
                return true;
            }
            for candidate in 0..8u8 {
                if !used[candidate as usize] && fits(adj, images, u, candidate) {
                    images[u] = candidate;
                    used[candidate as usize] = true;
                    if rec(adj, images, used, u + 1) {
                        return true;
                    }
                    used[candidate as usize] = false;
                    images[u] = u8::MAX;
                }
            }
            false
        }
        rec(&adj[..8], &mut images, &mut used, 0)
    }

    /// Canonical textual form: the vertex count, a colon, then the slot bits
    /// as lowercase hex, little-endian by slot (nibble `t` covers slots
    /// `4t..4t+4`).
    pub fn canonical_text(&self) -> String {
        let nibbles = slot_count(self.n).div_ceil(4);
        let mut s = String::with_capacity(nibbles as usize + 3);
        s.push_str(&format!("{}:", self.n));
        for t in 0..nibbles {
            let nib = (self.bits >> (4 * t) & 0xf) as u32;
            s.push(char::from_digit(nib, 16).expect("nibble in range"));
        }
        s
    }
}

fn full_mask(n: u8) -> u128 {
    let slots = slot_count(n);
    if slots == 0 {
        0
    } else {
        (!0u128) >> (128 - slots)
    }
}

impl fmt::Display for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_text())
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EdgeSet({})", self.canonical_text())
    }
}

impl FromStr for EdgeSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadEdgeSetText(s.to_string());
        let (n_part, hex_part) = s.split_once(':').ok_or_else(bad)?;
        let n: u8 = n_part.parse().map_err(|_| bad())?;
        if n == 0 || n > MAX_VERTICES {
            return Err(bad());
        }
        if hex_part.len() as u32 != slot_count(n).div_ceil(4) {
            return Err(bad());
        }
        let mut bits = 0u128;
        for (t, c) in hex_part.chars().enumerate() {
            let nib = c.to_digit(16).ok_or_else(bad)? as u128;
            if c.is_uppercase() {
                return Err(bad());
            }
            bits |= nib << (4 * t);
        }
        EdgeSet::from_bits(n, bits).map_err(|_| bad())
    }
}

/// Three vertices `a < b < c` of `Kn`; as an edge set it has exactly the
/// three edges between them.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Triangle {
    a: u8,
    b: u8,
    c: u8,
}

impl Triangle {
    pub fn new(a: u8, b: u8, c: u8) -> Result<Self> {
        let mut v = [a, b, c];
        v.sort_unstable();
        if v[0] == v[1] || v[1] == v[2] {
            return Err(Error::Precondition(format!(
                "triangle vertices must be distinct, got {a},{b},{c}"
            )));
        }
        Ok(Self {
            a: v[0],
            b: v[1],
            c: v[2],
        })
    }

    pub fn vertices(&self) -> (u8, u8, u8) {
        (self.a, self.b, self.c)
    }

    pub fn edge_set(&self, n: u8) -> Result<EdgeSet> {
        EdgeSet::from_edges(n, &[(self.a, self.b), (self.a, self.c), (self.b, self.c)])
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}-{}", self.a, self.b, self.c)
    }
}

/// All `C(n,3)` triangles of `Kn` in lexicographic order.
pub fn triangles_of(n: u8) -> Result<Vec<Triangle>> {
    if n > MAX_VERTICES {
        return Err(Error::UnsupportedVertexCount(n));
    }
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                out.push(Triangle { a, b, c });
            }
        }
    }
    Ok(out)
}

/// The standard 3-cube on vertex set `Z2^3`: `i ~ j` iff `i XOR j` is a
/// power of two.
pub fn standard_cube() -> EdgeSet {
    let mut set = EdgeSet::empty(8).expect("8 <= MAX_VERTICES");
    for i in 0..8u8 {
        for b in [1u8, 2, 4] {
            let j = i ^ b;
            if i < j {
                set.insert_edge(i, j).expect("valid edge");
            }
        }
    }
    set
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: u8, len: u8) -> EdgeSet {
        let mut edges = Vec::new();
        for v in 0..len {
            edges.push((v, (v + 1) % len));
        }
        EdgeSet::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn complement_examples() {
        let empty = EdgeSet::empty(8).unwrap();
        assert_eq!(empty.complement().edge_count(), 28);
        let sixteen = EdgeSet::from_bits(8, (1u128 << 16) - 1).unwrap();
        assert_eq!(sixteen.complement().edge_count(), 12);
        assert_eq!(sixteen.complement().complement(), sixteen);
    }

    #[test]
    fn symdiff_examples() {
        let t = Triangle::new(0, 1, 2).unwrap().edge_set(8).unwrap();
        let empty = EdgeSet::empty(8).unwrap();
        assert_eq!(t.symdiff(&t).unwrap(), empty);
        assert_eq!(t.symdiff(&empty).unwrap(), t);
        // disjoint 16-edge graph: all edges not touching vertices 0,1,2 plus
        // some others — build one explicitly disjoint from t
        let mut v = EdgeSet::empty(8).unwrap();
        let mut added = 0;
        'outer: for j in 1..8u8 {
            for i in 0..j {
                if !t.contains_edge(i, j) {
                    v.insert_edge(i, j).unwrap();
                    added += 1;
                    if added == 16 {
                        break 'outer;
                    }
                }
            }
        }
        assert_eq!(v.edge_count(), 16);
        assert_eq!(t.intersect(&v).unwrap().edge_count(), 0);
        assert_eq!(t.symdiff(&v).unwrap().edge_count(), 19);
    }

    #[test]
    fn agree_examples() {
        let g = cycle(8, 5);
        assert_eq!(g.agree(&g).unwrap(), EdgeSet::complete(8).unwrap());
        assert_eq!(
            g.agree(&g.complement()).unwrap(),
            EdgeSet::empty(8).unwrap()
        );
    }

    #[test]
    fn intersection_subset_of_agreement() {
        // intersect ⊆ agree on a deterministic sample
        let mut bits = 0x123456u128;
        for _ in 0..50 {
            bits = bits.wrapping_mul(6364136223846793005).wrapping_add(1);
            let g1 = EdgeSet::from_bits(8, bits & ((1 << 28) - 1)).unwrap();
            let g2 = EdgeSet::from_bits(8, (bits >> 40) & ((1 << 28) - 1)).unwrap();
            let inter = g1.intersect(&g2).unwrap();
            let agr = g1.agree(&g2).unwrap();
            assert!(inter.is_subset_of(&agr));
        }
    }

    #[test]
    fn triangle_detection() {
        let t = Triangle::new(0, 1, 2).unwrap().edge_set(8).unwrap();
        assert!(t.has_triangle());
        assert!(!cycle(8, 5).has_triangle());
        assert!(!standard_cube().has_triangle());
        assert!(!cycle(8, 4).has_triangle());
    }

    #[test]
    fn bipartite_examples() {
        assert!(!cycle(8, 5).is_bipartite());
        assert!(standard_cube().is_bipartite());
        assert!(EdgeSet::empty(8).unwrap().is_bipartite());
        assert!(cycle(8, 6).is_bipartite());
    }

    #[test]
    fn triangle_implies_not_bipartite_small_n_exhaustive() {
        for n in [3u8, 4, 5] {
            for bits in 0..1u128 << slot_count(n) {
                let g = EdgeSet::from_bits(n, bits).unwrap();
                if g.has_triangle() {
                    assert!(!g.is_bipartite(), "n={n} bits={bits:#x}");
                }
            }
        }
    }

    #[test]
    fn cube_recognizers() {
        let q3 = standard_cube();
        assert!(q3.is_cube());
        assert!(q3.is_cube_isomorphic());
        assert_eq!(q3.edge_count(), 12);

        // K4 plus isolated vertices: 6 edges, not 3-regular on 8 vertices
        let k4 = EdgeSet::from_edges(
            8,
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
        )
        .unwrap();
        assert!(!k4.is_cube());
        assert!(!k4.is_cube_isomorphic());

        // a relabeled cube is still recognized by both paths
        let relabel = [3u8, 7, 1, 5, 0, 2, 6, 4];
        let mut g = EdgeSet::empty(8).unwrap();
        for (i, j) in q3.edges() {
            g.insert_edge(relabel[i as usize], relabel[j as usize]).unwrap();
        }
        assert!(g.is_cube());
        assert!(g.is_cube_isomorphic());

        // 12 edges, 3-regular, but contains a triangle: two disjoint K4s
        let k4k4 = EdgeSet::from_edges(
            8,
            &[
                (0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3),
                (4, 5), (4, 6), (4, 7), (5, 6), (5, 7), (6, 7),
            ],
        )
        .unwrap();
        assert_eq!(k4k4.edge_count(), 12);
        assert!(!k4k4.is_cube());
        assert!(!k4k4.is_cube_isomorphic());
    }

    #[test]
    fn cube_fast_path_agrees_with_isomorphism_oracle() {
        // deterministic sample of 12-edge graphs on 8 vertices
        let mut state = 0x9e3779b97f4a7c15u128;
        let mut checked = 0u32;
        let mut next = || {
            state = state.wrapping_mul(0x2545f4914f6cdd1d).wrapping_add(0x123456789);
            state
        };
        while checked < 100_000 {
            // choose 12 distinct slots
            let mut bits = 0u128;
            while bits.count_ones() < 12 {
                bits |= 1u128 << (next() % 28) as u32;
            }
            let g = EdgeSet::from_bits(8, bits).unwrap();
            assert_eq!(g.is_cube(), g.is_cube_isomorphic(), "{g}");
            checked += 1;
        }
    }

    #[test]
    fn cube_implies_invariants() {
        let q3 = standard_cube();
        assert!(q3.is_cube());
        assert_eq!(q3.edge_count(), 12);
        assert!(!q3.has_triangle());
        assert!(q3.is_bipartite());
    }

    #[test]
    fn triangles_of_counts() {
        assert_eq!(triangles_of(8).unwrap().len(), 56);
        assert_eq!(triangles_of(3).unwrap().len(), 1);
        assert_eq!(triangles_of(9).unwrap().len(), 84);
        // lexicographic order
        let ts = triangles_of(4).unwrap();
        let listed: Vec<(u8, u8, u8)> = ts.iter().map(Triangle::vertices).collect();
        assert_eq!(
            listed,
            vec![(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
        );
    }

    #[test]
    fn canonical_text_round_trip() {
        let q3 = standard_cube();
        let text = q3.canonical_text();
        assert_eq!(text.parse::<EdgeSet>().unwrap(), q3);
        assert_eq!(EdgeSet::complete(8).unwrap().canonical_text(), "8:fffffff");
        assert_eq!(EdgeSet::empty(8).unwrap().canonical_text(), "8:0000000");
        assert!("8:fffffff0".parse::<EdgeSet>().is_err());
        assert!("13:0".parse::<EdgeSet>().is_err());
        assert!("8:ffFffff".parse::<EdgeSet>().is_err());
    }

    #[test]
    fn slot_order_is_frozen() {
        // slot index j(j-1)/2 + i: edge (0,1) is slot 0, (0,2) slot 1, (1,2)
        // slot 2, (0,3) slot 3, ...
        assert_eq!(edge_slot(0, 1), 0);
        assert_eq!(edge_slot(0, 2), 1);
        assert_eq!(edge_slot(1, 2), 2);
        assert_eq!(edge_slot(0, 3), 3);
        let e = EdgeSet::from_edges(8, &[(0, 1)]).unwrap();
        assert_eq!(e.canonical_text(), "8:1000000");
        let e2 = EdgeSet::from_edges(8, &[(1, 2)]).unwrap();
        assert_eq!(e2.canonical_text(), "8:4000000");
    }
}
