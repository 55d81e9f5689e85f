//! Simple undirected graphs on labeled vertices `0..n` with bitset adjacency.

pub(crate) mod bitset;
mod families;
mod io;

pub use bitset::Ones;
pub use families::{
    complete, complete_multipartite, cycle, disjoint_cliques, empty, path, star, t_star,
    turan_class_sizes, turan_complement, turan_graph,
};
pub use io::{decode_edge_list, decode_graph6, encode_edge_list, encode_graph6, parse_graph, Format};

use std::fmt;

use crate::error::{Error, Result};

/// Largest graph order accepted by constructors and decoders.
pub const MAX_VERTICES: usize = 4096;

/// A set of vertices of a host graph, stored as a bitset over `0..universe`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        VertexSet {
            universe,
            words: vec![0; bitset::words_for(universe)],
        }
    }

    pub fn full(universe: usize) -> Self {
        VertexSet {
            universe,
            words: bitset::full(universe),
        }
    }

    /// Builds a set from vertex indices; rejects indices outside the universe.
    pub fn from_vertices<I>(universe: usize, vertices: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut s = VertexSet::empty(universe);
        for v in vertices {
            if v >= universe {
                return Err(Error::VertexOutOfRange { vertex: v, n: universe });
            }
            s.insert(v);
        }
        Ok(s)
    }

    pub(crate) fn from_words(universe: usize, words: Vec<u64>) -> Self {
        debug_assert_eq!(words.len(), bitset::words_for(universe));
        VertexSet { universe, words }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn len(&self) -> usize {
        bitset::count(&self.words)
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|w| *w == 0)
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && bitset::test(&self.words, v)
    }

    /// Panics if `v` is outside the universe.
    pub fn insert(&mut self, v: usize) {
        assert!(v < self.universe, "vertex {v} outside universe {}", self.universe);
        bitset::set(&mut self.words, v);
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.universe {
            bitset::clear(&mut self.words, v);
        }
    }

    pub fn iter(&self) -> Ones<'_> {
        Ones::new(&self.words)
    }

    pub fn first(&self) -> Option<usize> {
        bitset::first(&self.words)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Undirected simple graph with rows of adjacency bits.
///
/// Rows are stored contiguously, `stride` words per vertex. The adjacency is
/// kept symmetric and irreflexive by every mutator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    stride: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices. Panics above [`MAX_VERTICES`].
    pub fn new(n: usize) -> Self {
        Graph::try_new(n).expect("graph order within cap")
    }

    pub fn try_new(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, cap: MAX_VERTICES });
        }
        let stride = bitset::words_for(n);
        Ok(Graph {
            n,
            stride,
            adj: vec![0; n * stride],
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::try_new(n)?;
        for (u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Graph on `n <= 11` vertices whose edges are the set bits of `mask`,
    /// using [`edge_slots`] ordering.
    pub fn from_edge_mask(n: usize, mask: u64) -> Self {
        let mut g = Graph::new(n);
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if mask >> k & 1 == 1 {
                    g.add_edge(i, j);
                }
                k += 1;
            }
        }
        g
    }

    /// Inverse of [`Graph::from_edge_mask`].
    pub fn edge_mask(&self) -> u64 {
        assert!(self.n <= 11, "edge mask needs C(n,2) <= 64");
        let mut mask = 0u64;
        let mut k = 0;
        for j in 1..self.n {
            for i in 0..j {
                if self.has_edge(i, j) {
                    mask |= 1 << k;
                }
                k += 1;
            }
        }
        mask
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.stride..(v + 1) * self.stride]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && bitset::test(self.row(u), v)
    }

    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.add_edge(u, v);
        Ok(())
    }

    /// Panics on out-of-range vertices or a loop.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n && u != v, "bad edge {u}-{v} for n={}", self.n);
        let s = self.stride;
        bitset::set(&mut self.adj[u * s..(u + 1) * s], v);
        bitset::set(&mut self.adj[v * s..(v + 1) * s], u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if u >= self.n || v >= self.n {
            return;
        }
        let s = self.stride;
        bitset::clear(&mut self.adj[u * s..(u + 1) * s], v);
        bitset::clear(&mut self.adj[v * s..(v + 1) * s], u);
    }

    pub fn neighbors(&self, v: usize) -> Ones<'_> {
        Ones::new(self.row(v))
    }

    pub fn neighbor_set(&self, v: usize) -> VertexSet {
        VertexSet::from_words(self.n, self.row(v).to_vec())
    }

    pub fn degree(&self, v: usize) -> usize {
        bitset::count(self.row(v))
    }

    /// Number of neighbours of `v` inside `set`.
    pub fn degree_into(&self, v: usize, set: &VertexSet) -> usize {
        bitset::count_and(self.row(v), set.words())
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Degrees sorted ascending, `d_1 <= ... <= d_n`.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable();
        d
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        bitset::count(&self.adj) / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.n);
        let full = bitset::full(self.n);
        let s = self.stride;
        for v in 0..self.n {
            let row = &mut g.adj[v * s..(v + 1) * s];
            for (w, (a, f)) in row.iter_mut().zip(self.row(v).iter().zip(&full)) {
                *w = !a & f;
            }
            bitset::clear(row, v);
        }
        g
    }

    /// True iff every pair of distinct vertices of `set` is adjacent.
    pub fn is_clique(&self, set: &VertexSet) -> bool {
        let k = set.len();
        set.iter().all(|v| self.degree_into(v, set) == k - 1)
    }

    /// True iff no two vertices of `set` are adjacent.
    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| self.degree_into(v, set) == 0)
    }

    pub fn induced(&self, set: &VertexSet) -> (Graph, Vec<usize>) {
        let labels = set.to_vec();
        let mut g = Graph::new(labels.len());
        for (i, &u) in labels.iter().enumerate() {
            for (j, &v) in labels.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        (g, labels)
    }

    /// Vertices of `other` are relabeled to follow those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::new(self.n + other.n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(self.n + u, self.n + v);
        }
        g
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=", self.n)?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

/// Edge slots `(i, j)`, `i < j`, in the column-major order used by graph6
/// and by [`Graph::from_edge_mask`].
pub fn edge_slots(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j)))
}

pub fn binom2(m: usize) -> usize {
    m * m.saturating_sub(1) / 2
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied()).unwrap()
    }

    #[test]
    fn complement_of_complete_is_empty() {
        for n in 0..9 {
            let c = complete(n).complement();
            assert_eq!(c.edge_count(), 0);
            assert_eq!(c.n(), n);
        }
        assert_eq!(empty(3).complement(), complete(3));
    }

    #[test]
    fn complement_of_c5_is_two_regular() {
        let c = cycle(5).complement();
        assert_eq!(c.edge_count(), 5);
        assert!((0..5).all(|v| c.degree(v) == 2));
        // pentagon -> pentagram: i ~ i+2
        assert!((0..5).all(|v| c.has_edge(v, (v + 2) % 5)));
    }

    #[test]
    fn degree_sequences() {
        assert_eq!(complete(4).degree_sequence(), vec![3, 3, 3, 3]);
        assert_eq!(star(3).degree_sequence(), vec![1, 1, 1, 3]);
    }

    #[test]
    fn clique_and_independence_predicates() {
        let k5 = complete(5);
        assert!(k5.is_clique(&set(5, &[0, 2, 4])));
        assert!(!k5.is_independent(&set(5, &[1, 3])));
        assert!(k5.is_clique(&set(5, &[])));
        assert!(k5.is_independent(&set(5, &[3])));

        let p = path(4);
        assert!(p.is_independent(&set(4, &[0, 2])));
        assert!(!p.is_clique(&set(4, &[0, 1, 2])));
    }

    #[test]
    fn rows_spanning_several_words() {
        let mut g = Graph::new(130);
        g.add_edge(0, 129);
        g.add_edge(64, 65);
        g.add_edge(63, 64);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.neighbors(64).collect::<Vec<_>>(), vec![63, 65]);
        let c = g.complement();
        assert_eq!(c.edge_count(), binom2(130) - 3);
        assert!(!c.has_edge(129, 0));
        assert!(!c.has_edge(5, 5));
        assert_eq!(c.complement(), g);
    }

    #[test]
    fn edge_mask_round_trip() {
        for mask in 0..(1u64 << 10) {
            assert_eq!(Graph::from_edge_mask(5, mask).edge_mask(), mask);
        }
    }

    #[test]
    fn edge_insertion_errors() {
        let mut g = Graph::new(3);
        assert_eq!(g.try_add_edge(1, 1), Err(Error::SelfLoop(1)));
        assert!(matches!(g.try_add_edge(0, 3), Err(Error::VertexOutOfRange { vertex: 3, .. })));
        assert!(Graph::try_new(MAX_VERTICES + 1).is_err());
        assert!(VertexSet::from_vertices(3, [4]).is_err());
    }

    #[test]
    fn vertex_set_ops() {
        let mut a = set(70, &[1, 5, 66]);
        let b = set(70, &[5, 69]);
        assert!(!a.is_disjoint(&b));
        a.difference_with(&b);
        assert_eq!(a.to_vec(), vec![1, 66]);
        a.union_with(&b);
        assert_eq!(a.len(), 4);
        a.intersect_with(&b);
        assert_eq!(a.to_vec(), vec![5, 69]);
        assert_eq!(VertexSet::full(70).len(), 70);
        assert_eq!(a.first(), Some(5));
    }
}
