//! Simple graphs on at most 64 labelled vertices, stored as bitset rows.
//!
//! Every search here is exact: cliques and cocliques by branch and bound,
//! colourability by backtracking. Vertex labels are positive integers kept in
//! ascending order, so every output that lists vertices is canonical.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("duplicate vertex label {0}")]
    DuplicateLabel(u64),
    #[error("vertex labels must be positive")]
    ZeroLabel,
    #[error("edge endpoint {0} is not a vertex")]
    MissingEndpoint(u64),
    #[error("loop at vertex {0}")]
    Loop(u64),
    #[error("{0} vertices exceeds the limit of 64")]
    TooManyVertices(usize),
    #[error("label {0} is not a vertex of the graph")]
    LabelNotFound(u64),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SrgError {
    #[error("({v}, {k}, {lambda}, {mu}) are not strongly regular parameters")]
    Invalid { v: i64, k: i64, lambda: i64, mu: i64 },
    #[error("complement of an SRG{0} is a union of cliques")]
    DegenerateComplement(SrgParameters),
}

type Mask = u64;

#[inline]
fn bit(i: usize) -> Mask {
    1u64 << i
}

#[inline]
fn low_mask(n: usize) -> Mask {
    if n == 64 {
        !0
    } else {
        bit(n) - 1
    }
}

fn bits(mut m: Mask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

/// Undirected simple graph with positive integer vertex labels.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "GraphFile", into = "GraphFile")]
pub struct GkGraph {
    labels: Vec<u64>,
    adj: Vec<Mask>,
}

/// On-disk JSON shape of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub vertices: Vec<u64>,
    pub edges: Vec<[u64; 2]>,
}

impl TryFrom<GraphFile> for GkGraph {
    type Error = GraphError;

    fn try_from(f: GraphFile) -> Result<Self, Self::Error> {
        GkGraph::build(&f.vertices, f.edges.iter().map(|&[a, b]| (a, b)))
    }
}

impl From<GkGraph> for GraphFile {
    fn from(g: GkGraph) -> Self {
        GraphFile {
            vertices: g.labels.clone(),
            edges: g.edges().map(|(a, b)| [a, b]).collect(),
        }
    }
}

impl fmt::Debug for GkGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GkGraph")
            .field("vertices", &self.labels)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl GkGraph {
    /// Builds a graph from labels and label pairs. Duplicate edges collapse.
    pub fn build<I>(labels: &[u64], edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (u64, u64)>,
    {
        if labels.len() > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(labels.len()));
        }
        let mut sorted = labels.to_vec();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateLabel(w[0]));
        }
        if sorted.first() == Some(&0) {
            return Err(GraphError::ZeroLabel);
        }
        let mut g = GkGraph {
            adj: vec![0; sorted.len()],
            labels: sorted,
        };
        for (a, b) in edges {
            if a == b {
                return Err(GraphError::Loop(a));
            }
            let i = g.index(a).ok_or(GraphError::MissingEndpoint(a))?;
            let j = g.index(b).ok_or(GraphError::MissingEndpoint(b))?;
            g.adj[i] |= bit(j);
            g.adj[j] |= bit(i);
        }
        Ok(g)
    }

    pub fn empty(labels: &[u64]) -> Result<Self, GraphError> {
        Self::build(labels, [])
    }

    pub fn complete(labels: &[u64]) -> Result<Self, GraphError> {
        Ok(Self::empty(labels)?.complement())
    }

    /// Cycle on labels `1..=n` in label order.
    pub fn cycle(n: u64) -> Self {
        let labels: Vec<u64> = (1..=n).collect();
        Self::build(&labels, (1..=n).map(|i| (i, i % n + 1))).expect("cycle on 3..=64 vertices")
    }

    /// Complete multipartite graph on labels `1..`, parts taken in order.
    pub fn complete_multipartite(parts: &[usize]) -> Result<Self, GraphError> {
        let total: usize = parts.iter().sum();
        let labels: Vec<u64> = (1..=total as u64).collect();
        let mut part_of = Vec::with_capacity(total);
        for (p, &size) in parts.iter().enumerate() {
            part_of.extend(std::iter::repeat(p).take(size));
        }
        let mut edges = Vec::new();
        for i in 0..total {
            for j in i + 1..total {
                if part_of[i] != part_of[j] {
                    edges.push((i as u64 + 1, j as u64 + 1));
                }
            }
        }
        Self::build(&labels, edges)
    }

    /// Petersen graph on labels `1..=10`: outer 5-cycle, inner pentagram, spokes.
    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5u64 {
            edges.push((i + 1, (i + 1) % 5 + 1));
            edges.push((i + 6, (i + 2) % 5 + 6));
            edges.push((i + 1, i + 6));
        }
        Self::build(&(1..=10).collect::<Vec<_>>(), edges).expect("petersen")
    }

    /// Paley graph over the prime field of order `p ≡ 1 (mod 4)`, labels `1..=p`.
    pub fn paley(p: u64) -> Result<Self, GraphError> {
        let squares: BTreeSet<u64> = (1..p).map(|x| x * x % p).collect();
        let mut edges = Vec::new();
        for a in 0..p {
            for b in a + 1..p {
                if squares.contains(&(b - a)) {
                    edges.push((a + 1, b + 1));
                }
            }
        }
        Self::build(&(1..=p).collect::<Vec<_>>(), edges)
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn contains(&self, label: u64) -> bool {
        self.index(label).is_some()
    }

    fn index(&self, label: u64) -> Option<usize> {
        self.labels.binary_search(&label).ok()
    }

    fn require(&self, label: u64) -> Result<usize, GraphError> {
        self.index(label).ok_or(GraphError::LabelNotFound(label))
    }

    fn all(&self) -> Mask {
        low_mask(self.labels.len())
    }

    fn labels_of(&self, m: Mask) -> Vec<u64> {
        bits(m).map(|i| self.labels[i]).collect()
    }

    /// Edges as `(smaller, larger)` label pairs in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        (0..self.labels.len()).flat_map(move |i| {
            bits(self.adj[i] & !low_mask(i + 1)).map(move |j| (self.labels[i], self.labels[j]))
        })
    }

    pub fn has_edge(&self, a: u64, b: u64) -> bool {
        match (self.index(a), self.index(b)) {
            (Some(i), Some(j)) => self.adj[i] & bit(j) != 0,
            _ => false,
        }
    }

    pub fn neighbors(&self, v: u64) -> Result<Vec<u64>, GraphError> {
        Ok(self.labels_of(self.adj[self.require(v)?]))
    }

    pub fn degree(&self, v: u64) -> Result<usize, GraphError> {
        Ok(self.adj[self.require(v)?].count_ones() as usize)
    }

    pub fn complement(&self) -> Self {
        let all = self.all();
        GkGraph {
            labels: self.labels.clone(),
            adj: self
                .adj
                .iter()
                .enumerate()
                .map(|(i, &row)| !row & all & !bit(i))
                .collect(),
        }
    }

    pub fn induced_subgraph(&self, subset: &BTreeSet<u64>) -> Result<Self, GraphError> {
        let idx: Vec<usize> = subset.iter().map(|&l| self.require(l)).collect::<Result<_, _>>()?;
        let adj = idx
            .iter()
            .map(|&i| {
                idx.iter()
                    .enumerate()
                    .filter(|&(_, &j)| self.adj[i] & bit(j) != 0)
                    .fold(0, |m, (k, _)| m | bit(k))
            })
            .collect();
        Ok(GkGraph {
            labels: subset.iter().copied().collect(),
            adj,
        })
    }

    fn component_masks(&self) -> Vec<Mask> {
        let mut left = self.all();
        let mut out = Vec::new();
        while left != 0 {
            let mut comp = left & left.wrapping_neg();
            let mut frontier = comp;
            while frontier != 0 {
                let reach = bits(frontier).fold(0, |m, i| m | self.adj[i]);
                frontier = reach & !comp;
                comp |= reach;
            }
            left &= !comp;
            out.push(comp);
        }
        out
    }

    /// Connected components, each sorted, listed by smallest label.
    pub fn connected_components(&self) -> Vec<Vec<u64>> {
        self.component_masks().into_iter().map(|m| self.labels_of(m)).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.component_masks().len() <= 1
    }

    /// An induced path `a – b – c` (with `a`, `c` non-adjacent), if any.
    pub fn induced_path3(&self) -> Option<(u64, u64, u64)> {
        for b in 0..self.labels.len() {
            let nb = self.adj[b];
            for a in bits(nb) {
                let far = nb & !self.adj[a] & !bit(a);
                if far != 0 {
                    let c = far.trailing_zeros() as usize;
                    return Some((self.labels[a], self.labels[b], self.labels[c]));
                }
            }
        }
        None
    }

    /// Every connected component induces a complete graph.
    pub fn is_union_of_cliques(&self) -> bool {
        self.induced_path3().is_none()
    }

    pub fn triangle(&self) -> Option<(u64, u64, u64)> {
        for i in 0..self.labels.len() {
            for j in bits(self.adj[i] & !low_mask(i + 1)) {
                let common = self.adj[i] & self.adj[j] & !low_mask(j + 1);
                if common != 0 {
                    let k = common.trailing_zeros() as usize;
                    return Some((self.labels[i], self.labels[j], self.labels[k]));
                }
            }
        }
        None
    }

    pub fn is_triangle_free(&self) -> bool {
        self.triangle().is_none()
    }

    /// Part sizes, ascending, when the graph is complete multipartite.
    pub fn complete_multipartite_parts(&self) -> Option<Vec<usize>> {
        let co = self.complement();
        if !co.is_union_of_cliques() {
            return None;
        }
        let mut parts: Vec<usize> = co
            .component_masks()
            .into_iter()
            .map(|m| m.count_ones() as usize)
            .collect();
        parts.sort_unstable();
        Some(parts)
    }

    /// Largest clique inside `candidates`, as a mask.
    fn max_clique_in(&self, candidates: Mask) -> Mask {
        let mut best = 0;
        let mut current = 0;
        self.expand(candidates, &mut current, &mut best);
        best
    }

    // Branch and bound with a greedy colouring bound (Tomita-style).
    fn expand(&self, mut cand: Mask, current: &mut Mask, best: &mut Mask) {
        let (order, colours) = self.colour_sort(cand);
        for idx in (0..order.len()).rev() {
            if current.count_ones() + colours[idx] <= best.count_ones() {
                return;
            }
            let v = order[idx];
            *current |= bit(v);
            let next = cand & self.adj[v];
            if next == 0 {
                if current.count_ones() > best.count_ones() {
                    *best = *current;
                }
            } else {
                self.expand(next, current, best);
            }
            *current &= !bit(v);
            cand &= !bit(v);
        }
    }

    fn colour_sort(&self, cand: Mask) -> (Vec<usize>, Vec<u32>) {
        let mut order = Vec::with_capacity(cand.count_ones() as usize);
        let mut colours = Vec::with_capacity(order.capacity());
        let mut uncoloured = cand;
        let mut colour = 0;
        while uncoloured != 0 {
            colour += 1;
            let mut avail = uncoloured;
            while avail != 0 {
                let v = avail.trailing_zeros() as usize;
                avail &= !bit(v) & !self.adj[v];
                uncoloured &= !bit(v);
                order.push(v);
                colours.push(colour);
            }
        }
        (order, colours)
    }

    pub fn clique_number(&self) -> usize {
        self.max_clique_in(self.all()).count_ones() as usize
    }

    /// A maximum coclique, sorted.
    pub fn maximum_coclique(&self) -> Vec<u64> {
        let co = self.complement();
        self.labels_of(co.max_clique_in(co.all()))
    }

    /// `t(g)`: size of a largest coclique.
    pub fn independence_number(&self) -> usize {
        let co = self.complement();
        co.max_clique_in(co.all()).count_ones() as usize
    }

    /// `t(v, g)`: size of a largest coclique containing `v`.
    pub fn independence_number_at(&self, v: u64) -> Result<usize, GraphError> {
        let i = self.require(v)?;
        let co = self.complement();
        Ok(1 + co.max_clique_in(co.adj[i]).count_ones() as usize)
    }

    /// Largest coclique containing `v`, sorted.
    pub fn maximum_coclique_at(&self, v: u64) -> Result<Vec<u64>, GraphError> {
        let i = self.require(v)?;
        let co = self.complement();
        Ok(self.labels_of(co.max_clique_in(co.adj[i]) | bit(i)))
    }

    /// Whether a proper colouring with at most `k` colours exists.
    pub fn is_k_colorable(&self, k: usize) -> bool {
        self.k_coloring(k).is_some()
    }

    /// A proper colouring with colours `0..k`, indexed like [`Self::labels`].
    pub fn k_coloring(&self, k: usize) -> Option<Vec<usize>> {
        let n = self.labels.len();
        if n == 0 {
            return Some(Vec::new());
        }
        if k == 0 {
            return None;
        }
        let mut colour = vec![usize::MAX; n];
        let mut classes = vec![0 as Mask; k];
        if self.colour_rec(&mut colour, &mut classes, self.all(), 0) {
            Some(colour)
        } else {
            None
        }
    }

    // DSATUR-ordered backtracking; `used` bounds symmetry by only opening one
    // fresh colour per step.
    fn colour_rec(&self, colour: &mut [usize], classes: &mut [Mask], left: Mask, used: usize) -> bool {
        if left == 0 {
            return true;
        }
        let k = classes.len();
        let saturation = |v: usize| classes.iter().filter(|&&c| c & self.adj[v] != 0).count();
        let v = bits(left)
            .max_by_key(|&v| (saturation(v), (self.adj[v] & left).count_ones(), usize::MAX - v))
            .expect("non-empty");
        let limit = (used + 1).min(k);
        for c in 0..limit {
            if classes[c] & self.adj[v] != 0 {
                continue;
            }
            classes[c] |= bit(v);
            colour[v] = c;
            if self.colour_rec(colour, classes, left & !bit(v), used.max(c + 1)) {
                return true;
            }
            classes[c] &= !bit(v);
            colour[v] = usize::MAX;
        }
        false
    }

    /// SRG parameters when the graph is connected, `k`-regular with
    /// `1 ≤ k ≤ v − 2`, and pair counts are constant with `μ ≥ 1`.
    pub fn srg_parameters(&self) -> Option<SrgParameters> {
        let n = self.labels.len();
        if n < 3 || !self.is_connected() {
            return None;
        }
        let k = self.adj[0].count_ones() as usize;
        if self.adj.iter().any(|r| r.count_ones() as usize != k) || k < 1 || k + 2 > n {
            return None;
        }
        let mut lambda = None;
        let mut mu = None;
        for i in 0..n {
            for j in i + 1..n {
                let common = (self.adj[i] & self.adj[j]).count_ones() as usize;
                let slot = if self.adj[i] & bit(j) != 0 { &mut lambda } else { &mut mu };
                match *slot {
                    None => *slot = Some(common),
                    Some(c) if c != common => return None,
                    _ => {}
                }
            }
        }
        let (lambda, mu) = (lambda?, mu?);
        if mu == 0 {
            return None;
        }
        SrgParameters::new(n as i64, k as i64, lambda as i64, mu as i64).ok()
    }
}

/// Parameters `(v, k, λ, μ)` of a strongly regular graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSrgParameters")]
pub struct SrgParameters {
    v: usize,
    k: usize,
    lambda: usize,
    mu: usize,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSrgParameters {
    v: i64,
    k: i64,
    lambda: i64,
    mu: i64,
}

impl TryFrom<RawSrgParameters> for SrgParameters {
    type Error = SrgError;

    fn try_from(r: RawSrgParameters) -> Result<Self, Self::Error> {
        SrgParameters::new(r.v, r.k, r.lambda, r.mu)
    }
}

impl fmt::Display for SrgParameters {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.v, self.k, self.lambda, self.mu)
    }
}

impl SrgParameters {
    /// Validates `(v − k − 1)μ = k(k − λ − 1)`, `1 ≤ k ≤ v − 2`, `λ ≥ 0`, `μ ≥ 1`.
    pub fn new(v: i64, k: i64, lambda: i64, mu: i64) -> Result<Self, SrgError> {
        let ok = k >= 1 && k <= v - 2 && lambda >= 0 && mu >= 1 && (v - k - 1) * mu == k * (k - lambda - 1);
        if !ok {
            return Err(SrgError::Invalid { v, k, lambda, mu });
        }
        Ok(SrgParameters {
            v: v as usize,
            k: k as usize,
            lambda: lambda as usize,
            mu: mu as usize,
        })
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn lambda(&self) -> usize {
        self.lambda
    }

    pub fn mu(&self) -> usize {
        self.mu
    }

    /// `(v, v − k − 1, v − 2 − 2k + μ, v − 2k + λ)`, or an error when the
    /// complement is a disjoint union of cliques.
    pub fn complement(&self) -> Result<Self, SrgError> {
        let (v, k, l, m) = (self.v as i64, self.k as i64, self.lambda as i64, self.mu as i64);
        let mu_c = v - 2 * k + l;
        if mu_c == 0 {
            return Err(SrgError::DegenerateComplement(*self));
        }
        Self::new(v, v - k - 1, v - 2 - 2 * k + m, mu_c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn path3() -> GkGraph {
        GkGraph::build(&[1, 2, 3], [(1, 2), (2, 3)]).unwrap()
    }

    fn octahedron() -> GkGraph {
        GkGraph::complete_multipartite(&[2, 2, 2]).unwrap()
    }

    fn disjoint(parts: &[usize]) -> GkGraph {
        GkGraph::complete_multipartite(parts).unwrap().complement()
    }

    #[test]
    fn build_examples() {
        let k2 = GkGraph::build(&[2, 3], [(2, 3)]).unwrap();
        assert_eq!(k2.edges().collect::<Vec<_>>(), vec![(2, 3)]);
        let e = GkGraph::build(&[7, 2, 3], []).unwrap();
        assert_eq!(e.labels(), &[2, 3, 7]);
        assert_eq!(e.edge_count(), 0);
        assert_eq!(GkGraph::build(&[2, 3], [(2, 2)]), Err(GraphError::Loop(2)));
        assert_eq!(GkGraph::build(&[2, 2], []), Err(GraphError::DuplicateLabel(2)));
        assert_eq!(GkGraph::build(&[2, 3], [(2, 5)]), Err(GraphError::MissingEndpoint(5)));
        assert_eq!(GkGraph::build(&[0, 3], []), Err(GraphError::ZeroLabel));
        let big: Vec<u64> = (1..=65).collect();
        assert_eq!(GkGraph::empty(&big), Err(GraphError::TooManyVertices(65)));
        let full: Vec<u64> = (1..=64).collect();
        assert_eq!(GkGraph::complete(&full).unwrap().edge_count(), 64 * 63 / 2);
        let dup = GkGraph::build(&[2, 3], [(2, 3), (3, 2), (2, 3)]).unwrap();
        assert_eq!(dup, k2);
    }

    #[test]
    fn json_shape() {
        let g = GkGraph::build(&[3, 2, 7], [(7, 2)]).unwrap();
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(s, r#"{"vertices":[2,3,7],"edges":[[2,7]]}"#);
        assert_eq!(serde_json::from_str::<GkGraph>(&s).unwrap(), g);
        assert!(serde_json::from_str::<GkGraph>(r#"{"vertices":[2],"edges":[],"x":1}"#).is_err());
        assert!(serde_json::from_str::<GkGraph>(r#"{"vertices":[2,3],"edges":[[2,2]]}"#).is_err());
    }

    #[test]
    fn complement_examples() {
        let e3 = GkGraph::empty(&[1, 2, 3]).unwrap();
        assert_eq!(e3.complement(), GkGraph::complete(&[1, 2, 3]).unwrap());
        let pentagram = GkGraph::build(&[1, 2, 3, 4, 5], [(1, 3), (3, 5), (5, 2), (2, 4), (4, 1)]).unwrap();
        assert_eq!(GkGraph::cycle(5).complement(), pentagram);
    }

    #[test]
    fn induced_subgraph_examples() {
        let k3 = GkGraph::complete(&[2, 3, 5]).unwrap();
        assert_eq!(
            k3.induced_subgraph(&BTreeSet::from([2, 3])).unwrap(),
            GkGraph::complete(&[2, 3]).unwrap()
        );
        assert_eq!(k3.induced_subgraph(&BTreeSet::new()).unwrap().vertex_count(), 0);
        let c4 = GkGraph::build(&[2, 3, 5, 7], [(2, 3), (3, 5), (5, 7), (7, 2)]).unwrap();
        let opp = c4.induced_subgraph(&BTreeSet::from([2, 5])).unwrap();
        assert_eq!(opp, GkGraph::empty(&[2, 5]).unwrap());
        assert_eq!(
            k3.induced_subgraph(&BTreeSet::from([4])),
            Err(GraphError::LabelNotFound(4))
        );
    }

    #[test]
    fn component_examples() {
        let e = GkGraph::empty(&[2, 3, 7]).unwrap();
        assert_eq!(e.connected_components(), vec![vec![2], vec![3], vec![7]]);
        assert_eq!(GkGraph::complete(&[1, 2, 3, 4]).unwrap().connected_components().len(), 1);
        let g = GkGraph::build(&[1, 2, 3, 4, 5], [(1, 4), (4, 5), (1, 5), (2, 3)]).unwrap();
        assert_eq!(g.connected_components(), vec![vec![1, 4, 5], vec![2, 3]]);
        assert!(GkGraph::default().connected_components().is_empty());
    }

    #[test]
    fn union_of_cliques_examples() {
        assert!(!path3().is_union_of_cliques());
        assert_eq!(path3().induced_path3(), Some((1, 2, 3)));
        assert!(disjoint(&[3, 2, 1]).is_union_of_cliques());
        assert!(!GkGraph::cycle(4).is_union_of_cliques());
    }

    #[test]
    fn triangle_examples() {
        assert!(GkGraph::petersen().is_triangle_free());
        assert!(!GkGraph::complete(&[1, 2, 3]).unwrap().is_triangle_free());
        assert!(GkGraph::empty(&[1, 2, 3, 4]).unwrap().is_triangle_free());
    }

    #[test]
    fn multipartite_examples() {
        assert_eq!(octahedron().complete_multipartite_parts(), Some(vec![2, 2, 2]));
        assert_eq!(path3().complete_multipartite_parts(), Some(vec![1, 2]));
        assert_eq!(GkGraph::cycle(5).complete_multipartite_parts(), None);
    }

    #[test]
    fn independence_examples() {
        assert_eq!(GkGraph::cycle(5).independence_number(), 2);
        assert_eq!(GkGraph::petersen().independence_number(), 4);
        assert_eq!(GkGraph::empty(&[1, 2, 3, 4, 5, 6]).unwrap().independence_number(), 6);
        assert_eq!(GkGraph::default().independence_number(), 0);
        let k4 = GkGraph::complete(&[2, 3, 5, 7]).unwrap();
        assert_eq!(k4.independence_number_at(5), Ok(1));
        let e5 = GkGraph::empty(&[1, 2, 3, 4, 5]).unwrap();
        assert_eq!(e5.independence_number_at(3), Ok(5));
        assert_eq!(e5.independence_number_at(9), Err(GraphError::LabelNotFound(9)));
        assert_eq!(path3().maximum_coclique_at(2), Ok(vec![2]));
        assert_eq!(path3().maximum_coclique(), vec![1, 3]);
    }

    #[test]
    fn petersen_independence_by_subsets() {
        let g = GkGraph::petersen();
        let best = (0u64..1 << 10)
            .filter(|&s| bits(s).all(|i| g.adj[i] & s == 0))
            .map(|s| s.count_ones())
            .max()
            .unwrap();
        assert_eq!(best, 4);
    }

    #[test]
    fn coloring_examples() {
        assert!(GkGraph::cycle(5).is_k_colorable(3));
        assert!(!GkGraph::cycle(5).is_k_colorable(2));
        assert!(!GkGraph::complete(&[1, 2, 3, 4]).unwrap().is_k_colorable(3));
        let p = GkGraph::petersen();
        let col = p.k_coloring(3).unwrap();
        for (a, b) in p.edges() {
            assert_ne!(col[(a - 1) as usize], col[(b - 1) as usize]);
        }
        assert!(GkGraph::default().is_k_colorable(1));
        assert!(!GkGraph::empty(&[1]).unwrap().is_k_colorable(0));
    }

    #[test]
    fn srg_examples() {
        let c5 = GkGraph::cycle(5).srg_parameters().unwrap();
        assert_eq!((c5.v(), c5.k(), c5.lambda(), c5.mu()), (5, 2, 0, 1));
        let oct = octahedron().srg_parameters().unwrap();
        assert_eq!(oct, SrgParameters::new(6, 4, 2, 4).unwrap());
        assert_eq!(GkGraph::complete(&[1, 2, 3, 4]).unwrap().srg_parameters(), None);
        assert_eq!(disjoint(&[3, 3]).srg_parameters(), None);
        assert_eq!(GkGraph::cycle(6).srg_parameters(), None);
        assert_eq!(GkGraph::petersen().srg_parameters(), Some(SrgParameters::new(10, 3, 0, 1).unwrap()));
        assert_eq!(GkGraph::paley(13).unwrap().srg_parameters(), Some(SrgParameters::new(13, 6, 2, 3).unwrap()));
        assert_eq!(GkGraph::cycle(4).srg_parameters(), Some(SrgParameters::new(4, 2, 0, 2).unwrap()));
    }

    #[test]
    fn srg_complement_examples() {
        let p = SrgParameters::new(10, 3, 0, 1).unwrap();
        assert_eq!(p.complement(), SrgParameters::new(10, 6, 3, 4));
        assert_eq!(
            GkGraph::petersen().complement().srg_parameters(),
            Some(SrgParameters::new(10, 6, 3, 4).unwrap())
        );
        let paley = SrgParameters::new(13, 6, 2, 3).unwrap();
        assert_eq!(paley.complement(), Ok(paley));
        let oct = SrgParameters::new(6, 4, 2, 4).unwrap();
        assert_eq!(oct.complement(), Err(SrgError::DegenerateComplement(oct)));
        assert!(SrgParameters::new(10, 3, 1, 1).is_err());
        assert!(SrgParameters::new(4, 3, 2, 1).is_err());
    }

    fn graph_from_bits(n: usize, mask: u64) -> GkGraph {
        let labels: Vec<u64> = (1..=n as u64).collect();
        let mut edges = Vec::new();
        let mut k = 0;
        for i in 1..=n as u64 {
            for j in i + 1..=n as u64 {
                if mask >> k & 1 == 1 {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        GkGraph::build(&labels, edges).unwrap()
    }

    // Brute-force reference implementations, deliberately independent of the
    // bitset code paths.
    fn brute_components_complete(g: &GkGraph) -> bool {
        g.connected_components().iter().all(|c| {
            c.iter()
                .all(|&a| c.iter().all(|&b| a == b || g.has_edge(a, b)))
        })
    }

    fn brute_no_induced_p3(g: &GkGraph) -> bool {
        let l = g.labels();
        for &a in l {
            for &b in l {
                for &c in l {
                    if a != c && a != b && b != c && g.has_edge(a, b) && g.has_edge(b, c) && !g.has_edge(a, c) {
                        return false;
                    }
                }
            }
        }
        true
    }

    #[test]
    fn union_of_cliques_three_ways_up_to_six_vertices() {
        for n in 0..=6usize {
            let pairs = n * n.saturating_sub(1) / 2;
            for mask in 0..1u64 << pairs {
                let g = graph_from_bits(n, mask);
                let fast = g.is_union_of_cliques();
                assert_eq!(fast, brute_components_complete(&g));
                assert_eq!(fast, brute_no_induced_p3(&g));
                let parts = g.complete_multipartite_parts();
                assert_eq!(parts.is_some(), g.complement().is_union_of_cliques());
                if let Some(p) = parts {
                    assert_eq!(p.iter().sum::<usize>(), n);
                }
            }
        }
    }

    #[test]
    fn independence_equals_complement_clique_up_to_six_vertices() {
        for n in 0..=6usize {
            let pairs = n * n.saturating_sub(1) / 2;
            for mask in 0..1u64 << pairs {
                let g = graph_from_bits(n, mask);
                let co = g.complement();
                let brute_clique = (0u64..1 << n)
                    .filter(|&s| bits(s).all(|i| s & !bit(i) & !co.adj[i] == 0))
                    .map(|s| s.count_ones() as usize)
                    .max()
                    .unwrap_or(0);
                let t = g.independence_number();
                assert_eq!(t, brute_clique);
                let at: Vec<usize> = g.labels().iter().map(|&v| g.independence_number_at(v).unwrap()).collect();
                assert!(at.iter().all(|&x| x <= t));
                if n > 0 {
                    assert_eq!(at.iter().copied().max(), Some(t));
                }
            }
        }
    }

    fn arb_graph() -> impl Strategy<Value = GkGraph> {
        (0usize..=20).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |flags| {
                let mut edges = Vec::new();
                let mut k = 0;
                for i in 1..=n as u64 {
                    for j in i + 1..=n as u64 {
                        if flags[k] {
                            edges.push((i, j));
                        }
                        k += 1;
                    }
                }
                GkGraph::build(&(1..=n as u64).collect::<Vec<_>>(), edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn complement_is_an_involution(g in arb_graph()) {
            prop_assert_eq!(g.complement().complement(), g);
        }

        #[test]
        fn colorability_is_monotone(g in arb_graph()) {
            let omega = g.clique_number();
            let mut prev = false;
            for k in 1..=g.vertex_count().max(1) {
                let now = g.is_k_colorable(k);
                prop_assert!(!prev || now);
                if k < omega {
                    prop_assert!(!now);
                }
                if let Some(col) = g.k_coloring(k) {
                    for (a, b) in g.edges() {
                        let ia = g.index(a).unwrap();
                        let ib = g.index(b).unwrap();
                        prop_assert_ne!(col[ia], col[ib]);
                    }
                }
                prev = now;
            }
            prop_assert!(g.is_k_colorable(g.vertex_count().max(1)));
        }

        #[test]
        fn srg_parameters_satisfy_identity(g in arb_graph()) {
            if let Some(p) = g.srg_parameters() {
                prop_assert_eq!((p.v() - p.k() - 1) * p.mu(), p.k() * (p.k() - p.lambda() - 1));
            }
        }
    }

    #[test]
    fn complete_64_and_complement_cliques() {
        let labels: Vec<u64> = (1..=64).collect();
        let k = GkGraph::complete(&labels).unwrap();
        assert_eq!(k.clique_number(), 64);
        assert_eq!(k.independence_number(), 1);
        assert_eq!(k.complement().independence_number(), 64);
        assert!(k.is_k_colorable(64));
        assert!(!k.is_k_colorable(63));
    }
}
