//! Exact maximum-weight clique by branch and bound.
//!
//! Candidates are greedily coloured at every node. A clique uses at most one
//! vertex of each colour class, so the heaviest weights of the first `c`
//! classes bound any clique drawn from them. Vertices are expanded from the
//! last class backwards and the node is cut once that bound cannot beat the
//! best clique so far.

use std::time::Instant;

#[derive(Clone, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn empty(m: usize) -> Self {
        Bits(vec![0; m.div_ceil(64)])
    }

    fn full(m: usize) -> Self {
        let mut b = Bits::empty(m);
        for v in 0..m {
            b.insert(v);
        }
        b
    }

    fn insert(&mut self, v: usize) {
        self.0[v / 64] |= 1 << (v % 64);
    }

    fn remove(&mut self, v: usize) {
        self.0[v / 64] &= !(1 << (v % 64));
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn first(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn and_not(&mut self, other: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a &= !b;
        }
    }
}

pub(crate) struct WeightedGraph {
    weights: Vec<u64>,
    neighbours: Vec<Bits>,
}

pub(crate) struct CliqueResult {
    /// Vertices in increasing order.
    pub vertices: Vec<usize>,
    pub nodes: u64,
    /// False when the deadline cut the search short.
    pub complete: bool,
}

impl WeightedGraph {
    pub fn new(weights: Vec<u64>, adjacent: Vec<Vec<bool>>) -> Self {
        debug_assert_eq!(weights.len(), adjacent.len());
        let m = weights.len();
        let neighbours = adjacent
            .iter()
            .map(|row| {
                let mut b = Bits::empty(m);
                for (u, &e) in row.iter().enumerate() {
                    if e {
                        b.insert(u);
                    }
                }
                b
            })
            .collect();
        WeightedGraph {
            weights,
            neighbours,
        }
    }

    pub fn max_weight_clique(&self, deadline: Option<Instant>) -> CliqueResult {
        let mut state = State {
            graph: self,
            best: Vec::new(),
            best_weight: 0,
            nodes: 0,
            deadline,
            stopped: false,
        };
        let all = Bits::full(self.weights.len());
        state.expand(&mut Vec::new(), 0, all);
        let mut vertices = state.best;
        vertices.sort_unstable();
        CliqueResult {
            vertices,
            nodes: state.nodes,
            complete: !state.stopped,
        }
    }

    /// Candidates in colour order, each with the bound for cliques drawn
    /// from its class and the classes before it.
    fn colour(&self, cands: &Bits) -> Vec<(usize, u64)> {
        let mut order = Vec::new();
        let mut uncoloured = cands.clone();
        let mut bound = 0;
        while !uncoloured.is_empty() {
            let mut class = uncoloured.clone();
            let mut members = Vec::new();
            let mut heaviest = 0;
            while let Some(v) = class.first() {
                class.remove(v);
                class.and_not(&self.neighbours[v]);
                uncoloured.remove(v);
                heaviest = heaviest.max(self.weights[v]);
                members.push(v);
            }
            bound += heaviest;
            order.extend(members.into_iter().map(|v| (v, bound)));
        }
        order
    }
}

struct State<'a> {
    graph: &'a WeightedGraph,
    best: Vec<usize>,
    best_weight: u64,
    nodes: u64,
    deadline: Option<Instant>,
    stopped: bool,
}

impl State<'_> {
    fn expand(&mut self, current: &mut Vec<usize>, weight: u64, mut cands: Bits) {
        self.nodes += 1;
        if weight > self.best_weight {
            self.best_weight = weight;
            self.best = current.clone();
        }
        if self.nodes.is_multiple_of(256) && self.deadline.is_some_and(|d| Instant::now() >= d) {
            self.stopped = true;
        }
        if self.stopped {
            return;
        }
        for (v, bound) in self.graph.colour(&cands).into_iter().rev() {
            if weight + bound <= self.best_weight {
                return;
            }
            let next = cands.and(&self.graph.neighbours[v]);
            current.push(v);
            self.expand(current, weight + self.graph.weights[v], next);
            current.pop();
            cands.remove(v);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;
    use proptest::prelude::*;

    fn brute_force(weights: &[u64], adjacent: &[Vec<bool>]) -> u64 {
        let m = weights.len();
        (0u32..1 << m)
            .filter(|&s| {
                (0..m)
                    .tuple_combinations()
                    .all(|(a, b)| s >> a & 1 == 0 || s >> b & 1 == 0 || adjacent[a][b])
            })
            .map(|s| {
                (0..m)
                    .filter(|&v| s >> v & 1 == 1)
                    .map(|v| weights[v])
                    .sum()
            })
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn triangle_beats_heavy_vertex() {
        let adj = vec![
            vec![false, true, true, false],
            vec![true, false, true, false],
            vec![true, true, false, false],
            vec![false, false, false, false],
        ];
        let g = WeightedGraph::new(vec![2, 2, 2, 5], adj);
        let r = g.max_weight_clique(None);
        assert_eq!((r.vertices, r.complete), (vec![0, 1, 2], true));
    }

    proptest! {
        #[test]
        fn matches_brute_force(m in 1usize..10, bits in any::<u64>(), ws in prop::collection::vec(1u64..6, 10)) {
            let mut adj = vec![vec![false; m]; m];
            for (idx, (a, b)) in (0..m).tuple_combinations().enumerate() {
                let e = bits >> (idx % 64) & 1 == 1;
                adj[a][b] = e;
                adj[b][a] = e;
            }
            let weights = ws[..m].to_vec();
            let g = WeightedGraph::new(weights.clone(), adj.clone());
            let r = g.max_weight_clique(None);
            let clique = r.vertices;
            let w: u64 = clique.iter().map(|&v| weights[v]).sum();
            prop_assert_eq!(w, brute_force(&weights, &adj));
            for (a, b) in clique.iter().tuple_combinations() {
                prop_assert!(adj[*a][*b]);
            }
        }
    }
}
