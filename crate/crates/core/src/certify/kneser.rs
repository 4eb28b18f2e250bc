//! Kneser graphs of set systems and their chromatic numbers.

use rayon::prelude::*;

use crate::{Error, Result, SetSystem};

/// Hard cap for [`KneserGraph::chromatic_exact`]: vertex sets are single `u64` masks.
pub const EXACT_COLORING_MAX: usize = 64;

/// Vertices are the members of a set system; two are adjacent iff disjoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KneserGraph {
    system: SetSystem,
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

/// Builds the disjointness graph of `system`.
pub fn kneser_graph(system: &SetSystem) -> KneserGraph {
    let members = system.members();
    let adjacency: Vec<Vec<usize>> = members
        .par_iter()
        .enumerate()
        .map(|(i, a)| {
            members.iter().enumerate().filter(|&(j, b)| j != i && a.is_disjoint(*b)).map(|(j, _)| j).collect()
        })
        .collect();
    let edge_count = adjacency.iter().map(Vec::len).sum::<usize>() / 2;
    KneserGraph { system: system.clone(), adjacency, edge_count }
}

impl KneserGraph {
    pub fn system(&self) -> &SetSystem {
        &self.system
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Edges `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(i, nbrs)| nbrs.iter().filter(move |&&j| j > i).map(move |&j| (i, j)))
    }

    /// Greedy colouring in degree-descending order (ties by index).
    /// Returns the colour of each vertex.
    pub fn greedy_coloring(&self) -> Vec<usize> {
        let n = self.vertex_count();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| self.degree(b).cmp(&self.degree(a)).then(a.cmp(&b)));
        let mut color = vec![usize::MAX; n];
        let mut used = Vec::new();
        for v in order {
            used.clear();
            used.extend(self.adjacency[v].iter().map(|&u| color[u]).filter(|&c| c != usize::MAX));
            used.sort_unstable();
            used.dedup();
            color[v] = used.iter().enumerate().find(|&(i, &c)| i != c).map(|(i, _)| i).unwrap_or(used.len());
        }
        color
    }

    /// Number of colours used by [`greedy_coloring`](Self::greedy_coloring); an upper
    /// bound on the chromatic number. The empty graph needs no colours.
    pub fn chromatic_upper(&self) -> usize {
        self.greedy_coloring().iter().max().map_or(0, |&c| c + 1)
    }

    /// The chromatic number by branch and bound, for at most `limit` vertices
    /// (`limit` is clamped to [`EXACT_COLORING_MAX`]).
    pub fn chromatic_exact(&self, limit: usize) -> Result<usize> {
        let n = self.vertex_count();
        let limit = limit.min(EXACT_COLORING_MAX);
        if n > limit {
            return Err(Error::ColoringTooLarge { vertices: n, limit });
        }
        if n == 0 {
            return Ok(0);
        }
        let adj: Vec<u64> = self.adjacency.iter().map(|nbrs| nbrs.iter().fold(0u64, |m, &j| m | (1 << j))).collect();
        let mut search = ColoringSearch {
            adj: &adj,
            classes: Vec::new(),
            colored: 0,
            best: self.chromatic_upper(),
            lower: greedy_clique(&adj),
        };
        if search.best > search.lower {
            search.run();
        }
        Ok(search.best)
    }
}

/// Size of a clique built greedily from high-degree vertices; a lower bound on χ.
fn greedy_clique(adj: &[u64]) -> usize {
    let mut order: Vec<usize> = (0..adj.len()).collect();
    order.sort_by(|&a, &b| adj[b].count_ones().cmp(&adj[a].count_ones()).then(a.cmp(&b)));
    let mut clique = 0u64;
    for v in order {
        if adj[v] & clique == clique {
            clique |= 1 << v;
        }
    }
    clique.count_ones() as usize
}

/// DSATUR-ordered exhaustive search. Colour classes are vertex masks.
struct ColoringSearch<'a> {
    adj: &'a [u64],
    classes: Vec<u64>,
    colored: u64,
    best: usize,
    lower: usize,
}

impl ColoringSearch<'_> {
    fn done(&self) -> bool {
        self.best == self.lower
    }

    /// Uncoloured vertex with most distinct neighbour colours, then most uncoloured
    /// neighbours, then smallest index.
    fn pick(&self) -> usize {
        let n = self.adj.len();
        let mut best: Option<(usize, usize, usize)> = None;
        for v in 0..n {
            if self.colored >> v & 1 == 1 {
                continue;
            }
            let sat = self.classes.iter().filter(|&&c| c & self.adj[v] != 0).count();
            let deg = (self.adj[v] & !self.colored).count_ones() as usize;
            if best.is_none_or(|(s, d, _)| (sat, deg) > (s, d)) {
                best = Some((sat, deg, v));
            }
        }
        best.expect("called with an uncoloured vertex").2
    }

    fn run(&mut self) {
        let n = self.adj.len();
        if self.colored.count_ones() as usize == n {
            self.best = self.classes.len();
            return;
        }
        let v = self.pick();
        let bit = 1u64 << v;
        self.colored |= bit;
        for c in 0..self.classes.len() {
            if self.classes[c] & self.adj[v] == 0 {
                self.classes[c] |= bit;
                self.run();
                self.classes[c] &= !bit;
                if self.done() {
                    break;
                }
            }
        }
        if !self.done() && self.classes.len() + 1 < self.best {
            self.classes.push(bit);
            self.run();
            self.classes.pop();
        }
        self.colored &= !bit;
    }
}
