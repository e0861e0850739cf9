//! Simple graphs, their edge ideals, and independence/cover combinatorics.

use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::ideal::{check_ambient, full_mask, BitIter, Ideal};

/// Above this many vertices maximal independent sets are enumerated by branching
/// instead of filtering all subsets.
pub const EXHAUSTIVE_MIS_LIMIT: usize = 20;

/// A simple graph on vertices `1..=n`, stored as adjacency bitmasks.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self> {
        check_ambient(n)
            .map_err(|_| Error::InvalidGraph(format!("{n} vertices outside 1..=63")))?;
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from 1-based edges. Repeated edges collapse; loops are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<()> {
        if a == b {
            return Err(Error::InvalidGraph(format!("loop at vertex {a}")));
        }
        for v in [a, b] {
            if v == 0 || v > self.n {
                return Err(Error::InvalidGraph(format!(
                    "vertex {v} outside 1..={}",
                    self.n
                )));
            }
        }
        self.adj[a - 1] |= 1u64 << (b - 1);
        self.adj[b - 1] |= 1u64 << (a - 1);
        Ok(())
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    /// Neighbourhood of the 0-based vertex `v` as a mask.
    pub fn neighbours(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// Edges `(a, b)` with `a < b`, 1-based, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in BitIter(self.adj[a] >> (a + 1)) {
                out.push((a + 1, a + b + 2));
            }
        }
        out
    }

    pub fn num_edges(&self) -> usize {
        self.adj
            .iter()
            .map(|m| m.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// `I(G) = (x_i x_j : {i, j} ∈ E(G))` in `K[x_1..x_n]`.
    pub fn edge_ideal(&self) -> Ideal {
        Ideal::from_masks(
            self.n,
            self.edges()
                .into_iter()
                .map(|(a, b)| (1u64 << (a - 1)) | (1u64 << (b - 1))),
        )
        .expect("edges are valid degree-two supports")
    }

    pub fn is_independent(&self, set: u64) -> bool {
        BitIter(set).all(|v| self.adj[v] & set == 0)
    }

    /// Every vertex outside `set` has a neighbour in `set`.
    pub fn is_dominating(&self, set: u64) -> bool {
        BitIter(full_mask(self.n) & !set).all(|v| self.adj[v] & set != 0)
    }

    /// All inclusion-maximal independent sets, ascending by mask.
    pub fn maximal_independent_sets(&self) -> Vec<u64> {
        if self.n <= EXHAUSTIVE_MIS_LIMIT {
            self.maximal_independent_sets_exhaustive()
        } else {
            self.maximal_independent_sets_branching()
        }
    }

    /// Filters all `2^n` vertex subsets.
    pub fn maximal_independent_sets_exhaustive(&self) -> Vec<u64> {
        (0..=full_mask(self.n))
            .filter(|&s| self.is_independent(s) && self.is_dominating(s))
            .collect()
    }

    /// Branches on the lowest undecided vertex (take it, or exclude it).
    pub fn maximal_independent_sets_branching(&self) -> Vec<u64> {
        let mut out = Vec::new();
        self.branch_mis(0, full_mask(self.n), 0, &mut out);
        out.sort_unstable();
        out
    }

    fn branch_mis(&self, chosen: u64, undecided: u64, excluded: u64, out: &mut Vec<u64>) {
        // an excluded vertex with no neighbour left among chosen or undecided can never be dominated
        if BitIter(excluded).any(|v| self.adj[v] & (chosen | undecided) == 0) {
            return;
        }
        if undecided == 0 {
            out.push(chosen);
            return;
        }
        let v = undecided.trailing_zeros() as usize;
        let bit = 1u64 << v;
        let rest = undecided & !bit;
        self.branch_mis(
            chosen | bit,
            rest & !self.adj[v],
            excluded & !self.adj[v],
            out,
        );
        self.branch_mis(chosen, rest, excluded | bit, out);
    }

    /// Complements of the maximal independent sets, ascending by mask.
    pub fn minimal_vertex_covers(&self) -> Vec<u64> {
        let full = full_mask(self.n);
        let mut out: Vec<u64> = self
            .maximal_independent_sets()
            .into_iter()
            .map(|s| full & !s)
            .collect();
        out.sort_unstable();
        out
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let next = BitIter(frontier).fold(0u64, |acc, v| acc | self.adj[v]) & !seen;
            seen |= next;
            frontier = next;
        }
        seen == full_mask(self.n)
    }

    pub fn is_tree(&self) -> bool {
        self.num_edges() + 1 == self.n && self.is_connected()
    }

    /// Independence domination number: the smallest size of a maximal independent set.
    pub fn independence_domination(&self) -> usize {
        self.maximal_independent_sets()
            .iter()
            .map(|s| s.count_ones() as usize)
            .min()
            .expect("every graph with a vertex has a maximal independent set")
    }

    /// Depth of `S/I(T)` for a tree `T` predicted combinatorially, with
    /// `free_vars` extra ring variables not touched by `T`.
    pub fn tree_depth_via_lemma(&self, free_vars: usize) -> Result<usize> {
        if !self.is_tree() {
            return Err(Error::NotATree);
        }
        Ok(self.independence_domination() + free_vars)
    }

    /// Decodes a Prüfer sequence (1-based labels) into a labeled tree on
    /// `seq.len() + 2` vertices.
    pub fn from_prufer(seq: &[usize]) -> Result<Self> {
        let n = seq.len() + 2;
        let mut g = Self::empty(n)?;
        let mut degree = vec![1usize; n];
        for &v in seq {
            if v == 0 || v > n {
                return Err(Error::InvalidGraph(format!(
                    "Prüfer label {v} outside 1..={n}"
                )));
            }
            degree[v - 1] += 1;
        }
        for &v in seq {
            let leaf = degree.iter().position(|&d| d == 1).expect("a leaf remains");
            g.add_edge(leaf + 1, v)?;
            degree[leaf] = 0;
            degree[v - 1] -= 1;
        }
        let last: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
        g.add_edge(last[0] + 1, last[1] + 1)?;
        Ok(g)
    }

    /// Uniformly random labeled tree on `n ≥ 2` vertices.
    pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Self> {
        if n < 2 {
            return Self::empty(n);
        }
        let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(1..=n)).collect();
        Self::from_prufer(&seq)
    }

    /// Every labeled tree on `n` vertices, in Prüfer-sequence order (`n^(n-2)` of them).
    pub fn all_labeled_trees(n: usize) -> Result<Vec<Self>> {
        if n < 2 {
            return Ok(vec![Self::empty(n)?]);
        }
        let len = n - 2;
        let total = n.pow(len as u32);
        let mut out = Vec::with_capacity(total);
        let mut seq = vec![1usize; len];
        for _ in 0..total {
            out.push(Self::from_prufer(&seq)?);
            for slot in seq.iter_mut() {
                if *slot < n {
                    *slot += 1;
                    break;
                }
                *slot = 1;
            }
        }
        Ok(out)
    }

    /// Serializes to the graph text format (`v=<n>` header, one `i j` edge per line).
    pub fn to_text(&self) -> String {
        let mut out = format!("v={}\n", self.n);
        for (a, b) in self.edges() {
            out.push_str(&format!("{a} {b}\n"));
        }
        out
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        let mut graph: Option<Graph> = None;
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            match graph.as_mut() {
                None => {
                    let value = line
                        .strip_prefix("v=")
                        .ok_or_else(|| Error::parse(lineno, "expected header `v=<count>`"))?;
                    let n: usize = value
                        .trim()
                        .parse()
                        .map_err(|_| Error::parse(lineno, format!("bad vertex count `{value}`")))?;
                    graph = Some(Self::empty(n).map_err(|e| Error::parse(lineno, e.to_string()))?);
                }
                Some(g) => {
                    let ends: Vec<usize> = line
                        .split_whitespace()
                        .map(|t| t.parse::<usize>())
                        .collect::<std::result::Result<_, _>>()
                        .map_err(|_| Error::parse(lineno, format!("bad edge `{line}`")))?;
                    if ends.len() != 2 {
                        return Err(Error::parse(lineno, "an edge needs exactly two vertices"));
                    }
                    g.add_edge(ends[0], ends[1])
                        .map_err(|e| Error::parse(lineno, e.to_string()))?;
                }
            }
        }
        graph.ok_or_else(|| Error::parse(1, "missing header `v=<count>`"))
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
