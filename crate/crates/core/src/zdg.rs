//! The two zero-divisor graph constructions: the meet-based graph of a
//! lattice with respect to an ideal, and the product-based graph of a
//! multiplicative lattice with respect to an element.

use crate::error::Error;
use crate::lattice::{ElementSet, FiniteLattice};
use crate::mult::MultLattice;

/// A simple undirected graph over labeled lattice elements.
///
/// Vertices are kept in element-index order, so two graphs over the same
/// lattice are equal exactly when their vertex and edge sets coincide.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_elems: Vec<usize>,
    labels: Vec<String>,
    adj: Vec<Vec<bool>>,
}

impl Graph {
    pub(crate) fn new(vertex_elems: Vec<usize>, labels: Vec<String>, adj: Vec<Vec<bool>>) -> Self {
        let n = vertex_elems.len();
        debug_assert!(labels.len() == n && adj.len() == n);
        debug_assert!((0..n).all(|v| !adj[v][v]));
        debug_assert!((0..n).all(|u| (0..n).all(|v| adj[u][v] == adj[v][u])));
        Graph {
            vertex_elems,
            labels,
            adj,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_elems.len()
    }

    /// Lattice element indices backing the vertices, ascending.
    pub fn vertex_elements(&self) -> &[usize] {
        &self.vertex_elems
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u][v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.vertex_count()).filter(move |&u| self.adj[v][u])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).count()
    }

    /// Edges as vertex-index pairs `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.vertex_count() {
            for v in (u + 1)..self.vertex_count() {
                if self.adj[u][v] {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }
}

/// The zero-divisor graph of `l` with respect to an ideal `i`: vertices are
/// the elements outside `i` whose meet with some other outside element lands
/// in `i`; two vertices are adjacent iff their meet lies in `i`.
pub fn gamma_meet(l: &FiniteLattice, ideal: &ElementSet) -> Result<Graph, Error> {
    let flags = l.classify_subset(ideal)?;
    if !flags.ideal {
        return Err(Error::NotAnIdeal);
    }
    let n = l.n();
    let verts: Vec<usize> = (0..n)
        .filter(|&x| {
            !ideal.contains(x) && (0..n).any(|y| !ideal.contains(y) && ideal.contains(l.meet(x, y)))
        })
        .collect();
    let adj = verts
        .iter()
        .map(|&a| {
            verts
                .iter()
                .map(|&b| a != b && ideal.contains(l.meet(a, b)))
                .collect()
        })
        .collect();
    let labels = verts.iter().map(|&v| l.label(v).to_string()).collect();
    Ok(Graph::new(verts, labels, adj))
}

/// The zero-divisor graph of a multiplicative lattice with respect to an
/// element `i`: vertices are the elements not below `i` whose product with
/// some other such element drops below `i`; adjacency is `a.b <= i`.
///
/// `i = bottom` gives the plain product zero-divisor graph.
pub fn gamma_mult(m: &MultLattice, i: usize) -> Graph {
    let l = m.base();
    let n = l.n();
    let verts: Vec<usize> = (0..n)
        .filter(|&x| !l.leq(x, i) && (0..n).any(|y| !l.leq(y, i) && l.leq(m.mul(x, y), i)))
        .collect();
    let adj = verts
        .iter()
        .map(|&a| {
            verts
                .iter()
                .map(|&b| a != b && l.leq(m.mul(a, b), i))
                .collect()
        })
        .collect();
    let labels = verts.iter().map(|&v| l.label(v).to_string()).collect();
    Graph::new(verts, labels, adj)
}
