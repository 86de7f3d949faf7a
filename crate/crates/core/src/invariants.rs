//! Exact graph metrics: diameter, girth, connectivity, bipartite structure,
//! clique and chromatic numbers, star detection.
//!
//! Everything here is exact; the clique and chromatic solvers are
//! branch-and-bound searches behind a vertex-count guard.

use crate::zdg::Graph;

/// Default vertex cap for the exact clique/chromatic solvers.
pub const EXACT_SOLVER_CAP: usize = 64;

/// Diameter of a graph. `Undefined` is reserved for the empty graph, which
/// has no vertex pairs to measure; a disconnected graph has infinite
/// diameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Diameter {
    Undefined,
    Finite(usize),
    Infinite,
}

impl Diameter {
    pub fn is_at_most(&self, k: usize) -> bool {
        match self {
            Diameter::Undefined => true,
            Diameter::Finite(d) => *d <= k,
            Diameter::Infinite => false,
        }
    }
}

impl std::fmt::Display for Diameter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Diameter::Undefined => write!(f, "undefined"),
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => write!(f, "inf"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl std::fmt::Display for Girth {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => write!(f, "inf"),
        }
    }
}

/// The full metric record for one graph.
///
/// `clique_number` and `chromatic_number` are `None` when the vertex count
/// exceeds the exact-solver guard; all other metrics are still computed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphMetrics {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub connected: bool,
    pub diameter: Diameter,
    pub girth: Girth,
    pub bipartite: bool,
    pub complete_bipartite: bool,
    /// The two parts (by label) when the graph is complete bipartite.
    pub bipartition: Option<(Vec<String>, Vec<String>)>,
    pub clique_number: Option<usize>,
    pub chromatic_number: Option<usize>,
    pub is_star: bool,
}

pub fn metrics(g: &Graph) -> GraphMetrics {
    metrics_guarded(g, EXACT_SOLVER_CAP)
}

pub fn metrics_guarded(g: &Graph, exact_cap: usize) -> GraphMetrics {
    let n = g.vertex_count();
    let connected = is_connected(g);
    let diameter = diameter(g);
    let girth = girth(g);
    let coloring = two_coloring(g);
    let bipartite = coloring.is_some();
    let (complete_bipartite, bipartition) = match &coloring {
        Some(colors) if n >= 2 && connected => {
            let part0: Vec<usize> = (0..n).filter(|&v| !colors[v]).collect();
            let part1: Vec<usize> = (0..n).filter(|&v| colors[v]).collect();
            let complete = !part0.is_empty()
                && !part1.is_empty()
                && part0
                    .iter()
                    .all(|&u| part1.iter().all(|&v| g.adjacent(u, v)));
            if complete {
                let names = |part: &[usize]| part.iter().map(|&v| g.label(v).to_string()).collect();
                (true, Some((names(&part0), names(&part1))))
            } else {
                (false, None)
            }
        }
        _ => (false, None),
    };
    let (clique_number, chromatic_number) = if n <= exact_cap {
        let clique = max_clique(g);
        (Some(clique), Some(chromatic_number(g, clique)))
    } else {
        (None, None)
    };
    GraphMetrics {
        vertex_count: n,
        edge_count: g.edge_count(),
        connected,
        diameter,
        girth,
        bipartite,
        complete_bipartite,
        bipartition,
        clique_number,
        chromatic_number,
        is_star: is_star(g),
    }
}

fn bfs_dist(g: &Graph, src: usize) -> Vec<Option<usize>> {
    let n = g.vertex_count();
    let mut dist = vec![None; n];
    dist[src] = Some(0);
    let mut queue = std::collections::VecDeque::from([src]);
    while let Some(u) = queue.pop_front() {
        for v in g.neighbors(u) {
            if dist[v].is_none() {
                dist[v] = Some(dist[u].unwrap() + 1);
                queue.push_back(v);
            }
        }
    }
    dist
}

fn is_connected(g: &Graph) -> bool {
    let n = g.vertex_count();
    n <= 1 || bfs_dist(g, 0).iter().all(|d| d.is_some())
}

fn diameter(g: &Graph) -> Diameter {
    let n = g.vertex_count();
    if n == 0 {
        return Diameter::Undefined;
    }
    let mut max = 0;
    for v in 0..n {
        for d in bfs_dist(g, v) {
            match d {
                Some(d) => max = max.max(d),
                None => return Diameter::Infinite,
            }
        }
    }
    Diameter::Finite(max)
}

/// Shortest cycle length via BFS from every vertex: each non-tree edge
/// `(u, w)` reached from the root closes a walk of length
/// `dist(u) + dist(w) + 1` that contains a cycle no longer than itself, and
/// roots on a shortest cycle realize its exact length.
fn girth(g: &Graph) -> Girth {
    let n = g.vertex_count();
    let mut best: Option<usize> = None;
    for src in 0..n {
        let mut dist = vec![None; n];
        let mut parent = vec![usize::MAX; n];
        dist[src] = Some(0usize);
        let mut queue = std::collections::VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u) {
                if dist[v].is_none() {
                    dist[v] = Some(dist[u].unwrap() + 1);
                    parent[v] = u;
                    queue.push_back(v);
                }
            }
        }
        for u in 0..n {
            for w in (u + 1)..n {
                if !g.adjacent(u, w) || parent[u] == w || parent[w] == u {
                    continue;
                }
                if let (Some(du), Some(dw)) = (dist[u], dist[w]) {
                    let len = du + dw + 1;
                    if best.map_or(true, |b| len < b) {
                        best = Some(len);
                    }
                }
            }
        }
    }
    match best {
        Some(b) => Girth::Finite(b),
        None => Girth::Infinite,
    }
}

/// Proper 2-coloring per component, or None if an odd cycle exists.
fn two_coloring(g: &Graph) -> Option<Vec<bool>> {
    let n = g.vertex_count();
    let mut color: Vec<Option<bool>> = vec![None; n];
    for start in 0..n {
        if color[start].is_some() {
            continue;
        }
        color[start] = Some(false);
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u) {
                match color[v] {
                    None => {
                        color[v] = Some(!color[u].unwrap());
                        queue.push_back(v);
                    }
                    Some(c) => {
                        if c == color[u].unwrap() {
                            return None;
                        }
                    }
                }
            }
        }
    }
    Some(color.into_iter().map(|c| c.unwrap()).collect())
}

fn max_clique(g: &Graph) -> usize {
    let n = g.vertex_count();
    let mut best = 0;
    let mut current = Vec::new();
    let candidates: Vec<usize> = (0..n).collect();
    clique_rec(g, &candidates, &mut current, &mut best);
    best
}

fn clique_rec(g: &Graph, candidates: &[usize], current: &mut Vec<usize>, best: &mut usize) {
    if current.len() > *best {
        *best = current.len();
    }
    for (i, &v) in candidates.iter().enumerate() {
        if current.len() + (candidates.len() - i) <= *best {
            return; // cannot beat the incumbent
        }
        let rest: Vec<usize> = candidates[i + 1..]
            .iter()
            .copied()
            .filter(|&u| g.adjacent(u, v))
            .collect();
        current.push(v);
        clique_rec(g, &rest, current, best);
        current.pop();
    }
}

fn chromatic_number(g: &Graph, lower_bound: usize) -> usize {
    let n = g.vertex_count();
    if n == 0 {
        return 0;
    }
    let mut k = lower_bound.max(1);
    loop {
        let mut colors = vec![usize::MAX; n];
        if color_rec(g, k, &mut colors, 0) {
            return k;
        }
        k += 1;
    }
}

fn color_rec(g: &Graph, k: usize, colors: &mut Vec<usize>, v: usize) -> bool {
    if v == g.vertex_count() {
        return true;
    }
    // symmetry breaking: never open more than one fresh color at a time
    let used = colors[..v].iter().copied().max().map_or(0, |m| m + 1);
    for c in 0..k.min(used + 1) {
        if g.neighbors(v).all(|u| colors[u] != c) {
            colors[v] = c;
            if color_rec(g, k, colors, v + 1) {
                return true;
            }
            colors[v] = usize::MAX;
        }
    }
    false
}

/// One center adjacent to all others and no other edges. The one-vertex
/// graph and the single edge count as stars.
fn is_star(g: &Graph) -> bool {
    let n = g.vertex_count();
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    (0..n).any(|center| {
        (0..n).all(|v| v == center || g.adjacent(center, v)) && g.edge_count() == n - 1
    })
}
