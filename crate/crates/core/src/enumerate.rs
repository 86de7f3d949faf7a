//! Exhaustive enumeration of all valid multiplications on a small lattice,
//! plus the built-in lattice catalog.
//!
//! The search assigns the upper-triangle cells of the (commutative) table in
//! row-major order, with candidate values restricted to the down-set of the
//! cell's meet (axiom 4) and `a.1 = a` fixed (axiom 5). Partial assignments
//! are pruned against associativity and join-distributivity wherever all
//! participating cells are known; a full validation gates every emission.
//! Pruning therefore never changes the emitted set relative to naive
//! generate-and-test, which the tests check by direct comparison.

use crate::error::Error;
use crate::lattice::FiniteLattice;
use crate::mult::MultLattice;

/// Default cap on the base-lattice size for enumeration.
pub const ENUM_SIZE_CAP: usize = 6;

/// An enumeration request over one base lattice.
///
/// `partition_prefix` fixes the values of the first `k` cells in the
/// canonical cell order; running disjoint exhaustive prefixes in parallel
/// and merging in prefix order reproduces the unpartitioned stream.
#[derive(Debug, Clone)]
pub struct EnumerationJob {
    pub base: FiniteLattice,
    pub limit: Option<usize>,
    pub cap: usize,
    pub partition_prefix: Vec<usize>,
}

impl EnumerationJob {
    pub fn new(base: FiniteLattice) -> Self {
        EnumerationJob {
            base,
            limit: None,
            cap: ENUM_SIZE_CAP,
            partition_prefix: Vec::new(),
        }
    }
}

/// Streaming enumerator over all valid multiplication tables.
pub struct MultEnumerator {
    base: FiniteLattice,
    cells: Vec<(usize, usize)>,
    candidates: Vec<Vec<usize>>,
    /// Per-cell index into `candidates`; `usize::MAX` marks "not yet entered".
    choice: Vec<usize>,
    table: Vec<Vec<Option<usize>>>,
    depth: usize,
    emitted: usize,
    limit: Option<usize>,
    done: bool,
}

/// Canonical cell order: row-major over the upper triangle (diagonal
/// included).
fn cell_order(n: usize) -> Vec<(usize, usize)> {
    let mut cells = Vec::new();
    for i in 0..n {
        for j in i..n {
            cells.push((i, j));
        }
    }
    cells
}

pub fn enumerate_multiplications(job: &EnumerationJob) -> Result<MultEnumerator, Error> {
    let n = job.base.n();
    if n > job.cap {
        return Err(Error::CapExceeded {
            what: "enumeration base lattice",
            size: n,
            cap: job.cap,
        });
    }
    let cells = cell_order(n);
    let mut candidates: Vec<Vec<usize>> = cells
        .iter()
        .map(|&(i, j)| {
            if i == job.base.top() || j == job.base.top() {
                // axiom 5 fixes products with top
                vec![if i == job.base.top() { j } else { i }]
            } else {
                let m = job.base.meet(i, j);
                (0..n).filter(|&v| job.base.leq(v, m)).collect()
            }
        })
        .collect();
    for (k, &v) in job.partition_prefix.iter().enumerate() {
        if k >= candidates.len() {
            break;
        }
        candidates[k].retain(|&c| c == v);
    }
    Ok(MultEnumerator {
        base: job.base.clone(),
        cells,
        candidates,
        choice: vec![usize::MAX; cell_order(n).len()],
        table: vec![vec![None; n]; n],
        depth: 0,
        emitted: 0,
        limit: job.limit,
        done: false,
    })
}

impl MultEnumerator {
    /// Number of instances emitted so far.
    pub fn found(&self) -> usize {
        self.emitted
    }

    fn set(&mut self, pos: usize, v: usize) {
        let (i, j) = self.cells[pos];
        self.table[i][j] = Some(v);
        self.table[j][i] = Some(v);
    }

    fn clear(&mut self, pos: usize) {
        let (i, j) = self.cells[pos];
        self.table[i][j] = None;
        self.table[j][i] = None;
    }

    /// Checks every associativity and distributivity constraint whose
    /// operands are all assigned. Sound as a pruning test: a violated
    /// constraint can never be repaired by later assignments.
    fn partial_ok(&self) -> bool {
        let n = self.base.n();
        let t = |a: usize, b: usize| self.table[a][b];
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if let (Some(ab), Some(bc)) = (t(a, b), t(b, c)) {
                        if let (Some(ab_c), Some(a_bc)) = (t(ab, c), t(a, bc)) {
                            if ab_c != a_bc {
                                return false;
                            }
                        }
                    }
                    let j = self.base.join(b, c);
                    if let (Some(ab), Some(ac), Some(aj)) = (t(a, b), t(a, c), t(a, j)) {
                        if self.base.join(ab, ac) != aj {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn full_table(&self) -> Vec<Vec<usize>> {
        self.table
            .iter()
            .map(|row| row.iter().map(|v| v.expect("table complete")).collect())
            .collect()
    }
}

impl Iterator for MultEnumerator {
    type Item = MultLattice;

    fn next(&mut self) -> Option<MultLattice> {
        if self.done || self.limit.is_some_and(|l| self.emitted >= l) {
            return None;
        }
        loop {
            // advance the choice at the current depth
            let next_choice = if self.choice[self.depth] == usize::MAX {
                0
            } else {
                self.clear(self.depth);
                self.choice[self.depth] + 1
            };
            if next_choice >= self.candidates[self.depth].len() {
                // exhausted this cell: backtrack
                self.choice[self.depth] = usize::MAX;
                if self.depth == 0 {
                    self.done = true;
                    return None;
                }
                self.depth -= 1;
                continue;
            }
            self.choice[self.depth] = next_choice;
            self.set(self.depth, self.candidates[self.depth][next_choice]);
            if !self.partial_ok() {
                continue;
            }
            if self.depth + 1 == self.cells.len() {
                // complete table: the final validator is the emission gate
                if let Ok(m) = MultLattice::attach(self.base.clone(), self.full_table()) {
                    self.emitted += 1;
                    return Some(m);
                }
            } else {
                self.depth += 1;
            }
        }
    }
}

/// The built-in lattice catalog: chains c2..c6, Boolean lattices b2 and b3,
/// the diamond m3, the pentagon n5, the 3x3 grid, and the six-element
/// benchmark lattice `fig1`.
pub fn catalog() -> Vec<(&'static str, FiniteLattice)> {
    fn chain(labels: &[&str]) -> FiniteLattice {
        let rels: Vec<(&str, &str)> = labels.windows(2).map(|w| (w[0], w[1])).collect();
        FiniteLattice::build(labels, &rels).unwrap()
    }
    let b2 = FiniteLattice::build(
        &["0", "x", "y", "1"],
        &[("0", "x"), ("0", "y"), ("x", "1"), ("y", "1")],
    )
    .unwrap();
    let b3 = FiniteLattice::build(
        &["0", "a", "b", "c", "ab", "ac", "bc", "1"],
        &[
            ("0", "a"),
            ("0", "b"),
            ("0", "c"),
            ("a", "ab"),
            ("a", "ac"),
            ("b", "ab"),
            ("b", "bc"),
            ("c", "ac"),
            ("c", "bc"),
            ("ab", "1"),
            ("ac", "1"),
            ("bc", "1"),
        ],
    )
    .unwrap();
    let m3 = FiniteLattice::build(
        &["0", "x", "y", "z", "1"],
        &[
            ("0", "x"),
            ("0", "y"),
            ("0", "z"),
            ("x", "1"),
            ("y", "1"),
            ("z", "1"),
        ],
    )
    .unwrap();
    let n5 = FiniteLattice::build(
        &["0", "p", "q", "r", "1"],
        &[("0", "p"), ("p", "q"), ("q", "1"), ("0", "r"), ("r", "1")],
    )
    .unwrap();
    let grid = {
        let labels: Vec<String> = (0..3)
            .flat_map(|i| (0..3).map(move |j| format!("({i},{j})")))
            .collect();
        let refs: Vec<&str> = labels.iter().map(|s| s.as_str()).collect();
        let mut rels = Vec::new();
        for i in 0..3 {
            for j in 0..3 {
                if i < 2 {
                    rels.push((refs[i * 3 + j], refs[(i + 1) * 3 + j]));
                }
                if j < 2 {
                    rels.push((refs[i * 3 + j], refs[i * 3 + j + 1]));
                }
            }
        }
        FiniteLattice::build(&refs, &rels).unwrap()
    };
    let fig1 = FiniteLattice::build(
        &["0", "a", "b", "c", "d", "1"],
        &[
            ("0", "a"),
            ("a", "b"),
            ("b", "d"),
            ("0", "c"),
            ("c", "d"),
            ("d", "1"),
        ],
    )
    .unwrap();
    vec![
        ("c2", chain(&["0", "1"])),
        ("c3", chain(&["0", "m", "1"])),
        ("c4", chain(&["0", "a", "b", "1"])),
        ("c5", chain(&["0", "a", "b", "c", "1"])),
        ("c6", chain(&["0", "a", "b", "c", "d", "1"])),
        ("b2", b2),
        ("b3", b3),
        ("m3", m3),
        ("n5", n5),
        ("grid3x3", grid),
        ("fig1", fig1),
    ]
}

pub fn catalog_lattice(name: &str) -> Option<FiniteLattice> {
    catalog()
        .into_iter()
        .find(|(n, _)| *n == name)
        .map(|(_, l)| l)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(name: &str) -> usize {
        let job = EnumerationJob::new(catalog_lattice(name).unwrap());
        enumerate_multiplications(&job).unwrap().count()
    }

    #[test]
    fn two_element_chain_has_one_multiplication() {
        assert_eq!(count("c2"), 1);
    }

    #[test]
    fn three_element_chain_has_two_multiplications() {
        let job = EnumerationJob::new(catalog_lattice("c3").unwrap());
        let all: Vec<MultLattice> = enumerate_multiplications(&job).unwrap().collect();
        assert_eq!(all.len(), 2);
        // one reduced (m.m = m), one non-reduced (m.m = 0)
        let reduced: Vec<bool> = all.iter().map(|m| m.is_reduced()).collect();
        assert_eq!(reduced.iter().filter(|&&r| r).count(), 1);
    }

    #[test]
    fn diamond_forces_meet_multiplication() {
        let job = EnumerationJob::new(catalog_lattice("b2").unwrap());
        let all: Vec<MultLattice> = enumerate_multiplications(&job).unwrap().collect();
        assert_eq!(all.len(), 1);
        let m = &all[0];
        let l = m.base();
        let x = l.index_of("x").unwrap();
        let y = l.index_of("y").unwrap();
        // x.y = 0 is forced, and the trivial multiplication is not emitted
        assert_eq!(m.mul(x, y), l.bottom());
        assert_eq!(m.mul(x, x), x);
        for a in 0..l.n() {
            for b in 0..l.n() {
                assert_eq!(m.mul(a, b), l.meet(a, b));
            }
        }
    }

    #[test]
    fn m3_and_n5_admit_no_multiplication() {
        assert_eq!(count("m3"), 0);
        assert_eq!(count("n5"), 0);
    }

    #[test]
    fn limit_stops_the_stream() {
        let mut job = EnumerationJob::new(catalog_lattice("c4").unwrap());
        job.limit = Some(1);
        assert_eq!(enumerate_multiplications(&job).unwrap().count(), 1);
    }

    #[test]
    fn cap_is_enforced() {
        let job = EnumerationJob::new(catalog_lattice("grid3x3").unwrap());
        assert!(matches!(
            enumerate_multiplications(&job),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn partitioned_runs_cover_the_full_stream() {
        let base = catalog_lattice("c4").unwrap();
        let job = EnumerationJob::new(base.clone());
        let full: Vec<Vec<Vec<usize>>> = enumerate_multiplications(&job)
            .unwrap()
            .map(table_of)
            .collect();

        // split on the first free cell: prefix covers the three forced cells
        // of row 0 plus cell (1,1)
        let n = base.n();
        let first_free = cell_order(n)
            .iter()
            .position(|&(i, j)| !(i == base.top() || j == base.top() || i == base.bottom()))
            .unwrap();
        let mut merged = Vec::new();
        for v in 0..n {
            let mut prefix = vec![base.bottom(); first_free];
            prefix.push(v);
            let job = EnumerationJob {
                base: base.clone(),
                limit: None,
                cap: ENUM_SIZE_CAP,
                partition_prefix: prefix,
            };
            merged.extend(enumerate_multiplications(&job).unwrap().map(table_of));
        }
        assert_eq!(full, merged);
    }

    fn table_of(m: MultLattice) -> Vec<Vec<usize>> {
        let n = m.base().n();
        (0..n)
            .map(|a| (0..n).map(|b| m.mul(a, b)).collect())
            .collect()
    }

    #[test]
    fn catalog_contents() {
        let cat = catalog();
        let names: Vec<&str> = cat.iter().map(|(n, _)| *n).collect();
        assert_eq!(
            names,
            vec!["c2", "c3", "c4", "c5", "c6", "b2", "b3", "m3", "n5", "grid3x3", "fig1"]
        );
        let fig1 = catalog_lattice("fig1").unwrap();
        assert_eq!(fig1.n(), 6);
        let idx = |s: &str| fig1.index_of(s).unwrap();
        assert_eq!(fig1.meet(idx("b"), idx("c")), idx("0"));
        assert_eq!(catalog_lattice("c2").unwrap().n(), 2);
        let grid = catalog_lattice("grid3x3").unwrap();
        assert_eq!(grid.n(), 9);
        assert!(grid.is_distributive());
        assert_eq!(grid.atoms().count() + grid.coatoms().count(), 4);
    }
}
