//! Shared corpus for the integration suites: every enumerated multiplication
//! on the small catalog lattices plus the ideal lattices of Z_n for
//! n = 2..=60.
#![allow(dead_code)] // each test target uses a different subset of helpers

use multlat::enumerate::{catalog, enumerate_multiplications, EnumerationJob};
use multlat::rings::ideal_lattice_zn;
use multlat::MultLattice;

pub const SMALL_CATALOG: [&str; 7] = ["c2", "c3", "c4", "c5", "b2", "m3", "n5"];

pub fn corpus() -> Vec<(String, MultLattice)> {
    let mut out = Vec::new();
    for (name, base) in catalog() {
        if base.n() > 5 {
            continue;
        }
        let job = EnumerationJob::new(base);
        for (i, m) in enumerate_multiplications(&job).unwrap().enumerate() {
            out.push((format!("{name}#{i}"), m));
        }
    }
    for n in 2u64..=60 {
        out.push((format!("Id(Z_{n})"), ideal_lattice_zn(n).unwrap()));
    }
    out
}

/// Naive generate-and-test enumeration: every symmetric table over the full
/// element range, validated from scratch. The only shortcut is checking the
/// cheap pointwise axioms (product below meet, top as identity) before the
/// full validator, which cannot change the accepted set.
pub fn naive_multiplications(base: &multlat::FiniteLattice) -> Vec<Vec<Vec<usize>>> {
    let n = base.n();
    let cells: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    let mut table = vec![vec![0usize; n]; n];
    fill(base, &cells, 0, &mut table, &mut out);
    out
}

fn fill(
    base: &multlat::FiniteLattice,
    cells: &[(usize, usize)],
    pos: usize,
    table: &mut Vec<Vec<usize>>,
    out: &mut Vec<Vec<Vec<usize>>>,
) {
    let n = base.n();
    if pos == cells.len() {
        for a in 0..n {
            if table[a][base.top()] != a {
                return;
            }
            for b in 0..n {
                if !base.leq(table[a][b], base.meet(a, b)) {
                    return;
                }
            }
        }
        if MultLattice::attach(base.clone(), table.clone()).is_ok() {
            out.push(table.clone());
        }
        return;
    }
    let (i, j) = cells[pos];
    for v in 0..n {
        table[i][j] = v;
        table[j][i] = v;
        fill(base, cells, pos + 1, table, out);
    }
}

pub fn table_of(m: &MultLattice) -> Vec<Vec<usize>> {
    let n = m.base().n();
    (0..n)
        .map(|a| (0..n).map(|b| m.mul(a, b)).collect())
        .collect()
}
