//! Concrete multiplicative-lattice instances: ideal lattices of Z_n, finite
//! products, trivial and meet multiplications.
//!
//! `ideal_lattice_zn` realizes the ideals of Z_n as the divisor lattice:
//! one element per positive divisor `d` (the ideal generated by `d`), with
//! `(d) <= (e)` iff `e | d`, bottom `(n)` as the zero ideal, top `(1)`, and
//! ideal product `(d)(e) = (gcd(d*e, n))`.

use crate::error::Error;
use crate::lattice::FiniteLattice;
use crate::mult::MultLattice;

pub const MAX_MODULUS: u64 = 1_000_000;
pub const MAX_DIVISORS: usize = 128;

/// A direct product of rings Z_m, one modulus per factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingSpec {
    pub moduli: Vec<u64>,
}

impl RingSpec {
    pub fn new(moduli: Vec<u64>) -> Self {
        assert!(!moduli.is_empty());
        RingSpec { moduli }
    }

    /// The ideal lattice of the product ring, built by iterated binary
    /// product of the factor lattices.
    pub fn build(&self) -> Result<MultLattice, Error> {
        let mut it = self.moduli.iter();
        let mut acc = ideal_lattice_zn(*it.next().expect("nonempty moduli"))?;
        for &m in it {
            acc = product(&acc, &ideal_lattice_zn(m)?);
        }
        Ok(acc)
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The ideal lattice of Z_n with its ideal multiplication.
pub fn ideal_lattice_zn(n: u64) -> Result<MultLattice, Error> {
    if !(2..=MAX_MODULUS).contains(&n) {
        return Err(Error::InvalidModulus(n));
    }
    let divisors: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
    if divisors.len() > MAX_DIVISORS {
        return Err(Error::CapExceeded {
            what: "divisor count",
            size: divisors.len(),
            cap: MAX_DIVISORS,
        });
    }
    let labels: Vec<String> = divisors.iter().map(|d| format!("({d})")).collect();
    let leq: Vec<Vec<bool>> = divisors
        .iter()
        .map(|&d| divisors.iter().map(|&e| d % e == 0).collect())
        .collect();
    let base = FiniteLattice::from_leq(labels, leq).expect("divisor lattice is a lattice");
    let index_of = |v: u64| divisors.iter().position(|&d| d == v).expect("divides n");
    let table: Vec<Vec<usize>> = divisors
        .iter()
        .map(|&d| divisors.iter().map(|&e| index_of(gcd(d * e, n))).collect())
        .collect();
    Ok(MultLattice::attach(base, table).expect("ideal multiplication satisfies the axioms"))
}

/// Componentwise product of two multiplicative lattices; mirrors
/// `Id(R1 x R2) = Id(R1) x Id(R2)`.
pub fn product(m1: &MultLattice, m2: &MultLattice) -> MultLattice {
    let (l1, l2) = (m1.base(), m2.base());
    let (n1, n2) = (l1.n(), l2.n());
    let pair = |i: usize| (i / n2, i % n2);
    let n = n1 * n2;
    let labels: Vec<String> = (0..n)
        .map(|i| {
            let (a, b) = pair(i);
            format!("({},{})", l1.label(a), l2.label(b))
        })
        .collect();
    let leq: Vec<Vec<bool>> = (0..n)
        .map(|i| {
            let (a1, a2) = pair(i);
            (0..n)
                .map(|j| {
                    let (b1, b2) = pair(j);
                    l1.leq(a1, b1) && l2.leq(a2, b2)
                })
                .collect()
        })
        .collect();
    let base = FiniteLattice::from_leq(labels, leq).expect("product of lattices is a lattice");
    let table: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            let (a1, a2) = pair(i);
            (0..n)
                .map(|j| {
                    let (b1, b2) = pair(j);
                    m1.mul(a1, b1) * n2 + m2.mul(a2, b2)
                })
                .collect()
        })
        .collect();
    MultLattice::attach(base, table).expect("componentwise multiplication satisfies the axioms")
}

/// The trivial multiplication `x.y = 0` for `x, y != 1`, `x.1 = x`.
///
/// Valid exactly when no two proper elements join to top (for `n >= 2`:
/// top has a unique lower cover). Fails with the witness pair otherwise.
pub fn with_trivial_mult(l: &FiniteLattice) -> Result<MultLattice, Error> {
    let n = l.n();
    let top = l.top();
    for a in 0..n {
        for b in 0..n {
            if a != top && b != top && l.join(a, b) == top {
                return Err(Error::TopJoinReducible {
                    a: l.label(a).to_string(),
                    b: l.label(b).to_string(),
                });
            }
        }
    }
    let table: Vec<Vec<usize>> = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| {
                    if a == top {
                        b
                    } else if b == top {
                        a
                    } else {
                        l.bottom()
                    }
                })
                .collect()
        })
        .collect();
    Ok(MultLattice::attach(l.clone(), table)
        .expect("trivial multiplication is valid when top is join-irreducible"))
}

/// Multiplication by meet. Valid exactly on distributive lattices; always
/// reduced (the multiplication is idempotent).
pub fn with_meet_mult(l: &FiniteLattice) -> Result<MultLattice, Error> {
    if let Some((a, b, c)) = l.distributive_witness() {
        return Err(Error::NotDistributive {
            a: l.label(a).to_string(),
            b: l.label(b).to_string(),
            c: l.label(c).to_string(),
        });
    }
    let n = l.n();
    let table: Vec<Vec<usize>> = (0..n)
        .map(|a| (0..n).map(|b| l.meet(a, b)).collect())
        .collect();
    Ok(MultLattice::attach(l.clone(), table)
        .expect("meet multiplication is valid on a distributive lattice"))
}

/// Annihilator of `a`: the residual `(0 : a)`.
pub fn annihilator(m: &MultLattice, a: usize) -> usize {
    m.residual(m.base().bottom(), a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zdg::gamma_mult;

    #[test]
    fn z12_structure() {
        let m = ideal_lattice_zn(12).unwrap();
        let l = m.base();
        assert_eq!(l.n(), 6);
        assert_eq!(l.label(l.bottom()), "(12)");
        assert_eq!(l.label(l.top()), "(1)");
        let i6 = l.index_of("(6)").unwrap();
        let i2 = l.index_of("(2)").unwrap();
        assert_eq!(l.label(m.mul(i6, i2)), "(12)");
        assert!(!m.is_reduced());
        let g = gamma_mult(&m, l.bottom());
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn prime_modulus_gives_two_element_chain() {
        let m = ideal_lattice_zn(7).unwrap();
        assert_eq!(m.base().n(), 2);
        assert_eq!(gamma_mult(&m, m.base().bottom()).vertex_count(), 0);
    }

    #[test]
    fn z30_is_reduced_with_three_minimal_primes() {
        let m = ideal_lattice_zn(30).unwrap();
        assert!(m.is_reduced());
        let l = m.base();
        let mins: Vec<&str> = m
            .minimal_prime_elements()
            .indices()
            .iter()
            .map(|&i| l.label(i))
            .collect();
        assert_eq!(mins, vec!["(2)", "(3)", "(5)"]);
        let g = gamma_mult(&m, l.bottom());
        // triangle (6)-(10)-(15)
        let pos = |s: &str| g.labels().iter().position(|x| x == s).unwrap();
        assert!(g.adjacent(pos("(6)"), pos("(10)")));
        assert!(g.adjacent(pos("(6)"), pos("(15)")));
        assert!(g.adjacent(pos("(10)"), pos("(15)")));
    }

    #[test]
    fn reduced_iff_squarefree() {
        for n in 2u64..=80 {
            let m = ideal_lattice_zn(n).unwrap();
            let squarefree = (2..=n).all(|d| d * d > n || n % (d * d) != 0);
            assert_eq!(m.is_reduced(), squarefree, "modulus {n}");
        }
    }

    #[test]
    fn minimal_primes_are_prime_factors() {
        for n in [12u64, 30, 60, 16, 97] {
            let m = ideal_lattice_zn(n).unwrap();
            let l = m.base();
            let mut expect: Vec<String> = (2..=n)
                .filter(|&p| n % p == 0 && (2..p).all(|q| p % q != 0))
                .map(|p| format!("({p})"))
                .collect();
            expect.sort();
            let mut got: Vec<String> = m
                .minimal_prime_elements()
                .indices()
                .iter()
                .map(|&i| l.label(i).to_string())
                .collect();
            got.sort();
            assert_eq!(got, expect, "modulus {n}");
        }
    }

    #[test]
    fn modulus_guards() {
        assert_eq!(ideal_lattice_zn(1), Err(Error::InvalidModulus(1)));
        assert_eq!(ideal_lattice_zn(0), Err(Error::InvalidModulus(0)));
        assert!(matches!(
            ideal_lattice_zn(MAX_MODULUS + 1),
            Err(Error::InvalidModulus(_))
        ));
        // 720720 has 240 divisors
        assert!(matches!(
            ideal_lattice_zn(720_720),
            Err(Error::InvalidModulus(_)) | Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn product_of_z2_z2() {
        let z2 = ideal_lattice_zn(2).unwrap();
        let m = product(&z2, &z2);
        let l = m.base();
        assert_eq!(l.n(), 4);
        let g = gamma_mult(&m, l.bottom());
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(m.minimal_prime_elements().count(), 2);
    }

    #[test]
    fn product_with_singleton_is_isomorphic() {
        let one = FiniteLattice::build(&["0"], &[]).unwrap();
        let table = vec![vec![0]];
        let one = MultLattice::attach(one, table).unwrap();
        let z6 = ideal_lattice_zn(6).unwrap();
        let p = product(&z6, &one);
        assert_eq!(p.base().n(), z6.base().n());
        for a in 0..z6.base().n() {
            for b in 0..z6.base().n() {
                assert_eq!(p.mul(a, b), z6.mul(a, b));
                assert_eq!(p.base().leq(a, b), z6.base().leq(a, b));
            }
        }
    }

    #[test]
    fn triple_product_of_z2_has_triangle() {
        let z2 = ideal_lattice_zn(2).unwrap();
        let m = product(&product(&z2, &z2), &z2);
        assert_eq!(m.minimal_prime_elements().count(), 3);
        let g = gamma_mult(&m, m.base().bottom());
        let atoms = m.base().atoms();
        let verts = g.vertex_elements();
        // the three atoms pairwise multiply to bottom
        let aidx: Vec<usize> = atoms.indices();
        assert_eq!(aidx.len(), 3);
        for &a in &aidx {
            for &b in &aidx {
                if a != b {
                    assert_eq!(m.mul(a, b), m.base().bottom());
                }
            }
        }
        assert!(aidx.iter().all(|a| verts.contains(a)));
    }

    #[test]
    fn product_preserves_reducedness() {
        let cases = [(2u64, 3u64), (4, 3), (2, 4), (4, 4), (30, 7), (12, 30)];
        for (a, b) in cases {
            let ma = ideal_lattice_zn(a).unwrap();
            let mb = ideal_lattice_zn(b).unwrap();
            let p = product(&ma, &mb);
            assert_eq!(p.is_reduced(), ma.is_reduced() && mb.is_reduced());
        }
    }

    #[test]
    fn trivial_mult_preconditions() {
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
        assert!(with_trivial_mult(&fig1).is_ok());

        let diamond = FiniteLattice::build(
            &["0", "x", "y", "1"],
            &[("0", "x"), ("0", "y"), ("x", "1"), ("y", "1")],
        )
        .unwrap();
        assert_eq!(
            with_trivial_mult(&diamond),
            Err(Error::TopJoinReducible {
                a: "x".into(),
                b: "y".into()
            })
        );

        let c2 = FiniteLattice::build(&["0", "1"], &[("0", "1")]).unwrap();
        let m = with_trivial_mult(&c2).unwrap();
        // coincides with meet here
        for a in 0..2 {
            for b in 0..2 {
                assert_eq!(m.mul(a, b), m.base().meet(a, b));
            }
        }
    }

    #[test]
    fn meet_mult_preconditions() {
        let n5 = FiniteLattice::build(
            &["0", "p", "q", "r", "1"],
            &[("0", "p"), ("p", "q"), ("q", "1"), ("0", "r"), ("r", "1")],
        )
        .unwrap();
        assert!(matches!(
            with_meet_mult(&n5),
            Err(Error::NotDistributive { .. })
        ));

        let c4 = FiniteLattice::build(&["0", "a", "b", "1"], &[("0", "a"), ("a", "b"), ("b", "1")])
            .unwrap();
        let m = with_meet_mult(&c4).unwrap();
        assert!(m.is_reduced());
        assert_eq!(gamma_mult(&m, m.base().bottom()).vertex_count(), 0);
    }

    #[test]
    fn annihilator_examples() {
        let z12 = ideal_lattice_zn(12).unwrap();
        let l = z12.base();
        let i2 = l.index_of("(2)").unwrap();
        assert_eq!(l.label(annihilator(&z12, i2)), "(6)");
        assert_eq!(annihilator(&z12, l.top()), l.bottom());

        let z30 = ideal_lattice_zn(30).unwrap();
        let i6 = z30.base().index_of("(6)").unwrap();
        assert_eq!(z30.base().label(annihilator(&z30, i6)), "(5)");
    }

    #[test]
    fn zero_divisors_are_elements_with_nonzero_annihilator() {
        for n in [12u64, 30, 16] {
            let m = ideal_lattice_zn(n).unwrap();
            let l = m.base();
            let zd = m.zero_divisors();
            for a in 0..l.n() {
                let in_zstar = a != l.bottom() && annihilator(&m, a) != l.bottom();
                assert_eq!(zd.z_star.contains(a), in_zstar);
            }
        }
    }
}
