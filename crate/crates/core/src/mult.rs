//! Multiplications on finite lattices: axiom validation, residuals,
//! nilpotents, prime elements, and the zero-divisor set.

use crate::error::Error;
use crate::lattice::{ElementSet, FiniteLattice};

/// A finite lattice with a validated multiplication table.
///
/// The table satisfies, for all `a, b, c`:
///
/// 1. `a.b = b.a`
/// 2. `a.(b.c) = (a.b).c`
/// 3. `a.(b v c) = a.b v a.c` and `a.0 = 0`
/// 4. `a.b <= a ^ b`
/// 5. `a.1 = a`
///
/// Axiom 3 is stated for arbitrary joins; over a finite lattice it reduces to
/// the binary case plus the empty join `a.0 = 0`, by induction on family
/// size, and the validator checks exactly those two.
///
/// Every element of a finite lattice is compact, so 1-compactness, compact
/// generation, and multiplicative closure of the compact elements hold for
/// every value of this type; those notions have no runtime representation
/// here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultLattice {
    base: FiniteLattice,
    mult: Vec<Vec<usize>>,
}

/// Power chain data for one element: `a >= a^2 >= ...` stabilizes after at
/// most `n` steps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Nilpotence {
    /// Smallest `k >= 1` with `a^(k+1) = a^k`.
    pub stabilization_index: usize,
    /// The stable value `a^k`.
    pub stable_power: usize,
    /// Whether the stable value is bottom.
    pub nilpotent: bool,
}

/// The zero-divisor set of a multiplicative lattice.
///
/// `z_star` is the vertex set of the product graph; `z` adds bottom.
/// `z_downward_closed` is recorded separately: it always holds (from
/// `x <= a`, `a.y = 0` follows `x.y <= a.y = 0`), so a `false` here signals
/// an internal inconsistency rather than a property of the instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroDivisors {
    pub z_star: ElementSet,
    pub z: ElementSet,
    pub z_is_ideal: bool,
    pub z_downward_closed: bool,
}

impl MultLattice {
    /// Validates the table against axioms 1-5 and attaches it.
    ///
    /// On failure reports the first violated axiom with the lexicographically
    /// first witness tuple, by label.
    pub fn attach(base: FiniteLattice, mult: Vec<Vec<usize>>) -> Result<Self, Error> {
        let n = base.n();
        assert!(
            mult.len() == n
                && mult
                    .iter()
                    .all(|r| r.len() == n && r.iter().all(|&v| v < n))
        );
        let viol = |axiom: u8, ws: &[usize]| Error::AxiomViolation {
            axiom,
            witness: ws.iter().map(|&w| base.label(w).to_string()).collect(),
        };
        for a in 0..n {
            for b in 0..n {
                if mult[a][b] != mult[b][a] {
                    return Err(viol(1, &[a, b]));
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mult[a][mult[b][c]] != mult[mult[a][b]][c] {
                        return Err(viol(2, &[a, b, c]));
                    }
                }
            }
        }
        for a in 0..n {
            if mult[a][base.bottom()] != base.bottom() {
                return Err(viol(3, &[a, base.bottom()]));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let lhs = mult[a][base.join(b, c)];
                    let rhs = base.join(mult[a][b], mult[a][c]);
                    if lhs != rhs {
                        return Err(viol(3, &[a, b, c]));
                    }
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                if !base.leq(mult[a][b], base.meet(a, b)) {
                    return Err(viol(4, &[a, b]));
                }
            }
        }
        for a in 0..n {
            if mult[a][base.top()] != a {
                return Err(viol(5, &[a]));
            }
        }
        Ok(MultLattice { base, mult })
    }

    pub fn base(&self) -> &FiniteLattice {
        &self.base
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a][b]
    }

    /// The residual `(a : b) = v{ x | x.b <= a }`.
    ///
    /// Axiom 3 guarantees the adjunction `x.b <= a  <=>  x <= (a : b)`.
    pub fn residual(&self, a: usize, b: usize) -> usize {
        let r = self
            .base
            .join_of((0..self.base.n()).filter(|&x| self.base.leq(self.mult[x][b], a)));
        debug_assert!(self.base.leq(a, r));
        r
    }

    pub fn nilpotence(&self, a: usize) -> Nilpotence {
        let mut power = a;
        let mut idx = 1;
        loop {
            let next = self.mul(power, a);
            if next == power {
                break;
            }
            power = next;
            idx += 1;
        }
        Nilpotence {
            stabilization_index: idx,
            stable_power: power,
            nilpotent: power == self.base.bottom(),
        }
    }

    pub fn nil_set(&self) -> ElementSet {
        ElementSet::from_members(
            (0..self.base.n())
                .map(|a| self.nilpotence(a).nilpotent)
                .collect(),
        )
    }

    pub fn is_reduced(&self) -> bool {
        (0..self.base.n()).all(|a| !self.nilpotence(a).nilpotent || a == self.base.bottom())
    }

    /// `a* = v{ x | a^n . x = 0 for some n }`.
    ///
    /// Powers of `a` descend, so the existential over `n` is decided at the
    /// stable power.
    pub fn star(&self, a: usize) -> usize {
        let stable = self.nilpotence(a).stable_power;
        let bot = self.base.bottom();
        self.base
            .join_of((0..self.base.n()).filter(|&x| self.mult[stable][x] == bot))
    }

    fn is_prime_element(&self, p: usize) -> bool {
        if p == self.base.top() {
            return false;
        }
        let n = self.base.n();
        (0..n).all(|a| {
            (0..n).all(|b| {
                !self.base.leq(self.mult[a][b], p) || self.base.leq(a, p) || self.base.leq(b, p)
            })
        })
    }

    /// Elements `p != 1` with `a.b <= p  =>  a <= p or b <= p`.
    pub fn prime_elements(&self) -> ElementSet {
        ElementSet::from_members(
            (0..self.base.n())
                .map(|p| self.is_prime_element(p))
                .collect(),
        )
    }

    /// Prime elements minimal under the lattice order.
    pub fn minimal_prime_elements(&self) -> ElementSet {
        let primes = self.prime_elements();
        let minimal: Vec<bool> = (0..self.base.n())
            .map(|p| primes.contains(p) && !primes.iter().any(|q| self.base.lt(q, p)))
            .collect();
        ElementSet::from_members(minimal)
    }

    /// Minimality test for a prime element via annihilation: `p` is minimal
    /// iff for every `x <= p` there is `y` not below `p` with `x^n . y = 0`
    /// for some `n`. (In the finite case every element is compact.)
    ///
    /// Must agree with membership in `minimal_prime_elements` on every valid
    /// instance; the two routes are kept independent for cross-checking.
    pub fn minimal_prime_via_compact_test(&self, p: usize) -> Result<bool, Error> {
        if !self.is_prime_element(p) {
            return Err(Error::NotPrime(self.base.label(p).to_string()));
        }
        let n = self.base.n();
        let bot = self.base.bottom();
        Ok((0..n).filter(|&x| self.base.leq(x, p)).all(|x| {
            let stable = self.nilpotence(x).stable_power;
            (0..n).any(|y| !self.base.leq(y, p) && self.mult[stable][y] == bot)
        }))
    }

    /// Computes `Z(L)* = { x != 0 | x.y = 0 for some y != 0 }`, `Z(L)`, and
    /// whether `Z(L)` is an ideal.
    pub fn zero_divisors(&self) -> ZeroDivisors {
        let n = self.base.n();
        let bot = self.base.bottom();
        let z_star = ElementSet::from_members(
            (0..n)
                .map(|x| x != bot && (0..n).any(|y| y != bot && self.mult[x][y] == bot))
                .collect(),
        );
        let mut z = z_star.clone();
        z.insert(bot);
        let z_downward_closed = (0..n)
            .all(|x| (0..n).all(|a| !(z.contains(a) && self.base.leq(x, a)) || z.contains(x)));
        let join_closed = (0..n).all(|a| {
            (0..n).all(|b| !(z.contains(a) && z.contains(b)) || z.contains(self.base.join(a, b)))
        });
        ZeroDivisors {
            z_star,
            z,
            z_is_ideal: z_downward_closed && join_closed,
            z_downward_closed,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::{ideal_lattice_zn, with_meet_mult, with_trivial_mult};

    fn fig1() -> FiniteLattice {
        FiniteLattice::build(
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
        .unwrap()
    }

    fn diamond() -> FiniteLattice {
        FiniteLattice::build(
            &["0", "x", "y", "1"],
            &[("0", "x"), ("0", "y"), ("x", "1"), ("y", "1")],
        )
        .unwrap()
    }

    fn trivial_table(l: &FiniteLattice) -> Vec<Vec<usize>> {
        let n = l.n();
        (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| {
                        if a == l.top() {
                            b
                        } else if b == l.top() {
                            a
                        } else {
                            l.bottom()
                        }
                    })
                    .collect()
            })
            .collect()
    }

    #[test]
    fn fig1_trivial_mult_is_valid() {
        let l = fig1();
        let t = trivial_table(&l);
        assert!(MultLattice::attach(l, t).is_ok());
    }

    #[test]
    fn diamond_trivial_mult_violates_axiom_3() {
        let l = diamond();
        let t = trivial_table(&l);
        let err = MultLattice::attach(l, t).unwrap_err();
        assert_eq!(
            err,
            Error::AxiomViolation {
                axiom: 3,
                witness: vec!["x".into(), "x".into(), "y".into()]
            }
        );
    }

    #[test]
    fn meet_mult_on_distributive_lattice_is_valid() {
        let l = diamond();
        let n = l.n();
        let t: Vec<Vec<usize>> = (0..n)
            .map(|a| (0..n).map(|b| l.meet(a, b)).collect())
            .collect();
        assert!(MultLattice::attach(l, t).is_ok());
    }

    #[test]
    fn residual_examples() {
        let m = with_trivial_mult(&fig1()).unwrap();
        let l = m.base();
        let a = l.index_of("a").unwrap();
        let d = l.index_of("d").unwrap();
        // (0 : a) joins everything killed by a, which is all of 0,a,b,c,d
        assert_eq!(m.residual(l.bottom(), a), d);
        for x in 0..l.n() {
            assert_eq!(m.residual(x, l.top()), x);
        }

        let z12 = ideal_lattice_zn(12).unwrap();
        let l = z12.base();
        let i4 = l.index_of("(4)").unwrap();
        let i2 = l.index_of("(2)").unwrap();
        assert_eq!(l.label(z12.residual(i4, i2)), "(2)");
    }

    #[test]
    fn residual_adjunction() {
        for m in [
            with_trivial_mult(&fig1()).unwrap(),
            ideal_lattice_zn(12).unwrap(),
            ideal_lattice_zn(30).unwrap(),
        ] {
            let l = m.base();
            for a in 0..l.n() {
                for b in 0..l.n() {
                    let r = m.residual(a, b);
                    for x in 0..l.n() {
                        assert_eq!(l.leq(m.mul(x, b), a), l.leq(x, r));
                    }
                }
            }
        }
    }

    #[test]
    fn nilpotence_examples() {
        let z12 = ideal_lattice_zn(12).unwrap();
        let l = z12.base();
        let i6 = l.index_of("(6)").unwrap();
        let nil = z12.nilpotence(i6);
        assert!(nil.nilpotent);
        assert_eq!(nil.stabilization_index, 2);

        let bot = z12.nilpotence(l.bottom());
        assert!(bot.nilpotent);
        assert_eq!(bot.stabilization_index, 1);

        let m = with_trivial_mult(&fig1()).unwrap();
        let d = m.base().index_of("d").unwrap();
        assert!(m.nilpotence(d).nilpotent);
        assert!(!m.is_reduced());
    }

    #[test]
    fn reduced_examples() {
        assert!(ideal_lattice_zn(30).unwrap().is_reduced());
        let z12 = ideal_lattice_zn(12).unwrap();
        assert!(!z12.is_reduced());
        let nil: Vec<&str> = z12
            .nil_set()
            .indices()
            .iter()
            .map(|&i| z12.base().label(i))
            .collect();
        assert_eq!(nil, vec!["(6)", "(12)"]);
        // idempotent multiplication is always reduced
        let m = with_meet_mult(&diamond()).unwrap();
        assert!(m.is_reduced());
    }

    #[test]
    fn star_examples() {
        let z30 = ideal_lattice_zn(30).unwrap();
        let l = z30.base();
        let i6 = l.index_of("(6)").unwrap();
        assert_eq!(l.label(z30.star(i6)), "(5)");
        assert_eq!(z30.star(l.bottom()), l.top());

        let z12 = ideal_lattice_zn(12).unwrap();
        let l = z12.base();
        let i6 = l.index_of("(6)").unwrap();
        assert_eq!(z12.star(i6), l.top());
    }

    #[test]
    fn star_equals_annihilator_when_reduced() {
        for n in [6u64, 15, 30, 42] {
            let m = ideal_lattice_zn(n).unwrap();
            assert!(m.is_reduced());
            for a in 0..m.base().n() {
                assert_eq!(m.star(a), m.residual(m.base().bottom(), a));
            }
        }
    }

    #[test]
    fn prime_elements_examples() {
        let z30 = ideal_lattice_zn(30).unwrap();
        let l = z30.base();
        let labels = |s: &ElementSet| -> Vec<&str> {
            s.indices().iter().map(|&i| l.label(i)).collect::<Vec<_>>()
        };
        assert_eq!(labels(&z30.prime_elements()), vec!["(2)", "(3)", "(5)"]);
        assert_eq!(
            labels(&z30.minimal_prime_elements()),
            vec!["(2)", "(3)", "(5)"]
        );

        let z12 = ideal_lattice_zn(12).unwrap();
        let l = z12.base();
        let p: Vec<&str> = z12
            .prime_elements()
            .indices()
            .iter()
            .map(|&i| l.label(i))
            .collect();
        assert_eq!(p, vec!["(2)", "(3)"]);
    }

    #[test]
    fn compact_test_agrees_with_direct_minimality() {
        for m in [
            ideal_lattice_zn(12).unwrap(),
            ideal_lattice_zn(30).unwrap(),
            with_trivial_mult(&fig1()).unwrap(),
        ] {
            let primes = m.prime_elements();
            let minimal = m.minimal_prime_elements();
            for p in primes.iter() {
                assert_eq!(
                    m.minimal_prime_via_compact_test(p).unwrap(),
                    minimal.contains(p)
                );
            }
        }
    }

    #[test]
    fn compact_test_rejects_non_prime() {
        let z12 = ideal_lattice_zn(12).unwrap();
        let i6 = z12.base().index_of("(6)").unwrap();
        assert_eq!(
            z12.minimal_prime_via_compact_test(i6),
            Err(Error::NotPrime("(6)".into()))
        );
    }

    #[test]
    fn zero_divisor_examples() {
        let z12 = ideal_lattice_zn(12).unwrap();
        let l = z12.base();
        let zd = z12.zero_divisors();
        let labels: Vec<&str> = zd.z_star.indices().iter().map(|&i| l.label(i)).collect();
        assert_eq!(labels, vec!["(2)", "(3)", "(4)", "(6)"]);
        assert!(zd.z_downward_closed);
        assert!(!zd.z_is_ideal); // (2) v (3) = (1) escapes

        let z7 = ideal_lattice_zn(7).unwrap();
        let zd = z7.zero_divisors();
        assert!(zd.z_star.is_empty());
        assert_eq!(zd.z.indices(), vec![z7.base().bottom()]);
        assert!(zd.z_is_ideal);

        let m = with_trivial_mult(&fig1()).unwrap();
        let zd = m.zero_divisors();
        assert_eq!(zd.z_star.count(), 4);
        assert!(zd.z_is_ideal);
    }

    #[test]
    fn reduced_iff_product_zero_matches_meet_zero() {
        for n in [12u64, 30, 8, 21] {
            let m = ideal_lattice_zn(n).unwrap();
            let l = m.base();
            let bot = l.bottom();
            let all_match = (0..l.n())
                .all(|a| (0..l.n()).all(|b| (m.mul(a, b) == bot) == (l.meet(a, b) == bot)));
            assert_eq!(m.is_reduced(), all_match);
        }
    }
}
