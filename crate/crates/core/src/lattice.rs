//! Finite bounded lattices: order matrix, derived meet/join tables, and the
//! order-theoretic predicates (ideals, prime ideals, 0-distributivity) that
//! the rest of the crate builds on.

use crate::error::Error;

/// A finite bounded lattice over indexed, labeled elements.
///
/// The order is an explicit `n x n` relation matrix; the meet and join tables
/// are derived at construction time, and construction fails unless every pair
/// has a unique greatest lower bound and least upper bound and global bounds
/// exist. Every `FiniteLattice` value is therefore a genuine bounded lattice.
///
/// Values are immutable after construction; all operations are pure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteLattice {
    labels: Vec<String>,
    leq: Vec<Vec<bool>>,
    meet_table: Vec<Vec<usize>>,
    join_table: Vec<Vec<usize>>,
    bottom: usize,
    top: usize,
}

/// A subset of lattice elements as a membership vector.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ElementSet {
    members: Vec<bool>,
}

impl ElementSet {
    pub fn empty(n: usize) -> Self {
        ElementSet {
            members: vec![false; n],
        }
    }

    pub fn from_indices(n: usize, indices: &[usize]) -> Self {
        let mut members = vec![false; n];
        for &i in indices {
            members[i] = true;
        }
        ElementSet { members }
    }

    pub fn from_members(members: Vec<bool>) -> Self {
        ElementSet { members }
    }

    pub fn universe_len(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members[i]
    }

    pub fn insert(&mut self, i: usize) {
        self.members[i] = true;
    }

    pub fn count(&self) -> usize {
        self.members.iter().filter(|&&m| m).count()
    }

    pub fn is_empty(&self) -> bool {
        self.members.iter().all(|&m| !m)
    }

    /// Member indices in ascending order.
    pub fn indices(&self) -> Vec<usize> {
        (0..self.members.len())
            .filter(|&i| self.members[i])
            .collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.members.len()).filter(move |&i| self.members[i])
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        ElementSet {
            members: self
                .members
                .iter()
                .zip(&other.members)
                .map(|(&a, &b)| a && b)
                .collect(),
        }
    }

    pub fn is_subset_of(&self, other: &ElementSet) -> bool {
        self.members
            .iter()
            .zip(&other.members)
            .all(|(&a, &b)| !a || b)
    }
}

/// Classification flags for a nonempty subset, per the standard definitions:
/// a semi-ideal is downward closed, an ideal is additionally join closed, a
/// prime (semi-)ideal is proper with `a ^ b in I => a in I or b in I`, a
/// semiprime ideal satisfies `a^b, a^c in I => a^(b v c) in I`, and a filter
/// is the order dual of an ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubsetFlags {
    pub semi_ideal: bool,
    pub ideal: bool,
    pub prime_ideal: bool,
    pub prime_semi_ideal: bool,
    pub semiprime_ideal: bool,
    pub filter: bool,
    pub maximal_filter: bool,
}

/// Result of a prime-ideal search, recording whether the full subset
/// enumeration ran or the principal-ideal fallback was used.
///
/// In a finite lattice every ideal is principal (`I = (vI]`), so the fallback
/// loses nothing for ideals; the flag exists so callers can surface which
/// path ran.
#[derive(Debug, Clone)]
pub struct PrimeIdealSearch {
    pub ideals: Vec<ElementSet>,
    pub exhaustive: bool,
}

/// Default cap on full subset enumeration for prime-ideal search.
pub const SUBSET_ENUM_CAP: usize = 20;

impl FiniteLattice {
    /// Builds a lattice from labels and declared `a < b` relations.
    ///
    /// The order is the reflexive-transitive closure of the declared pairs,
    /// which may be covers or any generating relations.
    pub fn build(labels: &[&str], relations: &[(&str, &str)]) -> Result<Self, Error> {
        if labels.is_empty() {
            return Err(Error::EmptyLattice);
        }
        let n = labels.len();
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::DuplicateLabel(l.to_string()));
            }
        }
        let index = |l: &str| -> Result<usize, Error> {
            labels
                .iter()
                .position(|x| *x == l)
                .ok_or_else(|| Error::UnknownLabel(l.to_string()))
        };
        let mut leq = vec![vec![false; n]; n];
        for i in 0..n {
            leq[i][i] = true;
        }
        for (a, b) in relations {
            leq[index(a)?][index(b)?] = true;
        }
        // reflexive-transitive closure
        for k in 0..n {
            for i in 0..n {
                if leq[i][k] {
                    for j in 0..n {
                        if leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        Self::from_leq(labels.iter().map(|s| s.to_string()).collect(), leq)
    }

    /// Builds a lattice from a complete order matrix (already reflexive and
    /// transitive). Validates antisymmetry, bounds, and the lattice property.
    pub fn from_leq(labels: Vec<String>, leq: Vec<Vec<bool>>) -> Result<Self, Error> {
        if labels.is_empty() {
            return Err(Error::EmptyLattice);
        }
        let n = labels.len();
        assert!(leq.len() == n && leq.iter().all(|r| r.len() == n));
        for a in 0..n {
            for b in 0..n {
                if a != b && leq[a][b] && leq[b][a] {
                    return Err(Error::NotAPartialOrder {
                        a: labels[a].clone(),
                        b: labels[b].clone(),
                    });
                }
            }
        }
        let bottom = (0..n).find(|&i| (0..n).all(|j| leq[i][j]));
        let top = (0..n).find(|&i| (0..n).all(|j| leq[j][i]));
        let (bottom, top) = match (bottom, top) {
            (Some(b), Some(t)) => (b, t),
            _ => return Err(Error::NoBounds),
        };

        let mut meet_table = vec![vec![0usize; n]; n];
        let mut join_table = vec![vec![0usize; n]; n];
        for a in 0..n {
            for b in 0..n {
                let lows: Vec<usize> = (0..n).filter(|&x| leq[x][a] && leq[x][b]).collect();
                let glb = lows
                    .iter()
                    .copied()
                    .find(|&m| lows.iter().all(|&x| leq[x][m]));
                match glb {
                    Some(m) => meet_table[a][b] = m,
                    None => {
                        return Err(Error::NotALattice {
                            a: labels[a].clone(),
                            b: labels[b].clone(),
                            which: "meet",
                        })
                    }
                }
                let ups: Vec<usize> = (0..n).filter(|&x| leq[a][x] && leq[b][x]).collect();
                let lub = ups
                    .iter()
                    .copied()
                    .find(|&j| ups.iter().all(|&x| leq[j][x]));
                match lub {
                    Some(j) => join_table[a][b] = j,
                    None => {
                        return Err(Error::NotALattice {
                            a: labels[a].clone(),
                            b: labels[b].clone(),
                            which: "join",
                        })
                    }
                }
            }
        }

        let lat = FiniteLattice {
            labels,
            leq,
            meet_table,
            join_table,
            bottom,
            top,
        };
        // Absorption and order/table coherence hold by construction of the
        // glb/lub tables; keep them as debug checks.
        debug_assert!(lat.absorption_holds());
        debug_assert!(lat.order_coherent());
        Ok(lat)
    }

    fn absorption_holds(&self) -> bool {
        let n = self.n();
        (0..n).all(|a| {
            (0..n).all(|b| self.meet(a, self.join(a, b)) == a && self.join(a, self.meet(a, b)) == a)
        })
    }

    fn order_coherent(&self) -> bool {
        let n = self.n();
        (0..n).all(|a| {
            (0..n).all(|b| {
                (self.leq(a, b) == (self.meet(a, b) == a))
                    && (self.leq(a, b) == (self.join(a, b) == b))
            })
        })
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq[a][b]
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet_table[a][b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join_table[a][b]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    /// Join of an arbitrary element collection; the empty join is bottom.
    pub fn join_of(&self, items: impl IntoIterator<Item = usize>) -> usize {
        items
            .into_iter()
            .fold(self.bottom, |acc, x| self.join(acc, x))
    }

    /// Meet of an arbitrary element collection; the empty meet is top.
    pub fn meet_of(&self, items: impl IntoIterator<Item = usize>) -> usize {
        items.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    /// True iff `b` covers `a` (a < b with nothing strictly between).
    pub fn is_cover(&self, a: usize, b: usize) -> bool {
        self.lt(a, b) && !(0..self.n()).any(|c| self.lt(a, c) && self.lt(c, b))
    }

    /// The elements covering bottom.
    pub fn atoms(&self) -> ElementSet {
        let mut s = ElementSet::empty(self.n());
        for x in 0..self.n() {
            if self.is_cover(self.bottom, x) {
                s.insert(x);
            }
        }
        s
    }

    /// The lower covers of top (coatoms).
    pub fn coatoms(&self) -> ElementSet {
        let mut s = ElementSet::empty(self.n());
        for x in 0..self.n() {
            if self.is_cover(x, self.top) {
                s.insert(x);
            }
        }
        s
    }

    /// Principal ideal `(a] = { x | x <= a }`.
    pub fn principal_ideal(&self, a: usize) -> ElementSet {
        ElementSet::from_members((0..self.n()).map(|x| self.leq(x, a)).collect())
    }

    /// Principal filter `[a) = { x | a <= x }`.
    pub fn principal_filter(&self, a: usize) -> ElementSet {
        ElementSet::from_members((0..self.n()).map(|x| self.leq(a, x)).collect())
    }

    /// Classifies a nonempty subset by direct quantifier evaluation.
    pub fn classify_subset(&self, s: &ElementSet) -> Result<SubsetFlags, Error> {
        assert_eq!(s.universe_len(), self.n());
        if s.is_empty() {
            return Err(Error::EmptySubset);
        }
        let n = self.n();
        let proper = s.count() < n;

        let semi_ideal =
            (0..n).all(|x| (0..n).all(|a| !(s.contains(a) && self.leq(x, a)) || s.contains(x)));
        let join_closed = (0..n).all(|a| {
            (0..n).all(|b| !(s.contains(a) && s.contains(b)) || s.contains(self.join(a, b)))
        });
        let ideal = semi_ideal && join_closed;

        let prime_condition = (0..n).all(|a| {
            (0..n).all(|b| !s.contains(self.meet(a, b)) || s.contains(a) || s.contains(b))
        });
        let prime_ideal = ideal && proper && prime_condition;
        let prime_semi_ideal = semi_ideal && proper && prime_condition;

        let semiprime_ideal = ideal
            && (0..n).all(|a| {
                (0..n).all(|b| {
                    (0..n).all(|c| {
                        !(s.contains(self.meet(a, b)) && s.contains(self.meet(a, c)))
                            || s.contains(self.meet(a, self.join(b, c)))
                    })
                })
            });

        let up_closed =
            (0..n).all(|x| (0..n).all(|a| !(s.contains(a) && self.leq(a, x)) || s.contains(x)));
        let meet_closed = (0..n).all(|a| {
            (0..n).all(|b| !(s.contains(a) && s.contains(b)) || s.contains(self.meet(a, b)))
        });
        let filter = up_closed && meet_closed;

        // Maximal among proper filters: adjoining any outside element must
        // generate an improper filter (one containing bottom).
        let maximal_filter = filter
            && proper
            && (0..n)
                .all(|x| s.contains(x) || self.filter_closure_with(s, x).contains(self.bottom));

        Ok(SubsetFlags {
            semi_ideal,
            ideal,
            prime_ideal,
            prime_semi_ideal,
            semiprime_ideal,
            filter,
            maximal_filter,
        })
    }

    /// Smallest filter containing `s` and `extra` (fixpoint of meet closure
    /// and upward closure).
    fn filter_closure_with(&self, s: &ElementSet, extra: usize) -> ElementSet {
        let n = self.n();
        let mut f = s.clone();
        f.insert(extra);
        loop {
            let mut changed = false;
            for a in f.indices() {
                for b in f.indices() {
                    let m = self.meet(a, b);
                    if !f.contains(m) {
                        f.insert(m);
                        changed = true;
                    }
                }
                for x in 0..n {
                    if self.leq(a, x) && !f.contains(x) {
                        f.insert(x);
                        changed = true;
                    }
                }
            }
            if !changed {
                return f;
            }
        }
    }

    /// `a ^ b = 0 = a ^ c  =>  a ^ (b v c) = 0` for all triples.
    pub fn is_0_distributive(&self) -> bool {
        self.zero_distributive_witness().is_none()
    }

    /// First triple violating 0-distributivity, if any (lexicographic order).
    pub fn zero_distributive_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.n();
        let bot = self.bottom;
        for a in 0..n {
            for b in 0..n {
                if self.meet(a, b) != bot {
                    continue;
                }
                for c in 0..n {
                    if self.meet(a, c) == bot && self.meet(a, self.join(b, c)) != bot {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    /// Meet distributes over binary joins. Returns the first violating
    /// triple, if any.
    pub fn distributive_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.n();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let lhs = self.meet(a, self.join(b, c));
                    let rhs = self.join(self.meet(a, b), self.meet(a, c));
                    if lhs != rhs {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn is_distributive(&self) -> bool {
        self.distributive_witness().is_none()
    }

    /// Inclusion-minimal prime ideals, with the default enumeration cap.
    pub fn minimal_prime_ideals(&self) -> Vec<ElementSet> {
        self.minimal_prime_ideals_capped(SUBSET_ENUM_CAP).ideals
    }

    /// Inclusion-minimal prime ideals. Up to `cap` elements the search
    /// enumerates all subsets; beyond that it restricts to principal ideals
    /// `(p]` with `p` meet-prime (exact for ideals of a finite lattice, since
    /// every ideal is principal).
    pub fn minimal_prime_ideals_capped(&self, cap: usize) -> PrimeIdealSearch {
        let n = self.n();
        if n <= cap && n < 63 {
            PrimeIdealSearch {
                ideals: self.minimal_by_inclusion(self.enumerate_prime_subsets(true)),
                exhaustive: true,
            }
        } else {
            let mut primes = Vec::new();
            for p in 0..n {
                let s = self.principal_ideal(p);
                if self
                    .classify_subset(&s)
                    .map(|f| f.prime_ideal)
                    .unwrap_or(false)
                {
                    primes.push(s);
                }
            }
            PrimeIdealSearch {
                ideals: self.minimal_by_inclusion(primes),
                exhaustive: false,
            }
        }
    }

    /// Inclusion-minimal prime semi-ideals by full subset enumeration, or
    /// `None` when `n` exceeds `cap` (semi-ideals need not be principal, so
    /// there is no exact fallback).
    pub fn minimal_prime_semi_ideals(&self, cap: usize) -> Option<Vec<ElementSet>> {
        if self.n() > cap || self.n() >= 63 {
            return None;
        }
        Some(self.minimal_by_inclusion(self.enumerate_prime_subsets(false)))
    }

    /// All prime ideals (`require_join_closed`) or prime semi-ideals as
    /// bitmask-backed subsets.
    fn enumerate_prime_subsets(&self, require_join_closed: bool) -> Vec<ElementSet> {
        let n = self.n();
        let down: Vec<u64> = (0..n)
            .map(|a| {
                (0..n)
                    .filter(|&x| self.leq(x, a))
                    .fold(0u64, |m, x| m | (1 << x))
            })
            .collect();
        let full: u64 = if n == 64 { !0 } else { (1u64 << n) - 1 };
        let mut out = Vec::new();
        'mask: for mask in 1..full {
            // downward closed
            for a in 0..n {
                if mask & (1 << a) != 0 && down[a] & !mask != 0 {
                    continue 'mask;
                }
            }
            for a in 0..n {
                if mask & (1 << a) == 0 {
                    continue;
                }
                for b in a..n {
                    if mask & (1 << b) == 0 {
                        continue;
                    }
                    if require_join_closed && mask & (1 << self.join(a, b)) == 0 {
                        continue 'mask;
                    }
                }
            }
            // prime: meets of two outside elements stay outside
            for a in 0..n {
                if mask & (1 << a) != 0 {
                    continue;
                }
                for b in a..n {
                    if mask & (1 << b) == 0 && mask & (1 << self.meet(a, b)) != 0 {
                        continue 'mask;
                    }
                }
            }
            out.push(ElementSet::from_members(
                (0..n).map(|i| mask & (1 << i) != 0).collect(),
            ));
        }
        out
    }

    /// Keeps the inclusion-minimal sets, sorted lexicographically by
    /// membership vector for reproducible output.
    fn minimal_by_inclusion(&self, sets: Vec<ElementSet>) -> Vec<ElementSet> {
        let mut minimal: Vec<ElementSet> = sets
            .iter()
            .filter(|s| !sets.iter().any(|t| *t != **s && t.is_subset_of(s)))
            .cloned()
            .collect();
        minimal.sort();
        minimal.dedup();
        minimal
    }
}
