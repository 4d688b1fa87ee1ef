//! Brute-force tools for small finite abelian groups given by a
//! multiplication closure: generated subgroups, element orders, invariant
//! factors and subgroup enumeration.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;

/// Isomorphism type of a finite abelian group as invariant factors
/// `d1, d2, ...` with each `d(i+1)` dividing `d(i)` and every `di > 1`.
/// The trivial group has no factors.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupStructure {
    factors: Vec<u32>,
}

impl GroupStructure {
    pub fn trivial() -> Self {
        GroupStructure { factors: Vec::new() }
    }

    pub fn cyclic(k: u32) -> Self {
        Self::from_factors(&[k])
    }

    /// `Z_a x Z_b`, normalized into invariant-factor form.
    pub fn product(a: u32, b: u32) -> Self {
        Self::from_factors(&[a, b])
    }

    /// Normalizes any list of cyclic orders into invariant-factor form.
    pub fn from_factors(orders: &[u32]) -> Self {
        let mut factors: Vec<u32> = orders.iter().copied().filter(|&k| k > 1).collect();
        // repeatedly replace (a, b) by (lcm, gcd) until the divisibility chain holds
        let len = factors.len();
        for i in 0..len {
            for j in i + 1..len {
                let (a, b) = (factors[i], factors[j]);
                factors[i] = a.lcm(&b);
                factors[j] = a.gcd(&b);
            }
        }
        factors.retain(|&k| k > 1);
        GroupStructure { factors }
    }

    pub fn factors(&self) -> &[u32] {
        &self.factors
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().map(|&k| u64::from(k)).product()
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn is_cyclic(&self) -> bool {
        self.factors.len() <= 1
    }

    /// Number of `x` with `x^d = 1` in a group of this type.
    pub fn count_killed_by(&self, d: u64) -> u64 {
        self.factors.iter().map(|&k| d.gcd(&u64::from(k))).product()
    }
}

impl fmt::Display for GroupStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (i, k) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" x ")?;
            }
            write!(f, "Z_{k}")?;
        }
        Ok(())
    }
}

/// A finite abelian group presented by its identity and multiplication.
pub struct Presentation<T, F> {
    pub identity: T,
    pub op: F,
}

impl<T, F> Presentation<T, F>
where
    T: Copy + Ord,
    F: Fn(T, T) -> T,
{
    pub fn new(identity: T, op: F) -> Self {
        Presentation { identity, op }
    }

    pub fn pow(&self, x: T, k: u64) -> T {
        (0..k).fold(self.identity, |acc, _| (self.op)(acc, x))
    }

    pub fn order_of(&self, x: T) -> u64 {
        let mut k = 1;
        let mut y = x;
        while y != self.identity {
            y = (self.op)(y, x);
            k += 1;
        }
        k
    }

    /// Subgroup generated by `gens`.
    pub fn closure(&self, gens: &[T]) -> BTreeSet<T> {
        let mut seen = BTreeSet::from([self.identity]);
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = (self.op)(x, g);
                if seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    /// Invariant factors of the group formed by `elements`, read off from the
    /// counts `#{x : x^(p^k) = 1}` for each prime `p`.
    pub fn structure(&self, elements: &BTreeSet<T>) -> GroupStructure {
        let order = elements.len() as u64;
        let mut primary: Vec<Vec<u64>> = Vec::new();
        for p in prime_factors(order) {
            // exps[k] = log_p #{x : x^(p^k) = 1}
            let mut exps = vec![0u32];
            let mut pk = 1u64;
            loop {
                pk *= p;
                let count = elements.iter().filter(|&&x| self.pow(x, pk) == self.identity).count() as u64;
                let e = log_exact(count, p);
                if e == *exps.last().unwrap() {
                    break;
                }
                exps.push(e);
            }
            // number of cyclic p-factors of size >= p^k is exps[k] - exps[k-1]
            let mut sizes = Vec::new();
            for k in 1..exps.len() {
                let at_least = exps[k] - exps[k - 1];
                let at_least_next = exps.get(k + 1).map_or(0, |e| e - exps[k]);
                for _ in 0..(at_least - at_least_next) {
                    sizes.push(p.pow(k as u32));
                }
            }
            sizes.sort_unstable_by(|a, b| b.cmp(a));
            primary.push(sizes);
        }
        let rank = primary.iter().map(Vec::len).max().unwrap_or(0);
        let factors =
            (0..rank).map(|i| primary.iter().filter_map(|s| s.get(i)).product::<u64>() as u32).collect();
        GroupStructure { factors }
    }

    /// Brute-force isomorphism test against a descriptor: compares
    /// `#{x : x^d = 1}` for every divisor `d` of the order.
    pub fn is_isomorphic(&self, elements: &BTreeSet<T>, expected: &GroupStructure) -> bool {
        let order = elements.len() as u64;
        if expected.order() != order {
            return false;
        }
        (1..=order).filter(|d| order.is_multiple_of(*d)).all(|d| {
            let count = elements.iter().filter(|&&x| self.pow(x, d) == self.identity).count() as u64;
            count == expected.count_killed_by(d)
        })
    }

    /// A generating set of the smallest possible size, lexicographically first
    /// among those of that size.
    pub fn minimal_generators(&self, subgroup: &BTreeSet<T>) -> Vec<T> {
        let rank = self.structure(subgroup).rank();
        let candidates: Vec<T> = subgroup.iter().copied().filter(|&x| x != self.identity).collect();
        let mut chosen = Vec::with_capacity(rank);
        if rank == 0 || self.search_generators(subgroup, &candidates, 0, rank, &mut chosen) {
            chosen
        } else {
            // unreachable for abelian groups; fall back to every element
            candidates
        }
    }

    fn search_generators(
        &self,
        target: &BTreeSet<T>,
        candidates: &[T],
        start: usize,
        remaining: usize,
        chosen: &mut Vec<T>,
    ) -> bool {
        if remaining == 0 {
            return self.closure(chosen).len() == target.len();
        }
        for i in start..candidates.len() {
            chosen.push(candidates[i]);
            if self.search_generators(target, candidates, i + 1, remaining - 1, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    /// Every subgroup generated by elements satisfying `admissible` whose
    /// elements all satisfy `admissible`. With an always-true predicate this
    /// is the full subgroup lattice of the group generated by `universe`.
    pub fn subgroups(&self, universe: &[T], admissible: impl Fn(T) -> bool) -> Vec<BTreeSet<T>> {
        let pool: Vec<T> = universe.iter().copied().filter(|&x| admissible(x)).collect();
        let trivial = BTreeSet::from([self.identity]);
        let mut found = BTreeSet::from([trivial.clone()]);
        let mut frontier = vec![trivial];
        while let Some(h) = frontier.pop() {
            for &x in &pool {
                if h.contains(&x) {
                    continue;
                }
                let mut gens: Vec<T> = h.iter().copied().collect();
                gens.push(x);
                let bigger = self.closure(&gens);
                if bigger.iter().all(|&y| admissible(y)) && !found.contains(&bigger) {
                    found.insert(bigger.clone());
                    frontier.push(bigger);
                }
            }
        }
        found.into_iter().collect()
    }
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn log_exact(mut x: u64, p: u64) -> u32 {
    let mut e = 0;
    while x > 1 {
        debug_assert_eq!(x % p, 0, "count is not a power of {p}");
        x /= p;
        e += 1;
    }
    e
}
