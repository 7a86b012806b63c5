//! Permutations of `{1..n}` with cycle-wise exponent arithmetic.
//!
//! Points are 1-based at every public boundary and 0-based in storage.
//! Composition is right-to-left: `a.compose(&b)` applies `b` first.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use thiserror::Error;

use crate::primes;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("point {point} is outside 1..={degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("point {0} appears more than once")]
    RepeatedPoint(usize),
    #[error("image list is not a bijection")]
    NotBijection,
    #[error("a cycle needs at least two points")]
    ShortCycle,
    #[error("degree must be at least 1")]
    ZeroDegree,
    #[error("malformed cycle notation at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: &'static str },
}

/// A permutation stored as its image table.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n as u32).collect(),
        }
    }

    /// Builds from 1-based images: `images[i - 1]` is the image of `i`.
    pub fn from_images(images: &[usize]) -> Result<Self, PermError> {
        let n = images.len();
        if n == 0 {
            return Err(PermError::ZeroDegree);
        }
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for &img in images {
            if img == 0 || img > n {
                return Err(PermError::PointOutOfRange {
                    point: img,
                    degree: n,
                });
            }
            if std::mem::replace(&mut seen[img - 1], true) {
                return Err(PermError::NotBijection);
            }
            out.push((img - 1) as u32);
        }
        Ok(Permutation { images: out })
    }

    /// Builds the product of disjoint cycles given with 1-based points.
    pub fn from_cycles<C: AsRef<[usize]>>(n: usize, cycles: &[C]) -> Result<Self, PermError> {
        if n == 0 {
            return Err(PermError::ZeroDegree);
        }
        let mut images: Vec<u32> = (0..n as u32).collect();
        let mut used = vec![false; n];
        for cycle in cycles {
            let cycle = cycle.as_ref();
            if cycle.len() < 2 {
                return Err(PermError::ShortCycle);
            }
            for &pt in cycle {
                if pt == 0 || pt > n {
                    return Err(PermError::PointOutOfRange {
                        point: pt,
                        degree: n,
                    });
                }
                if std::mem::replace(&mut used[pt - 1], true) {
                    return Err(PermError::RepeatedPoint(pt));
                }
            }
            for (i, &pt) in cycle.iter().enumerate() {
                let next = cycle[(i + 1) % cycle.len()];
                images[pt - 1] = (next - 1) as u32;
            }
        }
        Ok(Permutation { images })
    }

    /// Internal constructor from a 0-based table already known to be a bijection.
    pub(crate) fn from_raw(images: Vec<u32>) -> Self {
        debug_assert!(is_bijection(&images));
        Permutation { images }
    }

    pub(crate) fn raw(&self) -> &[u32] {
        &self.images
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] as usize + 1
    }

    /// 1-based image table.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn moves(&self, i: usize) -> bool {
        self.images[i - 1] as usize != i - 1
    }

    /// `self ∘ other`: apply `other`, then `self`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        self.check_degree(other)?;
        Ok(Permutation {
            images: other
                .images
                .iter()
                .map(|&x| self.images[x as usize])
                .collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    pub fn commutes_with(&self, other: &Permutation) -> Result<bool, PermError> {
        self.check_degree(other)?;
        Ok(other
            .images
            .iter()
            .enumerate()
            .all(|(i, &x)| self.images[x as usize] == other.images[self.images[i] as usize]))
    }

    /// `self^e` for any integer `e`, computed by rotating each cycle by `e mod t`.
    pub fn pow(&self, e: &BigInt) -> Permutation {
        let mut out = self.images.clone();
        self.for_each_cycle(|cycle| {
            let t = BigInt::from(cycle.len());
            let shift = e.mod_floor(&t).to_usize().unwrap_or(0);
            rotate_into(&mut out, cycle, shift);
        });
        Permutation { images: out }
    }

    pub fn pow_i64(&self, e: i64) -> Permutation {
        let mut out = self.images.clone();
        self.for_each_cycle(|cycle| {
            let shift = e.rem_euclid(cycle.len() as i64) as usize;
            rotate_into(&mut out, cycle, shift);
        });
        Permutation { images: out }
    }

    /// Even iff `n - #cycles` (fixed points counted as cycles) is even.
    pub fn is_even(&self) -> bool {
        let mut transpositions = 0usize;
        self.for_each_cycle(|c| transpositions += c.len() - 1);
        transpositions.is_multiple_of(2)
    }

    pub fn decompose(&self) -> CycleDecomposition {
        let mut cycles = Vec::new();
        let mut fixed = Vec::new();
        let n = self.images.len();
        let mut seen = vec![false; n];
        for start in 0..n {
            if seen[start] {
                continue;
            }
            if self.images[start] as usize == start {
                seen[start] = true;
                fixed.push(start + 1);
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x] as usize;
            }
            cycles.push(cycle);
        }
        CycleDecomposition {
            degree: n,
            cycles,
            fixed,
        }
    }

    pub fn order(&self) -> FactoredOrder {
        FactoredOrder::from_lengths(self.cycle_lengths())
    }

    pub fn cycle_lengths(&self) -> Vec<usize> {
        let mut lens = Vec::new();
        self.for_each_cycle(|c| lens.push(c.len()));
        lens
    }

    /// Calls `f` on each nontrivial cycle (0-based points, starting at its least point).
    pub(crate) fn for_each_cycle(&self, mut f: impl FnMut(&[u32])) {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut buf = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            buf.clear();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                buf.push(x as u32);
                x = self.images[x] as usize;
            }
            f(&buf);
        }
    }

    fn check_degree(&self, other: &Permutation) -> Result<(), PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(())
    }
}

fn rotate_into(out: &mut [u32], cycle: &[u32], shift: usize) {
    let t = cycle.len();
    for (i, &pt) in cycle.iter().enumerate() {
        out[pt as usize] = cycle[(i + shift) % t];
    }
}

fn is_bijection(images: &[u32]) -> bool {
    let mut seen = vec![false; images.len()];
    images
        .iter()
        .all(|&x| (x as usize) < images.len() && !std::mem::replace(&mut seen[x as usize], true))
}

/// `a ∘ b` (apply `b` first).
pub fn compose(a: &Permutation, b: &Permutation) -> Result<Permutation, PermError> {
    a.compose(b)
}

pub fn power(x: &Permutation, e: &BigInt) -> Permutation {
    x.pow(e)
}

pub fn decompose(x: &Permutation) -> CycleDecomposition {
    x.decompose()
}

pub fn order_factored(d: &CycleDecomposition) -> FactoredOrder {
    d.order()
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self)
    }
}

/// Canonical cycle decomposition: cycles start at their least point and are
/// sorted by it; fixed points ascend.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleDecomposition {
    degree: usize,
    cycles: Vec<Vec<usize>>,
    fixed: Vec<usize>,
}

impl CycleDecomposition {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn fixed_points(&self) -> &[usize] {
        &self.fixed
    }

    /// Number of nontrivial cycles.
    pub fn num_cycles(&self) -> usize {
        self.cycles.len()
    }

    /// Number of fixed points, `n - |support|`.
    pub fn num_fixed(&self) -> usize {
        self.fixed.len()
    }

    /// Moved points in ascending order.
    pub fn support(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.cycles.iter().flatten().copied().collect();
        s.sort_unstable();
        s
    }

    pub fn order(&self) -> FactoredOrder {
        FactoredOrder::from_lengths(self.cycles.iter().map(Vec::len))
    }

    /// Cycle type with fixed points counted as 1-cycles, descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles.iter().map(Vec::len).collect();
        t.extend(std::iter::repeat_n(1, self.fixed.len()));
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    /// Multiplies the cycles back together.
    pub fn recompose(&self) -> Permutation {
        Permutation::from_cycles(self.degree, &self.cycles).expect("canonical cycles are disjoint")
    }
}

/// Order of a permutation as `prime -> exponent`, the lcm of its cycle lengths.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FactoredOrder {
    prime_powers: BTreeMap<u64, u32>,
}

impl FactoredOrder {
    pub fn from_lengths(lengths: impl IntoIterator<Item = usize>) -> Self {
        let mut prime_powers = BTreeMap::new();
        for len in lengths {
            for (p, e) in primes::factorize(len as u64) {
                let slot = prime_powers.entry(p).or_insert(0);
                *slot = (*slot).max(e);
            }
        }
        FactoredOrder { prime_powers }
    }

    pub fn from_prime_powers(prime_powers: BTreeMap<u64, u32>) -> Self {
        FactoredOrder {
            prime_powers: prime_powers.into_iter().filter(|&(_, e)| e > 0).collect(),
        }
    }

    pub fn prime_powers(&self) -> &BTreeMap<u64, u32> {
        &self.prime_powers
    }

    pub fn is_one(&self) -> bool {
        self.prime_powers.is_empty()
    }

    pub fn least_prime(&self) -> Option<u64> {
        self.prime_powers.keys().next().copied()
    }

    /// `Some(p)` when the order is the prime `p`.
    pub fn as_prime(&self) -> Option<u64> {
        match self.prime_powers.iter().next() {
            Some((&p, &1)) if self.prime_powers.len() == 1 => Some(p),
            _ => None,
        }
    }

    pub fn divides_by(&self, p: u64) -> bool {
        self.prime_powers.contains_key(&p)
    }

    pub fn to_biguint(&self) -> BigUint {
        self.prime_powers
            .iter()
            .fold(BigUint::one(), |acc, (&p, &e)| {
                acc * BigUint::from(p).pow(e)
            })
    }

    /// The order divided by `p`, reduced modulo `modulus`; never builds the order itself.
    pub fn quotient_mod(&self, p: u64, modulus: u64) -> u64 {
        assert!(self.divides_by(p), "{p} does not divide the order");
        let m = modulus as u128;
        let mut acc = 1u128 % m;
        for (&q, &e) in &self.prime_powers {
            let e = if q == p { e - 1 } else { e };
            for _ in 0..e {
                acc = acc * q as u128 % m;
            }
        }
        acc as u64
    }

    pub fn gcd_is_one(&self, other: &FactoredOrder) -> bool {
        self.prime_powers
            .keys()
            .all(|p| !other.prime_powers.contains_key(p))
    }
}

impl fmt::Display for FactoredOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .prime_powers
            .iter()
            .map(|(p, e)| {
                if *e == 1 {
                    p.to_string()
                } else {
                    format!("{p}^{e}")
                }
            })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}
