//! The power-graph relation and an exact BFS oracle on small alternating groups.
//!
//! Adjacency is decided without enumerating cyclic subgroups: `z ∈ ⟨x⟩` holds
//! iff `z` acts on every cycle of `x` as a rotation and the rotation amounts
//! are simultaneously solvable by CRT. Exhaustive analysis (`PowerGraph`)
//! indexes the even permutations of `{1..n}` by lexicographic rank and stores
//! the undirected edges `{g, g^k}` in CSR form.

use std::collections::{BTreeMap, VecDeque};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::perm::{PermError, Permutation};

pub const DEFAULT_BFS_CUTOFF: usize = 10;
/// Ranks are stored as `u32`, which caps the index at `12!/2` vertices.
pub const MAX_INDEX_DEGREE: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("the identity is not a vertex of the proper power graph")]
    Identity,
    #[error("{0} is an odd permutation, not an element of A_n")]
    Odd(String),
    #[error("degree {n} exceeds the BFS cutoff {cutoff}")]
    CutoffExceeded { n: usize, cutoff: usize },
    #[error("degree {0} is too small for an alternating-group index")]
    DegreeTooSmall(usize),
    #[error(transparent)]
    Perm(#[from] PermError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Direction {
    SecondIsPowerOfFirst,
    FirstIsPowerOfSecond,
}

/// Proof that two vertices are adjacent: one is the `exponent`-th power of the other.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AdjacencyCertificate {
    pub direction: Direction,
    pub exponent: BigUint,
}

impl AdjacencyCertificate {
    /// Checks the power relation and that the endpoints are distinct nonidentity elements.
    pub fn validates(&self, first: &Permutation, second: &Permutation) -> bool {
        if first.degree() != second.degree()
            || first == second
            || first.is_identity()
            || second.is_identity()
        {
            return false;
        }
        let e = BigInt::from(self.exponent.clone());
        match self.direction {
            Direction::SecondIsPowerOfFirst => first.pow(&e) == *second,
            Direction::FirstIsPowerOfSecond => second.pow(&e) == *first,
        }
    }

    pub fn reversed(&self) -> AdjacencyCertificate {
        AdjacencyCertificate {
            direction: match self.direction {
                Direction::SecondIsPowerOfFirst => Direction::FirstIsPowerOfSecond,
                Direction::FirstIsPowerOfSecond => Direction::SecondIsPowerOfFirst,
            },
            exponent: self.exponent.clone(),
        }
    }
}

/// Least `e >= 0` with `x^e == z`, or `None` when `z ∉ ⟨x⟩`.
pub fn cyclic_membership(z: &Permutation, x: &Permutation) -> Result<Option<BigUint>, PermError> {
    if z.degree() != x.degree() {
        return Err(PermError::DegreeMismatch {
            left: z.degree(),
            right: x.degree(),
        });
    }
    let (zr, xr) = (z.raw(), x.raw());
    if xr
        .iter()
        .enumerate()
        .any(|(i, &img)| img as usize == i && zr[i] as usize != i)
    {
        return Ok(None);
    }
    // position of each point within its x-cycle
    let mut pos = vec![0u32; xr.len()];
    // rotation required on each cycle length; equal lengths must agree
    let mut by_length: BTreeMap<usize, usize> = BTreeMap::new();
    let mut consistent = true;
    x.for_each_cycle(|cycle| {
        if !consistent {
            return;
        }
        for (i, &pt) in cycle.iter().enumerate() {
            pos[pt as usize] = i as u32;
        }
        let t = cycle.len();
        let first_image = zr[cycle[0] as usize];
        if xr[first_image as usize] as usize == first_image as usize {
            consistent = false;
            return;
        }
        let Some(shift) = cycle.iter().position(|&p| p == first_image) else {
            consistent = false;
            return;
        };
        if cycle
            .iter()
            .enumerate()
            .any(|(i, &pt)| zr[pt as usize] != cycle[(i + shift) % t])
        {
            consistent = false;
            return;
        }
        match by_length.insert(t, shift) {
            Some(prev) if prev != shift => consistent = false,
            _ => {}
        }
    });
    if !consistent {
        return Ok(None);
    }
    Ok(solve_congruences(by_length))
}

/// Least nonnegative solution of `e ≡ r (mod t)` over the given pairs.
pub(crate) fn solve_congruences(
    pairs: impl IntoIterator<Item = (usize, usize)>,
) -> Option<BigUint> {
    let mut residue = BigInt::zero();
    let mut modulus = BigInt::one();
    for (t, r) in pairs {
        let t_i = t as i64;
        let m_mod_t = (&modulus % t).to_i64().unwrap_or(0);
        let g = m_mod_t.gcd(&t_i);
        let a_mod_t = (&residue % t).to_i64().unwrap_or(0);
        let diff = (r as i64 - a_mod_t).rem_euclid(t_i);
        if diff % g != 0 {
            return None;
        }
        let tg = t_i / g;
        let s = if tg == 1 {
            0
        } else {
            let inv = mod_inverse((m_mod_t / g).rem_euclid(tg), tg)?;
            ((diff / g) % tg) * inv % tg
        };
        residue += &modulus * s;
        modulus *= tg;
        residue = residue.mod_floor(&modulus);
    }
    residue.to_biguint()
}

pub(crate) fn mod_inverse(a: i64, m: i64) -> Option<i64> {
    let e = a.extended_gcd(&m);
    (e.gcd == 1).then(|| e.x.rem_euclid(m))
}

/// Certificate for the edge `x ~ y`, or `None` when the vertices are not adjacent.
pub fn is_adjacent(
    x: &Permutation,
    y: &Permutation,
) -> Result<Option<AdjacencyCertificate>, GraphError> {
    if x.is_identity() || y.is_identity() {
        return Err(GraphError::Identity);
    }
    if x == y {
        return Ok(None);
    }
    if let Some(e) = cyclic_membership(y, x)? {
        return Ok(Some(AdjacencyCertificate {
            direction: Direction::SecondIsPowerOfFirst,
            exponent: e,
        }));
    }
    Ok(cyclic_membership(x, y)?.map(|e| AdjacencyCertificate {
        direction: Direction::FirstIsPowerOfSecond,
        exponent: e,
    }))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Distance {
    Finite(u32),
    Unreachable,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceResult {
    pub distance: Distance,
    pub path: Option<Vec<Permutation>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentInfo {
    pub size: usize,
    pub diameter: u32,
    /// Least member in cycle-notation string order.
    pub representative: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentReport {
    pub n: usize,
    pub vertices: usize,
    pub components: Vec<ComponentInfo>,
    pub cutoff: usize,
}

/// Exact proper power graph `P*(A_n)` for small `n`.
pub struct PowerGraph {
    n: usize,
    offsets: Vec<u64>,
    targets: Vec<u32>,
    cutoff: usize,
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Number of vertices `|A_n| - 1`.
pub fn vertex_count(n: usize) -> u64 {
    if n < 2 {
        0
    } else {
        factorial(n) / 2 - 1
    }
}

/// Rough index footprint in bytes: every vertex, plus every power edge stored twice.
pub fn estimate_index_bytes(n: usize) -> u64 {
    let mut power_edges = 0u64;
    for (lengths, class_size) in even_cycle_types(n) {
        let order: u64 = lengths.iter().fold(1u64, |acc, &l| acc.lcm(&(l as u64)));
        power_edges += class_size * order.saturating_sub(2);
    }
    let vertices = factorial(n) / 2;
    vertices * (8 + 1 + 4) + power_edges * (8 + 4 + 4)
}

/// Nontrivial cycle-length multisets of even permutations with their class sizes in `S_n`.
fn even_cycle_types(n: usize) -> Vec<(Vec<usize>, u64)> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=max.min(rest)).rev() {
            cur.push(part);
            rec(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut parts = Vec::new();
    rec(n, n, &mut Vec::new(), &mut parts);
    parts
        .into_iter()
        .filter(|p| p.iter().map(|&l| l - 1).sum::<usize>() % 2 == 0 && p.iter().any(|&l| l > 1))
        .map(|p| {
            let mut mult: BTreeMap<usize, u32> = BTreeMap::new();
            for &l in &p {
                *mult.entry(l).or_default() += 1;
            }
            let centralizer: u64 = mult
                .iter()
                .map(|(&l, &m)| (l as u64).pow(m) * factorial(m as usize))
                .product();
            (
                p.into_iter().filter(|&l| l > 1).collect(),
                factorial(n) / centralizer,
            )
        })
        .collect()
}

impl PowerGraph {
    /// Builds the edge index with the default cutoff.
    pub fn build(n: usize) -> Result<Self, GraphError> {
        Self::build_with_cutoff(n, DEFAULT_BFS_CUTOFF)
    }

    pub fn build_with_cutoff(n: usize, cutoff: usize) -> Result<Self, GraphError> {
        if n > cutoff || n > MAX_INDEX_DEGREE {
            return Err(GraphError::CutoffExceeded {
                n,
                cutoff: cutoff.min(MAX_INDEX_DEGREE),
            });
        }
        if n < 3 {
            return Err(GraphError::DegreeTooSmall(n));
        }
        let count = (factorial(n) / 2) as usize;
        let mut edges: Vec<u64> = Vec::new();
        let mut g = [0u8; MAX_INDEX_DEGREE];
        let mut cur = [0u8; MAX_INDEX_DEGREE];
        for idx in 0..count as u32 {
            if idx == 0 {
                continue;
            }
            unrank_even(n, idx, &mut g);
            cur[..n].copy_from_slice(&g[..n]);
            loop {
                // cur <- cur ∘ g
                let mut next = [0u8; MAX_INDEX_DEGREE];
                for i in 0..n {
                    next[i] = cur[g[i] as usize];
                }
                cur = next;
                if is_identity_arr(&cur[..n]) || cur[..n] == g[..n] {
                    break;
                }
                let other = rank_even(&cur[..n]);
                let (a, b) = if idx < other {
                    (idx, other)
                } else {
                    (other, idx)
                };
                edges.push((a as u64) << 32 | b as u64);
            }
        }
        edges.sort_unstable();
        edges.dedup();
        let mut degree = vec![0u64; count + 1];
        for &e in &edges {
            degree[(e >> 32) as usize] += 1;
            degree[(e & 0xffff_ffff) as usize] += 1;
        }
        let mut offsets = vec![0u64; count + 1];
        for i in 0..count {
            offsets[i + 1] = offsets[i] + degree[i];
        }
        drop(degree);
        let mut fill: Vec<u64> = offsets[..count].to_vec();
        let mut targets = vec![0u32; offsets[count] as usize];
        for &e in &edges {
            let (a, b) = ((e >> 32) as usize, (e & 0xffff_ffff) as usize);
            targets[fill[a] as usize] = b as u32;
            fill[a] += 1;
            targets[fill[b] as usize] = a as u32;
            fill[b] += 1;
        }
        Ok(PowerGraph {
            n,
            offsets,
            targets,
            cutoff,
        })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    /// Number of even permutations, identity included.
    pub fn group_order(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn edge_count(&self) -> usize {
        self.targets.len() / 2
    }

    pub fn index_of(&self, x: &Permutation) -> Result<u32, GraphError> {
        if x.degree() != self.n {
            return Err(PermError::DegreeMismatch {
                left: x.degree(),
                right: self.n,
            }
            .into());
        }
        if x.is_identity() {
            return Err(GraphError::Identity);
        }
        if !x.is_even() {
            return Err(GraphError::Odd(x.to_string()));
        }
        let arr: Vec<u8> = x.raw().iter().map(|&v| v as u8).collect();
        Ok(rank_even(&arr))
    }

    pub fn element(&self, idx: u32) -> Permutation {
        let mut g = [0u8; MAX_INDEX_DEGREE];
        unrank_even(self.n, idx, &mut g);
        Permutation::from_raw(g[..self.n].iter().map(|&v| v as u32).collect())
    }

    /// The identity has lexicographic rank 0.
    pub fn is_identity_index(&self, idx: u32) -> bool {
        idx == 0
    }

    pub fn neighbor_indices(&self, idx: u32) -> &[u32] {
        let (a, b) = (self.offsets[idx as usize], self.offsets[idx as usize + 1]);
        &self.targets[a as usize..b as usize]
    }

    pub fn neighbors(&self, x: &Permutation) -> Result<Vec<Permutation>, GraphError> {
        let idx = self.index_of(x)?;
        Ok(self
            .neighbor_indices(idx)
            .iter()
            .map(|&j| self.element(j))
            .collect())
    }

    /// BFS distances from `source`; `u32::MAX` marks unreachable vertices (and the identity).
    pub fn distances_from(&self, source: u32) -> Vec<u32> {
        self.bfs(source, None).0
    }

    fn bfs(&self, source: u32, stop_at: Option<u32>) -> (Vec<u32>, Vec<u32>) {
        let count = self.group_order();
        let mut dist = vec![u32::MAX; count];
        let mut parent = if stop_at.is_some() {
            vec![u32::MAX; count]
        } else {
            Vec::new()
        };
        let mut queue = VecDeque::new();
        dist[source as usize] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            if Some(u) == stop_at {
                break;
            }
            let du = dist[u as usize];
            for &v in self.neighbor_indices(u) {
                if dist[v as usize] == u32::MAX {
                    dist[v as usize] = du + 1;
                    if !parent.is_empty() {
                        parent[v as usize] = u;
                    }
                    queue.push_back(v);
                }
            }
        }
        (dist, parent)
    }

    pub fn bfs_distance(
        &self,
        x: &Permutation,
        y: &Permutation,
    ) -> Result<DistanceResult, GraphError> {
        let (s, t) = (self.index_of(x)?, self.index_of(y)?);
        let (dist, parent) = self.bfs(s, Some(t));
        if dist[t as usize] == u32::MAX {
            return Ok(DistanceResult {
                distance: Distance::Unreachable,
                path: None,
            });
        }
        let mut path = vec![t];
        while *path.last().unwrap() != s {
            path.push(parent[*path.last().unwrap() as usize]);
        }
        path.reverse();
        Ok(DistanceResult {
            distance: Distance::Finite(dist[t as usize]),
            path: Some(path.into_iter().map(|i| self.element(i)).collect()),
        })
    }

    /// Connected components of `P*(A_n)` with exact per-component diameters.
    ///
    /// Conjugation by any element of `S_n` is a graph automorphism, so all
    /// vertices of one cycle type share an eccentricity. One BFS per cycle
    /// type therefore determines every component's diameter.
    pub fn components(&self) -> ComponentReport {
        let count = self.group_order();
        let mut label = vec![u32::MAX; count];
        let mut sizes: Vec<usize> = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..count as u32 {
            if label[start as usize] != u32::MAX || self.is_identity_index(start) {
                continue;
            }
            let id = sizes.len() as u32;
            label[start as usize] = id;
            queue.push_back(start);
            let mut size = 0;
            while let Some(u) = queue.pop_front() {
                size += 1;
                for &v in self.neighbor_indices(u) {
                    if label[v as usize] == u32::MAX {
                        label[v as usize] = id;
                        queue.push_back(v);
                    }
                }
            }
            sizes.push(size);
        }

        let mut type_ids: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        let mut type_rep: Vec<u32> = Vec::new();
        let mut comp_types: Vec<Vec<usize>> = vec![Vec::new(); sizes.len()];
        let mut reps: Vec<Option<String>> = vec![None; sizes.len()];
        for idx in 0..count as u32 {
            let c = label[idx as usize];
            if c == u32::MAX {
                continue;
            }
            let x = self.element(idx);
            let ty = x.decompose().cycle_type();
            let next_id = type_ids.len();
            let tid = *type_ids.entry(ty).or_insert_with(|| {
                type_rep.push(idx);
                next_id
            });
            let types = &mut comp_types[c as usize];
            if !types.contains(&tid) {
                types.push(tid);
            }
            let s = x.to_string();
            let slot = &mut reps[c as usize];
            if slot.as_ref().is_none_or(|r| s < *r) {
                *slot = Some(s);
            }
        }
        let ecc: Vec<u32> = type_rep
            .iter()
            .map(|&src| {
                self.distances_from(src)
                    .into_iter()
                    .filter(|&d| d != u32::MAX)
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let mut components: Vec<ComponentInfo> = sizes
            .iter()
            .enumerate()
            .map(|(c, &size)| ComponentInfo {
                size,
                diameter: comp_types[c].iter().map(|&t| ecc[t]).max().unwrap_or(0),
                representative: reps[c].clone().unwrap_or_default(),
            })
            .collect();
        components.sort_by(|a, b| a.representative.cmp(&b.representative));
        ComponentReport {
            n: self.n,
            vertices: count - 1,
            components,
            cutoff: self.cutoff,
        }
    }
}

/// Distance between two elements, building a throwaway index.
pub fn bfs_distance(
    x: &Permutation,
    y: &Permutation,
    n: usize,
) -> Result<DistanceResult, GraphError> {
    PowerGraph::build(n)?.bfs_distance(x, y)
}

pub fn neighbors(x: &Permutation, n: usize) -> Result<Vec<Permutation>, GraphError> {
    if x.is_identity() {
        return Err(GraphError::Identity);
    }
    PowerGraph::build(n)?.neighbors(x)
}

pub fn exact_components_and_diameter(n: usize) -> Result<ComponentReport, GraphError> {
    Ok(PowerGraph::build(n)?.components())
}

fn is_identity_arr(a: &[u8]) -> bool {
    a.iter().enumerate().all(|(i, &v)| v as usize == i)
}

fn lex_rank(a: &[u8]) -> u64 {
    let n = a.len();
    let mut used = 0u32;
    let mut rank = 0u64;
    for (i, &v) in a.iter().enumerate() {
        let smaller_unused = (v as u32) - (used & ((1u32 << v) - 1)).count_ones();
        rank += smaller_unused as u64 * factorial(n - 1 - i);
        used |= 1 << v;
    }
    rank
}

/// Index among even permutations. Lex ranks `2i` and `2i + 1` differ by a
/// swap of the last two entries, so exactly one of them is even.
fn rank_even(a: &[u8]) -> u32 {
    (lex_rank(a) >> 1) as u32
}

fn unrank_even(n: usize, idx: u32, out: &mut [u8; MAX_INDEX_DEGREE]) {
    let mut rank = (idx as u64) << 1;
    let mut avail: Vec<u8> = (0..n as u8).collect();
    for (i, slot) in out[..n].iter_mut().enumerate() {
        let f = factorial(n - 1 - i);
        let d = (rank / f) as usize;
        rank %= f;
        *slot = avail.remove(d);
    }
    if !parity_even(&out[..n]) {
        out.swap(n - 2, n - 1);
    }
}

fn parity_even(a: &[u8]) -> bool {
    let mut seen = 0u32;
    let mut transpositions = 0;
    for start in 0..a.len() {
        if seen >> start & 1 == 1 {
            continue;
        }
        let mut x = start;
        let mut len = 0;
        while seen >> x & 1 == 0 {
            seen |= 1 << x;
            x = a[x] as usize;
            len += 1;
        }
        transpositions += len - 1;
    }
    transpositions % 2 == 0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::notation::parse_cycles;

    fn p(n: usize, s: &str) -> Permutation {
        parse_cycles(s, n).unwrap()
    }

    #[test]
    fn membership_examples() {
        let x = p(5, "(1 2 3 4 5)");
        assert_eq!(
            cyclic_membership(&p(5, "(1 3 5 2 4)"), &x).unwrap(),
            Some(BigUint::from(2u32))
        );
        assert_eq!(
            cyclic_membership(&p(6, "(4 5 6)"), &p(6, "(1 2 3)")).unwrap(),
            None
        );
        assert_eq!(
            cyclic_membership(&p(5, "(1 2 3)"), &p(5, "(1 2 3)(4 5)")).unwrap(),
            Some(BigUint::from(4u32))
        );
        assert_eq!(
            cyclic_membership(&Permutation::identity(5), &x).unwrap(),
            Some(BigUint::zero())
        );
    }

    #[test]
    fn membership_rejects_inconsistent_rotations() {
        // rotation by 1 on one 3-cycle and by 2 on the other
        let x = p(6, "(1 2 3)(4 5 6)");
        let z = p(6, "(1 2 3)(4 6 5)");
        assert_eq!(cyclic_membership(&z, &x).unwrap(), None);
        // e ≡ 1 mod 2 and e ≡ 0 mod 4 is inconsistent
        let x = p(6, "(1 2)(3 4 5 6)");
        let z = p(6, "(1 2)");
        assert_eq!(cyclic_membership(&z, &x).unwrap(), None);
        // non-rotation on a cycle
        let x = p(4, "(1 2 3 4)");
        assert_eq!(cyclic_membership(&p(4, "(1 2)(3 4)"), &x).unwrap(), None);
    }

    #[test]
    fn membership_degree_mismatch() {
        assert!(cyclic_membership(&p(3, "(1 2 3)"), &p(4, "(1 2 3)")).is_err());
    }

    #[test]
    fn membership_matches_enumeration() {
        let x = p(9, "(1 2 3 4)(5 6)(7 8 9)");
        for e in 0..12 {
            let z = x.pow_i64(e);
            let got = cyclic_membership(&z, &x).unwrap().unwrap();
            let least = (0..12).find(|&f| x.pow_i64(f) == z).unwrap();
            assert_eq!(got, BigUint::from(least as u64));
        }
    }

    #[test]
    fn congruence_solver() {
        assert_eq!(
            solve_congruences([(3, 1), (2, 0)]),
            Some(BigUint::from(4u32))
        );
        assert_eq!(
            solve_congruences([(4, 1), (6, 3)]),
            Some(BigUint::from(9u32))
        );
        assert_eq!(solve_congruences([(4, 1), (6, 2)]), None);
        assert_eq!(solve_congruences([]), Some(BigUint::zero()));
    }

    #[test]
    fn adjacency_examples() {
        let c = is_adjacent(&p(5, "(1 2 3 4 5)"), &p(5, "(1 3 5 2 4)"))
            .unwrap()
            .unwrap();
        assert_eq!(c.direction, Direction::SecondIsPowerOfFirst);
        assert_eq!(c.exponent, BigUint::from(2u32));
        assert_eq!(
            is_adjacent(&p(6, "(1 2 3)"), &p(6, "(4 5 6)")).unwrap(),
            None
        );
        assert_eq!(
            is_adjacent(&p(6, "(1 2 3)"), &p(6, "(1 2 3)")).unwrap(),
            None
        );
        assert_eq!(
            is_adjacent(&Permutation::identity(3), &p(3, "(1 2 3)")),
            Err(GraphError::Identity)
        );
        let c = is_adjacent(&p(5, "(1 2 3)"), &p(5, "(1 2 3)(4 5)"))
            .unwrap()
            .unwrap();
        assert_eq!(c.direction, Direction::FirstIsPowerOfSecond);
        assert!(c.validates(&p(5, "(1 2 3)"), &p(5, "(1 2 3)(4 5)")));
        assert!(c
            .reversed()
            .validates(&p(5, "(1 2 3)(4 5)"), &p(5, "(1 2 3)")));
    }

    #[test]
    fn rank_round_trip() {
        for n in 3..=6 {
            let count = (factorial(n) / 2) as u32;
            let mut g = [0u8; MAX_INDEX_DEGREE];
            for idx in 0..count {
                unrank_even(n, idx, &mut g);
                assert!(parity_even(&g[..n]));
                assert_eq!(rank_even(&g[..n]), idx);
            }
        }
    }

    #[test]
    fn a3_is_an_edge() {
        let report = exact_components_and_diameter(3).unwrap();
        assert_eq!(report.vertices, 2);
        assert_eq!(report.components.len(), 1);
        assert_eq!(report.components[0].size, 2);
        assert_eq!(report.components[0].diameter, 1);
    }

    #[test]
    fn cutoff_is_enforced() {
        assert_eq!(
            PowerGraph::build(11).err(),
            Some(GraphError::CutoffExceeded { n: 11, cutoff: 10 })
        );
        assert!(matches!(
            bfs_distance(&p(12, "(1 2 3)"), &p(12, "(1 3 2)"), 12),
            Err(GraphError::CutoffExceeded { .. })
        ));
    }

    #[test]
    fn neighbors_reject_identity() {
        assert_eq!(
            neighbors(&Permutation::identity(4), 4),
            Err(GraphError::Identity)
        );
    }

    #[test]
    fn estimate_counts_all_even_types() {
        // A_5 types: (3), (2,2), (5) with class sizes 20, 15, 24
        let mut types = even_cycle_types(5);
        types.sort();
        assert_eq!(types, vec![(vec![2, 2], 15), (vec![3], 20), (vec![5], 24)]);
        assert!(estimate_index_bytes(10) > 0);
    }
}
