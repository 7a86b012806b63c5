//! Elementary constructions: coprime bridges, free-point elements, cycle
//! interleaving and the root "stitch" that links an element of prime order
//! `t` to an element of prime order `h` supported on `h` of its cycles.

use num_bigint::BigUint;

use super::{certify, LemmaTag, PathWitness, SynthError};
use crate::graph::{cyclic_membership, mod_inverse};
use crate::perm::Permutation;
use crate::pointset::PointSet;

/// `x ~ xy ~ y` for commuting `x`, `y` of coprime orders.
pub fn bridge(x: &Permutation, y: &Permutation) -> Result<PathWitness, SynthError> {
    if x.is_identity() || y.is_identity() {
        return Err(SynthError::Identity);
    }
    if !x.commutes_with(y)? {
        return Err(SynthError::NotCommuting);
    }
    if !x.order().gcd_is_one(&y.order()) {
        return Err(SynthError::OrdersNotCoprime);
    }
    let xy = x.compose(y)?;
    certify(
        vec![x.clone(), xy, y.clone()],
        LemmaTag::Bridge21,
        2,
        "bridge",
    )
}

/// The `count` smallest points (1-based) moved by none of `exclusions`.
pub fn free_points(
    exclusions: &[Permutation],
    count: usize,
    n: usize,
) -> Result<Vec<usize>, SynthError> {
    let mut used = PointSet::new(n);
    for x in exclusions {
        if x.degree() != n {
            return Err(crate::perm::PermError::DegreeMismatch {
                left: x.degree(),
                right: n,
            }
            .into());
        }
        used.union_with(&support_set(x));
    }
    used.smallest_outside(count)
        .map(|pts| pts.into_iter().map(|p| p as usize + 1).collect())
        .ok_or(SynthError::NotEnoughFreePoints {
            need: count,
            have: used.free_count(),
        })
}

/// Reads `m` disjoint `t`-cycles column by column into one `mt`-cycle whose
/// `m`-th power is their product.
pub fn interleave(cycles: &[Vec<usize>], n: usize) -> Result<Permutation, SynthError> {
    if cycles.len() < 2 || cycles[0].len() < 2 {
        return Err(SynthError::TooFewCycles);
    }
    let t = cycles[0].len();
    if cycles.iter().any(|c| c.len() != t) {
        return Err(SynthError::UnequalCycles);
    }
    let mut seen = vec![false; n + 1];
    for &pt in cycles.iter().flatten() {
        if pt == 0 || pt > n {
            return Err(crate::perm::PermError::PointOutOfRange {
                point: pt,
                degree: n,
            }
            .into());
        }
        if std::mem::replace(&mut seen[pt], true) {
            return Err(SynthError::OverlappingCycles);
        }
    }
    let merged: Vec<usize> = (0..t)
        .flat_map(|j| cycles.iter().map(move |c| c[j]))
        .collect();
    Ok(Permutation::from_cycles(n, &[merged])?)
}

/// One stitch: `β ~ w ~ σ^t` with `σ` the interleaving of the head cycles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StitchStep {
    pub beta: Permutation,
    pub w: Permutation,
    pub target: Permutation,
    /// `w^to_beta == β`.
    pub to_beta: BigUint,
    /// `w^to_target == σ^t`.
    pub to_target: BigUint,
}

impl StitchStep {
    pub fn path(&self) -> [&Permutation; 3] {
        [&self.beta, &self.w, &self.target]
    }
}

/// Stitches the cycles of `beta` at indices `heads` (into its canonical decomposition).
///
/// All cycles of `beta` must share one length `t` with `gcd(h, t) = 1`. Then
/// `w = σ · ∏ c^l` over the remaining cycles `c`, where `l·h ≡ 1 (mod t)`,
/// satisfies `w^h = β` and `w^t = σ^t`.
pub fn stitch_step(beta: &Permutation, heads: &[usize]) -> Result<StitchStep, SynthError> {
    let d = beta.decompose();
    let h = heads.len();
    if h < 2 {
        return Err(SynthError::TooFewCycles);
    }
    let t = d.cycles()[0].len();
    if d.cycles().iter().any(|c| c.len() != t) {
        return Err(SynthError::UnequalCycles);
    }
    if num_integer::gcd(h, t) != 1 {
        return Err(SynthError::HeadsNotCoprime {
            heads: h,
            length: t,
        });
    }
    let mut sorted = heads.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != h || sorted.last().is_some_and(|&i| i >= d.num_cycles()) {
        return Err(SynthError::Precondition(
            "head indices must be distinct cycles".into(),
        ));
    }
    let cycles: Vec<Vec<u32>> = d
        .cycles()
        .iter()
        .map(|c| c.iter().map(|&p| p as u32 - 1).collect())
        .collect();
    let (w, target) = stitch_raw(beta.degree(), &cycles, t, &[heads.to_vec()], None);
    let to_beta = cyclic_membership(beta, &w)?
        .ok_or_else(|| SynthError::Unhandled("stitch root does not reach beta".into()))?;
    let to_target = cyclic_membership(&target, &w)?
        .ok_or_else(|| SynthError::Unhandled("stitch root does not reach target".into()))?;
    Ok(StitchStep {
        beta: beta.clone(),
        w,
        target,
        to_beta,
        to_target,
    })
}

/// `w` and `w^t` for head groups of equal size `h`, optionally multiplied by
/// a transposition `extra` on points fixed by the origin (used when `h = 2`).
pub(crate) fn stitch_raw(
    n: usize,
    cycles: &[Vec<u32>],
    t: usize,
    groups: &[Vec<usize>],
    extra: Option<[u32; 2]>,
) -> (Permutation, Permutation) {
    let h = groups[0].len();
    let l = if t == 1 {
        1
    } else {
        mod_inverse((h % t) as i64, t as i64).expect("h is coprime to t") as usize
    };
    let mut images: Vec<u32> = (0..n as u32).collect();
    let mut in_group = vec![false; cycles.len()];
    for group in groups {
        debug_assert_eq!(group.len(), h);
        let merged: Vec<u32> = (0..t)
            .flat_map(|j| group.iter().map(move |&ci| cycles[ci][j]))
            .collect();
        for (i, &pt) in merged.iter().enumerate() {
            images[pt as usize] = merged[(i + 1) % merged.len()];
        }
        for &ci in group {
            in_group[ci] = true;
        }
    }
    for (ci, c) in cycles.iter().enumerate() {
        if in_group[ci] {
            continue;
        }
        for (i, &pt) in c.iter().enumerate() {
            images[pt as usize] = c[(i + l) % t];
        }
    }
    if let Some([u, v]) = extra {
        images[u as usize] = v;
        images[v as usize] = u;
    }
    let w = Permutation::from_raw(images);
    let target = w.pow_i64(t as i64);
    (w, target)
}

pub(crate) fn support_set(x: &Permutation) -> PointSet {
    PointSet::from_points(
        x.degree(),
        x.raw()
            .iter()
            .enumerate()
            .filter(|&(i, &v)| i as u32 != v)
            .map(|(i, _)| i as u32),
    )
}

/// An element of prime order `r` on the given 0-based points: an `r`-cycle,
/// or a double transposition when `r = 2`.
pub(crate) fn free_element(n: usize, r: u64, points: &[u32]) -> Permutation {
    let mut images: Vec<u32> = (0..n as u32).collect();
    if r == 2 {
        let [a, b, c, d] = [points[0], points[1], points[2], points[3]];
        images[a as usize] = b;
        images[b as usize] = a;
        images[c as usize] = d;
        images[d as usize] = c;
    } else {
        let r = r as usize;
        for i in 0..r {
            images[points[i] as usize] = points[(i + 1) % r];
        }
    }
    Permutation::from_raw(images)
}

/// Points needed by [`free_element`].
pub(crate) fn free_element_size(r: u64) -> usize {
    if r == 2 {
        4
    } else {
        r as usize
    }
}

/// A nonidentity element of prime order with its cycle structure unpacked.
#[derive(Debug, Clone)]
pub(crate) struct PrimeElem {
    pub perm: Permutation,
    pub p: u64,
    pub cycles: Vec<Vec<u32>>,
    pub support: PointSet,
}

impl PrimeElem {
    pub fn new(perm: &Permutation) -> Option<PrimeElem> {
        let p = perm.order().as_prime()?;
        let mut cycles = Vec::new();
        perm.for_each_cycle(|c| cycles.push(c.to_vec()));
        Some(PrimeElem {
            support: support_set(perm),
            perm: perm.clone(),
            p,
            cycles,
        })
    }

    pub fn n(&self) -> usize {
        self.perm.degree()
    }

    /// Number of fixed points.
    pub fn k(&self) -> usize {
        self.support.free_count()
    }

    /// Number of cycles.
    pub fn m(&self) -> usize {
        self.cycles.len()
    }

    /// Lowest-indexed cycles disjoint from `avoid`.
    pub fn cycles_avoiding(&self, count: usize, avoid: &PointSet) -> Option<Vec<usize>> {
        let picked: Vec<usize> = (0..self.cycles.len())
            .filter(|&i| self.cycles[i].iter().all(|&p| !avoid.contains(p)))
            .take(count)
            .collect();
        (picked.len() == count).then_some(picked)
    }

    /// Smallest fixed points outside `avoid`.
    pub fn free_avoiding(&self, count: usize, avoid: &PointSet) -> Option<Vec<u32>> {
        self.support.union(avoid).smallest_outside(count)
    }

    /// Stitch hub of order `h` on `groups` (cycle indices); `None` if a vertex would be odd.
    pub fn stitch(
        &self,
        groups: &[Vec<usize>],
        extra: Option<[u32; 2]>,
    ) -> Option<(Permutation, Permutation)> {
        let h = groups[0].len() as u64;
        if h == self.p || (extra.is_some() && (h != 2 || self.p == 2)) {
            return None;
        }
        let (w, target) = stitch_raw(self.n(), &self.cycles, self.p as usize, groups, extra);
        (w.is_even() && target.is_even()).then_some((w, target))
    }
}

/// A vertex sequence still awaiting certification.
#[derive(Debug, Clone)]
pub(crate) struct Route {
    pub vertices: Vec<Permutation>,
    pub case: &'static str,
}

impl Route {
    pub fn new(vertices: Vec<Permutation>, case: &'static str) -> Self {
        Route { vertices, case }
    }

    pub fn reversed(mut self) -> Self {
        self.vertices.reverse();
        self
    }
}

/// Degenerate pairs: equal, adjacent, or commuting with distinct prime orders.
pub(crate) fn trivial_route(
    a: &PrimeElem,
    b: &PrimeElem,
) -> Result<Option<Vec<Permutation>>, SynthError> {
    if a.perm == b.perm {
        return Ok(Some(vec![a.perm.clone()]));
    }
    if a.p == b.p {
        if cyclic_membership(&b.perm, &a.perm)?.is_some() {
            return Ok(Some(vec![a.perm.clone(), b.perm.clone()]));
        }
    } else if a.perm.commutes_with(&b.perm)? {
        return Ok(Some(vec![
            a.perm.clone(),
            a.perm.compose(&b.perm)?,
            b.perm.clone(),
        ]));
    }
    Ok(None)
}

/// Extends `route` by the bridge from its last vertex to `y`.
pub(crate) fn push_bridge(route: &mut Vec<Permutation>, y: &Permutation) -> Result<(), SynthError> {
    let x = route.last().expect("route is never empty");
    let xy = x.compose(y)?;
    route.push(xy);
    route.push(y.clone());
    Ok(())
}

/// Cuts every detour between two visits of the same vertex.
pub(crate) fn remove_loops(route: Vec<Permutation>) -> Vec<Permutation> {
    let mut out: Vec<Permutation> = Vec::with_capacity(route.len());
    for v in route {
        if let Some(i) = out.iter().position(|u| *u == v) {
            out.truncate(i + 1);
        } else {
            out.push(v);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::notation::parse_cycles;
    use num_bigint::BigInt;

    fn p(n: usize, s: &str) -> Permutation {
        parse_cycles(s, n).unwrap()
    }

    #[test]
    fn bridge_example() {
        let x = p(7, "(1 2 3)");
        let y = p(7, "(4 5)(6 7)");
        let w = bridge(&x, &y).unwrap();
        assert_eq!(w.vertices[1], p(7, "(1 2 3)(4 5)(6 7)"));
        assert_eq!(w.certificates[0].exponent, BigUint::from(4u32));
        assert_eq!(w.certificates[1].exponent, BigUint::from(3u32));
        assert_eq!(w.len(), 2);
    }

    #[test]
    fn bridge_errors() {
        assert_eq!(
            bridge(&p(3, "(1 2 3)"), &p(3, "(1 3 2)")),
            Err(SynthError::OrdersNotCoprime)
        );
        assert_eq!(
            bridge(&p(6, "(1 2 3)"), &p(6, "(3 4)(5 6)")),
            Err(SynthError::NotCommuting)
        );
        assert_eq!(
            bridge(&Permutation::identity(4), &p(4, "(1 2 3)")),
            Err(SynthError::Identity)
        );
    }

    #[test]
    fn free_points_examples() {
        assert_eq!(
            free_points(&[p(10, "(1 2 3)")], 4, 10).unwrap(),
            vec![4, 5, 6, 7]
        );
        assert_eq!(
            free_points(&[p(9, "(1 2 3)"), p(9, "(4 5 6)")], 4, 9),
            Err(SynthError::NotEnoughFreePoints { need: 4, have: 3 })
        );
        assert_eq!(free_points(&[], 2, 5).unwrap(), vec![1, 2]);
    }

    #[test]
    fn interleave_examples() {
        let cycles = vec![vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]];
        let y = interleave(&cycles, 9).unwrap();
        assert_eq!(y, p(9, "(1 4 7 2 5 8 3 6 9)"));
        assert_eq!(y.pow_i64(3), p(9, "(1 2 3)(4 5 6)(7 8 9)"));

        let y = interleave(&[vec![1, 2], vec![3, 4]], 4).unwrap();
        assert_eq!(y, p(4, "(1 3 2 4)"));
        assert_eq!(y.pow_i64(2), p(4, "(1 2)(3 4)"));

        let five: Vec<Vec<usize>> = (0..5)
            .map(|i| vec![3 * i + 1, 3 * i + 2, 3 * i + 3])
            .collect();
        let sigma = interleave(&five, 15).unwrap();
        assert_eq!(sigma, p(15, "(1 4 7 10 13 2 5 8 11 14 3 6 9 12 15)"));
    }

    #[test]
    fn interleave_errors() {
        assert_eq!(
            interleave(&[vec![1, 2, 3], vec![4, 5]], 6),
            Err(SynthError::UnequalCycles)
        );
        assert_eq!(
            interleave(&[vec![1, 2], vec![2, 3]], 6),
            Err(SynthError::OverlappingCycles)
        );
        assert_eq!(interleave(&[vec![1, 2]], 6), Err(SynthError::TooFewCycles));
    }

    #[test]
    fn stitch_five_three_cycles() {
        let beta = p(15, "(1 2 3)(4 5 6)(7 8 9)(10 11 12)(13 14 15)");
        let s = stitch_step(&beta, &[0, 1, 2, 3, 4]).unwrap();
        let sigma = p(15, "(1 4 7 10 13 2 5 8 11 14 3 6 9 12 15)");
        assert_eq!(s.w, sigma);
        assert_eq!(s.target, sigma.pow_i64(3));
        assert_eq!(s.w.pow_i64(5), beta);
        assert_eq!(s.to_beta, BigUint::from(5u32));
        assert_eq!(s.to_target, BigUint::from(3u32));
    }

    #[test]
    fn stitch_with_tail_uses_inverse_exponent() {
        let beta = p(
            21,
            "(1 2 3)(4 5 6)(7 8 9)(10 11 12)(13 14 15)(16 17 18)(19 20 21)",
        );
        let s = stitch_step(&beta, &[0, 1, 2, 3, 4]).unwrap();
        let sigma = p(21, "(1 4 7 10 13 2 5 8 11 14 3 6 9 12 15)");
        let tail = p(21, "(16 17 18)(19 20 21)").pow_i64(2);
        assert_eq!(s.w, sigma.compose(&tail).unwrap());
        assert_eq!(s.w.pow(&BigInt::from(5)), beta);
        assert_eq!(s.target, sigma.pow_i64(3));
    }

    #[test]
    fn stitch_rejects_non_coprime_heads() {
        let beta = p(9, "(1 2 3)(4 5 6)(7 8 9)");
        assert_eq!(
            stitch_step(&beta, &[0, 1, 2]),
            Err(SynthError::HeadsNotCoprime {
                heads: 3,
                length: 3
            })
        );
        let mixed = p(9, "(1 2 3)(4 5)(6 7)");
        assert_eq!(stitch_step(&mixed, &[1, 2]), Err(SynthError::UnequalCycles));
    }

    #[test]
    fn two_groups_of_two_keep_parity() {
        // the two-6-cycle construction on four 3-cycles
        let alpha = PrimeElem::new(&p(15, "(1 2 3)(4 5 6)(7 8 9)(10 11 12)(13 14 15)")).unwrap();
        let (w, tau3) = alpha.stitch(&[vec![0, 1], vec![2, 3]], None).unwrap();
        assert_eq!(w.pow_i64(2), alpha.perm);
        assert_eq!(tau3.order().as_prime(), Some(2));
        assert_eq!(tau3.decompose().num_cycles(), 6);
        // a single 6-cycle group is odd and refused
        assert!(alpha.stitch(&[vec![0, 1]], None).is_none());
        // ... unless a transposition on fixed points repairs the parity
        let alpha = PrimeElem::new(&p(11, "(1 2 3)(4 5 6)(7 8 9)")).unwrap();
        let (w, target) = alpha.stitch(&[vec![0, 1]], Some([9, 10])).unwrap();
        assert_eq!(w.pow_i64(2), alpha.perm);
        assert_eq!(
            target,
            p(11, "(10 11)")
                .compose(
                    &interleave(&[vec![1, 2, 3], vec![4, 5, 6]], 11)
                        .unwrap()
                        .pow_i64(3)
                )
                .unwrap()
        );
    }
}
