//! Bounded meet-in-the-middle search over short constructions.
//!
//! A hub of `x` is a prime-order element reachable from `x` by a known
//! construction: `x` itself, a bridge to an element on fixed points of `x`,
//! or a stitch over some cycles of `x`. Two hubs are joined directly, by a
//! bridge, or through a third prime order on points neither moves.

use super::build::{free_element, free_element_size, PrimeElem};
use super::SynthError;
use crate::graph::cyclic_membership;
use crate::perm::Permutation;
use crate::pointset::PointSet;

const HUB_ORDERS: [u64; 4] = [3, 2, 5, 7];

struct Hub {
    elem: PrimeElem,
    /// Vertices after the origin, ending at the hub.
    route: Vec<Permutation>,
}

#[derive(Clone, Copy)]
enum Near<'a> {
    Any,
    /// Clear of these points.
    Avoid(&'a PointSet),
    /// Overlapping these points as much as possible.
    Hug(&'a PointSet),
}

fn pick_free(x: &PrimeElem, count: usize, near: Near) -> Option<Vec<u32>> {
    match near {
        Near::Any => x.support.smallest_outside(count),
        Near::Avoid(s) => x.free_avoiding(count, s),
        Near::Hug(s) => {
            let mut pts: Vec<u32> = (0..x.n() as u32)
                .filter(|&p| !x.support.contains(p))
                .collect();
            if pts.len() < count {
                return None;
            }
            pts.sort_by_key(|&p| (!s.contains(p), p));
            pts.truncate(count);
            Some(pts)
        }
    }
}

fn pick_cycles(x: &PrimeElem, count: usize, near: Near) -> Option<Vec<usize>> {
    if x.m() < count {
        return None;
    }
    match near {
        Near::Any => Some((0..count).collect()),
        Near::Avoid(s) => x.cycles_avoiding(count, s),
        Near::Hug(s) => {
            let mut idx: Vec<(usize, usize)> = x
                .cycles
                .iter()
                .enumerate()
                .map(|(i, c)| (c.iter().filter(|&&p| s.contains(p)).count(), i))
                .collect();
            idx.sort_by_key(|&(overlap, i)| (std::cmp::Reverse(overlap), i));
            Some(idx[..count].iter().map(|&(_, i)| i).collect())
        }
    }
}

fn hubs(x: &PrimeElem, near: Near) -> Vec<Hub> {
    let n = x.n();
    let mut out = vec![Hub {
        elem: x.clone(),
        route: Vec::new(),
    }];
    let mut push = |perm: Permutation, route: Vec<Permutation>| {
        if let Some(elem) = PrimeElem::new(&perm) {
            out.push(Hub { elem, route });
        }
    };
    for r in HUB_ORDERS {
        if r == x.p {
            continue;
        }
        if let Some(pts) = pick_free(x, free_element_size(r), near) {
            let f = free_element(n, r, &pts);
            let xf = x.perm.compose(&f).expect("same degree");
            push(f.clone(), vec![xf, f]);
        }
        let h = r as usize;
        let mut shapes = Vec::new();
        if h == 2 {
            if let Some(c) = pick_cycles(x, 4, near) {
                shapes.push((vec![vec![c[0], c[1]], vec![c[2], c[3]]], None));
            }
            if let (Some(c), Some(uv)) = (pick_cycles(x, 2, near), pick_free(x, 2, near)) {
                shapes.push((vec![c], Some([uv[0], uv[1]])));
            }
        } else if let Some(c) = pick_cycles(x, h, near) {
            shapes.push((vec![c], None));
        }
        for (groups, extra) in shapes {
            if let Some((w, t)) = x.stitch(&groups, extra) {
                push(t.clone(), vec![w, t]);
            }
        }
    }
    out
}

/// Shortest known join of two hubs, endpoints included.
fn link(a: &PrimeElem, b: &PrimeElem) -> Result<Option<Vec<Permutation>>, SynthError> {
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
    let used = a.support.union(&b.support);
    for r in HUB_ORDERS {
        if r == a.p || r == b.p {
            continue;
        }
        if let Some(pts) = used.smallest_outside(free_element_size(r)) {
            let d = free_element(a.n(), r, &pts);
            return Ok(Some(vec![
                a.perm.clone(),
                a.perm.compose(&d)?,
                d.clone(),
                d.compose(&b.perm)?,
                b.perm.clone(),
            ]));
        }
    }
    Ok(None)
}

struct Search<'a> {
    a: &'a PrimeElem,
    b: &'a PrimeElem,
    best: Option<Vec<Permutation>>,
}

impl Search<'_> {
    fn best_len(&self) -> usize {
        self.best.as_ref().map_or(usize::MAX, |r| r.len() - 1)
    }

    fn consider(&mut self, x: &Hub, y: &Hub) -> Result<(), SynthError> {
        let floor = x.route.len() + y.route.len();
        if floor >= self.best_len() {
            return Ok(());
        }
        let Some(mid) = link(&x.elem, &y.elem)? else {
            return Ok(());
        };
        if floor + mid.len() > self.best_len() {
            return Ok(());
        }
        let mut route = Vec::with_capacity(floor + mid.len() + 1);
        route.push(self.a.perm.clone());
        route.extend(x.route.iter().cloned());
        route.extend(mid.into_iter().skip(1));
        if !y.route.is_empty() {
            route.extend(y.route.iter().rev().skip(1).cloned());
            route.push(self.b.perm.clone());
        }
        self.best = Some(route);
        Ok(())
    }

    /// Pairs every hub of `xs` with the hubs of the far side fitted to it.
    fn against(&mut self, xs: &[Hub], far_is_b: bool, budget: usize) -> Result<(), SynthError> {
        let far = if far_is_b { self.b } else { self.a };
        for x in xs {
            if x.route.len() >= self.best_len().min(budget + 1) {
                continue;
            }
            for near in [Near::Avoid(&x.elem.support), Near::Hug(&x.elem.support)] {
                for y in hubs(far, near) {
                    if far_is_b {
                        self.consider(x, &y)?;
                    } else {
                        self.consider(&y, x)?;
                    }
                }
            }
        }
        Ok(())
    }
}

fn second_level(first: &[Hub]) -> Vec<Hub> {
    let mut out = Vec::new();
    for h in first.iter().filter(|h| !h.route.is_empty()) {
        for g in hubs(&h.elem, Near::Any).into_iter().skip(1) {
            let mut route = h.route.clone();
            route.extend(g.route);
            out.push(Hub {
                elem: g.elem,
                route,
            });
        }
    }
    out
}

/// A route from `a` to `b` of length at most `budget`, if the search finds one.
pub(crate) fn meet(
    a: &PrimeElem,
    b: &PrimeElem,
    budget: usize,
) -> Result<Option<Vec<Permutation>>, SynthError> {
    let mut s = Search { a, b, best: None };
    let ha = hubs(a, Near::Any);
    let hb = hubs(b, Near::Any);
    for x in &ha {
        for y in &hb {
            s.consider(x, y)?;
        }
    }
    s.against(&ha, true, budget)?;
    s.against(&hb, false, budget)?;
    if s.best_len() > budget && budget >= 6 {
        let ha2 = second_level(&ha);
        s.against(&ha2, true, budget)?;
        let hb2 = second_level(&hb);
        s.against(&hb2, false, budget)?;
    }
    Ok(s.best.filter(|r| r.len() - 1 <= budget))
}
