//! Pairs whose prime orders multiply to at most 9, i.e. orders in {2, 3}.

use super::build::{
    free_element, push_bridge, remove_loops, support_set, trivial_route, PrimeElem, Route,
};
use super::{certify, check_degree, LemmaTag, PathWitness, SynthError};
use crate::perm::Permutation;
use crate::pointset::PointSet;

pub fn path_prime_small(
    alpha: &Permutation,
    beta: &Permutation,
    n: usize,
) -> Result<PathWitness, SynthError> {
    check_degree(n)?;
    let (a, b) = super::prime_pair(alpha, beta, n)?;
    if a.p * b.p > 9 {
        return Err(SynthError::Precondition(format!(
            "orders {} and {} multiply to more than 9",
            a.p, b.p
        )));
    }
    let route = small_route(&a, &b)?;
    certify(
        remove_loops(route.vertices),
        LemmaTag::PrimeSmall23,
        6,
        route.case,
    )
}

pub(crate) fn small_route(a: &PrimeElem, b: &PrimeElem) -> Result<Route, SynthError> {
    if let Some(v) = trivial_route(a, b)? {
        return Ok(Route::new(v, "direct"));
    }
    match (a.p, b.p) {
        (3, 3) => threes(a, b),
        (2, 2) => twos(a, b),
        (2, 3) => mixed(a, b),
        (3, 2) => mixed(b, a).map(Route::reversed),
        (p, q) => Err(SynthError::Precondition(format!(
            "orders {p} and {q} are not both in {{2, 3}}"
        ))),
    }
}

fn stuck(what: &str) -> SynthError {
    SynthError::Unhandled(what.to_string())
}

/// `(w, w^t)` for one group of `h` cycles of `x` avoiding `avoid`.
fn stitch_avoiding(
    x: &PrimeElem,
    h: usize,
    avoid: &PointSet,
) -> Result<(Permutation, Permutation), SynthError> {
    let cycles = x
        .cycles_avoiding(h, avoid)
        .ok_or_else(|| stuck("too few cycles clear of the other side"))?;
    x.stitch(&[cycles], None)
        .ok_or_else(|| stuck("stitch left the alternating group"))
}

/// Order-2 element on four cycles of an order-3 element, clear of `avoid`.
fn two_six_cycles(x: &PrimeElem, avoid: &PointSet) -> Option<(Permutation, Permutation)> {
    let c = x.cycles_avoiding(4, avoid)?;
    x.stitch(&[vec![c[0], c[1]], vec![c[2], c[3]]], None)
}

/// `... ~ t ~ w ~ x` appended to a route ending at a vertex disjoint from `t`.
fn finish_with_stitch(
    route: &mut Vec<Permutation>,
    w: Permutation,
    t: Permutation,
    x: &PrimeElem,
) -> Result<(), SynthError> {
    push_bridge(route, &t)?;
    route.push(w);
    route.push(x.perm.clone());
    Ok(())
}

fn threes(a: &PrimeElem, b: &PrimeElem) -> Result<Route, SynthError> {
    let n = a.n();
    let empty = PointSet::new(n);
    if a.k() >= 4 && b.k() >= 4 {
        if let Some(pts) = a.support.union(&b.support).smallest_outside(4) {
            let x = free_element(n, 2, &pts);
            let mut r = vec![a.perm.clone()];
            push_bridge(&mut r, &x)?;
            push_bridge(&mut r, &b.perm)?;
            return Ok(Route::new(r, "common double transposition"));
        }
        let x = free_element(n, 2, &a.free_avoiding(4, &empty).expect("k >= 4"));
        let sx = support_set(&x);
        let mut r = vec![a.perm.clone()];
        push_bridge(&mut r, &x)?;
        if let Some(pts) = b.support.union(&sx).smallest_outside(5) {
            let y = free_element(n, 5, &pts);
            push_bridge(&mut r, &y)?;
            push_bridge(&mut r, &b.perm)?;
            return Ok(Route::new(r, "5-cycle middle"));
        }
        let (w, t) = stitch_avoiding(b, 5, &sx)?;
        finish_with_stitch(&mut r, w, t, b)?;
        return Ok(Route::new(r, "15-cycle stitch"));
    }
    if a.k() >= 4 {
        let x = free_element(n, 2, &a.free_avoiding(4, &empty).expect("k >= 4"));
        let (w, t) = stitch_avoiding(b, 5, &support_set(&x))?;
        let mut r = vec![a.perm.clone()];
        push_bridge(&mut r, &x)?;
        finish_with_stitch(&mut r, w, t, b)?;
        return Ok(Route::new(r, "15-cycle stitch"));
    }
    if b.k() >= 4 {
        return threes(b, a).map(Route::reversed);
    }
    let (w1, tau) = two_six_cycles(a, &empty).ok_or_else(|| stuck("too few 3-cycles"))?;
    let (w2, t) = stitch_avoiding(b, 5, &support_set(&tau))?;
    let mut r = vec![a.perm.clone(), w1, tau];
    finish_with_stitch(&mut r, w2, t, b)?;
    Ok(Route::new(r, "two 6-cycles against a 15-cycle"))
}

/// An order-3 element two steps from the involution `a`, preferring points clear of `b`.
fn order_three_near(a: &PrimeElem, b: &PrimeElem) -> Result<Vec<Permutation>, SynthError> {
    let n = a.n();
    let mut r = vec![a.perm.clone()];
    if a.k() >= 3 {
        let pts = a
            .free_avoiding(3, &b.support)
            .or_else(|| a.free_avoiding(3, &PointSet::new(n)))
            .expect("k >= 3");
        push_bridge(&mut r, &free_element(n, 3, &pts))?;
    } else {
        let (w, t) = a
            .stitch(&[vec![0, 1, 2]], None)
            .ok_or_else(|| stuck("too few transpositions"))?;
        r.push(w);
        r.push(t);
    }
    Ok(r)
}

/// From an order-3 vertex `c` (last on `r`) to the involution `b`.
fn three_to_involution(
    mut r: Vec<Permutation>,
    b: &PrimeElem,
) -> Result<Vec<Permutation>, SynthError> {
    let n = b.n();
    let c = r.last().expect("route is never empty").clone();
    let sc = support_set(&c);
    if sc.is_disjoint(&b.support) {
        push_bridge(&mut r, &b.perm)?;
    } else if let Some(pts) = b.support.union(&sc).smallest_outside(5) {
        push_bridge(&mut r, &free_element(n, 5, &pts))?;
        push_bridge(&mut r, &b.perm)?;
    } else {
        let (w, t) = stitch_avoiding(b, 5, &sc)?;
        finish_with_stitch(&mut r, w, t, b)?;
    }
    Ok(r)
}

fn twos(a: &PrimeElem, b: &PrimeElem) -> Result<Route, SynthError> {
    if a.k() < 3 && b.k() >= 3 {
        return twos(b, a).map(Route::reversed);
    }
    let r = order_three_near(a, b)?;
    Ok(Route::new(
        three_to_involution(r, b)?,
        "order-3 intermediary",
    ))
}

/// `a` of order 2, `b` of order 3.
fn mixed(a: &PrimeElem, b: &PrimeElem) -> Result<Route, SynthError> {
    let n = a.n();
    let empty = PointSet::new(n);
    let mut r = vec![a.perm.clone()];
    if a.k() >= 3 {
        if b.k() >= 4 {
            if let Some(pts) = a.support.union(&b.support).smallest_outside(5) {
                push_bridge(&mut r, &free_element(n, 5, &pts))?;
                push_bridge(&mut r, &b.perm)?;
                return Ok(Route::new(r, "5-cycle middle"));
            }
        }
        let c = free_element(n, 3, &a.free_avoiding(3, &empty).expect("k >= 3"));
        let sc = support_set(&c);
        push_bridge(&mut r, &c)?;
        if let Some((w, tau)) = two_six_cycles(b, &sc) {
            finish_with_stitch(&mut r, w, tau, b)?;
            return Ok(Route::new(r, "3-cycle against two 6-cycles"));
        }
        let pts = b
            .support
            .union(&sc)
            .smallest_outside(4)
            .ok_or_else(|| stuck("no room for a double transposition"))?;
        push_bridge(&mut r, &free_element(n, 2, &pts))?;
        push_bridge(&mut r, &b.perm)?;
        return Ok(Route::new(r, "3-cycle and double transposition"));
    }
    if b.k() >= 4 {
        let x = free_element(n, 2, &b.free_avoiding(4, &empty).expect("k' >= 4"));
        let (w, t) = stitch_avoiding(a, 5, &support_set(&x))?;
        r.push(w);
        r.push(t);
        push_bridge(&mut r, &x)?;
        push_bridge(&mut r, &b.perm)?;
        return Ok(Route::new(r, "10-cycle stitch and double transposition"));
    }
    let (w1, c) = a
        .stitch(&[vec![0, 1, 2]], None)
        .ok_or_else(|| stuck("too few transpositions"))?;
    let (w2, t) = stitch_avoiding(b, 5, &support_set(&c))?;
    r.push(w1);
    r.push(c);
    finish_with_stitch(&mut r, w2, t, b)?;
    Ok(Route::new(r, "6-cycle against a 15-cycle"))
}
