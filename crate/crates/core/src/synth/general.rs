use super::build::{
    free_element, push_bridge, remove_loops, support_set, trivial_route, PrimeElem, Route,
};
use super::hubs::meet;
use super::small::small_route;
use super::three::path_3cycles;
use super::{certify, check_degree, LemmaTag, PathWitness, SynthError};
use crate::bounds::diam8_condition;
use crate::perm::Permutation;
use crate::pointset::PointSet;

pub fn path_prime_general(
    alpha: &Permutation,
    beta: &Permutation,
    n: usize,
) -> Result<PathWitness, SynthError> {
    check_degree(n)?;
    let (a, b) = super::prime_pair(alpha, beta, n)?;
    let plan = prime_route(&a, &b, diam8_condition(n))?;
    certify(
        remove_loops(plan.route.vertices),
        plan.tag,
        plan.bound,
        plan.route.case,
    )
}

pub(crate) struct Plan {
    pub route: Route,
    pub tag: LemmaTag,
    pub bound: usize,
}

impl Plan {
    fn reversed(mut self) -> Self {
        self.route = self.route.reversed();
        self
    }
}

/// Few cycles on almost every point.
fn corner_shaped(x: &PrimeElem) -> bool {
    x.m() == 3 && x.k() < 3
}

pub(crate) fn prime_route(a: &PrimeElem, b: &PrimeElem, diam8: bool) -> Result<Plan, SynthError> {
    if a.p * b.p <= 9 {
        return Ok(Plan {
            route: small_route(a, b)?,
            tag: LemmaTag::PrimeSmall23,
            bound: 6,
        });
    }
    // the corner shape decides which side gets the 3q-cycle root; otherwise p <= q
    let swap = if corner_shaped(a) != corner_shaped(b) {
        corner_shaped(a)
    } else {
        a.p > b.p
    };
    if swap {
        return prime_route(b, a, diam8).map(Plan::reversed);
    }
    let (tag, bound) = if diam8 {
        (LemmaTag::Diam8_35, 6)
    } else {
        (LemmaTag::PrimeGeneral24, 8)
    };
    let plan = |route: Route, bound: usize| Plan { route, tag, bound };
    if let Some(v) = trivial_route(a, b)? {
        return Ok(plan(Route::new(v, "direct"), bound));
    }
    if diam8 {
        return meet(a, b, 6)?
            .map(|v| plan(Route::new(v, "hub search"), 6))
            .ok_or_else(|| SynthError::Unhandled(format!("orders {} and {}", a.p, b.p)));
    }
    if corner_shaped(b) {
        return three_cycle_root(a, b).map(|r| {
            let bound = if a.k() < 3 { 10 } else { 8 };
            plan(r, bound)
        });
    }
    if a.k() >= 3 && b.k() >= 3 && a.p != 3 {
        return via_three_cycles(a, b).map(|r| plan(r, 8));
    }
    meet(a, b, 8)?
        .map(|v| plan(Route::new(v, "hub search"), 8))
        .ok_or_else(|| SynthError::Unhandled(format!("orders {} and {}", a.p, b.p)))
}

/// `b` is three `q`-cycles on all but at most two points: go through the
/// `3q`-cycle `y` with `y^3 = b` and its order-3 power `y^q`.
fn three_cycle_root(a: &PrimeElem, b: &PrimeElem) -> Result<Route, SynthError> {
    let n = a.n();
    let (y, yq) = b
        .stitch(&[vec![0, 1, 2]], None)
        .ok_or_else(|| SynthError::Unhandled("3q-cycle is odd".into()))?;
    let ye = PrimeElem::new(&yq).expect("y^q has order 3");
    let stuck = || SynthError::Unhandled("too few 3-cycles clear of the other side".into());
    let (mut r, case) = if a.k() < 3 {
        let mut head = vec![a.perm.clone()];
        let a3 = if a.p == 3 {
            a.clone()
        } else {
            let (w, t) = a
                .stitch(&[vec![0, 1, 2]], None)
                .ok_or_else(|| SynthError::Unhandled("3p-cycle is odd".into()))?;
            head.push(w);
            head.push(t.clone());
            PrimeElem::new(&t).expect("order 3")
        };
        let mid = small_route(&a3, &ye)?;
        head.extend(mid.vertices.into_iter().skip(1));
        (head, "two 3q-cycle roots")
    } else if a.p != 3 {
        let empty = PointSet::new(n);
        let c = free_element(n, 3, &a.free_avoiding(3, &empty).expect("k >= 3"));
        let g = ye.cycles_avoiding(4, &support_set(&c)).ok_or_else(stuck)?;
        let (w, tau) = ye
            .stitch(&[vec![g[0], g[1]], vec![g[2], g[3]]], None)
            .ok_or_else(stuck)?;
        let mut r = vec![a.perm.clone()];
        push_bridge(&mut r, &c)?;
        push_bridge(&mut r, &tau)?;
        r.push(w);
        r.push(yq.clone());
        (r, "3-cycle against a 3q-cycle root")
    } else {
        let mut r = vec![a.perm.clone()];
        let e = if a.m() == 1 {
            a.perm.clone()
        } else {
            let uv = a.free_avoiding(2, &PointSet::new(n)).expect("k >= 3");
            let (w, e) = a
                .stitch(&[vec![0, 1]], Some([uv[0], uv[1]]))
                .ok_or_else(|| SynthError::Unhandled("6-cycle root is odd".into()))?;
            r.push(w);
            r.push(e.clone());
            e
        };
        let g = ye.cycles_avoiding(5, &support_set(&e)).ok_or_else(stuck)?;
        let (w, tau) = ye.stitch(&[g], None).ok_or_else(stuck)?;
        push_bridge(&mut r, &tau)?;
        r.push(w);
        r.push(yq.clone());
        (r, "transposition-twisted 6-cycle against a 3q-cycle root")
    };
    if r.last() != Some(&yq) {
        r.push(yq);
    }
    r.push(y);
    r.push(b.perm.clone());
    Ok(Route::new(r, case))
}

/// 3-cycles on fixed points of each side, joined as two 3-cycles.
fn via_three_cycles(a: &PrimeElem, b: &PrimeElem) -> Result<Route, SynthError> {
    let n = a.n();
    let empty = PointSet::new(n);
    let c = free_element(n, 3, &a.free_avoiding(3, &empty).expect("k >= 3"));
    let c2 = free_element(n, 3, &b.free_avoiding(3, &empty).expect("k' >= 3"));
    let mid = path_3cycles(&c, &c2, n)?;
    let mut r = vec![a.perm.clone(), a.perm.compose(&c)?];
    r.extend(mid.vertices);
    push_bridge(&mut r, &b.perm)?;
    Ok(Route::new(r, "3-cycles at both ends"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycles(n: usize, cs: &[Vec<usize>]) -> Permutation {
        Permutation::from_cycles(n, cs).unwrap()
    }

    fn run(a: &[Vec<usize>], b: &[Vec<usize>]) -> PathWitness {
        let w = path_prime_general(&cycles(52, a), &cycles(52, b), 52).unwrap();
        w.validate().unwrap();
        w
    }

    #[test]
    fn coprime_disjoint_pair_is_a_bridge() {
        let w = run(&[(1..=5).collect()], &[(10..=16).collect()]);
        assert_eq!(w.len(), 2);
    }

    #[test]
    fn long_cycles_with_fixed_points() {
        let a: Vec<usize> = (1..=47).collect();
        let b: Vec<usize> = (6..=52).rev().collect();
        let w = run(&[a], &[b]);
        assert!(w.len() <= 8);
        assert_eq!(w.case, "3-cycles at both ends");
    }

    #[test]
    fn corner_case_three_17_cycles() {
        let a: Vec<Vec<usize>> = (0..3)
            .map(|i| (17 * i + 1..=17 * i + 17).collect())
            .collect();
        let b: Vec<Vec<usize>> = (0..3)
            .map(|i| (0..17).map(|j| 2 + i + 3 * j).collect())
            .collect();
        let w = run(&a, &b);
        assert_eq!(w.declared_bound, 10);
        assert!(w.len() <= 10);
    }

    #[test]
    fn corner_shape_on_one_side_only() {
        let a: Vec<Vec<usize>> = (0..3)
            .map(|i| (17 * i + 1..=17 * i + 17).collect())
            .collect();
        let b: Vec<Vec<usize>> = vec![(20..=36).collect()];
        let w = run(&a, &b);
        assert_eq!(w.declared_bound, 8);
        assert_eq!(w.from(), &cycles(52, &a));
    }
}
