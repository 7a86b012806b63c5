use super::build::{remove_loops, PrimeElem, Route};
use super::general::prime_route;
use super::{certify, LemmaTag, PathWitness, SynthError, MIN_DEGREE};
use crate::bounds::{connectivity_condition, diam8_condition};
use crate::graph::{is_adjacent, AdjacencyCertificate};
use crate::perm::{PermError, Permutation};

#[derive(Debug, Clone, Default)]
pub struct PathOptions {
    /// Attempt synthesis even when the degree is outside the proven range.
    pub force: bool,
}

/// An element of prime order in the cyclic group of the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub reduced: Permutation,
    pub prime: u64,
    /// Edge from the input to `reduced`; `None` when the input already has prime order.
    pub certificate: Option<AdjacencyCertificate>,
}

/// `x^(o(x)/p)` for the least prime `p` dividing `o(x)`, computed cycle by cycle.
pub fn prime_order_reduction(x: &Permutation) -> Result<Reduction, SynthError> {
    if x.is_identity() {
        return Err(SynthError::Identity);
    }
    let order = x.order();
    let p = order.least_prime().expect("nonidentity");
    if order.as_prime().is_some() {
        return Ok(Reduction {
            reduced: x.clone(),
            prime: p,
            certificate: None,
        });
    }
    let mut images: Vec<u32> = x.raw().to_vec();
    x.for_each_cycle(|c| {
        let t = c.len();
        let e = order.quotient_mod(p, t as u64) as usize;
        for (i, &pt) in c.iter().enumerate() {
            images[pt as usize] = c[(i + e) % t];
        }
    });
    let reduced = Permutation::from_raw(images);
    let certificate = is_adjacent(x, &reduced)?;
    debug_assert!(certificate.is_some());
    Ok(Reduction {
        reduced,
        prime: p,
        certificate,
    })
}

/// Certified path between any two nonidentity even permutations of degree `n`.
pub fn path_any(x: &Permutation, y: &Permutation, n: usize) -> Result<PathWitness, SynthError> {
    path_any_with(x, y, n, &PathOptions::default())
}

pub fn path_any_with(
    x: &Permutation,
    y: &Permutation,
    n: usize,
    options: &PathOptions,
) -> Result<PathWitness, SynthError> {
    for v in [x, y] {
        if v.degree() != n {
            return Err(PermError::DegreeMismatch {
                left: v.degree(),
                right: n,
            }
            .into());
        }
        if v.is_identity() {
            return Err(SynthError::Identity);
        }
        if !v.is_even() {
            return Err(SynthError::Odd(v.to_string()));
        }
    }
    let proven = n >= MIN_DEGREE && connectivity_condition(n);
    if !proven && !options.force {
        return Err(if n < MIN_DEGREE {
            SynthError::DegreeTooSmall { n, min: MIN_DEGREE }
        } else {
            SynthError::Hypothesis { n }
        });
    }
    let diam8 = n >= 5 && diam8_condition(n);
    let tag = if diam8 {
        LemmaTag::Diam8_35
    } else {
        LemmaTag::AnyPair31
    };
    if x == y {
        let mut w = certify(vec![x.clone()], tag, 0, "equal")?;
        w.best_effort = !proven;
        return Ok(w);
    }
    let rx = prime_order_reduction(x)?;
    let ry = prime_order_reduction(y)?;
    let steps = usize::from(rx.certificate.is_some()) + usize::from(ry.certificate.is_some());
    let a = PrimeElem::new(&rx.reduced).expect("prime order");
    let b = PrimeElem::new(&ry.reduced).expect("prime order");
    let plan = prime_route(&a, &b, diam8)?;
    let mut route = vec![x.clone()];
    route.extend(plan.route.vertices);
    route.push(y.clone());
    route.dedup();
    let Route { case, .. } = plan.route;
    let mut w = certify(remove_loops(route), tag, steps + plan.bound, case)?;
    w.best_effort = !proven;
    Ok(w)
}

/// Greedily replaces the longest-spanning pair of vertices that are adjacent by a direct edge.
pub fn shortcut(path: &PathWitness) -> Result<PathWitness, SynthError> {
    let mut v = path.vertices.clone();
    loop {
        let mut found = None;
        'outer: for span in (2..v.len()).rev() {
            for i in 0..v.len() - span {
                let j = i + span;
                if v[i] == v[j] || is_adjacent(&v[i], &v[j])?.is_some() {
                    found = Some((i, j));
                    break 'outer;
                }
            }
        }
        match found {
            Some((i, j)) => {
                v.drain(i + 1..j);
                if v[i] == v[i + 1] {
                    v.remove(i + 1);
                }
            }
            None => break,
        }
    }
    let mut w = certify(v, path.lemma_tag, path.declared_bound, path.case.clone())?;
    w.best_effort = path.best_effort;
    Ok(w)
}
