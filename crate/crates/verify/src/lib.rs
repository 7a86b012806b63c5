//! Slow, obviously-correct reference computations on raw image tables.
//!
//! Nothing here uses the library under test. Permutations are 0-based
//! image vectors: `x[i]` is the image of point `i`.

/// `is_prime[i]` for `0..=limit`, by the sieve of Eratosthenes.
pub fn sieve(limit: usize) -> Vec<bool> {
    let mut is_prime = vec![true; limit + 1];
    is_prime[0] = false;
    if limit >= 1 {
        is_prime[1] = false;
    }
    let mut i = 2;
    while i * i <= limit {
        if is_prime[i] {
            for j in (i * i..=limit).step_by(i) {
                is_prime[j] = false;
            }
        }
        i += 1;
    }
    is_prime
}

/// All partitions of `n`, parts in non-increasing order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Consecutive cycles on `0..`, one per part.
pub fn with_cycle_type(parts: &[usize]) -> Vec<usize> {
    let n = parts.iter().sum();
    let mut x: Vec<usize> = (0..n).collect();
    let mut start = 0;
    for &len in parts {
        for i in 0..len {
            x[start + i] = start + (i + 1) % len;
        }
        start += len;
    }
    x
}

/// `a` after `b`: `i -> a[b[i]]`.
pub fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&j| a[j]).collect()
}

/// Every permutation of `0..n` (Heap's algorithm).
pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut p: Vec<usize> = (0..n).collect();
    let mut c = vec![0; n];
    let mut out = vec![p.clone()];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            out.push(p.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// Number of elements of `S_n` commuting with `x`, by testing all of them.
pub fn commuting_count(x: &[usize]) -> u64 {
    all_permutations(x.len())
        .iter()
        .filter(|g| compose(g, x) == compose(x, g))
        .count() as u64
}

pub fn cycles(x: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; x.len()];
    let mut out = Vec::new();
    for s in 0..x.len() {
        if seen[s] {
            continue;
        }
        let mut c = Vec::new();
        let mut i = s;
        while !seen[i] {
            seen[i] = true;
            c.push(i);
            i = x[i];
        }
        out.push(c);
    }
    out
}

/// Some `g` with `g x g⁻¹ = y`, if `x` and `y` share a cycle type.
pub fn conjugator(x: &[usize], y: &[usize]) -> Option<Vec<usize>> {
    let mut cx = cycles(x);
    let mut cy = cycles(y);
    cx.sort_by_key(Vec::len);
    cy.sort_by_key(Vec::len);
    if cx.iter().map(Vec::len).ne(cy.iter().map(Vec::len)) {
        return None;
    }
    let mut g = vec![0; x.len()];
    for (a, b) in cx.iter().zip(&cy) {
        for (&i, &j) in a.iter().zip(b) {
            g[i] = j;
        }
    }
    Some(g)
}

pub fn inverse(x: &[usize]) -> Vec<usize> {
    let mut out = vec![0; x.len()];
    for (i, &j) in x.iter().enumerate() {
        out[j] = i;
    }
    out
}

pub fn is_even(x: &[usize]) -> bool {
    (x.len() - cycles(x).len()).is_multiple_of(2)
}

/// `x^e` with `e` a non-negative decimal string of any size.
pub fn pow_decimal(x: &[usize], e: &str) -> Vec<usize> {
    let mut out = vec![0; x.len()];
    for c in cycles(x) {
        let len = c.len();
        let r = e
            .bytes()
            .fold(0usize, |acc, d| (acc * 10 + usize::from(d - b'0')) % len);
        for (i, &p) in c.iter().enumerate() {
            out[p] = c[(i + r) % len];
        }
    }
    out
}

/// All distinct powers of `x`, identity included.
pub fn powers(x: &[usize]) -> Vec<Vec<usize>> {
    let id: Vec<usize> = (0..x.len()).collect();
    let mut out = vec![id.clone()];
    let mut cur = x.to_vec();
    while cur != id {
        out.push(cur.clone());
        cur = compose(x, &cur);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_primes() {
        let s = sieve(30);
        let primes: Vec<usize> = (0..=30).filter(|&i| s[i]).collect();
        assert_eq!(primes, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (1..=7).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, [1, 2, 3, 5, 7, 11, 15]);
    }

    #[test]
    fn heap_enumerates_distinct_permutations() {
        let mut all = all_permutations(5);
        assert_eq!(all.len(), 120);
        all.sort();
        all.dedup();
        assert_eq!(all.len(), 120);
    }

    #[test]
    fn commuting_counts_in_s4() {
        assert_eq!(commuting_count(&with_cycle_type(&[1, 1, 1, 1])), 24);
        assert_eq!(commuting_count(&with_cycle_type(&[2, 1, 1])), 4);
        assert_eq!(commuting_count(&with_cycle_type(&[4])), 4);
        assert_eq!(commuting_count(&with_cycle_type(&[2, 2])), 8);
    }

    #[test]
    fn decimal_powers_reduce_per_cycle() {
        let x = with_cycle_type(&[3, 2]);
        assert_eq!(pow_decimal(&x, "6"), (0..5).collect::<Vec<_>>());
        assert_eq!(pow_decimal(&x, "600000000000000000000000000000001"), x);
        assert_eq!(powers(&x).len(), 6);
    }

    #[test]
    fn conjugator_maps_one_type_onto_another() {
        let x = vec![2, 0, 1, 4, 3, 5];
        let y = with_cycle_type(&[3, 2, 1]);
        let g = conjugator(&x, &y).unwrap();
        assert_eq!(compose(&compose(&g, &x), &inverse(&g)), y);
        assert!(conjugator(&x, &with_cycle_type(&[3, 3])).is_none());
        assert!(!is_even(&x));
        assert!(!is_even(&y));
    }
}
