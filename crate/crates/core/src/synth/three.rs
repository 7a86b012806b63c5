use super::build::{free_element, support_set};
use super::{certify, LemmaTag, PathWitness, SynthError};
use crate::graph::is_adjacent;
use crate::perm::Permutation;

fn is_three_cycle(c: &Permutation) -> bool {
    let lens = c.cycle_lengths();
    lens == [3]
}

/// `c ~ cx ~ x ~ c'x ~ c'` through a double transposition `x` on the four
/// smallest points moved by neither 3-cycle.
pub fn path_3cycles(
    c: &Permutation,
    c2: &Permutation,
    n: usize,
) -> Result<PathWitness, SynthError> {
    if n < 10 {
        return Err(SynthError::Precondition(format!("need n >= 10, got {n}")));
    }
    for x in [c, c2] {
        if x.degree() != n {
            return Err(crate::perm::PermError::DegreeMismatch {
                left: x.degree(),
                right: n,
            }
            .into());
        }
        if !is_three_cycle(x) {
            return Err(SynthError::NotThreeCycle(x.to_string()));
        }
    }
    let tag = LemmaTag::ThreeCycles22;
    if c == c2 {
        return certify(vec![c.clone()], tag, 4, "equal");
    }
    if is_adjacent(c, c2)?.is_some() {
        return certify(vec![c.clone(), c2.clone()], tag, 4, "same subgroup");
    }
    let pts = support_set(c)
        .union(&support_set(c2))
        .smallest_outside(4)
        .expect("at most six points are moved");
    let x = free_element(n, 2, &pts);
    let vertices = vec![
        c.clone(),
        c.compose(&x)?,
        x.clone(),
        c2.compose(&x)?,
        c2.clone(),
    ];
    certify(vertices, tag, 4, "double transposition")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::notation::parse_cycles;

    fn p(s: &str) -> Permutation {
        parse_cycles(s, 10).unwrap()
    }

    #[test]
    fn disjoint_pair() {
        let w = path_3cycles(&p("(1 2 3)"), &p("(4 5 6)"), 10).unwrap();
        assert_eq!(w.len(), 4);
        assert_eq!(w.vertices[2], p("(7 8)(9 10)"));
        w.validate().unwrap();
    }

    #[test]
    fn overlapping_pair() {
        let w = path_3cycles(&p("(1 2 3)"), &p("(2 3 4)"), 10).unwrap();
        assert_eq!(w.vertices[2], p("(5 6)(7 8)"));
        assert_eq!(w.len(), 4);
    }

    #[test]
    fn same_subgroup_is_one_step() {
        let w = path_3cycles(&p("(1 2 3)"), &p("(1 3 2)"), 10).unwrap();
        assert_eq!(w.len(), 1);
        assert_eq!(
            path_3cycles(&p("(1 2 3)"), &p("(1 2 3)"), 10)
                .unwrap()
                .len(),
            0
        );
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            path_3cycles(&p("(1 2)(3 4)"), &p("(1 2 3)"), 10),
            Err(SynthError::NotThreeCycle(_))
        ));
        let c = parse_cycles("(1 2 3)", 9).unwrap();
        assert!(matches!(
            path_3cycles(&c, &c, 9),
            Err(SynthError::Precondition(_))
        ));
    }
}
