//! Fixed-size bitsets over 0-based points.

#[derive(Clone, PartialEq, Eq, Debug)]
pub(crate) struct PointSet {
    n: usize,
    words: Vec<u64>,
}

impl PointSet {
    pub fn new(n: usize) -> Self {
        PointSet {
            n,
            words: vec![0; n.div_ceil(64)],
        }
    }

    pub fn from_points(n: usize, points: impl IntoIterator<Item = u32>) -> Self {
        let mut s = PointSet::new(n);
        for p in points {
            s.insert(p);
        }
        s
    }

    pub fn insert(&mut self, p: u32) {
        self.words[p as usize / 64] |= 1 << (p % 64);
    }

    pub fn contains(&self, p: u32) -> bool {
        self.words[p as usize / 64] >> (p % 64) & 1 == 1
    }

    pub fn union_with(&mut self, other: &PointSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn union(&self, other: &PointSet) -> PointSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn is_disjoint(&self, other: &PointSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// The `count` smallest points not in the set.
    pub fn smallest_outside(&self, count: usize) -> Option<Vec<u32>> {
        let out: Vec<u32> = (0..self.n as u32)
            .filter(|&p| !self.contains(p))
            .take(count)
            .collect();
        (out.len() == count).then_some(out)
    }

    pub fn free_count(&self) -> usize {
        self.n - self.len()
    }
}
