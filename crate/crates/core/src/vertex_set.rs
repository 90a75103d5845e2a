/// A set of vertex ids of some host graph, kept sorted and duplicate-free.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet {
    members: Vec<usize>,
}

impl VertexSet {
    pub fn new() -> VertexSet {
        VertexSet::default()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn insert(&mut self, v: usize) -> bool {
        match self.members.binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.members.insert(pos, v);
                true
            }
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.members
    }

    pub fn max(&self) -> Option<usize> {
        self.members.last().copied()
    }

    /// Membership as a dense bitmap over `0..n`.
    pub fn to_mask(&self, n: usize) -> Vec<bool> {
        let mut mask = vec![false; n];
        for &v in &self.members {
            mask[v] = true;
        }
        mask
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.members.iter().all(|&v| !other.contains(v))
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.iter().chain(other.iter()).collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> VertexSet {
        let mut members: Vec<usize> = iter.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        VertexSet { members }
    }
}

impl Extend<usize> for VertexSet {
    fn extend<I: IntoIterator<Item = usize>>(&mut self, iter: I) {
        self.members.extend(iter);
        self.members.sort_unstable();
        self.members.dedup();
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, usize>>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter().copied()
    }
}
