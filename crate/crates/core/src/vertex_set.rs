use fixedbitset::FixedBitSet;

/// Dense membership bitmap over the vertex ids `0..n` with a cached
/// cardinality.
#[derive(Clone, PartialEq, Eq)]
pub struct VertexSet {
    bits: FixedBitSet,
    len: usize,
}

impl VertexSet {
    pub fn new(universe: usize) -> Self {
        Self {
            bits: FixedBitSet::with_capacity(universe),
            len: 0,
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(universe);
        bits.insert_range(..);
        Self {
            bits,
            len: universe,
        }
    }

    /// Builds a set from ids; panics if an id is outside the universe.
    pub fn from_iter<I: IntoIterator<Item = usize>>(universe: usize, ids: I) -> Self {
        let mut set = Self::new(universe);
        for v in ids {
            set.insert(v);
        }
        set
    }

    #[inline]
    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.bits.contains(v)
    }

    /// Returns true if `v` was not yet a member.
    #[inline]
    pub fn insert(&mut self, v: usize) -> bool {
        let fresh = !self.bits.put(v);
        if fresh {
            self.len += 1;
        }
        fresh
    }

    #[inline]
    pub fn remove(&mut self, v: usize) -> bool {
        let present = self.bits.contains(v);
        if present {
            self.bits.set(v, false);
            self.len -= 1;
        }
        present
    }

    /// Members in increasing id order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.bits.union_with(&other.bits);
        self.len = self.bits.count_ones(..);
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        self.bits.intersect_with(&other.bits);
        self.len = self.bits.count_ones(..);
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.bits.intersection_count(&other.bits)
    }

    pub fn union_len(&self, other: &VertexSet) -> usize {
        self.bits.union_count(&other.bits)
    }

    /// Complement with respect to the universe.
    pub fn complement(&self) -> VertexSet {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        let len = self.universe() - self.len;
        VertexSet { bits, len }
    }
}

impl std::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
