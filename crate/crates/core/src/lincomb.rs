use std::collections::BTreeMap;

/// A finite integer combination of generators, keyed by generator identity.
/// Zero coefficients are dropped as soon as they appear.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinComb<G: Ord>(BTreeMap<G, i64>);

impl<G: Ord> Default for LinComb<G> {
    fn default() -> Self {
        LinComb(BTreeMap::new())
    }
}

impl<G: Ord + Clone> LinComb<G> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(g: G, coefficient: i64) -> Self {
        let mut c = Self::zero();
        c.add_term(g, coefficient);
        c
    }

    pub fn add_term(&mut self, g: G, coefficient: i64) {
        if coefficient == 0 {
            return;
        }
        let entry = self.0.entry(g);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coefficient);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coefficient;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &LinComb<G>, factor: i64) {
        for (g, &c) in &other.0 {
            self.add_term(g.clone(), c * factor);
        }
    }

    pub fn scaled(&self, factor: i64) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, factor);
        out
    }

    pub fn map<H: Ord + Clone>(&self, mut f: impl FnMut(&G) -> H) -> LinComb<H> {
        let mut out = LinComb::zero();
        for (g, &c) in &self.0 {
            out.add_term(f(g), c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coefficient(&self, g: &G) -> i64 {
        self.0.get(g).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&G, i64)> {
        self.0.iter().map(|(g, &c)| (g, c))
    }
}

impl<G: Ord + Clone> FromIterator<(G, i64)> for LinComb<G> {
    fn from_iter<I: IntoIterator<Item = (G, i64)>>(iter: I) -> Self {
        let mut c = Self::zero();
        for (g, k) in iter {
            c.add_term(g, k);
        }
        c
    }
}
