use std::collections::btree_map::{self, Entry};
use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use super::scalar::Scalar;

/// A finite linear combination of basis keys with exact coefficients.
///
/// Zero coefficients are never stored and iteration follows the key order,
/// so two combinations are mathematically equal iff they are structurally equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<B: Ord> {
    terms: BTreeMap<B, Scalar>,
}

impl<B: Ord> Default for LinComb<B> {
    fn default() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }
}

impl<B: Ord + Clone> LinComb<B> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(key: B) -> Self {
        Self::term(key, Scalar::one())
    }

    pub fn term(key: B, coeff: Scalar) -> Self {
        let mut out = Self::zero();
        out.add_term(key, coeff);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &B) -> Scalar {
        self.terms.get(key).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, B, Scalar> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, B, Scalar> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, key: B, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, c: &Scalar, other: &LinComb<B>) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.terms {
            self.add_term(k.clone(), c * v);
        }
    }

    pub fn add_assign(&mut self, other: &LinComb<B>) {
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v.clone());
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LinComb {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), c * v)).collect(),
        }
    }

    /// Applies a linear map given on basis keys and sums the results.
    pub fn map_linear<C, F>(&self, mut f: F) -> LinComb<C>
    where
        C: Ord + Clone,
        F: FnMut(&B) -> LinComb<C>,
    {
        let mut out = LinComb::zero();
        for (k, v) in &self.terms {
            out.add_scaled(v, &f(k));
        }
        out
    }

    /// Relabels keys; colliding images are summed.
    pub fn map_keys<C, F>(&self, mut f: F) -> LinComb<C>
    where
        C: Ord + Clone,
        F: FnMut(&B) -> C,
    {
        let mut out = LinComb::zero();
        for (k, v) in &self.terms {
            out.add_term(f(k), v.clone());
        }
        out
    }

    pub fn filter<F: FnMut(&B) -> bool>(&self, mut keep: F) -> Self {
        LinComb {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| keep(k))
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }
}

impl<B: Ord + Clone> FromIterator<(B, Scalar)> for LinComb<B> {
    fn from_iter<I: IntoIterator<Item = (B, Scalar)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl<'a, B: Ord> IntoIterator for &'a LinComb<B> {
    type Item = (&'a B, &'a Scalar);
    type IntoIter = btree_map::Iter<'a, B, Scalar>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<B: Ord> IntoIterator for LinComb<B> {
    type Item = (B, Scalar);
    type IntoIter = btree_map::IntoIter<B, Scalar>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<B: Ord + Clone> Add for &LinComb<B> {
    type Output = LinComb<B>;
    fn add(self, rhs: Self) -> LinComb<B> {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }
}

impl<B: Ord + Clone> Sub for &LinComb<B> {
    type Output = LinComb<B>;
    fn sub(self, rhs: Self) -> LinComb<B> {
        let mut out = self.clone();
        out.add_scaled(&-Scalar::one(), rhs);
        out
    }
}

impl<B: Ord + Clone> Neg for &LinComb<B> {
    type Output = LinComb<B>;
    fn neg(self) -> LinComb<B> {
        self.scale(&-Scalar::one())
    }
}

impl<B: Ord + std::fmt::Debug> std::fmt::Debug for LinComb<B> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_map()
            .entries(self.terms.iter().map(|(k, v)| (k, v.to_string())))
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foundation::scalar::{ratio, scalar};
    use proptest::prelude::*;

    #[test]
    fn cancellation() {
        let a = LinComb::term("w", scalar(2));
        let b = LinComb::term("w", scalar(-2));
        assert!((&a + &b).is_zero());
    }

    #[test]
    fn distinct_keys_kept() {
        let s = &LinComb::basis("w1") + &LinComb::basis("w2");
        let keys: Vec<_> = s.keys().copied().collect();
        assert_eq!(keys, vec!["w1", "w2"]);
        assert_eq!(s.coeff(&"w1"), scalar(1));
    }

    #[test]
    fn rational_addition() {
        let s = &LinComb::term("w", ratio(1, 2)) + &LinComb::term("w", ratio(1, 3));
        assert_eq!(s, LinComb::term("w", ratio(5, 6)));
    }

    #[test]
    fn scaling() {
        let a = &LinComb::basis("w1") + &LinComb::basis("w2");
        assert!(a.scale(&scalar(0)).is_zero());
        assert_eq!(a.scale(&scalar(1)), a);
        assert_eq!(
            LinComb::term("w", scalar(6)).scale(&ratio(1, 6)),
            LinComb::basis("w")
        );
    }

    fn arb_comb() -> impl Strategy<Value = LinComb<u8>> {
        prop::collection::vec((0u8..6, -5i64..5, 1i64..4), 0..8)
            .prop_map(|ts| ts.into_iter().map(|(k, n, d)| (k, ratio(n, d))).collect())
    }

    proptest! {
        #[test]
        fn group_laws(a in arb_comb(), b in arb_comb(), n in -4i64..4, d in 1i64..4) {
            prop_assert_eq!(&a + &LinComb::zero(), a.clone());
            prop_assert!((&a + &(-&a)).is_zero());
            prop_assert_eq!(&a + &b, &b + &a);
            let c = ratio(n, d);
            let e = ratio(d, 3);
            prop_assert_eq!(a.scale(&c).scale(&e), a.scale(&(&c * &e)));
            prop_assert!(a.iter().all(|(_, v)| !v.is_zero()));
        }
    }
}
