//! The braiding on the free associative algebra and its extension to trees.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use super::element::{FreeElement, TensorElement, Tuple};
use super::tree::Tree;
use crate::braid::nu;
use crate::braiding::{Braiding, Word};
use crate::foundation::Scalar;
use crate::Error;

/// Sparse image of a basis pair: `(left, right, coefficient)` terms.
pub type PairImage = Arc<Vec<(Tree, Tree, Scalar)>>;

type WordImage = Arc<Vec<(Word, Scalar)>>;

/// A braided generator space together with memo tables for the extension of
/// its braiding to the free nonassociative algebra.
#[derive(Debug)]
pub struct BraidedAlgebra {
    braiding: Braiding,
    words: RwLock<HashMap<(Word, usize), WordImage>>,
    pairs: RwLock<HashMap<(Tree, Tree), PairImage>>,
}

impl BraidedAlgebra {
    pub fn new(braiding: Braiding) -> Self {
        BraidedAlgebra {
            braiding,
            words: RwLock::default(),
            pairs: RwLock::default(),
        }
    }

    pub fn braiding(&self) -> &Braiding {
        &self.braiding
    }

    pub fn dim(&self) -> usize {
        self.braiding.dim()
    }

    /// `(u ⊗' v)τ'` on associative words: apply the block move `ν_r^{1,n}`
    /// to `uv` and split after `|v|` letters.
    pub fn tau_prime(&self, u: &[u8], v: &[u8]) -> Vec<(Word, Word, Scalar)> {
        let r = u.len();
        let mut uv = Word::from_slice(u);
        uv.extend_from_slice(v);
        let image = self.block_move(uv, r);
        image
            .iter()
            .map(|(w, c)| {
                (
                    Word::from_slice(&w[..v.len()]),
                    Word::from_slice(&w[v.len()..]),
                    c.clone(),
                )
            })
            .collect()
    }

    fn block_move(&self, word: Word, r: usize) -> WordImage {
        let n = word.len();
        let key = (word, r);
        if let Some(hit) = self.words.read().unwrap().get(&key) {
            return hit.clone();
        }
        let (word, _) = &key;
        let result: Vec<(Word, Scalar)> = if r == 0 || r == n {
            vec![(word.clone(), crate::foundation::scalar::one())]
        } else {
            let letters = nu(r, 1, n).expect("valid block move");
            self.braiding
                .apply_letters(letters.letters(), word)
                .into_iter()
                .collect()
        };
        let result = Arc::new(result);
        self.words.write().unwrap().insert(key, result.clone());
        result
    }

    /// `(x ⊗ y)τ*` on basis trees, by exchanging shapes after `τ'`.
    pub fn tau_star_pair(&self, x: &Tree, y: &Tree) -> PairImage {
        if x.is_unit() || y.is_unit() {
            return Arc::new(vec![(*y, *x, crate::foundation::scalar::one())]);
        }
        let key = (*x, *y);
        if let Some(hit) = self.pairs.read().unwrap().get(&key) {
            return hit.clone();
        }
        let (u, r) = x.decompose();
        let (v, l) = y.decompose();
        let out: Vec<(Tree, Tree, Scalar)> = self
            .tau_prime(u, v)
            .into_iter()
            .map(|(a, b, c)| (Tree::from_parts(&a, l), Tree::from_parts(&b, r), c))
            .collect();
        let out = Arc::new(out);
        self.pairs.write().unwrap().insert(key, out.clone());
        out
    }

    /// `τ*` on a tensor square.
    pub fn tau_star(&self, t: &TensorElement) -> Result<TensorElement, Error> {
        self.tau_star_at(t, 1)
    }

    /// `τ*_i`: the braiding on slots `i, i+1` (1-based) of every tuple.
    pub fn tau_star_at(&self, t: &TensorElement, i: usize) -> Result<TensorElement, Error> {
        let mut out = TensorElement::zero();
        for (tuple, c) in t {
            if i == 0 || i >= tuple.len() {
                return Err(Error::Braid(format!(
                    "position {i} out of range for a tensor of length {}",
                    tuple.len()
                )));
            }
            for (a, b, d) in self.tau_star_pair(&tuple[i - 1], &tuple[i]).iter() {
                let mut t2 = tuple.clone();
                t2[i - 1] = *a;
                t2[i] = *b;
                out.add_term(t2, c * d);
            }
        }
        Ok(out)
    }

    /// Applies braid letters left to right as `τ*_i` to a basis tuple.
    pub fn apply_letters(&self, letters: &[u8], tuple: &[Tree]) -> TensorElement {
        let mut terms: Vec<(Tuple, Scalar)> =
            vec![(Tuple::from_slice(tuple), crate::foundation::scalar::one())];
        for &letter in letters {
            let i = letter as usize;
            let mut next = Vec::with_capacity(terms.len());
            let mut branched = false;
            for (t, c) in terms {
                let img = self.tau_star_pair(&t[i - 1], &t[i]);
                branched |= img.len() > 1;
                for (a, b, d) in img.iter() {
                    let mut t2 = t.clone();
                    t2[i - 1] = *a;
                    t2[i] = *b;
                    next.push((t2, &c * d));
                }
            }
            terms = if branched {
                let merged: TensorElement = next.into_iter().collect();
                merged.into_iter().collect()
            } else {
                next
            };
        }
        terms.into_iter().collect()
    }

    /// Bilinear extension of [`apply_letters`](Self::apply_letters).
    pub fn apply_word(&self, letters: &[u8], t: &TensorElement) -> TensorElement {
        let mut out = TensorElement::zero();
        for (tuple, c) in t {
            out.add_scaled(c, &self.apply_letters(letters, tuple));
        }
        out
    }

    /// `(a ⊗ b)τ*` for arbitrary elements, as a tensor.
    pub fn tau_star_elements(&self, a: &FreeElement, b: &FreeElement) -> TensorElement {
        let mut out = TensorElement::zero();
        for (x, c) in a {
            for (y, d) in b {
                let cd = c * d;
                for (p, q, e) in self.tau_star_pair(x, y).iter() {
                    out.add_term(super::element::tuple(&[*p, *q]), &cd * e);
                }
            }
        }
        out
    }
}
