//! Braidings on the generator space and their local action on tensor powers.

mod calculus;
mod io;

pub use calculus::{nested_range_boundary, verify_braid_calculus};
pub use io::BraidingFile;

use smallvec::SmallVec;

use crate::braid::{BraidWord, FormalOperator};
use crate::foundation::scalar::{format_scalar, one};
use crate::foundation::{LinComb, Scalar};
use crate::Error;

/// A basis tensor `x_{i1} ⊗ ... ⊗ x_{in}`, generators indexed from zero.
pub type Word = SmallVec<[u8; 8]>;

/// An element of `V^{⊗n}`.
pub type AssocTensor = LinComb<Word>;

/// The image of `(x_i ⊗ x_s)τ` keyed by `(i, s)`, as terms `(coeff, (k, l))`.
pub type GeneralEntry = ((usize, usize), Vec<(Scalar, (usize, usize))>);

/// One output term `coeff · x_k ⊗ x_l` of the braiding on a basis pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairTerm {
    pub coeff: Scalar,
    pub left: u8,
    pub right: u8,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Definition {
    Diagonal(Vec<Vec<Scalar>>),
    General,
}

/// A linear map `τ: V⊗V → V⊗V` on a finite basis satisfying the braid relation.
///
/// Construction always checks the Yang–Baxter equation on every basis triple.
#[derive(Clone, Debug)]
pub struct Braiding {
    dim: usize,
    images: Vec<Vec<PairTerm>>,
    involutive: bool,
    definition: Definition,
}

impl PartialEq for Braiding {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.images == other.images
    }
}

impl Braiding {
    /// `x_i ⊗ x_s ↦ q[i][s] · x_s ⊗ x_i`.
    pub fn diagonal(q: Vec<Vec<Scalar>>) -> Result<Self, Error> {
        let dim = q.len();
        check_dim(dim)?;
        if q.iter().any(|row| row.len() != dim) {
            return Err(Error::InvalidBraiding(format!(
                "diagonal parameters must form a {dim}x{dim} square"
            )));
        }
        let mut images = Vec::with_capacity(dim * dim);
        for (i, row) in q.iter().enumerate() {
            for (s, c) in row.iter().enumerate() {
                let mut img = Vec::new();
                if !num_traits::Zero::is_zero(c) {
                    img.push(PairTerm {
                        coeff: c.clone(),
                        left: s as u8,
                        right: i as u8,
                    });
                }
                images.push(img);
            }
        }
        let mut b = Self::from_images(dim, images)?;
        b.definition = Definition::Diagonal(q);
        Ok(b)
    }

    /// The ordinary flip `x ⊗ y ↦ y ⊗ x` on `dim` generators.
    pub fn flip(dim: usize) -> Self {
        Self::diagonal(vec![vec![one(); dim]; dim]).expect("the flip is a braiding")
    }

    /// `x_i ⊗ x_s ↦ x_{σ(s)} ⊗ x_{σ⁻¹(i)}` for a permutation `σ` of `0..dim`.
    ///
    /// Always involutive and always a braiding.
    pub fn permutation(sigma: &[usize]) -> Result<Self, Error> {
        let dim = sigma.len();
        let mut inverse = vec![usize::MAX; dim];
        for (i, &v) in sigma.iter().enumerate() {
            if v >= dim || inverse[v] != usize::MAX {
                return Err(Error::InvalidBraiding(format!(
                    "{sigma:?} is not a permutation of 0..{dim}"
                )));
            }
            inverse[v] = i;
        }
        let entries = (0..dim)
            .flat_map(|i| (0..dim).map(move |s| (i, s)))
            .map(|(i, s)| ((i, s), vec![(one(), (sigma[s], inverse[i]))]))
            .collect();
        Self::general(dim, entries)
    }

    /// A braiding given by its images on all ordered basis pairs.
    ///
    /// `entries` maps `(i, s)` to the terms `(coeff, (k, l))` of `(x_i ⊗ x_s)τ`.
    /// Indices start at zero. Every pair must be present exactly once.
    pub fn general(dim: usize, entries: Vec<GeneralEntry>) -> Result<Self, Error> {
        check_dim(dim)?;
        let mut images: Vec<Option<LinComb<(u8, u8)>>> = vec![None; dim * dim];
        for ((i, s), out) in entries {
            if i >= dim || s >= dim {
                return Err(Error::UnknownGenerator {
                    index: i.max(s) + 1,
                    dim,
                });
            }
            if images[i * dim + s].is_some() {
                return Err(Error::InvalidBraiding(format!(
                    "pair (x{}, x{}) given twice",
                    i + 1,
                    s + 1
                )));
            }
            let mut img = LinComb::zero();
            for (c, (k, l)) in out {
                if k >= dim || l >= dim {
                    return Err(Error::UnknownGenerator {
                        index: k.max(l) + 1,
                        dim,
                    });
                }
                img.add_term((k as u8, l as u8), c);
            }
            images[i * dim + s] = Some(img);
        }
        let mut dense = Vec::with_capacity(dim * dim);
        for (idx, img) in images.into_iter().enumerate() {
            let img = img.ok_or_else(|| {
                Error::InvalidBraiding(format!(
                    "no image given for pair (x{}, x{})",
                    idx / dim + 1,
                    idx % dim + 1
                ))
            })?;
            dense.push(
                img.into_iter()
                    .map(|((left, right), coeff)| PairTerm { coeff, left, right })
                    .collect(),
            );
        }
        Self::from_images(dim, dense)
    }

    fn from_images(dim: usize, images: Vec<Vec<PairTerm>>) -> Result<Self, Error> {
        let mut b = Braiding {
            dim,
            images,
            involutive: false,
            definition: Definition::General,
        };
        if let Some(err) = b.yang_baxter_violation() {
            return Err(err);
        }
        b.involutive = b.compute_involutive();
        Ok(b)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_involutive(&self) -> bool {
        self.involutive
    }

    pub fn is_diagonal(&self) -> bool {
        matches!(self.definition, Definition::Diagonal(_))
    }

    /// The diagonal parameters, when the braiding was built from them.
    pub fn diagonal_parameters(&self) -> Option<&[Vec<Scalar>]> {
        match &self.definition {
            Definition::Diagonal(q) => Some(q),
            Definition::General => None,
        }
    }

    /// `(x_i ⊗ x_s)τ`, zero-based indices.
    pub fn image(&self, i: u8, s: u8) -> &[PairTerm] {
        &self.images[i as usize * self.dim + s as usize]
    }

    pub fn requires_involutive(&self) -> Result<(), Error> {
        if self.involutive {
            Ok(())
        } else {
            Err(Error::NotInvolutive)
        }
    }

    /// Applies `τ_1, τ_2, ...` letter by letter to a single basis word.
    pub fn apply_letters(&self, letters: &[u8], word: &[u8]) -> AssocTensor {
        let mut terms: Vec<(Word, Scalar)> = vec![(Word::from_slice(word), one())];
        for &letter in letters {
            let pos = letter as usize - 1;
            let mut next = Vec::with_capacity(terms.len());
            let mut branched = false;
            for (w, c) in terms {
                let img = self.image(w[pos], w[pos + 1]);
                branched |= img.len() > 1;
                for t in img {
                    let mut w2 = w.clone();
                    w2[pos] = t.left;
                    w2[pos + 1] = t.right;
                    next.push((w2, &c * &t.coeff));
                }
            }
            terms = if branched {
                let merged: AssocTensor = next.into_iter().collect();
                merged.into_iter().collect()
            } else {
                next
            };
        }
        terms.into_iter().collect()
    }

    /// Local action of a braid word on a tensor of matching length.
    pub fn local_apply(&self, word: &BraidWord, t: &AssocTensor) -> Result<AssocTensor, Error> {
        let mut out = AssocTensor::zero();
        for (w, c) in t.iter() {
            if w.len() != word.strands() && !(w.is_empty() && word.strands() == 1) {
                return Err(Error::Braid(format!(
                    "word on {} strands applied to a tensor of length {}",
                    word.strands(),
                    w.len()
                )));
            }
            if let Some(&g) = w.iter().find(|&&g| g as usize >= self.dim) {
                return Err(Error::UnknownGenerator {
                    index: g as usize + 1,
                    dim: self.dim,
                });
            }
            out.add_scaled(c, &self.apply_letters(word.letters(), w));
        }
        Ok(out)
    }

    pub fn local_apply_operator(
        &self,
        op: &FormalOperator,
        t: &AssocTensor,
    ) -> Result<AssocTensor, Error> {
        let mut out = AssocTensor::zero();
        for (w, c) in op.terms().iter() {
            out.add_scaled(c, &self.local_apply(w, t)?);
        }
        Ok(out)
    }

    fn yang_baxter_violation(&self) -> Option<Error> {
        let d = self.dim as u8;
        for a in 0..d {
            for b in 0..d {
                for c in 0..d {
                    let w = [a, b, c];
                    let lhs = self.apply_letters(&[1, 2, 1], &w);
                    let rhs = self.apply_letters(&[2, 1, 2], &w);
                    if lhs != rhs {
                        return Some(Error::YangBaxter {
                            triple: format_word(&w),
                            lhs: format_assoc(&lhs),
                            rhs: format_assoc(&rhs),
                        });
                    }
                }
            }
        }
        None
    }

    fn compute_involutive(&self) -> bool {
        let d = self.dim as u8;
        (0..d).all(|a| {
            (0..d).all(|b| {
                let w = [a, b];
                self.apply_letters(&[1, 1], &w) == AssocTensor::basis(Word::from_slice(&w))
            })
        })
    }
}

fn check_dim(dim: usize) -> Result<(), Error> {
    if dim == 0 || dim > 255 {
        return Err(Error::InvalidBraiding(format!(
            "generator count {dim} outside 1..=255"
        )));
    }
    Ok(())
}

/// `x1 x2 x1` style rendering of a basis tensor.
pub fn format_word(w: &[u8]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.iter()
        .map(|g| format!("x{}", g + 1))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn format_assoc(t: &AssocTensor) -> String {
    if t.is_zero() {
        return "0".into();
    }
    t.iter()
        .map(|(w, c)| format!("{}*[{}]", format_scalar(c), format_word(w)))
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Every basis word of length `n` over `dim` generators, in lexicographic order.
pub fn all_words(dim: usize, n: usize) -> Vec<Word> {
    let mut out = vec![Word::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..dim as u8).map(move |g| {
                    let mut w2 = w.clone();
                    w2.push(g);
                    w2
                })
            })
            .collect();
    }
    out
}

/// Whether two operators act identically on every basis tensor of their length.
pub fn same_local_action(b: &Braiding, lhs: &BraidWord, rhs: &BraidWord) -> Option<Word> {
    assert_eq!(lhs.strands(), rhs.strands());
    all_words(b.dim(), lhs.strands())
        .into_iter()
        .find(|w| b.apply_letters(lhs.letters(), w) != b.apply_letters(rhs.letters(), w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{nu, BraidWord};
    use crate::foundation::{ratio, scalar};

    fn word(letters: &[u8]) -> Word {
        Word::from_slice(letters)
    }

    fn q(rows: &[&[i64]]) -> Vec<Vec<Scalar>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| scalar(x)).collect())
            .collect()
    }

    #[test]
    fn flip_is_involutive() {
        let f = Braiding::flip(3);
        assert!(f.is_involutive());
        let t = AssocTensor::basis(word(&[0, 1]));
        let out = f
            .local_apply(&BraidWord::new(2, &[1]).unwrap(), &t)
            .unwrap();
        assert_eq!(out, AssocTensor::basis(word(&[1, 0])));
    }

    #[test]
    fn diagonal_involutivity() {
        assert!(Braiding::diagonal(q(&[&[-1, -1], &[-1, -1]]))
            .unwrap()
            .is_involutive());
        assert!(!Braiding::diagonal(q(&[&[1, 2], &[3, 1]]))
            .unwrap()
            .is_involutive());
        let mixed = vec![vec![scalar(1), scalar(2)], vec![ratio(1, 2), scalar(-1)]];
        assert!(Braiding::diagonal(mixed).unwrap().is_involutive());
    }

    #[test]
    fn diagonal_action_on_pair() {
        let b = Braiding::diagonal(q(&[&[1, 2], &[3, 1]])).unwrap();
        let t = AssocTensor::basis(word(&[0, 1]));
        let out = b
            .local_apply(&BraidWord::new(2, &[1]).unwrap(), &t)
            .unwrap();
        assert_eq!(out, AssocTensor::term(word(&[1, 0]), scalar(2)));
    }

    #[test]
    fn block_move_under_flip() {
        let f = Braiding::flip(3);
        let t = AssocTensor::basis(word(&[0, 1, 2]));
        let out = f.local_apply(&nu(2, 1, 3).unwrap(), &t).unwrap();
        assert_eq!(out, AssocTensor::basis(word(&[2, 0, 1])));
    }

    #[test]
    fn identity_and_length_mismatch() {
        let f = Braiding::flip(2);
        let t = AssocTensor::basis(word(&[0, 1, 1]));
        assert_eq!(f.local_apply(&BraidWord::identity(3), &t).unwrap(), t);
        assert!(f.local_apply(&BraidWord::identity(2), &t).is_err());
    }

    #[test]
    fn permutation_braidings() {
        let p = Braiding::permutation(&[1, 0]).unwrap();
        assert!(p.is_involutive());
        assert!(!p.is_diagonal());
        let p3 = Braiding::permutation(&[1, 2, 0]).unwrap();
        assert!(p3.is_involutive());
        assert!(Braiding::permutation(&[0, 0]).is_err());
    }

    fn flip_except(pair: (usize, usize), out: Vec<(i64, (usize, usize))>) -> Braiding {
        let entries = (0..2)
            .flat_map(|i| (0..2).map(move |s| (i, s)))
            .map(|(i, s)| {
                let img = if (i, s) == pair {
                    out.iter().map(|&(c, p)| (scalar(c), p)).collect()
                } else {
                    vec![(scalar(1), (s, i))]
                };
                ((i, s), img)
            })
            .collect();
        Braiding::general(2, entries).unwrap()
    }

    #[test]
    fn nontrivial_general_braiding_accepted() {
        // x1⊗x1 ↦ x1⊗x1 + x2⊗x2, flip elsewhere, passes the brute-force check
        let b = flip_except((0, 0), vec![(1, (0, 0)), (1, (1, 1))]);
        assert!(!b.is_involutive());
    }

    #[test]
    fn yang_baxter_rejection() {
        // x1⊗x1 ↦ x2⊗x2, flip elsewhere
        let entries = (0..2)
            .flat_map(|i| (0..2).map(move |s| (i, s)))
            .map(|(i, s)| {
                let out = if (i, s) == (0, 0) { (1, 1) } else { (s, i) };
                ((i, s), vec![(scalar(1), out)])
            })
            .collect();
        match Braiding::general(2, entries) {
            Err(Error::YangBaxter { triple, .. }) => assert_eq!(triple, "x1 x1 x1"),
            other => panic!("expected a Yang-Baxter failure, got {other:?}"),
        }

        // a non-braiding permutation-type map: x_i⊗x_s ↦ x_{f(s)}⊗x_{g(i)} with fg ≠ gf
        let f = [1usize, 0, 2];
        let g = [0usize, 2, 1];
        let entries = (0..3)
            .flat_map(|i| (0..3).map(move |s| (i, s)))
            .map(|(i, s)| ((i, s), vec![(scalar(1), (f[s], g[i]))]))
            .collect();
        assert!(matches!(
            Braiding::general(3, entries),
            Err(Error::YangBaxter { .. })
        ));
    }

    #[test]
    fn missing_and_duplicate_pairs() {
        let entries = vec![((0, 0), vec![(scalar(1), (0, 0))])];
        assert!(matches!(
            Braiding::general(2, entries),
            Err(Error::InvalidBraiding(_))
        ));
        let entries = vec![
            ((0, 0), vec![(scalar(1), (0, 0))]),
            ((0, 0), vec![(scalar(1), (0, 0))]),
        ];
        assert!(Braiding::general(1, entries).is_err());
    }

    fn test_braidings() -> Vec<Braiding> {
        vec![
            Braiding::flip(2),
            Braiding::diagonal(q(&[&[1, 1], &[1, -1]])).unwrap(),
            Braiding::diagonal(vec![
                vec![scalar(1), scalar(2)],
                vec![ratio(1, 2), scalar(-1)],
            ])
            .unwrap(),
            Braiding::diagonal(q(&[&[1, 2], &[3, 1]])).unwrap(),
            Braiding::permutation(&[1, 0]).unwrap(),
        ]
    }

    #[test]
    fn braid_relations_hold_locally() {
        for b in test_braidings() {
            for n in 3..=5 {
                for i in 1..n - 1 {
                    let l = BraidWord::new(n, &[i, i + 1, i]).unwrap();
                    let r = BraidWord::new(n, &[i + 1, i, i + 1]).unwrap();
                    assert_eq!(same_local_action(&b, &l, &r), None);
                }
                for i in 1..n {
                    for j in i + 2..n {
                        let l = BraidWord::new(n, &[i, j]).unwrap();
                        let r = BraidWord::new(n, &[j, i]).unwrap();
                        assert_eq!(same_local_action(&b, &l, &r), None);
                    }
                }
            }
        }
    }

    #[test]
    fn involutive_flag_matches_squares() {
        for b in test_braidings() {
            let squares_trivial = (2..=4).all(|n| {
                (1..n).all(|i| {
                    let sq = BraidWord::new(n, &[i, i]).unwrap();
                    same_local_action(&b, &sq, &BraidWord::identity(n)).is_none()
                })
            });
            assert_eq!(b.is_involutive(), squares_trivial);
        }
    }

    /// Words mapping to the same permutation act identically for involutive braidings.
    #[test]
    fn involutive_action_factors_through_permutations() {
        fn perm_of(letters: &[usize]) -> Vec<usize> {
            let mut p: Vec<usize> = (0..4).collect();
            for &i in letters {
                p.swap(i - 1, i);
            }
            p
        }
        let mut words: Vec<Vec<usize>> = vec![vec![]];
        let mut frontier = words.clone();
        for _ in 0..6 {
            frontier = frontier
                .iter()
                .flat_map(|w| {
                    (1..4).map(move |i| {
                        let mut w2 = w.clone();
                        w2.push(i);
                        w2
                    })
                })
                .collect();
            words.extend(frontier.iter().cloned());
        }
        for b in test_braidings().into_iter().filter(Braiding::is_involutive) {
            let mut by_perm: std::collections::BTreeMap<Vec<usize>, BraidWord> = Default::default();
            for w in &words {
                let bw = BraidWord::new(4, w).unwrap();
                match by_perm.get(&perm_of(w)) {
                    Some(first) => assert_eq!(same_local_action(&b, first, &bw), None),
                    None => {
                        by_perm.insert(perm_of(w), bw);
                    }
                }
            }
            assert_eq!(by_perm.len(), 24);
        }
    }
}
