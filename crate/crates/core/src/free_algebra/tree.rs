use std::fmt;

use super::shape::{Shape, MAX_DEGREE};

/// A nonassociative word: its leaf sequence plus its parenthesis shape.
///
/// Generators are 0-based internally and printed as `x1, x2, ...`. Trees are
/// small `Copy` values; ordering is by degree, then leaf word
/// (lexicographically), then shape.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tree {
    degree: u8,
    letters: [u8; MAX_DEGREE],
    code: u64,
}

impl Tree {
    pub const UNIT: Tree = Tree {
        degree: 0,
        letters: [0; MAX_DEGREE],
        code: 0,
    };

    pub fn unit() -> Tree {
        Tree::UNIT
    }

    pub fn leaf(generator: u8) -> Tree {
        let mut letters = [0; MAX_DEGREE];
        letters[0] = generator;
        Tree {
            degree: 1,
            letters,
            code: 0,
        }
    }

    /// Builds `u·R`. Panics if the lengths differ.
    pub fn from_parts(word: &[u8], shape: Shape) -> Tree {
        assert_eq!(word.len(), shape.degree(), "word length must match shape");
        let mut letters = [0; MAX_DEGREE];
        letters[..word.len()].copy_from_slice(word);
        Tree {
            degree: word.len() as u8,
            letters,
            code: shape.code(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree as usize
    }

    pub fn is_unit(&self) -> bool {
        self.degree == 0
    }

    /// The associative word `u` of `uR`.
    pub fn word(&self) -> &[u8] {
        &self.letters[..self.degree as usize]
    }

    pub fn shape(&self) -> Shape {
        Shape::from_raw(self.degree, self.code)
    }

    /// `(u, R)` with `u·R = self`.
    pub fn decompose(&self) -> (&[u8], Shape) {
        (self.word(), self.shape())
    }

    pub fn product(&self, rhs: &Tree) -> Tree {
        if self.is_unit() {
            return *rhs;
        }
        if rhs.is_unit() {
            return *self;
        }
        let shape = self.shape().product(rhs.shape());
        let mut out = Tree {
            degree: shape.degree() as u8,
            letters: self.letters,
            code: shape.code(),
        };
        let d = self.degree();
        out.letters[d..d + rhs.degree()].copy_from_slice(rhs.word());
        out
    }

    /// The factors of a product, `None` for the unit and for generators.
    pub fn split(&self) -> Option<(Tree, Tree)> {
        let (l, r) = self.shape().split()?;
        let d = l.degree();
        Some((
            Tree::from_parts(&self.word()[..d], l),
            Tree::from_parts(&self.word()[d..], r),
        ))
    }

    /// Replaces every leaf whose position is outside `mask` by the unit.
    pub fn restrict(&self, mask: u64) -> Tree {
        let shape = self.shape().restrict(mask);
        let word: smallvec::SmallVec<[u8; MAX_DEGREE]> = self
            .word()
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &g)| g)
            .collect();
        Tree::from_parts(&word, shape)
    }

    /// `((x_{w1} x_{w2}) x_{w3}) ...`
    pub fn right_normed(word: &[u8]) -> Tree {
        Tree::from_parts(word, Shape::right_normed(word.len()))
    }

    /// Largest generator index plus one, zero for the unit.
    pub fn generator_bound(&self) -> usize {
        self.word()
            .iter()
            .map(|&g| g as usize + 1)
            .max()
            .unwrap_or(0)
    }

    /// All trees of degree `n` over `dim` generators, ascending.
    pub fn all(dim: usize, n: usize) -> Vec<Tree> {
        let shapes = Shape::all(n);
        let mut out = Vec::new();
        for w in crate::braiding::all_words(dim, n) {
            for &s in &shapes {
                out.push(Tree::from_parts(&w, s));
            }
        }
        out
    }

    /// All trees of degree `n` whose leaves are a rearrangement of `word`.
    pub fn all_with_letters(word: &[u8]) -> Vec<Tree> {
        let mut letters = word.to_vec();
        letters.sort_unstable();
        let mut words = Vec::new();
        permutations_sorted(&mut letters, &mut words);
        let shapes = Shape::all(word.len());
        let mut out = Vec::new();
        for w in words {
            for &s in &shapes {
                out.push(Tree::from_parts(&w, s));
            }
        }
        out
    }
}

/// Distinct permutations of a sorted multiset in lexicographic order.
fn permutations_sorted(letters: &mut [u8], out: &mut Vec<Vec<u8>>) {
    out.push(letters.to_vec());
    loop {
        let n = letters.len();
        let Some(i) = (1..n).rev().find(|&i| letters[i - 1] < letters[i]) else {
            return;
        };
        let j = (i..n).rev().find(|&j| letters[j] > letters[i - 1]).unwrap();
        letters.swap(i - 1, j);
        letters[i..].reverse();
        out.push(letters.to_vec());
    }
}

impl fmt::Display for Tree {
    /// `x1`, `(x1 x2)`, `((x1 x2) x3)`; the unit is `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return f.write_str("1");
        }
        if self.degree == 1 {
            return write!(f, "x{}", self.letters[0] + 1);
        }
        let (l, r) = self.split().expect("degree at least two");
        write!(f, "({l} {r})")
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
