//! Words in the braid monoid and the shuffle calculus built on them.
//!
//! Words are plain letter sequences; no normal form is attempted. Letter `i`
//! stands for the generator `s_i` and words act from left to right.

use std::fmt;

use crate::foundation::{LinComb, Scalar};
use crate::Error;

/// A word in the braid monoid on `strands` strands.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<u8>,
}

impl BraidWord {
    pub fn identity(strands: usize) -> Self {
        BraidWord {
            strands: strands.max(1),
            letters: Vec::new(),
        }
    }

    pub fn new(strands: usize, letters: &[usize]) -> Result<Self, Error> {
        if strands == 0 || strands > 256 {
            return Err(Error::Braid(format!("strand count {strands} out of range")));
        }
        if let Some(&bad) = letters.iter().find(|&&i| i == 0 || i >= strands) {
            return Err(Error::Braid(format!(
                "letter s_{bad} invalid on {strands} strands"
            )));
        }
        Ok(BraidWord {
            strands,
            letters: letters.iter().map(|&i| i as u8).collect(),
        })
    }

    pub fn generator(i: usize, strands: usize) -> Result<Self, Error> {
        Self::new(strands, &[i])
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn compose(&self, other: &BraidWord) -> Result<BraidWord, Error> {
        if self.strands != other.strands {
            return Err(Error::Braid(format!(
                "cannot compose words on {} and {} strands",
                self.strands, other.strands
            )));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    /// Views the word on more strands, acting trivially on the new ones.
    pub fn widen(&self, strands: usize) -> Result<BraidWord, Error> {
        self.shift(0, strands)
    }

    /// Replaces every `s_i` by `s_{i+t}` on `new_strands` strands.
    pub fn shift(&self, t: usize, new_strands: usize) -> Result<BraidWord, Error> {
        if new_strands < t + self.strands || new_strands > 256 {
            return Err(Error::Braid(format!(
                "shifting a {}-strand word by {t} needs at least {} strands, got {new_strands}",
                self.strands,
                t + self.strands
            )));
        }
        Ok(BraidWord {
            strands: new_strands,
            letters: self.letters.iter().map(|&i| i + t as u8).collect(),
        })
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.letters.iter().map(|i| format!("s{i}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Concatenates words on a common strand count.
pub fn concat<'a, I>(strands: usize, words: I) -> Result<BraidWord, Error>
where
    I: IntoIterator<Item = &'a BraidWord>,
{
    let mut out = BraidWord::identity(strands);
    for w in words {
        out = out.compose(&w.widen(strands)?)?;
    }
    Ok(out)
}

/// The word `[m;k]`: empty for `m = k`, `s_{k-1} ... s_m` for `m < k` and
/// `s_k ... s_{m-1}` for `m > k`.
///
/// Under the flip, `[m;k]` carries the tensor factor in position `k` to
/// position `m`.
pub fn range_word(m: usize, k: usize, strands: usize) -> Result<BraidWord, Error> {
    if m == 0 || k == 0 || m > strands || k > strands {
        return Err(Error::Braid(format!(
            "[{m};{k}] needs indices in 1..={strands}"
        )));
    }
    let letters: Vec<usize> = if m <= k {
        (m..k).rev().collect()
    } else {
        (k..m).collect()
    };
    BraidWord::new(strands, &letters)
}

/// The block transposition `[k;r+1][k+1;r+2] ... [k+n-r-1;n]`.
///
/// It exchanges the adjacent blocks `k..=r` and `r+1..=n`. Parameters with an
/// empty block (`k = r + 1` or `r = n`) give the identity word.
pub fn nu(r: usize, k: usize, n: usize) -> Result<BraidWord, Error> {
    check_nu(r, k, n)?;
    let factors = (0..n - r)
        .map(|j| range_word(k + j, r + 1 + j, n))
        .collect::<Result<Vec<_>, _>>()?;
    concat(n, &factors)
}

/// The same block transposition written as `[n;r][n-1;r-1] ... [n-r+k;k]`.
pub fn nu_descending(r: usize, k: usize, n: usize) -> Result<BraidWord, Error> {
    check_nu(r, k, n)?;
    let factors = (0..(r + 1 - k))
        .map(|j| range_word(n - j, r - j, n))
        .collect::<Result<Vec<_>, _>>()?;
    concat(n, &factors)
}

fn check_nu(r: usize, k: usize, n: usize) -> Result<(), Error> {
    if k == 0 || k > r + 1 || r > n || n == 0 {
        return Err(Error::Braid(format!(
            "block transposition needs 1 <= k <= r + 1 and r <= n, got r={r}, k={k}, n={n}"
        )));
    }
    Ok(())
}

/// An `r`-shuffle of `1..=n`, stored through its increasing first `r` values.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shuffle {
    n: usize,
    image: Vec<usize>,
}

impl Shuffle {
    pub fn new(n: usize, image: &[usize]) -> Result<Self, Error> {
        let increasing = image.windows(2).all(|w| w[0] < w[1]);
        if !increasing || image.iter().any(|&v| v == 0 || v > n) {
            return Err(Error::Braid(format!(
                "{image:?} is not an increasing subset of 1..={n}"
            )));
        }
        Ok(Shuffle {
            n,
            image: image.to_vec(),
        })
    }

    pub fn identity(n: usize, r: usize) -> Self {
        Shuffle {
            n,
            image: (1..=r.min(n)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.image.len()
    }

    /// `π(1) < ... < π(r)`.
    pub fn image(&self) -> &[usize] {
        &self.image
    }

    /// `π(r+1) < ... < π(n)`.
    pub fn complement(&self) -> Vec<usize> {
        (1..=self.n).filter(|v| !self.image.contains(v)).collect()
    }

    /// All values `π(1), ..., π(n)`.
    pub fn values(&self) -> Vec<usize> {
        let mut out = self.image.clone();
        out.extend(self.complement());
        out
    }

    /// Bit mask of the image, bit `v - 1` for value `v`.
    pub fn image_mask(&self) -> u64 {
        self.image.iter().fold(0, |m, &v| m | 1 << (v - 1))
    }
}

/// All `C(n, r)` shuffles of `Sh_n^r`, lexicographic in their image.
pub fn shuffles(n: usize, r: usize) -> Vec<Shuffle> {
    let mut out = Vec::new();
    if r > n {
        return out;
    }
    let mut current: Vec<usize> = (1..=r).collect();
    loop {
        out.push(Shuffle {
            n,
            image: current.clone(),
        });
        // advance to the next combination
        let Some(i) = (0..r).rev().find(|&i| current[i] < n - (r - 1 - i)) else {
            break;
        };
        current[i] += 1;
        for j in i + 1..r {
            current[j] = current[j - 1] + 1;
        }
    }
    out
}

/// `[π] = [1;π(1)][2;π(2)] ... [r;π(r)]`, the identity word when `r = 0`.
pub fn bracket(pi: &Shuffle) -> BraidWord {
    let strands = pi.n.max(1);
    let mut letters = Vec::new();
    for (i, &v) in pi.image.iter().enumerate() {
        letters.extend((i + 1..v).rev());
    }
    BraidWord::new(strands, &letters).expect("shuffle brackets stay in range")
}

/// `σ * δ`: the first `r` values of `σ` followed by the values of `δ` shifted by `s`.
pub fn star(sigma: &Shuffle, delta: &Shuffle) -> Shuffle {
    let mut image = sigma.image.clone();
    image.extend(delta.image.iter().map(|v| v + sigma.n));
    Shuffle {
        n: sigma.n + delta.n,
        image,
    }
}

/// An element of the monoid algebra of the braid monoid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalOperator {
    strands: usize,
    terms: LinComb<BraidWord>,
}

impl FormalOperator {
    pub fn zero(strands: usize) -> Self {
        FormalOperator {
            strands,
            terms: LinComb::zero(),
        }
    }

    pub fn from_word(word: BraidWord) -> Self {
        FormalOperator {
            strands: word.strands(),
            terms: LinComb::basis(word),
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn terms(&self) -> &LinComb<BraidWord> {
        &self.terms
    }

    pub fn add_word(&mut self, coeff: Scalar, word: BraidWord) -> Result<(), Error> {
        if word.strands() != self.strands {
            return Err(Error::Braid(format!(
                "word on {} strands added to an operator on {}",
                word.strands(),
                self.strands
            )));
        }
        self.terms.add_term(word, coeff);
        Ok(())
    }

    pub fn add(&self, other: &FormalOperator) -> Result<FormalOperator, Error> {
        let mut out = self.clone();
        for (w, c) in other.terms.iter() {
            out.add_word(c.clone(), w.clone())?;
        }
        Ok(out)
    }

    pub fn multiply(&self, other: &FormalOperator) -> Result<FormalOperator, Error> {
        let mut out = FormalOperator::zero(self.strands);
        for (a, ca) in self.terms.iter() {
            for (b, cb) in other.terms.iter() {
                out.add_word(ca * cb, a.compose(b)?)?;
            }
        }
        Ok(out)
    }

    pub fn shift(&self, t: usize, new_strands: usize) -> Result<FormalOperator, Error> {
        let mut out = FormalOperator::zero(new_strands);
        for (w, c) in self.terms.iter() {
            out.add_word(c.clone(), w.shift(t, new_strands)?)?;
        }
        Ok(out)
    }
}
