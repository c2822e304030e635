//! Coproduct, counit, divisions and primitive elements of the free algebra.

mod verify;

pub use verify::{verify_hopf_axioms, HopfSuite};

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use crate::braid::{bracket, shuffles};
use crate::braiding::Braiding;
use crate::foundation::scalar::one;
use crate::foundation::{LinComb, Matrix, Scalar};
use crate::free_algebra::{
    multiply, tuple, BraidedAlgebra, FreeElement, TensorElement, Tree, Tuple,
};

/// Divisions are stored as linear combinations of tree sequences
/// `[w1, ..., wk]`, read as `w1(w2(...(wk y)))` on the left and
/// `((y w1) w2)...wk` on the right.
type Sequences = LinComb<Tuple>;

/// The free algebra with its braided Hopf structure and memo tables.
#[derive(Debug)]
pub struct HopfContext {
    algebra: BraidedAlgebra,
    coproducts: RwLock<HashMap<Tree, Arc<TensorElement>>>,
    left: RwLock<HashMap<Tree, Arc<Sequences>>>,
    right: RwLock<HashMap<Tree, Arc<Sequences>>>,
}

fn cached<V: Clone>(
    table: &RwLock<HashMap<Tree, V>>,
    key: &Tree,
    compute: impl FnOnce() -> V,
) -> V {
    if let Some(v) = table.read().unwrap().get(key) {
        return v.clone();
    }
    let v = compute();
    table.write().unwrap().entry(*key).or_insert(v).clone()
}

impl HopfContext {
    pub fn new(braiding: Braiding) -> Self {
        HopfContext {
            algebra: BraidedAlgebra::new(braiding),
            coproducts: RwLock::default(),
            left: RwLock::default(),
            right: RwLock::default(),
        }
    }

    pub fn algebra(&self) -> &BraidedAlgebra {
        &self.algebra
    }

    pub fn braiding(&self) -> &Braiding {
        self.algebra.braiding()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// `Δ(uR) = Σ_r Σ_{π ∈ Sh_n^r} u[π] split as (^πR ⊗ R^π)`.
    pub fn coproduct_tree(&self, t: &Tree) -> Arc<TensorElement> {
        cached(&self.coproducts, t, || Arc::new(self.shuffle_coproduct(t)))
    }

    fn shuffle_coproduct(&self, t: &Tree) -> TensorElement {
        let (u, shape) = t.decompose();
        let n = u.len();
        let mut out = TensorElement::zero();
        for r in 0..=n {
            for pi in shuffles(n, r) {
                let mask = pi.image_mask();
                let left = shape.restrict(mask);
                let right = shape.restrict(!mask & ((1u64 << n) - 1));
                let moved = self.braiding().apply_letters(bracket(&pi).letters(), u);
                for (w, c) in moved {
                    let a = Tree::from_parts(&w[..r], left);
                    let b = Tree::from_parts(&w[r..], right);
                    out.add_term(tuple(&[a, b]), c);
                }
            }
        }
        out
    }

    pub fn coproduct(&self, a: &FreeElement) -> TensorElement {
        let mut out = TensorElement::zero();
        for (t, c) in a {
            out.add_scaled(c, &self.coproduct_tree(t));
        }
        out
    }

    /// The coefficient of the unit.
    pub fn counit(&self, a: &FreeElement) -> Scalar {
        a.coeff(&Tree::UNIT)
    }

    /// `(a⊗b)(c⊗d) = Σ a c_i ⊗ b_i d` where `(b⊗c)τ* = Σ c_i ⊗ b_i`.
    pub fn tensor_multiply(&self, x: &TensorElement, y: &TensorElement) -> TensorElement {
        let mut out = TensorElement::zero();
        for (p, c) in x {
            let (a, b) = (p[0], p[1]);
            for (q, d) in y {
                let (cc, dd) = (q[0], q[1]);
                let cd = c * d;
                for (ci, bi, e) in self.algebra.tau_star_pair(&b, &cc).iter() {
                    out.add_term(tuple(&[a.product(ci), bi.product(&dd)]), &cd * e);
                }
            }
        }
        out
    }

    pub fn is_primitive(&self, a: &FreeElement) -> bool {
        self.primitivity_defect(a).is_zero()
    }

    /// `Δ(a) - a⊗1 - 1⊗a`.
    pub fn primitivity_defect(&self, a: &FreeElement) -> TensorElement {
        let mut d = self.coproduct(a);
        for (t, c) in a {
            d.add_term(tuple(&[*t, Tree::UNIT]), -c);
            d.add_term(tuple(&[Tree::UNIT, *t]), -c);
        }
        d
    }

    fn left_sequences(&self, u: &Tree) -> Arc<Sequences> {
        cached(&self.left, u, || {
            if u.is_unit() {
                return Arc::new(Sequences::basis(Tuple::new()));
            }
            let mut out = Sequences::zero();
            for (pair, alpha) in self.coproduct_tree(u).iter() {
                let (a, c) = (pair[0], pair[1]);
                if a == *u && c.is_unit() {
                    continue;
                }
                assert!(a.degree() < u.degree(), "coproduct term {a} ⊗ {c} of {u}");
                for (seq, beta) in self.left_sequences(&a).iter() {
                    let mut s = seq.clone();
                    s.push(c);
                    out.add_term(s, -(alpha * beta));
                }
            }
            Arc::new(out)
        })
    }

    fn right_sequences(&self, u: &Tree) -> Arc<Sequences> {
        cached(&self.right, u, || {
            if u.is_unit() {
                return Arc::new(Sequences::basis(Tuple::new()));
            }
            let mut out = Sequences::zero();
            for (pair, alpha) in self.coproduct_tree(u).iter() {
                let (a, c) = (pair[0], pair[1]);
                if a.is_unit() && c == *u {
                    continue;
                }
                assert!(c.degree() < u.degree(), "coproduct term {a} ⊗ {c} of {u}");
                for (seq, beta) in self.right_sequences(&c).iter() {
                    let mut s = Tuple::with_capacity(seq.len() + 1);
                    s.push(a);
                    s.extend_from_slice(seq);
                    out.add_term(s, -(alpha * beta));
                }
            }
            Arc::new(out)
        })
    }

    /// `u \ y`, determined by `Σ u(1) \ (u(2) y) = ε(u) y`.
    pub fn left_divide(&self, u: &FreeElement, y: &FreeElement) -> FreeElement {
        let mut out = FreeElement::zero();
        for (t, c) in u {
            for (seq, beta) in self.left_sequences(t).iter() {
                let cb = c * beta;
                for (z, d) in y {
                    let w = seq.iter().rev().fold(*z, |acc, s| s.product(&acc));
                    out.add_term(w, &cb * d);
                }
            }
        }
        out
    }

    /// `y / u`, determined by `Σ (y u(1)) / u(2) = ε(u) y`.
    pub fn right_divide(&self, y: &FreeElement, u: &FreeElement) -> FreeElement {
        let mut out = FreeElement::zero();
        for (t, c) in u {
            for (seq, beta) in self.right_sequences(t).iter() {
                let cb = c * beta;
                for (z, d) in y {
                    let w = seq.iter().fold(*z, |acc, s| acc.product(s));
                    out.add_term(w, &cb * d);
                }
            }
        }
        out
    }

    /// A basis of the primitive elements spanned by `candidates`.
    pub fn primitive_span(&self, candidates: &[Tree]) -> Vec<FreeElement> {
        let mut rows: BTreeMap<Tuple, usize> = BTreeMap::new();
        let mut columns = Vec::with_capacity(candidates.len());
        for t in candidates {
            let defect = self.primitivity_defect(&FreeElement::basis(*t));
            for key in defect.keys() {
                let next = rows.len();
                rows.entry(key.clone()).or_insert(next);
            }
            columns.push(defect);
        }
        let mut m = Matrix::new(rows.len(), candidates.len());
        for (j, col) in columns.iter().enumerate() {
            for (key, c) in col {
                m.set(rows[key], j, c.clone()).expect("indices in range");
            }
        }
        m.kernel_basis()
            .into_iter()
            .map(|v| {
                candidates
                    .iter()
                    .zip(v)
                    .map(|(t, c)| (*t, c))
                    .collect::<FreeElement>()
            })
            .collect()
    }

    /// Primitive elements of degree `n`. With `multidegree = Some(counts)` only
    /// trees using generator `i` exactly `counts[i]` times are considered.
    pub fn primitive_subspace(
        &self,
        n: usize,
        multidegree: Option<&[usize]>,
    ) -> Result<Vec<FreeElement>, crate::Error> {
        let candidates = match multidegree {
            None => Tree::all(self.dim(), n),
            Some(counts) => {
                if counts.len() > self.dim() {
                    return Err(crate::Error::UnknownGenerator {
                        index: counts.len(),
                        dim: self.dim(),
                    });
                }
                if counts.iter().sum::<usize>() != n {
                    return Err(crate::Error::Shape(format!(
                        "multidegree {counts:?} does not add up to degree {n}"
                    )));
                }
                let letters: Vec<u8> = counts
                    .iter()
                    .enumerate()
                    .flat_map(|(g, &k)| std::iter::repeat_n(g as u8, k))
                    .collect();
                Tree::all_with_letters(&letters)
            }
        };
        Ok(self.primitive_span(&candidates))
    }

    /// `x y`, for convenience alongside the braided operations.
    pub fn multiply(&self, a: &FreeElement, b: &FreeElement) -> FreeElement {
        multiply(a, b)
    }

    /// `1 ⊗ 1`, the coproduct of the unit.
    pub fn unit_tensor() -> TensorElement {
        TensorElement::term(tuple(&[Tree::UNIT, Tree::UNIT]), one())
    }
}
