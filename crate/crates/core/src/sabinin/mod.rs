//! Braided commutator, the primitive operations `P_{m,n}` and the Sabinin
//! operations `S_{m,2}` and `Φ_{m,n}` for involutive braidings.

mod verify;

pub use verify::{
    antisymmetry, cyclic_identity, evaluation_tuples, phi_symmetry, swap_identity,
    verify_braided_operation, verify_primitive_operations, verify_primitivity,
    verify_sabinin_identities, CyclicScope, SabininReading, SwapRange,
};

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use crate::braid::{bracket, nu, shuffles};
use crate::braiding::Braiding;
use crate::foundation::scalar::{factorial, one};
use crate::foundation::Scalar;
use crate::free_algebra::{tensor_of, FreeElement, TensorElement, Tree, Tuple};
use crate::hopf::HopfContext;
use crate::Error;

/// A multilinear operation evaluated slot-wise on basis trees.
pub trait Operation: Sync {
    fn arity(&self) -> usize;
    fn name(&self) -> String;
    /// The value on a basis tuple of length [`arity`](Self::arity).
    fn apply_tuple(&self, ctx: &SabininContext, t: &[Tree]) -> FreeElement;
}

/// The operations built into the crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MultilinearOp {
    /// `[x, y]_τ = xy - ((x⊗y)τ*)m`.
    Commutator,
    /// `P_{m,n}`, arity `m + n + 1`.
    P(usize, usize),
    /// `S_{m,2}`, arity `m + 2`.
    S(usize),
    /// `Φ_{m,n}`, arity `m + n`.
    Phi(usize, usize),
}

impl MultilinearOp {
    /// Validates the parameters: `P` needs `m, n ≥ 1`, `Φ` needs `m ≥ 1, n ≥ 2`.
    pub fn checked(self) -> Result<Self, Error> {
        let ok = match self {
            MultilinearOp::Commutator | MultilinearOp::S(_) => true,
            MultilinearOp::P(m, n) => m >= 1 && n >= 1,
            MultilinearOp::Phi(m, n) => m >= 1 && n >= 2,
        };
        if ok {
            Ok(self)
        } else {
            Err(Error::Shape(format!("{self} is not defined")))
        }
    }
}

impl fmt::Display for MultilinearOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MultilinearOp::Commutator => write!(f, "commutator"),
            MultilinearOp::P(m, n) => write!(f, "P({m},{n})"),
            MultilinearOp::S(m) => write!(f, "S({m},2)"),
            MultilinearOp::Phi(m, n) => write!(f, "Phi({m},{n})"),
        }
    }
}

impl Operation for MultilinearOp {
    fn arity(&self) -> usize {
        match *self {
            MultilinearOp::Commutator => 2,
            MultilinearOp::P(m, n) => m + n + 1,
            MultilinearOp::S(m) => m + 2,
            MultilinearOp::Phi(m, n) => m + n,
        }
    }

    fn name(&self) -> String {
        self.to_string()
    }

    fn apply_tuple(&self, ctx: &SabininContext, t: &[Tree]) -> FreeElement {
        match *self {
            MultilinearOp::Commutator => ctx.commutator_trees(&t[0], &t[1]),
            MultilinearOp::P(m, n) => (*ctx.p(m, n, t)).clone(),
            MultilinearOp::S(m) => ctx.s(m, t),
            MultilinearOp::Phi(m, n) => ctx.phi(m, n, t),
        }
    }
}

/// An operation given by a closure, for ad hoc and control operations.
pub struct FnOperation<F> {
    pub name: String,
    pub arity: usize,
    pub f: F,
}

impl<F> Operation for FnOperation<F>
where
    F: Fn(&SabininContext, &[Tree]) -> FreeElement + Sync,
{
    fn arity(&self) -> usize {
        self.arity
    }

    fn name(&self) -> String {
        self.name.clone()
    }

    fn apply_tuple(&self, ctx: &SabininContext, t: &[Tree]) -> FreeElement {
        (self.f)(ctx, t)
    }
}

type PKey = (usize, usize, Tuple);

/// Braid words `[π][σ]_(m)ν_m^{r+1,m+s}` with their split point `r`, `s`.
type Moves = Arc<Vec<(usize, usize, Vec<u8>)>>;

/// Evaluation context for the operations of an involutive braiding.
#[derive(Debug)]
pub struct SabininContext {
    hopf: HopfContext,
    p_values: RwLock<HashMap<PKey, Arc<FreeElement>>>,
    p_moves: RwLock<HashMap<(usize, usize), Moves>>,
    permutations: RwLock<HashMap<usize, Arc<Vec<Vec<u8>>>>>,
}

/// `((u1 u2) u3) ...`, the unit for an empty slice.
pub fn right_normed_product(trees: &[Tree]) -> Tree {
    trees.iter().fold(Tree::UNIT, |acc, t| acc.product(t))
}

/// One braid word per permutation of `n` letters, found by breadth-first
/// search over adjacent transpositions.
pub fn permutation_words(n: usize) -> Vec<Vec<u8>> {
    let start: Vec<u8> = (0..n as u8).collect();
    let mut seen = std::collections::HashSet::from([start.clone()]);
    let mut queue = std::collections::VecDeque::from([(start, Vec::new())]);
    let mut out = Vec::new();
    while let Some((perm, word)) = queue.pop_front() {
        for i in 1..n {
            let mut next = perm.clone();
            next.swap(i - 1, i);
            if seen.insert(next.clone()) {
                let mut w: Vec<u8> = word.clone();
                w.push(i as u8);
                queue.push_back((next, w));
            }
        }
        out.push(word);
    }
    out
}

impl SabininContext {
    /// Fails with [`Error::NotInvolutive`] unless `τ² = id`.
    pub fn new(braiding: Braiding) -> Result<Self, Error> {
        braiding.requires_involutive()?;
        Ok(SabininContext {
            hopf: HopfContext::new(braiding),
            p_values: RwLock::default(),
            p_moves: RwLock::default(),
            permutations: RwLock::default(),
        })
    }

    pub fn hopf(&self) -> &HopfContext {
        &self.hopf
    }

    pub fn dim(&self) -> usize {
        self.hopf.dim()
    }

    /// Evaluates `op` on elements, extending multilinearly.
    pub fn evaluate(&self, op: &dyn Operation, args: &[FreeElement]) -> Result<FreeElement, Error> {
        if args.len() != op.arity() {
            return Err(Error::Arity {
                op: op.name(),
                expected: op.arity(),
                got: args.len(),
            });
        }
        Ok(self.apply_tensor(op, &tensor_of(args)))
    }

    /// Evaluates `op` on every tuple of a tensor.
    pub fn apply_tensor(&self, op: &dyn Operation, t: &TensorElement) -> FreeElement {
        let mut out = FreeElement::zero();
        for (tp, c) in t {
            out.add_scaled(c, &op.apply_tuple(self, tp));
        }
        out
    }

    /// `[x, y]_τ` on basis trees.
    pub fn commutator_trees(&self, x: &Tree, y: &Tree) -> FreeElement {
        let mut out = FreeElement::basis(x.product(y));
        for (a, b, c) in self.hopf.algebra().tau_star_pair(x, y).iter() {
            out.add_term(a.product(b), -c.clone());
        }
        out
    }

    pub fn commutator(&self, x: &FreeElement, y: &FreeElement) -> FreeElement {
        self.apply_tensor(
            &MultilinearOp::Commutator,
            &tensor_of(&[x.clone(), y.clone()]),
        )
    }

    fn moves(&self, m: usize, n: usize) -> Moves {
        if let Some(hit) = self.p_moves.read().unwrap().get(&(m, n)) {
            return hit.clone();
        }
        let mut out = Vec::new();
        for r in 0..m {
            for s in 0..n {
                if r + s == 0 {
                    continue;
                }
                for pi in shuffles(m, r) {
                    for sigma in shuffles(n, s) {
                        let mut word: Vec<u8> = bracket(&pi).letters().to_vec();
                        word.extend(bracket(&sigma).letters().iter().map(|l| l + m as u8));
                        word.extend_from_slice(
                            nu(m, r + 1, m + s).expect("block move in range").letters(),
                        );
                        out.push((r, s, word));
                    }
                }
            }
        }
        let out = Arc::new(out);
        self.p_moves.write().unwrap().insert((m, n), out.clone());
        out
    }

    /// `P_{m,n}` on a basis tuple `(x_1..x_m, y_1..y_n, z)`; zero if `m < 1`
    /// or `n < 1`.
    pub fn p(&self, m: usize, n: usize, t: &[Tree]) -> Arc<FreeElement> {
        assert_eq!(
            t.len(),
            m + n + 1,
            "P({m},{n}) takes {} arguments",
            m + n + 1
        );
        if m == 0 || n == 0 {
            return Arc::new(FreeElement::zero());
        }
        let key = (m, n, Tuple::from_slice(t));
        if let Some(hit) = self.p_values.read().unwrap().get(&key) {
            return hit.clone();
        }
        let x = right_normed_product(&t[..m]);
        let y = right_normed_product(&t[m..m + n]);
        let z = t[m + n];
        let mut out = FreeElement::basis(x.product(&y).product(&z));
        out.add_term(x.product(&y.product(&z)), -one());
        let alg = self.hopf.algebra();
        for (r, s, word) in self.moves(m, n).iter() {
            let (r, s) = (*r, *s);
            for (moved, c) in alg.apply_letters(word, t) {
                let head = right_normed_product(&moved[..r])
                    .product(&right_normed_product(&moved[r..r + s]));
                for (tail, d) in self.p(m - r, n - s, &moved[r + s..]).iter() {
                    out.add_term(head.product(tail), -(&c * d));
                }
            }
        }
        let out = Arc::new(out);
        self.p_values.write().unwrap().insert(key, out.clone());
        out
    }

    /// `S_{0,2} = -[y,z]_τ`; for `m ≥ 1`, `S_{m,2}(u) = -P_{m,1}(u) + P_{m,1}(uτ*_{m+1})`.
    pub fn s(&self, m: usize, t: &[Tree]) -> FreeElement {
        assert_eq!(t.len(), m + 2, "S({m},2) takes {} arguments", m + 2);
        if m == 0 {
            return self.commutator_trees(&t[0], &t[1]).scale(&-one());
        }
        let mut out = self.p(m, 1, t).scale(&-one());
        for (swapped, c) in self.hopf.algebra().apply_letters(&[m as u8 + 1], t) {
            out.add_scaled(&c, &self.p(m, 1, &swapped));
        }
        out
    }

    fn permutation_words(&self, n: usize) -> Arc<Vec<Vec<u8>>> {
        if let Some(hit) = self.permutations.read().unwrap().get(&n) {
            return hit.clone();
        }
        let words = Arc::new(permutation_words(n));
        self.permutations.write().unwrap().insert(n, words.clone());
        words
    }

    /// `Φ_{m,n}(u) = 1/(m! n!) Σ_{π ∈ S_m, σ ∈ S_n} P_{m,n-1}(u π̄ σ̄_(m))`.
    pub fn phi(&self, m: usize, n: usize, t: &[Tree]) -> FreeElement {
        assert_eq!(t.len(), m + n, "Phi({m},{n}) takes {} arguments", m + n);
        let alg = self.hopf.algebra();
        let mut sum = TensorElement::zero();
        for pi in self.permutation_words(m).iter() {
            for sigma in self.permutation_words(n).iter() {
                let mut word = pi.clone();
                word.extend(sigma.iter().map(|l| l + m as u8));
                sum.add_assign(&alg.apply_letters(&word, t));
            }
        }
        let weight: Scalar = (factorial(m) * factorial(n)).recip();
        self.apply_tensor(&MultilinearOp::P(m, n - 1), &sum)
            .scale(&weight)
    }

    /// `op` applied to slots `at..at + arity` of every tuple, the result
    /// taking the place of those slots.
    pub fn apply_in_slots(
        &self,
        op: &dyn Operation,
        at: usize,
        t: &TensorElement,
    ) -> TensorElement {
        let k = op.arity();
        let mut out = TensorElement::zero();
        for (tp, c) in t {
            for (v, d) in &op.apply_tuple(self, &tp[at..at + k]) {
                let mut s = Tuple::with_capacity(tp.len() + 1 - k);
                s.extend_from_slice(&tp[..at]);
                s.push(*v);
                s.extend_from_slice(&tp[at + k..]);
                out.add_term(s, c * d);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foundation::scalar;
    use crate::free_algebra::{parse_element, render, tuple};

    fn flip(d: usize) -> SabininContext {
        SabininContext::new(Braiding::flip(d)).unwrap()
    }

    fn x(g: u8) -> Tree {
        Tree::leaf(g - 1)
    }

    fn e(ctx: &SabininContext, s: &str) -> FreeElement {
        parse_element(s, ctx.dim()).unwrap()
    }

    #[test]
    fn rejects_non_involutive() {
        let q = vec![vec![scalar(1), scalar(2)], vec![scalar(3), scalar(1)]];
        assert!(matches!(
            SabininContext::new(Braiding::diagonal(q).unwrap()),
            Err(Error::NotInvolutive)
        ));
    }

    #[test]
    fn commutators() {
        let ctx = flip(2);
        assert_eq!(
            render(&ctx.commutator_trees(&x(1), &x(2))),
            "1*(x1 x2) - 1*(x2 x1)"
        );
        assert!(ctx.commutator_trees(&x(1), &x(1)).is_zero());
        let q = vec![
            vec![scalar(1), scalar(2)],
            vec![crate::foundation::ratio(1, 2), scalar(-1)],
        ];
        let ctx = SabininContext::new(Braiding::diagonal(q).unwrap()).unwrap();
        assert_eq!(
            render(&ctx.commutator_trees(&x(1), &x(2))),
            "1*(x1 x2) - 2*(x2 x1)"
        );
        assert_eq!(render(&ctx.commutator_trees(&x(2), &x(2))), "2*(x2 x2)");
    }

    #[test]
    fn p_one_one_is_the_associator() {
        let ctx = flip(3);
        let v = ctx.p(1, 1, &[x(1), x(2), x(3)]);
        assert_eq!(*v, e(&ctx, "(x1 x2) x3 - x1 (x2 x3)"));
        assert!(ctx.p(0, 2, &[x(1), x(2), x(3)]).is_zero());
    }

    #[test]
    fn s_one_two_under_the_flip() {
        let ctx = flip(3);
        let got = ctx.s(1, &[x(1), x(2), x(3)]);
        let want = e(&ctx, "-(x1 x2) x3 + x1 (x2 x3) + (x1 x3) x2 - x1 (x3 x2)");
        assert_eq!(got, want);
        assert_eq!(ctx.s(0, &[x(1), x(2)]), e(&ctx, "-(x1 x2) + x2 x1"));
    }

    #[test]
    fn phi_one_two_under_the_flip() {
        let ctx = flip(3);
        let got = ctx.phi(1, 2, &[x(1), x(2), x(3)]);
        let want = e(
            &ctx,
            "1/2*((x1 x2) x3) - 1/2*(x1 (x2 x3)) + 1/2*((x1 x3) x2) - 1/2*(x1 (x3 x2))",
        );
        assert_eq!(got, want);
    }

    #[test]
    fn permutation_word_counts() {
        assert_eq!(permutation_words(0).len(), 1);
        assert_eq!(permutation_words(3).len(), 6);
        assert_eq!(permutation_words(4).len(), 24);
    }

    #[test]
    fn arity_is_checked() {
        let ctx = flip(2);
        let err = ctx
            .evaluate(&MultilinearOp::P(1, 1), &[e(&ctx, "x1")])
            .unwrap_err();
        assert!(matches!(
            err,
            Error::Arity {
                expected: 3,
                got: 1,
                ..
            }
        ));
        assert!(MultilinearOp::Phi(1, 1).checked().is_err());
        assert!(MultilinearOp::P(0, 1).checked().is_err());
    }

    #[test]
    fn slot_application() {
        let ctx = flip(3);
        let t = TensorElement::basis(tuple(&[x(1), x(2), x(3)]));
        let got = ctx.apply_in_slots(&MultilinearOp::Commutator, 1, &t);
        assert_eq!(
            crate::free_algebra::render_tensor(&got),
            "1*[x1 | (x2 x3)] - 1*[x1 | (x3 x2)]"
        );
    }
}
