//! Independent reference implementations and the shared test braidings.
//!
//! Nothing here uses block-move words, the shuffle formula or the sparse
//! kernel of the library: the braiding on trees is rebuilt by recursion on
//! products, the coproduct by multiplicativity, divisions by the mirrored
//! recursion, `p_{m,n}` by subset splitting and ranks by dense elimination.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use nahopf::foundation::{ratio, scalar};
use nahopf::free_algebra::{tuple, FreeElement, TensorElement, Tree};
use nahopf::{Braiding, Scalar};

/// The test braidings with a short name. The last one is not involutive.
pub fn braidings() -> Vec<(&'static str, Braiding)> {
    vec![
        ("flip", Braiding::flip(2)),
        ("super-flip", super_flip()),
        ("diagonal", diagonal_involutive()),
        ("permutation", Braiding::permutation(&[1, 0]).unwrap()),
        ("non-involutive", non_involutive()),
    ]
}

pub fn involutive_braidings() -> Vec<(&'static str, Braiding)> {
    braidings()
        .into_iter()
        .filter(|(_, b)| b.is_involutive())
        .collect()
}

pub fn super_flip() -> Braiding {
    Braiding::diagonal(vec![
        vec![scalar(1), scalar(1)],
        vec![scalar(1), scalar(-1)],
    ])
    .unwrap()
}

pub fn diagonal_involutive() -> Braiding {
    Braiding::diagonal(vec![
        vec![scalar(1), scalar(2)],
        vec![ratio(1, 2), scalar(-1)],
    ])
    .unwrap()
}

pub fn non_involutive() -> Braiding {
    Braiding::diagonal(vec![vec![scalar(1), scalar(2)], vec![scalar(3), scalar(1)]]).unwrap()
}

pub fn non_involutive_3() -> Braiding {
    Braiding::diagonal(vec![
        vec![scalar(1), scalar(2), scalar(3)],
        vec![scalar(5), scalar(-1), scalar(7)],
        vec![scalar(11), scalar(13), ratio(1, 2)],
    ])
    .unwrap()
}

pub fn x(g: u8) -> Tree {
    Tree::leaf(g - 1)
}

type Pairs = Vec<(Tree, Tree, Scalar)>;

/// `(a ⊗ c)τ*` from `τ` on generators alone, via
/// `(ab ⊗ c)τ* = Σ c_ij ⊗ a_ij b_i` and `(a ⊗ bc)τ* = Σ b_i c_ij ⊗ a_ij`.
pub struct RecursiveBraiding<'a> {
    braiding: &'a Braiding,
    memo: HashMap<(Tree, Tree), Pairs>,
}

impl<'a> RecursiveBraiding<'a> {
    pub fn new(braiding: &'a Braiding) -> Self {
        RecursiveBraiding {
            braiding,
            memo: HashMap::new(),
        }
    }

    pub fn pair(&mut self, a: Tree, c: Tree) -> Pairs {
        if a.is_unit() || c.is_unit() {
            return vec![(c, a, scalar(1))];
        }
        if let Some(hit) = self.memo.get(&(a, c)) {
            return hit.clone();
        }
        let mut acc: BTreeMap<(Tree, Tree), Scalar> = BTreeMap::new();
        if let Some((a1, b)) = a.split() {
            for (ci, bi, e) in self.pair(b, c) {
                for (cij, aij, f) in self.pair(a1, ci) {
                    *acc.entry((cij, aij.product(&bi))).or_default() += &e * &f;
                }
            }
        } else if let Some((b, c2)) = c.split() {
            for (bi, ai, e) in self.pair(a, b) {
                for (cij, aij, f) in self.pair(ai, c2) {
                    *acc.entry((bi.product(&cij), aij)).or_default() += &e * &f;
                }
            }
        } else {
            let (i, s) = (a.word()[0], c.word()[0]);
            for t in self.braiding.image(i, s) {
                *acc.entry((Tree::leaf(t.left), Tree::leaf(t.right)))
                    .or_default() += &t.coeff;
            }
        }
        let out: Pairs = acc
            .into_iter()
            .filter(|(_, v)| *v != Scalar::default())
            .map(|((p, q), v)| (p, q, v))
            .collect();
        self.memo.insert((a, c), out.clone());
        out
    }

    pub fn tensor(&mut self, a: Tree, c: Tree) -> TensorElement {
        self.pair(a, c)
            .into_iter()
            .map(|(p, q, v)| (tuple(&[p, q]), v))
            .collect()
    }

    /// `(a⊗b)(c⊗d) = Σ a c_i ⊗ b_i d` with this braiding.
    pub fn tensor_multiply(&mut self, x: &TensorElement, y: &TensorElement) -> TensorElement {
        let mut out = TensorElement::zero();
        for (p, c) in x {
            for (q, d) in y {
                for (ci, bi, e) in self.pair(p[1], q[0]) {
                    out.add_term(tuple(&[p[0].product(&ci), bi.product(&q[1])]), c * d * e);
                }
            }
        }
        out
    }
}

/// The coproduct rebuilt from `Δ(x) = x⊗1 + 1⊗x` and `Δ(ab) = Δ(a)Δ(b)`.
pub struct MultiplicativeCoproduct<'a> {
    tau: RecursiveBraiding<'a>,
    memo: HashMap<Tree, TensorElement>,
}

impl<'a> MultiplicativeCoproduct<'a> {
    pub fn new(braiding: &'a Braiding) -> Self {
        MultiplicativeCoproduct {
            tau: RecursiveBraiding::new(braiding),
            memo: HashMap::new(),
        }
    }

    pub fn of(&mut self, t: Tree) -> TensorElement {
        if let Some(hit) = self.memo.get(&t) {
            return hit.clone();
        }
        let out = if t.is_unit() {
            TensorElement::basis(tuple(&[Tree::UNIT, Tree::UNIT]))
        } else if let Some((a, b)) = t.split() {
            let (da, db) = (self.of(a), self.of(b));
            self.tau.tensor_multiply(&da, &db)
        } else {
            [tuple(&[t, Tree::UNIT]), tuple(&[Tree::UNIT, t])]
                .into_iter()
                .map(|k| (k, scalar(1)))
                .collect()
        };
        self.memo.insert(t, out.clone());
        out
    }
}

pub fn multiply(a: &FreeElement, b: &FreeElement) -> FreeElement {
    let mut out = FreeElement::zero();
    for (x, c) in a {
        for (y, d) in b {
            out.add_term(x.product(y), c * d);
        }
    }
    out
}

/// `u \' y = -Σ a_i (c_i \' y)` over `Δ(u) = 1⊗u + Σ a_i ⊗ c_i`.
pub fn alternative_left_divide(
    delta: &mut MultiplicativeCoproduct<'_>,
    u: Tree,
    y: &FreeElement,
) -> FreeElement {
    if u.is_unit() {
        return y.clone();
    }
    let mut out = FreeElement::zero();
    for (p, alpha) in &delta.of(u) {
        if p[0].is_unit() && p[1] == u {
            continue;
        }
        let inner = alternative_left_divide(delta, p[1], y);
        let term = multiply(&FreeElement::basis(p[0]), &inner);
        out.add_scaled(&-alpha.clone(), &term);
    }
    out
}

pub fn right_normed(trees: &[Tree]) -> Tree {
    trees.iter().fold(Tree::UNIT, |acc, t| acc.product(t))
}

fn associator(u: Tree, v: Tree, w: Tree) -> FreeElement {
    let mut out = FreeElement::basis(u.product(&v).product(&w));
    out.add_term(u.product(&v.product(&w)), scalar(-1));
    out
}

fn split_by_mask(items: &[Tree], mask: u32) -> (Vec<Tree>, Vec<Tree>) {
    let mut chosen = Vec::new();
    let mut rest = Vec::new();
    for (i, t) in items.iter().enumerate() {
        if mask >> i & 1 == 1 {
            chosen.push(*t);
        } else {
            rest.push(*t);
        }
    }
    (chosen, rest)
}

/// The classical operation
/// `p(U; V; w) = (U, V, w) - Σ U(1)V(1) · p(U(2); V(2); w)`,
/// summed over order-preserving splittings with `U(2), V(2)` nonempty and
/// `U(1) V(1)` not both empty.
pub fn classical_p(us: &[Tree], vs: &[Tree], w: Tree) -> FreeElement {
    assert!(!us.is_empty() && !vs.is_empty());
    let mut out = associator(right_normed(us), right_normed(vs), w);
    for mu in 0..(1u32 << us.len()) {
        for mv in 0..(1u32 << vs.len()) {
            let (u1, u2) = split_by_mask(us, mu);
            let (v1, v2) = split_by_mask(vs, mv);
            if u2.is_empty() || v2.is_empty() || u1.len() + v1.len() == 0 {
                continue;
            }
            let head = right_normed(&u1).product(&right_normed(&v1));
            for (t, c) in &classical_p(&u2, &v2, w) {
                out.add_term(head.product(t), -c.clone());
            }
        }
    }
    out
}

/// Classical `S_{m,2}(x; y, z) = -p(x; y; z) + p(x; z; y)`, and `-(yz - zy)` for `m = 0`.
pub fn classical_s(args: &[Tree]) -> FreeElement {
    let m = args.len() - 2;
    let (y, z) = (args[m], args[m + 1]);
    if m == 0 {
        let mut out = FreeElement::basis(z.product(&y));
        out.add_term(y.product(&z), scalar(-1));
        return out;
    }
    let mut out = classical_p(&args[..m], &[y], z).scale(&scalar(-1));
    out.add_assign(&classical_p(&args[..m], &[z], y));
    out
}

fn permutations(items: &[Tree]) -> Vec<Vec<Tree>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, head);
            out.push(p);
        }
    }
    out
}

/// Classical `Φ_{m,n}`: `p_{m,n-1}` averaged over permutations of both blocks.
pub fn classical_phi(m: usize, args: &[Tree]) -> FreeElement {
    let n = args.len() - m;
    let mut out = FreeElement::zero();
    let mut count = 0i64;
    for xs in permutations(&args[..m]) {
        for ys in permutations(&args[m..]) {
            out.add_assign(&classical_p(&xs, &ys[..n - 1], ys[n - 1]));
            count += 1;
        }
    }
    out.scale(&ratio(1, count))
}

/// Rank of a dense rational matrix by plain Gaussian elimination.
pub fn dense_rank(mut rows: Vec<Vec<Scalar>>) -> usize {
    let zero = Scalar::default();
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != zero) else {
            continue;
        };
        rows.swap(rank, pivot);
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[col] != zero {
                let f = &row[col] / &pivot_row[col];
                for (entry, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                    *entry -= &f * p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Dimension of the primitive elements spanned by `candidates`, computed
/// from the multiplicative coproduct and dense elimination.
pub fn primitive_dimension(braiding: &Braiding, candidates: &[Tree]) -> usize {
    let mut delta = MultiplicativeCoproduct::new(braiding);
    let mut columns = Vec::new();
    let mut keys = std::collections::BTreeSet::new();
    for t in candidates {
        let mut d = delta.of(*t);
        d.add_term(tuple(&[*t, Tree::UNIT]), scalar(-1));
        d.add_term(tuple(&[Tree::UNIT, *t]), scalar(-1));
        keys.extend(d.keys().cloned());
        columns.push(d);
    }
    let rows: Vec<Vec<Scalar>> = keys
        .iter()
        .map(|k| columns.iter().map(|c| c.coeff(k)).collect())
        .collect();
    candidates.len() - dense_rank(rows)
}
