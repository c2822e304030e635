//! Exhaustive checks of the extended braiding on basis trees.

use super::braided::BraidedAlgebra;
use super::element::{render_tensor, tuple, TensorElement, Tuple};
use super::tree::Tree;
use crate::report::{first_failure, Report};

type Outcome = Result<(), String>;

/// All triples of non-unit trees with total degree at most `n`.
pub fn triples_up_to(dim: usize, n: usize) -> Vec<[Tree; 3]> {
    let by_degree: Vec<Vec<Tree>> = (0..=n).map(|k| Tree::all(dim, k)).collect();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n.saturating_sub(i) {
            for k in 1..=n.saturating_sub(i + j) {
                for a in &by_degree[i] {
                    for b in &by_degree[j] {
                        for c in &by_degree[k] {
                            out.push([*a, *b, *c]);
                        }
                    }
                }
            }
        }
    }
    out
}

fn differ(what: String, lhs: &TensorElement, rhs: &TensorElement) -> Outcome {
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!(
            "{what}: {} vs {}",
            render_tensor(lhs),
            render_tensor(rhs)
        ))
    }
}

/// Multiplies slots `i` and `i+1` (0-based) of every tuple.
pub fn multiply_slots(t: &TensorElement, i: usize) -> TensorElement {
    t.map_keys(|tp| {
        let mut s = Tuple::with_capacity(tp.len() - 1);
        s.extend_from_slice(&tp[..i]);
        s.push(tp[i].product(&tp[i + 1]));
        s.extend_from_slice(&tp[i + 2..]);
        s
    })
}

/// `τ*_1τ*_2τ*_1 = τ*_2τ*_1τ*_2` on `a ⊗ b ⊗ c`.
pub fn braid_relation(alg: &BraidedAlgebra, [a, b, c]: [Tree; 3]) -> Outcome {
    let t = [a, b, c];
    differ(
        format!("braid relation on {a} ⊗ {b} ⊗ {c}"),
        &alg.apply_letters(&[1, 2, 1], &t),
        &alg.apply_letters(&[2, 1, 2], &t),
    )
}

/// `(ab ⊗ c)τ* = (a ⊗ b ⊗ c)τ*_2τ*_1(id⊗m)`.
pub fn product_on_left(alg: &BraidedAlgebra, [a, b, c]: [Tree; 3]) -> Outcome {
    let lhs = alg.apply_letters(&[1], &[a.product(&b), c]);
    let rhs = multiply_slots(&alg.apply_letters(&[2, 1], &[a, b, c]), 1);
    differ(format!("(({a} {b}) ⊗ {c})τ*"), &lhs, &rhs)
}

/// `(a ⊗ bc)τ* = (a ⊗ b ⊗ c)τ*_1τ*_2(m⊗id)`.
pub fn product_on_right(alg: &BraidedAlgebra, [a, b, c]: [Tree; 3]) -> Outcome {
    let lhs = alg.apply_letters(&[1], &[a, b.product(&c)]);
    let rhs = multiply_slots(&alg.apply_letters(&[1, 2], &[a, b, c]), 0);
    differ(format!("({a} ⊗ ({b} {c}))τ*"), &lhs, &rhs)
}

/// On generators `τ*` is the given braiding.
pub fn extends_braiding(alg: &BraidedAlgebra) -> Outcome {
    let dim = alg.dim() as u8;
    first_failure(
        (0..dim).flat_map(|i| (0..dim).map(move |s| (i, s))),
        |(i, s)| {
            let want: TensorElement = alg
                .braiding()
                .image(i, s)
                .iter()
                .map(|p| {
                    (
                        tuple(&[Tree::leaf(p.left), Tree::leaf(p.right)]),
                        p.coeff.clone(),
                    )
                })
                .collect();
            let got = alg.apply_letters(&[1], &[Tree::leaf(i), Tree::leaf(s)]);
            differ(format!("(x{} ⊗ x{})τ*", i + 1, s + 1), &got, &want)
        },
    )
}

/// Braid relation and product compatibilities of `τ*` on all basis triples
/// of total degree at most `max_degree`.
pub fn verify_tau_star(alg: &BraidedAlgebra, max_degree: usize) -> Report {
    let triples = triples_up_to(alg.dim(), max_degree);
    let mut report = Report::new();
    report.record("tau-extends-braiding", extends_braiding(alg));
    report.record(
        "tau-braid-relation",
        first_failure(triples.iter().copied(), |t| braid_relation(alg, t)),
    );
    report.record(
        "tau-product-on-left",
        first_failure(triples.iter().copied(), |t| product_on_left(alg, t)),
    );
    report.record(
        "tau-product-on-right",
        first_failure(triples.iter().copied(), |t| product_on_right(alg, t)),
    );
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foundation::scalar;
    use crate::Braiding;

    #[test]
    fn triple_counts() {
        assert_eq!(triples_up_to(2, 3).len(), 8);
        assert_eq!(triples_up_to(2, 2).len(), 0);
    }

    #[test]
    fn flip_and_diagonal_pass() {
        let q = vec![vec![scalar(1), scalar(2)], vec![scalar(3), scalar(-1)]];
        for b in [Braiding::flip(2), Braiding::diagonal(q).unwrap()] {
            let r = verify_tau_star(&BraidedAlgebra::new(b), 4);
            assert!(r.all_pass(), "{}", r.to_text());
        }
    }
}
