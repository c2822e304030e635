//! Exhaustive bounded-degree checks of the braided Hopf axioms.

use super::HopfContext;
use crate::free_algebra::{render, render_tensor, tuple, FreeElement, TensorElement, Tree, Tuple};
use crate::report::{first_failure, Report};

type Outcome = Result<(), String>;

/// Degree bounds for [`verify_hopf_axioms`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HopfSuite {
    /// Trees checked for counit and coassociativity.
    pub max_degree: usize,
    /// Bound on `deg a + deg b` for pair checks.
    pub pair_degree: usize,
    /// Divisors checked by the division identities.
    pub divisor_degree: usize,
    /// Elements divided.
    pub dividend_degree: usize,
}

impl HopfSuite {
    pub fn up_to(max_degree: usize) -> Self {
        HopfSuite {
            max_degree,
            pair_degree: max_degree,
            divisor_degree: max_degree.min(4),
            dividend_degree: max_degree.min(2),
        }
    }
}

/// All trees of degree `1..=n`.
pub(crate) fn trees_up_to(dim: usize, n: usize) -> Vec<Tree> {
    (1..=n).flat_map(|k| Tree::all(dim, k)).collect()
}

/// All pairs of non-unit trees with degree sum at most `n`.
pub(crate) fn pairs_up_to(dim: usize, n: usize) -> Vec<(Tree, Tree)> {
    let by_degree: Vec<Vec<Tree>> = (0..=n).map(|k| Tree::all(dim, k)).collect();
    let mut out = Vec::new();
    for i in 1..n {
        for j in 1..=n - i {
            for a in &by_degree[i] {
                for b in &by_degree[j] {
                    out.push((*a, *b));
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

fn differ_elements(what: String, lhs: &FreeElement, rhs: &FreeElement) -> Outcome {
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("{what}: {} vs {}", render(lhs), render(rhs)))
    }
}

struct Checker<'a> {
    ctx: &'a HopfContext,
    delta: &'a dyn Fn(&Tree) -> TensorElement,
}

impl Checker<'_> {
    /// Applies the coproduct to slot `i` (0-based) of every tuple.
    fn delta_at(&self, t: &TensorElement, i: usize) -> TensorElement {
        let mut out = TensorElement::zero();
        for (tp, c) in t {
            for (pair, d) in &(self.delta)(&tp[i]) {
                let mut s = Tuple::with_capacity(tp.len() + 1);
                s.extend_from_slice(&tp[..i]);
                s.extend_from_slice(pair);
                s.extend_from_slice(&tp[i + 1..]);
                out.add_term(s, c * d);
            }
        }
        out
    }

    fn delta_element(&self, a: &FreeElement) -> TensorElement {
        let mut out = TensorElement::zero();
        for (t, c) in a {
            out.add_scaled(c, &(self.delta)(t));
        }
        out
    }

    fn counit(&self, t: &Tree) -> Outcome {
        let d = (self.delta)(t);
        let left: FreeElement = d
            .iter()
            .filter(|(p, _)| p[0].is_unit())
            .map(|(p, c)| (p[1], c.clone()))
            .collect();
        let right: FreeElement = d
            .iter()
            .filter(|(p, _)| p[1].is_unit())
            .map(|(p, c)| (p[0], c.clone()))
            .collect();
        let id = FreeElement::basis(*t);
        differ_elements(format!("(ε⊗id)Δ({t})"), &left, &id)?;
        differ_elements(format!("(id⊗ε)Δ({t})"), &right, &id)
    }

    fn coassociativity(&self, t: &Tree) -> Outcome {
        let d = (self.delta)(t);
        differ(
            format!("Δ coassociativity on {t}"),
            &self.delta_at(&d, 0),
            &self.delta_at(&d, 1),
        )
    }

    fn multiplicative(&self, a: &Tree, b: &Tree) -> Outcome {
        let lhs = (self.delta)(&a.product(b));
        let rhs = self.ctx.tensor_multiply(&(self.delta)(a), &(self.delta)(b));
        differ(format!("Δ({a} {b})"), &lhs, &rhs)
    }

    fn braiding_counit(&self, a: &Tree, b: &Tree) -> Outcome {
        let image = self.ctx.algebra().tau_star_pair(a, b);
        let first: FreeElement = image
            .iter()
            .filter(|(c, _, _)| c.is_unit())
            .map(|(_, d, e)| (*d, e.clone()))
            .collect();
        let second: FreeElement = image
            .iter()
            .filter(|(_, d, _)| d.is_unit())
            .map(|(c, _, e)| (*c, e.clone()))
            .collect();
        let eps = |t: &Tree| {
            if t.is_unit() {
                FreeElement::basis(Tree::UNIT)
            } else {
                FreeElement::zero()
            }
        };
        let scaled = |t: &Tree, e: &FreeElement| {
            e.iter()
                .map(|(_, c)| (*t, c.clone()))
                .collect::<FreeElement>()
        };
        differ_elements(format!("(ε⊗id)(({a}⊗{b})τ*)"), &first, &scaled(a, &eps(b)))?;
        differ_elements(format!("(id⊗ε)(({a}⊗{b})τ*)"), &second, &scaled(b, &eps(a)))
    }

    /// `τ*(id⊗Δ) = (Δ⊗id)τ*_2τ*_1` and `τ*(Δ⊗id) = (id⊗Δ)τ*_1τ*_2`.
    fn braiding_coproduct(&self, a: &Tree, b: &Tree) -> Outcome {
        let alg = self.ctx.algebra();
        let pair = TensorElement::basis(tuple(&[*a, *b]));
        let swapped = alg.tau_star(&pair).expect("pair");

        let lhs = self.delta_at(&swapped, 1);
        let rhs = alg.apply_word(&[2, 1], &self.delta_at(&pair, 0));
        differ(format!("τ*(id⊗Δ) on {a} ⊗ {b}"), &lhs, &rhs)?;

        let lhs = self.delta_at(&swapped, 0);
        let rhs = alg.apply_word(&[1, 2], &self.delta_at(&pair, 1));
        differ(format!("τ*(Δ⊗id) on {a} ⊗ {b}"), &lhs, &rhs)
    }

    fn eps_y(u: &Tree, y: &Tree) -> FreeElement {
        if u.is_unit() {
            FreeElement::basis(*y)
        } else {
            FreeElement::zero()
        }
    }

    /// `Σ u(1)\(u(2)y) = ε(u)y` and `Σ u(1)(u(2)\y) = ε(u)y`.
    fn left_division(&self, u: &Tree, y: &Tree) -> Outcome {
        let ctx = self.ctx;
        let want = Self::eps_y(u, y);
        let yy = FreeElement::basis(*y);
        let mut first = FreeElement::zero();
        let mut second = FreeElement::zero();
        for (p, c) in ctx.coproduct_tree(u).iter() {
            let a = FreeElement::basis(p[0]);
            let b = FreeElement::basis(p[1]);
            first.add_scaled(c, &ctx.left_divide(&a, &ctx.multiply(&b, &yy)));
            second.add_scaled(c, &ctx.multiply(&a, &ctx.left_divide(&b, &yy)));
        }
        differ_elements(format!("Σ u(1)\\(u(2) y), u={u}, y={y}"), &first, &want)?;
        differ_elements(format!("Σ u(1)(u(2)\\y), u={u}, y={y}"), &second, &want)
    }

    /// `Σ (y u(1))/u(2) = ε(u)y` and `Σ (y/u(1))u(2) = ε(u)y`.
    fn right_division(&self, u: &Tree, y: &Tree) -> Outcome {
        let ctx = self.ctx;
        let want = Self::eps_y(u, y);
        let yy = FreeElement::basis(*y);
        let mut first = FreeElement::zero();
        let mut second = FreeElement::zero();
        for (p, c) in ctx.coproduct_tree(u).iter() {
            let a = FreeElement::basis(p[0]);
            let b = FreeElement::basis(p[1]);
            first.add_scaled(c, &ctx.right_divide(&ctx.multiply(&yy, &a), &b));
            second.add_scaled(c, &ctx.multiply(&ctx.right_divide(&yy, &a), &b));
        }
        differ_elements(format!("Σ (y u(1))/u(2), u={u}, y={y}"), &first, &want)?;
        differ_elements(format!("Σ (y/u(1)) u(2), u={u}, y={y}"), &second, &want)
    }
}

/// Checks counit, coassociativity, multiplicativity of the coproduct, its
/// compatibility with the braiding, and the division identities.
///
/// `coproduct` replaces the coproduct in every check that uses it directly;
/// the divisions always use the context's own coproduct.
pub fn verify_hopf_axioms(
    ctx: &HopfContext,
    suite: HopfSuite,
    coproduct: Option<&dyn Fn(&Tree) -> TensorElement>,
) -> Report {
    let own = |t: &Tree| (*ctx.coproduct_tree(t)).clone();
    let checker = Checker {
        ctx,
        delta: coproduct.unwrap_or(&own),
    };
    let dim = ctx.dim();
    let trees = trees_up_to(dim, suite.max_degree);
    let pairs = pairs_up_to(dim, suite.pair_degree);
    let mut divisors = vec![Tree::UNIT];
    divisors.extend(trees_up_to(dim, suite.divisor_degree));
    let mut dividends = vec![Tree::UNIT];
    dividends.extend(trees_up_to(dim, suite.dividend_degree));
    let division_cases = || {
        divisors
            .iter()
            .flat_map(|u| dividends.iter().map(move |y| (u, y)))
    };

    let mut report = Report::new();
    let unit_delta = checker.delta_element(&FreeElement::basis(Tree::UNIT));
    report.record(
        "coproduct-of-unit",
        differ("Δ(1)".into(), &unit_delta, &HopfContext::unit_tensor()),
    );
    report.record("counit", first_failure(&trees, |t| checker.counit(t)));
    report.record(
        "coassociativity",
        first_failure(&trees, |t| checker.coassociativity(t)),
    );
    report.record(
        "coproduct-multiplicative",
        first_failure(&pairs, |(a, b)| checker.multiplicative(a, b)),
    );
    report.record(
        "braiding-counit",
        first_failure(&pairs, |(a, b)| checker.braiding_counit(a, b)),
    );
    report.record(
        "braiding-coproduct",
        first_failure(&pairs, |(a, b)| checker.braiding_coproduct(a, b)),
    );
    report.record(
        "left-division",
        first_failure(division_cases(), |(u, y)| checker.left_division(u, y)),
    );
    report.record(
        "right-division",
        first_failure(division_cases(), |(u, y)| checker.right_division(u, y)),
    );
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foundation::scalar;
    use crate::Braiding;

    #[test]
    fn flip_passes_small_degrees() {
        let ctx = HopfContext::new(Braiding::flip(2));
        let r = verify_hopf_axioms(&ctx, HopfSuite::up_to(3), None);
        assert!(r.all_pass(), "{}", r.to_text());
    }

    #[test]
    fn non_involutive_diagonal_passes() {
        let q = vec![vec![scalar(1), scalar(2)], vec![scalar(3), scalar(1)]];
        let ctx = HopfContext::new(Braiding::diagonal(q).unwrap());
        let r = verify_hopf_axioms(&ctx, HopfSuite::up_to(3), None);
        assert!(r.all_pass(), "{}", r.to_text());
    }

    #[test]
    fn corrupted_coproduct_is_caught() {
        let ctx = HopfContext::new(Braiding::flip(2));
        let corrupt = |t: &Tree| {
            let mut d = (*ctx.coproduct_tree(t)).clone();
            if t.degree() == 2 {
                let (a, b) = t.split().unwrap();
                d.add_term(tuple(&[b, a]), scalar(1));
            }
            d
        };
        let r = verify_hopf_axioms(&ctx, HopfSuite::up_to(3), Some(&corrupt));
        let check = r.get("coassociativity").unwrap();
        assert!(!check.pass);
        assert!(check
            .witness
            .as_deref()
            .unwrap()
            .contains("coassociativity"));
    }

    #[test]
    fn pair_enumeration() {
        assert_eq!(pairs_up_to(2, 2).len(), 4);
        assert_eq!(pairs_up_to(2, 3).len(), 4 + 2 * 2 * 4);
    }
}
