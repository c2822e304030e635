//! Primitivity, braided-operation and Sabinin-identity checks on generator
//! tuples.

use super::{FnOperation, MultilinearOp, Operation, SabininContext};
use crate::braid::{bracket, shuffles};
use crate::braiding::all_words;
use crate::foundation::scalar::one;
use crate::free_algebra::{render, render_tensor, tuple, FreeElement, TensorElement, Tree};
use crate::report::{first_failure, Report};

type Outcome = Result<(), String>;

/// Inputs for an operation of the given arity: the distinct generators
/// `x1..x_arity` when there are enough of them, otherwise every tuple of
/// generators.
pub fn evaluation_tuples(dim: usize, arity: usize) -> Vec<Vec<Tree>> {
    if dim >= arity {
        return vec![(0..arity as u8).map(Tree::leaf).collect()];
    }
    all_words(dim, arity)
        .into_iter()
        .map(|w| w.iter().map(|&g| Tree::leaf(g)).collect())
        .collect()
}

fn show(t: &[Tree]) -> String {
    let parts: Vec<String> = t.iter().map(ToString::to_string).collect();
    parts.join(", ")
}

fn nonzero(what: String, v: &FreeElement) -> Outcome {
    if v.is_zero() {
        Ok(())
    } else {
        Err(format!("{what} = {}", render(v)))
    }
}

fn primitive(ctx: &SabininContext, what: String, v: &FreeElement) -> Outcome {
    let defect = ctx.hopf().primitivity_defect(v);
    if defect.is_zero() {
        Ok(())
    } else {
        Err(format!(
            "{what} = {} has Δ - id⊗1 - 1⊗id = {}",
            render(v),
            render_tensor(&defect)
        ))
    }
}

/// `op` maps generator tuples to primitive elements.
pub fn verify_primitivity(ctx: &SabininContext, op: &dyn Operation) -> Outcome {
    first_failure(evaluation_tuples(ctx.dim(), op.arity()), |t| {
        let v = op.apply_tuple(ctx, &t);
        primitive(ctx, format!("{}({})", op.name(), show(&t)), &v)
    })
}

/// `P_{1,1}` with a braided commutator of two generators in slot `slot`.
fn substituted_associator(ctx: &SabininContext, slot: usize) -> Outcome {
    let p11 = MultilinearOp::P(1, 1);
    first_failure(evaluation_tuples(ctx.dim(), 4), |t| {
        let gens: Vec<FreeElement> = t.iter().map(|g| FreeElement::basis(*g)).collect();
        let comm = ctx.commutator(&gens[slot], &gens[slot + 1]);
        let mut args: Vec<FreeElement> = gens[..slot].to_vec();
        args.push(comm);
        args.extend_from_slice(&gens[slot + 2..]);
        let v = ctx.evaluate(&p11, &args).expect("arity three");
        primitive(
            ctx,
            format!(
                "P(1,1) with [{}, {}] in slot {}",
                t[slot],
                t[slot + 1],
                slot + 1
            ),
            &v,
        )
    })
}

/// Primitivity of the commutator and of `P_{m,n}` for `m + n ≤ max_total`,
/// of `P_{1,1}` with a commutator substituted in each slot, and the control
/// that the plain product is not primitive.
pub fn verify_primitive_operations(ctx: &SabininContext, max_total: usize) -> Report {
    let mut report = Report::new();
    report.record(
        "primitive commutator",
        verify_primitivity(ctx, &MultilinearOp::Commutator),
    );
    for total in 2..=max_total {
        for m in 1..total {
            let op = MultilinearOp::P(m, total - m);
            report.record(format!("primitive {op}"), verify_primitivity(ctx, &op));
        }
    }
    for slot in 0..3 {
        report.record(
            format!("primitive P(1,1) with commutator in slot {}", slot + 1),
            substituted_associator(ctx, slot),
        );
    }
    let product = FnOperation {
        name: "product".into(),
        arity: 2,
        f: |_: &SabininContext, t: &[Tree]| FreeElement::basis(t[0].product(&t[1])),
    };
    let control = match verify_primitivity(ctx, &product) {
        Ok(()) => Err("the product of two generators came out primitive".to_string()),
        Err(_) => Ok(()),
    };
    report.record("product is not primitive", control);
    report
}

/// `(M⊗id)τ* = τ*_m ... τ*_1 (id⊗M)` and `(id⊗M)τ* = τ*_1 ... τ*_m (M⊗id)`
/// on generator tuples.
pub fn verify_braided_operation(ctx: &SabininContext, op: &dyn Operation) -> Outcome {
    let m = op.arity();
    let alg = ctx.hopf().algebra();
    let to_front: Vec<u8> = (1..=m as u8).rev().collect();
    let to_back: Vec<u8> = (1..=m as u8).collect();
    first_failure(evaluation_tuples(ctx.dim(), m + 1), |t| {
        let value = op.apply_tuple(ctx, &t[..m]);
        let lhs = alg.tau_star_elements(&value, &FreeElement::basis(t[m]));
        let rhs = ctx.apply_in_slots(op, 1, &alg.apply_letters(&to_front, &t));
        if lhs != rhs {
            return Err(format!(
                "(M⊗id)τ* for {} on ({}): {} vs {}",
                op.name(),
                show(&t),
                render_tensor(&lhs),
                render_tensor(&rhs)
            ));
        }
        let value = op.apply_tuple(ctx, &t[1..]);
        let lhs = alg.tau_star_elements(&FreeElement::basis(t[0]), &value);
        let rhs = ctx.apply_in_slots(op, 0, &alg.apply_letters(&to_back, &t));
        if lhs != rhs {
            return Err(format!(
                "(id⊗M)τ* for {} on ({}): {} vs {}",
                op.name(),
                show(&t),
                render_tensor(&lhs),
                render_tensor(&rhs)
            ));
        }
        Ok(())
    })
}

/// Which `r` the swap identity is checked for.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SwapRange {
    /// `0 ≤ r ≤ m`: the swapped pair lies among the leading `m + 2` slots.
    #[default]
    Classical,
    /// `1 ≤ r ≤ m + 1`.
    Shifted,
}

/// Which terms of the cyclic identity the cyclic sum is applied to.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum CyclicScope {
    /// The cyclic sum acts on the whole bracketed expression.
    #[default]
    Whole,
    /// The cyclic sum acts on the leading `S_{m+1,2}` only.
    Head,
}

/// The readings used by [`verify_sabinin_identities`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SabininReading {
    pub swap: SwapRange,
    pub cyclic: CyclicScope,
}

impl SwapRange {
    pub fn values(self, m: usize) -> std::ops::RangeInclusive<usize> {
        match self {
            SwapRange::Classical => 0..=m,
            SwapRange::Shifted => 1..=m + 1,
        }
    }
}

fn s_of(ctx: &SabininContext, m: usize, t: &TensorElement) -> FreeElement {
    ctx.apply_tensor(&MultilinearOp::S(m), t)
}

/// `Σ_{k=0}^{r} Σ_{π ∈ Sh_r^k} [π](id^k ⊗ S_{r-k,2} ⊗ id^{N-r-2}) S_{N-r+k-2,2}`
/// on a tensor with `N` slots.
fn nested_sum(ctx: &SabininContext, r: usize, t: &TensorElement) -> FreeElement {
    let alg = ctx.hopf().algebra();
    let mut out = FreeElement::zero();
    for k in 0..=r {
        for pi in shuffles(r, k) {
            let moved = alg.apply_word(bracket(&pi).letters(), t);
            let inner = ctx.apply_in_slots(&MultilinearOp::S(r - k), k, &moved);
            let slots = inner.keys().next().map_or(0, |tp| tp.len());
            if slots >= 2 {
                out.add_assign(&s_of(ctx, slots - 2, &inner));
            }
        }
    }
    out
}

fn basis_tensor(t: &[Tree]) -> TensorElement {
    TensorElement::basis(tuple(t))
}

/// `S_{m,2} + τ_{m+1}S_{m,2} = 0`.
pub fn antisymmetry(ctx: &SabininContext, m: usize) -> Outcome {
    let alg = ctx.hopf().algebra();
    first_failure(evaluation_tuples(ctx.dim(), m + 2), |t| {
        let u = basis_tensor(&t);
        let mut v = s_of(ctx, m, &u);
        v.add_assign(&s_of(ctx, m, &alg.apply_word(&[m as u8 + 1], &u)));
        nonzero(
            format!("S({m},2) + τ{}S({m},2) on ({})", m + 1, show(&t)),
            &v,
        )
    })
}

/// `S_{m+2,2} - τ_{r+1}S_{m+2,2} + Σ_k Σ_π [π](id^k ⊗ S_{r-k,2} ⊗ id)S_{m-r+k+1,2} = 0`.
pub fn swap_identity(ctx: &SabininContext, m: usize, r: usize) -> Outcome {
    let alg = ctx.hopf().algebra();
    first_failure(evaluation_tuples(ctx.dim(), m + 4), |t| {
        let u = basis_tensor(&t);
        let mut v = s_of(ctx, m + 2, &u);
        let swapped = alg.apply_word(&[r as u8 + 1], &u);
        v.add_scaled(&-one(), &s_of(ctx, m + 2, &swapped));
        v.add_assign(&nested_sum(ctx, r, &u));
        nonzero(format!("swap identity m={m} r={r} on ({})", show(&t)), &v)
    })
}

/// `(1 + τ_{m+1}τ_{m+2} + τ_{m+2}τ_{m+1})` applied to
/// `S_{m+1,2} + Σ_k Σ_π [π](id^k ⊗ S_{m-k,2} ⊗ id)S_{k,2}`, or to the first
/// term only under [`CyclicScope::Head`].
pub fn cyclic_identity(ctx: &SabininContext, m: usize, scope: CyclicScope) -> Outcome {
    let alg = ctx.hopf().algebra();
    let a = m as u8 + 1;
    let rotations: [&[u8]; 3] = [&[], &[a, a + 1], &[a + 1, a]];
    first_failure(evaluation_tuples(ctx.dim(), m + 3), |t| {
        let u = basis_tensor(&t);
        let mut v = FreeElement::zero();
        for (i, rot) in rotations.iter().enumerate() {
            let w = alg.apply_word(rot, &u);
            v.add_assign(&s_of(ctx, m + 1, &w));
            if i == 0 || scope == CyclicScope::Whole {
                v.add_assign(&nested_sum(ctx, m, &w));
            }
        }
        nonzero(format!("cyclic identity m={m} on ({})", show(&t)), &v)
    })
}

/// `Φ_{m,n} - τ_rΦ_{m,n} = 0`.
pub fn phi_symmetry(ctx: &SabininContext, m: usize, n: usize, r: usize) -> Outcome {
    let alg = ctx.hopf().algebra();
    let op = MultilinearOp::Phi(m, n);
    first_failure(evaluation_tuples(ctx.dim(), m + n), |t| {
        let u = basis_tensor(&t);
        let mut v = ctx.apply_tensor(&op, &u);
        v.add_scaled(
            &-one(),
            &ctx.apply_tensor(&op, &alg.apply_word(&[r as u8], &u)),
        );
        nonzero(format!("Φ({m},{n}) - τ{r}Φ({m},{n}) on ({})", show(&t)), &v)
    })
}

/// Antisymmetry, swap and cyclic identities of `S` for `m ≤ m_max`, the
/// symmetry of `Φ_{m,n}` for `m + n ≤ m_max + 2`, and the braided-operation
/// property of every operation involved.
pub fn verify_sabinin_identities(
    ctx: &SabininContext,
    m_max: usize,
    reading: SabininReading,
) -> Report {
    let mut report = Report::new();
    for m in 0..=m_max {
        report.record(format!("antisymmetry m={m}"), antisymmetry(ctx, m));
    }
    for m in 0..=m_max {
        for r in reading.swap.values(m) {
            report.record(format!("swap m={m} r={r}"), swap_identity(ctx, m, r));
        }
    }
    for m in 0..=m_max {
        report.record(
            format!("cyclic m={m}"),
            cyclic_identity(ctx, m, reading.cyclic),
        );
    }
    let phis: Vec<(usize, usize)> = (1..=m_max)
        .flat_map(|m| (2..=m_max + 2 - m).map(move |n| (m, n)))
        .collect();
    for &(m, n) in &phis {
        for r in (1..m + n).filter(|&r| r != m) {
            report.record(
                format!("phi-symmetry m={m} n={n} r={r}"),
                phi_symmetry(ctx, m, n, r),
            );
        }
    }
    let mut ops: Vec<MultilinearOp> = (0..=m_max).map(MultilinearOp::S).collect();
    ops.extend(phis.iter().map(|&(m, n)| MultilinearOp::Phi(m, n)));
    for op in ops {
        report.record(format!("braided {op}"), verify_braided_operation(ctx, &op));
    }
    report
}
