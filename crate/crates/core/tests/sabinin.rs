mod common;

use common::{classical_p, classical_phi, classical_s, involutive_braidings, x};
use nahopf::foundation::ratio;
use nahopf::free_algebra::{parse_element, FreeElement, Tree};
use nahopf::sabinin::{
    cyclic_identity, swap_identity, verify_primitive_operations, verify_sabinin_identities,
    CyclicScope, SabininReading, SwapRange,
};
use nahopf::{Braiding, Error, MultilinearOp, SabininContext, Scalar};
use proptest::prelude::*;

fn generators(n: usize) -> Vec<Tree> {
    (1..=n as u8).map(x).collect()
}

#[test]
fn p_under_the_flip_is_classical() {
    let ctx = SabininContext::new(Braiding::flip(5)).unwrap();
    for total in 2..=4 {
        for m in 1..total {
            let n = total - m;
            let args = generators(m + n + 1);
            let lib = ctx.p(m, n, &args);
            let oracle = classical_p(&args[..m], &args[m..m + n], args[m + n]);
            assert_eq!(*lib, oracle, "P({m},{n})");
        }
    }
}

#[test]
fn s_and_phi_under_the_flip_are_classical() {
    let ctx = SabininContext::new(Braiding::flip(4)).unwrap();
    for m in 0..=2 {
        let args = generators(m + 2);
        assert_eq!(ctx.s(m, &args), classical_s(&args), "S({m},2)");
    }
    for (m, n) in [(1, 2), (1, 3), (2, 2)] {
        let args = generators(m + n);
        assert_eq!(
            ctx.phi(m, n, &args),
            classical_phi(m, &args),
            "Phi({m},{n})"
        );
    }
}

#[test]
fn p11_on_a_repeated_generator() {
    let ctx = SabininContext::new(Braiding::flip(1)).unwrap();
    let v = ctx.p(1, 1, &[x(1), x(1), x(1)]);
    assert_eq!(*v, parse_element("(x1 x1) x1 - x1 (x1 x1)", 1).unwrap());
}

#[test]
fn operations_are_primitive_for_involutive_braidings() {
    for (name, b) in involutive_braidings() {
        let ctx = SabininContext::new(b).unwrap();
        let report = verify_primitive_operations(&ctx, 3);
        assert!(report.all_pass(), "{name}\n{}", report.to_text());
    }
}

#[test]
fn identities_hold_for_involutive_braidings() {
    for (name, b) in involutive_braidings() {
        let ctx = SabininContext::new(b).unwrap();
        let report = verify_sabinin_identities(&ctx, 1, SabininReading::default());
        assert!(report.all_pass(), "{name}\n{}", report.to_text());
    }
}

#[test]
fn shifted_swap_range_fails_at_its_top() {
    let ctx = SabininContext::new(Braiding::flip(2)).unwrap();
    let reading = SabininReading {
        swap: SwapRange::Shifted,
        cyclic: CyclicScope::Whole,
    };
    let report = verify_sabinin_identities(&ctx, 1, reading);
    for m in 0..=1 {
        assert!(report
            .get(&format!("swap m={m} r={m}"))
            .is_none_or(|c| c.pass));
        assert!(!report.get(&format!("swap m={m} r={}", m + 1)).unwrap().pass);
    }
    assert!(swap_identity(&ctx, 0, 0).is_ok());
    assert!(swap_identity(&ctx, 0, 1).is_err());
}

#[test]
fn cyclic_sum_on_the_head_only_fails() {
    let ctx = SabininContext::new(common::diagonal_involutive()).unwrap();
    assert!(cyclic_identity(&ctx, 0, CyclicScope::Whole).is_ok());
    assert!(cyclic_identity(&ctx, 0, CyclicScope::Head).is_err());
}

#[test]
fn non_involutive_braiding_is_rejected() {
    assert!(matches!(
        SabininContext::new(common::non_involutive()),
        Err(Error::NotInvolutive)
    ));
}

#[test]
fn invalid_operations_are_rejected() {
    assert!(MultilinearOp::P(0, 1).checked().is_err());
    assert!(MultilinearOp::Phi(1, 1).checked().is_err());
    assert!(MultilinearOp::Phi(1, 2).checked().is_ok());
    let ctx = SabininContext::new(Braiding::flip(2)).unwrap();
    let one = FreeElement::basis(x(1));
    let err = ctx.evaluate(&MultilinearOp::P(1, 1), &[one.clone(), one]);
    assert!(matches!(err, Err(Error::Arity { .. })));
}

#[test]
fn commutator_under_super_flip() {
    // x2 is odd, so [x2, x2] = 2 x2 x2.
    let ctx = SabininContext::new(common::super_flip()).unwrap();
    let g = FreeElement::basis(x(2));
    assert_eq!(
        ctx.commutator(&g, &g),
        parse_element("2*(x2 x2)", 2).unwrap()
    );
}

fn coefficient() -> impl Strategy<Value = Scalar> {
    (-3i64..=3, 1i64..=2).prop_map(|(n, d)| ratio(n, d))
}

fn linear() -> impl Strategy<Value = FreeElement> {
    (coefficient(), coefficient()).prop_map(|(a, b)| {
        let mut v = FreeElement::zero();
        v.add_term(x(1), a);
        v.add_term(x(2), b);
        v
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn p11_is_multilinear(u in linear(), v in linear(), w in linear(), z in linear(), k in coefficient()) {
        let ctx = SabininContext::new(common::diagonal_involutive()).unwrap();
        let op = MultilinearOp::P(1, 1);
        let mut sum = u.clone();
        sum.add_scaled(&k, &z);
        let lhs = ctx.evaluate(&op, &[sum, v.clone(), w.clone()]).unwrap();
        let mut rhs = ctx.evaluate(&op, &[u, v.clone(), w.clone()]).unwrap();
        rhs.add_scaled(&k, &ctx.evaluate(&op, &[z, v, w]).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn s1_is_primitive_on_linear_inputs(u in linear(), v in linear(), w in linear()) {
        let ctx = SabininContext::new(common::super_flip()).unwrap();
        let value = ctx.evaluate(&MultilinearOp::S(1), &[u, v, w]).unwrap();
        prop_assert!(ctx.hopf().is_primitive(&value));
    }
}
