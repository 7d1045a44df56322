//! Property tests for the polynomial core and the ideal machinery.

use num_bigint::BigInt;
use proptest::prelude::*;

use prym2::chern::{chern_component, sym_roots, ChernBasis};
use prym2::ideal::{bg_relations, ideal_equal, ideal_member};
use prym2::poly::{base_ring, work_ring, IntPoly, Monomial, RingRef};
use prym2::proj::{proj_relation_in, reduce_power, SClassVec};
use prym2::push::mult_push;

fn arb_monomial(ring: &'static RingRef, max_exp: u16) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max_exp, ring.len())
}

fn arb_poly(ring: &'static RingRef, max_exp: u16) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec((arb_monomial(ring, max_exp), -9i64..=9), 0..5).prop_map(|terms| {
        IntPoly::from_terms(
            ring,
            terms
                .into_iter()
                .map(|(m, c)| (m, BigInt::from(c)))
                .collect::<Vec<_>>(),
        )
    })
}

/// A random nonzero homogeneous polynomial of small degree, built on the
/// monomial basis of its graded piece.
fn arb_homogeneous(ring: &'static RingRef) -> impl Strategy<Value = IntPoly> {
    (1u32..=4, prop::collection::vec(-9i64..=9, 32)).prop_map(|(d, coeffs)| {
        let monos = ring.monomials_of_degree(d);
        let mut terms: Vec<(Monomial, BigInt)> = monos
            .iter()
            .zip(&coeffs)
            .map(|(m, c)| (m.clone(), BigInt::from(*c)))
            .collect();
        if terms.iter().all(|(_, c)| c == &BigInt::from(0)) {
            terms[0].1 = BigInt::from(1);
        }
        IntPoly::from_terms(ring, terms)
    })
}

proptest! {
    #[test]
    fn add_commutes(a in arb_poly(base_ring(), 3), b in arb_poly(base_ring(), 3)) {
        prop_assert_eq!(&a + &b, &b + &a);
    }

    #[test]
    fn mul_commutes(a in arb_poly(base_ring(), 3), b in arb_poly(base_ring(), 3)) {
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn mul_associates(
        a in arb_poly(base_ring(), 2),
        b in arb_poly(base_ring(), 2),
        c in arb_poly(base_ring(), 2),
    ) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn mul_distributes(
        a in arb_poly(base_ring(), 2),
        b in arb_poly(base_ring(), 2),
        c in arb_poly(base_ring(), 2),
    ) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn sub_is_add_neg(a in arb_poly(base_ring(), 3), b in arb_poly(base_ring(), 3)) {
        prop_assert_eq!(&a - &b, &a + &(-&b));
    }

    #[test]
    fn homogeneous_product_degrees_add(
        a in arb_homogeneous(base_ring()),
        b in arb_homogeneous(base_ring()),
    ) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let prod = &a * &b;
        prop_assert!(prod.is_homogeneous());
        prop_assert_eq!(
            prod.degree(),
            Some(a.degree().unwrap() + b.degree().unwrap())
        );
    }

    #[test]
    fn evaluation_is_a_ring_map(
        a in arb_poly(base_ring(), 2),
        b in arb_poly(base_ring(), 2),
        vals in prop::collection::vec(-5i64..=5, 3),
    ) {
        let vals: Vec<BigInt> = vals.into_iter().map(BigInt::from).collect();
        let lhs = (&a * &b).eval(&vals);
        let rhs = a.eval(&vals) * b.eval(&vals);
        prop_assert_eq!(lhs, rhs);
        let lhs = (&a + &b).eval(&vals);
        let rhs = a.eval(&vals) + b.eval(&vals);
        prop_assert_eq!(lhs, rhs);
    }

    /// Random combinations of the generators always pass membership, and
    /// the certificate replays to the element.
    #[test]
    fn closure_soundness(
        q0 in arb_poly(base_ring(), 2),
        q1 in arb_poly(base_ring(), 2),
        d in 1u32..=5,
    ) {
        let gens = bg_relations();
        let combo = &(&q0 * &gens[0]) + &(&q1 * &gens[1]);
        let piece = combo.component(d);
        prop_assume!(!piece.is_zero());
        let cert = ideal_member(&piece, &gens).unwrap();
        prop_assert!(cert.is_some());
        prop_assert_eq!(cert.unwrap().replay(&gens, base_ring()), piece);
    }

    /// Lists generate the same ideal as themselves, in any order, and
    /// appending a redundant element changes nothing.
    #[test]
    fn ideal_equal_reflexive_symmetric_redundant(
        extra in arb_poly(base_ring(), 1),
        d in 1u32..=3,
    ) {
        let gens = bg_relations();
        prop_assert!(ideal_equal(&gens, &gens).unwrap().holds());

        let swapped: Vec<IntPoly> = gens.iter().rev().cloned().collect();
        prop_assert!(ideal_equal(&gens, &swapped).unwrap().holds());

        let redundant = (&extra.component(d) * &gens[0]).component(d + 1);
        let mut extended = gens.clone();
        extended.push(redundant);
        prop_assert!(ideal_equal(&gens, &extended).unwrap().holds());
    }

    /// Bilinearity of the multiplication pushforward over base classes.
    #[test]
    fn mult_push_is_bilinear(
        c in arb_homogeneous(work_ring()),
        alpha in 0usize..=2,
        beta in 0usize..=1,
    ) {
        let u = SClassVec::basis(2, alpha).unwrap();
        let v = SClassVec::basis(1, beta).unwrap();
        let left = mult_push(&u.scale(&c), &v).unwrap();
        let right = mult_push(&u, &v.scale(&c)).unwrap();
        let direct = mult_push(&u, &v).unwrap().scale(&c);
        prop_assert_eq!(&left, &direct);
        prop_assert_eq!(&right, &direct);
    }

    /// Reducing in the two hyperplane variables commutes.
    #[test]
    fn biproj_reduction_confluence(e1 in 0u32..=5, e2 in 0u32..=5, pick in 0usize..=2) {
        let spec = sym_roots(2, false);
        let ring = work_ring();
        let rel1 = proj_relation_in(&spec, ChernBasis::AbstractC, "h1").unwrap();
        let rel2 = proj_relation_in(&spec, ChernBasis::AbstractC, "h2").unwrap();
        let extra = match pick {
            0 => IntPoly::one(ring),
            1 => IntPoly::var(ring, "c1"),
            _ => IntPoly::var(ring, "c2"),
        };
        let p = &(&IntPoly::var(ring, "h1").pow(e1) * &IntPoly::var(ring, "h2").pow(e2)) * &extra;
        let a = reduce_power(&reduce_power(&p, "h1", &rel1).unwrap(), "h2", &rel2).unwrap();
        let b = reduce_power(&reduce_power(&p, "h2", &rel2).unwrap(), "h1", &rel1).unwrap();
        prop_assert_eq!(a, b);
    }

    /// Chern components of dual bundles alternate in sign.
    #[test]
    fn duality_sign_rule(n in 1usize..=4, i in 0usize..=5) {
        let plain = sym_roots(n, false);
        let dual = sym_roots(n, true);
        prop_assume!(i <= plain.rank());
        let a = chern_component(&plain, i, ChernBasis::BetaGamma).unwrap();
        let b = chern_component(&dual, i, ChernBasis::BetaGamma).unwrap();
        let sign = if i % 2 == 0 { 1 } else { -1 };
        prop_assert_eq!(a.scaled_i64(sign), b);
    }

    /// Independent numeric oracle for the whole Chern-root path: evaluate
    /// the unreduced product of `(1 + root)` at integer root values and
    /// compare with the reduced total class evaluated at the matching
    /// elementary symmetric values.
    #[test]
    fn total_chern_agrees_with_numeric_evaluation(
        n in 1usize..=4,
        dual in proptest::bool::ANY,
        r1v in -7i64..=7,
        r2v in -7i64..=7,
    ) {
        let ring = work_ring();
        let spec = sym_roots(n, dual);
        let reduced = prym2::chern::total_chern(&spec, ChernBasis::BetaGamma).unwrap();

        // direct product over the roots, evaluated at r1 = r1v, r2 = r2v
        let mut root_vals = vec![BigInt::from(0); ring.len()];
        root_vals[ring.index_of("r1").unwrap()] = BigInt::from(r1v);
        root_vals[ring.index_of("r2").unwrap()] = BigInt::from(r2v);
        let mut direct = BigInt::from(1);
        for root in &spec.roots {
            direct *= BigInt::from(1) + root.eval(&root_vals);
        }

        // reduced class evaluated at b1 = r1 + r2, b2 = r1 * r2
        let mut base_vals = vec![BigInt::from(0); ring.len()];
        base_vals[ring.index_of("b1").unwrap()] = BigInt::from(r1v + r2v);
        base_vals[ring.index_of("b2").unwrap()] = BigInt::from(r1v * r2v);
        prop_assert_eq!(reduced.eval(&base_vals), direct);
    }
}

/// Positive memberships over the answer ideal replay exactly; negative
/// ones stay negative when the query is scaled by non-units.
#[test]
fn membership_certificates_replay() {
    let r = base_ring();
    let target = prym2::pipeline::target_ideal_gens();
    let b1 = IntPoly::var(r, "b1");
    let g = IntPoly::var(r, "g");
    let candidates = vec![
        b1.scaled_i64(2),
        g.scaled_i64(6),
        (&b1 * &g).scaled_i64(2),
        (&b1 + &g).pow(2),
        (&b1 + &g).pow(3),
    ];
    for p in candidates {
        let cert = ideal_member(&p, &target).unwrap().expect("member");
        assert_eq!(cert.replay(&target, r), p);
    }
    let b2 = IntPoly::var(r, "b2");
    for k in [1i64, 2, 3, 5, 7] {
        assert!(ideal_member(&b2.scaled_i64(k), &target).unwrap().is_none());
    }
}
