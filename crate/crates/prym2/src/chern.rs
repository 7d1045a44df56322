//! Chern-root calculus for bundles built out of a rank-2 bundle.
//!
//! Roots live in the formal variables `r1`, `r2` of the working ring. The
//! convention is fixed once: `r1`, `r2` are the roots of the standard
//! rank-2 bundle, so `r1 + r2` reduces to `b1` and `r1*r2` to `b2`, and the
//! dual bundle has roots `-r1`, `-r2`. The same expressions reduce to the
//! abstract rank-2 classes `c1`, `c2` when a computation is carried out for
//! an unspecified bundle.

use thiserror::Error;

use crate::poly::{work_ring, IntPoly, PolyError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChernError {
    #[error("expression is not symmetric in r1, r2; antisymmetric remainder: {0}")]
    NotSymmetric(String),
    #[error("twisting class must be homogeneous of degree 1")]
    BadTwist,
    #[error("Chern component {index} out of range for rank {rank}")]
    ComponentOutOfRange { index: usize, rank: usize },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Reduction target for symmetric functions of the roots.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChernBasis {
    /// `r1 + r2 -> b1`, `r1*r2 -> b2`.
    BetaGamma,
    /// `r1 + r2 -> c1`, `r1*r2 -> c2`.
    AbstractC,
}

impl ChernBasis {
    fn targets(self) -> (IntPoly, IntPoly) {
        let ring = work_ring();
        match self {
            ChernBasis::BetaGamma => (IntPoly::var(ring, "b1"), IntPoly::var(ring, "b2")),
            ChernBasis::AbstractC => (IntPoly::var(ring, "c1"), IntPoly::var(ring, "c2")),
        }
    }
}

/// A bundle described by its Chern roots (rank = number of roots). Roots
/// are degree-1 polynomials in `r1`, `r2` and line classes.
#[derive(Debug, Clone)]
pub struct BundleSpec {
    pub roots: Vec<IntPoly>,
    pub label: String,
}

impl BundleSpec {
    pub fn rank(&self) -> usize {
        self.roots.len()
    }
}

/// Roots of the `n`-th symmetric power of the rank-2 bundle:
/// `i*r1 + (n-i)*r2` for `i = 0..=n`, negated for the dual.
pub fn sym_roots(n: usize, dual: bool) -> BundleSpec {
    assert!(n >= 1);
    let ring = work_ring();
    let r1 = IntPoly::var(ring, "r1");
    let r2 = IntPoly::var(ring, "r2");
    let roots = (0..=n)
        .map(|i| {
            let root = &r1.scaled_i64(i as i64) + &r2.scaled_i64((n - i) as i64);
            if dual {
                -&root
            } else {
                root
            }
        })
        .collect();
    BundleSpec {
        roots,
        label: format!("Sym{n}(V{})", if dual { "dual" } else { "" }),
    }
}

/// Tensor with a line bundle of first Chern class `lineclass`: every root
/// is shifted by it.
pub fn twist(spec: &BundleSpec, lineclass: &IntPoly) -> Result<BundleSpec, ChernError> {
    if lineclass.is_zero() || !lineclass.is_homogeneous() || lineclass.degree() != Some(1) {
        return Err(ChernError::BadTwist);
    }
    Ok(BundleSpec {
        roots: spec.roots.iter().map(|r| r + lineclass).collect(),
        label: format!("{} (x) O({})", spec.label, lineclass),
    })
}

/// Rewrite a polynomial symmetric in `r1`, `r2` in terms of the elementary
/// symmetric functions, substituting the basis targets for them. Fails,
/// returning the antisymmetric remainder, when the input is not symmetric.
pub fn symmetric_reduce(p: &IntPoly, basis: ChernBasis) -> Result<IntPoly, ChernError> {
    let ring = work_ring();
    let swapped = p.swap_vars("r1", "r2")?;
    if swapped != *p {
        return Err(ChernError::NotSymmetric((p - &swapped).to_string()));
    }
    let (e1_target, e2_target) = basis.targets();
    let i1 = ring.index_of("r1")?;
    let i2 = ring.index_of("r2")?;
    let r1 = IntPoly::var(ring, "r1");
    let r2 = IntPoly::var(ring, "r2");
    let e1_expansion = &r1 + &r2;
    let e2_expansion = &r1 * &r2;

    let mut rest = p.clone();
    let mut out = IntPoly::zero(ring);
    loop {
        // leading term in (r1-degree + r2-degree, r1-degree) order
        let lead = rest
            .terms()
            .filter(|(m, _)| m[i1] > 0 || m[i2] > 0)
            .max_by_key(|(m, _)| (m[i1] + m[i2], m[i1]))
            .map(|(m, c)| (m.clone(), c.clone()));
        let Some((mono, coeff)) = lead else {
            out = &out + &rest;
            return Ok(out);
        };
        let (i, j) = (mono[i1], mono[i2]);
        debug_assert!(i >= j, "leading term of a symmetric polynomial");
        let mut base = mono.clone();
        base[i1] = 0;
        base[i2] = 0;
        let base_poly = IntPoly::from_terms(ring, [(base, coeff)]);
        let expansion = &e1_expansion.pow(u32::from(i - j)) * &e2_expansion.pow(u32::from(j));
        let replacement = &e1_target.pow(u32::from(i - j)) * &e2_target.pow(u32::from(j));
        rest = &rest - &(&base_poly * &expansion);
        out = &out + &(&base_poly * &replacement);
    }
}

/// Total Chern class `prod(1 + root)`, expanded and symmetric-reduced.
pub fn total_chern(spec: &BundleSpec, basis: ChernBasis) -> Result<IntPoly, ChernError> {
    let ring = work_ring();
    let one = IntPoly::one(ring);
    let mut prod = one.clone();
    for root in &spec.roots {
        prod = &prod * &(&one + root);
    }
    symmetric_reduce(&prod, basis)
}

/// The degree-`i` piece of the total Chern class.
pub fn chern_component(
    spec: &BundleSpec,
    i: usize,
    basis: ChernBasis,
) -> Result<IntPoly, ChernError> {
    if i > spec.rank() {
        return Err(ChernError::ComponentOutOfRange {
            index: i,
            rank: spec.rank(),
        });
    }
    Ok(total_chern(spec, basis)?.component(i as u32))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::poly;
    use num_bigint::BigInt;

    #[test]
    fn dual_standard_roots() {
        let spec = sym_roots(1, true);
        let ring = work_ring();
        assert_eq!(spec.roots.len(), 2);
        assert!(spec.roots.contains(&poly(ring, &[(-1, &[("r1", 1)])])));
        assert!(spec.roots.contains(&poly(ring, &[(-1, &[("r2", 1)])])));
    }

    #[test]
    fn sym2_dual_roots() {
        let spec = sym_roots(2, true);
        let ring = work_ring();
        let expected = [
            poly(ring, &[(-2, &[("r2", 1)])]),
            poly(ring, &[(-1, &[("r1", 1)]), (-1, &[("r2", 1)])]),
            poly(ring, &[(-2, &[("r1", 1)])]),
        ];
        assert_eq!(spec.roots, expected);
    }

    #[test]
    fn sym4_dual_has_five_roots() {
        let spec = sym_roots(4, true);
        assert_eq!(spec.rank(), 5);
    }

    #[test]
    fn twist_shifts_every_root() {
        let ring = work_ring();
        let trivial = BundleSpec {
            roots: vec![IntPoly::zero(ring)],
            label: "O".into(),
        };
        let g = IntPoly::var(ring, "g");
        let twisted = twist(&trivial, &g).unwrap();
        assert_eq!(twisted.roots, vec![g]);

        let bad = IntPoly::var(ring, "b2");
        assert!(matches!(twist(&trivial, &bad), Err(ChernError::BadTwist)));
    }

    #[test]
    fn total_chern_of_sym2_abstract() {
        // c(Sym^2 E) = 1 + 3c1 + 2c1^2 + 4c2 + 4c1c2
        let spec = sym_roots(2, false);
        let tc = total_chern(&spec, ChernBasis::AbstractC).unwrap();
        let ring = work_ring();
        let expected = poly(
            ring,
            &[
                (1, &[]),
                (3, &[("c1", 1)]),
                (2, &[("c1", 2)]),
                (4, &[("c2", 1)]),
                (4, &[("c1", 1), ("c2", 1)]),
            ],
        );
        assert_eq!(tc, expected);
    }

    #[test]
    fn whitney_rank_two() {
        // c(E) = 1 + c1 + c2 straight from the roots
        let spec = sym_roots(1, false);
        let tc = total_chern(&spec, ChernBasis::AbstractC).unwrap();
        let ring = work_ring();
        let expected = poly(ring, &[(1, &[]), (1, &[("c1", 1)]), (1, &[("c2", 1)])]);
        assert_eq!(tc, expected);
    }

    #[test]
    fn c5_of_sym4_dual() {
        // -(4r2)(r1+3r2)(2r1+2r2)(3r1+r2)(4r1) = -96 b1^3 b2 - 128 b1 b2^2
        let spec = sym_roots(4, true);
        let c5 = chern_component(&spec, 5, ChernBasis::BetaGamma).unwrap();
        let ring = work_ring();
        let expected = poly(
            ring,
            &[
                (-96, &[("b1", 3), ("b2", 1)]),
                (-128, &[("b1", 1), ("b2", 2)]),
            ],
        );
        assert_eq!(c5, expected);
    }

    #[test]
    fn c5_is_divisible_by_two_b1() {
        let spec = sym_roots(4, true);
        let c5 = chern_component(&spec, 5, ChernBasis::BetaGamma).unwrap();
        let ring = work_ring();
        let mut mono = vec![0u16; ring.len()];
        mono[ring.index_of("b1").unwrap()] = 1;
        assert!(c5.div_exact_term(&BigInt::from(2), &mono).is_some());
    }

    #[test]
    fn c4_of_sym4_dual_has_even_coefficients() {
        let spec = sym_roots(4, true);
        let c4 = chern_component(&spec, 4, ChernBasis::BetaGamma).unwrap();
        let ring = work_ring();
        let expected = poly(
            ring,
            &[
                (24, &[("b1", 4)]),
                (208, &[("b1", 2), ("b2", 1)]),
                (64, &[("b2", 2)]),
            ],
        );
        assert_eq!(c4, expected);
        let unit = vec![0u16; ring.len()];
        assert!(c4.div_exact_term(&BigInt::from(2), &unit).is_some());
    }

    #[test]
    fn c0_is_one() {
        let spec = sym_roots(3, true);
        assert_eq!(
            chern_component(&spec, 0, ChernBasis::BetaGamma).unwrap(),
            IntPoly::one(work_ring())
        );
        assert!(matches!(
            chern_component(&spec, 5, ChernBasis::BetaGamma),
            Err(ChernError::ComponentOutOfRange { .. })
        ));
    }

    #[test]
    fn duality_alternates_signs() {
        let plain = sym_roots(3, false);
        let dual = sym_roots(3, true);
        for i in 0..=4 {
            let a = chern_component(&plain, i, ChernBasis::BetaGamma).unwrap();
            let b = chern_component(&dual, i, ChernBasis::BetaGamma).unwrap();
            let sign = if i % 2 == 0 { 1 } else { -1 };
            assert_eq!(a.scaled_i64(sign), b, "component {i}");
        }
    }

    #[test]
    fn non_symmetric_rejected_with_remainder() {
        let ring = work_ring();
        let p = IntPoly::var(ring, "r1");
        match symmetric_reduce(&p, ChernBasis::BetaGamma) {
            Err(ChernError::NotSymmetric(rem)) => assert_eq!(rem, "r1 - r2"),
            other => panic!("expected NotSymmetric, got {other:?}"),
        }
    }

    #[test]
    fn reduction_roundtrip() {
        // reduce, then substitute the elementary symmetric functions back
        let ring = work_ring();
        let r1 = IntPoly::var(ring, "r1");
        let r2 = IntPoly::var(ring, "r2");
        let sym = &(&r1.pow(3) + &r2.pow(3)) + &(&r1 * &r2).scaled_i64(5);
        let reduced = symmetric_reduce(&sym, ChernBasis::BetaGamma).unwrap();
        let back = reduced
            .substitute("b1", &(&r1 + &r2))
            .unwrap()
            .substitute("b2", &(&r1 * &r2))
            .unwrap();
        assert_eq!(back, sym);
    }

    #[test]
    fn twist_changes_c1_by_rank_times_class() {
        let ring = work_ring();
        let g = IntPoly::var(ring, "g");
        for n in 1..=4 {
            let spec = sym_roots(n, true);
            let twisted = twist(&spec, &g).unwrap();
            let c1 = chern_component(&spec, 1, ChernBasis::BetaGamma).unwrap();
            let c1t = chern_component(&twisted, 1, ChernBasis::BetaGamma).unwrap();
            let rank = spec.rank() as i64;
            assert_eq!(c1t, &c1 + &g.scaled_i64(rank));
        }
    }
}
