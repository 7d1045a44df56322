//! Pushforwards along multiplication and squaring maps, and the library
//! of fundamental classes of the finite coordinate-monomial subsets.
//!
//! The multiplication pushforward acts on the `s` basis by
//! `(s_a^alpha, s_b^beta) -> binom(a+b-alpha-beta, a-alpha) * s_(a+b)^(alpha+beta)`,
//! extended bilinearly over base classes. Squaring maps factor through the
//! diagonal, so their pushforward is assembled from the diagonal class.

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::chern::{sym_roots, total_chern, ChernBasis, ChernError};
use crate::ideal::{bg_relations, equal_mod, IdealError};
use crate::poly::{poly, work_ring, IntPoly, PolyError};
use crate::proj::{diagonal_push, h_to_s, BiProjClass, ProjError, SClassVec};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PushError {
    #[error("target symmetric power {0} exceeds the modeled range (max 4)")]
    OutsideModeledRange(usize),
    #[error("class lives on Sym^{found}, expected Sym^{expected}")]
    WrongSource { expected: usize, found: usize },
    #[error("derived class {label} disagrees with its reference value at s^{index}: derived {derived}, expected {expected}")]
    SubsetMismatch {
        label: &'static str,
        index: usize,
        derived: String,
        expected: String,
    },
    #[error(transparent)]
    Proj(#[from] ProjError),
    #[error(transparent)]
    Chern(#[from] ChernError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Pushforward along `P(Sym^a) x P(Sym^b) -> P(Sym^(a+b))`.
pub fn mult_push(u: &SClassVec, v: &SClassVec) -> Result<SClassVec, PushError> {
    let (a, b) = (u.r(), v.r());
    if a + b > 4 {
        return Err(PushError::OutsideModeledRange(a + b));
    }
    let mut out = SClassVec::zero(a + b);
    let mut coeffs: Vec<IntPoly> = out.coeffs().to_vec();
    for alpha in 0..=a {
        if u.coeff(alpha).is_zero() {
            continue;
        }
        for beta in 0..=b {
            if v.coeff(beta).is_zero() {
                continue;
            }
            let c = binomial(a + b - alpha - beta, a - alpha);
            let term = (u.coeff(alpha) * v.coeff(beta)).scaled(&c);
            coeffs[alpha + beta] = &coeffs[alpha + beta] + &term;
        }
    }
    out = SClassVec::from_coeffs(a + b, coeffs);
    Ok(out)
}

/// Domain of a squaring map: the projectivized rank-2 bundle itself, or
/// its second symmetric power.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SqSource {
    /// `P(E) -> P(Sym^2 E)`; classes `s_1^j`.
    PLine,
    /// `P(Sym^2 E) -> P(Sym^4 E)`; classes `s_2^j`.
    PSym2,
}

impl SqSource {
    fn source_index(self) -> usize {
        match self {
            SqSource::PLine => 1,
            SqSource::PSym2 => 2,
        }
    }
}

fn convert_biproj(bi: &BiProjClass, src: usize) -> Result<SClassVec, PushError> {
    let ring = work_ring();
    let i1 = ring.index_of("h1")?;
    let i2 = ring.index_of("h2")?;
    let mut out = SClassVec::zero(2 * src);
    for (mono, coeff) in bi.poly.terms() {
        let a = usize::from(mono[i1]);
        let b = usize::from(mono[i2]);
        let mut rest = mono.clone();
        rest[i1] = 0;
        rest[i2] = 0;
        let scalar = IntPoly::from_terms(ring, [(rest, coeff.clone())]);
        let va = h_to_s(src, a)?;
        let vb = h_to_s(src, b)?;
        let pushed = mult_push(&va, &vb)?;
        out = out.add(&pushed.scale(&scalar));
    }
    Ok(out)
}

/// Pushforward along the squaring map, computed as multiplication after
/// the diagonal. Coefficients come out in the abstract `(c1, c2)` basis.
pub fn sq_push(source: SqSource, u: &SClassVec) -> Result<SClassVec, PushError> {
    let src = source.source_index();
    if u.r() != src {
        return Err(PushError::WrongSource {
            expected: src,
            found: u.r(),
        });
    }
    let ring = work_ring();
    let h_idx = ring.index_of("h")?;
    let spec = sym_roots(src, false);
    let u_h = u.to_h_poly(ChernBasis::AbstractC);
    let mut out = SClassVec::zero(2 * src);
    for k in 0..=u_h.max_power(h_idx) {
        let q = u_h.coeff_of_power(h_idx, k);
        if q.is_zero() {
            continue;
        }
        let pushed = convert_biproj(&diagonal_push(&spec, usize::from(k))?, src)?;
        out = out.add(&pushed.scale(&q));
    }
    Ok(out)
}

/// Squaring pushforward of every `s` basis class, in the abstract basis;
/// the closed forms these must match are pinned in the check layer.
pub fn sq_push_basis_table(source: SqSource) -> Result<Vec<SClassVec>, PushError> {
    let src = source.source_index();
    (0..=src)
        .map(|j| sq_push(source, &SClassVec::basis(src, j)?))
        .collect()
}

/// The eight finite subsets of coordinate monomials whose fundamental
/// classes feed the envelope pushforwards.
#[allow(non_camel_case_types)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SubsetLabel {
    X_Y,
    XY,
    X2_Y2,
    X2Y_XY2,
    X3_Y3,
    X2Y2,
    X3Y_XY3,
    X4_Y4,
}

impl SubsetLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            SubsetLabel::X_Y => "{X,Y}",
            SubsetLabel::XY => "{XY}",
            SubsetLabel::X2_Y2 => "{X^2,Y^2}",
            SubsetLabel::X2Y_XY2 => "{X^2Y,XY^2}",
            SubsetLabel::X3_Y3 => "{X^3,Y^3}",
            SubsetLabel::X2Y2 => "{X^2Y^2}",
            SubsetLabel::X3Y_XY3 => "{X^3Y,XY^3}",
            SubsetLabel::X4_Y4 => "{X^4,Y^4}",
        }
    }

    /// Symmetric power of the ambient projective space.
    pub fn space(self) -> usize {
        match self {
            SubsetLabel::X_Y => 1,
            SubsetLabel::XY | SubsetLabel::X2_Y2 => 2,
            SubsetLabel::X2Y_XY2 | SubsetLabel::X3_Y3 => 3,
            SubsetLabel::X2Y2 | SubsetLabel::X3Y_XY3 | SubsetLabel::X4_Y4 => 4,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubsetOrigin {
    /// Taken as given input data.
    Fixture,
    /// Recomputed from the fixture classes and cross-checked.
    Derived,
}

#[derive(Debug, Clone)]
pub struct FiniteSubsetClass {
    pub label: SubsetLabel,
    pub value: SClassVec,
    pub origin: SubsetOrigin,
}

/// `[{X,Y}] = 2 s_1^1 - (b1 + g) s_1^0` on `P(V^dual)`. This one is an
/// input fixture: its derivation lives upstream of this calculus.
///
/// Setting `PRYM2_TEST_CORRUPT_FIXTURE` perturbs the top coefficient; the
/// hook exists so the failure path of the verifier can be driven from
/// outside the process.
pub fn class_x_y() -> FiniteSubsetClass {
    let ring = work_ring();
    let top = if std::env::var_os("PRYM2_TEST_CORRUPT_FIXTURE").is_some() {
        3
    } else {
        2
    };
    let coeffs = vec![
        poly(ring, &[(-1, &[("b1", 1)]), (-1, &[("g", 1)])]),
        IntPoly::constant(ring, top),
    ];
    FiniteSubsetClass {
        label: SubsetLabel::X_Y,
        value: SClassVec::from_coeffs(1, coeffs),
        origin: SubsetOrigin::Fixture,
    }
}

/// The canonical table value `[{XY}] = s_2^2 + (g - b1) s_2^1 + 2 b2 s_2^0`.
pub fn class_xy() -> FiniteSubsetClass {
    let ring = work_ring();
    let coeffs = vec![
        poly(ring, &[(2, &[("b2", 1)])]),
        poly(ring, &[(1, &[("g", 1)]), (-1, &[("b1", 1)])]),
        IntPoly::one(ring),
    ];
    FiniteSubsetClass {
        label: SubsetLabel::XY,
        value: SClassVec::from_coeffs(2, coeffs),
        origin: SubsetOrigin::Derived,
    }
}

/// Everything the first-principles derivation of `[{XY}]` produces, for
/// reporting.
#[derive(Debug, Clone)]
pub struct XyDerivation {
    /// `c2` of the twisted quotient bundle, expanded in the `s` basis.
    pub derived: SClassVec,
    /// Exact total Chern class of `Sym^2(V^dual) (x) Gamma (x) det(V)`.
    pub total_chern_twisted: IntPoly,
    /// The same class reduced to the canonical shape used downstream.
    pub reduced_reference: IntPoly,
    /// Degree-3 part of the twisted total class (must die modulo the base
    /// relations for the rank-2 quotient to make sense).
    pub excess: IntPoly,
    pub matches_table: bool,
    pub chern_class_matches: bool,
    pub excess_vanishes: bool,
}

/// Derive `[{XY}]` from first principles: it is `c2` of
/// `Q (x) O(1) (x) Gamma^dual (x) det(V^dual)` where `Q` is the quotient of
/// `Sym^2(V^dual) (x) Gamma (x) det(V)` by the trivial line spanned by the
/// monomial `XY`.
pub fn derive_class_xy() -> Result<XyDerivation, PushError> {
    let ring = work_ring();
    let b1 = IntPoly::var(ring, "b1");
    let g = IntPoly::var(ring, "g");
    let h = IntPoly::var(ring, "h");

    let twist_class = &g + &b1;
    let twisted = crate::chern::twist(&sym_roots(2, true), &twist_class)?;
    let tc = total_chern(&twisted, ChernBasis::BetaGamma)?;

    // Q has the same total class; as a rank-2 bundle only c1, c2 survive.
    let c1q = tc.component(1);
    let c2q = tc.component(2);
    let excess = tc.component(3);

    // line class of O(1) (x) Gamma^dual (x) det(V^dual)
    let ell = &(&h - &g) - &b1;
    let class_h = &(&c2q + &(&c1q * &ell)) + &ell.pow(2);

    // expand h-powers in the s basis with concrete coefficients
    let h_idx = ring.index_of("h")?;
    let mut derived = SClassVec::zero(2);
    for e in 0..=class_h.max_power(h_idx) {
        let q = class_h.coeff_of_power(h_idx, e);
        if q.is_zero() {
            continue;
        }
        derived = derived.add(&h_to_s(2, usize::from(e))?.c_to_beta().scale(&q));
    }

    let table = class_xy().value;
    let rels: Vec<IntPoly> = bg_relations()
        .iter()
        .map(|r| r.into_ring(ring))
        .collect::<Result<_, _>>()?;
    let mut matches_table = true;
    for j in 0..=2 {
        if !equal_mod(derived.coeff(j), table.coeff(j), &rels)? {
            matches_table = false;
        }
    }

    // reduced shape of the twisted total class: 1 + g - b1(g + b1) + 4 b2
    let reduced_reference = poly(
        ring,
        &[
            (1, &[]),
            (1, &[("g", 1)]),
            (-1, &[("b1", 1), ("g", 1)]),
            (-1, &[("b1", 2)]),
            (4, &[("b2", 1)]),
        ],
    );
    let chern_class_matches = crate::ideal::equal_mod_degreewise(&tc, &reduced_reference, &rels)?;
    let excess_vanishes = equal_mod(&excess, &IntPoly::zero(ring), &rels)?;

    Ok(XyDerivation {
        derived,
        total_chern_twisted: tc,
        reduced_reference,
        excess,
        matches_table,
        chern_class_matches,
        excess_vanishes,
    })
}

/// The canonical table of all six composite subset classes (codimension =
/// ambient dimension, so these are point classes). Each value is verified
/// against its derivation recipe by [`finite_subset_derivations`].
pub fn subset_table() -> Vec<FiniteSubsetClass> {
    type CoeffTerms<'a> = &'a [(i64, &'a [(&'a str, u16)])];
    let ring = work_ring();
    let mk = |label, r, raw: &[CoeffTerms]| {
        let coeffs = raw
            .iter()
            .map(|terms| poly(ring, terms))
            .collect::<Vec<_>>();
        FiniteSubsetClass {
            label,
            value: SClassVec::from_coeffs(r, coeffs),
            origin: SubsetOrigin::Derived,
        }
    };
    vec![
        // 2 s_2^2 - 2 b1 s_2^1 + 2(b1^2 - 2 b2) s_2^0
        mk(
            SubsetLabel::X2_Y2,
            2,
            &[
                &[(2, &[("b1", 2)]), (-4, &[("b2", 1)])],
                &[(-2, &[("b1", 1)])],
                &[(2, &[])],
            ],
        ),
        // 2 s_3^3 - (3 b1 + g) s_3^2 + 2(2 b2 + b1^2) s_3^1 - 6 b2 b1 s_3^0
        mk(
            SubsetLabel::X2Y_XY2,
            3,
            &[
                &[(-6, &[("b1", 1), ("b2", 1)])],
                &[(4, &[("b2", 1)]), (2, &[("b1", 2)])],
                &[(-3, &[("b1", 1)]), (-1, &[("g", 1)])],
                &[(2, &[])],
            ],
        ),
        // 2 s_3^3 + (g - 3 b1) s_3^2 + 2(3 b1^2 - 6 b2) s_3^1 + 6 b1 (3 b2 - b1^2) s_3^0
        mk(
            SubsetLabel::X3_Y3,
            3,
            &[
                &[(18, &[("b1", 1), ("b2", 1)]), (-6, &[("b1", 3)])],
                &[(6, &[("b1", 2)]), (-12, &[("b2", 1)])],
                &[(1, &[("g", 1)]), (-3, &[("b1", 1)])],
                &[(2, &[])],
            ],
        ),
        // s_4^4 - 2 b1 s_4^3 + 2(b1^2 + 2 b2) s_4^2 - 12 b2 b1 s_4^1 + 24 b2^2 s_4^0
        mk(
            SubsetLabel::X2Y2,
            4,
            &[
                &[(24, &[("b2", 2)])],
                &[(-12, &[("b1", 1), ("b2", 1)])],
                &[(2, &[("b1", 2)]), (4, &[("b2", 1)])],
                &[(-2, &[("b1", 1)])],
                &[(1, &[])],
            ],
        ),
        // 2 s_4^4 - 4 b1 s_4^3 + 6 b1^2 s_4^2 - 6 b1^3 s_4^1 + 24 b2 (b1^2 - 2 b2) s_4^0
        mk(
            SubsetLabel::X3Y_XY3,
            4,
            &[
                &[(24, &[("b1", 2), ("b2", 1)]), (-48, &[("b2", 2)])],
                &[(-6, &[("b1", 3)])],
                &[(6, &[("b1", 2)])],
                &[(-4, &[("b1", 1)])],
                &[(2, &[])],
            ],
        ),
        // 2 s_4^4 - 4 b1 s_4^3 + 12(b1^2 - 2 b2) s_4^2 + 24 b1 (3 b2 - b1^2) s_4^1
        //   + 24(b1^4 + 2 b2^2 - 4 b2 b1^2) s_4^0
        //
        // The s_4^1 coefficient is forced by the recipe below: squaring the
        // {X^2,Y^2} class and removing two copies of {X^2Y^2} leaves
        // 24 b1 (3 b2 - b1^2), an exact integer identity with no g anywhere.
        mk(
            SubsetLabel::X4_Y4,
            4,
            &[
                &[
                    (24, &[("b1", 4)]),
                    (48, &[("b2", 2)]),
                    (-96, &[("b1", 2), ("b2", 1)]),
                ],
                &[(72, &[("b1", 1), ("b2", 1)]), (-24, &[("b1", 3)])],
                &[(12, &[("b1", 2)]), (-24, &[("b2", 1)])],
                &[(-4, &[("b1", 1)])],
                &[(2, &[])],
            ],
        ),
    ]
}

fn table_value(label: SubsetLabel) -> SClassVec {
    match label {
        SubsetLabel::X_Y => class_x_y().value,
        SubsetLabel::XY => class_xy().value,
        _ => {
            subset_table()
                .into_iter()
                .find(|c| c.label == label)
                .expect("label in table")
                .value
        }
    }
}

/// One derivation outcome: the exact recipe output next to the table
/// value, which must agree modulo the base-ring relations.
#[derive(Debug, Clone)]
pub struct SubsetDerivation {
    pub label: SubsetLabel,
    pub derived: SClassVec,
    pub expected: SClassVec,
    /// `derived - expected`, every coefficient of which must lie in the
    /// base relation ideal.
    pub difference: SClassVec,
    pub matches: bool,
}

/// Recompute the six composite classes from the two atomic ones:
///
/// * `{X^2,Y^2}   = mult({X,Y}, {X,Y}) - 2 {XY}`
/// * `{X^2Y,XY^2} = mult({X,Y}, {XY})`
/// * `{X^3,Y^3}   = mult({X,Y}, {X^2,Y^2}) - {X^2Y,XY^2}`
/// * `{X^2Y^2}    = mult({XY}, {XY})`
/// * `{X^3Y,XY^3} = mult({XY}, {X^2,Y^2})`
/// * `{X^4,Y^4}   = mult({X^2,Y^2}, {X^2,Y^2}) - 2 {X^2Y^2}`
pub fn finite_subset_derivations() -> Result<Vec<SubsetDerivation>, PushError> {
    let x_y = table_value(SubsetLabel::X_Y);
    let xy = table_value(SubsetLabel::XY);
    let x2_y2 = table_value(SubsetLabel::X2_Y2);
    let x2y_xy2 = table_value(SubsetLabel::X2Y_XY2);
    let x2y2 = table_value(SubsetLabel::X2Y2);

    let recipes: Vec<(SubsetLabel, SClassVec)> = vec![
        (
            SubsetLabel::X2_Y2,
            mult_push(&x_y, &x_y)?.sub(&xy.scale_i64(2)),
        ),
        (SubsetLabel::X2Y_XY2, mult_push(&x_y, &xy)?),
        (SubsetLabel::X3_Y3, mult_push(&x_y, &x2_y2)?.sub(&x2y_xy2)),
        (SubsetLabel::X2Y2, mult_push(&xy, &xy)?),
        (SubsetLabel::X3Y_XY3, mult_push(&xy, &x2_y2)?),
        (
            SubsetLabel::X4_Y4,
            mult_push(&x2_y2, &x2_y2)?.sub(&x2y2.scale_i64(2)),
        ),
    ];

    let ring = work_ring();
    let rels: Vec<IntPoly> = bg_relations()
        .iter()
        .map(|r| r.into_ring(ring))
        .collect::<Result<_, _>>()?;
    let mut out = Vec::new();
    for (label, derived) in recipes {
        let expected = table_value(label);
        let difference = derived.sub(&expected);
        let mut matches = true;
        for j in 0..=derived.r() {
            if !equal_mod(derived.coeff(j), expected.coeff(j), &rels)? {
                matches = false;
            }
        }
        out.push(SubsetDerivation {
            label,
            derived,
            expected,
            difference,
            matches,
        });
    }
    Ok(out)
}

/// Run the derivations and fail hard on the first mismatch, naming the
/// class and the offending coefficient. On success, hands back the
/// canonical classes.
pub fn derive_finite_subsets() -> Result<Vec<FiniteSubsetClass>, PushError> {
    for d in finite_subset_derivations()? {
        if !d.matches {
            let bad = (0..=d.derived.r())
                .find(|&j| !d.difference.coeff(j).is_zero())
                .unwrap_or(0);
            return Err(PushError::SubsetMismatch {
                label: d.label.as_str(),
                index: bad,
                derived: d.derived.coeff(bad).to_string(),
                expected: d.expected.coeff(bad).to_string(),
            });
        }
    }
    Ok(subset_table())
}

/// Base-ring classes get pulled into the working ring for use as
/// `s`-vector coefficients.
pub fn lift_to_work(p: &IntPoly) -> IntPoly {
    p.into_ring(work_ring())
        .expect("base ring embeds in work ring")
}
