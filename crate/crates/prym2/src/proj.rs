//! Projective-bundle calculus over a rank-2 base bundle: the `s_r^j`
//! bookkeeping basis, its conversion to and from powers of the hyperplane
//! class, the bundle relation `P(h)`, and diagonal classes on
//! `P(W) x P(W)`.

use num_bigint::BigInt;
use thiserror::Error;

use crate::chern::{chern_component, total_chern, BundleSpec, ChernBasis, ChernError};
use crate::poly::{work_ring, IntPoly, PolyError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ProjError {
    #[error("s-class index {j} out of range for symmetric power {r}")]
    IndexOutOfRange { r: usize, j: usize },
    #[error("h^{k} has no s-class expansion on Sym^{r} (needs k <= r)")]
    PowerNotAvailable { r: usize, k: usize },
    #[error("pushforward power {k} must be smaller than the rank {rank}")]
    PushPowerOutOfRange { k: usize, rank: usize },
    #[error("diagonal needs rank >= 2, got {0}")]
    RankTooSmall(usize),
    #[error(transparent)]
    Chern(#[from] ChernError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// A class on `P(Sym^r)` written as `sum_j coeffs[j] * s_r^j` with
/// coefficients in the base classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SClassVec {
    r: usize,
    coeffs: Vec<IntPoly>,
}

impl SClassVec {
    pub fn zero(r: usize) -> Self {
        SClassVec {
            r,
            coeffs: vec![IntPoly::zero(work_ring()); r + 1],
        }
    }

    /// The basis class `s_r^j` itself.
    pub fn basis(r: usize, j: usize) -> Result<Self, ProjError> {
        if j > r {
            return Err(ProjError::IndexOutOfRange { r, j });
        }
        let mut v = Self::zero(r);
        v.coeffs[j] = IntPoly::one(work_ring());
        Ok(v)
    }

    pub fn from_coeffs(r: usize, coeffs: Vec<IntPoly>) -> Self {
        assert_eq!(coeffs.len(), r + 1);
        SClassVec { r, coeffs }
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn coeff(&self, j: usize) -> &IntPoly {
        &self.coeffs[j]
    }

    pub fn coeffs(&self) -> &[IntPoly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(IntPoly::is_zero)
    }

    pub fn add(&self, other: &SClassVec) -> SClassVec {
        assert_eq!(self.r, other.r, "classes on different spaces");
        SClassVec {
            r: self.r,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &SClassVec) -> SClassVec {
        assert_eq!(self.r, other.r, "classes on different spaces");
        SClassVec {
            r: self.r,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, k: &IntPoly) -> SClassVec {
        SClassVec {
            r: self.r,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    pub fn scale_i64(&self, k: i64) -> SClassVec {
        SClassVec {
            r: self.r,
            coeffs: self.coeffs.iter().map(|c| c.scaled_i64(k)).collect(),
        }
    }

    /// Codimension of a homogeneous class: every present `coeffs[j]` must
    /// be homogeneous of degree `d - j` for one fixed `d`. Returns `None`
    /// for the zero class.
    pub fn codimension(&self) -> Result<Option<usize>, ProjError> {
        let mut d: Option<usize> = None;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !c.is_homogeneous() {
                return Err(PolyError::NotHomogeneous.into());
            }
            let total = c.degree().expect("nonzero") as usize + j;
            match d {
                None => d = Some(total),
                Some(prev) if prev == total => {}
                Some(_) => return Err(PolyError::NotHomogeneous.into()),
            }
        }
        Ok(d)
    }

    /// Substitute `c1 -> -b1`, `c2 -> b2` in every coefficient.
    pub fn c_to_beta(&self) -> SClassVec {
        let ring = work_ring();
        let minus_b1 = -&IntPoly::var(ring, "b1");
        let b2 = IntPoly::var(ring, "b2");
        SClassVec {
            r: self.r,
            coeffs: self
                .coeffs
                .iter()
                .map(|c| {
                    c.substitute("c1", &minus_b1)
                        .and_then(|p| p.substitute("c2", &b2))
                        .expect("degree-preserving substitution")
                })
                .collect(),
        }
    }

    /// Expand into a polynomial in `h` using the `s -> h` table,
    /// `sum_j coeffs[j] * s_to_h(r, j)`, with the table taken in the
    /// `(b1, b2)` or `(c1, c2)` basis.
    pub fn to_h_poly(&self, basis: ChernBasis) -> IntPoly {
        let ring = work_ring();
        let mut acc = IntPoly::zero(ring);
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let table = s_to_h_in_basis(self.r, j, basis).expect("j <= r by construction");
            acc = &acc + &(c * &table);
        }
        acc
    }
}

impl std::fmt::Display for SClassVec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for j in (0..=self.r).rev() {
            let c = &self.coeffs[j];
            if c.is_zero() {
                continue;
            }
            let rendered = c.to_string();
            let (sign, body) = if let Some(stripped) = rendered.strip_prefix('-') {
                if stripped.contains(" + ") || stripped.contains(" - ") {
                    ('+', format!("({rendered})"))
                } else {
                    ('-', stripped.to_owned())
                }
            } else if rendered.contains(" + ") || rendered.contains(" - ") {
                ('+', format!("({rendered})"))
            } else {
                ('+', rendered)
            };
            if first {
                if sign == '-' {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            if body == "1" {
                write!(f, "s_{}^{}", self.r, j)?;
            } else {
                write!(f, "{body}*s_{}^{}", self.r, j)?;
            }
        }
        Ok(())
    }
}

/// `s_r^j` as a polynomial in `h` with abstract rank-2 coefficients,
/// computed by the defining recursion
/// `s_r^(j+1) = (h + j*c1) * s_r^j + j*(r+1-j)*c2 * s_r^(j-1)`
/// from `s_r^0 = 1`, `s_r^1 = h`.
pub fn s_to_h(r: usize, j: usize) -> Result<IntPoly, ProjError> {
    if j > r {
        return Err(ProjError::IndexOutOfRange { r, j });
    }
    let ring = work_ring();
    let h = IntPoly::var(ring, "h");
    let c1 = IntPoly::var(ring, "c1");
    let c2 = IntPoly::var(ring, "c2");
    let mut prev = IntPoly::one(ring); // s_r^0
    if j == 0 {
        return Ok(prev);
    }
    let mut cur = h.clone(); // s_r^1
    for jj in 1..j {
        let jj_i = jj as i64;
        let lin = &h + &c1.scaled_i64(jj_i);
        let next =
            &(&lin * &cur) + &(&c2 * &prev).scaled(&BigInt::from(jj_i * (r as i64 + 1 - jj_i)));
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

fn s_to_h_in_basis(r: usize, j: usize, basis: ChernBasis) -> Result<IntPoly, ProjError> {
    let table = s_to_h(r, j)?;
    match basis {
        ChernBasis::AbstractC => Ok(table),
        ChernBasis::BetaGamma => {
            let ring = work_ring();
            let minus_b1 = -&IntPoly::var(ring, "b1");
            let b2 = IntPoly::var(ring, "b2");
            Ok(table.substitute("c1", &minus_b1)?.substitute("c2", &b2)?)
        }
    }
}

/// `h^k` expanded in the `s_r^j` basis by triangular inversion of the
/// recursion (each `s_r^j` is monic of degree `j` in `h`). Coefficients
/// come out in the abstract `(c1, c2)` basis.
pub fn h_to_s(r: usize, k: usize) -> Result<SClassVec, ProjError> {
    if k > r {
        return Err(ProjError::PowerNotAvailable { r, k });
    }
    let ring = work_ring();
    let h_idx = ring.index_of("h").expect("work ring has h");
    let mut rem = IntPoly::var(ring, "h").pow(k as u32);
    let mut out = SClassVec::zero(r);
    for j in (0..=k).rev() {
        let a = rem.coeff_of_power(h_idx, j as u16);
        if a.is_zero() {
            continue;
        }
        rem = &rem - &(&a * &s_to_h(r, j)?);
        out.coeffs[j] = a;
    }
    assert!(rem.is_zero(), "triangular inversion must terminate exactly");
    Ok(out)
}

/// The projective-bundle relation `P(h) = sum_i h^(n-i) c_i(spec)` for a
/// rank-`n` spec, in the hyperplane variable `hvar`.
pub fn proj_relation_in(
    spec: &BundleSpec,
    basis: ChernBasis,
    hvar: &str,
) -> Result<IntPoly, ProjError> {
    let ring = work_ring();
    let n = spec.rank();
    let h = IntPoly::var(ring, hvar);
    let mut acc = IntPoly::zero(ring);
    for i in 0..=n {
        let ci = chern_component(spec, i, basis)?;
        acc = &acc + &(&h.pow((n - i) as u32) * &ci);
    }
    Ok(acc)
}

pub fn proj_relation(spec: &BundleSpec, basis: ChernBasis) -> Result<IntPoly, ProjError> {
    proj_relation_in(spec, basis, "h")
}

/// Rewrite powers `var^e` with `e >= n` using a monic degree-`n` relation
/// `P(var) = 0`, i.e. `var^n -> var^n - P(var)`, until every exponent of
/// `var` is below `n`.
pub fn reduce_power(p: &IntPoly, var: &str, relation: &IntPoly) -> Result<IntPoly, ProjError> {
    let ring = work_ring();
    let idx = ring.index_of(var)?;
    let n = relation.max_power(idx);
    assert!(n > 0, "relation must involve {var}");
    assert_eq!(
        relation.coeff_of_power(idx, n),
        IntPoly::one(ring),
        "relation must be monic in {var}"
    );
    let top = p.max_power(idx);
    let var_poly = IntPoly::var(ring, var);
    // reduced[e] = normal form of var^e below the relation degree
    let mut reduced: Vec<IntPoly> = Vec::with_capacity(usize::from(top) + 1);
    for e in 0..=top {
        if e < n {
            reduced.push(var_poly.pow(u32::from(e)));
            continue;
        }
        let lifted = &reduced[usize::from(e) - 1] * &var_poly;
        let overflow = lifted.coeff_of_power(idx, n);
        let head = &var_poly.pow(u32::from(n)) - relation; // = -(lower terms of P)
        let rest = &lifted - &(&overflow * &var_poly.pow(u32::from(n)));
        reduced.push(&rest + &(&overflow * &head));
    }
    let mut out = IntPoly::zero(ring);
    for e in 0..=top {
        let part = p.coeff_of_power(idx, e);
        if part.is_zero() {
            continue;
        }
        out = &out + &(&part * &reduced[usize::from(e)]);
    }
    Ok(out)
}

/// A class on `P(W) x P(W)` as a polynomial in `h1`, `h2` with rank-2
/// base coefficients; exponents of `h1` and `h2` stay below the rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiProjClass {
    pub rank: usize,
    pub poly: IntPoly,
}

impl BiProjClass {
    fn reduce(rank: usize, poly: &IntPoly, spec: &BundleSpec) -> Result<IntPoly, ProjError> {
        let rel1 = proj_relation_in(spec, ChernBasis::AbstractC, "h1")?;
        let rel2 = proj_relation_in(spec, ChernBasis::AbstractC, "h2")?;
        let step = reduce_power(poly, "h1", &rel1)?;
        let out = reduce_power(&step, "h2", &rel2)?;
        debug_assert!(usize::from(out.max_power(work_ring().index_of("h1").unwrap())) < rank);
        debug_assert!(usize::from(out.max_power(work_ring().index_of("h2").unwrap())) < rank);
        Ok(out)
    }
}

/// The diagonal class of `P(W) x P(W)`: the degree-(rank-1) piece of
/// `c(W) / ((1 - h1)(1 - h2))`.
pub fn diagonal_class(spec: &BundleSpec) -> Result<BiProjClass, ProjError> {
    let n = spec.rank();
    if n < 2 {
        return Err(ProjError::RankTooSmall(n));
    }
    let ring = work_ring();
    let tc = total_chern(spec, ChernBasis::AbstractC)?;
    let h1 = IntPoly::var(ring, "h1");
    let h2 = IntPoly::var(ring, "h2");
    let mut acc = IntPoly::zero(ring);
    for i in 0..=(n - 1) {
        let ci = tc.component(i as u32);
        if ci.is_zero() {
            continue;
        }
        for a in 0..=(n - 1 - i) {
            let b = n - 1 - i - a;
            acc = &acc + &(&(&ci * &h1.pow(a as u32)) * &h2.pow(b as u32));
        }
    }
    let poly = BiProjClass::reduce(n, &acc, spec)?;
    Ok(BiProjClass { rank: n, poly })
}

/// Pushforward of `h^k` along the diagonal: `h1^k * [diagonal]`, reduced
/// by the bundle relation in both factors.
pub fn diagonal_push(spec: &BundleSpec, k: usize) -> Result<BiProjClass, ProjError> {
    let n = spec.rank();
    if k >= n {
        return Err(ProjError::PushPowerOutOfRange { k, rank: n });
    }
    let diag = diagonal_class(spec)?;
    let h1 = IntPoly::var(work_ring(), "h1");
    let poly = BiProjClass::reduce(n, &(&diag.poly * &h1.pow(k as u32)), spec)?;
    Ok(BiProjClass { rank: n, poly })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chern::sym_roots;
    use crate::poly::poly;

    #[test]
    fn s_table_base_cases() {
        let ring = work_ring();
        assert_eq!(s_to_h(3, 0).unwrap(), IntPoly::one(ring));
        assert_eq!(s_to_h(3, 1).unwrap(), IntPoly::var(ring, "h"));
        assert!(matches!(
            s_to_h(2, 3),
            Err(ProjError::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn s_2_2_from_recursion() {
        // one step: (h + c1) h + 2 c2
        let ring = work_ring();
        let expected = poly(
            ring,
            &[
                (1, &[("h", 2)]),
                (1, &[("c1", 1), ("h", 1)]),
                (2, &[("c2", 1)]),
            ],
        );
        assert_eq!(s_to_h(2, 2).unwrap(), expected);
    }

    #[test]
    fn s_4_2_in_beta_basis_prints_as_expected() {
        let p = s_to_h_in_basis(4, 2, ChernBasis::BetaGamma).unwrap();
        assert_eq!(p.to_string(), "h^2 - b1*h + 4*b2");
    }

    #[test]
    fn h2_inversion_matches_closed_form() {
        // h^2 = s_r^2 - c1 s_r^1 - r c2 s_r^0
        for r in 2..=4 {
            let v = h_to_s(r, 2).unwrap();
            let ring = work_ring();
            assert_eq!(v.coeff(2), &IntPoly::one(ring));
            assert_eq!(v.coeff(1), &poly(ring, &[(-1, &[("c1", 1)])]));
            assert_eq!(v.coeff(0), &poly(ring, &[(-(r as i64), &[("c2", 1)])]));
        }
    }

    #[test]
    fn h3_inversion_matches_closed_form() {
        // h^3 = s_r^3 - 3c1 s_r^2 + (c1^2 + (2-3r)c2) s_r^1 + r c1 c2 s_r^0
        for r in 3..=4 {
            let v = h_to_s(r, 3).unwrap();
            let ring = work_ring();
            assert_eq!(v.coeff(3), &IntPoly::one(ring));
            assert_eq!(v.coeff(2), &poly(ring, &[(-3, &[("c1", 1)])]));
            assert_eq!(
                v.coeff(1),
                &poly(ring, &[(1, &[("c1", 2)]), (2 - 3 * r as i64, &[("c2", 1)])])
            );
            assert_eq!(
                v.coeff(0),
                &poly(ring, &[(r as i64, &[("c1", 1), ("c2", 1)])])
            );
        }
    }

    #[test]
    fn h4_inversion_matches_closed_form() {
        // h^4 = s_r^4 - 6c1 s_r^3 + (7c1^2 - (6r-8)c2) s_r^2
        //       + ((10r-8)c1c2 - c1^3) s_r^1 - (r c1^2 c2 - (3r^2-2r)c2^2) s_r^0
        let r = 4usize;
        let v = h_to_s(r, 4).unwrap();
        let ring = work_ring();
        let ri = r as i64;
        assert_eq!(v.coeff(4), &IntPoly::one(ring));
        assert_eq!(v.coeff(3), &poly(ring, &[(-6, &[("c1", 1)])]));
        assert_eq!(
            v.coeff(2),
            &poly(ring, &[(7, &[("c1", 2)]), (-(6 * ri - 8), &[("c2", 1)])])
        );
        assert_eq!(
            v.coeff(1),
            &poly(
                ring,
                &[(10 * ri - 8, &[("c1", 1), ("c2", 1)]), (-1, &[("c1", 3)])]
            )
        );
        assert_eq!(
            v.coeff(0),
            &poly(
                ring,
                &[
                    (-ri, &[("c1", 2), ("c2", 1)]),
                    (3 * ri * ri - 2 * ri, &[("c2", 2)])
                ]
            )
        );
    }

    #[test]
    fn h_to_s_trivial_cases_and_rejection() {
        let v = h_to_s(4, 0).unwrap();
        assert_eq!(v.coeff(0), &IntPoly::one(work_ring()));
        assert!(matches!(
            h_to_s(2, 3),
            Err(ProjError::PowerNotAvailable { .. })
        ));
    }

    #[test]
    fn roundtrip_h_to_s_to_h() {
        let ring = work_ring();
        let h = IntPoly::var(ring, "h");
        for r in 1..=4 {
            for k in 0..=r {
                let v = h_to_s(r, k).unwrap();
                assert_eq!(v.to_h_poly(ChernBasis::AbstractC), h.pow(k as u32));
            }
        }
    }

    #[test]
    fn proj_relation_rank_one_trivial() {
        let ring = work_ring();
        let trivial = crate::chern::BundleSpec {
            roots: vec![IntPoly::zero(ring)],
            label: "O".into(),
        };
        let rel = proj_relation(&trivial, ChernBasis::BetaGamma).unwrap();
        assert_eq!(rel, IntPoly::var(ring, "h"));
    }

    #[test]
    fn proj_relation_rank_two_dual() {
        // h^2 - b1 h + b2 for the dual standard bundle
        let spec = sym_roots(1, true);
        let rel = proj_relation(&spec, ChernBasis::BetaGamma).unwrap();
        let ring = work_ring();
        let expected = poly(
            ring,
            &[
                (1, &[("h", 2)]),
                (-1, &[("b1", 1), ("h", 1)]),
                (1, &[("b2", 1)]),
            ],
        );
        assert_eq!(rel, expected);
    }

    #[test]
    fn proj_relation_sym4_constant_term() {
        let spec = sym_roots(4, true);
        let rel = proj_relation(&spec, ChernBasis::BetaGamma).unwrap();
        let ring = work_ring();
        let h_idx = ring.index_of("h").unwrap();
        assert_eq!(rel.max_power(h_idx), 5);
        let c5 = rel.coeff_of_power(h_idx, 0);
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
    fn diagonal_of_projective_line_bundle() {
        // [diag] = h1 + h2 + c1 for the rank-2 case
        let spec = sym_roots(1, false);
        let d = diagonal_class(&spec).unwrap();
        let ring = work_ring();
        let expected = poly(
            ring,
            &[(1, &[("h1", 1)]), (1, &[("h2", 1)]), (1, &[("c1", 1)])],
        );
        assert_eq!(d.poly, expected);
    }

    #[test]
    fn diagonal_of_sym2() {
        let spec = sym_roots(2, false);
        let d = diagonal_class(&spec).unwrap();
        let ring = work_ring();
        let expected = poly(
            ring,
            &[
                (1, &[("h1", 2)]),
                (1, &[("h1", 1), ("h2", 1)]),
                (1, &[("h2", 2)]),
                (3, &[("c1", 1), ("h1", 1)]),
                (3, &[("c1", 1), ("h2", 1)]),
                (2, &[("c1", 2)]),
                (4, &[("c2", 1)]),
            ],
        );
        assert_eq!(d.poly, expected);
    }

    #[test]
    fn diagonal_push_on_line_bundle() {
        // push of h: h1 h2 - c2; push of 1: the diagonal itself
        let spec = sym_roots(1, false);
        let ring = work_ring();
        let p0 = diagonal_push(&spec, 0).unwrap();
        assert_eq!(p0.poly, diagonal_class(&spec).unwrap().poly);
        let p1 = diagonal_push(&spec, 1).unwrap();
        let expected = poly(ring, &[(1, &[("h1", 1), ("h2", 1)]), (-1, &[("c2", 1)])]);
        assert_eq!(p1.poly, expected);
        assert!(matches!(
            diagonal_push(&spec, 2),
            Err(ProjError::PushPowerOutOfRange { .. })
        ));
    }

    #[test]
    fn diagonal_push_on_sym2() {
        let spec = sym_roots(2, false);
        let ring = work_ring();
        // push of h: h1^2 h2 + h1 h2^2 + 3c1 h1 h2 - 4 c1 c2
        let p1 = diagonal_push(&spec, 1).unwrap();
        let expected1 = poly(
            ring,
            &[
                (1, &[("h1", 2), ("h2", 1)]),
                (1, &[("h1", 1), ("h2", 2)]),
                (3, &[("c1", 1), ("h1", 1), ("h2", 1)]),
                (-4, &[("c1", 1), ("c2", 1)]),
            ],
        );
        assert_eq!(p1.poly, expected1);
        // push of h^2: h1^2 h2^2 - (2c1^2 + 4c2) h1 h2 - 4c1c2 (h1 + h2)
        let p2 = diagonal_push(&spec, 2).unwrap();
        let expected2 = poly(
            ring,
            &[
                (1, &[("h1", 2), ("h2", 2)]),
                (-2, &[("c1", 2), ("h1", 1), ("h2", 1)]),
                (-4, &[("c2", 1), ("h1", 1), ("h2", 1)]),
                (-4, &[("c1", 1), ("c2", 1), ("h1", 1)]),
                (-4, &[("c1", 1), ("c2", 1), ("h2", 1)]),
            ],
        );
        assert_eq!(p2.poly, expected2);
    }

    #[test]
    fn diagonal_is_monic_in_top_power() {
        for n in 1..=2 {
            let spec = sym_roots(n, false);
            let d = diagonal_class(&spec).unwrap();
            let ring = work_ring();
            let h1_idx = ring.index_of("h1").unwrap();
            let top = d.poly.coeff_of_power(h1_idx, (d.rank - 1) as u16);
            let h2_idx = ring.index_of("h2").unwrap();
            assert_eq!(top.coeff_of_power(h2_idx, 0), IntPoly::one(ring));
        }
    }

    #[test]
    fn reduction_is_idempotent() {
        let spec = sym_roots(2, false);
        let ring = work_ring();
        let rel1 = proj_relation_in(&spec, ChernBasis::AbstractC, "h1").unwrap();
        let h1 = IntPoly::var(ring, "h1");
        let p = h1.pow(5);
        let once = reduce_power(&p, "h1", &rel1).unwrap();
        let twice = reduce_power(&once, "h1", &rel1).unwrap();
        assert_eq!(once, twice);
    }

    #[test]
    fn sclass_display() {
        let ring = work_ring();
        let mut v = SClassVec::zero(2);
        v.coeffs[2] = IntPoly::one(ring);
        v.coeffs[1] = poly(ring, &[(1, &[("g", 1)]), (-1, &[("b1", 1)])]);
        v.coeffs[0] = poly(ring, &[(2, &[("b2", 1)])]);
        assert_eq!(v.to_string(), "s_2^2 + (-b1 + g)*s_2^1 + 2*b2*s_2^0");
    }

    #[test]
    fn codimension_audit() {
        let ring = work_ring();
        let mut v = SClassVec::zero(1);
        v.coeffs[1] = IntPoly::constant(ring, 2);
        v.coeffs[0] = poly(ring, &[(-1, &[("b1", 1)]), (-1, &[("g", 1)])]);
        assert_eq!(v.codimension().unwrap(), Some(1));

        let mut bad = SClassVec::zero(1);
        bad.coeffs[1] = IntPoly::constant(ring, 2);
        bad.coeffs[0] = IntPoly::constant(ring, 3);
        assert!(bad.codimension().is_err());
    }
}
