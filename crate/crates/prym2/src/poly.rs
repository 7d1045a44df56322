//! Sparse multivariate polynomials with exact integer coefficients and a
//! weighted grading.
//!
//! Every class manipulated by this crate is carried by [`IntPoly`]: a map
//! from exponent vectors to nonzero `BigInt` coefficients over a fixed,
//! ordered variable list ([`Ring`]). Polynomials are canonical by
//! construction (no stored zero coefficients), so equality of values is
//! equality of term maps.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// A graded variable: display name plus integer weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Variable {
    pub name: String,
    pub degree: u32,
}

/// An ordered variable list. The order fixes exponent positions, the
/// display precedence, and the weight vector of the grading.
#[derive(Debug, PartialEq, Eq)]
pub struct Ring {
    vars: Vec<Variable>,
}

pub type RingRef = Arc<Ring>;

/// Exponent vector, aligned with the ring's variable list.
pub type Monomial = Vec<u16>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("variable `{0}` is not present in the target ring")]
    MissingVariable(String),
    #[error("substitution for `{var}` must be homogeneous of degree {expected}")]
    DegreeMismatch { var: String, expected: u32 },
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
}

impl Ring {
    pub fn new(vars: &[(&str, u32)]) -> RingRef {
        let mut seen = std::collections::HashSet::new();
        for (name, _) in vars {
            assert!(seen.insert(*name), "duplicate variable `{name}`");
        }
        Arc::new(Ring {
            vars: vars
                .iter()
                .map(|(name, degree)| Variable {
                    name: (*name).to_owned(),
                    degree: *degree,
                })
                .collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn vars(&self) -> &[Variable] {
        &self.vars
    }

    pub fn index_of(&self, name: &str) -> Result<usize, PolyError> {
        self.vars
            .iter()
            .position(|v| v.name == name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_owned()))
    }

    /// Weighted degree of an exponent vector.
    pub fn monomial_degree(&self, expo: &[u16]) -> u32 {
        expo.iter()
            .zip(&self.vars)
            .map(|(e, v)| u32::from(*e) * v.degree)
            .sum()
    }

    /// All exponent vectors of weighted degree exactly `d`, in a fixed
    /// order (descending exponent of earlier variables first).
    pub fn monomials_of_degree(&self, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut scratch = vec![0u16; self.vars.len()];
        self.enumerate(0, d, &mut scratch, &mut out);
        out
    }

    fn enumerate(
        &self,
        pos: usize,
        remaining: u32,
        scratch: &mut Monomial,
        out: &mut Vec<Monomial>,
    ) {
        if pos == self.vars.len() {
            if remaining == 0 {
                out.push(scratch.clone());
            }
            return;
        }
        let w = self.vars[pos].degree;
        if w == 0 {
            // weight-zero variables never contribute to a graded piece
            scratch[pos] = 0;
            self.enumerate(pos + 1, remaining, scratch, out);
            return;
        }
        let max = remaining / w;
        for e in (0..=max).rev() {
            scratch[pos] = e as u16;
            self.enumerate(pos + 1, remaining - e * w, scratch, out);
        }
        scratch[pos] = 0;
    }
}

/// The coefficient ring of every computation: `Z[b1, b2, g]` graded by
/// `deg b1 = deg g = 1`, `deg b2 = 2`.
pub fn base_ring() -> &'static RingRef {
    static RING: OnceLock<RingRef> = OnceLock::new();
    RING.get_or_init(|| Ring::new(&[("b1", 1), ("b2", 2), ("g", 1)]))
}

/// The working ring for hyperplane classes, Chern roots and the abstract
/// rank-2 Chern classes, extending the base ring.
pub fn work_ring() -> &'static RingRef {
    static RING: OnceLock<RingRef> = OnceLock::new();
    RING.get_or_init(|| {
        Ring::new(&[
            ("h", 1),
            ("h1", 1),
            ("h2", 1),
            ("r1", 1),
            ("r2", 1),
            ("c1", 1),
            ("c2", 2),
            ("b1", 1),
            ("b2", 2),
            ("g", 1),
        ])
    })
}

/// The presentation ring of the final answer: `Z[l1, l2, g]`.
pub fn lambda_ring() -> &'static RingRef {
    static RING: OnceLock<RingRef> = OnceLock::new();
    RING.get_or_init(|| Ring::new(&[("l1", 1), ("l2", 2), ("g", 1)]))
}

/// A sparse polynomial with exact integer coefficients.
///
/// Invariant: no stored zero coefficients, so `==` decides equality of
/// polynomials.
#[derive(Clone, PartialEq, Eq)]
pub struct IntPoly {
    ring: RingRef,
    terms: BTreeMap<Monomial, BigInt>,
}

impl IntPoly {
    pub fn zero(ring: &RingRef) -> Self {
        IntPoly {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: &RingRef, c: i64) -> Self {
        Self::constant_big(ring, BigInt::from(c))
    }

    pub fn constant_big(ring: &RingRef, c: BigInt) -> Self {
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.insert(vec![0; ring.len()], c);
        }
        p
    }

    pub fn one(ring: &RingRef) -> Self {
        Self::constant(ring, 1)
    }

    /// The variable `name` as a polynomial. Panics on unknown names: these
    /// are always spelled literally at the call site.
    pub fn var(ring: &RingRef, name: &str) -> Self {
        let idx = ring.index_of(name).expect("variable not in ring");
        let mut expo = vec![0u16; ring.len()];
        expo[idx] = 1;
        let mut p = Self::zero(ring);
        p.terms.insert(expo, BigInt::one());
        p
    }

    pub fn from_terms(ring: &RingRef, terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut p = Self::zero(ring);
        for (m, c) in terms {
            assert_eq!(m.len(), ring.len(), "exponent vector length mismatch");
            p.add_term(m, c);
        }
        p
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, mono: &[u16]) -> BigInt {
        self.terms.get(mono).cloned().unwrap_or_else(BigInt::zero)
    }

    fn add_term(&mut self, mono: Monomial, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn assert_same_ring(&self, other: &IntPoly) {
        assert!(
            self.ring == other.ring,
            "operands live over different rings"
        );
    }

    /// Maximum weighted degree over all terms; `None` for the zero
    /// polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms
            .keys()
            .map(|m| self.ring.monomial_degree(m))
            .max()
    }

    /// The zero polynomial counts as homogeneous (of every degree).
    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| self.ring.monomial_degree(m));
        match degs.next() {
            None => true,
            Some(d0) => degs.all(|d| d == d0),
        }
    }

    /// Degree of a homogeneous nonzero polynomial.
    pub fn homogeneous_degree(&self) -> Result<Option<u32>, PolyError> {
        if !self.is_homogeneous() {
            return Err(PolyError::NotHomogeneous);
        }
        Ok(self.degree())
    }

    /// The weighted-degree-`d` graded piece.
    pub fn component(&self, d: u32) -> IntPoly {
        let mut p = Self::zero(&self.ring);
        for (m, c) in &self.terms {
            if self.ring.monomial_degree(m) == d {
                p.terms.insert(m.clone(), c.clone());
            }
        }
        p
    }

    pub fn scaled(&self, k: &BigInt) -> IntPoly {
        let mut p = Self::zero(&self.ring);
        if k.is_zero() {
            return p;
        }
        for (m, c) in &self.terms {
            p.terms.insert(m.clone(), c * k);
        }
        p
    }

    pub fn scaled_i64(&self, k: i64) -> IntPoly {
        self.scaled(&BigInt::from(k))
    }

    pub fn pow(&self, e: u32) -> IntPoly {
        let mut acc = Self::one(&self.ring);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Largest exponent of `var` appearing in any term.
    pub fn max_power(&self, var: usize) -> u16 {
        self.terms.keys().map(|m| m[var]).max().unwrap_or(0)
    }

    /// Terms whose exponent of `var` equals `e`, with that variable
    /// stripped out.
    pub fn coeff_of_power(&self, var: usize, e: u16) -> IntPoly {
        let mut p = Self::zero(&self.ring);
        for (m, c) in &self.terms {
            if m[var] == e {
                let mut m2 = m.clone();
                m2[var] = 0;
                p.add_term(m2, c.clone());
            }
        }
        p
    }

    /// Exact substitution of a homogeneous polynomial for a variable.
    /// The replacement must match the variable's weight, so graded inputs
    /// stay graded.
    pub fn substitute(&self, var: &str, replacement: &IntPoly) -> Result<IntPoly, PolyError> {
        let idx = self.ring.index_of(var)?;
        self.assert_same_ring(replacement);
        let w = self.ring.vars()[idx].degree;
        if !replacement.is_zero()
            && (!replacement.is_homogeneous() || replacement.degree() != Some(w))
        {
            return Err(PolyError::DegreeMismatch {
                var: var.to_owned(),
                expected: w,
            });
        }
        let mut out = Self::zero(&self.ring);
        let max = self.max_power(idx);
        let mut powers = Vec::with_capacity(usize::from(max) + 1);
        powers.push(Self::one(&self.ring));
        for e in 1..=max {
            let prev = &powers[usize::from(e) - 1];
            powers.push(prev * replacement);
        }
        for (m, c) in &self.terms {
            let e = m[idx];
            let mut base = m.clone();
            base[idx] = 0;
            let mut part = Self::zero(&self.ring);
            part.terms.insert(base, c.clone());
            out = &out + &(&part * &powers[usize::from(e)]);
        }
        Ok(out)
    }

    /// Swap the exponents of two variables.
    pub fn swap_vars(&self, a: &str, b: &str) -> Result<IntPoly, PolyError> {
        let ia = self.ring.index_of(a)?;
        let ib = self.ring.index_of(b)?;
        let mut p = Self::zero(&self.ring);
        for (m, c) in &self.terms {
            let mut m2 = m.clone();
            m2.swap(ia, ib);
            p.add_term(m2, c.clone());
        }
        Ok(p)
    }

    /// Re-express over another ring, matching variables by name. Fails if
    /// a variable that actually occurs is absent from the target.
    pub fn into_ring(&self, target: &RingRef) -> Result<IntPoly, PolyError> {
        let mut map = Vec::with_capacity(self.ring.len());
        for v in self.ring.vars() {
            map.push(target.index_of(&v.name).ok());
        }
        let mut p = IntPoly::zero(target);
        for (m, c) in &self.terms {
            let mut m2 = vec![0u16; target.len()];
            for (i, e) in m.iter().enumerate() {
                if *e == 0 {
                    continue;
                }
                match map[i] {
                    Some(j) => m2[j] = *e,
                    None => {
                        return Err(PolyError::MissingVariable(self.ring.vars()[i].name.clone()))
                    }
                }
            }
            p.add_term(m2, c.clone());
        }
        Ok(p)
    }

    /// Evaluate at integer values for every variable.
    pub fn eval(&self, values: &[BigInt]) -> BigInt {
        assert_eq!(values.len(), self.ring.len());
        let mut acc = BigInt::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in values.iter().zip(m) {
                for _ in 0..*e {
                    t *= v;
                }
            }
            acc += t;
        }
        acc
    }

    /// Exact division by `k * mono`; `None` when any term is not
    /// divisible.
    pub fn div_exact_term(&self, k: &BigInt, mono: &[u16]) -> Option<IntPoly> {
        assert!(!k.is_zero());
        assert_eq!(mono.len(), self.ring.len());
        let mut p = Self::zero(&self.ring);
        for (m, c) in &self.terms {
            let (q, r) = div_rem_big(c, k);
            if !r.is_zero() {
                return None;
            }
            let mut m2 = m.clone();
            for (i, e) in mono.iter().enumerate() {
                if m2[i] < *e {
                    return None;
                }
                m2[i] -= e;
            }
            p.terms.insert(m2, q);
        }
        Some(p)
    }

    /// Terms sorted for display: weighted degree, then largest single
    /// exponent, then the exponent vector itself, all descending.
    fn sorted_terms(&self) -> Vec<(&Monomial, &BigInt)> {
        let mut ts: Vec<_> = self.terms.iter().collect();
        ts.sort_by(|(ma, _), (mb, _)| {
            let ka = (
                self.ring.monomial_degree(ma),
                ma.iter().copied().max().unwrap_or(0),
            );
            let kb = (
                self.ring.monomial_degree(mb),
                mb.iter().copied().max().unwrap_or(0),
            );
            kb.cmp(&ka).then_with(|| mb.cmp(ma))
        });
        ts
    }

    fn render(&self, spaced: bool) -> String {
        use std::fmt::Write;
        if self.is_zero() {
            return "0".to_owned();
        }
        // within a term, factors print base-classes first and hyperplane
        // classes last, the way the classes are written on paper
        let mut factor_order: Vec<usize> = (0..self.ring.len()).collect();
        factor_order.sort_by_key(|&i| (factor_priority(&self.ring.vars()[i].name), i));
        let mut s = String::new();
        for (i, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                let sign = if neg { '-' } else { '+' };
                if spaced {
                    let _ = write!(s, " {sign} ");
                } else {
                    s.push(sign);
                }
            }
            let abs = c.abs();
            let mut wrote = false;
            if !abs.is_one() || m.iter().all(|e| *e == 0) {
                let _ = write!(s, "{abs}");
                wrote = true;
            }
            for &idx in &factor_order {
                let e = m[idx];
                if e == 0 {
                    continue;
                }
                if wrote {
                    s.push('*');
                }
                s.push_str(&self.ring.vars()[idx].name);
                if e > 1 {
                    let _ = write!(s, "^{e}");
                }
                wrote = true;
            }
        }
        s
    }

    /// Canonical serialization without spaces, e.g. `g^2+l1*g`.
    pub fn to_compact_string(&self) -> String {
        self.render(false)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(true))
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

fn div_rem_big(a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
    let q = a / b;
    let r = a - &q * b;
    (q, r)
}

fn factor_priority(name: &str) -> usize {
    match name {
        "r1" => 0,
        "r2" => 1,
        "c1" => 2,
        "c2" => 3,
        "b1" | "l1" => 4,
        "b2" | "l2" => 5,
        "g" => 6,
        "h" => 7,
        "h1" => 8,
        "h2" => 9,
        _ => 10,
    }
}

impl std::ops::Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        self.assert_same_ring(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl std::ops::Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self.assert_same_ring(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl std::ops::Mul for &IntPoly {
    type Output = IntPoly;
    // exponent vectors add when monomials multiply
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        self.assert_same_ring(rhs);
        let mut out = IntPoly::zero(&self.ring);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m: Monomial = ma.iter().zip(mb).map(|(a, b)| a + b).collect();
                out.add_term(m, ca * cb);
            }
        }
        out
    }
}

impl std::ops::Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        let mut out = IntPoly::zero(&self.ring);
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), -c.clone());
        }
        out
    }
}

/// Shorthand used throughout: parse-free construction of small
/// polynomials over a ring, e.g. `poly(ring, &[(1, &[("b1", 1), ("g", 1)])])`.
pub fn poly(ring: &RingRef, terms: &[(i64, &[(&str, u16)])]) -> IntPoly {
    let mut acc = IntPoly::zero(ring);
    for (coeff, vars) in terms {
        let mut mono = vec![0u16; ring.len()];
        for (name, e) in *vars {
            let idx = ring.index_of(name).expect("variable not in ring");
            mono[idx] += e;
        }
        acc.add_term(mono, BigInt::from(*coeff));
    }
    acc
}
