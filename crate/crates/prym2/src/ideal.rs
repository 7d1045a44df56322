//! Homogeneous ideal membership over `Z` by degreewise integer linear
//! algebra.
//!
//! For homogeneous generators in positively-graded variables, degree-`d`
//! membership is a finite problem: the degree-`d` slice of the ideal is the
//! `Z`-span of `m * gen` over monomials `m` with `deg(m * gen) = d`. We
//! decide solvability of the resulting integer linear system with a
//! column-style Hermite normal form, and return an explicit certificate
//! that replays to the queried element.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::poly::{base_ring, poly, IntPoly, PolyError, RingRef};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IdealError {
    #[error("`{0}` is not homogeneous")]
    NotHomogeneous(String),
    #[error("ideal arithmetic requires every variable weight to be positive")]
    NonPositiveWeight,
    #[error("operands live over different rings")]
    RingMismatch,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// An explicit ideal-membership witness: `sum(multiplier * gens[index])`
/// equals the queried polynomial exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MembershipCertificate {
    pub combiners: Vec<(usize, IntPoly)>,
}

impl MembershipCertificate {
    pub fn replay(&self, gens: &[IntPoly], ring: &RingRef) -> IntPoly {
        let mut acc = IntPoly::zero(ring);
        for (idx, mult) in &self.combiners {
            acc = &acc + &(mult * &gens[*idx]);
        }
        acc
    }

    /// Human-readable witness, e.g. `(b1)*(2*g) + (-1)*(g^2 + b1*g)`.
    pub fn describe(&self, gens: &[IntPoly]) -> String {
        if self.combiners.is_empty() {
            return "0".to_owned();
        }
        self.combiners
            .iter()
            .map(|(idx, mult)| format!("({mult})*({})", gens[*idx]))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// An ordered variable list together with homogeneous relations; the
/// shape of both the input ring of the computation and the answer ring.
#[derive(Debug, Clone)]
pub struct RingPresentation {
    pub ring: RingRef,
    pub relations: Vec<IntPoly>,
}

impl RingPresentation {
    pub fn new(ring: &RingRef, relations: Vec<IntPoly>) -> Result<Self, IdealError> {
        for r in &relations {
            if !r.is_homogeneous() {
                return Err(IdealError::NotHomogeneous(r.to_string()));
            }
        }
        Ok(RingPresentation {
            ring: ring.clone(),
            relations,
        })
    }

    /// The input presentation `Z[b1, b2, g] / (2g, g^2 + b1*g)`.
    pub fn classifying_ring() -> Self {
        RingPresentation {
            ring: base_ring().clone(),
            relations: bg_relations(),
        }
    }

    /// Render as `Z[vars]/(relations)` with compact relation strings.
    pub fn display(&self) -> String {
        let vars = self
            .ring
            .vars()
            .iter()
            .map(|v| v.name.as_str())
            .collect::<Vec<_>>()
            .join(",");
        let rels = self
            .relations
            .iter()
            .map(IntPoly::to_compact_string)
            .collect::<Vec<_>>()
            .join(", ");
        format!("Z[{vars}]/({rels})")
    }
}

/// Relations of the classifying ring: `2g` and `g^2 + b1*g`, over the base
/// ring.
pub fn bg_relations() -> Vec<IntPoly> {
    let ring = base_ring();
    vec![
        poly(ring, &[(2, &[("g", 1)])]),
        poly(ring, &[(1, &[("g", 2)]), (1, &[("b1", 1), ("g", 1)])]),
    ]
}

/// Decide whether homogeneous `p` lies in the ideal generated by the
/// homogeneous `gens`, producing a certificate on success.
pub fn ideal_member(
    p: &IntPoly,
    gens: &[IntPoly],
) -> Result<Option<MembershipCertificate>, IdealError> {
    let ring = p.ring();
    if p.is_zero() {
        return Ok(Some(MembershipCertificate { combiners: vec![] }));
    }
    if !p.is_homogeneous() {
        return Err(IdealError::NotHomogeneous(p.to_string()));
    }
    if ring.vars().iter().any(|v| v.degree == 0) {
        return Err(IdealError::NonPositiveWeight);
    }
    for g in gens {
        if g.ring() != ring {
            return Err(IdealError::RingMismatch);
        }
        if !g.is_homogeneous() {
            return Err(IdealError::NotHomogeneous(g.to_string()));
        }
    }

    let d = p.degree().expect("nonzero");
    let basis = ring.monomials_of_degree(d);
    let index: std::collections::HashMap<&[u16], usize> = basis
        .iter()
        .enumerate()
        .map(|(i, m)| (m.as_slice(), i))
        .collect();

    let mut columns: Vec<Vec<BigInt>> = Vec::new();
    let mut column_meta: Vec<(usize, IntPoly)> = Vec::new();
    for (gi, gen) in gens.iter().enumerate() {
        let Some(dg) = gen.degree() else { continue };
        if dg > d {
            continue;
        }
        for mult in ring.monomials_of_degree(d - dg) {
            let mult_poly = IntPoly::from_terms(ring, [(mult.clone(), BigInt::from(1))]);
            let prod = &mult_poly * gen;
            let mut col = vec![BigInt::zero(); basis.len()];
            for (m, c) in prod.terms() {
                col[index[m.as_slice()]] = c.clone();
            }
            columns.push(col);
            column_meta.push((gi, mult_poly));
        }
    }

    let mut target = vec![BigInt::zero(); basis.len()];
    for (m, c) in p.terms() {
        target[index[m.as_slice()]] = c.clone();
    }

    let Some(solution) = solve_integer_columns(basis.len(), &columns, &target) else {
        return Ok(None);
    };

    let mut per_gen: std::collections::BTreeMap<usize, IntPoly> = Default::default();
    for (x, (gi, mult)) in solution.iter().zip(&column_meta) {
        if x.is_zero() {
            continue;
        }
        let entry = per_gen.entry(*gi).or_insert_with(|| IntPoly::zero(ring));
        *entry = &*entry + &mult.scaled(x);
    }
    let cert = MembershipCertificate {
        combiners: per_gen.into_iter().collect(),
    };
    // a certificate that does not replay is a solver bug, not an input error
    assert_eq!(&cert.replay(gens, ring), p, "certificate replay mismatch");
    Ok(Some(cert))
}

/// Two-way generator membership between ideals, with all certificates
/// retained.
#[derive(Debug, Clone)]
pub struct IdealEquality {
    /// For each generator of the first list: its membership in the second
    /// ideal.
    pub forward: Vec<Option<MembershipCertificate>>,
    /// For each generator of the second list: its membership in the first
    /// ideal.
    pub backward: Vec<Option<MembershipCertificate>>,
}

impl IdealEquality {
    pub fn holds(&self) -> bool {
        self.forward.iter().all(Option::is_some) && self.backward.iter().all(Option::is_some)
    }

    /// Indices of generators whose membership failed, as
    /// `(direction, index)` with direction `0` = forward, `1` = backward.
    pub fn failures(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, c) in self.forward.iter().enumerate() {
            if c.is_none() {
                out.push((0, i));
            }
        }
        for (i, c) in self.backward.iter().enumerate() {
            if c.is_none() {
                out.push((1, i));
            }
        }
        out
    }
}

pub fn ideal_equal(gens_a: &[IntPoly], gens_b: &[IntPoly]) -> Result<IdealEquality, IdealError> {
    let forward = gens_a
        .iter()
        .map(|a| ideal_member(a, gens_b))
        .collect::<Result<Vec<_>, _>>()?;
    let backward = gens_b
        .iter()
        .map(|b| ideal_member(b, gens_a))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(IdealEquality { forward, backward })
}

/// `a == b` modulo the ideal generated by `gens`.
pub fn equal_mod(a: &IntPoly, b: &IntPoly, gens: &[IntPoly]) -> Result<bool, IdealError> {
    let diff = a - b;
    if diff.is_zero() {
        return Ok(true);
    }
    Ok(ideal_member(&diff, gens)?.is_some())
}

/// Inhomogeneous polynomials compared degreewise modulo `gens`.
pub fn equal_mod_degreewise(
    a: &IntPoly,
    b: &IntPoly,
    gens: &[IntPoly],
) -> Result<bool, IdealError> {
    let diff = a - b;
    if diff.is_zero() {
        return Ok(true);
    }
    let top = diff.degree().expect("nonzero");
    for d in 0..=top {
        let piece = diff.component(d);
        if piece.is_zero() {
            continue;
        }
        if ideal_member(&piece, gens)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Solve `A x = v` over the integers, `A` given by columns of length `m`.
///
/// Runs a column-style Hermite reduction `A U = H` with unimodular `U`,
/// forward-solves the staircase system `H y = v`, and maps back through
/// `U`. Returns `None` when no integer solution exists.
#[allow(clippy::needless_range_loop)] // paired column updates index two buffers
fn solve_integer_columns(m: usize, columns: &[Vec<BigInt>], v: &[BigInt]) -> Option<Vec<BigInt>> {
    let n = columns.len();
    let mut w: Vec<Vec<BigInt>> = columns.to_vec();
    let mut u: Vec<Vec<BigInt>> = (0..n)
        .map(|j| {
            let mut col = vec![BigInt::zero(); n];
            col[j] = BigInt::from(1);
            col
        })
        .collect();

    let mut pivot_of_row: Vec<Option<usize>> = vec![None; m];
    let mut next = 0usize;
    for row in 0..m {
        if next >= n {
            break;
        }
        loop {
            let jmin = (next..n)
                .filter(|&j| !w[j][row].is_zero())
                .min_by_key(|&j| w[j][row].abs());
            let Some(jmin) = jmin else { break };
            w.swap(jmin, next);
            u.swap(jmin, next);
            let mut leftover = false;
            for j in next + 1..n {
                if w[j][row].is_zero() {
                    continue;
                }
                let q = &w[j][row] / &w[next][row];
                if !q.is_zero() {
                    for i in 0..m {
                        let t = &q * &w[next][i];
                        w[j][i] -= t;
                    }
                    for i in 0..n {
                        let t = &q * &u[next][i];
                        u[j][i] -= t;
                    }
                }
                if !w[j][row].is_zero() {
                    leftover = true;
                }
            }
            if !leftover {
                break;
            }
        }
        if next < n && !w[next][row].is_zero() {
            if w[next][row].is_negative() {
                for i in 0..m {
                    w[next][i] = -w[next][i].clone();
                }
                for i in 0..n {
                    u[next][i] = -u[next][i].clone();
                }
            }
            pivot_of_row[row] = Some(next);
            next += 1;
        }
    }

    let mut residual = v.to_vec();
    let mut y = vec![BigInt::zero(); n];
    for row in 0..m {
        match pivot_of_row[row] {
            Some(col) => {
                let (q, r) = {
                    let q = &residual[row] / &w[col][row];
                    let r = &residual[row] - &q * &w[col][row];
                    (q, r)
                };
                if !r.is_zero() {
                    return None;
                }
                if !q.is_zero() {
                    for i in row..m {
                        let t = &q * &w[col][i];
                        residual[i] -= t;
                    }
                    y[col] = q;
                }
            }
            None => {
                if !residual[row].is_zero() {
                    return None;
                }
            }
        }
    }

    let mut x = vec![BigInt::zero(); n];
    for (col, yc) in y.iter().enumerate() {
        if yc.is_zero() {
            continue;
        }
        for i in 0..n {
            let t = yc * &u[col][i];
            x[i] += t;
        }
    }
    Some(x)
}
