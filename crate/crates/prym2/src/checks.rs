//! The closed registry of runnable checks. Each check re-derives one of
//! the intermediate identities of the computation and compares against
//! its pinned closed form; `theorem` is the final ideal equality.

use std::time::Instant;

use num_bigint::BigInt;

use crate::chern::{chern_component, sym_roots, ChernBasis};
use crate::ideal::ideal_member;
use crate::pipeline::{
    assemble_final_ideal, envelope_vanishing, factoring_redundancy, ph_at_torsor,
    remark_vanishing_cases, target_ideal_gens, verify_theorem, PipelineError,
};
use crate::poly::{base_ring, poly, work_ring, IntPoly};
use crate::proj::{diagonal_class, diagonal_push, h_to_s, ProjError, SClassVec};
use crate::push::{derive_class_xy, finite_subset_derivations, sq_push_basis_table, SqSource};
use crate::report::{CheckResult, TheoremReport, VerificationReport};

pub const CHECK_IDS: &[&str] = &[
    "diag-pe",
    "diag-psym2",
    "sq-pe",
    "sq-psym2",
    "class-xy",
    "finite-subsets",
    "h-to-s",
    "envelope-generators",
    "envelope-vanishing",
    "remark-vanishing",
    "ph-vanishing",
    "factoring-redundancy",
    "theorem",
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownCheck(pub String);

impl std::fmt::Display for UnknownCheck {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "unknown check `{}`; valid ids: {}",
            self.0,
            CHECK_IDS.join(", ")
        )
    }
}

impl std::error::Error for UnknownCheck {}

fn wrap<E: std::fmt::Display>(id: &str, r: Result<CheckResult, E>) -> CheckResult {
    match r {
        Ok(c) => c,
        Err(e) => CheckResult {
            id: id.to_owned(),
            pass: false,
            detail: format!("internal error: {e}"),
        },
    }
}

pub fn run_check(id: &str) -> Result<CheckResult, UnknownCheck> {
    let result = match id {
        "diag-pe" => wrap(id, check_diag_pe()),
        "diag-psym2" => wrap(id, check_diag_psym2()),
        "sq-pe" => wrap(id, check_sq_pe()),
        "sq-psym2" => wrap(id, check_sq_psym2()),
        "class-xy" => wrap(id, check_class_xy()),
        "finite-subsets" => wrap(id, check_finite_subsets()),
        "h-to-s" => wrap(id, check_h_to_s()),
        "envelope-generators" => wrap(id, check_envelope_generators()),
        "envelope-vanishing" => wrap(id, check_envelope_vanishing()),
        "remark-vanishing" => wrap(id, check_remark_vanishing()),
        "ph-vanishing" => wrap(id, check_ph_vanishing()),
        "factoring-redundancy" => wrap(id, check_factoring_redundancy()),
        "theorem" => wrap(id, check_theorem().map(|(c, _)| c)),
        other => return Err(UnknownCheck(other.to_owned())),
    };
    Ok(result)
}

/// Run every registered check plus the theorem; the registry order is the
/// report order.
pub fn run_all() -> VerificationReport {
    let start = Instant::now();
    let mut checks = Vec::new();
    let mut theorem = None;
    for id in CHECK_IDS {
        if *id == "theorem" {
            match check_theorem() {
                Ok((c, t)) => {
                    checks.push(c);
                    theorem = Some(t);
                }
                Err(e) => checks.push(CheckResult {
                    id: (*id).to_owned(),
                    pass: false,
                    detail: format!("internal error: {e}"),
                }),
            }
        } else {
            checks.push(run_check(id).expect("registry id"));
        }
    }
    VerificationReport {
        version: env!("CARGO_PKG_VERSION").to_owned(),
        checks,
        theorem,
        timing_ms: start.elapsed().as_millis() as u64,
    }
}

fn cpoly(terms: &[(i64, &[(&str, u16)])]) -> IntPoly {
    poly(work_ring(), terms)
}

fn svec(r: usize, coeffs: Vec<IntPoly>) -> SClassVec {
    SClassVec::from_coeffs(r, coeffs)
}

fn zero() -> IntPoly {
    IntPoly::zero(work_ring())
}

fn pass(id: &str, detail: String) -> CheckResult {
    CheckResult {
        id: id.to_owned(),
        pass: true,
        detail,
    }
}

fn fail(id: &str, detail: String) -> CheckResult {
    CheckResult {
        id: id.to_owned(),
        pass: false,
        detail,
    }
}

fn check_diag_pe() -> Result<CheckResult, ProjError> {
    let spec = sym_roots(1, false);
    let diag = diagonal_class(&spec)?;
    let expected = cpoly(&[(1, &[("h1", 1)]), (1, &[("h2", 1)]), (1, &[("c1", 1)])]);
    if diag.poly != expected {
        return Ok(fail(
            "diag-pe",
            format!("diagonal class is {}, expected {}", diag.poly, expected),
        ));
    }
    let push1 = diagonal_push(&spec, 1)?;
    let expected1 = cpoly(&[(1, &[("h1", 1), ("h2", 1)]), (-1, &[("c2", 1)])]);
    if push1.poly != expected1 {
        return Ok(fail(
            "diag-pe",
            format!("push of h is {}, expected {}", push1.poly, expected1),
        ));
    }
    Ok(pass(
        "diag-pe",
        format!("[diag] = {}; h |-> {}", diag.poly, push1.poly),
    ))
}

fn check_diag_psym2() -> Result<CheckResult, ProjError> {
    let spec = sym_roots(2, false);
    let diag = diagonal_class(&spec)?;
    let expected = cpoly(&[
        (1, &[("h1", 2)]),
        (1, &[("h1", 1), ("h2", 1)]),
        (1, &[("h2", 2)]),
        (3, &[("c1", 1), ("h1", 1)]),
        (3, &[("c1", 1), ("h2", 1)]),
        (2, &[("c1", 2)]),
        (4, &[("c2", 1)]),
    ]);
    if diag.poly != expected {
        return Ok(fail(
            "diag-psym2",
            format!("diagonal class is {}, expected {}", diag.poly, expected),
        ));
    }
    let push1 = diagonal_push(&spec, 1)?;
    let expected1 = cpoly(&[
        (1, &[("h1", 2), ("h2", 1)]),
        (1, &[("h1", 1), ("h2", 2)]),
        (3, &[("c1", 1), ("h1", 1), ("h2", 1)]),
        (-4, &[("c1", 1), ("c2", 1)]),
    ]);
    let push2 = diagonal_push(&spec, 2)?;
    let expected2 = cpoly(&[
        (1, &[("h1", 2), ("h2", 2)]),
        (-2, &[("c1", 2), ("h1", 1), ("h2", 1)]),
        (-4, &[("c2", 1), ("h1", 1), ("h2", 1)]),
        (-4, &[("c1", 1), ("c2", 1), ("h1", 1)]),
        (-4, &[("c1", 1), ("c2", 1), ("h2", 1)]),
    ]);
    if push1.poly != expected1 || push2.poly != expected2 {
        return Ok(fail(
            "diag-psym2",
            format!(
                "pushes h |-> {} (expected {}), h^2 |-> {} (expected {})",
                push1.poly, expected1, push2.poly, expected2
            ),
        ));
    }
    Ok(pass(
        "diag-psym2",
        "diagonal class and pushes of 1, h, h^2 match their closed forms".to_owned(),
    ))
}

fn sq_expected(source: SqSource) -> Vec<SClassVec> {
    match source {
        SqSource::PLine => vec![
            // s_1^0 -> 2 s_2^1 + 2 c1
            svec(
                2,
                vec![cpoly(&[(2, &[("c1", 1)])]), cpoly(&[(2, &[])]), zero()],
            ),
            // s_1^1 -> s_2^2 - 2 c2
            svec(
                2,
                vec![cpoly(&[(-2, &[("c2", 1)])]), zero(), cpoly(&[(1, &[])])],
            ),
        ],
        SqSource::PSym2 => vec![
            // s_2^0 -> 4 s_4^2 + 12 c1 s_4^1 + 12 c1^2
            svec(
                4,
                vec![
                    cpoly(&[(12, &[("c1", 2)])]),
                    cpoly(&[(12, &[("c1", 1)])]),
                    cpoly(&[(4, &[])]),
                    zero(),
                    zero(),
                ],
            ),
            // s_2^1 -> 2 s_4^3 + 2 c1 s_4^2 - 12 c2 s_4^1 - 24 c1 c2
            svec(
                4,
                vec![
                    cpoly(&[(-24, &[("c1", 1), ("c2", 1)])]),
                    cpoly(&[(-12, &[("c2", 1)])]),
                    cpoly(&[(2, &[("c1", 1)])]),
                    cpoly(&[(2, &[])]),
                    zero(),
                ],
            ),
            // s_2^2 -> s_4^4 - 4 c2 s_4^2 + 24 c2^2
            svec(
                4,
                vec![
                    cpoly(&[(24, &[("c2", 2)])]),
                    zero(),
                    cpoly(&[(-4, &[("c2", 1)])]),
                    zero(),
                    cpoly(&[(1, &[])]),
                ],
            ),
        ],
    }
}

fn check_sq(source: SqSource, id: &'static str) -> Result<CheckResult, PipelineError> {
    let table = sq_push_basis_table(source)?;
    let expected = sq_expected(source);
    let src = match source {
        SqSource::PLine => 1,
        SqSource::PSym2 => 2,
    };
    for (j, (got, want)) in table.iter().zip(&expected).enumerate() {
        if got != want {
            return Ok(fail(
                id,
                format!("sq(s_{src}^{j}) = {got}, expected {want}"),
            ));
        }
    }
    Ok(pass(
        id,
        format!(
            "{} squaring lines reproduced through the diagonal composition",
            expected.len()
        ),
    ))
}

fn check_sq_pe() -> Result<CheckResult, PipelineError> {
    check_sq(SqSource::PLine, "sq-pe")
}

fn check_sq_psym2() -> Result<CheckResult, PipelineError> {
    check_sq(SqSource::PSym2, "sq-psym2")
}

fn check_class_xy() -> Result<CheckResult, PipelineError> {
    let d = derive_class_xy()?;
    if !d.chern_class_matches {
        return Ok(fail(
            "class-xy",
            format!(
                "total class of the twisted bundle is {}, not congruent to {}",
                d.total_chern_twisted, d.reduced_reference
            ),
        ));
    }
    if !d.excess_vanishes {
        return Ok(fail(
            "class-xy",
            format!("degree-3 excess {} does not vanish", d.excess),
        ));
    }
    if !d.matches_table {
        return Ok(fail(
            "class-xy",
            format!("derived class {} disagrees with the table", d.derived),
        ));
    }
    Ok(pass("class-xy", format!("c2 route gives {}", d.derived)))
}

fn check_finite_subsets() -> Result<CheckResult, PipelineError> {
    let ds = finite_subset_derivations()?;
    let mut all_pass = true;
    let mut lines = vec![format!(
        "{} point classes rebuilt from the recipes",
        ds.len()
    )];
    for d in &ds {
        if d.matches {
            lines.push(format!("  {}: PASS  [{}]", d.label.as_str(), d.expected));
        } else {
            all_pass = false;
            lines.push(format!(
                "  {}: FAIL  derived {}, expected {} (difference {})",
                d.label.as_str(),
                d.derived,
                d.expected,
                d.difference
            ));
        }
    }
    let detail = lines.join("\n");
    Ok(if all_pass {
        pass("finite-subsets", detail)
    } else {
        fail("finite-subsets", detail)
    })
}

fn check_h_to_s() -> Result<CheckResult, ProjError> {
    // the three displayed inversion identities
    let ring = work_ring();
    let v32 = h_to_s(3, 3)?;
    let expected: Vec<IntPoly> = vec![
        cpoly(&[(3, &[("c1", 1), ("c2", 1)])]),
        cpoly(&[(1, &[("c1", 2)]), (-7, &[("c2", 1)])]),
        cpoly(&[(-3, &[("c1", 1)])]),
        cpoly(&[(1, &[])]),
    ];
    for (j, want) in expected.iter().enumerate() {
        if v32.coeff(j) != want {
            return Ok(fail(
                "h-to-s",
                format!(
                    "h^3 on Sym^3: s^{j} coefficient {} != {}",
                    v32.coeff(j),
                    want
                ),
            ));
        }
    }
    // roundtrips
    let h = IntPoly::var(ring, "h");
    for r in 1..=4usize {
        for k in 0..=r {
            let v = h_to_s(r, k)?;
            let back = v.to_h_poly(ChernBasis::AbstractC);
            if back != h.pow(k as u32) {
                return Ok(fail(
                    "h-to-s",
                    format!("roundtrip failed for h^{k} on Sym^{r}: got {back}"),
                ));
            }
        }
    }
    // rejection outside the available range
    if h_to_s(2, 3).is_ok() {
        return Ok(fail(
            "h-to-s",
            "h^3 must have no expansion on Sym^2".to_owned(),
        ));
    }
    Ok(pass(
        "h-to-s",
        "inversion table matches closed forms; 14 roundtrips exact".to_owned(),
    ))
}

fn check_envelope_generators() -> Result<CheckResult, PipelineError> {
    // the three elements that generate the interesting part of the ideal
    let r = base_ring();
    let elements = [
        ("2*b1", poly(r, &[(2, &[("b1", 1)])])),
        ("8*b2", poly(r, &[(8, &[("b2", 1)])])),
        (
            "b1^2+b1*g",
            poly(r, &[(1, &[("b1", 2)]), (1, &[("b1", 1), ("g", 1)])]),
        ),
    ];
    let assembled = assemble_final_ideal()?;
    let gens = assembled.gens();
    for (name, e) in &elements {
        if ideal_member(e, &gens)?.is_none() {
            return Ok(fail(
                "envelope-generators",
                format!("{name} is not in the assembled ideal"),
            ));
        }
    }
    Ok(pass(
        "envelope-generators",
        "2*b1, 8*b2, b1^2+b1*g all reachable from the assembled generators".to_owned(),
    ))
}

fn check_envelope_vanishing() -> Result<CheckResult, PipelineError> {
    let lines = envelope_vanishing()?;
    let failures: Vec<_> = lines.iter().filter(|l| !l.holds()).collect();
    if let Some(first) = failures.first() {
        return Ok(fail(
            "envelope-vanishing",
            format!(
                "{} of {} pushforwards outside the target ideal; first: {} = {}",
                failures.len(),
                lines.len(),
                first.provenance,
                first.element
            ),
        ));
    }
    Ok(pass(
        "envelope-vanishing",
        format!(
            "{} substituted pushforwards lie in the target ideal",
            lines.len()
        ),
    ))
}

fn check_remark_vanishing() -> Result<CheckResult, PipelineError> {
    let cases = remark_vanishing_cases()?;
    let failures: Vec<_> = cases.iter().filter(|l| !l.holds()).collect();
    if let Some(first) = failures.first() {
        return Ok(fail(
            "remark-vanishing",
            format!(
                "{} of {} covered products escape the ideal; first: {} = {}",
                failures.len(),
                cases.len(),
                first.provenance,
                first.element
            ),
        ));
    }
    Ok(pass(
        "remark-vanishing",
        format!("{} covered products vanish in the quotient", cases.len()),
    ))
}

fn check_ph_vanishing() -> Result<CheckResult, PipelineError> {
    let ph = ph_at_torsor()?;
    let target = target_ideal_gens();
    let Some(cert) = ideal_member(&ph, &target)? else {
        return Ok(fail(
            "ph-vanishing",
            format!("P(b1+g) = {ph} is not in the target ideal"),
        ));
    };

    // supporting divisibility facts, as exact polynomial statements
    let spec = sym_roots(4, true);
    let c5 = chern_component(&spec, 5, ChernBasis::BetaGamma)?;
    let c4 = chern_component(&spec, 4, ChernBasis::BetaGamma)?;
    let ring = work_ring();
    let mut b1_mono = vec![0u16; ring.len()];
    b1_mono[ring.index_of("b1")?] = 1;
    if c5.div_exact_term(&BigInt::from(2), &b1_mono).is_none() {
        return Ok(fail(
            "ph-vanishing",
            format!("c5 = {c5} is not divisible by 2*b1"),
        ));
    }
    let unit = vec![0u16; ring.len()];
    if c4.div_exact_term(&BigInt::from(2), &unit).is_none() {
        return Ok(fail(
            "ph-vanishing",
            format!("c4 = {c4} has an odd coefficient, so 2h does not divide h*c4"),
        ));
    }
    // h^2 itself dies under the substitution
    let h_sub = cpoly(&[(1, &[("b1", 1)]), (1, &[("g", 1)])]);
    let h2_direct = (&h_sub * &h_sub).into_ring(base_ring())?;
    if ideal_member(&h2_direct, &target)?.is_none() {
        return Ok(fail(
            "ph-vanishing",
            format!("(b1+g)^2 = {h2_direct} is not in the target ideal"),
        ));
    }
    Ok(pass(
        "ph-vanishing",
        format!(
            "P(b1+g) vanishes; 2*b1 | c5 and 2 | c4 hold exactly\n  witness: P(b1+g) = {}",
            cert.describe(&target)
        ),
    ))
}

fn check_factoring_redundancy() -> Result<CheckResult, PipelineError> {
    let lines = factoring_redundancy()?;
    let failures: Vec<_> = lines.iter().filter(|l| !l.holds()).collect();
    if let Some(first) = failures.first() {
        return Ok(fail(
            "factoring-redundancy",
            format!(
                "{} pushforwards through p22/p32 escape the assembled ideal; first: {}",
                failures.len(),
                first.provenance
            ),
        ));
    }
    Ok(pass(
        "factoring-redundancy",
        format!(
            "{} pushforwards through p22/p32 already lie in the assembled ideal",
            lines.len()
        ),
    ))
}

fn check_theorem() -> Result<(CheckResult, TheoremReport), PipelineError> {
    let outcome = verify_theorem()?;
    let computed: Vec<String> = outcome
        .assembled
        .generators
        .iter()
        .map(|(src, p)| format!("{p}  [{src}]"))
        .collect();
    let target: Vec<String> = target_ideal_gens().iter().map(|p| p.to_string()).collect();
    let report = TheoremReport {
        verified: outcome.verified,
        computed_generators: computed,
        target_generators: target,
        presentation: outcome.presentation.clone(),
    };
    let check = if outcome.verified {
        pass(
            "theorem",
            "two-way generator membership certified; relabeling to Hodge classes consistent"
                .to_owned(),
        )
    } else {
        let mut failing = Vec::new();
        for (dir, idx) in outcome.equality.failures() {
            let poly = if dir == 0 {
                outcome.assembled.generators[idx].1.to_string()
            } else {
                target_ideal_gens()[idx].to_string()
            };
            let arrow = if dir == 0 {
                "assembled generator not in target"
            } else {
                "target generator not in assembled"
            };
            failing.push(format!("{arrow}: {poly}"));
        }
        fail("theorem", failing.join("; "))
    };
    Ok((check, report))
}

/// Run a single check and wrap it in a report envelope.
pub fn run_single(id: &str) -> Result<VerificationReport, UnknownCheck> {
    let start = Instant::now();
    let mut theorem = None;
    let check = if id == "theorem" {
        match check_theorem() {
            Ok((c, t)) => {
                theorem = Some(t);
                c
            }
            Err(e) => CheckResult {
                id: id.to_owned(),
                pass: false,
                detail: format!("internal error: {e}"),
            },
        }
    } else {
        run_check(id)?
    };
    Ok(VerificationReport {
        version: env!("CARGO_PKG_VERSION").to_owned(),
        checks: vec![check],
        theorem,
        timing_ms: start.elapsed().as_millis() as u64,
    })
}
