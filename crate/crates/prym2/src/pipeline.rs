//! Assembly of the excision ideal from the envelope pushforwards and the
//! verification of the final presentation.
//!
//! The open part's ring is the ambient ring modulo the classes pushed
//! forward from the complement. The complement is covered by an envelope
//! with components indexed below; pushing the full `s`-basis of each
//! component's domain into `P(Sym^4)` and substituting the torsor relation
//! `h = b1 + g` yields generators in `Z[b1, b2, g]`. The computation then
//! reduces to one exact ideal equality.

use num_bigint::BigInt;
use thiserror::Error;

use crate::chern::{sym_roots, ChernBasis, ChernError};
use crate::ideal::{
    bg_relations, ideal_equal, ideal_member, IdealEquality, IdealError, MembershipCertificate,
    RingPresentation,
};
use crate::poly::{base_ring, lambda_ring, poly, work_ring, IntPoly, PolyError};
use crate::proj::{proj_relation, ProjError, SClassVec};
use crate::push::{
    class_x_y, class_xy, mult_push, sq_push, subset_table, PushError, SqSource, SubsetLabel,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PipelineError {
    #[error("remark preconditions not met for alpha={alpha}, a={a}, a'={a_}, b'={b_}")]
    RemarkConditionNotMet {
        alpha: String,
        a: usize,
        a_: usize,
        b_: usize,
    },
    #[error(transparent)]
    Push(#[from] PushError),
    #[error(transparent)]
    Proj(#[from] ProjError),
    #[error(transparent)]
    Chern(#[from] ChernError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Components of the envelope of the excised locus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComponentId {
    P11,
    P12,
    P21,
    P22,
    P23,
    P31,
    P32,
    P4,
}

impl ComponentId {
    pub fn as_str(self) -> &'static str {
        match self {
            ComponentId::P11 => "p11",
            ComponentId::P12 => "p12",
            ComponentId::P21 => "p21",
            ComponentId::P22 => "p22",
            ComponentId::P23 => "p23",
            ComponentId::P31 => "p31",
            ComponentId::P32 => "p32",
            ComponentId::P4 => "p4",
        }
    }
}

#[derive(Debug, Clone)]
pub struct EnvelopeComponent {
    pub id: ComponentId,
    /// What the component does, in terms of the two primitive maps.
    pub procedure: &'static str,
    /// Present on components whose image is already covered by another.
    pub skip_reason: Option<&'static str>,
}

pub fn envelope_components() -> Vec<EnvelopeComponent> {
    vec![
        EnvelopeComponent {
            id: ComponentId::P11,
            procedure: "(F, G) -> F^2 G : mult(sq(s_1^i), s_2^j)",
            skip_reason: None,
        },
        EnvelopeComponent {
            id: ComponentId::P12,
            procedure: "(F, G) -> F G, G in {X, Y} : mult(s_3^i, [{X,Y}])",
            skip_reason: None,
        },
        EnvelopeComponent {
            id: ComponentId::P21,
            procedure: "F -> F^2 : sq(s_2^j)",
            skip_reason: None,
        },
        EnvelopeComponent {
            id: ComponentId::P22,
            procedure: "(F1, F2, G) -> F1^2 F2 G, G in {X, Y}",
            skip_reason: Some("factors through p11"),
        },
        EnvelopeComponent {
            id: ComponentId::P23,
            procedure: "(F, G) -> F G, G in {X^2, Y^2, XY} : mult(s_2^j, [{X^2,Y^2}] and [{XY}])",
            skip_reason: None,
        },
        EnvelopeComponent {
            id: ComponentId::P31,
            procedure:
                "(F, G) -> F G, G in {X^3, Y^3, X^2Y, XY^2} : mult(s_1^i, [{X^3,Y^3}] and [{X^2Y,XY^2}])",
            skip_reason: None,
        },
        EnvelopeComponent {
            id: ComponentId::P32,
            procedure: "(F, G) -> F^2 G, G in {X^2, Y^2, XY}",
            skip_reason: Some("factors through p11"),
        },
        EnvelopeComponent {
            id: ComponentId::P4,
            procedure: "inclusion of {X^4, Y^4, X^3Y, XY^3, X^2Y^2} : point classes",
            skip_reason: None,
        },
    ]
}

/// One pushforward into `P(Sym^4)`, with its provenance.
#[derive(Debug, Clone)]
pub struct Pushforward {
    pub component: ComponentId,
    pub basis: String,
    pub class: SClassVec,
}

fn subset(label: SubsetLabel) -> SClassVec {
    match label {
        SubsetLabel::X_Y => class_x_y().value,
        SubsetLabel::XY => class_xy().value,
        other => {
            subset_table()
                .into_iter()
                .find(|c| c.label == other)
                .expect("composite label")
                .value
        }
    }
}

/// Pushforwards of the full `s`-basis of every non-skipped envelope
/// component, in a fixed order. All coefficients are concrete base
/// classes (the squaring tables are rewritten via `c1 -> -b1, c2 -> b2`).
pub fn envelope_pushforwards() -> Result<Vec<Pushforward>, PipelineError> {
    let mut out = Vec::new();

    // p11: mult(sq(s_1^i), s_2^j)
    for i in 0..=1usize {
        let squared = sq_push(SqSource::PLine, &SClassVec::basis(1, i)?)?.c_to_beta();
        for j in 0..=2usize {
            out.push(Pushforward {
                component: ComponentId::P11,
                basis: format!("s_1^{i} (x) s_2^{j}"),
                class: mult_push(&squared, &SClassVec::basis(2, j)?)?,
            });
        }
    }

    // p12: mult(s_3^i, [{X,Y}])
    let x_y = subset(SubsetLabel::X_Y);
    for i in 0..=3usize {
        out.push(Pushforward {
            component: ComponentId::P12,
            basis: format!("s_3^{i} (x) {}", SubsetLabel::X_Y.as_str()),
            class: mult_push(&SClassVec::basis(3, i)?, &x_y)?,
        });
    }

    // p21: sq(s_2^j)
    for j in 0..=2usize {
        out.push(Pushforward {
            component: ComponentId::P21,
            basis: format!("s_2^{j}"),
            class: sq_push(SqSource::PSym2, &SClassVec::basis(2, j)?)?.c_to_beta(),
        });
    }

    // p23: mult(s_2^j, [{X^2,Y^2}]) and mult(s_2^j, [{XY}])
    for label in [SubsetLabel::X2_Y2, SubsetLabel::XY] {
        let cls = subset(label);
        for j in 0..=2usize {
            out.push(Pushforward {
                component: ComponentId::P23,
                basis: format!("s_2^{j} (x) {}", label.as_str()),
                class: mult_push(&SClassVec::basis(2, j)?, &cls)?,
            });
        }
    }

    // p31: mult(s_1^i, [{X^3,Y^3}]) and mult(s_1^i, [{X^2Y,XY^2}])
    for label in [SubsetLabel::X3_Y3, SubsetLabel::X2Y_XY2] {
        let cls = subset(label);
        for i in 0..=1usize {
            out.push(Pushforward {
                component: ComponentId::P31,
                basis: format!("s_1^{i} (x) {}", label.as_str()),
                class: mult_push(&SClassVec::basis(1, i)?, &cls)?,
            });
        }
    }

    // p4: the three point classes on Sym^4
    for label in [SubsetLabel::X4_Y4, SubsetLabel::X3Y_XY3, SubsetLabel::X2Y2] {
        out.push(Pushforward {
            component: ComponentId::P4,
            basis: label.as_str().to_owned(),
            class: subset(label),
        });
    }

    Ok(out)
}

/// The torsor substitution class `b1 + g` in the working ring.
fn torsor_class() -> IntPoly {
    poly(work_ring(), &[(1, &[("b1", 1)]), (1, &[("g", 1)])])
}

/// Expand a class on `P(Sym^4)` into powers of `h`, substitute
/// `h = b1 + g`, and land in the base ring.
pub fn substitute_pushforward(class: &SClassVec) -> Result<IntPoly, PipelineError> {
    let h_poly = class.to_h_poly(ChernBasis::BetaGamma);
    let substituted = h_poly.substitute("h", &torsor_class())?;
    Ok(substituted.into_ring(base_ring())?)
}

/// The bundle relation of `P(Sym^4(V^dual))` evaluated at `h = b1 + g`.
pub fn ph_at_torsor() -> Result<IntPoly, PipelineError> {
    let rel = proj_relation(&sym_roots(4, true), ChernBasis::BetaGamma)?;
    Ok(rel
        .substitute("h", &torsor_class())?
        .into_ring(base_ring())?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneratorSource {
    BgRelation,
    ProjRelation,
    Envelope {
        component: ComponentId,
        basis: String,
    },
}

impl std::fmt::Display for GeneratorSource {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GeneratorSource::BgRelation => write!(f, "BG relation"),
            GeneratorSource::ProjRelation => write!(f, "P(h)"),
            GeneratorSource::Envelope { component, basis } => {
                write!(f, "{}: {}", component.as_str(), basis)
            }
        }
    }
}

/// The assembled relation ideal of the open part, over the base ring.
#[derive(Debug, Clone)]
pub struct ExcisionIdeal {
    pub generators: Vec<(GeneratorSource, IntPoly)>,
}

impl ExcisionIdeal {
    pub fn gens(&self) -> Vec<IntPoly> {
        self.generators.iter().map(|(_, p)| p.clone()).collect()
    }

    pub fn without_component(&self, id: ComponentId) -> ExcisionIdeal {
        ExcisionIdeal {
            generators: self
                .generators
                .iter()
                .filter(|(src, _)| {
                    !matches!(src, GeneratorSource::Envelope { component, .. } if *component == id)
                })
                .cloned()
                .collect(),
        }
    }

    pub fn without_proj_relation(&self) -> ExcisionIdeal {
        ExcisionIdeal {
            generators: self
                .generators
                .iter()
                .filter(|(src, _)| *src != GeneratorSource::ProjRelation)
                .cloned()
                .collect(),
        }
    }

    pub fn without_bg_relation(&self, index: usize) -> ExcisionIdeal {
        let mut seen = 0usize;
        ExcisionIdeal {
            generators: self
                .generators
                .iter()
                .filter(|(src, _)| {
                    if *src == GeneratorSource::BgRelation {
                        let keep = seen != index;
                        seen += 1;
                        keep
                    } else {
                        true
                    }
                })
                .cloned()
                .collect(),
        }
    }
}

/// Generators of the expected answer ideal in the base variables:
/// `(2g, 2b1, 8b2, g^2 + b1*g, b1^2 + b1*g)`.
pub fn target_ideal_gens() -> Vec<IntPoly> {
    let r = base_ring();
    vec![
        poly(r, &[(2, &[("g", 1)])]),
        poly(r, &[(2, &[("b1", 1)])]),
        poly(r, &[(8, &[("b2", 1)])]),
        poly(r, &[(1, &[("g", 2)]), (1, &[("b1", 1), ("g", 1)])]),
        poly(r, &[(1, &[("b1", 2)]), (1, &[("b1", 1), ("g", 1)])]),
    ]
}

/// Displayed generators of the answer in the Hodge-class variables:
/// `(2l1, 2g, 8l2, g^2 + l1*g, l1^2 + l1*g)`.
pub fn lambda_target_gens() -> Vec<IntPoly> {
    let r = lambda_ring();
    vec![
        poly(r, &[(2, &[("l1", 1)])]),
        poly(r, &[(2, &[("g", 1)])]),
        poly(r, &[(8, &[("l2", 1)])]),
        poly(r, &[(1, &[("g", 2)]), (1, &[("l1", 1), ("g", 1)])]),
        poly(r, &[(1, &[("l1", 2)]), (1, &[("l1", 1), ("g", 1)])]),
    ]
}

/// Rename `b_i` to the Hodge classes via `b1 -> -l1`, `b2 -> l2`.
pub fn relabel_to_lambda(p: &IntPoly) -> IntPoly {
    let src = base_ring();
    let dst = lambda_ring();
    let ib1 = src.index_of("b1").expect("base ring");
    let ib2 = src.index_of("b2").expect("base ring");
    let ig = src.index_of("g").expect("base ring");
    let jl1 = dst.index_of("l1").expect("lambda ring");
    let jl2 = dst.index_of("l2").expect("lambda ring");
    let jg = dst.index_of("g").expect("lambda ring");
    let terms = p.terms().map(|(m, c)| {
        let mut m2 = vec![0u16; dst.len()];
        m2[jl1] = m[ib1];
        m2[jl2] = m[ib2];
        m2[jg] = m[ig];
        let sign = if m[ib1] % 2 == 1 { -1 } else { 1 };
        (m2, c * BigInt::from(sign))
    });
    IntPoly::from_terms(dst, terms.collect::<Vec<_>>())
}

/// The answer ring as a presentation: `Z[l1, l2, g]` with the displayed
/// relations.
pub fn answer_presentation() -> RingPresentation {
    RingPresentation::new(lambda_ring(), lambda_target_gens())
        .expect("displayed relations are homogeneous")
}

/// The fixed presentation string of the answer ring.
pub fn presentation_string() -> String {
    answer_presentation().display()
}

/// Assemble the full relation ideal: the two input-ring relations, the
/// bundle relation at `h = b1 + g`, and all envelope pushforwards.
pub fn assemble_final_ideal() -> Result<ExcisionIdeal, PipelineError> {
    let mut generators = Vec::new();
    for rel in bg_relations() {
        generators.push((GeneratorSource::BgRelation, rel));
    }
    generators.push((GeneratorSource::ProjRelation, ph_at_torsor()?));
    for pf in envelope_pushforwards()? {
        let p = substitute_pushforward(&pf.class)?;
        generators.push((
            GeneratorSource::Envelope {
                component: pf.component,
                basis: pf.basis,
            },
            p,
        ));
    }
    Ok(ExcisionIdeal { generators })
}

#[derive(Debug, Clone)]
pub struct TheoremOutcome {
    pub assembled: ExcisionIdeal,
    pub equality: IdealEquality,
    pub verified: bool,
    /// The relabeled target also matches the displayed Hodge-class
    /// generators as an ideal of `Z[l1, l2, g]`.
    pub lambda_consistent: bool,
    pub presentation: String,
}

/// Verify the headline equality and produce the relabeled presentation.
pub fn verify_theorem() -> Result<TheoremOutcome, PipelineError> {
    let assembled = assemble_final_ideal()?;
    verify_theorem_with(assembled)
}

pub fn verify_theorem_with(assembled: ExcisionIdeal) -> Result<TheoremOutcome, PipelineError> {
    let equality = ideal_equal(&assembled.gens(), &target_ideal_gens())?;
    let relabeled: Vec<IntPoly> = target_ideal_gens().iter().map(relabel_to_lambda).collect();
    let lambda_consistent = ideal_equal(&relabeled, &lambda_target_gens())?.holds();
    let verified = equality.holds() && lambda_consistent;
    Ok(TheoremOutcome {
        assembled,
        equality,
        verified,
        lambda_consistent,
        presentation: presentation_string(),
    })
}

/// One membership outcome in the vanishing sweep.
#[derive(Debug, Clone)]
pub struct VanishingLine {
    pub provenance: String,
    pub element: IntPoly,
    pub certificate: Option<MembershipCertificate>,
}

impl VanishingLine {
    pub fn holds(&self) -> bool {
        self.certificate.is_some()
    }
}

/// Every envelope pushforward, substituted, must lie in the target ideal.
pub fn envelope_vanishing() -> Result<Vec<VanishingLine>, PipelineError> {
    let target = target_ideal_gens();
    let mut out = Vec::new();
    for pf in envelope_pushforwards()? {
        let element = substitute_pushforward(&pf.class)?;
        let certificate = ideal_member(&element, &target)?;
        out.push(VanishingLine {
            provenance: format!("{}: {}", pf.component.as_str(), pf.basis),
            element,
            certificate,
        });
    }
    Ok(out)
}

/// `alpha * mult(s_a^{a'}, s_{4-a}^{b'})`, substituted, for every `(a, a',
/// b')` and a small stock of witnesses `alpha`, restricted to the cases
/// where one of the three sufficient conditions holds:
/// `(b1+g) | alpha`, or `a'+b' >= 1` and `2 | alpha`, or `a'+b' >= 3`.
pub fn remark_vanishing_cases() -> Result<Vec<VanishingLine>, PipelineError> {
    let ring = work_ring();
    let witnesses: Vec<(&str, IntPoly)> = vec![
        ("b1+g", torsor_class()),
        ("2", IntPoly::constant(ring, 2)),
        ("2*b1", poly(ring, &[(2, &[("b1", 1)])])),
        ("2*b2", poly(ring, &[(2, &[("b2", 1)])])),
        ("1", IntPoly::one(ring)),
    ];
    let mut out = Vec::new();
    for a in 1..=3usize {
        for a_ in 0..=a {
            for b_ in 0..=(4 - a) {
                for (name, alpha) in &witnesses {
                    match remark_vanishing(alpha, a, a_, b_) {
                        Ok(line) => {
                            let mut line = line;
                            line.provenance =
                                format!("{name} * mult(s_{a}^{a_}, s_{}^{b_})", 4 - a);
                            out.push(line);
                        }
                        Err(PipelineError::RemarkConditionNotMet { .. }) => {}
                        Err(e) => return Err(e),
                    }
                }
            }
        }
    }
    Ok(out)
}

/// A single remark instance; rejects queries not covered by the stated
/// conditions.
pub fn remark_vanishing(
    alpha: &IntPoly,
    a: usize,
    a_: usize,
    b_: usize,
) -> Result<VanishingLine, PipelineError> {
    let ring = work_ring();
    let two = BigInt::from(2);
    let unit = vec![0u16; ring.len()];
    let divisible_by_two = alpha.div_exact_term(&two, &unit).is_some();
    let divisible_by_torsor = divides_poly(&torsor_class(), alpha);
    let cond = divisible_by_torsor || (a_ + b_ >= 1 && divisible_by_two) || (a_ + b_ >= 3);
    if !cond {
        return Err(PipelineError::RemarkConditionNotMet {
            alpha: alpha.to_string(),
            a,
            a_,
            b_,
        });
    }
    let prod = mult_push(&SClassVec::basis(a, a_)?, &SClassVec::basis(4 - a, b_)?)?;
    let element = substitute_pushforward(&prod.scale(alpha))?;
    let certificate = ideal_member(&element, &target_ideal_gens())?;
    Ok(VanishingLine {
        provenance: String::new(),
        element,
        certificate,
    })
}

/// Divisibility of polynomials in the special case needed here: a
/// degree-1 divisor with unit leading coefficient, decided by reduction.
fn divides_poly(divisor: &IntPoly, p: &IntPoly) -> bool {
    if p.is_zero() {
        return true;
    }
    // substitute g -> -b1 (the root of b1 + g); divisor | p iff the image
    // vanishes, because b1 + g is monic linear in g
    let ring = work_ring();
    let minus_b1 = -&IntPoly::var(ring, "b1");
    debug_assert_eq!(divisor, &torsor_class());
    match p.substitute("g", &minus_b1) {
        Ok(image) => image.is_zero(),
        Err(_) => false,
    }
}

/// The two envelope components that factor through `p11`, recomputed
/// directly and checked against the assembled ideal: the skip is harmless.
pub fn factoring_redundancy() -> Result<Vec<VanishingLine>, PipelineError> {
    let assembled = assemble_final_ideal()?;
    let gens = assembled.gens();
    let mut out = Vec::new();

    // p22: (F1, F2, G) -> F1^2 F2 G = mult(sq(s_1^i), mult(s_1^j, [{X,Y}]))
    let x_y = subset(SubsetLabel::X_Y);
    for i in 0..=1usize {
        let squared = sq_push(SqSource::PLine, &SClassVec::basis(1, i)?)?.c_to_beta();
        for j in 0..=1usize {
            let inner = mult_push(&SClassVec::basis(1, j)?, &x_y)?;
            let class = mult_push(&squared, &inner)?;
            let element = substitute_pushforward(&class)?;
            let certificate = ideal_member(&element, &gens)?;
            out.push(VanishingLine {
                provenance: format!("p22: s_1^{i} (x) s_1^{j} (x) {}", SubsetLabel::X_Y.as_str()),
                element,
                certificate,
            });
        }
    }

    // p32: (F, G) -> F^2 G, G in {X^2, Y^2, XY} = mult(sq(s_1^i), [point class])
    for label in [SubsetLabel::X2_Y2, SubsetLabel::XY] {
        let cls = subset(label);
        for i in 0..=1usize {
            let squared = sq_push(SqSource::PLine, &SClassVec::basis(1, i)?)?.c_to_beta();
            let class = mult_push(&squared, &cls)?;
            let element = substitute_pushforward(&class)?;
            let certificate = ideal_member(&element, &gens)?;
            out.push(VanishingLine {
                provenance: format!("p32: s_1^{i} (x) {}", label.as_str()),
                element,
                certificate,
            });
        }
    }

    Ok(out)
}
