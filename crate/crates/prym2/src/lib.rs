//! Exact computation of the integral Chow ring of the moduli stack of
//! genus-2 Prym pairs.
//!
//! The stack is the quotient by `G = (Gm x Gm) : Z/2` of the space of
//! binary quartics with no root at `0` or `infinity` and no double root,
//! twisted by `det(V) (x) Gamma`; the input ring is
//! `CH*(BG) = Z[b1, b2, g] / (2g, g^2 + b1*g)`. A torsor argument moves
//! the computation to the projectivization, where the excised locus is
//! covered by an envelope built from multiplication and squaring maps, so
//! its class group is spanned by explicit pushforwards. Excising those
//! pushforwards, the bundle relation, and the torsor substitution
//! `h = b1 + g` leaves the answer ring
//! `Z[l1, l2, g] / (2*l1, 2*g, 8*l2, g^2+l1*g, l1^2+l1*g)`.
//!
//! Every step is exact integer polynomial arithmetic; every claimed
//! vanishing or ideal equality is decided by degreewise Hermite-normal-form
//! lattice solves that produce replayable certificates.

pub mod checks;
pub mod chern;
pub mod ideal;
pub mod pipeline;
pub mod poly;
pub mod proj;
pub mod push;
pub mod report;
