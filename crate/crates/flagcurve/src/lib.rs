//! Exact-arithmetic toolkit for flag-convex curves in the lower-unitriangular
//! group Lo¹_n.
//!
//! The library is organized in four layers:
//!
//! * [`exactnum`] — rationals, univariate polynomials, polynomial matrices,
//!   and certified real-root counting/isolation (Sturm chains, no floats).
//! * [`curve`] — polynomial curves Γ(t) = L₀·exp(tN₀), their southwest minors
//!   m_k and projected 2×2 minors m_Y, total positivity, thresholds, duality,
//!   and extension of a curve until its endpoints are totally negative/positive.
//! * [`bruhat`] — permutations, Bruhat cells of unitriangular matrices,
//!   multiplicity vectors, construction of "good" matrices whose minors have
//!   all roots real and simple, and itineraries of non-transversality moments.
//! * [`words`] — admissible cyclic words on 2n antipodally paired labels, the
//!   rank function, admissible moves with their ten-type classification,
//!   crossing sequences along a curve, and the rank-monotonicity certificate
//!   bounding the number of zeros of m₂ by 2(n−2).

pub mod bruhat;
pub mod curve;
pub mod exactnum;
pub mod words;
