#pragma once

#include "pfec/curve.hpp"

namespace pfec {

// A line evaluation hit a zero or pole; the caller re-randomizes its
// auxiliary point and retries.
class pole_error : public error {
public:
    using error::error;
};

// Everything needed to evaluate pairings on E[r] with E defined over F_p and
// the torsion rational over F_{p^k}.
struct PairingContext {
    CurveParams base;   // over F_p
    CurveParams ext;    // same equation over F_{p^k}
    Integer p;
    Integer r;          // prime subgroup order
    unsigned k = 0;     // embedding degree
    Integer base_order; // #E(F_p)
    Integer trace;      // p + 1 - base_order
    Integer ext_order;  // #E(F_{p^k})
    Integer final_exp;  // (p^k - 1) / r
    bool supersingular = false;
    bool has_distortion = false;  // y^2 = x^3 + x with p == 3 mod 4, i^2 = -1 tower
};

// Builds the context: verifies r | #E(F_p), finds the embedding degree,
// constructs F_{p^k} and the lifted curve. Desk scale: p below naive bound.
PairingContext make_pairing_context(const CurveParams& base, const Integer& r,
                                    unsigned k_max = 32,
                                    const Integer& naive_bound = Integer(1000000));

// Least k <= k_max with p^k == 1 mod r, via the order of p in (Z/rZ)*.
unsigned embedding_degree(const Integer& r, const Integer& p, unsigned k_max);

// Chord-or-tangent line through P and Q over the vertical at P+Q, evaluated
// at `at`. Throws pole_error when the evaluation is degenerate.
FieldElement line_value(const CurvePoint& P, const CurvePoint& Q, const CurvePoint& at);

// Miller function f_{n,P} evaluated at `at`.
FieldElement miller(const CurvePoint& P, const CurvePoint& at, const Integer& n);

CurvePoint lift_to_ext(const PairingContext& ctx, const CurvePoint& P);

// Weil pairing on E[r]; retries the auxiliary point internally.
FieldElement weil_pairing(const PairingContext& ctx, const CurvePoint& P, const CurvePoint& Q,
                          Rng& rng);

// Reduced Tate pairing: Eq-style quotient raised to (p^k - 1)/r.
FieldElement tate_pairing(const PairingContext& ctx, const CurvePoint& P, const CurvePoint& Q,
                          Rng& rng);

// Distortion map (x, y) -> (-x, i y) on y^2 = x^3 + x, p == 3 mod 4.
CurvePoint distortion_apply(const PairingContext& ctx, const CurvePoint& P);

// Modified Weil pairing e(P, Q) = e_W(P, phi(Q)) on base-curve points.
FieldElement modified_weil(const PairingContext& ctx, const CurvePoint& P, const CurvePoint& Q,
                           Rng& rng);

// A point of E(F_{p^k})[r] suitable as the second pairing argument.
CurvePoint random_torsion_point(const PairingContext& ctx, Rng& rng);

// MOV reduction: recovers n with Q = n P by mapping to F_{p^k} and solving
// the DLP there with baby-step giant-step.
Integer mov_reduce(const PairingContext& ctx, const CurvePoint& P, const CurvePoint& Q, Rng& rng);

// Baby-step giant-step in the multiplicative group: solve b = a^n, n in [0, order).
Integer bsgs_field(const FieldElement& a, const FieldElement& b, const Integer& order);

// Baby-step giant-step directly on the curve group: solve Q = n P.
Integer bsgs_curve(const CurvePoint& P, const CurvePoint& Q, const Integer& order);

}  // namespace pfec
