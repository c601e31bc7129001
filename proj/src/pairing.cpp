#include "pfec/pairing.hpp"

#include <unordered_map>

namespace pfec {

unsigned embedding_degree(const Integer& r, const Integer& p, unsigned k_max) {
    if (!is_probable_prime(r)) throw error("embedding degree is defined for prime r");
    if (gcd(r, p) != 1) throw error("gcd(r, p) must be 1");
    Integer group = r - 1;
    Integer ord = multiplicative_order(p % r, r, group, factorize(group));
    if (ord > k_max) throw error("no embedding degree within bound");
    return static_cast<unsigned>(ord.get_ui());
}

namespace {

// trace of Frobenius over F_{p^k} from the base trace: t_0 = 2, t_1 = t,
// t_i = t*t_{i-1} - p*t_{i-2}
Integer ext_trace(const Integer& t, const Integer& p, unsigned k) {
    Integer t0 = 2, t1 = t;
    if (k == 0) return t0;
    for (unsigned i = 2; i <= k; ++i) {
        Integer t2 = t * t1 - p * t0;
        t0 = t1;
        t1 = t2;
    }
    return t1;
}

}  // namespace

PairingContext make_pairing_context(const CurveParams& base, const Integer& r, unsigned k_max,
                                    const Integer& naive_bound) {
    if (!base.field().is_prime_field()) throw error("pairing context starts from a prime-field curve");
    PairingContext ctx{base, base, base.field().characteristic(), r, 0, 0, 0, 0, 0};

    GroupInfo info = count_points_naive(base, naive_bound);
    ctx.base_order = info.order;
    ctx.trace = info.trace;
    if (ctx.base_order % r != 0) throw error("r does not divide #E(F_p)");

    ctx.k = embedding_degree(r, ctx.p, k_max);
    ctx.supersingular = (ctx.trace % ctx.p == 0);

    Field ext_field = ctx.k == 1 ? base.field() : Field::extension(base.field(), ctx.k);
    ctx.has_distortion = ctx.supersingular && ctx.k == 2 && ctx.p % 4 == 3 &&
                         base.a() == base.field().one() && base.b().is_zero() &&
                         ext_field.reduction().size() == 3 && ext_field.reduction()[0] == 1 &&
                         ext_field.reduction()[1] == 0;

    FieldElement ea = ext_field.from_integer(base.a().residue());
    FieldElement eb = ext_field.from_integer(base.b().residue());
    ctx.ext = CurveParams(ext_field, ea, eb);

    Integer pk = ext_field.order();
    ctx.ext_order = pk + 1 - ext_trace(ctx.trace, ctx.p, ctx.k);
    if ((pk - 1) % r != 0) throw error("context invariant violated: r does not divide p^k - 1");
    ctx.final_exp = (pk - 1) / r;
    if (ctx.ext_order % (r * r) != 0)
        throw error("full r-torsion is not rational over the chosen extension");
    return ctx;
}

FieldElement line_value(const CurvePoint& P, const CurvePoint& Q, const CurvePoint& at) {
    if (at.is_infinity()) throw pole_error("line evaluated at infinity");
    const Field& f = at.curve().field();

    if (P.is_infinity() && Q.is_infinity()) return f.one();
    if (P.is_infinity()) return at.x() - Q.x();
    if (Q.is_infinity()) return at.x() - P.x();

    const FieldElement& xp = P.x();
    const FieldElement& yp = P.y();
    const FieldElement& xq = Q.x();

    if (xp == xq && (P.y() == -Q.y())) {
        // vertical chord (P + Q = O) or vertical tangent (y = 0)
        FieldElement v = at.x() - xp;
        if (v.is_zero()) throw pole_error("vertical line vanishes at the evaluation point");
        return v;
    }
    FieldElement mu;
    if (P == Q) {
        FieldElement three = f.from_integer(3);
        FieldElement two = f.from_integer(2);
        mu = (three * xp * xp + P.curve().a()) / (two * yp);
    } else {
        mu = (Q.y() - yp) / (xq - xp);
    }
    FieldElement num = at.y() - yp - mu * (at.x() - xp);
    FieldElement den = at.x() + xp + xq - mu * mu;
    if (num.is_zero() || den.is_zero()) throw pole_error("line value degenerate");
    return num / den;
}

FieldElement miller(const CurvePoint& P, const CurvePoint& at, const Integer& n) {
    const Field& f = P.curve().field();
    if (n < 0) throw error("miller expects a nonnegative order");
    if (n <= 1 || P.is_infinity()) return f.one();

    FieldElement acc = f.one();
    CurvePoint T = P;
    long top = static_cast<long>(bit_length(n)) - 2;
    for (long i = top; i >= 0; --i) {
        acc = acc * acc * line_value(T, T, at);
        T = add(T, T);
        if (mpz_tstbit(n.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) {
            acc = acc * line_value(T, P, at);
            T = add(T, P);
        }
        if (acc.is_zero()) throw pole_error("miller accumulator vanished");
    }
    return acc;
}

CurvePoint lift_to_ext(const PairingContext& ctx, const CurvePoint& P) {
    if (P.curve() == ctx.ext) return P;
    if (!(P.curve() == ctx.base)) throw error("point is not on the context base curve");
    if (P.is_infinity()) return CurvePoint::infinity(ctx.ext);
    const Field& f = ctx.ext.field();
    return CurvePoint::affine(ctx.ext, f.from_integer(P.x().residue()),
                              f.from_integer(P.y().residue()));
}

namespace {

FieldElement weil_once(const PairingContext& ctx, const CurvePoint& P, const CurvePoint& Q,
                       const CurvePoint& S) {
    // e_W(P,Q) = [f_P(Q+S) / f_P(S)] / [f_Q(P-S) / f_Q(-S)]
    FieldElement fp_num = miller(P, add(Q, S), ctx.r);
    FieldElement fp_den = miller(P, S, ctx.r);
    FieldElement fq_num = miller(Q, add(P, neg(S)), ctx.r);
    FieldElement fq_den = miller(Q, neg(S), ctx.r);
    if (fp_den.is_zero() || fq_num.is_zero() || fq_den.is_zero())
        throw pole_error("degenerate auxiliary point");
    return (fp_num / fp_den) / (fq_num / fq_den);
}

}  // namespace

FieldElement weil_pairing(const PairingContext& ctx, const CurvePoint& P0, const CurvePoint& Q0,
                          Rng& rng) {
    CurvePoint P = lift_to_ext(ctx, P0);
    CurvePoint Q = lift_to_ext(ctx, Q0);
    const Field& f = ctx.ext.field();
    if (P.is_infinity() || Q.is_infinity()) return f.one();

    for (int attempt = 0; attempt < 64; ++attempt) {
        CurvePoint S = random_point(ctx.ext, rng);
        if (S.is_infinity() || S == P || S == neg(Q) || S == add(P, neg(Q))) continue;
        try {
            return weil_once(ctx, P, Q, S);
        } catch (const pole_error&) {
            continue;
        }
    }
    throw error("weil pairing: auxiliary point retries exhausted");
}

FieldElement tate_pairing(const PairingContext& ctx, const CurvePoint& P0, const CurvePoint& Q0,
                          Rng& rng) {
    CurvePoint P = lift_to_ext(ctx, P0);
    CurvePoint Q = lift_to_ext(ctx, Q0);
    const Field& f = ctx.ext.field();
    if (P.is_infinity() || Q.is_infinity()) return f.one();

    for (int attempt = 0; attempt < 64; ++attempt) {
        CurvePoint S = random_point(ctx.ext, rng);
        if (S.is_infinity() || S == neg(Q) || S == P) continue;
        try {
            FieldElement num = miller(P, add(Q, S), ctx.r);
            FieldElement den = miller(P, S, ctx.r);
            if (den.is_zero()) continue;
            return (num / den).pow(ctx.final_exp);
        } catch (const pole_error&) {
            continue;
        }
    }
    throw error("tate pairing: auxiliary point retries exhausted");
}

CurvePoint distortion_apply(const PairingContext& ctx, const CurvePoint& P0) {
    if (!ctx.has_distortion)
        throw error("distortion map requires y^2 = x^3 + x with p == 3 mod 4");
    CurvePoint P = lift_to_ext(ctx, P0);
    if (P.is_infinity()) return P;
    const Field& f = ctx.ext.field();
    // i is the tower generator: coordinates (0, 1)
    FieldElement i = f.from_coords({Integer(0), Integer(1)});
    return CurvePoint::affine(ctx.ext, -P.x(), i * P.y());
}

FieldElement modified_weil(const PairingContext& ctx, const CurvePoint& P, const CurvePoint& Q,
                           Rng& rng) {
    return weil_pairing(ctx, lift_to_ext(ctx, P), distortion_apply(ctx, Q), rng);
}

CurvePoint random_torsion_point(const PairingContext& ctx, Rng& rng) {
    // strip the full r-power content, then fold back down to exact order r
    Integer rest = ctx.ext_order;
    int v = 0;
    while (rest % ctx.r == 0) {
        rest /= ctx.r;
        ++v;
    }
    for (int tries = 0; tries < 4096; ++tries) {
        CurvePoint P = scalar_mul(rest, random_point(ctx.ext, rng));
        while (!P.is_infinity() && !scalar_mul(ctx.r, P).is_infinity()) P = scalar_mul(ctx.r, P);
        if (!P.is_infinity()) return P;
    }
    throw error("failed to sample a torsion point");
}

Integer mov_reduce(const PairingContext& ctx, const CurvePoint& P, const CurvePoint& Q, Rng& rng) {
    if (Q.is_infinity()) return Integer(0);
    Integer cof = ctx.ext_order / ctx.r;
    for (int attempt = 0; attempt < 128; ++attempt) {
        CurvePoint T = random_point(ctx.ext, rng);
        CurvePoint Tp = scalar_mul(cof, T);
        if (Tp.is_infinity()) continue;
        FieldElement a = weil_pairing(ctx, P, Tp, rng);
        if (a == ctx.ext.field().one()) continue;  // T' not independent of P
        FieldElement b = weil_pairing(ctx, Q, Tp, rng);
        return bsgs_field(a, b, ctx.r);
    }
    throw error("mov_reduce retries exhausted");
}

Integer bsgs_field(const FieldElement& a, const FieldElement& b, const Integer& order) {
    Integer m;
    mpz_sqrt(m.get_mpz_t(), order.get_mpz_t());
    m += 1;
    std::unordered_map<std::string, unsigned long> baby;
    FieldElement cur = b;
    FieldElement a_inv = a.inverse();
    for (Integer j = 0; j < m; ++j) {
        baby.emplace(cur.to_string(), j.get_ui());
        cur = cur * a_inv;
    }
    FieldElement giant = a.pow(m);
    FieldElement probe = giant.field().one();
    for (Integer i = 0; i < m + 1; ++i) {
        auto it = baby.find(probe.to_string());
        if (it != baby.end()) {
            Integer n = i * m + Integer(static_cast<unsigned long>(it->second));
            if (a.pow(n) == b) return n % order;
        }
        probe = probe * giant;
    }
    throw error("bsgs_field: no solution (inputs not in the same cyclic group?)");
}

Integer bsgs_curve(const CurvePoint& P, const CurvePoint& Q, const Integer& order) {
    Integer m;
    mpz_sqrt(m.get_mpz_t(), order.get_mpz_t());
    m += 1;
    std::unordered_map<std::string, unsigned long> baby;
    CurvePoint cur = Q;
    CurvePoint step = neg(P);
    for (Integer j = 0; j < m; ++j) {
        baby.emplace(cur.to_string(), j.get_ui());
        cur = add(cur, step);
    }
    CurvePoint giant = scalar_mul(m, P);
    CurvePoint probe = CurvePoint::infinity(P.curve());
    for (Integer i = 0; i < m + 1; ++i) {
        auto it = baby.find(probe.to_string());
        if (it != baby.end()) {
            Integer n = i * m + Integer(static_cast<unsigned long>(it->second));
            if (scalar_mul(n, P) == Q) return n % order;
        }
        probe = add(probe, giant);
    }
    throw error("bsgs_curve: no solution");
}

}  // namespace pfec
