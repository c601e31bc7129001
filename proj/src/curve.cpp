#include "pfec/curve.hpp"

#include <cstdint>

namespace pfec {

CurveParams::CurveParams(Field field, FieldElement a, FieldElement b)
    : f_(std::move(field)), a_(std::move(a)), b_(std::move(b)) {
    if (!a_.field().same(f_) || !b_.field().same(f_))
        throw error("curve coefficients must live in the curve field");
    if (discriminant().is_zero()) throw error("singular curve: discriminant is zero");
}

FieldElement CurveParams::discriminant() const {
    FieldElement four = f_.from_integer(4);
    FieldElement twenty_seven = f_.from_integer(27);
    FieldElement m16 = f_.from_integer(-16);
    return m16 * (four * a_ * a_ * a_ + twenty_seven * b_ * b_);
}

bool CurveParams::operator==(const CurveParams& o) const {
    return f_.same(o.f_) && a_ == o.a_ && b_ == o.b_;
}

CurvePoint CurvePoint::affine(const CurveParams& c, FieldElement x, FieldElement y) {
    CurvePoint p(c, std::move(x), std::move(y));
    if (!is_on_curve(p)) throw error("point does not satisfy the curve equation");
    return p;
}

const FieldElement& CurvePoint::x() const {
    if (is_infinity()) throw error("point at infinity has no coordinates");
    return xy_->first;
}

const FieldElement& CurvePoint::y() const {
    if (is_infinity()) throw error("point at infinity has no coordinates");
    return xy_->second;
}

bool CurvePoint::operator==(const CurvePoint& o) const {
    if (!(c_ == o.c_)) return false;
    if (is_infinity() || o.is_infinity()) return is_infinity() == o.is_infinity();
    return xy_->first == o.xy_->first && xy_->second == o.xy_->second;
}

std::string CurvePoint::to_string() const {
    if (is_infinity()) return "O";
    return "(" + xy_->first.to_string() + "," + xy_->second.to_string() + ")";
}

bool is_on_curve(const CurvePoint& p) {
    if (p.is_infinity()) return true;
    const auto& x = p.x();
    const auto& y = p.y();
    return y * y == x * x * x + p.curve().a() * x + p.curve().b();
}

CurvePoint neg(const CurvePoint& p) {
    if (p.is_infinity()) return p;
    return CurvePoint::affine(p.curve(), p.x(), -p.y());
}

CurvePoint add(const CurvePoint& p, const CurvePoint& q) {
    if (!(p.curve() == q.curve())) throw error("points on different curves");
    if (p.is_infinity()) return q;
    if (q.is_infinity()) return p;

    const FieldElement& xp = p.x();
    const FieldElement& yp = p.y();
    const FieldElement& xq = q.x();
    const FieldElement& yq = q.y();

    FieldElement mu;
    if (xp == xq) {
        if (yp == -yq) return CurvePoint::infinity(p.curve());  // includes yp == 0 doubling
        // tangent slope (3x^2 + a) / 2y
        FieldElement three = p.curve().field().from_integer(3);
        FieldElement two = p.curve().field().from_integer(2);
        mu = (three * xp * xp + p.curve().a()) / (two * yp);
    } else {
        mu = (yq - yp) / (xq - xp);
    }
    FieldElement x3 = mu * mu - xp - xq;
    FieldElement y3 = mu * (xp - x3) - yp;
    return CurvePoint::affine(p.curve(), x3, y3);
}

CurvePoint scalar_mul(const Integer& n, const CurvePoint& p) {
    if (n == 0 || p.is_infinity()) return CurvePoint::infinity(p.curve());
    Integer k = n;
    CurvePoint base = p;
    if (k < 0) {
        k = -k;
        base = neg(base);
    }
    CurvePoint acc = CurvePoint::infinity(p.curve());
    for (long i = static_cast<long>(bit_length(k)) - 1; i >= 0; --i) {
        acc = add(acc, acc);
        if (mpz_tstbit(k.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) acc = add(acc, base);
    }
    return acc;
}

GroupInfo count_points_naive(const CurveParams& c, const Integer& bound) {
    if (!c.field().is_prime_field()) throw error("naive counting runs over prime fields");
    const Integer& p = c.field().characteristic();
    if (p > bound) throw error("modulus exceeds the naive-count bound");

    std::uint64_t pu = p.get_ui();
    std::uint64_t a = c.a().residue().get_ui();
    std::uint64_t b = c.b().residue().get_ui();

    // counts of square roots per residue value
    std::vector<std::uint8_t> roots(pu, 0);
    for (std::uint64_t y = 0; y < pu; ++y) {
        std::uint64_t v = static_cast<std::uint64_t>((static_cast<unsigned __int128>(y) * y) % pu);
        ++roots[v];
    }
    std::uint64_t count = 1;  // infinity
    for (std::uint64_t x = 0; x < pu; ++x) {
        unsigned __int128 rhs = static_cast<unsigned __int128>(x) * x % pu;
        rhs = rhs * x % pu;
        rhs = (rhs + static_cast<unsigned __int128>(a) * x + b) % pu;
        count += roots[static_cast<std::uint64_t>(rhs)];
    }
    GroupInfo info;
    info.order = Integer(static_cast<unsigned long>(count));
    info.trace = p + 1 - info.order;

    // Hasse check: |t| <= 2 sqrt(p)
    Integer t2 = info.trace * info.trace;
    if (t2 > 4 * p) throw error("counted order violates the Hasse bound");
    info.factorization = factorize(info.order);
    return info;
}

CurvePoint random_point(const CurveParams& c, Rng& rng) {
    const Field& f = c.field();
    for (int tries = 0; tries < 4096; ++tries) {
        FieldElement x = f.random(rng);
        FieldElement rhs = x * x * x + c.a() * x + c.b();
        auto y = sqrt_in_field(rhs);
        if (!y) continue;
        if (!y->is_zero() && rng.below(2) == 1) return CurvePoint::affine(c, x, -*y);
        return CurvePoint::affine(c, x, *y);
    }
    throw error("failed to sample a curve point");
}

CurvePoint find_point_of_order(const CurveParams& c, const Integer& r, const Integer& group_order,
                               Rng& rng) {
    if (r <= 1) throw error("requested point order must exceed 1");
    if (group_order % r != 0) throw error("r does not divide the group order");
    Integer cofactor = group_order / r;
    for (int tries = 0; tries < 4096; ++tries) {
        CurvePoint p = scalar_mul(cofactor, random_point(c, rng));
        if (p.is_infinity()) continue;
        if (!scalar_mul(r, p).is_infinity()) throw error("group order is wrong for this curve");
        return p;
    }
    throw error("no point of the requested order found");
}

bool is_supersingular(const CurveParams& c, const Integer& bound) {
    GroupInfo info = count_points_naive(c, bound);
    const Integer& p = c.field().characteristic();
    Integer t = info.trace % p;
    return t == 0;
}

}  // namespace pfec
