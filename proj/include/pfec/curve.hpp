#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pfec/field.hpp"

namespace pfec {

// Short Weierstrass curve y^2 = x^3 + a x + b; the constructor rejects
// singular parameter pairs.
class CurveParams {
public:
    CurveParams(Field field, FieldElement a, FieldElement b);

    const Field& field() const { return f_; }
    const FieldElement& a() const { return a_; }
    const FieldElement& b() const { return b_; }

    FieldElement discriminant() const;  // -16(4a^3 + 27b^2)
    bool operator==(const CurveParams& o) const;

private:
    Field f_;
    FieldElement a_, b_;
};

class CurvePoint {
public:
    static CurvePoint infinity(const CurveParams& c) { return CurvePoint(c); }
    static CurvePoint affine(const CurveParams& c, FieldElement x, FieldElement y);

    bool is_infinity() const { return !xy_.has_value(); }
    const FieldElement& x() const;
    const FieldElement& y() const;
    const CurveParams& curve() const { return c_; }

    bool operator==(const CurvePoint& o) const;
    bool operator!=(const CurvePoint& o) const { return !(*this == o); }

    std::string to_string() const;  // "(x,y)" or "O"

private:
    explicit CurvePoint(CurveParams c) : c_(std::move(c)) {}
    CurvePoint(CurveParams c, FieldElement x, FieldElement y)
        : c_(std::move(c)), xy_(std::make_pair(std::move(x), std::move(y))) {}
    CurveParams c_;
    std::optional<std::pair<FieldElement, FieldElement>> xy_;
};

bool is_on_curve(const CurvePoint& p);
CurvePoint neg(const CurvePoint& p);
CurvePoint add(const CurvePoint& p, const CurvePoint& q);
CurvePoint scalar_mul(const Integer& n, const CurvePoint& p);

struct GroupInfo {
    Integer order;
    Integer trace;  // p + 1 - order
    std::vector<std::pair<Integer, int>> factorization;
};

// Exact #E(F_p) by quadratic-character enumeration; p must stay below `bound`.
GroupInfo count_points_naive(const CurveParams& c, const Integer& bound = Integer(1000000));

// Uniform x, square-root lift; retries non-residues.
CurvePoint random_point(const CurveParams& c, Rng& rng);

// Nonzero point P with r P = O, given r | group_order.
CurvePoint find_point_of_order(const CurveParams& c, const Integer& r, const Integer& group_order,
                               Rng& rng);

bool is_supersingular(const CurveParams& c, const Integer& bound = Integer(1000000));

}  // namespace pfec
