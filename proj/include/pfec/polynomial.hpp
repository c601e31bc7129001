#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pfec/numeric.hpp"

namespace pfec {

// Univariate polynomial with exact rational coefficients, ascending degree.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    RatPoly(std::initializer_list<long> coeffs);

    static RatPoly zero() { return RatPoly(); }
    static RatPoly constant(const Rational& v);
    static RatPoly monomial(const Rational& coeff, int degree);
    // x^k - 1 split into cyclotomic factors; returns the k-th one.
    static RatPoly cyclotomic(unsigned k);

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    Rational coeff(int i) const;
    const Rational& leading() const;
    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_monic() const;

    RatPoly operator-() const;
    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator*(const RatPoly& o) const;
    RatPoly operator*(const Rational& s) const;
    bool operator==(const RatPoly& o) const { return c_ == o.c_; }

    RatPoly pow(unsigned e) const;

    // Euclidean division: *this = q * divisor + r with deg r < deg divisor.
    std::pair<RatPoly, RatPoly> divmod(const RatPoly& divisor) const;

    Rational eval(const Rational& u) const;
    Rational eval(const Integer& u) const { return eval(Rational(u)); }

    RatPoly compose(const RatPoly& inner) const;

    // g with g*g == *this, if one exists over Q.
    std::optional<RatPoly> sqrt() const;

    RatPoly derivative() const;

    // lcm of coefficient denominators.
    Integer denominator_lcm() const;
    // gcd of coefficients of the denominator-cleared polynomial.
    Integer integer_content() const;
    // (content-free integer polynomial with positive leading coefficient, scale)
    RatPoly primitive_part() const;

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rational> c_;
};

RatPoly operator*(const Rational& s, const RatPoly& p);

// true plus the quotient when divisor exactly divides value over Q.
std::pair<bool, RatPoly> poly_divides(const RatPoly& divisor, const RatPoly& value);

RatPoly poly_gcd(const RatPoly& a, const RatPoly& b);  // monic gcd over Q

enum class Irreducibility { Irreducible, Reducible, Unknown };

// Decision procedure over Q: rational-root test, then factor-degree patterns
// modulo several primes. Unknown is possible and reported as such.
Irreducibility irreducible_over_q(const RatPoly& f);

}  // namespace pfec
