#include "pfec/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace pfec {

RatPoly::RatPoly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    trim();
}

RatPoly RatPoly::constant(const Rational& v) {
    RatPoly p;
    if (v != 0) p.c_.push_back(v);
    return p;
}

RatPoly RatPoly::monomial(const Rational& coeff, int degree) {
    RatPoly p;
    if (coeff == 0) return p;
    p.c_.assign(degree + 1, Rational(0));
    p.c_[degree] = coeff;
    return p;
}

void RatPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational RatPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
    return c_[i];
}

const Rational& RatPoly::leading() const {
    if (c_.empty()) throw error("zero polynomial has no leading coefficient");
    return c_.back();
}

bool RatPoly::is_monic() const { return !c_.empty() && c_.back() == 1; }

RatPoly RatPoly::operator-() const {
    RatPoly p = *this;
    for (auto& v : p.c_) v = -v;
    return p;
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
    RatPoly p;
    p.c_.resize(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t i = 0; i < p.c_.size(); ++i) p.c_[i] = coeff(i) + o.coeff(i);
    p.trim();
    return p;
}

RatPoly RatPoly::operator-(const RatPoly& o) const { return *this + (-o); }

RatPoly RatPoly::operator*(const RatPoly& o) const {
    if (is_zero() || o.is_zero()) return RatPoly();
    RatPoly p;
    p.c_.assign(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) p.c_[i + j] += c_[i] * o.c_[j];
    }
    p.trim();
    return p;
}

RatPoly RatPoly::operator*(const Rational& s) const {
    if (s == 0) return RatPoly();
    RatPoly p = *this;
    for (auto& v : p.c_) v *= s;
    return p;
}

RatPoly operator*(const Rational& s, const RatPoly& p) { return p * s; }

RatPoly RatPoly::pow(unsigned e) const {
    RatPoly out = RatPoly::constant(1);
    RatPoly base = *this;
    while (e) {
        if (e & 1) out = out * base;
        base = base * base;
        e >>= 1;
    }
    return out;
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& divisor) const {
    if (divisor.is_zero()) throw error("polynomial division by zero");
    RatPoly r = *this;
    RatPoly q;
    int dd = divisor.degree();
    if (r.degree() >= dd) q.c_.assign(r.degree() - dd + 1, Rational(0));
    while (!r.is_zero() && r.degree() >= dd) {
        Rational factor = r.leading() / divisor.leading();
        int shift = r.degree() - dd;
        q.c_[shift] = factor;
        for (int i = 0; i <= dd; ++i) r.c_[i + shift] -= factor * divisor.c_[i];
        r.trim();
    }
    q.trim();
    return {q, r};
}

Rational RatPoly::eval(const Rational& u) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * u + *it;
    return acc;
}

RatPoly RatPoly::compose(const RatPoly& inner) const {
    RatPoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * inner + RatPoly::constant(*it);
    return acc;
}

std::optional<RatPoly> RatPoly::sqrt() const {
    if (is_zero()) return RatPoly();
    if (degree() % 2 != 0) return std::nullopt;
    Rational lead = leading();
    if (sgn(lead.get_num()) < 0) return std::nullopt;
    Integer ns = lead.get_num(), ds = lead.get_den();
    auto sn = integer_sqrt_exact(ns);
    auto sd = integer_sqrt_exact(ds);
    if (!sn || !sd) return std::nullopt;

    int half = degree() / 2;
    RatPoly g;
    g.c_.assign(half + 1, Rational(0));
    g.c_[half] = Rational(*sn, *sd);
    // (g^2)[half+k] = 2 g[half] g[k] + sum over ordered pairs (i,j) in (k, half)
    // with i+j = half+k; peel g[k] off descending from k = half-1.
    for (int k = half - 1; k >= 0; --k) {
        Rational s(0);
        for (int i = k + 1; i <= half - 1; ++i) {
            int j = half + k - i;
            if (j < k + 1 || j > half - 1) continue;
            s += g.c_[i] * g.c_[j];
        }
        g.c_[k] = (coeff(half + k) - s) / (2 * g.c_[half]);
    }
    g.trim();
    if (g * g == *this) return g;
    return std::nullopt;
}

RatPoly RatPoly::derivative() const {
    RatPoly p;
    if (degree() < 1) return p;
    p.c_.resize(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) p.c_[i - 1] = c_[i] * Rational(static_cast<long>(i));
    p.trim();
    return p;
}

Integer RatPoly::denominator_lcm() const {
    Integer l = 1;
    for (const auto& v : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
    return l;
}

Integer RatPoly::integer_content() const {
    if (is_zero()) return 0;
    Integer l = denominator_lcm();
    Integer g = 0;
    for (const auto& v : c_) {
        Integer scaled = v.get_num() * (l / v.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.get_mpz_t());
    }
    return g;
}

RatPoly RatPoly::primitive_part() const {
    if (is_zero()) return RatPoly();
    Integer l = denominator_lcm();
    Integer g = integer_content();
    RatPoly p = *this * Rational(l, g);
    if (sgn(p.leading().get_num()) < 0) p = -p;
    return p;
}

std::string RatPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Rational v = coeff(i);
        if (v == 0) continue;
        if (!first) os << (sgn(v.get_num()) < 0 ? " - " : " + ");
        else if (sgn(v.get_num()) < 0)
            os << "-";
        Rational a = abs(v);
        bool unit = (a == 1);
        if (i == 0 || !unit) os << rat_to_text(a);
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

RatPoly RatPoly::cyclotomic(unsigned k) {
    if (k == 0) throw error("cyclotomic index must be positive");
    static std::map<unsigned, RatPoly> cache;
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;

    RatPoly xk_minus_1 = RatPoly::monomial(1, static_cast<int>(k)) - RatPoly::constant(1);
    RatPoly denom = RatPoly::constant(1);
    for (unsigned d = 1; d < k; ++d)
        if (k % d == 0) denom = denom * RatPoly::cyclotomic(d);
    auto [q, r] = xk_minus_1.divmod(denom);
    if (!r.is_zero()) throw error("cyclotomic recursion failed");
    cache[k] = q;
    return q;
}

std::pair<bool, RatPoly> poly_divides(const RatPoly& divisor, const RatPoly& value) {
    if (divisor.is_zero()) throw error("poly_divides with zero divisor");
    auto [q, r] = value.divmod(divisor);
    if (r.is_zero()) return {true, q};
    return {false, RatPoly()};
}

RatPoly poly_gcd(const RatPoly& a, const RatPoly& b) {
    RatPoly x = a, y = b;
    while (!y.is_zero()) {
        auto [q, r] = x.divmod(y);
        (void)q;
        x = y;
        y = r;
    }
    if (x.is_zero()) return x;
    return x * (Rational(1) / x.leading());
}

// ---- irreducibility over Q via factor-degree patterns mod small primes ----

namespace {

using FpVec = std::vector<Integer>;  // coefficients mod p, ascending, trimmed

void fp_trim(FpVec& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

FpVec fp_mul(const FpVec& a, const FpVec& b, const Integer& p) {
    if (a.empty() || b.empty()) return {};
    FpVec out(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
    fp_trim(out);
    return out;
}

FpVec fp_mod(FpVec a, const FpVec& m, const Integer& p) {
    fp_trim(a);
    Integer lead_inv = mod_inv(m.back(), p);
    while (a.size() >= m.size()) {
        Integer factor = (a.back() * lead_inv) % p;
        std::size_t shift = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i) {
            a[i + shift] = (a[i + shift] - factor * m[i]) % p;
            if (a[i + shift] < 0) a[i + shift] += p;
        }
        fp_trim(a);
        if (a.empty()) break;
    }
    return a;
}

FpVec fp_powmod(const FpVec& base, Integer e, const FpVec& m, const Integer& p) {
    FpVec result{Integer(1)};
    FpVec b = fp_mod(base, m, p);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) result = fp_mod(fp_mul(result, b, p), m, p);
        b = fp_mod(fp_mul(b, b, p), m, p);
        e >>= 1;
    }
    return result;
}

FpVec fp_gcd(FpVec a, FpVec b, const Integer& p) {
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        FpVec r = fp_mod(a, b, p);
        a = b;
        b = r;
    }
    if (!a.empty()) {
        Integer inv = mod_inv(a.back(), p);
        for (auto& v : a) v = (v * inv) % p;
    }
    return a;
}

FpVec fp_sub(const FpVec& a, const FpVec& b, const Integer& p) {
    FpVec out(std::max(a.size(), b.size()), Integer(0));
    for (std::size_t i = 0; i < out.size(); ++i) {
        Integer av = i < a.size() ? a[i] : Integer(0);
        Integer bv = i < b.size() ? b[i] : Integer(0);
        out[i] = (av - bv) % p;
        if (out[i] < 0) out[i] += p;
    }
    fp_trim(out);
    return out;
}

FpVec fp_derivative(const FpVec& a, const Integer& p) {
    FpVec out;
    if (a.size() < 2) return out;
    out.resize(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = (a[i] * Integer(static_cast<long>(i))) % p;
    fp_trim(out);
    return out;
}

// Degrees (with multiplicity by count) of irreducible factors mod p via
// distinct-degree factorization. Requires f squarefree mod p.
std::optional<std::vector<int>> factor_degrees_mod_p(const RatPoly& f, const Integer& p) {
    Integer denom = f.denominator_lcm();
    if (denom % p == 0) return std::nullopt;
    FpVec fp;
    fp.reserve(f.degree() + 1);
    for (int i = 0; i <= f.degree(); ++i) {
        Rational c = f.coeff(i) * Rational(denom);
        Integer v = c.get_num() % p;
        if (v < 0) v += p;
        fp.push_back(v);
    }
    fp_trim(fp);
    if (static_cast<int>(fp.size()) - 1 != f.degree()) return std::nullopt;  // lead vanished

    FpVec d = fp_derivative(fp, p);
    if (d.empty()) return std::nullopt;  // p-th power artifacts; skip this prime
    if (fp_gcd(fp, d, p).size() > 1) return std::nullopt;  // not squarefree mod p

    std::vector<int> degrees;
    FpVec rest = fp;
    FpVec x{Integer(0), Integer(1)};
    FpVec xq = x;
    int d_deg = 1;
    while (static_cast<int>(rest.size()) - 1 >= 2 * d_deg) {
        xq = fp_powmod(xq, p, rest, p);
        FpVec g = fp_gcd(rest, fp_sub(xq, x, p), p);
        if (g.size() > 1) {
            int gdeg = static_cast<int>(g.size()) - 1;
            for (int i = 0; i < gdeg / d_deg; ++i) degrees.push_back(d_deg);
            FpVec quotient;
            {
                FpVec rem = rest;
                Integer lead_inv = mod_inv(g.back(), p);
                quotient.assign(rest.size() - g.size() + 1, Integer(0));
                while (rem.size() >= g.size()) {
                    Integer factor = (rem.back() * lead_inv) % p;
                    std::size_t shift = rem.size() - g.size();
                    quotient[shift] = factor;
                    for (std::size_t i = 0; i < g.size(); ++i) {
                        rem[i + shift] = (rem[i + shift] - factor * g[i]) % p;
                        if (rem[i + shift] < 0) rem[i + shift] += p;
                    }
                    fp_trim(rem);
                    if (rem.empty()) break;
                }
            }
            fp_trim(quotient);
            rest = quotient;
            xq = fp_mod(xq, rest, p);
        }
        ++d_deg;
    }
    if (rest.size() > 1) degrees.push_back(static_cast<int>(rest.size()) - 1);
    return degrees;
}

std::vector<Integer> signed_divisors(const Integer& n) {
    std::vector<Integer> out;
    Integer m = abs(n);
    for (Integer d = 1; d * d <= m; ++d) {
        if (m % d != 0) continue;
        out.push_back(d);
        out.push_back(-d);
        if (d != m / d) {
            out.push_back(m / d);
            out.push_back(-(m / d));
        }
    }
    return out;
}

// Complete decision for quartics without rational roots: search the two
// quadratic factors over divisor pairs of the leading and constant terms.
bool quartic_splits_into_quadratics(const RatPoly& f0) {
    RatPoly f = f0.primitive_part();
    Integer A = f.leading().get_num();
    Integer B3 = f.coeff(3).get_num(), B2 = f.coeff(2).get_num(), B1 = f.coeff(1).get_num();
    Integer C = f.coeff(0).get_num();
    if (C == 0) return true;  // root at zero
    for (const Integer& a : signed_divisors(A)) {
        if (a <= 0) continue;  // normalize the first leading coefficient
        if (A % a != 0) continue;
        Integer d = A / a;
        for (const Integer& c : signed_divisors(C)) {
            if (C % c != 0) continue;
            Integer g = C / c;
            // unknowns b, e:  d b + a e = B3 ;  g b + c e = B1
            Integer det = d * c - a * g;
            if (det == 0) continue;
            Integer bn = B3 * c - a * B1;
            Integer en = d * B1 - B3 * g;
            if (bn % det != 0 || en % det != 0) continue;
            Integer b = bn / det, e = en / det;
            if (c * d + a * g + b * e == B2) return true;
        }
    }
    return false;
}

std::set<int> subset_sums(const std::vector<int>& degrees, int total) {
    std::set<int> sums{0};
    for (int d : degrees) {
        std::set<int> next = sums;
        for (int s : sums)
            if (s + d <= total) next.insert(s + d);
        sums = next;
    }
    return sums;
}

bool has_rational_root(const RatPoly& f) {
    RatPoly g = f.primitive_part();
    Integer a0 = g.coeff(0).get_num();
    Integer an = g.leading().get_num();
    if (a0 == 0) return true;  // root at 0
    auto divisors = [](const Integer& n) {
        std::vector<Integer> out;
        Integer m = abs(n);
        for (const auto& [q, e] : factorize(m)) {
            std::vector<Integer> cur = out.empty() ? std::vector<Integer>{Integer(1)} : out;
            out.clear();
            Integer pw = 1;
            for (int i = 0; i <= e; ++i) {
                for (const auto& c : cur) out.push_back(c * pw);
                pw *= q;
            }
        }
        if (out.empty()) out.push_back(Integer(1));
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    };
    for (const auto& pnum : divisors(a0))
        for (const auto& pden : divisors(an)) {
            Rational cand(pnum, pden);
            cand.canonicalize();
            if (g.eval(cand) == 0) return true;
            if (g.eval(Rational(-cand)) == 0) return true;
        }
    return false;
}

}  // namespace

namespace {

// Sound over-approximation of the Fujiwara root bound, via bit lengths.
double root_bound(const RatPoly& f) {
    int n = f.degree();
    double lead_bits = static_cast<double>(bit_length(abs(f.leading().get_num())));
    double best = 0;
    for (int i = 0; i < n; ++i) {
        if (f.coeff(i) == 0) continue;
        double bits = static_cast<double>(bit_length(abs(f.coeff(i).get_num()))) - lead_bits + 2;
        best = std::max(best, bits / (n - i));
    }
    return std::ldexp(2.0, static_cast<int>(best) + 1);
}

// If |f(m)| is prime for an integer m at least two beyond every root, any
// proper factorization would force two factors of absolute value >= 2 there.
bool prime_value_certificate(const RatPoly& f0) {
    RatPoly f = f0.primitive_part();
    Integer m0(static_cast<unsigned long>(root_bound(f)) + 2);
    for (int step = 0; step < 120; ++step) {
        Integer m = m0 + step;
        Integer v = abs(f.eval(m).get_num());
        if (v > 1 && is_probable_prime(v)) return true;
    }
    return false;
}

}  // namespace

Irreducibility irreducible_over_q(const RatPoly& f) {
    int n = f.degree();
    if (n <= 0) return Irreducibility::Reducible;  // constants are units, not irreducible
    if (n == 1) return Irreducibility::Irreducible;
    if (has_rational_root(f)) return Irreducibility::Reducible;
    if (n <= 3) return Irreducibility::Irreducible;  // no root => no factor of degree 1
    if (n == 4)
        return quartic_splits_into_quadratics(f) ? Irreducibility::Reducible
                                                 : Irreducibility::Irreducible;

    static const long probe_primes[] = {101, 103, 107, 109, 113, 127, 131, 137, 139, 149,
                                        151, 157, 163, 167, 173, 179, 181, 191, 193, 197};
    std::set<int> possible;
    for (int i = 1; i < n; ++i) possible.insert(i);
    int informative = 0;
    for (long pl : probe_primes) {
        auto degs = factor_degrees_mod_p(f, Integer(pl));
        if (!degs) continue;
        ++informative;
        if (degs->size() == 1) return Irreducibility::Irreducible;
        std::set<int> sums = subset_sums(*degs, n);
        std::set<int> kept;
        for (int v : possible)
            if (sums.count(v)) kept.insert(v);
        possible = kept;
        if (possible.empty()) return Irreducibility::Irreducible;
        if (informative >= 12) break;
    }
    // abelian fields with non-cyclic Galois group factor mod every prime;
    // a prime polynomial value two past the root bound still certifies
    if (prime_value_certificate(f)) return Irreducibility::Irreducible;
    return Irreducibility::Unknown;
}

}  // namespace pfec
