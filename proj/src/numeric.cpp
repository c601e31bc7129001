#include "pfec/numeric.hpp"

#include <algorithm>
#include <cctype>

namespace pfec {

namespace {

// One term of power-sum seed notation: [+-] 2^N or [+-] digits.
bool parse_power_sum(const std::string& s, Integer& out) {
    Integer acc = 0;
    std::size_t i = 0;
    bool saw_term = false;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = (s[i] == '-') ? -1 : 1;
            ++i;
        } else if (saw_term) {
            return false;  // terms after the first need an explicit sign
        }
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        std::string digits = s.substr(start, i - start);
        if (i < s.size() && s[i] == '^') {
            if (digits != "2") return false;
            ++i;
            if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) return false;
            std::size_t estart = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            unsigned long e = std::stoul(s.substr(estart, i - estart));
            Integer term = 1;
            mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), e);
            acc += sign * term;
        } else {
            acc += sign * Integer(digits);
        }
        saw_term = true;
    }
    if (!saw_term) return false;
    out = acc;
    return true;
}

}  // namespace

Integer int_from_text(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw error("empty integer literal");

    bool neg = false;
    std::string body = s;
    if (body[0] == '+' || body[0] == '-') {
        neg = body[0] == '-';
        body = body.substr(1);
    }
    if (body.rfind("0x", 0) == 0 || body.rfind("0X", 0) == 0) {
        Integer v;
        if (mpz_set_str(v.get_mpz_t(), body.substr(2).c_str(), 16) != 0)
            throw error("bad hex integer: " + text);
        return neg ? Integer(-v) : v;
    }
    if (s.find('^') != std::string::npos) {
        Integer v;
        if (!parse_power_sum(s, v)) throw error("bad power-sum integer: " + text);
        return v;
    }
    Integer v;
    if (mpz_set_str(v.get_mpz_t(), body.c_str(), 10) != 0)
        throw error("bad decimal integer: " + text);
    return neg ? Integer(-v) : v;
}

std::string int_to_dec(const Integer& n) { return n.get_str(10); }

std::string int_to_hex(const Integer& n) {
    if (sgn(n) < 0) return "-0x" + Integer(-n).get_str(16);
    return "0x" + n.get_str(16);
}

Rational rat_from_text(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        Rational q(int_from_text(text));
        return q;
    }
    Integer num = int_from_text(text.substr(0, slash));
    Integer den = int_from_text(text.substr(slash + 1));
    if (den == 0) throw error("zero denominator: " + text);
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string rat_to_text(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str(10);
    return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

std::size_t bit_length(const Integer& n) {
    if (n == 0) return 0;
    return mpz_sizeinbase(n.get_mpz_t(), 2);
}

namespace {

bool miller_rabin_witness(const Integer& n, const Integer& a, const Integer& d, unsigned long s) {
    Integer x = mod_pow(a % n, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned long i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return false;
    }
    return true;  // a witnesses compositeness
}

}  // namespace

bool is_probable_prime(const Integer& n, int rounds) {
    if (n < 2) return false;
    static const unsigned long small_primes[] = {2,  3,  5,  7,  11, 13, 17, 19,
                                                 23, 29, 31, 37, 41, 43, 47, 53};
    for (unsigned long p : small_primes) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    Integer d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

    Integer two_64 = Integer(1) << 64;
    if (n < two_64) {
        // Deterministic witness set for the 64-bit range.
        for (unsigned long a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
            if (n == a) return true;
            if (miller_rabin_witness(n, Integer(a), d, s)) return false;
        }
        return true;
    }
    static thread_local Rng rng(0x9e3779b97f4a7c15ULL);
    for (int i = 0; i < rounds; ++i) {
        Integer a = 2 + rng.below(n - 3);
        if (miller_rabin_witness(n, a, d, s)) return false;
    }
    return true;
}

namespace {

Integer pollard_rho(const Integer& n, Rng& rng) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    while (true) {
        Integer x = 2 + rng.below(n - 2);
        Integer y = x;
        Integer c = 1 + rng.below(n - 1);
        Integer d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            Integer diff = x >= y ? Integer(x - y) : Integer(y - x);
            if (diff == 0) break;
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_into(const Integer& n, std::vector<Integer>& primes, Rng& rng) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        primes.push_back(n);
        return;
    }
    Integer d = pollard_rho(n, rng);
    factor_into(d, primes, rng);
    factor_into(Integer(n / d), primes, rng);
}

}  // namespace

std::vector<std::pair<Integer, int>> factorize(const Integer& n) {
    if (n <= 0) throw error("factorize expects a positive integer");
    std::vector<std::pair<Integer, int>> out;
    Integer m = n;
    for (unsigned long p = 2; p < 100000 && Integer(p) * p <= m; p = (p == 2 ? 3 : p + 2)) {
        if (!mpz_divisible_ui_p(m.get_mpz_t(), p)) continue;
        int e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            m /= p;
            ++e;
        }
        out.emplace_back(Integer(p), e);
    }
    if (m > 1) {
        Rng rng(0xdeadbeefULL);
        std::vector<Integer> primes;
        factor_into(m, primes, rng);
        std::sort(primes.begin(), primes.end());
        for (std::size_t i = 0; i < primes.size();) {
            std::size_t j = i;
            while (j < primes.size() && primes[j] == primes[i]) ++j;
            out.emplace_back(primes[i], static_cast<int>(j - i));
            i = j;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Integer mod_pow(const Integer& base, const Integer& exp, const Integer& mod) {
    Integer out;
    if (exp < 0) {
        Integer inv = mod_inv(base, mod);
        Integer e = -exp;
        mpz_powm(out.get_mpz_t(), inv.get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t());
        return out;
    }
    mpz_powm(out.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return out;
}

Integer mod_inv(const Integer& a, const Integer& mod) {
    Integer out;
    if (mpz_invert(out.get_mpz_t(), a.get_mpz_t(), mod.get_mpz_t()) == 0)
        throw error("not invertible mod " + int_to_dec(mod));
    return out;
}

std::optional<Integer> sqrt_mod_prime(const Integer& a, const Integer& p) {
    Integer v = a % p;
    if (v < 0) v += p;
    if (v == 0) return Integer(0);
    if (p == 2) return v;
    if (mpz_legendre(v.get_mpz_t(), p.get_mpz_t()) != 1) return std::nullopt;
    if (p % 4 == 3) return mod_pow(v, (p + 1) / 4, p);

    // Tonelli-Shanks
    Integer q = p - 1;
    unsigned long s = mpz_scan1(q.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(q.get_mpz_t(), q.get_mpz_t(), s);
    Integer z = 2;
    while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;
    Integer m(s), c = mod_pow(z, q, p), t = mod_pow(v, q, p), r = mod_pow(v, (q + 1) / 2, p);
    while (t != 1) {
        Integer t2 = t;
        Integer i = 0;
        while (t2 != 1) {
            t2 = (t2 * t2) % p;
            ++i;
            if (i == m) return std::nullopt;  // unreachable for prime p
        }
        Integer b = c;
        for (Integer j = 0; j < m - i - 1; ++j) b = (b * b) % p;
        m = i;
        c = (b * b) % p;
        t = (t * c) % p;
        r = (r * b) % p;
    }
    return r;
}

Integer multiplicative_order(const Integer& a, const Integer& m, const Integer& group_order,
                             const std::vector<std::pair<Integer, int>>& group_order_factors) {
    Integer order = group_order;
    for (const auto& [q, e] : group_order_factors) {
        for (int i = 0; i < e; ++i) {
            Integer candidate = order / q;
            if (mod_pow(a, candidate, m) == 1)
                order = candidate;
            else
                break;
        }
    }
    return order;
}

Integer find_generator(const Integer& r, Rng& rng) {
    if (!is_probable_prime(r)) throw error("find_generator expects a prime modulus");
    if (r == 2) return Integer(1);
    Integer phi = r - 1;
    auto factors = factorize(phi);
    while (true) {
        Integer g = 2 + rng.below(r - 3);
        bool ok = true;
        for (const auto& [q, e] : factors) {
            (void)e;
            if (mod_pow(g, phi / q, r) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
}

std::optional<Integer> integer_sqrt_exact(const Integer& n) {
    if (n < 0) return std::nullopt;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
    Integer s;
    mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
    return s;
}

}  // namespace pfec
