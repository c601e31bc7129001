#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pfec {

// Exact arbitrary-precision integers and rationals. All higher layers build
// on these; no floating point enters the algebra.
using Integer = mpz_class;
using Rational = mpq_class;

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Deterministic, seedable randomness shared by searches and pairings.
class Rng {
public:
    explicit Rng(unsigned long seed = 0) : state_(gmp_randinit_mt) { state_.seed(seed); }

    // uniform in [0, bound)
    Integer below(const Integer& bound) { return state_.get_z_range(bound); }
    Integer bits(unsigned n) { return state_.get_z_bits(n); }

private:
    gmp_randclass state_;
};

// Text forms: decimal, 0x-hex (lowercase on output, minus-prefixed), and the
// power-sum notation used for published seeds ("2^110+2^36+1", "-2^254+2^33+2^6").
Integer int_from_text(const std::string& text);
std::string int_to_dec(const Integer& n);
std::string int_to_hex(const Integer& n);

Rational rat_from_text(const std::string& text);  // "num/den" or integer text
std::string rat_to_text(const Rational& q);

std::size_t bit_length(const Integer& n);

// Deterministic witnesses below 2^64, Miller-Rabin with `rounds` random bases above.
bool is_probable_prime(const Integer& n, int rounds = 40);

// Trial division plus Pollard rho; intended for desk-scale inputs.
std::vector<std::pair<Integer, int>> factorize(const Integer& n);

Integer mod_pow(const Integer& base, const Integer& exp, const Integer& mod);
Integer mod_inv(const Integer& a, const Integer& mod);

// Tonelli-Shanks square root mod an odd prime; nullopt for non-residues.
std::optional<Integer> sqrt_mod_prime(const Integer& a, const Integer& p);

// Multiplicative order of a mod m given the factorization of the group order.
Integer multiplicative_order(const Integer& a, const Integer& m, const Integer& group_order,
                             const std::vector<std::pair<Integer, int>>& group_order_factors);

// Generator of (Z/rZ)* for prime r.
Integer find_generator(const Integer& r, Rng& rng);

std::optional<Integer> integer_sqrt_exact(const Integer& n);

}  // namespace pfec
