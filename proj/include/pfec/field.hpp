#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pfec/numeric.hpp"

namespace pfec {

// Immutable description of F_p or a single degree-k extension F_p[x]/(m(x)).
struct FieldDesc {
    Integer p;                       // characteristic, probable prime
    unsigned degree = 1;             // k
    std::vector<Integer> reduction;  // monic irreducible of degree k (empty for k == 1)
};

class FieldElement;

class Field {
public:
    static Field prime(const Integer& p, int mr_rounds = 40);
    // Extension with an explicitly chosen monic irreducible reduction polynomial
    // (ascending coefficients, length k+1).
    static Field extension(const Field& base, const std::vector<Integer>& reduction);
    // Extension with a deterministically searched reduction polynomial
    // (binomials x^k - beta first).
    static Field extension(const Field& base, unsigned k);

    const Integer& characteristic() const { return d_->p; }
    unsigned degree() const { return d_->degree; }
    bool is_prime_field() const { return d_->degree == 1; }
    const std::vector<Integer>& reduction() const { return d_->reduction; }
    Integer order() const;  // p^k

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_integer(const Integer& v) const;
    FieldElement from_coords(std::vector<Integer> coords) const;
    FieldElement random(Rng& rng) const;

    bool same(const Field& other) const;
    bool operator==(const Field& other) const { return same(other); }

private:
    friend class FieldElement;
    explicit Field(std::shared_ptr<const FieldDesc> d) : d_(std::move(d)) {}
    std::shared_ptr<const FieldDesc> d_;
};

class FieldElement {
public:
    FieldElement() = default;

    const Field& field() const { return f_; }
    const std::vector<Integer>& coords() const { return c_; }
    // Value as an integer; only for prime-field elements.
    const Integer& residue() const;

    bool is_zero() const;
    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement inverse() const;
    FieldElement pow(const Integer& e) const;

    // Multiplicative order; factors the full group order, desk scale only.
    Integer order() const;

    std::string to_string() const;  // hex coordinates, comma-separated for extensions

private:
    friend class Field;
    FieldElement(Field f, std::vector<Integer> c) : f_(std::move(f)), c_(std::move(c)) {}
    void require_same(const FieldElement& o) const;

    Field f_{nullptr};
    std::vector<Integer> c_;
};

// Square root in a prime field (Tonelli-Shanks); nullopt for non-residues.
std::optional<FieldElement> sqrt_mod(const FieldElement& a);

// Square root in any finite field of odd order.
std::optional<FieldElement> sqrt_in_field(const FieldElement& a);

// Deterministic search for a monic irreducible of degree k over F_p:
// binomials x^k - beta with small beta first, then pseudorandom monic polynomials.
std::vector<Integer> find_irreducible(const Integer& p, unsigned k);

bool is_irreducible_mod_p(const std::vector<Integer>& poly, const Integer& p);

}  // namespace pfec
