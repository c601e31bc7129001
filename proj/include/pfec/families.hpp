#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pfec/curve.hpp"
#include "pfec/polynomial.hpp"

namespace pfec {

enum class FamilyKind { CompleteFixedD, CompleteVariableD, Sparse };

enum class CheckStatus { Pass, Fail, NotCheckable };

struct ValidationReport {
    CheckStatus r_irreducible = CheckStatus::NotCheckable;
    CheckStatus phik_divisibility = CheckStatus::NotCheckable;
    CheckStatus cofactor_identity = CheckStatus::NotCheckable;
    CheckStatus cm_identity = CheckStatus::NotCheckable;
    CheckStatus seed_integrality = CheckStatus::NotCheckable;
    std::string detail;

    bool valid() const {
        return r_irreducible == CheckStatus::Pass && phik_divisibility == CheckStatus::Pass &&
               cofactor_identity == CheckStatus::Pass && cm_identity == CheckStatus::Pass &&
               seed_integrality == CheckStatus::Pass;
    }
};

// A parameterized family (p(x), r(x), t(x)) with embedding degree k.
struct FamilyDescriptor {
    std::string name;
    unsigned k = 0;
    FamilyKind kind = FamilyKind::CompleteFixedD;
    std::optional<Integer> d;  // absent for variable-discriminant kinds

    std::optional<RatPoly> p_poly;
    std::optional<RatPoly> r_poly;
    RatPoly t_poly;
    std::optional<RatPoly> cm_y;       // complete: 4p - t^2 = D y^2
    std::optional<RatPoly> cm_g;       // sparse: 4p - t^2 = g y^2, g quadratic non-square
    std::optional<RatPoly> cofactor_h; // p + 1 - t = h r

    Rational rho;  // deg p / deg r, or the published value for partial rows

    // Admissible residue classes (residue, modulus) where all polynomials
    // evaluate integrally, and the fixed integer divisor of r on them.
    std::vector<std::pair<Integer, Integer>> seed_residues;
    Integer r_content = 1;

    bool partially_specified = false;
    std::string notes;

    ValidationReport validation;
};

// Runs the five family checks as exact polynomial identities, derives missing
// cm polynomials and the cofactor when possible, and discovers admissible
// seed residues. Failures land in the report, never as exceptions.
ValidationReport validate_family(FamilyDescriptor& fd);

// All families transcribed from the catalog tables, validated at load.
const std::vector<FamilyDescriptor>& builtin_catalog();

const FamilyDescriptor* find_family(const std::string& name);

Rational rho_value(const FamilyDescriptor& fd);

struct CurveInstance {
    std::string family;
    unsigned k = 0;
    Integer u;
    Integer p;
    Integer r;         // prime-part value: r_poly(u) / r_content
    Integer t;
    Integer d;
    Integer cm_y;
    Integer cofactor;  // (p + 1 - t) / r
    std::optional<Integer> curve_a;
    std::optional<Integer> curve_b;
};

// Evaluates the family at u. Checks integrality and the numeric CM identity;
// does not test primality (the caller's concern).
CurveInstance instantiate(const FamilyDescriptor& fd, const Integer& u);

bool seed_admissible(const FamilyDescriptor& fd, const Integer& u);

// Fills curve_a / curve_b by scanning y^2 = x^3 + b (D = 3) or
// y^2 = x^3 + a x (D = 1) until a random point times the cofactor has order r.
void synthesize_curve(CurveInstance& inst, Rng& rng,
                      const Integer& naive_bound = Integer(1000000));

std::string family_to_json(const FamilyDescriptor& fd);
std::string catalog_to_json();
std::string instance_to_json(const CurveInstance& inst);

const char* kind_name(FamilyKind kind);
const char* status_name(CheckStatus st);

}  // namespace pfec
