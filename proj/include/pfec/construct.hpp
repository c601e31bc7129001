#pragma once

#include <string>
#include <vector>

#include "pfec/families.hpp"

namespace pfec {

// x^2 - d y^2 = n with the affine substitution back to the CM variable:
// u = (subst_scale * x + subst_offset) / subst_div.
struct PellInstance {
    Integer d_coeff;  // positive non-square
    Integer n_rhs;
    Integer subst_scale = 1;
    Integer subst_offset = 0;
    Integer subst_div = 1;
    std::string description;
};

struct PellSolution {
    Integer x;
    Integer y;
    int class_index = 0;
};

// Cocks-Pinch output for one prime subgroup order.
struct CocksPinchResult {
    Integer p;
    Integer t;
    Integer y;
    Integer r;
    unsigned k = 0;
    Integer d;
};

// Builds (p, t, y) for the given k, D and prime r with k | r - 1 and -D a
// square mod r. Retries primitive roots and square-root signs until p is a
// probable prime.
CocksPinchResult cocks_pinch(unsigned k, const Integer& d, const Integer& r, Rng& rng,
                             int retry_budget = 256);

// Brezing-Weng in Q[x]/(r_poly): t = z + 1 and y = (z - 1)/sqrt(-D) for a
// primitive k-th root z. root_choice indexes the (z, sqrt sign) pair.
FamilyDescriptor brezing_weng(unsigned k, const Integer& d, const RatPoly& r_poly,
                              unsigned root_choice = 0);

// Number of distinct (z, sign) choices brezing_weng accepts for these inputs.
unsigned brezing_weng_choices(unsigned k, const Integer& d, const RatPoly& r_poly);

// Drylo variable-discriminant construction in K = Q(zeta_k) with
// z = scale * zeta_k^power; a = -z^2 must be a primitive element.
FamilyDescriptor drylo_cvd(unsigned k, unsigned zeta_power = 1, const Rational& scale = Rational(1));

// Substitutes x -> d x^2 in a variable-discriminant family, producing a
// complete family with fixed discriminant d.
FamilyDescriptor cvd_fix_discriminant(const FamilyDescriptor& fd, const Integer& d);

// All solutions with 0 <= x <= bound (x, y >= 0), from continued-fraction
// fundamental solutions combined with bounded class representatives.
std::vector<PellSolution> pell_solve(const PellInstance& inst, const Integer& bound);

// Fundamental solution of x^2 - d y^2 = 1 by the continued fraction of sqrt(d).
std::pair<Integer, Integer> pell_fundamental(const Integer& d);

// Completes the square in D y^2 = 4 h Phi_k(x)/deg - (x-1)^2 (Scott-Barreto).
PellInstance scott_barreto_pell(unsigned k, const Integer& h, const Integer& den);

// Completes the square in 4 p(u) - t(u)^2 = D v^2 for an MNT-shape family.
PellInstance mnt_pell_instance(const FamilyDescriptor& fd, const Integer& d);

struct MntSearchOptions {
    Integer u_bound = 50;
    Integer d_max = 9999999;
    std::vector<Integer> cofactors = {Integer(1)};
    unsigned workers = 1;
};

// Scans both trace signs of the curve parameterization for embedding degree k
// (exactly k, confirmed via the order of p mod r), p and r probable primes.
std::vector<CurveInstance> mnt_search(unsigned k, const MntSearchOptions& opts);

}  // namespace pfec
