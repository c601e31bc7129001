#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pfec/families.hpp"

namespace pfec {

// One row of the parameter-size table.
struct ParameterBand {
    unsigned security_bits;
    unsigned r_bits;
    unsigned pk_bits_min, pk_bits_max;
    unsigned k_rho1_min, k_rho1_max;
    unsigned k_rho2_min, k_rho2_max;
};

const std::vector<ParameterBand>& parameter_bands();
const ParameterBand& band_lookup(unsigned security_bits);

// log2 of exp[c (ln N)^l (ln ln N)^(1-l)] with o(1) taken as 0 and N = 2^n_bits.
double l_notation_bits(double n_bits, double l, double c);

struct SecurityReport {
    std::string instance_ref;
    unsigned k = 0;
    std::size_t r_bits = 0;
    std::size_t p_bits = 0;
    std::size_t pk_bits = 0;
    Rational rho_actual;
    std::size_t pollard_bits = 0;
    double nfs_bits = 0;
    double nfs_constant_c = 0;   // 1.923 or 1.526
    double overall_bits = 0;     // min(pollard, nfs)
    std::string band;            // matched security band or "out of band"
    std::optional<unsigned> claimed_bits;
};

// Chooses c = 1.526 for composite k or a special (polynomial-form) p,
// 1.923 otherwise.
SecurityReport rate_instance(const CurveInstance& inst, bool special_p);

// 3072 <= 256 rho k <= 5376 (the 128-bit selection window).
bool check_128_constraint(const Rational& rho, unsigned k);

struct RecommendedRow {
    std::string table;    // "128" or "192"
    std::string curve;    // printed row label
    unsigned k;
    std::optional<Integer> d;
    unsigned r_bits;
    unsigned p_bits;
    unsigned pk_bits;
    std::string seed_text;       // power-sum form
    unsigned claimed_security;
    std::string family;          // catalog name, empty = no catalog family
    std::string curve_coeff;     // auxiliary a=/b= column text, if any
};

const std::vector<RecommendedRow>& recommended_tables();

struct RowReproduction {
    const RecommendedRow* row;
    bool has_family = false;
    bool seed_admissible = false;
    std::size_t r_bits_actual = 0;
    std::size_t p_bits_actual = 0;
    bool r_bits_match = false;
    bool p_bits_match = false;
    bool r_prime = false;
    bool p_prime = false;
    std::string note;
    bool pass() const {
        return has_family && seed_admissible && r_bits_match && p_bits_match && r_prime && p_prime;
    }
};

RowReproduction reproduce_row(const RecommendedRow& row, int mr_rounds = 40);

std::string report_to_json(const SecurityReport& rep);
std::string bands_table_text();

}  // namespace pfec
