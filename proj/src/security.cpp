#include "pfec/security.hpp"

#include <json.hpp>

#include <cmath>
#include <iomanip>
#include <sstream>

namespace pfec {

using nlohmann::json;

const std::vector<ParameterBand>& parameter_bands() {
    static const std::vector<ParameterBand> bands = {
        {80, 160, 960, 1280, 6, 8, 3, 4},
        {112, 224, 2200, 3600, 10, 16, 5, 8},
        {128, 256, 3000, 5000, 12, 20, 6, 10},
        {192, 384, 8000, 10000, 20, 26, 10, 13},
        {256, 512, 14000, 18000, 28, 36, 14, 18},
    };
    return bands;
}

const ParameterBand& band_lookup(unsigned security_bits) {
    for (const auto& b : parameter_bands())
        if (b.security_bits == security_bits) return b;
    throw error("no parameter band for " + std::to_string(security_bits) + " bits");
}

double l_notation_bits(double n_bits, double l, double c) {
    if (l < 0 || l > 1 || c <= 0) throw error("l in [0,1] and c > 0 required");
    double ln_n = n_bits * std::log(2.0);
    if (ln_n <= 1.0) return 0.0;
    double ln_ln_n = std::log(ln_n);
    double nats = c * std::pow(ln_n, l) * std::pow(ln_ln_n, 1.0 - l);
    return nats / std::log(2.0);
}

bool check_128_constraint(const Rational& rho, unsigned k) {
    Rational v = rho * Rational(256) * Rational(static_cast<long>(k));
    return v >= 3072 && v <= 5376;
}

SecurityReport rate_instance(const CurveInstance& inst, bool special_p) {
    SecurityReport rep;
    rep.instance_ref = inst.family + "-u" + int_to_hex(inst.u);
    rep.k = inst.k;
    rep.r_bits = bit_length(inst.r);
    rep.p_bits = bit_length(inst.p);
    rep.pk_bits = rep.p_bits * inst.k;
    rep.rho_actual = Rational(static_cast<long>(rep.p_bits), static_cast<long>(rep.r_bits));
    rep.rho_actual.canonicalize();
    rep.pollard_bits = rep.r_bits / 2;

    bool composite_k = false;
    for (unsigned dv = 2; dv < inst.k; ++dv)
        if (inst.k % dv == 0) composite_k = true;
    rep.nfs_constant_c = (composite_k || special_p) ? 1.526 : 1.923;
    rep.nfs_bits = l_notation_bits(static_cast<double>(rep.pk_bits), 1.0 / 3.0, rep.nfs_constant_c);
    rep.overall_bits = std::min(static_cast<double>(rep.pollard_bits), rep.nfs_bits);

    rep.band = "out of band";
    for (const auto& b : parameter_bands())
        if (rep.pk_bits >= b.pk_bits_min && rep.pk_bits <= b.pk_bits_max)
            rep.band = std::to_string(b.security_bits) + "-bit";
    return rep;
}

const std::vector<RecommendedRow>& recommended_tables() {
    static const std::vector<RecommendedRow> rows = {
        // 128-bit table
        {"128", "Cock-Pinch", 6, Integer(3), 256, 672, 12255, "2^128-2^124-2^59", 128, "", ""},
        {"128", "Cock-Pinch", 8, Integer(1), 256, 544, 13799, "2^64-2^54+2^37+2^32-4", 131, "", ""},
        {"128", "Cyclo FM", 10, Integer(15), 256, 446, 12255, "2^32-2^26-2^17+2^10-1", 133, "", "a=-3"},
        {"128", "Cyclo FM", 11, Integer(3), 258, 333, 11477, "-2^13+2^10-2^8-2^5-2^3-2", 131, "", "b=13"},
        {"128", "Cyclo FM", 11, Integer(11), 256, 412, 12255, "-2^56+2^21+2^19-2^11-2^9-1", 145, "", "a=2"},
        {"128", "BN", 12, Integer(3), 446, 446, 13799, "2^110+2^36+1", 132, "BN", "b=257"},
        {"128", "Cyclo BLS", 12, Integer(3), 229, 446, 12255, "-2^74-2^73-2^63-2^57-2^50-1", 132, "BLS12", "b=1"},
        {"128", "FK", 12, Integer(3), 296, 446, 11477, "-2^72-2^71-2^36", 136, "", "b=-2"},
        {"128", "Cyclo", 13, Integer(3), 267, 310, 12255, "2^11+2^8-2^6-2^4", 140, "", "b=-17"},
        {"128", "Cyclo", 14, Integer(3), 256, 340, 13799, "2^21+2^19+2^10-2^6", 148, "", "b=-4"},
        {"128", "KSS16", 16, Integer(1), 257, 330, 12255, "-2^34+2^27-2^23+2^20-2^11+1", 140, "KSS16", "a=1"},
        {"128", "KSS16", 16, Integer(1), 256, 330, 11477, "2^34-2^30+2^26+2^23+2^14-2^5+1", 140, "KSS16", "a=1"},
        // 192-bit table
        {"192", "BN", 12, std::nullopt, 1024, 1022, 12255, "-2^254+2^33+2^6", 191, "BN", ""},
        {"192", "BLS12", 12, std::nullopt, 768, 1150, 13799, "-2^192+2^188-2^115-2^110-2^44-1", 193, "BLS12", ""},
        {"192", "KSS16", 16, std::nullopt, 605, 766, 12255, "2^78-2^76-2^28+2^14+2^7+1", 194, "KSS16", ""},
        {"192", "KSS18", 18, std::nullopt, 474, 638, 11477, "2^80+2^77+2^76-2^61-2^53-2^14", 193, "KSS18", ""},
        {"192", "BLS24", 24, std::nullopt, 409, 509, 12202, "-2^51-2^28+2^11-1", 193, "BLS24", ""},
    };
    return rows;
}

RowReproduction reproduce_row(const RecommendedRow& row, int mr_rounds) {
    RowReproduction rr;
    rr.row = &row;
    if (row.family.empty()) {
        rr.note = "no catalog family for this construction";
        return rr;
    }
    const FamilyDescriptor* fd = find_family(row.family);
    if (!fd) {
        rr.note = "family not in catalog";
        return rr;
    }
    rr.has_family = true;
    Integer u = int_from_text(row.seed_text);
    if (!seed_admissible(*fd, u)) {
        rr.note = "seed lies outside the admissible residue classes";
        return rr;
    }
    rr.seed_admissible = true;
    CurveInstance inst;
    try {
        inst = instantiate(*fd, u);
    } catch (const error& e) {
        rr.note = e.what();
        return rr;
    }
    rr.r_bits_actual = bit_length(inst.r);
    rr.p_bits_actual = bit_length(inst.p);
    rr.r_bits_match = rr.r_bits_actual == row.r_bits;
    rr.p_bits_match = rr.p_bits_actual == row.p_bits;
    rr.r_prime = is_probable_prime(inst.r, mr_rounds);
    rr.p_prime = is_probable_prime(inst.p, mr_rounds);
    if (!rr.pass()) {
        std::ostringstream os;
        if (!rr.r_bits_match) os << "r bits " << rr.r_bits_actual << " != " << row.r_bits << "; ";
        if (!rr.p_bits_match) os << "p bits " << rr.p_bits_actual << " != " << row.p_bits << "; ";
        if (!rr.r_prime) os << "r not prime; ";
        if (!rr.p_prime) os << "p not prime; ";
        rr.note = os.str();
    }
    return rr;
}

std::string report_to_json(const SecurityReport& rep) {
    json j;
    j["instance"] = rep.instance_ref;
    j["k"] = rep.k;
    j["r_bits"] = rep.r_bits;
    j["p_bits"] = rep.p_bits;
    j["pk_bits"] = rep.pk_bits;
    j["rho_actual"] = rat_to_text(rep.rho_actual);
    j["pollard_bits"] = rep.pollard_bits;
    j["nfs_constant_c"] = rep.nfs_constant_c;
    j["nfs_bits"] = rep.nfs_bits;
    j["overall_bits"] = rep.overall_bits;
    j["band"] = rep.band;
    j["estimate_quality"] = "asymptotic, uncalibrated";
    if (rep.claimed_bits) j["claimed_bits"] = *rep.claimed_bits;
    return j.dump(2);
}

std::string bands_table_text() {
    std::ostringstream os;
    os << std::left << std::setw(10) << "security" << std::setw(8) << "r" << std::setw(14)
       << "p^k" << std::setw(10) << "k(rho=1)" << std::setw(10) << "k(rho=2)" << "\n";
    for (const auto& b : parameter_bands()) {
        os << std::setw(10) << b.security_bits << std::setw(8) << b.r_bits << std::setw(14)
           << (std::to_string(b.pk_bits_min) + "-" + std::to_string(b.pk_bits_max))
           << std::setw(10) << (std::to_string(b.k_rho1_min) + "-" + std::to_string(b.k_rho1_max))
           << std::setw(10) << (std::to_string(b.k_rho2_min) + "-" + std::to_string(b.k_rho2_max))
           << "\n";
    }
    return os.str();
}

}  // namespace pfec
