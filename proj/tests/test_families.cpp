#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "pfec/curve.hpp"
#include "pfec/families.hpp"

using namespace pfec;

TEST_CASE("catalog validation statuses") {
    std::set<std::string> expect_valid = {
        "BN",   "BLS12",     "BLS24",     "BLS48",      "KSS8",          "KSS8-D1",
        "KSS16", "KSS18",    "KSS36",     "KSS40",      "SG54",          "BW5-D1",
        "Freeman10", "MNT3", "MNT3n",     "MNT6",       "MNT6n",         "DryloCVD8",
        "DryloCVD9", "DryloCVD15", "DryloSparse8b"};
    std::set<std::string> expect_invalid = {"KSS32",      "MNT4",       "MNT4n",
                                            "DryloCVD28", "DryloCVD30", "DryloSparse8a",
                                            "DryloSparse12"};
    std::map<std::string, bool> seen;
    for (const auto& fd : builtin_catalog()) {
        seen[fd.name] = fd.validation.valid();
        if (fd.partially_specified) {
            CHECK(fd.name.rfind("CycloSparse", 0) == 0);
            CHECK_FALSE(fd.validation.valid());
            // the published shape data still checks out
            CHECK(fd.validation.cm_identity == CheckStatus::Pass);
            CHECK(fd.validation.r_irreducible == CheckStatus::NotCheckable);
        }
    }
    for (const auto& name : expect_valid) {
        CAPTURE(name);
        REQUIRE(seen.count(name));
        CHECK(seen[name]);
    }
    for (const auto& name : expect_invalid) {
        CAPTURE(name);
        REQUIRE(seen.count(name));
        CHECK_FALSE(seen[name]);
    }
}

TEST_CASE("families marked valid pass all five checks") {
    for (const auto& fd : builtin_catalog()) {
        if (!fd.validation.valid()) continue;
        CAPTURE(fd.name);
        CHECK(fd.validation.r_irreducible == CheckStatus::Pass);
        CHECK(fd.validation.phik_divisibility == CheckStatus::Pass);
        CHECK(fd.validation.cofactor_identity == CheckStatus::Pass);
        CHECK(fd.validation.cm_identity == CheckStatus::Pass);
        CHECK(fd.validation.seed_integrality == CheckStatus::Pass);
        CHECK(fd.cofactor_h.has_value());
    }
}

TEST_CASE("BN identities") {
    const FamilyDescriptor* bn = find_family("BN");
    REQUIRE(bn);
    CHECK(bn->cofactor_h == RatPoly::constant(1));  // prime order
    CHECK(bn->cm_y == RatPoly({1, 4, 6}));          // 6x^2 + 4x + 1
    // spot check at x = 1: 4*103 - 49 = 363 = 3 * 11^2
    CHECK(4 * 103 - 7 * 7 == 363);
    CHECK(3 * 11 * 11 == 363);
    // the full symbolic CM identity
    RatPoly f = *bn->p_poly * Rational(4) - bn->t_poly * bn->t_poly;
    RatPoly y({1, 4, 6});
    CHECK(f == y * y * Rational(3));
}

TEST_CASE("Freeman r divides Phi_10 of p") {
    const FamilyDescriptor* fm = find_family("Freeman10");
    REQUIRE(fm);
    RatPoly big = RatPoly::cyclotomic(10).compose(*fm->p_poly);
    CHECK(poly_divides(*fm->r_poly, big).first);
    CHECK(fm->cm_g == RatPoly({3, 10, 15}));  // 15x^2 + 10x + 3
}

TEST_CASE("rho values") {
    std::map<std::string, Rational> expect = {
        {"BN", Rational(1)},          {"BLS12", Rational(3, 2)}, {"BLS48", Rational(9, 8)},
        {"KSS18", Rational(4, 3)},    {"Freeman10", Rational(1)}, {"BLS24", Rational(5, 4)},
        {"KSS16", Rational(5, 4)},    {"KSS8", Rational(5, 4)},  {"SG54", Rational(10, 9)},
        {"BW5-D1", Rational(7, 4)},   {"MNT6", Rational(1)},     {"KSS36", Rational(7, 6)},
        {"KSS40", Rational(11, 8)}};
    for (const auto& [name, rho] : expect) {
        const FamilyDescriptor* fd = find_family(name);
        CAPTURE(name);
        REQUIRE(fd);
        CHECK(rho_value(*fd) == rho);
    }
    // BLS48 via the (2 + k/3)/phi(k) closed form at k = 48
    Rational formula(2 + 48 / 3, 16);
    formula.canonicalize();
    CHECK(rho_value(*find_family("BLS48")) == formula);
}

TEST_CASE("seed residues and contents") {
    auto residues = [](const char* name) {
        const FamilyDescriptor* fd = find_family(name);
        REQUIRE(fd);
        return fd->seed_residues;
    };
    using RV = std::vector<std::pair<Integer, Integer>>;
    CHECK(residues("BN") == RV{{0, 1}});
    CHECK(residues("BLS12") == RV{{1, 3}});
    CHECK(residues("BLS24") == RV{{1, 3}});
    CHECK(residues("KSS16") == RV{{25, 70}, {45, 70}});
    CHECK(residues("KSS18") == RV{{7, 21}, {14, 21}});
    CHECK(residues("KSS8-D1") == RV{{5, 30}, {25, 30}});

    CHECK(find_family("KSS16")->r_content == 61250);
    CHECK(find_family("KSS18")->r_content == 343);
    CHECK(find_family("KSS8-D1")->r_content == 450);
    CHECK(find_family("KSS36")->r_content == 161061481);
    CHECK(find_family("BN")->r_content == 1);
    CHECK(find_family("SG54")->r_content == 1);
}

TEST_CASE("every listed residue evaluates integrally") {
    for (const auto& fd : builtin_catalog()) {
        if (!fd.p_poly) continue;
        CAPTURE(fd.name);
        for (const auto& [res, mod] : fd.seed_residues) {
            for (int lift = 0; lift < 2; ++lift) {
                Integer u = res + lift * mod;
                CHECK(fd.p_poly->eval(u).get_den() == 1);
                CHECK(fd.r_poly->eval(u).get_den() == 1);
                CHECK(fd.t_poly.eval(u).get_den() == 1);
            }
        }
    }
}

TEST_CASE("instantiate BN at u=1") {
    CurveInstance inst = instantiate(*find_family("BN"), 1);
    CHECK(inst.p == 103);
    CHECK(inst.r == 97);
    CHECK(inst.t == 7);
    CHECK(inst.d == 3);
    CHECK(inst.cm_y == 11);
    CHECK(inst.cofactor == 1);
}

TEST_CASE("instantiate BLS12 at u=1 degenerates") {
    CurveInstance inst = instantiate(*find_family("BLS12"), 1);
    CHECK(inst.p == 1);
    CHECK(inst.r == 1);
    CHECK_FALSE(is_probable_prime(inst.r));  // the search layer rejects on this
}

TEST_CASE("instantiate rejects inadmissible seeds") {
    CHECK_THROWS_AS(instantiate(*find_family("BLS12"), 2), error);
    CHECK_THROWS_AS(instantiate(*find_family("KSS16"), 1), error);
    CHECK_THROWS_AS(instantiate(*find_family("CycloSparse5"), 1), error);
}

TEST_CASE("symbolic and numeric CM paths agree") {
    Rng rng(17);
    for (const char* name : {"BN", "BLS12", "KSS16", "KSS18", "Freeman10"}) {
        const FamilyDescriptor* fd = find_family(name);
        REQUIRE(fd);
        for (int i = 0; i < 6; ++i) {
            const auto& [res, mod] = fd->seed_residues[i % fd->seed_residues.size()];
            Integer u = res + mod * Integer(3 + i);
            CurveInstance inst = instantiate(*fd, u);
            CHECK(4 * inst.p - inst.t * inst.t == inst.d * inst.cm_y * inst.cm_y);
            CHECK(inst.p + 1 - inst.t == inst.cofactor * inst.r);
        }
    }
    (void)rng;
}

TEST_CASE("large instances keep rho close to the degree ratio") {
    // bitlen(r) >= 200: log p / log r within 1% of deg p / deg r
    struct Row {
        const char* name;
        const char* seed;
    } rows[] = {
        {"BN", "2^110+2^36+1"},
        {"BLS12", "-2^192+2^188-2^115-2^110-2^44-1"},
        {"KSS16", "2^78-2^76-2^28+2^14+2^7+1"},
    };
    for (const auto& row : rows) {
        const FamilyDescriptor* fd = find_family(row.name);
        CurveInstance inst = instantiate(*fd, int_from_text(row.seed));
        REQUIRE(bit_length(inst.r) >= 200);
        double actual = static_cast<double>(bit_length(inst.p)) / static_cast<double>(bit_length(inst.r));
        Rational rho = rho_value(*fd);
        double symbolic = rho.get_num().get_d() / rho.get_den().get_d();
        CHECK(std::abs(actual - symbolic) / symbolic < 0.01);
    }
}

TEST_CASE("instances confirm the embedding degree numerically") {
    struct Row {
        const char* name;
        long seed;
    } rows[] = {{"BN", 1}, {"MNT6", 1}};
    // BN u=1: r = 97, p = 103; r | p^12 - 1 and no smaller power
    CurveInstance bn = instantiate(*find_family("BN"), 1);
    for (unsigned i = 1; i < 12; ++i) CHECK(mod_pow(bn.p % bn.r, Integer(i), bn.r) != 1);
    CHECK(mod_pow(bn.p % bn.r, Integer(12), bn.r) == 1);
    (void)rows;
}

TEST_CASE("synthesize BN toy curve and count") {
    Rng rng(2024);
    CurveInstance inst = instantiate(*find_family("BN"), 1);
    synthesize_curve(inst, rng);
    REQUIRE(inst.curve_b.has_value());
    Field fp = Field::prime(inst.p);
    CurveParams curve(fp, fp.from_integer(*inst.curve_a), fp.from_integer(*inst.curve_b));
    GroupInfo info = count_points_naive(curve);
    CHECK(info.order == 97);
}

TEST_CASE("synthesize supersingular shortcut") {
    // p = 59: y^2 = x^3 + x has p + 1 = 60 points
    Rng rng(5);
    CurveInstance inst;
    inst.family = "manual";
    inst.k = 2;
    inst.u = 0;
    inst.p = 59;
    inst.r = 5;
    inst.t = 0;
    inst.d = 1;
    inst.cm_y = 0;  // not used by synthesis
    inst.cofactor = 12;
    // 4p - t^2 = 236 = 4 * 59 -> D=59 is not 1 or 3, so force D=1 x-shape scan
    synthesize_curve(inst, rng);
    REQUIRE(inst.curve_a.has_value());
    Field fp = Field::prime(59);
    CurveParams curve(fp, fp.from_integer(*inst.curve_a), fp.from_integer(*inst.curve_b));
    CHECK(count_points_naive(curve).order == 60);
}

TEST_CASE("synthesize rejects unsupported discriminants") {
    Rng rng(1);
    CurveInstance inst;
    inst.p = 103;
    inst.r = 97;
    inst.t = 7;
    inst.d = 7;
    inst.cofactor = 1;
    CHECK_THROWS_WITH_AS(synthesize_curve(inst, rng), "unsupported discriminant (only D in {1,3})",
                         error);
}

TEST_CASE("published table seeds reproduce bit lengths") {
    // 128-bit table BN row
    CurveInstance bn = instantiate(*find_family("BN"), int_from_text("2^110+2^36+1"));
    CHECK(bit_length(bn.p) == 446);
    CHECK(bit_length(bn.r) == 446);
    CHECK(is_probable_prime(bn.p, 40));
    CHECK(is_probable_prime(bn.r, 40));
    CHECK(4 * bn.p - bn.t * bn.t == bn.d * bn.cm_y * bn.cm_y);

    // 192-bit table BLS12 row
    CurveInstance bls =
        instantiate(*find_family("BLS12"), int_from_text("-2^192+2^188-2^115-2^110-2^44-1"));
    CHECK(bit_length(bls.r) == 768);
    CHECK(bit_length(bls.p) == 1150);
    CHECK(is_probable_prime(bls.p, 40));
    CHECK(is_probable_prime(bls.r, 40));
}

TEST_CASE("catalog serializes to JSON") {
    std::string j = catalog_to_json();
    CHECK(j.find("\"BN\"") != std::string::npos);
    CHECK(j.find("complete-fixed-D") != std::string::npos);
    CHECK(j.find("seed_residues") != std::string::npos);
    std::string one = family_to_json(*find_family("KSS32"));
    CHECK(one.find("\"valid\": false") != std::string::npos);
}
