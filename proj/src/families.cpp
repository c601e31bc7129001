#include "pfec/families.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <mutex>

namespace pfec {

using nlohmann::json;

const char* kind_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::CompleteFixedD: return "complete-fixed-D";
        case FamilyKind::CompleteVariableD: return "complete-variable-D";
        case FamilyKind::Sparse: return "sparse";
    }
    return "?";
}

const char* status_name(CheckStatus st) {
    switch (st) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::NotCheckable: return "not-checkable";
    }
    return "?";
}

namespace {

// Admissible residues: for each polynomial with denominator N, the class of
// u mod N decides integrality of every lift, since N divides the scan modulus.
std::vector<std::pair<Integer, Integer>> discover_residues(
    const std::vector<const RatPoly*>& polys) {
    Integer lcm = 1;
    for (const auto* f : polys)
        if (f) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), f->denominator_lcm().get_mpz_t());
    Integer modulus = lcm * 2;
    if (modulus == 2) return {{Integer(0), Integer(1)}};  // everything integral

    unsigned long m = modulus.get_ui();
    std::vector<bool> ok(m, true);
    for (const auto* fp : polys) {
        if (!fp) continue;
        Integer n = fp->denominator_lcm();
        if (n == 1) continue;
        // integer coefficients of n*f, reduced mod n
        std::vector<Integer> g;
        g.reserve(fp->degree() + 1);
        for (int i = 0; i <= fp->degree(); ++i) {
            Rational c = fp->coeff(i) * Rational(n);
            Integer v = c.get_num() % n;
            if (v < 0) v += n;
            g.push_back(v);
        }
        unsigned long nn = n.get_ui();
        for (unsigned long res = 0; res < m; ++res) {
            if (!ok[res]) continue;
            Integer acc = 0;
            Integer x(static_cast<unsigned long>(res % nn));
            for (auto it = g.rbegin(); it != g.rend(); ++it) acc = (acc * x + *it) % n;
            if (acc != 0) ok[res] = false;
        }
    }
    // collapse to the smallest period that reproduces the admissibility pattern
    unsigned long period = m;
    for (unsigned long d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        bool periodic = true;
        for (unsigned long res = 0; res + d < m && periodic; ++res)
            if (ok[res] != ok[(res + d) % m]) periodic = false;
        if (periodic) {
            period = d;
            break;
        }
    }
    std::vector<std::pair<Integer, Integer>> out;
    for (unsigned long res = 0; res < period; ++res)
        if (ok[res]) out.emplace_back(Integer(res), Integer(period));
    return out;
}

Integer content_on_residues(const RatPoly& f,
                            const std::vector<std::pair<Integer, Integer>>& residues) {
    Integer g = 0;
    for (const auto& [res, mod] : residues) {
        for (int lift = 0; lift < 3; ++lift) {
            Rational v = f.eval(Rational(res + lift * mod));
            if (v.get_den() != 1) return 1;  // unexpected; stay conservative
            Integer iv = abs(v.get_num());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), iv.get_mpz_t());
            if (g == 1) return g;
        }
    }
    return g == 0 ? Integer(1) : g;
}

}  // namespace

ValidationReport validate_family(FamilyDescriptor& fd) {
    ValidationReport rep;
    std::string detail;

    // (a) irreducibility of the primitive part of r
    if (fd.r_poly) {
        switch (irreducible_over_q(fd.r_poly->primitive_part())) {
            case Irreducibility::Irreducible: rep.r_irreducible = CheckStatus::Pass; break;
            case Irreducibility::Reducible:
                rep.r_irreducible = CheckStatus::Fail;
                detail += "r(x) factors over Q; ";
                break;
            case Irreducibility::Unknown:
                rep.r_irreducible = CheckStatus::NotCheckable;
                detail += "r(x) irreducibility undecided; ";
                break;
        }
    }

    // (b) r | Phi_k(t - 1)
    if (fd.r_poly && fd.k > 0) {
        RatPoly shifted = fd.t_poly - RatPoly::constant(1);
        RatPoly big = RatPoly::cyclotomic(fd.k).compose(shifted);
        auto [ok, q] = poly_divides(*fd.r_poly, big);
        (void)q;
        rep.phik_divisibility = ok ? CheckStatus::Pass : CheckStatus::Fail;
        if (!ok) detail += "r(x) does not divide Phi_k(t(x)-1); ";
    }

    // (c) p + 1 - t = h r
    if (fd.p_poly && fd.r_poly) {
        RatPoly num = *fd.p_poly + RatPoly::constant(1) - fd.t_poly;
        auto [ok, h] = poly_divides(*fd.r_poly, num);
        rep.cofactor_identity = ok ? CheckStatus::Pass : CheckStatus::Fail;
        if (ok)
            fd.cofactor_h = h;
        else
            detail += "p(x)+1-t(x) is not a multiple of r(x); ";
    }

    // (d) CM identity on f = 4p - t^2
    if (fd.p_poly) {
        RatPoly f = *fd.p_poly * Rational(4) - fd.t_poly * fd.t_poly;
        switch (fd.kind) {
            case FamilyKind::CompleteFixedD: {
                if (!fd.d) {
                    rep.cm_identity = CheckStatus::Fail;
                    detail += "complete family without a discriminant; ";
                    break;
                }
                auto y = (f * Rational(1, *fd.d)).sqrt();
                if (y) {
                    if (y->leading() < 0) y = -*y;
                    fd.cm_y = y;
                    rep.cm_identity = CheckStatus::Pass;
                } else {
                    rep.cm_identity = CheckStatus::Fail;
                    detail += "(4p - t^2)/D is not a polynomial square; ";
                }
                break;
            }
            case FamilyKind::CompleteVariableD: {
                // f = x h(x)^2
                if (f.coeff(0) != 0) {
                    rep.cm_identity = CheckStatus::Fail;
                    detail += "4p - t^2 has a nonzero constant term; ";
                    break;
                }
                std::vector<Rational> shifted(f.coeffs().begin() + 1, f.coeffs().end());
                auto h = RatPoly(shifted).sqrt();
                if (h) {
                    if (h->leading() < 0) h = -*h;
                    fd.cm_y = h;
                    rep.cm_identity = CheckStatus::Pass;
                } else {
                    rep.cm_identity = CheckStatus::Fail;
                    detail += "(4p - t^2)/x is not a polynomial square; ";
                }
                break;
            }
            case FamilyKind::Sparse: {
                // f = g y^2 with g quadratic and not a square
                RatPoly g, y;
                bool decomposed = false;
                if (fd.cm_g) {
                    auto [ok, q] = poly_divides(*fd.cm_g, f);
                    if (ok) {
                        auto ysq = q.sqrt();
                        if (ysq) {
                            g = *fd.cm_g;
                            y = *ysq;
                            decomposed = true;
                        }
                    }
                }
                if (!decomposed && !f.is_zero()) {
                    // gcd(f, f') is the square part when the squarefree factor
                    // is coprime to it
                    RatPoly s = poly_gcd(f, f.derivative());
                    auto [ok, quot] = poly_divides(s * s, f);
                    if (ok) {
                        y = s;
                        g = quot;
                        decomposed = true;
                    }
                }
                bool quad = decomposed && g.degree() == 2;
                bool nonsq = decomposed && !g.sqrt().has_value();
                if (quad && nonsq) {
                    fd.cm_g = g;
                    fd.cm_y = y;
                    rep.cm_identity = CheckStatus::Pass;
                } else {
                    rep.cm_identity = CheckStatus::Fail;
                    detail += "4p - t^2 is not quadratic-nonsquare times a square; ";
                }
                break;
            }
        }
    } else if (fd.cm_g && fd.cm_y) {
        // partially specified rows: the published shape is all we can check
        bool quad = fd.cm_g->degree() == 2;
        bool nonsq = !fd.cm_g->sqrt().has_value();
        rep.cm_identity = (quad && nonsq) ? CheckStatus::Pass : CheckStatus::Fail;
        if (rep.cm_identity == CheckStatus::Fail) detail += "g(x) is not quadratic-nonsquare; ";
    }

    // (e) admissible seed residues
    {
        std::vector<const RatPoly*> polys;
        if (fd.p_poly) polys.push_back(&*fd.p_poly);
        if (fd.r_poly) polys.push_back(&*fd.r_poly);
        polys.push_back(&fd.t_poly);
        if (fd.cm_y) polys.push_back(&*fd.cm_y);
        if (fd.cm_g) polys.push_back(&*fd.cm_g);
        fd.seed_residues = discover_residues(polys);
        rep.seed_integrality = fd.seed_residues.empty() ? CheckStatus::Fail : CheckStatus::Pass;
        if (fd.seed_residues.empty()) detail += "no admissible seed residues; ";
    }

    if (fd.r_poly && !fd.seed_residues.empty())
        fd.r_content = content_on_residues(*fd.r_poly, fd.seed_residues);

    rep.detail = detail;
    fd.validation = rep;
    return rep;
}

Rational rho_value(const FamilyDescriptor& fd) {
    if (fd.p_poly && fd.r_poly) {
        Rational rho(fd.p_poly->degree(), fd.r_poly->degree());
        rho.canonicalize();
        return rho;
    }
    return fd.rho;
}

namespace {

RatPoly P(std::initializer_list<long> asc) { return RatPoly(asc); }

// ascending coefficients divided by a common denominator
RatPoly PD(std::initializer_list<long> asc, long den) {
    std::vector<Rational> c;
    c.reserve(asc.size());
    for (long v : asc) c.emplace_back(v, den);
    return RatPoly(std::move(c));
}

RatPoly from_terms(std::initializer_list<std::pair<long, int>> terms, long den = 1) {
    RatPoly acc;
    for (auto [coeff, deg] : terms)
        acc = acc + RatPoly::monomial(Rational(Integer(coeff), Integer(den)), deg);
    return acc;
}

FamilyDescriptor make_complete(std::string name, unsigned k, long d, RatPoly p, RatPoly r,
                               RatPoly t, std::string notes = "") {
    FamilyDescriptor fd;
    fd.name = std::move(name);
    fd.k = k;
    fd.kind = FamilyKind::CompleteFixedD;
    fd.d = Integer(d);
    fd.p_poly = std::move(p);
    fd.r_poly = std::move(r);
    fd.t_poly = std::move(t);
    fd.notes = std::move(notes);
    fd.rho = rho_value(fd);
    return fd;
}

FamilyDescriptor make_sparse(std::string name, unsigned k, RatPoly p, RatPoly r, RatPoly t,
                             std::string notes = "") {
    FamilyDescriptor fd;
    fd.name = std::move(name);
    fd.k = k;
    fd.kind = FamilyKind::Sparse;
    fd.p_poly = std::move(p);
    fd.r_poly = std::move(r);
    fd.t_poly = std::move(t);
    fd.notes = std::move(notes);
    fd.rho = rho_value(fd);
    return fd;
}

FamilyDescriptor make_cvd(std::string name, unsigned k, RatPoly p, RatPoly r, RatPoly t,
                          std::string notes = "") {
    FamilyDescriptor fd;
    fd.name = std::move(name);
    fd.k = k;
    fd.kind = FamilyKind::CompleteVariableD;
    fd.p_poly = std::move(p);
    fd.r_poly = std::move(r);
    fd.t_poly = std::move(t);
    fd.notes = std::move(notes);
    fd.rho = rho_value(fd);
    return fd;
}

FamilyDescriptor make_partial(std::string name, unsigned k, RatPoly t, RatPoly g, RatPoly y,
                              Rational rho) {
    FamilyDescriptor fd;
    fd.name = std::move(name);
    fd.k = k;
    fd.kind = FamilyKind::Sparse;
    fd.t_poly = std::move(t);
    fd.cm_g = std::move(g);
    fd.cm_y = std::move(y);
    fd.rho = rho;
    fd.partially_specified = true;
    fd.notes = "partially specified: only t, g, y and the rho value are published";
    return fd;
}

RatPoly bls_p(unsigned half_exponent) {
    // ((u-1)^2 (u^(2h) - u^h + 1)) / 3 + u
    RatPoly u = RatPoly::monomial(1, 1);
    RatPoly r = RatPoly::monomial(1, 2 * half_exponent) - RatPoly::monomial(1, half_exponent) +
                RatPoly::constant(1);
    RatPoly um1 = u - RatPoly::constant(1);
    return (um1 * um1 * r) * Rational(1, 3) + u;
}

RatPoly bls_r(unsigned half_exponent) {
    return RatPoly::monomial(1, 2 * half_exponent) - RatPoly::monomial(1, half_exponent) +
           RatPoly::constant(1);
}

std::vector<FamilyDescriptor> build_catalog() {
    std::vector<FamilyDescriptor> cat;

    cat.push_back(make_complete("BN", 12, 3,
                                P({1, 6, 24, 36, 36}),
                                P({1, 6, 18, 36, 36}),
                                P({1, 0, 6})));

    cat.push_back(make_complete("BLS12", 12, 3, bls_p(2), bls_r(2), P({1, 1}),
                                "trace u+1 is implied by the BLS shape"));
    cat.push_back(make_complete("BLS24", 24, 3, bls_p(4), bls_r(4), P({1, 1}),
                                "trace u+1 is implied by the BLS shape"));
    cat.push_back(make_complete("BLS48", 48, 3, bls_p(8), bls_r(8), P({1, 1}),
                                "trace u+1 is implied by the BLS shape"));

    cat.push_back(make_complete(
        "KSS8", 8, 3,
        PD({1, -2, 1, 0, -1, 2, -1, 0, 1, 1, 1}, 3),
        P({1, 0, 0, 0, -1, 0, 0, 0, 1}),
        P({1, -1, 0, 0, 0, 1}),
        "linear coefficient of 3p is -2 (often mis-set as -32); confirmed by the family identities"));

    cat.push_back(make_complete(
        "KSS8-D1", 8, 1,
        PD({125, -82, -15, 8, -3, 2, 1}, 180),
        P({25, 0, -8, 0, 1}),
        PD({15, -11, 0, 2}, 15),
        "linear coefficient of 180p is -82 (often mis-set as -8); confirmed by the family identities"));

    cat.push_back(make_complete(
        "KSS16", 16, 1,
        PD({3125, 2398, 625, 0, 240, 152, 48, 0, 5, 2, 1}, 980),
        P({625, 0, 0, 0, 48, 0, 0, 0, 1}),
        PD({35, 41, 0, 0, 0, 2}, 35)));

    cat.push_back(make_complete(
        "KSS18", 18, 3,
        PD({2401, 1763, 343, 259, 188, 37, 7, 5, 1}, 21),
        P({343, 0, 0, 37, 0, 0, 1}),
        PD({7, 16, 0, 0, 1}, 7),
        "leading term of 21p is u^8 (often mis-set as u^10); the printed rho 4/3 pins degree 8"));

    cat.push_back(make_complete(
        "KSS32", 32, 1,
        from_terms({{1060449373, 0}, {-4948305594, 1}, {815730721, 2}, {742560, 8},
                    {344632, 9}, {57120, 10}, {13, 16}, {-6, 17}, {1, 18}}, 2970292),
        from_terms({{815730721, 0}, {57120, 8}, {1, 16}}),
        from_terms({{3107, 0}, {56403, 1}, {-2, 9}}, 3107),
        "as published; the quotient field of this r(x) contains no primitive 32nd root of "
        "unity (witnessed by a degree-one prime at q = 239), so the k = 32 conditions "
        "cannot hold"));

    cat.push_back(make_complete(
        "KSS36", 36, 3,
        from_terms({{823543, 0}, {-386569, 1}, {117649, 2}, {4781, 6}, {-2510, 7}, {683, 8},
                    {7, 12}, {-4, 13}, {1, 14}}, 28749),
        from_terms({{117649, 0}, {683, 6}, {1, 12}}),
        PD({259, 757, 0, 0, 0, 0, 0, 2}, 259),
        "published under an embedding-degree-32 label with +46u^13 in 28749p; the "
        "identities force k = 36 and coefficient -4"));

    cat.push_back(make_complete(
        "KSS40", 40, 1,
        from_terms({{48828125, 0}, {-13398638, 1}, {9765625, 2}, {31160, 10}, {-10568, 11},
                    {6232, 12}, {5, 20}, {-2, 21}, {1, 22}}, 1123380),
        from_terms({{390625, 0}, {125000, 2}, {24375, 4}, {2800, 6}, {-79, 8}, {112, 10},
                    {39, 12}, {8, 14}, {1, 16}}),
        from_terms({{1185, 0}, {6469, 1}, {2, 11}}, 1185),
        "denominator of p is 1123380 and the u^11 term is negative; both are frequently "
        "truncated in print"));

    cat.push_back(make_complete(
        "SG54", 54, 3,
        from_terms({{1, 0}, {3, 1}, {3, 2}, {243, 9}, {972, 10}, {729, 11}, {19683, 18},
                    {59049, 19}, {59049, 20}}),
        from_terms({{1, 0}, {243, 9}, {19683, 18}}),
        from_terms({{1, 0}, {243, 10}}),
        "exponents are powers of three; the u^10 coefficient is 972 = 3^6 + 3^5, which "
        "makes p + 1 - t = (3u^2 + 3u + 1) r exact"));

    cat.push_back(make_complete(
        "BW5-D1", 5, 1,
        PD({1, 0, -2, 0, 1, 0, 0, 0, 0, 0, 1, 0, 2, 0, 1}, 4),
        RatPoly::cyclotomic(20),
        P({1, 0, -1}),
        "odd-k discriminant-one construction with r = Phi_20"));

    cat.push_back(make_sparse("Freeman10", 10,
                              P({3, 10, 25, 25, 25}),
                              P({1, 5, 15, 25, 25}),
                              P({3, 5, 10})));

    // MNT parameterizations, one descriptor per trace sign
    cat.push_back(make_sparse("MNT3", 3, P({-1, 0, 12}), P({1, -6, 12}), P({-1, 6})));
    cat.push_back(make_sparse("MNT3n", 3, P({-1, 0, 12}), P({1, 6, 12}), P({-1, -6})));
    cat.push_back(make_sparse("MNT4", 4, P({-1, 1, 1}), P({0, 2, 1}), P({0, -1}),
                              "as published; r(u) = u^2 + 2u factors, so no prime-order "
                              "instances exist"));
    cat.push_back(make_sparse("MNT4n", 4, P({-1, 1, 1}), P({-1, 0, 1}), P({1, 1}),
                              "as published; r(u) = u^2 - 1 factors, so no prime-order "
                              "instances exist"));
    cat.push_back(make_sparse("MNT6", 6, P({1, 0, 4}), P({0, -2, 4}), P({1, 2}),
                              "r(u) = 4u^2 - 2u even; prime subgroups need the GMV cofactor"));
    cat.push_back(make_sparse("MNT6n", 6, P({1, 0, 4}), P({0, 2, 4}), P({1, -2}),
                              "r(u) = 4u^2 + 2u even; prime subgroups need the GMV cofactor"));

    cat.push_back(make_cvd("DryloCVD8", 8,
                           PD({196, -384, 716, 52, -311, 170, -39, 4}, 576),
                           P({4, 8, 8, -4, 1}),
                           PD({14, -16, 5, -1}, 12)));
    cat.push_back(make_cvd("DryloCVD9", 9,
                           PD({1, 1, 12, 36, 108, 1296, 972, 2916, 8748, 6561, 59049}, 4),
                           from_terms({{1, 0}, {27, 3}, {729, 6}}),
                           from_terms({{1, 0}, {243, 5}}),
                           "r has degree six (phi(9) = 6; a degree-five r cannot contain "
                           "the ninth roots of unity)"));
    cat.push_back(make_cvd("DryloCVD15", 15,
                           PD({1, 1, 18, 18, 135, -243, 486, -729, -8748, 39366, 39366,
                               -236196, 0, 531441}, 4),
                           from_terms({{1, 0}, {-3, 1}, {27, 3}, {-81, 4}, {243, 5},
                                       {-2187, 7}, {6561, 8}}),
                           P({1, 0, 9})));
    cat.push_back(make_cvd("DryloCVD28", 28,
                           from_terms({{1, 0}, {1, 1}, {-8, 3}, {16, 4}, {48, 5}, {-192, 7},
                                       {2816, 9}, {-3072, 11}, {12288, 13}, {16384, 14},
                                       {-32768, 15}, {65536, 17}, {2624144, 18}}, 4),
                           from_terms({{1, 0}, {-4, 2}, {16, 4}, {-64, 6}, {256, 8},
                                       {-1024, 10}, {4096, 12}}),
                           from_terms({{1, 0}, {512, 9}}),
                           "as published; the cofactor and CM identities fail"));
    cat.push_back(make_cvd("DryloCVD30", 30,
                           from_terms({{1, 0}, {9, 1}, {-50, 2}, {150, 3}, {-125, 4},
                                       {-6875, 5}, {-43750, 6}, {-140625, 8}, {2353750, 9},
                                       {19531250, 10}, {78125000, 11}, {195312500, 12},
                                       {244140625, 13}}, 4),
                           from_terms({{1, 0}, {5, 1}, {-125, 2}, {-625, 4}, {-3125, 5},
                                       {78125, 7}, {390625, 8}}),
                           P({1, 0, -25}),
                           "as published; the divisibility and CM identities fail"));

    cat.push_back(make_sparse("DryloSparse8a", 8,
                              P({1, 5, 15, 25, 25}),
                              P({4, 10, 25, 25, 25}),
                              P({3, 5, 10}),
                              "as published; the k = 8 divisibility fails"));
    cat.push_back(make_sparse("DryloSparse8b", 8,
                              PD({-63, 186, 135, -36, 7, -6, 1}, 576),
                              P({9, 0, -2, 0, 1}),
                              PD({9, 5, 3, -1}, 12)));
    cat.push_back(make_sparse("DryloSparse12", 12,
                              PD({-423, 258, 202, -56, 18, -8, 1}, 900),
                              P({13, 4, -3, -2, 1}),
                              PD({6, 5, 4, -1}, 12),
                              "as published; the k = 12 divisibility fails"));

    // cyclotomic sparse rows: only (t, g, y, rho) are published
    cat.push_back(make_partial("CycloSparse5", 5, P({1, 1}), P({3, -2, 3}),
                               P({-1, -2, -2}), Rational(3, 2)));
    cat.push_back(make_partial("CycloSparse8", 8, P({1, 0, 0, -1}), P({7, -26, 7}),
                               PD({-3, 1, -3}, 17), Rational(3, 2)));
    cat.push_back(make_partial("CycloSparse10a", 10, P({1, 0, 0, 1}), P({3, 10, 3}),
                               PD({1, 3, 1}, 11), Rational(3, 2)));
    cat.push_back(make_partial("CycloSparse10b", 10, P({1, 0, 0, 1}), P({15, 50, 15}),
                               PD({7, -1, 7}, 71), Rational(3, 2)));
    cat.push_back(make_partial("CycloSparse7", 7, P({1, 0, 0, 0, 0, 1}), P({208, 375, 208}),
                               PD({38, -23, 50, -23, 38}, 55), Rational(5, 3)));
    cat.push_back(make_partial("CycloSparse9", 9, P({1, 0, 0, 0, 0, 1}), P({8, 35, 8}),
                               PD({-1, 18, 4, 18, -1}, 109), Rational(5, 3)));
    cat.push_back(make_partial("CycloSparse14a", 14, P({1, 0, 0, 0, 0, 1}), P({4, 5, 4}),
                               P({-2, 5, -6, 5, -2}), Rational(5, 3)));
    cat.push_back(make_partial("CycloSparse18a", 18, P({1, 0, 0, 0, 0, 1}), P({4, 9, 4}),
                               PD({-3, 2, 8, 2, -3}, 19), Rational(5, 3)));
    cat.push_back(make_partial("CycloSparse30", 30, P({1, 0, 0, 0, 0, 0, 0, 1}),
                               P({155, 350, 155}),
                               PD({433, -293, -149, 637, -149, -293, 433}, 9755),
                               Rational(7, 4)));
    cat.push_back(make_partial("CycloSparse10c", 10, P({1, 1}), P({15, 50, 15}),
                               PD({-1, 0, 8, -8}, 19), Rational(2)));
    cat.push_back(make_partial("CycloSparse14b", 14, P({1, 0, -1}), P({4, 5, 4}),
                               P({2, -2, 0, 3, -4, 3}), Rational(2)));
    cat.push_back(make_partial("CycloSparse18b", 18, P({1, 1}), P({4, 9, 4}),
                               PD({-10, 6, 6, 0, 1, -7}, 19), Rational(2)));
    cat.push_back(make_partial("CycloSparse18c", 18, P({1, 1}), P({19, 30, 19}),
                               PD({29, -12, -24, 0, -14, 26}, 37), Rational(2)));
    cat.push_back(make_partial("CycloSparse15", 15, P({1, 0, 1}), P({3, -18, 3}),
                               PD({-15, 7, 6, 14, 20, -22, -8, 20}, 93), Rational(2)));
    cat.push_back(make_partial("CycloSparse20", 20, P({1, 1}), P({-55, 0, 40}),
                               PD({-20, 88, -68, -24, 4, 43, -23, -20}, 505), Rational(2)));

    for (auto& fd : cat) validate_family(fd);
    return cat;
}

}  // namespace

const std::vector<FamilyDescriptor>& builtin_catalog() {
    static const std::vector<FamilyDescriptor> cat = build_catalog();
    return cat;
}

const FamilyDescriptor* find_family(const std::string& name) {
    for (const auto& fd : builtin_catalog())
        if (fd.name == name) return &fd;
    return nullptr;
}

bool seed_admissible(const FamilyDescriptor& fd, const Integer& u) {
    for (const auto& [res, mod] : fd.seed_residues) {
        Integer m = u % mod;
        if (m < 0) m += mod;
        if (m == res) return true;
    }
    return false;
}

CurveInstance instantiate(const FamilyDescriptor& fd, const Integer& u) {
    if (!fd.p_poly || !fd.r_poly)
        throw error("family " + fd.name + " is partially specified; nothing to instantiate");
    if (!seed_admissible(fd, u))
        throw error("seed " + int_to_dec(u) + " is outside the admissible residue classes of " +
                    fd.name);
    auto as_int = [&](const RatPoly& f, const char* what) {
        Rational v = f.eval(u);
        if (v.get_den() != 1)
            throw error(std::string("non-integral evaluation of ") + what + " for " + fd.name);
        return Integer(v.get_num());
    };
    CurveInstance inst;
    inst.family = fd.name;
    inst.k = fd.k;
    inst.u = u;
    inst.p = as_int(*fd.p_poly, "p");
    Integer r_full = as_int(*fd.r_poly, "r");
    if (fd.r_content > 1 && r_full % fd.r_content == 0) r_full /= fd.r_content;
    inst.r = abs(r_full);
    inst.t = as_int(fd.t_poly, "t");

    Integer f = 4 * inst.p - inst.t * inst.t;
    if (f < 0) throw error("CM norm 4p - t^2 is negative for this seed");
    if (f == 0) {
        inst.d = fd.d ? *fd.d : Integer(1);
        inst.cm_y = 0;
    } else if (fd.kind == FamilyKind::CompleteFixedD) {
        inst.d = *fd.d;
        if (fd.cm_y) {
            inst.cm_y = abs(as_int(*fd.cm_y, "y"));
        } else {
            auto y = integer_sqrt_exact(f / *fd.d);
            if (!y || f % *fd.d != 0) throw error("CM identity fails numerically");
            inst.cm_y = *y;
        }
        if (inst.d * inst.cm_y * inst.cm_y != f) throw error("CM identity fails numerically");
    } else {
        // variable discriminant: strip the known square part, then the square
        // content of what remains
        Integer aux = fd.cm_y ? abs(as_int(*fd.cm_y, "cm-aux")) : Integer(1);
        if (aux == 0 || f % (aux * aux) != 0) throw error("CM square part fails numerically");
        Integer core = f / (aux * aux);
        Integer square_free = 1, square_root = 1;
        for (const auto& [q, e] : factorize(core)) {
            if (e % 2 == 1) square_free *= q;
            Integer half;
            mpz_pow_ui(half.get_mpz_t(), q.get_mpz_t(), e / 2);
            square_root *= half;
        }
        inst.d = square_free;
        inst.cm_y = aux * square_root;
        if (inst.d * inst.cm_y * inst.cm_y != f) throw error("CM identity fails numerically");
    }

    if (inst.r == 0) throw error("r(u) vanishes at this seed");
    Integer order = inst.p + 1 - inst.t;
    if (order % inst.r != 0) throw error("r does not divide p + 1 - t for this seed");
    inst.cofactor = order / inst.r;
    return inst;
}

void synthesize_curve(CurveInstance& inst, Rng& rng, const Integer& naive_bound) {
    if (inst.d != 1 && inst.d != 3) throw error("unsupported discriminant (only D in {1,3})");
    Field fp = Field::prime(inst.p);
    Integer order = inst.p + 1 - inst.t;

    for (long coeff = 1; coeff < 10000; ++coeff) {
        std::optional<CurveParams> curve;
        if (inst.d == 3) {
            FieldElement b = fp.from_integer(coeff);
            if (b.is_zero()) continue;
            curve = CurveParams(fp, fp.zero(), b);
        } else {
            FieldElement a = fp.from_integer(coeff);
            if (a.is_zero()) continue;
            curve = CurveParams(fp, a, fp.zero());
        }
        bool plausible = false;
        for (int probe = 0; probe < 4 && !plausible; ++probe) {
            CurvePoint pt = random_point(*curve, rng);
            CurvePoint q = scalar_mul(inst.cofactor, pt);
            if (!q.is_infinity() && scalar_mul(inst.r, q).is_infinity()) plausible = true;
        }
        if (!plausible) continue;
        // confirm the full order when counting is affordable
        if (inst.p <= naive_bound) {
            GroupInfo info = count_points_naive(*curve, naive_bound);
            if (info.order != order) continue;
        } else {
            CurvePoint pt = random_point(*curve, rng);
            if (!scalar_mul(order, pt).is_infinity()) continue;
        }
        if (inst.d == 3) {
            inst.curve_a = 0;
            inst.curve_b = coeff;
        } else {
            inst.curve_a = coeff;
            inst.curve_b = 0;
        }
        return;
    }
    throw error("curve synthesis scan budget exhausted");
}

namespace {

json poly_json(const RatPoly& f) {
    json arr = json::array();
    for (int i = 0; i <= f.degree(); ++i) arr.push_back(rat_to_text(f.coeff(i)));
    return arr;
}

}  // namespace

std::string family_to_json(const FamilyDescriptor& fd) {
    json j;
    j["name"] = fd.name;
    j["k"] = fd.k;
    j["kind"] = kind_name(fd.kind);
    if (fd.d) j["d"] = int_to_dec(*fd.d);
    if (fd.p_poly) j["p"] = poly_json(*fd.p_poly);
    if (fd.r_poly) j["r"] = poly_json(*fd.r_poly);
    j["t"] = poly_json(fd.t_poly);
    if (fd.cm_y) j["cm_y"] = poly_json(*fd.cm_y);
    if (fd.cm_g) j["cm_g"] = poly_json(*fd.cm_g);
    if (fd.cofactor_h) j["h"] = poly_json(*fd.cofactor_h);
    j["rho"] = rat_to_text(rho_value(fd));
    j["r_content"] = int_to_dec(fd.r_content);
    json res = json::array();
    for (const auto& [r, m] : fd.seed_residues)
        res.push_back({{"residue", int_to_dec(r)}, {"modulus", int_to_dec(m)}});
    j["seed_residues"] = res;
    j["partially_specified"] = fd.partially_specified;
    if (!fd.notes.empty()) j["notes"] = fd.notes;
    j["validation"] = {{"r_irreducible", status_name(fd.validation.r_irreducible)},
                       {"phik_divisibility", status_name(fd.validation.phik_divisibility)},
                       {"cofactor_identity", status_name(fd.validation.cofactor_identity)},
                       {"cm_identity", status_name(fd.validation.cm_identity)},
                       {"seed_integrality", status_name(fd.validation.seed_integrality)},
                       {"valid", fd.validation.valid()}};
    if (!fd.validation.detail.empty()) j["validation"]["detail"] = fd.validation.detail;
    return j.dump(2);
}

std::string catalog_to_json() {
    json arr = json::array();
    for (const auto& fd : builtin_catalog()) arr.push_back(json::parse(family_to_json(fd)));
    return arr.dump(2);
}

std::string instance_to_json(const CurveInstance& inst) {
    json j;
    j["family"] = inst.family;
    j["k"] = inst.k;
    j["u"] = int_to_hex(inst.u);
    j["p"] = int_to_hex(inst.p);
    j["r"] = int_to_hex(inst.r);
    j["t"] = int_to_hex(inst.t);
    j["d"] = int_to_dec(inst.d);
    j["cm_y"] = int_to_hex(inst.cm_y);
    j["cofactor"] = int_to_hex(inst.cofactor);
    if (inst.curve_a) j["curve_a"] = int_to_hex(*inst.curve_a);
    if (inst.curve_b) j["curve_b"] = int_to_hex(*inst.curve_b);
    return j.dump(2);
}

}  // namespace pfec
