#include "pfec/construct.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <thread>

namespace pfec {

namespace {

RatPoly poly_mod(const RatPoly& a, const RatPoly& m) { return a.divmod(m).second; }

RatPoly poly_mulmod(const RatPoly& a, const RatPoly& b, const RatPoly& m) {
    return poly_mod(a * b, m);
}

RatPoly poly_powmod(RatPoly base, Integer e, const RatPoly& m) {
    RatPoly acc = RatPoly::constant(1);
    base = poly_mod(base, m);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) acc = poly_mulmod(acc, base, m);
        base = poly_mulmod(base, base, m);
        e >>= 1;
    }
    return acc;
}

// extended Euclid in Q[x]: inverse of a mod m
RatPoly poly_invmod(const RatPoly& a, const RatPoly& m) {
    RatPoly r0 = m, r1 = poly_mod(a, m);
    RatPoly s0 = RatPoly::zero(), s1 = RatPoly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r2] = r0.divmod(r1);
        RatPoly s2 = s0 - q * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    if (r0.degree() != 0) throw error("polynomial is not invertible modulo r(x)");
    return s0 * (Rational(1) / r0.coeff(0));
}

bool is_primitive_root_poly(const RatPoly& z, unsigned k, const RatPoly& r) {
    if (poly_powmod(z, Integer(k), r) != RatPoly::constant(1)) return false;
    for (unsigned d = 1; d < k; ++d)
        if (k % d == 0 && poly_powmod(z, Integer(d), r) == RatPoly::constant(1)) return false;
    return true;
}

// Detects r == Phi_m (primitive part) and returns m, if any.
std::optional<unsigned> cyclotomic_index(const RatPoly& r) {
    RatPoly prim = r.primitive_part();
    int deg = prim.degree();
    for (unsigned m = 1; m <= 200; ++m) {
        RatPoly c = RatPoly::cyclotomic(m);
        if (c.degree() == deg && c == prim) return m;
    }
    return std::nullopt;
}

std::vector<RatPoly> primitive_kth_root_images(unsigned k, const RatPoly& r) {
    std::vector<RatPoly> out;
    auto push_unique = [&](const RatPoly& z) {
        if (std::find(out.begin(), out.end(), z) == out.end()) out.push_back(z);
    };
    if (auto m = cyclotomic_index(r)) {
        if (*m % k == 0) {
            RatPoly x = RatPoly::monomial(1, 1);
            for (unsigned j = 1; j < k; ++j) {
                if (std::gcd(j, k) != 1) continue;
                RatPoly z = poly_powmod(x, Integer((*m / k) * j), r);
                if (is_primitive_root_poly(z, k, r)) push_unique(z);
            }
        }
    }
    if (out.empty()) {
        // small-candidate search: +-x^i
        RatPoly x = RatPoly::monomial(1, 1);
        for (int i = 1; i <= 2 * r.degree(); ++i) {
            RatPoly z = poly_powmod(x, Integer(i), r);
            for (const RatPoly& cand : {z, -z})
                if (is_primitive_root_poly(cand, k, r)) push_unique(cand);
        }
    }
    // deterministic order: by representative degree, then string form
    std::sort(out.begin(), out.end(), [](const RatPoly& a, const RatPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.to_string() < b.to_string();
    });
    return out;
}

std::optional<RatPoly> sqrt_minus_d_image(const Integer& d, const RatPoly& r) {
    auto check = [&](const RatPoly& s) {
        return poly_mod(s * s + RatPoly::constant(Rational(d)), r).is_zero();
    };
    RatPoly x = RatPoly::monomial(1, 1);
    if (auto m = cyclotomic_index(r)) {
        if (d == 1 && *m % 4 == 0) {
            RatPoly s = poly_powmod(x, Integer(*m / 4), r);
            if (check(s)) return s;
        }
        if (d == 3 && *m % 3 == 0) {
            RatPoly s = poly_powmod(x, Integer(*m / 3), r) * Rational(2) + RatPoly::constant(1);
            if (check(s)) return s;
        }
        if (d == 2 && *m % 8 == 0) {
            RatPoly z8 = poly_powmod(x, Integer(*m / 8), r);
            RatPoly s = poly_mod(z8 + poly_powmod(z8, Integer(3), r), r);
            if (check(s)) return s;
        }
    }
    // small-candidate fallback
    for (int i = 1; i <= 2 * r.degree(); ++i) {
        RatPoly base = poly_powmod(x, Integer(i), r);
        for (long c1 : {1, 2}) {
            for (long c0 : {0, 1, -1}) {
                RatPoly s = base * Rational(c1) + RatPoly::constant(c0);
                if (check(s)) return s;
            }
        }
    }
    return std::nullopt;
}

}  // namespace

CocksPinchResult cocks_pinch(unsigned k, const Integer& d, const Integer& r, Rng& rng,
                             int retry_budget) {
    if (!is_probable_prime(r)) throw error("cocks_pinch needs a prime r");
    if ((r - 1) % k != 0) throw error("k must divide r - 1");
    Integer md = (-d) % r;
    if (md < 0) md += r;
    auto s = sqrt_mod_prime(md, r);
    if (!s) throw error("-D is not a quadratic residue mod r");

    for (int attempt = 0; attempt < retry_budget; ++attempt) {
        Integer g = find_generator(r, rng);
        Integer z = mod_pow(g, (r - 1) / k, r);
        // z is a primitive k-th root; try both square-root signs and parity lifts
        for (const Integer& sq : {Integer(*s), Integer(r - *s)}) {
            Integer t0 = (z + 1) % r;
            Integer y0 = ((t0 - 2) % r) * mod_inv(sq, r) % r;
            if (y0 < 0) y0 += r;
            for (const Integer& t : {Integer(t0), Integer(t0 + r)}) {
                for (const Integer& y : {Integer(y0), Integer(y0 + r)}) {
                    Integer norm = t * t + d * y * y;
                    if (norm % 4 != 0) continue;
                    Integer p = norm / 4;
                    if (p <= 3 || p == r) continue;
                    if (!is_probable_prime(p)) continue;
                    if (mod_pow(p % r, Integer(k), r) != 1) continue;
                    return CocksPinchResult{p, t, y, r, k, d};
                }
            }
        }
    }
    throw error("cocks_pinch: no prime p found within the retry budget");
}

unsigned brezing_weng_choices(unsigned k, const Integer& d, const RatPoly& r_poly) {
    auto roots = primitive_kth_root_images(k, r_poly);
    auto s = sqrt_minus_d_image(d, r_poly);
    if (!s || roots.empty()) return 0;
    return static_cast<unsigned>(roots.size() * 2);
}

FamilyDescriptor brezing_weng(unsigned k, const Integer& d, const RatPoly& r_poly,
                              unsigned root_choice) {
    if (irreducible_over_q(r_poly.primitive_part()) == Irreducibility::Reducible)
        throw error("brezing_weng needs an irreducible r(x)");
    auto roots = primitive_kth_root_images(k, r_poly);
    if (roots.empty()) throw error("no primitive k-th root of unity in Q[x]/(r)");
    auto s0 = sqrt_minus_d_image(d, r_poly);
    if (!s0) throw error("sqrt(-D) has no image in Q[x]/(r)");

    unsigned total = static_cast<unsigned>(roots.size() * 2);
    if (root_choice >= total) throw error("root_choice out of range");
    const RatPoly& z = roots[root_choice / 2];
    RatPoly s = (root_choice % 2 == 0) ? *s0 : -*s0;

    RatPoly t = poly_mod(z + RatPoly::constant(1), r_poly);
    RatPoly y = poly_mulmod(z - RatPoly::constant(1), poly_invmod(s, r_poly), r_poly);
    RatPoly p = (t * t + y * RatPoly::constant(Rational(d)) * y) * Rational(1, 4);

    FamilyDescriptor fd;
    fd.name = "BW" + std::to_string(k) + "-D" + int_to_dec(d) + "-c" + std::to_string(root_choice);
    fd.k = k;
    fd.kind = FamilyKind::CompleteFixedD;
    fd.d = d;
    fd.p_poly = p;
    fd.r_poly = r_poly;
    fd.t_poly = t;
    fd.rho = rho_value(fd);
    validate_family(fd);
    return fd;
}

// ---- exact linear algebra over Q for the Drylo construction ----

namespace {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;

// Solves M c = rhs (square or tall). Returns nullopt when inconsistent.
std::optional<Vec> solve_linear(Mat m, Vec rhs) {
    std::size_t rows = m.size();
    std::size_t cols = rows ? m[0].size() : 0;
    std::vector<int> pivot_col_of_row;
    std::size_t rank_row = 0;
    for (std::size_t col = 0; col < cols && rank_row < rows; ++col) {
        std::size_t pivot = rank_row;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank_row]);
        std::swap(rhs[pivot], rhs[rank_row]);
        Rational inv = Rational(1) / m[rank_row][col];
        for (std::size_t j = col; j < cols; ++j) m[rank_row][j] *= inv;
        rhs[rank_row] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank_row || m[i][col] == 0) continue;
            Rational f = m[i][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[rank_row][j];
            rhs[i] -= f * rhs[rank_row];
        }
        pivot_col_of_row.push_back(static_cast<int>(col));
        ++rank_row;
    }
    for (std::size_t i = rank_row; i < rows; ++i)
        if (rhs[i] != 0) return std::nullopt;
    Vec out(cols, Rational(0));
    for (std::size_t i = 0; i < rank_row; ++i) out[pivot_col_of_row[i]] = rhs[i];
    return out;
}

Vec field_mul(const Vec& a, const Vec& b, const RatPoly& modulus) {
    RatPoly pa{std::vector<Rational>(a)}, pb{std::vector<Rational>(b)};
    RatPoly prod = poly_mod(pa * pb, modulus);
    Vec out(modulus.degree(), Rational(0));
    for (int i = 0; i < prod.degree() + 1; ++i) out[i] = prod.coeff(i);
    return out;
}

}  // namespace

FamilyDescriptor drylo_cvd(unsigned k, unsigned zeta_power, const Rational& scale) {
    RatPoly phi = RatPoly::cyclotomic(k);
    int n = phi.degree();  // [K : Q]
    if (n < 2) throw error("drylo_cvd needs phi(k) >= 2");
    if (scale == 0) throw error("z must be nonzero");

    // z = scale * zeta^zeta_power, a = -z^2, all as vectors in the zeta basis
    Vec z(n, Rational(0));
    {
        RatPoly zp = poly_mod(RatPoly::monomial(scale, static_cast<int>(zeta_power)), phi);
        for (int i = 0; i <= zp.degree(); ++i) z[i] = zp.coeff(i);
    }
    Vec a = field_mul(z, z, phi);
    for (auto& v : a) v = -v;

    // powers of a; minimal polynomial must have degree n for a primitive element
    std::vector<Vec> powers;
    Vec cur(n, Rational(0));
    cur[0] = 1;
    for (int i = 0; i <= n; ++i) {
        powers.push_back(cur);
        cur = field_mul(cur, a, phi);
    }
    // dependency: a^n = sum_{i<n} c_i a^i  ->  minpoly x^n - sum c_i x^i
    Mat m(n, Vec(n, Rational(0)));
    Vec rhs(n, Rational(0));
    for (int row = 0; row < n; ++row) {
        for (int i = 0; i < n; ++i) m[row][i] = powers[i][row];
        rhs[row] = powers[n][row];
    }
    auto coeffs = solve_linear(m, rhs);
    if (!coeffs) throw error("a = -z^2 is not expressible; construction failed");
    std::vector<Rational> rvec(n + 1, Rational(0));
    for (int i = 0; i < n; ++i) rvec[i] = -(*coeffs)[i];
    rvec[n] = 1;
    RatPoly r{std::move(rvec)};
    if (irreducible_over_q(r.primitive_part()) == Irreducibility::Reducible)
        throw error("a = -z^2 is not a primitive element of Q(zeta_k)");

    // express zeta and (zeta - 1)/z in powers of a
    auto in_powers_of_a = [&](const Vec& target) {
        Mat mm(n, Vec(n, Rational(0)));
        Vec rr(n, Rational(0));
        for (int row = 0; row < n; ++row) {
            for (int i = 0; i < n; ++i) mm[row][i] = powers[i][row];
            rr[row] = target[row];
        }
        auto sol = solve_linear(mm, rr);
        if (!sol) throw error("element lies outside Q(a); construction failed");
        return RatPoly{std::vector<Rational>(*sol)};
    };

    Vec zeta(n, Rational(0));
    if (n > 1) zeta[1] = 1;
    RatPoly t = in_powers_of_a(zeta) + RatPoly::constant(1);

    // z^-1 = scale^-1 * zeta^(k - zeta_power)
    Vec zinv(n, Rational(0));
    {
        RatPoly zp = poly_mod(
            RatPoly::monomial(Rational(1) / scale, static_cast<int>(k - (zeta_power % k))), phi);
        for (int i = 0; i <= zp.degree(); ++i) zinv[i] = zp.coeff(i);
    }
    Vec zm1 = zeta;
    zm1[0] -= 1;
    RatPoly y = in_powers_of_a(field_mul(zm1, zinv, phi));

    RatPoly x = RatPoly::monomial(1, 1);
    RatPoly p = (t * t + x * y * y) * Rational(1, 4);

    FamilyDescriptor fd;
    fd.name = "DryloCVD-k" + std::to_string(k) + "-z" + std::to_string(zeta_power);
    fd.k = k;
    fd.kind = FamilyKind::CompleteVariableD;
    fd.p_poly = p;
    fd.r_poly = r;
    fd.t_poly = poly_mod(t, r);
    fd.rho = rho_value(fd);
    validate_family(fd);
    return fd;
}

FamilyDescriptor cvd_fix_discriminant(const FamilyDescriptor& fd, const Integer& d) {
    if (fd.kind != FamilyKind::CompleteVariableD)
        throw error("discriminant substitution applies to variable-discriminant families");
    if (!fd.p_poly || !fd.r_poly) throw error("family is partially specified");
    RatPoly inner = RatPoly::monomial(Rational(d), 2);  // x -> d x^2
    FamilyDescriptor out;
    out.name = fd.name + "-D" + int_to_dec(d);
    out.k = fd.k;
    out.kind = FamilyKind::CompleteFixedD;
    out.d = d;
    out.p_poly = fd.p_poly->compose(inner);
    out.r_poly = fd.r_poly->compose(inner);
    out.t_poly = fd.t_poly.compose(inner);
    out.rho = rho_value(out);
    validate_family(out);
    return out;
}

std::pair<Integer, Integer> pell_fundamental(const Integer& d) {
    if (d <= 0 || integer_sqrt_exact(d)) throw error("pell needs a positive non-square d");
    Integer a0;
    mpz_sqrt(a0.get_mpz_t(), d.get_mpz_t());
    // continued fraction of sqrt(d): m, den, a sequences with convergents h/k
    Integer m = 0, den = 1, a = a0;
    Integer h_prev = 1, h = a0, k_prev = 0, k = 1;
    while (true) {
        m = den * a - m;
        den = (d - m * m) / den;
        a = (a0 + m) / den;
        Integer h_next = a * h + h_prev;
        Integer k_next = a * k + k_prev;
        h_prev = h;
        h = h_next;
        k_prev = k;
        k = k_next;
        if (h_prev * h_prev - d * k_prev * k_prev == 1) return {h_prev, k_prev};
        if (h * h - d * k * k == 1) return {h, k};
    }
}

std::vector<PellSolution> pell_solve(const PellInstance& inst, const Integer& bound) {
    const Integer& d = inst.d_coeff;
    const Integer& n = inst.n_rhs;
    if (d <= 0 || integer_sqrt_exact(d)) throw error("pell_solve needs a positive non-square d");
    if (n == 0) return {};

    auto [x1, y1] = pell_fundamental(d);

    // class representatives by bounded search (LMM-style bounds)
    std::set<std::pair<Integer, Integer>> seen;
    std::vector<std::pair<Integer, Integer>> reps;
    Integer y_hi;
    if (n > 0) {
        // 0 <= y <= sqrt(n (x1 - 1) / (2 d))
        Integer num = n * (x1 - 1);
        mpz_sqrt(y_hi.get_mpz_t(), Integer(num / (2 * d) + 1).get_mpz_t());
    } else {
        Integer num = (-n) * (x1 + 1);
        mpz_sqrt(y_hi.get_mpz_t(), Integer(num / (2 * d) + 1).get_mpz_t());
    }
    y_hi += 2;
    for (Integer y = 0; y <= y_hi; ++y) {
        Integer xx = n + d * y * y;
        if (xx < 0) continue;
        auto x = integer_sqrt_exact(xx);
        if (!x) continue;
        for (const Integer& sx : {Integer(*x), Integer(-*x)}) {
            for (const Integer& sy : {Integer(y), Integer(-y)}) {
                if (seen.insert({sx, sy}).second) reps.emplace_back(sx, sy);
                if (y == 0) break;
            }
            if (*x == 0) break;
        }
    }

    std::set<std::pair<Integer, Integer>> sols;
    int class_idx = 0;
    std::map<std::pair<Integer, Integer>, int> class_of;
    for (const auto& [x0, y0] : reps) {
        class_of.emplace(std::make_pair(abs(x0), abs(y0)), class_idx);
        Integer x = x0, y = y0;
        // walk the orbit under the fundamental unit in both directions
        for (int dir = 0; dir < 2; ++dir) {
            Integer cx = x, cy = y;
            for (int step = 0; step < 4096; ++step) {
                if (abs(cx) > bound) break;
                sols.insert({abs(cx), abs(cy)});
                Integer nx, ny;
                if (dir == 0) {
                    nx = cx * x1 + cy * y1 * d;
                    ny = cx * y1 + cy * x1;
                } else {
                    nx = cx * x1 - cy * y1 * d;
                    ny = -cx * y1 + cy * x1;
                }
                cx = nx;
                cy = ny;
            }
        }
        ++class_idx;
    }
    std::vector<PellSolution> out;
    for (const auto& [x, y] : sols) {
        PellSolution s;
        s.x = x;
        s.y = y;
        auto it = class_of.find({x, y});
        s.class_index = it != class_of.end() ? it->second : -1;
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(),
              [](const PellSolution& a, const PellSolution& b) { return a.x < b.x; });
    return out;
}

namespace {

// D y^2 = A u^2 + B u + C  ->  X^2 - (4 A D) y^2 = B^2 - 4 A C, X = 2 A u + B,
// reduced by g = gcd(2A, B) when the reduction stays integral.
PellInstance complete_square(const Rational& ar, const Rational& br, const Rational& cr,
                             const Integer& d, std::string what) {
    Integer lcm = 1;
    for (const Rational& v : {ar, br, cr})
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
    Integer a = Rational(ar * lcm).get_num();
    Integer b = Rational(br * lcm).get_num();
    Integer c = Rational(cr * lcm).get_num();
    if (a <= 0) throw error("quadratic form must open upward");

    PellInstance inst;
    Integer dd = 4 * a * d * lcm;
    Integer nn = b * b - 4 * a * c;
    Integer scale = 1, offset = -b, div = 2 * a;
    Integer g = gcd(2 * a, b);
    if (g > 1 && dd % (g * g) == 0 && nn % (g * g) == 0) {
        dd /= g * g;
        nn /= g * g;
        scale = g;
    }
    inst.d_coeff = dd;
    inst.n_rhs = nn;
    inst.subst_scale = scale;
    inst.subst_offset = offset;
    inst.subst_div = div;
    inst.description = what;
    if (integer_sqrt_exact(dd))
        throw error("completed square has a square coefficient; not a Pell instance");
    return inst;
}

}  // namespace

PellInstance scott_barreto_pell(unsigned k, const Integer& h, const Integer& den) {
    RatPoly phi = RatPoly::cyclotomic(k);
    RatPoly xm1 = RatPoly::monomial(1, 1) - RatPoly::constant(1);
    RatPoly rhs = phi * Rational(4 * h, den) - xm1 * xm1;
    if (rhs.degree() != 2)
        throw error("right-hand side is not quadratic for k = " + std::to_string(k));
    return complete_square(rhs.coeff(2), rhs.coeff(1), rhs.coeff(0), Integer(1),
                           "scott-barreto k=" + std::to_string(k) + " h=" + int_to_dec(h) +
                               " d=" + int_to_dec(den) + " (multiply d_coeff by D)");
}

PellInstance mnt_pell_instance(const FamilyDescriptor& fd, const Integer& d) {
    if (!fd.p_poly) throw error("family is partially specified");
    RatPoly f = *fd.p_poly * Rational(4) - fd.t_poly * fd.t_poly;
    if (f.degree() != 2) throw error("CM polynomial is not quadratic");
    return complete_square(f.coeff(2), f.coeff(1), f.coeff(0), d,
                           fd.name + " CM equation, D=" + int_to_dec(d));
}

namespace {

void mnt_scan_range(const FamilyDescriptor& fd, unsigned k, const MntSearchOptions& opts,
                    const Integer& from, const Integer& to, std::vector<CurveInstance>& out) {
    for (Integer u = from; u <= to; ++u) {
        if (u == 0) continue;
        for (const Integer& su : {Integer(u), Integer(-u)}) {
            Rational pv = fd.p_poly->eval(su);
            if (pv.get_den() != 1) continue;
            Integer p = pv.get_num();
            if (p < 5 || !is_probable_prime(p)) continue;
            Integer t = fd.t_poly.eval(su).get_num();
            Integer order = p + 1 - t;
            for (const Integer& h : opts.cofactors) {
                if (order % h != 0) continue;
                Integer r = order / h;
                if (r < 5 || !is_probable_prime(r)) continue;
                if (gcd(r, p) != 1) continue;
                // exact embedding-degree filter
                Integer group = r - 1;
                Integer ord = multiplicative_order(p % r, r, group, factorize(group));
                if (ord != k) continue;
                Integer f = 4 * p - t * t;
                if (f <= 0) continue;
                Integer square_free = 1, root = 1;
                for (const auto& [q, e] : factorize(f)) {
                    if (e % 2 == 1) square_free *= q;
                    Integer halfp;
                    mpz_pow_ui(halfp.get_mpz_t(), q.get_mpz_t(), e / 2);
                    root *= halfp;
                }
                if (square_free > opts.d_max) continue;
                CurveInstance inst;
                inst.family = fd.name;
                inst.k = k;
                inst.u = su;
                inst.p = p;
                inst.r = r;
                inst.t = t;
                inst.d = square_free;
                inst.cm_y = root;
                inst.cofactor = h;
                out.push_back(std::move(inst));
            }
        }
    }
}

}  // namespace

std::vector<CurveInstance> mnt_search(unsigned k, const MntSearchOptions& opts) {
    std::vector<const FamilyDescriptor*> fams;
    for (const auto& fd : builtin_catalog())
        if (fd.k == k && fd.name.rfind("MNT", 0) == 0) fams.push_back(&fd);
    if (fams.empty()) throw error("mnt_search supports k in {3, 4, 6}");

    unsigned workers = std::max(1u, opts.workers);
    std::vector<CurveInstance> all;
    for (const auto* fd : fams) {
        std::vector<std::vector<CurveInstance>> buckets(workers);
        std::vector<std::thread> threads;
        Integer chunk = opts.u_bound / workers + 1;
        for (unsigned w = 0; w < workers; ++w) {
            Integer from = Integer(1) + chunk * w;
            Integer to = std::min(Integer(chunk * (w + 1)), opts.u_bound);
            if (from > to) continue;
            threads.emplace_back([&, w, from, to] {
                mnt_scan_range(*fd, k, opts, from, to, buckets[w]);
            });
        }
        for (auto& th : threads) th.join();
        for (auto& b : buckets) all.insert(all.end(), b.begin(), b.end());
    }
    std::sort(all.begin(), all.end(), [](const CurveInstance& a, const CurveInstance& b) {
        if (a.u != b.u) return a.u < b.u;
        if (a.p != b.p) return a.p < b.p;
        return a.r < b.r;
    });
    all.erase(std::unique(all.begin(), all.end(),
                          [](const CurveInstance& a, const CurveInstance& b) {
                              return a.p == b.p && a.r == b.r && a.t == b.t;
                          }),
              all.end());
    return all;
}

}  // namespace pfec
