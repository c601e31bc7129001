#include "pfec/field.hpp"

#include <algorithm>
#include <sstream>

namespace pfec {

namespace {

void reduce_coords(std::vector<Integer>& c, const FieldDesc& d) {
    // polynomial reduction by the monic modulus, then coefficient reduction
    const auto& m = d.reduction;
    if (d.degree > 1) {
        while (c.size() > d.degree) {
            Integer lead = c.back() % d.p;
            std::size_t shift = c.size() - m.size();
            if (lead != 0)
                for (std::size_t i = 0; i + 1 < m.size(); ++i) c[i + shift] -= lead * m[i];
            c.pop_back();
        }
        c.resize(d.degree, Integer(0));
    } else {
        c.resize(1, Integer(0));
    }
    for (auto& v : c) {
        v %= d.p;
        if (v < 0) v += d.p;
    }
}

}  // namespace

Field Field::prime(const Integer& p, int mr_rounds) {
    if (!is_probable_prime(p, mr_rounds)) throw error("field modulus fails primality: " + int_to_dec(p));
    auto d = std::make_shared<FieldDesc>();
    d->p = p;
    d->degree = 1;
    return Field(std::move(d));
}

Field Field::extension(const Field& base, const std::vector<Integer>& reduction) {
    if (!base.is_prime_field()) throw error("towers are built as a single extension of a prime field");
    if (reduction.size() < 3) throw error("extension degree must be at least 2");
    if (reduction.back() != 1) throw error("reduction polynomial must be monic");
    if (!is_irreducible_mod_p(reduction, base.characteristic()))
        throw error("reduction polynomial is reducible");
    auto d = std::make_shared<FieldDesc>();
    d->p = base.characteristic();
    d->degree = static_cast<unsigned>(reduction.size() - 1);
    d->reduction = reduction;
    for (auto& v : d->reduction) {
        v %= d->p;
        if (v < 0) v += d->p;
    }
    return Field(std::move(d));
}

Field Field::extension(const Field& base, unsigned k) {
    if (k < 2) throw error("extension degree must be at least 2");
    return extension(base, find_irreducible(base.characteristic(), k));
}

Integer Field::order() const {
    Integer o;
    mpz_pow_ui(o.get_mpz_t(), d_->p.get_mpz_t(), d_->degree);
    return o;
}

FieldElement Field::zero() const { return from_integer(0); }
FieldElement Field::one() const { return from_integer(1); }

FieldElement Field::from_integer(const Integer& v) const {
    std::vector<Integer> c(d_->degree, Integer(0));
    c[0] = v;
    reduce_coords(c, *d_);
    return FieldElement(*this, std::move(c));
}

FieldElement Field::from_coords(std::vector<Integer> coords) const {
    reduce_coords(coords, *d_);
    return FieldElement(*this, std::move(coords));
}

FieldElement Field::random(Rng& rng) const {
    std::vector<Integer> c(d_->degree);
    for (auto& v : c) v = rng.below(d_->p);
    return FieldElement(*this, std::move(c));
}

bool Field::same(const Field& other) const {
    if (d_ == other.d_) return true;
    if (!d_ || !other.d_) return false;
    return d_->p == other.d_->p && d_->degree == other.d_->degree &&
           d_->reduction == other.d_->reduction;
}

const Integer& FieldElement::residue() const {
    if (!f_.is_prime_field()) throw error("residue() requires a prime-field element");
    return c_[0];
}

bool FieldElement::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Integer& v) { return v == 0; });
}

bool FieldElement::operator==(const FieldElement& o) const {
    return f_.same(o.f_) && c_ == o.c_;
}

void FieldElement::require_same(const FieldElement& o) const {
    if (!f_.same(o.f_)) throw error("field elements live in different containers");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    require_same(o);
    std::vector<Integer> c(c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = c_[i] + o.c_[i];
        if (c[i] >= f_.d_->p) c[i] -= f_.d_->p;
    }
    return FieldElement(f_, std::move(c));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    require_same(o);
    std::vector<Integer> c(c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = c_[i] - o.c_[i];
        if (c[i] < 0) c[i] += f_.d_->p;
    }
    return FieldElement(f_, std::move(c));
}

FieldElement FieldElement::operator-() const {
    std::vector<Integer> c(c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = c_[i] == 0 ? Integer(0) : Integer(f_.d_->p - c_[i]);
    return FieldElement(f_, std::move(c));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    require_same(o);
    if (f_.is_prime_field()) {
        std::vector<Integer> c{(c_[0] * o.c_[0]) % f_.d_->p};
        return FieldElement(f_, std::move(c));
    }
    std::vector<Integer> c(c_.size() + o.c_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    }
    reduce_coords(c, *f_.d_);
    return FieldElement(f_, std::move(c));
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw error("inversion of zero");
    if (f_.is_prime_field()) return FieldElement(f_, {mod_inv(c_[0], f_.d_->p)});
    // extended Euclid in F_p[x] against the reduction polynomial
    const Integer& p = f_.d_->p;
    std::vector<Integer> r0 = f_.d_->reduction, r1 = c_;
    while (!r1.empty() && r1.back() == 0) r1.pop_back();
    std::vector<Integer> s0{}, s1{Integer(1)};  // coefficients of *this in the combination
    auto trim = [](std::vector<Integer>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    auto sub_scaled = [&](std::vector<Integer>& a, const std::vector<Integer>& b,
                          const Integer& factor, std::size_t shift) {
        if (a.size() < b.size() + shift) a.resize(b.size() + shift, Integer(0));
        for (std::size_t i = 0; i < b.size(); ++i) {
            a[i + shift] = (a[i + shift] - factor * b[i]) % p;
            if (a[i + shift] < 0) a[i + shift] += p;
        }
        trim(a);
    };
    while (!r1.empty()) {
        // divide r0 by r1
        std::vector<Integer> q;
        Integer lead_inv = mod_inv(r1.back(), p);
        std::vector<Integer> rem = r0;
        while (rem.size() >= r1.size() && !rem.empty()) {
            Integer factor = (rem.back() * lead_inv) % p;
            std::size_t shift = rem.size() - r1.size();
            if (q.size() < shift + 1) q.resize(shift + 1, Integer(0));
            q[shift] = factor;
            sub_scaled(rem, r1, factor, shift);
        }
        std::vector<Integer> s2 = s0;
        for (std::size_t i = 0; i < q.size(); ++i)
            if (q[i] != 0) sub_scaled(s2, s1, q[i], i);
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s2;
    }
    if (r0.size() != 1) throw error("inverse does not exist (reduction not irreducible?)");
    Integer scale = mod_inv(r0[0], p);
    std::vector<Integer> out(f_.d_->degree, Integer(0));
    for (std::size_t i = 0; i < s0.size() && i < out.size(); ++i) out[i] = (s0[i] * scale) % p;
    return FieldElement(f_, std::move(out));
}

FieldElement FieldElement::operator/(const FieldElement& o) const { return *this * o.inverse(); }

FieldElement FieldElement::pow(const Integer& e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElement acc = f_.one();
    FieldElement base = *this;
    Integer k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

Integer FieldElement::order() const {
    if (is_zero()) throw error("zero has no multiplicative order");
    Integer group = f_.order() - 1;
    Integer ord = group;
    for (const auto& [q, e] : factorize(group)) {
        for (int i = 0; i < e; ++i) {
            Integer cand = ord / q;
            if (pow(cand) == f_.one())
                ord = cand;
            else
                break;
        }
    }
    return ord;
}

std::string FieldElement::to_string() const {
    if (f_.is_prime_field()) return int_to_hex(c_[0]);
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ",";
        os << int_to_hex(c_[i]);
    }
    os << "]";
    return os.str();
}

std::optional<FieldElement> sqrt_mod(const FieldElement& a) {
    if (!a.field().is_prime_field()) throw error("sqrt_mod expects a prime-field element");
    auto r = sqrt_mod_prime(a.residue(), a.field().characteristic());
    if (!r) return std::nullopt;
    return a.field().from_integer(*r);
}

std::optional<FieldElement> sqrt_in_field(const FieldElement& a) {
    const Field& f = a.field();
    if (f.is_prime_field()) return sqrt_mod(a);
    if (a.is_zero()) return f.zero();

    Integer q = f.order();
    Integer group = q - 1;
    Integer half = group / 2;
    if (a.pow(half) != f.one()) return std::nullopt;

    unsigned long s = mpz_scan1(group.get_mpz_t(), 0);
    Integer m = group >> s;
    if (s == 1) {  // q == 3 mod 4
        FieldElement r = a.pow((q + 1) / 4);
        return r * r == a ? std::optional<FieldElement>(r) : std::nullopt;
    }
    // deterministic scan for a quadratic non-residue
    FieldElement z = f.zero();
    bool found = false;
    for (Integer counter = 2; counter < 4096 && !found; ++counter) {
        std::vector<Integer> coords(f.degree());
        Integer rem = counter;
        for (auto& v : coords) {
            v = rem % f.characteristic();
            rem /= f.characteristic();
        }
        z = f.from_coords(std::move(coords));
        if (!z.is_zero() && z.pow(half) != f.one()) found = true;
    }
    if (!found) throw error("no quadratic non-residue found");

    FieldElement c = z.pow(m);
    FieldElement t = a.pow(m);
    FieldElement r = a.pow((m + 1) / 2);
    Integer mm(static_cast<unsigned long>(s));
    while (!(t == f.one())) {
        FieldElement t2 = t;
        Integer i = 0;
        while (!(t2 == f.one())) {
            t2 = t2 * t2;
            ++i;
            if (i == mm) return std::nullopt;
        }
        FieldElement b = c;
        for (Integer j = 0; j < mm - i - 1; ++j) b = b * b;
        mm = i;
        c = b * b;
        t = t * c;
        r = r * b;
    }
    return r * r == a ? std::optional<FieldElement>(r) : std::nullopt;
}

// ---- irreducibility over F_p and reduction-polynomial search ----

namespace {

using Vec = std::vector<Integer>;

void vtrim(Vec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

Vec vmulmod(const Vec& a, const Vec& b, const Vec& m, const Integer& p) {
    if (a.empty() || b.empty()) return {};
    Vec out(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
    // reduce by monic m
    while (out.size() >= m.size()) {
        Integer lead = out.back();
        std::size_t shift = out.size() - m.size();
        if (lead != 0)
            for (std::size_t i = 0; i + 1 < m.size(); ++i) {
                out[i + shift] = (out[i + shift] - lead * m[i]) % p;
                if (out[i + shift] < 0) out[i + shift] += p;
            }
        out.pop_back();
        vtrim(out);
        if (out.empty()) break;
    }
    vtrim(out);
    return out;
}

Vec vpowmod(Vec base, Integer e, const Vec& m, const Integer& p) {
    Vec acc{Integer(1)};
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) acc = vmulmod(acc, base, m, p);
        base = vmulmod(base, base, m, p);
        e >>= 1;
    }
    return acc;
}

Vec vgcd(Vec a, Vec b, const Integer& p) {
    vtrim(a);
    vtrim(b);
    while (!b.empty()) {
        // a mod b
        Integer lead_inv = mod_inv(b.back(), p);
        while (a.size() >= b.size() && !a.empty()) {
            Integer factor = (a.back() * lead_inv) % p;
            std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) {
                a[i + shift] = (a[i + shift] - factor * b[i]) % p;
                if (a[i + shift] < 0) a[i + shift] += p;
            }
            vtrim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return a;
}

}  // namespace

bool is_irreducible_mod_p(const std::vector<Integer>& poly, const Integer& p) {
    Vec f = poly;
    for (auto& v : f) {
        v %= p;
        if (v < 0) v += p;
    }
    vtrim(f);
    if (f.size() < 2) return false;
    unsigned k = static_cast<unsigned>(f.size() - 1);
    if (k == 1) return true;

    // Rabin: x^(p^k) == x mod f, and gcd(x^(p^(k/q)) - x, f) == 1 for prime q | k.
    Vec x{Integer(0), Integer(1)};
    Integer pk;
    mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), k);
    Vec xpk = vpowmod(x, pk, f, p);
    // xpk - x
    Vec diff = xpk;
    if (diff.size() < 2) diff.resize(2, Integer(0));
    diff[1] = (diff[1] - 1) % p;
    if (diff[1] < 0) diff[1] += p;
    vtrim(diff);
    if (!diff.empty()) return false;

    for (const auto& [q, e] : factorize(Integer(k))) {
        (void)e;
        unsigned sub = k / static_cast<unsigned>(q.get_ui());
        Integer psub;
        mpz_pow_ui(psub.get_mpz_t(), p.get_mpz_t(), sub);
        Vec xps = vpowmod(x, psub, f, p);
        Vec d2 = xps;
        if (d2.size() < 2) d2.resize(2, Integer(0));
        d2[1] = (d2[1] - 1) % p;
        if (d2[1] < 0) d2[1] += p;
        vtrim(d2);
        Vec g = vgcd(f, d2, p);
        if (g.size() != 1) return false;
    }
    return true;
}

std::vector<Integer> find_irreducible(const Integer& p, unsigned k) {
    if (k < 2) throw error("find_irreducible expects degree >= 2");
    // binomials first: x^k - beta for small |beta|
    for (long mag = 1; mag <= 64; ++mag) {
        for (long sign : {-1, +1}) {
            Integer beta = sign * mag;
            std::vector<Integer> f(k + 1, Integer(0));
            f[0] = (-beta) % p;
            if (f[0] < 0) f[0] += p;
            f[k] = 1;
            if (f[0] == 0) continue;
            if (is_irreducible_mod_p(f, p)) return f;
        }
    }
    // deterministic pseudorandom fallback
    Rng rng(0x5eedULL + k);
    while (true) {
        std::vector<Integer> f(k + 1, Integer(0));
        f[k] = 1;
        for (unsigned i = 0; i < k; ++i) f[i] = rng.below(p);
        if (is_irreducible_mod_p(f, p)) return f;
    }
}

}  // namespace pfec
