#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <vector>

#include "pfec/field.hpp"
#include "pfec/numeric.hpp"
#include "pfec/polynomial.hpp"

using namespace pfec;

TEST_CASE("integer text round-trips") {
    for (const char* s : {"0", "1", "-1", "103", "-94906265", "123456789012345678901234567890"}) {
        Integer v = int_from_text(s);
        CHECK(int_from_text(int_to_dec(v)) == v);
        CHECK(int_from_text(int_to_hex(v)) == v);
    }
    CHECK(int_to_hex(Integer(-255)) == "-0xff");
    CHECK(int_from_text("0x1f") == 31);
    CHECK(int_from_text("-0x10") == -16);
}

TEST_CASE("power-sum seed notation") {
    CHECK(int_from_text("2^10+2^3+1") == 1033);
    CHECK(int_from_text("-2^10+2^3+1") == -1015);
    Integer bn_seed = int_from_text("2^110+2^36+1");
    CHECK(bn_seed == (Integer(1) << 110) + (Integer(1) << 36) + 1);
    Integer bls_seed = int_from_text("-2^192+2^188-2^115-2^110-2^44-1");
    CHECK(bls_seed < 0);
    CHECK(bit_length(bls_seed) == 192);
}

TEST_CASE("rational text") {
    CHECK(rat_to_text(rat_from_text("1/3")) == "1/3");
    CHECK(rat_to_text(rat_from_text("4/2")) == "2");
    CHECK(rat_from_text("-5/15") == Rational(-1, 3));
    CHECK_THROWS_AS(rat_from_text("1/0"), error);
}

TEST_CASE("primality basics") {
    CHECK(is_probable_prime(Integer(97)));
    CHECK_FALSE(is_probable_prime(Integer(1)));
    CHECK_FALSE(is_probable_prime(Integer(0)));
    CHECK(is_probable_prime(Integer(2)));
    CHECK_FALSE(is_probable_prime(Integer("3215031751")));  // strong pseudoprime to 2,3,5,7
}

TEST_CASE("primality agrees with a sieve below 10^6") {
    const int N = 1000000;
    std::vector<bool> composite(N, false);
    for (int i = 2; i * i < N; ++i)
        if (!composite[i])
            for (int j = i * i; j < N; j += i) composite[j] = true;
    for (int n = 0; n < N; ++n) {
        bool expect = n >= 2 && !composite[n];
        if (is_probable_prime(Integer(n)) != expect) {
            CAPTURE(n);
            REQUIRE(false);
        }
    }
    CHECK(true);
}

TEST_CASE("published BN modulus is prime") {
    Integer u = int_from_text("2^110+2^36+1");
    Integer p = 36 * u * u * u * u + 36 * u * u * u + 24 * u * u + 6 * u + 1;
    CHECK(bit_length(p) == 446);
    CHECK(is_probable_prime(p, 40));
}

TEST_CASE("factorize") {
    auto f = factorize(Integer(600));
    REQUIRE(f.size() == 3);
    CHECK(f[0] == std::make_pair(Integer(2), 3));
    CHECK(f[1] == std::make_pair(Integer(3), 1));
    CHECK(f[2] == std::make_pair(Integer(5), 2));
    // needs rho: product of two 40-bit primes
    Integer a("1099511627791"), b("2199023255579");
    auto g = factorize(a * b);
    REQUIRE(g.size() == 2);
    CHECK(g[0].first == a);
    CHECK(g[1].first == b);
}

TEST_CASE("sqrt mod prime") {
    auto s = sqrt_mod_prime(Integer(4), Integer(59));
    REQUIRE(s.has_value());
    CHECK((*s == 2 || *s == 57));
    CHECK_FALSE(sqrt_mod_prime(Integer(2), Integer(5)).has_value());
    // exhaustive oracle on F_103
    for (int a = 0; a < 103; ++a) {
        bool residue = false;
        for (int x = 0; x < 103; ++x)
            if (x * x % 103 == a) residue = true;
        auto r = sqrt_mod_prime(Integer(a), Integer(103));
        CHECK(r.has_value() == residue);
        if (r) CHECK((*r * *r) % 103 == a);
    }
    // Tonelli-Shanks branch: p == 1 mod 4
    auto t = sqrt_mod_prime(Integer(10), Integer(13));
    REQUIRE(t.has_value());
    CHECK((*t * *t) % 13 == 10);
}

TEST_CASE("prime field ops") {
    Field f5 = Field::prime(5);
    CHECK((f5.from_integer(3) + f5.from_integer(4)).residue() == 2);
    CHECK(f5.from_integer(2).inverse().residue() == 3);
    CHECK_THROWS_AS(f5.zero().inverse(), error);
    Field f7 = Field::prime(7);
    CHECK_THROWS_AS(f5.one() + f7.one(), error);
    CHECK_THROWS_AS(Field::prime(4), error);
}

TEST_CASE("extension field ops") {
    Field f59 = Field::prime(59);
    Field f59_2 = Field::extension(f59, 2);
    REQUIRE(f59_2.reduction() == std::vector<Integer>{1, 0, 1});  // x^2 + 1
    FieldElement a = f59_2.from_coords({3, 2});   // 3 + 2i
    FieldElement b = f59_2.from_coords({3, 57});  // 3 - 2i
    CHECK(a * b == f59_2.from_integer(13));
    CHECK((a * a.inverse()) == f59_2.one());
}

TEST_CASE("field axioms sampled") {
    Rng rng(7);
    Field f103 = Field::prime(103);
    Field ext = Field::extension(Field::prime(5), 3);
    for (const Field& f : {f103, ext}) {
        for (int i = 0; i < 25; ++i) {
            FieldElement a = f.random(rng), b = f.random(rng), c = f.random(rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            if (!a.is_zero()) CHECK(a * a.inverse() == f.one());
        }
    }
}

TEST_CASE("frobenius fixes the field") {
    Rng rng(11);
    Field ext = Field::extension(Field::prime(59), 2);
    Integer q = ext.order();
    for (int i = 0; i < 12; ++i) {
        FieldElement a = ext.random(rng);
        CHECK(a.pow(q) == a);
    }
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(RatPoly::cyclotomic(1) == RatPoly({-1, 1}));
    CHECK(RatPoly::cyclotomic(12) == RatPoly({1, 0, -1, 0, 1}));
    // degree phi(54) = 18
    RatPoly c54 = RatPoly::cyclotomic(54);
    CHECK(c54.degree() == 18);
    CHECK(c54.is_monic());
    // product identity for n <= 60
    for (unsigned n = 1; n <= 60; ++n) {
        RatPoly prod = RatPoly::constant(1);
        for (unsigned d = 1; d <= n; ++d)
            if (n % d == 0) prod = prod * RatPoly::cyclotomic(d);
        RatPoly xn = RatPoly::monomial(1, static_cast<int>(n)) - RatPoly::constant(1);
        CHECK(prod == xn);
    }
}

TEST_CASE("polynomial evaluation") {
    RatPoly bn_p({1, 6, 24, 36, 36});
    CHECK(bn_p.eval(Integer(1)) == Rational(103));
    // ((u-1)^2 (u^4 - u^2 + 1))/3 + u at 1
    RatPoly u = RatPoly::monomial(1, 1);
    RatPoly r({1, 0, -1, 0, 1});
    RatPoly bls_p = (u - RatPoly::constant(1)) * (u - RatPoly::constant(1)) * r * Rational(1, 3) + u;
    CHECK(bls_p.eval(Integer(1)) == Rational(1));
    RatPoly f({7, 3, 9});
    CHECK(f.eval(Integer(0)) == Rational(7));
}

TEST_CASE("polynomial division") {
    RatPoly xm1({-1, 1}), x2m1({-1, 0, 1});
    auto [ok, q] = poly_divides(xm1, x2m1);
    CHECK(ok);
    CHECK(q == RatPoly({1, 1}));
    auto [ok2, q2] = poly_divides(RatPoly({1, 1}), RatPoly({1, 0, 1}));
    (void)q2;
    CHECK_FALSE(ok2);

    // BN: r | Phi_12(t - 1) with t = 6x^2 + 1
    RatPoly t({1, 0, 6});
    RatPoly big = RatPoly::cyclotomic(12).compose(t - RatPoly::constant(1));
    auto [ok3, q3] = poly_divides(RatPoly({1, 6, 18, 36, 36}), big);
    CHECK(ok3);
    CHECK(q3.degree() == 4);
}

namespace {
// independent divisibility oracle: repeated leading-term elimination
bool divides_by_elimination(const RatPoly& divisor, const RatPoly& value) {
    if (value.is_zero()) return true;
    if (value.degree() < divisor.degree()) return false;
    RatPoly rem = value;
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        Rational f = rem.leading() / divisor.leading();
        rem = rem - RatPoly::monomial(f, rem.degree() - divisor.degree()) * divisor;
    }
    return rem.is_zero();
}
}  // namespace

TEST_CASE("poly_divides agrees with an independent elimination oracle") {
    Rng rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<Rational> ac, bc;
        int da = 1 + static_cast<int>(rng.below(5).get_ui());
        int db = 1 + static_cast<int>(rng.below(3).get_ui());
        for (int i = 0; i <= da; ++i) ac.emplace_back(static_cast<long>(rng.below(11).get_ui()) - 5);
        for (int i = 0; i <= db; ++i) bc.emplace_back(static_cast<long>(rng.below(11).get_ui()) - 5);
        RatPoly a(ac), b(bc);
        if (b.is_zero()) continue;
        RatPoly product = a * b;
        CHECK(poly_divides(b, product).first);
        CHECK(divides_by_elimination(b, product));
        RatPoly bumped = product + RatPoly::constant(1);
        CHECK(poly_divides(b, bumped).first == divides_by_elimination(b, bumped));
    }
}

TEST_CASE("polynomial sqrt") {
    RatPoly y({1, 4, 6});  // 6x^2 + 4x + 1
    auto s = (y * y).sqrt();
    REQUIRE(s.has_value());
    CHECK(*s == y);
    CHECK_FALSE(RatPoly({1, 1}).sqrt().has_value());
    CHECK_FALSE(RatPoly({2, 0, 1}).sqrt().has_value());
    RatPoly half{std::vector<Rational>{Rational(1, 2), Rational(3, 4)}};
    auto s2 = (half * half).sqrt();
    REQUIRE(s2.has_value());
    CHECK((*s2 == half || *s2 == -half));
}

TEST_CASE("irreducibility over Q") {
    CHECK(irreducible_over_q(RatPoly({1, 1})) == Irreducibility::Irreducible);
    CHECK(irreducible_over_q(RatPoly({-1, 0, 1})) == Irreducibility::Reducible);
    CHECK(irreducible_over_q(RatPoly::cyclotomic(12)) == Irreducibility::Irreducible);
    CHECK(irreducible_over_q(RatPoly::cyclotomic(20)) == Irreducibility::Irreducible);
    CHECK(irreducible_over_q(RatPoly({1, 6, 18, 36, 36})) == Irreducibility::Irreducible);
    // (x^2+1)(x^2+3) has no rational root but factors
    RatPoly prod = RatPoly({1, 0, 1}) * RatPoly({3, 0, 1});
    CHECK(irreducible_over_q(prod) == Irreducibility::Reducible);
    // r(u) = u^2 + 2u factors with a root at 0
    CHECK(irreducible_over_q(RatPoly({0, 2, 1})) == Irreducibility::Reducible);
}

TEST_CASE("find_irreducible") {
    auto f = find_irreducible(Integer(59), 2);
    CHECK(f == std::vector<Integer>{1, 0, 1});  // x^2 + 1 since -1 is a non-residue
    CHECK(is_irreducible_mod_p({-2, 0, 1}, Integer(5)));       // x^2 - 2
    CHECK_FALSE(is_irreducible_mod_p({1, 0, 1}, Integer(5)));  // x^2 + 1 = (x-2)(x+2)

    auto g = find_irreducible(Integer(103), 12);
    REQUIRE(g.size() == 13);
    CHECK(g.back() == 1);
    Field f103 = Field::prime(103);
    Field ext = Field::extension(f103, g);
    // independent check: the Frobenius orbit of the generator has length 12
    FieldElement x = ext.from_coords({0, 1});
    FieldElement frob = x;
    for (int d = 1; d < 12; ++d) {
        frob = frob.pow(Integer(103));
        CHECK(frob != x);
    }
    CHECK(frob.pow(Integer(103)) == x);
}

TEST_CASE("sqrt in extension fields") {
    Field ext = Field::extension(Field::prime(59), 2);
    Rng rng(3);
    int squares = 0;
    for (int i = 0; i < 20; ++i) {
        FieldElement a = ext.random(rng);
        FieldElement sq = a * a;
        auto s = sqrt_in_field(sq);
        REQUIRE(s.has_value());
        CHECK((*s == a || *s == -a));
        ++squares;
    }
    CHECK(squares == 20);
    // p = 13, q = 169 = 1 mod 4 exercises the general branch
    Field ext13 = Field::extension(Field::prime(13), 2);
    FieldElement a = ext13.from_coords({5, 7});
    auto s = sqrt_in_field(a * a);
    REQUIRE(s.has_value());
    CHECK((*s == a || *s == -a));
}

TEST_CASE("multiplicative order and generators") {
    Rng rng(5);
    Integer r(97);
    auto factors = factorize(Integer(96));
    CHECK(multiplicative_order(Integer(96), r, Integer(96), factors) == 2);  // -1 mod 97
    Integer g = find_generator(r, rng);
    CHECK(multiplicative_order(g, r, Integer(96), factors) == 96);
}
