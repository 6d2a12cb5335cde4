#include <doctest.h>

#include <random>

#include "tg/polyring.hpp"

using namespace tg;

namespace {

Poly p(const std::string& s, int n) { return parse_poly(s, n); }

Poly random_poly(std::mt19937_64& rng, int n, int maxdeg)
{
    std::uniform_int_distribution<int> coeff(-4, 4), expo(0, maxdeg), nterms(0, 4);
    Poly f(n);
    int t = nterms(rng);
    for (int i = 0; i < t; ++i) {
        std::vector<int> e(n);
        for (int j = 0; j < n; ++j) e[j] = expo(rng) / 2;
        f.add_term(e, coeff(rng));
    }
    return f;
}

}  // namespace

TEST_CASE("addition and multiplication basics")
{
    CHECK(add(p("t1", 2), p("-t1", 2)).is_zero());
    CHECK(add(p("t1", 2), p("t2", 2)) == p("t1 + t2", 2));
    CHECK(add(p("t1*t2", 2), p("t1*t2", 2)) == p("2*t1*t2", 2));
    CHECK(mul(p("t1", 2), p("t2", 2)) == p("t1*t2", 2));
    CHECK(mul(p("t1+t2", 2), p("t1-t2", 2)) == p("t1^2 - t2^2", 2));
    CHECK(mul(p("1", 2), p("3*t1^2 - t2", 2)) == p("3*t1^2 - t2", 2));
    CHECK_THROWS_AS((void)add(p("t1", 2), p("t1", 3)), validation_error);
}

TEST_CASE("ring axioms on random polynomials")
{
    std::mt19937_64 rng(31337);
    for (int it = 0; it < 120; ++it) {
        int n = 1 + int(rng() % 3);
        Poly f = random_poly(rng, n, 4), g = random_poly(rng, n, 4),
             h = random_poly(rng, n, 4);
        CHECK(mul(f, mul(g, h)) == mul(mul(f, g), h));
        CHECK(mul(f, add(g, h)) == add(mul(f, g), mul(f, h)));
        CHECK(add(f, g) == add(g, f));
        CHECK(mul(f, g) == mul(g, f));
    }
}

TEST_CASE("substitution")
{
    CHECK(substitute_linear(p("t1", 2), IntMatrix::identity(2)) == p("t1", 2));
    IntMatrix swap(2, 2);
    swap.at(0, 1) = 1;
    swap.at(1, 0) = 1;
    CHECK(substitute_linear(p("t1", 2), swap) == p("t2", 2));
    IntMatrix m(2, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = 1;
    m.at(1, 1) = 1;
    CHECK(substitute_linear(p("t1^2", 2), m) == p("t1^2 + 2*t1*t2 + t2^2", 2));
}

TEST_CASE("congruence modulo a linear form")
{
    LinearForm l1{{Int(1), Int(-1)}};  // t1 - t2
    CHECK(congruent_mod_linear(p("t2", 2), p("t1", 2), l1));
    LinearForm l2{{Int(1), Int(0)}};  // t1
    CHECK(congruent_mod_linear(p("t1*t2", 2), p("0", 2), l2));
    CHECK_FALSE(congruent_mod_linear(p("t2", 2), p("0", 2), l2));
    LinearForm bad{{Int(2), Int(0)}};
    CHECK_THROWS_AS((void)congruent_mod_linear(p("t1", 2), p("0", 2), bad),
                    validation_error);
}

TEST_CASE("congruence is independent of the unimodular completion")
{
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> val(-5, 5);
    int found = 0;
    while (found < 60) {
        int n = 2 + int(rng() % 2);
        IntVector lv(n);
        for (int j = 0; j < n; ++j) lv[j] = val(rng);
        if (gcd_of(lv) != 1) continue;
        ++found;
        Poly f = random_poly(rng, n, 3), g = random_poly(rng, n, 3);
        IntMatrix M1 = extend_primitive(lv);
        IntMatrix M2 = M1;
        // a different completion with the same first row
        for (int j = 0; j < n; ++j) M2.at(n - 1, j) += M1.at(0, j);
        bool r1 = congruent_mod_linear_using(f, g, M1);
        bool r2 = congruent_mod_linear_using(f, g, M2);
        CHECK(r1 == r2);
        CHECK(r1 == congruent_mod_linear_using(sub(f, g), Poly::zero(n), M1));
    }
}

TEST_CASE("congruence difference form")
{
    std::mt19937_64 rng(5150);
    std::uniform_int_distribution<int> val(-3, 3);
    int found = 0;
    while (found < 40) {
        int n = 2;
        IntVector lv(n);
        for (int j = 0; j < n; ++j) lv[j] = val(rng);
        if (gcd_of(lv) != 1) continue;
        ++found;
        LinearForm l{lv};
        Poly f = random_poly(rng, n, 3), g = random_poly(rng, n, 3);
        CHECK(congruent_mod_linear(f, g, l) ==
              congruent_mod_linear(sub(f, g), Poly::zero(n), l));
        // anything plus a multiple of l is congruent
        Poly fl = add(f, mul(Poly::linear(lv), random_poly(rng, n, 2)));
        CHECK(congruent_mod_linear(fl, f, l));
    }
}

TEST_CASE("rendering uses graded lexicographic order")
{
    CHECK(to_string(p("2*t1^2*t2 - t3", 3)) == "2*t1^2*t2 - t3");
    CHECK(to_string(Poly::zero(2)) == "0");
    CHECK(to_string(p("-t1 + t2", 2)) == "-t1 + t2");
    CHECK(to_string(p("t1 + 3", 2)) == "t1 + 3");
    Poly f = p("t2 + t1^2", 2);
    CHECK(to_string(f) == "t1^2 + t2");
    CHECK(parse_poly(to_string(f), 2) == f);
}
