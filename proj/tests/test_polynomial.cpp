#include <random>

#include "doctest.h"
#include "gdet/polynomial.hpp"

using namespace gdet;

namespace {

Poly rand_poly(const FieldPtr& f, std::mt19937_64& rng, long nvars, long max_terms) {
    Poly p(f);
    const long terms = 1 + static_cast<long>(rng() % max_terms);
    for (long t = 0; t < terms; ++t) {
        Monomial m;
        const long deg = static_cast<long>(rng() % 4);
        for (long d = 0; d < deg; ++d)
            m = m * Monomial::variable(static_cast<long>(rng() % nvars));
        p.add_term(m, CycloNumber::integer(f, static_cast<long>(rng() % 11) - 5));
    }
    return p;
}

std::vector<CycloNumber> rand_assign(const FieldPtr& f, std::mt19937_64& rng, long nvars) {
    std::vector<CycloNumber> a;
    for (long i = 0; i < nvars; ++i)
        a.push_back(CycloNumber::integer(f, static_cast<long>(rng() % 21) - 10));
    return a;
}

}  // namespace

TEST_SUITE("polynomial") {

TEST_CASE("difference of squares") {
    auto f = CycloField::make(1);
    const Poly xe = Poly::variable(f, 0);
    const Poly xa = Poly::variable(f, 1);
    const Poly lhs = (xe + xa) * (xe - xa);
    const Poly rhs = xe * xe - xa * xa;
    CHECK(lhs == rhs);
    CHECK(lhs.is_homogeneous(2));

    std::mt19937_64 rng(3);
    const Poly p = rand_poly(f, rng, 3, 6);
    CHECK(p + Poly::zero(f) == p);
}

TEST_CASE("cyclic-3 product expands to the circulant determinant") {
    auto f = CycloField::make(3);
    const CycloNumber w = root_of_unity(f, 1);
    const CycloNumber w2 = root_of_unity(f, 2);
    const Poly x0 = Poly::variable(f, 0), x1 = Poly::variable(f, 1), x2 = Poly::variable(f, 2);

    const Poly product = (x0 + x1 + x2) * (x0 + x1 * w + x2 * w2) * (x0 + x1 * w2 + x2 * w);
    Poly expected = x0.pow(3) + x1.pow(3) + x2.pow(3);
    expected -= x0 * x1 * x2 * CycloNumber::integer(f, 3);
    CHECK(product == expected);
    CHECK(product.is_homogeneous(3));

    // evaluation: all-ones kills the circulant
    const std::vector<CycloNumber> ones(3, CycloNumber::one(f));
    CHECK(product.evaluated(ones).is_zero());
    CHECK(Poly::zero(f).evaluated(ones).is_zero());

    const std::vector<CycloNumber> pt{CycloNumber::integer(f, 2), CycloNumber::integer(f, 1),
                                      CycloNumber::zero(f)};
    CHECK((x0 * x0 - x1 * x1).evaluated(pt) == CycloNumber::integer(f, 3));
}

TEST_CASE("substitution") {
    auto f = CycloField::make(1);
    const Poly xe = Poly::variable(f, 0);
    const Poly xa = Poly::variable(f, 1);
    CHECK((xe * xe).substituted({xa, xa}) == xa * xa);

    // identity map
    std::mt19937_64 rng(17);
    const Poly p = rand_poly(f, rng, 3, 8);
    CHECK(p.substituted({Poly::variable(f, 0), Poly::variable(f, 1), Poly::variable(f, 2)}) == p);

    // missing variable
    CHECK_THROWS_AS((xe * xa).substituted({xa}), std::invalid_argument);
}

TEST_CASE("substitute then evaluate equals composed evaluation") {
    auto f = CycloField::make(4);
    std::mt19937_64 rng(23);
    for (int t = 0; t < 40; ++t) {
        const Poly p = rand_poly(f, rng, 3, 6);
        std::vector<Poly> map;
        for (int v = 0; v < 3; ++v) map.push_back(rand_poly(f, rng, 3, 3));
        const auto a = rand_assign(f, rng, 3);
        std::vector<CycloNumber> composed;
        for (int v = 0; v < 3; ++v) composed.push_back(map[v].evaluated(a));
        CHECK(p.substituted(map).evaluated(a) == p.evaluated(composed));
    }
}

TEST_CASE("ring axioms and evaluation homomorphism") {
    auto f = CycloField::make(4);
    std::mt19937_64 rng(31);
    for (int t = 0; t < 100; ++t) {
        const Poly p = rand_poly(f, rng, 4, 5);
        const Poly q = rand_poly(f, rng, 4, 5);
        const Poly r = rand_poly(f, rng, 4, 5);
        CHECK((p + q) * r == p * r + q * r);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * q == q * p);
        const auto a = rand_assign(f, rng, 4);
        CHECK((p * q).evaluated(a) == p.evaluated(a) * q.evaluated(a));
        CHECK((p + q).evaluated(a) == p.evaluated(a) + q.evaluated(a));
    }
}

TEST_CASE("homogeneous multiplication adds degrees") {
    auto f = CycloField::make(1);
    const Poly x0 = Poly::variable(f, 0), x1 = Poly::variable(f, 1);
    const Poly d2 = x0 * x1 + x1 * x1;
    const Poly d3 = x0 * x0 * x1 - x1 * x1 * x0;
    CHECK(d2.is_homogeneous(2));
    CHECK(d3.is_homogeneous(3));
    CHECK((d2 * d3).is_homogeneous(5));
    CHECK(!(d2 + x0).is_homogeneous(2));
}

TEST_CASE("canonical printing") {
    auto f = CycloField::make(4);
    const Poly x0 = Poly::variable(f, 0), x1 = Poly::variable(f, 1);
    const Poly p = x0 * x0 - x1 * x1;
    CHECK(p.str() == "x0^2 - x1^2");
    CHECK(Poly::zero(f).str() == "0");
    const Poly q = x0 * Poly::constant(f, Rational(1, 2)) + Poly::constant(f, Rational(-3));
    CHECK(q.str() == "1/2*x0 - 3");
    const Poly r = x1 * root_of_unity(f, 1);
    CHECK(r.str() == "((1)*z)*x1");
    // zero coefficients vanish from the term map
    CHECK((p - p).term_count() == 0);
}

}  // TEST_SUITE
