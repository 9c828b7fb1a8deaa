#include <random>

#include "doctest.h"
#include "gdet/cyclotomic.hpp"

using namespace gdet;

namespace {

CycloNumber rand_number(const FieldPtr& f, std::mt19937_64& rng) {
    std::vector<Rational> c;
    for (long i = 0; i < f->degree(); ++i)
        c.push_back(Rational(static_cast<long>(rng() % 21) - 10));
    return CycloNumber::from_coeffs(f, std::move(c));
}

long order_of(const CycloNumber& z) {
    CycloNumber p = z;
    const CycloNumber one = CycloNumber::one(z.field());
    for (long k = 1; k <= 10'000; ++k) {
        if (p == one) return k;
        p *= z;
    }
    return -1;
}

}  // namespace

TEST_SUITE("cyclotomic") {

TEST_CASE("cyclotomic polynomials multiply back to x^L - 1") {
    for (long L = 1; L <= 64; ++L) {
        // product of Phi_d over d | L
        std::vector<mpz_class> prod{1};
        for (long d = 1; d <= L; ++d) {
            if (L % d) continue;
            const auto& phi = cyclotomic_polynomial(d);
            std::vector<mpz_class> next(prod.size() + phi.size() - 1, 0);
            for (size_t i = 0; i < prod.size(); ++i)
                for (size_t j = 0; j < phi.size(); ++j) next[i + j] += prod[i] * phi[j];
            prod = std::move(next);
        }
        REQUIRE(prod.size() == static_cast<size_t>(L + 1));
        CHECK(prod[0] == -1);
        CHECK(prod[L] == 1);
        for (long i = 1; i < L; ++i) CHECK(prod[i] == 0);
        CHECK(static_cast<long>(cyclotomic_polynomial(L).size()) - 1 == euler_phi(L));
    }
}

TEST_CASE("roots of unity") {
    auto f4 = CycloField::make(4);
    const CycloNumber i = root_of_unity(f4, 1);
    CHECK(i * i == -CycloNumber::one(f4));
    CHECK(root_of_unity(f4, 0) == CycloNumber::one(f4));

    auto f3 = CycloField::make(3);
    const CycloNumber z = root_of_unity(f3, 1);
    const CycloNumber z2 = root_of_unity(f3, 2);
    CHECK(z + z2 == -CycloNumber::one(f3));

    auto f6 = CycloField::make(6);
    CHECK(root_of_unity(f6, 3) == -CycloNumber::one(f6));

    for (long L : {1L, 2L, 3L, 4L, 6L, 8L, 12L}) {
        auto f = CycloField::make(L);
        CHECK(order_of(root_of_unity(f, 1)) == L);
        for (long k = 1; k < L; ++k) {
            const long expect = L / std::gcd(L, k);
            CHECK(order_of(root_of_unity(f, k)) == expect);
        }
        if (L > 1) {
            CycloNumber s = CycloNumber::zero(f);
            for (long k = 0; k < L; ++k) s += root_of_unity(f, k);
            CHECK(s.is_zero());
        }
    }
}

TEST_CASE("arithmetic examples") {
    auto f3 = CycloField::make(3);
    const CycloNumber one = CycloNumber::one(f3);
    const CycloNumber z = root_of_unity(f3, 1);
    const CycloNumber z2 = root_of_unity(f3, 2);
    CHECK((one + z) * (one + z2) == one);

    std::mt19937_64 rng(7);
    const CycloNumber a = rand_number(f3, rng);
    CHECK(a + CycloNumber::zero(f3) == a);

    auto f4 = CycloField::make(4);
    CHECK(root_of_unity(f4, 1) * root_of_unity(f4, 3) == CycloNumber::one(f4));
}

TEST_CASE("field mismatch is rejected") {
    auto f3 = CycloField::make(3);
    auto f4 = CycloField::make(4);
    CHECK_THROWS_AS(CycloNumber::one(f3) + CycloNumber::one(f4), std::invalid_argument);
}

TEST_CASE("inverse examples") {
    auto f3 = CycloField::make(3);
    CHECK(root_of_unity(f3, 1).inverse() == root_of_unity(f3, 2));
    CHECK(CycloNumber(f3, Rational(2)).inverse() == CycloNumber(f3, Rational(1, 2)));

    auto f4 = CycloField::make(4);
    const CycloNumber i = root_of_unity(f4, 1);
    const CycloNumber one = CycloNumber::one(f4);
    const CycloNumber v = (one + i).inverse();
    CHECK(v * (one + i) == one);
    CHECK(v == CycloNumber::from_coeffs(f4, {Rational(1, 2), Rational(-1, 2)}));

    CHECK_THROWS_AS(CycloNumber::zero(f4).inverse(), std::domain_error);
}

TEST_CASE("conjugation") {
    auto f4 = CycloField::make(4);
    const CycloNumber i = root_of_unity(f4, 1);
    CHECK(i.conjugate() == -i);

    auto f3 = CycloField::make(3);
    CHECK(root_of_unity(f3, 1).conjugate() == root_of_unity(f3, 2));
    const CycloNumber q = CycloNumber(f3, Rational(3, 7));
    CHECK(q.conjugate() == q);

    std::mt19937_64 rng(11);
    for (int t = 0; t < 50; ++t) {
        const CycloNumber a = rand_number(CycloField::make(12), rng);
        const CycloNumber b = rand_number(CycloField::make(12), rng);
        CHECK(a.conjugate().conjugate() == a);
        CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
        CHECK((a + b).conjugate() == a.conjugate() + b.conjugate());
    }
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(2024);
    for (long L : {3L, 4L, 6L, 8L, 12L}) {
        auto f = CycloField::make(L);
        for (int t = 0; t < 200; ++t) {
            const CycloNumber a = rand_number(f, rng);
            const CycloNumber b = rand_number(f, rng);
            const CycloNumber c = rand_number(f, rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
        }
    }
}

TEST_CASE("random inverses") {
    std::mt19937_64 rng(99);
    for (long L : {3L, 8L, 12L}) {
        auto f = CycloField::make(L);
        int done = 0;
        while (done < 100) {
            const CycloNumber a = rand_number(f, rng);
            if (a.is_zero()) continue;
            ++done;
            CHECK(a.inverse() * a == CycloNumber::one(f));
        }
    }
}

TEST_CASE("printing") {
    auto f4 = CycloField::make(4);
    CHECK(CycloNumber::zero(f4).str() == "(0)");
    CHECK(CycloNumber(f4, Rational(1, 2)).str() == "(1/2)");
    const CycloNumber v = CycloNumber(f4, Rational(1)) - root_of_unity(f4, 1);
    CHECK(v.str() == "(1) + (-1)*z");
}

}  // TEST_SUITE
