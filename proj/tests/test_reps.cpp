#include <random>

#include "doctest.h"
#include "gdet/group_algebra.hpp"
#include "gdet/reps.hpp"

using namespace gdet;

TEST_SUITE("reps") {

TEST_CASE("table values") {
    const Context q3 = Context::make("Q3");
    const RepSet reps = irreducible_set(q3);
    REQUIRE(reps.degree_one.size() == 4);
    // chi3(b) = i: the primitive fourth root of the ambient field
    const CycloNumber i_unit = root_of_unity(q3.field, q3.field->conductor() / 4);
    CHECK(reps.degree_one[2].value_at(q3.group->reflection(0)) == i_unit);
    CHECK(reps.degree_one[3].value_at(q3.group->reflection(0)) == -i_unit);

    const Context d3 = Context::make("D3");
    const RepSet d3reps = irreducible_set(d3);
    CHECK(d3reps.degree_one.size() == 2);
    CHECK(d3reps.degree_two.size() == 1);
    CHECK(d3reps.sum_degree_squares() == 6);

    const Context c2 = Context::make("C2");
    const RepSet c2reps = irreducible_set(c2);
    REQUIRE(c2reps.degree_one.size() == 2);
    CHECK(c2reps.degree_one[0].value(1) == CycloNumber::one(c2.field));
    CHECK(c2reps.degree_one[1].value(1) == -CycloNumber::one(c2.field));
    CHECK(c2reps.degree_one[0].value(0).is_one());
}

TEST_CASE("representation count matches the family case split") {
    auto count_for = [](const char* spec) {
        const Context ctx = Context::make(spec);
        return irreducible_set(ctx).rep_count();
    };
    CHECK(count_for("D3") == 2 + 1);        // 2 + (m-1)/2
    CHECK(count_for("D5") == 2 + 2);
    CHECK(count_for("D4") == 4 + 1);        // 4 + m/2 - 1
    CHECK(count_for("D8") == 4 + 3);
    CHECK(count_for("Q2") == 4 + 1);        // 4 + (m-1)
    CHECK(count_for("Q5") == 4 + 4);
}

TEST_CASE("every table entry is a homomorphism") {
    for (const char* spec :
         {"C2", "C3", "C4", "C5", "C6", "C7", "C8", "C2xC2", "C2xC4", "C2xC2xC2", "C2xC3", "D3",
          "D4", "D5", "D6", "D7", "D8", "Q2", "Q3", "Q4", "Q5"}) {
        const Context ctx = Context::make(spec);
        const auto& G = *ctx.group;
        REQUIRE(G.order() <= 24);
        const RepSet reps = irreducible_set(ctx);
        CHECK(reps.sum_degree_squares() == G.order());
        for (const auto& chi : reps.degree_one) {
            CHECK(chi.value_at(G.identity()).is_one());
            for (long i = 0; i < G.order(); ++i)
                for (long j = 0; j < G.order(); ++j)
                    CHECK(chi.value(G.mul_index(i, j)) == chi.value(i) * chi.value(j));
        }
        for (const auto& rep : reps.degree_two) {
            CHECK(rep.value_at(G.identity()) == CMat::identity(ctx.field, 2));
            for (long i = 0; i < G.order(); ++i)
                for (long j = 0; j < G.order(); ++j)
                    CHECK(rep.value(G.mul_index(i, j)) == rep.value(i) * rep.value(j));
        }
    }
}

TEST_CASE("flipping the quaternion sign convention breaks the even-index representations") {
    // phi_l(b) must have lower-left entry (-1)^l omega^0; hard-coding -1 fails
    // the b^2 = a^m relation as soon as l is even.
    const Context q3 = Context::make("Q3");
    const auto& f = q3.field;
    const long r = q3.group->rotation_order();
    const long l = 2;
    CMat b_mat = CMat::zero(f, 2);
    b_mat.a[1] = CycloNumber::one(f);
    b_mat.a[2] = -CycloNumber::one(f);               // the verbatim sign
    CMat am_mat = CMat::zero(f, 2);
    const long m = q3.group->spec().params[0];
    am_mat.a[0] = root_of_unity(f, (f->conductor() / r) * (l * m % r));
    am_mat.a[3] = root_of_unity(f, (f->conductor() / r) * ((r - l * m % r) % r));
    CHECK(!(b_mat * b_mat == am_mat));               // would-be phi_2(b)^2 != phi_2(a^m)

    // with the parity-corrected sign the relation holds for every l
    const RepSet reps = irreducible_set(q3);
    const GroupElement b = q3.group->reflection(0);
    const GroupElement am = q3.group->rotation(m);
    for (const auto& rep : reps.degree_two)
        CHECK(rep.value_at(b) * rep.value_at(b) == rep.value_at(am));
}

TEST_CASE("rotation subgroup characters") {
    const Context d4 = Context::make("D4");
    const Character triv = chi_prime(d4, 0);
    for (long k = 0; k < 4; ++k) CHECK(triv.value(k).is_one());
    CHECK(chi_prime(d4, 2).value(1) == -CycloNumber::one(d4.field));

    // Q2: chi'_{r/2} agrees with chi3 on <a>
    const Context q2 = Context::make("Q2");
    const Character half = chi_prime(q2, q2.group->rotation_order() / 2);
    const Character chi3 = irreducible_set(q2).degree_one[2];
    for (long k = 0; k < q2.group->rotation_order(); ++k)
        CHECK(half.value(k) == chi3.value_at(q2.group->rotation(k)));

    CHECK_THROWS_AS(chi_prime(Context::make("C4"), 0), std::domain_error);
    CHECK_THROWS_AS(chi_prime(d4, 4), std::invalid_argument);
    CHECK_THROWS_AS(chi_prime(d4, -1), std::invalid_argument);
}

TEST_CASE("fourier transform basics") {
    const Context c2 = Context::make("C2");
    const RepSet c2reps = irreducible_set(c2);
    const FourierImage img = fourier_transform(c2reps, AlgebraElement::basis(c2, GroupElement{{1}}));
    REQUIRE(img.blocks.size() == 2);
    CHECK(img.blocks[0].a[0].is_one());
    CHECK(img.blocks[1].a[0] == -CycloNumber::one(c2.field));

    const Context d3 = Context::make("D3");
    const RepSet d3reps = irreducible_set(d3);
    const FourierImage unit_img = fourier_transform(d3reps, AlgebraElement::unit(d3));
    for (const auto& blk : unit_img.blocks) CHECK(blk == CMat::identity(d3.field, blk.dim));

    // multiplicativity at a fixed numeric pair
    std::mt19937_64 rng(4);
    AlgebraElement u(d3), v(d3);
    for (long i = 0; i < d3.group->order(); ++i) {
        u.set_coeff(i, Poly::constant(CycloNumber::integer(d3.field, static_cast<long>(rng() % 9) - 4)));
        v.set_coeff(i, Poly::constant(CycloNumber::integer(d3.field, static_cast<long>(rng() % 9) - 4)));
    }
    CHECK(fourier_transform(d3reps, convolve(u, v)) ==
          blockwise_product(fourier_transform(d3reps, u), fourier_transform(d3reps, v)));

    // symbolic coefficients are rejected
    CHECK_THROWS_AS(fourier_transform(d3reps, generic_element(d3)), std::invalid_argument);

    // basis elements transform to the conjugated table entries
    for (long gi = 0; gi < d3.group->order(); ++gi) {
        const FourierImage img =
            fourier_transform(d3reps, AlgebraElement::basis(d3, d3.group->element(gi)));
        for (size_t c = 0; c < d3reps.degree_one.size(); ++c)
            CHECK(img.blocks[c].a[0] == d3reps.degree_one[c].value(gi).conjugate());
        for (size_t t = 0; t < d3reps.degree_two.size(); ++t) {
            const CMat& expected = d3reps.degree_two[t].value(gi);
            const CMat& got = img.blocks[d3reps.degree_one.size() + t];
            for (int k = 0; k < 4; ++k) CHECK(got.a[k] == expected.a[k].conjugate());
        }
    }
}

TEST_CASE("degree-two determinants match the twisted A sums") {
    const Context d3 = Context::make("D3");
    const RepSet d3reps = irreducible_set(d3);
    const Poly det = rep_factor_det(d3, d3reps.degree_two[0]);
    const auto& G = *d3.group;
    const CycloNumber w = root_of_unity(d3.field, d3.field->conductor() / 3);
    Poly expected = build_A(d3, G.identity());
    expected += build_A(d3, G.rotation(1)) * w;
    expected += build_A(d3, G.rotation(2)) * (w * w);
    CHECK(det == expected);

    // all-zero evaluation of a homogeneous polynomial
    const std::vector<CycloNumber> zeros(G.order(), CycloNumber::zero(d3.field));
    CHECK(det.evaluated(zeros).is_zero());

    // the quaternion sign path: identity still holds for Q2, l = 1
    const Context q2 = Context::make("Q2");
    const RepSet q2reps = irreducible_set(q2);
    const Character chi1 = chi_prime(q2, 1);
    Poly q2expected(q2.field);
    for (long k = 0; k < q2.group->rotation_order(); ++k)
        q2expected += build_A(q2, q2.group->rotation(k)) * chi1.value(k);
    CHECK(rep_factor_det(q2, q2reps.degree_two[0]) == q2expected);

    // and for every degree-two representation across both families
    for (const char* spec : {"D3", "D4", "D5", "D6", "Q2", "Q3", "Q4"}) {
        const Context ctx = Context::make(spec);
        const RepSet reps = irreducible_set(ctx);
        for (size_t t = 0; t < reps.degree_two.size(); ++t) {
            const Character chi = chi_prime(ctx, static_cast<long>(t) + 1);
            Poly rhs(ctx.field);
            for (long k = 0; k < ctx.group->rotation_order(); ++k)
                rhs += build_A(ctx, ctx.group->rotation(k)) * chi.value(k);
            CHECK(rep_factor_det(ctx, reps.degree_two[t]) == rhs);
        }
    }
}

TEST_CASE("abelian character enumeration is lexicographic") {
    const Context ctx = Context::make("C2xC2");
    const RepSet reps = irreducible_set(ctx);
    REQUIRE(reps.degree_one.size() == 4);
    // character with exponent (0,1) evaluates to -1 on element (0,1)
    CHECK(reps.degree_one[1].value(1) == -CycloNumber::one(ctx.field));
    CHECK(reps.degree_one[1].value(2).is_one());
    // trivial character first
    for (long i = 0; i < 4; ++i) CHECK(reps.degree_one[0].value(i).is_one());
}

}  // TEST_SUITE
