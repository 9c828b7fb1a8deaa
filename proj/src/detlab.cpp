#include "gdet/detlab.hpp"

#include <bit>
#include <stdexcept>

#include "gdet/reps.hpp"

namespace gdet {

GroupMatrix group_matrix(const GroupPtr& g) {
    GroupMatrix m{g, {}};
    const long n = g->order();
    m.entries.assign(n, std::vector<long>(n, 0));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) m.entries[i][j] = g->mul_index(i, g->inv_index(j));
    return m;
}

Poly symbolic_det(const Context& ctx, const GroupMatrix& m, long limit) {
    const long n = m.group->order();
    if (n > limit)
        throw std::domain_error("group order exceeds the symbolic determinant limit");
    if (n > 20) throw std::domain_error("symbolic determinant limit too large");

    // dp[S] = determinant of the submatrix on rows 0..popcount(S)-1 and columns S.
    const unsigned long full = (1UL << n) - 1;
    std::vector<Poly> dp(full + 1, Poly(ctx.field));
    dp[0] = Poly::constant(CycloNumber::one(ctx.field));
    for (unsigned long s = 1; s <= full; ++s) {
        const long row = std::popcount(s) - 1;
        Poly acc(ctx.field);
        long pos = 0;
        for (long c = 0; c < n; ++c) {
            if (!(s & (1UL << c))) continue;
            Poly contrib = dp[s & ~(1UL << c)] * Poly::variable(ctx.field, m.entries[row][c]);
            if ((row + pos) % 2)
                acc -= contrib;
            else
                acc += contrib;
            ++pos;
        }
        dp[s] = std::move(acc);
    }
    return dp[full];
}

CycloNumber numeric_det_at(const Context& ctx, const GroupMatrix& m,
                           const std::vector<CycloNumber>& assign) {
    const long n = m.group->order();
    if (static_cast<long>(assign.size()) != n)
        throw std::invalid_argument("assignment size must equal the group order");
    std::vector<std::vector<CycloNumber>> a;
    a.reserve(n);
    for (long i = 0; i < n; ++i) {
        std::vector<CycloNumber> row;
        row.reserve(n);
        for (long j = 0; j < n; ++j) row.push_back(assign[m.entries[i][j]]);
        a.push_back(std::move(row));
    }

    CycloNumber det = CycloNumber::one(ctx.field);
    for (long col = 0; col < n; ++col) {
        long pivot = -1;
        for (long r = col; r < n; ++r)
            if (!a[r][col].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) return CycloNumber::zero(ctx.field);
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        const CycloNumber inv = a[col][col].inverse();
        for (long r = col + 1; r < n; ++r) {
            if (a[r][col].is_zero()) continue;
            const CycloNumber factor = a[r][col] * inv;
            for (long c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
        }
    }
    return det;
}

Poly frobenius_theta(const Context& ctx, long limit) {
    if (ctx.group->order() > limit)
        throw std::domain_error("group order exceeds the symbolic determinant limit");
    const RepSet reps = irreducible_set(ctx);
    Poly acc = Poly::constant(CycloNumber::one(ctx.field));
    for (const auto& chi : reps.degree_one) acc *= character_linear_form(ctx, chi);
    for (const auto& rep : reps.degree_two) acc *= rep_factor_det(ctx, rep).pow(2);
    return acc;
}

CycloNumber frobenius_theta_at(const Context& ctx, const std::vector<CycloNumber>& assign) {
    const RepSet reps = irreducible_set(ctx);
    const auto& G = *ctx.group;
    CycloNumber acc = CycloNumber::one(ctx.field);
    for (const auto& chi : reps.degree_one) {
        CycloNumber s = CycloNumber::zero(ctx.field);
        for (long gi = 0; gi < G.order(); ++gi) s += chi.value(gi) * assign[gi];
        acc *= s;
    }
    for (const auto& rep : reps.degree_two) {
        CMat s = CMat::zero(ctx.field, 2);
        for (long gi = 0; gi < G.order(); ++gi) s = s + rep.value(gi).scaled(assign[gi]);
        const CycloNumber det = s.a[0] * s.a[3] - s.a[1] * s.a[2];
        acc *= det * det;
    }
    return acc;
}

Poly circulant_theta(const Context& ctx) {
    const auto& G = *ctx.group;
    if (G.is_abelian()) throw std::domain_error("circulant form is defined for D_m / Q_m");
    const long r = G.rotation_order();
    std::vector<Poly> a_polys;
    a_polys.reserve(r);
    for (long k = 0; k < r; ++k) a_polys.push_back(build_A(ctx, G.rotation(k)));
    Poly acc = Poly::constant(CycloNumber::one(ctx.field));
    for (long l = 0; l < r; ++l) {
        const Character chi = chi_prime(ctx, l);
        Poly factor(ctx.field);
        for (long k = 0; k < r; ++k) factor += a_polys[k] * chi.value(k);
        acc *= factor;
    }
    return acc;
}

CycloNumber circulant_theta_at(const Context& ctx, const std::vector<CycloNumber>& assign) {
    const auto& G = *ctx.group;
    if (G.is_abelian()) throw std::domain_error("circulant form is defined for D_m / Q_m");
    const long r = G.rotation_order();
    std::vector<CycloNumber> a_vals;
    a_vals.reserve(r);
    for (long k = 0; k < r; ++k) a_vals.push_back(build_A(ctx, G.rotation(k)).evaluated(assign));
    CycloNumber acc = CycloNumber::one(ctx.field);
    for (long l = 0; l < r; ++l) {
        const Character chi = chi_prime(ctx, l);
        CycloNumber factor = CycloNumber::zero(ctx.field);
        for (long k = 0; k < r; ++k) factor += a_vals[k] * chi.value(k);
        acc *= factor;
    }
    return acc;
}

namespace {

std::vector<AlgebraElement> theta_e_factors(const Context& ctx) {
    std::vector<AlgebraElement> factors;
    if (ctx.group->is_abelian()) {
        const RepSet reps = irreducible_set(ctx);
        for (const auto& chi : reps.degree_one) factors.push_back(character_factor(ctx, chi));
    } else {
        const long r = ctx.group->rotation_order();
        for (long l = 0; l < r; ++l) factors.push_back(circulant_factor(ctx, chi_prime(ctx, l)));
    }
    return factors;
}

}  // namespace

AlgebraElement theta_e_product(const Context& ctx) {
    AlgebraElement acc = AlgebraElement::unit(ctx);
    for (const auto& f : theta_e_factors(ctx)) acc = convolve(acc, f);
    return acc;
}

AlgebraElement theta_e_product_at(const Context& ctx, const std::vector<CycloNumber>& assign) {
    AlgebraElement acc = AlgebraElement::unit(ctx);
    for (const auto& f : theta_e_factors(ctx)) acc = convolve(acc, evaluate_coeffs(f, assign));
    return acc;
}

AlgebraElement inverse_element(const Context& ctx, const std::vector<CycloNumber>& assign) {
    const auto& G = *ctx.group;
    const CycloNumber det = numeric_det_at(ctx, group_matrix(ctx.group), assign);
    if (det.is_zero())
        throw std::domain_error("singular element: the group determinant vanishes here");

    AlgebraElement acc = AlgebraElement::unit(ctx);
    if (G.is_abelian()) {
        const RepSet reps = irreducible_set(ctx);
        for (size_t i = 1; i < reps.degree_one.size(); ++i)
            acc = convolve(acc, evaluate_coeffs(character_factor(ctx, reps.degree_one[i]), assign));
    } else {
        const long r = G.rotation_order();
        acc = evaluate_coeffs(build_factor(ctx, DegreeOneFactor::Alpha2), assign);
        if (has_four_degree_one(G)) {
            acc = convolve(acc, evaluate_coeffs(build_factor(ctx, DegreeOneFactor::Alpha3), assign));
            acc = convolve(acc, evaluate_coeffs(build_factor(ctx, DegreeOneFactor::Alpha4), assign));
        }
        for (long l = 1; l < r; ++l) {
            if (has_four_degree_one(G) && l == r / 2) continue;
            acc = convolve(acc, evaluate_coeffs(circulant_factor(ctx, chi_prime(ctx, l)), assign));
        }
    }
    return acc.scaled(det.inverse());
}

}  // namespace gdet
