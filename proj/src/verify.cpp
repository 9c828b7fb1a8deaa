#include "gdet/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "gdet/detlab.hpp"
#include "gdet/reps.hpp"

namespace gdet {

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skipped: return "skipped";
    }
    return "?";
}

CheckMode CheckMode::auto_for(const FiniteGroup& g, unsigned long long seed, long trials) {
    CheckMode m;
    m.symbolic = g.order() <= kDefaultSymbolicLimit;
    m.trials = trials;
    m.seed = seed;
    return m;
}

AssignmentStream::AssignmentStream(unsigned long long seed, long bound) : rng_(seed), bound_(bound) {
    if (bound < 1) throw std::invalid_argument("assignment bound must be >= 1");
}

std::vector<CycloNumber> AssignmentStream::next(const Context& ctx) {
    const unsigned long long span = 2 * static_cast<unsigned long long>(bound_) + 1;
    std::vector<CycloNumber> out;
    out.reserve(ctx.group->order());
    for (long i = 0; i < ctx.group->order(); ++i) {
        const long v = static_cast<long>(rng_() % span) - bound_;
        out.push_back(CycloNumber::integer(ctx.field, v));
    }
    return out;
}

std::vector<CycloNumber> random_assignment(const Context& ctx, unsigned long long seed, long bound) {
    return AssignmentStream(seed, bound).next(ctx);
}

nlohmann::json assignment_to_json(const Context& ctx, const std::vector<CycloNumber>& assign) {
    nlohmann::json j = nlohmann::json::object();
    for (long i = 0; i < ctx.group->order(); ++i)
        j[ctx.group->element_name(i)] = assign[i].is_rational() ? assign[i].rational_value().get_str()
                                                                : assign[i].str();
    return j;
}

nlohmann::json poly_to_json(const Poly& p, const VarNamer& namer) {
    nlohmann::json terms = nlohmann::json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        nlohmann::json mono = nlohmann::json::array();
        for (const auto& [v, e] : it->first.factors()) mono.push_back({namer(v), e});
        terms.push_back({{"coeff", it->second.str()}, {"monomial", mono}});
    }
    return terms;
}

nlohmann::json element_to_json(const AlgebraElement& u) {
    const auto& G = *u.group();
    const auto namer = [&G](long v) { return "x[" + G.element_name(v) + "]"; };
    nlohmann::json coeffs = nlohmann::json::array();
    for (long i = 0; i < G.order(); ++i) {
        if (u.coeff(i).is_zero()) continue;
        coeffs.push_back({{"element", G.element_name(i)}, {"poly", poly_to_json(u.coeff(i), namer)}});
    }
    return {{"group", G.spec().str()}, {"coeffs", coeffs}};
}

nlohmann::json to_json(const CheckResult& r) {
    nlohmann::json j;
    j["id"] = r.id;
    j["group"] = r.group;
    j["mode"] = r.mode;
    j["status"] = to_string(r.status);
    if (!r.reason.empty()) j["reason"] = r.reason;
    j["witness"] = r.witness;
    if (!r.details.is_null()) j["details"] = r.details;
    return j;
}

namespace {

std::string mode_str(const CheckMode& m, long bound) {
    if (m.symbolic) return "symbolic";
    std::ostringstream os;
    os << "randomized(trials=" << m.trials << ",seed=" << m.seed << ",bound=" << bound << ")";
    return os.str();
}

/// Shared state for one checker run: accumulates the verdict and lazily
/// draws the trial assignments for randomized comparisons.
struct Harness {
    const Context& ctx;
    CheckMode mode;
    CheckResult res;
    long bound;
    std::vector<std::vector<CycloNumber>> trial_assignments;

    Harness(const std::string& id, const Context& c, const CheckMode& m) : ctx(c), mode(m) {
        bound = m.bound > 0 ? m.bound : 10 * c.group->order();
        res.id = id;
        res.group = c.group->spec().str();
        res.mode = mode_str(m, bound);
    }

    VarNamer namer() const {
        const auto g = ctx.group;
        return [g](long v) { return "x[" + g->element_name(v) + "]"; };
    }

    const std::vector<std::vector<CycloNumber>>& trials() {
        if (trial_assignments.empty()) {
            AssignmentStream stream(mode.seed, bound);
            for (long t = 0; t < mode.trials; ++t) trial_assignments.push_back(stream.next(ctx));
        }
        return trial_assignments;
    }

    bool ok() const { return res.status == CheckStatus::Pass; }

    void fail(const std::string& label, nlohmann::json witness) {
        if (!ok()) return;
        res.status = CheckStatus::Fail;
        res.reason = label;
        if (witness.is_null()) witness = {{"claim", label}};
        res.witness = std::move(witness);
    }

    bool expect(const std::string& label, bool cond, nlohmann::json witness = nullptr) {
        if (!ok()) return false;
        if (!cond) fail(label, std::move(witness));
        return cond;
    }

    bool expect_poly_eq(const std::string& label, const Poly& lhs, const Poly& rhs) {
        if (!ok()) return false;
        if (mode.symbolic) {
            if (lhs == rhs) return true;
            fail(label, {{"difference", (lhs - rhs).str(namer())}});
            return false;
        }
        for (const auto& a : trials()) {
            const CycloNumber lv = lhs.evaluated(a);
            const CycloNumber rv = rhs.evaluated(a);
            if (!(lv == rv)) {
                fail(label, {{"assignment", assignment_to_json(ctx, a)},
                             {"lhs", lv.str()},
                             {"rhs", rv.str()}});
                return false;
            }
        }
        return true;
    }

    bool expect_poly_zero(const std::string& label, const Poly& p) {
        return expect_poly_eq(label, p, Poly(ctx.field));
    }

    bool expect_elem_eq(const std::string& label, const AlgebraElement& lhs,
                        const AlgebraElement& rhs) {
        if (!ok()) return false;
        if (mode.symbolic) {
            if (lhs == rhs) return true;
            for (long i = 0; i < ctx.group->order(); ++i)
                if (lhs.coeff(i) != rhs.coeff(i)) {
                    fail(label, {{"element", ctx.group->element_name(i)},
                                 {"difference", (lhs.coeff(i) - rhs.coeff(i)).str(namer())}});
                    return false;
                }
            return false;
        }
        for (const auto& a : trials()) {
            for (long i = 0; i < ctx.group->order(); ++i) {
                const CycloNumber lv = lhs.coeff(i).evaluated(a);
                const CycloNumber rv = rhs.coeff(i).evaluated(a);
                if (!(lv == rv)) {
                    fail(label, {{"assignment", assignment_to_json(ctx, a)},
                                 {"element", ctx.group->element_name(i)},
                                 {"lhs", lv.str()},
                                 {"rhs", rv.str()}});
                    return false;
                }
            }
        }
        return true;
    }

    bool expect_elem_zero(const std::string& label, const AlgebraElement& u) {
        return expect_elem_eq(label, u, AlgebraElement(ctx));
    }
};

Poly xvar(const Context& ctx, const GroupElement& g) {
    return Poly::variable(ctx.field, ctx.group->index_of(g));
}

AlgebraElement poly_times_unit(const Context& ctx, const Poly& p) {
    AlgebraElement u(ctx);
    u.set_coeff(ctx.group->index_of(ctx.group->identity()), p);
    return u;
}

AlgebraElement numeric_element(const Context& ctx, const std::vector<CycloNumber>& coeffs) {
    AlgebraElement u(ctx);
    for (long i = 0; i < ctx.group->order(); ++i) u.set_coeff(i, Poly::constant(coeffs[i]));
    return u;
}

Character chi_of(const Context& ctx, int which) {
    return irreducible_set(ctx).degree_one.at(which - 1);
}

bool imaginary_chi3(const Context& ctx, const Character& chi3) {
    // distinguishes the table variant with chi3(b) = i from the real one
    const CycloNumber sq = chi3.value_at(ctx.group->reflection(0)) *
                           chi3.value_at(ctx.group->reflection(0));
    return sq == -CycloNumber::one(ctx.field);
}

// ---- checkers ------------------------------------------------------------

void check_normal_form(Harness& h) {
    const auto& G = *h.ctx.group;
    h.res.mode = "symbolic";
    const long r = G.rotation_order();
    std::set<GroupElement> seen(G.elements().begin(), G.elements().end());
    h.expect("all canonical forms distinct", static_cast<long>(seen.size()) == G.order());
    h.expect("order equals 2 * |<a>|", G.order() == 2 * r);
    for (long i = 0; i < G.order() && h.ok(); ++i)
        h.expect("index bijection", G.index_of(G.element(i)) == i, {{"index", i}});
    // defining relations
    const GroupElement a = G.rotation(1), b = G.reflection(0), e = G.identity();
    GroupElement ar = e;
    for (long k = 0; k < r; ++k) ar = G.mul(ar, a);
    h.expect("a^r = e", ar == e);
    const GroupElement b2 = G.mul(b, b);
    if (G.spec().kind == GroupKind::Dihedral)
        h.expect("b^2 = e", b2 == e);
    else
        h.expect("b^2 = a^m", b2 == G.rotation(G.spec().params[0]));
    for (long k = 0; k < r && h.ok(); ++k) {
        const GroupElement g = G.rotation(k);
        h.expect("b g = g^-1 b on <a>", G.mul(b, g) == G.mul(G.inv(g), b),
                 {{"k", k}});
    }
}

void check_frobenius(Harness& h) {
    const auto& ctx = h.ctx;
    if (h.mode.symbolic && ctx.group->order() <= kDefaultSymbolicLimit) {
        const Poly lhs = symbolic_det(ctx, group_matrix(ctx.group));
        const Poly rhs = frobenius_theta(ctx);
        h.expect("theta = frobenius product (symbolic)", lhs == rhs,
                 lhs == rhs ? nlohmann::json(nullptr)
                            : nlohmann::json{{"difference", (lhs - rhs).str(h.namer())}});
        return;
    }
    h.res.mode = mode_str(CheckMode::make_randomized(h.mode.trials, h.mode.seed), h.bound);
    const GroupMatrix m = group_matrix(ctx.group);
    for (const auto& a : h.trials()) {
        const CycloNumber lhs = numeric_det_at(ctx, m, a);
        const CycloNumber rhs = frobenius_theta_at(ctx, a);
        if (!h.expect("theta = frobenius product (at point)", lhs == rhs,
                      {{"assignment", assignment_to_json(ctx, a)},
                       {"lhs", lhs.str()},
                       {"rhs", rhs.str()}}))
            return;
    }
}

void check_convolution_ring(Harness& h) {
    const auto& ctx = h.ctx;
    h.res.mode = mode_str(CheckMode::make_randomized(h.mode.trials, h.mode.seed), h.bound);
    AssignmentStream stream(h.mode.seed, h.bound);
    const AlgebraElement unit = AlgebraElement::unit(ctx);
    for (long t = 0; t < h.mode.trials && h.ok(); ++t) {
        const AlgebraElement f = numeric_element(ctx, stream.next(ctx));
        const AlgebraElement g = numeric_element(ctx, stream.next(ctx));
        const AlgebraElement k = numeric_element(ctx, stream.next(ctx));
        h.expect("unit * f = f", convolve(unit, f) == f);
        h.expect("f * unit = f", convolve(f, unit) == f);
        h.expect("(f*g)*k = f*(g*k)", convolve(convolve(f, g), k) == convolve(f, convolve(g, k)));
        h.expect("f*(g+k) = f*g + f*k",
                 convolve(f, g + k) == convolve(f, g) + convolve(f, k));
    }
}

void check_fourier_iso(Harness& h) {
    const auto& ctx = h.ctx;
    h.res.mode = mode_str(CheckMode::make_randomized(h.mode.trials, h.mode.seed), h.bound);
    const RepSet reps = irreducible_set(ctx);
    // T(delta_e) is the identity in every block
    FourierImage unit_img = fourier_transform(reps, AlgebraElement::unit(ctx));
    for (const auto& blk : unit_img.blocks)
        if (!h.expect("T(delta_e) = identity blocks",
                      blk == CMat::identity(ctx.field, blk.dim)))
            return;
    AssignmentStream stream(h.mode.seed, h.bound);
    for (long t = 0; t < h.mode.trials && h.ok(); ++t) {
        const auto ca = stream.next(ctx);
        const auto cb = stream.next(ctx);
        const AlgebraElement f = numeric_element(ctx, ca);
        const AlgebraElement g = numeric_element(ctx, cb);
        const FourierImage lhs = fourier_transform(reps, convolve(f, g));
        const FourierImage rhs = blockwise_product(fourier_transform(reps, f), fourier_transform(reps, g));
        h.expect("T(f*g) = T(f) T(g)", lhs == rhs,
                 {{"assignment_f", assignment_to_json(ctx, ca)},
                  {"assignment_g", assignment_to_json(ctx, cb)}});
    }
    // linearity on one combination per run
    if (h.ok() && h.mode.trials > 0) {
        AssignmentStream s2(h.mode.seed + 1, h.bound);
        const AlgebraElement f = numeric_element(ctx, s2.next(ctx));
        const AlgebraElement g = numeric_element(ctx, s2.next(ctx));
        const FourierImage sum = fourier_transform(reps, f + g);
        const FourierImage fa = fourier_transform(reps, f);
        const FourierImage ga = fourier_transform(reps, g);
        bool linear = true;
        for (size_t i = 0; i < sum.blocks.size(); ++i)
            if (!(sum.blocks[i] == fa.blocks[i] + ga.blocks[i])) linear = false;
        h.expect("T is additive", linear);
    }
}

void check_theta_e_abelian(Harness& h) {
    const auto& ctx = h.ctx;
    if (h.mode.symbolic && ctx.group->order() <= kDefaultSymbolicLimit) {
        const Poly theta = symbolic_det(ctx, group_matrix(ctx.group));
        h.expect_elem_eq("product of character factors = theta * e", theta_e_product(ctx),
                         poly_times_unit(ctx, theta));
        return;
    }
    h.res.mode = mode_str(CheckMode::make_randomized(h.mode.trials, h.mode.seed), h.bound);
    const GroupMatrix m = group_matrix(ctx.group);
    for (const auto& a : h.trials()) {
        if (!h.ok()) return;
        const CycloNumber theta = numeric_det_at(ctx, m, a);
        std::vector<CycloNumber> expected(ctx.group->order(), CycloNumber::zero(ctx.field));
        expected[ctx.group->index_of(ctx.group->identity())] = theta;
        h.expect("product of character factors = theta * e (at point)",
                 theta_e_product_at(ctx, a) == numeric_element(ctx, expected),
                 {{"assignment", assignment_to_json(ctx, a)}});
    }
}

// Shared by the abelian and the D/Q inverse corollaries.
void check_inverse_formula(Harness& h) {
    const auto& ctx = h.ctx;
    h.res.mode = mode_str(CheckMode::make_randomized(h.mode.trials, h.mode.seed), h.bound);
    if (!ctx.group->is_abelian())
        h.res.details["case"] =
            (ctx.group->spec().kind == GroupKind::Dihedral && ctx.group->spec().params[0] % 2)
                ? 1
                : 2;
    const GroupMatrix m = group_matrix(ctx.group);
    AssignmentStream stream(h.mode.seed, h.bound);
    const AlgebraElement unit = AlgebraElement::unit(ctx);
    long done = 0, attempts = 0;
    while (done < h.mode.trials && h.ok()) {
        if (++attempts > 100 * h.mode.trials + 100)
            throw std::runtime_error("could not find nonsingular assignments");
        const auto a = stream.next(ctx);
        if (numeric_det_at(ctx, m, a).is_zero()) continue;   // precondition fails; redraw
        ++done;
        const AlgebraElement inv = inverse_element(ctx, a);
        const AlgebraElement alpha1 = numeric_element(ctx, a);
        h.expect("inverse * alpha1 = e", convolve(inv, alpha1) == unit,
                 {{"assignment", assignment_to_json(ctx, a)}});
        h.expect("alpha1 * inverse = e", convolve(alpha1, inv) == unit,
                 {{"assignment", assignment_to_json(ctx, a)}});
    }
}

void check_A_structure(Harness& h) {
    const auto& ctx = h.ctx;
    const auto& G = *ctx.group;
    for (long i = 0; i < G.order() && h.ok(); ++i) {
        const GroupElement& g = G.element(i);
        if (!G.in_rotation_subgroup(g))
            h.expect_poly_zero("A_h = 0 off <a> (h=" + G.element_name(i) + ")", build_A(ctx, g));
        h.expect_poly_eq("A_h = A_{h^-1} (h=" + G.element_name(i) + ")", build_A(ctx, g),
                         build_A(ctx, G.inv(g)));
    }
}

void check_degree_one_products(Harness& h) {
    const auto& ctx = h.ctx;
    const auto& G = *ctx.group;
    const long r = G.rotation_order();
    const RepSet reps = irreducible_set(ctx);
    Poly sum_A(ctx.field);
    for (long k = 0; k < r; ++k) sum_A += build_A(ctx, G.rotation(k));
    h.expect_poly_eq("chi1-form * chi2-form = sum of A_h",
                     character_linear_form(ctx, reps.degree_one[0]) *
                         character_linear_form(ctx, reps.degree_one[1]),
                     sum_A);
    if (has_four_degree_one(G)) {
        const Character half = chi_prime(ctx, r / 2);
        Poly rhs(ctx.field);
        for (long k = 0; k < r; ++k) rhs += build_A(ctx, G.rotation(k)) * half.value(k);
        h.expect_poly_eq("chi3-form * chi4-form = twisted sum of A_h",
                         character_linear_form(ctx, reps.degree_one[2]) *
                             character_linear_form(ctx, reps.degree_one[3]),
                         rhs);
    } else {
        h.res.details["chi3_chi4_pairing"] = "skipped: only two degree-one representations";
    }
}

void check_rep_factor_dets(Harness& h) {
    const auto& ctx = h.ctx;
    const auto& G = *ctx.group;
    const long r = G.rotation_order();
    const RepSet reps = irreducible_set(ctx);
    for (size_t t = 0; t < reps.degree_two.size() && h.ok(); ++t) {
        const long l = static_cast<long>(t) + 1;
        const Character chi = chi_prime(ctx, l);
        Poly rhs(ctx.field);
        for (long k = 0; k < r; ++k) rhs += build_A(ctx, G.rotation(k)) * chi.value(k);
        h.expect_poly_eq("det(sum phi_" + std::to_string(l) + "(g) x_g) = chi'-twisted sum of A_h",
                         rep_factor_det(ctx, reps.degree_two[t]), rhs);
    }
}

void check_conjugate_symmetry(Harness& h) {
    const auto& ctx = h.ctx;
    const auto& G = *ctx.group;
    const long r = G.rotation_order();
    std::vector<Poly> a_polys;
    for (long k = 0; k < r; ++k) a_polys.push_back(build_A(ctx, G.rotation(k)));
    for (long l = 0; l < r && h.ok(); ++l) {
        const Character chi = chi_prime(ctx, l);
        Poly lhs(ctx.field), rhs(ctx.field);
        for (long k = 0; k < r; ++k) {
            lhs += a_polys[k] * chi.value(k);
            rhs += a_polys[k] * chi.value(k).conjugate();
        }
        h.expect_poly_eq("chi'-sum equals conjugate sum (l=" + std::to_string(l) + ")", lhs, rhs);
    }
}

void check_circulant(Harness& h) {
    const auto& ctx = h.ctx;
    if (h.mode.symbolic && ctx.group->order() <= kDefaultSymbolicLimit) {
        h.expect_poly_eq("theta = circulant product", circulant_theta(ctx),
                         symbolic_det(ctx, group_matrix(ctx.group)));
        return;
    }
    h.res.mode = mode_str(CheckMode::make_randomized(h.mode.trials, h.mode.seed), h.bound);
    const GroupMatrix m = group_matrix(ctx.group);
    for (const auto& a : h.trials()) {
        if (!h.ok()) return;
        const CycloNumber lhs = circulant_theta_at(ctx, a);
        const CycloNumber rhs = numeric_det_at(ctx, m, a);
        h.expect("theta = circulant product (at point)", lhs == rhs,
                 {{"assignment", assignment_to_json(ctx, a)},
                  {"lhs", lhs.str()},
                  {"rhs", rhs.str()}});
    }
}

void check_alpha12_product(Harness& h) {
    const auto& ctx = h.ctx;
    const auto& G = *ctx.group;
    AlgebraElement rhs(ctx);
    for (long k = 0; k < G.rotation_order(); ++k) {
        const GroupElement g = G.rotation(k);
        rhs.set_coeff(G.index_of(g), build_A(ctx, g));
    }
    h.expect_elem_eq("alpha1 alpha2 = sum A_h h",
                     convolve(build_factor(ctx, DegreeOneFactor::Alpha1),
                              build_factor(ctx, DegreeOneFactor::Alpha2)),
                     rhs);
}

void check_alpha34_product(Harness& h) {
    const auto& ctx = h.ctx;
    const auto& G = *ctx.group;
    const long r = G.rotation_order();
    const Character half = chi_prime(ctx, r / 2);
    AlgebraElement rhs(ctx);
    for (long k = 0; k < r; ++k) {
        const GroupElement g = G.rotation(k);
        rhs.set_coeff(G.index_of(g), build_A(ctx, g) * half.value(k));
    }
    h.expect_elem_eq("alpha3 alpha4 = chi'-twisted sum A_h h",
                     convolve(build_factor(ctx, DegreeOneFactor::Alpha3),
                              build_factor(ctx, DegreeOneFactor::Alpha4)),
                     rhs);
}

void check_theta_e_dq(Harness& h) {
    const auto& ctx = h.ctx;
    const auto& G = *ctx.group;
    const long r = G.rotation_order();
    const bool symbolic = h.mode.symbolic && G.order() <= kDefaultSymbolicLimit;
    if (!symbolic)
        h.res.mode = mode_str(CheckMode::make_randomized(h.mode.trials, h.mode.seed), h.bound);

    // x_g reading of the product (the displayed formula): refuted numerically.
    std::vector<AlgebraElement> x_factors;
    for (long l = 0; l < r; ++l) {
        const Character chi = chi_prime(ctx, l);
        AlgebraElement f(ctx);
        for (long k = 0; k < r; ++k) {
            const GroupElement g = G.rotation(k);
            f.set_coeff(G.index_of(g), xvar(ctx, g) * chi.value(k));
        }
        x_factors.push_back(std::move(f));
    }

    const GroupMatrix m = group_matrix(ctx.group);
    if (symbolic) {
        const Poly theta = symbolic_det(ctx, m);
        const AlgebraElement lhs = theta_e_product(ctx);
        const AlgebraElement rhs = poly_times_unit(ctx, theta);
        const bool a_ok = lhs == rhs;
        h.res.details["a_g_reading"] = a_ok ? "pass" : "fail";
        if (!a_ok) h.expect_elem_eq("product of circulant factors = theta * e", lhs, rhs);
    } else {
        bool a_ok = true;
        for (const auto& a : h.trials()) {
            const CycloNumber theta = numeric_det_at(ctx, m, a);
            std::vector<CycloNumber> expected(G.order(), CycloNumber::zero(ctx.field));
            expected[G.index_of(G.identity())] = theta;
            if (!(theta_e_product_at(ctx, a) == numeric_element(ctx, expected))) {
                a_ok = false;
                h.fail("product of circulant factors = theta * e (at point)",
                       {{"assignment", assignment_to_json(ctx, a)}});
                break;
            }
        }
        h.res.details["a_g_reading"] = a_ok ? "pass" : "fail";
    }

    // Refute the x_g reading at a stream point where it differs from theta*e.
    AssignmentStream stream(h.mode.seed, h.bound);
    bool refuted = false;
    for (long t = 0; t < std::max<long>(h.mode.trials, 20); ++t) {
        const auto a = stream.next(ctx);
        AlgebraElement prod = AlgebraElement::unit(ctx);
        for (const auto& f : x_factors) prod = convolve(prod, evaluate_coeffs(f, a));
        const CycloNumber theta = numeric_det_at(ctx, m, a);
        std::vector<CycloNumber> expected(G.order(), CycloNumber::zero(ctx.field));
        expected[G.index_of(G.identity())] = theta;
        if (!(prod == numeric_element(ctx, expected))) {
            refuted = true;
            h.res.details["x_g_reading"] = "fail";
            h.res.details["x_g_counterexample"] =
                nlohmann::json{{"assignment", assignment_to_json(ctx, a)},
                               {"theta", theta.str()},
                               {"x_product_at_e",
                                prod.coeff(G.index_of(G.identity())).constant_value().str()}};
            break;
        }
    }
    if (!refuted) {
        h.res.details["x_g_reading"] = "not refuted";
        h.fail("x_g reading unexpectedly matched theta * e at every point", nullptr);
    }
}

std::vector<Poly> lemma_611_map(const Context& ctx) {
    const auto& G = *ctx.group;
    std::vector<Poly> map;
    map.reserve(G.order());
    for (long i = 0; i < G.order(); ++i) {
        if (G.in_rotation_subgroup(G.element(i)))
            map.push_back(Poly::variable(ctx.field, G.inv_index(i)));
        else
            map.push_back(-Poly::variable(ctx.field, i));
    }
    return map;
}

void check_substitution_611(Harness& h) {
    const auto& ctx = h.ctx;
    const auto map = lemma_611_map(ctx);
    const AlgebraElement a1 = build_factor(ctx, DegreeOneFactor::Alpha1);
    const AlgebraElement a2 = build_factor(ctx, DegreeOneFactor::Alpha2);
    h.expect_elem_eq("alpha1 becomes alpha2", substitute_all(a1, map), a2);
    h.expect_elem_eq("alpha2 becomes alpha1", substitute_all(a2, map), a1);
    if (has_four_degree_one(*ctx.group)) {
        const AlgebraElement a3 = build_factor(ctx, DegreeOneFactor::Alpha3);
        const AlgebraElement a4 = build_factor(ctx, DegreeOneFactor::Alpha4);
        h.expect_elem_eq("alpha3 becomes alpha4", substitute_all(a3, map), a4);
        h.expect_elem_eq("alpha4 becomes alpha3", substitute_all(a4, map), a3);
    } else {
        h.res.details["alpha3_alpha4_clause"] = "skipped: only two degree-one representations";
    }
}

void check_substitution_612(Harness& h) {
    const auto& ctx = h.ctx;
    const auto& G = *ctx.group;
    const Character chi3 = chi_of(ctx, 3);
    std::vector<Poly> map;
    for (long i = 0; i < G.order(); ++i) map.push_back(Poly::variable(ctx.field, i) * chi3.value(i));

    const AlgebraElement a1 = build_factor(ctx, DegreeOneFactor::Alpha1);
    const AlgebraElement a2 = build_factor(ctx, DegreeOneFactor::Alpha2);
    const AlgebraElement a3 = build_factor(ctx, DegreeOneFactor::Alpha3);
    const AlgebraElement a4 = build_factor(ctx, DegreeOneFactor::Alpha4);

    h.expect_elem_eq("alpha1 becomes alpha3", substitute_all(a1, map), a3);
    h.expect_elem_eq("alpha2 becomes alpha4", substitute_all(a2, map), a4);

    AlgebraElement rot_plain(ctx), rot_inv(ctx), off_plain(ctx);
    for (long i = 0; i < G.order(); ++i) {
        if (G.in_rotation_subgroup(G.element(i))) {
            rot_plain.set_coeff(i, Poly::variable(ctx.field, i));
            rot_inv.set_coeff(i, Poly::variable(ctx.field, G.inv_index(i)));
        } else {
            off_plain.set_coeff(i, Poly::variable(ctx.field, i));
        }
    }
    if (imaginary_chi3(ctx, chi3)) {
        h.expect_elem_eq("alpha3 becomes rotation-minus-reflection form",
                         substitute_all(a3, map), rot_plain - off_plain);
        h.expect_elem_eq("alpha4 becomes inverted-rotation-plus-reflection form",
                         substitute_all(a4, map), rot_inv + off_plain);
    } else {
        h.expect_elem_eq("alpha3 becomes alpha1", substitute_all(a3, map), a1);
        h.expect_elem_eq("alpha4 becomes alpha2", substitute_all(a4, map), a2);
    }
    h.expect_elem_eq("alpha3 + alpha4 becomes alpha1 + alpha2",
                     substitute_all(a3 + a4, map), a1 + a2);
}

void check_reflection_sum_identity(Harness& h) {
    const auto& ctx = h.ctx;
    const auto& G = *ctx.group;
    const long r = G.rotation_order();
    const GroupElement b = G.reflection(0);
    const GroupElement binv = G.inv(b);
    for (long kk = 0; kk < r && h.ok(); ++kk) {
        const GroupElement hh = G.rotation(kk);
        Poly lhs(ctx.field), rhs(ctx.field);
        for (long k = 0; k < r; ++k) {
            const GroupElement g = G.rotation(k);
            const GroupElement gb = G.mul(g, b);
            lhs += xvar(ctx, gb) * xvar(ctx, G.mul(G.mul(binv, G.inv(g)), hh));
            rhs += xvar(ctx, gb) * xvar(ctx, G.mul(G.mul(hh, g), binv));
        }
        h.expect_poly_eq("reflection sums agree (h=" + G.element_name(G.index_of(hh)) + ")", lhs,
                         rhs);
    }
}

void check_off_subgroup_sum_identity(Harness& h) {
    const auto& ctx = h.ctx;
    const auto& G = *ctx.group;
    const long r = G.rotation_order();
    for (long kk = 0; kk < r && h.ok(); ++kk) {
        const GroupElement hh = G.reflection(kk);
        Poly lhs(ctx.field), rhs(ctx.field);
        for (long k = 0; k < r; ++k) {
            const GroupElement g_off = G.reflection(k);
            lhs += xvar(ctx, g_off) * xvar(ctx, G.mul(G.inv(g_off), hh));
            const GroupElement g = G.rotation(k);
            rhs += xvar(ctx, g) * xvar(ctx, G.mul(g, hh));
        }
        h.expect_poly_eq("off-subgroup sums agree (h=" + G.element_name(G.index_of(hh)) + ")", lhs,
                         rhs);
    }
}

void check_commutator_12(Harness& h) {
    const auto& ctx = h.ctx;
    h.expect_elem_zero("[alpha1, alpha2] = 0",
                       commutator(build_factor(ctx, DegreeOneFactor::Alpha1),
                                  build_factor(ctx, DegreeOneFactor::Alpha2)));
}

void check_commutator_34(Harness& h) {
    const auto& ctx = h.ctx;
    h.expect_elem_zero("[alpha3, alpha4] = 0",
                       commutator(build_factor(ctx, DegreeOneFactor::Alpha3),
                                  build_factor(ctx, DegreeOneFactor::Alpha4)));
}

void check_expansion_625(Harness& h) {
    const auto& ctx = h.ctx;
    const auto& G = *ctx.group;
    const Character chi3 = chi_of(ctx, 3);
    AlgebraElement rhs(ctx);
    for (long hi = 0; hi < G.order(); ++hi) {
        const GroupElement& hh = G.element(hi);
        Poly c(ctx.field);
        for (long gi = 0; gi < G.order(); ++gi) {
            const GroupElement& g = G.element(gi);
            const GroupElement gih = G.mul(G.inv(g), hh);
            c += xvar(ctx, g) * xvar(ctx, gih) * chi3.value_at(gih);
            c -= xvar(ctx, g) * xvar(ctx, gih) * chi3.value(gi);
        }
        rhs.set_coeff(hi, std::move(c));
    }
    h.expect_elem_eq("[alpha1, alpha3] expansion",
                     commutator(build_factor(ctx, DegreeOneFactor::Alpha1),
                                build_factor(ctx, DegreeOneFactor::Alpha3)),
                     rhs);
}

void check_odd_rotation_vanishing(Harness& h) {
    const auto& ctx = h.ctx;
    const auto& G = *ctx.group;
    const long r = G.rotation_order();
    const Character chi3 = chi_of(ctx, 3);
    for (long k = 1; k < r; k += 2) {
        const GroupElement hh = G.rotation(k);
        Poly s(ctx.field);
        for (long j = 0; j < r; ++j) {
            const GroupElement g = G.rotation(j);
            s += xvar(ctx, g) * xvar(ctx, G.mul(G.inv(g), hh)) * chi3.value_at(g);
        }
        if (!h.expect_poly_zero("odd-rotation twisted sum vanishes (k=" + std::to_string(k) + ")",
                                s))
            return;
    }
}

// Coefficient formula of the rotation part of [alpha1, alpha3] / [alpha1, alpha4].
void check_rotation_coefficients(Harness& h, DegreeOneFactor second) {
    const auto& ctx = h.ctx;
    const auto& G = *ctx.group;
    const long r = G.rotation_order();
    const Character chi3 = chi_of(ctx, 3);
    const AlgebraElement comm = commutator(build_factor(ctx, DegreeOneFactor::Alpha1),
                                           build_factor(ctx, second));
    const bool alpha4 = second == DegreeOneFactor::Alpha4;
    for (long k = 0; k < r && h.ok(); ++k) {
        const GroupElement hh = G.rotation(k);
        Poly first(ctx.field), secnd(ctx.field);
        for (long j = 0; j < r; ++j) {
            const GroupElement g = G.reflection(j);
            const GroupElement gih = G.mul(G.inv(g), hh);
            first += xvar(ctx, g) * xvar(ctx, gih) * chi3.value_at(G.inv(g));
            secnd += xvar(ctx, g) * xvar(ctx, gih) * chi3.value_at(g);
        }
        Poly rhs(ctx.field);
        if (alpha4) {
            // (-1)^(k+1) * first + second
            rhs = (k % 2 == 0) ? -first : first;
            rhs += secnd;
        } else {
            // (-1)^k * first - second
            rhs = (k % 2 == 0) ? first : -first;
            rhs -= secnd;
        }
        h.expect_poly_eq("rotation coefficient formula (k=" + std::to_string(k) + ")",
                         comm.coeff(G.index_of(hh)), rhs);
    }
}

// Coefficient formula of the reflection part of [alpha1, alpha3] / [alpha1, alpha4].
void check_reflection_coefficients(Harness& h, DegreeOneFactor second) {
    const auto& ctx = h.ctx;
    const auto& G = *ctx.group;
    const long r = G.rotation_order();
    const Character chi3 = chi_of(ctx, 3);
    const AlgebraElement comm = commutator(build_factor(ctx, DegreeOneFactor::Alpha1),
                                           build_factor(ctx, second));
    const bool alpha4 = second == DegreeOneFactor::Alpha4;
    const bool imag = imaginary_chi3(ctx, chi3);
    h.res.details["branch"] = imag ? "chi3(b) = i" : "chi3(b) real";
    const CycloNumber one = CycloNumber::one(ctx.field);
    for (long k = 0; k < r && h.ok(); ++k) {
        const GroupElement hh = G.reflection(k);
        Poly rhs(ctx.field);
        if (imag) {
            const CycloNumber i_unit = root_of_unity(ctx.field, ctx.field->conductor() / 4);
            const CycloNumber coef = (k % 2) ? one + i_unit : one - i_unit;
            Poly gh_sum(ctx.field), gih_sum(ctx.field);
            for (long j = 0; j < r; ++j) {
                const GroupElement g = G.rotation(j);
                gh_sum += xvar(ctx, g) * xvar(ctx, G.mul(g, hh)) * chi3.value_at(g);
                gih_sum += xvar(ctx, g) * xvar(ctx, G.mul(G.inv(g), hh)) * chi3.value_at(g);
            }
            rhs = gh_sum * coef - gih_sum * coef;
            if (alpha4) rhs = -rhs;
        } else {
            if (k % 2 == 1) {
                Poly full(ctx.field);
                for (long gi = 0; gi < G.order(); ++gi) {
                    const GroupElement& g = G.element(gi);
                    full += xvar(ctx, g) * xvar(ctx, G.mul(G.inv(g), hh)) * chi3.value(gi);
                }
                rhs = full * CycloNumber::integer(ctx.field, alpha4 ? 2 : -2);
            }
            // k even: zero
        }
        h.expect_poly_eq("reflection coefficient formula (k=" + std::to_string(k) + ")",
                         comm.coeff(G.index_of(hh)), rhs);
    }
}

void check_expansion_629(Harness& h) {
    const auto& ctx = h.ctx;
    const auto& G = *ctx.group;
    const Character chi3 = chi_of(ctx, 3);
    AlgebraElement rhs(ctx);
    for (long hi = 0; hi < G.order(); ++hi) {
        const GroupElement& hh = G.element(hi);
        Poly c(ctx.field);
        for (long gi = 0; gi < G.order(); ++gi) {
            const GroupElement& g = G.element(gi);
            if (G.in_rotation_subgroup(g)) {
                c += xvar(ctx, g) * xvar(ctx, G.mul(hh, g)) * chi3.value(gi);
                c -= xvar(ctx, g) * xvar(ctx, G.mul(g, hh)) * chi3.value(gi);
            } else {
                c -= xvar(ctx, g) * xvar(ctx, G.mul(hh, G.inv(g))) * chi3.value(gi);
                c += xvar(ctx, g) * xvar(ctx, G.mul(G.inv(g), hh)) * chi3.value(gi);
            }
        }
        rhs.set_coeff(hi, std::move(c));
    }
    h.expect_elem_eq("[alpha1, alpha4] expansion",
                     commutator(build_factor(ctx, DegreeOneFactor::Alpha1),
                                build_factor(ctx, DegreeOneFactor::Alpha4)),
                     rhs);
}

void check_mixed_commutators(Harness& h) {
    const auto& ctx = h.ctx;
    const AlgebraElement a1 = build_factor(ctx, DegreeOneFactor::Alpha1);
    const AlgebraElement a2 = build_factor(ctx, DegreeOneFactor::Alpha2);
    const AlgebraElement a3 = build_factor(ctx, DegreeOneFactor::Alpha3);
    const AlgebraElement a4 = build_factor(ctx, DegreeOneFactor::Alpha4);
    h.expect_elem_zero("[alpha1, alpha3 + alpha4] = 0", commutator(a1, a3 + a4));
    h.expect_elem_zero("[alpha2, alpha3 + alpha4] = 0", commutator(a2, a3 + a4));
    h.expect_elem_zero("[alpha3, alpha1 + alpha2] = 0", commutator(a3, a1 + a2));
    h.expect_elem_zero("[alpha4, alpha1 + alpha2] = 0", commutator(a4, a1 + a2));
}

void check_nonvanishing(Harness& h) {
    const auto& ctx = h.ctx;
    const auto& G = *ctx.group;
    const AlgebraElement a1 = build_factor(ctx, DegreeOneFactor::Alpha1);
    const AlgebraElement a2 = build_factor(ctx, DegreeOneFactor::Alpha2);
    const AlgebraElement a3 = build_factor(ctx, DegreeOneFactor::Alpha3);
    const AlgebraElement a4 = build_factor(ctx, DegreeOneFactor::Alpha4);
    const std::vector<std::pair<std::string, AlgebraElement>> cases = {
        {"[alpha1, alpha3]", commutator(a1, a3)},
        {"[alpha1, alpha4]", commutator(a1, a4)},
        {"[alpha2, alpha4]", commutator(a2, a4)},
    };
    nlohmann::json witnesses = nlohmann::json::object();
    for (const auto& [label, comm] : cases) {
        if (!h.expect(label + " symbolically nonzero", !comm.is_zero())) return;
        AssignmentStream stream(h.mode.seed, h.bound);
        bool found = false;
        for (long t = 0; t < std::max<long>(h.mode.trials, 50) && !found; ++t) {
            const auto a = stream.next(ctx);
            for (long i = 0; i < G.order(); ++i) {
                const CycloNumber v = comm.coeff(i).evaluated(a);
                if (!v.is_zero()) {
                    witnesses[label] = {{"assignment", assignment_to_json(ctx, a)},
                                        {"element", G.element_name(i)},
                                        {"value", v.str()}};
                    found = true;
                    break;
                }
            }
        }
        if (!h.expect(label + " has a nonzero evaluation witness", found)) return;
    }
    h.res.witness = witnesses;
}

void check_pairing(Harness& h) {
    const auto& ctx = h.ctx;
    const AlgebraElement a1 = build_factor(ctx, DegreeOneFactor::Alpha1);
    const AlgebraElement a2 = build_factor(ctx, DegreeOneFactor::Alpha2);
    h.expect_elem_zero("[alpha1, alpha2] = 0", commutator(a1, a2));
    if (has_four_degree_one(*ctx.group)) {
        const AlgebraElement a3 = build_factor(ctx, DegreeOneFactor::Alpha3);
        const AlgebraElement a4 = build_factor(ctx, DegreeOneFactor::Alpha4);
        h.expect_elem_zero("[alpha3, alpha4] = 0", commutator(a3, a4));
        h.expect_elem_zero("[alpha1, alpha3 + alpha4] = 0", commutator(a1, a3 + a4));
        h.expect_elem_zero("[alpha2, alpha3 + alpha4] = 0", commutator(a2, a3 + a4));
        h.expect_elem_zero("[alpha3, alpha1 + alpha2] = 0", commutator(a3, a1 + a2));
        h.expect_elem_zero("[alpha4, alpha1 + alpha2] = 0", commutator(a4, a1 + a2));
    } else {
        h.res.details["pairs"] = "only (chi1, chi2): two degree-one representations";
    }
}

// ---- dispatch -------------------------------------------------------------

enum class Family { Any, Abelian, DQ, DihedralOnly, QuaternionOnly };

struct CheckSpec {
    Family family;
    bool needs_four;    // alpha3/alpha4 required (skip for D_m, m odd)
    std::function<void(Harness&)> fn;
};

const std::map<std::string, CheckSpec>& check_table() {
    static const std::map<std::string, CheckSpec> table = {
        {"L4.1.1", {Family::DihedralOnly, false, check_normal_form}},
        {"L4.2.1", {Family::QuaternionOnly, false, check_normal_form}},
        {"T2.1.1", {Family::Any, false, check_frobenius}},
        {"T3.1.2", {Family::Any, false, check_fourier_iso}},
        {"L3.1.3", {Family::Any, false, check_convolution_ring}},
        {"T3.2.1", {Family::Abelian, false, check_theta_e_abelian}},
        {"C3.2.2", {Family::Abelian, false, check_inverse_formula}},
        {"L5.1.1", {Family::DQ, false, check_A_structure}},
        {"L5.1.2", {Family::DQ, false, check_degree_one_products}},
        {"L5.1.3", {Family::DQ, false, check_rep_factor_dets}},
        {"L5.1.4", {Family::DQ, false, check_conjugate_symmetry}},
        {"T5.1.5", {Family::DQ, false, check_circulant}},
        {"L5.2.1", {Family::DQ, false, check_alpha12_product}},
        {"L5.2.2", {Family::DQ, true, check_alpha34_product}},
        {"T5.2.3", {Family::DQ, false, check_theta_e_dq}},
        {"C5.2.4", {Family::DQ, false, check_inverse_formula}},
        {"L6.1.1", {Family::DQ, false, check_substitution_611}},
        {"L6.1.2", {Family::DQ, true, check_substitution_612}},
        {"L6.2.1", {Family::DQ, false, check_reflection_sum_identity}},
        {"L6.2.2", {Family::DQ, false, check_off_subgroup_sum_identity}},
        {"T6.2.3", {Family::DQ, false, check_commutator_12}},
        {"T6.2.4", {Family::DQ, true, check_commutator_34}},
        {"L6.2.5", {Family::DQ, true, check_expansion_625}},
        {"L6.2.6", {Family::DQ, true, check_odd_rotation_vanishing}},
        {"L6.2.7", {Family::DQ, true,
                    [](Harness& h) { check_rotation_coefficients(h, DegreeOneFactor::Alpha3); }}},
        {"L6.2.8", {Family::DQ, true,
                    [](Harness& h) { check_reflection_coefficients(h, DegreeOneFactor::Alpha3); }}},
        {"L6.2.9", {Family::DQ, true, check_expansion_629}},
        {"L6.2.10", {Family::DQ, true,
                     [](Harness& h) { check_rotation_coefficients(h, DegreeOneFactor::Alpha4); }}},
        {"L6.2.11", {Family::DQ, true,
                     [](Harness& h) { check_reflection_coefficients(h, DegreeOneFactor::Alpha4); }}},
        {"T6.2.13", {Family::DQ, true, check_mixed_commutators}},
        {"NONVANISH", {Family::DQ, true, check_nonvanishing}},
        {"PAIRING", {Family::DQ, false, check_pairing}},
    };
    return table;
}

std::string family_reason(Family f) {
    switch (f) {
        case Family::Abelian: return "defined for finite abelian groups";
        case Family::DQ: return "defined for D_m / Q_m";
        case Family::DihedralOnly: return "defined for D_m";
        case Family::QuaternionOnly: return "defined for Q_m";
        case Family::Any: return "";
    }
    return "";
}

Applicability applicability_for(const CheckSpec& spec, const FiniteGroup& g, std::string* reason) {
    const GroupKind kind = g.spec().kind;
    bool family_ok = false;
    switch (spec.family) {
        case Family::Any: family_ok = true; break;
        case Family::Abelian: family_ok = kind == GroupKind::AbelianProduct; break;
        case Family::DQ: family_ok = kind != GroupKind::AbelianProduct; break;
        case Family::DihedralOnly: family_ok = kind == GroupKind::Dihedral; break;
        case Family::QuaternionOnly: family_ok = kind == GroupKind::GenQuaternion; break;
    }
    if (!family_ok) {
        *reason = family_reason(spec.family);
        return Applicability::WrongFamily;
    }
    if (spec.needs_four && !has_four_degree_one(g)) {
        *reason = "alpha3/alpha4 undefined: m odd";
        return Applicability::Skip;
    }
    return Applicability::Applicable;
}

}  // namespace

const std::vector<std::string>& all_check_ids() {
    static const std::vector<std::string> ids = {
        "L4.1.1", "L4.2.1", "T2.1.1", "T3.1.2", "L3.1.3",  "T3.2.1",  "C3.2.2", "L5.1.1",
        "L5.1.2", "L5.1.3", "L5.1.4", "T5.1.5", "L5.2.1",  "L5.2.2",  "T5.2.3", "C5.2.4",
        "L6.1.1", "L6.1.2", "L6.2.1", "L6.2.2", "T6.2.3",  "T6.2.4",  "L6.2.5", "L6.2.6",
        "L6.2.7", "L6.2.8", "L6.2.9", "L6.2.10", "L6.2.11", "T6.2.13", "NONVANISH", "PAIRING"};
    return ids;
}

std::vector<CheckInfo> list_checks(const Context& ctx) {
    std::vector<CheckInfo> out;
    for (const auto& id : all_check_ids()) {
        const CheckSpec& spec = check_table().at(id);
        std::string reason;
        const Applicability app = applicability_for(spec, *ctx.group, &reason);
        out.push_back({id, app, reason});
    }
    return out;
}

CheckResult run_check(const std::string& id, const Context& ctx, const CheckMode& mode) {
    auto it = check_table().find(id);
    if (it == check_table().end()) throw std::invalid_argument("unknown check id '" + id + "'");
    std::string reason;
    const Applicability app = applicability_for(it->second, *ctx.group, &reason);
    if (app == Applicability::WrongFamily)
        throw std::domain_error("check " + id + " is inapplicable to " + ctx.group->spec().str() +
                                ": " + reason);
    Harness h(id, ctx, mode);
    if (app == Applicability::Skip) {
        h.res.status = CheckStatus::Skipped;
        h.res.reason = reason;
        return h.res;
    }
    it->second.fn(h);
    return h.res;
}

std::vector<CheckResult> run_all_checks(const Context& ctx, const CheckMode& mode) {
    std::vector<CheckResult> out;
    for (const auto& info : list_checks(ctx)) {
        if (info.applicability == Applicability::WrongFamily) {
            CheckResult r;
            r.id = info.id;
            r.group = ctx.group->spec().str();
            r.mode = "-";
            r.status = CheckStatus::Skipped;
            r.reason = info.reason;
            out.push_back(std::move(r));
            continue;
        }
        out.push_back(run_check(info.id, ctx, mode));
    }
    return out;
}

}  // namespace gdet
