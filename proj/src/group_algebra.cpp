#include "gdet/group_algebra.hpp"

#include <sstream>
#include <stdexcept>

#include "gdet/reps.hpp"

namespace gdet {

AlgebraElement::AlgebraElement(GroupPtr group, FieldPtr field)
    : group_(std::move(group)), field_(std::move(field)) {
    if (!group_ || !field_) throw std::invalid_argument("null group or field");
    coeffs_.assign(group_->order(), Poly(field_));
}

AlgebraElement AlgebraElement::unit(const Context& ctx) {
    AlgebraElement u(ctx);
    u.coeffs_[ctx.group->index_of(ctx.group->identity())] =
        Poly::constant(CycloNumber::one(ctx.field));
    return u;
}

AlgebraElement AlgebraElement::basis(const Context& ctx, const GroupElement& g) {
    AlgebraElement u(ctx);
    u.coeffs_[ctx.group->index_of(g)] = Poly::constant(CycloNumber::one(ctx.field));
    return u;
}

void AlgebraElement::set_coeff(long index, Poly p) {
    if (p.field()->conductor() != field_->conductor())
        throw std::invalid_argument("coefficient field mismatch");
    coeffs_.at(index) = std::move(p);
}

void AlgebraElement::add_coeff(long index, const Poly& p) { coeffs_.at(index) += p; }

bool AlgebraElement::is_zero() const {
    for (const auto& p : coeffs_)
        if (!p.is_zero()) return false;
    return true;
}

bool AlgebraElement::is_numeric() const {
    for (const auto& p : coeffs_)
        if (!p.is_constant()) return false;
    return true;
}

void AlgebraElement::require_compatible(const AlgebraElement& rhs) const {
    if (group_->spec() != rhs.group_->spec() || field_->conductor() != rhs.field_->conductor())
        throw std::invalid_argument("group algebra mismatch");
}

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement out(group_, field_);
    for (long i = 0; i < group_->order(); ++i) out.coeffs_[i] = -coeffs_[i];
    return out;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& rhs) {
    require_compatible(rhs);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& rhs) {
    require_compatible(rhs);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

AlgebraElement AlgebraElement::scaled(const Poly& p) const {
    AlgebraElement out(group_, field_);
    for (size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = coeffs_[i] * p;
    return out;
}

AlgebraElement AlgebraElement::scaled(const CycloNumber& s) const {
    AlgebraElement out(group_, field_);
    for (size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = coeffs_[i] * s;
    return out;
}

bool AlgebraElement::operator==(const AlgebraElement& rhs) const {
    if (group_->spec() != rhs.group_->spec()) return false;
    return coeffs_ == rhs.coeffs_;
}

std::string AlgebraElement::str() const {
    std::ostringstream os;
    bool first = true;
    for (long i = 0; i < group_->order(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << coeffs_[i].str([this](long v) { return "x[" + group_->element_name(v) + "]"; })
           << ")*" << group_->element_name(i);
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }

AlgebraElement convolve(const AlgebraElement& u, const AlgebraElement& v) {
    if (u.group()->spec() != v.group()->spec())
        throw std::invalid_argument("group algebra mismatch");
    const auto& G = *u.group();
    AlgebraElement out(u.group(), u.field());
    for (long i = 0; i < G.order(); ++i) {
        if (u.coeff(i).is_zero()) continue;
        for (long j = 0; j < G.order(); ++j) {
            if (v.coeff(j).is_zero()) continue;
            out.add_coeff(G.mul_index(i, j), u.coeff(i) * v.coeff(j));
        }
    }
    return out;
}

AlgebraElement commutator(const AlgebraElement& u, const AlgebraElement& v) {
    return convolve(u, v) - convolve(v, u);
}

Poly augment(const AlgebraElement& u) {
    Poly acc(u.field());
    for (long i = 0; i < u.group()->order(); ++i) acc += u.coeff(i);
    return acc;
}

AlgebraElement substitute_all(const AlgebraElement& u, const std::vector<Poly>& map) {
    AlgebraElement out(u.group(), u.field());
    for (long i = 0; i < u.group()->order(); ++i) out.set_coeff(i, u.coeff(i).substituted(map));
    return out;
}

AlgebraElement evaluate_coeffs(const AlgebraElement& u, const std::vector<CycloNumber>& assign) {
    AlgebraElement out(u.group(), u.field());
    for (long i = 0; i < u.group()->order(); ++i)
        out.set_coeff(i, Poly::constant(u.coeff(i).evaluated(assign)));
    return out;
}

Poly build_A(const Context& ctx, const GroupElement& h) {
    const auto& G = *ctx.group;
    if (G.is_abelian())
        throw std::domain_error("A_h needs the rotation subgroup of D_m / Q_m");
    G.index_of(h);   // validates
    const long r = G.rotation_order();
    const GroupElement b = G.reflection(0);
    const GroupElement binv = G.inv(b);
    Poly acc(ctx.field);
    for (long k = 0; k < r; ++k) {
        const GroupElement g = G.rotation(k);
        const GroupElement hg = G.mul(h, g);
        const GroupElement gb = G.mul(g, b);
        const GroupElement hgbinv = G.mul(G.mul(h, g), binv);
        acc += Poly::variable(ctx.field, G.index_of(g)) * Poly::variable(ctx.field, G.index_of(hg));
        acc -= Poly::variable(ctx.field, G.index_of(gb)) *
               Poly::variable(ctx.field, G.index_of(hgbinv));
    }
    return acc;
}

bool has_four_degree_one(const FiniteGroup& g) {
    if (g.is_abelian()) return false;
    if (g.spec().kind == GroupKind::GenQuaternion) return true;
    return g.spec().params[0] % 2 == 0;
}

AlgebraElement generic_element(const Context& ctx) {
    AlgebraElement out(ctx);
    for (long i = 0; i < ctx.group->order(); ++i) out.set_coeff(i, Poly::variable(ctx.field, i));
    return out;
}

AlgebraElement build_factor(const Context& ctx, DegreeOneFactor which) {
    const auto& G = *ctx.group;
    if (G.is_abelian())
        throw std::domain_error("degree-one factors alpha1..alpha4 are defined for D_m / Q_m");
    if (which == DegreeOneFactor::Alpha1) return generic_element(ctx);
    if ((which == DegreeOneFactor::Alpha3 || which == DegreeOneFactor::Alpha4) &&
        !has_four_degree_one(G))
        throw std::domain_error("alpha3/alpha4 undefined: only two degree-one representations");

    const RepSet reps = irreducible_set(ctx);
    const Character& chi = reps.degree_one[static_cast<int>(which) - 1];
    AlgebraElement out(ctx);
    for (long i = 0; i < G.order(); ++i) {
        const GroupElement& g = G.element(i);
        const bool invert = (which == DegreeOneFactor::Alpha2 || which == DegreeOneFactor::Alpha4) &&
                            G.in_rotation_subgroup(g);
        const long var = invert ? G.inv_index(i) : i;
        out.set_coeff(i, Poly::variable(ctx.field, var) * chi.value(i));
    }
    return out;
}

AlgebraElement character_factor(const Context& ctx, const Character& chi) {
    if (!ctx.group->is_abelian())
        throw std::domain_error("character factors are the abelian construction");
    if (chi.domain() != Character::Domain::Group)
        throw std::invalid_argument("character must be defined on the whole group");
    AlgebraElement out(ctx);
    for (long i = 0; i < ctx.group->order(); ++i)
        out.set_coeff(i, Poly::variable(ctx.field, i) * chi.value(i));
    return out;
}

AlgebraElement circulant_factor(const Context& ctx, const Character& chi_prime) {
    const auto& G = *ctx.group;
    if (G.is_abelian()) throw std::domain_error("circulant factors are defined for D_m / Q_m");
    if (chi_prime.domain() != Character::Domain::RotationSubgroup)
        throw std::invalid_argument("expected a character of the rotation subgroup");
    AlgebraElement out(ctx);
    for (long k = 0; k < G.rotation_order(); ++k) {
        const GroupElement g = G.rotation(k);
        out.set_coeff(G.index_of(g), build_A(ctx, g) * chi_prime.value(k));
    }
    return out;
}

}  // namespace gdet
