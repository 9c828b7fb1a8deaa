#include "gdet/reps.hpp"

#include <sstream>
#include <stdexcept>

namespace gdet {

CMat CMat::identity(const FieldPtr& f, long dim) {
    CMat m{dim, {}};
    m.a.reserve(dim * dim);
    for (long i = 0; i < dim; ++i)
        for (long j = 0; j < dim; ++j) m.a.push_back(i == j ? CycloNumber::one(f) : CycloNumber::zero(f));
    return m;
}

CMat CMat::zero(const FieldPtr& f, long dim) {
    CMat m{dim, {}};
    m.a.assign(dim * dim, CycloNumber::zero(f));
    return m;
}

CMat CMat::operator*(const CMat& rhs) const {
    if (dim != rhs.dim) throw std::invalid_argument("matrix dimension mismatch");
    CMat out = zero(a.front().field(), dim);
    for (long i = 0; i < dim; ++i)
        for (long k = 0; k < dim; ++k)
            for (long j = 0; j < dim; ++j) out.a[i * dim + j] += a[i * dim + k] * rhs.a[k * dim + j];
    return out;
}

CMat CMat::operator+(const CMat& rhs) const {
    if (dim != rhs.dim) throw std::invalid_argument("matrix dimension mismatch");
    CMat out = *this;
    for (size_t i = 0; i < a.size(); ++i) out.a[i] += rhs.a[i];
    return out;
}

CMat CMat::scaled(const CycloNumber& s) const {
    CMat out = *this;
    for (auto& x : out.a) x *= s;
    return out;
}

bool CMat::operator==(const CMat& rhs) const { return dim == rhs.dim && a == rhs.a; }

std::string CMat::str() const {
    std::ostringstream os;
    os << "[";
    for (long i = 0; i < dim; ++i) {
        if (i) os << "; ";
        for (long j = 0; j < dim; ++j) {
            if (j) os << ", ";
            os << a[i * dim + j].str();
        }
    }
    os << "]";
    return os.str();
}

Character::Character(GroupPtr group, Domain domain, std::vector<CycloNumber> values, std::string name)
    : group_(std::move(group)), domain_(domain), values_(std::move(values)), name_(std::move(name)) {
    const long expected =
        domain_ == Domain::Group ? group_->order() : group_->rotation_order();
    if (static_cast<long>(values_.size()) != expected)
        throw std::invalid_argument("character value table has wrong size");
}

const CycloNumber& Character::value_at(const GroupElement& g) const {
    if (domain_ == Domain::Group) return values_[group_->index_of(g)];
    if (!group_->in_rotation_subgroup(g))
        throw std::invalid_argument("element outside the character's domain");
    return values_[g.v[0]];
}

MatrixRep::MatrixRep(GroupPtr group, std::vector<CMat> values, std::string name)
    : group_(std::move(group)), values_(std::move(values)), name_(std::move(name)) {
    if (static_cast<long>(values_.size()) != group_->order())
        throw std::invalid_argument("representation value table has wrong size");
}

const CMat& MatrixRep::value_at(const GroupElement& g) const { return values_[group_->index_of(g)]; }

namespace {

// omega^(t) where omega = zeta_L^(L/r) is the fixed primitive r-th root.
CycloNumber omega_pow(const Context& ctx, long r, long t) {
    const long L = ctx.field->conductor();
    if (L % r != 0) throw std::logic_error("conductor does not embed the required root");
    return root_of_unity(ctx.field, (L / r) * t);
}

RepSet abelian_rep_set(const Context& ctx) {
    const auto& G = *ctx.group;
    const long L = ctx.field->conductor();
    RepSet out{ctx.group, {}, {}};
    const auto& params = G.spec().params;
    for (long li = 0; li < G.order(); ++li) {
        const auto& lvec = G.element(li).v;
        std::vector<CycloNumber> values;
        values.reserve(G.order());
        for (long gi = 0; gi < G.order(); ++gi) {
            const auto& evec = G.element(gi).v;
            long t = 0;
            for (size_t c = 0; c < params.size(); ++c) {
                long term = ((L / params[c]) * lvec[c]) % L;
                term = (term * evec[c]) % L;
                t = (t + term) % L;
            }
            values.push_back(root_of_unity(ctx.field, t));
        }
        out.degree_one.emplace_back(ctx.group, Character::Domain::Group, std::move(values),
                                    "chi" + std::to_string(li + 1));
    }
    return out;
}

RepSet dihedral_quaternion_rep_set(const Context& ctx) {
    const auto& G = *ctx.group;
    const bool quaternion = G.spec().kind == GroupKind::GenQuaternion;
    const long m = G.spec().params[0];
    const long r = G.rotation_order();
    const auto& f = ctx.field;
    RepSet out{ctx.group, {}, {}};

    const CycloNumber one = CycloNumber::one(f);
    const CycloNumber minus_one = -one;

    auto make_degree_one = [&](const CycloNumber& on_a, const CycloNumber& on_b, std::string name) {
        // chi(a^k b^l) = on_a^k * on_b^l
        std::vector<CycloNumber> values;
        values.reserve(2 * r);
        for (long l = 0; l < 2; ++l) {
            CycloNumber acc = l ? on_b : one;
            for (long k = 0; k < r; ++k) {
                values.push_back(acc);
                acc = acc * on_a;
            }
        }
        out.degree_one.emplace_back(ctx.group, Character::Domain::Group, std::move(values),
                                    std::move(name));
    };

    make_degree_one(one, one, "chi1");
    make_degree_one(one, minus_one, "chi2");
    if (has_four_degree_one(G)) {
        if (quaternion && m % 2 == 1) {
            const CycloNumber i_unit = omega_pow(ctx, 4, 1);
            make_degree_one(minus_one, i_unit, "chi3");
            make_degree_one(minus_one, -i_unit, "chi4");
        } else {
            make_degree_one(minus_one, one, "chi3");
            make_degree_one(minus_one, minus_one, "chi4");
        }
    }

    const long t_max = quaternion ? m - 1 : (m % 2 ? (m - 1) / 2 : m / 2 - 1);
    for (long l = 1; l <= t_max; ++l) {
        // lower-left sign of phi_l(b): +1 for D_m; (-1)^l for Q_m so that
        // phi_l(b)^2 = phi_l(a^m) holds for every l.
        const CycloNumber s =
            quaternion && (l % 2 == 1) ? minus_one : one;
        std::vector<CMat> values;
        values.reserve(2 * r);
        for (long lflag = 0; lflag < 2; ++lflag)
            for (long k = 0; k < r; ++k) {
                CMat mat = CMat::zero(f, 2);
                const CycloNumber w = omega_pow(ctx, r, l * k % r);
                const CycloNumber winv = omega_pow(ctx, r, (r - l * k % r) % r);
                if (lflag == 0) {
                    mat.a[0] = w;
                    mat.a[3] = winv;
                } else {
                    mat.a[1] = w;
                    mat.a[2] = s * winv;
                }
                values.push_back(std::move(mat));
            }
        out.degree_two.emplace_back(ctx.group, std::move(values), "phi" + std::to_string(l));
    }
    return out;
}

}  // namespace

RepSet irreducible_set(const Context& ctx) {
    if (ctx.group->is_abelian()) return abelian_rep_set(ctx);
    return dihedral_quaternion_rep_set(ctx);
}

Character chi_prime(const Context& ctx, long l) {
    if (ctx.group->is_abelian())
        throw std::domain_error("chi' is defined on the rotation subgroup of D_m / Q_m");
    const long r = ctx.group->rotation_order();
    if (l < 0 || l >= r) throw std::invalid_argument("chi' index out of range");
    std::vector<CycloNumber> values;
    values.reserve(r);
    for (long k = 0; k < r; ++k) values.push_back(omega_pow(ctx, r, l * k % r));
    return Character(ctx.group, Character::Domain::RotationSubgroup, std::move(values),
                     "chi'" + std::to_string(l));
}

FourierImage fourier_transform(const RepSet& reps, const AlgebraElement& f) {
    if (!f.is_numeric())
        throw std::invalid_argument("fourier transform needs constant coefficients");
    const auto& G = *f.group();
    const auto& field = f.field();
    FourierImage out;
    for (const auto& chi : reps.degree_one) {
        CMat block = CMat::zero(field, 1);
        for (long gi = 0; gi < G.order(); ++gi)
            block.a[0] += chi.value(gi).conjugate() * f.coeff(gi).constant_value();
        out.blocks.push_back(std::move(block));
    }
    for (const auto& rep : reps.degree_two) {
        CMat block = CMat::zero(field, 2);
        for (long gi = 0; gi < G.order(); ++gi) {
            const CycloNumber v = f.coeff(gi).constant_value();
            if (v.is_zero()) continue;
            const CMat& mat = rep.value(gi);
            for (int t = 0; t < 4; ++t) block.a[t] += mat.a[t].conjugate() * v;
        }
        out.blocks.push_back(std::move(block));
    }
    return out;
}

FourierImage blockwise_product(const FourierImage& x, const FourierImage& y) {
    if (x.blocks.size() != y.blocks.size()) throw std::invalid_argument("block count mismatch");
    FourierImage out;
    out.blocks.reserve(x.blocks.size());
    for (size_t i = 0; i < x.blocks.size(); ++i) out.blocks.push_back(x.blocks[i] * y.blocks[i]);
    return out;
}

Poly rep_factor_det(const Context& ctx, const MatrixRep& rep) {
    const auto& G = *ctx.group;
    Poly p00(ctx.field), p01(ctx.field), p10(ctx.field), p11(ctx.field);
    for (long gi = 0; gi < G.order(); ++gi) {
        const CMat& mat = rep.value(gi);
        const Poly x = Poly::variable(ctx.field, gi);
        p00 += x * mat.a[0];
        p01 += x * mat.a[1];
        p10 += x * mat.a[2];
        p11 += x * mat.a[3];
    }
    return p00 * p11 - p01 * p10;
}

Poly character_linear_form(const Context& ctx, const Character& chi) {
    Poly acc(ctx.field);
    if (chi.domain() == Character::Domain::Group) {
        for (long gi = 0; gi < ctx.group->order(); ++gi)
            acc += Poly::variable(ctx.field, gi) * chi.value(gi);
    } else {
        for (long k = 0; k < chi.domain_size(); ++k)
            acc += Poly::variable(ctx.field, ctx.group->index_of(ctx.group->rotation(k))) * chi.value(k);
    }
    return acc;
}

}  // namespace gdet
