#pragma once

#include <string>
#include <vector>

#include "gdet/context.hpp"
#include "gdet/polynomial.hpp"

namespace gdet {

class Character;

/// An element of the group algebra with Poly coefficients, one per group
/// element (dense by element index; the zero Poly means "absent").
class AlgebraElement {
public:
    AlgebraElement(GroupPtr group, FieldPtr field);    // zero element
    explicit AlgebraElement(const Context& ctx) : AlgebraElement(ctx.group, ctx.field) {}

    /// The unit: coefficient 1 at the identity.
    static AlgebraElement unit(const Context& ctx);
    /// Basis element: coefficient 1 at g.
    static AlgebraElement basis(const Context& ctx, const GroupElement& g);

    const GroupPtr& group() const { return group_; }
    const FieldPtr& field() const { return field_; }
    const Poly& coeff(long index) const { return coeffs_[index]; }
    const Poly& coeff(const GroupElement& g) const { return coeffs_[group_->index_of(g)]; }
    void set_coeff(long index, Poly p);
    void add_coeff(long index, const Poly& p);

    bool is_zero() const;
    /// True when every coefficient is a constant polynomial.
    bool is_numeric() const;

    AlgebraElement operator-() const;
    AlgebraElement& operator+=(const AlgebraElement& rhs);
    AlgebraElement& operator-=(const AlgebraElement& rhs);
    AlgebraElement scaled(const Poly& p) const;
    AlgebraElement scaled(const CycloNumber& s) const;

    bool operator==(const AlgebraElement& rhs) const;
    bool operator!=(const AlgebraElement& rhs) const { return !(*this == rhs); }

    std::string str() const;

private:
    void require_compatible(const AlgebraElement& rhs) const;

    GroupPtr group_;
    FieldPtr field_;
    std::vector<Poly> coeffs_;
};

AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b);
AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b);

/// Convolution product: the coefficient of k is the sum of u(g)*v(h) over
/// all factorizations g*h = k.
AlgebraElement convolve(const AlgebraElement& u, const AlgebraElement& v);

/// convolve(u, v) - convolve(v, u).
AlgebraElement commutator(const AlgebraElement& u, const AlgebraElement& v);

/// The augmentation map: sum of all coefficients (a ring homomorphism onto Poly).
Poly augment(const AlgebraElement& u);

/// Applies the variable substitution to every coefficient.
AlgebraElement substitute_all(const AlgebraElement& u, const std::vector<Poly>& map);

/// Evaluates every coefficient, yielding an element with constant coefficients.
AlgebraElement evaluate_coeffs(const AlgebraElement& u, const std::vector<CycloNumber>& assign);

/// The degree-2 homogeneous polynomial attached to h in D_m / Q_m:
/// sum over g in <a> of x_g x_{hg} - x_{gb} x_{hgb^-1}.
/// Vanishes off <a> and satisfies A_h = A_{h^-1}.
Poly build_A(const Context& ctx, const GroupElement& h);

enum class DegreeOneFactor { Alpha1 = 1, Alpha2 = 2, Alpha3 = 3, Alpha4 = 4 };

/// The group-algebra factor attached to a degree-one representation of
/// D_m / Q_m. Alpha1 is the generic element with coefficient x_g at every g;
/// Alpha2/Alpha4 take x_{g^-1} on <a> per their defining formulas. Alpha3 and
/// Alpha4 exist only when the group has four degree-one representations, so
/// requesting them for D_m with m odd throws std::domain_error.
AlgebraElement build_factor(const Context& ctx, DegreeOneFactor which);

/// The generic element: coefficient x_g at every g (any family).
AlgebraElement generic_element(const Context& ctx);

/// For abelian groups: the factor attached to a character of the dual group,
/// with coefficient chi(g) x_g at g.
AlgebraElement character_factor(const Context& ctx, const Character& chi);

/// For D_m / Q_m: the circulant factor attached to a degree-one character of
/// <a>, with coefficient chi'(g) A_g at g in <a> and zero elsewhere.
AlgebraElement circulant_factor(const Context& ctx, const Character& chi_prime);

bool has_four_degree_one(const FiniteGroup& g);

}  // namespace gdet
