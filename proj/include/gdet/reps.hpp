#pragma once

#include <string>
#include <vector>

#include "gdet/context.hpp"
#include "gdet/group_algebra.hpp"
#include "gdet/polynomial.hpp"

namespace gdet {

/// Square matrix over the cyclotomic field, row-major. The representation
/// theory here needs only dimensions 1 and 2, so arithmetic is direct.
struct CMat {
    long dim = 1;
    std::vector<CycloNumber> a;

    static CMat identity(const FieldPtr& f, long dim);
    static CMat zero(const FieldPtr& f, long dim);
    CMat operator*(const CMat& rhs) const;
    CMat operator+(const CMat& rhs) const;
    CMat scaled(const CycloNumber& s) const;
    bool operator==(const CMat& rhs) const;
    std::string str() const;
};

/// A degree-one representation, of the whole group or of its rotation
/// subgroup <a>; values indexed by element index (by k for a^k on <a>).
class Character {
public:
    enum class Domain { Group, RotationSubgroup };

    Character(GroupPtr group, Domain domain, std::vector<CycloNumber> values, std::string name);

    const GroupPtr& group() const { return group_; }
    Domain domain() const { return domain_; }
    long domain_size() const { return static_cast<long>(values_.size()); }
    const std::string& name() const { return name_; }

    const CycloNumber& value(long index) const { return values_[index]; }
    /// Value at a group element (for subgroup characters the element must lie in <a>).
    const CycloNumber& value_at(const GroupElement& g) const;

private:
    GroupPtr group_;
    Domain domain_;
    std::vector<CycloNumber> values_;
    std::string name_;
};

/// A degree-two irreducible representation of D_m / Q_m, tabulated per element.
class MatrixRep {
public:
    MatrixRep(GroupPtr group, std::vector<CMat> values, std::string name);

    const GroupPtr& group() const { return group_; }
    long degree() const { return 2; }
    const std::string& name() const { return name_; }
    const CMat& value(long index) const { return values_[index]; }
    const CMat& value_at(const GroupElement& g) const;

private:
    GroupPtr group_;
    std::vector<CMat> values_;
    std::string name_;
};

/// The complete irreducible representation data of a supported group, in the
/// fixed order chi1, chi2 (, chi3, chi4), then phi_1..phi_t; abelian groups
/// carry all characters in lexicographic exponent order (trivial first).
struct RepSet {
    GroupPtr group;
    std::vector<Character> degree_one;
    std::vector<MatrixRep> degree_two;

    long rep_count() const { return static_cast<long>(degree_one.size() + degree_two.size()); }
    long sum_degree_squares() const {
        return static_cast<long>(degree_one.size() + 4 * degree_two.size());
    }
};

RepSet irreducible_set(const Context& ctx);

/// The degree-one character of <a> sending a^k to omega^(l k), omega a fixed
/// primitive |<a>|-th root of unity. Only for D_m / Q_m, 0 <= l < |<a>|.
Character chi_prime(const Context& ctx, long l);

/// One block per representation, in RepSet order.
struct FourierImage {
    std::vector<CMat> blocks;
    bool operator==(const FourierImage& rhs) const { return blocks == rhs.blocks; }
};

/// The Fourier transform of an element with constant coefficients:
/// block k is the sum over g of conj(phi_k(g)) f(g).
FourierImage fourier_transform(const RepSet& reps, const AlgebraElement& f);

FourierImage blockwise_product(const FourierImage& x, const FourierImage& y);

/// The symbolic 2x2 determinant of the matrix sum of phi(g) x_g over g.
Poly rep_factor_det(const Context& ctx, const MatrixRep& rep);

/// The symbolic linear form sum of chi(g) x_g over the character's domain.
Poly character_linear_form(const Context& ctx, const Character& chi);

}  // namespace gdet
