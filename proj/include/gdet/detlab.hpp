#pragma once

#include <vector>

#include "gdet/context.hpp"
#include "gdet/group_algebra.hpp"
#include "gdet/polynomial.hpp"

namespace gdet {

/// The |G| x |G| array of variable ids with entry (g, h) = id of x_{g h^-1}.
/// Every row and column is a permutation of all ids; the diagonal is x_e.
struct GroupMatrix {
    GroupPtr group;
    std::vector<std::vector<long>> entries;
};

GroupMatrix group_matrix(const GroupPtr& g);

inline constexpr long kDefaultSymbolicLimit = 8;

/// Exact symbolic determinant via dynamic programming over column subsets
/// (Laplace expansion with memoized minors, 2^n * n polynomial operations).
/// Throws std::domain_error when the order exceeds the limit.
Poly symbolic_det(const Context& ctx, const GroupMatrix& m, long limit = kDefaultSymbolicLimit);

/// Exact determinant of the evaluated matrix by Gaussian elimination over the
/// cyclotomic field; singular matrices yield 0.
CycloNumber numeric_det_at(const Context& ctx, const GroupMatrix& m,
                           const std::vector<CycloNumber>& assign);

/// The product over the complete representation set of det(sum phi(g) x_g)^deg(phi).
Poly frobenius_theta(const Context& ctx, long limit = kDefaultSymbolicLimit);
CycloNumber frobenius_theta_at(const Context& ctx, const std::vector<CycloNumber>& assign);

/// For D_m / Q_m: the product over all |<a>| characters chi' of
/// sum over g in <a> of chi'(g) A_g.
Poly circulant_theta(const Context& ctx);
CycloNumber circulant_theta_at(const Context& ctx, const std::vector<CycloNumber>& assign);

/// The ordered group-algebra product whose value is det * unit: character
/// factors over the dual group for abelian G, circulant factors over the
/// rotation-subgroup characters for D_m / Q_m.
AlgebraElement theta_e_product(const Context& ctx);
AlgebraElement theta_e_product_at(const Context& ctx, const std::vector<CycloNumber>& assign);

/// The inverse of the generic element evaluated at the assignment, via the
/// closed product formulas; throws std::domain_error when the determinant
/// vanishes at the assignment.
AlgebraElement inverse_element(const Context& ctx, const std::vector<CycloNumber>& assign);

}  // namespace gdet
