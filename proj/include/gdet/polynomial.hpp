#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "gdet/cyclotomic.hpp"

namespace gdet {

/// A power product of variables x_0, x_1, ... with positive exponents,
/// stored sparsely, sorted by variable id.
class Monomial {
public:
    Monomial() = default;
    static Monomial variable(long var, long exp = 1);

    long degree() const;
    long exponent_of(long var) const;
    const std::vector<std::pair<long, long>>& factors() const { return factors_; }
    bool empty() const { return factors_.empty(); }

    Monomial operator*(const Monomial& rhs) const;
    bool operator==(const Monomial&) const = default;

    /// Graded lexicographic order: lower total degree first; ties broken by
    /// the dense exponent vector compared from the smallest variable id.
    static bool grlex_less(const Monomial& a, const Monomial& b);

private:
    std::vector<std::pair<long, long>> factors_;
};

struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return Monomial::grlex_less(a, b); }
};

/// Names a variable for printing (typically `x[<element name>]`).
using VarNamer = std::function<std::string(long)>;

/// Sparse multivariate polynomial with CycloNumber coefficients. Canonical:
/// no zero coefficient is stored; equality is term-map equality.
class Poly {
public:
    explicit Poly(FieldPtr field);   // zero

    static Poly zero(const FieldPtr& field) { return Poly(field); }
    static Poly constant(const CycloNumber& value);
    static Poly constant(const FieldPtr& field, const Rational& value);
    static Poly variable(const FieldPtr& field, long var);
    static Poly term(const CycloNumber& coeff, const Monomial& m);

    const FieldPtr& field() const { return field_; }
    const std::map<Monomial, CycloNumber, MonomialLess>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    long term_count() const { return static_cast<long>(terms_.size()); }
    bool is_constant() const;
    CycloNumber constant_value() const;   // value at the empty monomial (0 if absent)

    /// Total degree of the leading term; -1 for the zero polynomial.
    long total_degree() const;
    bool is_homogeneous(long degree) const;
    std::vector<long> variables() const;

    const CycloNumber* coefficient(const Monomial& m) const;
    void add_term(const Monomial& m, const CycloNumber& coeff);

    Poly operator-() const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);
    Poly& operator*=(const CycloNumber& scalar);
    Poly& operator*=(const Rational& scalar);
    Poly pow(long e) const;

    bool operator==(const Poly& rhs) const;
    bool operator!=(const Poly& rhs) const { return !(*this == rhs); }

    /// Simultaneous substitution x_i -> map[i]; every variable occurring in
    /// the polynomial must be covered, otherwise std::invalid_argument.
    Poly substituted(const std::vector<Poly>& map) const;
    /// Exact evaluation at assign[i]; total on occurring variables.
    CycloNumber evaluated(const std::vector<CycloNumber>& assign) const;

    /// Canonical text, leading (highest graded-lex) term first.
    std::string str(const VarNamer& namer) const;
    std::string str() const;

private:
    void require_compatible(const Poly& rhs) const;

    FieldPtr field_;
    std::map<Monomial, CycloNumber, MonomialLess> terms_;
};

Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly operator*(Poly a, const Poly& b);
Poly operator*(Poly a, const CycloNumber& s);
Poly operator*(const CycloNumber& s, Poly a);

}  // namespace gdet
