#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

namespace gdet {

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
using Rational = mpq_class;

class CycloField;
using FieldPtr = std::shared_ptr<const CycloField>;

/// Euler totient of n (n >= 1).
long euler_phi(long n);

/// Coefficients of the n-th cyclotomic polynomial Phi_n, little-endian, monic.
/// Computed by dividing x^n - 1 by Phi_d for all proper divisors d; memoized.
const std::vector<mpz_class>& cyclotomic_polynomial(long n);

/// The cyclotomic field Q(zeta_L) with zeta_L a fixed primitive L-th root of
/// unity. Elements live on the power basis 1, zeta, ..., zeta^(phi(L)-1) and
/// are reduced modulo Phi_L. Fields are built once per conductor and shared.
class CycloField {
public:
    static FieldPtr make(long conductor);

    long conductor() const { return conductor_; }
    long degree() const { return degree_; }
    const std::vector<mpz_class>& modulus() const { return modulus_; }

    /// zeta^t on the power basis, 0 <= t < conductor.
    const std::vector<Rational>& zeta_power(long t) const;

private:
    explicit CycloField(long conductor);

    long conductor_;
    long degree_;
    std::vector<mpz_class> modulus_;
    std::vector<std::vector<Rational>> zeta_powers_;
};

/// An exact element of Q(zeta_L). Canonical: equal numbers have equal
/// coefficient vectors. All arithmetic is exact.
class CycloNumber {
public:
    CycloNumber(FieldPtr field, Rational value);

    static CycloNumber zero(const FieldPtr& f);
    static CycloNumber one(const FieldPtr& f);
    static CycloNumber integer(const FieldPtr& f, long value);
    /// From power-basis coefficients; shorter vectors are zero-padded,
    /// longer ones reduced modulo Phi_L.
    static CycloNumber from_coeffs(FieldPtr f, std::vector<Rational> coeffs);

    const FieldPtr& field() const { return field_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    Rational rational_value() const;

    CycloNumber operator-() const;
    CycloNumber& operator+=(const CycloNumber& rhs);
    CycloNumber& operator-=(const CycloNumber& rhs);
    CycloNumber& operator*=(const CycloNumber& rhs);
    CycloNumber& operator*=(const Rational& rhs);

    /// Multiplicative inverse via extended gcd with Phi_L; throws on zero.
    CycloNumber inverse() const;
    /// Complex conjugation, the field automorphism zeta -> zeta^(L-1).
    CycloNumber conjugate() const;

    bool operator==(const CycloNumber& rhs) const;
    bool operator!=(const CycloNumber& rhs) const { return !(*this == rhs); }

    /// Textual form `(c0) + (c1)*z + ...` with exact rationals, zero terms skipped.
    std::string str() const;

private:
    CycloNumber(FieldPtr field, std::vector<Rational> coeffs, int /*tag*/);

    FieldPtr field_;
    std::vector<Rational> coeffs_;
};

CycloNumber operator+(CycloNumber a, const CycloNumber& b);
CycloNumber operator-(CycloNumber a, const CycloNumber& b);
CycloNumber operator*(CycloNumber a, const CycloNumber& b);
CycloNumber operator*(CycloNumber a, const Rational& b);
CycloNumber operator*(const Rational& a, CycloNumber b);

/// zeta_L^k (k taken mod L).
CycloNumber root_of_unity(const FieldPtr& f, long k);

}  // namespace gdet
