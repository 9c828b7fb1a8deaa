#include "gdet/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace gdet {

namespace {

// Little-endian polynomials over the integers / rationals.

// Exact division a / b with b monic; remainder must vanish.
std::vector<mpz_class> exact_div(std::vector<mpz_class> a, const std::vector<mpz_class>& b) {
    if (a.size() < b.size()) throw std::logic_error("exact_div: degree underflow");
    std::vector<mpz_class> q(a.size() - b.size() + 1);
    for (long i = static_cast<long>(q.size()) - 1; i >= 0; --i) {
        mpz_class f = a[i + b.size() - 1];
        q[i] = f;
        if (f != 0)
            for (size_t j = 0; j < b.size(); ++j) a[i + j] -= f * b[j];
    }
    for (const auto& c : a)
        if (c != 0) throw std::logic_error("exact_div: nonzero remainder");
    return q;
}

void trim(std::vector<Rational>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

long poly_deg(const std::vector<Rational>& p) { return static_cast<long>(p.size()) - 1; }

// Quotient and remainder of a / b over Q, b nonzero.
std::pair<std::vector<Rational>, std::vector<Rational>> poly_divmod(std::vector<Rational> a,
                                                                    const std::vector<Rational>& b) {
    std::vector<Rational> q;
    if (poly_deg(a) >= poly_deg(b)) q.assign(a.size() - b.size() + 1, Rational(0));
    while (poly_deg(a) >= poly_deg(b)) {
        long shift = poly_deg(a) - poly_deg(b);
        Rational f = a.back() / b.back();
        q[shift] = f;
        for (size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
        trim(a);
    }
    return {std::move(q), std::move(a)};
}

std::vector<Rational> poly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Rational> r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

std::vector<Rational> poly_sub(std::vector<Rational> a, const std::vector<Rational>& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

}  // namespace

long euler_phi(long n) {
    if (n < 1) throw std::invalid_argument("euler_phi: n must be positive");
    long result = n;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

const std::vector<mpz_class>& cyclotomic_polynomial(long n) {
    static std::map<long, std::vector<mpz_class>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);

    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // Compute iteratively so the cache fills from small divisors up.
    for (long d = 1; d <= n; ++d) {
        if (n % d != 0 || cache.count(d)) continue;
        std::vector<mpz_class> num(d + 1);
        num[0] = -1;
        num[d] = 1;
        for (long e = 1; e < d; ++e)
            if (d % e == 0) num = exact_div(std::move(num), cache.at(e));
        cache.emplace(d, std::move(num));
    }
    return cache.at(n);
}

CycloField::CycloField(long conductor) : conductor_(conductor) {
    if (conductor < 1) throw std::invalid_argument("cyclotomic conductor must be positive");
    const auto& phi = cyclotomic_polynomial(conductor);
    modulus_ = phi;
    degree_ = static_cast<long>(phi.size()) - 1;

    zeta_powers_.reserve(conductor);
    std::vector<Rational> cur(degree_, Rational(0));
    cur[0] = 1;
    for (long t = 0; t < conductor; ++t) {
        zeta_powers_.push_back(cur);
        // multiply by zeta, reduce the overflow coefficient through Phi_L
        Rational top = cur[degree_ - 1];
        for (long j = degree_ - 1; j > 0; --j) cur[j] = cur[j - 1];
        cur[0] = 0;
        if (top != 0)
            for (long j = 0; j < degree_; ++j) cur[j] -= top * Rational(modulus_[j]);
    }
}

FieldPtr CycloField::make(long conductor) {
    static std::map<long, FieldPtr> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(conductor);
    if (it != cache.end()) return it->second;
    FieldPtr f(new CycloField(conductor));
    cache.emplace(conductor, f);
    return f;
}

const std::vector<Rational>& CycloField::zeta_power(long t) const {
    t %= conductor_;
    if (t < 0) t += conductor_;
    return zeta_powers_[t];
}

namespace {
void require_same_field(const CycloNumber& a, const CycloNumber& b) {
    if (a.field()->conductor() != b.field()->conductor())
        throw std::invalid_argument("cyclotomic field mismatch");
}
}  // namespace

CycloNumber::CycloNumber(FieldPtr field, std::vector<Rational> coeffs, int)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {}

CycloNumber::CycloNumber(FieldPtr field, Rational value) : field_(std::move(field)) {
    if (!field_) throw std::invalid_argument("null cyclotomic field");
    coeffs_.assign(field_->degree(), Rational(0));
    coeffs_[0] = std::move(value);
}

CycloNumber CycloNumber::zero(const FieldPtr& f) { return CycloNumber(f, Rational(0)); }
CycloNumber CycloNumber::one(const FieldPtr& f) { return CycloNumber(f, Rational(1)); }
CycloNumber CycloNumber::integer(const FieldPtr& f, long value) { return CycloNumber(f, Rational(value)); }

CycloNumber CycloNumber::from_coeffs(FieldPtr f, std::vector<Rational> coeffs) {
    if (!f) throw std::invalid_argument("null cyclotomic field");
    const long d = f->degree();
    if (static_cast<long>(coeffs.size()) > d) {
        // reduce modulo the monic modulus
        const auto& mod = f->modulus();
        for (long i = static_cast<long>(coeffs.size()) - 1; i >= d; --i) {
            Rational c = coeffs[i];
            coeffs[i] = 0;
            if (c != 0)
                for (long j = 0; j < d; ++j) coeffs[i - d + j] -= c * Rational(mod[j]);
        }
        coeffs.resize(d);
    } else {
        coeffs.resize(d, Rational(0));
    }
    return CycloNumber(std::move(f), std::move(coeffs), 0);
}

bool CycloNumber::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CycloNumber::is_one() const {
    if (coeffs_[0] != 1) return false;
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

bool CycloNumber::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rational CycloNumber::rational_value() const {
    if (!is_rational()) throw std::domain_error("cyclotomic number is not rational");
    return coeffs_[0];
}

CycloNumber CycloNumber::operator-() const {
    std::vector<Rational> c(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = -coeffs_[i];
    return CycloNumber(field_, std::move(c), 0);
}

CycloNumber& CycloNumber::operator+=(const CycloNumber& rhs) {
    require_same_field(*this, rhs);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& rhs) {
    require_same_field(*this, rhs);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

CycloNumber& CycloNumber::operator*=(const CycloNumber& rhs) {
    require_same_field(*this, rhs);
    const long d = field_->degree();
    std::vector<Rational> prod(2 * d - 1, Rational(0));
    for (long i = 0; i < d; ++i) {
        if (coeffs_[i] == 0) continue;
        for (long j = 0; j < d; ++j) {
            if (rhs.coeffs_[j] == 0) continue;
            prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    const auto& mod = field_->modulus();
    for (long i = 2 * d - 2; i >= d; --i) {
        Rational c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (long j = 0; j < d; ++j) prod[i - d + j] -= c * Rational(mod[j]);
    }
    prod.resize(d);
    coeffs_ = std::move(prod);
    return *this;
}

CycloNumber& CycloNumber::operator*=(const Rational& rhs) {
    for (auto& c : coeffs_) c *= rhs;
    return *this;
}

CycloNumber CycloNumber::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in cyclotomic field");
    // Extended Euclid between this element's coefficient polynomial and Phi_L.
    std::vector<Rational> r0(field_->modulus().size());
    for (size_t i = 0; i < r0.size(); ++i) r0[i] = Rational(field_->modulus()[i]);
    std::vector<Rational> r1 = coeffs_;
    trim(r1);
    std::vector<Rational> s0;            // coefficient of *this in r0
    std::vector<Rational> s1{Rational(1)};
    while (poly_deg(r1) > 0) {
        auto [q, rem] = poly_divmod(r0, r1);
        auto s2 = poly_sub(std::move(s0), poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
        if (r1.empty()) throw std::domain_error("non-invertible cyclotomic element");
    }
    const Rational c = r1[0];
    for (auto& x : s1) x /= c;
    return from_coeffs(field_, std::move(s1));
}

CycloNumber CycloNumber::conjugate() const {
    const long L = field_->conductor();
    const long d = field_->degree();
    std::vector<Rational> acc(d, Rational(0));
    for (long j = 0; j < d; ++j) {
        if (coeffs_[j] == 0) continue;
        const auto& p = field_->zeta_power(((L - 1) * j) % L);
        for (long t = 0; t < d; ++t) acc[t] += coeffs_[j] * p[t];
    }
    return CycloNumber(field_, std::move(acc), 0);
}

bool CycloNumber::operator==(const CycloNumber& rhs) const {
    if (field_->conductor() != rhs.field_->conductor()) return false;
    return coeffs_ == rhs.coeffs_;
}

std::string CycloNumber::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j] == 0) continue;
        if (!first) os << " + ";
        os << "(" << coeffs_[j].get_str() << ")";
        if (j == 1) os << "*z";
        if (j > 1) os << "*z^" << j;
        first = false;
    }
    if (first) os << "(0)";
    return os.str();
}

CycloNumber operator+(CycloNumber a, const CycloNumber& b) { return a += b; }
CycloNumber operator-(CycloNumber a, const CycloNumber& b) { return a -= b; }
CycloNumber operator*(CycloNumber a, const CycloNumber& b) { return a *= b; }
CycloNumber operator*(CycloNumber a, const Rational& b) { return a *= b; }
CycloNumber operator*(const Rational& a, CycloNumber b) { return b *= a; }

CycloNumber root_of_unity(const FieldPtr& f, long k) {
    if (!f) throw std::invalid_argument("null cyclotomic field");
    return CycloNumber::from_coeffs(f, f->zeta_power(k));
}

}  // namespace gdet
