#include "gdet/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gdet {

Monomial Monomial::variable(long var, long exp) {
    if (var < 0) throw std::invalid_argument("negative variable id");
    if (exp < 0) throw std::invalid_argument("negative exponent");
    Monomial m;
    if (exp > 0) m.factors_.push_back({var, exp});
    return m;
}

long Monomial::degree() const {
    long d = 0;
    for (const auto& [v, e] : factors_) d += e;
    return d;
}

long Monomial::exponent_of(long var) const {
    for (const auto& [v, e] : factors_)
        if (v == var) return e;
    return 0;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
    Monomial out;
    out.factors_.reserve(factors_.size() + rhs.factors_.size());
    size_t i = 0, j = 0;
    while (i < factors_.size() && j < rhs.factors_.size()) {
        if (factors_[i].first == rhs.factors_[j].first) {
            out.factors_.push_back({factors_[i].first, factors_[i].second + rhs.factors_[j].second});
            ++i;
            ++j;
        } else if (factors_[i].first < rhs.factors_[j].first) {
            out.factors_.push_back(factors_[i++]);
        } else {
            out.factors_.push_back(rhs.factors_[j++]);
        }
    }
    while (i < factors_.size()) out.factors_.push_back(factors_[i++]);
    while (j < rhs.factors_.size()) out.factors_.push_back(rhs.factors_[j++]);
    return out;
}

bool Monomial::grlex_less(const Monomial& a, const Monomial& b) {
    const long da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    // Equal degree: larger exponent at the smallest differing variable wins,
    // i.e. x0^2 > x0*x1 > x1^2.
    size_t i = 0, j = 0;
    while (i < a.factors_.size() && j < b.factors_.size()) {
        const auto& [va, ea] = a.factors_[i];
        const auto& [vb, eb] = b.factors_[j];
        if (va != vb) return va > vb;   // the one with the smaller variable is larger
        if (ea != eb) return ea < eb;
        ++i;
        ++j;
    }
    return false;   // identical
}

Poly::Poly(FieldPtr field) : field_(std::move(field)) {
    if (!field_) throw std::invalid_argument("null field in polynomial");
}

Poly Poly::constant(const CycloNumber& value) {
    Poly p(value.field());
    if (!value.is_zero()) p.terms_.emplace(Monomial{}, value);
    return p;
}

Poly Poly::constant(const FieldPtr& field, const Rational& value) {
    return constant(CycloNumber(field, value));
}

Poly Poly::variable(const FieldPtr& field, long var) {
    Poly p(field);
    p.terms_.emplace(Monomial::variable(var), CycloNumber::one(field));
    return p;
}

Poly Poly::term(const CycloNumber& coeff, const Monomial& m) {
    Poly p(coeff.field());
    if (!coeff.is_zero()) p.terms_.emplace(m, coeff);
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

CycloNumber Poly::constant_value() const {
    if (!is_constant()) throw std::domain_error("polynomial is not constant");
    if (terms_.empty()) return CycloNumber::zero(field_);
    return terms_.begin()->second;
}

long Poly::total_degree() const {
    if (terms_.empty()) return -1;
    return terms_.rbegin()->first.degree();
}

bool Poly::is_homogeneous(long degree) const {
    for (const auto& [m, c] : terms_)
        if (m.degree() != degree) return false;
    return true;
}

std::vector<long> Poly::variables() const {
    std::vector<long> vars;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.factors()) vars.push_back(v);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

const CycloNumber* Poly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? nullptr : &it->second;
}

void Poly::add_term(const Monomial& m, const CycloNumber& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, coeff);
        return;
    }
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

void Poly::require_compatible(const Poly& rhs) const {
    if (field_->conductor() != rhs.field_->conductor())
        throw std::invalid_argument("polynomial field mismatch");
}

Poly Poly::operator-() const {
    Poly out(field_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
    require_compatible(rhs);
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    require_compatible(rhs);
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
    require_compatible(rhs);
    Poly out(field_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : rhs.terms_) out.add_term(ma * mb, ca * cb);
    *this = std::move(out);
    return *this;
}

Poly& Poly::operator*=(const CycloNumber& scalar) {
    if (scalar.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= scalar;
    return *this;
}

Poly& Poly::operator*=(const Rational& scalar) { return *this *= CycloNumber(field_, scalar); }

Poly Poly::pow(long e) const {
    if (e < 0) throw std::invalid_argument("negative polynomial power");
    Poly acc = constant(CycloNumber::one(field_));
    for (long i = 0; i < e; ++i) acc *= *this;
    return acc;
}

bool Poly::operator==(const Poly& rhs) const {
    if (field_->conductor() != rhs.field_->conductor()) return false;
    return terms_ == rhs.terms_;
}

Poly Poly::substituted(const std::vector<Poly>& map) const {
    Poly out(field_);
    for (const auto& [m, c] : terms_) {
        Poly prod = constant(c);
        for (const auto& [v, e] : m.factors()) {
            if (v >= static_cast<long>(map.size()))
                throw std::invalid_argument("substitution map missing variable");
            prod *= map[v].pow(e);
        }
        out += prod;
    }
    return out;
}

CycloNumber Poly::evaluated(const std::vector<CycloNumber>& assign) const {
    CycloNumber acc = CycloNumber::zero(field_);
    for (const auto& [m, c] : terms_) {
        CycloNumber v = c;
        for (const auto& [var, e] : m.factors()) {
            if (var >= static_cast<long>(assign.size()))
                throw std::invalid_argument("assignment missing variable");
            for (long i = 0; i < e; ++i) v *= assign[var];
        }
        acc += v;
    }
    return acc;
}

std::string Poly::str(const VarNamer& namer) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        std::string coeff;
        bool negative = false;
        if (c.is_rational()) {
            Rational q = c.rational_value();
            if (q < 0) {
                negative = true;
                q = -q;
            }
            if (q != 1 || m.empty()) coeff = q.get_str();
        } else {
            coeff = "(" + c.str() + ")";
        }
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        os << coeff;
        bool need_star = !coeff.empty();
        for (const auto& [v, e] : m.factors()) {
            if (need_star) os << "*";
            os << namer(v);
            if (e > 1) os << "^" << e;
            need_star = true;
        }
    }
    return os.str();
}

std::string Poly::str() const {
    return str([](long v) { return "x" + std::to_string(v); });
}

Poly operator+(Poly a, const Poly& b) { return a += b; }
Poly operator-(Poly a, const Poly& b) { return a -= b; }
Poly operator*(Poly a, const Poly& b) { return a *= b; }
Poly operator*(Poly a, const CycloNumber& s) { return a *= s; }
Poly operator*(const CycloNumber& s, Poly a) { return a *= s; }

}  // namespace gdet
