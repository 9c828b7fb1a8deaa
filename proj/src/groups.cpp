#include "gdet/groups.hpp"

#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gdet {

namespace {

long mod(long a, long n) {
    long r = a % n;
    return r < 0 ? r + n : r;
}

long parse_positive(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("group spec: missing number");
    long v = 0;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument("group spec: bad number '" + std::string(s) + "'");
        v = v * 10 + (c - '0');
        if (v > 1'000'000) throw std::invalid_argument("group spec: parameter too large");
    }
    return v;
}

}  // namespace

std::string GroupSpec::str() const {
    std::ostringstream os;
    switch (kind) {
        case GroupKind::AbelianProduct:
            for (size_t i = 0; i < params.size(); ++i) {
                if (i) os << "x";
                os << "C" << params[i];
            }
            break;
        case GroupKind::Dihedral:
            os << "D" << params.at(0);
            break;
        case GroupKind::GenQuaternion:
            os << "Q" << params.at(0);
            break;
    }
    return os.str();
}

GroupSpec parse_group_spec(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty group spec");
    const char head = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    GroupSpec spec;
    if (head == 'D' || head == 'Q') {
        long m = parse_positive(text.substr(1));
        if (head == 'D') {
            if (m < 3) throw std::invalid_argument("dihedral group needs m >= 3");
            spec.kind = GroupKind::Dihedral;
        } else {
            if (m < 2) throw std::invalid_argument("generalized quaternion group needs m >= 2");
            spec.kind = GroupKind::GenQuaternion;
        }
        spec.params = {m};
        return spec;
    }
    if (head != 'C') throw std::invalid_argument("group spec must start with C, D or Q");
    spec.kind = GroupKind::AbelianProduct;
    size_t pos = 0;
    while (pos < text.size()) {
        const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[pos])));
        if (c != 'C') throw std::invalid_argument("expected cyclic factor 'C<n>'");
        ++pos;
        size_t end = pos;
        while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
        long n = parse_positive(text.substr(pos, end - pos));
        if (n < 1) throw std::invalid_argument("cyclic factor needs n >= 1");
        spec.params.push_back(n);
        pos = end;
        if (pos == text.size()) break;
        const char sep = static_cast<char>(std::toupper(static_cast<unsigned char>(text[pos])));
        if (sep != 'X') throw std::invalid_argument("expected 'x' between cyclic factors");
        ++pos;
    }
    if (spec.params.empty()) throw std::invalid_argument("abelian spec needs at least one factor");
    return spec;
}

FiniteGroup::FiniteGroup(GroupSpec spec) : spec_(std::move(spec)) {
    if (spec_.kind == GroupKind::AbelianProduct) {
        if (spec_.params.empty()) throw std::invalid_argument("abelian product needs factors");
        order_ = 1;
        for (long n : spec_.params) {
            if (n < 1) throw std::invalid_argument("cyclic factor needs n >= 1");
            order_ *= n;
        }
        GroupElement g;
        g.v.assign(spec_.params.size(), 0);
        for (long i = 0; i < order_; ++i) {
            elements_.push_back(g);
            for (long j = static_cast<long>(g.v.size()) - 1; j >= 0; --j) {
                if (++g.v[j] < spec_.params[j]) break;
                g.v[j] = 0;
            }
        }
    } else {
        const long m = spec_.params.at(0);
        if (spec_.kind == GroupKind::Dihedral && m < 3)
            throw std::invalid_argument("dihedral group needs m >= 3");
        if (spec_.kind == GroupKind::GenQuaternion && m < 2)
            throw std::invalid_argument("generalized quaternion group needs m >= 2");
        const long r = rotation_order();
        order_ = 2 * r;
        for (long l = 0; l < 2; ++l)
            for (long k = 0; k < r; ++k) elements_.push_back(GroupElement{{k, l}});
    }

    inv_table_.resize(order_);
    for (long i = 0; i < order_; ++i) inv_table_[i] = index_of(inv(elements_[i]));
    if (order_ <= 4096) {
        mul_table_.resize(order_ * order_);
        for (long i = 0; i < order_; ++i)
            for (long j = 0; j < order_; ++j)
                mul_table_[i * order_ + j] = index_of(mul(elements_[i], elements_[j]));
    }
}

GroupPtr FiniteGroup::make(const GroupSpec& spec) { return GroupPtr(new FiniteGroup(spec)); }
GroupPtr FiniteGroup::make(std::string_view spec_text) { return make(parse_group_spec(spec_text)); }

const GroupElement& FiniteGroup::element(long index) const {
    if (index < 0 || index >= order_) throw std::out_of_range("element index out of range");
    return elements_[index];
}

void FiniteGroup::validate(const GroupElement& g) const {
    if (spec_.kind == GroupKind::AbelianProduct) {
        if (g.v.size() != spec_.params.size())
            throw std::invalid_argument("element not valid for group");
        for (size_t i = 0; i < g.v.size(); ++i)
            if (g.v[i] < 0 || g.v[i] >= spec_.params[i])
                throw std::invalid_argument("element not valid for group");
    } else {
        if (g.v.size() != 2 || g.v[0] < 0 || g.v[0] >= rotation_order() || (g.v[1] != 0 && g.v[1] != 1))
            throw std::invalid_argument("element not valid for group");
    }
}

long FiniteGroup::index_of(const GroupElement& g) const {
    validate(g);
    if (spec_.kind == GroupKind::AbelianProduct) {
        long idx = 0;
        for (size_t i = 0; i < g.v.size(); ++i) idx = idx * spec_.params[i] + g.v[i];
        return idx;
    }
    return g.v[1] * rotation_order() + g.v[0];
}

GroupElement FiniteGroup::identity() const {
    if (spec_.kind == GroupKind::AbelianProduct)
        return GroupElement{std::vector<long>(spec_.params.size(), 0)};
    return GroupElement{{0, 0}};
}

GroupElement FiniteGroup::mul(const GroupElement& x, const GroupElement& y) const {
    validate(x);
    validate(y);
    if (spec_.kind == GroupKind::AbelianProduct) {
        GroupElement z = x;
        for (size_t i = 0; i < z.v.size(); ++i) z.v[i] = mod(z.v[i] + y.v[i], spec_.params[i]);
        return z;
    }
    // normal form rewriting: b a^k = a^(-k) b, then b^2 -> e (D_m) or a^m (Q_m)
    const long r = rotation_order();
    long k = x.v[0] + (x.v[1] ? -y.v[0] : y.v[0]);
    long l = x.v[1] + y.v[1];
    if (l == 2) {
        l = 0;
        if (spec_.kind == GroupKind::GenQuaternion) k += spec_.params[0];
    }
    return GroupElement{{mod(k, r), l}};
}

GroupElement FiniteGroup::inv(const GroupElement& x) const {
    validate(x);
    if (spec_.kind == GroupKind::AbelianProduct) {
        GroupElement z = x;
        for (size_t i = 0; i < z.v.size(); ++i) z.v[i] = mod(-z.v[i], spec_.params[i]);
        return z;
    }
    const long r = rotation_order();
    if (x.v[1] == 0) return GroupElement{{mod(-x.v[0], r), 0}};
    // (a^k b)^-1 = a^(k+c) b with c = m for Q_m, 0 for D_m
    const long c = spec_.kind == GroupKind::GenQuaternion ? spec_.params[0] : 0;
    return GroupElement{{mod(x.v[0] + c, r), 1}};
}

long FiniteGroup::rotation_order() const {
    if (is_abelian()) throw std::domain_error("abelian group has no designated rotation subgroup");
    return spec_.kind == GroupKind::Dihedral ? spec_.params[0] : 2 * spec_.params[0];
}

bool FiniteGroup::in_rotation_subgroup(const GroupElement& g) const {
    validate(g);
    if (is_abelian()) throw std::domain_error("abelian group has no designated rotation subgroup");
    return g.v[1] == 0;
}

GroupElement FiniteGroup::rotation(long k) const {
    return GroupElement{{mod(k, rotation_order()), 0}};
}

GroupElement FiniteGroup::reflection(long k) const {
    return GroupElement{{mod(k, rotation_order()), 1}};
}

long FiniteGroup::exponent() const {
    if (spec_.kind == GroupKind::AbelianProduct) {
        long e = 1;
        for (long n : spec_.params) e = std::lcm(e, n);
        return e;
    }
    const long m = spec_.params[0];
    if (spec_.kind == GroupKind::Dihedral) return std::lcm(m, 2L);
    return std::lcm(2 * m, 4L);
}

long FiniteGroup::conductor() const { return exponent(); }

std::string FiniteGroup::element_name(const GroupElement& g) const {
    validate(g);
    std::ostringstream os;
    if (spec_.kind == GroupKind::AbelianProduct && spec_.params.size() >= 2) {
        os << "(";
        for (size_t i = 0; i < g.v.size(); ++i) {
            if (i) os << ",";
            os << g.v[i];
        }
        os << ")";
        return os.str();
    }
    // rank-one cyclic groups and D/Q use e, a^k, b, a^k*b
    const long k = g.v[0];
    const long l = g.v.size() == 2 ? g.v[1] : 0;
    if (k == 0 && l == 0) return "e";
    if (k == 1) os << "a";
    if (k > 1) os << "a^" << k;
    if (l) {
        if (k > 0) os << "*";
        os << "b";
    }
    return os.str();
}

GroupElement FiniteGroup::element_by_name(std::string_view name) const {
    if (name.empty()) throw std::invalid_argument("empty element name");
    if (name.front() == '(') {
        if (spec_.kind != GroupKind::AbelianProduct || name.back() != ')')
            throw std::invalid_argument("bad element name '" + std::string(name) + "'");
        GroupElement g;
        std::string body(name.substr(1, name.size() - 2));
        std::istringstream is(body);
        std::string part;
        while (std::getline(is, part, ',')) g.v.push_back(parse_positive(part));
        validate(g);
        return g;
    }
    // e | a^k | b | a^k*b, with a = a^1
    long k = 0, l = 0;
    std::string s(name);
    if (s == "e") {
        return identity();
    }
    size_t pos = 0;
    if (pos < s.size() && s[pos] == 'a') {
        ++pos;
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            size_t end = pos;
            while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
            k = parse_positive(std::string_view(s).substr(pos, end - pos));
            pos = end;
        } else {
            k = 1;
        }
        if (pos < s.size() && s[pos] == '*') ++pos;
    }
    if (pos < s.size() && s[pos] == 'b') {
        l = 1;
        ++pos;
    }
    if (pos != s.size() || (k == 0 && l == 0))
        throw std::invalid_argument("bad element name '" + s + "'");
    if (spec_.kind == GroupKind::AbelianProduct) {
        if (spec_.params.size() != 1 || l != 0 || k >= spec_.params[0])
            throw std::invalid_argument("bad element name '" + s + "' for " + spec_.str());
        return GroupElement{{k}};
    }
    if (k >= rotation_order())
        throw std::invalid_argument("bad element name '" + s + "' for " + spec_.str());
    return GroupElement{{k, l}};
}

}  // namespace gdet
