#pragma once

#include <compare>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace gdet {

enum class GroupKind { AbelianProduct, Dihedral, GenQuaternion };

/// Which family and with which parameters: cycle orders n1..nk for abelian
/// products, the single parameter m for D_m / Q_m.
struct GroupSpec {
    GroupKind kind = GroupKind::AbelianProduct;
    std::vector<long> params;

    std::string str() const;
    bool operator==(const GroupSpec&) const = default;
};

/// Parses `C<n>(xC<n>)* | D<m> | Q<m>`, case-insensitive.
/// Throws std::invalid_argument on malformed input or out-of-range parameters
/// (abelian factors need n >= 1, dihedral m >= 3, generalized quaternion m >= 2).
GroupSpec parse_group_spec(std::string_view text);

/// Canonical element: exponent vector for abelian products, {k, l} for
/// a^k b^l in the dihedral / generalized quaternion families. Two elements
/// are equal iff their tuples are equal.
struct GroupElement {
    std::vector<long> v;

    bool operator==(const GroupElement&) const = default;
    auto operator<=>(const GroupElement&) const = default;
};

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

class FiniteGroup {
public:
    static GroupPtr make(const GroupSpec& spec);
    static GroupPtr make(std::string_view spec_text);

    const GroupSpec& spec() const { return spec_; }
    long order() const { return order_; }
    bool is_abelian() const { return spec_.kind == GroupKind::AbelianProduct; }

    /// All elements exactly once in the fixed index order: lexicographic
    /// exponent vectors for abelian products; e, a, ..., a^(r-1), b, a*b, ...,
    /// a^(r-1)*b for D_m / Q_m.
    const std::vector<GroupElement>& elements() const { return elements_; }
    const GroupElement& element(long index) const;
    long index_of(const GroupElement& g) const;

    GroupElement identity() const;
    GroupElement mul(const GroupElement& x, const GroupElement& y) const;
    GroupElement inv(const GroupElement& x) const;
    long mul_index(long i, long j) const {
        if (!mul_table_.empty()) return mul_table_[i * order_ + j];
        return index_of(mul(elements_[i], elements_[j]));
    }
    long inv_index(long i) const { return inv_table_[i]; }

    // rotation subgroup <a> of D_m / Q_m
    bool has_rotation_subgroup() const { return !is_abelian(); }
    long rotation_order() const;                        // r = m for D_m, 2m for Q_m
    bool in_rotation_subgroup(const GroupElement& g) const;
    GroupElement rotation(long k) const;                // a^k
    GroupElement reflection(long k) const;              // a^k b

    /// lcm of the element orders; the conductor of the ambient cyclotomic
    /// field is derived from it per family.
    long exponent() const;
    long conductor() const;

    std::string element_name(const GroupElement& g) const;
    std::string element_name(long index) const { return element_name(elements_[index]); }
    GroupElement element_by_name(std::string_view name) const;

private:
    explicit FiniteGroup(GroupSpec spec);
    void validate(const GroupElement& g) const;

    GroupSpec spec_;
    long order_ = 0;
    std::vector<GroupElement> elements_;
    std::vector<long> mul_table_;
    std::vector<long> inv_table_;
};

}  // namespace gdet
