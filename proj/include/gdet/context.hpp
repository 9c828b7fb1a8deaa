#pragma once

#include <string_view>

#include "gdet/cyclotomic.hpp"
#include "gdet/groups.hpp"

namespace gdet {

/// A group together with its ambient cyclotomic field. The conductor is the
/// smallest one holding every character value of the family: the exponent for
/// abelian products, lcm(m, 2) for D_m, lcm(2m, 4) for Q_m.
struct Context {
    GroupPtr group;
    FieldPtr field;

    static Context make(const GroupSpec& spec) {
        auto g = FiniteGroup::make(spec);
        return Context{g, CycloField::make(g->conductor())};
    }
    static Context make(std::string_view spec_text) { return make(parse_group_spec(spec_text)); }
};

}  // namespace gdet
