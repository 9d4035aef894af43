#include "frobsing/ring.hpp"

#include <algorithm>
#include <set>

#include "frobsing/errors.hpp"

namespace frobsing {

RingContext::RingContext(std::uint32_t p, std::vector<std::string> vars)
    : field_(p), vars_(std::move(vars)) {
    if (vars_.empty()) throw Error("ring needs at least one variable");
    std::set<std::string> seen;
    for (const auto& v : vars_) {
        if (v.empty()) throw Error("empty variable name");
        if (!seen.insert(v).second) throw Error("duplicate variable name '" + v + "'");
    }
}

int RingContext::var_index(std::string_view name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i] == name) return static_cast<int>(i);
    }
    return -1;
}

RingPtr make_ring(std::uint32_t p, std::vector<std::string> vars) {
    return std::make_shared<RingContext>(p, std::move(vars));
}

RingPtr extend_ring(const RingPtr& ring, const std::vector<std::string>& extra_vars) {
    std::vector<std::string> vars = ring->vars();
    vars.insert(vars.end(), extra_vars.begin(), extra_vars.end());
    return make_ring(ring->characteristic(), std::move(vars));
}

bool compatible(const RingPtr& a, const RingPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->same_as(*b);
}

}  // namespace frobsing
