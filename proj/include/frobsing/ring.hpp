#ifndef FROBSING_RING_HPP
#define FROBSING_RING_HPP

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "frobsing/prime_field.hpp"

namespace frobsing {

/// Ambient polynomial ring data: a prime field and named variables.
/// Shared immutably by every polynomial of the ring; two contexts are
/// interchangeable when characteristic and variable list coincide.
class RingContext {
public:
    RingContext(std::uint32_t p, std::vector<std::string> vars);

    const PrimeField& field() const { return field_; }
    std::uint32_t characteristic() const { return field_.p(); }
    const std::vector<std::string>& vars() const { return vars_; }
    std::size_t arity() const { return vars_.size(); }

    /// Index of a variable name, or -1 if absent.
    int var_index(std::string_view name) const;

    bool same_as(const RingContext& o) const {
        return field_.p() == o.field_.p() && vars_ == o.vars_;
    }

private:
    PrimeField field_;
    std::vector<std::string> vars_;
};

using RingPtr = std::shared_ptr<const RingContext>;

RingPtr make_ring(std::uint32_t p, std::vector<std::string> vars);

/// Same characteristic, original variables plus extras appended.
RingPtr extend_ring(const RingPtr& ring, const std::vector<std::string>& extra_vars);

/// True when the contexts are pointer-equal or value-equal.
bool compatible(const RingPtr& a, const RingPtr& b);

}  // namespace frobsing

#endif
