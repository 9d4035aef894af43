#ifndef FROBSING_REPORT_HPP
#define FROBSING_REPORT_HPP

#include <string>

#include <json.hpp>

#include "frobsing/dual_graph.hpp"
#include "frobsing/fedder.hpp"
#include "frobsing/thresholds.hpp"
#include "frobsing/toric.hpp"

namespace frobsing {

/// Insertion-ordered JSON so identical invocations serialize byte-identically.
using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaTag = "frobsing/1";

/// Compact outcome token, e.g. "holds_up_to_level(2)", "refuted(1)",
/// "certified_positive(1)". Used by the catalog comparisons.
std::string verdict_token(const Verdict& v);

Json verdict_to_json(const Verdict& v);
std::string verdict_to_text(const Verdict& v);

/// Exit-code contract: 0 for a holds/certified outcome, 1 for refuted or
/// uncertified, 3 when a budget stopped the run early.
int verdict_exit_code(const Verdict& v);

Json threshold_to_json(const ThresholdReport& r);
std::string threshold_to_text(const ThresholdReport& r);

Json graph_to_json(const DualGraph& g, const DiscrepancyVector& dv, GraphType type,
                   const std::optional<FClass>& predicted);
std::string graph_to_text(const DualGraph& g, const DiscrepancyVector& dv, GraphType type,
                          const std::optional<FClass>& predicted);

Json toric_to_json(const ToricCheck& c);
std::string toric_to_text(const ToricCheck& c);

Json implication_to_json(const ImplicationReport& r);

/// Wraps a command payload in the versioned envelope.
Json envelope(const std::string& command, Json params, Json payload,
              std::int64_t timing_ms);

}  // namespace frobsing

#endif
