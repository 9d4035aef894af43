#ifndef FROBSING_DUAL_GRAPH_HPP
#define FROBSING_DUAL_GRAPH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "frobsing/rational.hpp"

namespace frobsing {

/// Weighted resolution dual graph: vertices are rational exceptional curves
/// with self-intersection -b_j, edges are transverse intersections, and
/// boundary marks count strict-transform boundary branches through each
/// vertex. Valid graphs are connected, simple, and have negative definite
/// intersection matrix (checked through leading principal minor signs).
struct DualGraph {
    std::vector<std::int64_t> b;                         // b_j >= 1
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<std::int64_t> boundary;                  // marks t_j >= 0

    std::size_t size() const { return b.size(); }

    /// Throws Error when any structural invariant fails.
    void validate() const;

    /// Reads {"vertices":[{"b":2},...],"edges":[[0,1],...],"boundary":[1,0,...]}.
    static DualGraph from_json(const std::string& text);
};

enum class LcClass { KLT, PLT, LC, NotLC };

const char* lc_class_name(LcClass c);

struct DiscrepancyVector {
    std::vector<Rational> a;
    LcClass lc_class;
};

/// Exact rational solution of the intersection-pairing system
///   sum_i a_i (E_i . E_j) = (b_j - 2) + t_j
/// by fraction-free elimination, classified against the -1 thresholds.
DiscrepancyVector solve_discrepancies(const DualGraph& graph);

/// The three boundary-chain shapes: (a) one boundary branch at one chain end,
/// (b) one at each chain end, (c) one branch at one end with the far end a
/// (-2)-curve and a second (-2)-curve hanging off the adjacent vertex.
enum class GraphType { A, B, C, Other };

const char* graph_type_name(GraphType t);

/// Requires at least one boundary mark.
GraphType classify_graph_type(const DualGraph& graph);

enum class FClass { DivisoriallyFRegular, FPureNotDivisoriallyFRegular, NotFPure };

const char* fclass_name(FClass c);

/// Predicted Frobenius class of the pair from the minimal-resolution graph
/// shape: type (a) is divisorially F-regular; type (b) is F-pure but not
/// divisorially F-regular; type (c) is F-pure exactly when p != 2; anything
/// else is not F-pure.
FClass predict_fclass(const DualGraph& graph, std::uint32_t p);

/// Discrepancy -1 - b/index of the exceptional divisor of a graded blowup
/// with index-scaled canonical class data b.
Rational graded_discrepancy(std::int64_t index, std::int64_t b);

}  // namespace frobsing

#endif
