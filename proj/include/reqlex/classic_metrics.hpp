#pragma once

// Halstead software science measures and McCabe cyclomatic complexity.

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "reqlex/code_model.hpp"
#include "reqlex/syntax.hpp"

namespace reqlex::classic {

struct HalsteadCounts {
  std::size_t n1 = 0;  // distinct operators
  std::size_t n2 = 0;  // distinct operands
  std::size_t N1 = 0;  // operator occurrences
  std::size_t N2 = 0;  // operand occurrences

  bool operator==(const HalsteadCounts&) const = default;
};

struct HalsteadMetrics {
  double vocabulary = 0;        // n
  double length = 0;            // N
  double volume = 0;            // V
  double estimated_length = 0;  // N^
  double potential_volume = 0;  // V*
  double level = 0;             // L
  double difficulty = 0;        // D
  double effort_dv = 0;         // D * V
  double effort_vl = 0;         // V / L
  double time_minutes = 0;      // effort_dv / (18 * 60)
};

/// Stroud number used to turn effort into seconds.
inline constexpr double kStroudNumber = 18.0;

HalsteadCounts halstead_counts(const code::TokenStream& ts, const code::Dialect& d);
HalsteadMetrics halstead_metrics(const HalsteadCounts& c);

/// Minutes for a given effort: E / (18 * 60).
double halstead_time_minutes(double effort);

struct ControlFlowGraph {
  enum class NodeKind { Entry, Exit, Statement, Predicate, CallReturn, Join };

  struct Node {
    NodeKind kind = NodeKind::Statement;
    std::size_t line = 0;
  };

  std::vector<Node> nodes;
  // Directed; parallel edges are kept (a two-way branch whose arms are both
  // empty still has out-degree 2).
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::size_t node_count() const { return nodes.size(); }
  std::size_t edge_count() const { return edges.size(); }
  /// Weakly connected components.
  std::size_t components() const;
  /// Nodes with out-degree of at least 2.
  std::size_t predicate_nodes() const;
  std::vector<std::size_t> out_degrees() const;
};

/// One entry and one exit node per function. Each call to a function defined
/// in the same source links the call site to the callee entry and the callee
/// exit back to a return node, so caller and callee share a component.
/// Statements after an unconditional jump are unreachable and get no nodes.
ControlFlowGraph build_cfg(const code::Program& program);
ControlFlowGraph build_cfg(std::string_view source, const code::Dialect& d);

/// e - n + 2p.
long cyclomatic_graph(const ControlFlowGraph& g);

/// Decision points (if, while, for, case, ?) plus, for every function defined
/// in the source, one decision per call site beyond the first (its exit
/// dispatches between return points), plus one.
std::size_t cyclomatic_decisions(const code::TokenStream& ts, const code::Program& program);
std::size_t cyclomatic_decisions(std::string_view source, const code::Dialect& d);

/// Faces of the planar embedding, counting the unbounded one: e - n + p + 1.
long region_count(const ControlFlowGraph& g);

}  // namespace reqlex::classic
