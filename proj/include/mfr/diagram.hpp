#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mfr/reduction.hpp"

namespace mfr {

  enum class NodeRole { boundary, interior, spring, well, four_prong };

  char const* to_string(NodeRole r) noexcept;

  struct DiagramNode {
    std::string id;
    NodeRole    role = NodeRole::boundary;
  };

  struct DiagramEdge {
    std::string            from;
    std::string            to;
    std::optional<Element> label;
  };

  struct DiagramGraph {
    std::vector<DiagramNode> nodes;
    std::vector<DiagramEdge> edges;
    std::string              base_point;
    /// Outer boundary, starting at the base point.
    std::vector<std::string> boundary;
    /// Reduction tiles (universal diagram) or copies of the square shape
    /// (universal shapes).
    std::size_t tiles = 0;

    std::size_t count(NodeRole r) const;
  };

  /// Lays out one tile per scheduled R_i^max application, trivial ones
  /// included. Each tile is checked against the rule equalities and the
  /// coprimality of its lcm complements; failures raise InconsistentTrace.
  DiagramGraph emit_universal_diagram(Monoid const& m, UniversalRun const& run);
  DiagramGraph emit_universal_diagram(Monoid const& m, Multifraction const& a);

  /// The unlabeled universal shape for depth n (even, >= 4), with interior
  /// nodes classified as springs, wells and four-prongs.
  DiagramGraph gamma_shape(std::size_t n);

  /// Graphviz text. Node and edge order follow the graph, so the output is
  /// stable. Labels need the monoid; without it they are omitted.
  std::string render_dot(DiagramGraph const& g, Monoid const* m = nullptr);

}  // namespace mfr
