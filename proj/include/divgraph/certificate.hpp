#ifndef DIVGRAPH_CERTIFICATE_HPP
#define DIVGRAPH_CERTIFICATE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "divgraph/division_graph.hpp"
#include "divgraph/group.hpp"

namespace divgraph {

/// Vertex-labelled digraph with labelled arcs. Labels are part of the
/// structure an isomorphism must preserve.
struct ColoredDigraph {
  struct Edge {
    std::uint32_t from = 0;
    std::uint32_t to = 0;
    std::uint32_t label = 0;
  };
  std::vector<std::uint32_t> vertex_label;
  std::vector<Edge> edges;

  std::size_t size() const { return vertex_label.size(); }
};

struct CanonicalForm {
  /// vertex -> canonical position
  std::vector<std::uint32_t> labeling;
  /// Relabelled graph: size, vertex labels by position, sorted edges.
  std::vector<std::uint32_t> code;
  std::size_t search_nodes = 0;
  std::size_t automorphism_generators = 0;
};

/// Canonical labelling by partition refinement and backtracking with
/// automorphism pruning; the lexicographically least code over all leaves
/// wins. Throws CanonicalizationBudgetExceeded once `budget` search nodes
/// have been visited.
CanonicalForm canonical_form(const ColoredDigraph& graph, std::size_t budget);

/// Division graph as one digraph: an orbit vertex per prime, a color vertex
/// per subgroup, orbit -> color membership edges and the splitting arcs.
/// With `fixed_colors` the color vertices carry their ids, so isomorphisms
/// may not rename colors; otherwise colors are featureless.
ColoredDigraph to_colored_digraph(const DivisionGraph& dg, bool fixed_colors = false);
ColoredDigraph to_colored_digraph(const USTComponent& comp,
                                  const std::vector<std::size_t>* color_ids = nullptr);

/// Canonical byte string of a division graph up to component order, one
/// global renaming of colors, and isomorphism inside components.
struct Certificate {
  std::vector<std::uint8_t> bytes;

  std::string hex() const;
  bool operator==(const Certificate&) const = default;
};

Certificate certificate(const DivisionGraph& dg, std::size_t budget);
/// Certificate of one component with colors held fixed, optionally renamed
/// through `color_ids`.
Certificate component_certificate(const USTComponent& comp, std::size_t budget,
                                  const std::vector<std::size_t>* color_ids = nullptr);

enum class Comparison { Same, Different };

Comparison compare(const Group& a, const Group& b, const Limits& limits = {});

/// Exhaustive isomorphism search on multiplication tables: generators of
/// `a` are mapped in every order-preserving way into `b`.
bool are_isomorphic(const Group& a, const Group& b);

struct ScanEntry {
  std::string descriptor;
  std::size_t order = 0;
  std::string certificate_hex;
};

struct ScanReport {
  std::vector<ScanEntry> groups;
  /// Equal certificates, non-isomorphic groups.
  std::vector<std::pair<std::string, std::string>> collisions;
  /// Isomorphic groups with different certificates; always a bug.
  std::vector<std::pair<std::string, std::string>> invariance_failures;
  std::size_t isomorphism_classes = 0;
  std::size_t distinct_certificates = 0;
};

ScanReport conjecture_scan(const std::vector<std::string>& descriptors,
                           const Limits& limits = {});

nlohmann::json scan_to_json(const ScanReport& report);

}  // namespace divgraph

#endif  // DIVGRAPH_CERTIFICATE_HPP
