#ifndef DIVGRAPH_DIVISION_GRAPH_HPP
#define DIVGRAPH_DIVISION_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "divgraph/divisions.hpp"
#include "divgraph/group.hpp"
#include "divgraph/lattice.hpp"

namespace divgraph {

/// Right cosets Hg of one subgroup, ordered by minimal element.
struct CosetSpace {
  SubgroupId subgroup = 0;
  std::vector<std::vector<Element>> cosets;
  std::vector<std::uint32_t> coset_of;  // element -> coset index
};

/// One orbit of the acting cyclic group on a coset space; it stands for a
/// prime of the fixed field of the subgroup, and its length is the inertial
/// degree over the base prime.
struct Orbit {
  std::vector<std::uint32_t> cosets;  // sorted coset indices

  std::size_t length() const { return cosets.size(); }
  bool operator==(const Orbit&) const = default;
};

struct VertexRef {
  SubgroupId color = 0;
  std::uint32_t orbit = 0;

  auto operator<=>(const VertexRef&) const = default;
};

/// Splitting of one orbit along a Hasse arc. `lower` lies in the larger
/// subgroup's cluster; `label` is the relative inertial degree
/// length(upper) / length(lower).
struct SplitArc {
  VertexRef lower;
  VertexRef upper;
  std::uint32_t label = 1;

  auto operator<=>(const SplitArc&) const = default;
};

/// Unramified splitting type of one division: a cluster of orbits for every
/// subgroup (indexed by subgroup id, which doubles as the vertex color) and
/// the arcs linking orbits along the covers of the subgroup lattice.
struct USTComponent {
  Element division_rep = 0;
  std::vector<std::vector<Orbit>> clusters;
  std::vector<SplitArc> arcs;

  std::size_t vertex_count() const;
};

struct DivisionGraph {
  std::string group_name;
  std::vector<Division> divisions;
  std::vector<USTComponent> components;  // parallel to divisions
};

CosetSpace right_cosets(const Group& g, const SubgroupLattice& lattice, SubgroupId h);
std::vector<CosetSpace> all_right_cosets(const Group& g, const SubgroupLattice& lattice);

/// Orbits of (Hx) -> H(x phi), ordered by minimal coset index.
std::vector<Orbit> orbit_decomposition(const CosetSpace& cs, const Group& g, Element phi);

/// Component for the cyclic group generated by `phi`.
USTComponent ust_component(const Group& g, const SubgroupLattice& lattice,
                           const std::vector<CosetSpace>& cosets, Element phi);
USTComponent ust_component(const Group& g, const SubgroupLattice& lattice,
                           const Division& d);

DivisionGraph division_graph(const Group& g, const SubgroupLattice& lattice);
/// Builds the lattice first; throws LatticeCapExceeded.
DivisionGraph division_graph(const Group& g, const Limits& limits = {});

struct LagariasViolation {
  Element first = 0;
  Element second = 0;
  bool same_division = false;  // true: same division, different splitting
};

struct LagariasReport {
  std::size_t pairs_checked = 0;
  std::size_t subgroups_checked = 0;
  std::vector<LagariasViolation> violations;

  bool ok() const { return violations.empty(); }
};

/// For every pair of elements: same division exactly when the orbit-length
/// multisets of the two generated cyclic groups agree on every H\G.
LagariasReport verify_lagarias(const Group& g, const SubgroupLattice& lattice);

/// Checks the structural invariants of a component; returns a description of
/// the first failure, or an empty string.
std::string check_component(const SubgroupLattice& lattice, const USTComponent& c);

std::string division_graph_to_dot(const Group& g, const DivisionGraph& dg);
nlohmann::json division_graph_to_json(const Group& g, const DivisionGraph& dg);

}  // namespace divgraph

#endif  // DIVGRAPH_DIVISION_GRAPH_HPP
