#ifndef DIVGRAPH_LATTICE_HPP
#define DIVGRAPH_LATTICE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "divgraph/element_set.hpp"
#include "divgraph/group.hpp"

namespace divgraph {

using SubgroupId = std::size_t;

struct Subgroup {
  SubgroupId id = 0;
  ElementSet members;
  /// A small generating set, enough to regenerate the members.
  std::vector<Element> generators;

  std::size_t order() const { return members.count(); }
};

/// Hasse arc of the subgroup graph. Arrows point toward the smaller group:
/// `lower` is the larger subgroup, `upper` a maximal subgroup of it, and
/// `index` the relative index [lower : upper].
struct CoverArc {
  SubgroupId lower = 0;
  SubgroupId upper = 0;
  std::size_t index = 0;

  bool operator==(const CoverArc&) const = default;
};

/// All subgroups of a group ordered by size, then by sorted member list.
/// Subgroup 0 is trivial and the last one is the whole group.
class SubgroupLattice {
 public:
  SubgroupLattice() = default;
  SubgroupLattice(std::vector<Subgroup> subgroups, std::vector<CoverArc> covers);

  std::size_t size() const { return subgroups_.size(); }
  const Subgroup& operator[](SubgroupId id) const { return subgroups_[id]; }
  const std::vector<Subgroup>& subgroups() const { return subgroups_; }
  const std::vector<CoverArc>& covers() const { return covers_; }

  SubgroupId trivial() const { return 0; }
  SubgroupId whole() const { return subgroups_.size() - 1; }

  std::optional<SubgroupId> find(const ElementSet& members) const;
  /// Like find, but a missing set is an internal error.
  SubgroupId id_of(const ElementSet& members) const;

  /// Cover arcs leaving `id` toward its maximal subgroups.
  const std::vector<std::size_t>& covers_below(SubgroupId id) const { return below_[id]; }
  /// Cover arcs arriving at `id` from its minimal overgroups.
  const std::vector<std::size_t>& covers_above(SubgroupId id) const { return above_[id]; }

  bool contains(SubgroupId larger, SubgroupId smaller) const {
    return subgroups_[smaller].members.is_subset_of(subgroups_[larger].members);
  }

 private:
  std::vector<Subgroup> subgroups_;
  std::vector<CoverArc> covers_;
  std::vector<std::vector<std::size_t>> below_;
  std::vector<std::vector<std::size_t>> above_;
  std::unordered_map<ElementSet, SubgroupId, ElementSetHash> index_;
};

/// Enumerates every subgroup: cyclic subgroups seed the set, which is then
/// closed under joins with cyclic subgroups until nothing new appears.
/// Throws LatticeCapExceeded.
SubgroupLattice all_subgroups(const Group& g, const Limits& limits = {});

bool is_normal(const Group& g, const SubgroupLattice& lattice, SubgroupId h);
SubgroupId normalizer(const Group& g, const SubgroupLattice& lattice, SubgroupId h);
ElementSet centralizer(const Group& g, const ElementSet& s);
ElementSet center(const Group& g);
SubgroupId join(const Group& g, const SubgroupLattice& lattice, SubgroupId a, SubgroupId b);
SubgroupId meet(const SubgroupLattice& lattice, SubgroupId a, SubgroupId b);
ElementSet commutator_subgroup(const Group& g);

/// Hasse diagram in Graphviz syntax, edges from larger to smaller group.
std::string lattice_to_dot(const Group& g, const SubgroupLattice& lattice);
nlohmann::json lattice_to_json(const Group& g, const SubgroupLattice& lattice);

/// The subgroup as a group of its own. `embedding[i]` is the element of `g`
/// that element i of the result stands for.
Group subgroup_as_group(const Group& g, const ElementSet& members,
                        std::vector<Element>* embedding = nullptr);

/// G/N for a normal subgroup N. `projection[x]` is the coset index of x.
Group quotient_group(const Group& g, const ElementSet& normal,
                     std::vector<Element>* projection = nullptr);

}  // namespace divgraph

#endif  // DIVGRAPH_LATTICE_HPP
