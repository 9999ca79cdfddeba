#ifndef DIVGRAPH_ANALYSIS_HPP
#define DIVGRAPH_ANALYSIS_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "divgraph/division_graph.hpp"
#include "divgraph/group.hpp"
#include "divgraph/lattice.hpp"

namespace divgraph {

using Color = std::size_t;

/// Subgroup lattice as read off a division graph. Colors keep the ids used
/// by the graph; nothing else about them is assumed.
struct LatticeSketch {
  std::size_t color_count = 0;
  Color base = 0;  // the whole group
  Color top = 0;   // the trivial subgroup
  std::vector<std::size_t> order;  // subgroup order per color
  std::vector<CoverArc> covers;    // lower = larger subgroup
  /// contains[a][b]: color a is a supergroup of color b
  std::vector<std::vector<bool>> contains;

  /// Least color containing all of `colors`.
  Color join(const std::vector<Color>& colors) const;
};

/// Index of the component whose arcs are all labelled 1.
/// Throws MalformedGraph unless exactly one exists.
std::size_t identity_component(const DivisionGraph& dg);

std::size_t recover_order(const DivisionGraph& dg);
LatticeSketch recover_lattice(const DivisionGraph& dg);

/// Colors whose orbits, in every component, all have the same length.
std::set<Color> recover_normal_colors(const DivisionGraph& dg);

struct CyclicColors {
  std::set<Color> cyclic;
  /// Per component: the maximal colors holding a vertex with a single top
  /// vertex above it. These are the conjugates of the decomposition group.
  std::vector<std::set<Color>> families;
};

CyclicColors recover_cyclic_colors(const DivisionGraph& dg);

/// One property computed twice: from the graph where that is attempted,
/// and on the group directly.
struct OracleCheck {
  std::optional<nlohmann::json> graph;
  nlohmann::json direct;

  bool agree() const { return !graph || *graph == direct; }
};

struct AnalysisReport {
  std::string group;
  std::size_t order = 0;
  std::size_t division_count = 0;
  LatticeSketch lattice_sketch;
  std::set<Color> normal_color_ids;
  std::set<Color> cyclic_color_ids;
  std::vector<std::set<Color>> conjugate_cyclic_families;
  std::map<std::string, OracleCheck> oracle_checks;

  bool all_agree() const;
};

AnalysisReport analyze(const Group& g, const Limits& limits = {});
nlohmann::json report_to_json(const AnalysisReport& report);

// Direct computations on the group.

bool is_simple(const Group& g, const SubgroupLattice& lattice);
bool is_solvable(const Group& g);
bool is_nilpotent(const Group& g);
/// Smallest number of elements generating the group.
std::size_t minimal_generator_count(const Group& g, const SubgroupLattice& lattice);
/// Invariant factors d1 | d2 | ... of an abelian group; empty for the
/// trivial group. Throws TypeMismatch for non-abelian input.
std::vector<std::uint64_t> invariant_factors(const Group& g);

// Graph-side versions of the abelian test and the generator count.

/// Cyclic prime-power orders of a decomposition into normal cyclic colors,
/// or nullopt when no such decomposition exists (the group is not abelian).
std::optional<std::vector<std::uint64_t>> graph_abelian_decomposition(
    const LatticeSketch& sketch, const std::set<Color>& normal, const std::set<Color>& cyclic);
/// Fewest maximal cyclic colors whose join is the base color.
std::size_t graph_minimal_generators(const LatticeSketch& sketch, const std::set<Color>& cyclic);

std::vector<std::uint64_t> factors_from_prime_powers(std::vector<std::uint64_t> prime_powers);

// Subgroup and quotient graphs cut out of D(G).

/// A piece of a component, restricted to some colors. `colors[i]` is the
/// color of the graph that local cluster i came from.
struct Restriction {
  std::vector<Color> colors;
  USTComponent component;
};

/// For every vertex of color `h`: everything above it in colors contained
/// in `h`, with orbit lengths measured relative to that vertex.
std::vector<Restriction> restrict_to_subgroup(const DivisionGraph& dg,
                                              const LatticeSketch& sketch, Color h);
/// For a normal color `h`: every component cut down to colors containing `h`.
std::vector<Restriction> restrict_to_quotient(const DivisionGraph& dg,
                                              const LatticeSketch& sketch, Color h);

struct RestrictionCheck {
  Color color = 0;
  std::size_t pieces = 0;
  std::size_t distinct_up_to_isomorphism = 0;
  std::size_t distinct_as_labelled = 0;
  std::size_t direct_components = 0;
  bool isomorphism_reading_matches = false;
  bool labelled_reading_matches = false;
};

/// Compares both readings of "erase duplicates" with the division graph of
/// the subgroup (or quotient) computed from its own table.
RestrictionCheck check_subgroup_restriction(const Group& g, const SubgroupLattice& lattice,
                                            const DivisionGraph& dg, SubgroupId h,
                                            const Limits& limits = {});
RestrictionCheck check_quotient_restriction(const Group& g, const SubgroupLattice& lattice,
                                            const DivisionGraph& dg, SubgroupId h,
                                            const Limits& limits = {});

nlohmann::json restriction_to_json(const RestrictionCheck& check);

}  // namespace divgraph

#endif  // DIVGRAPH_ANALYSIS_HPP
