#ifndef DIVGRAPH_DIVISIONS_HPP
#define DIVGRAPH_DIVISIONS_HPP

#include <cstddef>
#include <map>
#include <vector>

#include <json.hpp>

#include "divgraph/group.hpp"

namespace divgraph {

struct ConjugacyClass {
  Element representative = 0;  // minimal member
  std::vector<Element> members;

  bool operator==(const ConjugacyClass&) const = default;
};

/// Elements whose generated cyclic subgroups are conjugate. Always a union of
/// whole conjugacy classes sharing one element order.
struct Division {
  Element representative = 0;  // minimal member
  std::vector<Element> members;
  std::vector<std::size_t> classes;  // indices into conjugacy_classes(G)
  std::uint64_t common_order = 1;

  bool contains(Element e) const;
};

/// Orbits of conjugation, ordered by their minimal member.
std::vector<ConjugacyClass> conjugacy_classes(const Group& g);

/// Classes read off the multiplication table alone: c and d are conjugate
/// exactly when some cell (a,b) holds c while its mirror (b,a) holds d, and
/// a pair seen k times belongs to a class of size n/k.
std::vector<ConjugacyClass> golomb_classes(const Group& g);

/// Divisions ordered by minimal member. Classes of coprime powers of each
/// representative are fused with a union-find.
std::vector<Division> divisions(const Group& g);
std::vector<Division> divisions(const Group& g, const std::vector<ConjugacyClass>& classes);

Division division_of(const Group& g, Element e);

// ---------------------------------------------------------------------------
// Alternating groups. These work on cycle types alone; no group table.

/// True when the S_n class of this even cycle type breaks into two A_n
/// classes, i.e. all parts (fixed points included) are odd and distinct.
/// Throws NotEvenClass for odd permutations.
bool class_splits_in_alternating(const CycleType& type);

/// For a split type: true when each of the two A_n classes is closed under
/// inverses (an even number of parts congruent to 3 mod 4).
/// Throws NotSplitClass.
bool split_class_inverse_closed(const CycleType& type);

/// Whether every element of A_n is conjugate in A_n to its inverse, decided
/// from the split classes of A_n.
bool ambivalent_alternating(std::size_t n);

/// Conjugator tau with tau p tau^-1 = q, pairing cycles of p and q sorted by
/// (length, minimal point) and each started at its minimal point.
/// Throws TypeMismatch if the cycle types differ.
Permutation standard_conjugator(const Permutation& p, const Permutation& q);

/// Whether two even permutations of one cycle type lie in the same A_n
/// conjugacy class. Throws TypeMismatch.
bool same_class_in_alternating(const Permutation& p, const Permutation& q);

/// Number of A_n divisions (1 or 2) for every even cycle type of n.
std::map<CycleType, int> alternating_divisions_by_type(std::size_t n,
                                                       std::size_t cap = 20);

/// All partitions of n in weakly decreasing order.
std::vector<CycleType> partitions(std::size_t n);

nlohmann::json divisions_to_json(const Group& g, const std::vector<Division>& divs);

}  // namespace divgraph

#endif  // DIVGRAPH_DIVISIONS_HPP
