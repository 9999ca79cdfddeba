#ifndef DIVGRAPH_GROUP_HPP
#define DIVGRAPH_GROUP_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "divgraph/element_set.hpp"

namespace divgraph {

/// Weakly decreasing cycle lengths, fixed points included as parts equal to 1.
using CycleType = std::vector<int>;

/// A bijection of {1..d}. Stored 0-based; products compose right to left,
/// so (p * q)(x) = p(q(x)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);  // identity
  /// Image list of 0-based points. Throws ParseError unless a bijection.
  static Permutation from_images(std::vector<std::uint32_t> images);
  /// Image list of 1-based points, as in the JSON group format.
  static Permutation from_one_based(const std::vector<int>& images);
  /// Disjoint or overlapping cycles over 1-based points, composed right to left.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<int>>& cycles);

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator[](std::size_t point) const { return images_[point]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  Permutation pow(long long k) const;

  bool is_identity() const;
  bool is_even() const;
  /// Cycles over 1-based points, each rotated to start at its minimal point,
  /// ordered by minimal point; fixed points omitted.
  std::vector<std::vector<int>> cycles() const;
  CycleType cycle_type() const;
  std::uint64_t order() const;
  /// Cycle notation such as "(1 2)(3 4)"; the identity renders as "()".
  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<std::uint32_t> images_;
};

CycleType cycle_type(const Permutation& p);

/// Caps applied while building and analysing groups.
struct Limits {
  std::size_t order_cap = 5040;
  std::size_t exhaustive_associativity_below = 512;
  std::size_t lattice_order_cap = 384;
  std::size_t subgroup_count_cap = 20000;
  std::size_t search_budget = 2'000'000;
};

/// A finite group given by its full multiplication table. Element 0 is the
/// identity. Immutable once built.
class Group {
 public:
  std::size_t order() const { return order_; }
  const std::string& name() const { return name_; }

  Element identity() const { return 0; }
  Element multiply(Element a, Element b) const {
    return table_[static_cast<std::size_t>(a) * order_ + b];
  }
  Element inverse(Element a) const { return inverse_[a]; }
  std::span<const Element> row(Element a) const {
    return {table_.data() + static_cast<std::size_t>(a) * order_, order_};
  }

  const std::string& element_name(Element a) const { return names_[a]; }
  const std::vector<std::string>& element_names() const { return names_; }
  std::optional<Element> find_element(const std::string& name) const;

  bool has_permutations() const { return !perms_.empty(); }
  std::size_t degree() const { return degree_; }
  const Permutation& permutation(Element a) const { return perms_.at(a); }

  /// Row-major copy of the multiplication table.
  std::vector<std::vector<Element>> table() const;

  ElementSet all_elements() const;

  /// Copy under a relabelling: element a of this group becomes perm[a].
  /// perm[0] must be 0 so that the identity stays at index 0.
  Group relabeled(const std::vector<Element>& perm) const;
  Group renamed(std::string name) const;

 private:
  friend Group validate_cayley_table(const std::vector<std::vector<long long>>&,
                                     const Limits&, std::string,
                                     std::vector<std::string>);
  friend Group from_permutation_generators(const std::vector<Permutation>&,
                                           std::size_t, const Limits&,
                                           std::string);

  std::string name_;
  std::size_t order_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::string> names_;
  std::vector<Permutation> perms_;
  std::size_t degree_ = 0;
};

/// Checks the group axioms and returns the group with its identity moved to
/// index 0. Throws NotClosed, NoIdentity, NoInverse, NotAssociative, or
/// OrderCapExceeded, each naming the witnessing cell or triple.
Group validate_cayley_table(const std::vector<std::vector<long long>>& table,
                            const Limits& limits = {}, std::string name = "",
                            std::vector<std::string> names = {});

/// Closure of the generators under composition. Elements are sorted by image
/// list, so element 0 is the identity permutation.
Group from_permutation_generators(const std::vector<Permutation>& gens,
                                  std::size_t degree, const Limits& limits = {},
                                  std::string name = "");

std::uint64_t element_order(const Group& g, Element a);
/// s^-1 a s
Element conjugate(const Group& g, Element a, Element s);
Element power(const Group& g, Element a, long long k);
/// The subgroup generated by the given elements.
ElementSet generate(const Group& g, std::span<const Element> gens);
ElementSet cyclic_subgroup(const Group& g, Element a);

bool is_abelian(const Group& g);

}  // namespace divgraph

#endif  // DIVGRAPH_GROUP_HPP
