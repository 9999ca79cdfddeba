#include "divgraph/lattice.hpp"

#include <algorithm>
#include <sstream>

#include "divgraph/error.hpp"

namespace divgraph {

SubgroupLattice::SubgroupLattice(std::vector<Subgroup> subgroups,
                                 std::vector<CoverArc> covers)
    : subgroups_(std::move(subgroups)),
      covers_(std::move(covers)),
      below_(subgroups_.size()),
      above_(subgroups_.size()) {
  for (std::size_t i = 0; i < covers_.size(); ++i) {
    below_[covers_[i].lower].push_back(i);
    above_[covers_[i].upper].push_back(i);
  }
  for (const auto& s : subgroups_) index_.emplace(s.members, s.id);
}

std::optional<SubgroupId> SubgroupLattice::find(const ElementSet& members) const {
  auto it = index_.find(members);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SubgroupId SubgroupLattice::id_of(const ElementSet& members) const {
  auto id = find(members);
  if (!id) {
    throw Error(ErrorCode::MalformedGraph,
                "subset of order " + std::to_string(members.count()) +
                    " is not a subgroup in the lattice");
  }
  return *id;
}

namespace {

// Subgroup generated by an existing subgroup plus extra generators. The
// members of `base` are already closed, so the search starts from them.
ElementSet close_over(const Group& g, const ElementSet& base,
                      const std::vector<Element>& gens) {
  ElementSet set = base;
  std::vector<Element> queue = base.members();
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Element s : gens) {
      Element y = g.multiply(queue[head], s);
      if (!set.contains(y)) {
        set.insert(y);
        queue.push_back(y);
      }
    }
  }
  return set;
}

}  // namespace

SubgroupLattice all_subgroups(const Group& g, const Limits& limits) {
  const std::size_t n = g.order();
  if (n > limits.lattice_order_cap) {
    throw Error(ErrorCode::LatticeCapExceeded,
                "group order " + std::to_string(n) + " exceeds lattice cap " +
                    std::to_string(limits.lattice_order_cap));
  }

  std::vector<Subgroup> found;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen;
  auto add = [&](ElementSet members, std::vector<Element> gens) {
    auto [it, inserted] = seen.emplace(members, found.size());
    if (!inserted) return;
    if (found.size() >= limits.subgroup_count_cap) {
      throw Error(ErrorCode::LatticeCapExceeded,
                  "more than " + std::to_string(limits.subgroup_count_cap) +
                      " subgroups");
    }
    found.push_back(Subgroup{0, std::move(members), std::move(gens)});
  };

  std::vector<Element> cyclic_gens;
  for (Element a = 0; a < n; ++a) {
    auto before = found.size();
    add(cyclic_subgroup(g, a), a == 0 ? std::vector<Element>{} : std::vector<Element>{a});
    if (found.size() != before) cyclic_gens.push_back(a);
  }

  for (std::size_t head = 0; head < found.size(); ++head) {
    for (Element c : cyclic_gens) {
      if (found[head].members.contains(c)) continue;
      std::vector<Element> gens = found[head].generators;
      gens.push_back(c);
      ElementSet joined = close_over(g, found[head].members, gens);
      add(std::move(joined), std::move(gens));
    }
  }

  std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
    auto oa = a.order(), ob = b.order();
    return oa != ob ? oa < ob : a.members.lex_less(b.members);
  });
  for (std::size_t i = 0; i < found.size(); ++i) found[i].id = i;

  std::vector<CoverArc> covers;
  for (std::size_t a = found.size(); a-- > 0;) {
    std::vector<std::size_t> maximal;
    for (std::size_t b = a; b-- > 0;) {
      if (found[b].order() == found[a].order()) continue;
      if (!found[b].members.is_subset_of(found[a].members)) continue;
      bool below_maximal = std::any_of(maximal.begin(), maximal.end(), [&](std::size_t m) {
        return found[b].members.is_subset_of(found[m].members);
      });
      if (!below_maximal) maximal.push_back(b);
    }
    std::sort(maximal.begin(), maximal.end());
    for (auto b : maximal) covers.push_back({a, b, found[a].order() / found[b].order()});
  }
  std::sort(covers.begin(), covers.end(), [](const CoverArc& x, const CoverArc& y) {
    return x.lower != y.lower ? x.lower < y.lower : x.upper < y.upper;
  });
  return SubgroupLattice(std::move(found), std::move(covers));
}

bool is_normal(const Group& g, const SubgroupLattice& lattice, SubgroupId h) {
  const auto& sub = lattice[h];
  for (Element s = 0; s < g.order(); ++s)
    for (Element x : sub.generators)
      if (!sub.members.contains(conjugate(g, x, s))) return false;
  return true;
}

SubgroupId normalizer(const Group& g, const SubgroupLattice& lattice, SubgroupId h) {
  const auto& sub = lattice[h];
  ElementSet norm(g.order());
  for (Element s = 0; s < g.order(); ++s) {
    bool keeps = std::all_of(sub.generators.begin(), sub.generators.end(), [&](Element x) {
      return sub.members.contains(conjugate(g, x, s));
    });
    if (keeps) norm.insert(s);
  }
  return lattice.id_of(norm);
}

ElementSet centralizer(const Group& g, const ElementSet& s) {
  ElementSet out(g.order());
  auto members = s.members();
  for (Element x = 0; x < g.order(); ++x) {
    bool commutes = std::all_of(members.begin(), members.end(), [&](Element y) {
      return g.multiply(x, y) == g.multiply(y, x);
    });
    if (commutes) out.insert(x);
  }
  return out;
}

ElementSet center(const Group& g) { return centralizer(g, g.all_elements()); }

SubgroupId join(const Group& g, const SubgroupLattice& lattice, SubgroupId a, SubgroupId b) {
  if (lattice.contains(a, b)) return a;
  if (lattice.contains(b, a)) return b;
  std::vector<Element> gens = lattice[a].generators;
  gens.insert(gens.end(), lattice[b].generators.begin(), lattice[b].generators.end());
  return lattice.id_of(close_over(g, lattice[a].members, gens));
}

SubgroupId meet(const SubgroupLattice& lattice, SubgroupId a, SubgroupId b) {
  return lattice.id_of(lattice[a].members & lattice[b].members);
}

ElementSet commutator_subgroup(const Group& g) {
  ElementSet commutators(g.order());
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b)
      commutators.insert(g.multiply(g.multiply(g.inverse(a), g.inverse(b)), g.multiply(a, b)));
  auto gens = commutators.members();
  return generate(g, gens);
}

std::string lattice_to_dot(const Group& g, const SubgroupLattice& lattice) {
  std::ostringstream os;
  os << "digraph \"" << g.name() << "\" {\n";
  for (const auto& s : lattice.subgroups())
    os << "  H" << s.id << " [label=\"H" << s.id << " (order " << s.order() << ")\"];\n";
  for (const auto& c : lattice.covers())
    os << "  H" << c.lower << " -> H" << c.upper << " [label=\"" << c.index << "\"];\n";
  os << "}\n";
  return os.str();
}

nlohmann::json lattice_to_json(const Group& g, const SubgroupLattice& lattice) {
  nlohmann::json subs = nlohmann::json::array();
  for (const auto& s : lattice.subgroups()) {
    nlohmann::json members = nlohmann::json::array();
    for (Element e : s.members.members()) members.push_back(g.element_name(e));
    nlohmann::json gens = nlohmann::json::array();
    for (Element e : s.generators) gens.push_back(g.element_name(e));
    subs.push_back({{"id", s.id}, {"order", s.order()}, {"members", members},
                    {"generators", gens}});
  }
  nlohmann::json covers = nlohmann::json::array();
  for (const auto& c : lattice.covers())
    covers.push_back({{"lower", c.lower}, {"upper", c.upper}, {"index", c.index}});
  return {{"group", g.name()}, {"order", g.order()}, {"subgroups", subs},
          {"covers", covers}};
}

Group subgroup_as_group(const Group& g, const ElementSet& members,
                        std::vector<Element>* embedding) {
  auto elems = members.members();
  if (g.has_permutations()) {
    std::vector<Permutation> perms;
    for (Element e : elems) perms.push_back(g.permutation(e));
    // Elements of a permutation group are sorted by image list, so the
    // closure lists the same elements in the same order.
    Group sub = from_permutation_generators(perms, g.degree(), Limits{elems.size() + 1},
                                            g.name() + "/sub");
    if (embedding) *embedding = elems;
    return sub;
  }
  std::vector<std::size_t> pos(g.order(), 0);
  for (std::size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = i;
  std::vector<std::vector<long long>> table(elems.size(), std::vector<long long>(elems.size()));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    names.push_back(g.element_name(elems[i]));
    for (std::size_t j = 0; j < elems.size(); ++j)
      table[i][j] = static_cast<long long>(pos[g.multiply(elems[i], elems[j])]);
  }
  if (embedding) *embedding = elems;
  return validate_cayley_table(table, Limits{elems.size() + 1}, g.name() + "/sub", names);
}

Group quotient_group(const Group& g, const ElementSet& normal,
                     std::vector<Element>* projection) {
  const std::size_t n = g.order();
  std::vector<Element> coset_of(n, static_cast<Element>(n));
  std::vector<Element> reps;
  auto nmembers = normal.members();
  for (Element x = 0; x < n; ++x) {
    if (coset_of[x] != n) continue;
    auto idx = static_cast<Element>(reps.size());
    reps.push_back(x);
    for (Element h : nmembers) coset_of[g.multiply(h, x)] = idx;
  }
  const std::size_t m = reps.size();
  std::vector<std::vector<long long>> table(m, std::vector<long long>(m));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i) {
    names.push_back("[" + g.element_name(reps[i]) + "]");
    for (std::size_t j = 0; j < m; ++j)
      table[i][j] = coset_of[g.multiply(reps[i], reps[j])];
  }
  if (projection) *projection = coset_of;
  return validate_cayley_table(table, Limits{m + 1}, g.name() + "/quotient", names);
}

}  // namespace divgraph
