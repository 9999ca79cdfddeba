#include "divgraph/divisions.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "divgraph/error.hpp"

namespace divgraph {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    // the smaller root wins so roots are minimal members
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

std::vector<ConjugacyClass> classes_from(UnionFind& uf, std::size_t n) {
  std::vector<ConjugacyClass> out;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    auto root = uf.find(x);
    if (slot[root] == n) {
      slot[root] = out.size();
      out.push_back({static_cast<Element>(root), {}});
    }
    out[slot[root]].members.push_back(static_cast<Element>(x));
  }
  return out;
}

}  // namespace

bool Division::contains(Element e) const {
  return std::binary_search(members.begin(), members.end(), e);
}

std::vector<ConjugacyClass> conjugacy_classes(const Group& g) {
  const std::size_t n = g.order();
  UnionFind uf(n);
  std::vector<bool> done(n, false);
  for (Element a = 0; a < n; ++a) {
    if (done[a]) continue;
    for (Element s = 0; s < n; ++s) {
      Element c = conjugate(g, a, s);
      done[c] = true;
      uf.unite(a, c);
    }
  }
  return classes_from(uf, n);
}

std::vector<ConjugacyClass> golomb_classes(const Group& g) {
  const std::size_t n = g.order();
  UnionFind uf(n);
  std::unordered_map<std::uint64_t, std::size_t> mirrored;
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      Element c = g.multiply(a, b), d = g.multiply(b, a);
      ++mirrored[static_cast<std::uint64_t>(c) * n + d];
      uf.unite(c, d);
    }
  }
  auto classes = classes_from(uf, n);
  for (const auto& cls : classes) {
    for (Element d : cls.members) {
      auto k = mirrored.at(static_cast<std::uint64_t>(cls.representative) * n + d);
      if (k == 0 || n % k != 0 || n / k != cls.members.size()) {
        throw Error(ErrorCode::MalformedGraph,
                    "mirrored pair (" + g.element_name(cls.representative) + "," +
                        g.element_name(d) + ") seen " + std::to_string(k) +
                        " times does not match class size " +
                        std::to_string(cls.members.size()));
      }
    }
  }
  return classes;
}

std::vector<Division> divisions(const Group& g, const std::vector<ConjugacyClass>& classes) {
  std::vector<std::size_t> class_of(g.order());
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (Element e : classes[c].members) class_of[e] = c;

  UnionFind uf(classes.size());
  for (std::size_t c = 0; c < classes.size(); ++c) {
    Element rep = classes[c].representative;
    std::uint64_t m = element_order(g, rep);
    Element x = rep;
    for (std::uint64_t k = 1; k <= m; ++k, x = g.multiply(x, rep))
      if (std::gcd(k, m) == 1) uf.unite(c, class_of[x]);
  }

  std::vector<Division> out;
  std::vector<std::size_t> slot(classes.size(), classes.size());
  for (std::size_t c = 0; c < classes.size(); ++c) {
    auto root = uf.find(c);
    if (slot[root] == classes.size()) {
      slot[root] = out.size();
      out.push_back({});
    }
    auto& d = out[slot[root]];
    d.classes.push_back(c);
    d.members.insert(d.members.end(), classes[c].members.begin(), classes[c].members.end());
  }
  for (auto& d : out) {
    std::sort(d.members.begin(), d.members.end());
    d.representative = d.members.front();
    d.common_order = element_order(g, d.representative);
  }
  std::sort(out.begin(), out.end(), [](const Division& a, const Division& b) {
    return a.representative < b.representative;
  });
  return out;
}

std::vector<Division> divisions(const Group& g) {
  return divisions(g, conjugacy_classes(g));
}

Division division_of(const Group& g, Element e) {
  for (auto& d : divisions(g))
    if (d.contains(e)) return d;
  throw Error(ErrorCode::MalformedGraph, "element outside every division");
}

// ------------------------------------------------------------------ A_n theory

namespace {

std::size_t type_degree(const CycleType& type) {
  return static_cast<std::size_t>(std::accumulate(type.begin(), type.end(), 0));
}

bool type_is_even(const CycleType& type) {
  std::size_t moves = 0;
  for (int part : type) moves += static_cast<std::size_t>(part - 1);
  return moves % 2 == 0;
}

std::string type_string(const CycleType& type) {
  std::string s = "(";
  for (std::size_t i = 0; i < type.size(); ++i) s += (i ? "," : "") + std::to_string(type[i]);
  return s + ")";
}

// Cycles including fixed points, each started at its minimal point and
// sorted by (length, minimal point).
std::vector<std::vector<std::uint32_t>> full_cycles(const Permutation& p) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<bool> seen(p.degree(), false);
  for (std::uint32_t start = 0; start < p.degree(); ++start) {
    if (seen[start]) continue;
    std::vector<std::uint32_t> cyc;
    for (auto x = start; !seen[x]; x = p[x]) {
      seen[x] = true;
      cyc.push_back(x);
    }
    out.push_back(std::move(cyc));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a.front() < b.front();
  });
  return out;
}

void distinct_odd_partitions(std::size_t remaining, int max_part, CycleType& cur,
                             std::vector<CycleType>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min<int>(max_part, static_cast<int>(remaining)); part >= 1; --part) {
    if (part % 2 == 0) continue;
    cur.push_back(part);
    distinct_odd_partitions(remaining - static_cast<std::size_t>(part), part - 2, cur, out);
    cur.pop_back();
  }
}

Permutation type_representative(const CycleType& type) {
  std::vector<std::vector<int>> cycles;
  int next = 1;
  for (int part : type) {
    std::vector<int> cyc;
    for (int i = 0; i < part; ++i) cyc.push_back(next++);
    if (part > 1) cycles.push_back(std::move(cyc));
  }
  return Permutation::from_cycles(type_degree(type), cycles);
}

}  // namespace

bool class_splits_in_alternating(const CycleType& type) {
  if (!type_is_even(type)) {
    throw Error(ErrorCode::NotEvenClass,
                "cycle type " + type_string(type) + " consists of odd permutations");
  }
  for (std::size_t i = 0; i < type.size(); ++i) {
    if (type[i] % 2 == 0) return false;
    if (i > 0 && type[i] == type[i - 1]) return false;
  }
  return true;
}

bool split_class_inverse_closed(const CycleType& type) {
  if (!class_splits_in_alternating(type)) {
    throw Error(ErrorCode::NotSplitClass,
                "cycle type " + type_string(type) + " does not split in A_n");
  }
  auto threes = std::count_if(type.begin(), type.end(), [](int p) { return p % 4 == 3; });
  return threes % 2 == 0;
}

bool ambivalent_alternating(std::size_t n) {
  std::vector<CycleType> split_types;
  CycleType cur;
  distinct_odd_partitions(n, static_cast<int>(n), cur, split_types);
  return std::all_of(split_types.begin(), split_types.end(),
                     [](const CycleType& t) { return split_class_inverse_closed(t); });
}

Permutation standard_conjugator(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree() || p.cycle_type() != q.cycle_type()) {
    throw Error(ErrorCode::TypeMismatch, p.to_string() + " and " + q.to_string() +
                                             " have different cycle types");
  }
  auto pc = full_cycles(p), qc = full_cycles(q);
  std::vector<std::uint32_t> images(p.degree());
  for (std::size_t c = 0; c < pc.size(); ++c)
    for (std::size_t j = 0; j < pc[c].size(); ++j) images[pc[c][j]] = qc[c][j];
  return Permutation::from_images(std::move(images));
}

bool same_class_in_alternating(const Permutation& p, const Permutation& q) {
  if (!p.is_even() || !q.is_even()) {
    throw Error(ErrorCode::TypeMismatch, "both permutations must be even");
  }
  auto tau = standard_conjugator(p, q);
  if (!class_splits_in_alternating(p.cycle_type())) return true;
  // The S_n centralizer of a split-class element lies in A_n, so every
  // conjugator taking p to q has the parity of this one.
  return tau.is_even();
}

std::vector<CycleType> partitions(std::size_t n) {
  std::vector<CycleType> out;
  CycleType cur;
  auto rec = [&](auto&& self, std::size_t remaining, int max_part) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = std::min<int>(max_part, static_cast<int>(remaining)); part >= 1; --part) {
      cur.push_back(part);
      self(self, remaining - static_cast<std::size_t>(part), part);
      cur.pop_back();
    }
  };
  rec(rec, n, static_cast<int>(n));
  return out;
}

std::map<CycleType, int> alternating_divisions_by_type(std::size_t n, std::size_t cap) {
  if (n > cap) {
    throw Error(ErrorCode::OrderCapExceeded,
                "degree " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  }
  std::map<CycleType, int> out;
  for (auto& type : partitions(n)) {
    if (!type_is_even(type)) continue;
    if (!class_splits_in_alternating(type)) {
      out[type] = 1;
      continue;
    }
    // Two divisions exactly when no coprime power of pi leaves its A_n class.
    Permutation pi = type_representative(type);
    std::uint64_t ord = pi.order();
    bool stays = true;
    for (std::uint64_t k = 2; k < ord && stays; ++k)
      if (std::gcd(k, ord) == 1)
        stays = same_class_in_alternating(pi, pi.pow(static_cast<long long>(k)));
    out[type] = stays ? 2 : 1;
  }
  return out;
}

nlohmann::json divisions_to_json(const Group& g, const std::vector<Division>& divs) {
  auto classes = conjugacy_classes(g);
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& d : divs) {
    nlohmann::json members = nlohmann::json::array();
    for (Element e : d.members) members.push_back(g.element_name(e));
    nlohmann::json reps = nlohmann::json::array();
    for (auto c : d.classes) reps.push_back(g.element_name(classes[c].representative));
    arr.push_back({{"representative", g.element_name(d.representative)},
                   {"members", members},
                   {"classes", reps},
                   {"common_order", d.common_order}});
  }
  return {{"group", g.name()}, {"order", g.order()}, {"divisions", arr}};
}

}  // namespace divgraph
