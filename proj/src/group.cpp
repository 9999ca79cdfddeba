#include "divgraph/group.hpp"

#include <algorithm>
#include <numeric>
#include <bit>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "divgraph/error.hpp"

namespace divgraph {

// ---------------------------------------------------------------- Permutation

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0u);
}

Permutation Permutation::from_images(std::vector<std::uint32_t> images) {
  std::vector<bool> seen(images.size(), false);
  for (std::size_t i = 0; i < images.size(); ++i) {
    auto x = images[i];
    if (x >= images.size() || seen[x]) {
      throw Error(ErrorCode::ParseError,
                  "image list is not a bijection at point " +
                      std::to_string(i + 1));
    }
    seen[x] = true;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_one_based(const std::vector<int>& images) {
  std::vector<std::uint32_t> zero(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i] < 1 || static_cast<std::size_t>(images[i]) > images.size()) {
      throw Error(ErrorCode::ParseError,
                  "image " + std::to_string(images[i]) + " of point " +
                      std::to_string(i + 1) + " is out of range");
    }
    zero[i] = static_cast<std::uint32_t>(images[i] - 1);
  }
  return from_images(std::move(zero));
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<int>>& cycles) {
  Permutation result(degree);
  for (const auto& cyc : cycles) {
    Permutation c(degree);
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int from = cyc[i];
      int to = cyc[(i + 1) % cyc.size()];
      if (from < 1 || to < 1 || static_cast<std::size_t>(from) > degree ||
          static_cast<std::size_t>(to) > degree) {
        throw Error(ErrorCode::ParseError,
                    "cycle point out of range for degree " +
                        std::to_string(degree));
      }
      c.images_[static_cast<std::size_t>(from - 1)] =
          static_cast<std::uint32_t>(to - 1);
    }
    // a cycle with a repeated point is not a bijection
    c = from_images(c.images_);
    result = result * c;
  }
  return result;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) out.images_[x] = images_[rhs.images_[x]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x)
    out.images_[images_[x]] = static_cast<std::uint32_t>(x);
  return out;
}

Permutation Permutation::pow(long long k) const {
  Permutation base = k < 0 ? inverse() : *this;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1
                               : static_cast<unsigned long long>(k);
  Permutation acc(degree());
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<int> cyc;
    for (std::size_t x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      cyc.push_back(static_cast<int>(x) + 1);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

CycleType Permutation::cycle_type() const {
  CycleType parts;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (std::size_t x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    parts.push_back(len);
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return parts;
}

bool Permutation::is_even() const {
  std::size_t transpositions = 0;
  for (int part : cycle_type()) transpositions += static_cast<std::size_t>(part - 1);
  return transpositions % 2 == 0;
}

std::uint64_t Permutation::order() const {
  std::uint64_t l = 1;
  for (int part : cycle_type()) l = std::lcm(l, static_cast<std::uint64_t>(part));
  return l;
}

std::string Permutation::to_string() const {
  auto cyc = cycles();
  if (cyc.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cyc) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
    os << ')';
  }
  return os.str();
}

CycleType cycle_type(const Permutation& p) { return p.cycle_type(); }

// ---------------------------------------------------------------------- Group

std::optional<Element> Group::find_element(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<Element>(i);
  return std::nullopt;
}

std::vector<std::vector<Element>> Group::table() const {
  std::vector<std::vector<Element>> out(order_);
  for (std::size_t a = 0; a < order_; ++a) {
    auto r = row(static_cast<Element>(a));
    out[a].assign(r.begin(), r.end());
  }
  return out;
}

ElementSet Group::all_elements() const {
  ElementSet s(order_);
  for (std::size_t a = 0; a < order_; ++a) s.insert(static_cast<Element>(a));
  return s;
}

Group Group::relabeled(const std::vector<Element>& perm) const {
  if (perm.size() != order_ || (order_ && perm[0] != 0)) {
    throw Error(ErrorCode::NoIdentity, "relabelling must fix the identity");
  }
  Group out = *this;
  for (std::size_t a = 0; a < order_; ++a) {
    for (std::size_t b = 0; b < order_; ++b) {
      out.table_[perm[a] * order_ + perm[b]] = perm[table_[a * order_ + b]];
    }
    out.inverse_[perm[a]] = perm[inverse_[a]];
    out.names_[perm[a]] = names_[a];
    if (!perms_.empty()) out.perms_[perm[a]] = perms_[a];
  }
  return out;
}

Group Group::renamed(std::string name) const {
  Group out = *this;
  out.name_ = std::move(name);
  return out;
}

namespace {

std::string cell(std::size_t r, std::size_t c) {
  return "(" + std::to_string(r) + "," + std::to_string(c) + ")";
}

}  // namespace

Group validate_cayley_table(const std::vector<std::vector<long long>>& raw,
                            const Limits& limits, std::string name,
                            std::vector<std::string> names) {
  const std::size_t n = raw.size();
  if (n == 0) throw Error(ErrorCode::NotClosed, "empty table");
  if (n > limits.order_cap) {
    throw Error(ErrorCode::OrderCapExceeded,
                "order " + std::to_string(n) + " exceeds cap " +
                    std::to_string(limits.order_cap));
  }
  if (!names.empty() && names.size() != n) {
    throw Error(ErrorCode::ParseError, "expected " + std::to_string(n) +
                                           " element names, got " +
                                           std::to_string(names.size()));
  }

  std::vector<Element> t(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (raw[r].size() != n) {
      throw Error(ErrorCode::NotClosed, "row " + std::to_string(r) + " has " +
                                            std::to_string(raw[r].size()) +
                                            " entries, expected " +
                                            std::to_string(n));
    }
    for (std::size_t c = 0; c < n; ++c) {
      long long v = raw[r][c];
      if (v < 0 || static_cast<std::size_t>(v) >= n) {
        throw Error(ErrorCode::NotClosed,
                    "cell " + cell(r, c) + " holds " + std::to_string(v) +
                        ", outside 0.." + std::to_string(n - 1));
      }
      t[r * n + c] = static_cast<Element>(v);
    }
  }

  // Latin square: every row and column is a permutation of 0..n-1.
  std::vector<std::size_t> seen_at(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::fill(seen_at.begin(), seen_at.end(), n);
    for (std::size_t c = 0; c < n; ++c) {
      auto v = t[r * n + c];
      if (seen_at[v] != n) {
        throw Error(ErrorCode::NotClosed,
                    "not a Latin square: row " + std::to_string(r) +
                        " repeats " + std::to_string(v) + " at cells " +
                        cell(r, seen_at[v]) + " and " + cell(r, c));
      }
      seen_at[v] = c;
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::fill(seen_at.begin(), seen_at.end(), n);
    for (std::size_t r = 0; r < n; ++r) {
      auto v = t[r * n + c];
      if (seen_at[v] != n) {
        throw Error(ErrorCode::NotClosed,
                    "not a Latin square: column " + std::to_string(c) +
                        " repeats " + std::to_string(v) + " at cells " +
                        cell(seen_at[v], c) + " and " + cell(r, c));
      }
      seen_at[v] = r;
    }
  }

  std::optional<std::size_t> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      ok = t[e * n + x] == x && t[x * n + e] == x;
    if (ok) identity = e;
  }
  if (!identity) throw Error(ErrorCode::NoIdentity, "no two-sided identity element");

  if (names.empty()) {
    names.resize(n);
    for (std::size_t i = 0; i < n; ++i) names[i] = "g" + std::to_string(i);
  }

  // Move the identity to index 0 by swapping it with element 0.
  std::vector<Element> relabel(n);
  std::iota(relabel.begin(), relabel.end(), 0u);
  std::swap(relabel[0], relabel[*identity]);
  std::vector<Element> norm(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      norm[relabel[a] * n + relabel[b]] = relabel[t[a * n + b]];
  std::swap(names[0], names[*identity]);

  std::vector<Element> inv(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t b = 0;
    while (norm[a * n + b] != 0) ++b;
    if (norm[b * n + a] != 0) {
      throw Error(ErrorCode::NoInverse,
                  "element " + names[a] + " has right inverse " + names[b] +
                      " that is not a left inverse");
    }
    inv[a] = static_cast<Element>(b);
  }

  auto check_triple = [&](std::size_t a, std::size_t b, std::size_t c) {
    auto ab = norm[a * n + b];
    auto bc = norm[b * n + c];
    if (norm[ab * n + c] != norm[a * n + bc]) {
      throw Error(ErrorCode::NotAssociative,
                  "(" + names[a] + "*" + names[b] + ")*" + names[c] + " != " +
                      names[a] + "*(" + names[b] + "*" + names[c] + ")");
    }
  };
  if (n < limits.exhaustive_associativity_below) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) check_triple(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eed0000u + n);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    const std::size_t samples = 10 * n * n;
    for (std::size_t s = 0; s < samples; ++s) check_triple(pick(rng), pick(rng), pick(rng));
  }

  Group g;
  g.name_ = std::move(name);
  g.order_ = n;
  g.table_ = std::move(norm);
  g.inverse_ = std::move(inv);
  g.names_ = std::move(names);
  return g;
}

namespace {

// Packs small permutations into one integer for fast lookup.
class PermIndex {
 public:
  explicit PermIndex(std::size_t degree) {
    bits_ = std::max<std::size_t>(1, std::bit_width(degree ? degree - 1 : 0));
    packed_ = degree * bits_ <= 64;
  }

  void insert(const Permutation& p, Element e) {
    if (packed_) small_.emplace(pack(p), e);
    else large_.emplace(p.images(), e);
  }

  Element at(const Permutation& p) const {
    return packed_ ? small_.at(pack(p)) : large_.at(p.images());
  }

 private:
  struct VecHash {
    std::size_t operator()(const std::vector<std::uint32_t>& v) const {
      std::size_t h = 0;
      for (auto x : v) h = h * 1000003u + x;
      return h;
    }
  };

  std::uint64_t pack(const Permutation& p) const {
    std::uint64_t key = 0;
    for (auto x : p.images()) key = (key << bits_) | x;
    return key;
  }

  std::size_t bits_;
  bool packed_;
  std::unordered_map<std::uint64_t, Element> small_;
  std::unordered_map<std::vector<std::uint32_t>, Element, VecHash> large_;
};

}  // namespace

Group from_permutation_generators(const std::vector<Permutation>& gens,
                                  std::size_t degree, const Limits& limits,
                                  std::string name) {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].degree() != degree) {
      throw Error(ErrorCode::DegreeMismatch,
                  "generator " + std::to_string(i) + " has degree " +
                      std::to_string(gens[i].degree()) + ", expected " +
                      std::to_string(degree));
    }
  }

  std::vector<Permutation> elements{Permutation(degree)};
  std::set<std::vector<std::uint32_t>> seen{elements.front().images()};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : gens) {
      Permutation next = elements[head] * g;
      if (seen.insert(next.images()).second) {
        if (elements.size() >= limits.order_cap) {
          throw Error(ErrorCode::OrderCapExceeded,
                      "permutation closure exceeds cap " +
                          std::to_string(limits.order_cap));
        }
        elements.push_back(std::move(next));
      }
    }
  }
  std::sort(elements.begin(), elements.end());

  const std::size_t n = elements.size();
  PermIndex index(degree);
  for (std::size_t i = 0; i < n; ++i) index.insert(elements[i], static_cast<Element>(i));

  Group g;
  g.name_ = std::move(name);
  g.order_ = n;
  g.degree_ = degree;
  g.table_.resize(n * n);
  g.inverse_.resize(n);
  g.names_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      g.table_[a * n + b] = index.at(elements[a] * elements[b]);
    g.inverse_[a] = index.at(elements[a].inverse());
    g.names_[a] = elements[a].to_string();
  }
  g.perms_ = std::move(elements);
  return g;
}

std::uint64_t element_order(const Group& g, Element a) {
  std::uint64_t m = 1;
  for (Element x = a; x != g.identity(); x = g.multiply(x, a)) ++m;
  return m;
}

Element conjugate(const Group& g, Element a, Element s) {
  return g.multiply(g.multiply(g.inverse(s), a), s);
}

Element power(const Group& g, Element a, long long k) {
  Element base = k < 0 ? g.inverse(a) : a;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1
                               : static_cast<unsigned long long>(k);
  Element acc = g.identity();
  while (e) {
    if (e & 1) acc = g.multiply(acc, base);
    base = g.multiply(base, base);
    e >>= 1;
  }
  return acc;
}

ElementSet generate(const Group& g, std::span<const Element> gens) {
  ElementSet set(g.order());
  std::vector<Element> queue{g.identity()};
  set.insert(g.identity());
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

ElementSet cyclic_subgroup(const Group& g, Element a) {
  ElementSet set(g.order());
  Element x = g.identity();
  do {
    set.insert(x);
    x = g.multiply(x, a);
  } while (x != g.identity());
  return set;
}

bool is_abelian(const Group& g) {
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = a + 1; b < g.order(); ++b)
      if (g.multiply(static_cast<Element>(a), static_cast<Element>(b)) !=
          g.multiply(static_cast<Element>(b), static_cast<Element>(a)))
        return false;
  return true;
}

}  // namespace divgraph
