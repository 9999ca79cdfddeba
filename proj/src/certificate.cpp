#include "divgraph/certificate.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

#include "divgraph/catalog.hpp"
#include "divgraph/error.hpp"

namespace divgraph {

namespace {

using Cells = std::vector<std::uint32_t>;  // vertex -> first position of its cell

struct Adjacency {
  // (neighbor, code); code = 2*label for out-arcs, 2*label+1 for in-arcs
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> nbrs;
};

Adjacency build_adjacency(const ColoredDigraph& g) {
  Adjacency adj;
  adj.nbrs.resize(g.size());
  for (const auto& e : g.edges) {
    adj.nbrs[e.from].emplace_back(e.to, 2 * e.label);
    adj.nbrs[e.to].emplace_back(e.from, 2 * e.label + 1);
  }
  return adj;
}

// Equitable refinement driven by a queue of splitter cells: every cell is
// split by the sorted multiset of arc codes its vertices send into the
// splitter. Cells are named by their first position and the queue is
// processed in a position-determined order, so relabelled inputs give
// relabelled outputs. `seeds` lists the initial splitters (all cells if
// empty).
Cells refine(const Adjacency& adj, const Cells& cells, std::vector<std::uint32_t> seeds = {}) {
  const auto n = static_cast<std::uint32_t>(cells.size());
  std::vector<std::uint32_t> order(n), pos(n), cell(cells), end(n, 0);
  {
    std::vector<std::uint32_t> fill(n, 0);
    for (auto c : cells) ++end[c];
    for (std::uint32_t c = 0; c < n; ++c)
      if (end[c]) fill[c] = c, end[c] += c;
    for (std::uint32_t v = 0; v < n; ++v) {
      pos[v] = fill[cells[v]]++;
      order[pos[v]] = v;
    }
  }
  std::vector<bool> queued(n, false);
  std::vector<std::uint32_t> queue;
  if (seeds.empty()) {
    for (std::uint32_t p = 0; p < n; p = end[p]) queue.push_back(p);
  } else {
    std::sort(seeds.begin(), seeds.end());
    queue = std::move(seeds);
  }
  for (auto c : queue) queued[c] = true;

  std::vector<std::vector<std::uint32_t>> key(n);
  std::vector<std::uint32_t> touched, touched_cells;
  std::vector<bool> cell_touched(n, false);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const std::uint32_t w0 = queue[qi];
    queued[w0] = false;
    const std::uint32_t w1 = end[w0];
    for (std::uint32_t p = w0; p < w1; ++p) {
      for (auto [u, code] : adj.nbrs[order[p]]) {
        if (key[u].empty()) touched.push_back(u);
        key[u].push_back(code);
      }
    }
    for (auto u : touched) {
      std::sort(key[u].begin(), key[u].end());
      if (!cell_touched[cell[u]]) {
        cell_touched[cell[u]] = true;
        touched_cells.push_back(cell[u]);
      }
    }
    std::sort(touched_cells.begin(), touched_cells.end());
    for (auto c0 : touched_cells) {
      cell_touched[c0] = false;
      const std::uint32_t c1 = end[c0];
      if (c1 - c0 == 1) continue;
      auto first = order.begin() + c0, last = order.begin() + c1;
      std::sort(first, last, [&](std::uint32_t a, std::uint32_t b) { return key[a] < key[b]; });
      if (key[order[c0]] == key[order[c1 - 1]]) continue;
      std::uint32_t s = c0;
      for (std::uint32_t p = c0; p < c1; ++p) {
        if (p > c0 && key[order[p]] != key[order[p - 1]]) {
          end[s] = p;
          if (!queued[s]) queue.push_back(s), queued[s] = true;
          s = p;
        }
        cell[order[p]] = s;
        pos[order[p]] = p;
      }
      end[s] = c1;
      if (!queued[s]) queue.push_back(s), queued[s] = true;
    }
    touched_cells.clear();
    for (auto u : touched) key[u].clear();
    touched.clear();
  }
  return cell;
}

// Splits v off the front of its cell.
Cells individualize(Cells cells, std::uint32_t v) {
  const auto c = cells[v];
  for (auto& x : cells)
    if (x == c) x = c + 1;
  cells[v] = c;
  return cells;
}

class Search {
 public:
  Search(const ColoredDigraph& g, std::size_t budget)
      : g_(g), adj_(build_adjacency(g)), budget_(budget) {}

  CanonicalForm run() {
    const std::size_t n = g_.size();
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
      return g_.vertex_label[a] < g_.vertex_label[b];
    });
    Cells cells(n);
    for (std::size_t i = 0; i < n; ++i) {
      auto v = order[i];
      bool same = i > 0 && g_.vertex_label[v] == g_.vertex_label[order[i - 1]];
      cells[v] = same ? cells[order[i - 1]] : static_cast<std::uint32_t>(i);
    }
    std::vector<std::uint32_t> path;
    dfs(refine(adj_, cells), path);

    CanonicalForm out;
    out.labeling = best_lab_;
    out.code = best_code_;
    out.search_nodes = nodes_;
    out.automorphism_generators = autos_.size();
    return out;
  }

 private:
  std::vector<std::uint32_t> encode(const Cells& lab) const {
    const std::size_t n = g_.size();
    std::vector<std::uint32_t> code;
    code.reserve(1 + n + 3 * g_.edges.size());
    code.push_back(static_cast<std::uint32_t>(n));
    std::vector<std::uint32_t> by_pos(n);
    for (std::uint32_t v = 0; v < n; ++v) by_pos[lab[v]] = g_.vertex_label[v];
    code.insert(code.end(), by_pos.begin(), by_pos.end());
    std::vector<std::array<std::uint32_t, 3>> edges;
    edges.reserve(g_.edges.size());
    for (const auto& e : g_.edges) edges.push_back({lab[e.from], lab[e.to], e.label});
    std::sort(edges.begin(), edges.end());
    for (const auto& e : edges) code.insert(code.end(), e.begin(), e.end());
    return code;
  }

  static std::size_t common_prefix(const std::vector<std::uint32_t>& a,
                                   const std::vector<std::uint32_t>& b) {
    std::size_t k = 0;
    while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
    return k;
  }

  // Automorphism sending the current leaf onto a stored one.
  void record_automorphism(const Cells& lab, const Cells& target_lab) {
    const std::size_t n = lab.size();
    std::vector<std::uint32_t> at(n);
    for (std::uint32_t v = 0; v < n; ++v) at[target_lab[v]] = v;
    std::vector<std::uint32_t> gamma(n);
    bool identity = true;
    for (std::uint32_t v = 0; v < n; ++v) {
      gamma[v] = at[lab[v]];
      identity = identity && gamma[v] == v;
    }
    if (!identity) autos_.push_back(std::move(gamma));
  }

  std::size_t leaf(const Cells& lab, const std::vector<std::uint32_t>& path) {
    auto code = encode(lab);
    if (first_code_.empty()) {
      first_code_ = best_code_ = std::move(code);
      first_lab_ = best_lab_ = lab;
      first_path_ = best_path_ = path;
      return path.size();
    }
    if (code == first_code_) {
      record_automorphism(lab, first_lab_);
      return common_prefix(path, first_path_);
    }
    if (code < best_code_) {
      best_code_ = std::move(code);
      best_lab_ = lab;
      best_path_ = path;
      return path.size();
    }
    if (code == best_code_) {
      record_automorphism(lab, best_lab_);
      return common_prefix(path, best_path_);
    }
    return path.size();
  }

  // Orbits of the automorphisms found so far that fix `path` pointwise.
  std::vector<std::uint32_t> stabilizer_orbits(const std::vector<std::uint32_t>& path) const {
    const std::size_t n = g_.size();
    std::vector<std::uint32_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0u);
    auto find = [&](std::uint32_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& gamma : autos_) {
      bool fixes = std::all_of(path.begin(), path.end(),
                               [&](std::uint32_t v) { return gamma[v] == v; });
      if (!fixes) continue;
      for (std::uint32_t v = 0; v < n; ++v) {
        auto a = find(v), b = find(gamma[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (std::uint32_t v = 0; v < n; ++v) parent[v] = find(v);
    return parent;
  }

  std::size_t dfs(const Cells& cells, std::vector<std::uint32_t>& path) {
    if (++nodes_ > budget_) {
      throw Error(ErrorCode::CanonicalizationBudgetExceeded,
                  "search exceeded " + std::to_string(budget_) + " nodes");
    }
    const std::size_t level = path.size();
    const std::size_t n = cells.size();

    // Target: the smallest non-singleton cell, ties by position. Cells of
    // color vertices go first; fixing the colors leaves little to search.
    std::vector<std::uint32_t> size(n, 0);
    std::vector<bool> color_cell(n, false);
    for (std::uint32_t v = 0; v < n; ++v) {
      ++size[cells[v]];
      if (g_.vertex_label[v] % 2 == 0) color_cell[cells[v]] = true;
    }
    std::uint32_t target = static_cast<std::uint32_t>(n);
    auto better = [&](std::uint32_t c) {
      if (target == n) return true;
      if (color_cell[c] != color_cell[target]) return static_cast<bool>(color_cell[c]);
      return size[c] < size[target];
    };
    for (std::uint32_t c = 0; c < n; ++c)
      if (size[c] > 1 && better(c)) target = c;
    if (target == n) return leaf(cells, path);

    std::vector<std::uint32_t> candidates;
    for (std::uint32_t v = 0; v < n; ++v)
      if (cells[v] == target) candidates.push_back(v);

    // Children in one orbit of the known automorphisms fixing the path
    // pointwise root isomorphic subtrees; only the first one is searched.
    std::vector<std::uint32_t> explored;
    std::size_t autos_seen = 0;
    std::vector<std::uint32_t> orbit;
    for (auto v : candidates) {
      if (!explored.empty() && !autos_.empty()) {
        if (autos_seen != autos_.size()) {
          orbit = stabilizer_orbits(path);
          autos_seen = autos_.size();
        }
        bool redundant = std::any_of(explored.begin(), explored.end(),
                                     [&](std::uint32_t u) { return orbit[u] == orbit[v]; });
        if (redundant) continue;
      }
      path.push_back(v);
      auto r = dfs(refine(adj_, individualize(cells, v), {cells[v], cells[v] + 1}), path);
      path.pop_back();
      explored.push_back(v);
      if (r < level) return r;
    }
    return level;
  }

  const ColoredDigraph& g_;
  Adjacency adj_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  std::vector<std::uint32_t> first_code_, best_code_;
  Cells first_lab_, best_lab_;
  std::vector<std::uint32_t> first_path_, best_path_;
  std::vector<std::vector<std::uint32_t>> autos_;
};

void put_varint(std::vector<std::uint8_t>& out, std::uint64_t x) {
  while (x >= 0x80) {
    out.push_back(static_cast<std::uint8_t>(x | 0x80));
    x >>= 7;
  }
  out.push_back(static_cast<std::uint8_t>(x));
}

Certificate from_code(const std::vector<std::uint32_t>& code) {
  Certificate c;
  c.bytes.reserve(code.size() * 2);
  for (auto x : code) put_varint(c.bytes, x);
  return c;
}

// Vertex labels: color vertices are even, orbit vertices odd.
std::uint32_t color_label(std::size_t fixed_id_plus_one) {
  return static_cast<std::uint32_t>(2 * fixed_id_plus_one);
}
std::uint32_t orbit_label(std::size_t length) { return static_cast<std::uint32_t>(2 * length + 1); }

constexpr std::uint32_t kMembership = 0;

void append_component(ColoredDigraph& out, const USTComponent& comp,
                      const std::vector<std::uint32_t>& color_vertex) {
  std::vector<std::vector<std::uint32_t>> vid(comp.clusters.size());
  for (std::size_t h = 0; h < comp.clusters.size(); ++h) {
    for (const auto& o : comp.clusters[h]) {
      auto v = static_cast<std::uint32_t>(out.vertex_label.size());
      out.vertex_label.push_back(orbit_label(o.length()));
      out.edges.push_back({v, color_vertex[h], kMembership});
      vid[h].push_back(v);
    }
  }
  for (const auto& a : comp.arcs)
    out.edges.push_back({vid[a.lower.color][a.lower.orbit], vid[a.upper.color][a.upper.orbit],
                         a.label});
}

}  // namespace

CanonicalForm canonical_form(const ColoredDigraph& graph, std::size_t budget) {
  return Search(graph, budget).run();
}

ColoredDigraph to_colored_digraph(const DivisionGraph& dg, bool fixed_colors) {
  ColoredDigraph out;
  const std::size_t colors = dg.components.empty() ? 0 : dg.components.front().clusters.size();
  // Featureless colors still have two structural anchors: the base color
  // holds one vertex in every component and the top color has no arcs out.
  std::vector<bool> is_base(colors, true), is_top(colors, true);
  for (const auto& comp : dg.components) {
    for (std::size_t h = 0; h < colors; ++h)
      if (comp.clusters[h].size() != 1) is_base[h] = false;
    for (const auto& a : comp.arcs) is_top[a.lower.color] = false;
  }
  std::vector<std::uint32_t> color_vertex(colors);
  for (std::size_t h = 0; h < colors; ++h) {
    color_vertex[h] = static_cast<std::uint32_t>(h);
    std::size_t anchor = (is_base[h] ? 1 : 0) + (is_top[h] ? 2 : 0);
    out.vertex_label.push_back(color_label(fixed_colors ? h + 4 : anchor));
  }
  for (const auto& comp : dg.components) append_component(out, comp, color_vertex);
  return out;
}

ColoredDigraph to_colored_digraph(const USTComponent& comp,
                                  const std::vector<std::size_t>* color_ids) {
  ColoredDigraph out;
  std::vector<std::uint32_t> color_vertex(comp.clusters.size());
  for (std::size_t h = 0; h < comp.clusters.size(); ++h) {
    color_vertex[h] = static_cast<std::uint32_t>(h);
    out.vertex_label.push_back(color_label((color_ids ? (*color_ids)[h] : h) + 1));
  }
  append_component(out, comp, color_vertex);
  return out;
}

std::string Certificate::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string s;
  s.reserve(bytes.size() * 2);
  for (auto b : bytes) {
    s.push_back(digits[b >> 4]);
    s.push_back(digits[b & 15]);
  }
  return s;
}

Certificate certificate(const DivisionGraph& dg, std::size_t budget) {
  return from_code(canonical_form(to_colored_digraph(dg), budget).code);
}

Certificate component_certificate(const USTComponent& comp, std::size_t budget,
                                  const std::vector<std::size_t>* color_ids) {
  return from_code(canonical_form(to_colored_digraph(comp, color_ids), budget).code);
}

Comparison compare(const Group& a, const Group& b, const Limits& limits) {
  if (a.order() != b.order()) return Comparison::Different;
  auto ca = certificate(division_graph(a, limits), limits.search_budget);
  auto cb = certificate(division_graph(b, limits), limits.search_budget);
  return ca == cb ? Comparison::Same : Comparison::Different;
}

// ------------------------------------------------------------ table isomorphism

namespace {

// Generators chosen greedily from high-order elements.
std::vector<Element> greedy_generators(const Group& g) {
  std::vector<Element> elems(g.order());
  std::iota(elems.begin(), elems.end(), Element{0});
  std::vector<std::uint64_t> ord(g.order());
  for (Element e : elems) ord[e] = element_order(g, e);
  std::stable_sort(elems.begin(), elems.end(),
                   [&](Element x, Element y) { return ord[x] > ord[y]; });
  std::vector<Element> gens;
  ElementSet span = generate(g, {});
  for (Element e : elems) {
    if (span.contains(e)) continue;
    gens.push_back(e);
    span = generate(g, gens);
    if (span.count() == g.order()) break;
  }
  return gens;
}

// Extends images of gens[0..k) to the subgroup they generate; false when the
// assignment is not a well-defined injective homomorphism there.
bool extend(const Group& a, const Group& b, const std::vector<Element>& gens,
            const std::vector<Element>& images, std::size_t k) {
  const std::size_t n = a.order();
  std::vector<Element> map(n, static_cast<Element>(n));
  std::vector<bool> used(b.order(), false);
  map[a.identity()] = b.identity();
  used[b.identity()] = true;
  std::vector<Element> queue{a.identity()};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    Element x = queue[qi];
    for (std::size_t i = 0; i < k; ++i) {
      Element y = a.multiply(x, gens[i]);
      Element fy = b.multiply(map[x], images[i]);
      if (map[y] == n) {
        if (used[fy]) return false;
        used[fy] = true;
        map[y] = fy;
        queue.push_back(y);
      } else if (map[y] != fy) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

bool are_isomorphic(const Group& a, const Group& b) {
  if (a.order() != b.order()) return false;
  const std::size_t n = a.order();
  std::map<std::uint64_t, std::size_t> hist_a, hist_b;
  std::vector<std::uint64_t> ord_b(n);
  for (Element e = 0; e < n; ++e) {
    ++hist_a[element_order(a, e)];
    ord_b[e] = element_order(b, e);
    ++hist_b[ord_b[e]];
  }
  if (hist_a != hist_b) return false;
  if (n == 1) return true;

  auto gens = greedy_generators(a);
  std::vector<Element> images(gens.size());
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == gens.size()) return true;  // injective on all of a, orders equal
    const auto want = element_order(a, gens[i]);
    for (Element y = 0; y < n; ++y) {
      if (ord_b[y] != want) continue;
      images[i] = y;
      if (extend(a, b, gens, images, i + 1) && self(self, i + 1)) return true;
    }
    return false;
  };
  return rec(rec, 0);
}

ScanReport conjecture_scan(const std::vector<std::string>& descriptors, const Limits& limits) {
  ScanReport report;
  std::vector<Group> groups;
  std::vector<Certificate> certs;
  for (const auto& d : descriptors) {
    groups.push_back(catalog::from_descriptor(d, limits));
    certs.push_back(certificate(division_graph(groups.back(), limits), limits.search_budget));
    report.groups.push_back({d, groups.back().order(), certs.back().hex()});
  }

  const std::size_t m = groups.size();
  std::vector<std::size_t> iso_class(m);
  std::iota(iso_class.begin(), iso_class.end(), std::size_t{0});
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (groups[i].order() != groups[j].order()) continue;
      bool iso = are_isomorphic(groups[i], groups[j]);
      bool same = certs[i] == certs[j];
      if (iso) iso_class[j] = std::min(iso_class[j], iso_class[i]);
      if (same && !iso) report.collisions.emplace_back(descriptors[i], descriptors[j]);
      if (!same && iso) report.invariance_failures.emplace_back(descriptors[i], descriptors[j]);
    }
  }
  std::vector<std::size_t> roots(iso_class);
  std::sort(roots.begin(), roots.end());
  report.isomorphism_classes =
      static_cast<std::size_t>(std::unique(roots.begin(), roots.end()) - roots.begin());
  std::vector<std::vector<std::uint8_t>> distinct;
  for (const auto& c : certs) distinct.push_back(c.bytes);
  std::sort(distinct.begin(), distinct.end());
  report.distinct_certificates =
      static_cast<std::size_t>(std::unique(distinct.begin(), distinct.end()) - distinct.begin());
  return report;
}

nlohmann::json scan_to_json(const ScanReport& report) {
  nlohmann::json groups = nlohmann::json::array();
  for (const auto& e : report.groups)
    groups.push_back(
        {{"descriptor", e.descriptor}, {"order", e.order}, {"certificate", e.certificate_hex}});
  auto pairs = [](const auto& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [x, y] : v) arr.push_back({x, y});
    return arr;
  };
  return {{"groups", groups},
          {"collisions", pairs(report.collisions)},
          {"invariance_failures", pairs(report.invariance_failures)},
          {"isomorphism_classes", report.isomorphism_classes},
          {"distinct_certificates", report.distinct_certificates},
          {"conjecture_holds", report.collisions.empty()}};
}

}  // namespace divgraph
