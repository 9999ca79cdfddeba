#include "divgraph/analysis.hpp"

#include <algorithm>
#include <numeric>

#include "divgraph/certificate.hpp"
#include "divgraph/divisions.hpp"
#include "divgraph/error.hpp"

namespace divgraph {

namespace {

std::size_t color_count(const DivisionGraph& dg) {
  if (dg.components.empty()) throw Error(ErrorCode::MalformedGraph, "no components");
  const std::size_t colors = dg.components.front().clusters.size();
  for (const auto& c : dg.components)
    if (c.clusters.size() != colors)
      throw Error(ErrorCode::MalformedGraph, "components disagree on the color count");
  return colors;
}

// Smallest prime factor, or 0 when n is not a prime power above 1.
std::uint64_t prime_of_power(std::uint64_t n) {
  if (n < 2) return 0;
  std::uint64_t p = 2;
  while (n % p != 0) ++p;
  while (n % p == 0) n /= p;
  return n == 1 ? p : 0;
}

ElementSet commutator(const Group& g, const ElementSet& a, const ElementSet& b) {
  std::vector<Element> gens;
  ElementSet seen(g.order());
  for (Element x : a.members()) {
    for (Element y : b.members()) {
      Element c = g.multiply(g.multiply(g.inverse(x), g.inverse(y)), g.multiply(x, y));
      if (!seen.contains(c)) {
        seen.insert(c);
        gens.push_back(c);
      }
    }
  }
  return generate(g, gens);
}

std::vector<std::uint32_t> labelled_key(const Restriction& r) {
  std::vector<std::uint32_t> key;
  for (std::size_t i = 0; i < r.colors.size(); ++i) {
    key.push_back(static_cast<std::uint32_t>(r.colors[i]));
    key.push_back(static_cast<std::uint32_t>(r.component.clusters[i].size()));
    for (const auto& o : r.component.clusters[i]) key.push_back(static_cast<std::uint32_t>(o.length()));
  }
  for (const auto& a : r.component.arcs) {
    key.insert(key.end(), {static_cast<std::uint32_t>(a.lower.color), a.lower.orbit,
                           static_cast<std::uint32_t>(a.upper.color), a.upper.orbit, a.label});
  }
  return key;
}

Orbit placeholder_orbit(std::size_t length) {
  Orbit o;
  o.cosets.resize(length);
  std::iota(o.cosets.begin(), o.cosets.end(), 0u);
  return o;
}

// Copies the vertices selected by `keep` in colors `colors` into a piece;
// lengths are divided by `base_length`.
Restriction cut(const USTComponent& comp, const std::vector<Color>& colors,
                const std::vector<std::vector<bool>>& keep, std::size_t base_length) {
  Restriction r;
  r.colors = colors;
  r.component.division_rep = comp.division_rep;
  r.component.clusters.resize(colors.size());
  std::vector<std::size_t> local(comp.clusters.size(), colors.size());
  for (std::size_t i = 0; i < colors.size(); ++i) local[colors[i]] = i;
  std::vector<std::vector<std::uint32_t>> renum(comp.clusters.size());
  for (std::size_t i = 0; i < colors.size(); ++i) {
    const Color c = colors[i];
    renum[c].assign(comp.clusters[c].size(), 0);
    for (std::uint32_t o = 0; o < comp.clusters[c].size(); ++o) {
      if (!keep[c][o]) continue;
      renum[c][o] = static_cast<std::uint32_t>(r.component.clusters[i].size());
      r.component.clusters[i].push_back(placeholder_orbit(comp.clusters[c][o].length() / base_length));
    }
  }
  for (const auto& a : comp.arcs) {
    const auto li = local[a.lower.color], ui = local[a.upper.color];
    if (li == colors.size() || ui == colors.size()) continue;
    if (!keep[a.lower.color][a.lower.orbit] || !keep[a.upper.color][a.upper.orbit]) continue;
    r.component.arcs.push_back({{li, renum[a.lower.color][a.lower.orbit]},
                                {ui, renum[a.upper.color][a.upper.orbit]},
                                a.label});
  }
  std::sort(r.component.arcs.begin(), r.component.arcs.end());
  return r;
}

}  // namespace

// ------------------------------------------------------------------ recovery

Color LatticeSketch::join(const std::vector<Color>& colors) const {
  Color best = base;
  for (Color c = 0; c < color_count; ++c) {
    bool upper_bound = std::all_of(colors.begin(), colors.end(),
                                   [&](Color x) { return contains[c][x]; });
    if (upper_bound && order[c] < order[best]) best = c;
  }
  return best;
}

std::size_t identity_component(const DivisionGraph& dg) {
  std::vector<std::size_t> found;
  for (std::size_t i = 0; i < dg.components.size(); ++i) {
    const auto& arcs = dg.components[i].arcs;
    if (std::all_of(arcs.begin(), arcs.end(), [](const SplitArc& a) { return a.label == 1; }))
      found.push_back(i);
  }
  if (found.size() != 1) {
    throw Error(ErrorCode::MalformedGraph, std::to_string(found.size()) +
                                               " components have only arcs labelled 1");
  }
  return found.front();
}

LatticeSketch recover_lattice(const DivisionGraph& dg) {
  const std::size_t colors = color_count(dg);
  const auto& id = dg.components[identity_component(dg)];
  LatticeSketch s;
  s.color_count = colors;

  std::vector<bool> is_base(colors, true), is_top(colors, true);
  for (const auto& comp : dg.components) {
    for (Color c = 0; c < colors; ++c)
      if (comp.clusters[c].size() != 1) is_base[c] = false;
    for (const auto& a : comp.arcs) is_top[a.lower.color] = false;
  }
  auto unique = [&](const std::vector<bool>& flag, const char* what) {
    if (std::count(flag.begin(), flag.end(), true) != 1)
      throw Error(ErrorCode::MalformedGraph, std::string("no unique ") + what + " color");
    return static_cast<Color>(std::find(flag.begin(), flag.end(), true) - flag.begin());
  };
  s.base = unique(is_base, "base");
  s.top = unique(is_top, "top");

  const std::size_t n = id.clusters[s.top].size();
  s.order.resize(colors);
  for (Color c = 0; c < colors; ++c) {
    const std::size_t index = id.clusters[c].size();
    if (index == 0 || n % index != 0)
      throw Error(ErrorCode::MalformedGraph, "cluster size does not divide the order");
    s.order[c] = n / index;
  }

  // Relative index: labels out of one vertex into the smaller color, summed.
  std::map<std::pair<Color, Color>, std::size_t> index;
  for (const auto& a : id.arcs)
    if (a.lower.orbit == 0) index[{a.lower.color, a.upper.color}] += a.label;
  for (const auto& [pair, idx] : index) s.covers.push_back({pair.first, pair.second, idx});

  s.contains.assign(colors, std::vector<bool>(colors, false));
  std::vector<std::vector<Color>> up(colors);
  for (const auto& c : s.covers) up[c.lower].push_back(c.upper);
  for (Color a = 0; a < colors; ++a) {
    std::vector<Color> stack{a};
    s.contains[a][a] = true;
    while (!stack.empty()) {
      Color x = stack.back();
      stack.pop_back();
      for (Color y : up[x])
        if (!s.contains[a][y]) s.contains[a][y] = true, stack.push_back(y);
    }
  }
  return s;
}

std::size_t recover_order(const DivisionGraph& dg) {
  const auto& id = dg.components[identity_component(dg)];
  // The top color is the one that never has arcs leaving it.
  const std::size_t colors = color_count(dg);
  std::vector<bool> is_top(colors, true);
  for (const auto& comp : dg.components)
    for (const auto& a : comp.arcs) is_top[a.lower.color] = false;
  if (std::count(is_top.begin(), is_top.end(), true) != 1)
    throw Error(ErrorCode::MalformedGraph, "no unique top color");
  auto top = static_cast<Color>(std::find(is_top.begin(), is_top.end(), true) - is_top.begin());
  return id.clusters[top].size();
}

std::set<Color> recover_normal_colors(const DivisionGraph& dg) {
  const std::size_t colors = color_count(dg);
  std::set<Color> out;
  for (Color c = 0; c < colors; ++c) {
    bool normal = std::all_of(dg.components.begin(), dg.components.end(), [&](const auto& comp) {
      const auto& cl = comp.clusters[c];
      return std::all_of(cl.begin(), cl.end(),
                         [&](const Orbit& o) { return o.length() == cl.front().length(); });
    });
    if (normal) out.insert(c);
  }
  return out;
}

CyclicColors recover_cyclic_colors(const DivisionGraph& dg) {
  const auto sketch = recover_lattice(dg);
  const std::size_t colors = sketch.color_count;
  // Arcs run from larger to smaller subgroups, so smaller orders go first.
  std::vector<Color> by_order(colors);
  std::iota(by_order.begin(), by_order.end(), Color{0});
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](Color a, Color b) { return sketch.order[a] < sketch.order[b]; });

  CyclicColors out;
  for (const auto& comp : dg.components) {
    const std::size_t tops = comp.clusters[sketch.top].size();
    std::vector<std::vector<ElementSet>> reach(colors);
    std::vector<std::vector<std::vector<VertexRef>>> succ(colors);
    for (Color c = 0; c < colors; ++c) succ[c].resize(comp.clusters[c].size());
    for (const auto& a : comp.arcs) succ[a.lower.color][a.lower.orbit].push_back(a.upper);

    std::set<Color> witnesses;
    for (Color c : by_order) {
      reach[c].assign(comp.clusters[c].size(), ElementSet(tops));
      for (std::uint32_t o = 0; o < comp.clusters[c].size(); ++o) {
        if (c == sketch.top) {
          reach[c][o].insert(o);
        } else {
          for (const auto& v : succ[c][o]) reach[c][o] |= reach[v.color][v.orbit];
        }
        if (reach[c][o].count() == 1) witnesses.insert(c);
      }
    }
    std::set<Color> family;
    for (Color c : witnesses) {
      bool maximal = std::none_of(witnesses.begin(), witnesses.end(), [&](Color d) {
        return d != c && sketch.contains[d][c];
      });
      if (maximal) family.insert(c);
    }
    out.cyclic.insert(witnesses.begin(), witnesses.end());
    out.families.push_back(std::move(family));
  }
  return out;
}

// -------------------------------------------------------- graph-side answers

std::vector<std::uint64_t> factors_from_prime_powers(std::vector<std::uint64_t> prime_powers) {
  std::map<std::uint64_t, std::vector<std::uint64_t>> by_prime;
  for (auto q : prime_powers) {
    if (q == 1) continue;
    by_prime[prime_of_power(q)].push_back(q);
  }
  std::size_t len = 0;
  for (auto& [p, v] : by_prime) {
    std::sort(v.rbegin(), v.rend());
    len = std::max(len, v.size());
  }
  // factors[0] is the largest invariant factor
  std::vector<std::uint64_t> factors(len, 1);
  for (const auto& [p, v] : by_prime)
    for (std::size_t i = 0; i < v.size(); ++i) factors[i] *= v[i];
  std::reverse(factors.begin(), factors.end());
  return factors;
}

std::optional<std::vector<std::uint64_t>> graph_abelian_decomposition(
    const LatticeSketch& sketch, const std::set<Color>& normal, const std::set<Color>& cyclic) {
  const std::size_t n = sketch.order[sketch.base];
  if (n == 1) return std::vector<std::uint64_t>{};
  std::vector<Color> candidates;
  for (Color c : normal)
    if (cyclic.count(c) && prime_of_power(sketch.order[c]) != 0) candidates.push_back(c);

  std::vector<std::uint64_t> chosen;
  // Joining normal subgroups multiplies orders exactly when they meet
  // trivially, so each step keeps the running join independent.
  auto rec = [&](auto&& self, std::size_t from, Color joined) -> bool {
    if (sketch.order[joined] == n) return true;
    for (std::size_t i = from; i < candidates.size(); ++i) {
      Color c = candidates[i];
      Color next = sketch.join({joined, c});
      if (sketch.order[next] != sketch.order[joined] * sketch.order[c]) continue;
      chosen.push_back(sketch.order[c]);
      if (self(self, i + 1, next)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!rec(rec, 0, sketch.top)) return std::nullopt;
  return chosen;
}

std::size_t graph_minimal_generators(const LatticeSketch& sketch, const std::set<Color>& cyclic) {
  if (sketch.base == sketch.top) return 0;
  std::vector<Color> maximal;
  for (Color c : cyclic) {
    bool dominated = std::any_of(cyclic.begin(), cyclic.end(), [&](Color d) {
      return d != c && sketch.contains[d][c];
    });
    if (!dominated) maximal.push_back(c);
  }
  std::set<Color> level{sketch.top};
  for (std::size_t k = 1; k <= sketch.color_count; ++k) {
    std::set<Color> next;
    for (Color s : level)
      for (Color m : maximal) next.insert(sketch.join({s, m}));
    if (next.count(sketch.base)) return k;
    level = std::move(next);
  }
  throw Error(ErrorCode::MalformedGraph, "maximal cyclic colors never join to the base");
}

// ------------------------------------------------------------ direct answers

bool is_simple(const Group& g, const SubgroupLattice& lattice) {
  std::size_t normal = 0;
  for (SubgroupId h = 0; h < lattice.size(); ++h)
    if (is_normal(g, lattice, h)) ++normal;
  return normal == 2;
}

bool is_solvable(const Group& g) {
  ElementSet d = g.all_elements();
  while (d.count() > 1) {
    auto next = commutator(g, d, d);
    if (next == d) return false;
    d = std::move(next);
  }
  return true;
}

bool is_nilpotent(const Group& g) {
  const ElementSet whole = g.all_elements();
  ElementSet gamma = whole;
  while (gamma.count() > 1) {
    auto next = commutator(g, gamma, whole);
    if (next == gamma) return false;
    gamma = std::move(next);
  }
  return true;
}

std::size_t minimal_generator_count(const Group& g, const SubgroupLattice& lattice) {
  if (g.order() == 1) return 0;
  // One generator per cyclic subgroup is enough: <x> decides what x adds.
  std::vector<Element> reps;
  {
    std::set<SubgroupId> seen;
    for (Element x = 0; x < g.order(); ++x)
      if (seen.insert(lattice.id_of(cyclic_subgroup(g, x))).second) reps.push_back(x);
  }
  std::map<SubgroupId, std::vector<Element>> level{{lattice.trivial(), {}}};
  for (std::size_t k = 1;; ++k) {
    std::map<SubgroupId, std::vector<Element>> next;
    for (const auto& [id, gens] : level) {
      for (Element x : reps) {
        if (lattice[id].members.contains(x)) continue;
        auto more = gens;
        more.push_back(x);
        auto h = lattice.id_of(generate(g, more));
        if (h == lattice.whole()) return k;
        next.emplace(h, std::move(more));
      }
    }
    level = std::move(next);
  }
}

std::vector<std::uint64_t> invariant_factors(const Group& g) {
  if (!is_abelian(g)) throw Error(ErrorCode::TypeMismatch, g.name() + " is not abelian");
  const std::uint64_t n = g.order();
  std::vector<std::uint64_t> prime_powers;
  std::uint64_t m = n;
  for (std::uint64_t p = 2; m > 1; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    // log_p of #{x : x^(p^k) = 1} for k = 0, 1, ...
    std::vector<std::size_t> rank{0};
    for (std::uint64_t q = p;; q *= p) {
      std::size_t count = 0;
      for (Element x = 0; x < n; ++x)
        if (power(g, x, static_cast<long long>(q)) == g.identity()) ++count;
      std::size_t e = 0;
      for (std::size_t c = count; c > 1; c /= p) ++e;
      if (e == rank.back()) break;
      rank.push_back(e);
    }
    // rank[k] - rank[k-1] factors have order at least p^k
    for (std::size_t k = 1; k < rank.size(); ++k) {
      std::size_t at_least_k = rank[k] - rank[k - 1];
      std::size_t at_least_next = k + 1 < rank.size() ? rank[k + 1] - rank[k] : 0;
      std::uint64_t q = 1;
      for (std::size_t i = 0; i < k; ++i) q *= p;
      for (std::size_t i = at_least_next; i < at_least_k; ++i) prime_powers.push_back(q);
    }
  }
  return factors_from_prime_powers(prime_powers);
}

// ------------------------------------------------------------------- report

bool AnalysisReport::all_agree() const {
  return std::all_of(oracle_checks.begin(), oracle_checks.end(),
                     [](const auto& kv) { return kv.second.agree(); });
}

namespace {

nlohmann::json covers_json(std::vector<CoverArc> covers) {
  std::sort(covers.begin(), covers.end(), [](const CoverArc& a, const CoverArc& b) {
    return std::tie(a.lower, a.upper, a.index) < std::tie(b.lower, b.upper, b.index);
  });
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : covers) arr.push_back({c.lower, c.upper, c.index});
  return arr;
}

nlohmann::json set_json(const std::set<Color>& s) {
  return nlohmann::json(std::vector<Color>(s.begin(), s.end()));
}

}  // namespace

AnalysisReport analyze(const Group& g, const Limits& limits) {
  const auto lattice = all_subgroups(g, limits);
  const auto dg = division_graph(g, lattice);

  AnalysisReport r;
  r.group = g.name();
  r.order = recover_order(dg);
  r.division_count = dg.components.size();
  r.lattice_sketch = recover_lattice(dg);
  r.normal_color_ids = recover_normal_colors(dg);
  auto cyc = recover_cyclic_colors(dg);
  r.cyclic_color_ids = cyc.cyclic;
  r.conjugate_cyclic_families = cyc.families;
  const auto& sk = r.lattice_sketch;
  auto& checks = r.oracle_checks;

  // Colors are subgroup ids, so graph and direct answers compare as is.
  checks["order"] = {nlohmann::json(r.order), nlohmann::json(g.order())};
  checks["division_count"] = {nlohmann::json(r.division_count),
                              nlohmann::json(divisions(g).size())};
  {
    std::vector<std::size_t> direct_orders;
    for (const auto& h : lattice.subgroups()) direct_orders.push_back(h.order());
    checks["subgroup_orders"] = {nlohmann::json(sk.order), nlohmann::json(direct_orders)};
  }
  checks["lattice"] = {covers_json(sk.covers), covers_json(lattice.covers())};
  {
    std::set<Color> normal, cyclic;
    for (SubgroupId h = 0; h < lattice.size(); ++h) {
      if (is_normal(g, lattice, h)) normal.insert(h);
      for (Element x : lattice[h].members.members())
        if (element_order(g, x) == lattice[h].order()) {
          cyclic.insert(h);
          break;
        }
    }
    checks["normal_colors"] = {set_json(r.normal_color_ids), set_json(normal)};
    checks["cyclic_colors"] = {set_json(r.cyclic_color_ids), set_json(cyclic)};

    nlohmann::json graph_fam = nlohmann::json::array(), direct_fam = nlohmann::json::array();
    for (std::size_t i = 0; i < dg.components.size(); ++i) {
      std::set<Color> conj;
      for (Element s = 0; s < g.order(); ++s)
        conj.insert(lattice.id_of(cyclic_subgroup(g, conjugate(g, dg.components[i].division_rep, s))));
      graph_fam.push_back(set_json(r.conjugate_cyclic_families[i]));
      direct_fam.push_back(set_json(conj));
    }
    checks["conjugate_cyclic_families"] = {graph_fam, direct_fam};
  }

  const bool abelian = is_abelian(g);
  auto decomposition = graph_abelian_decomposition(sk, r.normal_color_ids, r.cyclic_color_ids);
  checks["abelian"] = {nlohmann::json(decomposition.has_value()), nlohmann::json(abelian)};
  checks["invariant_factors"] = {
      decomposition ? nlohmann::json(factors_from_prime_powers(*decomposition)) : nlohmann::json(),
      abelian ? nlohmann::json(invariant_factors(g)) : nlohmann::json()};
  checks["simple"] = {nlohmann::json(r.normal_color_ids.size() == 2 && r.order > 1),
                      nlohmann::json(is_simple(g, lattice))};
  checks["minimal_generators"] = {
      nlohmann::json(graph_minimal_generators(sk, r.cyclic_color_ids)),
      nlohmann::json(minimal_generator_count(g, lattice))};
  checks["center_order"] = {std::nullopt, nlohmann::json(center(g).count())};
  checks["commutator_order"] = {std::nullopt, nlohmann::json(commutator_subgroup(g).count())};
  checks["solvable"] = {std::nullopt, nlohmann::json(is_solvable(g))};
  checks["nilpotent"] = {std::nullopt, nlohmann::json(is_nilpotent(g))};
  return r;
}

nlohmann::json report_to_json(const AnalysisReport& r) {
  nlohmann::json checks = nlohmann::json::object();
  for (const auto& [name, c] : r.oracle_checks) {
    checks[name] = {{"graph", c.graph ? *c.graph : nlohmann::json()},
                    {"direct", c.direct},
                    {"agree", c.agree()}};
  }
  nlohmann::json families = nlohmann::json::array();
  for (const auto& f : r.conjugate_cyclic_families) families.push_back(set_json(f));
  return {{"group", r.group},
          {"order", r.order},
          {"division_count", r.division_count},
          {"lattice_sketch",
           {{"colors", r.lattice_sketch.color_count},
            {"base", r.lattice_sketch.base},
            {"top", r.lattice_sketch.top},
            {"orders", r.lattice_sketch.order},
            {"covers", covers_json(r.lattice_sketch.covers)}}},
          {"normal_color_ids", set_json(r.normal_color_ids)},
          {"cyclic_color_ids", set_json(r.cyclic_color_ids)},
          {"conjugate_cyclic_families", families},
          {"oracle_checks", checks},
          {"all_agree", r.all_agree()}};
}

// -------------------------------------------------------------- restrictions

std::vector<Restriction> restrict_to_subgroup(const DivisionGraph& dg,
                                              const LatticeSketch& sketch, Color h) {
  std::vector<Color> colors;
  for (Color c = 0; c < sketch.color_count; ++c)
    if (sketch.contains[h][c]) colors.push_back(c);

  std::vector<Restriction> out;
  for (const auto& comp : dg.components) {
    std::vector<std::vector<std::vector<VertexRef>>> succ(sketch.color_count);
    for (Color c = 0; c < sketch.color_count; ++c) succ[c].resize(comp.clusters[c].size());
    for (const auto& a : comp.arcs)
      if (sketch.contains[h][a.upper.color])
        succ[a.lower.color][a.lower.orbit].push_back(a.upper);

    for (std::uint32_t p = 0; p < comp.clusters[h].size(); ++p) {
      std::vector<std::vector<bool>> keep(sketch.color_count);
      for (Color c = 0; c < sketch.color_count; ++c) keep[c].assign(comp.clusters[c].size(), false);
      std::vector<VertexRef> stack{{h, p}};
      keep[h][p] = true;
      while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (const auto& w : succ[v.color][v.orbit])
          if (!keep[w.color][w.orbit]) keep[w.color][w.orbit] = true, stack.push_back(w);
      }
      out.push_back(cut(comp, colors, keep, comp.clusters[h][p].length()));
    }
  }
  return out;
}

std::vector<Restriction> restrict_to_quotient(const DivisionGraph& dg,
                                              const LatticeSketch& sketch, Color h) {
  std::vector<Color> colors;
  for (Color c = 0; c < sketch.color_count; ++c)
    if (sketch.contains[c][h]) colors.push_back(c);
  std::vector<Restriction> out;
  for (const auto& comp : dg.components) {
    std::vector<std::vector<bool>> keep(sketch.color_count);
    for (Color c = 0; c < sketch.color_count; ++c) keep[c].assign(comp.clusters[c].size(), true);
    out.push_back(cut(comp, colors, keep, 1));
  }
  return out;
}

namespace {

RestrictionCheck compare_pieces(const std::vector<Restriction>& pieces,
                                const DivisionGraph& direct,
                                const std::vector<std::size_t>& direct_colors,
                                std::size_t budget) {
  RestrictionCheck check;
  check.pieces = pieces.size();
  std::set<std::vector<std::uint8_t>> iso, want;
  std::set<std::vector<std::uint32_t>> labelled;
  for (const auto& piece : pieces) {
    std::vector<std::size_t> ids(piece.colors.begin(), piece.colors.end());
    iso.insert(component_certificate(piece.component, budget, &ids).bytes);
    labelled.insert(labelled_key(piece));
  }
  for (const auto& comp : direct.components)
    want.insert(component_certificate(comp, budget, &direct_colors).bytes);
  check.distinct_up_to_isomorphism = iso.size();
  check.distinct_as_labelled = labelled.size();
  check.direct_components = direct.components.size();
  check.isomorphism_reading_matches = iso == want;
  check.labelled_reading_matches = check.isomorphism_reading_matches && labelled.size() == want.size();
  return check;
}

}  // namespace

RestrictionCheck check_subgroup_restriction(const Group& g, const SubgroupLattice& lattice,
                                            const DivisionGraph& dg, SubgroupId h,
                                            const Limits& limits) {
  const auto sketch = recover_lattice(dg);
  const auto pieces = restrict_to_subgroup(dg, sketch, h);

  std::vector<Element> embedding;
  const Group sub = subgroup_as_group(g, lattice[h].members, &embedding);
  const auto sub_lattice = all_subgroups(sub, limits);
  std::vector<std::size_t> colors(sub_lattice.size());
  for (SubgroupId k = 0; k < sub_lattice.size(); ++k) {
    ElementSet image(g.order());
    for (Element x : sub_lattice[k].members.members()) image.insert(embedding[x]);
    colors[k] = lattice.id_of(image);
  }
  auto check = compare_pieces(pieces, division_graph(sub, sub_lattice), colors,
                              limits.search_budget);
  check.color = h;
  return check;
}

RestrictionCheck check_quotient_restriction(const Group& g, const SubgroupLattice& lattice,
                                            const DivisionGraph& dg, SubgroupId h,
                                            const Limits& limits) {
  if (!is_normal(g, lattice, h)) {
    throw Error(ErrorCode::TypeMismatch, "subgroup H" + std::to_string(h) + " is not normal");
  }
  const auto sketch = recover_lattice(dg);
  const auto pieces = restrict_to_quotient(dg, sketch, h);

  std::vector<Element> projection;
  const Group quo = quotient_group(g, lattice[h].members, &projection);
  const auto quo_lattice = all_subgroups(quo, limits);
  std::vector<std::size_t> colors(quo_lattice.size());
  for (SubgroupId k = 0; k < quo_lattice.size(); ++k) {
    ElementSet preimage(g.order());
    for (Element x = 0; x < g.order(); ++x)
      if (quo_lattice[k].members.contains(projection[x])) preimage.insert(x);
    colors[k] = lattice.id_of(preimage);
  }
  auto check = compare_pieces(pieces, division_graph(quo, quo_lattice), colors,
                              limits.search_budget);
  check.color = h;
  return check;
}

nlohmann::json restriction_to_json(const RestrictionCheck& c) {
  return {{"color", c.color},
          {"pieces", c.pieces},
          {"distinct_up_to_isomorphism", c.distinct_up_to_isomorphism},
          {"distinct_as_labelled", c.distinct_as_labelled},
          {"direct_components", c.direct_components},
          {"isomorphism_reading_matches", c.isomorphism_reading_matches},
          {"labelled_reading_matches", c.labelled_reading_matches}};
}

}  // namespace divgraph
