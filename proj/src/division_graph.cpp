#include "divgraph/division_graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "divgraph/error.hpp"

namespace divgraph {

std::size_t USTComponent::vertex_count() const {
  std::size_t n = 0;
  for (const auto& c : clusters) n += c.size();
  return n;
}

CosetSpace right_cosets(const Group& g, const SubgroupLattice& lattice, SubgroupId h) {
  const std::size_t n = g.order();
  const auto members = lattice[h].members.members();
  CosetSpace cs;
  cs.subgroup = h;
  cs.coset_of.assign(n, static_cast<std::uint32_t>(n));
  for (Element x = 0; x < n; ++x) {
    if (cs.coset_of[x] != n) continue;
    auto idx = static_cast<std::uint32_t>(cs.cosets.size());
    std::vector<Element> coset;
    coset.reserve(members.size());
    for (Element m : members) {
      Element y = g.multiply(m, x);
      cs.coset_of[y] = idx;
      coset.push_back(y);
    }
    std::sort(coset.begin(), coset.end());
    cs.cosets.push_back(std::move(coset));
  }
  return cs;
}

std::vector<CosetSpace> all_right_cosets(const Group& g, const SubgroupLattice& lattice) {
  std::vector<CosetSpace> out;
  out.reserve(lattice.size());
  for (SubgroupId h = 0; h < lattice.size(); ++h) out.push_back(right_cosets(g, lattice, h));
  return out;
}

namespace {

// The permutation induced by right multiplication with phi on H\G.
std::vector<std::uint32_t> coset_action(const CosetSpace& cs, const Group& g, Element phi) {
  std::vector<std::uint32_t> image(cs.cosets.size());
  for (std::size_t c = 0; c < cs.cosets.size(); ++c)
    image[c] = cs.coset_of[g.multiply(cs.cosets[c].front(), phi)];
  return image;
}

}  // namespace

std::vector<Orbit> orbit_decomposition(const CosetSpace& cs, const Group& g, Element phi) {
  auto image = coset_action(cs, g, phi);
  std::vector<bool> seen(image.size(), false);
  std::vector<Orbit> out;
  for (std::uint32_t start = 0; start < image.size(); ++start) {
    if (seen[start]) continue;
    Orbit orbit;
    for (auto c = start; !seen[c]; c = image[c]) {
      seen[c] = true;
      orbit.cosets.push_back(c);
    }
    std::sort(orbit.cosets.begin(), orbit.cosets.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

USTComponent ust_component(const Group& g, const SubgroupLattice& lattice,
                           const std::vector<CosetSpace>& cosets, Element phi) {
  USTComponent comp;
  comp.division_rep = phi;
  comp.clusters.resize(lattice.size());
  std::vector<std::vector<std::uint32_t>> orbit_of(lattice.size());
  for (SubgroupId h = 0; h < lattice.size(); ++h) {
    comp.clusters[h] = orbit_decomposition(cosets[h], g, phi);
    orbit_of[h].resize(cosets[h].cosets.size());
    for (std::uint32_t o = 0; o < comp.clusters[h].size(); ++o)
      for (auto c : comp.clusters[h][o].cosets) orbit_of[h][c] = o;
  }

  // Each orbit of the smaller subgroup's cosets projects into exactly one
  // orbit of the larger one: Bx -> Ax.
  for (const auto& cover : lattice.covers()) {
    const SubgroupId a = cover.lower, b = cover.upper;
    for (std::uint32_t q = 0; q < comp.clusters[b].size(); ++q) {
      const auto& upper = comp.clusters[b][q];
      Element x = cosets[b].cosets[upper.cosets.front()].front();
      std::uint32_t p = orbit_of[a][cosets[a].coset_of[x]];
      const auto& lower = comp.clusters[a][p];
      if (upper.length() % lower.length() != 0) {
        throw Error(ErrorCode::MalformedGraph,
                    "orbit length " + std::to_string(upper.length()) +
                        " is not a multiple of " + std::to_string(lower.length()));
      }
      comp.arcs.push_back({{a, p}, {b, q},
                           static_cast<std::uint32_t>(upper.length() / lower.length())});
    }
  }
  std::sort(comp.arcs.begin(), comp.arcs.end());
  return comp;
}

USTComponent ust_component(const Group& g, const SubgroupLattice& lattice,
                           const Division& d) {
  return ust_component(g, lattice, all_right_cosets(g, lattice), d.representative);
}

DivisionGraph division_graph(const Group& g, const SubgroupLattice& lattice) {
  DivisionGraph dg;
  dg.group_name = g.name();
  dg.divisions = divisions(g);
  const auto cosets = all_right_cosets(g, lattice);
  dg.components.reserve(dg.divisions.size());
  for (const auto& d : dg.divisions)
    dg.components.push_back(ust_component(g, lattice, cosets, d.representative));
  return dg;
}

DivisionGraph division_graph(const Group& g, const Limits& limits) {
  return division_graph(g, all_subgroups(g, limits));
}

LagariasReport verify_lagarias(const Group& g, const SubgroupLattice& lattice) {
  const std::size_t n = g.order();
  const auto cosets = all_right_cosets(g, lattice);

  using Signature = std::vector<std::vector<std::uint32_t>>;
  std::map<Signature, std::size_t> signature_ids;
  std::vector<std::size_t> signature_of(n);
  for (Element a = 0; a < n; ++a) {
    Signature sig;
    sig.reserve(lattice.size());
    for (const auto& cs : cosets) {
      std::vector<std::uint32_t> lengths;
      for (const auto& o : orbit_decomposition(cs, g, a))
        lengths.push_back(static_cast<std::uint32_t>(o.length()));
      std::sort(lengths.begin(), lengths.end());
      sig.push_back(std::move(lengths));
    }
    auto [it, _] = signature_ids.emplace(std::move(sig), signature_ids.size());
    signature_of[a] = it->second;
  }

  std::vector<std::size_t> division_of(n);
  const auto divs = divisions(g);
  for (std::size_t d = 0; d < divs.size(); ++d)
    for (Element e : divs[d].members) division_of[e] = d;

  LagariasReport report;
  report.subgroups_checked = lattice.size();
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      ++report.pairs_checked;
      bool same_div = division_of[a] == division_of[b];
      bool same_split = signature_of[a] == signature_of[b];
      if (same_div != same_split && report.violations.size() < 64)
        report.violations.push_back({a, b, same_div});
    }
  }
  return report;
}

std::string check_component(const SubgroupLattice& lattice, const USTComponent& c) {
  const SubgroupId whole = lattice.whole();
  const std::size_t group_order = lattice[whole].order();
  std::ostringstream err;
  if (c.clusters.size() != lattice.size()) return "cluster count differs from subgroup count";
  if (c.clusters[whole].size() != 1 || c.clusters[whole][0].length() != 1)
    return "base cluster is not a single orbit of length 1";

  for (SubgroupId h = 0; h < lattice.size(); ++h) {
    std::size_t total = 0;
    for (const auto& o : c.clusters[h]) total += o.length();
    if (total != group_order / lattice[h].order()) {
      err << "orbit lengths of cluster H" << h << " sum to " << total;
      return err.str();
    }
  }

  std::map<std::pair<VertexRef, SubgroupId>, std::size_t> split_sum;
  std::map<std::pair<VertexRef, SubgroupId>, std::size_t> incoming;
  for (const auto& arc : c.arcs) {
    const auto& lo = c.clusters[arc.lower.color][arc.lower.orbit];
    const auto& up = c.clusters[arc.upper.color][arc.upper.orbit];
    if (arc.label * lo.length() != up.length()) {
      err << "arc label " << arc.label << " breaks multiplicativity at H" << arc.upper.color;
      return err.str();
    }
    split_sum[{arc.lower, arc.upper.color}] += arc.label;
    ++incoming[{arc.upper, arc.lower.color}];
  }
  for (const auto& cover : lattice.covers()) {
    for (std::uint32_t p = 0; p < c.clusters[cover.lower].size(); ++p) {
      auto it = split_sum.find({VertexRef{cover.lower, p}, cover.upper});
      std::size_t sum = it == split_sum.end() ? 0 : it->second;
      if (sum != cover.index) {
        err << "labels above H" << cover.lower << "/o" << p << " into H" << cover.upper
            << " sum to " << sum << ", expected index " << cover.index;
        return err.str();
      }
    }
    for (std::uint32_t q = 0; q < c.clusters[cover.upper].size(); ++q) {
      auto it = incoming.find({VertexRef{cover.upper, q}, cover.lower});
      if (it == incoming.end() || it->second != 1) {
        err << "orbit H" << cover.upper << "/o" << q << " lacks a unique arc from H"
            << cover.lower;
        return err.str();
      }
    }
  }
  return {};
}

std::string division_graph_to_dot(const Group& g, const DivisionGraph& dg) {
  std::ostringstream os;
  auto vname = [](Element rep, const VertexRef& v) {
    return "\"d" + std::to_string(rep) + "/H" + std::to_string(v.color) + "/o" +
           std::to_string(v.orbit) + "\"";
  };
  os << "digraph \"" << g.name() << "\" {\n";
  os << "  node [shape=point, colorscheme=paired12];\n";
  for (std::size_t i = 0; i < dg.components.size(); ++i) {
    const auto& comp = dg.components[i];
    const Element rep = comp.division_rep;
    os << "  subgraph \"cluster_d" << rep << "\" {\n";
    os << "    label=\"[" << g.element_name(rep) << "]\";\n";
    for (std::size_t h = comp.clusters.size(); h-- > 0;) {
      os << "    { rank=same;";
      for (std::uint32_t o = 0; o < comp.clusters[h].size(); ++o)
        os << ' ' << vname(rep, {h, o}) << " [color=" << h << ", xlabel=\""
           << comp.clusters[h][o].length() << "\"];";
      os << " }\n";
    }
    for (const auto& arc : comp.arcs)
      os << "    " << vname(rep, arc.lower) << " -> " << vname(rep, arc.upper)
         << " [label=\"" << arc.label << "\"];\n";
    os << "  }\n";
  }
  os << "}\n";
  return os.str();
}

nlohmann::json division_graph_to_json(const Group& g, const DivisionGraph& dg) {
  nlohmann::json comps = nlohmann::json::array();
  for (std::size_t i = 0; i < dg.components.size(); ++i) {
    const auto& d = dg.divisions[i];
    const auto& comp = dg.components[i];
    nlohmann::json members = nlohmann::json::array();
    for (Element e : d.members) members.push_back(g.element_name(e));
    nlohmann::json clusters = nlohmann::json::array();
    for (std::size_t h = 0; h < comp.clusters.size(); ++h) {
      nlohmann::json orbits = nlohmann::json::array();
      for (const auto& o : comp.clusters[h])
        orbits.push_back({{"length", o.length()}, {"cosets", o.cosets}});
      clusters.push_back({{"subgroup", h}, {"orbits", orbits}});
    }
    nlohmann::json arcs = nlohmann::json::array();
    for (const auto& a : comp.arcs)
      arcs.push_back({{"lower", {a.lower.color, a.lower.orbit}},
                      {"upper", {a.upper.color, a.upper.orbit}},
                      {"label", a.label}});
    comps.push_back({{"division",
                      {{"representative", g.element_name(d.representative)},
                       {"members", members},
                       {"common_order", d.common_order}}},
                     {"clusters", clusters},
                     {"arcs", arcs}});
  }
  return {{"schema", "divgraph.division-graph/1"},
          {"group", g.name()},
          {"order", g.order()},
          {"components", comps}};
}

}  // namespace divgraph
