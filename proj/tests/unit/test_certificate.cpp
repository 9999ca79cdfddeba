#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "divgraph/catalog.hpp"
#include "divgraph/certificate.hpp"
#include "divgraph/error.hpp"

using namespace divgraph;

namespace {

constexpr std::size_t kBudget = 2'000'000;

ColoredDigraph random_digraph(std::mt19937& rng, std::size_t n, double density, int labels) {
  ColoredDigraph g;
  g.vertex_label.resize(n);
  for (auto& l : g.vertex_label) l = rng() % 2;
  std::bernoulli_distribution edge(density);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      if (a != b && edge(rng)) g.edges.push_back({a, b, static_cast<std::uint32_t>(rng() % labels)});
  return g;
}

ColoredDigraph relabel(const ColoredDigraph& g, const std::vector<std::uint32_t>& perm) {
  ColoredDigraph h;
  h.vertex_label.resize(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) h.vertex_label[perm[v]] = g.vertex_label[v];
  for (const auto& e : g.edges) h.edges.push_back({perm[e.from], perm[e.to], e.label});
  return h;
}

using EdgeSet = std::set<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>>;

EdgeSet edge_set(const ColoredDigraph& g) {
  EdgeSet s;
  for (const auto& e : g.edges) s.insert({e.from, e.to, e.label});
  return s;
}

bool brute_isomorphic(const ColoredDigraph& a, const ColoredDigraph& b) {
  if (a.size() != b.size() || a.edges.size() != b.edges.size()) return false;
  std::vector<std::uint32_t> perm(a.size());
  std::iota(perm.begin(), perm.end(), 0u);
  auto target = edge_set(b);
  do {
    bool ok = true;
    for (std::size_t v = 0; v < a.size() && ok; ++v) ok = a.vertex_label[v] == b.vertex_label[perm[v]];
    if (ok && edge_set(relabel(a, perm)) == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::vector<std::uint32_t> shuffled(std::size_t n, std::mt19937& rng) {
  std::vector<std::uint32_t> p(n);
  std::iota(p.begin(), p.end(), 0u);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Renames colors globally, reorders orbits inside clusters, arcs and
// components. None of this may change the certificate.
DivisionGraph scramble(const DivisionGraph& dg, std::mt19937& rng) {
  const std::size_t colors = dg.components.front().clusters.size();
  auto sigma = shuffled(colors, rng);
  DivisionGraph out;
  out.group_name = dg.group_name;
  auto order = shuffled(dg.components.size(), rng);
  for (auto i : order) {
    const auto& c = dg.components[i];
    USTComponent n;
    n.division_rep = c.division_rep;
    n.clusters.resize(colors);
    std::vector<std::vector<std::uint32_t>> tau(colors);
    for (std::size_t h = 0; h < colors; ++h) {
      tau[h] = shuffled(c.clusters[h].size(), rng);
      n.clusters[sigma[h]].resize(c.clusters[h].size());
      for (std::size_t o = 0; o < c.clusters[h].size(); ++o)
        n.clusters[sigma[h]][tau[h][o]] = c.clusters[h][o];
    }
    for (const auto& a : c.arcs)
      n.arcs.push_back({{sigma[a.lower.color], tau[a.lower.color][a.lower.orbit]},
                        {sigma[a.upper.color], tau[a.upper.color][a.upper.orbit]},
                        a.label});
    std::shuffle(n.arcs.begin(), n.arcs.end(), rng);
    out.divisions.push_back(dg.divisions[i]);
    out.components.push_back(std::move(n));
  }
  return out;
}

Group random_relabeling(const Group& g, std::mt19937& rng) {
  std::vector<Element> perm(g.order());
  std::iota(perm.begin(), perm.end(), Element{0});
  std::shuffle(perm.begin() + 1, perm.end(), rng);  // identity stays at 0
  return g.relabeled(perm);
}

}  // namespace

TEST(CanonicalForm, MatchesBruteForceIsomorphism) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 3 + rng() % 4;
    auto a = random_digraph(rng, n, 0.35, 2);
    auto b = rng() % 2 ? relabel(a, shuffled(n, rng)) : random_digraph(rng, n, 0.35, 2);
    bool same_code = canonical_form(a, kBudget).code == canonical_form(b, kBudget).code;
    EXPECT_EQ(same_code, brute_isomorphic(a, b)) << trial;
  }
}

TEST(CanonicalForm, InvariantUnderRelabeling) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 8 + rng() % 30;
    auto g = random_digraph(rng, n, 0.15, 3);
    auto code = canonical_form(g, kBudget).code;
    for (int k = 0; k < 3; ++k)
      EXPECT_EQ(canonical_form(relabel(g, shuffled(n, rng)), kBudget).code, code);
  }
}

TEST(CanonicalForm, LabelingReproducesCode) {
  std::mt19937 rng(9);
  auto g = random_digraph(rng, 12, 0.2, 2);
  auto form = canonical_form(g, kBudget);
  auto h = relabel(g, form.labeling);
  std::vector<std::uint32_t> code{static_cast<std::uint32_t>(h.size())};
  code.insert(code.end(), h.vertex_label.begin(), h.vertex_label.end());
  std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>> edges;
  for (const auto& e : h.edges) edges.emplace_back(e.from, e.to, e.label);
  std::sort(edges.begin(), edges.end());
  for (auto [f, t, l] : edges) code.insert(code.end(), {f, t, l});
  EXPECT_EQ(form.code, code);
}

TEST(CanonicalForm, HighlySymmetricGraphsStayCheap) {
  // disjoint directed cycles: large automorphism group
  ColoredDigraph g;
  const std::uint32_t cycles = 12, len = 5;
  g.vertex_label.assign(cycles * len, 0);
  for (std::uint32_t c = 0; c < cycles; ++c)
    for (std::uint32_t i = 0; i < len; ++i)
      g.edges.push_back({c * len + i, c * len + (i + 1) % len, 1});
  auto form = canonical_form(g, 100'000);
  EXPECT_LT(form.search_nodes, 100'000u);
  EXPECT_GT(form.automorphism_generators, 0u);
}

TEST(CanonicalForm, BudgetIsEnforced) {
  ColoredDigraph g;
  g.vertex_label.assign(40, 0);
  for (std::uint32_t v = 0; v < 40; ++v) g.edges.push_back({v, (v + 1) % 40, 0});
  try {
    canonical_form(g, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CanonicalizationBudgetExceeded);
  }
}

TEST(Certificate, InvariantUnderColorOrbitAndComponentPermutations) {
  std::mt19937 rng(17);
  for (const char* d : {"symmetric:3", "quaternion8", "dihedral:4", "alternating:4", "cyclic:12"}) {
    auto dg = division_graph(catalog::from_descriptor(d));
    auto cert = certificate(dg, kBudget);
    for (int k = 0; k < 5; ++k) EXPECT_EQ(certificate(scramble(dg, rng), kBudget), cert) << d;
  }
}

TEST(Certificate, SensitiveToLabelsAndColors) {
  auto dg = division_graph(catalog::quaternion8());
  auto cert = certificate(dg, kBudget);
  auto changed = dg;
  changed.components[1].arcs.back().label = 3;
  EXPECT_NE(certificate(changed, kBudget), cert);

  // Moving one orbit to another color breaks the global color matching.
  auto moved = dg;
  auto& comp = moved.components[2];
  std::swap(comp.clusters[1], comp.clusters[2]);
  for (auto& a : comp.arcs) {
    for (auto* v : {&a.lower, &a.upper})
      if (v->color == 1 || v->color == 2) v->color = 3 - v->color;
  }
  EXPECT_NE(certificate(moved, kBudget), cert);
}

TEST(Certificate, RelabeledGroupsAgreeBitwise) {
  std::mt19937 rng(23);
  for (const char* d : {"quaternion8", "symmetric:4", "dihedral:6"}) {
    auto g = catalog::from_descriptor(d);
    auto cert = certificate(division_graph(g), kBudget);
    for (int k = 0; k < 5; ++k)
      EXPECT_EQ(certificate(division_graph(random_relabeling(g, rng)), kBudget).hex(), cert.hex());
  }
}

TEST(Certificate, HexIsLowercase) {
  auto hex = certificate(division_graph(catalog::cyclic(3)), kBudget).hex();
  EXPECT_FALSE(hex.empty());
  EXPECT_EQ(hex.size() % 2, 0u);
  EXPECT_TRUE(std::all_of(hex.begin(), hex.end(),
                          [](char c) { return std::isdigit(c) || (c >= 'a' && c <= 'f'); }));
}

TEST(Certificate, ComponentCertificateFollowsColorIds) {
  auto g = catalog::symmetric(3);
  auto dg = division_graph(g);
  const auto& c = dg.components[1];
  auto plain = component_certificate(c, kBudget);
  EXPECT_EQ(component_certificate(c, kBudget), plain);
  std::vector<std::size_t> ids(c.clusters.size());
  std::iota(ids.begin(), ids.end(), std::size_t{0});
  EXPECT_EQ(component_certificate(c, kBudget, &ids), plain);
  std::swap(ids[1], ids[4]);
  EXPECT_NE(component_certificate(c, kBudget, &ids), plain);
}

TEST(Isomorphism, TableSearch) {
  auto q8 = catalog::quaternion8();
  std::mt19937 rng(1);
  EXPECT_TRUE(are_isomorphic(q8, random_relabeling(q8, rng)));
  EXPECT_FALSE(are_isomorphic(q8, catalog::dihedral(4)));
  EXPECT_FALSE(are_isomorphic(catalog::cyclic(4), catalog::klein4()));
  EXPECT_TRUE(are_isomorphic(catalog::symmetric(3), catalog::dihedral(3)));
  EXPECT_TRUE(are_isomorphic(catalog::cyclic(6), catalog::from_descriptor("product:cyclic:2:cyclic:3")));
  EXPECT_FALSE(are_isomorphic(catalog::cyclic(6), catalog::symmetric(3)));
  EXPECT_FALSE(are_isomorphic(catalog::elementary_abelian(3, 3), catalog::heisenberg27()));
}

TEST(Compare, PaperCases) {
  auto e27 = catalog::elementary_abelian(3, 3);
  auto h27 = catalog::heisenberg27();
  EXPECT_EQ(compare(e27, h27), Comparison::Different);
  EXPECT_EQ(compare(catalog::cyclic(4), catalog::klein4()), Comparison::Different);
  std::mt19937 rng(2);
  auto s4 = catalog::symmetric(4);
  EXPECT_EQ(compare(s4, random_relabeling(s4, rng)), Comparison::Same);
  EXPECT_EQ(compare(catalog::symmetric(3), catalog::dihedral(3)), Comparison::Same);
}

TEST(Compare, TinyBudgetIsInconclusive) {
  Limits l;
  l.search_budget = 2;
  EXPECT_THROW(compare(catalog::quaternion8(), catalog::dihedral(4), l), Error);
}

TEST(ConjectureScan, OrderEightGroups) {
  auto report = conjecture_scan({"cyclic:8", "dihedral:4", "quaternion8", "product:cyclic:4:cyclic:2",
                                 "product:klein4:cyclic:2"});
  EXPECT_EQ(report.distinct_certificates, 5u);
  EXPECT_EQ(report.isomorphism_classes, 5u);
  EXPECT_TRUE(report.collisions.empty());
  EXPECT_TRUE(report.invariance_failures.empty());
  auto j = scan_to_json(report);
  EXPECT_EQ(j.at("conjecture_holds"), true);
  EXPECT_EQ(j.at("groups").size(), 5u);
}

TEST(ConjectureScan, IsomorphicDescriptorsShareCertificates) {
  auto report = conjecture_scan({"cyclic:6", "product:cyclic:2:cyclic:3", "symmetric:3", "dihedral:3"});
  EXPECT_EQ(report.isomorphism_classes, 2u);
  EXPECT_EQ(report.distinct_certificates, 2u);
  EXPECT_TRUE(report.collisions.empty());
  EXPECT_TRUE(report.invariance_failures.empty());
}

TEST(ConjectureScan, Singleton) {
  auto report = conjecture_scan({"klein4"});
  EXPECT_TRUE(report.collisions.empty());
  EXPECT_EQ(report.distinct_certificates, 1u);
}
