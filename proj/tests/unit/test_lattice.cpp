#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "divgraph/catalog.hpp"
#include "divgraph/error.hpp"
#include "divgraph/lattice.hpp"

using namespace divgraph;

namespace {

using Members = std::vector<Element>;

// Closure by repeated products, independent of the library's generate().
Members naive_closure(const Group& g, std::set<Element> s) {
  s.insert(g.identity());
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Element> now(s.begin(), s.end());
    for (Element a : now)
      for (Element b : now) grew |= s.insert(g.multiply(a, b)).second;
  }
  return {s.begin(), s.end()};
}

// Every subgroup is reached from the trivial one by adding one element at a
// time.
std::set<Members> subgroups_by_growth(const Group& g) {
  std::set<Members> found{{g.identity()}};
  std::vector<Members> queue{{g.identity()}};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const Members h = queue[qi];
    for (Element x = 0; x < g.order(); ++x) {
      if (std::binary_search(h.begin(), h.end(), x)) continue;
      std::set<Element> s(h.begin(), h.end());
      s.insert(x);
      auto k = naive_closure(g, s);
      if (found.insert(k).second) queue.push_back(k);
    }
  }
  return found;
}

std::uint64_t gaussian_binomial(std::uint64_t q, std::uint64_t k, std::uint64_t j) {
  std::uint64_t num = 1, den = 1;
  for (std::uint64_t i = 0; i < j; ++i) {
    std::uint64_t qk = 1, qi = 1;
    for (std::uint64_t t = 0; t < k - i; ++t) qk *= q;
    for (std::uint64_t t = 0; t < i + 1; ++t) qi *= q;
    num *= qk - 1;
    den *= qi - 1;
  }
  return num / den;
}

bool normal_by_conjugation(const Group& g, const Members& h) {
  for (Element a : h)
    for (Element s = 0; s < g.order(); ++s)
      if (!std::binary_search(h.begin(), h.end(), g.multiply(g.inverse(s), g.multiply(a, s))))
        return false;
  return true;
}

}  // namespace

TEST(Lattice, MatchesGrowthOracle) {
  for (const char* d : {"cyclic:12", "klein4", "symmetric:3", "quaternion8", "dihedral:4",
                        "alternating:4", "symmetric:4", "dihedral:6", "heisenberg27",
                        "alternating:5"}) {
    auto g = catalog::from_descriptor(d);
    auto lattice = all_subgroups(g);
    auto oracle = subgroups_by_growth(g);
    std::set<Members> got;
    for (const auto& h : lattice.subgroups()) got.insert(h.members.members());
    EXPECT_EQ(got, oracle) << d;
  }
}

TEST(Lattice, KnownCounts) {
  struct Row {
    const char* d;
    std::size_t count;
  };
  for (auto [d, count] : {Row{"cyclic:12", 6}, Row{"symmetric:3", 6}, Row{"quaternion8", 6},
                          Row{"dihedral:4", 10}, Row{"alternating:4", 10},
                          Row{"symmetric:4", 30}, Row{"alternating:5", 59}}) {
    EXPECT_EQ(all_subgroups(catalog::from_descriptor(d)).size(), count) << d;
  }
}

TEST(Lattice, ElementaryAbelianCountsAreGaussianBinomialSums) {
  for (auto [p, k] : {std::pair<std::size_t, std::size_t>{3, 3}, {2, 4}, {2, 3}, {5, 2}}) {
    std::uint64_t expected = 0;
    for (std::uint64_t j = 0; j <= k; ++j) expected += gaussian_binomial(p, k, j);
    EXPECT_EQ(all_subgroups(catalog::elementary_abelian(p, k)).size(), expected);
  }
  EXPECT_EQ(all_subgroups(catalog::elementary_abelian(3, 3)).size(), 28u);
}

TEST(Lattice, OrderingAndEnds) {
  auto g = catalog::symmetric(4);
  auto lattice = all_subgroups(g);
  EXPECT_EQ(lattice[lattice.trivial()].order(), 1u);
  EXPECT_EQ(lattice[lattice.whole()].order(), 24u);
  for (SubgroupId i = 1; i < lattice.size(); ++i) {
    const auto& a = lattice[i - 1];
    const auto& b = lattice[i];
    EXPECT_TRUE(a.order() < b.order() || (a.order() == b.order() && a.members.lex_less(b.members)));
    EXPECT_EQ(generate(g, b.generators), b.members);
  }
}

TEST(Lattice, CoversMatchDefinition) {
  for (const char* d : {"symmetric:4", "quaternion8", "product:cyclic:2:cyclic:4"}) {
    auto g = catalog::from_descriptor(d);
    auto lattice = all_subgroups(g);
    std::set<std::tuple<SubgroupId, SubgroupId, std::size_t>> expected, got;
    for (SubgroupId k = 0; k < lattice.size(); ++k) {
      for (SubgroupId h = 0; h < lattice.size(); ++h) {
        if (h == k || !lattice.contains(k, h)) continue;
        bool between = false;
        for (SubgroupId m = 0; m < lattice.size() && !between; ++m)
          between = m != h && m != k && lattice.contains(k, m) && lattice.contains(m, h);
        if (!between) expected.insert({k, h, lattice[k].order() / lattice[h].order()});
      }
    }
    for (const auto& c : lattice.covers()) got.insert({c.lower, c.upper, c.index});
    EXPECT_EQ(got, expected) << d;
  }
}

TEST(Lattice, Q8CoversAllHaveIndexTwo) {
  auto lattice = all_subgroups(catalog::quaternion8());
  EXPECT_EQ(lattice.covers().size(), 7u);
  for (const auto& c : lattice.covers()) EXPECT_EQ(c.index, 2u);
}

TEST(Lattice, CapsAreEnforced) {
  Limits l;
  l.lattice_order_cap = 10;
  try {
    all_subgroups(catalog::symmetric(4), l);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::LatticeCapExceeded);
  }
  l = Limits{};
  l.subgroup_count_cap = 20;
  EXPECT_THROW(all_subgroups(catalog::symmetric(4), l), Error);
}

TEST(Lattice, NormalCenterCommutatorAgainstBruteForce) {
  for (const char* d : {"symmetric:3", "symmetric:4", "quaternion8", "dihedral:6", "heisenberg27",
                        "alternating:4"}) {
    auto g = catalog::from_descriptor(d);
    auto lattice = all_subgroups(g);
    for (SubgroupId h = 0; h < lattice.size(); ++h)
      EXPECT_EQ(is_normal(g, lattice, h), normal_by_conjugation(g, lattice[h].members.members()))
          << d << " H" << h;

    Members centre;
    for (Element a = 0; a < g.order(); ++a) {
      bool central = true;
      for (Element b = 0; b < g.order(); ++b) central &= g.multiply(a, b) == g.multiply(b, a);
      if (central) centre.push_back(a);
    }
    EXPECT_EQ(center(g).members(), centre) << d;

    std::set<Element> comms;
    for (Element a = 0; a < g.order(); ++a)
      for (Element b = 0; b < g.order(); ++b)
        comms.insert(g.multiply(g.multiply(g.inverse(a), g.inverse(b)), g.multiply(a, b)));
    EXPECT_EQ(commutator_subgroup(g).members(), naive_closure(g, comms)) << d;
  }
}

TEST(Lattice, NormalizerJoinMeet) {
  auto g = catalog::symmetric(3);
  auto lattice = all_subgroups(g);
  // order-2 subgroups are self-normalizing, the order-3 one is normal
  for (SubgroupId h = 0; h < lattice.size(); ++h) {
    auto n = normalizer(g, lattice, h);
    if (lattice[h].order() == 2) EXPECT_EQ(n, h);
    if (lattice[h].order() == 3) EXPECT_EQ(n, lattice.whole());
  }
  EXPECT_EQ(join(g, lattice, 1, 2), lattice.whole());
  EXPECT_EQ(meet(lattice, 1, 2), lattice.trivial());
  auto c = centralizer(g, cyclic_subgroup(g, *g.find_element("(1 2 3)")));
  EXPECT_EQ(c.count(), 3u);
}

TEST(Lattice, SubgroupAndQuotientGroups) {
  auto g = catalog::dihedral(4);
  auto lattice = all_subgroups(g);
  auto z = center(g);
  std::vector<Element> proj;
  auto q = quotient_group(g, z, &proj);
  EXPECT_EQ(q.order(), 4u);
  EXPECT_TRUE(is_abelian(q));
  for (Element a = 0; a < q.order(); ++a) EXPECT_LE(element_order(q, a), 2u);
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b)
      EXPECT_EQ(proj[g.multiply(a, b)], q.multiply(proj[a], proj[b]));

  for (SubgroupId h = 0; h < lattice.size(); ++h) {
    std::vector<Element> emb;
    auto sub = subgroup_as_group(g, lattice[h].members, &emb);
    ASSERT_EQ(sub.order(), lattice[h].order());
    EXPECT_EQ(emb[sub.identity()], g.identity());
    for (Element a = 0; a < sub.order(); ++a)
      for (Element b = 0; b < sub.order(); ++b)
        EXPECT_EQ(emb[sub.multiply(a, b)], g.multiply(emb[a], emb[b]));
  }
}

TEST(Lattice, DotAndJsonExports) {
  auto g = catalog::quaternion8();
  auto lattice = all_subgroups(g);
  auto dot = lattice_to_dot(g, lattice);
  EXPECT_NE(dot.find("digraph"), std::string::npos);
  EXPECT_EQ(std::count(dot.begin(), dot.end(), '>'), 7);  // one per cover arc
  auto j = lattice_to_json(g, lattice);
  EXPECT_EQ(j.at("subgroups").size(), 6u);
}
