#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "divgraph/catalog.hpp"
#include "divgraph/divisions.hpp"
#include "divgraph/error.hpp"
#include "divgraph/lattice.hpp"

using namespace divgraph;

namespace {

std::set<std::vector<Element>> class_oracle(const Group& g) {
  std::set<std::vector<Element>> out;
  for (Element a = 0; a < g.order(); ++a) {
    std::set<Element> cls;
    for (Element s = 0; s < g.order(); ++s)
      cls.insert(g.multiply(g.multiply(s, a), g.inverse(s)));
    out.insert({cls.begin(), cls.end()});
  }
  return out;
}

std::set<std::vector<Element>> as_sets(const std::vector<ConjugacyClass>& classes) {
  std::set<std::vector<Element>> out;
  for (const auto& c : classes) out.insert(c.members);
  return out;
}

std::size_t partition_count(std::size_t n) {
  std::vector<std::size_t> p(n + 1, 0);
  p[0] = 1;
  for (std::size_t part = 1; part <= n; ++part)
    for (std::size_t m = part; m <= n; ++m) p[m] += p[m - part];
  return p[n];
}

// Jacobi symbol (a/m) for odd m > 0.
int jacobi(long long a, long long m) {
  a %= m;
  int result = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      if (m % 8 == 3 || m % 8 == 5) result = -result;
    }
    std::swap(a, m);
    if (a % 4 == 3 && m % 4 == 3) result = -result;
    a %= m;
  }
  return m == 1 ? result : 0;
}

// Sign of x -> k x on Z/m, by counting inversions.
int multiplication_sign(long long k, long long m) {
  int inversions = 0;
  for (long long i = 0; i < m; ++i)
    for (long long j = i + 1; j < m; ++j)
      if ((i * k) % m > (j * k) % m) ++inversions;
  return inversions % 2 ? -1 : 1;
}

std::map<CycleType, int> brute_alternating(std::size_t n) {
  auto g = catalog::alternating(n);
  std::map<CycleType, int> out;
  for (const auto& d : divisions(g)) ++out[g.permutation(d.representative).cycle_type()];
  return out;
}

Permutation cycles(std::size_t n, std::vector<std::vector<int>> cs) {
  return Permutation::from_cycles(n, cs);
}

}  // namespace

TEST(ConjugacyClasses, MatchDefinition) {
  for (const auto& d : catalog::listing(24)) {
    auto g = catalog::from_descriptor(d);
    EXPECT_EQ(as_sets(conjugacy_classes(g)), class_oracle(g)) << d;
  }
}

TEST(ConjugacyClasses, S3SizesInElementOrder) {
  auto classes = conjugacy_classes(catalog::symmetric(3));
  ASSERT_EQ(classes.size(), 3u);
  EXPECT_EQ(classes[0].members.size(), 1u);
  EXPECT_EQ(classes[1].members.size(), 3u);
  EXPECT_EQ(classes[2].members.size(), 2u);
}

TEST(GolombClasses, AgreeWithConjugation) {
  for (const auto& d : catalog::listing(60)) {
    auto g = catalog::from_descriptor(d);
    auto golomb = golomb_classes(g);
    EXPECT_EQ(as_sets(golomb), as_sets(conjugacy_classes(g))) << d;
  }
}

TEST(Divisions, Quaternion) {
  auto q = catalog::quaternion8();
  auto divs = divisions(q);
  ASSERT_EQ(divs.size(), 5u);
  std::vector<std::set<std::string>> names;
  for (const auto& d : divs) {
    std::set<std::string> s;
    for (Element e : d.members) s.insert(q.element_name(e));
    names.push_back(s);
  }
  EXPECT_EQ(names[0], (std::set<std::string>{"1"}));
  EXPECT_EQ(names[1], (std::set<std::string>{"-1"}));
  EXPECT_EQ(names[2], (std::set<std::string>{"i", "-i"}));
  EXPECT_EQ(names[3], (std::set<std::string>{"j", "-j"}));
  EXPECT_EQ(names[4], (std::set<std::string>{"k", "-k"}));
}

TEST(Divisions, SymmetricGroupsFollowCycleTypes) {
  for (std::size_t n = 1; n <= 6; ++n) {
    auto g = catalog::symmetric(n);
    auto divs = divisions(g);
    EXPECT_EQ(divs.size(), conjugacy_classes(g).size());
    EXPECT_EQ(divs.size(), partition_count(n));
    std::set<CycleType> types;
    for (const auto& d : divs) {
      auto t = g.permutation(d.representative).cycle_type();
      for (Element e : d.members) EXPECT_EQ(g.permutation(e).cycle_type(), t);
      types.insert(t);
    }
    EXPECT_EQ(types.size(), divs.size());
  }
}

TEST(Divisions, ThreeByThreeInsideS6) {
  auto g = from_permutation_generators(
      {cycles(6, {{1, 2, 3}}), cycles(6, {{4, 5, 6}})}, 6);
  std::set<CycleType> types;
  for (Element e = 0; e < g.order(); ++e) types.insert(g.permutation(e).cycle_type());
  EXPECT_EQ(types.size(), 3u);
  EXPECT_EQ(conjugacy_classes(g).size(), 9u);
  EXPECT_EQ(divisions(g).size(), 5u);
}

TEST(Divisions, KleinFourSeparatesDoubleTranspositions) {
  auto g = from_permutation_generators(
      {cycles(4, {{1, 2}, {3, 4}}), cycles(4, {{1, 3}, {2, 4}})}, 4);
  auto a = *g.find_element("(1 2)(3 4)");
  auto b = *g.find_element("(1 3)(2 4)");
  auto da = division_of(g, a), db = division_of(g, b);
  EXPECT_NE(da.representative, db.representative);
  EXPECT_EQ(divisions(g).size(), 4u);
}

TEST(Divisions, UnionOfClassesWithCommonOrder) {
  for (const char* d : {"cyclic:12", "dihedral:6", "symmetric:4", "heisenberg27"}) {
    auto g = catalog::from_descriptor(d);
    auto classes = conjugacy_classes(g);
    std::size_t covered = 0;
    for (const auto& div : divisions(g)) {
      std::size_t from_classes = 0;
      for (auto c : div.classes) from_classes += classes[c].members.size();
      EXPECT_EQ(from_classes, div.members.size());
      for (Element e : div.members) EXPECT_EQ(element_order(g, e), div.common_order);
      covered += div.members.size();
    }
    EXPECT_EQ(covered, g.order());
  }
  // Z_n: divisions are the cyclic subgroups' generator sets, one per divisor.
  EXPECT_EQ(divisions(catalog::cyclic(12)).size(), 6u);
}

TEST(Alternating, SplittingMatchesTables) {
  for (std::size_t n = 2; n <= 7; ++n) {
    auto g = catalog::alternating(n);
    std::map<CycleType, std::vector<std::vector<Element>>> by_type;
    for (const auto& c : conjugacy_classes(g))
      by_type[g.permutation(c.representative).cycle_type()].push_back(c.members);
    for (const auto& [type, cls] : by_type) {
      EXPECT_EQ(class_splits_in_alternating(type), cls.size() == 2) << n;
      if (cls.size() != 2) continue;
      std::set<Element> first(cls[0].begin(), cls[0].end());
      bool closed = std::all_of(cls[0].begin(), cls[0].end(),
                                [&](Element e) { return first.count(g.inverse(e)) == 1; });
      EXPECT_EQ(split_class_inverse_closed(type), closed) << n;
    }
  }
}

TEST(Alternating, AmbivalentDegrees) {
  std::vector<std::size_t> amb;
  for (std::size_t n = 2; n <= 20; ++n)
    if (ambivalent_alternating(n)) amb.push_back(n);
  EXPECT_EQ(amb, (std::vector<std::size_t>{2, 5, 6, 10, 14}));
  // table check where the group is small enough
  for (std::size_t n = 2; n <= 7; ++n) {
    auto g = catalog::alternating(n);
    auto classes = conjugacy_classes(g);
    std::vector<std::size_t> cls_of(g.order());
    for (std::size_t c = 0; c < classes.size(); ++c)
      for (Element e : classes[c].members) cls_of[e] = c;
    bool all = true;
    for (Element e = 0; e < g.order(); ++e) all &= cls_of[e] == cls_of[g.inverse(e)];
    EXPECT_EQ(ambivalent_alternating(n), all) << n;
  }
}

TEST(Alternating, ErrorsOnWrongInput) {
  EXPECT_THROW(class_splits_in_alternating({2, 1}), Error);
  try {
    split_class_inverse_closed({3, 1, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSplitClass);
  }
  try {
    standard_conjugator(cycles(4, {{1, 2, 3}}), cycles(4, {{1, 2}, {3, 4}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TypeMismatch);
  }
  EXPECT_THROW(same_class_in_alternating(cycles(3, {{1, 2}}), cycles(3, {{1, 3}})), Error);
  EXPECT_THROW(alternating_divisions_by_type(21), Error);
}

TEST(Alternating, ByTypeMatchesBruteForceUpToSeven) {
  for (std::size_t n = 2; n <= 7; ++n) EXPECT_EQ(alternating_divisions_by_type(n), brute_alternating(n)) << n;
}

// The seven conjugators from the proof, each with its claimed parity.
struct ParityCase {
  std::size_t n;
  std::vector<std::vector<int>> pi;
  int k;
  std::vector<std::vector<int>> tau;
  bool tau_even;
  bool printed_conjugates = true;
};

void PrintTo(const ParityCase& c, std::ostream* os) { *os << "S" << c.n << " power " << c.k; }

class ConjugatorParity : public ::testing::TestWithParam<ParityCase> {};

TEST_P(ConjugatorParity, MatchesProof) {
  const auto& c = GetParam();
  auto pi = cycles(c.n, c.pi);
  auto q = pi.pow(c.k);
  auto tau = cycles(c.n, c.tau);
  EXPECT_EQ(tau * pi * tau.inverse() == q, c.printed_conjugates);
  EXPECT_EQ(tau.is_even(), c.tau_even);
  if (!c.printed_conjugates) return;
  EXPECT_EQ(standard_conjugator(pi, q).is_even(), c.tau_even);
  EXPECT_EQ(same_class_in_alternating(pi, q), c.tau_even);
}

INSTANTIATE_TEST_SUITE_P(
    ProofCases, ConjugatorParity,
    ::testing::Values(
        ParityCase{5, {{1, 2, 3, 4, 5}}, 2, {{2, 3, 5, 4}}, false},
        ParityCase{10, {{1, 2, 3, 4, 5, 6, 7}, {8, 9, 10}}, 2, {{2, 3, 5}, {4, 7, 6}, {9, 10}}, false},
        ParityCase{14, {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13}}, 2,
                   {{2, 3, 5, 9, 4, 7, 13, 12, 10, 6, 11, 8}}, false},
        ParityCase{14, {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}, {12, 13, 14}}, 2,
                   {{2, 3, 5, 9, 6, 11, 10, 8, 4, 7}}, false, false},
        ParityCase{14, {{1, 2, 3, 4, 5, 6, 7, 8, 9}, {10, 11, 12, 13, 14}}, 2,
                   {{2, 3, 5, 9, 8, 6}, {4, 7}, {11, 12, 14, 13}}, false},
        ParityCase{10, {{1, 2, 3, 4, 5, 6, 7, 8, 9}}, 2, {{2, 3, 5, 9, 8, 6}, {4, 7}}, true},
        ParityCase{10, {{1, 2, 3, 4, 5, 6, 7, 8, 9}}, 4, {{2, 5, 8}, {3, 9, 6}}, true}),
    [](const ::testing::TestParamInfo<ParityCase>& info) {
      std::string name = "S" + std::to_string(info.param.n);
      for (const auto& cycle : info.param.pi) name += "_" + std::to_string(cycle.size());
      return name + "_pow" + std::to_string(info.param.k);
    });

// The 11+3 conjugator needs the transposition (13 14) for the 3-cycle, which
// makes it even. The classes still fuse: the 7th power needs an odd one.
TEST(Alternating, ElevenThreeFusesThroughSeventhPower) {
  auto pi = cycles(14, {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}, {12, 13, 14}});
  auto tau = standard_conjugator(pi, pi.pow(2));
  EXPECT_EQ(tau, cycles(14, {{2, 3, 5, 9, 6, 11, 10, 8, 4, 7}, {13, 14}}));
  EXPECT_TRUE(tau.is_even());
  EXPECT_TRUE(same_class_in_alternating(pi, pi.pow(2)));
  EXPECT_FALSE(same_class_in_alternating(pi, pi.pow(7)));
  EXPECT_EQ(alternating_divisions_by_type(14).at({11, 3}), 1);
}

TEST(Alternating, StandardConjugatorReproducesPrintedTau) {
  auto pi = cycles(5, {{1, 2, 3, 4, 5}});
  EXPECT_EQ(standard_conjugator(pi, pi.pow(2)), cycles(5, {{2, 3, 5, 4}}));
  auto rho = cycles(10, {{1, 2, 3, 4, 5, 6, 7}, {8, 9, 10}});
  EXPECT_EQ(standard_conjugator(rho, rho.pow(2)), cycles(10, {{2, 3, 5}, {4, 7, 6}, {9, 10}}));
}

TEST(Alternating, ParityIgnoresChoiceOfConjugator) {
  std::mt19937 rng(11);
  for (const auto& [n, cs] : std::vector<std::pair<std::size_t, std::vector<std::vector<int>>>>{
           {5, {{1, 2, 3, 4, 5}}},
           {10, {{1, 2, 3, 4, 5, 6, 7}, {8, 9, 10}}},
           {10, {{1, 2, 3, 4, 5, 6, 7, 8, 9}}},
           {14, {{1, 2, 3, 4, 5, 6, 7, 8, 9}, {10, 11, 12, 13, 14}}}}) {
    auto pi = cycles(n, cs);
    for (long long k = 2; k < static_cast<long long>(pi.order()); ++k) {
      if (std::gcd(k, static_cast<long long>(pi.order())) != 1) continue;
      auto q = pi.pow(k);
      auto tau = standard_conjugator(pi, q);
      for (int trial = 0; trial < 5; ++trial) {
        // compose with a random element of the centralizer <cycles of pi>
        Permutation c(n);
        for (const auto& cyc : cs) {
          auto one = cycles(n, {cyc});
          c = c * one.pow(static_cast<long long>(rng() % cyc.size()));
        }
        auto other = tau * c;
        ASSERT_EQ(other * pi * other.inverse(), q);
        EXPECT_EQ(other.is_even(), tau.is_even());
      }
    }
  }
}

// Conjugating a product of cycles of distinct odd lengths m_i into its k-th
// power has sign prod (k/m_i) (Zolotarev), so a split type yields two
// divisions exactly when that product is 1 for every k prime to the order.
TEST(Alternating, TwoDivisionTypesFollowJacobiSymbols) {
  for (long long m : {3, 5, 7, 9, 11, 13, 15})
    for (long long k = 1; k < m; ++k)
      if (std::gcd(k, m) == 1) EXPECT_EQ(multiplication_sign(k, m), jacobi(k, m)) << k << "/" << m;

  std::vector<std::pair<std::size_t, CycleType>> two;
  for (std::size_t n = 2; n <= 16; ++n) {
    for (const auto& [type, count] : alternating_divisions_by_type(n)) {
      bool expect_two = false;
      if (class_splits_in_alternating(type)) {
        long long order = 1;
        for (int p : type) order = std::lcm(order, static_cast<long long>(p));
        expect_two = true;
        for (long long k = 1; k < order; ++k) {
          if (std::gcd(k, order) != 1) continue;
          int sign = 1;
          for (int p : type) sign *= jacobi(k, p);
          expect_two &= sign == 1;
        }
      }
      EXPECT_EQ(count, expect_two ? 2 : 1) << n;
      if (count == 2) two.emplace_back(n, type);
    }
  }
  // Besides (9,1) in A10 the 9-cycle of A9 also keeps its classes apart.
  EXPECT_EQ(two, (std::vector<std::pair<std::size_t, CycleType>>{{9, {9}}, {10, {9, 1}}}));
}

TEST(Alternating, NineOneInTen) {
  auto by_type = alternating_divisions_by_type(10);
  EXPECT_EQ(by_type.at({9, 1}), 2);
  EXPECT_EQ(by_type.at({7, 3}), 1);
  EXPECT_EQ(by_type.at({5, 3, 1, 1}), 1);
  auto nine = alternating_divisions_by_type(9);
  EXPECT_EQ(nine.at({9}), 2);
}

// The image of a division under G -> G/N is a whole division of G/N.
TEST(Divisions, ImagesUnderQuotientsAreDivisions) {
  auto names = catalog::listing(24);
  for (const char* d : {"symmetric:4", "dihedral:6", "heisenberg27"}) names.push_back(d);
  std::size_t checked = 0;
  for (const auto& name : names) {
    auto g = catalog::from_descriptor(name);
    auto lattice = all_subgroups(g);
    auto divs = divisions(g);
    for (SubgroupId h = 0; h < lattice.size(); ++h) {
      if (!is_normal(g, lattice, h)) continue;
      std::vector<Element> projection;
      auto q = quotient_group(g, lattice[h].members, &projection);
      std::set<std::set<Element>> quotient_divs;
      for (const auto& qd : divisions(q))
        quotient_divs.emplace(qd.members.begin(), qd.members.end());
      for (const auto& div : divs) {
        std::set<Element> image;
        for (Element e : div.members) image.insert(projection[e]);
        EXPECT_TRUE(quotient_divs.count(image)) << name << " N" << h;
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 1000u);
}

TEST(Divisions, JsonListsClassRepresentatives) {
  auto q = catalog::quaternion8();
  auto j = divisions_to_json(q, divisions(q));
  ASSERT_EQ(j.at("divisions").size(), 5u);
  EXPECT_EQ(j["divisions"][2]["members"], nlohmann::json({"i", "-i"}));
  EXPECT_EQ(j["divisions"][2]["classes"], nlohmann::json({"i"}));
  EXPECT_EQ(j["divisions"][2]["common_order"], 4);
}
