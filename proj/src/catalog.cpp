#include "divgraph/catalog.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <numeric>

#include "divgraph/error.hpp"

namespace divgraph::catalog {

namespace {

void check_cap(std::size_t order, const Limits& limits, const std::string& what) {
  if (order > limits.order_cap) {
    throw Error(ErrorCode::OrderCapExceeded,
                what + " has order " + std::to_string(order) + ", cap is " +
                    std::to_string(limits.order_cap));
  }
}

bool is_prime(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

using RawTable = std::vector<std::vector<long long>>;

}  // namespace

Group cyclic(std::size_t n, const Limits& limits) {
  if (n == 0) throw Error(ErrorCode::UnknownDescriptor, "cyclic group of order 0");
  check_cap(n, limits, "cyclic:" + std::to_string(n));
  RawTable t(n, std::vector<long long>(n));
  std::vector<std::string> names(n);
  for (std::size_t a = 0; a < n; ++a) {
    names[a] = std::to_string(a);
    for (std::size_t b = 0; b < n; ++b) t[a][b] = static_cast<long long>((a + b) % n);
  }
  return validate_cayley_table(t, limits, "cyclic:" + std::to_string(n), names);
}

Group klein4() {
  RawTable t(4, std::vector<long long>(4));
  for (long long a = 0; a < 4; ++a)
    for (long long b = 0; b < 4; ++b) t[a][b] = a ^ b;
  return validate_cayley_table(t, {}, "klein4", {"(0,0)", "(0,1)", "(1,0)", "(1,1)"});
}

Group dihedral(std::size_t n, const Limits& limits) {
  if (n == 0) throw Error(ErrorCode::UnknownDescriptor, "dihedral:0");
  const std::size_t order = 2 * n;
  check_cap(order, limits, "dihedral:" + std::to_string(n));
  // element j*n + i stands for r^i s^j
  auto name = [n](std::size_t i, std::size_t j) {
    std::string r = i == 0 ? "" : (i == 1 ? "r" : "r^" + std::to_string(i));
    if (j == 0) return r.empty() ? std::string("1") : r;
    return r + "s";
  };
  RawTable t(order, std::vector<long long>(order));
  std::vector<std::string> names(order);
  for (std::size_t x = 0; x < order; ++x) {
    std::size_t i = x % n, a = x / n;
    names[x] = name(i, a);
    for (std::size_t y = 0; y < order; ++y) {
      std::size_t j = y % n, b = y / n;
      std::size_t ri = a == 0 ? (i + j) % n : (i + n - j) % n;
      t[x][y] = static_cast<long long>(((a + b) % 2) * n + ri);
    }
  }
  return validate_cayley_table(t, limits, "dihedral:" + std::to_string(n), names);
}

Group quaternion8() {
  // element 2*u + s is (-1)^s * unit_u with units 1, i, j, k
  // unit_mul[u][v] = {unit, sign}
  static constexpr std::array<std::array<std::pair<int, int>, 4>, 4> unit_mul{{
      {{{0, 0}, {1, 0}, {2, 0}, {3, 0}}},
      {{{1, 0}, {0, 1}, {3, 0}, {2, 1}}},
      {{{2, 0}, {3, 1}, {0, 1}, {1, 0}}},
      {{{3, 0}, {2, 0}, {1, 1}, {0, 1}}},
  }};
  RawTable t(8, std::vector<long long>(8));
  for (int x = 0; x < 8; ++x) {
    for (int y = 0; y < 8; ++y) {
      auto [u, s] = unit_mul[x / 2][y / 2];
      t[x][y] = 2 * u + ((s + x % 2 + y % 2) % 2);
    }
  }
  return validate_cayley_table(t, {}, "quaternion8",
                               {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

Group symmetric(std::size_t n, const Limits& limits) {
  if (n == 0) throw Error(ErrorCode::UnknownDescriptor, "symmetric:0");
  check_cap(factorial(n), limits, "symmetric:" + std::to_string(n));
  std::vector<Permutation> gens;
  if (n >= 2) {
    gens.push_back(Permutation::from_cycles(n, {{1, 2}}));
    std::vector<int> full(n);
    std::iota(full.begin(), full.end(), 1);
    gens.push_back(Permutation::from_cycles(n, {full}));
  }
  return from_permutation_generators(gens, n, limits, "symmetric:" + std::to_string(n));
}

Group alternating(std::size_t n, const Limits& limits) {
  if (n == 0) throw Error(ErrorCode::UnknownDescriptor, "alternating:0");
  check_cap(n < 2 ? 1 : factorial(n) / 2, limits, "alternating:" + std::to_string(n));
  std::vector<Permutation> gens;
  for (std::size_t k = 3; k <= n; ++k)
    gens.push_back(Permutation::from_cycles(n, {{1, 2, static_cast<int>(k)}}));
  return from_permutation_generators(gens, n, limits, "alternating:" + std::to_string(n));
}

Group elementary_abelian(std::size_t p, std::size_t k, const Limits& limits) {
  const std::string label =
      "elementary_abelian:" + std::to_string(p) + ":" + std::to_string(k);
  if (!is_prime(p)) throw Error(ErrorCode::UnknownDescriptor, label + ": p must be prime");
  std::size_t order = 1;
  for (std::size_t i = 0; i < k; ++i) {
    order *= p;
    check_cap(order, limits, label);
  }
  auto digits = [&](std::size_t x) {
    std::vector<std::size_t> d(k);
    for (std::size_t i = k; i-- > 0;) {
      d[i] = x % p;
      x /= p;
    }
    return d;
  };
  RawTable t(order, std::vector<long long>(order));
  std::vector<std::string> names(order);
  for (std::size_t x = 0; x < order; ++x) {
    auto dx = digits(x);
    std::string nm = "(";
    for (std::size_t i = 0; i < k; ++i) nm += (i ? "," : "") + std::to_string(dx[i]);
    names[x] = nm + ")";
    for (std::size_t y = 0; y < order; ++y) {
      auto dy = digits(y);
      std::size_t z = 0;
      for (std::size_t i = 0; i < k; ++i) z = z * p + (dx[i] + dy[i]) % p;
      t[x][y] = static_cast<long long>(z);
    }
  }
  return validate_cayley_table(t, limits, label, names);
}

Group heisenberg27() {
  // element 9a + 3b + c is x^a y^b z^c; z^c y^b' = x^(-c b') y^b' z^c
  RawTable t(27, std::vector<long long>(27));
  std::vector<std::string> names(27);
  auto power_name = [](const char* sym, int e) -> std::string {
    if (e == 0) return "";
    return e == 1 ? std::string(sym) : std::string(sym) + "^" + std::to_string(e);
  };
  for (int x = 0; x < 27; ++x) {
    int a = x / 9, b = (x / 3) % 3, c = x % 3;
    std::string nm;
    for (auto part : {power_name("x", a), power_name("y", b), power_name("z", c)}) {
      if (part.empty()) continue;
      nm += (nm.empty() ? "" : "*") + part;
    }
    names[x] = nm.empty() ? "1" : nm;
    for (int y = 0; y < 27; ++y) {
      int a2 = y / 9, b2 = (y / 3) % 3, c2 = y % 3;
      int ra = ((a + a2 - c * b2) % 3 + 3) % 3;
      int rb = (b + b2) % 3;
      int rc = (c + c2) % 3;
      t[x][y] = 9 * ra + 3 * rb + rc;
    }
  }
  return validate_cayley_table(t, {}, "heisenberg27", names);
}

Group direct_product(const Group& a, const Group& b, const Limits& limits) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  const std::string label = "product:" + a.name() + ":" + b.name();
  check_cap(n, limits, label);
  RawTable t(n, std::vector<long long>(n));
  std::vector<std::string> names(n);
  for (std::size_t x = 0; x < n; ++x) {
    auto xa = static_cast<Element>(x / nb), xb = static_cast<Element>(x % nb);
    names[x] = "(" + a.element_name(xa) + "," + b.element_name(xb) + ")";
    for (std::size_t y = 0; y < n; ++y) {
      auto ya = static_cast<Element>(y / nb), yb = static_cast<Element>(y % nb);
      t[x][y] = static_cast<long long>(a.multiply(xa, ya) * nb + b.multiply(xb, yb));
    }
  }
  return validate_cayley_table(t, limits, label, names);
}

// ----------------------------------------------------------------- descriptors

namespace {

struct Spec {
  std::string name;
  std::vector<std::size_t> args;
  std::vector<std::unique_ptr<Spec>> children;

  std::string canonical() const {
    std::string out = name;
    for (auto a : args) out += ":" + std::to_string(a);
    for (const auto& c : children) out += ":" + c->canonical();
    return out;
  }

  std::size_t order() const {
    if (name == "cyclic") return args[0];
    if (name == "klein4") return 4;
    if (name == "dihedral") return 2 * args[0];
    if (name == "quaternion8") return 8;
    if (name == "symmetric") return factorial(args[0]);
    if (name == "alternating") return args[0] < 2 ? 1 : factorial(args[0]) / 2;
    if (name == "elementary_abelian") {
      std::size_t o = 1;
      for (std::size_t i = 0; i < args[1]; ++i) o *= args[0];
      return o;
    }
    if (name == "heisenberg27") return 27;
    if (name == "product") return children[0]->order() * children[1]->order();
    return 1;  // trivial
  }
};

std::vector<std::string> tokenize(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == ':' || ch == '(' || ch == ')' || ch == ',' || ch == ' ') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

std::unique_ptr<Spec> parse(const std::vector<std::string>& tokens, std::size_t& pos,
                            const std::string& text) {
  auto fail = [&](const std::string& why) -> Error {
    return Error(ErrorCode::UnknownDescriptor, "'" + text + "': " + why);
  };
  if (pos >= tokens.size()) throw fail("unexpected end of descriptor");
  auto spec = std::make_unique<Spec>();
  std::string name = tokens[pos++];
  if (name == "direct_product") name = "product";
  if (name == "Q8" || name == "quaternion") name = "quaternion8";
  spec->name = name;

  auto number = [&]() -> std::size_t {
    if (pos >= tokens.size()) throw fail("missing numeric argument for " + name);
    const std::string& tok = tokens[pos];
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), ::isdigit) || tok.size() > 9)
      throw fail("expected a number, got '" + tok + "'");
    ++pos;
    return static_cast<std::size_t>(std::stoul(tok));
  };

  if (name == "cyclic" || name == "dihedral" || name == "symmetric" ||
      name == "alternating") {
    spec->args.push_back(number());
    if (spec->args[0] == 0) throw fail(name + " needs a positive argument");
  } else if (name == "elementary_abelian") {
    spec->args.push_back(number());
    spec->args.push_back(number());
  } else if (name == "product") {
    spec->children.push_back(parse(tokens, pos, text));
    spec->children.push_back(parse(tokens, pos, text));
  } else if (name != "klein4" && name != "quaternion8" && name != "heisenberg27" &&
             name != "trivial") {
    throw fail("unknown group name '" + name + "'");
  }
  return spec;
}

std::unique_ptr<Spec> parse_all(const std::string& text) {
  auto tokens = tokenize(text);
  std::size_t pos = 0;
  auto spec = parse(tokens, pos, text);
  if (pos != tokens.size())
    throw Error(ErrorCode::UnknownDescriptor,
                "'" + text + "': trailing tokens after descriptor");
  return spec;
}

Group build(const Spec& s, const Limits& limits) {
  check_cap(s.order(), limits, s.canonical());
  Group g = [&]() -> Group {
    if (s.name == "cyclic") return cyclic(s.args[0], limits);
    if (s.name == "klein4") return klein4();
    if (s.name == "dihedral") return dihedral(s.args[0], limits);
    if (s.name == "quaternion8") return quaternion8();
    if (s.name == "symmetric") return symmetric(s.args[0], limits);
    if (s.name == "alternating") return alternating(s.args[0], limits);
    if (s.name == "elementary_abelian")
      return elementary_abelian(s.args[0], s.args[1], limits);
    if (s.name == "heisenberg27") return heisenberg27();
    if (s.name == "product")
      return direct_product(build(*s.children[0], limits), build(*s.children[1], limits),
                            limits);
    return cyclic(1, limits);
  }();
  return g.renamed(s.canonical());
}

}  // namespace

Group from_descriptor(const std::string& descriptor, const Limits& limits) {
  return build(*parse_all(descriptor), limits);
}

std::size_t descriptor_order(const std::string& descriptor) {
  return parse_all(descriptor)->order();
}

std::vector<std::string> listing(std::size_t max_order) {
  std::vector<std::string> out;
  auto add = [&](const std::string& d) {
    if (descriptor_order(d) <= max_order) out.push_back(d);
  };
  for (std::size_t n = 1; n <= max_order; ++n) add("cyclic:" + std::to_string(n));
  add("klein4");
  for (std::size_t n = 3; 2 * n <= max_order; ++n) add("dihedral:" + std::to_string(n));
  add("quaternion8");
  for (std::size_t n = 3; factorial(n) <= max_order; ++n)
    add("symmetric:" + std::to_string(n));
  for (std::size_t n = 4; factorial(n) / 2 <= max_order; ++n)
    add("alternating:" + std::to_string(n));
  for (std::size_t p = 2; p * p <= max_order; ++p) {
    if (!is_prime(p)) continue;
    std::size_t o = p * p;
    for (std::size_t k = 2; o <= max_order; ++k, o *= p)
      add("elementary_abelian:" + std::to_string(p) + ":" + std::to_string(k));
  }
  add("heisenberg27");

  // Noncyclic abelian products in invariant-factor form a | b.
  for (std::size_t a = 2; a * a <= max_order; ++a)
    for (std::size_t b = a; a * b <= max_order; b += a)
      if (std::gcd(a, b) > 1) add("product:cyclic:" + std::to_string(a) + ":cyclic:" + std::to_string(b));
  const std::vector<std::string> nonabelian{"dihedral:3", "dihedral:4", "quaternion8",
                                            "alternating:4", "symmetric:4", "dihedral:5",
                                            "dihedral:6", "heisenberg27"};
  for (const auto& h : nonabelian) {
    add("product:cyclic:2:" + h);
    add("product:cyclic:3:" + h);
  }
  add("product:klein4:dihedral:3");
  add("product:klein4:dihedral:4");
  add("product:klein4:quaternion8");
  add("product:dihedral:3:dihedral:3");
  add("product:cyclic:4:dihedral:3");

  std::sort(out.begin(), out.end(), [](const std::string& x, const std::string& y) {
    auto ox = descriptor_order(x), oy = descriptor_order(y);
    return ox != oy ? ox < oy : x < y;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace divgraph::catalog
