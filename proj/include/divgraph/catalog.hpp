#ifndef DIVGRAPH_CATALOG_HPP
#define DIVGRAPH_CATALOG_HPP

#include <string>
#include <vector>

#include "divgraph/group.hpp"

namespace divgraph::catalog {

Group cyclic(std::size_t n, const Limits& limits = {});
Group klein4();
/// Dihedral group of order 2n.
Group dihedral(std::size_t n, const Limits& limits = {});
Group quaternion8();
Group symmetric(std::size_t n, const Limits& limits = {});
Group alternating(std::size_t n, const Limits& limits = {});
/// (Z_p)^k for prime p.
Group elementary_abelian(std::size_t p, std::size_t k, const Limits& limits = {});
/// The nonabelian group of order 27 and exponent 3 generated by x, y, z with
/// x central and yz = xzy.
Group heisenberg27();
Group direct_product(const Group& a, const Group& b, const Limits& limits = {});

/// Builds a group from a descriptor such as "symmetric:4",
/// "elementary_abelian:3:3" or "product:cyclic:2:cyclic:4". The call form
/// "direct_product(cyclic(2),cyclic(2))" is accepted as well.
/// Throws UnknownDescriptor or OrderCapExceeded.
Group from_descriptor(const std::string& descriptor, const Limits& limits = {});

/// Canonical descriptors of the catalog groups of order at most max_order,
/// sorted by order and then by descriptor. Isomorphic duplicates such as
/// klein4 and elementary_abelian:2:2 both appear.
std::vector<std::string> listing(std::size_t max_order);

/// Order of the group a descriptor names, without building it.
std::size_t descriptor_order(const std::string& descriptor);

}  // namespace divgraph::catalog

#endif  // DIVGRAPH_CATALOG_HPP
