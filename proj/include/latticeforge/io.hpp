#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "latticeforge/algebra.hpp"
#include "latticeforge/congruence.hpp"
#include "latticeforge/duality.hpp"
#include "latticeforge/hom.hpp"
#include "latticeforge/relation.hpp"

namespace latticeforge {

using Json = nlohmann::ordered_json;

Json algebra_to_json(const FiniteAlgebra& a);
FiniteAlgebra algebra_from_json(const Json& j);

Json relation_to_json(const BinRel& r);
// dom and cod are supplied by the caller; labels in the JSON are checked against them.
BinRel relation_from_json(const Json& j, const FiniteAlgebra& dom, const FiniteAlgebra& cod);

Json hom_to_json(const Hom& h);
Hom hom_from_json(const Json& j, const FiniteAlgebra& dom, const FiniteAlgebra& cod);

Json struct_map_to_json(const StructMap& phi);
StructMap struct_map_from_json(const Json& j);

Json optimality_to_json(const OptimalityRecord& rec);

std::string sub_lattice_dot(const SubLattice& lat,
                            const std::vector<std::pair<std::string, BinRel>>& names);
std::string con_lattice_dot(const ConLattice& con, const FiniteAlgebra& a);

}  // namespace latticeforge
