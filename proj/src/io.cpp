#include "latticeforge/io.hpp"

#include <sstream>
#include <stdexcept>

namespace latticeforge {

Json algebra_to_json(const FiniteAlgebra& a) {
  Json j;
  j["n"] = a.n();
  j["carrier"] = a.size();
  Json ops = Json::object();
  for (BinaryOp o : kBinaryOps) {
    Json rows = Json::array();
    for (std::size_t x = 0; x < a.size(); ++x) {
      Json row = Json::array();
      for (std::size_t y = 0; y < a.size(); ++y)
        row.push_back(a.op(o, static_cast<Element>(x), static_cast<Element>(y)));
      rows.push_back(std::move(row));
    }
    ops[op_name(o)] = std::move(rows);
  }
  ops["neg"] = a.tables().neg;
  j["ops"] = std::move(ops);
  j["constants"] = a.tables().constants;
  j["label"] = a.label();
  return j;
}

FiniteAlgebra algebra_from_json(const Json& j) {
  FiniteAlgebra::Tables t;
  t.n = j.at("n").get<std::size_t>();
  t.size = j.at("carrier").get<std::size_t>();
  const auto& ops = j.at("ops");
  for (std::size_t o = 0; o < 4; ++o) {
    const auto& rows = ops.at(op_name(kBinaryOps[o]));
    if (rows.size() != t.size) throw std::invalid_argument("algebra JSON: table has wrong shape");
    for (const auto& row : rows) {
      if (row.size() != t.size) throw std::invalid_argument("algebra JSON: table has wrong shape");
      for (const auto& v : row) t.binary[o].push_back(v.get<Element>());
    }
  }
  t.neg = ops.at("neg").get<std::vector<Element>>();
  t.constants = j.at("constants").get<std::vector<Element>>();
  t.label = j.value("label", std::string{});
  return FiniteAlgebra(std::move(t));
}

Json relation_to_json(const BinRel& r) {
  Json j;
  j["dom"] = r.dom().label();
  j["cod"] = r.cod().label();
  Json pairs = Json::array();
  for (auto [x, y] : r.pairs()) pairs.push_back({x, y});
  j["pairs"] = std::move(pairs);
  return j;
}

BinRel relation_from_json(const Json& j, const FiniteAlgebra& dom, const FiniteAlgebra& cod) {
  if (j.at("dom").get<std::string>() != dom.label() || j.at("cod").get<std::string>() != cod.label())
    throw std::invalid_argument("relation JSON: dom/cod labels do not match");
  std::vector<Pair> pairs;
  for (const auto& p : j.at("pairs")) pairs.emplace_back(p.at(0).get<Element>(), p.at(1).get<Element>());
  return BinRel(dom, cod, pairs);
}

Json hom_to_json(const Hom& h) {
  Json j;
  j["dom"] = h.dom.label();
  j["cod"] = h.cod.label();
  j["table"] = h.table;
  return j;
}

Hom hom_from_json(const Json& j, const FiniteAlgebra& dom, const FiniteAlgebra& cod) {
  if (j.at("dom").get<std::string>() != dom.label() || j.at("cod").get<std::string>() != cod.label())
    throw std::invalid_argument("hom JSON: dom/cod labels do not match");
  Hom h{dom, cod, j.at("table").get<std::vector<Element>>()};
  if (!is_homomorphism(dom, cod, h.table)) throw std::invalid_argument("hom JSON: not a homomorphism");
  return h;
}

Json struct_map_to_json(const StructMap& phi) {
  Json j;
  j["sorts"] = phi.values;
  return j;
}

StructMap struct_map_from_json(const Json& j) {
  return StructMap{j.at("sorts").get<std::vector<std::vector<Element>>>()};
}

Json optimality_to_json(const OptimalityRecord& rec) {
  Json j;
  j["item"] = rec.item;
  j["removed"] = true;
  j["witness"] = rec.witness ? struct_map_to_json(*rec.witness) : Json(nullptr);
  j["verdict"] = rec.verdict();
  return j;
}

std::string sub_lattice_dot(const SubLattice& lat,
                            const std::vector<std::pair<std::string, BinRel>>& names) {
  std::ostringstream out;
  out << "digraph Sub {\n  rankdir=BT;\n  node [shape=circle, fontsize=10];\n";
  for (std::size_t i = 0; i < lat.size(); ++i) {
    std::string label = std::to_string(lat[i].size());
    if (auto name = lookup_name(names, lat[i])) label += "\\n" + *name;
    out << "  m" << i << " [label=\"" << label << "\"";
    if (lat.upper_covers(i).size() == 1) out << ", style=filled, fillcolor=gray80";
    out << "];\n";
  }
  for (std::size_t i = 0; i < lat.size(); ++i)
    for (auto j : lat.upper_covers(i)) out << "  m" << i << " -> m" << j << ";\n";
  out << "}\n";
  return out.str();
}

std::string con_lattice_dot(const ConLattice& con, const FiniteAlgebra& a) {
  std::ostringstream out;
  out << "digraph Con {\n  rankdir=BT;\n  node [shape=box, fontsize=10];\n";
  for (std::size_t i = 0; i < con.size(); ++i) {
    std::string label;
    for (const auto& block : con[i].blocks()) {
      label += "{";
      for (std::size_t b = 0; b < block.size(); ++b) {
        if (b) label += ",";
        label += a.element_name(block[b]);
      }
      label += "}";
    }
    out << "  c" << i << " [label=\"" << label << "\"];\n";
  }
  for (std::size_t i = 0; i < con.size(); ++i)
    for (auto j : con.upper_covers(i)) out << "  c" << i << " -> c" << j << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace latticeforge
