#include "latticeforge/hom.hpp"

#include <algorithm>
#include <stdexcept>

#include "map_search.hpp"

namespace latticeforge {

bool is_homomorphism(const FiniteAlgebra& dom, const FiniteAlgebra& cod,
                     const std::vector<Element>& table) {
  if (dom.n() != cod.n() || table.size() != dom.size()) return false;
  for (Element v : table)
    if (v >= cod.size()) return false;
  for (std::size_t s = 0; s < dom.num_constants(); ++s)
    if (table[dom.constant(s)] != cod.constant(s)) return false;
  for (std::size_t x = 0; x < dom.size(); ++x) {
    auto ex = static_cast<Element>(x);
    if (table[dom.neg(ex)] != cod.neg(table[ex])) return false;
    for (std::size_t y = 0; y < dom.size(); ++y) {
      auto ey = static_cast<Element>(y);
      for (BinaryOp o : kBinaryOps)
        if (table[dom.op(o, ex, ey)] != cod.op(o, table[ex], table[ey])) return false;
    }
  }
  return true;
}

Hom identity_hom(const FiniteAlgebra& a) {
  Hom h{a, a, std::vector<Element>(a.size())};
  for (std::size_t x = 0; x < a.size(); ++x) h.table[x] = static_cast<Element>(x);
  return h;
}

Hom compose(const Hom& g, const Hom& f) {
  if (f.cod.size() != g.dom.size()) throw std::invalid_argument("compose: maps do not compose");
  Hom h{f.dom, g.cod, std::vector<Element>(f.table.size())};
  for (std::size_t x = 0; x < f.table.size(); ++x) h.table[x] = g.table[f.table[x]];
  return h;
}

bool is_surjective(const Hom& h) {
  std::vector<char> hit(h.cod.size(), 0);
  for (Element v : h.table) hit[v] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

std::vector<Hom> enumerate_homs(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  std::vector<Hom> out;
  detail::MapSearch search(a, b, /*injective=*/false);
  search.run([&](std::span<const Element> table) {
    out.push_back(Hom{a, b, std::vector<Element>(table.begin(), table.end())});
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

ProductSubalgebra algebra_of(const BinRel& r) {
  if (!is_compatible(r)) throw std::invalid_argument("algebra_of: relation is not a subuniverse");
  auto prod = product(r.dom(), r.cod());
  std::vector<Element> members;
  for (auto i = r.bits().find_first(); i != Bits::npos; i = r.bits().find_next(i))
    members.push_back(static_cast<Element>(i));
  ProductSubalgebra out{subalgebra(prod, members, "subalgebra of " + prod.label()),
                        {r.dom(), r.cod()},
                        {}};
  Hom rho1{out.algebra, r.dom(), {}}, rho2{out.algebra, r.cod(), {}};
  for (Element e : members) {
    rho1.table.push_back(static_cast<Element>(e / r.cod().size()));
    rho2.table.push_back(static_cast<Element>(e % r.cod().size()));
  }
  out.projections = {std::move(rho1), std::move(rho2)};
  return out;
}

ProductSubalgebra as_product(const FiniteAlgebra& a) {
  return ProductSubalgebra{a, {a}, {identity_hom(a)}};
}

bool is_hom_minimal(const BinRel& r) {
  if (!(r.dom() == r.cod())) throw std::invalid_argument("is_hom_minimal: expected a relation on one algebra");
  auto s = algebra_of(r);
  auto homs = enumerate_homs(s.algebra, r.dom());
  std::vector<Hom> rhos = s.projections;
  std::sort(rhos.begin(), rhos.end());
  rhos.erase(std::unique(rhos.begin(), rhos.end()), rhos.end());
  return homs == rhos;
}

std::optional<Hom> check_hom_rel_product(const BinRel& r, const BinRel& s) {
  auto prod = rel_product(r, s);
  if (!is_compatible(prod))
    throw std::logic_error("check_hom_rel_product: relational product is not compatible");
  auto sub = algebra_of(prod);
  const auto& m = r.cod();
  for (const auto& u : enumerate_homs(sub.algebra, m)) {
    bool ok = true;
    for (std::size_t e = 0; e < sub.algebra.size() && ok; ++e) {
      auto a = sub.projections[0](static_cast<Element>(e));
      auto b = sub.projections[1](static_cast<Element>(e));
      auto mid = u(static_cast<Element>(e));
      ok = r.contains(a, mid) && s.contains(mid, b);
    }
    if (ok) return u;
  }
  return std::nullopt;
}

std::optional<JonssonFactor> jonsson_factor(const ProductSubalgebra& b, const FiniteAlgebra& c,
                                            const Hom& u) {
  for (std::size_t i = 0; i < b.projections.size(); ++i) {
    const auto& pi = b.projections[i];
    if (!is_surjective(pi)) continue;
    std::vector<Element> g(pi.cod.size(), detail::kUnset);
    bool well_defined = true;
    for (std::size_t e = 0; e < b.algebra.size() && well_defined; ++e) {
      auto& slot = g[pi(static_cast<Element>(e))];
      auto value = u(static_cast<Element>(e));
      if (slot == detail::kUnset) slot = value;
      else if (slot != value) well_defined = false;
    }
    if (well_defined && is_homomorphism(pi.cod, c, g))
      return JonssonFactor{i, Hom{pi.cod, c, std::move(g)}};
  }
  return std::nullopt;
}

}  // namespace latticeforge
