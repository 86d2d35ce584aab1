#include "latticeforge/duality.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>

namespace latticeforge {

// ---- alter egos ----

MultiAlterEgo AlterEgo::as_multi() const {
  MultiAlterEgo m;
  m.sorts = {base};
  for (const auto& [name, r] : named_relations) m.relations.push_back({name, 0, 0, r});
  return m;
}

AlterEgo single_alter_ego(std::size_t n) {
  AlterEgo ego{make_jn(n), {}};
  auto name_s = [n](std::size_t i) { return "S_" + std::to_string(n) + "," + std::to_string(i); };
  for (std::size_t i = 0; i <= n; ++i) ego.named_relations.emplace_back(name_s(i), make_sni(n, i));
  for (std::size_t j = 2; j + 1 <= n; ++j)
    for (std::size_t i = 0; i + 1 < j; ++i)
      ego.named_relations.emplace_back(
          "R_" + std::to_string(n) + "," + std::to_string(i) + "," + std::to_string(j),
          make_rnij(n, i, j));
  // keep the relations on the base algebra object itself
  for (auto& [name, r] : ego.named_relations) r = BinRel(ego.base, ego.base, r.bits());
  return ego;
}

MultiAlterEgo multi_alter_ego(std::size_t n) {
  if (n == 0) throw std::invalid_argument("multi_alter_ego: n must be at least 1");
  MultiAlterEgo ego;
  ego.sorts.push_back(make_m0(n));
  for (std::size_t k = 1; k <= n; ++k) ego.sorts.push_back(make_mk(n, k));
  auto on_sorts = [&](const BinRel& r, std::size_t j, std::size_t k) {
    return BinRel(ego.sorts[j], ego.sorts[k], r.bits());
  };
  ego.relations.push_back({"leq^0", 0, 0, on_sorts(make_multi_leq(MultiLeq::leq0, n, 0, 0), 0, 0)});
  for (std::size_t k = 1; k <= n; ++k)
    ego.relations.push_back({"leq^" + std::to_string(k), k, k,
                             on_sorts(make_multi_leq(MultiLeq::leqk, n, k, k), k, k)});
  for (std::size_t k = 2; k <= n; ++k)
    for (std::size_t j = 1; j < k; ++j)
      ego.relations.push_back({"leq^" + std::to_string(j) + std::to_string(k), j, k,
                               on_sorts(make_multi_leq(MultiLeq::leqjk, n, j, k), j, k)});
  for (std::size_t k = 1; k <= n; ++k) {
    // top, 0, f, 1, t, bot  ->  top, f, f, t, t, bot
    Hom g{ego.sorts[k], ego.sorts[0], {0, 1, 1, 2, 2, 3}};
    if (!is_homomorphism(g.dom, g.cod, g.table))
      throw std::logic_error("multi_alter_ego: g_k is not a homomorphism");
    ego.maps.push_back({"g_" + std::to_string(k), k, 0, std::move(g)});
  }
  return ego;
}

ItemMask ItemMask::all(const MultiAlterEgo& ego) {
  return ItemMask{std::vector<bool>(ego.relations.size(), true),
                  std::vector<bool>(ego.maps.size(), true)};
}

// ---- dual structures ----

DualStructure dualize(const FiniteAlgebra& a, const MultiAlterEgo& ego) {
  DualStructure d;
  for (const auto& sort : ego.sorts) {
    d.points.push_back(enumerate_homs(a, sort));
    d.structure.sort_sizes.push_back(d.points.back().size());
  }
  for (const auto& sym : ego.relations) {
    const auto& xs = d.points[sym.from];
    const auto& ys = d.points[sym.to];
    Bits bits(xs.size() * ys.size());
    for (std::size_t p = 0; p < xs.size(); ++p)
      for (std::size_t q = 0; q < ys.size(); ++q) {
        bool in = true;
        for (std::size_t e = 0; e < a.size() && in; ++e)
          in = sym.relation.contains(xs[p].table[e], ys[q].table[e]);
        if (in) bits.set(p * ys.size() + q);
      }
    d.structure.relations.push_back(std::move(bits));
  }
  for (const auto& sym : ego.maps) {
    const auto& xs = d.points[sym.from];
    const auto& ys = d.points[sym.to];
    std::vector<std::size_t> action;
    for (const auto& x : xs) {
      auto gx = compose(sym.map, x);
      auto it = std::lower_bound(ys.begin(), ys.end(), gx);
      if (it == ys.end() || !(*it == gx))
        throw std::logic_error("dualize: composite " + sym.name + "∘x is not a point");
      action.push_back(static_cast<std::size_t>(it - ys.begin()));
    }
    d.structure.maps.push_back(std::move(action));
  }
  return d;
}

DualStructure dualize(const FiniteAlgebra& a, const AlterEgo& ego) {
  return dualize(a, ego.as_multi());
}

Structure power_structure(const MultiAlterEgo& ego, std::size_t s) {
  if (s == 0) throw std::invalid_argument("power_structure: exponent must be positive");
  Structure x;
  std::vector<std::vector<std::vector<Element>>> tuples;  // per sort
  for (const auto& sort : ego.sorts) {
    std::size_t count = 1;
    for (std::size_t i = 0; i < s; ++i) {
      count *= sort.size();
      if (count > 4096) throw std::length_error("power_structure: too many points");
    }
    std::vector<std::vector<Element>> ts(count, std::vector<Element>(s));
    for (std::size_t p = 0; p < count; ++p) {
      std::size_t rest = p;
      for (std::size_t i = 0; i < s; ++i) {
        ts[p][i] = static_cast<Element>(rest % sort.size());
        rest /= sort.size();
      }
    }
    x.sort_sizes.push_back(count);
    tuples.push_back(std::move(ts));
  }
  for (const auto& sym : ego.relations) {
    const auto& xs = tuples[sym.from];
    const auto& ys = tuples[sym.to];
    Bits bits(xs.size() * ys.size());
    for (std::size_t p = 0; p < xs.size(); ++p)
      for (std::size_t q = 0; q < ys.size(); ++q) {
        bool in = true;
        for (std::size_t i = 0; i < s && in; ++i) in = sym.relation.contains(xs[p][i], ys[q][i]);
        if (in) bits.set(p * ys.size() + q);
      }
    x.relations.push_back(std::move(bits));
  }
  for (const auto& sym : ego.maps) {
    const auto& xs = tuples[sym.from];
    const std::size_t base = ego.sorts[sym.to].size();
    std::vector<std::size_t> action;
    for (const auto& t : xs) {
      std::size_t code = 0;
      for (std::size_t i = s; i-- > 0;) code = code * base + sym.map(t[i]);
      action.push_back(code);
    }
    x.maps.push_back(std::move(action));
  }
  return x;
}

bool preserves_relation(const Structure& x, const MultiAlterEgo& ego, const StructMap& phi,
                        std::size_t r) {
  const auto& sym = ego.relations[r];
  const auto& bits = x.relations[r];
  const std::size_t width = x.sort_sizes[sym.to];
  for (auto b = bits.find_first(); b != Bits::npos; b = bits.find_next(b))
    if (!sym.relation.contains(phi.values[sym.from][b / width], phi.values[sym.to][b % width]))
      return false;
  return true;
}

bool preserves_map(const Structure& x, const MultiAlterEgo& ego, const StructMap& phi,
                   std::size_t m) {
  const auto& sym = ego.maps[m];
  const auto& action = x.maps[m];
  for (std::size_t p = 0; p < action.size(); ++p)
    if (phi.values[sym.to][action[p]] != sym.map(phi.values[sym.from][p])) return false;
  return true;
}

bool preserves(const Structure& x, const MultiAlterEgo& ego, const StructMap& phi,
               const ItemMask& mask) {
  for (std::size_t r = 0; r < ego.relations.size(); ++r)
    if (mask.relations[r] && !preserves_relation(x, ego, phi, r)) return false;
  for (std::size_t m = 0; m < ego.maps.size(); ++m)
    if (mask.maps[m] && !preserves_map(x, ego, phi, m)) return false;
  return true;
}

namespace {

using Mask = std::uint64_t;

// Binary constraint between two points: support[a] = allowed values of the
// other end when this end takes value a.
struct Arc {
  std::size_t other;
  const std::vector<Mask>* support;
};

class MorphismSearch {
 public:
  MorphismSearch(const Structure& x, const MultiAlterEgo& ego, const ItemMask& mask) : x_(x) {
    for (const auto& sort : ego.sorts)
      if (sort.size() > 64) throw std::length_error("morphism search: sort larger than 64");
    for (std::size_t k = 0; k < x.sort_sizes.size(); ++k) {
      offset_.push_back(sort_of_.size());
      for (std::size_t p = 0; p < x.sort_sizes[k]; ++p) {
        sort_of_.push_back(k);
        const std::size_t m = ego.sorts[k].size();
        domain_.push_back(m == 64 ? ~Mask{0} : ((Mask{1} << m) - 1));
      }
    }
    arcs_.resize(sort_of_.size());
    for (std::size_t r = 0; r < ego.relations.size(); ++r) {
      if (!mask.relations[r]) continue;
      const auto& sym = ego.relations[r];
      const std::size_t nf = ego.sorts[sym.from].size(), nt = ego.sorts[sym.to].size();
      std::vector<Mask> fwd(nf, 0), bwd(nt, 0);
      for (std::size_t a = 0; a < nf; ++a)
        for (std::size_t b = 0; b < nt; ++b)
          if (sym.relation.contains(static_cast<Element>(a), static_cast<Element>(b))) {
            fwd[a] |= Mask{1} << b;
            bwd[b] |= Mask{1} << a;
          }
      const auto* f = store(std::move(fwd));
      const auto* bw = store(std::move(bwd));
      const auto& bits = x.relations[r];
      const std::size_t width = x.sort_sizes[sym.to];
      for (auto b = bits.find_first(); b != Bits::npos; b = bits.find_next(b))
        add_constraint(offset_[sym.from] + b / width, offset_[sym.to] + b % width, f, bw);
    }
    for (std::size_t m = 0; m < ego.maps.size(); ++m) {
      if (!mask.maps[m]) continue;
      const auto& sym = ego.maps[m];
      const std::size_t nf = ego.sorts[sym.from].size(), nt = ego.sorts[sym.to].size();
      std::vector<Mask> fwd(nf, 0), bwd(nt, 0);
      for (std::size_t a = 0; a < nf; ++a) {
        auto b = sym.map(static_cast<Element>(a));
        fwd[a] |= Mask{1} << b;
        bwd[b] |= Mask{1} << a;
      }
      const auto* f = store(std::move(fwd));
      const auto* bw = store(std::move(bwd));
      const auto& action = x.maps[m];
      for (std::size_t p = 0; p < action.size(); ++p)
        add_constraint(offset_[sym.from] + p, offset_[sym.to] + action[p], f, bw);
    }
    assigned_.assign(sort_of_.size(), 0);
  }

  void run(const std::function<bool(const StructMap&)>& visit) {
    for (Mask d : domain_)
      if (d == 0) return;
    descend(visit);
  }

 private:
  const std::vector<Mask>* store(std::vector<Mask> t) {
    tables_.push_back(std::make_unique<std::vector<Mask>>(std::move(t)));
    return tables_.back().get();
  }

  void add_constraint(std::size_t u, std::size_t v, const std::vector<Mask>* fwd,
                      const std::vector<Mask>* bwd) {
    if (u == v) {
      // a loop restricts the point to values a with a in support[a]
      Mask allowed = 0;
      for (std::size_t a = 0; a < fwd->size(); ++a)
        if ((*fwd)[a] >> a & 1) allowed |= Mask{1} << a;
      domain_[u] &= allowed;
      return;
    }
    arcs_[u].push_back({v, fwd});
    arcs_[v].push_back({u, bwd});
  }

  bool descend(const std::function<bool(const StructMap&)>& visit) {
    std::size_t best = SIZE_MAX;
    int best_count = 65;
    for (std::size_t v = 0; v < domain_.size(); ++v) {
      if (assigned_[v]) continue;
      int c = std::popcount(domain_[v]);
      if (c < best_count) {
        best = v;
        best_count = c;
      }
    }
    if (best == SIZE_MAX) {
      StructMap phi;
      phi.values.resize(x_.sort_sizes.size());
      for (std::size_t v = 0; v < domain_.size(); ++v)
        phi.values[sort_of_[v]].push_back(static_cast<Element>(std::countr_zero(domain_[v])));
      return visit(phi);
    }
    const Mask dom = domain_[best];
    assigned_[best] = 1;
    for (Mask rest = dom; rest; rest &= rest - 1) {
      const auto a = static_cast<std::size_t>(std::countr_zero(rest));
      std::vector<Mask> saved = domain_;
      domain_[best] = Mask{1} << a;
      bool ok = true;
      for (const auto& arc : arcs_[best]) {
        domain_[arc.other] &= (*arc.support)[a];
        if (domain_[arc.other] == 0) {
          ok = false;
          break;
        }
      }
      bool go_on = !ok || descend(visit);
      domain_ = std::move(saved);
      if (!go_on) {
        assigned_[best] = 0;
        return false;
      }
    }
    assigned_[best] = 0;
    return true;
  }

  const Structure& x_;
  std::vector<std::size_t> offset_, sort_of_;
  std::vector<Mask> domain_;
  std::vector<char> assigned_;
  std::vector<std::vector<Arc>> arcs_;
  std::vector<std::unique_ptr<std::vector<Mask>>> tables_;
};

}  // namespace

void search_morphisms(const Structure& x, const MultiAlterEgo& ego, const ItemMask& mask,
                      const std::function<bool(const StructMap&)>& visit) {
  MorphismSearch(x, ego, mask).run(visit);
}

std::vector<StructMap> enumerate_morphisms(const Structure& x, const MultiAlterEgo& ego,
                                           const ItemMask& mask, std::size_t limit) {
  std::vector<StructMap> out;
  search_morphisms(x, ego, mask, [&](const StructMap& phi) {
    if (out.size() >= limit)
      throw std::length_error("enumerate_morphisms: more than " + std::to_string(limit) +
                              " structure-preserving maps");
    out.push_back(phi);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<StructMap> evaluate_e(const FiniteAlgebra& a, const DualStructure& d) {
  std::vector<StructMap> out(a.size());
  for (std::size_t e = 0; e < a.size(); ++e) {
    out[e].values.resize(d.points.size());
    for (std::size_t k = 0; k < d.points.size(); ++k)
      for (const auto& x : d.points[k]) out[e].values[k].push_back(x.table[e]);
  }
  return out;
}

std::vector<StructMap> double_dual(const FiniteAlgebra& a, const MultiAlterEgo& ego) {
  auto d = dualize(a, ego);
  return enumerate_morphisms(d.structure, ego, ItemMask::all(ego));
}

std::vector<StructMap> double_dual(const FiniteAlgebra& a, const AlterEgo& ego) {
  return double_dual(a, ego.as_multi());
}

DualityReport duality_report(const FiniteAlgebra& a, const MultiAlterEgo& ego) {
  DualityReport rep;
  auto d = dualize(a, ego);
  auto mask = ItemMask::all(ego);
  auto e = enumerate_morphisms(d.structure, ego, mask);
  auto evals = evaluate_e(a, d);
  rep.algebra_size = a.size();
  rep.double_dual_size = e.size();
  rep.points_per_sort = d.structure.sort_sizes;
  rep.evaluations_preserve = std::all_of(evals.begin(), evals.end(), [&](const StructMap& phi) {
    return preserves(d.structure, ego, phi, mask);
  });
  auto sorted = evals;
  std::sort(sorted.begin(), sorted.end());
  rep.injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  rep.surjective = rep.injective && sorted == e;
  return rep;
}

bool check_duality(const FiniteAlgebra& a, const MultiAlterEgo& ego) {
  return duality_report(a, ego).holds();
}

bool check_duality(const FiniteAlgebra& a, const AlterEgo& ego) {
  return check_duality(a, ego.as_multi());
}

FiniteAlgebra free_algebra(const MultiAlterEgo& ego, std::size_t s, std::size_t limit) {
  auto x = power_structure(ego, s);
  auto elems = enumerate_morphisms(x, ego, ItemMask::all(ego), limit);
  if (elems.empty()) throw std::logic_error("free_algebra: no structure-preserving maps");
  if (elems.size() >= 0xFFFF) throw std::length_error("free_algebra: result too large");
  std::map<StructMap, Element> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], static_cast<Element>(i));
  auto find = [&](const StructMap& phi) {
    auto it = index.find(phi);
    if (it == index.end()) throw std::logic_error("free_algebra: not closed under the operations");
    return it->second;
  };
  const std::size_t n = ego.sorts[0].n();
  FiniteAlgebra::Tables t;
  t.n = n;
  t.size = elems.size();
  for (std::size_t o = 0; o < 4; ++o) {
    t.binary[o].resize(t.size * t.size);
    for (std::size_t i = 0; i < t.size; ++i)
      for (std::size_t j = 0; j < t.size; ++j) {
        StructMap chi = elems[i];
        for (std::size_t k = 0; k < chi.values.size(); ++k)
          for (std::size_t p = 0; p < chi.values[k].size(); ++p)
            chi.values[k][p] =
                ego.sorts[k].op(kBinaryOps[o], elems[i].values[k][p], elems[j].values[k][p]);
        t.binary[o][i * t.size + j] = find(chi);
      }
  }
  for (std::size_t i = 0; i < t.size; ++i) {
    StructMap chi = elems[i];
    for (std::size_t k = 0; k < chi.values.size(); ++k)
      for (auto& v : chi.values[k]) v = ego.sorts[k].neg(v);
    t.neg.push_back(find(chi));
  }
  for (std::size_t c = 0; c < 2 * n + 4; ++c) {
    StructMap chi = elems[0];
    for (std::size_t k = 0; k < chi.values.size(); ++k)
      for (auto& v : chi.values[k]) v = ego.sorts[k].constant(c);
    t.constants.push_back(find(chi));
  }
  t.label = "F_V" + std::to_string(n) + "(" + std::to_string(s) + ")";
  return FiniteAlgebra(std::move(t));
}

FiniteAlgebra free_algebra(const AlterEgo& ego, std::size_t s, std::size_t limit) {
  return free_algebra(ego.as_multi(), s, limit);
}

// ---- entailment and optimality ----

namespace {

ItemMask all_but(const MultiAlterEgo& ego, ItemRef removed) {
  auto mask = ItemMask::all(ego);
  if (removed.is_map) mask.maps.at(removed.index) = false;
  else mask.relations.at(removed.index) = false;
  return mask;
}

bool violates(const Structure& x, const MultiAlterEgo& ego, const StructMap& phi, ItemRef item) {
  return item.is_map ? !preserves_map(x, ego, phi, item.index)
                     : !preserves_relation(x, ego, phi, item.index);
}

}  // namespace

std::optional<StructMap> removal_witness(const MultiAlterEgo& ego, ItemRef removed,
                                         const FiniteAlgebra& test) {
  auto d = dualize(test, ego);
  std::optional<StructMap> found;
  search_morphisms(d.structure, ego, all_but(ego, removed), [&](const StructMap& phi) {
    if (violates(d.structure, ego, phi, removed)) {
      found = phi;
      return false;
    }
    return true;
  });
  return found;
}

std::optional<StructMap> entails(const std::vector<BinRel>& ego_relations, const BinRel& target,
                                 const FiniteAlgebra& test) {
  MultiAlterEgo ego;
  ego.sorts = {target.dom()};
  for (std::size_t i = 0; i < ego_relations.size(); ++i)
    ego.relations.push_back({"R" + std::to_string(i), 0, 0, ego_relations[i]});
  ego.relations.push_back({"target", 0, 0, target});
  return removal_witness(ego, ItemRef{false, ego_relations.size()}, test);
}

bool verify_removal_witness(const MultiAlterEgo& ego, ItemRef removed, const DualStructure& d,
                            const StructMap& gamma) {
  const std::size_t asize = d.points.empty() ? 0 : [&] {
    for (const auto& pts : d.points)
      if (!pts.empty()) return pts.front().table.size();
    return std::size_t{0};
  }();
  bool removed_violated = false;
  for (std::size_t r = 0; r < ego.relations.size(); ++r) {
    const auto& sym = ego.relations[r];
    bool ok = true;
    for (std::size_t p = 0; p < d.points[sym.from].size(); ++p)
      for (std::size_t q = 0; q < d.points[sym.to].size(); ++q) {
        const auto& x = d.points[sym.from][p];
        const auto& y = d.points[sym.to][q];
        bool related = true;
        for (std::size_t e = 0; e < asize && related; ++e)
          related = sym.relation.contains(x.table[e], y.table[e]);
        if (related && !sym.relation.contains(gamma.values[sym.from][p], gamma.values[sym.to][q]))
          ok = false;
      }
    bool is_removed = !removed.is_map && removed.index == r;
    if (is_removed) removed_violated = !ok;
    else if (!ok) return false;
  }
  for (std::size_t m = 0; m < ego.maps.size(); ++m) {
    const auto& sym = ego.maps[m];
    bool ok = true;
    for (std::size_t p = 0; p < d.points[sym.from].size(); ++p) {
      auto gx = compose(sym.map, d.points[sym.from][p]);
      const auto& targets = d.points[sym.to];
      auto it = std::find(targets.begin(), targets.end(), gx);
      if (it == targets.end()) return false;
      auto q = static_cast<std::size_t>(it - targets.begin());
      if (gamma.values[sym.to][q] != sym.map(gamma.values[sym.from][p])) ok = false;
    }
    bool is_removed = removed.is_map && removed.index == m;
    if (is_removed) removed_violated = !ok;
    else if (!ok) return false;
  }
  return removed_violated;
}

namespace {

constexpr Element kNoValue = 0xFFFF;

// Starts an all-unassigned witness shaped like d.
StructMap blank_witness(const DualStructure& d) {
  StructMap g;
  for (const auto& pts : d.points) g.values.emplace_back(pts.size(), kNoValue);
  return g;
}

bool complete(const StructMap& g) {
  for (const auto& vs : g.values)
    for (auto v : vs)
      if (v == kNoValue) return false;
  return true;
}

// Index of the point of sort k equal to h, if present.
std::optional<std::size_t> point_index(const DualStructure& d, std::size_t k, const Hom& h) {
  const auto& pts = d.points[k];
  auto it = std::find(pts.begin(), pts.end(), h);
  if (it == pts.end()) return std::nullopt;
  return static_cast<std::size_t>(it - pts.begin());
}

OptimalityRecord finish_record(const MultiAlterEgo& ego, ItemRef item, const std::string& test_name,
                               const FiniteAlgebra& test, const DualStructure& d, StructMap gamma,
                               std::string note) {
  OptimalityRecord rec;
  rec.item = item.is_map ? ego.maps[item.index].name : ego.relations[item.index].name;
  rec.test_algebra = test_name;
  rec.note = std::move(note);
  if (complete(gamma)) {
    rec.witness_verified = verify_removal_witness(ego, item, d, gamma);
    rec.witness = std::move(gamma);
  } else {
    rec.note += (rec.note.empty() ? "" : "; ") + std::string("dual has unexpected points");
  }
  rec.search_agrees = removal_witness(ego, item, test).has_value();
  return rec;
}

}  // namespace

std::vector<OptimalityRecord> single_optimality_suite(std::size_t n) {
  auto single = single_alter_ego(n);
  auto ego = single.as_multi();
  std::vector<OptimalityRecord> out;
  auto f = [](std::size_t i) { return static_cast<Element>(1 + i); };
  for (std::size_t r = 0; r < ego.relations.size(); ++r) {
    const auto& rel = ego.relations[r].relation;
    auto sub = algebra_of(rel);
    auto d = dualize(sub.algebra, ego);
    auto gamma = blank_witness(d);
    auto rho1 = point_index(d, 0, Hom{sub.algebra, rel.dom(), sub.projections[0].table});
    auto rho2 = point_index(d, 0, Hom{sub.algebra, rel.cod(), sub.projections[1].table});
    std::string note;
    // identify which relation of the family this is
    std::optional<std::size_t> band_i;
    for (std::size_t i = 0; i < n; ++i)
      if (rel.bits() == make_sni(n, i).bits()) band_i = i;
    std::optional<std::pair<std::size_t, std::size_t>> rij;
    for (std::size_t i = 0; i + 1 < n && !rij; ++i)
      for (std::size_t j = i + 1; j + 1 <= n; ++j)
        if (rel.bits() == make_rnij(n, i, j).bits()) rij = std::pair{i, j};

    if (band_i && rho1) {
      // ρ1 to f_i, every other point to f_{i+1}
      for (auto& v : gamma.values[0]) v = f(*band_i + 1);
      gamma.values[0][*rho1] = f(*band_i);
      note = "gamma(rho1)=f" + std::to_string(*band_i) + ", otherwise f" +
             std::to_string(*band_i + 1);
    } else if (rho1 && rho2) {
      // value at (a,b): ρ1 to a, ρ2 to b
      Element a = single.base.top(), b = single.base.bottom();
      if (rij) {
        a = f(rij->first);
        b = f(rij->second + 1);
      }
      gamma.values[0][*rho1] = a;
      gamma.values[0][*rho2] = b;
      if (n == 0) {
        // nothing else to preserve; the remaining points are free
        for (auto& v : gamma.values[0])
          if (v == kNoValue) v = a;
      }
      note = "gamma(rho1)=" + single.base.element_name(a) +
             ", gamma(rho2)=" + single.base.element_name(b);
    }
    out.push_back(finish_record(ego, ItemRef{false, r}, "algebra of " + ego.relations[r].name,
                                sub.algebra, d, std::move(gamma), std::move(note)));
  }
  return out;
}

std::vector<OptimalityRecord> multi_optimality_suite(std::size_t n) {
  auto ego = multi_alter_ego(n);
  std::vector<OptimalityRecord> out;
  constexpr Element kF0 = 1;                  // f in M_0
  constexpr Element kZero = 1, kFk = 2, kTk = 4;  // 0, f, t in M_k
  auto g_of = [&](std::size_t k) -> const Hom& { return ego.maps[k - 1].map; };

  for (std::size_t r = 0; r < ego.relations.size(); ++r) {
    const auto& sym = ego.relations[r];
    auto sub = algebra_of(sym.relation);
    auto d = dualize(sub.algebra, ego);
    auto gamma = blank_witness(d);
    std::string note;
    Hom rho1{sub.algebra, ego.sorts[sym.from], sub.projections[0].table};
    Hom rho2{sub.algebra, ego.sorts[sym.to], sub.projections[1].table};
    if (sym.from == 0) {
      // ≤⁰: value at (top, bot)
      auto p1 = point_index(d, 0, rho1), p2 = point_index(d, 0, rho2);
      if (p1 && p2) {
        gamma.values[0][*p1] = ego.sorts[0].top();
        gamma.values[0][*p2] = ego.sorts[0].bottom();
      }
      // no choice of relations from Sub(M_0²) other than ≤⁰, ≥⁰ dualizes this algebra
      auto lat = enumerate_sub(ego.sorts[0], ego.sorts[0]);
      auto geq0 = converse(sym.relation);
      MultiAlterEgo reduced = ego;
      reduced.relations.erase(reduced.relations.begin() + static_cast<std::ptrdiff_t>(r));
      for (const auto& m : lat.members())
        if (!(m.bits() == sym.relation.bits()) && !(m.bits() == geq0.bits()))
          reduced.relations.push_back({"sub", 0, 0, BinRel(ego.sorts[0], ego.sorts[0], m.bits())});
      bool fails = !check_duality(sub.algebra, reduced);
      bool only_sort0 = std::all_of(d.points.begin() + 1, d.points.end(),
                                    [](const auto& pts) { return pts.empty(); });
      note = std::string("only sort 0 non-empty: ") + (only_sort0 ? "yes" : "no") +
             "; Sub(M_0^2) without leq^0, geq^0 fails to dualize: " + (fails ? "yes" : "no");
      auto rec = finish_record(ego, ItemRef{false, r}, "algebra of leq^0", sub.algebra, d,
                               std::move(gamma), note);
      rec.witness_verified = rec.witness_verified && fails;
      out.push_back(std::move(rec));
      continue;
    }
    // ≤ᵏ or ≤ʲᵏ: sort 0 points to f, ρ1 to 0, ρ2 to f
    for (auto& v : gamma.values[0]) v = kF0;
    auto p1 = point_index(d, sym.from, rho1), p2 = point_index(d, sym.to, rho2);
    if (p1 && p2 && (sym.from != sym.to || *p1 != *p2)) {
      gamma.values[sym.from][*p1] = kZero;
      gamma.values[sym.to][*p2] = kFk;
    }
    auto c1 = compose(g_of(sym.from), rho1), c2 = compose(g_of(sym.to), rho2);
    note = "sort sizes";
    for (auto s : d.structure.sort_sizes) note += " " + std::to_string(s);
    note += std::string("; g_j∘rho1 ") + (c1 == c2 ? "=" : "!=") + " g_k∘rho2";
    out.push_back(finish_record(ego, ItemRef{false, r}, "algebra of " + sym.name, sub.algebra, d,
                                std::move(gamma), std::move(note)));
  }
  for (std::size_t m = 0; m < ego.maps.size(); ++m) {
    const std::size_t k = ego.maps[m].from;
    const auto& mk = ego.sorts[k];
    auto d = dualize(mk, ego);
    auto gamma = blank_witness(d);
    auto pg = point_index(d, 0, ego.maps[m].map);
    auto pid = point_index(d, k, identity_hom(mk));
    if (pg && pid) {
      gamma.values[0][*pg] = kF0;
      gamma.values[k][*pid] = kTk;
    }
    out.push_back(finish_record(ego, ItemRef{true, m}, mk.label(), mk, d, std::move(gamma),
                                "gamma(g_k)=f, gamma(id)=t"));
  }
  return out;
}

}  // namespace latticeforge
