#include "latticeforge/algebra.hpp"

#include <algorithm>
#include <stdexcept>

#include "map_search.hpp"

namespace latticeforge {

const char* op_name(BinaryOp op) {
  switch (op) {
    case BinaryOp::kmeet: return "kmeet";
    case BinaryOp::kjoin: return "kjoin";
    case BinaryOp::tmeet: return "tmeet";
    case BinaryOp::tjoin: return "tjoin";
  }
  return "?";
}

FiniteAlgebra::FiniteAlgebra() : FiniteAlgebra(make_jn(0)) {}

FiniteAlgebra::FiniteAlgebra(Tables t) {
  if (t.size == 0) throw std::invalid_argument("algebra: empty carrier");
  if (t.size >= detail::kUnset) throw std::invalid_argument("algebra: carrier too large");
  for (const auto& table : t.binary) {
    if (table.size() != t.size * t.size)
      throw std::invalid_argument("algebra: binary table has wrong shape");
    for (Element v : table)
      if (v >= t.size) throw std::invalid_argument("algebra: table entry out of range");
  }
  if (t.neg.size() != t.size) throw std::invalid_argument("algebra: negation has wrong shape");
  for (Element v : t.neg)
    if (v >= t.size) throw std::invalid_argument("algebra: negation entry out of range");
  if (t.constants.size() != 2 * t.n + 4)
    throw std::invalid_argument("algebra: expected 2n+4 constant slots");
  for (Element v : t.constants)
    if (v >= t.size) throw std::invalid_argument("algebra: constant out of range");
  if (!t.names.empty() && t.names.size() != t.size)
    throw std::invalid_argument("algebra: names do not match carrier");
  data_ = std::make_shared<const Tables>(std::move(t));
}

std::string FiniteAlgebra::element_name(Element x) const {
  if (!data_->names.empty()) return data_->names[x];
  return std::to_string(x);
}

FiniteAlgebra FiniteAlgebra::relabelled(std::string label) const {
  Tables t = *data_;
  t.label = std::move(label);
  return FiniteAlgebra(std::move(t));
}

bool operator==(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (a.data_ == b.data_) return true;
  const auto& x = *a.data_;
  const auto& y = *b.data_;
  return x.n == y.n && x.size == y.size && x.binary == y.binary && x.neg == y.neg &&
         x.constants == y.constants;
}

void require_same_signature(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (a.n() != b.n())
    throw std::invalid_argument("signature mismatch: " + a.label() + " has n=" +
                                std::to_string(a.n()) + ", " + b.label() +
                                " has n=" + std::to_string(b.n()));
}

namespace {

// Orders of J_m on the canonical carrier top, f_0..f_m, t_0..t_m, bot.
struct JOrders {
  std::size_t m;
  bool is_f(Element x) const { return x >= 1 && x <= m + 1; }
  bool is_t(Element x) const { return x >= m + 2 && x <= 2 * m + 2; }
  std::size_t index(Element x) const { return is_f(x) ? x - 1 : x - (m + 2); }
  Element top() const { return 0; }
  Element bot() const { return static_cast<Element>(2 * m + 3); }

  bool leq_k(Element x, Element y) const {
    if (x == y || x == bot() || y == top()) return true;
    if (x == top() || y == bot()) return false;
    if (is_f(x) != is_f(y)) return false;
    return index(x) >= index(y);
  }
  std::size_t truth_rank(Element x) const {
    if (x == top() || x == bot()) return m + 1;
    if (is_f(x)) return index(x);
    return 2 * m + 2 - index(x);
  }
  bool leq_t(Element x, Element y) const {
    return x == y || truth_rank(x) < truth_rank(y);
  }
  std::vector<Element> negation() const {
    std::vector<Element> neg(2 * m + 4);
    neg[top()] = top();
    neg[bot()] = bot();
    for (std::size_t i = 0; i <= m; ++i) {
      neg[1 + i] = static_cast<Element>(m + 2 + i);
      neg[m + 2 + i] = static_cast<Element>(1 + i);
    }
    return neg;
  }
};

FiniteAlgebra j_reduct(std::size_t m, std::size_t n, std::vector<Element> constants,
                       std::string label, std::vector<std::string> names) {
  JOrders ord{m};
  return algebra_from_orders(
      n, 2 * m + 4, [&](Element x, Element y) { return ord.leq_k(x, y); },
      [&](Element x, Element y) { return ord.leq_t(x, y); }, ord.negation(),
      std::move(constants), std::move(label), std::move(names));
}

}  // namespace

FiniteAlgebra make_jn(std::size_t n) {
  std::vector<Element> constants(2 * n + 4);
  for (std::size_t s = 0; s < constants.size(); ++s) constants[s] = static_cast<Element>(s);
  std::vector<std::string> names{"top"};
  for (std::size_t i = 0; i <= n; ++i) names.push_back("f" + std::to_string(i));
  for (std::size_t i = 0; i <= n; ++i) names.push_back("t" + std::to_string(i));
  names.push_back("bot");
  return j_reduct(n, n, std::move(constants), "J_" + std::to_string(n), std::move(names));
}

FiniteAlgebra make_m0(std::size_t n) {
  // carrier top=0, f=1, t=2, bot=3
  std::vector<Element> constants{0};
  for (std::size_t i = 0; i <= n; ++i) constants.push_back(1);
  for (std::size_t i = 0; i <= n; ++i) constants.push_back(2);
  constants.push_back(3);
  return j_reduct(0, n, std::move(constants), "M_0 of V_" + std::to_string(n),
                  {"top", "f", "t", "bot"});
}

FiniteAlgebra make_mk(std::size_t n, std::size_t k) {
  if (k == 0 || k > n)
    throw std::invalid_argument("make_mk: need 1 <= k <= n (k=" + std::to_string(k) +
                                ", n=" + std::to_string(n) + ")");
  // carrier top=0, 0=1, f=2, 1=3, t=4, bot=5 (J_1 with 0=f_0, f=f_1, 1=t_0, t=t_1)
  std::vector<Element> constants{0};
  for (std::size_t i = 0; i <= n; ++i) constants.push_back(i < k ? 1 : 2);
  for (std::size_t i = 0; i <= n; ++i) constants.push_back(i < k ? 3 : 4);
  constants.push_back(5);
  return j_reduct(1, n, std::move(constants),
                  "M_" + std::to_string(k) + " of V_" + std::to_string(n),
                  {"top", "0", "f", "1", "t", "bot"});
}

FiniteAlgebra product(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  require_same_signature(a, b);
  const std::size_t na = a.size(), nb = b.size();
  if (na * nb >= detail::kUnset) throw std::invalid_argument("product: carrier too large");
  FiniteAlgebra::Tables t;
  t.n = a.n();
  t.size = na * nb;
  for (std::size_t o = 0; o < 4; ++o) {
    auto op = kBinaryOps[o];
    auto& table = t.binary[o];
    table.resize(t.size * t.size);
    for (std::size_t x = 0; x < t.size; ++x) {
      for (std::size_t y = 0; y < t.size; ++y) {
        auto l = a.op(op, static_cast<Element>(x / nb), static_cast<Element>(y / nb));
        auto r = b.op(op, static_cast<Element>(x % nb), static_cast<Element>(y % nb));
        table[x * t.size + y] = static_cast<Element>(l * nb + r);
      }
    }
  }
  t.neg.resize(t.size);
  for (std::size_t x = 0; x < t.size; ++x)
    t.neg[x] = static_cast<Element>(a.neg(static_cast<Element>(x / nb)) * nb +
                                    b.neg(static_cast<Element>(x % nb)));
  for (std::size_t s = 0; s < a.num_constants(); ++s)
    t.constants.push_back(static_cast<Element>(a.constant(s) * nb + b.constant(s)));
  t.label = a.label() + " × " + b.label();
  for (std::size_t x = 0; x < t.size; ++x)
    t.names.push_back("(" + a.element_name(static_cast<Element>(x / nb)) + "," +
                      b.element_name(static_cast<Element>(x % nb)) + ")");
  return FiniteAlgebra(std::move(t));
}

FiniteAlgebra quotient(const FiniteAlgebra& a, const Partition& theta) {
  if (theta.size() != a.size()) throw std::invalid_argument("quotient: partition size mismatch");
  const std::size_t m = a.size();
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t x2 = x + 1; x2 < m; ++x2) {
      auto ex = static_cast<Element>(x), ex2 = static_cast<Element>(x2);
      if (!theta.same_block(ex, ex2)) continue;
      if (!theta.same_block(a.neg(ex), a.neg(ex2)))
        throw std::invalid_argument("quotient: partition is not a congruence");
      for (std::size_t y = 0; y < m; ++y) {
        auto ey = static_cast<Element>(y);
        for (BinaryOp o : kBinaryOps) {
          if (!theta.same_block(a.op(o, ex, ey), a.op(o, ex2, ey)) ||
              !theta.same_block(a.op(o, ey, ex), a.op(o, ey, ex2)))
            throw std::invalid_argument("quotient: partition is not a congruence");
        }
      }
    }
  }
  auto blocks = theta.blocks();
  FiniteAlgebra::Tables t;
  t.n = a.n();
  t.size = blocks.size();
  for (std::size_t o = 0; o < 4; ++o) {
    t.binary[o].resize(t.size * t.size);
    for (std::size_t b1 = 0; b1 < t.size; ++b1)
      for (std::size_t b2 = 0; b2 < t.size; ++b2)
        t.binary[o][b1 * t.size + b2] = static_cast<Element>(
            theta.block_of(a.op(kBinaryOps[o], blocks[b1][0], blocks[b2][0])));
  }
  for (std::size_t b = 0; b < t.size; ++b) {
    t.neg.push_back(static_cast<Element>(theta.block_of(a.neg(blocks[b][0]))));
    std::string name = "[";
    for (std::size_t i = 0; i < blocks[b].size(); ++i) {
      if (i) name += ",";
      name += a.element_name(blocks[b][i]);
    }
    t.names.push_back(name + "]");
  }
  for (Element c : a.constants()) t.constants.push_back(static_cast<Element>(theta.block_of(c)));
  t.label = "quotient of " + a.label();
  return FiniteAlgebra(std::move(t));
}

std::vector<Element> generated_subuniverse(const FiniteAlgebra& a,
                                           const std::vector<Element>& seed) {
  std::vector<char> in(a.size(), 0);
  std::vector<Element> members;
  auto add = [&](Element x) {
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
    }
  };
  for (Element c : a.constants()) add(c);
  for (Element x : seed) {
    if (x >= a.size()) throw std::out_of_range("generated_subuniverse: seed out of range");
    add(x);
  }
  for (std::size_t head = 0; head < members.size(); ++head) {
    Element x = members[head];
    add(a.neg(x));
    for (std::size_t idx = 0; idx <= head; ++idx) {
      Element y = members[idx];
      for (BinaryOp o : kBinaryOps) {
        add(a.op(o, x, y));
        add(a.op(o, y, x));
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

FiniteAlgebra subalgebra(const FiniteAlgebra& a, const std::vector<Element>& members,
                         std::string label) {
  if (!std::is_sorted(members.begin(), members.end()) ||
      std::adjacent_find(members.begin(), members.end()) != members.end())
    throw std::invalid_argument("subalgebra: members must be sorted and distinct");
  std::vector<Element> index(a.size(), detail::kUnset);
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i] >= a.size()) throw std::out_of_range("subalgebra: member out of range");
    index[members[i]] = static_cast<Element>(i);
  }
  auto at = [&](Element x) {
    if (index[x] == detail::kUnset)
      throw std::invalid_argument("subalgebra: subset is not closed");
    return index[x];
  };
  FiniteAlgebra::Tables t;
  t.n = a.n();
  t.size = members.size();
  for (std::size_t o = 0; o < 4; ++o) {
    t.binary[o].resize(t.size * t.size);
    for (std::size_t i = 0; i < t.size; ++i)
      for (std::size_t j = 0; j < t.size; ++j)
        t.binary[o][i * t.size + j] = at(a.op(kBinaryOps[o], members[i], members[j]));
  }
  for (Element x : members) {
    t.neg.push_back(at(a.neg(x)));
    t.names.push_back(a.element_name(x));
  }
  for (Element c : a.constants()) t.constants.push_back(at(c));
  t.label = std::move(label);
  return FiniteAlgebra(std::move(t));
}

std::optional<std::vector<Element>> is_isomorphic(const FiniteAlgebra& a,
                                                  const FiniteAlgebra& b) {
  require_same_signature(a, b);
  if (a.size() != b.size()) return std::nullopt;
  std::optional<std::vector<Element>> found;
  detail::MapSearch search(a, b, /*injective=*/true);
  search.run([&](std::span<const Element> table) {
    found.emplace(table.begin(), table.end());
    return false;
  });
  return found;
}

std::string check_bilattice(const FiniteAlgebra& a) {
  const std::size_t m = a.size();
  auto name = [&](std::size_t x) { return a.element_name(static_cast<Element>(x)); };
  const std::pair<BinaryOp, BinaryOp> lattices[] = {{BinaryOp::kmeet, BinaryOp::kjoin},
                                                    {BinaryOp::tmeet, BinaryOp::tjoin}};
  for (auto [meet_op, join_op] : lattices) {
    for (BinaryOp o : {meet_op, join_op}) {
      for (std::size_t x = 0; x < m; ++x) {
        auto ex = static_cast<Element>(x);
        if (a.op(o, ex, ex) != ex)
          return std::string(op_name(o)) + " not idempotent at " + name(x);
        for (std::size_t y = 0; y < m; ++y) {
          auto ey = static_cast<Element>(y);
          if (a.op(o, ex, ey) != a.op(o, ey, ex))
            return std::string(op_name(o)) + " not commutative at " + name(x) + "," + name(y);
          for (std::size_t z = 0; z < m; ++z) {
            auto ez = static_cast<Element>(z);
            if (a.op(o, a.op(o, ex, ey), ez) != a.op(o, ex, a.op(o, ey, ez)))
              return std::string(op_name(o)) + " not associative";
          }
        }
      }
    }
    for (std::size_t x = 0; x < m; ++x) {
      for (std::size_t y = 0; y < m; ++y) {
        auto ex = static_cast<Element>(x), ey = static_cast<Element>(y);
        if (a.op(meet_op, ex, a.op(join_op, ex, ey)) != ex ||
            a.op(join_op, ex, a.op(meet_op, ex, ey)) != ex)
          return std::string("absorption fails for ") + op_name(meet_op) + "/" +
                 op_name(join_op) + " at " + name(x) + "," + name(y);
      }
    }
  }
  for (std::size_t x = 0; x < m; ++x) {
    auto ex = static_cast<Element>(x);
    if (a.neg(a.neg(ex)) != ex) return "negation not involutive at " + name(x);
    for (std::size_t y = 0; y < m; ++y) {
      auto ey = static_cast<Element>(y);
      if (a.leq_k(ex, ey) && !a.leq_k(a.neg(ex), a.neg(ey)))
        return "negation does not preserve the knowledge order at " + name(x) + "," + name(y);
      if (a.leq_t(ex, ey) && !a.leq_t(a.neg(ey), a.neg(ex)))
        return "negation does not reverse the truth order at " + name(x) + "," + name(y);
    }
  }
  return {};
}

std::optional<InterlacingFailure> interlacing_failure(const FiniteAlgebra& a) {
  const std::size_t m = a.size();
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      auto ex = static_cast<Element>(x), ey = static_cast<Element>(y);
      bool k_le = a.leq_k(ex, ey), t_le = a.leq_t(ex, ey);
      if (!k_le && !t_le) continue;
      for (std::size_t z = 0; z < m; ++z) {
        auto ez = static_cast<Element>(z);
        if (k_le) {
          for (BinaryOp o : {BinaryOp::tmeet, BinaryOp::tjoin})
            if (!a.leq_k(a.op(o, ex, ez), a.op(o, ey, ez))) return InterlacingFailure{ex, ey, ez, o};
        }
        if (t_le) {
          for (BinaryOp o : {BinaryOp::kmeet, BinaryOp::kjoin})
            if (!a.leq_t(a.op(o, ex, ez), a.op(o, ey, ez))) return InterlacingFailure{ex, ey, ez, o};
        }
      }
    }
  }
  return std::nullopt;
}

bool is_interlaced(const FiniteAlgebra& a) { return !interlacing_failure(a).has_value(); }

}  // namespace latticeforge
