#include "nilrig/families.hpp"

#include <algorithm>
#include <stdexcept>

#include "nilrig/cohomology.hpp"

namespace nilrig {

namespace {

// [X_i, X_j] += c X_k, 1-based.
void put(LieAlgebra& g, std::size_t i, std::size_t j, std::size_t k, const Rational& c = 1) {
  g.add_to_bracket(i - 1, j - 1, k - 1, c);
}

std::string name(std::size_t i, std::size_t j, std::size_t k) {
  return "a_{" + std::to_string(i) + "," + std::to_string(j) + "}^" + std::to_string(k);
}

struct Builder {
  CocycleTemplate t;

  // phi(X_i, X_j) gets X_k-coefficient `param` (1-based), registering it as free.
  void free_entry(std::size_t i, std::size_t j, std::size_t k, const std::string& param) {
    if (std::find(t.free.begin(), t.free.end(), param) == t.free.end()) t.free.push_back(param);
    term(i, j, k, param, 1);
  }
  void term(std::size_t i, std::size_t j, std::size_t k, const std::string& param, const Rational& c) {
    for (auto& e : t.entries)
      if (e.i == i - 1 && e.j == j - 1 && e.k == k - 1) {
        e.terms.emplace_back(param, c);
        return;
      }
    t.entries.push_back({i - 1, j - 1, k - 1, {{param, c}}});
  }
};

}  // namespace

LieAlgebra heisenberg(std::size_t p) {
  if (p < 1) throw std::invalid_argument("heisenberg needs p >= 1");
  LieAlgebra g(2 * p + 1);
  for (std::size_t i = 1; i <= p; ++i) put(g, 2 * i - 1, 2 * i, 2 * p + 1);
  return g;
}

LieAlgebra g_p1(std::size_t p) {
  if (p < 1) throw std::invalid_argument("g_p1 needs p >= 1");
  LieAlgebra g(2 * p + 1);
  for (std::size_t i = 1; i <= p; ++i) put(g, 1, 2 * i, 2 * i + 1);
  return g;
}

LieAlgebra g_p12(std::size_t p) {
  if (p < 2) throw std::invalid_argument("g_p12 needs p >= 2");
  LieAlgebra g(2 * p);
  for (std::size_t i = 1; i + 1 <= p; ++i) put(g, 1, 2 * i, 2 * i + 1);
  return g;
}

std::vector<std::string> rigid_2step_names() { return {"g5", "g7", "g9", "g6", "g8", "h6", "h8", "h10"}; }

LieAlgebra rigid_2step(const std::string& which) {
  if (which == "g5") return g_p1(2);
  if (which == "g7") {
    LieAlgebra g = g_p1(3);
    put(g, 2, 4, 7), put(g, 2, 6, 5), put(g, 4, 6, 3);
    return g;
  }
  if (which == "g9") {
    LieAlgebra g = g_p1(4);
    put(g, 2, 4, 7), put(g, 2, 8, 5), put(g, 4, 6, 9), put(g, 6, 8, 3);
    return g;
  }
  if (which == "g6") {
    LieAlgebra g = g_p12(3);
    put(g, 2, 6, 5), put(g, 4, 6, 3);
    return g;
  }
  if (which == "g8") {
    LieAlgebra g = g_p12(4);
    put(g, 2, 4, 7), put(g, 4, 8, 3), put(g, 6, 8, 5);
    return g;
  }
  if (which == "h6") {
    LieAlgebra g = g_p12(3);
    put(g, 2, 4, 6);
    return g;
  }
  if (which == "h8") {
    LieAlgebra g = g_p12(4);
    put(g, 2, 6, 5), put(g, 2, 4, 8);
    return g;
  }
  if (which == "h10") {
    LieAlgebra g = g_p12(5);
    put(g, 2, 4, 10), put(g, 2, 6, 5), put(g, 2, 8, 3);
    put(g, 4, 6, 9), put(g, 4, 8, 7), put(g, 6, 8, 3);
    return g;
  }
  throw std::invalid_argument("unknown rigid 2-step algebra '" + which + "'");
}

LieAlgebra g_k3k2k1(std::size_t k3, std::size_t k2, std::size_t k1) {
  if (k3 < 1 || k1 < 1) throw std::invalid_argument("g_k3k2k1 needs k3 >= 1 and k1 >= 1");
  LieAlgebra g(3 * k3 + 2 * k2 + k1);
  for (std::size_t i = 0; i < k3; ++i) {
    put(g, 1, 2 + 3 * i, 3 + 3 * i);
    put(g, 1, 3 + 3 * i, 4 + 3 * i);
  }
  for (std::size_t j = 1; j <= k2; ++j) put(g, 1, 3 * k3 + 2 * j, 3 * k3 + 2 * j + 1);
  return g;
}

LieAlgebra g_p01(std::size_t p) {
  if (p < 1) throw std::invalid_argument("g_p01 needs p >= 1");
  LieAlgebra g(3 * p + 1);
  for (std::size_t i = 1; i <= p; ++i) {
    put(g, 1, 3 * i - 1, 3 * i);
    put(g, 1, 3 * i, 3 * i + 1);
  }
  return g;
}

LieAlgebra rigid_3step_7() {
  LieAlgebra g = g_p01(2);
  put(g, 2, 3, 4), put(g, 3, 5, 7), put(g, 5, 6, 4), put(g, 2, 5, 6);
  return g;
}

Cochain CocycleTemplate::instantiate(const std::map<std::string, Rational>& coeffs) const {
  for (const auto& [n, c] : coeffs)
    if (std::find(free.begin(), free.end(), n) == free.end())
      throw std::invalid_argument("'" + n + "' is not a parameter of the " + family + " template");
  Cochain phi(2, dim);
  for (const auto& e : entries) {
    Rational v = 0;
    for (const auto& [n, c] : e.terms) {
      auto it = coeffs.find(n);
      if (it != coeffs.end()) v += c * it->second;
    }
    if (sgn(v) != 0) phi.add({e.i, e.j}, e.k, v);
  }
  return phi;
}

Cochain CocycleTemplate::basis_element(const std::string& param) const { return instantiate({{param, 1}}); }

CocycleTemplate normalized_cocycle_template(const std::string& family, std::size_t p) {
  Builder b;
  b.t.family = family;
  b.t.p = p;
  if (family == "221") {
    if (p < 2) throw std::invalid_argument("the 221 template needs p >= 2");
    b.t.dim = 2 * p + 1;
    for (std::size_t k = 3; k <= p; ++k) b.free_entry(2, 4, 2 * k + 1, name(2, 4, 2 * k + 1));
    for (std::size_t i = 3; i <= p; ++i)
      for (std::size_t k = 2; k <= p; ++k) b.free_entry(2, 2 * i, 2 * k + 1, name(2, 2 * i, 2 * k + 1));
    for (std::size_t i = 2; i <= p; ++i)
      for (std::size_t j = i + 1; j <= p; ++j)
        for (std::size_t k = 1; k <= p; ++k) b.free_entry(2 * i, 2 * j, 2 * k + 1, name(2 * i, 2 * j, 2 * k + 1));
    b.t.relations.push_back("phi(X_1, .) = 0 and phi(X_odd, .) = 0");
  } else if (family == "Z2kk" || family == "C1" || family == "C2") {
    if (p < 2) throw std::invalid_argument("the " + family + " template needs p >= 2");
    b.t.dim = 2 * p;
    if (family == "Z2kk") b.free_entry(1, 2 * p, 2 * p, "a");
    const std::size_t top = family == "C2" ? p - 1 : p;
    for (std::size_t i = 1; i <= top; ++i)
      for (std::size_t j = i + 1; j <= top; ++j) {
        for (std::size_t k = 1; k + 1 <= p; ++k) b.free_entry(2 * i, 2 * j, 2 * k + 1, name(2 * i, 2 * j, 2 * k + 1));
        if (family != "C1") b.free_entry(2 * i, 2 * j, 2 * p, name(2 * i, 2 * j, 2 * p));
      }
    b.t.relations.push_back("phi(X_odd, .) = 0");
    if (family != "Z2kk") b.t.relations.push_back("phi(X_1, .) = 0");
    else b.t.relations.push_back("phi(X_1, X_i) = 0 for i < 2p");
  } else if (family == "p01") {
    if (p < 1) throw std::invalid_argument("the p01 template needs p >= 1");
    b.t.dim = 3 * p + 1;
    for (std::size_t i = 1; i <= p; ++i)
      for (std::size_t j = i; j <= p; ++j)
        for (std::size_t k = 1; k <= p; ++k) b.free_entry(3 * i - 1, 3 * j, 3 * k + 1, name(3 * i - 1, 3 * j, k));
    for (std::size_t i = 1; i <= p; ++i)
      for (std::size_t j = i + 1; j <= p; ++j)
        for (std::size_t k = 1; k <= p; ++k) b.free_entry(3 * i, 3 * j - 1, 3 * k + 1, name(3 * i, 3 * j - 1, k));
    for (std::size_t i = 1; i <= p; ++i)
      for (std::size_t j = i + 1; j <= p; ++j)
        for (std::size_t k = 1; k <= p; ++k) {
          b.term(3 * i - 1, 3 * j - 1, 3 * k, name(3 * i, 3 * j - 1, k), 1);
          b.term(3 * i - 1, 3 * j - 1, 3 * k, name(3 * i - 1, 3 * j, k), 1);
          b.free_entry(3 * i - 1, 3 * j - 1, 3 * k + 1, name(3 * i - 1, 3 * j - 1, k));
          b.t.relations.push_back("X_" + std::to_string(3 * k) + "-coefficient of phi(X_" + std::to_string(3 * i - 1) +
                                  ", X_" + std::to_string(3 * j - 1) + ") = " + name(3 * i, 3 * j - 1, k) + " + " +
                                  name(3 * i - 1, 3 * j, k));
        }
  } else if (family == "clas3111") {
    if (p < 2) throw std::invalid_argument("the clas3111 template needs p >= 2");
    const std::size_t n = p + 3;
    b.t.dim = n;
    for (std::size_t k = 5; k <= n; ++k) b.free_entry(2, k, 4, name(2, k, 4));
    for (std::size_t l = 5; l <= n; ++l)
      for (std::size_t k = l + 1; k <= n; ++k) b.free_entry(l, k, 4, name(l, k, 4));
  } else {
    throw std::invalid_argument("unknown cocycle template '" + family + "'");
  }
  return b.t;
}

LieAlgebra deformed_2step(Base2Step base, const FamilyParams& params) {
  const bool ok = base == Base2Step::GP1 ? params.family == "221"
                                          : (params.family == "C1" || params.family == "C2");
  if (!ok) throw std::invalid_argument("template '" + params.family + "' does not deform this base");
  const CocycleTemplate t = normalized_cocycle_template(params.family, params.p);
  LieAlgebra g = base == Base2Step::GP1 ? g_p1(params.p) : g_p12(params.p);
  const Cochain phi = t.instantiate(params.coeffs);
  for (const auto& [ij, v] : phi.entries())
    for (std::size_t k = 0; k < v.size(); ++k)
      if (sgn(v[k]) != 0) g.add_to_bracket(ij[0], ij[1], k, v[k]);
  return g;
}

const std::vector<std::vector<int>>& classification_F731_tuples() {
  static const std::vector<std::vector<int>> list = {
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0, 0, 0, 1}, {0, 0, 1, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 1, 0, 0, 0, 0, 0, 1}, {0, 0, 0, 1, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 1, 0, 0, 0, 0},
      {1, 0, 0, 0, 0, 1, 0, 0, 1, 0}, {1, 0, 0, 0, 0, 0, 0, 0, 1, 0}, {1, 0, 0, 0, 1, 0, 1, 0, 0, 0},
      {0, 0, 0, 0, 0, 1, 0, 0, 1, 0}, {0, 0, 1, 1, 0, 0, 0, 0, 1, 0}, {1, 0, 0, 1, 0, 0, 1, 0, 0, 0},
      {1, 0, 0, 1, 0, 0, 0, 0, 0, 1}, {1, 0, 0, 0, 0, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0, 0, 1, 0},
      {1, 0, 0, 0, 0, 0, 0, 0, 0, 1}};
  return list;
}

LieAlgebra F731_member(const std::vector<Rational>& ab) {
  if (ab.size() != 10) throw std::invalid_argument("expected (a1..a5, b1..b5)");
  const CocycleTemplate t = normalized_cocycle_template("p01", 2);
  // a_r is the X4 (k = 1) coefficient and b_r the X7 (k = 2) coefficient.
  const std::pair<std::size_t, std::size_t> slots[5] = {{2, 3}, {3, 5}, {2, 6}, {5, 6}, {2, 5}};
  std::map<std::string, Rational> coeffs;
  for (std::size_t r = 0; r < 5; ++r) {
    coeffs[name(slots[r].first, slots[r].second, 1)] = ab[r];
    coeffs[name(slots[r].first, slots[r].second, 2)] = ab[5 + r];
  }
  LieAlgebra g = g_p01(2);
  const Cochain phi = t.instantiate(coeffs);
  for (const auto& [ij, v] : phi.entries())
    for (std::size_t k = 0; k < v.size(); ++k)
      if (sgn(v[k]) != 0) g.add_to_bracket(ij[0], ij[1], k, v[k]);
  return g;
}

std::vector<LieAlgebra> classification_F731() {
  std::vector<LieAlgebra> out;
  for (const auto& tuple : classification_F731_tuples()) {
    std::vector<Rational> ab(tuple.begin(), tuple.end());
    out.push_back(F731_member(ab));
  }
  return out;
}

CountCheck cocycle_space_dim_221(std::size_t p) {
  if (p < 2) throw std::invalid_argument("cocycle_space_dim_221 needs p >= 2");
  const CocycleTemplate t = normalized_cocycle_template("221", p);
  const LieAlgebra g = g_p1(p);
  std::vector<SparseRow> rows;
  for (const auto& param : t.free) rows.push_back(ch_delta2(g, t.basis_element(param)).to_sparse_row());
  const std::size_t n = g.dim();
  RowReducer r(n * n * n * n);
  for (auto& row : rows) r.insert(std::move(row));
  CountCheck out;
  out.computed = t.free.size() - r.rank();
  out.closed_form = p * (p + 1) * (p - 2) / 2;
  return out;
}

}  // namespace nilrig
