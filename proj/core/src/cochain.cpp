#include "nilrig/cochain.hpp"

#include <algorithm>
#include <stdexcept>

namespace nilrig {

namespace {

void check_tuple(const Tuple& t, std::size_t arity, std::size_t dim) {
  if (t.size() != arity) throw std::invalid_argument("tuple length does not match arity");
  for (auto i : t)
    if (i >= dim) throw std::out_of_range("basis index out of range");
}

// Sorts t in place; returns the sign of the permutation, or 0 on a repeat.
int sort_with_sign(Tuple& t) {
  int sign = 1;
  for (std::size_t a = 1; a < t.size(); ++a)
    for (std::size_t b = a; b > 0 && t[b - 1] >= t[b]; --b) {
      if (t[b - 1] == t[b]) return 0;
      std::swap(t[b - 1], t[b]);
      sign = -sign;
    }
  return sign;
}

void add_into(std::map<Tuple, Vector>& entries, const Tuple& t, const Rational& c, const Vector& v,
              std::size_t dim) {
  if (sgn(c) == 0 || nilrig::is_zero(v)) return;
  auto [it, inserted] = entries.try_emplace(t, zero_vector(dim));
  axpy(it->second, c, v);
  if (nilrig::is_zero(it->second)) entries.erase(it);
}

}  // namespace

// ---------------------------------------------------------------------------
// MultiMap

Vector MultiMap::value(const Tuple& t) const {
  check_tuple(t, arity_, dim_);
  auto it = entries_.find(t);
  return it == entries_.end() ? zero_vector(dim_) : it->second;
}

void MultiMap::add(const Tuple& t, const Rational& c, const Vector& v) {
  check_tuple(t, arity_, dim_);
  if (v.size() != dim_) throw std::invalid_argument("value has wrong length");
  add_into(entries_, t, c, v, dim_);
}

void MultiMap::add(const Tuple& t, std::size_t k, const Rational& c) {
  if (k >= dim_) throw std::out_of_range("basis index out of range");
  add(t, c, unit_vector(dim_, k));
}

std::optional<Tuple> MultiMap::first_nonzero() const {
  if (entries_.empty()) return std::nullopt;
  return entries_.begin()->first;
}

Vector MultiMap::eval(const std::vector<Vector>& args) const {
  if (args.size() != arity_) throw std::invalid_argument("wrong number of arguments");
  for (const auto& a : args)
    if (a.size() != dim_) throw std::invalid_argument("argument has wrong length");
  Vector out = zero_vector(dim_);
  for (const auto& [t, v] : entries_) {
    Rational c = 1;
    for (std::size_t p = 0; p < arity_ && sgn(c) != 0; ++p) c *= args[p][t[p]];
    axpy(out, c, v);
  }
  return out;
}

MultiMap& MultiMap::operator+=(const MultiMap& other) {
  if (other.arity_ != arity_ || other.dim_ != dim_) throw std::invalid_argument("shape mismatch");
  for (const auto& [t, v] : other.entries_) add_into(entries_, t, 1, v, dim_);
  return *this;
}

MultiMap& MultiMap::operator-=(const MultiMap& other) {
  if (other.arity_ != arity_ || other.dim_ != dim_) throw std::invalid_argument("shape mismatch");
  for (const auto& [t, v] : other.entries_) add_into(entries_, t, -1, v, dim_);
  return *this;
}

MultiMap MultiMap::scaled(const Rational& c) const {
  MultiMap out(arity_, dim_);
  for (const auto& [t, v] : entries_) add_into(out.entries_, t, c, v, dim_);
  return out;
}

MultiMap MultiMap::permuted(const std::vector<std::size_t>& sigma) const {
  if (sigma.size() != arity_) throw std::invalid_argument("permutation has wrong length");
  std::vector<bool> seen(arity_, false);
  for (auto s : sigma) {
    if (s < 1 || s > arity_ || seen[s - 1]) throw std::invalid_argument("not a permutation");
    seen[s - 1] = true;
  }
  // result(x) = this(x_{sigma(1)}, ..): the entry at tuple u of `this` lands at
  // the tuple t with t[sigma(p)-1] = u[p].
  MultiMap out(arity_, dim_);
  for (const auto& [u, v] : entries_) {
    Tuple t(arity_);
    for (std::size_t p = 0; p < arity_; ++p) t[sigma[p] - 1] = u[p];
    out.entries_.emplace(std::move(t), v);
  }
  return out;
}

SparseRow MultiMap::to_sparse_row(std::size_t offset) const {
  SparseRow row;
  for (const auto& [t, v] : entries_) {
    std::size_t base = 0;
    for (auto i : t) base = base * dim_ + i;
    base *= dim_;
    for (std::size_t k = 0; k < dim_; ++k)
      if (sgn(v[k]) != 0) row.emplace_back(offset + base + k, v[k]);
  }
  return row;  // map order is lexicographic, so columns are already sorted
}

// ---------------------------------------------------------------------------
// Cochain

Vector Cochain::value(const Tuple& t) const {
  check_tuple(t, arity_, dim_);
  Tuple s = t;
  const int sign = sort_with_sign(s);
  if (sign == 0) return zero_vector(dim_);
  auto it = entries_.find(s);
  if (it == entries_.end()) return zero_vector(dim_);
  Vector out = it->second;
  if (sign < 0)
    for (auto& x : out) x = -x;
  return out;
}

void Cochain::set(const Tuple& t, const Vector& v) {
  check_tuple(t, arity_, dim_);
  if (v.size() != dim_) throw std::invalid_argument("value has wrong length");
  Tuple s = t;
  const int sign = sort_with_sign(s);
  if (sign == 0) {
    if (!nilrig::is_zero(v)) throw std::invalid_argument("skew cochain must vanish on repeated arguments");
    return;
  }
  entries_.erase(s);
  add_into(entries_, s, sign, v, dim_);
}

void Cochain::add(const Tuple& t, std::size_t k, const Rational& c) {
  check_tuple(t, arity_, dim_);
  if (k >= dim_) throw std::out_of_range("basis index out of range");
  Tuple s = t;
  const int sign = sort_with_sign(s);
  if (sign == 0) {
    if (sgn(c) != 0) throw std::invalid_argument("skew cochain must vanish on repeated arguments");
    return;
  }
  add_into(entries_, s, Rational(sign) * c, unit_vector(dim_, k), dim_);
}

MultiMap Cochain::to_multimap() const {
  MultiMap out(arity_, dim_);
  for (const auto& [t, v] : entries_) {
    Tuple perm = t;
    // Every permutation of an increasing tuple, with its sign.
    do {
      Tuple s = perm;
      const int sign = sort_with_sign(s);
      out.add(perm, Rational(sign), v);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

// ---------------------------------------------------------------------------

std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j) {
  if (!(i < j && j < n)) throw std::out_of_range("pair index needs i < j < n");
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

std::size_t cochain2_size(std::size_t n) { return n * (n - (n > 0 ? 1 : 0)) / 2 * n; }

Vector to_coordinates(const Cochain& phi) {
  if (phi.arity() != 2) throw std::invalid_argument("coordinates are defined for 2-cochains");
  const std::size_t n = phi.dim();
  Vector out = zero_vector(cochain2_size(n));
  for (const auto& [t, v] : phi.entries())
    for (std::size_t k = 0; k < n; ++k) out[pair_index(n, t[0], t[1]) * n + k] = v[k];
  return out;
}

Cochain cochain_from_coordinates(std::size_t n, const Vector& coords) {
  if (coords.size() != cochain2_size(n)) throw std::invalid_argument("coordinate vector has wrong length");
  Cochain out(2, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::size_t base = pair_index(n, i, j) * n;
      Vector v(coords.begin() + base, coords.begin() + base + n);
      if (!is_zero(v)) out.set({i, j}, v);
    }
  return out;
}

MultiMap bracket_map(const LieAlgebra& g) {
  MultiMap out(2, g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j)
      if (i != j) out.add({i, j}, 1, g.bracket_of(i, j));
  return out;
}

MultiMap identity_map(std::size_t n) {
  MultiMap out(1, n);
  for (std::size_t i = 0; i < n; ++i) out.add({i}, i, 1);
  return out;
}

LieAlgebra algebra_from_cochain(const Cochain& phi) {
  if (phi.arity() != 2) throw std::invalid_argument("a bracket is a 2-cochain");
  LieAlgebra g(phi.dim());
  for (const auto& [t, v] : phi.entries()) g.set_bracket(t[0], t[1], v);
  return g;
}

Cochain cochain_from_algebra(const LieAlgebra& g) {
  Cochain out(2, g.dim());
  for (const auto& [ij, v] : g.constants()) out.set({ij.first, ij.second}, v);
  return out;
}

MultiMap comp1(const MultiMap& f, const MultiMap& h) {
  if (f.dim() != h.dim()) throw std::invalid_argument("dimension mismatch");
  if (f.arity() == 0 || h.arity() == 0) throw std::invalid_argument("comp1 needs positive arities");
  const std::size_t n = f.dim();
  // f's entries grouped by their first index.
  std::vector<std::vector<std::pair<Tuple, const Vector*>>> by_first(n);
  for (const auto& [t, v] : f.entries()) by_first[t[0]].emplace_back(Tuple(t.begin() + 1, t.end()), &v);

  MultiMap out(f.arity() + h.arity() - 1, n);
  for (const auto& [u, hv] : h.entries())
    for (std::size_t k = 0; k < n; ++k) {
      if (sgn(hv[k]) == 0) continue;
      for (const auto& [rest, fv] : by_first[k]) {
        Tuple t = u;
        t.insert(t.end(), rest.begin(), rest.end());
        out.add(t, hv[k], *fv);
      }
    }
  return out;
}

}  // namespace nilrig
