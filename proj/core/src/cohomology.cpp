#include "nilrig/cohomology.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace nilrig {

namespace {

std::string one_based(const Tuple& t) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i] + 1;
  os << ')';
  return os.str();
}

void require_at_most_step(const LieAlgebra& g, std::size_t p, const char* what) {
  const DefectList d = p == 2 ? two_step_defect(g) : three_step_defect(g);
  if (!d.clean())
    throw std::invalid_argument(std::string(what) + ": not " + std::to_string(p) +
                                "-step, nested bracket nonzero at " + one_based(d.tuples.front()));
}

// phi(v, w) for coordinate vectors, using skew values on basis pairs.
Vector eval2(const Cochain& phi, const Vector& v, const Vector& w) {
  const std::size_t n = phi.dim();
  Vector out = zero_vector(n);
  for (const auto& [t, val] : phi.entries()) {
    const Rational c = v[t[0]] * w[t[1]] - v[t[1]] * w[t[0]];
    axpy(out, c, val);
  }
  return out;
}

SparseRow encode(const std::map<Tuple, Vector>& entries, std::size_t n, std::size_t offset) {
  SparseRow row;
  for (const auto& [t, v] : entries) {
    std::size_t base = 0;
    for (auto i : t) base = base * n + i;
    base *= n;
    for (std::size_t k = 0; k < n; ++k)
      if (sgn(v[k]) != 0) row.emplace_back(offset + base + k, v[k]);
  }
  return row;
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

struct Maps {
  MultiMap mu;
  MultiMap mumu;
  explicit Maps(const LieAlgebra& g) : mu(bracket_map(g)), mumu(comp1(mu, mu)) {}
};

MultiMap ch_t(const Maps& m, const MultiMap& phi) { return comp1(m.mu, phi) + comp1(phi, m.mu); }

MultiMap r2(const Maps& m, const MultiMap& phi) {
  return comp1(m.mu, comp1(m.mu, phi)) + comp1(m.mu, comp1(phi, m.mu)) + comp1(phi, m.mumu);
}

std::vector<std::pair<std::size_t, std::size_t>> pairs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) out.emplace_back(i, j);
  return out;
}

// Image of each basis 2-cochain under the kind's Z^2 operator.
std::vector<SparseRow> operator_images(const LieAlgebra& g, ComplexKind kind, std::size_t& width,
                                       const Progress& progress) {
  const std::size_t n = g.dim();
  const std::size_t cols = cochain2_size(n);
  const Maps maps(g);
  const auto ij = pairs(n);
  width = kind == ComplexKind::CR ? ipow(n, 4) + ipow(n, 5) : ipow(n, 4);
  std::vector<SparseRow> images;
  images.reserve(cols);
  for (std::size_t c = 0; c < cols; ++c) {
    Cochain e(2, n);
    e.add({ij[c / n].first, ij[c / n].second}, c % n, 1);
    SparseRow row;
    switch (kind) {
      case ComplexKind::Chevalley:
        row = encode(chevalley_delta2(g, e).entries(), n, 0);
        break;
      case ComplexKind::CH:
        row = ch_t(maps, e.to_multimap()).to_sparse_row();
        break;
      case ComplexKind::CR: {
        row = encode(chevalley_delta2(g, e).entries(), n, 0);
        SparseRow r = r2(maps, e.to_multimap()).to_sparse_row(ipow(n, 4));
        row.insert(row.end(), r.begin(), r.end());
        break;
      }
    }
    images.push_back(std::move(row));
    if (progress) progress(c + 1, cols);
  }
  return images;
}

// Images of E_pq under the Chevalley d^1, in 2-cochain coordinates.
std::vector<SparseRow> delta1_images(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<SparseRow> out;
  out.reserve(n * n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      std::map<std::size_t, Rational> acc;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
          const std::size_t base = pair_index(n, a, b) * n;
          for (std::size_t k = 0; k < n; ++k) {
            Rational v = 0;
            if (q == a) v += g.constant(p, b, k);
            if (q == b) v += g.constant(a, p, k);
            if (p == k) v -= g.constant(a, b, q);
            if (sgn(v) != 0) acc[base + k] += v;
          }
        }
      SparseRow row;
      for (auto& [c, v] : acc)
        if (sgn(v) != 0) row.emplace_back(c, v);
      out.push_back(std::move(row));
    }
  return out;
}

std::size_t rank_of_rows(const std::vector<SparseRow>& rows, std::size_t width) {
  RowReducer r(width);
  for (const auto& row : rows) r.insert(row);
  return r.rank();
}

// Operator applied to a cochain given in coordinates, from the column images.
SparseRow combine(const std::vector<SparseRow>& images, const SparseRow& coords) {
  std::map<std::size_t, Rational> acc;
  for (const auto& [c, x] : coords)
    for (const auto& [r, v] : images[c]) acc[r] += x * v;
  SparseRow out;
  for (auto& [r, v] : acc)
    if (sgn(v) != 0) out.emplace_back(r, v);
  return out;
}

}  // namespace

Cochain chevalley_delta1(const LieAlgebra& g, const Cochain& f) {
  if (f.arity() != 1) throw std::invalid_argument("chevalley_delta1 needs a 1-cochain");
  if (f.dim() != g.dim()) throw std::invalid_argument("dimension mismatch");
  const std::size_t n = g.dim();
  std::vector<Vector> fx(n);
  for (std::size_t i = 0; i < n; ++i) fx[i] = f.value({i});
  Cochain out(2, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector v = bracket(g, fx[i], unit_vector(n, j));
      axpy(v, 1, bracket(g, unit_vector(n, i), fx[j]));
      const Vector& b = g.bracket_of(i, j);
      for (std::size_t a = 0; a < n; ++a) axpy(v, -b[a], fx[a]);
      if (!is_zero(v)) out.set({i, j}, v);
    }
  return out;
}

Cochain chevalley_delta2(const LieAlgebra& g, const Cochain& phi) {
  if (phi.arity() != 2) throw std::invalid_argument("chevalley_delta2 needs a 2-cochain");
  if (phi.dim() != g.dim()) throw std::invalid_argument("dimension mismatch");
  const std::size_t n = g.dim();
  Cochain out(3, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const Vector x = unit_vector(n, i), y = unit_vector(n, j), z = unit_vector(n, k);
        Vector v = bracket(g, x, phi.value({j, k}));
        axpy(v, -1, bracket(g, y, phi.value({i, k})));
        axpy(v, 1, bracket(g, z, phi.value({i, j})));
        axpy(v, -1, eval2(phi, g.bracket_of(i, j), z));
        axpy(v, 1, eval2(phi, g.bracket_of(i, k), y));
        axpy(v, -1, eval2(phi, g.bracket_of(j, k), x));
        if (!is_zero(v)) out.set({i, j, k}, v);
      }
  return out;
}

MultiMap ch_delta2(const LieAlgebra& g, const Cochain& phi) {
  if (phi.arity() != 2 || phi.dim() != g.dim()) throw std::invalid_argument("ch_delta2 needs a 2-cochain on g");
  require_at_most_step(g, 2, "ch_delta2");
  return ch_t(Maps(g), phi.to_multimap());
}

MultiMap ch_delta_general(const LieAlgebra& g, const Cochain& psi) {
  const std::size_t k = psi.arity();
  if (k < 1 || k > 3) throw std::invalid_argument("ch_delta_general supports arity 1..3");
  if (psi.dim() != g.dim()) throw std::invalid_argument("dimension mismatch");
  require_at_most_step(g, 2, "ch_delta_general");
  const std::size_t n = g.dim();
  const MultiMap P = psi.to_multimap();
  const MultiMap mu = bracket_map(g);

  // 0-based position of the first argument of each inserted mu.
  std::vector<std::size_t> starts;
  if (k % 2 == 0)
    for (std::size_t i = 1; i <= k / 2; ++i) starts.push_back(2 * i - 1);
  else
    for (std::size_t i = 1; i + 1 <= (k + 1) / 2; ++i) starts.push_back(2 * i);

  MultiMap out(k + 1, n);
  Tuple t(k + 1, 0);
  const std::size_t total = ipow(n, k + 1);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t r = idx;
    for (std::size_t p = k + 1; p-- > 0;) {
      t[p] = r % n;
      r /= n;
    }
    std::vector<Vector> tail;
    for (std::size_t p = 1; p <= k; ++p) tail.push_back(unit_vector(n, t[p]));
    Vector v = bracket(g, unit_vector(n, t[0]), P.eval(tail));
    for (auto s : starts) {
      std::vector<Vector> args;
      for (std::size_t p = 0; p < s; ++p) args.push_back(unit_vector(n, t[p]));
      args.push_back(mu.value({t[s], t[s + 1]}));
      for (std::size_t p = s + 2; p <= k; ++p) args.push_back(unit_vector(n, t[p]));
      axpy(v, 1, P.eval(args));
    }
    out.add(t, 1, v);
  }
  return out;
}

Cochain bullet_square(const Cochain& phi) {
  if (phi.arity() != 2) throw std::invalid_argument("bullet_square needs a 2-cochain");
  const std::size_t n = phi.dim();
  Cochain out(3, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector v = eval2(phi, phi.value({i, j}), unit_vector(n, k));
        axpy(v, 1, eval2(phi, phi.value({j, k}), unit_vector(n, i)));
        axpy(v, 1, eval2(phi, phi.value({k, i}), unit_vector(n, j)));
        if (!is_zero(v)) out.set({i, j, k}, v);
      }
  return out;
}

MultiMap r_delta2(const LieAlgebra& g, const Cochain& phi) {
  if (phi.arity() != 2 || phi.dim() != g.dim()) throw std::invalid_argument("r_delta2 needs a 2-cochain on g");
  require_at_most_step(g, 3, "r_delta2");
  return r2(Maps(g), phi.to_multimap());
}

MultiMap r_delta3(const LieAlgebra& g, const MultiMap& psi) {
  if (psi.arity() != 4 || psi.dim() != g.dim()) throw std::invalid_argument("r_delta3 needs a 4-linear map on g");
  const MultiMap mu = bracket_map(g);
  return comp1(mu, psi) - comp1(psi, mu);
}

RationalMatrix chevalley_delta1_matrix(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  return RationalMatrix::from_rows(cochain2_size(n), delta1_images(g)).transpose();
}

std::string to_string(ComplexKind kind) {
  switch (kind) {
    case ComplexKind::Chevalley: return "chevalley";
    case ComplexKind::CH: return "ch";
    case ComplexKind::CR: return "cr";
  }
  return "?";
}

ComplexKind parse_complex_kind(const std::string& text) {
  std::string s = text;
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "chevalley") return ComplexKind::Chevalley;
  if (s == "ch") return ComplexKind::CH;
  if (s == "cr") return ComplexKind::CR;
  throw std::invalid_argument("unknown complex '" + text + "' (expected chevalley, ch or cr)");
}

void require_complex(const LieAlgebra& g, ComplexKind kind) {
  const DefectList j = jacobi_defect(g);
  if (!j.clean()) throw std::invalid_argument("not a Lie algebra: Jacobi fails at " + one_based(j.tuples.front()));
  if (kind == ComplexKind::CH) require_at_most_step(g, 2, "CH complex");
  if (kind == ComplexKind::CR) require_at_most_step(g, 3, "CR complex");
}

RationalMatrix z2_operator_matrix(const LieAlgebra& g, ComplexKind kind) {
  require_complex(g, kind);
  std::size_t width = 0;
  auto images = operator_images(g, kind, width, {});
  return RationalMatrix::from_rows(width, std::move(images)).transpose();
}

CohomologyReport space_dims(const LieAlgebra& g, ComplexKind kind, bool representatives,
                            const Progress& progress) {
  require_complex(g, kind);
  const std::size_t n = g.dim();
  const std::size_t cols = cochain2_size(n);
  std::size_t width = 0;
  const auto images = operator_images(g, kind, width, progress);
  const auto d1 = delta1_images(g);

  CohomologyReport rep;
  rep.kind = kind;
  rep.z2 = cols - rank_of_rows(images, width);
  rep.b2 = rank_of_rows(d1, cols);
  for (const auto& b : d1)
    if (!combine(images, b).empty())
      throw std::logic_error("coboundary is not a cocycle for the " + to_string(kind) + " complex");
  rep.h2 = rep.z2 - rep.b2;
  rep.rigid_candidate = rep.h2 == 0;

  if (representatives && rep.h2 > 0) {
    const RationalMatrix m = RationalMatrix::from_rows(width, images).transpose();
    RowReducer span(cols);
    for (const auto& b : d1) span.insert(b);
    for (const auto& z : kernel_basis(m))
      if (span.insert(to_sparse(z))) rep.representatives.push_back(cochain_from_coordinates(n, z));
  }
  return rep;
}

NormalizedDims normalized_space_dims(const LieAlgebra& g, ComplexKind kind) {
  require_complex(g, kind);
  const std::size_t n = g.dim();
  const std::size_t cols = cochain2_size(n);
  // Coordinates with phi(X_1, .) are the first (n-1)*n columns.
  const std::size_t first_free = n == 0 ? 0 : (n - 1) * n;
  std::size_t width = 0;
  const auto images = operator_images(g, kind, width, {});
  const std::vector<SparseRow> normalized(images.begin() + first_free, images.end());

  const auto d1 = delta1_images(g);
  std::vector<SparseRow> projected;
  for (const auto& b : d1) {
    SparseRow p;
    for (const auto& e : b)
      if (e.first < first_free) p.push_back(e);
    projected.push_back(std::move(p));
  }
  NormalizedDims out;
  out.z2 = normalized.size() - rank_of_rows(normalized, width);
  out.b2 = rank_of_rows(d1, cols) - rank_of_rows(projected, cols);
  out.h2 = out.z2 - out.b2;
  return out;
}

}  // namespace nilrig
