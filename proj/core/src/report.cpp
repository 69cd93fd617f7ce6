#include "nilrig/report.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "nilrig/cohomology.hpp"
#include "nilrig/deformation.hpp"
#include "nilrig/families.hpp"
#include "nilrig/io.hpp"
#include "nilrig/operads.hpp"
#include "nilrig/random.hpp"

namespace nilrig {

namespace {

template <class T>
std::string list(const std::vector<T>& xs) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  os << ']';
  return os.str();
}

std::string dims_note(const std::string& name, const CohomologyReport& r) {
  return name + " " + to_string(r.kind) + ": z2=" + std::to_string(r.z2) + " b2=" + std::to_string(r.b2) +
         " h2=" + std::to_string(r.h2);
}

std::string normalized_note(const std::string& name, const LieAlgebra& g, ComplexKind kind) {
  const NormalizedDims d = normalized_space_dims(g, kind);
  return name + " " + to_string(kind) + " restricted to phi(X1,.)=0: z2=" + std::to_string(d.z2) +
         " b2=" + std::to_string(d.b2) + " h2=" + std::to_string(d.h2);
}

std::string compact(const Cochain& phi) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, v] : phi.entries()) {
    os << (first ? "" : ", ") << "phi(X" << t[0] + 1 << ",X" << t[1] + 1 << ")=";
    bool lead = true;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (sgn(v[k]) == 0) continue;
      if (!lead) os << (sgn(v[k]) > 0 ? "+" : "");
      if (v[k] != 1) os << (v[k] == -1 ? std::string("-") : to_string(v[k]));
      os << "X" << k + 1;
      lead = false;
    }
    first = false;
  }
  return os.str();
}

void representative_notes(Claim& c, const std::string& name, const LieAlgebra& g, ComplexKind kind) {
  const CohomologyReport r = space_dims(g, kind, true);
  for (const auto& phi : r.representatives) c.notes.push_back(name + " class: " + compact(phi));
}

// ---------------------------------------------------------------------------

Claim heisenberg_ch(std::uint64_t) {
  Claim c;
  std::vector<std::size_t> ez, eh, z, h;
  for (std::size_t p = 1; p <= 4; ++p) {
    const CohomologyReport r = space_dims(heisenberg(p), ComplexKind::CH);
    ez.push_back(p * (2 * p + 1));
    eh.push_back(0);
    z.push_back(r.z2);
    h.push_back(r.h2);
  }
  c.expected = "z2=" + list(ez) + " h2=" + list(eh);
  c.computed = "z2=" + list(z) + " h2=" + list(h);
  return c;
}

Claim m_p_counts(std::uint64_t) {
  Claim c;
  std::vector<std::size_t> computed, closed;
  for (std::size_t p = 2; p <= 6; ++p) {
    const CountCheck k = cocycle_space_dim_221(p);
    computed.push_back(k.computed);
    closed.push_back(k.closed_form);
  }
  const std::vector<std::size_t> stated = {0, 6, 20};
  c.expected = "m_p(p=2..6)=" + list(closed) + " m2,m3,m4=" + list(stated);
  c.computed = "m_p(p=2..6)=" + list(computed) + " m2,m3,m4=" +
               list(std::vector<std::size_t>(computed.begin(), computed.begin() + 3));
  return c;
}

Claim rigid_2step_ch(std::uint64_t) {
  Claim c;
  std::vector<std::string> exp, got;
  for (const auto& name : rigid_2step_names()) {
    const LieAlgebra g = rigid_2step(name);
    const CohomologyReport r = space_dims(g, ComplexKind::CH);
    exp.push_back(name + "=0");
    got.push_back(name + "=" + std::to_string(r.h2));
    if (r.h2 != 0) {
      c.notes.push_back(dims_note(name, r));
      representative_notes(c, name, g, ComplexKind::CH);
      c.notes.push_back(normalized_note(name, g, ComplexKind::CH));
    }
  }
  c.expected = "h2_CH " + list(exp);
  c.computed = "h2_CH " + list(got);
  return c;
}

Claim non_rigid_g51(std::uint64_t) {
  Claim c;
  const CohomologyReport r = space_dims(g_p1(5), ComplexKind::CH);
  c.expected = "h2_CH(g_{5,1}) > 0";
  c.computed = r.h2 > 0 ? c.expected : "h2_CH(g_{5,1}) = 0";
  c.notes.push_back(dims_note("g_{5,1}", r));
  return c;
}

Claim g_p12_formula(std::uint64_t) {
  Claim c;
  std::vector<std::size_t> exp, got;
  for (std::size_t p = 2; p <= 5; ++p) {
    const LieAlgebra g = g_p12(p);
    const CohomologyReport r = space_dims(g, ComplexKind::CH);
    exp.push_back((p * p * p - p * p - 2 * p + 2) / 2);
    got.push_back(r.h2);
    if (r.h2 != exp.back()) {
      const std::string name = "g_{" + std::to_string(p - 1) + ",2}";
      c.notes.push_back(dims_note(name, r));
      representative_notes(c, name, g, ComplexKind::CH);
      c.notes.push_back(normalized_note(name, g, ComplexKind::CH));
    }
  }
  c.expected = "h2_CH(p=2..5)=" + list(exp);
  c.computed = "h2_CH(p=2..5)=" + list(got);
  return c;
}

Claim cr_dimensions(std::uint64_t) {
  Claim c;
  std::vector<std::size_t> e1, g1, e2, g2;
  for (std::size_t n = 5; n <= 7; ++n) {
    const LieAlgebra g = g_k3k2k1(1, 0, n - 3);
    const CohomologyReport r = space_dims(g, ComplexKind::CR);
    e1.push_back((n - 3) * (n * n - 7 * n + 14) / 2 - 1);
    g1.push_back(r.h2);
    const std::string name = "g_{1,0," + std::to_string(n - 3) + "}";
    c.notes.push_back(dims_note(name, r));
    c.notes.push_back(normalized_note(name, g, ComplexKind::CR));
  }
  for (std::size_t p = 2; p <= 3; ++p) {
    const LieAlgebra g = g_p01(p);
    const CohomologyReport r = space_dims(g, ComplexKind::CR);
    e2.push_back(p * p * (3 * p - 1) / 2);
    g2.push_back(r.h2);
    const std::string name = "g_{" + std::to_string(p) + ",0,1}";
    c.notes.push_back(dims_note(name, r));
    c.notes.push_back(normalized_note(name, g, ComplexKind::CR));
  }
  c.expected = "h2_CR g_{1,0,p}(n=5,6,7)=" + list(e1) + " g_{p,0,1}(p=2,3)=" + list(e2);
  c.computed = "h2_CR g_{1,0,p}(n=5,6,7)=" + list(g1) + " g_{p,0,1}(p=2,3)=" + list(g2);
  return c;
}

std::vector<std::pair<std::string, LieAlgebra>> p2_family() {
  std::vector<std::pair<std::string, LieAlgebra>> out;
  out.emplace_back("g_{2,0,1}", g_p01(2));
  out.emplace_back("rigid7", rigid_3step_7());
  const auto members = classification_F731();
  for (std::size_t i = 0; i < members.size(); ++i) out.emplace_back("F731[" + std::to_string(i + 1) + "]", members[i]);
  return out;
}

Claim b2_bound(std::uint64_t) {
  Claim c;
  const std::size_t p = 2, bound = (3 * p + 1) * (p + 1);
  std::size_t worst = 0;
  std::vector<std::string> per;
  for (const auto& [name, g] : p2_family()) {
    const CohomologyReport r = space_dims(g, ComplexKind::CR);
    const NormalizedDims nd = normalized_space_dims(g, ComplexKind::CR);
    worst = std::max(worst, r.b2);
    per.push_back(name + "=" + std::to_string(r.b2) + "(normalized " + std::to_string(nd.b2) + ")");
  }
  c.expected = "max b2_CR <= " + std::to_string(bound);
  c.computed = worst <= bound ? c.expected : "max b2_CR = " + std::to_string(worst);
  c.notes.push_back("b2_CR " + list(per));
  return c;
}

Claim rigid_3step(std::uint64_t seed) {
  Claim c;
  const LieAlgebra g = rigid_3step_7();
  const CohomologyReport cr = space_dims(g, ComplexKind::CR);
  const CohomologyReport ch = space_dims(g, ComplexKind::Chevalley);
  const std::string jac = jacobi_defect(g).clean() ? "ok" : "fail";
  const std::string step = is_p_step(g, 3) ? "yes" : "no";
  c.expected = "jacobi=ok 3-step=yes c=(3,3,1) h2_CR=0";
  c.computed = "jacobi=" + jac + " 3-step=" + step + " c=" + characteristic_sequence(g, seed).str() +
               " h2_CR=" + std::to_string(cr.h2);
  c.notes.push_back(dims_note("rigid7", cr));
  c.notes.push_back(dims_note("rigid7", ch));
  if (cr.h2 != 0) {
    representative_notes(c, "rigid7 cr", g, ComplexKind::CR);
    c.notes.push_back(normalized_note("rigid7", g, ComplexKind::CR));
  }
  return c;
}

Claim classification(std::uint64_t seed) {
  Claim c;
  const auto members = classification_F731();
  std::size_t valid = 0;
  std::map<std::string, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const LieAlgebra& g = members[i];
    const bool ok = jacobi_defect(g).clean() && three_step_defect(g).clean() && is_p_step(g, 3) &&
                    characteristic_sequence(g, seed).str() == "(3,3,1)";
    if (ok) ++valid;
    std::ostringstream key;
    key << "lcs=" << list(lower_central_series(g).dims) << " center=" << center_dim(g)
        << " der=" << derivation_algebra_dim(g) << " h2_CR=" << space_dims(g, ComplexKind::CR).h2
        << " h2_C=" << space_dims(g, ComplexKind::Chevalley).h2;
    classes[key.str()].push_back(i + 1);
  }
  c.expected = "members=16 valid=16";
  c.computed = "members=" + std::to_string(members.size()) + " valid=" + std::to_string(valid);
  c.notes.push_back("invariant vectors separate " + std::to_string(classes.size()) + " classes");
  for (const auto& [key, ids] : classes)
    if (ids.size() > 1) c.notes.push_back("not separated by invariants: members " + list(ids) + " (" + key + ")");
  return c;
}

// Commutative binary trees on labeled leaves, enumerated as canonical strings.
const std::set<std::string>& trees(unsigned mask, std::map<unsigned, std::set<std::string>>& memo) {
  auto it = memo.find(mask);
  if (it != memo.end()) return it->second;
  std::set<std::string> out;
  if (std::popcount(mask) == 1) {
    out.insert("x" + std::to_string(std::countr_zero(mask) + 1));
  } else {
    for (unsigned a = (mask - 1) & mask; a > 0; a = (a - 1) & mask) {
      const unsigned b = mask ^ a;
      const auto left = trees(a, memo);
      const auto& right = trees(b, memo);
      for (const auto& l : left)
        for (const auto& r : right) out.insert("(" + std::min(l, r) + "," + std::max(l, r) + ")");
    }
  }
  return memo.emplace(mask, std::move(out)).first->second;
}

Claim operad_series(std::uint64_t) {
  Claim c;
  const DimSequence d = dual_dims_2nilp(8);
  std::vector<std::string> first;
  for (std::size_t i = 0; i < 4; ++i) first.push_back(d.dims[i].get_str());
  std::map<unsigned, std::set<std::string>> memo;
  bool agree = true;
  std::vector<std::size_t> oracle;
  for (unsigned n = 1; n <= 6; ++n) {
    oracle.push_back(trees((1u << n) - 1, memo).size());
    agree = agree && d.dims[n - 1] == oracle.back();
  }
  const TruncatedSeries res = koszul_check(gen_function(dims_2nilp(8), 8), gen_function(d, 8));
  c.expected = "dual=[1,1,3,15] tree_oracle(n<=6)=agree residual(order 8)=0";
  c.computed = "dual=" + list(first) + " tree_oracle(n<=6)=" + (agree ? "agree" : "differ") +
               " residual(order 8)=" + (res.is_zero() ? "0" : "nonzero");
  c.notes.push_back("tree counts n=1..6: " + list(oracle));
  return c;
}

// ---------------------------------------------------------------------------
// Structural property suite.

LieAlgebra shifted(const LieAlgebra& g, const Cochain& phi, const Rational& t) {
  LieAlgebra out = g;
  for (const auto& [ij, v] : phi.entries())
    for (std::size_t k = 0; k < v.size(); ++k)
      if (sgn(v[k]) != 0) out.add_to_bracket(ij[0], ij[1], k, t * v[k]);
  return out;
}

bool brute_force(const LieAlgebra& g, const Cochain& phi, std::size_t step) {
  for (int t : {1, 2, 3, 5}) {
    const LieAlgebra h = shifted(g, phi, t);
    if (!jacobi_defect(h).clean()) return false;
    if (!(step == 2 ? two_step_defect(h) : three_step_defect(h)).clean()) return false;
  }
  return true;
}

Cochain scaled(const Cochain& phi, const Rational& c) {
  Cochain out(phi.arity(), phi.dim());
  for (const auto& [t, v] : phi.entries())
    for (std::size_t k = 0; k < v.size(); ++k)
      if (sgn(v[k]) != 0) out.add(t, k, c * v[k]);
  return out;
}

Cochain sum(const Cochain& a, const Cochain& b) {
  Cochain out = a;
  for (const auto& [t, v] : b.entries())
    for (std::size_t k = 0; k < v.size(); ++k)
      if (sgn(v[k]) != 0) out.add(t, k, v[k]);
  return out;
}

// Cocycle-like perturbation: values in the center, vanishing on [g,g] + center.
Cochain safe_cochain(Rng& rng, const LieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<Vector> center;
  {
    RationalMatrix stacked(0, n);
    for (std::size_t i = 0; i < n; ++i) {
      const RationalMatrix ad = ad_matrix(g, unit_vector(n, i));
      for (std::size_t r = 0; r < n; ++r) stacked.append_row(ad.row(r));
    }
    center = kernel_basis(stacked);
  }
  RationalMatrix d(0, n);
  for (const auto& z : center) d.append_row(to_sparse(z));
  const SubspaceChain lcs = lower_central_series(g);
  if (lcs.bases.size() > 1)
    for (std::size_t r = 0; r < lcs.bases[1].rows(); ++r) d.append_row(lcs.bases[1].row(r));
  const auto functionals = kernel_basis(d);
  Cochain phi(2, n);
  if (functionals.size() < 2 || center.empty()) return phi;
  for (int rep = 0; rep < 2; ++rep) {
    const auto& la = functionals[rng.index(functionals.size())];
    const auto& lb = functionals[rng.index(functionals.size())];
    const Vector& z = center[rng.index(center.size())];
    const Rational c(rng.nonzero(-2, 2));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const Rational w = c * (la[i] * lb[j] - la[j] * lb[i]);
        if (sgn(w) == 0) continue;
        for (std::size_t k = 0; k < n; ++k)
          if (sgn(z[k]) != 0) phi.add({i, j}, k, w * z[k]);
      }
  }
  return phi;
}

Cochain random_phi(Rng& rng, const LieAlgebra& g) {
  const std::size_t n = g.dim();
  switch (rng.uniform(0, 5)) {
    case 0: return Cochain(2, n);
    case 1: return scaled(cochain_from_algebra(g), Rational(rng.nonzero(-2, 2)));
    case 2: return safe_cochain(rng, g);
    case 3: return random_cochain(rng, n, 2, 1 + rng.index(2));
    case 4: return chevalley_delta1(g, random_cochain(rng, n, 1, 1 + rng.index(3)));
    default: return sum(safe_cochain(rng, g), random_cochain(rng, n, 2, 1));
  }
}

Claim property_suite(std::uint64_t seed) {
  Claim c;
  Rng rng(seed);
  std::size_t chev_bad = 0, ch_bad = 0, r_bad = 0, contain_bad = 0, basis_bad = 0;
  const auto fixtures = property_fixtures();
  for (const auto& [name, g] : fixtures) {
    const RationalMatrix d1 = chevalley_delta1_matrix(g);
    const bool two = is_at_most_p_step(g, 2), three = is_at_most_p_step(g, 3);
    // Whole operators: d2 d1 = 0 as a matrix identity.
    if (!(z2_operator_matrix(g, ComplexKind::Chevalley) * d1).is_zero()) ++chev_bad, c.notes.push_back("d2 d1 != 0 on " + name);
    if (two && !(z2_operator_matrix(g, ComplexKind::CH) * d1).is_zero()) ++ch_bad, c.notes.push_back("T d1 != 0 on " + name);
    if (three && !(z2_operator_matrix(g, ComplexKind::CR) * d1).is_zero()) ++r_bad, c.notes.push_back("dR d1 != 0 on " + name);
    // The same on random 1-cochains through the pointwise operators.
    for (int s = 0; s < 20; ++s) {
      const Cochain f = random_cochain(rng, g.dim(), 1, 1 + rng.index(g.dim()));
      const Cochain df = chevalley_delta1(g, f);
      if (!chevalley_delta2(g, df).is_zero()) ++chev_bad;
      if (two && !ch_delta2(g, df).is_zero()) ++ch_bad;
      if (three && !r_delta2(g, df).is_zero()) ++r_bad;
    }
    if (two) {
      // ker T inside ker d2: the rows of d2 lie in the row space of T.
      const RationalMatrix t = z2_operator_matrix(g, ComplexKind::CH);
      const RationalMatrix ch = z2_operator_matrix(g, ComplexKind::Chevalley);
      RowReducer span(t.cols());
      for (std::size_t r = 0; r < t.rows(); ++r) span.insert(t.row(r));
      for (std::size_t r = 0; r < ch.rows(); ++r)
        if (!span.in_span(ch.row(r))) {
          ++contain_bad;
          c.notes.push_back("Z2_CH not inside Z2_Chevalley on " + name);
          break;
        }
    }
    std::vector<ComplexKind> kinds = {ComplexKind::Chevalley};
    if (two) kinds.push_back(ComplexKind::CH);
    if (three) kinds.push_back(ComplexKind::CR);
    for (auto kind : kinds) {
      const CohomologyReport base = space_dims(g, kind);
      for (int s = 0; s < 5; ++s) {
        const CohomologyReport moved = space_dims(basis_change(g, random_unimodular(rng, g.dim())), kind);
        if (moved.z2 != base.z2 || moved.b2 != base.b2) {
          ++basis_bad;
          c.notes.push_back("dims change under a basis change: " + name + " " + to_string(kind));
        }
      }
    }
  }

  std::size_t agree = 0, positive = 0;
  const std::size_t pairs = 100;
  for (std::size_t s = 0; s < pairs; ++s) {
    const std::size_t step = s < pairs / 2 ? 2 : 3;
    const LieAlgebra g = random_nilpotent(rng, 3 + rng.index(3), step);
    const Cochain phi = random_phi(rng, g);
    const bool check = step == 2 ? check_linear_deformation_2step(g, phi).all_hold()
                                 : check_linear_deformation_3step(g, phi).all_hold();
    const bool brute = brute_force(g, phi, step);
    if (check == brute) ++agree;
    else c.notes.push_back("deformation check disagrees with t-sampling on pair " + std::to_string(s));
    if (brute) ++positive;
  }
  c.notes.push_back(std::to_string(fixtures.size()) + " fixtures; " + std::to_string(positive) + " of " +
                    std::to_string(pairs) + " random pairs are deformations");

  auto ok = [](std::size_t bad) { return bad == 0 ? std::string("ok") : std::to_string(bad) + " failures"; };
  c.expected = "d2d1=ok Td1=ok dRd1=ok Z2_CH<=Z2_C=ok deformation=" + std::to_string(pairs) + "/" +
               std::to_string(pairs) + " basis_change=ok";
  c.computed = "d2d1=" + ok(chev_bad) + " Td1=" + ok(ch_bad) + " dRd1=" + ok(r_bad) + " Z2_CH<=Z2_C=" +
               ok(contain_bad) + " deformation=" + std::to_string(agree) + "/" + std::to_string(pairs) +
               " basis_change=" + ok(basis_bad);
  return c;
}

Claim jordan_checks(std::uint64_t seed) {
  Claim c;
  Rng rng(seed);
  const MultiMap m2 = symmetrized_matrix_product();
  const bool sym_ok = jordan_linearized_defect(m2).is_zero();
  std::size_t random_ok = 0;
  std::vector<std::size_t> dims;
  for (int s = 0; s < 3; ++s) {
    const MultiMap a = random_commutative_associative(rng, 4);
    dims.push_back(a.dim());
    if (jordan_linearized_defect(a).is_zero()) ++random_ok;
  }
  c.expected = "sym2x2=0 random=3/3";
  c.computed = std::string("sym2x2=") + (sym_ok ? "0" : "nonzero") + " random=" + std::to_string(random_ok) + "/3";
  c.notes.push_back("random algebra dims " + list(dims));
  c.notes.push_back(std::string("cocycle defect of the 2x2 product at itself: ") +
                    (jordan_cocycle_defect(m2, m2).is_zero() ? "0" : "nonzero"));
  return c;
}

struct Entry {
  const char* id;
  const char* description;
  Claim (*run)(std::uint64_t);
};

const std::vector<Entry>& catalog() {
  static const std::vector<Entry> entries = {
      {"1", "Heisenberg h_{2p+1}, p=1..4: dim Z2_CH = p(2p+1), dim H2_CH = 0", heisenberg_ch},
      {"2", "normalized cocycles of g_{p,1}: m_p = p(p+1)(p-2)/2", m_p_counts},
      {"3", "rigid 2-step algebras: dim H2_CH = 0", rigid_2step_ch},
      {"4", "g_{5,1} is not rigid: dim H2_CH > 0", non_rigid_g51},
      {"5", "dim H2_CH(g_{p-1,2}) = (p^3-p^2-2p+2)/2, p=2..5", g_p12_formula},
      {"6", "CR dimensions of g_{1,0,p} and g_{p,0,1}", cr_dimensions},
      {"7", "dim B2_CR <= (3p+1)(p+1) on the p=2 family", b2_bound},
      {"8", "rigid 7-dim 3-step algebra: Lie, 3-step, c=(3,3,1), dim H2_CR = 0", rigid_3step},
      {"9", "(3,3,1) classification list: 16 valid members", classification},
      {"10", "dual 2Nilp dimensions and the Koszul functional equation", operad_series},
      {"11", "structural properties of the coboundary operators and deformation checks", property_suite},
      {"12", "linearized Jordan identity on Jordan algebras", jordan_checks},
  };
  return entries;
}

}  // namespace

std::size_t ReportDoc::passed() const {
  return static_cast<std::size_t>(std::count_if(claims.begin(), claims.end(), [](const Claim& c) { return c.pass; }));
}

std::size_t ReportDoc::failed() const { return claims.size() - passed(); }

std::vector<std::string> claim_ids() {
  std::vector<std::string> ids;
  for (const auto& e : catalog()) ids.emplace_back(e.id);
  return ids;
}

Claim run_claim(const std::string& id, std::uint64_t seed) {
  for (const auto& e : catalog()) {
    if (id != e.id) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Claim c;
    try {
      c = e.run(seed);
      c.pass = c.expected == c.computed;
    } catch (const std::exception& ex) {
      c.computed = std::string("error: ") + ex.what();
      c.pass = false;
    }
    c.id = e.id;
    c.description = e.description;
    c.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return c;
  }
  throw std::out_of_range("unknown claim id '" + id + "'");
}

std::size_t thread_cap() {
  if (const char* env = std::getenv("NILRIG_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

ReportDoc run_report(const ReportOptions& options) {
  const auto ids = claim_ids();
  ReportDoc doc;
  doc.seed = options.seed;
  doc.claims.resize(ids.size());
  const std::size_t workers = std::min(ids.size(), options.threads ? options.threads : thread_cap());
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  auto work = [&] {
    for (std::size_t i; (i = next++) < ids.size();) {
      Claim c = run_claim(ids[i], options.seed);
      std::lock_guard lock(mu);
      if (options.on_claim) options.on_claim(c);
      doc.claims[i] = std::move(c);
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  return doc;
}

std::string report_to_json(const ReportDoc& doc) {
  nlohmann::ordered_json out;
  out["seed"] = doc.seed;
  nlohmann::ordered_json claims = nlohmann::ordered_json::array();
  for (const auto& c : doc.claims) {
    nlohmann::ordered_json j;
    j["id"] = c.id;
    j["description"] = c.description;
    j["expected"] = c.expected;
    j["computed"] = c.computed;
    j["pass"] = c.pass;
    j["runtime_ms"] = c.runtime_ms;
    j["notes"] = c.notes;
    claims.push_back(j);
  }
  out["claims"] = claims;
  out["summary"] = {{"total", doc.claims.size()}, {"passed", doc.passed()}, {"failed", doc.failed()}};
  return out.dump(2) + "\n";
}

std::string report_to_text(const ReportDoc& doc) {
  std::ostringstream os;
  for (const auto& c : doc.claims) {
    os << (c.pass ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.description << "\n"
       << "      expected: " << c.expected << "\n"
       << "      computed: " << c.computed << "\n";
    for (const auto& n : c.notes) os << "      note: " << n << "\n";
  }
  os << doc.passed() << "/" << doc.claims.size() << " claims pass\n";
  return os.str();
}

std::vector<std::pair<std::string, LieAlgebra>> property_fixtures() {
  std::vector<std::pair<std::string, LieAlgebra>> out;
  for (std::size_t p = 1; p <= 3; ++p) out.emplace_back("h_" + std::to_string(2 * p + 1), heisenberg(p));
  for (std::size_t p = 2; p <= 3; ++p) out.emplace_back("g_{" + std::to_string(p) + ",1}", g_p1(p));
  for (std::size_t p = 2; p <= 4; ++p) out.emplace_back("g_{" + std::to_string(p - 1) + ",2}", g_p12(p));
  for (const char* name : {"g7", "g6", "g8", "h6", "h8"}) out.emplace_back(name, rigid_2step(name));
  out.emplace_back("g_{1,0,2}", g_k3k2k1(1, 0, 2));
  out.emplace_back("g_{1,0,3}", g_k3k2k1(1, 0, 3));
  out.emplace_back("g_{1,1,1}", g_k3k2k1(1, 1, 1));
  out.emplace_back("g_{2,0,1}", g_p01(2));
  out.emplace_back("rigid7", rigid_3step_7());
  const auto members = classification_F731();
  out.emplace_back("F731[7]", members[6]);
  out.emplace_back("F731[12]", members[11]);
  out.emplace_back("h_3+abelian_2", direct_sum(heisenberg(1), abelian(2)));
  return out;
}

}  // namespace nilrig
