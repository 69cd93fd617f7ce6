// nilrig command-line tool. Machine output (JSON) goes to stdout, human text
// and progress to stderr.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nilrig/cohomology.hpp"
#include "nilrig/deformation.hpp"
#include "nilrig/families.hpp"
#include "nilrig/io.hpp"
#include "nilrig/operads.hpp"
#include "nilrig/report.hpp"
#include "nilrig/series.hpp"

using json = nlohmann::ordered_json;
using namespace nilrig;

namespace {

json one_based(const Tuple& t) {
  json out = json::array();
  for (auto i : t) out.push_back(i + 1);
  return out;
}

json defect_json(const DefectList& d) {
  json out = json::array();
  for (const auto& t : d.tuples) out.push_back(one_based(t));
  return out;
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

json invariants(const LieAlgebra& g) {
  json j;
  j["dim"] = g.dim();
  j["jacobi"] = jacobi_defect(g).clean();
  const SubspaceChain lcs = lower_central_series(g);
  j["lcs_dims"] = lcs.dims;
  j["nilindex"] = lcs.reaches_zero() ? json(lcs.dims.size() - 1) : json(nullptr);
  return j;
}

int cmd_validate(const std::string& path) {
  const AlgebraFile f = read_algebra_file(path);
  const DefectList jac = jacobi_defect(f.algebra);
  json out;
  out["file"] = path;
  out["dim"] = f.algebra.dim();
  out["brackets"] = f.algebra.constants().size();
  out["jacobi"] = jac.clean();
  out["jacobi_defects"] = defect_json(jac);
  emit(out);
  if (jac.clean()) {
    std::cerr << path << ": valid Lie algebra of dimension " << f.algebra.dim() << "\n";
    return 0;
  }
  const auto& t = jac.tuples.front();
  std::cerr << path << ": Jacobi identity fails at (X" << t[0] + 1 << ",X" << t[1] + 1 << ",X" << t[2] + 1
            << ")\n";
  return 1;
}

int cmd_analyze(const std::string& path, std::uint64_t seed, std::size_t samples) {
  const LieAlgebra g = parse_algebra(path);
  json out{{"file", path}, {"seed", seed}};
  out.update(invariants(g));
  const bool nilpotent = !out["nilindex"].is_null();
  out["char_seq"] = nilpotent ? json(characteristic_sequence(g, seed, samples).parts) : json(nullptr);
  out["center_dim"] = center_dim(g);
  out["derived_dim"] = derived_dim(g);
  out["derivation_dim"] = derivation_algebra_dim(g);
  emit(out);
  std::cerr << path << ": dim " << g.dim() << ", jacobi " << (out["jacobi"].get<bool>() ? "ok" : "FAILS")
            << ", nilindex " << (nilpotent ? std::to_string(out["nilindex"].get<std::size_t>()) : "none")
            << ", c(g) " << (nilpotent ? characteristic_sequence(g, seed, samples).str() : "-") << "\n";
  return 0;
}

int cmd_cohomology(const std::string& path, const std::string& kind_text, bool reps) {
  const LieAlgebra g = parse_algebra(path);
  const ComplexKind kind = parse_complex_kind(kind_text);
  auto last = std::chrono::steady_clock::now();
  Progress progress = [&](std::size_t done, std::size_t total) {
    const auto now = std::chrono::steady_clock::now();
    if (done == total || now - last > std::chrono::seconds(1)) {
      std::cerr << "\r  " << done << "/" << total << " columns" << (done == total ? "\n" : "") << std::flush;
      last = now;
    }
  };
  const CohomologyReport r = space_dims(g, kind, reps, g.dim() >= 9 ? progress : Progress{});
  json out;
  out["file"] = path;
  out["complex"] = to_string(kind);
  out["z2"] = r.z2;
  out["b2"] = r.b2;
  out["h2"] = r.h2;
  out["rigid_candidate"] = r.rigid_candidate;
  if (reps) {
    json arr = json::array();
    for (const auto& phi : r.representatives) arr.push_back(json::parse(cochain_to_text(phi)));
    out["representatives"] = arr;
  }
  emit(out);
  std::cerr << to_string(kind) << ": dim Z2 = " << r.z2 << ", dim B2 = " << r.b2 << ", dim H2 = " << r.h2 << "\n";
  return 0;
}

int cmd_deform(const std::string& base, const std::string& phi_path, int steps) {
  const LieAlgebra g = parse_algebra(base);
  const Cochain phi = parse_cochain(phi_path);
  if (phi.arity() != 2) throw std::invalid_argument(phi_path + ": expected an arity-2 cochain");
  if (phi.dim() != g.dim())
    throw std::invalid_argument("dimension mismatch: algebra has dim " + std::to_string(g.dim()) +
                                ", cochain has dim " + std::to_string(phi.dim()));
  const DeformationCheck check =
      steps == 2 ? check_linear_deformation_2step(g, phi) : check_linear_deformation_3step(g, phi);
  json out;
  out["steps"] = steps;
  out["all_hold"] = check.all_hold();
  json conds = json::array();
  for (const auto& c : check.conditions) {
    conds.push_back({{"name", c.name}, {"holds", c.holds},
                     {"witness", c.witness ? one_based(*c.witness) : json(nullptr)}});
    std::cerr << "  " << (c.holds ? "ok  " : "FAIL") << " " << c.name;
    if (c.witness) {
      std::cerr << " at (";
      for (std::size_t i = 0; i < c.witness->size(); ++i) std::cerr << (i ? "," : "") << "X" << (*c.witness)[i] + 1;
      std::cerr << ")";
    }
    std::cerr << "\n";
  }
  out["conditions"] = conds;
  emit(out);
  return check.all_hold() ? 0 : 1;
}

std::size_t param(const std::vector<std::string>& params, std::size_t i, const std::string& family) {
  if (i >= params.size()) throw std::invalid_argument("family " + family + ": missing parameter " + std::to_string(i + 1));
  std::size_t pos = 0;
  const unsigned long v = std::stoul(params[i], &pos);
  if (pos != params[i].size()) throw std::invalid_argument("family " + family + ": bad parameter '" + params[i] + "'");
  return v;
}

int cmd_family(const std::string& name, const std::vector<std::string>& params, const std::string& out_path) {
  std::vector<std::pair<std::string, LieAlgebra>> made;
  auto arity = [&](std::size_t k) {
    if (params.size() != k)
      throw std::invalid_argument("family " + name + " takes " + std::to_string(k) + " parameter(s)");
  };
  auto positive = [&](std::size_t i) {
    const std::size_t v = param(params, i, name);
    if (v == 0) throw std::invalid_argument("family " + name + ": multiplicity must be positive");
    return v;
  };
  if (name == "heisenberg") {
    arity(1);
    made.emplace_back(out_path, heisenberg(positive(0)));
  } else if (name == "g-p1") {
    arity(1);
    made.emplace_back(out_path, g_p1(positive(0)));
  } else if (name == "g-p12") {
    arity(1);
    const std::size_t p = param(params, 0, name);
    if (p < 2) throw std::invalid_argument("family g-p12: p must be at least 2");
    made.emplace_back(out_path, g_p12(p));
  } else if (name == "g-k3k2k1") {
    arity(3);
    const std::size_t k1 = positive(2);
    made.emplace_back(out_path, g_k3k2k1(param(params, 0, name), param(params, 1, name), k1));
  } else if (name == "g-p01") {
    arity(1);
    made.emplace_back(out_path, g_p01(positive(0)));
  } else if (name == "rigid2") {
    arity(1);
    made.emplace_back(out_path, rigid_2step(params[0]));
  } else if (name == "rigid3-7") {
    arity(0);
    made.emplace_back(out_path, rigid_3step_7());
  } else if (name == "abelian") {
    arity(1);
    made.emplace_back(out_path, abelian(positive(0)));
  } else if (name == "classification-F731") {
    arity(0);
    std::filesystem::create_directories(out_path);
    const auto members = classification_F731();
    for (std::size_t i = 0; i < members.size(); ++i) {
      char file[32];
      std::snprintf(file, sizeof file, "F731_%02zu.json", i + 1);
      made.emplace_back((std::filesystem::path(out_path) / file).string(), members[i]);
    }
  } else {
    throw std::invalid_argument("unknown family '" + name +
                                "' (heisenberg, g-p1, g-p12, g-k3k2k1, g-p01, rigid2, rigid3-7, abelian, "
                                "classification-F731)");
  }
  json files = json::array();
  for (const auto& [path, g] : made) {
    write_algebra(g, path);
    json j{{"path", path}};
    j.update(invariants(g));
    files.push_back(j);
    std::cerr << "wrote " << path << " (dim " << g.dim() << ")\n";
  }
  emit(json{{"family", name}, {"params", params}, {"files", files}});
  return 0;
}

int cmd_paper_report(std::uint64_t seed, const std::string& json_path) {
  ReportOptions opts;
  opts.seed = seed;
  opts.on_claim = [](const Claim& c) {
    std::cerr << "  [" << c.id << "] " << (c.pass ? "pass" : "FAIL") << " (" << static_cast<long>(c.runtime_ms)
              << " ms)\n";
  };
  const ReportDoc doc = run_report(opts);
  std::cerr << report_to_text(doc);
  const std::string text = report_to_json(doc);
  if (json_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(json_path);
    if (!f) throw std::runtime_error("cannot write " + json_path);
    f << text;
  }
  return doc.all_pass() ? 0 : 1;
}

int cmd_operad_check(std::size_t order) {
  const DimSequence p = dims_2nilp(order), d = dual_dims_2nilp(order);
  const TruncatedSeries res = koszul_check(gen_function(p, order), gen_function(d, order));
  json out;
  out["order"] = order;
  json pd = json::array(), dd = json::array(), r = json::array();
  for (const auto& v : p.dims) pd.push_back(v.get_str());
  for (const auto& v : d.dims) dd.push_back(v.get_str());
  for (std::size_t k = 0; k <= res.order(); ++k) r.push_back(to_string(res[k]));
  out["dims_2nilp"] = pd;
  out["dims_2nilp_dual"] = dd;
  out["residual"] = r;
  out["residual_zero"] = res.is_zero();
  json table = json::array();
  for (const auto& e : static_dims_table())
    table.push_back({{"operad", e.operad}, {"arity", e.arity}, {"dim", e.dim}, {"note", e.note}});
  out["table"] = table;
  emit(out);
  std::cerr << "n    2Nilp    2Nilp!\n";
  for (std::size_t n = 0; n < order; ++n)
    std::cerr << n + 1 << "    " << p.dims[n].get_str() << "    " << d.dims[n].get_str() << "\n";
  std::cerr << "residual to order " << order << ": " << (res.is_zero() ? "zero" : "NONZERO") << "\n";
  return res.is_zero() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact deformation cohomology of nilpotent Lie algebras"};
  app.require_subcommand(1);

  std::string file, phi, kind, name, out_path, json_path;
  std::uint64_t seed = kDefaultSeed;
  std::size_t samples = 50, order = 8;
  bool reps = false;
  int steps = 2;
  std::vector<std::string> params;

  auto* validate = app.add_subcommand("validate", "parse an algebra file and check the Jacobi identity");
  validate->add_option("file", file)->required();

  auto* analyze = app.add_subcommand("analyze", "structural invariants");
  analyze->add_option("file", file)->required();
  analyze->add_option("--seed", seed);
  analyze->add_option("--samples", samples, "random elements tried for c(g)");

  auto* cohom = app.add_subcommand("cohomology", "dimensions of Z2, B2, H2");
  cohom->add_option("file", file)->required();
  cohom->add_option("--complex", kind)->required()->check(CLI::IsMember({"chevalley", "ch", "cr"}));
  cohom->add_flag("--representatives", reps, "emit a basis of H2 representatives");

  auto* deform = app.add_subcommand("deform", "check whether mu0 + t phi stays in pNilp_n");
  deform->add_option("base", file)->required();
  deform->add_option("phi", phi)->required();
  deform->add_option("--steps", steps)->required()->check(CLI::IsMember({2, 3}));

  auto* family = app.add_subcommand("family", "write a named algebra");
  family->add_option("name", name)->required();
  family->add_option("params", params);
  family->add_option("-o,--output", out_path)->required();

  auto* report = app.add_subcommand("paper-report", "recompute every claim into a pass/fail table");
  report->add_option("--seed", seed);
  report->add_option("--json", json_path, "write the JSON report here instead of stdout");

  auto* operad = app.add_subcommand("operad-check", "2Nilp / 2Nilp! series and the Koszul residual");
  operad->add_option("--order", order)->required()->check(CLI::Range(std::size_t{2}, std::size_t{64}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) return cmd_validate(file);
    if (*analyze) return cmd_analyze(file, seed, samples);
    if (*cohom) return cmd_cohomology(file, kind, reps);
    if (*deform) return cmd_deform(file, phi, steps);
    if (*family) return cmd_family(name, params, out_path);
    if (*report) return cmd_paper_report(seed, json_path);
    if (*operad) return cmd_operad_check(order);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
