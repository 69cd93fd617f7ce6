#include "nilrig/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace nilrig {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError(path + ": cannot write file");
  out << text;
}

std::string line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return std::to_string(line) + ":" + std::to_string(col);
}

Rational read_rational(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(static_cast<long>(v.get<long long>()));
  throw std::invalid_argument("rational must be a \"p/q\" string or an integer");
}

std::size_t read_index(const json& e, const char* key, std::size_t dim) {
  if (!e.contains(key) || !e[key].is_number_integer()) throw std::invalid_argument(std::string("missing integer '") + key + "'");
  const long long v = e[key].get<long long>();
  if (v < 1 || static_cast<std::size_t>(v) > dim)
    throw std::invalid_argument(std::string("index ") + key + "=" + std::to_string(v) + " out of range [1, " +
                                std::to_string(dim) + "]");
  return static_cast<std::size_t>(v);
}

struct Parsed {
  std::size_t dim = 0;
  std::vector<std::string> basis;
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, Vector>> brackets;  // 0-based
};

Parsed parse_document(const std::string& text, const std::string& source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(source + ":" + line_col(text, e.byte == 0 ? 0 : e.byte - 1) + ": malformed document (" +
                      e.what() + ")");
  }
  Parsed out;
  try {
    if (!doc.is_object()) throw std::invalid_argument("top level must be an object");
    if (!doc.contains("dim") || !doc["dim"].is_number_integer() || doc["dim"].get<long long>() < 0)
      throw std::invalid_argument("missing non-negative integer 'dim'");
    out.dim = doc["dim"].get<std::size_t>();
    if (doc.contains("basis")) {
      if (!doc["basis"].is_array()) throw std::invalid_argument("'basis' must be a list of names");
      for (const auto& b : doc["basis"]) {
        if (!b.is_string()) throw std::invalid_argument("'basis' must be a list of names");
        out.basis.push_back(b.get<std::string>());
      }
      if (out.basis.size() != out.dim) throw std::invalid_argument("'basis' length differs from 'dim'");
    }
  } catch (const std::exception& e) {
    throw FormatError(source + ": " + e.what());
  }
  const json brackets = doc.contains("brackets") ? doc["brackets"] : json::array();
  if (!brackets.is_array()) throw FormatError(source + ": 'brackets' must be a list");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t n = 0; n < brackets.size(); ++n) {
    const json& e = brackets[n];
    try {
      if (!e.is_object()) throw std::invalid_argument("entry must be an object");
      const std::size_t i = read_index(e, "i", out.dim);
      const std::size_t j = read_index(e, "j", out.dim);
      if (i >= j) throw std::invalid_argument("need i < j, got i=" + std::to_string(i) + " j=" + std::to_string(j));
      if (!seen.insert({i, j}).second) throw std::invalid_argument("duplicate bracket (" + std::to_string(i) + "," + std::to_string(j) + ")");
      if (!e.contains("v") || !e["v"].is_object()) throw std::invalid_argument("missing object 'v'");
      Vector v = zero_vector(out.dim);
      for (const auto& [key, val] : e["v"].items()) {
        std::size_t k = 0;
        try {
          std::size_t used = 0;
          const long long kk = std::stoll(key, &used);
          if (used != key.size() || kk < 1 || static_cast<std::size_t>(kk) > out.dim) throw std::out_of_range(key);
          k = static_cast<std::size_t>(kk);
        } catch (const std::exception&) {
          throw std::invalid_argument("component key '" + key + "' out of range [1, " + std::to_string(out.dim) + "]");
        }
        v[k - 1] = read_rational(val);
      }
      out.brackets.push_back({{i - 1, j - 1}, std::move(v)});
    } catch (const std::exception& ex) {
      throw FormatError(source + ": brackets[" + std::to_string(n) + "]: " + ex.what());
    }
  }
  return out;
}

std::string render(std::size_t dim, const std::vector<std::string>& basis,
                   const std::map<Tuple, Vector>& entries) {
  ordered_json doc;
  doc["dim"] = dim;
  if (!basis.empty()) doc["basis"] = basis;
  ordered_json list = ordered_json::array();
  for (const auto& [t, v] : entries) {
    ordered_json e;
    e["i"] = t[0] + 1;
    e["j"] = t[1] + 1;
    ordered_json vals = ordered_json::object();
    for (std::size_t k = 0; k < v.size(); ++k)
      if (sgn(v[k]) != 0) vals[std::to_string(k + 1)] = to_string(v[k]);
    e["v"] = vals;
    list.push_back(e);
  }
  doc["brackets"] = list;
  return doc.dump(2) + "\n";
}

}  // namespace

AlgebraFile parse_algebra_text(const std::string& text, const std::string& source) {
  Parsed p = parse_document(text, source);
  AlgebraFile out{LieAlgebra(p.dim), std::move(p.basis)};
  for (const auto& [ij, v] : p.brackets) out.algebra.set_bracket(ij.first, ij.second, v);
  return out;
}

AlgebraFile read_algebra_file(const std::string& path) { return parse_algebra_text(slurp(path), path); }

LieAlgebra parse_algebra(const std::string& path) { return read_algebra_file(path).algebra; }

std::string algebra_to_text(const LieAlgebra& g, const std::vector<std::string>& basis) {
  return render(g.dim(), basis, cochain_from_algebra(g).entries());
}

void write_algebra(const LieAlgebra& g, const std::string& path, const std::vector<std::string>& basis) {
  write_text(path, algebra_to_text(g, basis));
}

Cochain parse_cochain_text(const std::string& text, const std::string& source) {
  const Parsed p = parse_document(text, source);
  Cochain phi(2, p.dim);
  for (const auto& [ij, v] : p.brackets) phi.set({ij.first, ij.second}, v);
  return phi;
}

Cochain parse_cochain(const std::string& path) { return parse_cochain_text(slurp(path), path); }

std::string cochain_to_text(const Cochain& phi) {
  if (phi.arity() != 2) throw std::invalid_argument("only 2-cochains have a file format");
  return render(phi.dim(), {}, phi.entries());
}

void write_cochain(const Cochain& phi, const std::string& path) { write_text(path, cochain_to_text(phi)); }

}  // namespace nilrig
