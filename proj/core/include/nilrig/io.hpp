#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "nilrig/cochain.hpp"
#include "nilrig/lie_algebra.hpp"

namespace nilrig {

/// Malformed or invalid algebra/cochain document. what() starts with the
/// source name and, for syntax errors, the line and column.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bracket file: {"dim": n, "basis": [...], "brackets": [{"i": 1, "j": 2,
/// "v": {"3": "1"}}]} with 1-based indices, i < j, and rationals written as
/// "p/q" strings (integers are also accepted).
struct AlgebraFile {
  LieAlgebra algebra;
  std::vector<std::string> basis;  // empty when the file has none
};

AlgebraFile parse_algebra_text(const std::string& text, const std::string& source = "<input>");
AlgebraFile read_algebra_file(const std::string& path);
LieAlgebra parse_algebra(const std::string& path);

/// Canonical text: brackets sorted by (i, j), keys of v in increasing order,
/// rationals reduced, trailing newline.
std::string algebra_to_text(const LieAlgebra& g, const std::vector<std::string>& basis = {});
void write_algebra(const LieAlgebra& g, const std::string& path, const std::vector<std::string>& basis = {});

/// Skew 2-cochains share the bracket format.
Cochain parse_cochain_text(const std::string& text, const std::string& source = "<input>");
Cochain parse_cochain(const std::string& path);
std::string cochain_to_text(const Cochain& phi);
void write_cochain(const Cochain& phi, const std::string& path);

}  // namespace nilrig
