#ifndef APOLAR_SYSTEM_FILE_HPP
#define APOLAR_SYSTEM_FILE_HPP

#include <string>
#include <vector>

#include "apolar/theorems.hpp"

namespace apolar {

// System file format:
//   vars: x y
//   x^2 - y      # one polynomial per line
//   y^2
// '#' starts a comment, blank lines are skipped, the header must be the
// first significant line. Throws IoError and SyntaxError carrying the
// file line and column.
PolynomialSystem load_system(const std::string& path);

// Roots file: one point per line, coordinates as rationals separated by
// commas. Same comment and blank-line rules as system files.
std::vector<Point> load_roots(const std::string& path, std::size_t nvars);

}  // namespace apolar

#endif
