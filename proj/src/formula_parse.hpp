#pragma once

#include "adfkit/formula.hpp"
#include "scan.hpp"

namespace adfkit::detail {

// Parses one formula starting at the scanner's position, leaving the
// scanner just past it. Shared by the file-format parsers.
Formula parse_formula_at(Scanner& scan);

}  // namespace adfkit::detail
