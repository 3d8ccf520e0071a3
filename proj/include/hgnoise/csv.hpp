#pragma once

// Locale-independent number formatting and the "re,im" CSV layout used for
// state vectors and density matrices.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "hgnoise/linalg.hpp"
#include "hgnoise/qudit_state.hpp"

namespace hgnoise {

/// Shortest "%.{digits}g"-equivalent text, '.' decimal point, negative zero
/// printed as "0".
std::string format_number(double value, int significant_digits = 12);

/// Parses text produced by format_number; throws std::invalid_argument.
double parse_number(std::string_view text);

/// One amplitude per line: "re,im". Full round-trip precision.
void write_state_csv(std::ostream& out, const StateVector& psi);
StateVector read_state_csv(std::istream& in);

/// One matrix row per line: "re00,im00,re01,im01,...". Full round-trip precision.
void write_matrix_csv(std::ostream& out, const Matrix& m);
Matrix read_matrix_csv(std::istream& in);

std::vector<std::string_view> split(std::string_view line, char sep);

}  // namespace hgnoise
