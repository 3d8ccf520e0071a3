#include "hgnoise/csv.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace hgnoise {
namespace {

constexpr int kRoundTripDigits = 17;

std::vector<double> parse_row(std::string_view line, std::size_t line_no) {
  std::vector<double> values;
  for (auto cell : split(line, ',')) {
    try {
      values.push_back(parse_number(cell));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("csv line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return values;
}

}  // namespace

std::string format_number(double value, int significant_digits) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) return "0";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, significant_digits);
  if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
  return std::string(buf, ptr);
}

double parse_number(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) text.remove_suffix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument("not a number: '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

void write_state_csv(std::ostream& out, const StateVector& psi) {
  for (const auto& a : psi.amplitudes()) {
    out << format_number(a.real(), kRoundTripDigits) << ',' << format_number(a.imag(), kRoundTripDigits) << '\n';
  }
}

StateVector read_state_csv(std::istream& in) {
  std::vector<Complex> amplitudes;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto values = parse_row(line, line_no);
    if (values.size() != 2) throw std::invalid_argument("csv line " + std::to_string(line_no) + ": expected re,im");
    amplitudes.emplace_back(values[0], values[1]);
  }
  return StateVector(std::move(amplitudes));
}

void write_matrix_csv(std::ostream& out, const Matrix& m) {
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (j) out << ',';
      out << format_number(m(i, j).real(), kRoundTripDigits) << ','
          << format_number(m(i, j).imag(), kRoundTripDigits);
    }
    out << '\n';
  }
}

Matrix read_matrix_csv(std::istream& in) {
  std::vector<Complex> entries;
  std::size_t rows = 0;
  std::size_t width = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto values = parse_row(line, line_no);
    if (values.size() % 2 != 0 || (rows > 0 && values.size() != width)) {
      throw std::invalid_argument("csv line " + std::to_string(line_no) + ": ragged row");
    }
    width = values.size();
    for (std::size_t k = 0; k < values.size(); k += 2) entries.emplace_back(values[k], values[k + 1]);
    ++rows;
  }
  if (rows * 2 != width && rows != 0) throw std::invalid_argument("csv matrix is not square");
  return Matrix(rows, std::move(entries));
}

}  // namespace hgnoise
