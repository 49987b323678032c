#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sdcalc/circuit.hpp"

namespace sdcalc::cli {

enum class FileFormat { Sd, Json };

/// Syntax error in a diagram file. line/column are 1-based; 0 when the
/// error is structural (JSON type errors carry a path in the message instead).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);
  explicit ParseError(const std::string& what) : ParseError(0, 0, what) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A syntactically valid file before any circuit axiom has been checked.
struct DiagramFile {
  int genus = 0;
  std::vector<std::vector<Int>> curves;
  bool closed = false;
  std::optional<std::vector<Int>> switch_entries;  // 2g x 2g, row-major
};

/// JSON when the first non-blank character is '{', sd otherwise.
FileFormat sniff(std::string_view text);

DiagramFile parse_file(std::string_view text, FileFormat format);
inline DiagramFile parse_file(std::string_view text) { return parse_file(text, sniff(text)); }

/// Normalizes and validates. Throws CircuitError for curve-level failures and
/// PreconditionError for a switch that is not symplectic.
Diagram to_diagram(const DiagramFile& f);

/// Every failed axiom of the file, after orientations have been fixed where
/// possible. Empty iff to_diagram succeeds.
std::vector<ValidationFailure> file_failures(const DiagramFile& f);

Diagram parse(std::string_view text, FileFormat format);
inline Diagram parse(std::string_view text) { return parse(text, sniff(text)); }

/// Canonical forms: parse(emit(d)) == d and emit(parse(emit(d))) == emit(d).
std::string emit_sd(const Diagram& d);
std::string emit_json(const Diagram& d);

}  // namespace sdcalc::cli
