#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lorentz3 {

// RFC 4180 writer: CRLF line endings, fields quoted when they contain a
// comma, quote, CR or LF, embedded quotes doubled.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}

  void row(const std::vector<std::string>& fields);

 private:
  std::ostream& out_;
};

std::string csv_escape(const std::string& field);
// Shortest round-trip decimal form ("%.17g").
std::string format_double(double x);

}  // namespace lorentz3
