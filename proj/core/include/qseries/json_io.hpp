#ifndef QSERIES_JSON_IO_HPP
#define QSERIES_JSON_IO_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "qseries/congruence.hpp"
#include "qseries/series.hpp"

namespace qseries {

/// Malformed or schema-violating JSON input.
class JsonFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Single-line JSON renderings. Integers of any size are written as bare JSON
// numbers and read back without loss.

/// {"ring": "Z" | {"mod": m}, "order": N, "coeffs": [...]}
std::string series_to_json(const Series& s);
Series series_from_json(std::string_view text);

/// {"id", "bound", "instances", "status", ["reason",] "counterexample"}
/// where counterexample is {"params", "index", "lhs", "rhs"} or null. The
/// "reason" key appears only for skipped reports.
std::string report_to_json(const VerificationReport& r);
VerificationReport report_from_json(std::string_view text);

}  // namespace qseries

#endif  // QSERIES_JSON_IO_HPP
