#pragma once

#include "rieszsum/precision.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace rieszsum {

// Fixed-count scientific serialization: deterministic and lossless for
// round-trips back into any reader at the stated digit count.
inline std::string format_real(const Real& v, unsigned digits) {
  return v.str(digits, std::ios_base::scientific);
}

class CsvWriter {
 public:
  CsvWriter(std::ostream& out, std::vector<std::string> columns, unsigned digits)
      : out_(out), n_cols_(columns.size()), digits_(digits) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (i) out_ << ',';
      out_ << columns[i];
    }
    out_ << '\n';
  }

  CsvWriter& field(std::uint64_t v) {
    sep();
    out_ << v;
    return *this;
  }
  CsvWriter& field(const Real& v) {
    sep();
    out_ << format_real(v, digits_);
    return *this;
  }
  CsvWriter& field(double v) { return field(Real(v)); }
  void endrow() {
    out_ << '\n';
    col_ = 0;
  }

 private:
  void sep() {
    if (col_++) out_ << ',';
  }
  std::ostream& out_;
  std::size_t n_cols_;
  unsigned digits_;
  std::size_t col_ = 0;
};

}  // namespace rieszsum
