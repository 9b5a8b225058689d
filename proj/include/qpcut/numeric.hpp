#ifndef QPCUT_NUMERIC_HPP
#define QPCUT_NUMERIC_HPP

#include <cmath>
#include <stdexcept>
#include <string>

namespace qpcut {

/// Absolute tolerance for feasibility checks on constraint rows.
inline constexpr double kFeasTol = 1e-9;

/// Pivot threshold below which a tableau entry is treated as zero.
inline constexpr double kPivotTol = 1e-9;

/// Base error type for the whole library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Running sum with Neumaier compensation. Keeps identity-style checks
/// (cut self-evaluation, objective bookkeeping) stable at 1e-12 scale
/// without resorting to extended precision.
class StableSum {
 public:
  void add(double term) {
    const double t = sum_ + term;
    if (std::abs(sum_) >= std::abs(term)) {
      comp_ += (sum_ - t) + term;
    } else {
      comp_ += (term - t) + sum_;
    }
    sum_ = t;
  }

  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Shortest round-trip decimal form of `v`, locale independent. Used for
/// every number the CLI emits so that reports and CSV traces are
/// byte-stable across runs and platforms.
std::string format_double(double v);

}  // namespace qpcut

#endif  // QPCUT_NUMERIC_HPP
