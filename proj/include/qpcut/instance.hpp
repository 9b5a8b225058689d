#ifndef QPCUT_INSTANCE_HPP
#define QPCUT_INSTANCE_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qpcut/numeric.hpp"

namespace qpcut {

/// A 0/1 assignment of the n binary variables.
using BinaryPoint = std::vector<std::uint8_t>;

/// Largest dimension the exhaustive enumeration routines accept.
inline constexpr int kMaxEnumerationDim = 25;

enum class Relation { kLe, kGe, kEq };

/// sum(x) <op> k with 0 <= k <= n.
struct CardinalityConstraint {
  Relation op = Relation::kLe;
  int k = 0;
};

/// weights . x <op> capacity with nonnegative weights; op is kLe or kGe.
struct KnapsackConstraint {
  Relation op = Relation::kLe;
  std::vector<double> weights;
  double capacity = 0.0;
};

using Constraint = std::variant<CardinalityConstraint, KnapsackConstraint>;

/// A quadratic 0-1 minimization instance: interaction matrix, linear costs
/// and the constraint set carving the feasible binary set out of {0,1}^n.
///
/// The matrix has nonnegative off-diagonal entries and a zero diagonal.
/// It need not be symmetric; cut construction reads it transposed.
struct QuadraticInstance {
  int n = 0;
  std::vector<double> b;  // dense n*n, row-major, zero diagonal
  std::vector<double> c;
  std::vector<Constraint> constraints;

  double b_at(int i, int j) const { return b[static_cast<std::size_t>(i) * n + j]; }
  double& b_at(int i, int j) { return b[static_cast<std::size_t>(i) * n + j]; }
};

/// Parse failure carrying the 1-based input line it occurred on
/// (0 when the failure is not tied to a single line).
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

/// Reads the line-oriented instance format:
///
///   # comment
///   n <int>
///   c <real> x n
///   b <i> <j> <real>              (0-based sparse triplet, repeatable)
///   constraint card <le|ge|eq> <k>
///   constraint knap <le|ge> <capacity> <w_0> ... <w_{n-1}>
///
/// Validates all instance invariants, including that the continuous
/// relaxation of the feasible set is nonempty. Throws ParseError.
QuadraticInstance parse_instance(std::istream& in);
QuadraticInstance parse_instance(std::string_view text);

/// Writes `inst` in the same format parse_instance reads. Numbers are
/// emitted in shortest round-trip form, so write/parse is the identity.
void write_instance(std::ostream& out, const QuadraticInstance& inst);

/// sum_i sum_{j != i} b_ij x_i x_j.
double quadratic_term(const QuadraticInstance& inst, const BinaryPoint& x);

/// quadratic_term(x) + c . x.
double objective_value(const QuadraticInstance& inst, const BinaryPoint& x);

/// True iff the binary point satisfies every constraint (knapsack rows
/// within kFeasTol).
bool is_feasible(const QuadraticInstance& inst, const BinaryPoint& x);

/// All feasible binary points in lexicographic order on (x_0, ..., x_{n-1}).
/// Throws Error when n exceeds `limit`.
std::vector<BinaryPoint> enumerate_feasible(const QuadraticInstance& inst,
                                            int limit = kMaxEnumerationDim);

}  // namespace qpcut

#endif  // QPCUT_INSTANCE_HPP
