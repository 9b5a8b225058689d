#include "qpcut/instance.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "qpcut/lp.hpp"

namespace qpcut {

namespace {

std::string strip_comment(const std::string& line) {
  const auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

[[noreturn]] void fail(int line, const std::string& message) { throw ParseError(line, message); }

Relation parse_relation(int line, const std::string& tok, bool allow_eq) {
  if (tok == "le") return Relation::kLe;
  if (tok == "ge") return Relation::kGe;
  if (tok == "eq" && allow_eq) return Relation::kEq;
  fail(line, "unknown relation '" + tok + "'");
}

}  // namespace

ParseError::ParseError(int line, const std::string& message)
    : Error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

QuadraticInstance parse_instance(std::istream& in) {
  QuadraticInstance inst;
  bool have_n = false;
  bool have_c = false;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::istringstream ls(strip_comment(raw));
    std::string key;
    if (!(ls >> key)) continue;

    if (key == "n") {
      if (have_n) fail(lineno, "duplicate n line");
      if (!(ls >> inst.n) || inst.n <= 0) fail(lineno, "n must be a positive integer");
      have_n = true;
      inst.b.assign(static_cast<std::size_t>(inst.n) * inst.n, 0.0);
      continue;
    }
    if (!have_n) fail(lineno, "n must be declared first");

    if (key == "c") {
      if (have_c) fail(lineno, "duplicate c line");
      inst.c.assign(static_cast<std::size_t>(inst.n), 0.0);
      for (int i = 0; i < inst.n; ++i) {
        if (!(ls >> inst.c[i])) fail(lineno, "expected " + std::to_string(inst.n) + " linear costs");
      }
      have_c = true;
    } else if (key == "b") {
      int i = 0;
      int j = 0;
      double value = 0.0;
      if (!(ls >> i >> j >> value)) fail(lineno, "expected 'b <i> <j> <value>'");
      if (i < 0 || i >= inst.n || j < 0 || j >= inst.n) fail(lineno, "index out of range");
      if (i == j) {
        if (value != 0.0) fail(lineno, "nonzero diagonal");
        continue;
      }
      if (value < 0.0) fail(lineno, "negative B entry");
      inst.b_at(i, j) = value;
    } else if (key == "constraint") {
      std::string kind;
      if (!(ls >> kind)) fail(lineno, "expected constraint kind");
      if (kind == "card") {
        std::string rel;
        int k = 0;
        if (!(ls >> rel >> k)) fail(lineno, "expected 'constraint card <le|ge|eq> <k>'");
        CardinalityConstraint card{parse_relation(lineno, rel, true), k};
        if (k < 0 || k > inst.n) fail(lineno, "cardinality out of range");
        inst.constraints.emplace_back(card);
      } else if (kind == "knap") {
        std::string rel;
        KnapsackConstraint knap;
        if (!(ls >> rel >> knap.capacity)) fail(lineno, "expected 'constraint knap <le|ge> <capacity> <weights>'");
        knap.op = parse_relation(lineno, rel, false);
        knap.weights.assign(static_cast<std::size_t>(inst.n), 0.0);
        for (int i = 0; i < inst.n; ++i) {
          if (!(ls >> knap.weights[i])) fail(lineno, "expected " + std::to_string(inst.n) + " knapsack weights");
          if (knap.weights[i] < 0.0) fail(lineno, "negative knapsack weight");
        }
        inst.constraints.emplace_back(std::move(knap));
      } else {
        fail(lineno, "unknown constraint kind '" + kind + "'");
      }
    } else {
      fail(lineno, "unknown directive '" + key + "'");
    }

    std::string extra;
    if (ls >> extra) fail(lineno, "trailing token '" + extra + "'");
  }
  if (!have_n) fail(0, "missing n line");
  if (!have_c) fail(0, "missing c line");
  if (!relaxation_nonempty(inst)) fail(0, "empty relaxation");
  return inst;
}

QuadraticInstance parse_instance(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_instance(in);
}

void write_instance(std::ostream& out, const QuadraticInstance& inst) {
  out << "n " << inst.n << "\n";
  out << "c";
  for (int i = 0; i < inst.n; ++i) out << ' ' << format_double(inst.c[i]);
  out << "\n";
  for (int i = 0; i < inst.n; ++i) {
    for (int j = 0; j < inst.n; ++j) {
      if (i == j || inst.b_at(i, j) == 0.0) continue;
      out << "b " << i << ' ' << j << ' ' << format_double(inst.b_at(i, j)) << "\n";
    }
  }
  for (const Constraint& con : inst.constraints) {
    if (const auto* card = std::get_if<CardinalityConstraint>(&con)) {
      const char* rel = card->op == Relation::kLe ? "le" : card->op == Relation::kGe ? "ge" : "eq";
      out << "constraint card " << rel << ' ' << card->k << "\n";
    } else {
      const auto& knap = std::get<KnapsackConstraint>(con);
      out << "constraint knap " << (knap.op == Relation::kLe ? "le" : "ge") << ' '
          << format_double(knap.capacity);
      for (double w : knap.weights) out << ' ' << format_double(w);
      out << "\n";
    }
  }
}

double quadratic_term(const QuadraticInstance& inst, const BinaryPoint& x) {
  StableSum sum;
  for (int i = 0; i < inst.n; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < inst.n; ++j) {
      if (j == i || x[j] == 0) continue;
      sum.add(inst.b_at(i, j));
    }
  }
  return sum.value();
}

double objective_value(const QuadraticInstance& inst, const BinaryPoint& x) {
  StableSum sum;
  sum.add(quadratic_term(inst, x));
  for (int i = 0; i < inst.n; ++i) {
    if (x[i] != 0) sum.add(inst.c[i]);
  }
  return sum.value();
}

bool is_feasible(const QuadraticInstance& inst, const BinaryPoint& x) {
  for (const Constraint& con : inst.constraints) {
    if (const auto* card = std::get_if<CardinalityConstraint>(&con)) {
      int ones = 0;
      for (int i = 0; i < inst.n; ++i) ones += x[i] != 0;
      if (card->op == Relation::kLe && ones > card->k) return false;
      if (card->op == Relation::kGe && ones < card->k) return false;
      if (card->op == Relation::kEq && ones != card->k) return false;
    } else {
      const auto& knap = std::get<KnapsackConstraint>(con);
      double load = 0.0;
      for (int i = 0; i < inst.n; ++i) {
        if (x[i] != 0) load += knap.weights[i];
      }
      if (knap.op == Relation::kLe && load > knap.capacity + kFeasTol) return false;
      if (knap.op == Relation::kGe && load < knap.capacity - kFeasTol) return false;
    }
  }
  return true;
}

std::vector<BinaryPoint> enumerate_feasible(const QuadraticInstance& inst, int limit) {
  if (inst.n > limit) {
    throw Error("dimension too large for enumeration (n=" + std::to_string(inst.n) +
                ", limit=" + std::to_string(limit) + ")");
  }
  std::vector<BinaryPoint> out;
  const std::uint64_t total = std::uint64_t{1} << inst.n;
  BinaryPoint x(static_cast<std::size_t>(inst.n), 0);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (int i = 0; i < inst.n; ++i) {
      x[i] = static_cast<std::uint8_t>((mask >> (inst.n - 1 - i)) & 1u);
    }
    if (is_feasible(inst, x)) out.push_back(x);
  }
  return out;
}

}  // namespace qpcut
