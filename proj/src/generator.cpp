#include "qpcut/generator.hpp"

#include <numeric>
#include <sstream>
#include <vector>

namespace qpcut {

namespace {

std::vector<std::string> split_spec(const std::string& spec) {
  std::vector<std::string> parts;
  std::string token;
  std::istringstream in(spec);
  while (std::getline(in, token, ':')) parts.push_back(token);
  return parts;
}

Relation spec_relation(const std::string& tok, bool allow_eq) {
  if (tok == "le") return Relation::kLe;
  if (tok == "ge") return Relation::kGe;
  if (tok == "eq" && allow_eq) return Relation::kEq;
  throw Error("invalid constraint spec relation '" + tok + "'");
}

}  // namespace

QuadraticInstance generate_instance(const GeneratorConfig& config) {
  if (config.n <= 0) throw Error("generator: n must be positive");
  if (config.density < 0.0 || config.density > 1.0) throw Error("generator: density must be in [0,1]");
  if (config.b_max < 0.0) throw Error("generator: b_max must be nonnegative");
  if (config.c_min > config.c_max) throw Error("generator: empty cost range");

  SplitMix64 rng(config.seed);
  QuadraticInstance inst;
  inst.n = config.n;
  inst.c.resize(static_cast<std::size_t>(config.n));
  inst.b.assign(static_cast<std::size_t>(config.n) * config.n, 0.0);
  for (int i = 0; i < config.n; ++i) {
    inst.c[i] = rng.next_in(config.c_min, config.c_max);
  }
  for (int i = 0; i < config.n; ++i) {
    for (int j = 0; j < config.n; ++j) {
      if (i == j) continue;
      if (rng.next_unit() < config.density) {
        inst.b_at(i, j) = rng.next_unit() * config.b_max;
      }
    }
  }

  const auto parts = split_spec(config.constraint);
  if (parts.empty() || parts[0] == "box") {
    if (parts.size() > 1) throw Error("invalid constraint spec '" + config.constraint + "'");
    return inst;
  }
  if (parts.size() != 3) throw Error("invalid constraint spec '" + config.constraint + "'");
  if (parts[0] == "card") {
    CardinalityConstraint card;
    card.op = spec_relation(parts[1], true);
    try {
      card.k = std::stoi(parts[2]);
    } catch (const std::exception&) {
      throw Error("invalid cardinality bound '" + parts[2] + "'");
    }
    if (card.k < 0 || card.k > config.n) throw Error("cardinality bound out of range");
    inst.constraints.emplace_back(card);
    return inst;
  }
  if (parts[0] == "knap") {
    KnapsackConstraint knap;
    knap.op = spec_relation(parts[1], false);
    double ratio = 0.0;
    try {
      ratio = std::stod(parts[2]);
    } catch (const std::exception&) {
      throw Error("invalid knapsack capacity ratio '" + parts[2] + "'");
    }
    if (ratio < 0.0 || ratio > 1.0) throw Error("knapsack capacity ratio must be in [0,1]");
    knap.weights.resize(static_cast<std::size_t>(config.n));
    for (int i = 0; i < config.n; ++i) knap.weights[i] = rng.next_unit();
    const double total = std::accumulate(knap.weights.begin(), knap.weights.end(), 0.0);
    knap.capacity = ratio * total;
    inst.constraints.emplace_back(std::move(knap));
    return inst;
  }
  throw Error("invalid constraint spec '" + config.constraint + "'");
}

}  // namespace qpcut
