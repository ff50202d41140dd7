#ifndef ROBUST_EVAL_HPP
#define ROBUST_EVAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "robust/instance.hpp"

namespace robust {

struct EvalRow {
  std::uint64_t realization_id = 0;  // free-edge bitmask
  double sol_cost = 0.0;
  double opt_cost = 0.0;
};

/// Robustness verdict for a fixed solution against declared (alpha, beta):
/// PASS iff max over swept realizations of sol(d) - alpha*opt(d) is at most
/// beta*MR (+1e-9).
struct EvalReport {
  double alpha = 0.0;
  double beta = 0.0;
  std::vector<EvalRow> rows;
  double max_slack = 0.0;          // max sol(d) - alpha*opt(d)
  std::uint64_t argmax_id = 0;
  double mr = 0.0;
  bool mr_is_upper_bound = false;  // MR supplied as a bound, not exact
  bool sampled = false;
  bool pass = false;
};

struct EvalOptions {
  double alpha = 1.0;
  double beta = 1.0;
  /// Exact MR enumeration caps apply when neither override is given.
  std::optional<double> mr_value;
  const EdgeMultiset* mr_witness = nullptr;  // MR bounded by this regret
  int sample_count = 0;  // 0 = sweep every box vertex (refuses beyond caps)
  std::uint64_t sample_seed = 1;
};

EvalReport evaluate_solution(const Instance& inst, const EdgeMultiset& sol,
                             const EvalOptions& options);

/// Text rendering used by the CLI (stable across runs).
std::string render_report(const EvalReport& report);

}  // namespace robust

#endif
