#include "robust/eval.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "robust/exact.hpp"
#include "robust/io.hpp"
#include "robust/rng.hpp"

namespace robust {

EvalReport evaluate_solution(const Instance& inst, const EdgeMultiset& sol,
                             const EvalOptions& options) {
  require_feasible(inst, sol);
  BoxSweep sweep(inst);
  EvalReport report;
  report.alpha = options.alpha;
  report.beta = options.beta;

  if (options.mr_value) {
    report.mr = *options.mr_value;
    report.mr_is_upper_bound = true;
  } else if (options.mr_witness) {
    report.mr = regret_of(sweep, *options.mr_witness).regret_value;
    report.mr_is_upper_bound = true;
  } else {
    report.mr = min_regret_solution(inst).mr;
  }

  std::vector<std::uint64_t> ids;
  if (options.sample_count > 0 &&
      static_cast<std::uint64_t>(options.sample_count) <
          sweep.vertex_count()) {
    report.sampled = true;
    SplitMix64 rng(options.sample_seed);
    std::set<std::uint64_t> seen;
    while (static_cast<int>(seen.size()) < options.sample_count)
      seen.insert(rng.next() % sweep.vertex_count());
    // Extreme corners are always worth probing.
    seen.insert(0);
    seen.insert(sweep.vertex_count() - 1);
    ids.assign(seen.begin(), seen.end());
  } else {
    ids.resize(sweep.vertex_count());
    for (std::uint64_t id = 0; id < sweep.vertex_count(); ++id) ids[id] = id;
  }

  bool first = true;
  for (std::uint64_t id : ids) {
    EvalRow row;
    row.realization_id = id;
    row.sol_cost = sweep.multiset_value(sol, id);
    row.opt_cost = sweep.opt_value(id);
    report.rows.push_back(row);
    double slack = row.sol_cost - options.alpha * row.opt_cost;
    if (first || slack > report.max_slack) {
      report.max_slack = slack;
      report.argmax_id = id;
      first = false;
    }
  }
  report.pass = report.max_slack <= options.beta * report.mr + 1e-9;
  return report;
}

std::string render_report(const EvalReport& report) {
  std::ostringstream out;
  for (const EvalRow& row : report.rows)
    out << "v " << row.realization_id << " sol="
        << format_double(row.sol_cost) << " opt="
        << format_double(row.opt_cost) << " slack="
        << format_double(row.sol_cost - report.alpha * row.opt_cost) << '\n';
  out << "alpha " << format_double(report.alpha) << '\n';
  out << "beta " << format_double(report.beta) << '\n';
  out << "mr " << format_double(report.mr)
      << (report.mr_is_upper_bound ? " upper-bound" : " exact") << '\n';
  out << "max_slack " << format_double(report.max_slack) << " at "
      << report.argmax_id << '\n';
  out << "budget " << format_double(report.beta * report.mr) << '\n';
  out << "verdict " << (report.pass ? "PASS" : "FAIL")
      << (report.sampled ? " (sampled)" : "")
      << (report.mr_is_upper_bound && report.pass ? " (vs MR upper bound)"
                                                  : "")
      << '\n';
  return out.str();
}

}  // namespace robust
