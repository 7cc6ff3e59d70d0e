// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "aiplab/oracles.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "aiplab/error.h"
#include "aiplab/random.h"

namespace aiplab {
namespace {

constexpr int64_t kInf = std::numeric_limits<int64_t>::max() / 4;

// ---------------------------------------------------------------------------
// Covering problems (set cover, multicover) as rows with residual demand.

struct CoverModel {
  int32_t num_columns = 0;
  std::vector<int64_t> cost;
  // Rows sorted by candidate cost (then id); bought columns are excluded
  // and their contribution is subtracted from the demand.
  std::vector<std::vector<int32_t>> rows;
  std::vector<int32_t> demand;
  std::vector<std::vector<int32_t>> column_rows;
  bool infeasible = false;
};

std::vector<int32_t> UniqueIds(std::span<const Request> requests) {
  std::vector<int32_t> ids;
  ids.reserve(requests.size());
  for (const Request r : requests) ids.push_back(r.id);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

CoverModel BuildCoverModel(const Problem& problem,
                           std::span<const Request> requests,
                           const Solution* z) {
  CoverModel model;
  model.num_columns = problem.num_vars();
  for (const Money c : problem.costs()) model.cost.push_back(c.micros());
  auto add_row = [&](std::span<const int32_t> columns, int32_t demand) {
    std::vector<int32_t> open;
    for (const int32_t j : columns) {
      if (z != nullptr && (*z)[j] > 0) {
        --demand;
      } else {
        open.push_back(j);
      }
    }
    if (demand <= 0) return;
    if (static_cast<int32_t>(open.size()) < demand) model.infeasible = true;
    std::sort(open.begin(), open.end(), [&](int32_t a, int32_t b) {
      return model.cost[a] != model.cost[b] ? model.cost[a] < model.cost[b]
                                            : a < b;
    });
    model.rows.push_back(std::move(open));
    model.demand.push_back(demand);
  };
  const std::vector<int32_t> ids = UniqueIds(requests);
  if (const auto* sc = dynamic_cast<const SetCoverInstance*>(&problem)) {
    for (const int32_t e : ids) {
      if (e < 0 || e >= sc->universe_size()) {
        throw StructuralError("request out of range");
      }
      add_row(sc->sets_containing(e), 1);
    }
  } else if (const auto* smc = dynamic_cast<const SmcInstance*>(&problem)) {
    for (const int32_t i : ids) {
      if (i < 0 || i >= smc->num_rows()) {
        throw StructuralError("request out of range");
      }
      add_row(smc->row(i), smc->demand(i));
    }
  } else {
    throw StructuralError("cover oracle needs a set cover or multicover");
  }
  model.column_rows.assign(model.num_columns, {});
  for (size_t r = 0; r < model.rows.size(); ++r) {
    for (const int32_t j : model.rows[r]) {
      model.column_rows[j].push_back(static_cast<int32_t>(r));
    }
  }
  return model;
}

// Greedy on the model. Returns the chosen columns, or nullopt when stuck.
std::optional<std::vector<int32_t>> GreedyColumns(const CoverModel& model) {
  std::vector<int32_t> residual = model.demand;
  std::vector<bool> taken(model.num_columns, false);
  std::vector<int32_t> chosen;
  int64_t left = std::accumulate(residual.begin(), residual.end(), int64_t{0});
  while (left > 0) {
    int32_t best = -1;
    double best_density = -1;
    for (int32_t j = 0; j < model.num_columns; ++j) {
      if (taken[j]) continue;
      int32_t gain = 0;
      for (const int32_t r : model.column_rows[j]) gain += residual[r] > 0;
      if (gain == 0) continue;
      const double density =
          model.cost[j] == 0 ? std::numeric_limits<double>::infinity()
                             : gain / static_cast<double>(model.cost[j]);
      if (density > best_density) {
        best = j;
        best_density = density;
      }
    }
    if (best < 0) return std::nullopt;
    taken[best] = true;
    chosen.push_back(best);
    for (const int32_t r : model.column_rows[best]) {
      if (residual[r] > 0) {
        --residual[r];
        --left;
      }
    }
  }
  return chosen;
}

class CoverBranchAndBound {
 public:
  explicit CoverBranchAndBound(const CoverModel& model)
      : model_(model),
        residual_(model.demand),
        available_(model.rows.size()),
        state_(model.num_columns, 0) {
    for (size_t r = 0; r < model.rows.size(); ++r) {
      available_[r] = static_cast<int32_t>(model.rows[r].size());
    }
  }

  // Returns the optimal column set; `incumbent` must be feasible.
  std::vector<int32_t> Solve(const std::vector<int32_t>& incumbent) {
    best_cost_ = 0;
    for (const int32_t j : incumbent) best_cost_ += model_.cost[j];
    best_ = incumbent;
    Search();
    return best_;
  }

 private:
  double LowerBound() const {
    int64_t total = 0;
    int64_t by_row = 0;
    for (size_t r = 0; r < model_.rows.size(); ++r) {
      if (residual_[r] <= 0) continue;
      total += residual_[r];
      int64_t cheapest = 0;
      int32_t need = residual_[r];
      for (const int32_t j : model_.rows[r]) {
        if (need == 0) break;
        if (state_[j] != 0) continue;
        cheapest += model_.cost[j];
        --need;
      }
      by_row = std::max(by_row, cheapest);
    }
    if (total == 0) return 0;
    double min_ratio = std::numeric_limits<double>::infinity();
    for (int32_t j = 0; j < model_.num_columns; ++j) {
      if (state_[j] != 0) continue;
      int32_t cover = 0;
      for (const int32_t r : model_.column_rows[j]) cover += residual_[r] > 0;
      if (cover > 0) {
        min_ratio = std::min(min_ratio,
                             static_cast<double>(model_.cost[j]) / cover);
      }
    }
    const double by_ratio = total * min_ratio * (1 - 1e-12);
    return std::max(static_cast<double>(by_row), by_ratio);
  }

  void Apply(int32_t j, int8_t decision) {
    state_[j] = decision;
    for (const int32_t r : model_.column_rows[j]) {
      --available_[r];
      if (decision > 0) --residual_[r];
    }
    if (decision > 0) {
      cost_ += model_.cost[j];
      chosen_.push_back(j);
    }
  }

  void Undo(int32_t j) {
    const int8_t decision = state_[j];
    state_[j] = 0;
    for (const int32_t r : model_.column_rows[j]) {
      ++available_[r];
      if (decision > 0) ++residual_[r];
    }
    if (decision > 0) {
      cost_ -= model_.cost[j];
      chosen_.pop_back();
    }
  }

  void Search() {
    // Most constrained open row.
    int32_t row = -1;
    int32_t slack = std::numeric_limits<int32_t>::max();
    for (size_t r = 0; r < model_.rows.size(); ++r) {
      if (residual_[r] <= 0) continue;
      const int32_t s = available_[r] - residual_[r];
      if (s < 0) return;
      if (s < slack) {
        slack = s;
        row = static_cast<int32_t>(r);
      }
    }
    if (row < 0) {
      if (cost_ < best_cost_) {
        best_cost_ = cost_;
        best_ = chosen_;
      }
      return;
    }
    if (static_cast<double>(cost_) + LowerBound() >=
        static_cast<double>(best_cost_)) {
      return;
    }
    // Branch on the row's candidate with the best cost per open row.
    int32_t pick = -1;
    double pick_ratio = std::numeric_limits<double>::infinity();
    for (const int32_t j : model_.rows[row]) {
      if (state_[j] != 0) continue;
      int32_t cover = 0;
      for (const int32_t r : model_.column_rows[j]) cover += residual_[r] > 0;
      const double ratio = static_cast<double>(model_.cost[j]) / cover;
      if (ratio < pick_ratio) {
        pick = j;
        pick_ratio = ratio;
      }
    }
    Apply(pick, 1);
    Search();
    Undo(pick);
    Apply(pick, -1);
    Search();
    Undo(pick);
  }

  const CoverModel& model_;
  std::vector<int32_t> residual_;
  std::vector<int32_t> available_;
  std::vector<int8_t> state_;
  std::vector<int32_t> chosen_;
  int64_t cost_ = 0;
  int64_t best_cost_ = 0;
  std::vector<int32_t> best_;
};

OptResult CoverResult(const Problem& problem, const Solution* base,
                      const std::vector<int32_t>& columns, bool exact) {
  OptResult result;
  result.solution = base != nullptr ? *base : problem.EmptySolution();
  Money added = Money::Zero();
  for (const int32_t j : columns) added += result.solution.Raise(j, 1);
  result.value = added;
  result.exact = exact;
  return result;
}

OptResult InfeasibleResult(const Problem& problem, const Solution* base,
                           bool exact) {
  OptResult result;
  result.solution = base != nullptr ? *base : problem.EmptySolution();
  result.value = Money::Infinite();
  result.exact = exact;
  return result;
}

OptResult SolveCoverExact(const Problem& problem,
                          std::span<const Request> requests,
                          const Solution* base) {
  if (problem.num_vars() > kExactCoverMaxColumns) {
    throw SizeGuardError("exact cover oracle supports at most " +
                         std::to_string(kExactCoverMaxColumns) +
                         " columns, got " + std::to_string(problem.num_vars()));
  }
  const CoverModel model = BuildCoverModel(problem, requests, base);
  if (model.infeasible) return InfeasibleResult(problem, base, true);
  const auto greedy = GreedyColumns(model);
  if (!greedy) return InfeasibleResult(problem, base, true);
  CoverBranchAndBound bnb(model);
  return CoverResult(problem, base, bnb.Solve(*greedy), true);
}

// ---------------------------------------------------------------------------
// Facility location over a client subset.

struct FlModel {
  int32_t m = 0;
  std::vector<int32_t> clients;
  std::vector<int64_t> opening;
  // conn[k][f] for the k-th client, kInf when infinite.
  std::vector<std::vector<int64_t>> conn;
  std::vector<bool> forced;
};

FlModel BuildFlModel(const FlInstance& inst, std::span<const Request> requests,
                     const Solution* z) {
  FlModel model;
  model.m = inst.num_facilities();
  for (int32_t f = 0; f < model.m; ++f) {
    const bool open = z != nullptr && inst.IsOpen(*z, f);
    model.forced.push_back(open);
    model.opening.push_back(open ? 0 : inst.opening_cost(f).micros());
  }
  for (const int32_t v : UniqueIds(requests)) {
    if (v < 0 || v >= inst.num_clients()) {
      throw StructuralError("request out of range");
    }
    if (z != nullptr && inst.Satisfies(*z, Request{v})) continue;
    model.clients.push_back(v);
    std::vector<int64_t> row(model.m);
    for (int32_t f = 0; f < model.m; ++f) {
      const Money c = inst.connection_cost(f, v);
      // Edges already bought in z are free.
      const bool bought = z != nullptr && (*z)[inst.ConnectionVar(f, v)] > 0;
      row[f] = c.is_infinite() ? kInf : bought ? 0 : c.micros();
    }
    model.conn.push_back(std::move(row));
  }
  return model;
}

// Total cost of opening `open` (plus forced facilities); kInf when some
// client cannot connect.
int64_t EvaluateFl(const FlModel& model, const std::vector<bool>& open) {
  int64_t total = 0;
  for (int32_t f = 0; f < model.m; ++f) {
    if (open[f]) total += model.opening[f];
  }
  for (const auto& row : model.conn) {
    int64_t best = kInf;
    for (int32_t f = 0; f < model.m; ++f) {
      if (open[f]) best = std::min(best, row[f]);
    }
    if (best >= kInf) return kInf;
    total += best;
  }
  return total;
}

OptResult FlResult(const FlInstance& inst, const FlModel& model,
                   const Solution* base, const std::vector<bool>& open,
                   bool exact) {
  OptResult result;
  result.solution = base != nullptr ? *base : inst.EmptySolution();
  result.exact = exact;
  if (model.clients.empty()) {
    result.value = Money::Zero();
    return result;
  }
  Money added = Money::Zero();
  for (size_t k = 0; k < model.clients.size(); ++k) {
    int32_t best = -1;
    for (int32_t f = 0; f < model.m; ++f) {
      if (!open[f] || model.conn[k][f] >= kInf) continue;
      if (best < 0 || model.conn[k][f] < model.conn[k][best]) best = f;
    }
    if (best < 0) {
      result.value = Money::Infinite();
      return result;
    }
    added += result.solution.Raise(best, 1);
    added += result.solution.Raise(inst.ConnectionVar(best, model.clients[k]),
                                   1);
  }
  result.value = added;
  return result;
}

std::vector<bool> LocalSearchOpenSet(const FlModel& model) {
  std::vector<bool> open = model.forced;
  if (model.clients.empty()) return open;
  auto any_open = [&] {
    return std::find(open.begin(), open.end(), true) != open.end();
  };
  int64_t current = any_open() ? EvaluateFl(model, open) : kInf;
  if (!any_open()) {
    int32_t best = -1;
    for (int32_t f = 0; f < model.m; ++f) {
      open[f] = true;
      const int64_t c = EvaluateFl(model, open);
      if (c < current) {
        current = c;
        best = f;
      }
      open[f] = false;
    }
    if (best < 0) best = 0;
    open[best] = true;
  }
  current = EvaluateFl(model, open);
  for (bool improved = true; improved;) {
    improved = false;
    int64_t best_cost = current;
    int32_t best_in = -1;
    int32_t best_out = -1;
    for (int32_t f = 0; f < model.m; ++f) {
      if (model.forced[f]) continue;
      open[f] = !open[f];
      const int64_t c = EvaluateFl(model, open);
      if (c < best_cost) {
        best_cost = c;
        best_in = open[f] ? f : -1;
        best_out = open[f] ? -1 : f;
      }
      open[f] = !open[f];
    }
    for (int32_t in = 0; in < model.m; ++in) {
      if (open[in]) continue;
      for (int32_t out = 0; out < model.m; ++out) {
        if (!open[out] || model.forced[out]) continue;
        open[in] = true;
        open[out] = false;
        const int64_t c = EvaluateFl(model, open);
        if (c < best_cost) {
          best_cost = c;
          best_in = in;
          best_out = out;
        }
        open[in] = false;
        open[out] = true;
      }
    }
    if (best_cost < current) {
      if (best_in >= 0) open[best_in] = true;
      if (best_out >= 0) open[best_out] = false;
      current = best_cost;
      improved = true;
    }
  }
  return open;
}

class FlBranchAndBound {
 public:
  explicit FlBranchAndBound(const FlModel& model) : model_(model) {
    const size_t n = model.clients.size();
    suffix_min_.assign(model.m + 1, std::vector<int64_t>(n, kInf));
    for (int32_t f = model.m - 1; f >= 0; --f) {
      for (size_t k = 0; k < n; ++k) {
        suffix_min_[f][k] = std::min(suffix_min_[f + 1][k], model.conn[k][f]);
      }
    }
  }

  std::vector<bool> Solve(const std::vector<bool>& incumbent) {
    best_open_ = incumbent;
    best_cost_ = EvaluateFl(model_, incumbent);
    std::vector<bool> open(model_.m, false);
    std::vector<int64_t> nearest(model_.clients.size(), kInf);
    Search(0, 0, open, nearest);
    return best_open_;
  }

 private:
  void Search(int32_t f, int64_t opening, std::vector<bool>& open,
              const std::vector<int64_t>& nearest) {
    int64_t bound = opening;
    for (size_t k = 0; k < nearest.size(); ++k) {
      const int64_t c = std::min(nearest[k], suffix_min_[f][k]);
      if (c >= kInf) return;
      bound += c;
    }
    if (bound >= best_cost_) return;
    if (f == model_.m) {
      best_cost_ = bound;
      best_open_ = open;
      return;
    }
    std::vector<int64_t> with(nearest);
    for (size_t k = 0; k < with.size(); ++k) {
      with[k] = std::min(with[k], model_.conn[k][f]);
    }
    open[f] = true;
    Search(f + 1, opening + model_.opening[f], open, with);
    open[f] = false;
    if (!model_.forced[f]) Search(f + 1, opening, open, nearest);
  }

  const FlModel& model_;
  std::vector<std::vector<int64_t>> suffix_min_;
  std::vector<bool> best_open_;
  int64_t best_cost_ = kInf;
};

OptResult SolveFlExact(const FlInstance& inst,
                       std::span<const Request> requests,
                       const Solution* base) {
  if (inst.num_facilities() > kExactFlMaxFacilities) {
    throw SizeGuardError("exact facility location oracle supports at most " +
                         std::to_string(kExactFlMaxFacilities) +
                         " facilities, got " +
                         std::to_string(inst.num_facilities()));
  }
  const FlModel model = BuildFlModel(inst, requests, base);
  if (model.clients.empty()) {
    return FlResult(inst, model, base, model.forced, true);
  }
  FlBranchAndBound bnb(model);
  return FlResult(inst, model, base, bnb.Solve(LocalSearchOpenSet(model)),
                  true);
}

const FlInstance* AsFl(const Problem& problem) {
  return dynamic_cast<const FlInstance*>(&problem);
}

bool IsCover(const Problem& problem) {
  return problem.kind() == ProblemKind::kSetCover ||
         problem.kind() == ProblemKind::kSetMulticover;
}

// Exact optimum for whichever problem type.
Money ExactValue(const Problem& problem, std::span<const Request> requests) {
  if (IsCover(problem)) return ExactOptCover(problem, requests).value;
  return ExactOptFl(*AsFl(problem), requests).value;
}

Rational ToRational(Money m) {
  if (m.is_infinite()) throw InfeasibleError("infinite optimum in expectation");
  return Rational(m.micros(), Money::kScale);
}

}  // namespace

OptResult ExactOptCover(const Problem& problem,
                        std::span<const Request> requests) {
  return SolveCoverExact(problem, requests, nullptr);
}

OptResult ExactOptFl(const FlInstance& instance,
                     std::span<const Request> requests) {
  return SolveFlExact(instance, requests, nullptr);
}

OptResult GreedyCover(const Problem& problem,
                      std::span<const Request> requests) {
  const CoverModel model = BuildCoverModel(problem, requests, nullptr);
  const auto columns = model.infeasible ? std::nullopt : GreedyColumns(model);
  if (!columns) throw InfeasibleError("requests cannot be covered");
  return CoverResult(problem, nullptr, *columns, false);
}

OptResult LocalSearchFl(const FlInstance& instance,
                        std::span<const Request> requests) {
  const FlModel model = BuildFlModel(instance, requests, nullptr);
  return FlResult(instance, model, nullptr, LocalSearchOpenSet(model), false);
}

OptResult BestOpt(const Problem& problem, std::span<const Request> requests) {
  if (IsCover(problem)) {
    if (problem.num_vars() <= kExactCoverMaxColumns) {
      return ExactOptCover(problem, requests);
    }
    return GreedyCover(problem, requests);
  }
  const FlInstance& fl = *AsFl(problem);
  if (fl.num_facilities() <= kExactFlMaxFacilities) {
    return ExactOptFl(fl, requests);
  }
  return LocalSearchFl(fl, requests);
}

OptResult ExactAugment(const Problem& problem, const Solution& z,
                       std::span<const Request> w) {
  if (z.size() != problem.num_vars()) {
    throw StructuralError("solution dimension does not match the problem");
  }
  if (IsCover(problem)) return SolveCoverExact(problem, w, &z);
  return SolveFlExact(*AsFl(problem), w, &z);
}

OptResult NaiveOpt(const Problem& problem, std::span<const Request> requests) {
  if (IsCover(problem)) {
    const int32_t m = problem.num_vars();
    if (m > kNaiveMaxVariables) throw SizeGuardError("naive oracle: too big");
    const CoverModel model = BuildCoverModel(problem, requests, nullptr);
    int64_t best = kInf;
    uint32_t best_mask = 0;
    for (uint32_t mask = 0; mask < (1u << m); ++mask) {
      bool ok = true;
      for (size_t r = 0; r < model.rows.size() && ok; ++r) {
        int32_t have = 0;
        for (const int32_t j : model.rows[r]) have += (mask >> j) & 1u;
        ok = have >= model.demand[r];
      }
      if (!ok) continue;
      int64_t cost = 0;
      for (int32_t j = 0; j < m; ++j) {
        if ((mask >> j) & 1u) cost += model.cost[j];
      }
      if (cost < best) {
        best = cost;
        best_mask = mask;
      }
    }
    if (best >= kInf) return InfeasibleResult(problem, nullptr, true);
    std::vector<int32_t> columns;
    for (int32_t j = 0; j < m; ++j) {
      if ((best_mask >> j) & 1u) columns.push_back(j);
    }
    return CoverResult(problem, nullptr, columns, true);
  }
  const FlInstance& fl = *AsFl(problem);
  const int32_t m = fl.num_facilities();
  if (m > kNaiveMaxVariables) throw SizeGuardError("naive oracle: too big");
  const FlModel model = BuildFlModel(fl, requests, nullptr);
  std::vector<bool> best_open(m, false);
  if (model.clients.empty()) return FlResult(fl, model, nullptr, best_open, true);
  int64_t best = kInf;
  for (uint32_t mask = 1; mask < (1u << m); ++mask) {
    std::vector<bool> open(m);
    for (int32_t f = 0; f < m; ++f) open[f] = (mask >> f) & 1u;
    const int64_t c = EvaluateFl(model, open);
    if (c < best) {
      best = c;
      best_open = open;
    }
  }
  return FlResult(fl, model, nullptr, best_open, true);
}

ExpectedOpt ExpectedOptIid(const Problem& problem,
                           const DiscreteDistribution& distribution,
                           int32_t n_draws, uint64_t seed,
                           int64_t mc_samples) {
  ExpectedOpt out;
  if (n_draws < 0) throw DomainError("negative number of draws");
  if (n_draws == 0) {
    out.exact = Rational(0);
    out.outcomes = 1;
    return out;
  }
  const auto& support = distribution.support();
  const size_t s = support.size();
  const double tuples = std::pow(static_cast<double>(s), n_draws);

  if (tuples <= kMaxEnumeratedOutcomes) {
    // Multisets of draws: counts c_1..c_s summing to n_draws, weighted by
    // n! / prod c_i! * prod w_i^c_i / W^n.
    std::map<std::vector<int32_t>, Rational> cache;
    std::vector<int32_t> counts(s, 0);
    Rational total = 0;
    std::vector<boost::multiprecision::cpp_int> factorial(n_draws + 1, 1);
    for (int32_t k = 1; k <= n_draws; ++k) factorial[k] = factorial[k - 1] * k;
    const boost::multiprecision::cpp_int denom =
        boost::multiprecision::pow(
            boost::multiprecision::cpp_int(distribution.total_weight()),
            n_draws);

    auto visit = [&]() {
      boost::multiprecision::cpp_int numer = factorial[n_draws];
      std::vector<int32_t> key;
      std::vector<Request> distinct;
      for (size_t i = 0; i < s; ++i) {
        if (counts[i] == 0) continue;
        numer /= factorial[counts[i]];
      }
      // Ordered tuples represented by this multiset.
      out.outcomes += static_cast<int64_t>(numer);
      for (size_t i = 0; i < s; ++i) {
        if (counts[i] == 0) continue;
        numer *= boost::multiprecision::pow(
            boost::multiprecision::cpp_int(distribution.weights()[i]),
            counts[i]);
        distinct.push_back(support[i]);
        key.push_back(support[i].id);
      }
      std::sort(key.begin(), key.end());
      key.erase(std::unique(key.begin(), key.end()), key.end());
      auto it = cache.find(key);
      if (it == cache.end()) {
        it = cache.emplace(key, ToRational(ExactValue(problem, distinct)))
                 .first;
      }
      total += Rational(numer, denom) * it->second;
    };
    // Enumerate compositions of n_draws into s nonnegative parts.
    auto recurse = [&](auto&& self, size_t i, int32_t left) -> void {
      if (i + 1 == s) {
        counts[i] = left;
        visit();
        counts[i] = 0;
        return;
      }
      for (int32_t c = left; c >= 0; --c) {
        counts[i] = c;
        self(self, i + 1, left - c);
      }
      counts[i] = 0;
    };
    recurse(recurse, 0, n_draws);
    out.exact = total;
    out.value = static_cast<double>(total);
    return out;
  }

  if (mc_samples < 2) throw DomainError("need at least two Monte-Carlo samples");
  Rng rng = MakeStream(seed, "expected-opt");
  double sum = 0;
  double sum_sq = 0;
  std::vector<Request> draws(n_draws);
  for (int64_t k = 0; k < mc_samples; ++k) {
    for (auto& d : draws) d = distribution.Sample(rng);
    const double v = ExactValue(problem, draws).ToDouble();
    sum += v;
    sum_sq += v * v;
  }
  const double n = static_cast<double>(mc_samples);
  out.value = sum / n;
  const double var = std::max(0.0, (sum_sq - n * out.value * out.value) / (n - 1));
  out.standard_error = std::sqrt(var / n);
  out.outcomes = mc_samples;
  return out;
}

ExpectedOpt ExpectedOptIndependent(
    const Problem& problem,
    std::span<const DiscreteDistribution> distributions) {
  ExpectedOpt out;
  double tuples = 1;
  for (const auto& d : distributions) tuples *= d.support().size();
  if (tuples > kMaxEnumeratedOutcomes) {
    throw SizeGuardError("too many outcomes to enumerate");
  }
  std::map<std::vector<int32_t>, Rational> cache;
  Rational total = 0;
  std::vector<Request> draw(distributions.size());
  auto recurse = [&](auto&& self, size_t t, Rational weight) -> void {
    if (t == distributions.size()) {
      std::vector<int32_t> key;
      for (const Request r : draw) key.push_back(r.id);
      std::sort(key.begin(), key.end());
      key.erase(std::unique(key.begin(), key.end()), key.end());
      auto it = cache.find(key);
      if (it == cache.end()) {
        it = cache.emplace(key, ToRational(ExactValue(problem, draw))).first;
      }
      total += weight * it->second;
      ++out.outcomes;
      return;
    }
    const auto& d = distributions[t];
    for (size_t i = 0; i < d.support().size(); ++i) {
      if (d.weights()[i] == 0) continue;
      draw[t] = d.support()[i];
      self(self, t + 1,
           weight * Rational(d.weights()[i], d.total_weight()));
    }
  };
  recurse(recurse, 0, Rational(1));
  out.exact = total;
  out.value = static_cast<double>(total);
  return out;
}

}  // namespace aiplab
