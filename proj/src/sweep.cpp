// Copyright 2026 The hfphase Authors
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

#include "hfphase/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <sstream>
#include <thread>

#include "hfphase/dynamics.hpp"
#include "hfphase/entanglement.hpp"
#include "hfphase/errors.hpp"
#include "hfphase/geomphase.hpp"
#include "hfphase/thermal.hpp"

namespace hfphase {

namespace {

// Rows buffered per batch of series before they are handed to the sink.
constexpr std::size_t kBatchRows = 1 << 16;

std::string describe_point(const SpinParams& p, double beta, double t) {
  std::ostringstream os;
  os.precision(17);
  os << "J=" << p.J << " C=" << p.C << " D=" << p.D << " epsilon=" << p.epsilon << " beta=" << beta
     << " t=" << t;
  return os.str();
}

struct SeriesIndex {
  SpinParams params;
  double beta;
};

SeriesIndex series_at(const SweepConfig& config, std::size_t index) {
  std::size_t rest = index;
  const std::size_t ib = rest % config.beta.size();
  rest /= config.beta.size();
  const std::size_t ie = rest % config.epsilon.size();
  rest /= config.epsilon.size();
  const std::size_t id = rest % config.D.size();
  rest /= config.D.size();
  const std::size_t ic = rest % config.C.size();
  rest /= config.C.size();
  const std::size_t ij = rest;
  return {{config.J[ij], config.C[ic], config.D[id], config.epsilon[ie]}, config.beta[ib]};
}

}  // namespace

std::vector<std::optional<double>> unwrap_phase(std::span<const double> times,
                                                std::span<const std::optional<double>> phases) {
  if (times.size() != phases.size()) {
    throw Error(ErrorCode::DimensionMismatch, "unwrap_phase: times and phases differ in length");
  }
  for (std::size_t i = 1; i < times.size(); ++i) {
    if (!(times[i] > times[i - 1])) {
      throw Error(ErrorCode::NonMonotonicTimeGrid, "t must be strictly increasing");
    }
  }
  constexpr double two_pi = 2.0 * std::numbers::pi;
  std::vector<std::optional<double>> out(phases.begin(), phases.end());
  std::optional<double> previous;
  for (auto& value : out) {
    if (!value) continue;
    if (previous) {
      const double jump = *value - *previous;
      *value -= two_pi * std::round(jump / two_pi);
    }
    previous = value;
  }
  return out;
}

std::vector<SweepRow> evaluate_series(const SpinParams& params, double beta, std::span<const double> times,
                                      const SweepConfig& config) {
  const auto& tol = config.tolerances;
  const auto& want = config.outputs;
  std::vector<SweepRow> rows;
  rows.reserve(times.size());

  double current_t = times.empty() ? 0.0 : times.front();
  try {
    const ComplexMatrix h = build_full(params, false);
    const ComplexMatrix hprime = build_full(params, true);
    const ThermalState state = gibbs_state(h, beta, hprime, tol);
    const SpectralDecomposition hprime_eig = hermitian_eig(hprime, tol);
    const ComplexMatrix& dynamical = config.dynamical_h == DynamicalHamiltonian::Post ? hprime : h;
    const bool need_phase = want.gamma_g || want.gamma_g_unwrapped || want.magnitude || config.oracle_check;

    for (double t : times) {
      current_t = t;
      SweepRow row;
      row.J = params.J;
      row.C = params.C;
      row.D = params.D;
      row.epsilon = params.epsilon;
      row.beta = beta;
      row.t = t;
      const ComplexMatrix u = propagator(hprime_eig, t);
      if (need_phase) {
        const auto phase = geometric_phase_from_propagator(state, u, dynamical, t, tol);
        if (phase.well_defined && (want.gamma_g || want.gamma_g_unwrapped)) row.gamma_g = phase.gamma;
        if (want.magnitude) row.magnitude = phase.magnitude;
        if (config.oracle_check) {
          const auto oracle = geometric_phase_integrated(state, hprime, t, config.steps, tol);
          if (phase.well_defined && oracle.well_defined) {
            row.oracle_delta = wrap_phase(phase.gamma - oracle.gamma);
          }
        }
      }
      if (want.concurrence) {
        row.concurrence = concurrence(evolve(state.rho, u, tol), tol).value;
      }
      if (want.populations) {
        row.populations = std::array<double, 4>{state.populations[0], state.populations[1],
                                                state.populations[2], state.populations[3]};
      }
      rows.push_back(std::move(row));
    }
  } catch (const Error& e) {
    throw Error(e.code(), e.message() + " at grid point " + describe_point(params, beta, current_t));
  }

  if (want.gamma_g_unwrapped) {
    std::vector<std::optional<double>> principal;
    principal.reserve(rows.size());
    for (const auto& row : rows) principal.push_back(row.gamma_g);
    const auto unwrapped = unwrap_phase(times, principal);
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i].gamma_g_unwrapped = unwrapped[i];
  }
  if (!want.gamma_g) {
    for (auto& row : rows) row.gamma_g.reset();
  }
  return rows;
}

SweepRow evaluate_point(const SpinParams& params, double beta, double t, const SweepConfig& config) {
  const double times[] = {t};
  return evaluate_series(params, beta, times, config).front();
}

void run_sweep(const SweepConfig& config, const std::function<void(const SweepRow&)>& sink) {
  config.validate();
  const std::size_t total_series = config.series_count();
  const std::size_t per_batch = std::max<std::size_t>(1, kBatchRows / config.t.size());

  for (std::size_t batch_start = 0; batch_start < total_series; batch_start += per_batch) {
    const std::size_t batch_end = std::min(total_series, batch_start + per_batch);
    std::vector<std::vector<SweepRow>> results(batch_end - batch_start);
    std::atomic<std::size_t> next{batch_start};
    std::exception_ptr failure;
    std::size_t failure_index = total_series;
    std::mutex failure_mutex;
    std::atomic<bool> failed{false};

    auto worker = [&] {
      for (std::size_t i = next++; i < batch_end && !failed; i = next++) {
        try {
          const auto [params, beta] = series_at(config, i);
          results[i - batch_start] = evaluate_series(params, beta, config.t, config);
        } catch (...) {
          // Keep the first failure in grid order so errors are deterministic.
          std::lock_guard lock(failure_mutex);
          failed = true;
          if (i < failure_index) {
            failure_index = i;
            failure = std::current_exception();
          }
        }
      }
    };

    const unsigned workers =
        static_cast<unsigned>(std::min<std::size_t>(config.threads, batch_end - batch_start));
    if (workers <= 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      pool.reserve(workers);
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);
    for (const auto& series : results) {
      for (const auto& row : series) sink(row);
    }
  }
}

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  std::vector<SweepRow> rows;
  run_sweep(config, [&rows](const SweepRow& row) { rows.push_back(row); });
  return rows;
}

}  // namespace hfphase
