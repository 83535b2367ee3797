#include "routehobo/qaoa_sim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "routehobo/error.hpp"
#include "routehobo/nelder_mead.hpp"

namespace routehobo {

namespace {

using Complex = std::complex<double>;

void check_size(const Statevector& sv, Eigen::Index rows) {
  if (sv.amplitudes().size() != rows) throw Error("Hamiltonian size does not match the statevector");
}

}  // namespace

Statevector::Statevector(std::size_t num_qubits, Eigen::VectorXcd amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
  if (num_qubits > 30) throw Error("statevector too large");
  if (amplitudes_.size() != (Eigen::Index{1} << num_qubits)) {
    throw Error("amplitude count must be 2^num_qubits");
  }
}

Statevector Statevector::basis(std::size_t num_qubits, std::uint64_t index) {
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(Eigen::Index{1} << num_qubits);
  amps[static_cast<Eigen::Index>(index)] = 1.0;
  return Statevector(num_qubits, std::move(amps));
}

Statevector Statevector::uniform(std::size_t num_qubits) {
  const Eigen::Index size = Eigen::Index{1} << num_qubits;
  const double a = 1.0 / std::sqrt(static_cast<double>(size));
  return Statevector(num_qubits, Eigen::VectorXcd::Constant(size, Complex(a, 0.0)));
}

Statevector apply_cost_layer(Statevector sv, const Eigen::VectorXd& energies, double gamma) {
  check_size(sv, energies.size());
  auto& amps = sv.amplitudes();
  for (Eigen::Index b = 0; b < amps.size(); ++b) amps[b] *= std::polar(1.0, -gamma * energies[b]);
  return sv;
}

Statevector apply_cost_layer(Statevector sv, const IsingHamiltonian& h, double gamma) {
  if (h.num_qubits() != sv.num_qubits()) throw Error("Hamiltonian size does not match the statevector");
  return apply_cost_layer(std::move(sv), diagonal_energies(h), gamma);
}

Statevector apply_mixer_layer(Statevector sv, double beta) {
  const Complex c(std::cos(beta), 0.0);
  const Complex s(0.0, -std::sin(beta));
  auto& amps = sv.amplitudes();
  const Eigen::Index size = amps.size();
  for (std::size_t q = 0; q < sv.num_qubits(); ++q) {
    const Eigen::Index step = Eigen::Index{1} << q;
    for (Eigen::Index b = 0; b < size; ++b) {
      if (b & step) continue;
      const Complex a0 = amps[b];
      const Complex a1 = amps[b | step];
      amps[b] = c * a0 + s * a1;
      amps[b | step] = s * a0 + c * a1;
    }
  }
  return sv;
}

double expectation(const Statevector& sv, const Eigen::VectorXd& energies) {
  check_size(sv, energies.size());
  return sv.probabilities().dot(energies);
}

double expectation(const Statevector& sv, const IsingHamiltonian& h) {
  if (h.num_qubits() != sv.num_qubits()) throw Error("Hamiltonian size does not match the statevector");
  return expectation(sv, diagonal_energies(h));
}

double SeededRng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

SampleCounts sample_distribution(const Statevector& sv, std::size_t shots, std::uint64_t seed) {
  if (shots < 1) throw Error("shots must be at least 1");
  const Eigen::VectorXd probs = sv.probabilities();
  std::vector<double> cdf(static_cast<std::size_t>(probs.size()));
  double running = 0.0;
  for (Eigen::Index b = 0; b < probs.size(); ++b) {
    running += probs[b];
    cdf[static_cast<std::size_t>(b)] = running;
  }

  SeededRng rng(seed);
  SampleCounts counts;
  for (std::size_t shot = 0; shot < shots; ++shot) {
    const double u = rng.uniform() * running;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    if (it == cdf.end()) --it;
    // Skip zero-probability states that share a CDF plateau.
    while (it != cdf.begin() && *it == *(it - 1)) --it;
    ++counts[static_cast<std::uint64_t>(it - cdf.begin())];
  }
  return counts;
}

std::string bitstring(std::uint64_t index, std::size_t num_qubits) {
  std::string out(num_qubits, '0');
  for (std::size_t q = 0; q < num_qubits; ++q) {
    if ((index >> q) & 1U) out[q] = '1';
  }
  return out;
}

Statevector qaoa_state(const Eigen::VectorXd& energies, std::size_t num_qubits,
                       const std::vector<double>& params) {
  const std::size_t reps = params.size() / 2;
  Statevector sv = Statevector::uniform(num_qubits);
  for (std::size_t layer = 0; layer < reps; ++layer) {
    sv = apply_cost_layer(std::move(sv), energies, params[layer]);
    sv = apply_mixer_layer(std::move(sv), params[reps + layer]);
  }
  return sv;
}

QaoaOutcome run_qaoa(const IsingHamiltonian& h, const QaoaConfig& cfg) {
  if (cfg.reps < 1) throw Error("QAOA needs at least one layer");
  if (cfg.shots < 1) throw Error("shots must be at least 1");
  const std::size_t n = h.num_qubits();
  if (n > cfg.max_qubits) throw Error("problem too large for simulator");
  const std::size_t dim = 2 * cfg.reps;
  if (cfg.initial_params && cfg.initial_params->size() != dim) {
    throw Error("initial_params must hold 2 * reps angles");
  }

  const Eigen::VectorXd energies = diagonal_energies(h);
  QaoaOutcome outcome;
  outcome.best_expectation = std::numeric_limits<double>::infinity();

  auto objective = [&](const Eigen::VectorXd& x) {
    const std::vector<double> params(x.data(), x.data() + x.size());
    const double value = expectation(qaoa_state(energies, n, params), energies);
    outcome.expectation_trace.push_back(value);
    if (value < outcome.best_expectation) {
      outcome.best_expectation = value;
      outcome.best_params = params;
    }
    outcome.incumbent_trace.push_back(outcome.best_expectation);
    return value;
  };

  SeededRng rng(cfg.seed);
  std::vector<Eigen::VectorXd> starts;
  if (cfg.initial_params) {
    starts.emplace_back(Eigen::Map<const Eigen::VectorXd>(cfg.initial_params->data(),
                                                          static_cast<Eigen::Index>(dim)));
  } else {
    constexpr int kGrid = 6;
    double best_grid = std::numeric_limits<double>::infinity();
    Eigen::VectorXd best_point(dim);
    for (int gi = 0; gi < kGrid; ++gi) {
      for (int bi = 0; bi < kGrid; ++bi) {
        Eigen::VectorXd x(dim);
        x.head(cfg.reps).setConstant(std::numbers::pi * (gi + 0.5) / kGrid);
        x.tail(cfg.reps).setConstant(std::numbers::pi * (bi + 0.5) / kGrid);
        const double value = objective(x);
        if (value < best_grid) {
          best_grid = value;
          best_point = x;
        }
      }
    }
    starts.push_back(best_point);
  }
  while (starts.size() < std::max<std::size_t>(cfg.optimizer_restarts, 1)) {
    Eigen::VectorXd x(dim);
    for (std::size_t k = 0; k < dim; ++k) x[static_cast<Eigen::Index>(k)] = rng.uniform(0.0, std::numbers::pi);
    starts.push_back(x);
  }

  NelderMeadOptions options;
  options.max_evaluations = cfg.optimizer_max_iters;
  for (const auto& start : starts) nelder_mead(objective, start, options);

  const Statevector final_state = qaoa_state(energies, n, outcome.best_params);
  // The sampling stream is decorrelated from the optimizer stream.
  outcome.samples = sample_distribution(final_state, cfg.shots, cfg.seed ^ 0x9E3779B97F4A7C15ULL);
  return outcome;
}

std::string trace_csv(const QaoaOutcome& outcome) {
  std::string out = "iteration,value,best\n";
  char buf[96];
  for (std::size_t i = 0; i < outcome.expectation_trace.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%zu,%.12g,%.12g\n", i, outcome.expectation_trace[i],
                  outcome.incumbent_trace[i]);
    out += buf;
  }
  return out;
}

std::string samples_csv(const SampleCounts& samples, std::size_t num_qubits) {
  std::string out = "bitstring,count\n";
  for (const auto& [index, count] : samples) {
    out += bitstring(index, num_qubits) + "," + std::to_string(count) + "\n";
  }
  return out;
}

}  // namespace routehobo
