#pragma once

// Approximation error and ASER (average signal to error ratio) benchmarking.
//
// For a modulated test signal, the "desired" output substitutes the analytic
// amplitude/frequency tracks into the operator's cosine response sample by
// sample; the approximation error is the difference between the operator's
// actual output and that desired track. The sweep measures ASER over a
// lambda x beta grid and averages linearly over lambda for each beta.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <exception>
#include <istream>
#include <limits>
#include <mutex>
#include <numbers>
#include <span>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "heo/oracle.hpp"
#include "heo/pdeo.hpp"
#include "heo/signals.hpp"
#include "heo/types.hpp"

namespace heo {

/// Mean absolute errors at or below this fraction of the desired scale count
/// as exact (zero error): the cell's ASER is the infinity marker. Matches the
/// steady-state exactness bound of the generators on pure cosines.
inline constexpr double kExactErrorTol = 1e-9;

/// Sentinel: derive the guard band as k + 2 per order.
inline constexpr int kGuardAuto = -1;

inline std::vector<double> arithmetic_grid(double start, double step, double stop) {
  if (step <= 0.0 || stop < start)
    throw InvalidArgument("arithmetic grid requires step > 0 and stop >= start");
  const auto count = static_cast<std::size_t>(std::llround((stop - start) / step)) + 1;
  std::vector<double> values(count);
  for (std::size_t i = 0; i < count; ++i) values[i] = start + static_cast<double>(i) * step;
  return values;
}

struct SweepConfig {
  double omega_c = std::numbers::pi / 2;
  std::vector<double> lambdas = arithmetic_grid(0.0, 0.02, 0.5);
  std::vector<double> betas = arithmetic_grid(0.0, 0.01, 1.0);
  std::vector<int> orders = {4, 6, 8};
  std::vector<OperatorKind> kinds{std::begin(kAllOperatorKinds), std::end(kAllOperatorKinds)};
  std::size_t samples = 1024;
  int guard = kGuardAuto;

  void validate() const {
    if (!(omega_c > 0.0 && omega_c < std::numbers::pi))
      throw InvalidArgument("sweep: omega_c outside (0, pi)");
    const auto check_grid = [](const std::vector<double>& g, const char* name, double lo,
                               double hi) {
      if (g.empty()) throw InvalidArgument(std::string("sweep: empty ") + name + " grid");
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i] < lo || g[i] > hi)
          throw InvalidArgument(std::string("sweep: ") + name + " value outside range");
        if (i > 0 && g[i] <= g[i - 1])
          throw InvalidArgument(std::string("sweep: ") + name + " grid not strictly increasing");
      }
    };
    check_grid(lambdas, "lambda", 0.0, 0.5);
    check_grid(betas, "beta", 0.0, 1.0);
    if (orders.empty()) throw InvalidArgument("sweep: empty order list");
    int max_k = 0;
    for (int k : orders) {
      if (k < 2 || k > kMaxOrder || k % 2 != 0)
        throw InvalidArgument("sweep: orders must be even and in [2, " +
                              std::to_string(kMaxOrder) + "], got " + std::to_string(k));
      max_k = std::max(max_k, k);
    }
    if (kinds.empty()) throw InvalidArgument("sweep: empty kind list");
    const int g = guard == kGuardAuto ? max_k + 2 : guard;
    if (g < 0) throw InvalidArgument("sweep: guard must be >= 0");
    if (samples <= static_cast<std::size_t>(4 * max_k + 2 * g))
      throw InvalidArgument("sweep: samples must exceed 4*max(k) + 2*guard");
  }
};

/// Desired per-sample output: the cosine response evaluated on the analytic
/// amplitude and frequency tracks.
inline Signal desired_output(OperatorKind kind, int k, const ModulatedSignal& sig) {
  check_operator_order(kind, k);
  const std::size_t n = sig.samples.size();
  Signal d(n);
  if (n == 0) return d;
  const bool constant_freq =
      std::all_of(sig.freq_track.begin(), sig.freq_track.end(),
                  [&](double w) { return w == sig.freq_track.front(); });
  if (constant_freq) {
    // quadratic amplitude dependence: evaluate the frequency shape once
    const double rho = cosine_response(kind, k, 1.0, sig.freq_track.front());
    for (std::size_t i = 0; i < n; ++i) d[i] = sig.amp_track[i] * sig.amp_track[i] * rho;
  } else {
    for (std::size_t i = 0; i < n; ++i)
      d[i] = cosine_response(kind, k, sig.amp_track[i], sig.freq_track[i]);
  }
  return d;
}

namespace detail {

inline int resolve_guard(int guard, int k) {
  if (guard == kGuardAuto) return std::abs(k) + 2;
  if (guard < 0) throw InvalidArgument("guard must be >= 0");
  return guard;
}

inline void shrink_by_guard(OperatorOutput& out, int guard) {
  const auto g = static_cast<std::size_t>(guard);
  if (out.count() <= 2 * g)
    throw SignalTooShort("guard band removes the whole valid range");
  for (std::size_t i = 0; i < g; ++i) {
    out.samples[out.first + i] = std::numeric_limits<double>::quiet_NaN();
    out.samples[out.last - i] = std::numeric_limits<double>::quiet_NaN();
  }
  out.first += g;
  out.last -= g;
}

}  // namespace detail

/// E[n] = operator output - desired output, on the operator's valid range
/// shrunk by the guard band at each end.
inline OperatorOutput approximation_error(OperatorKind kind, int k, const ModulatedSignal& sig,
                                          int guard = kGuardAuto) {
  OperatorOutput out = apply_operator(kind, sig.samples, k);
  detail::shrink_by_guard(out, detail::resolve_guard(guard, k));
  const Signal d = desired_output(kind, k, sig);
  for (std::size_t i = out.first; i <= out.last; ++i) out.samples[i] -= d[i];
  return out;
}

/// mean|D| / mean|E| over a common range. A mean error at rounding level
/// (<= kExactErrorTol relative to the desired scale) returns the +infinity
/// marker; this is how "zero error" is decided in floating point.
inline double aser(std::span<const double> desired, std::span<const double> error) {
  if (desired.size() != error.size())
    throw InvalidArgument("aser: desired/error ranges differ in length");
  if (desired.empty()) throw InvalidArgument("aser: empty range");
  double sum_d = 0.0, sum_e = 0.0;
  for (double v : desired) sum_d += std::abs(v);
  for (double v : error) sum_e += std::abs(v);
  const double mean_d = sum_d / static_cast<double>(desired.size());
  const double mean_e = sum_e / static_cast<double>(error.size());
  if (mean_e <= kExactErrorTol * std::max(1.0, mean_d))
    return std::numeric_limits<double>::infinity();
  return mean_d / mean_e;
}

/// ASER of one (kind, k, signal) benchmark cell.
inline double cell_aser(OperatorKind kind, int k, const ModulatedSignal& sig,
                        int guard = kGuardAuto) {
  OperatorOutput out = apply_operator(kind, sig.samples, k);
  detail::shrink_by_guard(out, detail::resolve_guard(guard, k));
  const Signal d = desired_output(kind, k, sig);
  const std::size_t n = out.count();
  double sum_d = 0.0, sum_e = 0.0;
  for (std::size_t i = out.first; i <= out.last; ++i) {
    sum_d += std::abs(d[i]);
    sum_e += std::abs(out.samples[i] - d[i]);
  }
  const double mean_d = sum_d / static_cast<double>(n);
  const double mean_e = sum_e / static_cast<double>(n);
  if (mean_e <= kExactErrorTol * std::max(1.0, mean_d))
    return std::numeric_limits<double>::infinity();
  return mean_d / mean_e;
}

struct SweepRow {
  OperatorKind kind;
  int k;
  Modulation modulation;
  double beta;
  double aser_db;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  /// (modulation, beta, lambda) grid points skipped because the FM generator
  /// rejected them (instantaneous frequency above Nyquist).
  std::size_t skipped_points = 0;
};

/// Runs the lambda x beta sweep. For each (kind, k, modulation, beta) the
/// linear ASER values are averaged over lambda in ascending order and then
/// converted to dB as 20 log10. Cells whose ASER is the infinity marker
/// (exact steady state, e.g. beta = 0 or lambda = 0) carry no error
/// information and are excluded from the average; a row where every cell is
/// exact reports the infinity marker itself. Results are bit-identical for
/// any worker count.
inline SweepResult run_sweep(const SweepConfig& cfg, unsigned jobs = 0) {
  cfg.validate();
  if (jobs == 0) {
    jobs = std::thread::hardware_concurrency();
    if (jobs == 0) jobs = 1;
  }
  const Modulation mods[] = {Modulation::AM, Modulation::FM};
  const std::size_t n_cells = cfg.kinds.size() * cfg.orders.size();
  const std::size_t n_units = 2 * cfg.betas.size();

  struct Unit {
    std::vector<double> db;  // kind-major, then order
    std::size_t skipped = 0;
  };
  std::vector<Unit> units(n_units);

  const auto run_unit = [&](std::size_t u) {
    const Modulation mod = mods[u / cfg.betas.size()];
    const double beta = cfg.betas[u % cfg.betas.size()];
    std::vector<double> sum(n_cells, 0.0);
    std::vector<std::size_t> finite(n_cells, 0), infinite(n_cells, 0);
    std::size_t skipped = 0;
    for (double lambda : cfg.lambdas) {
      ModulationParams p;
      p.lambda = lambda;
      p.beta = beta;
      p.omega_c = cfg.omega_c;
      p.length = cfg.samples;
      ModulatedSignal sig;
      try {
        sig = (mod == Modulation::AM) ? make_am(p) : make_fm(p);
      } catch (const InvalidArgument&) {
        ++skipped;
        continue;
      }
      std::size_t cell = 0;
      for (OperatorKind kind : cfg.kinds) {
        for (int k : cfg.orders) {
          const double r = cell_aser(kind, k, sig, cfg.guard);
          if (std::isinf(r))
            ++infinite[cell];
          else {
            sum[cell] += r;
            ++finite[cell];
          }
          ++cell;
        }
      }
    }
    Unit& unit = units[u];
    unit.skipped = skipped;
    unit.db.resize(n_cells);
    for (std::size_t c = 0; c < n_cells; ++c) {
      if (finite[c] > 0)
        unit.db[c] = 20.0 * std::log10(sum[c] / static_cast<double>(finite[c]));
      else if (infinite[c] > 0)
        unit.db[c] = std::numeric_limits<double>::infinity();
      else
        unit.db[c] = std::numeric_limits<double>::quiet_NaN();
    }
  };

  if (jobs == 1 || n_units == 1) {
    for (std::size_t u = 0; u < n_units; ++u) run_unit(u);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const auto worker = [&] {
      for (;;) {
        const std::size_t u = next.fetch_add(1);
        if (u >= n_units) return;
        try {
          run_unit(u);
        } catch (...) {
          const std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    const unsigned n_threads = std::min<unsigned>(jobs, static_cast<unsigned>(n_units));
    pool.reserve(n_threads);
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  SweepResult result;
  result.rows.reserve(n_cells * n_units);
  for (std::size_t ki = 0; ki < cfg.kinds.size(); ++ki) {
    for (std::size_t oi = 0; oi < cfg.orders.size(); ++oi) {
      const std::size_t cell = ki * cfg.orders.size() + oi;
      for (std::size_t mi = 0; mi < 2; ++mi) {
        for (std::size_t bi = 0; bi < cfg.betas.size(); ++bi) {
          const Unit& unit = units[mi * cfg.betas.size() + bi];
          result.rows.push_back(SweepRow{cfg.kinds[ki], cfg.orders[oi], mods[mi],
                                         cfg.betas[bi], unit.db[cell]});
        }
      }
    }
  }
  for (const Unit& unit : units) result.skipped_points += unit.skipped;
  return result;
}

/// Parses the flat `key = value` sweep configuration format. Unknown keys,
/// malformed values and invalid grids are reported with their line number.
/// Grid values are either a single number or `start:step:stop`.
inline SweepConfig parse_sweep_config(std::istream& in) {
  SweepConfig cfg;
  std::string line;
  std::size_t line_no = 0;
  const auto trim = [](std::string s) {
    const auto a = s.find_first_not_of(" \t\r");
    const auto b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
  };
  const auto parse_double = [&](const std::string& s) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &pos);
    } catch (const std::exception&) {
      throw ParseError(line_no, "expected a number, got '" + s + "'");
    }
    if (pos != s.size()) throw ParseError(line_no, "trailing characters in number '" + s + "'");
    return v;
  };
  const auto parse_grid = [&](const std::string& s) {
    std::vector<std::string> parts;
    std::string part;
    std::istringstream ss(s);
    while (std::getline(ss, part, ':')) parts.push_back(trim(part));
    if (parts.size() == 1) return std::vector<double>{parse_double(parts[0])};
    if (parts.size() != 3)
      throw ParseError(line_no, "grid must be a number or start:step:stop, got '" + s + "'");
    try {
      return arithmetic_grid(parse_double(parts[0]), parse_double(parts[1]), parse_double(parts[2]));
    } catch (const InvalidArgument& e) {
      throw ParseError(line_no, e.what());
    }
  };
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(line_no, "expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (value.empty()) throw ParseError(line_no, "missing value for key '" + key + "'");
    if (key == "omega_c") {
      cfg.omega_c = parse_double(value);
    } else if (key == "lambda") {
      cfg.lambdas = parse_grid(value);
    } else if (key == "beta") {
      cfg.betas = parse_grid(value);
    } else if (key == "orders") {
      cfg.orders.clear();
      std::istringstream ss(value);
      std::string item;
      while (std::getline(ss, item, ',')) {
        const double v = parse_double(trim(item));
        cfg.orders.push_back(static_cast<int>(v));
      }
    } else if (key == "kinds") {
      cfg.kinds.clear();
      std::istringstream ss(value);
      std::string item;
      while (std::getline(ss, item, ',')) {
        try {
          cfg.kinds.push_back(parse_operator_kind(trim(item)));
        } catch (const InvalidArgument& e) {
          throw ParseError(line_no, e.what());
        }
      }
    } else if (key == "samples") {
      const double v = parse_double(value);
      if (v < 1) throw ParseError(line_no, "samples must be >= 1");
      cfg.samples = static_cast<std::size_t>(v);
    } else if (key == "guard") {
      cfg.guard = value == "auto" ? kGuardAuto : static_cast<int>(parse_double(value));
    } else {
      throw ParseError(line_no, "unknown key '" + key + "'");
    }
  }
  try {
    cfg.validate();
  } catch (const InvalidArgument& e) {
    throw ParseError(line_no, e.what());
  }
  return cfg;
}

}  // namespace heo
