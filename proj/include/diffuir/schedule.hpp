#pragma once

#include <cmath>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "diffuir/errors.hpp"

namespace diffuir {

enum class ScheduleShape { LinearIncreasing, Constant };

inline const char* schedule_shape_name(ScheduleShape s) {
  return s == ScheduleShape::LinearIncreasing ? "linear-increasing"
                                              : "constant";
}

inline ScheduleShape schedule_shape_from_name(const std::string& name) {
  if (name == "linear-increasing") return ScheduleShape::LinearIncreasing;
  if (name == "constant") return ScheduleShape::Constant;
  throw config_error("schedule.shape: unknown shape '" + name +
                     "' (expected linear-increasing or constant)");
}

// Per-step and cumulative coefficients of a T-step diffusion process. The
// per-step arrays are 1-based (index 0 unused); cumulative arrays run 0..T
// with all three zero at index 0. beta_bar_sq holds the exact running sum of
// beta_t^2 so that telescoped lookups do not round through a square root.
// Immutable after construction; safe to share across threads.
struct ScheduleTable {
  int T = 0;
  std::vector<double> alpha, beta, delta;
  std::vector<double> alpha_bar, beta_bar, beta_bar_sq, delta_bar;
  double delta_bar_T_target = 0.0;

  void check_t(int t, const char* where) const {
    if (t < 1 || t > T) {
      throw index_error(std::string(where) + ": timestep " + std::to_string(t) +
                        " outside [1," + std::to_string(T) + "]");
    }
  }
  void check_t0(int t, const char* where) const {
    if (t < 0 || t > T) {
      throw index_error(std::string(where) + ": timestep " + std::to_string(t) +
                        " outside [0," + std::to_string(T) + "]");
    }
  }
};

inline ScheduleTable build_schedule(int T, double delta_bar_T,
                                    double beta_bar_T, ScheduleShape shape) {
  if (T < 1) {
    throw config_error("schedule.T must be >= 1 (got " + std::to_string(T) +
                       ")");
  }
  if (!(delta_bar_T >= 0.0 && delta_bar_T <= 1.0)) {
    throw config_error("schedule.delta_bar_T must lie in [0,1] (got " +
                       std::to_string(delta_bar_T) + ")");
  }
  if (!(beta_bar_T > 0.0)) {
    throw config_error("schedule.beta_bar_T must be > 0 (got " +
                       std::to_string(beta_bar_T) + ")");
  }

  ScheduleTable s;
  s.T = T;
  s.delta_bar_T_target = delta_bar_T;
  s.alpha.assign(T + 1, 0.0);
  s.beta.assign(T + 1, 0.0);
  s.delta.assign(T + 1, 0.0);
  s.alpha_bar.assign(T + 1, 0.0);
  s.beta_bar.assign(T + 1, 0.0);
  s.beta_bar_sq.assign(T + 1, 0.0);
  s.delta_bar.assign(T + 1, 0.0);

  const double beta_sq_step = beta_bar_T * beta_bar_T / T;
  for (int t = 1; t <= T; ++t) {
    const double a = (shape == ScheduleShape::LinearIncreasing)
                         ? 2.0 * t / (static_cast<double>(T) * (T + 1))
                         : 1.0 / T;
    s.alpha[t] = a;
    s.delta[t] = delta_bar_T * a;
    s.beta[t] = std::sqrt(beta_sq_step);
    s.alpha_bar[t] = s.alpha_bar[t - 1] + s.alpha[t];
    s.delta_bar[t] = s.delta_bar[t - 1] + s.delta[t];
    s.beta_bar_sq[t] = s.beta_bar_sq[t - 1] + s.beta[t] * s.beta[t];
    s.beta_bar[t] = std::sqrt(s.beta_bar_sq[t]);
  }
  return s;
}

// Evenly spaced skip-step timesteps T = t_S > ... > t_0 = 0, S+1 entries.
inline std::vector<int> subsequence(const ScheduleTable& sched, int S) {
  if (S < 1 || S > sched.T) {
    throw config_error("sampling.steps must lie in [1,T=" +
                       std::to_string(sched.T) + "] (got " + std::to_string(S) +
                       ")");
  }
  std::vector<int> ts(S + 1);
  for (int i = 0; i <= S; ++i) {
    ts[i] = static_cast<int>(
        std::llround(static_cast<double>(sched.T) * (S - i) / S));
  }
  return ts;
}

inline void write_schedule_csv(std::ostream& os, const ScheduleTable& s) {
  os << "t,alpha,beta,delta,alpha_bar,beta_bar,delta_bar\n";
  os.precision(17);
  for (int t = 0; t <= s.T; ++t) {
    os << t << ',' << s.alpha[t] << ',' << s.beta[t] << ',' << s.delta[t]
       << ',' << s.alpha_bar[t] << ',' << s.beta_bar[t] << ',' << s.delta_bar[t]
       << '\n';
  }
}

}  // namespace diffuir
