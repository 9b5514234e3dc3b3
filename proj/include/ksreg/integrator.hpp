#pragma once

// Adaptive Dormand-Prince 5(4) for fixed-size autonomous or time-dependent
// systems y' = f(t, y), with terminal events located by bisection.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>

namespace ksreg {

struct IntegratorOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  double initial_step = 0.0;  // 0: chosen from the tolerances
  std::size_t max_steps = 1'000'000;
};

struct IntegratorStats {
  std::size_t steps = 0;
  std::size_t rejected_steps = 0;
};

enum class StepStatus { Reached, Event, StepBudget, StepUnderflow, NonFinite };

/// Terminal event: triggers when `value` goes from > 0 to <= 0. If `slope`
/// (the time derivative of value) is given, minima of value inside a step
/// are also located, so a brief dip below zero is not stepped over.
template <std::size_t N>
struct Event {
  std::function<double(double, const std::array<double, N>&)> value;
  std::function<double(double, const std::array<double, N>&)> slope;
};

template <std::size_t N>
class DormandPrince {
 public:
  using State = std::array<double, N>;
  using Rhs = std::function<State(double, const State&)>;
  using Observer = std::function<void(double, const State&)>;

  DormandPrince(Rhs f, double t0, const State& y0, IntegratorOptions opts = {})
      : f_(std::move(f)), opts_(opts), t_(t0), y_(y0), k1_(f_(t0, y0)) {
    h_ = opts_.initial_step > 0.0 ? opts_.initial_step : initial_step();
  }

  [[nodiscard]] double time() const { return t_; }
  [[nodiscard]] const State& state() const { return y_; }
  [[nodiscard]] const IntegratorStats& stats() const { return stats_; }

  /// Steps until t_target (hit exactly), an event, or a failure. `observer`
  /// sees every accepted step.
  StepStatus advance_to(double t_target, const Event<N>* event = nullptr, const Observer& observer = {}) {
    if (t_target < t_) throw std::invalid_argument("DormandPrince::advance_to: target lies in the past");
    while (t_ < t_target) {
      if (stats_.steps >= opts_.max_steps) return StepStatus::StepBudget;
      const double remaining = t_target - t_;
      const bool last = h_ >= remaining;
      const double h = last ? remaining : h_;
      State y_new, k_new;
      const double err = trial_step(t_, y_, k1_, h, y_new, k_new);
      if (!std::isfinite(err)) {
        h_ *= 0.25;
        ++stats_.rejected_steps;
        if (h_ < min_step()) return StepStatus::NonFinite;
        continue;
      }
      const double factor = std::clamp(0.9 * std::pow(std::fmax(err, 1e-300), -0.2), 0.2, 5.0);
      if (err > 1.0) {
        ++stats_.rejected_steps;
        h_ = h * std::fmax(0.2, factor);
        if (h_ < min_step()) return StepStatus::StepUnderflow;
        continue;
      }
      ++stats_.steps;
      const double t_new = last ? t_target : t_ + h;
      if (event != nullptr && locate_event(*event, h, y_new)) {
        if (observer) observer(t_, y_);
        return StepStatus::Event;
      }
      t_ = t_new;
      y_ = y_new;
      k1_ = k_new;
      if (!last) h_ = h * factor;
      if (observer) observer(t_, y_);
    }
    return StepStatus::Reached;
  }

 private:
  double min_step() const { return 1e-15 * std::fmax(1.0, std::fabs(t_)); }

  double initial_step() const {
    double y_norm = 0.0, f_norm = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      const double sc = opts_.abs_tol + opts_.rel_tol * std::fabs(y_[i]);
      y_norm = std::fmax(y_norm, std::fabs(y_[i]) / sc);
      f_norm = std::fmax(f_norm, std::fabs(k1_[i]) / sc);
    }
    double h = (y_norm < 1e-5 || f_norm < 1e-5) ? 1e-6 : 0.01 * y_norm / f_norm;
    return std::fmin(h, 0.1);
  }

  /// One Dormand-Prince step of size h; returns the scaled error norm.
  double trial_step(double t, const State& y, const State& k1, double h, State& y_new, State& k7) const {
    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                            a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                            b6 = 11.0 / 84;
    static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                            e6 = 22.0 / 525, e7 = -1.0 / 40;
    State tmp;
    for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + h * a21 * k1[i];
    const State k2 = f_(t + c2 * h, tmp);
    for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    const State k3 = f_(t + c3 * h, tmp);
    for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    const State k4 = f_(t + c4 * h, tmp);
    for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    const State k5 = f_(t + c5 * h, tmp);
    for (std::size_t i = 0; i < N; ++i)
      tmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
    const State k6 = f_(t + h, tmp);
    for (std::size_t i = 0; i < N; ++i)
      y_new[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
    k7 = f_(t + h, y_new);
    double err = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
      const double sc = opts_.abs_tol + opts_.rel_tol * std::fmax(std::fabs(y[i]), std::fabs(y_new[i]));
      err = std::fmax(err, std::fabs(e) / sc);
    }
    return err;
  }

  State step_from_current(double h) const {
    State y_new, k;
    trial_step(t_, y_, k1_, h, y_new, k);
    return y_new;
  }

  /// Bisects on the substep length from the current accepted state. On a
  /// hit, moves the integrator to the event and returns true.
  bool locate_event(const Event<N>& ev, double h, const State& y_new) {
    const double g0 = ev.value(t_, y_);
    if (g0 <= 0.0) return false;
    double lo = 0.0, hi = h;
    bool crossed = ev.value(t_ + h, y_new) <= 0.0;
    if (!crossed && ev.slope) {
      // Value may dip below zero and come back within the step: find the
      // minimum via the slope sign change, then test the value there.
      if (ev.slope(t_, y_) < 0.0 && ev.slope(t_ + h, y_new) > 0.0) {
        double a = 0.0, b = h;
        for (int it = 0; it < 200 && b - a > 1e-16 * std::fmax(1.0, std::fabs(t_)); ++it) {
          const double m = 0.5 * (a + b);
          const State ym = step_from_current(m);
          if (ev.slope(t_ + m, ym) < 0.0) a = m; else b = m;
        }
        const State ymin = step_from_current(b);
        if (ev.value(t_ + b, ymin) <= 0.0) {
          crossed = true;
          hi = b;
        }
      }
    }
    if (!crossed) return false;
    for (int it = 0; it < 200 && hi - lo > 1e-16 * std::fmax(1.0, std::fabs(t_)); ++it) {
      const double m = 0.5 * (lo + hi);
      const State ym = step_from_current(m);
      if (ev.value(t_ + m, ym) > 0.0) lo = m; else hi = m;
    }
    const State y_hit = step_from_current(hi);
    t_ += hi;
    y_ = y_hit;
    k1_ = f_(t_, y_);
    return true;
  }

  Rhs f_;
  IntegratorOptions opts_;
  double t_;
  State y_;
  State k1_;
  double h_ = 0.0;
  IntegratorStats stats_;
};

}  // namespace ksreg
