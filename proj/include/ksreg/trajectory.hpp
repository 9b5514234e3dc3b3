#pragma once

// Time-stamped state sequences with per-sample logs of conserved
// quantities, and their CSV / JSON serializations.

#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ksreg/types.hpp"

namespace ksreg {

template <class State>
struct Trajectory {
  std::vector<double> times;
  std::vector<State> states;
  std::vector<std::string> conserved_names;
  std::vector<std::vector<double>> conserved_log;  // one row per sample

  [[nodiscard]] std::size_t size() const { return times.size(); }
  [[nodiscard]] bool empty() const { return times.empty(); }

  /// Appends a sample; times must increase strictly.
  void push(double t, const State& s, std::vector<double> conserved = {}) {
    if (!times.empty() && !(t > times.back())) throw std::invalid_argument("Trajectory::push: times must increase");
    times.push_back(t);
    states.push_back(s);
    conserved_log.push_back(std::move(conserved));
  }
};

using Trajectory8 = Trajectory<Point8>;
using Trajectory6 = Trajectory<Point6>;

/// 17 significant digits, '.' decimal point regardless of locale.
std::string format_double(double v);

/// Oscillator side: t, q1..q4, p1..p4, then the conserved columns.
void write_csv(std::ostream& os, const Trajectory8& traj);
/// Kepler side: t, x1..x3, y1..y3, energy, J1..J3, e1..e3 (computed from the
/// states; conserved_log is not used).
void write_csv(std::ostream& os, const Trajectory6& traj);
void write_json(std::ostream& os, const Trajectory8& traj);
void write_json(std::ostream& os, const Trajectory6& traj);

}  // namespace ksreg
