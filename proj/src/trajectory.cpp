#include "ksreg/trajectory.hpp"

#include <charconv>
#include <cmath>

#include <json.hpp>

#include "ksreg/kepler_dynamics.hpp"

namespace ksreg {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

namespace {

void write_row(std::ostream& os, const std::vector<double>& row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) os << ',';
    os << format_double(row[i]);
  }
  os << '\n';
}

std::vector<double> kepler_row(double t, const Point6& w) {
  std::vector<double> row{t};
  for (std::size_t i = 0; i < 6; ++i) row.push_back(w[i]);
  const bool regular = norm_squared(w.x) > 0.0;
  const double nan = std::nan("");
  row.push_back(regular ? kepler_energy(w) : nan);
  const Vec3<double> J = regular ? angular_momentum(w) : Vec3<double>{nan, nan, nan};
  const Vec3<double> e = regular ? eccentricity(w) : Vec3<double>{nan, nan, nan};
  row.insert(row.end(), J.begin(), J.end());
  row.insert(row.end(), e.begin(), e.end());
  return row;
}

const std::vector<std::string> kKeplerColumns{"t",  "x1", "x2", "x3", "y1", "y2", "y3", "energy",
                                              "J1", "J2", "J3", "e1", "e2", "e3"};

}  // namespace

void write_csv(std::ostream& os, const Trajectory8& traj) {
  os << "t,q1,q2,q3,q4,p1,p2,p3,p4";
  for (const auto& name : traj.conserved_names) os << ',' << name;
  os << '\n';
  for (std::size_t i = 0; i < traj.size(); ++i) {
    std::vector<double> row{traj.times[i]};
    for (std::size_t j = 0; j < 8; ++j) row.push_back(traj.states[i][j]);
    row.insert(row.end(), traj.conserved_log[i].begin(), traj.conserved_log[i].end());
    write_row(os, row);
  }
}

void write_csv(std::ostream& os, const Trajectory6& traj) {
  for (std::size_t i = 0; i < kKeplerColumns.size(); ++i) os << (i ? "," : "") << kKeplerColumns[i];
  os << '\n';
  for (std::size_t i = 0; i < traj.size(); ++i) write_row(os, kepler_row(traj.times[i], traj.states[i]));
}

void write_json(std::ostream& os, const Trajectory8& traj) {
  nlohmann::json j;
  j["columns"] = {"t", "q1", "q2", "q3", "q4", "p1", "p2", "p3", "p4"};
  for (const auto& name : traj.conserved_names) j["columns"].push_back(name);
  j["rows"] = nlohmann::json::array();
  for (std::size_t i = 0; i < traj.size(); ++i) {
    std::vector<double> row{traj.times[i]};
    for (std::size_t k = 0; k < 8; ++k) row.push_back(traj.states[i][k]);
    row.insert(row.end(), traj.conserved_log[i].begin(), traj.conserved_log[i].end());
    j["rows"].push_back(row);
  }
  os << j.dump(1) << '\n';
}

void write_json(std::ostream& os, const Trajectory6& traj) {
  nlohmann::json j;
  j["columns"] = kKeplerColumns;
  j["rows"] = nlohmann::json::array();
  for (std::size_t i = 0; i < traj.size(); ++i) j["rows"].push_back(kepler_row(traj.times[i], traj.states[i]));
  os << j.dump(1) << '\n';
}

}  // namespace ksreg
