#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ergo {

using ScalarFn = std::function<double(double)>;

// State advanced past the simulator's finite range.
struct ExplosionError : std::runtime_error {
  double time;
  explicit ExplosionError(double t)
      : std::runtime_error("state became non-finite at t=" + std::to_string(t)), time(t) {}
};

// Operation requested on a model that does not expose the needed access.
struct UnsupportedOperation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Quadrature / root-finding / linear-algebra failure with diagnostics.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Union of closed intervals and/or a finite label set; the one set type
// used for hitting targets, Doeblin sets and level sets.
struct StateSet {
  std::vector<std::pair<double, double>> intervals;  // closed [lo, hi]
  std::vector<int> labels;                           // finite-chain states

  static StateSet interval(double lo, double hi) {
    StateSet s;
    s.intervals.push_back({lo, hi});
    return s;
  }
  static StateSet states(std::vector<int> ls) {
    StateSet s;
    s.labels = std::move(ls);
    return s;
  }

  bool empty() const { return intervals.empty() && labels.empty(); }

  bool contains(double x) const {
    for (const auto& [lo, hi] : intervals)
      if (x >= lo && x <= hi) return true;
    for (int l : labels)
      if (static_cast<int>(std::lround(x)) == l) return true;
    return false;
  }

  // Negative inside, positive outside; used for crossing refinement.
  double signed_distance(double x) const {
    if (intervals.empty()) return contains(x) ? -1.0 : 1.0;
    double best = std::numeric_limits<double>::infinity();
    for (const auto& [lo, hi] : intervals) {
      double d = std::max(lo - x, x - hi);  // <= 0 inside
      best = std::min(best, d);
    }
    return best;
  }
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace ergo
