#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "umbilic/linefield.hpp"

namespace umbilic {

using Point2 = std::array<double, 2>;

enum class Termination { Boundary, UmbilicProximity, StepFailure, MaxLength };

const char* to_string(Termination t);

struct Region {
  double xmin = -1, xmax = 1, ymin = -1, ymax = 1;
  bool contains(const Point2& p) const { return p[0] >= xmin && p[0] <= xmax && p[1] >= ymin && p[1] <= ymax; }
  double diameter() const;
};

struct Streamline {
  int branch = 1;
  std::string chart = "plane";
  std::vector<Point2> points;
  Termination reason = Termination::MaxLength;
  double length = 0.0;
};

struct StreamlineOptions {
  double tol = 1e-8;             // absolute local error per step
  double max_step_fraction = 1e-2;  // of the region diameter
  double r_stop = 1e-3;
  double max_length = 1e300;     // arc length; the region usually ends the line first
  int max_steps = 100000;
};

/// Integrates one branch of the null-direction field of `form` from `seed` with an embedded
/// Dormand-Prince 4(5) pair on the unit direction field. Branch 1 starts along the smaller
/// angle in [0, pi), branch 2 along the other; `start_angle` overrides the initial choice with
/// the root closest to it. `orientation` (+1 or -1) picks the sense of travel. Later steps keep
/// the root closest to the previous tangent. Throws DomainError when the seed is within r_stop
/// of a known umbilic or the form vanishes there.
Streamline integrate_streamline(const FormSampler& form, const Point2& seed, int branch, const Region& region,
                                const std::vector<Point2>& umbilics, const StreamlineOptions& options = {},
                                int orientation = 1, std::optional<double> start_angle = std::nullopt,
                                const std::string& chart = "plane");

}  // namespace umbilic
