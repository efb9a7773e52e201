#pragma once

#include <array>
#include <functional>
#include <optional>

namespace umbilic {

/// Coefficients (a, b, c) of a dx^2 + b dx dy + c dy^2 at a point; `scale` (may be null)
/// receives the floating rounding scale of the coefficients.
using FormSampler = std::function<std::array<double, 3>(double x, double y, double* scale)>;

/// The two null directions as angles in [0, pi), first <= second. A negative discriminant is
/// treated as zero (double root). Empty when a = b = c = 0.
struct NullDirections {
  double first = 0.0;
  double second = 0.0;
  bool double_root = false;
};

std::optional<NullDirections> null_directions(double a, double b, double c);

/// Wraps an angle difference into (-pi/2, pi/2].
double wrap_line_angle(double delta);

/// Root of the pair closest to `reference` modulo pi.
double closest_direction(const NullDirections& d, double reference);

struct Winding {
  int index_halves = 0;  // twice the index
  bool converged = false;
  int samples = 0;
  double max_step = 0.0;
  double min_discriminant = 0.0;  // min of (b^2 - 4ac) / (b^2 + 4|ac|) along the loop
};

inline constexpr int kMinWindingSamples = 256;
inline constexpr int kMaxWindingSamples = 1 << 20;

/// Index of the line field along the circle, in halves: the degree of (a - c, b). Samples
/// double until every angular step of that vector is below pi/8.
Winding winding_number(const FormSampler& form, double cx, double cy, double radius, int samples);

struct CertifiedIndex {
  int index_halves = 0;
  bool certified = false;  // both radii converged and agree
  bool exact = false;      // from exact loop indices rather than sampling
  double radius = 0.0;
  Winding outer;
  Winding inner;  // at radius / 2
};

CertifiedIndex certified_index(const FormSampler& form, double cx, double cy, double radius, int samples);

}  // namespace umbilic
