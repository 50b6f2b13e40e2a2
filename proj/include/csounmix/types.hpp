#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace csounmix {

/// Bad configuration or arguments; the CLI maps these to exit code 1.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Numeric or runtime failure; the CLI maps these to exit code 2.
struct RuntimeFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : ValidationError {
  using ValidationError::ValidationError;
};
struct GenerationError : RuntimeFailure {
  using RuntimeFailure::RuntimeFailure;
};
struct EncodingError : RuntimeFailure {
  using RuntimeFailure::RuntimeFailure;
};
struct GraphError : RuntimeFailure {
  using RuntimeFailure::RuntimeFailure;
};
struct SolverError : RuntimeFailure {
  using RuntimeFailure::RuntimeFailure;
};
struct TrainingError : RuntimeFailure {
  using RuntimeFailure::RuntimeFailure;
};
struct IoError : RuntimeFailure {
  using RuntimeFailure::RuntimeFailure;
};

/// Focal-plane sensor description.
///
/// Pixel (i, j) occupies [i*D, (i+1)*D) x [j*D, (j+1)*D) in sensor
/// coordinates, so its center sits at ((i+0.5)*D, (j+0.5)*D). All target
/// coordinates use this frame.
struct SensorConfig {
  int width_px = 11;         // U
  int height_px = 11;        // V
  double pixel_width = 1.0;  // D
  double sigma_psf = 0.5;    // PSF stddev, pixel units
  double noise_sigma = 0.0;  // additive white-noise stddev, intensity units

  void validate() const;
};

/// A point source on the sensor: continuous position plus radiant intensity.
struct Target {
  double x = 0.0;
  double y = 0.0;
  double intensity = 0.0;
};

struct TargetScene {
  std::vector<Target> targets;
  SensorConfig sensor;

  void validate() const;
};

/// Observed low-resolution measurement; row-major with index y*width + x.
struct FocalPlaneImage {
  int width = 0;
  int height = 0;
  std::vector<double> values;

  FocalPlaneImage() = default;
  FocalPlaneImage(int w, int h) : width(w), height(h), values(size_t(w) * h, 0.0) {}

  double& at(int x, int y) { return values[size_t(y) * width + x]; }
  double at(int x, int y) const { return values[size_t(y) * width + x]; }
  size_t size() const { return values.size(); }
};

/// High-resolution sparse intensity grid; row-major with index y*width + x.
/// width = U*c, height = V*c for grid factor c.
struct SparseGridImage {
  int width = 0;
  int height = 0;
  int grid_factor = 1;
  std::vector<double> values;

  SparseGridImage() = default;
  SparseGridImage(int w, int h, int c)
      : width(w), height(h), grid_factor(c), values(size_t(w) * h, 0.0) {}

  double& at(int x, int y) { return values[size_t(y) * width + x]; }
  double at(int x, int y) const { return values[size_t(y) * width + x]; }
  size_t size() const { return values.size(); }
};

}  // namespace csounmix
