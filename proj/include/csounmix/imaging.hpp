#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <utility>
#include <vector>

#include "csounmix/types.hpp"

namespace csounmix {

/// Isotropic 2-D Gaussian PSF density at (x, y) for a source at `center`.
double psf_value(double x, double y, std::pair<double, double> center,
                 double sigma_psf);

/// Fraction of a unit source's energy collected by the pixel centered at
/// `pixel_center` with side D. Closed form: the 2-D Gaussian factorizes,
/// so the double integral is a product of two 1-D CDF differences.
double pixel_response(std::pair<double, double> pixel_center,
                      const Target& target, double pixel_width,
                      double sigma_psf);

/// Center of pixel (i, j) in sensor coordinates.
inline std::pair<double, double> pixel_center(int i, int j, double pixel_width) {
  return {(i + 0.5) * pixel_width, (j + 0.5) * pixel_width};
}

/// n x n subdivision of every pixel; cell (xh, yh) has center
/// ((xh+0.5)*D/n, (yh+0.5)*D/n) and flat index yh*(U*n) + xh.
struct SubPixelGrid {
  int n = 1;
  int sensor_width_px = 0;   // U
  int sensor_height_px = 0;  // V
  double pixel_width = 1.0;  // D
  std::vector<std::pair<double, double>> cell_centers;

  SubPixelGrid() = default;
  SubPixelGrid(const SensorConfig& sensor, int subdivision);

  int cells_x() const { return sensor_width_px * n; }
  int cells_y() const { return sensor_height_px * n; }
  size_t cell_count() const { return cell_centers.size(); }
  size_t cell_index(int xh, int yh) const {
    return size_t(yh) * cells_x() + xh;
  }
};

/// Dense dictionary mapping sub-pixel grid intensities to pixel responses.
/// Row p = pixel flat index (y*U + x), column l = sub-pixel cell flat index.
struct SteeringMatrix {
  Eigen::MatrixXd entries;
  SubPixelGrid grid;

  /// CRC-64 over dimensions and raw entry bytes; stored in checkpoints to
  /// detect evaluation against a different dictionary.
  uint64_t fingerprint() const;
};

SteeringMatrix build_steering_matrix(const SubPixelGrid& grid,
                                     const SensorConfig& sensor);

/// Renders z[p] = sum_i g_i * pixel_response(p, t_i) (+ optional noise).
/// Uses the exact continuous target positions. Noise is i.i.d. Gaussian
/// from the seeded generator; noise_sigma = 0 renders deterministically.
FocalPlaneImage render_scene(const TargetScene& scene, uint64_t rng_seed);

}  // namespace csounmix
