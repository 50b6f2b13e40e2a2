#include "csounmix/imaging.hpp"

#include <cmath>

#include "csounmix/crc64.hpp"
#include "csounmix/rng.hpp"

namespace csounmix {

void SensorConfig::validate() const {
  if (width_px < 1 || height_px < 1)
    throw ConfigError("sensor dimensions must be at least 1x1");
  if (!(pixel_width > 0.0)) throw ConfigError("pixel_width must be positive");
  if (!(sigma_psf > 0.0)) throw ConfigError("sigma_psf must be positive");
  if (!(noise_sigma >= 0.0)) throw ConfigError("noise_sigma must be nonnegative");
}

void TargetScene::validate() const {
  sensor.validate();
  const double xmax = sensor.width_px * sensor.pixel_width;
  const double ymax = sensor.height_px * sensor.pixel_width;
  for (const auto& t : targets) {
    if (!(t.intensity > 0.0)) throw ConfigError("target intensity must be positive");
    if (!(t.x >= 0.0 && t.x < xmax && t.y >= 0.0 && t.y < ymax))
      throw ConfigError("target position outside the sensor area");
  }
}

double psf_value(double x, double y, std::pair<double, double> center,
                 double sigma_psf) {
  if (!(sigma_psf > 0.0)) throw ValidationError("psf_value: sigma_psf must be positive");
  if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(center.first) ||
      !std::isfinite(center.second) || !std::isfinite(sigma_psf))
    throw ValidationError("psf_value: non-finite input");
  const double s2 = sigma_psf * sigma_psf;
  const double dx = x - center.first;
  const double dy = y - center.second;
  return std::exp(-(dx * dx + dy * dy) / (2.0 * s2)) / (2.0 * M_PI * s2);
}

namespace {

// Integral of a 1-D Gaussian (mean mu, stddev sigma) over [a, b].
inline double gauss_mass_1d(double a, double b, double mu, double sigma) {
  const double inv = 1.0 / (sigma * M_SQRT2);
  return 0.5 * (std::erf((b - mu) * inv) - std::erf((a - mu) * inv));
}

}  // namespace

double pixel_response(std::pair<double, double> pixel_center,
                      const Target& target, double pixel_width,
                      double sigma_psf) {
  if (!(pixel_width > 0.0)) throw ValidationError("pixel_response: pixel_width must be positive");
  if (!(sigma_psf > 0.0)) throw ValidationError("pixel_response: sigma_psf must be positive");
  const double half = 0.5 * pixel_width;
  const double mx = gauss_mass_1d(pixel_center.first - half,
                                  pixel_center.first + half, target.x, sigma_psf);
  const double my = gauss_mass_1d(pixel_center.second - half,
                                  pixel_center.second + half, target.y, sigma_psf);
  return mx * my;
}

SubPixelGrid::SubPixelGrid(const SensorConfig& sensor, int subdivision) {
  sensor.validate();
  if (subdivision < 1) throw ConfigError("sub-pixel division factor must be >= 1");
  n = subdivision;
  sensor_width_px = sensor.width_px;
  sensor_height_px = sensor.height_px;
  pixel_width = sensor.pixel_width;
  const double step = pixel_width / n;
  cell_centers.reserve(size_t(cells_x()) * cells_y());
  for (int yh = 0; yh < cells_y(); ++yh)
    for (int xh = 0; xh < cells_x(); ++xh)
      cell_centers.emplace_back((xh + 0.5) * step, (yh + 0.5) * step);
}

uint64_t SteeringMatrix::fingerprint() const {
  Crc64 crc;
  const int64_t dims[3] = {entries.rows(), entries.cols(), grid.n};
  crc.update(dims, sizeof dims);
  crc.update(entries.data(), sizeof(double) * size_t(entries.size()));
  return crc.value();
}

SteeringMatrix build_steering_matrix(const SubPixelGrid& grid,
                                     const SensorConfig& sensor) {
  sensor.validate();
  if (grid.sensor_width_px != sensor.width_px ||
      grid.sensor_height_px != sensor.height_px ||
      grid.pixel_width != sensor.pixel_width)
    throw ConfigError("sub-pixel grid does not match the sensor configuration");

  const int U = sensor.width_px;
  const int V = sensor.height_px;
  const size_t L = grid.cell_count();
  SteeringMatrix sm;
  sm.grid = grid;
  sm.entries.resize(size_t(U) * V, L);
  for (size_t l = 0; l < L; ++l) {
    Target unit{grid.cell_centers[l].first, grid.cell_centers[l].second, 1.0};
    for (int j = 0; j < V; ++j)
      for (int i = 0; i < U; ++i)
        sm.entries(size_t(j) * U + i, l) = pixel_response(
            pixel_center(i, j, sensor.pixel_width), unit, sensor.pixel_width,
            sensor.sigma_psf);
  }
  return sm;
}

FocalPlaneImage render_scene(const TargetScene& scene, uint64_t rng_seed) {
  scene.validate();
  const auto& s = scene.sensor;
  FocalPlaneImage img(s.width_px, s.height_px);
  for (const auto& t : scene.targets) {
    for (int j = 0; j < s.height_px; ++j)
      for (int i = 0; i < s.width_px; ++i)
        img.at(i, j) += t.intensity * pixel_response(pixel_center(i, j, s.pixel_width),
                                                     t, s.pixel_width, s.sigma_psf);
  }
  if (s.noise_sigma > 0.0) {
    Rng rng(rng_seed);
    for (auto& v : img.values) v += rng.gaussian(0.0, s.noise_sigma);
  }
  return img;
}

}  // namespace csounmix
