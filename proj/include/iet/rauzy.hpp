#pragma once

/**
 * @file rauzy.hpp
 * @brief Tribonacci broken line, its projection, and the exchange of pieces.
 *
 * Floating point throughout. Letters a, b, c stand for 1, 2, 3. Planar
 * coordinates are taken in the basis (pi(e3) - pi(e1), pi(e3) - pi(e2)) of
 * the plane x + y + z = 0, where pi projects along the expanding eigenvector
 * (1/beta, 1/beta^2, 1/beta^3).
 */

#include <array>
#include <cstddef>
#include <filesystem>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "iet/language.hpp"

namespace iet::rauzy {

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<Vec3, 3>;

/// Occurrence counts of 1, 2, 3 (or a, b, c). Throws AlphabetMismatch.
Vec3 abelianize(std::string_view w);

/// F[i][j] = |f(j)|_i over the sorted 3-letter alphabet of f.
Mat3 incidence_matrix(const Substitution& f);

Vec3 multiply(const Mat3& m, const Vec3& v);

/// Largest real root of z^3 - z^2 - z - 1.
long double tribonacci_beta();

/// The first n letters of the Tribonacci word over {a, b, c}.
Word tribonacci_prefix(std::size_t n);

struct Point {
  double x = 0;
  double y = 0;
  int label = 1;  // x_n as 1, 2 or 3
  friend bool operator==(const Point&, const Point&) = default;
};

struct PointCloud {
  std::vector<Point> points;
};

/// Basis coordinates of pi(v).
std::array<long double, 2> project(const std::array<long double, 3>& v);

/// Point n is the projection of f(x_0 .. x_{n-1}), labelled by x_n.
PointCloud rauzy_cloud(std::size_t n_points);
PointCloud rauzy_cloud_serial(std::size_t n_points);

/// Largest |point_{n+1} - point_n - pi(e_{label_n})| (max norm).
double max_exchange_deviation(const PointCloud& cloud);
bool exchange_step_check(const PointCloud& cloud, double tol = 1e-9);

/// Deterministic SVG: fixed viewBox, one color per label.
std::string svg_document(const PointCloud& cloud);
/// Throws IoError.
void render_svg(const PointCloud& cloud, const std::filesystem::path& path);
/// "x,y,label" lines after a comment header.
void write_csv(std::ostream& os, const PointCloud& cloud);

}  // namespace iet::rauzy
