#include "iet/rauzy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "iet/errors.hpp"

namespace iet::rauzy {

namespace {

using LVec = std::array<long double, 3>;

int letter_index(char c) {
  switch (c) {
    case 'a':
    case '1':
      return 0;
    case 'b':
    case '2':
      return 1;
    case 'c':
    case '3':
      return 2;
    default:
      throw AlphabetMismatch(std::string("letter '") + c + "' is not one of a, b, c");
  }
}

struct Frame {
  LVec v;                              // expanding eigenvector, coordinates sum to 1
  std::array<LVec, 2> basis;           // pi(e3) - pi(e1), pi(e3) - pi(e2)
  std::array<std::array<long double, 2>, 2> inverse_gram;
};

LVec project3(const LVec& x, const LVec& v) {
  const long double s = x[0] + x[1] + x[2];
  return {x[0] - s * v[0], x[1] - s * v[1], x[2] - s * v[2]};
}

long double dot(const LVec& a, const LVec& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

const Frame& frame() {
  static const Frame f = [] {
    Frame out;
    const long double beta = tribonacci_beta();
    out.v = {1 / beta, 1 / (beta * beta), 1 / (beta * beta * beta)};
    const LVec p1 = project3({1, 0, 0}, out.v);
    const LVec p2 = project3({0, 1, 0}, out.v);
    const LVec p3 = project3({0, 0, 1}, out.v);
    for (int k = 0; k < 3; ++k) {
      out.basis[0][k] = p3[k] - p1[k];
      out.basis[1][k] = p3[k] - p2[k];
    }
    const long double g00 = dot(out.basis[0], out.basis[0]);
    const long double g01 = dot(out.basis[0], out.basis[1]);
    const long double g11 = dot(out.basis[1], out.basis[1]);
    const long double det = g00 * g11 - g01 * g01;
    out.inverse_gram = {{{g11 / det, -g01 / det}, {-g01 / det, g00 / det}}};
    return out;
  }();
  return f;
}

Point point_from_counts(const LVec& counts, int label) {
  const auto c = project(counts);
  return {static_cast<double>(c[0]), static_cast<double>(c[1]), label};
}

// counts[n] = f(x_0 .. x_{n-1}); labels[n] = x_n.
void counts_and_labels(std::size_t n_points, std::vector<LVec>& counts, std::vector<int>& labels) {
  const Word x = tribonacci_prefix(n_points);
  counts.assign(n_points, LVec{0, 0, 0});
  labels.assign(n_points, 1);
  LVec running{0, 0, 0};
  for (std::size_t n = 0; n < n_points; ++n) {
    counts[n] = running;
    const int i = letter_index(x[n]);
    labels[n] = i + 1;
    running[i] += 1;
  }
}

}  // namespace

Vec3 abelianize(std::string_view w) {
  Vec3 out{0, 0, 0};
  for (char c : w) out[letter_index(c)] += 1;
  return out;
}

Mat3 incidence_matrix(const Substitution& f) {
  const std::string letters = f.alphabet();
  if (letters.size() != 3) throw AlphabetMismatch("incidence matrices are built for 3-letter substitutions");
  Mat3 m{};
  for (std::size_t j = 0; j < 3; ++j)
    for (char c : f.image(letters[j])) {
      const std::size_t i = letters.find(c);
      if (i == std::string::npos) throw AlphabetMismatch("image leaves the alphabet");
      m[i][j] += 1;
    }
  return m;
}

Vec3 multiply(const Mat3& m, const Vec3& v) {
  Vec3 out{0, 0, 0};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) out[i] += m[i][j] * v[j];
  return out;
}

long double tribonacci_beta() {
  long double z = 2;
  for (int it = 0; it < 100; ++it) {
    const long double p = ((z - 1) * z - 1) * z - 1;
    const long double dp = (3 * z - 2) * z - 1;
    const long double next = z - p / dp;
    if (next == z) break;
    z = next;
  }
  return z;
}

Word tribonacci_prefix(std::size_t n) {
  const Substitution f = Substitution::tribonacci();
  Word w = "a";
  while (w.size() < n) w = f.apply(w);
  w.resize(n);
  return w;
}

std::array<long double, 2> project(const std::array<long double, 3>& v) {
  const Frame& f = frame();
  const LVec p = project3(v, f.v);
  const long double r0 = dot(p, f.basis[0]);
  const long double r1 = dot(p, f.basis[1]);
  return {f.inverse_gram[0][0] * r0 + f.inverse_gram[0][1] * r1,
          f.inverse_gram[1][0] * r0 + f.inverse_gram[1][1] * r1};
}

PointCloud rauzy_cloud(std::size_t n_points) {
  std::vector<LVec> counts;
  std::vector<int> labels;
  counts_and_labels(n_points, counts, labels);
  PointCloud cloud;
  cloud.points.resize(n_points);
  const auto count = static_cast<std::ptrdiff_t>(n_points);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t n = 0; n < count; ++n) {
    const auto k = static_cast<std::size_t>(n);
    cloud.points[k] = point_from_counts(counts[k], labels[k]);
  }
  return cloud;
}

PointCloud rauzy_cloud_serial(std::size_t n_points) {
  std::vector<LVec> counts;
  std::vector<int> labels;
  counts_and_labels(n_points, counts, labels);
  PointCloud cloud;
  cloud.points.reserve(n_points);
  for (std::size_t n = 0; n < n_points; ++n) cloud.points.push_back(point_from_counts(counts[n], labels[n]));
  return cloud;
}

double max_exchange_deviation(const PointCloud& cloud) {
  std::array<std::array<long double, 2>, 3> steps;
  for (int i = 0; i < 3; ++i) {
    LVec e{0, 0, 0};
    e[i] = 1;
    steps[i] = project(e);
  }
  long double worst = 0;
  for (std::size_t n = 0; n + 1 < cloud.points.size(); ++n) {
    const Point& p = cloud.points[n];
    const Point& q = cloud.points[n + 1];
    if (p.label < 1 || p.label > 3) return INFINITY;
    const auto& s = steps[p.label - 1];
    worst = std::max(worst, std::fabs(static_cast<long double>(q.x) - p.x - s[0]));
    worst = std::max(worst, std::fabs(static_cast<long double>(q.y) - p.y - s[1]));
  }
  return static_cast<double>(worst);
}

bool exchange_step_check(const PointCloud& cloud, double tol) { return max_exchange_deviation(cloud) <= tol; }

std::string svg_document(const PointCloud& cloud) {
  static constexpr const char* colors[] = {"#1b9e77", "#d95f02", "#7570b3"};
  std::string out =
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<!-- Rauzy fractal pieces: label 1=a, 2=b, 3=c -->\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-2 -2 4 4\" width=\"800\" height=\"800\">\n"
      "<rect x=\"-2\" y=\"-2\" width=\"4\" height=\"4\" fill=\"white\"/>\n";
  char buf[128];
  for (const Point& p : cloud.points) {
    const int label = std::clamp(p.label, 1, 3);
    std::snprintf(buf, sizeof buf, "<circle cx=\"%.5f\" cy=\"%.5f\" r=\"0.006\" fill=\"%s\"/>\n", p.x, -p.y,
                  colors[label - 1]);
    out += buf;
  }
  out += "</svg>\n";
  return out;
}

void render_svg(const PointCloud& cloud, const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open " + path.string() + " for writing");
  os << svg_document(cloud);
  if (!os) throw IoError("write to " + path.string() + " failed");
}

void write_csv(std::ostream& os, const PointCloud& cloud) {
  os << "# label 1=a, 2=b, 3=c\nx,y,label\n";
  char buf[96];
  for (const Point& p : cloud.points) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%d\n", p.x, p.y, p.label);
    os << buf;
  }
}

}  // namespace iet::rauzy
