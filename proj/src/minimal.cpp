#include "cliffcheck/minimal.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "cliffcheck/unitary.hpp"

namespace minimal {

ProductSphereEmbedding::ProductSphereEmbedding(int p_, int q_, double r_, double s_)
    : p(p_), q(q_), r(r_), s(s_) {
  if (p < 1 || q < 1) throw std::invalid_argument("factor dimensions must be >= 1");
  if (r <= 0.0 || s <= 0.0) throw std::invalid_argument("radii must be positive");
  if (std::abs(r * r + s * s - 1.0) > 1e-12)
    throw std::invalid_argument("radii must satisfy r^2 + s^2 = 1");
}

Eigen::VectorXd ProductSphereEmbedding::embed(const Eigen::VectorXd& u,
                                              const Eigen::VectorXd& v) const {
  Eigen::VectorXd x(p + q + 2);
  x.head(p + 1) = r * u;
  x.tail(q + 1) = s * v;
  return x;
}

Eigen::VectorXd ProductSphereEmbedding::normal(const Eigen::VectorXd& u,
                                               const Eigen::VectorXd& v) const {
  Eigen::VectorXd nu(p + q + 2);
  nu.head(p + 1) = s * u;
  nu.tail(q + 1) = -r * v;
  return nu;
}

double analytic_mean_curvature(int p, int q, double r, double s) {
  if (r <= 0.0 || s <= 0.0) throw std::invalid_argument("degenerate radii");
  return (p * s / r - q * r / s) / (p + q);
}

namespace {

// Orthonormal tangent frame at (u,v): pairs (a,b) with a.u = 0, b.v = 0,
// obtained by Gram-Schmidt on the coordinate projections.
std::vector<Eigen::VectorXd> tangent_frame(const Eigen::VectorXd& u,
                                           const Eigen::VectorXd& v) {
  const int hp = static_cast<int>(u.size());
  const int hq = static_cast<int>(v.size());
  const int dim = hp + hq;
  std::vector<Eigen::VectorXd> frame;
  for (int k = 0; k < dim; ++k) {
    Eigen::VectorXd cand = Eigen::VectorXd::Zero(dim);
    cand(k) = 1.0;
    if (k < hp)
      cand.head(hp) -= cand.head(hp).dot(u) * u;
    else
      cand.tail(hq) -= cand.tail(hq).dot(v) * v;
    for (const auto& e : frame) cand -= cand.dot(e) * e;
    const double norm = cand.norm();
    if (norm > 1e-6) frame.push_back(cand / norm);
  }
  if (static_cast<int>(frame.size()) != dim - 2)
    throw std::domain_error("ill-conditioned tangent frame; resample the point");
  return frame;
}

// Factor-wise projection back onto the product, the retraction the finite
// differences walk along.
Eigen::VectorXd retract(const ProductSphereEmbedding& e, const Eigen::VectorXd& z) {
  Eigen::VectorXd out(z.size());
  const Eigen::VectorXd head = z.head(e.p + 1);
  const Eigen::VectorXd tail = z.tail(e.q + 1);
  out.head(e.p + 1) = e.r * head / head.norm();
  out.tail(e.q + 1) = e.s * tail / tail.norm();
  return out;
}

Eigen::VectorXd normal_field(const ProductSphereEmbedding& e, const Eigen::VectorXd& y) {
  Eigen::VectorXd nu(y.size());
  nu.head(e.p + 1) = (e.s / e.r) * y.head(e.p + 1);
  nu.tail(e.q + 1) = -(e.r / e.s) * y.tail(e.q + 1);
  return nu;
}

}  // namespace

CurvatureSample numeric_mean_curvature(const ProductSphereEmbedding& e,
                                       const Eigen::VectorXd& u,
                                       const Eigen::VectorXd& v, double step) {
  if (step < 1e-6 || step > 1e-2)
    throw std::invalid_argument("step must lie in [1e-6, 1e-2]");
  if (u.size() != e.p + 1 || v.size() != e.q + 1)
    throw std::invalid_argument("factor point dimensions mismatch");
  if (std::abs(u.norm() - 1.0) > 1e-10 || std::abs(v.norm() - 1.0) > 1e-10)
    throw std::invalid_argument("point is off the hypersurface");

  const Eigen::VectorXd x = e.embed(u, v);
  const auto frame = tangent_frame(u, v);

  double trace = 0.0;
  for (const auto& dir : frame) {
    const Eigen::VectorXd yp = retract(e, x + step * dir);
    const Eigen::VectorXd ym = retract(e, x - step * dir);
    const Eigen::VectorXd dnu = (normal_field(e, yp) - normal_field(e, ym)) / (2.0 * step);
    trace += dnu.dot(dir);
  }

  CurvatureSample sample;
  sample.point = x;
  sample.h_numeric = trace / (e.p + e.q);
  sample.h_analytic = analytic_mean_curvature(e.p, e.q, e.r, e.s);
  sample.step = step;
  return sample;
}

double great_sphere_numeric_mean_curvature(const Eigen::VectorXd& x, double step) {
  const int n = static_cast<int>(x.size());
  if (std::abs(x.norm() - 1.0) > 1e-10 || std::abs(x(n - 1)) > 1e-12)
    throw std::invalid_argument("point is not on the equatorial great sphere");
  // Constant normal field e_last; frame from projected coordinate vectors.
  std::vector<Eigen::VectorXd> frame;
  for (int k = 0; k + 1 < n; ++k) {
    Eigen::VectorXd cand = Eigen::VectorXd::Zero(n);
    cand(k) = 1.0;
    cand -= cand.dot(x) * x;
    for (const auto& e : frame) cand -= cand.dot(e) * e;
    const double norm = cand.norm();
    if (norm > 1e-6) frame.push_back(cand / norm);
  }
  double trace = 0.0;
  for (const auto& dir : frame) {
    Eigen::VectorXd yp = x + step * dir;
    yp.head(n - 1) /= yp.head(n - 1).norm();
    Eigen::VectorXd ym = x - step * dir;
    ym.head(n - 1) /= ym.head(n - 1).norm();
    const Eigen::VectorXd nu_p = Eigen::VectorXd::Unit(n, n - 1);
    const Eigen::VectorXd nu_m = Eigen::VectorXd::Unit(n, n - 1);
    trace += ((nu_p - nu_m) / (2.0 * step)).dot(dir);
  }
  return trace / static_cast<double>(frame.size());
}

double sphere_volume(int k, double radius) {
  if (k < 0) throw std::invalid_argument("sphere_volume: k must be >= 0");
  const double half = 0.5 * (k + 1);
  return 2.0 * std::pow(M_PI, half) / std::tgamma(half) * std::pow(radius, k);
}

double minimal_radius(int p, int q) {
  return std::sqrt(static_cast<double>(p) / (p + q));
}

double mean_curvature_root(int p, int q, double tol) {
  double lo = 1e-9;
  double hi = 1.0 - 1e-9;
  auto h = [p, q](double r) {
    return analytic_mean_curvature(p, q, r, std::sqrt(1.0 - r * r));
  };
  // H is strictly decreasing from +inf to -inf on (0,1).
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (h(mid) > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

VacuumVolumeReport vacuum_volume_report(std::uint64_t seed, int samples, double step) {
  VacuumVolumeReport rep;
  rep.samples = samples;
  rep.step = step;
  const double r = std::sqrt(0.5);
  rep.product_volume = sphere_volume(4, r) * sphere_volume(4, r);
  rep.great_volume = sphere_volume(8, 1.0);
  rep.great_smaller = rep.great_volume < rep.product_volume;

  const ProductSphereEmbedding emb(4, 4, r, std::sqrt(1.0 - r * r));
  std::mt19937_64 rng(seed);
  for (int i = 0; i < samples; ++i) {
    const Eigen::VectorXd u = unitary::random_unit_vector(5, rng);
    const Eigen::VectorXd v = unitary::random_unit_vector(5, rng);
    const auto sample = numeric_mean_curvature(emb, u, v, step);
    rep.max_abs_h_product = std::max(rep.max_abs_h_product, std::abs(sample.h_numeric));

    Eigen::VectorXd x(10);
    x.head(9) = unitary::random_unit_vector(9, rng);
    x(9) = 0.0;
    rep.max_abs_h_great =
        std::max(rep.max_abs_h_great, std::abs(great_sphere_numeric_mean_curvature(x, step)));
  }
  return rep;
}

void write_curvature_csv(const std::string& path, const std::vector<CurvatureSample>& rows) {
  std::ofstream out(path);
  if (!out) throw std::ios_base::failure("cannot open '" + path + "' for writing");
  out.precision(17);
  if (!rows.empty()) {
    for (int i = 0; i < rows.front().point.size(); ++i) out << "x" << (i + 1) << ",";
    out << "H_numeric,H_analytic,h\n";
  }
  for (const auto& s : rows) {
    for (int i = 0; i < s.point.size(); ++i) out << s.point(i) << ",";
    out << s.h_numeric << "," << s.h_analytic << "," << s.step << "\n";
  }
  if (!out) throw std::ios_base::failure("write failure on '" + path + "'");
}

}  // namespace minimal
