#pragma once

#include <Eigen/Dense>

#include <random>
#include <string>
#include <vector>

namespace minimal {

/// S^p(r) x S^q(s) inside S^{p+q+1}, r^2 + s^2 = 1.
struct ProductSphereEmbedding {
  int p = 0;
  int q = 0;
  double r = 0.0;
  double s = 0.0;

  ProductSphereEmbedding(int p_, int q_, double r_, double s_);

  /// (r u, s v) in R^{p+q+2}.
  Eigen::VectorXd embed(const Eigen::VectorXd& u, const Eigen::VectorXd& v) const;
  /// Unit normal within the sphere, nu = (s u, -r v).
  Eigen::VectorXd normal(const Eigen::VectorXd& u, const Eigen::VectorXd& v) const;
};

struct CurvatureSample {
  Eigen::VectorXd point;     // embedded point in R^{p+q+2}
  double h_numeric = 0.0;    // finite-difference mean curvature
  double h_analytic = 0.0;
  double step = 0.0;
};

/// H = (p s/r - q r/s) / (p+q): trace of the shape operator for the fixed
/// normal orientation nu = (s u, -r v).
double analytic_mean_curvature(int p, int q, double r, double s);

/// Central differences of the normal field along an orthonormal tangent
/// frame built by Gram-Schmidt on coordinate projections.
CurvatureSample numeric_mean_curvature(const ProductSphereEmbedding& e,
                                       const Eigen::VectorXd& u,
                                       const Eigen::VectorXd& v, double step);

/// Same pipeline for the great subsphere {x in S^{dim} : last coord 0}
/// with the constant normal field; exact zero by symmetry.
double great_sphere_numeric_mean_curvature(const Eigen::VectorXd& x, double step);

/// Vol(S^k(rho)) = 2 pi^{(k+1)/2} / Gamma((k+1)/2) * rho^k.
double sphere_volume(int k, double radius);

/// sqrt(p/(p+q)), where H(r) vanishes.
double minimal_radius(int p, int q);

/// Bisection root of r -> H(r) on (0,1); H is strictly decreasing.
double mean_curvature_root(int p, int q, double tol = 1e-12);

struct VacuumVolumeReport {
  double product_volume = 0.0;  // 8-volume of S^4(1/sqrt2) x S^4(1/sqrt2)
  double great_volume = 0.0;    // 8-volume of S^8(1)
  bool great_smaller = false;
  double max_abs_h_product = 0.0;  // over the sampled points
  double max_abs_h_great = 0.0;
  int samples = 0;
  double step = 0.0;
};

VacuumVolumeReport vacuum_volume_report(std::uint64_t seed, int samples, double step);

void write_curvature_csv(const std::string& path, const std::vector<CurvatureSample>& rows);

}  // namespace minimal
