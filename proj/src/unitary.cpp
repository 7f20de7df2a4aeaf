#include "cliffcheck/unitary.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace unitary {

Eigen::MatrixXd complex_structure(int n) {
  if (n < 1) throw std::invalid_argument("complex_structure: n must be >= 1");
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  for (int k = 0; k < n; ++k) {
    j(2 * k, 2 * k + 1) = -1.0;
    j(2 * k + 1, 2 * k) = 1.0;
  }
  return j;
}

RealOrthogonal realify(const Eigen::MatrixXcd& u, bool special, const Tolerances& tol) {
  const int n = static_cast<int>(u.rows());
  if (n < 1 || u.cols() != n) throw std::invalid_argument("realify: need a square matrix");

  const double unit_defect =
      (u.adjoint() * u - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
  if (unit_defect > tol.unitarity)
    throw std::invalid_argument("realify: input is not unitary within tolerance");
  if (special) {
    const std::complex<double> det = u.determinant();
    if (std::abs(det - 1.0) > tol.determinant)
      throw std::invalid_argument("realify: det U != 1 within tolerance");
  }

  RealOrthogonal out;
  out.R = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const double a = u(r, c).real();
      const double b = u(r, c).imag();
      out.R(2 * r, 2 * c) = a;
      out.R(2 * r, 2 * c + 1) = -b;
      out.R(2 * r + 1, 2 * c) = b;
      out.R(2 * r + 1, 2 * c + 1) = a;
    }

  out.orth_defect = (out.R.transpose() * out.R -
                     Eigen::MatrixXd::Identity(2 * n, 2 * n)).cwiseAbs().maxCoeff();
  out.det_defect = std::abs(out.R.determinant() - 1.0);
  if (out.orth_defect > tol.orthogonality)
    throw std::domain_error("realify: orthogonality defect above tolerance");
  if (out.det_defect > tol.determinant)
    throw std::domain_error("realify: det R != +1 within tolerance");
  return out;
}

namespace {

Eigen::MatrixXd plane_rotation(const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
  const int m = static_cast<int>(u.size());
  const double c = u.dot(v);
  Eigen::VectorXd w = v - c * u;
  const double s = w.norm();
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(m, m);
  if (s == 0.0) return id;
  w /= s;
  return id + (c - 1.0) * (u * u.transpose() + w * w.transpose()) +
         s * (w * u.transpose() - u * w.transpose());
}

}  // namespace

Eigen::MatrixXd orbit_rotation(const Eigen::VectorXd& u, const Eigen::VectorXd& v,
                               double tol) {
  const int m = static_cast<int>(u.size());
  if (m != v.size()) throw std::invalid_argument("orbit_rotation: dimension mismatch");
  if (std::abs(u.norm() - 1.0) > tol || std::abs(v.norm() - 1.0) > tol)
    throw std::invalid_argument("orbit_rotation: inputs must be unit vectors");

  if ((u - v).norm() <= tol) return Eigen::MatrixXd::Identity(m, m);
  if (m == 1)
    throw std::domain_error("orbit_rotation: no rotation of R^1 maps u to -u");

  if ((u + v).norm() > tol) return plane_rotation(u, v);

  // Antipodal: go through the first standard basis direction with a usable
  // component orthogonal to u.
  for (int k = 0; k < m; ++k) {
    Eigen::VectorXd t = Eigen::VectorXd::Zero(m);
    t(k) = 1.0;
    t -= t.dot(u) * u;
    const double norm = t.norm();
    if (norm > 0.5) {
      t /= norm;
      return plane_rotation(t, v) * plane_rotation(u, t);
    }
  }
  throw std::logic_error("orbit_rotation: no intermediate direction found");
}

std::vector<cosmos::CoordSubspace> coordinate_split(const std::vector<int>& dims) {
  const int total = std::accumulate(dims.begin(), dims.end(), 0);
  if (total != 9) throw std::invalid_argument("coordinate_split: dimensions must sum to 9");
  std::vector<cosmos::CoordSubspace> out;
  int next = 0;
  for (int d : dims) {
    if (d < 1) throw std::invalid_argument("coordinate_split: dimensions must be positive");
    std::vector<int> idx(d);
    for (int i = 0; i < d; ++i) idx[i] = next + i;
    next += d;
    out.emplace_back(std::move(idx));
  }
  return out;
}

Eigen::VectorXd sphere_join(const Eigen::VectorXd& u, const Eigen::VectorXd& v,
                            double t, double tol) {
  if (std::abs(u.norm() - 1.0) > tol || std::abs(v.norm() - 1.0) > tol)
    throw std::invalid_argument("sphere_join: inputs must be unit vectors");
  if (t < 0.0 || t > M_PI_2 + 1e-12)
    throw std::invalid_argument("sphere_join: angle must lie in [0, pi/2]");
  Eigen::VectorXd out(u.size() + v.size());
  out.head(u.size()) = std::cos(t) * u;
  out.tail(v.size()) = std::sin(t) * v;
  return out;
}

JoinDecomposition sphere_join_invert(const Eigen::VectorXd& x, int p, int q) {
  if (x.size() != p + q + 2)
    throw std::invalid_argument("sphere_join_invert: point size must be p+q+2");
  JoinDecomposition d;
  const Eigen::VectorXd head = x.head(p + 1);
  const Eigen::VectorXd tail = x.tail(q + 1);
  const double hn = head.norm();
  const double tn = tail.norm();
  d.t = std::atan2(tn, hn);
  d.u = hn > 0 ? Eigen::VectorXd(head / hn) : Eigen::VectorXd(Eigen::VectorXd::Unit(p + 1, 0));
  d.v = tn > 0 ? Eigen::VectorXd(tail / tn) : Eigen::VectorXd(Eigen::VectorXd::Unit(q + 1, 0));
  return d;
}

int commutant_dim_checked(const Eigen::MatrixXcd& vev, cosmos::Ambient ambient) {
  const int n = static_cast<int>(vev.rows());
  if (vev.cols() != n || n < 1) throw std::invalid_argument("vev must be square");
  std::vector<rat::Rational> diag(n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c)
      if (r != c && vev(r, c) != 0.0)
        throw std::invalid_argument("vev must be diagonal");
    if (vev(r, r).real() != 0.0)
      throw std::invalid_argument("vev must be anti-Hermitian (diagonal purely imaginary)");
    diag[r] = rat::Rational(vev(r, r).imag());  // binary doubles convert exactly
  }
  return cosmos::unitary_commutant_dim(diag, ambient);
}

Eigen::VectorXd random_unit_vector(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXd v(dim);
  double norm2 = 0.0;
  do {
    for (int i = 0; i < dim; ++i) v(i) = gauss(rng);
    norm2 = v.squaredNorm();
  } while (norm2 < 1e-12);
  return v / std::sqrt(norm2);
}

Eigen::MatrixXcd random_unitary(int n, std::mt19937_64& rng, bool special) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd z(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) z(r, c) = std::complex<double>(gauss(rng), gauss(rng));

  // Modified Gram-Schmidt with the diagonal phase fixed positive.
  for (int c = 0; c < n; ++c) {
    for (int k = 0; k < c; ++k) z.col(c) -= z.col(k).dot(z.col(c)) * z.col(k);
    z.col(c) /= z.col(c).norm();
    const std::complex<double> d = z(c, c);
    if (std::abs(d) > 1e-12) z.col(c) *= std::conj(d) / std::abs(d);
  }

  if (special) {
    const std::complex<double> det = z.determinant();
    z.col(0) *= std::conj(det) / std::abs(det);
  }
  return z;
}

}  // namespace unitary
