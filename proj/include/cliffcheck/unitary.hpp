#pragma once

#include <Eigen/Dense>

#include <random>
#include <vector>

#include "cliffcheck/cosmos.hpp"

namespace unitary {

struct Tolerances {
  double unitarity = 1e-8;      // input check on U
  double orthogonality = 1e-10; // invariant on the produced R
  double determinant = 1e-8;
};

/// 2n x 2n rotation produced by realifying a unitary matrix, with the
/// measured defects recorded.
struct RealOrthogonal {
  Eigen::MatrixXd R;
  double orth_defect = 0.0;  // max |R^T R - I|
  double det_defect = 0.0;   // |det R - 1|
};

/// Block-diagonal J with 2x2 blocks [[0,-1],[1,0]] pairing coordinates
/// (2k, 2k+1); integer entries, J^2 = -I exactly.
Eigen::MatrixXd complex_structure(int n);

/// Interleaved realification a+bi -> [[a,-b],[b,a]] per entry.  Checks that
/// U is unitary (and det U = 1 when `special`) within the tolerances, and
/// that the result satisfies the RealOrthogonal invariants.
RealOrthogonal realify(const Eigen::MatrixXcd& u, bool special,
                       const Tolerances& tol = {});

/// Rotation with R u = v, identity on the orthogonal complement of
/// span{u,v}; the antipodal case routes through a deterministic
/// intermediate direction.
Eigen::MatrixXd orbit_rotation(const Eigen::VectorXd& u, const Eigen::VectorXd& v,
                               double tol = 1e-10);

/// Consecutive coordinate subspaces of the given dimensions (must sum to 9).
std::vector<cosmos::CoordSubspace> coordinate_split(const std::vector<int>& dims);

/// (u cos t, v sin t): the join chart S^p * S^q -> S^{p+q+1}.
Eigen::VectorXd sphere_join(const Eigen::VectorXd& u, const Eigen::VectorXd& v,
                            double t, double tol = 1e-10);

struct JoinDecomposition {
  Eigen::VectorXd u;
  Eigen::VectorXd v;
  double t = 0.0;
};

/// Closed-form inverse of the join chart: t = atan2(|tail|, |head|).
JoinDecomposition sphere_join_invert(const Eigen::VectorXd& x, int p, int q);

/// Validating front for cosmos::unitary_commutant_dim: rejects a vev that
/// is not diagonal or not anti-Hermitian, then hands the exact imaginary
/// diagonal over.
int commutant_dim_checked(const Eigen::MatrixXcd& vev, cosmos::Ambient ambient);

/// Haar-style sample via Gram-Schmidt of a seeded Gaussian complex matrix,
/// phase-fixed; det forced to 1 when `special`.
Eigen::MatrixXcd random_unitary(int n, std::mt19937_64& rng, bool special);

/// Uniform point of S^{dim-1} from a normalized Gaussian vector.
Eigen::VectorXd random_unit_vector(int dim, std::mt19937_64& rng);

}  // namespace unitary
