#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cliffcheck/linalg.hpp"
#include "cliffcheck/rational.hpp"

namespace cosmos {

using rat::Rational;

/// The parametric 9x9 endomorphism: alpha on the first five diagonal
/// entries, beta on the next three, gamma_1..gamma_3 in the last row under
/// the beta block, and a fixed 1 in the corner.
struct EndoF {
  Rational alpha;
  Rational beta;
  std::array<Rational, 3> gamma;
};

using Matrix9 = std::array<std::array<Rational, 9>, 9>;

Matrix9 build_matrix(const EndoF& f);

/// Span of standard basis vectors, 0-based sorted indices within {0..8}.
struct CoordSubspace {
  std::vector<int> indices;

  explicit CoordSubspace(std::vector<int> idx);
  static CoordSubspace e5();  // {0..4}
  static CoordSubspace e3();  // {5,6,7}
  static CoordSubspace e1();  // {8}
  static CoordSubspace e9();  // {0..8}

  unsigned mask() const;
  std::string to_string() const;  // 1-based, e.g. "{1..5}"
  friend bool operator==(const CoordSubspace&, const CoordSubspace&) = default;
};

/// True iff M e_i stays inside the subspace for every member index i.
bool is_invariant(const EndoF& f, const CoordSubspace& s);

/// All 511 nonempty coordinate subspaces kept invariant, in mask order.
std::vector<CoordSubspace> invariant_lattice(const EndoF& f);

/// The scalar c with M|_s = c * identity, or nullopt when the restriction
/// is not a similarity.  Throws if s is not invariant.
std::optional<Rational> restriction_coefficient(const EndoF& f, const CoordSubspace& s);

struct CommutantReport {
  std::size_t full_dim = 0;     // dim {X : XM = MX}, X any real 9x9
  std::size_t antisym_dim = 0;  // same with X antisymmetric
  std::string block_structure;
};

/// Exact rational nullspace of X -> XM - MX on the 81-dimensional matrix
/// space and on its 36-dimensional antisymmetric subspace.
CommutantReport commutant(const EndoF& f);

enum class Ambient { u, su };

/// Real dimension of {X anti-Hermitian (traceless if su) : [X, vev] = 0}
/// for vev = i*diag(d), computed by nullspace over the real coordinates
/// of X.
int unitary_commutant_dim(const std::vector<Rational>& vev_imag_diag, Ambient ambient);

/// Real dimension of {X in su(n) : [X, i*diag(d)] = 0 and X e_k = 0}: the
/// second breaking stage, a fundamental-representation stabilizer inside
/// the first-stage commutant algebra.
int fundamental_stabilizer_dim(const std::vector<Rational>& vev_imag_diag, int k);

struct GaugeReport {
  EndoF params;
  bool e5_invariant = false;
  bool e3_invariant = false;
  bool e1_invariant = false;
  std::size_t lattice_size = 0;
  Rational coeff_e5;
  std::optional<Rational> coeff_e3;  // absent when E3 is not invariant
  Rational coeff_e1;
  CommutantReport commutant;
  // su(5) breaking chain dims, each labeled with the group-name claim.
  std::array<int, 3> chain_dims = {0, 0, 0};
  std::array<std::string, 3> chain_labels;
  bool fully_symmetric = false;  // M is the identity
  std::string e3_note;           // set when gamma != 0
};

GaugeReport gauge_report(const EndoF& f);

}  // namespace cosmos
