#include "cliffcheck/cosmos.hpp"

#include <algorithm>
#include <stdexcept>

namespace cosmos {

Matrix9 build_matrix(const EndoF& f) {
  Matrix9 m{};
  for (int i = 0; i < 5; ++i) m[i][i] = f.alpha;
  for (int j = 5; j < 8; ++j) m[j][j] = f.beta;
  for (int j = 0; j < 3; ++j) m[8][5 + j] = f.gamma[j];
  m[8][8] = 1;
  return m;
}

CoordSubspace::CoordSubspace(std::vector<int> idx) : indices(std::move(idx)) {
  if (indices.empty()) throw std::invalid_argument("CoordSubspace must be nonempty");
  std::sort(indices.begin(), indices.end());
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] < 0 || indices[i] > 8)
      throw std::invalid_argument("CoordSubspace index out of {0..8}");
    if (i > 0 && indices[i] == indices[i - 1])
      throw std::invalid_argument("CoordSubspace has a repeated index");
  }
}

CoordSubspace CoordSubspace::e5() { return CoordSubspace({0, 1, 2, 3, 4}); }
CoordSubspace CoordSubspace::e3() { return CoordSubspace({5, 6, 7}); }
CoordSubspace CoordSubspace::e1() { return CoordSubspace({8}); }
CoordSubspace CoordSubspace::e9() { return CoordSubspace({0, 1, 2, 3, 4, 5, 6, 7, 8}); }

unsigned CoordSubspace::mask() const {
  unsigned m = 0;
  for (int i : indices) m |= 1u << i;
  return m;
}

std::string CoordSubspace::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(indices[i] + 1);
  }
  return out + "}";
}

bool is_invariant(const EndoF& f, const CoordSubspace& s) {
  const Matrix9 m = build_matrix(f);
  const unsigned mask = s.mask();
  for (int i : s.indices)
    for (int r = 0; r < 9; ++r)
      if (m[r][i] != 0 && !(mask & (1u << r))) return false;
  return true;
}

std::vector<CoordSubspace> invariant_lattice(const EndoF& f) {
  std::vector<CoordSubspace> out;
  for (unsigned mask = 1; mask < 512; ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < 9; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    CoordSubspace s(std::move(idx));
    if (is_invariant(f, s)) out.push_back(std::move(s));
  }
  return out;
}

std::optional<Rational> restriction_coefficient(const EndoF& f, const CoordSubspace& s) {
  if (!is_invariant(f, s))
    throw std::invalid_argument("restriction_coefficient: subspace is not invariant");
  const Matrix9 m = build_matrix(f);
  const Rational c = m[s.indices.front()][s.indices.front()];
  for (int i : s.indices)
    for (int r : s.indices)
      if (m[r][i] != (r == i ? c : Rational(0))) return std::nullopt;
  return c;
}

namespace {

// Rows of the linear operator X -> XM - MX over the chosen X-basis.
linalg::RatMatrix commutator_system(const Matrix9& m,
                                    const std::vector<std::array<int, 9 * 9>>& basis) {
  linalg::RatMatrix sys(81, basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const auto& x = basis[col];
    for (int r = 0; r < 9; ++r)
      for (int c = 0; c < 9; ++c) {
        Rational v = 0;
        for (int k = 0; k < 9; ++k) {
          if (x[r * 9 + k] != 0) v += Rational(x[r * 9 + k]) * m[k][c];
          if (x[k * 9 + c] != 0) v -= m[r][k] * Rational(x[k * 9 + c]);
        }
        sys.at(static_cast<std::size_t>(r) * 9 + c, col) = v;
      }
  }
  return sys;
}

}  // namespace

CommutantReport commutant(const EndoF& f) {
  const Matrix9 m = build_matrix(f);

  std::vector<std::array<int, 81>> full_basis;
  for (int r = 0; r < 9; ++r)
    for (int c = 0; c < 9; ++c) {
      std::array<int, 81> e{};
      e[r * 9 + c] = 1;
      full_basis.push_back(e);
    }
  std::vector<std::array<int, 81>> anti_basis;
  for (int r = 0; r < 9; ++r)
    for (int c = r + 1; c < 9; ++c) {
      std::array<int, 81> e{};
      e[r * 9 + c] = 1;
      e[c * 9 + r] = -1;
      anti_basis.push_back(e);
    }

  CommutantReport rep;
  rep.full_dim = linalg::nullity(commutator_system(m, full_basis));
  rep.antisym_dim = linalg::nullity(commutator_system(m, anti_basis));

  const bool gamma_zero = f.gamma[0] == 0 && f.gamma[1] == 0 && f.gamma[2] == 0;
  if (gamma_zero) {
    rep.block_structure = "diagonal blocks 5+3+1 with coefficients (" +
                          rat::to_string(f.alpha) + ", " + rat::to_string(f.beta) + ", 1)";
  } else {
    rep.block_structure = "alpha block 5, coupled (3+1) block via gamma";
  }
  return rep;
}

namespace {

// X = A + iB anti-Hermitian: A real antisymmetric, B real symmetric.
// [X, i diag(d)] = 0 splits into (d_k - d_l) A_kl = 0 and (d_k - d_l) B_kl = 0.
// Parameter order: A_kl (k<l), then B_kl (k<=l).
int commutant_dim_impl(const std::vector<Rational>& d, bool traceless,
                       const std::optional<int>& annihilated_index) {
  const int n = static_cast<int>(d.size());
  if (n < 1 || n > 9) throw std::invalid_argument("vev size must be 1..9");

  const int a_params = n * (n - 1) / 2;
  const int b_params = n * (n + 1) / 2;
  const int cols = a_params + b_params;

  auto a_col = [n](int k, int l) {  // k < l
    return k * n - k * (k + 1) / 2 + (l - k - 1);
  };
  auto b_col = [n, a_params](int k, int l) {  // k <= l
    return a_params + k * n - k * (k - 1) / 2 + (l - k);
  };

  std::vector<std::vector<Rational>> rows;
  auto new_row = [&]() -> std::vector<Rational>& {
    rows.emplace_back(cols, Rational(0));
    return rows.back();
  };

  for (int k = 0; k < n; ++k)
    for (int l = k + 1; l < n; ++l) {
      if (d[k] == d[l]) continue;
      new_row()[a_col(k, l)] = d[k] - d[l];
      new_row()[b_col(k, l)] = d[k] - d[l];
    }

  if (traceless) {
    auto& row = new_row();
    for (int k = 0; k < n; ++k) row[b_col(k, k)] = 1;
  }

  if (annihilated_index) {
    // X e_k = 0: column k of A + iB vanishes; real part rows and imaginary
    // part rows over the packed parameters.
    const int k = *annihilated_index;
    if (k < 0 || k >= n) throw std::invalid_argument("annihilated index out of range");
    for (int r = 0; r < n; ++r) {
      if (r != k) {
        auto& row = new_row();  // Re: A_rk = 0
        if (r < k)
          row[a_col(r, k)] = 1;
        else
          row[a_col(k, r)] = -1;  // A_rk = -A_kr
      }
      auto& row = new_row();  // Im: B_rk = 0
      row[b_col(std::min(r, k), std::max(r, k))] = 1;
    }
  }

  linalg::RatMatrix sys(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (int c = 0; c < cols; ++c) sys.at(r, c) = rows[r][c];
  return static_cast<int>(linalg::nullity(sys));
}

}  // namespace

int unitary_commutant_dim(const std::vector<Rational>& vev_imag_diag, Ambient ambient) {
  return commutant_dim_impl(vev_imag_diag, ambient == Ambient::su, std::nullopt);
}

int fundamental_stabilizer_dim(const std::vector<Rational>& vev_imag_diag, int k) {
  return commutant_dim_impl(vev_imag_diag, true, k);
}

GaugeReport gauge_report(const EndoF& f) {
  GaugeReport rep;
  rep.params = f;
  rep.e5_invariant = is_invariant(f, CoordSubspace::e5());
  rep.e3_invariant = is_invariant(f, CoordSubspace::e3());
  rep.e1_invariant = is_invariant(f, CoordSubspace::e1());
  rep.lattice_size = invariant_lattice(f).size();
  rep.coeff_e5 = restriction_coefficient(f, CoordSubspace::e5()).value();
  rep.coeff_e1 = restriction_coefficient(f, CoordSubspace::e1()).value();
  if (rep.e3_invariant)
    rep.coeff_e3 = restriction_coefficient(f, CoordSubspace::e3());
  else
    rep.e3_note = "E(3) not invariant: gamma = 0 violated";
  rep.commutant = commutant(f);
  rep.fully_symmetric = rep.commutant.full_dim == 81;

  const std::vector<Rational> zero_vev(5, Rational(0));
  const std::vector<Rational> stage_vev = {2, 2, 2, -3, -3};
  rep.chain_dims[0] = unitary_commutant_dim(zero_vev, Ambient::su);
  rep.chain_dims[1] = unitary_commutant_dim(stage_vev, Ambient::su);
  rep.chain_dims[2] = fundamental_stabilizer_dim(stage_vev, 4);
  rep.chain_labels = {"SU(5)", "SU(3)xSU(2)xU(1)", "SU(3)xU(1)"};
  return rep;
}

}  // namespace cosmos
