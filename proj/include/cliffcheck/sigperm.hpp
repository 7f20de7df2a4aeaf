#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sigperm {

/// Dense integer matrix, used for the faithful matrix representation.
struct IntMatrix {
  int n = 0;
  std::vector<int> a;  // row-major

  explicit IntMatrix(int size) : n(size), a(static_cast<std::size_t>(size) * size, 0) {}
  int& at(int r, int c) { return a[static_cast<std::size_t>(r) * n + c]; }
  int at(int r, int c) const { return a[static_cast<std::size_t>(r) * n + c]; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);

/// A permutation of {0..n-1} together with a sign per index.
/// Acting on the basis vector e_i gives signs[i] * e_{perm[i]}.
class SignedPerm {
 public:
  SignedPerm(std::vector<int> perm, std::vector<std::int8_t> signs);

  static SignedPerm identity(int n);
  static SignedPerm minus_identity(int n);

  int size() const { return static_cast<int>(perm_.size()); }
  int target(int i) const { return perm_[i]; }
  int sign(int i) const { return signs_[i]; }
  const std::vector<int>& perm() const { return perm_; }
  const std::vector<std::int8_t>& signs() const { return signs_; }

  bool is_identity() const;
  bool is_minus_identity() const;

  friend bool operator==(const SignedPerm&, const SignedPerm&) = default;

  /// Canonical order: perm sequence lexicographic, then signs with + before -.
  std::strong_ordering operator<=>(const SignedPerm& other) const;

 private:
  std::vector<int> perm_;
  std::vector<std::int8_t> signs_;
};

/// a·b acts as "first b, then a"; matrix(compose(a,b)) = matrix(a)*matrix(b).
SignedPerm compose(const SignedPerm& a, const SignedPerm& b);

SignedPerm inverse(const SignedPerm& a);

/// Flips every sign; central in the group of signed permutations.
SignedPerm negate(const SignedPerm& a);

/// Least k <= cap with a^k = identity, or nullopt if the cap is hit.
std::optional<int> element_order(const SignedPerm& a, int cap);

/// Column i holds the image of e_i: entry (perm[i], i) = signs[i].
IntMatrix matrix(const SignedPerm& a);

/// Kronecker product; index (i*b.size()+j) pairs block index i with inner j.
SignedPerm kron(const SignedPerm& a, const SignedPerm& b);

/// 1-based cycles with per-step signs, e.g. "(1>+2 2>-1)".
std::string cycle_notation(const SignedPerm& a);

/// A transposition i<->j carrying a sign in each direction.
struct SignTransitionPair {
  int i = 0;
  int j = 0;
  int eps_ij = 1;  // sign carried by i -> j
  int eps_ji = 1;  // sign carried by j -> i

  SignTransitionPair(int i_, int j_, int eps_ij_, int eps_ji_);

  /// The square of the induced 2x2 block is (eps_ij*eps_ji) * identity.
  int square_sign() const { return eps_ij * eps_ji; }

  SignedPerm as_signed_perm(int n) const;
};

/// Decomposition into disjoint sign-transition pairs plus sign reflections
/// (signed fixed points).  Only exists when every cycle has length <= 2.
struct TransitionDecomposition {
  std::vector<SignTransitionPair> pairs;
  std::vector<std::pair<int, int>> reflections;  // (index, sign)
};

std::optional<TransitionDecomposition> as_transition_product(const SignedPerm& a);

// The three real 2x2 bricks.
SignedPerm brick_x();  // pure swap, squares to +identity
SignedPerm brick_j();  // signed swap [[0,-1],[1,0]], squares to -identity
SignedPerm brick_z();  // diagonal signs (+1,-1)

}  // namespace sigperm
