#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cliffcheck/arrowgroup.hpp"
#include "cliffcheck/rational.hpp"

namespace cliffalg {

using rat::Rational;

/// Metric signature: first `p` generators square to +1, last `q` to -1.
struct Signature {
  int p = 0;
  int q = 0;

  Signature(int p_, int q_);
  int n() const { return p + q; }
  /// +1 for generator index < p (0-based), else -1.
  int metric(int generator_index) const { return generator_index < p ? 1 : -1; }
};

/// Basis monomial e_{i1}..e_{ik} encoded as a bitmask over generators.
using Blade = std::uint32_t;

inline int grade(Blade b) { return __builtin_popcount(b); }

struct SignedBlade {
  int sign = 1;
  Blade blade = 0;
  friend bool operator==(const SignedBlade&, const SignedBlade&) = default;
};

/// Product of two basis blades: out = a XOR b, sign from the transposition
/// count needed to interleave plus the metric signs of repeated generators.
SignedBlade blade_product(Blade a, Blade b, const Signature& s);

/// Exact-rational element of Cl(p,q); no zero coefficients are stored.
class Multivector {
 public:
  Multivector() = default;
  static Multivector scalar(const Rational& c);
  static Multivector basis_blade(Blade b, const Rational& c = 1);
  static Multivector generator(int index);

  const std::map<Blade, Rational>& coeffs() const { return coeffs_; }
  Rational coeff(Blade b) const;
  bool is_zero() const { return coeffs_.empty(); }

  Multivector& add(Blade b, const Rational& c);

  friend bool operator==(const Multivector&, const Multivector&) = default;
  Multivector operator+(const Multivector& o) const;
  Multivector operator-(const Multivector& o) const;
  Multivector operator*(const Rational& c) const;

 private:
  std::map<Blade, Rational> coeffs_;
};

Multivector mv_multiply(const Multivector& a, const Multivector& b, const Signature& s);

/// One canonical representative per {g, -g} coset of a group with
/// center {+-identity}, plus the subset-product index.
struct TwistedBasis {
  arrowgroup::ArrowGroup group;
  std::vector<sigperm::SignedPerm> reps;             // lexicographically smaller of {g,-g}
  std::vector<sigperm::SignedPerm> subset_products;  // indexed by generator-subset bitmask
};

TwistedBasis twisted_basis(const arrowgroup::ArrowGroup& g);

struct IsoResult {
  bool pass = false;
  std::string witness;                          // empty on pass
  std::optional<std::pair<Blade, Blade>> mismatch;  // first failing subset pair
  std::size_t pairs_checked = 0;
};

/// Maps generator a -> e_a, generator subset -> canonical ascending product,
/// and compares the group-side sign in g_S g_T = eps * g_{S xor T} with the
/// blade-product sign for every subset pair; also requires the 2^n subset
/// products to be distinct modulo nothing (no collision even up to sign
/// collapse is allowed for the map to be an isomorphism of the twisted
/// algebra onto Cl(p,q)).
IsoResult iso_check(const dyadic::GeneratorFamily& f, const Signature& s);

/// Ungraded m-fold tensor power of Cl(1,1) versus Cl(m,m): checks that the
/// interleaving map (factor-a generators dressed with the product of the
/// e_c+ e_c- volume elements of the earlier factors) matches structure
/// constants exactly.
IsoResult tensor_power_check(int m);

}  // namespace cliffalg
