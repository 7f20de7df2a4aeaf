#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cliffcheck/cliffalg.hpp"

namespace cliffalg {

enum class Ring { R, C, H };

int ring_real_dim(Ring r);
std::string ring_name(Ring r);

/// Isomorphism class of Cl(p,q): `factors` copies of Mat_size(ring).
struct AlgebraClass {
  Ring ring = Ring::R;
  std::uint64_t size = 1;
  int factors = 1;

  std::uint64_t real_dim() const;
  std::string to_string() const;  // e.g. "Mat16(R)", "Mat1(H) + Mat1(H)"
  friend bool operator==(const AlgebraClass&, const AlgebraClass&) = default;
};

/// Standard mod-8 recursion from the base cases Cl(0,0)=R, Cl(1,0)=R+R,
/// Cl(0,1)=C with Cl(p+1,q+1) ~ Cl(p,q) x Mat2(R), Cl(p+2,q) ~ Cl(q,p) x
/// Mat2(R), Cl(p,q+2) ~ Cl(q,p) x H.
AlgebraClass classify(const Signature& s);

/// Exact-algebra oracles (p+q small): dimension of the center of Cl(p,q),
/// and the number of central idempotents (2 for a simple algebra or one
/// with center C, 4 for a two-factor algebra).
int center_dimension_exact(const Signature& s);
int central_idempotent_count_exact(const Signature& s);

/// One row of the Pauli/Dirac identification report.
struct ClaimEntry {
  std::string claim;       // the identification being examined
  std::string signature;   // e.g. "Cl(3,0)"
  std::string descriptor;  // classifier output
  std::uint64_t real_dim = 0;
  std::string verdict;     // MATCH / MISMATCH / AMBIGUOUS / reference
  std::string note;
};

/// Adjudicates the "Pauli algebra = Cl(4)" and "Dirac algebra = Cl(4,4)"
/// identifications against the classifier, presenting every reading of the
/// unsigned "Cl(4)" without picking one.
std::vector<ClaimEntry> claim_report();

}  // namespace cliffalg
