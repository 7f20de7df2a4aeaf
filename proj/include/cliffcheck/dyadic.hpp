#pragma once

#include <string>
#include <vector>

#include "cliffcheck/sigperm.hpp"

namespace dyadic {

/// Nested dyadic partition of {0..2^m-1}: level k (1-based) has 2^{k-1}
/// blocks of cardinality 2^{m-k+1}; the level-k pairing flips bit (m-k).
struct DyadicTree {
  int depth = 0;  // m
  int size = 0;   // N = 2^m
  std::vector<std::vector<std::vector<int>>> blocks;  // [k-1][block][member]
  std::vector<std::vector<int>> pairing;              // [k-1][i] = level-k partner
};

DyadicTree dyadic_partition(int m);

/// O(1) partner lookup, same rule the tree stores.
int level_partner(int m, int level, int index);

/// Ordered anticommuting generators of signed permutations.
struct GeneratorFamily {
  int dim = 0;  // number of indices N
  std::vector<sigperm::SignedPerm> gens;
  std::vector<std::string> labels;
};

/// Jordan-Wigner style family on N = 2^p indices: for a = 1..p the
/// plus generator puts Z bricks on slots 1..a-1 and an X brick on slot a,
/// the minus generator uses a J brick instead of X.  With `extended` an
/// all-Z generator e0 is included after the plus block.
GeneratorFamily pauli_string_family(int p, bool extended = false);

struct SignatureCount {
  int plus = 0;   // generators squaring to +identity
  int minus = 0;  // generators squaring to -identity
};

/// Counts the central squares; throws if some square is not +-identity,
/// naming the offending generator index.
SignatureCount family_signature(const GeneratorFamily& f);

}  // namespace dyadic
