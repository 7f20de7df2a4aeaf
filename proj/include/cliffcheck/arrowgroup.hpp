#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cliffcheck/dyadic.hpp"
#include "cliffcheck/sigperm.hpp"

namespace arrowgroup {

inline constexpr std::size_t kDefaultCap = 1u << 20;

/// Closure of a generator family, elements kept in canonical order.
struct ArrowGroup {
  dyadic::GeneratorFamily family;
  std::vector<sigperm::SignedPerm> elements;  // sorted by canonical encoding
  std::size_t cap = kDefaultCap;

  std::size_t order() const { return elements.size(); }
  bool contains(const sigperm::SignedPerm& g) const;
};

/// Breadth-first closure in deterministic canonical order.  Throws
/// std::overflow_error once the element count would exceed `cap`.
ArrowGroup generate(const dyadic::GeneratorFamily& f, std::size_t cap = kDefaultCap);

struct RelationFailure {
  int i = -1;
  int j = -1;  // -1 for a unary (square / degenerate generator) failure
  std::string witness;
};

struct PairRelation {
  int i = 0;
  int j = 0;
  bool anticommute = false;   // g_i g_j = -(g_j g_i)
  bool inverse_form = false;  // g_i g_j = (g_j g_i)^-1
  bool same_metric = false;   // sign(g_i^2) * sign(g_j^2) = +1
};

/// Exact check of the family relations.  `failures` is empty exactly when
/// the family is a valid Clifford generator family: every square is a
/// central +-identity, no generator is itself +-identity, and every
/// distinct pair anticommutes.  The inverse form g_i g_j = (g_j g_i)^-1 is
/// recorded per pair; given central squares it holds precisely on pairs
/// whose squares have equal sign ((g_j g_i)^-1 = eps_i*eps_j * g_i g_j),
/// which `inverse_form_matches_metric` certifies.
struct RelationReport {
  std::vector<int> squares;  // +1 / -1 per generator, 0 if non-central
  int anticommuting_pairs = 0;
  std::vector<PairRelation> pairs;
  std::vector<RelationFailure> failures;
  bool inverse_form_matches_metric = true;

  bool pass() const { return failures.empty(); }
};

RelationReport verify_relations(const dyadic::GeneratorFamily& f);

/// Expected closure order for an independent family of n anticommuting
/// generators with central squares: products of generator subsets, each
/// with a sign, so 2^{n+1}; 1 for n = 0.
std::uint64_t group_order_law(int n_generators);

/// Elements commuting with every generator.
std::vector<sigperm::SignedPerm> center(const ArrowGroup& g);

}  // namespace arrowgroup
