#include "cliffcheck/arrowgroup.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace arrowgroup {

bool ArrowGroup::contains(const sigperm::SignedPerm& g) const {
  return std::binary_search(elements.begin(), elements.end(), g);
}

ArrowGroup generate(const dyadic::GeneratorFamily& f, std::size_t cap) {
  if (cap < 2) throw std::invalid_argument("generate: cap must be >= 2");
  const int n = f.dim > 0 ? f.dim
                          : (f.gens.empty() ? 2 : f.gens.front().size());
  for (const auto& g : f.gens)
    if (g.size() != n) throw std::invalid_argument("generate: dimension-mismatched generators");

  std::set<sigperm::SignedPerm> seen;
  std::deque<sigperm::SignedPerm> frontier;
  seen.insert(sigperm::SignedPerm::identity(n));
  frontier.push_back(sigperm::SignedPerm::identity(n));

  while (!frontier.empty()) {
    const sigperm::SignedPerm cur = frontier.front();
    frontier.pop_front();
    for (const auto& g : f.gens) {
      sigperm::SignedPerm next = sigperm::compose(cur, g);
      if (seen.insert(next).second) {
        if (seen.size() > cap)
          throw std::overflow_error("generate: closure exceeds cap of " +
                                    std::to_string(cap));
        frontier.push_back(std::move(next));
      }
    }
  }

  ArrowGroup out;
  out.family = f;
  out.cap = cap;
  out.elements.assign(seen.begin(), seen.end());  // std::set is already canonical order
  return out;
}

RelationReport verify_relations(const dyadic::GeneratorFamily& f) {
  if (f.gens.empty()) throw std::invalid_argument("verify_relations: need >= 1 generator");
  RelationReport rep;
  const int k = static_cast<int>(f.gens.size());
  rep.squares.assign(k, 0);

  for (int i = 0; i < k; ++i) {
    const auto sq = sigperm::compose(f.gens[i], f.gens[i]);
    if (sq.is_identity()) {
      rep.squares[i] = 1;
    } else if (sq.is_minus_identity()) {
      rep.squares[i] = -1;
    } else {
      rep.failures.push_back({i, -1, "square is not +-identity: " + sigperm::cycle_notation(sq)});
    }
    if (f.gens[i].is_identity() || f.gens[i].is_minus_identity())
      rep.failures.push_back({i, -1, "generator is itself +-identity (order <= 2 degenerate)"});
  }

  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const auto ij = sigperm::compose(f.gens[i], f.gens[j]);
      const auto ji = sigperm::compose(f.gens[j], f.gens[i]);
      PairRelation pr;
      pr.i = i;
      pr.j = j;
      pr.anticommute = (ij == sigperm::negate(ji));
      pr.inverse_form = (ij == sigperm::inverse(ji));
      pr.same_metric = rep.squares[i] != 0 && rep.squares[j] != 0 &&
                       rep.squares[i] * rep.squares[j] == 1;
      rep.pairs.push_back(pr);
      if (pr.anticommute) {
        ++rep.anticommuting_pairs;
      } else {
        rep.failures.push_back({i, j, "pair does not anticommute: g_i g_j = " +
                                          sigperm::cycle_notation(ij) + ", g_j g_i = " +
                                          sigperm::cycle_notation(ji)});
      }
      if (pr.inverse_form != pr.same_metric) rep.inverse_form_matches_metric = false;
    }
  }
  return rep;
}

std::uint64_t group_order_law(int n_generators) {
  if (n_generators < 0) throw std::invalid_argument("negative generator count");
  if (n_generators == 0) return 1;
  return std::uint64_t{1} << (n_generators + 1);
}

std::vector<sigperm::SignedPerm> center(const ArrowGroup& g) {
  std::vector<sigperm::SignedPerm> out;
  for (const auto& e : g.elements) {
    bool central = true;
    for (const auto& gen : g.family.gens) {
      if (sigperm::compose(e, gen) != sigperm::compose(gen, e)) {
        central = false;
        break;
      }
    }
    if (central) out.push_back(e);
  }
  return out;
}

}  // namespace arrowgroup
