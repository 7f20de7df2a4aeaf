#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "cliffcheck/arrowgroup.hpp"

using arrowgroup::generate;
using arrowgroup::group_order_law;
using arrowgroup::verify_relations;
using dyadic::GeneratorFamily;
using dyadic::pauli_string_family;
using sigperm::SignedPerm;

namespace {

// Independent closure oracle over integer matrices (no SignedPerm in the
// multiplication path).
std::size_t matrix_closure_order(const GeneratorFamily& f, std::size_t cap) {
  using Mat = std::vector<std::vector<int>>;
  auto to_mat = [](const SignedPerm& g) {
    Mat m(g.size(), std::vector<int>(g.size(), 0));
    for (int i = 0; i < g.size(); ++i) m[g.target(i)][i] = g.sign(i);
    return m;
  };
  auto mul = [](const Mat& a, const Mat& b) {
    const int n = static_cast<int>(a.size());
    Mat out(n, std::vector<int>(n, 0));
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        for (int k = 0; k < n; ++k) out[r][c] += a[r][k] * b[k][c];
    return out;
  };

  Mat id(f.dim, std::vector<int>(f.dim, 0));
  for (int i = 0; i < f.dim; ++i) id[i][i] = 1;
  std::set<Mat> seen{id};
  std::vector<Mat> frontier{id};
  while (!frontier.empty()) {
    std::vector<Mat> next;
    for (const auto& m : frontier)
      for (const auto& g : f.gens) {
        auto prod = mul(m, to_mat(g));
        if (seen.insert(prod).second) {
          REQUIRE(seen.size() <= cap);
          next.push_back(std::move(prod));
        }
      }
    frontier = std::move(next);
  }
  return seen.size();
}

}  // namespace

TEST_CASE("closure orders match the independent matrix oracle") {
  for (int p = 1; p <= 3; ++p) {
    const auto f = pauli_string_family(p);
    const auto g = generate(f);
    CHECK(g.order() == matrix_closure_order(f, 1 << 10));
    CHECK(g.order() == group_order_law(2 * p));  // 2^{2p+1}
  }
}

TEST_CASE("p=4 order by subset-product normal form, cross-checked with BFS") {
  const auto f = pauli_string_family(4);
  const auto g = generate(f);
  CHECK(g.order() == group_order_law(8));  // 512

  // normal form: +- (strictly increasing product over a generator subset)
  std::set<SignedPerm> forms;
  for (unsigned s = 0; s < 256; ++s) {
    SignedPerm acc = SignedPerm::identity(f.dim);
    for (int i = 7; i >= 0; --i)
      if (s & (1u << i)) acc = compose(f.gens[i], acc);
    forms.insert(acc);
    forms.insert(negate(acc));
  }
  CHECK(forms.size() == 512);
  for (const auto& e : forms) CHECK(g.contains(e));
}

TEST_CASE("empty family gives the trivial group") {
  GeneratorFamily f;
  f.dim = 2;
  const auto g = generate(f);
  CHECK(g.order() == 1);
  CHECK(g.elements.front().is_identity());
}

TEST_CASE("cap overflow") {
  CHECK_THROWS_AS(generate(pauli_string_family(3), 10), std::overflow_error);
  CHECK_THROWS_AS(generate(pauli_string_family(1), 1), std::invalid_argument);
}

TEST_CASE("dimension mismatch is rejected") {
  GeneratorFamily f;
  f.dim = 2;
  f.gens.push_back(sigperm::brick_x());
  f.gens.push_back(sigperm::kron(sigperm::brick_x(), sigperm::brick_x()));
  CHECK_THROWS_AS(generate(f), std::invalid_argument);
}

TEST_CASE("closure order is deterministic and canonically sorted") {
  const auto a = generate(pauli_string_family(2));
  const auto b = generate(pauli_string_family(2));
  CHECK(a.elements == b.elements);
  CHECK(std::is_sorted(a.elements.begin(), a.elements.end()));
}

TEST_CASE("closure contains minus identity for anticommuting families") {
  for (int p = 1; p <= 3; ++p) {
    const auto g = generate(pauli_string_family(p));
    CHECK(g.contains(SignedPerm::minus_identity(g.family.dim)));
    CHECK(g.contains(SignedPerm::identity(g.family.dim)));
  }
}

TEST_CASE("verify_relations on valid families") {
  for (int p = 1; p <= 4; ++p) {
    const auto rep = verify_relations(pauli_string_family(p));
    CHECK(rep.pass());
    CHECK(rep.anticommuting_pairs == p * (2 * p - 1));  // C(2p,2)
    CHECK(rep.inverse_form_matches_metric);
    for (int s : rep.squares) CHECK((s == 1 || s == -1));
  }
  // p=2: exactly 6 anticommuting pairs
  CHECK(verify_relations(pauli_string_family(2)).anticommuting_pairs == 6);
}

TEST_CASE("inverse form holds exactly on equal-square-sign pairs") {
  const auto rep = verify_relations(pauli_string_family(2));
  for (const auto& pr : rep.pairs) {
    CHECK(pr.anticommute);
    CHECK(pr.inverse_form == pr.same_metric);
  }
  // mixed pair (X, J): anticommutes but the literal inverse form cannot hold
  const auto mixed = verify_relations(pauli_string_family(1));
  REQUIRE(mixed.pairs.size() == 1);
  CHECK(mixed.pairs[0].anticommute);
  CHECK(!mixed.pairs[0].inverse_form);
  CHECK(!mixed.pairs[0].same_metric);
}

TEST_CASE("literal inverse form on an all-minus-squares family") {
  GeneratorFamily f;
  f.dim = 4;
  f.gens.push_back(sigperm::kron(sigperm::brick_j(), SignedPerm::identity(2)));
  f.gens.push_back(sigperm::kron(sigperm::brick_z(), sigperm::brick_j()));
  const auto rep = verify_relations(f);
  CHECK(rep.pass());
  CHECK(rep.squares == std::vector<int>{-1, -1});
  REQUIRE(rep.pairs.size() == 1);
  CHECK(rep.pairs[0].anticommute);
  CHECK(rep.pairs[0].inverse_form);
  // and the closure behaves like the (0,2) Clifford group
  CHECK(generate(f).order() == 8);
}

TEST_CASE("commuting pair is reported as a failure") {
  GeneratorFamily f;
  f.dim = 4;
  f.gens.push_back(sigperm::kron(sigperm::brick_x(), SignedPerm::identity(2)));
  f.gens.push_back(sigperm::kron(sigperm::brick_x(), sigperm::brick_x()));
  const auto rep = verify_relations(f);
  CHECK(!rep.pass());
  REQUIRE(!rep.failures.empty());
  CHECK(rep.failures.front().i == 0);
  CHECK(rep.failures.front().j == 1);
}

TEST_CASE("degenerate generator is flagged") {
  GeneratorFamily f;
  f.dim = 2;
  f.gens.push_back(SignedPerm::identity(2));
  const auto rep = verify_relations(f);
  CHECK(!rep.pass());
  CHECK(rep.failures.front().j == -1);
  CHECK_THROWS_AS(verify_relations(GeneratorFamily{}), std::invalid_argument);
}

TEST_CASE("group order law") {
  CHECK(group_order_law(0) == 1);
  CHECK(group_order_law(2) == 8);
  CHECK(group_order_law(4) == 32);
}

TEST_CASE("extended family closure order shows the central dependence") {
  // product of all 2p+1 extended generators is +-identity, so the closure
  // order stays 2^{2p+1} and the 2^{n+1} law does not apply
  for (int p = 1; p <= 3; ++p) {
    const auto f = pauli_string_family(p, true);
    const auto g = generate(f);
    CHECK(g.order() == (std::size_t{1} << (2 * p + 1)));
    CHECK(g.order() != group_order_law(static_cast<int>(f.gens.size())));

    SignedPerm total = SignedPerm::identity(f.dim);
    for (const auto& gen : f.gens) total = compose(total, gen);
    CHECK((total.is_identity() || total.is_minus_identity()));
  }
}

TEST_CASE("center of a valid family closure is {+1, -1}") {
  for (int p = 1; p <= 3; ++p) {
    const auto z = arrowgroup::center(generate(pauli_string_family(p)));
    REQUIRE(z.size() == 2);
    CHECK(z[0].is_identity());
    CHECK(z[1].is_minus_identity());
  }
}

TEST_CASE("center of a single-generator family is the whole cyclic group") {
  GeneratorFamily f;
  f.dim = 2;
  f.gens.push_back(sigperm::brick_j());
  const auto g = generate(f);
  CHECK(g.order() == 4);  // cyclic: J, -I, -J, I
  CHECK(arrowgroup::center(g).size() == 4);
}

TEST_CASE("center of the trivial group is the identity") {
  GeneratorFamily f;
  f.dim = 2;
  const auto z = arrowgroup::center(generate(f));
  REQUIRE(z.size() == 1);
  CHECK(z[0].is_identity());
}
