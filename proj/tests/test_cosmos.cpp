#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cliffcheck/cosmos.hpp"

using cosmos::CoordSubspace;
using cosmos::EndoF;
using rat::Rational;

namespace {

EndoF make(int a, int b, int g1, int g2, int g3) {
  return EndoF{Rational(a), Rational(b), {Rational(g1), Rational(g2), Rational(g3)}};
}

}  // namespace

TEST_CASE("build_matrix layout") {
  const auto m = cosmos::build_matrix(make(2, 3, 0, 0, 0));
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) {
      Rational want = 0;
      if (i == j) want = i < 5 ? Rational(2) : (i < 8 ? Rational(3) : Rational(1));
      CHECK(m[i][j] == want);
    }

  const auto id = cosmos::build_matrix(make(1, 1, 0, 0, 0));
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) CHECK(id[i][j] == (i == j ? 1 : 0));

  const auto g = cosmos::build_matrix(make(0, 0, 1, 0, 0));
  CHECK(g[8][5] == 1);
  CHECK(g[8][8] == 1);
  int nonzero = 0;
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) nonzero += g[i][j] != 0;
  CHECK(nonzero == 2);

  // at most 12 nonzero entries ever
  const auto full = cosmos::build_matrix(make(2, 3, 1, 1, 1));
  nonzero = 0;
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) nonzero += full[i][j] != 0;
  CHECK(nonzero == 12);
}

TEST_CASE("coordinate subspace validation") {
  CHECK_THROWS_AS(CoordSubspace({}), std::invalid_argument);
  CHECK_THROWS_AS(CoordSubspace({9}), std::invalid_argument);
  CHECK_THROWS_AS(CoordSubspace({1, 1}), std::invalid_argument);
  CHECK(CoordSubspace::e5().to_string() == "{1,2,3,4,5}");
}

TEST_CASE("invariance of E5/E3/E1") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (int t = 0; t < 50; ++t) {
    const EndoF f = make(coef(rng), coef(rng), coef(rng), coef(rng), coef(rng));
    CHECK(cosmos::is_invariant(f, CoordSubspace::e5()));
    CHECK(cosmos::is_invariant(f, CoordSubspace::e1()));
    const bool gamma_zero = f.gamma[0] == 0 && f.gamma[1] == 0 && f.gamma[2] == 0;
    CHECK(cosmos::is_invariant(f, CoordSubspace::e3()) == gamma_zero);
  }
  // one matrix-vector product: M e6 has a component on index 9 when gamma1 != 0
  CHECK(!cosmos::is_invariant(make(2, 3, 1, 0, 0), CoordSubspace::e3()));
  CHECK(cosmos::is_invariant(make(2, 3, 0, 0, 0), CoordSubspace::e3()));
}

TEST_CASE("invariant lattice") {
  // diagonal F keeps every one of the 511 subsets invariant
  CHECK(cosmos::invariant_lattice(make(2, 3, 0, 0, 0)).size() == 511);
  CHECK(cosmos::invariant_lattice(make(1, 1, 0, 0, 0)).size() == 511);

  // gamma = (1,1,1): subsets containing any of {6,7,8} must contain 9
  const auto lat = cosmos::invariant_lattice(make(2, 3, 1, 1, 1));
  const auto contains = [&](const CoordSubspace& s) {
    return std::find(lat.begin(), lat.end(), s) != lat.end();
  };
  CHECK(!contains(CoordSubspace::e3()));
  CHECK(contains(CoordSubspace({5, 6, 7, 8})));  // E3 + E1
  for (const auto& s : lat) {
    const unsigned mask = s.mask();
    if (mask & 0b011100000u) CHECK((mask & 0b100000000u) != 0);
  }
  // oracle count: subsets = choices on {1..5} free, and on {6,7,8} free but
  // forcing 9 when nonempty, plus 9-only choice: 2^5 * (2^3 - 1) * 1 (with 9)
  // + 2^5 * 1 * 2 (empty beta part, 9 free) - 1 (empty set)
  CHECK(lat.size() == 32 * 7 + 32 * 2 - 1);
}

TEST_CASE("restriction coefficients") {
  const EndoF f = make(2, 3, 0, 0, 0);
  CHECK(cosmos::restriction_coefficient(f, CoordSubspace::e5()) == Rational(2));
  CHECK(cosmos::restriction_coefficient(f, CoordSubspace::e3()) == Rational(3));
  CHECK(cosmos::restriction_coefficient(f, CoordSubspace::e1()) == Rational(1));

  // gamma != 0: E3+E1 is invariant but not a similarity
  const EndoF g = make(2, 3, 1, 0, 0);
  CHECK(cosmos::restriction_coefficient(g, CoordSubspace({5, 6, 7, 8})) == std::nullopt);
  CHECK_THROWS_AS(cosmos::restriction_coefficient(g, CoordSubspace::e3()),
                  std::invalid_argument);

  // alpha = beta: the union block is still a similarity
  const EndoF h = make(2, 2, 0, 0, 0);
  CHECK(cosmos::restriction_coefficient(h, CoordSubspace({0, 5})) == Rational(2));
}

TEST_CASE("commutant dimensions, block oracle cross-check") {
  // generic: gl(5) + gl(3) + gl(1) = 25 + 9 + 1; so(5) + so(3) = 10 + 3
  const auto generic = cosmos::commutant(make(2, 3, 0, 0, 0));
  CHECK(generic.full_dim == 35);
  CHECK(generic.antisym_dim == 13);

  // alpha = beta != 1: gl(8) + gl(1); so(8)
  const auto merged = cosmos::commutant(make(2, 2, 0, 0, 0));
  CHECK(merged.full_dim == 65);
  CHECK(merged.antisym_dim == 28);

  // identity: everything commutes
  const auto full = cosmos::commutant(make(1, 1, 0, 0, 0));
  CHECK(full.full_dim == 81);
  CHECK(full.antisym_dim == 36);
}

TEST_CASE("commutant report bounds hold for random parameters") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> coef(-4, 4);
  for (int t = 0; t < 15; ++t) {
    const auto rep =
        cosmos::commutant(make(coef(rng), coef(rng), coef(rng), coef(rng), coef(rng)));
    CHECK(rep.full_dim >= 9);  // polynomials in M always commute with M
    CHECK(rep.antisym_dim <= rep.full_dim);
    CHECK(!rep.block_structure.empty());
  }
}

TEST_CASE("commutant dimension is lower-semicontinuous under specialization") {
  const auto a = cosmos::commutant(make(2, 3, 0, 0, 0)).full_dim;
  const auto b = cosmos::commutant(make(2, 2, 0, 0, 0)).full_dim;
  const auto c = cosmos::commutant(make(1, 1, 0, 0, 0)).full_dim;
  CHECK(a <= b);
  CHECK(b <= c);
  CHECK(a == 35);
  CHECK(b == 65);
  CHECK(c == 81);
}

TEST_CASE("unitary commutant dims against the cluster formula") {
  using cosmos::Ambient;
  const std::vector<Rational> sm = {2, 2, 2, -3, -3};
  CHECK(cosmos::unitary_commutant_dim(sm, Ambient::su) == 12);  // 9+4-1
  CHECK(cosmos::unitary_commutant_dim(sm, Ambient::u) == 13);

  const std::vector<Rational> zero(5, Rational(0));
  CHECK(cosmos::unitary_commutant_dim(zero, Ambient::su) == 24);
  CHECK(cosmos::unitary_commutant_dim(zero, Ambient::u) == 25);

  const std::vector<Rational> split = {1, 1, 1, 0, -3};
  CHECK(cosmos::unitary_commutant_dim(split, Ambient::su) == 10);  // 9+1+1-1
  CHECK(cosmos::unitary_commutant_dim(split, Ambient::u) == 11);

  // u-dim = su-dim + 1 for any vev (the overall phase)
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int t = 0; t < 20; ++t) {
    std::vector<Rational> d(5);
    for (auto& x : d) x = entry(rng);
    CHECK(cosmos::unitary_commutant_dim(d, Ambient::u) ==
          cosmos::unitary_commutant_dim(d, Ambient::su) + 1);
  }
}

TEST_CASE("second breaking stage: fundamental stabilizer has dimension 9") {
  const std::vector<Rational> sm = {2, 2, 2, -3, -3};
  CHECK(cosmos::fundamental_stabilizer_dim(sm, 4) == 9);  // su(3) + u(1)
  CHECK(cosmos::fundamental_stabilizer_dim(sm, 3) == 9);  // either doublet slot
  CHECK_THROWS_AS(cosmos::fundamental_stabilizer_dim(sm, 7), std::invalid_argument);
}

TEST_CASE("gauge report") {
  const auto rep = cosmos::gauge_report(make(2, 3, 0, 0, 0));
  CHECK(rep.e5_invariant);
  CHECK(rep.e3_invariant);
  CHECK(rep.e1_invariant);
  CHECK(rep.coeff_e5 == Rational(2));
  CHECK(rep.coeff_e3 == Rational(3));
  CHECK(rep.coeff_e1 == Rational(1));
  CHECK(rep.chain_dims == std::array<int, 3>{24, 12, 9});
  CHECK(!rep.fully_symmetric);

  const auto degenerate = cosmos::gauge_report(make(1, 1, 0, 0, 0));
  CHECK(degenerate.fully_symmetric);

  const auto broken = cosmos::gauge_report(make(2, 3, 1, 0, 0));
  CHECK(!broken.e3_invariant);
  CHECK(broken.e3_note.find("gamma = 0") != std::string::npos);
  CHECK(!broken.coeff_e3.has_value());
}

TEST_CASE("rational parsing for CLI inputs") {
  CHECK(rat::parse_rational("7") == Rational(7));
  CHECK(rat::parse_rational("-3/4") == Rational(-3, 4));
  CHECK(rat::parse_rational("0.25") == Rational(1, 4));
  CHECK(rat::parse_rational("-1.5") == Rational(-3, 2));
  CHECK_THROWS_AS(rat::parse_rational("2."), std::invalid_argument);
  CHECK_THROWS_AS(rat::parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(rat::parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rat::parse_rational(""), std::invalid_argument);
  CHECK(rat::to_string(Rational(-3, 4)) == "-3/4");
  CHECK(rat::to_string(Rational(5)) == "5");
}
