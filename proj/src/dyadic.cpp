#include "cliffcheck/dyadic.hpp"

#include <bit>
#include <stdexcept>

namespace dyadic {

DyadicTree dyadic_partition(int m) {
  if (m < 1 || m > 16) throw std::invalid_argument("dyadic_partition: need 1 <= m <= 16");
  DyadicTree t;
  t.depth = m;
  t.size = 1 << m;
  t.blocks.resize(m);
  t.pairing.resize(m);
  for (int k = 1; k <= m; ++k) {
    const int block_count = 1 << (k - 1);
    const int card = 1 << (m - k + 1);
    auto& level = t.blocks[k - 1];
    level.assign(block_count, {});
    for (int b = 0; b < block_count; ++b) {
      level[b].reserve(card);
      for (int j = 0; j < card; ++j) level[b].push_back(b * card + j);
    }
    auto& pair = t.pairing[k - 1];
    pair.resize(t.size);
    for (int i = 0; i < t.size; ++i) pair[i] = i ^ (1 << (m - k));
  }
  return t;
}

int level_partner(int m, int level, int index) {
  if (level < 1 || level > m) throw std::invalid_argument("level out of range");
  if (index < 0 || index >= (1 << m)) throw std::invalid_argument("index out of range");
  return index ^ (1 << (m - level));
}

namespace {

// Generator on N = 2^p indices: flip bit (p-a) with an X or J brick,
// signs dressed by Z bricks on the higher slots 1..a-1.
sigperm::SignedPerm string_generator(int p, int a, bool j_brick) {
  const int n = 1 << p;
  const int flip_bit = p - a;
  const int zmask = (((1 << (a - 1)) - 1) << (p - a + 1)) & (n - 1);
  std::vector<int> perm(n);
  std::vector<std::int8_t> signs(n);
  for (int i = 0; i < n; ++i) {
    perm[i] = i ^ (1 << flip_bit);
    int s = (std::popcount(static_cast<unsigned>(i & zmask)) & 1) ? -1 : 1;
    if (j_brick && ((i >> flip_bit) & 1)) s = -s;
    signs[i] = static_cast<std::int8_t>(s);
  }
  return sigperm::SignedPerm(std::move(perm), std::move(signs));
}

sigperm::SignedPerm all_z_generator(int p) {
  const int n = 1 << p;
  std::vector<int> perm(n);
  std::vector<std::int8_t> signs(n);
  for (int i = 0; i < n; ++i) {
    perm[i] = i;
    signs[i] = static_cast<std::int8_t>((std::popcount(static_cast<unsigned>(i)) & 1) ? -1 : 1);
  }
  return sigperm::SignedPerm(std::move(perm), std::move(signs));
}

}  // namespace

GeneratorFamily pauli_string_family(int p, bool extended) {
  if (p < 1 || p > 8) throw std::invalid_argument("pauli_string_family: need 1 <= p <= 8");
  GeneratorFamily f;
  f.dim = 1 << p;
  for (int a = 1; a <= p; ++a) {
    f.gens.push_back(string_generator(p, a, false));
    f.labels.push_back("e" + std::to_string(a) + "+");
  }
  if (extended) {
    f.gens.push_back(all_z_generator(p));
    f.labels.push_back("e0");
  }
  for (int a = 1; a <= p; ++a) {
    f.gens.push_back(string_generator(p, a, true));
    f.labels.push_back("e" + std::to_string(a) + "-");
  }
  return f;
}

SignatureCount family_signature(const GeneratorFamily& f) {
  SignatureCount sc;
  for (std::size_t i = 0; i < f.gens.size(); ++i) {
    const auto sq = sigperm::compose(f.gens[i], f.gens[i]);
    if (sq.is_identity()) {
      ++sc.plus;
    } else if (sq.is_minus_identity()) {
      ++sc.minus;
    } else {
      throw std::domain_error("generator " + std::to_string(i) +
                              " has a non-central square");
    }
  }
  return sc;
}

}  // namespace dyadic
