#include "cliffcheck/sigperm.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sigperm {

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  if (x.n != y.n) throw std::invalid_argument("IntMatrix size mismatch");
  IntMatrix out(x.n);
  for (int r = 0; r < x.n; ++r)
    for (int k = 0; k < x.n; ++k) {
      const int v = x.at(r, k);
      if (v == 0) continue;
      for (int c = 0; c < x.n; ++c) out.at(r, c) += v * y.at(k, c);
    }
  return out;
}

SignedPerm::SignedPerm(std::vector<int> perm, std::vector<std::int8_t> signs)
    : perm_(std::move(perm)), signs_(std::move(signs)) {
  const int n = static_cast<int>(perm_.size());
  if (n == 0) throw std::invalid_argument("SignedPerm needs at least one index");
  if (signs_.size() != perm_.size())
    throw std::invalid_argument("perm/signs length mismatch");
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    const int t = perm_[i];
    if (t < 0 || t >= n || seen[t])
      throw std::invalid_argument("perm is not a bijection on {0..n-1}");
    seen[t] = true;
    if (signs_[i] != 1 && signs_[i] != -1)
      throw std::invalid_argument("signs must be +1 or -1");
  }
}

SignedPerm SignedPerm::identity(int n) {
  if (n < 1) throw std::invalid_argument("identity needs n >= 1");
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return SignedPerm(std::move(p), std::vector<std::int8_t>(n, 1));
}

SignedPerm SignedPerm::minus_identity(int n) {
  SignedPerm e = identity(n);
  return negate(e);
}

bool SignedPerm::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (perm_[i] != i || signs_[i] != 1) return false;
  return true;
}

bool SignedPerm::is_minus_identity() const {
  for (int i = 0; i < size(); ++i)
    if (perm_[i] != i || signs_[i] != -1) return false;
  return true;
}

std::strong_ordering SignedPerm::operator<=>(const SignedPerm& other) const {
  if (auto c = perm_.size() <=> other.perm_.size(); c != 0) return c;
  if (auto c = perm_ <=> other.perm_; c != 0) return c;
  // + sorts before -
  for (std::size_t i = 0; i < signs_.size(); ++i) {
    const int l = signs_[i] == 1 ? 0 : 1;
    const int r = other.signs_[i] == 1 ? 0 : 1;
    if (auto c = l <=> r; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

SignedPerm compose(const SignedPerm& a, const SignedPerm& b) {
  const int n = a.size();
  if (n != b.size()) throw std::invalid_argument("compose: dimension mismatch");
  std::vector<int> perm(n);
  std::vector<std::int8_t> signs(n);
  for (int i = 0; i < n; ++i) {
    const int mid = b.target(i);
    perm[i] = a.target(mid);
    signs[i] = static_cast<std::int8_t>(b.sign(i) * a.sign(mid));
  }
  return SignedPerm(std::move(perm), std::move(signs));
}

SignedPerm inverse(const SignedPerm& a) {
  const int n = a.size();
  std::vector<int> perm(n);
  std::vector<std::int8_t> signs(n);
  for (int i = 0; i < n; ++i) {
    perm[a.target(i)] = i;
    signs[a.target(i)] = static_cast<std::int8_t>(a.sign(i));
  }
  return SignedPerm(std::move(perm), std::move(signs));
}

SignedPerm negate(const SignedPerm& a) {
  std::vector<std::int8_t> signs(a.signs());
  for (auto& s : signs) s = static_cast<std::int8_t>(-s);
  return SignedPerm(a.perm(), std::move(signs));
}

std::optional<int> element_order(const SignedPerm& a, int cap) {
  if (cap < 1) throw std::invalid_argument("element_order: cap must be >= 1");
  SignedPerm acc = a;
  for (int k = 1; k <= cap; ++k) {
    if (acc.is_identity()) return k;
    acc = compose(acc, a);
  }
  return std::nullopt;
}

IntMatrix matrix(const SignedPerm& a) {
  IntMatrix m(a.size());
  for (int i = 0; i < a.size(); ++i) m.at(a.target(i), i) = a.sign(i);
  return m;
}

SignedPerm kron(const SignedPerm& a, const SignedPerm& b) {
  const int na = a.size();
  const int nb = b.size();
  std::vector<int> perm(static_cast<std::size_t>(na) * nb);
  std::vector<std::int8_t> signs(static_cast<std::size_t>(na) * nb);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) {
      perm[static_cast<std::size_t>(i) * nb + j] = a.target(i) * nb + b.target(j);
      signs[static_cast<std::size_t>(i) * nb + j] =
          static_cast<std::int8_t>(a.sign(i) * b.sign(j));
    }
  return SignedPerm(std::move(perm), std::move(signs));
}

std::string cycle_notation(const SignedPerm& a) {
  std::ostringstream out;
  std::vector<bool> done(a.size(), false);
  bool printed = false;
  for (int start = 0; start < a.size(); ++start) {
    if (done[start]) continue;
    if (a.target(start) == start && a.sign(start) == 1) {
      done[start] = true;
      continue;  // positive fixed points are omitted
    }
    out << '(';
    int i = start;
    bool first = true;
    do {
      done[i] = true;
      if (!first) out << ' ';
      first = false;
      out << (i + 1) << '>' << (a.sign(i) == 1 ? '+' : '-') << (a.target(i) + 1);
      i = a.target(i);
    } while (i != start);
    out << ')';
    printed = true;
  }
  if (!printed) return "()";
  return out.str();
}

SignTransitionPair::SignTransitionPair(int i_, int j_, int eps_ij_, int eps_ji_)
    : i(i_), j(j_), eps_ij(eps_ij_), eps_ji(eps_ji_) {
  if (i == j) throw std::invalid_argument("SignTransitionPair needs i != j");
  if ((eps_ij != 1 && eps_ij != -1) || (eps_ji != 1 && eps_ji != -1))
    throw std::invalid_argument("transition signs must be +1 or -1");
}

SignedPerm SignTransitionPair::as_signed_perm(int n) const {
  if (i >= n || j >= n || i < 0 || j < 0)
    throw std::invalid_argument("transition pair out of range");
  SignedPerm e = SignedPerm::identity(n);
  std::vector<int> perm(e.perm());
  std::vector<std::int8_t> signs(e.signs());
  perm[i] = j;
  signs[i] = static_cast<std::int8_t>(eps_ij);
  perm[j] = i;
  signs[j] = static_cast<std::int8_t>(eps_ji);
  return SignedPerm(std::move(perm), std::move(signs));
}

std::optional<TransitionDecomposition> as_transition_product(const SignedPerm& a) {
  TransitionDecomposition d;
  for (int i = 0; i < a.size(); ++i) {
    const int t = a.target(i);
    if (t == i) {
      d.reflections.emplace_back(i, a.sign(i));
    } else if (a.target(t) == i) {
      if (i < t) d.pairs.emplace_back(i, t, a.sign(i), a.sign(t));
    } else {
      return std::nullopt;  // cycle longer than 2
    }
  }
  return d;
}

SignedPerm brick_x() { return SignedPerm({1, 0}, {1, 1}); }
SignedPerm brick_j() { return SignedPerm({1, 0}, {1, -1}); }
SignedPerm brick_z() { return SignedPerm({0, 1}, {1, -1}); }

}  // namespace sigperm
