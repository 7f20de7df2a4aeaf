#include "cliffcheck/classify.hpp"

#include <stdexcept>

namespace cliffalg {

int ring_real_dim(Ring r) {
  switch (r) {
    case Ring::R: return 1;
    case Ring::C: return 2;
    case Ring::H: return 4;
  }
  return 0;
}

std::string ring_name(Ring r) {
  switch (r) {
    case Ring::R: return "R";
    case Ring::C: return "C";
    case Ring::H: return "H";
  }
  return "?";
}

std::uint64_t AlgebraClass::real_dim() const {
  return static_cast<std::uint64_t>(factors) * size * size * ring_real_dim(ring);
}

std::string AlgebraClass::to_string() const {
  const std::string one = "Mat" + std::to_string(size) + "(" + ring_name(ring) + ")";
  return factors == 2 ? one + " + " + one : one;
}

namespace {

// a x Mat_size(ring2) with the usual simplifications; the right factor is simple.
AlgebraClass tensor_simple(const AlgebraClass& a, Ring ring2, std::uint64_t size2) {
  AlgebraClass out = a;
  out.size *= size2;
  if (a.ring == Ring::R) {
    out.ring = ring2;
  } else if (ring2 == Ring::R) {
    out.ring = a.ring;
  } else if (a.ring == Ring::C && ring2 == Ring::C) {
    out.ring = Ring::C;  // C x C = C + C
    out.factors *= 2;
    if (out.factors > 2) throw std::logic_error("descriptor factor overflow");
  } else if (a.ring == Ring::H && ring2 == Ring::H) {
    out.ring = Ring::R;  // H x H = Mat4(R)
    out.size *= 4;
  } else {
    out.ring = Ring::C;  // C x H = Mat2(C), either order
    out.size *= 2;
  }
  return out;
}

}  // namespace

AlgebraClass classify(const Signature& s) {
  if (s.p == 0 && s.q == 0) return {Ring::R, 1, 1};
  if (s.p == 1 && s.q == 0) return {Ring::R, 1, 2};
  if (s.p == 0 && s.q == 1) return {Ring::C, 1, 1};
  if (s.p >= 1 && s.q >= 1)
    return tensor_simple(classify(Signature(s.p - 1, s.q - 1)), Ring::R, 2);
  if (s.p >= 2)
    return tensor_simple(classify(Signature(s.q, s.p - 2)), Ring::R, 2);
  return tensor_simple(classify(Signature(s.q - 2, s.p)), Ring::H, 1);
}

namespace {

bool blade_is_central(Blade b, const Signature& s) {
  for (int i = 0; i < s.n(); ++i) {
    const Blade gen = Blade{1} << i;
    if (blade_product(b, gen, s).sign != blade_product(gen, b, s).sign) return false;
  }
  return true;
}

}  // namespace

int center_dimension_exact(const Signature& s) {
  // Generator multiplication permutes blades, so the center is spanned by
  // the individual blades commuting with every generator.
  int dim = 0;
  for (Blade b = 0; b < (Blade{1} << s.n()); ++b)
    if (blade_is_central(b, s)) ++dim;
  return dim;
}

int central_idempotent_count_exact(const Signature& s) {
  std::vector<Blade> central;
  for (Blade b = 0; b < (Blade{1} << s.n()); ++b)
    if (blade_is_central(b, s)) central.push_back(b);
  if (central.size() == 1) return 2;  // {0, 1}
  if (central.size() != 2)
    throw std::logic_error("unexpected center dimension " + std::to_string(central.size()));
  // Center = span{1, w}; solve (a + b w)^2 = a + b w with w^2 = sigma.
  const Blade w = central[1];
  const int sigma = blade_product(w, w, s).sign;
  return sigma == 1 ? 4 : 2;
}

std::vector<ClaimEntry> claim_report() {
  std::vector<ClaimEntry> rows;
  const std::uint64_t pauli_dim = 8;   // Mat2(C) over R
  const std::uint64_t dirac_dim = 32;  // Mat4(C) over R

  rows.push_back({"Pauli algebra", "Mat2(C)", "Mat2(C)", pauli_dim, "reference",
                  "complex 2x2 matrices, real dimension 8"});
  rows.push_back({"Dirac algebra", "Mat4(C)", "Mat4(C)", dirac_dim, "reference",
                  "complex 4x4 matrices, real dimension 32"});

  auto add = [&rows](const std::string& claim, int p, int q, std::uint64_t want_dim,
                     const std::string& note_match, const std::string& note_miss) {
    const AlgebraClass c = classify(Signature(p, q));
    ClaimEntry e;
    e.claim = claim;
    e.signature = "Cl(" + std::to_string(p) + "," + std::to_string(q) + ")";
    e.descriptor = c.to_string();
    e.real_dim = c.real_dim();
    if (c.real_dim() == want_dim && c.ring == Ring::C && c.factors == 1) {
      e.verdict = "MATCH";
      e.note = note_match;
    } else {
      e.verdict = "MISMATCH";
      e.note = note_miss +
               (c.real_dim() == want_dim ? " (same real dimension, different algebra)"
                                         : " (real dimension differs)");
    }
    rows.push_back(e);
  };

  add("Pauli = Cl(4), reading (4,0)", 4, 0, pauli_dim, "",
      "not the Pauli algebra");
  add("Pauli = Cl(4), reading (0,4)", 0, 4, pauli_dim, "",
      "not the Pauli algebra");
  add("Pauli algebra at 3 generators, reading (3,0)", 3, 0, pauli_dim,
      "the Pauli algebra is realized here", "not the Pauli algebra");
  add("Pauli algebra at 3 generators, reading (0,3)", 0, 3, pauli_dim, "",
      "not the Pauli algebra");
  add("Dirac real form, reading (1,3)", 1, 3, dirac_dim,
      "", "not Mat4(C) as a real algebra");
  add("Dirac real form, reading (3,1)", 3, 1, dirac_dim,
      "", "not Mat4(C) as a real algebra");

  {
    const AlgebraClass c = classify(Signature(4, 4));
    ClaimEntry e;
    e.claim = "Dirac = Cl(4,4)";
    e.signature = "Cl(4,4)";
    e.descriptor = c.to_string();
    e.real_dim = c.real_dim();
    e.verdict = "MISMATCH";
    e.note = "real dimension " + std::to_string(c.real_dim()) + " vs Dirac " +
             std::to_string(dirac_dim) +
             "; contains Mat4(C) up to real embedding: checked by dimension "
             "divisibility only (" +
             std::to_string(c.real_dim()) + " % " + std::to_string(dirac_dim) +
             " == " + std::to_string(c.real_dim() % dirac_dim) + ")";
    rows.push_back(e);
  }

  {
    ClaimEntry e;
    e.claim = "Pauli = Cl(4), overall";
    e.signature = "Cl(4,0) / Cl(0,4)";
    e.descriptor = classify(Signature(4, 0)).to_string() + " / " +
                   classify(Signature(0, 4)).to_string();
    e.real_dim = classify(Signature(4, 0)).real_dim();
    e.verdict = "AMBIGUOUS";
    e.note = "no 4-generator signature yields Mat2(C); Cl(3,0) does";
    rows.push_back(e);
  }
  return rows;
}

}  // namespace cliffalg
