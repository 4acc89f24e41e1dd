#include <irrlat/invariants.hpp>

#include <utility>

#include <irrlat/errors.hpp>

namespace irrlat::invariants {

InvariantTriple::InvariantTriple(Int irr_, Int fibgon_, Int fibgen_,
                                 std::optional<Int> d)
    : irr(std::move(irr_)),
      fibgon(std::move(fibgon_)),
      fibgen(std::move(fibgen_)),
      d_param(std::move(d)) {
  if (irr < 2)
    throw invariant_error("InvariantTriple: irr must be >= 2 (K3 surfaces are not rational)");
  if (fibgon < 2)
    throw invariant_error(
        "InvariantTriple: fibgon must be >= 2 (no rational-curve fibrations)");
  if (fibgen < 0) throw invariant_error("InvariantTriple: fibgen must be >= 0");
  if (fibgon > irr)
    throw invariant_error("InvariantTriple: fibgon <= irr must hold");
  if (d_param && *d_param < 2)
    throw invariant_error("InvariantTriple: d_param must be >= 2");
}

ELWindow ein_lazarsfeld_window(const Int& d) {
  if (d < 2) throw invariant_error("ein_lazarsfeld_window: d must be >= 2");
  // lo: smallest s with s^2 >= d/2, i.e. with s^2 >= ceil(d/2)
  Int c = (d + 1) / 2;
  Int lo = isqrt(c);
  if (lo * lo < c) ++lo;
  Int hi = isqrt(8 * d);  // floor(2*sqrt(2d)) = floor(sqrt(8d))
  return ELWindow{std::move(lo), std::move(hi), make_rat(d, Int(2)), 8 * d};
}

std::string to_string(Dichotomy v) {
  switch (v) {
    case Dichotomy::CaseA: return "CaseA";
    case Dichotomy::CaseB: return "CaseB";
    case Dichotomy::Both: return "Both";
    case Dichotomy::Violation: return "Violation";
  }
  return "Violation";
}

Dichotomy dichotomy_certificate(const InvariantTriple& t) {
  const bool case_a = t.irr == t.fibgon;
  const bool case_b = t.fibgen * t.fibgen <= ipow(t.fibgon, 21);
  if (case_a && case_b) return Dichotomy::Both;
  if (case_a) return Dichotomy::CaseA;
  if (case_b) return Dichotomy::CaseB;
  return Dichotomy::Violation;
}

FeasibilityCertificate chain_check(const Int& fibgon, const Int& deg_phi,
                                   const Int& d_src, const Int& d_tgt,
                                   const Int& fibgen) {
  if (fibgen < 0) throw invariant_error("chain_check: fibgen must be >= 0");
  if (deg_phi < 1)
    return FeasibilityCertificate::hypothesis_failure("deg_phi must be >= 1");
  if (fibgon < 2 * deg_phi)
    return FeasibilityCertificate::hypothesis_failure(
        "fibgon >= 2*deg_phi must hold");
  if (d_src < 2 || d_tgt < 2)
    return FeasibilityCertificate::hypothesis_failure(
        "degree parameters must be >= 2");

  // q = fibgon/deg_phi - 1 >= 1
  const Rat q = make_rat(fibgon - deg_phi, deg_phi);
  const Rat q4 = q * q * q * q;
  const Rat half_tgt = make_rat(d_tgt, Int(2));
  const Int m21 = ipow(deg_phi, 21);
  const Int fg2 = fibgen * fibgen;
  const Int fibgon21 = ipow(fibgon, 21);

  std::vector<Check> checks;
  // (fibgon/deg - 1)^2 >= sqrt(d_tgt/2), squared
  checks.push_back(Check{"quotient-genus-vs-target-radicand", q4, ">=",
                         half_tgt, q4 >= half_tgt});
  // sqrt(d_tgt/2) >= sqrt(d_src/(2 deg^21)), squared and cross-multiplied
  Int l2 = d_tgt * m21;
  checks.push_back(Check{"target-vs-source-radicand", Rat(l2), ">=",
                         Rat(d_src), l2 >= d_src});
  // sqrt(d_src/(2 deg^21)) >= fibgen/(4 deg^(21/2)): squaring cancels the
  // half-integer power of deg, leaving 8*d_src >= fibgen^2
  Int l3 = 8 * d_src;
  checks.push_back(Check{"source-radicand-vs-fibgen", Rat(l3), ">=", Rat(fg2),
                         l3 >= fg2});
  // conclusion
  checks.push_back(Check{"fibgen-sq-le-fibgon-21", Rat(fg2), "<=",
                         Rat(fibgon21), fg2 <= fibgon21});

  std::vector<std::string> notes = {
      "links 1-3 are the defining inequalities with every square root "
      "squared out to a rational comparison",
      "conclusion derivation: chaining links 1-3 gives fibgen <= "
      "4*deg^(21/2)*(fibgon/deg - 1)^2 <= 4*fibgon^2*deg^(17/2); squaring "
      "and substituting deg <= fibgon/2 yields fibgen^2 <= fibgon^21 / 2^13",
  };
  return FeasibilityCertificate::from_checks(std::move(checks), std::move(notes));
}

Int fibgon_threshold(const Int& d) {
  if (d < 1) throw invariant_error("fibgon_threshold: d must be >= 1");
  // smallest f with f^21 >= d/2, i.e. f^21 >= ceil(d/2)
  Int c = (d + 1) / 2;
  Int f = iroot(c, 21);
  if (ipow(f, 21) < c) ++f;
  if (f < 1) f = 1;
  return f;
}

Int fibgon_floor_from_irr(const Int& d, const Int& irr) {
  if (d < 2) throw invariant_error("fibgon_floor_from_irr: d must be >= 2");
  if (irr < 2) throw invariant_error("fibgon_floor_from_irr: irr must be >= 2");
  Int s = fibgon_threshold(d);
  Int m = irr < s ? irr : s;
  return m < 2 ? Int(2) : m;
}

}  // namespace irrlat::invariants
