#pragma once

#include <optional>
#include <string>

#include <irrlat/certificate.hpp>

namespace irrlat::invariants {

// (Irr, Fibgon, Fibgen) of a Picard-rank-1 K3 surface. Fibgon <= Irr
// always; Irr >= 2 and Fibgon >= 2 because such a surface is neither
// rational nor fibered into rational curves.
struct InvariantTriple {
  Int irr, fibgon, fibgen;
  std::optional<Int> d_param;

  InvariantTriple(Int irr, Int fibgon, Int fibgen,
                  std::optional<Int> d_param = {});
};

// integer endpoints of the fibering-genus window sqrt(d/2) .. 2*sqrt(2d),
// with the raw radicands kept for the certificate
struct ELWindow {
  Int lo, hi;
  Rat lo_radicand;  // d/2
  Int hi_radicand;  // 8d
};

ELWindow ein_lazarsfeld_window(const Int& d);  // d >= 2

enum class Dichotomy { CaseA, CaseB, Both, Violation };
std::string to_string(Dichotomy v);

// CaseA: irr = fibgon. CaseB: fibgen^2 <= fibgon^21. Violation means the
// triple is incompatible with both cases for a Picard-rank-1 K3.
Dichotomy dichotomy_certificate(const InvariantTriple& t);

// Verifies the inequality chain
//   (fibgon/deg - 1)^2 >= sqrt(d_tgt/2) >= sqrt(d_src/(2 deg^21))
//                      >= fibgen/(4 deg^(21/2))
// and the conclusion fibgen^2 <= fibgon^21, all square roots squared out
// to exact rational comparisons. Requires deg >= 1 and fibgon >= 2*deg.
FeasibilityCertificate chain_check(const Int& fibgon, const Int& deg_phi,
                                   const Int& d_src, const Int& d_tgt,
                                   const Int& fibgen);

// s(d): smallest f >= 1 with f^21 >= d/2
Int fibgon_threshold(const Int& d);

// max(2, min(irr, s(d))): certified lower bound on Fibgon for a
// Picard-rank-1 K3 of parameter d with degree of irrationality irr
Int fibgon_floor_from_irr(const Int& d, const Int& irr);

}  // namespace irrlat::invariants
