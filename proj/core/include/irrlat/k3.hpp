#pragma once

#include <utility>
#include <vector>

#include <irrlat/certificate.hpp>

namespace irrlat::k3 {

// K3 surface of Picard rank 1; the Picard group is generated by an ample
// line bundle of self-intersection 2*d_param - 2. Picard rank 1 forces
// transcendental rank 21 and |disc T| = |disc Pic| = 2*d_param - 2.
struct K3Descriptor {
  Int d_param;

  explicit K3Descriptor(Int d);  // d >= 2

  Int disc_pic() const;  // 2*(d_param - 1)

  static constexpr long long b2tr = 21;
  static constexpr long long rho = 1;
};

// Numerical invariants of a projective hyper-Kaehler manifold of
// dimension 2n under the Beauville-Bogomolov-Fujiki form.
struct HKDescriptor {
  long long n;
  long long b2tr;
  long long rho;
  Int disc_pic;  // signed, nonzero

  HKDescriptor(long long n, long long b2tr, long long rho, Int disc_pic);

  long long lambda() const;  // min(rho, b2tr)
};

HKDescriptor as_hk(const K3Descriptor& s);

struct MapHypothesis {
  Int deg_phi;
  explicit MapHypothesis(Int deg);  // deg >= 1
};

struct Window {
  PowerExpr lo, hi;
};

enum class WindowKind { hk, k3 };

// (deg phi)^21 * (D' - 1)/(D - 1) as an exact rational; equals the square
// of the sublattice index [T:E] whenever a dominant rational map exists
Rat k3_index_squared(const K3Descriptor& src, const K3Descriptor& tgt,
                     const MapHypothesis& h);

// Necessary conditions for a dominant rational map between Picard-rank-1
// K3 surfaces: the degree-window check on (D-1)/(D'-1), integrality and
// squareness of k3_index_squared, and the index range [1, deg^21].
FeasibilityCertificate k3_map_feasible(const K3Descriptor& src,
                                       const K3Descriptor& tgt,
                                       const MapHypothesis& h);

// all D' in [2, d_max] passing k3_map_feasible, ascending, with the
// integer index [T:E]; jobs > 1 splits the range with an ordered merge
std::vector<std::pair<K3Descriptor, Int>> enumerate_feasible_targets(
    const K3Descriptor& src, const MapHypothesis& h, const Int& d_max,
    unsigned jobs = 1);

// exact window (deg^((1/n - 2) b2tr), deg^(b2tr/n)) for the ratio
// |disc Pic(X) / disc Pic(X')|
Window hk_disc_ratio_window(const HKDescriptor& x, const MapHypothesis& h);

// surface version: (deg^(-lambda), deg^(b2tr))
Window k3_disc_ratio_window(const HKDescriptor& x, const MapHypothesis& h);

// tests |disc_pic(src)/disc_pic(tgt)| against the selected window;
// mismatched b2tr or n is a hypothesis error (both are preserved by
// dominant rational maps)
FeasibilityCertificate check_disc_ratio(const HKDescriptor& src,
                                        const HKDescriptor& tgt,
                                        const MapHypothesis& h,
                                        WindowKind kind);

// Rescale factor deg^(1/n) carried by the pullback of the BBF form.
struct RescaleFactor {
  PowerExpr factor;
  bool exact = false;               // deg is a perfect n-th power
  std::optional<Int> integer_factor;  // set iff exact
  Int nth_power;                    // factor^n = deg, always exact
};

RescaleFactor bbf_pullback_rescale(long long n, const MapHypothesis& h);

}  // namespace irrlat::k3
