#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <irrlat/numeric.hpp>

namespace irrlat::bounds {

// Integer point (g, k) of the fiber-genus constraint system at
// half-dimension n:
//   k >= 0,   g - k - n >= 0,   2n - 1 - (g - k) - k(k+1)/2 <= 0.
struct ConstraintWitness {
  Int n, g, k;
  bool valid() const;
};

// One level of the genus recursion for curves in (P^1)^n: at level n and
// multidegree d the divisor e of d was chosen; absent at the base level.
struct DivisorStep {
  long long level = 0;
  Int d;
  std::optional<Int> e;
};

struct BoundReport {
  Int value;
  std::variant<std::vector<ConstraintWitness>, std::vector<DivisorStep>> witnesses;
  std::string statement;
  std::vector<std::string> notes;
};

// 2n - 1 - (g - k) - k(k+1)/2, exactly; n >= 1, k >= 0
Int kernel_dim_bound(const Int& n, const Int& g, const Int& k);

// minimum of max(n + k, 2n - 1 + k - k(k+1)/2) over k in [0, 2n], with
// every minimizing k recorded; for k >= 2n the first term already exceeds
// the value at k = 0, so the range is exhaustive
BoundReport min_genus_bruteforce(const Int& n);

// t(n): smallest k >= 0 with k(k+1)/2 >= n - 1
Int genus_corank_threshold(const Int& n);

// n + t(n), computed in integer arithmetic only
Int min_genus_closed_form(const Int& n);

// min(min_genus_closed_form(n), 2^floor((b2tr - 3)/2)); requires b2tr >= 5
Int fibgen_lower_bound(const Int& n, const Int& b2tr);

// min(n + 2, 2^floor((b2tr - 3)/2)); requires n >= 3 and b2tr >= 5
Int voisin_bound(const Int& n, const Int& b2tr);

// Curve of degree (d, ..., d) in (P^1)^n.
struct CurveClassP1n {
  long long n;
  Int d;
  CurveClassP1n(long long n, Int d);  // n >= 2, d >= 1
};

// (d - 1)^2
Int max_genus_p1n_bound(const CurveClassP1n& c);

// B(2, d) = (d-1)^2 and, for n >= 3,
// B(n, d) = max over divisors e of d of d*(B(n-1, e) + d - 1)/e - d + 1;
// all divisions are exact. The maximizing divisor chain is recorded.
BoundReport max_genus_p1n_recursive(const CurveClassP1n& c);

// (d/deg_phi - 1)^2; deg_phi must divide d
Int quotient_fiber_genus_bound(const Int& d, const Int& deg_phi);

}  // namespace irrlat::bounds
