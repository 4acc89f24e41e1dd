#include <irrlat/bounds.hpp>

#include <algorithm>
#include <map>
#include <utility>

#include <irrlat/errors.hpp>

namespace irrlat::bounds {

namespace {

// k range [0, 2n] is exhaustive: max(n+k, ...) >= n+k, and at k = 2n the
// first term n+k = 3n already exceeds the value 2n-1 attained at k = 0.
// The loop stops as soon as n+k exceeds the best value seen, which cannot
// skip a minimizer because every value at larger k is at least n+k.
template <class I>
std::pair<I, std::vector<I>> brute_min_genus(const I& n) {
  I best = -1;
  std::vector<I> minimizers;
  I tri = 0;  // k(k+1)/2
  const I kmax = 2 * n;
  for (I k = 0; k <= kmax; ++k) {
    if (k > 0) tri += k;
    I term1 = n + k;
    if (best >= 0 && term1 > best) break;
    I term2 = 2 * n - 1 + k - tri;
    I value = term1 < term2 ? term2 : term1;
    if (best < 0 || value < best) {
      best = value;
      minimizers.clear();
      minimizers.push_back(k);
    } else if (value == best) {
      minimizers.push_back(k);
    }
  }
  return {best, minimizers};
}

constexpr long kFastPathLimit = 1000000000000000L;  // 10^15

}  // namespace

bool ConstraintWitness::valid() const {
  if (k < 0) return false;
  if (g - k - n < 0) return false;
  Int third = 2 * n - 1 - (g - k) - k * (k + 1) / 2;
  return third <= 0;
}

Int kernel_dim_bound(const Int& n, const Int& g, const Int& k) {
  if (n < 1) throw invariant_error("kernel_dim_bound: n must be >= 1");
  if (k < 0) throw invariant_error("kernel_dim_bound: k must be >= 0");
  Int r = 2 * n - 1 - (g - k) - k * (k + 1) / 2;
  return r;
}

BoundReport min_genus_bruteforce(const Int& n) {
  if (n < 1) throw invariant_error("min_genus_bruteforce: n must be >= 1");

  BoundReport report;
  report.statement = "genus-min-bruteforce";
  std::vector<ConstraintWitness> witnesses;

  if (n <= kFastPathLimit) {
    auto [best, ks] = brute_min_genus<long>(n.get_si());
    report.value = best;
    for (long k : ks) witnesses.push_back({n, Int(best), Int(k)});
  } else {
    auto [best, ks] = brute_min_genus<Int>(n);
    report.value = best;
    for (Int& k : ks) witnesses.push_back({n, best, std::move(k)});
  }
  report.witnesses = std::move(witnesses);
  if (n == 1)
    report.notes.push_back(
        "n = 1 reduces to g >= 1: K3 surfaces cannot be fibered into rational curves");
  return report;
}

Int genus_corank_threshold(const Int& n) {
  if (n < 1) throw invariant_error("genus_corank_threshold: n must be >= 1");
  if (n == 1) return 0;
  const Int c = n - 1;  // want smallest k with k(k+1)/2 >= c
  Int disc = 8 * c + 1;
  Int k = (isqrt(disc) - 1) / 2;
  while (k > 0 && (k - 1) * k / 2 >= c) --k;
  while (k * (k + 1) / 2 < c) ++k;
  return k;
}

Int min_genus_closed_form(const Int& n) {
  if (n < 1) throw invariant_error("min_genus_closed_form: n must be >= 1");
  Int r = n + genus_corank_threshold(n);
  return r;
}

namespace {

// min(value, 2^exp) without materializing 2^exp when it is the larger side
Int min_with_power_of_two(const Int& value, const Int& exp) {
  const Int bits(static_cast<unsigned long>(bit_length(value)));
  if (bits <= exp) return value;  // value < 2^bits <= 2^exp
  Int p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, exp.get_ui());
  return p;
}

}  // namespace

Int fibgen_lower_bound(const Int& n, const Int& b2tr) {
  if (n < 1) throw invariant_error("fibgen_lower_bound: n must be >= 1");
  if (b2tr < 5)
    throw hypothesis_error("fibgen_lower_bound: requires b2tr >= 5");
  Int closed = min_genus_closed_form(n);
  Int exp = (b2tr - 3) / 2;
  return min_with_power_of_two(closed, exp);
}

Int voisin_bound(const Int& n, const Int& b2tr) {
  if (n < 3) throw hypothesis_error("voisin_bound: requires n >= 3");
  if (b2tr < 5) throw hypothesis_error("voisin_bound: requires b2tr >= 5");
  Int base = n + 2;
  Int exp = (b2tr - 3) / 2;
  return min_with_power_of_two(base, exp);
}

CurveClassP1n::CurveClassP1n(long long n_, Int d_) : n(n_), d(std::move(d_)) {
  if (n < 2) throw invariant_error("CurveClassP1n: n must be >= 2");
  if (d < 1) throw invariant_error("CurveClassP1n: d must be >= 1");
}

Int max_genus_p1n_bound(const CurveClassP1n& c) {
  Int r = (c.d - 1) * (c.d - 1);
  return r;
}

namespace {

// ascending divisors by trial division; d is a multidegree at desk scale
std::vector<Int> divisors(const Int& d) {
  if (d > Int("1000000000000"))
    throw invariant_error("divisors: d too large for trial division");
  std::vector<Int> small, large;
  for (Int f = 1; f * f <= d; ++f) {
    if (d % f == 0) {
      small.push_back(f);
      Int q = d / f;
      if (q != f) large.push_back(q);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

struct P1nEntry {
  Int value;
  std::optional<Int> best_e;  // smallest maximizing divisor; none at level 2
};

const P1nEntry& p1n_bound(std::map<std::pair<long long, Int>, P1nEntry>& memo,
                          long long level, const Int& d) {
  auto it = memo.find({level, d});
  if (it != memo.end()) return it->second;
  P1nEntry entry;
  if (level == 2) {
    entry.value = (d - 1) * (d - 1);
  } else {
    bool first = true;
    for (const Int& e : divisors(d)) {
      const Int sub = p1n_bound(memo, level - 1, e).value;
      Int candidate = d * (sub + d - 1) / e - d + 1;  // e | d, division exact
      if (first || candidate > entry.value) {
        entry.value = candidate;
        entry.best_e = e;
        first = false;
      }
    }
  }
  return memo.emplace(std::make_pair(level, d), std::move(entry)).first->second;
}

}  // namespace

BoundReport max_genus_p1n_recursive(const CurveClassP1n& c) {
  std::map<std::pair<long long, Int>, P1nEntry> memo;
  BoundReport report;
  report.statement = "genus-p1n-recursive";
  report.value = p1n_bound(memo, c.n, c.d).value;

  std::vector<DivisorStep> chain;
  long long level = c.n;
  Int d = c.d;
  while (level > 2) {
    const P1nEntry& entry = memo.at({level, d});
    chain.push_back({level, d, entry.best_e});
    d = *entry.best_e;
    --level;
  }
  chain.push_back({2, d, std::nullopt});
  report.witnesses = std::move(chain);
  return report;
}

Int quotient_fiber_genus_bound(const Int& d, const Int& deg_phi) {
  if (d < 1) throw invariant_error("quotient_fiber_genus_bound: d must be >= 1");
  if (deg_phi < 1)
    throw invariant_error("quotient_fiber_genus_bound: deg_phi must be >= 1");
  if (d % deg_phi != 0)
    throw hypothesis_error(
        "quotient_fiber_genus_bound: deg_phi must divide d");
  Int q = d / deg_phi - 1;
  return q * q;
}

}  // namespace irrlat::bounds
