#include <irrlat/k3.hpp>

#include <thread>
#include <utility>

#include <irrlat/errors.hpp>

namespace irrlat::k3 {

namespace {

constexpr long long kDescriptorLimit = 1000000000LL;  // sanity cap on n, b2tr, rho

Int deg_pow(const MapHypothesis& h, unsigned long e) { return ipow(h.deg_phi, e); }

}  // namespace

K3Descriptor::K3Descriptor(Int d) : d_param(std::move(d)) {
  if (d_param < 2)
    throw invariant_error("K3Descriptor: d must be >= 2 (ample generator)");
}

Int K3Descriptor::disc_pic() const {
  Int r = 2 * (d_param - 1);
  return r;
}

HKDescriptor::HKDescriptor(long long n_, long long b2tr_, long long rho_, Int disc)
    : n(n_), b2tr(b2tr_), rho(rho_), disc_pic(std::move(disc)) {
  if (n < 1) throw invariant_error("HKDescriptor: n must be >= 1");
  if (b2tr < 2) throw invariant_error("HKDescriptor: b2tr must be >= 2");
  if (rho < 1) throw invariant_error("HKDescriptor: rho must be >= 1");
  if (disc_pic == 0) throw invariant_error("HKDescriptor: disc_pic must be nonzero");
  if (n > kDescriptorLimit || b2tr > kDescriptorLimit || rho > kDescriptorLimit)
    throw invariant_error("HKDescriptor: invariant out of supported range");
}

long long HKDescriptor::lambda() const { return std::min(rho, b2tr); }

HKDescriptor as_hk(const K3Descriptor& s) {
  return HKDescriptor(1, K3Descriptor::b2tr, K3Descriptor::rho, s.disc_pic());
}

MapHypothesis::MapHypothesis(Int deg) : deg_phi(std::move(deg)) {
  if (deg_phi < 1) throw invariant_error("MapHypothesis: deg_phi must be >= 1");
}

Rat k3_index_squared(const K3Descriptor& src, const K3Descriptor& tgt,
                     const MapHypothesis& h) {
  Int num = deg_pow(h, 21) * (tgt.d_param - 1);
  Int den = src.d_param - 1;
  return make_rat(std::move(num), std::move(den));
}

FeasibilityCertificate k3_map_feasible(const K3Descriptor& src,
                                       const K3Descriptor& tgt,
                                       const MapHypothesis& h) {
  const Int m21 = deg_pow(h, 21);
  const Rat ratio = make_rat(src.d_param - 1, tgt.d_param - 1);
  const Rat lower = make_rat(Int(1), m21);
  const Rat upper(m21);

  std::vector<Check> checks;
  checks.push_back(
      Check{"degree-window-lower", lower, "<=", ratio, lower <= ratio});
  checks.push_back(
      Check{"degree-window-upper", ratio, "<=", upper, ratio <= upper});

  const Rat index_sq = k3_index_squared(src, tgt, h);
  const std::optional<Int> index = exact_integer_sqrt(index_sq);
  checks.push_back(Check{"index-squared-integer-square", index_sq,
                         "square-of-positive-integer",
                         index ? Rat(*index) : Rat(0),
                         index.has_value()});
  if (index) {
    checks.push_back(
        Check{"index-at-least-one", Rat(1), "<=", Rat(*index), *index >= 1});
    checks.push_back(
        Check{"index-at-most-deg21", Rat(*index), "<=", upper, *index <= m21});
  }

  std::vector<std::string> notes = {
      "feasible records that no necessary condition is violated; it does "
      "not assert that a dominant rational map exists"};
  return FeasibilityCertificate::from_checks(std::move(checks), std::move(notes));
}

namespace {

void sweep_range(const K3Descriptor& src, const MapHypothesis& h, Int from,
                 const Int& to, std::vector<std::pair<K3Descriptor, Int>>& out) {
  for (Int d = std::move(from); d <= to; ++d) {
    K3Descriptor tgt(d);
    if (k3_map_feasible(src, tgt, h).feasible()) {
      Int index = *exact_integer_sqrt(k3_index_squared(src, tgt, h));
      out.emplace_back(std::move(tgt), std::move(index));
    }
  }
}

}  // namespace

std::vector<std::pair<K3Descriptor, Int>> enumerate_feasible_targets(
    const K3Descriptor& src, const MapHypothesis& h, const Int& d_max,
    unsigned jobs) {
  if (d_max < 2) throw invariant_error("enumerate_feasible_targets: d_max must be >= 2");
  std::vector<std::pair<K3Descriptor, Int>> out;
  if (jobs <= 1) {
    sweep_range(src, h, Int(2), d_max, out);
    return out;
  }

  const Int span = d_max - 1;  // number of candidates in [2, d_max]
  std::vector<std::vector<std::pair<K3Descriptor, Int>>> parts(jobs);
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < jobs; ++w) {
    Int lo = 2 + span * w / jobs;
    Int hi = 2 + span * (w + 1) / jobs - 1;
    if (w == jobs - 1) hi = d_max;
    workers.emplace_back([&src, &h, lo, hi, &parts, w] {
      sweep_range(src, h, lo, hi, parts[w]);
    });
  }
  for (auto& t : workers) t.join();
  for (auto& part : parts)
    for (auto& item : part) out.push_back(std::move(item));
  return out;
}

Window hk_disc_ratio_window(const HKDescriptor& x, const MapHypothesis& h) {
  const Rat base(h.deg_phi);
  // (1/n - 2) * b2tr = (1 - 2n) * b2tr / n
  const long long lo_num = (1 - 2 * x.n) * x.b2tr;
  return Window{PowerExpr(base, lo_num, x.n), PowerExpr(base, x.b2tr, x.n)};
}

Window k3_disc_ratio_window(const HKDescriptor& x, const MapHypothesis& h) {
  const Rat base(h.deg_phi);
  return Window{PowerExpr(base, -x.lambda(), 1), PowerExpr(base, x.b2tr, 1)};
}

FeasibilityCertificate check_disc_ratio(const HKDescriptor& src,
                                        const HKDescriptor& tgt,
                                        const MapHypothesis& h,
                                        WindowKind kind) {
  if (src.b2tr != tgt.b2tr)
    return FeasibilityCertificate::hypothesis_failure(
        "b2tr mismatch: dominant rational maps preserve the transcendental rank");
  if (src.n != tgt.n)
    return FeasibilityCertificate::hypothesis_failure(
        "dimension mismatch: descriptors must share n");
  if (kind == WindowKind::k3 && src.n != 1)
    return FeasibilityCertificate::hypothesis_failure(
        "surface window requires n = 1");

  const Window w = kind == WindowKind::hk ? hk_disc_ratio_window(src, h)
                                          : k3_disc_ratio_window(src, h);
  const char* suffix = kind == WindowKind::hk ? "-hk" : "-k3";
  Rat ratio = abs(make_rat(src.disc_pic, tgt.disc_pic));

  std::vector<Check> checks;
  checks.push_back(Check{std::string("disc-ratio-lower") + suffix, w.lo, "<=",
                         ratio, cmp(w.lo, ratio) <= 0});
  checks.push_back(Check{std::string("disc-ratio-upper") + suffix, ratio, "<=",
                         w.hi, cmp(w.hi, ratio) >= 0});
  return FeasibilityCertificate::from_checks(std::move(checks));
}

RescaleFactor bbf_pullback_rescale(long long n, const MapHypothesis& h) {
  if (n < 1) throw invariant_error("bbf_pullback_rescale: n must be >= 1");
  if (n > kDescriptorLimit)
    throw invariant_error("bbf_pullback_rescale: n out of supported range");
  RescaleFactor r{PowerExpr(Rat(h.deg_phi), 1, n), false, std::nullopt,
                  h.deg_phi};
  if (auto root = exact_root(h.deg_phi, static_cast<unsigned long>(n))) {
    r.exact = true;
    r.integer_factor = std::move(*root);
  }
  return r;
}

}  // namespace irrlat::k3
