#include <irrlat/certificate.hpp>

#include <algorithm>
#include <numeric>
#include <utility>

#include <irrlat/errors.hpp>

namespace irrlat {

PowerExpr::PowerExpr(Rat b, long long n, long long d)
    : base(std::move(b)), num(n), den(d) {
  if (den == 0) throw invariant_error("PowerExpr: zero exponent denominator");
  if (base <= 0) throw invariant_error("PowerExpr: base must be positive");
  base.canonicalize();
  if (den < 0) {
    den = -den;
    num = -num;
  }
  if (num == 0) {
    den = 1;
  } else {
    const long long g = std::gcd(num, den);
    num /= g;
    den /= g;
  }
}

int cmp(const PowerExpr& p, const Rat& r) {
  if (r <= 0) return 1;  // positive base, so the power is > 0 >= r
  // base^(num/den) vs r  <=>  base^num vs r^den
  const Rat lhs = qpow(p.base, p.num);
  const Rat rhs = qpow(r, p.den);
  return ::cmp(lhs, rhs);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::feasible: return "feasible";
    case Verdict::infeasible: return "infeasible";
    case Verdict::hypothesis_error: return "hypothesis_error";
  }
  return "infeasible";
}

FeasibilityCertificate FeasibilityCertificate::from_checks(
    std::vector<Check> checks, std::vector<std::string> notes) {
  FeasibilityCertificate cert;
  cert.checks = std::move(checks);
  cert.notes = std::move(notes);
  const bool all_pass = std::all_of(cert.checks.begin(), cert.checks.end(),
                                    [](const Check& c) { return c.pass; });
  cert.verdict = all_pass ? Verdict::feasible : Verdict::infeasible;
  return cert;
}

FeasibilityCertificate FeasibilityCertificate::hypothesis_failure(
    std::string reason) {
  FeasibilityCertificate cert;
  cert.verdict = Verdict::hypothesis_error;
  cert.notes.push_back(std::move(reason));
  return cert;
}

}  // namespace irrlat
