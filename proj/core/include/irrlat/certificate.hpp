#pragma once

#include <string>
#include <variant>
#include <vector>

#include <irrlat/numeric.hpp>

namespace irrlat {

// base^(num/den) with a positive rational base. Comparisons against a
// rational are decided exactly by raising both sides to the den-th power.
struct PowerExpr {
  Rat base;
  long long num = 0;
  long long den = 1;

  PowerExpr(Rat base, long long num, long long den);  // normalizes
};

using CheckValue = std::variant<Rat, PowerExpr>;

// sign of base^(num/den) - r
int cmp(const PowerExpr& p, const Rat& r);

enum class Verdict { feasible, infeasible, hypothesis_error };
std::string to_string(Verdict v);

// One necessary condition, recorded with both sides evaluated exactly.
struct Check {
  std::string statement;
  CheckValue lhs;
  std::string rel;
  CheckValue rhs;
  bool pass = false;
};

// Aggregated verdict. "feasible" means no recorded necessary condition is
// violated; it never asserts existence.
struct FeasibilityCertificate {
  Verdict verdict = Verdict::infeasible;
  std::vector<Check> checks;
  std::vector<std::string> notes;

  bool feasible() const { return verdict == Verdict::feasible; }

  static FeasibilityCertificate from_checks(std::vector<Check> checks,
                                            std::vector<std::string> notes = {});
  static FeasibilityCertificate hypothesis_failure(std::string reason);
};

}  // namespace irrlat
