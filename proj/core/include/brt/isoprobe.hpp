#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "brt/builders.hpp"

namespace brt {

/// Order m|m-n+1| of the abelianisation of the braided group; 0 means infinite.
long ab_order(const Params& p);

struct TorsionSet {
  std::vector<long> orders;  // ascending
  bool all_orders = false;   // set when |m-n+1| = 0, so every order divides it

  friend bool operator==(const TorsionSet& a, const TorsionSet& b) {
    return a.orders == b.orders && a.all_orders == b.all_orders;
  }
};

/// Orders l <= bound with l | m or l | |m-n+1|.
TorsionSet torsion_divisors(const Params& p, long bound);

enum class SolutionFamily {
  mirror,       // y = k - x
  param_small,  // x = d v (u+v), y = d u (u+v)
  param_large,  // x = d u (u-v), y = d u (u+v)
  unclassified,
};

std::string to_string(SolutionFamily f);

/// Solution of x|x-k| = y|y-k| with 0 <= x < y.
struct WeightedSolution {
  long k = 0;
  long x = 0;
  long y = 0;
  SolutionFamily family = SolutionFamily::unclassified;
  std::optional<std::array<long, 3>> params;  // (d, u, v) for the parametric families

  friend bool operator<(const WeightedSolution& a, const WeightedSolution& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  }
};

/// Exhaustive scan of 0 <= x < y <= bound, sorted by (x, y).
std::vector<WeightedSolution> brute_solutions(long k, long bound);
/// Mirror pairs plus both parametric families over k = d(u^2+v^2), u > v >= 1.
std::vector<WeightedSolution> parametric_solutions(long k);
bool same_pairs(const std::vector<WeightedSolution>& a, const std::vector<WeightedSolution>& b);
std::string solutions_json(const std::vector<WeightedSolution>& s);

enum class VerdictKind { SamePair, ComplementCandidate, Excluded };
std::string to_string(VerdictKind k);

struct Verdict {
  VerdictKind kind = VerdictKind::Excluded;
  std::vector<std::string> reasons;
  std::string note;

  std::string to_json() const;
};

/// (n,m) and (n, n-1-m) with 2 <= m <= (n-1)/2, in either order.
bool is_complement_pair(const Params& a, const Params& b);

Verdict verdict(const Params& a, const Params& b);

/// "(n,m) vs (r,s): Kind [reason; reason] (note)"
std::string verdict_line(const Params& a, const Params& b, const Verdict& v);

/// One line per ordered pair in [lo, hi]^4, skipping the diagonal.
std::string verdict_table(long lo, long hi);

}  // namespace brt
