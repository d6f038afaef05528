#include "brt/isoprobe.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace brt {

long ab_order(const Params& p) { return p.m * std::labs(p.m - p.n + 1); }

TorsionSet torsion_divisors(const Params& p, long bound) {
  if (bound < 1) throw std::invalid_argument("torsion_divisors: bound must be >= 1");
  const long c = std::labs(p.m - p.n + 1);
  TorsionSet t;
  t.all_orders = c == 0;
  for (long l = 1; l <= bound; ++l)
    if (p.m % l == 0 || c == 0 || c % l == 0) t.orders.push_back(l);
  return t;
}

std::string to_string(SolutionFamily f) {
  switch (f) {
    case SolutionFamily::mirror: return "mirror";
    case SolutionFamily::param_small: return "param_small";
    case SolutionFamily::param_large: return "param_large";
    case SolutionFamily::unclassified: break;
  }
  return "unclassified";
}

namespace {

long weight(long x, long k) { return x * std::labs(x - k); }

// All (d, u, v) with k = d(u^2 + v^2), u > v >= 1.
std::vector<std::array<long, 3>> decompositions(long k) {
  std::vector<std::array<long, 3>> out;
  for (long d = 1; d <= k; ++d) {
    if (k % d) continue;
    const long s = k / d;
    for (long v = 1; 2 * v * v < s; ++v)
      for (long u = v + 1; u * u + v * v <= s; ++u)
        if (u * u + v * v == s) out.push_back({d, u, v});
  }
  return out;
}

void classify(WeightedSolution& s) {
  if (s.y == s.k - s.x) {
    s.family = SolutionFamily::mirror;
    return;
  }
  for (const auto& [d, u, v] : decompositions(s.k)) {
    if (s.y != d * u * (u + v)) continue;
    if (s.x == d * v * (u + v)) {
      s.family = SolutionFamily::param_small;
      s.params = std::array<long, 3>{d, u, v};
      return;
    }
    if (s.x == d * u * (u - v)) {
      s.family = SolutionFamily::param_large;
      s.params = std::array<long, 3>{d, u, v};
      return;
    }
  }
}

}  // namespace

std::vector<WeightedSolution> brute_solutions(long k, long bound) {
  if (k < 1) throw std::invalid_argument("brute_solutions: k must be >= 1");
  if (bound < k) throw std::invalid_argument("brute_solutions: bound must be >= k");
  std::map<long, std::vector<long>> by_weight;
  for (long x = 0; x <= bound; ++x) by_weight[weight(x, k)].push_back(x);
  std::vector<WeightedSolution> out;
  for (const auto& [w, xs] : by_weight)
    for (std::size_t a = 0; a < xs.size(); ++a)
      for (std::size_t b = a + 1; b < xs.size(); ++b) {
        WeightedSolution s{k, xs[a], xs[b], SolutionFamily::unclassified, std::nullopt};
        classify(s);
        out.push_back(std::move(s));
      }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<WeightedSolution> parametric_solutions(long k) {
  if (k < 1) throw std::invalid_argument("parametric_solutions: k must be >= 1");
  std::vector<WeightedSolution> out;
  for (long x = 0; 2 * x < k; ++x) out.push_back({k, x, k - x, SolutionFamily::mirror, std::nullopt});
  for (const auto& [d, u, v] : decompositions(k)) {
    out.push_back({k, d * v * (u + v), d * u * (u + v), SolutionFamily::param_small,
                   std::array<long, 3>{d, u, v}});
    out.push_back({k, d * u * (u - v), d * u * (u + v), SolutionFamily::param_large,
                   std::array<long, 3>{d, u, v}});
  }
  std::stable_sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end(),
                        [](const auto& a, const auto& b) { return a.x == b.x && a.y == b.y; }),
            out.end());
  return out;
}

bool same_pairs(const std::vector<WeightedSolution>& a, const std::vector<WeightedSolution>& b) {
  auto pairs = [](const std::vector<WeightedSolution>& s) {
    std::vector<std::pair<long, long>> out;
    for (const auto& w : s) out.emplace_back(w.x, w.y);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };
  return pairs(a) == pairs(b);
}

std::string solutions_json(const std::vector<WeightedSolution>& s) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& w : s) {
    nlohmann::ordered_json j;
    j["k"] = w.k;
    j["x"] = w.x;
    j["y"] = w.y;
    j["family"] = to_string(w.family);
    if (w.params) j["params"] = {(*w.params)[0], (*w.params)[1], (*w.params)[2]};
    arr.push_back(std::move(j));
  }
  return arr.dump(2);
}

// ---------------------------------------------------------------- verdicts

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::SamePair: return "SamePair";
    case VerdictKind::ComplementCandidate: return "ComplementCandidate";
    case VerdictKind::Excluded: return "Excluded";
  }
  return "Excluded";
}

std::string Verdict::to_json() const {
  nlohmann::ordered_json j;
  j["kind"] = to_string(kind);
  j["reasons"] = reasons;
  if (!note.empty()) j["note"] = note;
  return j.dump(2);
}

bool is_complement_pair(const Params& a, const Params& b) {
  if (a.n != b.n) return false;
  const Params& lo = a.m <= b.m ? a : b;
  const Params& hi = a.m <= b.m ? b : a;
  return hi.m == lo.n - 1 - lo.m && lo.m >= 2 && 2 * lo.m <= lo.n - 1 && lo.m != hi.m;
}

namespace {

std::string order_text(long o) { return o == 0 ? "infinite" : std::to_string(o); }

std::string torsion_text(const TorsionSet& t) {
  if (t.all_orders) return "all orders";
  std::string out = "{";
  for (std::size_t i = 0; i < t.orders.size(); ++i) out += (i ? "," : "") + std::to_string(t.orders[i]);
  return out + "}";
}

}  // namespace

Verdict verdict(const Params& a, const Params& b) {
  Verdict v;
  if (a == b) {
    v.kind = VerdictKind::SamePair;
    return v;
  }
  if (a.n != b.n) v.reasons.push_back("n ≠ r");
  const long oa = ab_order(a), ob = ab_order(b);
  if (oa != ob)
    v.reasons.push_back("abelianisation orders " + order_text(oa) + " ≠ " + order_text(ob));
  const long bound = std::max({a.m, b.m, std::labs(a.m - a.n + 1), std::labs(b.m - b.n + 1), 1L});
  const TorsionSet ta = torsion_divisors(a, bound), tb = torsion_divisors(b, bound);
  if (!(ta == tb))
    v.reasons.push_back("torsion orders " + torsion_text(ta) + " ≠ " + torsion_text(tb));
  if (!v.reasons.empty()) {
    v.kind = VerdictKind::Excluded;
    return v;
  }
  if (is_complement_pair(a, b)) {
    v.kind = VerdictKind::ComplementCandidate;
    v.note = "open per Conjecture";
    return v;
  }
  v.kind = VerdictKind::Excluded;
  v.note = "no implemented obstruction separates this pair";
  return v;
}

std::string verdict_line(const Params& a, const Params& b, const Verdict& v) {
  std::ostringstream out;
  out << "(" << a.n << "," << a.m << ") vs (" << b.n << "," << b.m << "): " << to_string(v.kind);
  for (std::size_t i = 0; i < v.reasons.size(); ++i) out << (i ? "; " : " [") << v.reasons[i];
  if (!v.reasons.empty()) out << "]";
  if (!v.note.empty()) out << " (" << v.note << ")";
  return out.str();
}

std::string verdict_table(long lo, long hi) {
  std::string out;
  for (long n = lo; n <= hi; ++n)
    for (long m = lo; m <= hi; ++m)
      for (long r = lo; r <= hi; ++r)
        for (long s = lo; s <= hi; ++s) {
          if (n == r && m == s) continue;
          const Params a(n, m), b(r, s);
          out += verdict_line(a, b, verdict(a, b));
          out += '\n';
        }
  return out;
}

}  // namespace brt
