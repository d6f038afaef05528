#include "brt/braid.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace brt {

// ---------------------------------------------------------------- words

ArtinWord::ArtinWord(int strands_, std::vector<int> letters_)
    : strands(strands_), letters(std::move(letters_)) {
  if (strands < 2 || strands > 64) throw std::invalid_argument("strand count must be in 2..64");
  for (int l : letters)
    if (l == 0 || std::abs(l) >= strands)
      throw std::invalid_argument("braid letter " + std::to_string(l) + " out of range for " +
                                  std::to_string(strands) + " strands");
}

ArtinWord ArtinWord::inverse() const {
  ArtinWord w;
  w.strands = strands;
  w.letters.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.letters.push_back(-*it);
  return w;
}

ArtinWord operator*(const ArtinWord& a, const ArtinWord& b) {
  if (a.strands != b.strands) throw std::invalid_argument("braid product: strand mismatch");
  ArtinWord w = a;
  w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
  return w;
}

ArtinWord ArtinWord::power(long k) const {
  const ArtinWord base = k < 0 ? inverse() : *this;
  ArtinWord w;
  w.strands = strands;
  for (long i = 0; i < std::labs(k); ++i)
    w.letters.insert(w.letters.end(), base.letters.begin(), base.letters.end());
  return w;
}

std::string ArtinWord::to_string() const {
  if (letters.empty()) return "1";
  std::string out;
  for (int l : letters) {
    if (!out.empty()) out += ' ';
    out += "s" + std::to_string(std::abs(l));
    if (l < 0) out += "^-1";
  }
  return out;
}

std::string ArtinWord::to_json() const { return nlohmann::json(letters).dump(); }

ArtinWord delta_word(int strands) {
  std::vector<int> letters;
  for (int i = strands - 1; i >= 1; --i)
    for (int j = 1; j <= i; ++j) letters.push_back(j);
  return ArtinWord(strands, std::move(letters));
}

Permutation underlying_permutation(const ArtinWord& w) {
  Permutation p(static_cast<std::size_t>(w.strands));
  std::iota(p.begin(), p.end(), std::uint8_t{0});
  for (int l : w.letters) {
    const auto i = static_cast<std::uint8_t>(std::abs(l) - 1);
    for (auto& v : p) {
      if (v == i)
        v = static_cast<std::uint8_t>(i + 1);
      else if (v == i + 1)
        v = i;
    }
  }
  return p;
}

// ---------------------------------------------------------------- Garside form

namespace {

// Conventions: perm[p] is where the strand starting at position p ends up;
// the product AB (A first) has perm[p] = B[A[p]].

Permutation identity_perm(int s) {
  Permutation p(static_cast<std::size_t>(s));
  std::iota(p.begin(), p.end(), std::uint8_t{0});
  return p;
}

Permutation delta_perm(int s) {
  Permutation p(static_cast<std::size_t>(s));
  for (int i = 0; i < s; ++i) p[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(s - 1 - i);
  return p;
}

// Delta A Delta^{-1}.
Permutation flip(const Permutation& a) {
  const std::size_t s = a.size();
  Permutation out(s);
  for (std::size_t p = 0; p < s; ++p) out[p] = static_cast<std::uint8_t>(s - 1 - a[s - 1 - p]);
  return out;
}

bool crosses_at_start(const Permutation& b, std::size_t i) { return b[i] > b[i + 1]; }

bool crosses_at_end(const Permutation& a, std::size_t i) {
  // Strands ending at positions i, i+1 crossed: their starting positions are inverted.
  std::size_t from_i = 0, from_j = 0;
  for (std::size_t p = 0; p < a.size(); ++p) {
    if (a[p] == i) from_i = p;
    if (a[p] == i + 1) from_j = p;
  }
  return from_i > from_j;
}

// Moves sigma_{i+1} from the front of B to the back of A until S(B) is in F(A).
bool left_weight(Permutation& a, Permutation& b) {
  bool changed = false;
  const std::size_t s = a.size();
  for (bool again = true; again;) {
    again = false;
    for (std::size_t i = 0; i + 1 < s; ++i) {
      if (crosses_at_start(b, i) && !crosses_at_end(a, i)) {
        for (auto& v : a) {
          if (v == i)
            v = static_cast<std::uint8_t>(i + 1);
          else if (v == i + 1)
            v = static_cast<std::uint8_t>(i);
        }
        std::swap(b[i], b[i + 1]);
        again = changed = true;
      }
    }
  }
  return changed;
}

}  // namespace

GarsideNF garside_nf(const ArtinWord& w) {
  const int s = w.strands;
  const Permutation id = identity_perm(s);
  const Permutation delta = delta_perm(s);

  // w = Delta^{-neg} * prod X_t, where X_t = sigma_i or sigma_i^{-1} Delta, each
  // flipped once per negative letter at or after it.
  std::vector<Permutation> factors;
  factors.reserve(w.letters.size());
  long negatives_from_here = static_cast<long>(std::count_if(w.letters.begin(), w.letters.end(),
                                                        [](int l) { return l < 0; }));
  const long total_negative = negatives_from_here;
  for (int l : w.letters) {
    const auto i = static_cast<std::size_t>(std::abs(l) - 1);
    Permutation x = id;
    std::swap(x[i], x[i + 1]);
    if (l < 0)
      for (auto& v : x) v = static_cast<std::uint8_t>(s - 1 - v);  // sigma_i^{-1} then Delta
    if (negatives_from_here % 2) x = flip(x);
    if (l < 0) --negatives_from_here;
    factors.push_back(std::move(x));
  }

  for (bool again = true; again;) {
    again = false;
    for (std::size_t k = 0; k + 1 < factors.size(); ++k)
      if (left_weight(factors[k], factors[k + 1])) again = true;
  }

  GarsideNF nf;
  nf.strands = s;
  nf.delta_power = -total_negative;
  std::size_t first = 0;
  while (first < factors.size() && factors[first] == delta) ++first;
  nf.delta_power += static_cast<long>(first);
  std::size_t last = factors.size();
  while (last > first && factors[last - 1] == id) --last;
  nf.factors.assign(factors.begin() + static_cast<std::ptrdiff_t>(first),
                    factors.begin() + static_cast<std::ptrdiff_t>(last));
  return nf;
}

bool braid_equal(const ArtinWord& a, const ArtinWord& b) {
  if (a.strands != b.strands) throw std::invalid_argument("braid_equal: strand mismatch");
  return garside_nf(a * b.inverse()).is_identity();
}

std::string GarsideNF::to_string() const {
  std::string out = "D^" + std::to_string(delta_power);
  for (const auto& f : factors) {
    out += " [";
    for (std::size_t i = 0; i < f.size(); ++i) out += (i ? "," : "") + std::to_string(f[i]);
    out += "]";
  }
  return out;
}

// ---------------------------------------------------------------- embeddings

int PlanarTreeEmbedding::position(int puncture) const {
  const auto it = std::find(line_order.begin(), line_order.end(), puncture);
  if (it == line_order.end()) throw std::invalid_argument("puncture not on the line");
  return static_cast<int>(it - line_order.begin()) + 1;
}

bool PlanarTreeEmbedding::has_edge(int a, int b) const {
  return std::any_of(edges.begin(), edges.end(), [&](const auto& e) {
    return (e.first == a && e.second == b) || (e.first == b && e.second == a);
  });
}

void PlanarTreeEmbedding::validate() const {
  if (punctures < 1) throw std::invalid_argument("embedding needs at least one puncture");
  std::vector<int> sorted = line_order;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> expect(static_cast<std::size_t>(punctures));
  std::iota(expect.begin(), expect.end(), 0);
  if (sorted != expect) throw std::invalid_argument("line order is not a permutation of the punctures");
  if (edges.size() != static_cast<std::size_t>(punctures - 1))
    throw std::invalid_argument("edge count does not match a tree");
  std::vector<int> parent(static_cast<std::size_t>(punctures));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x)
      x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (const auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= punctures || b >= punctures || a == b)
      throw std::invalid_argument("edge endpoint out of range");
    const int ra = find(a), rb = find(b);
    if (ra == rb) throw std::invalid_argument("edges contain a cycle");
    parent[static_cast<std::size_t>(ra)] = rb;
  }
  for (std::size_t x = 0; x < edges.size(); ++x)
    for (std::size_t y = x + 1; y < edges.size(); ++y) {
      const int px = position(edges[x].first), qx = position(edges[x].second);
      const int py = position(edges[y].first), qy = position(edges[y].second);
      const int a = std::min(px, qx), b = std::max(px, qx);
      const int c = std::min(py, qy), d = std::max(py, qy);
      if ((a < c && c < b && b < d) || (c < a && a < d && d < b))
        throw std::invalid_argument("arcs cross in the one-page embedding");
    }
}

std::vector<std::pair<int, int>> PlanarTreeEmbedding::rotation_at(int vertex) const {
  const int x = position(vertex);
  std::vector<std::pair<int, std::pair<int, int>>> right, left;
  for (const auto& e : edges) {
    if (e.first != vertex && e.second != vertex) continue;
    const int y = position(e.first == vertex ? e.second : e.first);
    (y > x ? right : left).push_back({y, e});
  }
  std::sort(right.begin(), right.end());
  std::sort(left.begin(), left.end());
  std::vector<std::pair<int, int>> out;
  for (const auto& r : right) out.push_back(r.second);
  for (const auto& l : left) out.push_back(l.second);
  return out;
}

PlanarTreeEmbedding embed_tree(int punctures, std::vector<std::pair<int, int>> edges) {
  PlanarTreeEmbedding e;
  e.punctures = punctures;
  e.edges = std::move(edges);
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(punctures));
  for (const auto& [a, b] : e.edges) {
    if (a < 0 || b < 0 || a >= punctures || b >= punctures)
      throw std::invalid_argument("edge endpoint out of range");
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  std::vector<bool> seen(static_cast<std::size_t>(punctures), false);
  auto dfs = [&](auto&& self, int v) -> void {
    seen[static_cast<std::size_t>(v)] = true;
    e.line_order.push_back(v);
    for (int w : adj[static_cast<std::size_t>(v)])
      if (!seen[static_cast<std::size_t>(w)]) self(self, w);
  };
  if (punctures > 0) dfs(dfs, 0);
  e.validate();
  return e;
}

PlanarTreeEmbedding sigma_tree_embedding(const Params& p, int k) {
  const int h = stabilizer_height(p);
  if (k < 0 || k > h - 1)
    throw std::out_of_range("tree height " + std::to_string(k) + " outside 0.." + std::to_string(h - 1));
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= std::min<long>(k, p.m); ++i) edges.emplace_back(0, i);
  for (int i = static_cast<int>(p.m) + 1; i <= std::min(k, 4); ++i) edges.emplace_back(1, i);
  if (p.n == 2 && p.m == 2 && k == 5) edges.emplace_back(2, 5);
  return embed_tree(k + 1, std::move(edges));
}

ArtinWord band_word(const PlanarTreeEmbedding& e, std::pair<int, int> edge) {
  if (!e.has_edge(edge.first, edge.second))
    throw std::invalid_argument("band_word: (" + std::to_string(edge.first) + "," +
                                std::to_string(edge.second) + ") is not an edge");
  const int pa = e.position(edge.first), pb = e.position(edge.second);
  const int i = std::min(pa, pb), j = std::max(pa, pb);
  std::vector<int> letters;
  for (int q = j - 1; q > i; --q) letters.push_back(q);
  letters.push_back(i);
  for (int q = i + 1; q <= j - 1; ++q) letters.push_back(-q);
  return ArtinWord(std::max(e.punctures, 2), std::move(letters));
}

std::pair<int, int> tau_edge(const Params& p, int i) {
  const int top = hbar(p);
  if (i < 1 || i > top)
    throw std::out_of_range("twist index " + std::to_string(i) + " outside 1.." + std::to_string(top));
  if (i <= p.m) return {0, i};
  if (i <= 4) return {1, i};
  return {2, 5};
}

ArtinWord tau_word(const Params& p, int i) {
  return band_word(sigma_tree_embedding(p, stabilizer_height(p) - 1), tau_edge(p, i));
}

VerificationReport verify_braid_relators(const Params& p) {
  VerificationReport report;
  report.subject = "braid relations of brT_{" + std::to_string(p.n) + "," + std::to_string(p.m) + "}";
  std::vector<ArtinWord> tau;
  for (int i = 1; i <= hbar(p); ++i) tau.push_back(tau_word(p, i));
  const int strands = tau.front().strands;
  const RelatorFamilies fam = relator_families(p);
  for (const auto& family : fam.braid)
    for (const auto& rel : family) {
      ArtinWord w(strands, {});
      for (const auto& s : rel.word.syllables()) {
        const auto idx = std::stoul(s.generator.substr(1));
        w = w * tau.at(idx - 1).power(s.exponent.get_si());
      }
      report.checks.push_back({rel.label, rel.word.to_string(), garside_nf(w).is_identity()});
    }
  return report;
}

VerificationReport verify_sergiescu(const PlanarTreeEmbedding& e) {
  e.validate();
  VerificationReport report;
  report.subject = "tree relations on " + std::to_string(e.punctures) + " punctures";
  auto name = [](const std::pair<int, int>& x) {
    return "e" + std::to_string(x.first) + "_" + std::to_string(x.second);
  };
  auto band = [&](const std::pair<int, int>& x) { return band_word(e, x); };
  for (std::size_t x = 0; x < e.edges.size(); ++x)
    for (std::size_t y = x + 1; y < e.edges.size(); ++y) {
      const auto& f = e.edges[x];
      const auto& g = e.edges[y];
      const ArtinWord a = band(f), b = band(g);
      const bool share = f.first == g.first || f.first == g.second || f.second == g.first ||
                         f.second == g.second;
      if (share) {
        report.checks.push_back({"adjacency_" + name(f) + "_" + name(g),
                                 name(f) + " " + name(g) + " " + name(f) + " = " + name(g) + " " +
                                     name(f) + " " + name(g),
                                 braid_equal(a * b * a, b * a * b)});
      } else {
        report.checks.push_back({"disjunction_" + name(f) + "_" + name(g),
                                 name(f) + " " + name(g) + " = " + name(g) + " " + name(f),
                                 braid_equal(a * b, b * a)});
      }
    }
  for (int v = 0; v < e.punctures; ++v) {
    const auto around = e.rotation_at(v);
    for (std::size_t x = 0; x < around.size(); ++x)
      for (std::size_t y = x + 1; y < around.size(); ++y)
        for (std::size_t z = y + 1; z < around.size(); ++z) {
          const ArtinWord a = band(around[x]), b = band(around[y]), c = band(around[z]);
          const std::string tag = name(around[x]) + "_" + name(around[y]) + "_" + name(around[z]);
          const ArtinWord w1 = a * b * c * a, w2 = b * c * a * b, w3 = c * a * b * c;
          report.checks.push_back({"nodal_a_" + tag, "abca = bcab", braid_equal(w1, w2)});
          report.checks.push_back({"nodal_b_" + tag, "bcab = cabc", braid_equal(w2, w3)});
        }
  }
  return report;
}

}  // namespace brt
