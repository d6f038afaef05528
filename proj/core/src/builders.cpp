#include "brt/builders.hpp"

#include <stdexcept>

namespace brt {

Params::Params(long n_, long m_) : n(n_), m(m_) {
  if (n < 2 || m < 2)
    throw std::invalid_argument("parameters must satisfy n >= 2 and m >= 2 (got n=" +
                                std::to_string(n) + ", m=" + std::to_string(m) + ")");
}

int hbar(const Params& p) { return (p.n == 2 && p.m == 2) ? 5 : 4; }
int stabilizer_height(const Params& p) { return (p.n == 2 && p.m == 2) ? 6 : 5; }

long frontier_size(const Params& p, long k) { return p.m + k * (p.n - 1); }

std::string rotation_name(long k) { return "r" + std::to_string(k); }
std::string twist_name(long i) { return "t" + std::to_string(i); }

namespace {

Word r(long k, Integer e = 1) { return Word::generator(rotation_name(k), std::move(e)); }
Word t(long i, Integer e = 1) { return Word::generator(twist_name(i), std::move(e)); }

Word product(std::initializer_list<Word> parts) {
  Word out;
  for (const auto& w : parts) out = out * w;
  return out;
}

// Relator form of lhs = rhs.
Word equality(const Word& lhs, const Word& rhs) { return free_reduce(lhs * rhs.inverse()); }

Word twist_descending(long k) {
  Word out;
  for (long i = k; i >= 1; --i) out = out * t(i);
  return out;
}

std::string idx(const char* key, long v) { return std::string("_") + key + std::to_string(v); }

// Braid relations among t1..t_top; `cap` and `cap3` are the upper bounds of
// families 1 and 3, `five`/`six` switch on the m=2 and (2,2) families.
void braid_families(std::array<std::vector<LabeledRelator>, 6>& fam, const Params& p,
                    long top, bool one_and_three, long cap1, long cap3, bool five, bool six) {
  const long m = p.m;
  if (one_and_three) {
    for (long i = 2; i <= m; ++i)
      for (long l = m + 1; l <= cap1; ++l)
        fam[0].push_back({"braid1" + idx("i", i) + idx("l", l),
                          equality(t(i) * t(l), t(l) * t(i))});
  }
  const long cap2 = std::min(top, m);
  for (long i = 1; i <= cap2; ++i)
    for (long j = i + 1; j <= cap2; ++j)
      fam[1].push_back({"braid2" + idx("i", i) + idx("j", j),
                        equality(product({t(i), t(j), t(i)}), product({t(j), t(i), t(j)}))});
  if (one_and_three) {
    for (long l = m + 1; l <= cap3; ++l)
      fam[2].push_back({"braid3" + idx("l", l),
                        equality(product({t(1), t(l), t(1)}), product({t(l), t(1), t(l)}))});
  }
  for (long i = 1; i <= cap2; ++i)
    for (long j = i + 1; j <= cap2; ++j)
      for (long s = j + 1; s <= cap2; ++s) {
        const std::string tag = idx("i", i) + idx("j", j) + idx("s", s);
        const Word a = product({t(i), t(j), t(s), t(i)});
        const Word b = product({t(j), t(s), t(i), t(j)});
        const Word c = product({t(s), t(i), t(j), t(s)});
        fam[3].push_back({"braid4a" + tag, equality(a, b)});
        fam[3].push_back({"braid4b" + tag, equality(b, c)});
      }
  if (five) {
    fam[4].push_back({"braid5_t3_t4",
                      equality(product({t(3), t(4), t(3)}), product({t(4), t(3), t(4)}))});
    const Word a = product({t(1), t(3), t(4), t(1)});
    const Word b = product({t(3), t(4), t(1), t(3)});
    const Word c = product({t(4), t(1), t(3), t(4)});
    fam[4].push_back({"braid5a_t1_t3_t4", equality(a, b)});
    fam[4].push_back({"braid5b_t1_t3_t4", equality(b, c)});
  }
  if (six) {
    for (long i : {1L, 3L, 4L})
      fam[5].push_back({"braid6" + idx("i", i), equality(t(5) * t(i), t(i) * t(5))});
    fam[5].push_back({"braid6_t2_t5",
                      equality(product({t(2), t(5), t(2)}), product({t(5), t(2), t(5)}))});
  }
}

Word rotation_relator(const Params& p, long k) {
  return free_reduce(r(k, frontier_size(p, k)) * twist_descending(k).power(k + 1));
}

FinitePresentation assemble(std::vector<std::string> gens, const std::vector<LabeledRelator>& rels) {
  std::vector<Word> words;
  std::map<std::size_t, std::string> labels;
  words.reserve(rels.size());
  for (const auto& lr : rels) {
    labels[words.size()] = lr.label;
    words.push_back(lr.word);
  }
  return FinitePresentation(std::move(gens), std::move(words), std::move(labels));
}

}  // namespace

std::pair<Word, Word> eta_gamma(int i, const Params& p) {
  const int top = hbar(p) - 1;
  if (i < 1 || i > top)
    throw std::out_of_range("eta_gamma: index " + std::to_string(i) + " outside 1.." +
                            std::to_string(top));
  if (i == 4)
    return {product({t(5), t(2), t(1), t(4)}), product({t(4, -1), t(1, -1), t(2, -1)})};
  if (p.m == i) return {product({t(i + 1), t(1), t(i)}), product({t(i, -1), t(1, -1)})};
  return {product({t(i + 1), t(i)}), t(i, -1)};
}

long square_count(const Params& p, int i) {
  const long a = p.m + (p.n - 1) * (i - 1) - 1;
  return (a + 1) / 2;
}

std::size_t RelatorFamilies::braid_count() const {
  std::size_t total = 0;
  for (const auto& f : braid) total += f.size();
  return total;
}

std::size_t RelatorFamilies::total() const {
  return braid_count() + commutation.size() + rotation.size() + square.size();
}

std::vector<LabeledRelator> RelatorFamilies::flatten() const {
  std::vector<LabeledRelator> out;
  out.reserve(total());
  for (const auto& f : braid) out.insert(out.end(), f.begin(), f.end());
  out.insert(out.end(), commutation.begin(), commutation.end());
  out.insert(out.end(), rotation.begin(), rotation.end());
  out.insert(out.end(), square.begin(), square.end());
  return out;
}

RelatorFamilies relator_families(const Params& p) {
  RelatorFamilies fam;
  const long h = hbar(p);
  const bool small_m = p.m < 4;
  braid_families(fam.braid, p, 4, small_m, 4, 4, p.m == 2, p.n == 2 && p.m == 2);

  for (long k = 1; k <= h; ++k)
    for (long i = 1; i <= k; ++i)
      fam.commutation.push_back({"commute" + idx("k", k) + idx("i", i),
                                 free_reduce(product({r(k), t(i), r(k, -1), t(i, -1)}))});
  for (long k = 0; k <= h; ++k)
    fam.rotation.push_back({"rotation" + idx("k", k), rotation_relator(p, k)});
  for (int i = 1; i <= h - 1; ++i) {
    const auto [eta, gamma] = eta_gamma(i, p);
    for (long j = 1; j <= square_count(p, i); ++j) {
      Word w = product({r(i - 1, j), gamma, r(i, -p.n - j), eta, r(i + 1, j + p.n - 1),
                        r(i, 1 - j)});
      fam.square.push_back({"square" + idx("i", i) + idx("j", j), free_reduce(w)});
    }
  }
  return fam;
}

FinitePresentation build_brT(const Params& p) {
  const long h = hbar(p);
  std::vector<std::string> gens;
  for (long k = 0; k <= h; ++k) gens.push_back(rotation_name(k));
  for (long i = 1; i <= h; ++i) gens.push_back(twist_name(i));
  return assemble(std::move(gens), relator_families(p).flatten());
}

FinitePresentation build_T(const Params& p) {
  const long h = hbar(p);
  std::vector<std::string> gens;
  for (long k = 0; k <= h; ++k) gens.push_back(rotation_name(k));
  std::vector<LabeledRelator> rels;
  for (long k = 0; k <= h; ++k) rels.push_back({"rotation" + idx("k", k), r(k, frontier_size(p, k))});
  for (int i = 1; i <= h - 1; ++i)
    for (long j = 1; j <= square_count(p, i); ++j)
      rels.push_back({"square" + idx("i", i) + idx("j", j),
                      free_reduce(product({r(i - 1, j), r(i, -p.n - j), r(i + 1, j + p.n - 1),
                                           r(i, 1 - j)}))});
  return assemble(std::move(gens), rels);
}

FinitePresentation build_stab(int k, const Params& p) {
  const int h = stabilizer_height(p);
  if (k < 0 || k > h - 1)
    throw std::out_of_range("build_stab: height " + std::to_string(k) + " outside 0.." +
                            std::to_string(h - 1));
  std::array<std::vector<LabeledRelator>, 6> fam;
  const bool above_m = p.m < k;
  braid_families(fam, p, k, above_m, std::min<long>(k, 4), std::min<long>(k, p.m + p.n),
                 p.m == 2 && k >= 4, p.n == 2 && p.m == 2 && k == 5);

  std::vector<LabeledRelator> rels;
  for (const auto& f : fam) rels.insert(rels.end(), f.begin(), f.end());
  for (long i = 1; i <= k; ++i)
    rels.push_back({"commute" + idx("k", k) + idx("i", i),
                    free_reduce(product({r(k), t(i), r(k, -1), t(i, -1)}))});
  rels.push_back({"rotation" + idx("k", k), rotation_relator(p, k)});

  std::vector<std::string> gens{rotation_name(k)};
  for (long i = 1; i <= k; ++i) gens.push_back(twist_name(i));
  return assemble(std::move(gens), rels);
}

}  // namespace brt
