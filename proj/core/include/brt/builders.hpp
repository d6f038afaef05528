#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "brt/words.hpp"

namespace brt {

/// Tree parameters: one vertex of valence m, all others of valence n+1.
struct Params {
  long n = 2;
  long m = 2;

  Params() = default;
  /// Throws std::invalid_argument unless n >= 2 and m >= 2.
  Params(long n_, long m_);

  friend bool operator==(const Params& a, const Params& b) { return a.n == b.n && a.m == b.m; }
  friend bool operator<(const Params& a, const Params& b) {
    return a.n != b.n ? a.n < b.n : a.m < b.m;
  }
};

/// Highest index of the presentation generators: 5 for (2,2), 4 otherwise.
int hbar(const Params& p);
/// Stabilizer heights range over 0..h-1: 6 for (2,2), 5 otherwise.
int stabilizer_height(const Params& p);

/// Frontier arc count m + k(n-1) of the k-th admissible surface.
long frontier_size(const Params& p, long k);

std::string rotation_name(long k);
std::string twist_name(long i);

/// (eta_i, gamma_i) for 1 <= i <= hbar-1.
std::pair<Word, Word> eta_gamma(int i, const Params& p);

struct LabeledRelator {
  std::string label;
  Word word;
};

struct RelatorFamilies {
  std::array<std::vector<LabeledRelator>, 6> braid;
  std::vector<LabeledRelator> commutation;
  std::vector<LabeledRelator> rotation;
  std::vector<LabeledRelator> square;

  std::size_t braid_count() const;
  std::size_t total() const;
  /// Braid families 1..6, commutation, rotation, square, in that order.
  std::vector<LabeledRelator> flatten() const;
};

RelatorFamilies relator_families(const Params& p);

/// Square relator count for a fixed i: ceil((m + (n-1)(i-1) - 1) / 2).
long square_count(const Params& p, int i);

/// Full presentation of the braided group on r0..r_hbar, t1..t_hbar.
FinitePresentation build_brT(const Params& p);
/// Presentation of the underlying Higman-Thompson group on r0..r_hbar.
FinitePresentation build_T(const Params& p);
/// Vertex stabilizer of height k, 0 <= k <= stabilizer_height-1.
FinitePresentation build_stab(int k, const Params& p);

}  // namespace brt
