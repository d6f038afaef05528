#pragma once

// Randomized property suites shared by the gtest runner and the acceptance binary.

#include <cstdint>
#include <random>
#include <sstream>
#include <string>

#include "brt/abelian.hpp"
#include "brt/braid.hpp"
#include "brt/isoprobe.hpp"
#include "brt/treepair.hpp"
#include "brt/words.hpp"
#include "oracles.hpp"

namespace props {

struct Outcome {
  long cases = 0;
  long failures = 0;
  std::string first_failure;

  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
};

inline long uniform(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline oracle::Letters random_letters(std::mt19937_64& rng, int gens, long max_len) {
  oracle::Letters w(static_cast<std::size_t>(uniform(rng, 0, max_len)));
  for (int& x : w) x = static_cast<int>(uniform(rng, 1, gens)) * (uniform(rng, 0, 1) ? 1 : -1);
  return w;
}

inline brt::Word to_word(const oracle::Letters& w) {
  static const char* names[] = {"", "a", "b", "c", "t1", "r0"};
  std::vector<brt::Syllable> s;
  for (int x : w) s.push_back({names[std::abs(x)], x > 0 ? 1 : -1});
  return brt::Word(std::move(s));
}

inline oracle::Letters to_letters(const brt::Word& w) {
  static const std::map<std::string, int> index = {{"a", 1}, {"b", 2}, {"c", 3}, {"t1", 4}, {"r0", 5}};
  oracle::Letters out;
  for (const auto& s : w.syllables()) {
    const int g = index.at(s.generator);
    const long e = s.exponent.get_si();
    for (long i = 0; i < std::labs(e); ++i) out.push_back(e > 0 ? g : -g);
  }
  return out;
}

inline Outcome free_reduction(std::uint64_t seed, long cases) {
  std::mt19937_64 rng(seed);
  Outcome o;
  for (long c = 0; c < cases; ++c, ++o.cases) {
    const oracle::Letters letters = random_letters(rng, 5, 24);
    const brt::Word w = to_word(letters);
    const brt::Word once = brt::free_reduce(w);
    const brt::Word twice = brt::free_reduce(once);
    if (!(once == twice) || !once.is_reduced()) o.fail("not idempotent: " + w.to_string());
    if (to_letters(once) != oracle::reduce(letters)) o.fail("differs from stack reduction: " + w.to_string());
    if (!brt::free_reduce(w * w.inverse()).empty()) o.fail("w w^-1 not trivial: " + w.to_string());
  }
  return o;
}

inline brt::IntegerMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                        long range) {
  brt::IntegerMatrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (uniform(rng, 0, 3) != 0) a(i, j) = uniform(rng, -range, range);
  return a;
}

inline Outcome smith(std::uint64_t seed, long cases) {
  std::mt19937_64 rng(seed);
  Outcome o;
  for (long c = 0; c < cases; ++c, ++o.cases) {
    const std::size_t rows = static_cast<std::size_t>(uniform(rng, 1, 6));
    const std::size_t cols = static_cast<std::size_t>(uniform(rng, 1, 6));
    const brt::IntegerMatrix a = random_matrix(rng, rows, cols, 12);
    const brt::SmithDecomposition d = brt::smith_normal_form(a);
    const auto tag = [&] { return a.to_json(); };
    if (!(d.U * a * d.V == d.S)) o.fail("S != U A V for " + tag());
    if (abs(d.U.determinant()) != 1 || abs(d.V.determinant()) != 1) o.fail("not unimodular for " + tag());
    if (!d.S.is_diagonal()) o.fail("not diagonal for " + tag());
    const auto diag = d.diagonal();
    for (std::size_t i = 0; i < diag.size(); ++i) {
      if (diag[i] < 0) o.fail("negative diagonal for " + tag());
      if (i + 1 < diag.size() && diag[i] != 0 &&
          !mpz_divisible_p(diag[i + 1].get_mpz_t(), diag[i].get_mpz_t()))
        o.fail("divisibility chain broken for " + tag());
      if (i + 1 < diag.size() && diag[i] == 0 && diag[i + 1] != 0) o.fail("zero before nonzero for " + tag());
    }
    // determinantal divisors on the small ones
    if (rows <= 4 && cols <= 4) {
      std::vector<std::vector<mpz_class>> rowsv(rows, std::vector<mpz_class>(cols));
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) rowsv[i][j] = a(i, j);
      if (oracle::invariant_factors(rowsv) != diag) o.fail("invariant factors differ for " + tag());
    }
  }
  return o;
}

inline brt::NaryForest random_forest(std::mt19937_64& rng, int n, int m, int carets) {
  brt::NaryForest f = brt::NaryForest::trivial(n, m);
  for (int i = 0; i < carets; ++i)
    f = f.expand(static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(f.leaf_count()) - 1)));
  return f;
}

inline brt::TreePairElement random_element(std::mt19937_64& rng, int n, int m) {
  const int carets = static_cast<int>(uniform(rng, 0, 4));
  brt::NaryForest d = random_forest(rng, n, m, carets), r = random_forest(rng, n, m, carets);
  const long shift = uniform(rng, 0, static_cast<long>(d.leaf_count()) - 1);
  return brt::TreePairElement::make(std::move(d), std::move(r), shift);
}

inline brt::Rational random_point(std::mt19937_64& rng, int m) {
  const long den = uniform(rng, 1, 60);
  return brt::Rational(uniform(rng, 0, m * den - 1), den);
}

inline Outcome treepair_laws(std::uint64_t seed, long cases) {
  std::mt19937_64 rng(seed);
  Outcome o;
  for (long c = 0; c < cases; ++c, ++o.cases) {
    const int n = static_cast<int>(uniform(rng, 2, 4)), m = static_cast<int>(uniform(rng, 2, 4));
    const auto g = random_element(rng, n, m), h = random_element(rng, n, m), k = random_element(rng, n, m);
    const auto tag = [&] { return g.to_string() + " ; " + h.to_string() + " ; " + k.to_string(); };
    const auto gh = brt::compose(g, h);
    if (!(brt::compose(gh, k) == brt::compose(g, brt::compose(h, k)))) o.fail("associativity: " + tag());
    if (!brt::compose(g, brt::inverse(g)).is_identity() || !brt::compose(brt::inverse(g), g).is_identity())
      o.fail("inverse: " + tag());
    if (!gh.is_reduced()) o.fail("unreduced product: " + tag());
    const long d = brt::theta_modulus(n, m);
    if (brt::theta(gh) != (brt::theta(g) + brt::theta(h)) % d) o.fail("theta: " + tag());
    const brt::Rational x = random_point(rng, m);
    if (brt::apply(gh, x) != brt::apply(h, brt::apply(g, x))) o.fail("pointwise composition: " + tag());
  }
  return o;
}

inline std::vector<int> random_braid(std::mt19937_64& rng, int strands, long max_len) {
  std::vector<int> w(static_cast<std::size_t>(uniform(rng, 0, max_len)));
  for (int& x : w) x = static_cast<int>(uniform(rng, 1, strands - 1)) * (uniform(rng, 0, 1) ? 1 : -1);
  return w;
}

// A relator of the braid group on `strands` strands, as a letter list.
inline std::vector<int> random_braid_relator(std::mt19937_64& rng, int strands) {
  const int i = static_cast<int>(uniform(rng, 1, strands - 1));
  std::vector<int> r;
  switch (uniform(rng, 0, 2)) {
    case 0:
      r = {i, -i};
      break;
    case 1:
      if (i + 1 < strands) {
        r = {i, i + 1, i, -(i + 1), -i, -(i + 1)};
        break;
      }
      [[fallthrough]];
    default: {
      const int j = static_cast<int>(uniform(rng, 1, strands - 1));
      if (std::abs(i - j) >= 2)
        r = {i, j, -i, -j};
      else
        r = {-i, i};
    }
  }
  if (uniform(rng, 0, 1)) {
    std::reverse(r.begin(), r.end());
    for (int& x : r) x = -x;
  }
  return r;
}

inline Outcome garside_congruence(std::uint64_t seed, long cases) {
  std::mt19937_64 rng(seed);
  Outcome o;
  for (long c = 0; c < cases; ++c, ++o.cases) {
    const int s = static_cast<int>(uniform(rng, 2, 6));
    const std::vector<int> w = random_braid(rng, s, 10);
    std::vector<int> v = w;
    for (long t = uniform(rng, 1, 3); t > 0; --t) {
      const auto r = random_braid_relator(rng, s);
      v.insert(v.begin() + uniform(rng, 0, static_cast<long>(v.size())), r.begin(), r.end());
    }
    const brt::ArtinWord a(s, w), b(s, v);
    std::ostringstream tag;
    tag << a.to_string() << " vs " << b.to_string() << " on " << s << " strands";
    if (!(brt::garside_nf(a) == brt::garside_nf(b))) o.fail("congruent words differ: " + tag.str());
    if (!brt::braid_equal(a * a.inverse(), brt::ArtinWord(s, {}))) o.fail("w w^-1 not trivial: " + tag.str());

    // against the faithful free-group action on unrelated short words
    const std::vector<int> x = random_braid(rng, s, 6), y = random_braid(rng, s, 6);
    const bool expected = oracle::artin_images(s, x) == oracle::artin_images(s, y);
    if (brt::braid_equal(brt::ArtinWord(s, x), brt::ArtinWord(s, y)) != expected)
      o.fail("disagrees with Artin action: " + brt::ArtinWord(s, x).to_string() + " vs " +
             brt::ArtinWord(s, y).to_string());
  }
  return o;
}

inline Outcome complement_torsion(std::uint64_t seed, long cases) {
  std::mt19937_64 rng(seed);
  Outcome o;
  for (long c = 0; c < cases; ++c, ++o.cases) {
    const long n = uniform(rng, 5, 4000);
    const long m = uniform(rng, 2, (n - 1) / 2);
    const brt::Params a(n, m), b(n, n - 1 - m);
    const long bound = uniform(rng, 1, 2 * n);
    const auto tag = "(" + std::to_string(n) + "," + std::to_string(m) + ") bound " + std::to_string(bound);
    if (!(brt::torsion_divisors(a, bound) == brt::torsion_divisors(b, bound))) o.fail("torsion differs: " + tag);
    if (brt::ab_order(a) != brt::ab_order(b)) o.fail("abelianisation order differs: " + tag);
    if (m != n - 1 - m && brt::verdict(a, b).kind != brt::VerdictKind::ComplementCandidate)
      o.fail("not a complement candidate: " + tag);
  }
  return o;
}

}  // namespace props
