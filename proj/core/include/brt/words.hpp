#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace brt {

/// Arbitrary-precision signed integer used for exponents and matrix entries.
using Integer = mpz_class;

/// Thrown when text or JSON input cannot be parsed. Carries a 1-based
/// line/column position when the input is textual.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Thrown when a presentation (or data built on one) violates its invariants.
class PresentationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Generator names: a letter followed by letters, digits or underscores.
bool is_valid_generator_name(std::string_view name);

/// Natural order on generator names: alphabetic runs compare
/// lexicographically, digit runs numerically. Gives r0 < r1 < ... < r10 < t1.
bool generator_less(std::string_view a, std::string_view b);

struct Syllable {
  std::string generator;
  Integer exponent;

  friend bool operator==(const Syllable& a, const Syllable& b) {
    return a.generator == b.generator && a.exponent == b.exponent;
  }
};

/// A word in a free group, stored as a run-length sequence of syllables.
/// Construction does not reduce; use free_reduce() for the canonical form.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Syllable> syllables);

  static Word generator(std::string name, Integer exponent = 1);

  /// Parses "r0^2 t1^-1 (t2 t1)^-2". The empty word is written "1".
  static Word parse(std::string_view text);

  const std::vector<Syllable>& syllables() const noexcept { return syllables_; }
  bool empty() const noexcept { return syllables_.empty(); }
  std::size_t syllable_count() const noexcept { return syllables_.size(); }

  /// Number of letters, i.e. the sum of |exponent|.
  Integer letter_length() const;
  Integer exponent_sum(std::string_view generator) const;
  std::set<std::string> generators() const;
  bool is_reduced() const;

  Word inverse() const;
  /// w^k for k >= 0, (w^-1)^|k| otherwise. The result is not reduced.
  Word power(long k) const;

  /// Concatenation without reduction.
  friend Word operator*(const Word& a, const Word& b);

  /// "name^exp" syllables separated by spaces, "^1" omitted, "1" if empty.
  std::string to_string() const;

  friend bool operator==(const Word& a, const Word& b) {
    return a.syllables_ == b.syllables_;
  }

 private:
  std::vector<Syllable> syllables_;
};

/// Unique freely reduced representative: no zero exponents, no two adjacent
/// syllables over the same generator.
Word free_reduce(const Word& w);

using Substitution = std::map<std::string, Word, std::less<>>;

/// Image of w under the homomorphism generator -> word, freely reduced.
/// Throws PresentationError naming the first unmapped generator.
Word substitute(const Word& w, const Substitution& map);

/// A finite presentation: ordered generators, ordered freely reduced
/// relators, and optional per-relator provenance labels.
class FinitePresentation {
 public:
  FinitePresentation() = default;

  /// Validates names, uniqueness and that relators only use declared
  /// generators. Relators are freely reduced on construction.
  FinitePresentation(std::vector<std::string> generators, std::vector<Word> relators,
                     std::map<std::size_t, std::string> labels = {});

  const std::vector<std::string>& generators() const noexcept { return generators_; }
  const std::vector<Word>& relators() const noexcept { return relators_; }
  const std::map<std::size_t, std::string>& labels() const noexcept { return labels_; }
  std::optional<std::string> label(std::size_t relator_index) const;
  bool has_generator(std::string_view name) const;

  /// Text format:
  ///   gens: r0 r1 t1
  ///   rel rotation_k0: r0^3
  std::string to_text() const;
  static FinitePresentation parse_text(std::string_view text);

  /// {"generators": [...], "relators": [[[name, exp], ...], ...], "labels": {"0": "..."}}
  std::string to_json(int indent = 2) const;
  static FinitePresentation parse_json(std::string_view text);

  /// Script for external computer-algebra systems:
  ///   F := FreeGroup("r0", "t1");; r0 := F.1;; ... rels := [ ... ];; G := F / rels;;
  std::string to_algebra() const;

  friend bool operator==(const FinitePresentation& a, const FinitePresentation& b) {
    return a.generators_ == b.generators_ && a.relators_ == b.relators_ &&
           a.labels_ == b.labels_;
  }

 private:
  std::vector<std::string> generators_;
  std::vector<Word> relators_;
  std::map<std::size_t, std::string> labels_;
};

/// Labels must be non-empty tokens without whitespace or ':'.
bool is_valid_label(std::string_view label);

}  // namespace brt
