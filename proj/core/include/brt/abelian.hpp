#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "brt/builders.hpp"
#include "brt/words.hpp"

namespace brt {

/// Dense row-major matrix of arbitrary-precision integers.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);
  IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);

  static IntegerMatrix identity(std::size_t n);
  static IntegerMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const std::vector<Integer>& entries() const noexcept { return entries_; }

  Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  IntegerMatrix transpose() const;
  bool is_diagonal() const;
  /// Exact determinant (fraction-free Bareiss elimination). Square matrices only.
  Integer determinant() const;

  std::string to_json() const;
  static IntegerMatrix parse_json(std::string_view text);

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

struct SmithDecomposition {
  IntegerMatrix S;
  IntegerMatrix U;
  IntegerMatrix V;

  /// Diagonal entries of S (length min(rows, cols)).
  std::vector<Integer> diagonal() const;
};

/// S = U A V with U, V unimodular and S diagonal with d_1 | d_2 | ..., d_i >= 0.
SmithDecomposition smith_normal_form(const IntegerMatrix& a);

/// Rows indexed by relators, columns by generators, entries are exponent sums.
IntegerMatrix exponent_matrix(const FinitePresentation& p);

/// Finitely generated abelian group in invariant-factor form.
struct AbelianGroup {
  std::vector<Integer> torsion;  // each >= 2, each dividing the next
  long free_rank = 0;

  /// Product of cyclic groups Z_{c}; c = 0 is read as Z, c = 1 as trivial.
  static AbelianGroup from_cyclic_orders(const std::vector<Integer>& orders);

  bool is_finite() const { return free_rank == 0; }
  /// Order of a finite group; 0 when infinite.
  Integer order() const;
  /// "Z_6", "Z_2 x Z_2", "Z_2 x Z", "trivial".
  std::string to_string() const;

  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
    return a.torsion == b.torsion && a.free_rank == b.free_rank;
  }
};

AbelianGroup abelianisation(const FinitePresentation& p);

enum class GroupKind { braided, plain };

/// Closed forms: Z_m x Z_|m-n+1| (braided) and Z_d x Z_d, d = gcd(m, n-1) (plain).
AbelianGroup expected_abelianisation(GroupKind kind, const Params& p);
/// Unnormalized product, e.g. "Z_3 x Z_2".
std::string expected_formula(GroupKind kind, const Params& p);

}  // namespace brt
