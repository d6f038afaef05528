#include "brt/abelian.hpp"

#include <numeric>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace brt {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Integer(0)) {}

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_)
    throw std::invalid_argument("IntegerMatrix: entry count does not match rows x cols");
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  const std::size_t c = rows.empty() ? 0 : rows.front().size();
  IntegerMatrix m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("IntegerMatrix: ragged rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntegerMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && (*this)(i, j) != 0) return false;
  return true;
}

Integer IntegerMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntegerMatrix a = *this;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
  IntegerMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

std::string IntegerMatrix::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (std::size_t i = 0; i < rows_; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < cols_; ++c) {
      const Integer& v = (*this)(i, c);
      if (v.fits_slong_p())
        row.push_back(v.get_si());
      else
        row.push_back(v.get_str());
    }
    j.push_back(std::move(row));
  }
  return j.dump();
}

IntegerMatrix IntegerMatrix::parse_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid matrix JSON: ") + e.what(), 1, e.byte);
  }
  if (!j.is_array()) throw ParseError("matrix JSON must be an array of rows", 1, 1);
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? j[0].size() : 0;
  std::vector<Integer> entries;
  entries.reserve(rows * cols);
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != cols) throw ParseError("ragged matrix rows", 1, 1);
    for (const auto& v : row) {
      if (v.is_number_integer())
        entries.emplace_back(std::to_string(v.get<long long>()), 10);
      else if (v.is_string())
        entries.emplace_back(v.get<std::string>(), 10);
      else
        throw ParseError("matrix entries must be integers", 1, 1);
    }
  }
  return IntegerMatrix(rows, cols, std::move(entries));
}

// ---------------------------------------------------------------- Smith normal form

namespace {

struct SmithState {
  IntegerMatrix S, U, V;

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < S.cols(); ++j) std::swap(S(a, j), S(b, j));
    for (std::size_t j = 0; j < U.cols(); ++j) std::swap(U(a, j), U(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < S.rows(); ++i) std::swap(S(i, a), S(i, b));
    for (std::size_t i = 0; i < V.rows(); ++i) std::swap(V(i, a), V(i, b));
  }
  // row[dst] += q * row[src]
  void add_row(std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t j = 0; j < S.cols(); ++j) S(dst, j) += q * S(src, j);
    for (std::size_t j = 0; j < U.cols(); ++j) U(dst, j) += q * U(src, j);
  }
  void add_col(std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t i = 0; i < S.rows(); ++i) S(i, dst) += q * S(i, src);
    for (std::size_t i = 0; i < V.rows(); ++i) V(i, dst) += q * V(i, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < S.cols(); ++j) S(r, j) = -S(r, j);
    for (std::size_t j = 0; j < U.cols(); ++j) U(r, j) = -U(r, j);
  }
};

}  // namespace

std::vector<Integer> SmithDecomposition::diagonal() const {
  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i) d.push_back(S(i, i));
  return d;
}

SmithDecomposition smith_normal_form(const IntegerMatrix& a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  SmithState st{a, IntegerMatrix::identity(rows), IntegerMatrix::identity(cols)};
  IntegerMatrix& S = st.S;
  Integer q;

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      // Pivot: smallest nonzero |entry| in the trailing block, first in row-major order.
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (S(i, j) == 0) continue;
          if (pr == rows || mpz_cmpabs(S(i, j).get_mpz_t(), S(pr, pc).get_mpz_t()) < 0) {
            pr = i;
            pc = j;
          }
        }
      if (pr == rows) goto finished;
      st.swap_rows(t, pr);
      st.swap_cols(t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (S(i, t) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), S(i, t).get_mpz_t(), S(t, t).get_mpz_t());
        if (q != 0) st.add_row(i, t, -q);
        if (S(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (S(t, j) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), S(t, j).get_mpz_t(), S(t, t).get_mpz_t());
        if (q != 0) st.add_col(j, t, -q);
        if (S(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the rest of the block for the divisibility chain.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(S(i, j).get_mpz_t(), S(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      st.add_row(t, bad, Integer(1));
    }
  }
finished:
  for (std::size_t i = 0; i < std::min(rows, cols); ++i)
    if (S(i, i) < 0) st.negate_row(i);
  return SmithDecomposition{std::move(st.S), std::move(st.U), std::move(st.V)};
}

IntegerMatrix exponent_matrix(const FinitePresentation& p) {
  const auto& gens = p.generators();
  std::map<std::string, std::size_t, std::less<>> column;
  for (std::size_t j = 0; j < gens.size(); ++j) column[gens[j]] = j;
  IntegerMatrix m(p.relators().size(), gens.size());
  for (std::size_t i = 0; i < p.relators().size(); ++i)
    for (const auto& s : p.relators()[i].syllables()) m(i, column.at(s.generator)) += s.exponent;
  return m;
}

// ---------------------------------------------------------------- abelian groups

namespace {

AbelianGroup from_diagonal(const std::vector<Integer>& diag, std::size_t generators) {
  AbelianGroup g;
  std::size_t rank = 0;
  for (const auto& d : diag) {
    if (d != 0) ++rank;
    if (d > 1) g.torsion.push_back(d);
  }
  g.free_rank = static_cast<long>(generators - rank);
  return g;
}

}  // namespace

AbelianGroup AbelianGroup::from_cyclic_orders(const std::vector<Integer>& orders) {
  IntegerMatrix m(orders.size(), orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) m(i, i) = abs(orders[i]);
  return from_diagonal(smith_normal_form(m).diagonal(), orders.size());
}

Integer AbelianGroup::order() const {
  if (free_rank > 0) return 0;
  Integer o = 1;
  for (const auto& d : torsion) o *= d;
  return o;
}

std::string AbelianGroup::to_string() const {
  std::vector<std::string> parts;
  for (const auto& d : torsion) parts.push_back("Z_" + d.get_str());
  for (long i = 0; i < free_rank; ++i) parts.push_back("Z");
  if (parts.empty()) return "trivial";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += " x " + parts[i];
  return out;
}

AbelianGroup abelianisation(const FinitePresentation& p) {
  const IntegerMatrix m = exponent_matrix(p);
  return from_diagonal(smith_normal_form(m).diagonal(), p.generators().size());
}

namespace {

std::pair<Integer, Integer> closed_form(GroupKind kind, const Params& p) {
  if (kind == GroupKind::braided) {
    return {Integer(p.m), Integer(std::labs(p.m - p.n + 1))};
  }
  const Integer d = std::gcd(p.m, p.n - 1);
  return {d, d};
}

}  // namespace

AbelianGroup expected_abelianisation(GroupKind kind, const Params& p) {
  const auto [a, b] = closed_form(kind, p);
  return AbelianGroup::from_cyclic_orders({a, b});
}

std::string expected_formula(GroupKind kind, const Params& p) {
  const auto [a, b] = closed_form(kind, p);
  return "Z_" + a.get_str() + " x Z_" + b.get_str();
}

}  // namespace brt
