#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace pretzel {

using Integer = mpz_class;

/// Dense exact integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Integer& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix transpose() const;

  friend IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs);
  friend bool operator==(const IntMatrix& lhs, const IntMatrix& rhs) {
    return lhs.rows_ == rhs.rows_ && lhs.cols_ == rhs.cols_ && lhs.data_ == rhs.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// `[[1,-4],[-3,7]]`
std::string to_string(const IntMatrix& m);

struct HermiteDecomposition {
  IntMatrix form;       ///< upper echelon, pivots > 0, entries above pivots in [0, pivot)
  IntMatrix transform;  ///< unimodular, transform * input == form
};

/// Row-style Hermite normal form using unimodular row operations only.
HermiteDecomposition hermite_decomposition(const IntMatrix& m);
IntMatrix hermite_form(const IntMatrix& m);

/// Fraction-free (Bareiss) determinant. Throws DomainError when not square.
Integer determinant(const IntMatrix& m);

/// Diagonal of the Smith normal form: d1 | d2 | ..., zeros last,
/// min(rows, cols) entries.
std::vector<Integer> smith_invariants(const IntMatrix& m);

/// Z^n modulo the row lattice of a relation matrix.
class AbelianQuotient {
 public:
  explicit AbelianQuotient(const IntMatrix& relations);

  std::size_t rank() const { return rank_; }
  const IntMatrix& relations() const { return relations_; }
  const IntMatrix& normal_form() const { return normal_form_; }

  /// Diagonal of the normal form (zero where a column has no pivot).
  const std::vector<Integer>& pivots() const { return pivots_; }
  bool finite() const { return finite_; }
  /// nullopt for an infinite quotient.
  std::optional<Integer> order() const;
  const std::vector<Integer>& invariant_factors() const { return invariants_; }

  /// Canonical representative tuple: 0 <= t_i < pivot_i. Finite quotients only.
  std::vector<std::int64_t> reduce(std::vector<std::int64_t> v) const;

 private:
  std::size_t rank_ = 0;
  IntMatrix relations_;
  IntMatrix normal_form_;
  std::vector<Integer> pivots_;
  std::vector<Integer> invariants_;
  bool finite_ = false;
};

AbelianQuotient quotient(const IntMatrix& relations);

}  // namespace pretzel
