#include "pretzel/intmat.hpp"

#include <algorithm>
#include <limits>

#include "pretzel/error.hpp"

namespace pretzel {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DomainError("ragged matrix literal");
    for (long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DomainError("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = static_cast<long>(rows[i][j]);
  }
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs) {
  if (lhs.cols_ != rhs.rows_) throw DomainError("matrix product dimension mismatch");
  IntMatrix out(lhs.rows_, rhs.cols_);
  for (std::size_t i = 0; i < lhs.rows_; ++i)
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      if (lhs.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += lhs.at(i, k) * rhs.at(k, j);
    }
  return out;
}

std::string to_string(const IntMatrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += i ? ",[" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ',';
      out += m.at(i, j).get_str();
    }
    out += ']';
  }
  return out + "]";
}

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

// row[target] -= factor * row[source]
void add_multiple(IntMatrix& m, std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m.at(target, j) -= factor * m.at(source, j);
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m.at(r, j) = -m.at(r, j);
}

}  // namespace

HermiteDecomposition hermite_decomposition(const IntMatrix& input) {
  IntMatrix h = input;
  IntMatrix u = IntMatrix::identity(input.rows());
  std::size_t row = 0;
  for (std::size_t col = 0; col < h.cols() && row < h.rows(); ++col) {
    bool have_pivot = false;
    for (;;) {
      // Smallest nonzero magnitude at or below `row` becomes the pivot.
      std::size_t best = h.rows();
      for (std::size_t i = row; i < h.rows(); ++i) {
        if (h.at(i, col) == 0) continue;
        if (best == h.rows() || abs(h.at(i, col)) < abs(h.at(best, col))) best = i;
      }
      if (best == h.rows()) break;
      have_pivot = true;
      swap_rows(h, row, best);
      swap_rows(u, row, best);
      bool clean = true;
      for (std::size_t i = row + 1; i < h.rows(); ++i) {
        if (h.at(i, col) == 0) continue;
        const Integer q = floor_div(h.at(i, col), h.at(row, col));
        add_multiple(h, i, row, q);
        add_multiple(u, i, row, q);
        if (h.at(i, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (!have_pivot) continue;
    if (h.at(row, col) < 0) {
      negate_row(h, row);
      negate_row(u, row);
    }
    for (std::size_t i = 0; i < row; ++i) {
      const Integer q = floor_div(h.at(i, col), h.at(row, col));
      add_multiple(h, i, row, q);
      add_multiple(u, i, row, q);
    }
    ++row;
  }
  return {std::move(h), std::move(u)};
}

IntMatrix hermite_form(const IntMatrix& m) { return hermite_decomposition(m).form; }

Integer determinant(const IntMatrix& input) {
  if (!input.square()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix m = input;
  Integer previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && m.at(swap_with, k) == 0) ++swap_with;
      if (swap_with == n) return 0;
      swap_rows(m, k, swap_with);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m.at(i, j) = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        mpz_divexact(m.at(i, j).get_mpz_t(), m.at(i, j).get_mpz_t(), previous.get_mpz_t());
      }
      m.at(i, k) = 0;
    }
    previous = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

std::vector<Integer> smith_invariants(const IntMatrix& input) {
  IntMatrix m = input;
  const std::size_t r = m.rows(), c = m.cols(), n = std::min(r, c);
  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // Move the smallest nonzero entry of the trailing block to (t, t).
      std::size_t bi = r, bj = c;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j)
          if (m.at(i, j) != 0 && (bi == r || abs(m.at(i, j)) < abs(m.at(bi, bj)))) {
            bi = i;
            bj = j;
          }
      if (bi == r) break;
      swap_rows(m, t, bi);
      if (bj != t)
        for (std::size_t i = 0; i < r; ++i) std::swap(m.at(i, t), m.at(i, bj));
      bool done = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        const Integer q = floor_div(m.at(i, t), m.at(t, t));
        add_multiple(m, i, t, q);
        if (m.at(i, t) != 0) done = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        const Integer q = floor_div(m.at(t, j), m.at(t, t));
        if (q != 0)
          for (std::size_t i = 0; i < r; ++i) m.at(i, j) -= q * m.at(i, t);
        if (m.at(t, j) != 0) done = false;
      }
      if (done) break;
    }
  }
  std::vector<Integer> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = abs(m.at(i, i));
  // diag(a, b) ~ diag(gcd, lcm); sweeping all pairs yields the divisor chain.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Integer g = gcd(d[i], d[j]);
      Integer l = lcm(d[i], d[j]);
      d[i] = g;
      d[j] = l;
    }
  return d;
}

AbelianQuotient::AbelianQuotient(const IntMatrix& relations)
    : rank_(relations.cols()), relations_(relations) {
  normal_form_ = hermite_form(relations);
  pivots_.assign(rank_, Integer(0));
  finite_ = normal_form_.rows() >= rank_;
  for (std::size_t i = 0; i < rank_ && i < normal_form_.rows(); ++i) {
    pivots_[i] = normal_form_.at(i, i);
    if (pivots_[i] == 0) finite_ = false;
  }
  if (!finite_) {
    // Echelon rows may skip columns; report pivots by column.
    pivots_.assign(rank_, Integer(0));
    for (std::size_t i = 0; i < normal_form_.rows(); ++i)
      for (std::size_t j = 0; j < rank_; ++j)
        if (normal_form_.at(i, j) != 0) {
          pivots_[j] = normal_form_.at(i, j);
          break;
        }
  }
  invariants_ = smith_invariants(relations);
  if (invariants_.size() < rank_) invariants_.resize(rank_, Integer(0));
}

std::optional<Integer> AbelianQuotient::order() const {
  if (!finite_) return std::nullopt;
  Integer n = 1;
  for (const auto& p : pivots_) n *= p;
  return n;
}

std::vector<std::int64_t> AbelianQuotient::reduce(std::vector<std::int64_t> v) const {
  if (!finite_) throw DomainError("canonical representatives need a finite quotient");
  if (v.size() != rank_) throw DomainError("vector length does not match quotient rank");
  for (std::size_t i = 0; i < rank_; ++i) {
    const Integer q = floor_div(Integer(static_cast<long>(v[i])), pivots_[i]);
    if (q == 0) continue;
    for (std::size_t j = i; j < rank_; ++j) {
      const Integer updated = Integer(static_cast<long>(v[j])) - q * normal_form_.at(i, j);
      if (!updated.fits_slong_p()) throw DomainError("coset coordinate overflow");
      v[j] = updated.get_si();
    }
  }
  return v;
}

AbelianQuotient quotient(const IntMatrix& relations) { return AbelianQuotient(relations); }

}  // namespace pretzel
