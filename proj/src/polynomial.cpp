#include "pretzel/polynomial.hpp"

#include <algorithm>

#include "pretzel/error.hpp"

namespace pretzel {

IntPolynomial::IntPolynomial(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
  for (long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::monomial(Integer c, std::size_t degree) {
  std::vector<Integer> v(degree + 1, Integer(0));
  v[degree] = std::move(c);
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPolynomial::evaluate(const Integer& t) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] -= b.coeffs_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> v(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::exact_divide(const IntPolynomial& divisor) const {
  if (divisor.is_zero()) throw DomainError("polynomial division by zero");
  if (is_zero()) return {};
  if (degree() < divisor.degree()) throw DomainError("polynomial division is not exact");
  std::vector<Integer> rem = coeffs_;
  const auto dd = static_cast<std::size_t>(divisor.degree());
  const Integer& lead = divisor.coeffs_.back();
  std::vector<Integer> q(rem.size() - dd, Integer(0));
  for (std::size_t k = q.size(); k-- > 0;) {
    const Integer& top = rem[k + dd];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
      throw DomainError("polynomial division is not exact");
    q[k] = top / lead;
    for (std::size_t i = 0; i <= dd; ++i) rem[k + i] -= q[k] * divisor.coeffs_[i];
  }
  if (std::any_of(rem.begin(), rem.end(), [](const Integer& c) { return c != 0; }))
    throw DomainError("polynomial division is not exact");
  return IntPolynomial(std::move(q));
}

std::string to_string(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (long i = p.degree(); i >= 0; --i) {
    const Integer& c = p.coefficients()[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const Integer mag = abs(c);
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (mag != 1 || i == 0) out += mag.get_str();
    if (i >= 1) out += "t";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

namespace {

std::vector<Integer> strip_low_zeros(const IntPolynomial& p) {
  const auto& c = p.coefficients();
  auto first = std::find_if(c.begin(), c.end(), [](const Integer& x) { return x != 0; });
  return {first, c.end()};
}

}  // namespace

bool associated(const IntPolynomial& a, const IntPolynomial& b) {
  const auto x = strip_low_zeros(a);
  const auto y = strip_low_zeros(b);
  if (x == y) return true;
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != -y[i]) return false;
  return true;
}

IntPolynomial pencil_determinant(const IntMatrix& a, const IntMatrix& b) {
  if (!a.square() || !b.square() || a.rows() != b.rows())
    throw DomainError("pencil determinant needs square matrices of equal size");
  const std::size_t n = a.rows();
  if (n == 0) return IntPolynomial{1};
  std::vector<IntPolynomial> m(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i * n + j] = IntPolynomial({-b.at(i, j), a.at(i, j)});
  auto at = [&](std::size_t i, std::size_t j) -> IntPolynomial& { return m[i * n + j]; };
  IntPolynomial previous{1};
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k).is_zero()) {
      std::size_t s = k + 1;
      while (s < n && at(s, k).is_zero()) ++s;
      if (s == n) return {};
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(s, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)).exact_divide(previous);
      at(i, k) = IntPolynomial{};
    }
    previous = at(k, k);
  }
  return sign > 0 ? at(n - 1, n - 1) : IntPolynomial{} - at(n - 1, n - 1);
}

}  // namespace pretzel
