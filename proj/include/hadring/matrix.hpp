#pragma once

// Dense matrices and univariate polynomials over a commutative ring of
// characteristic 2, with a division-free characteristic polynomial.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "hadring/error.hpp"
#include "hadring/ring.hpp"

namespace hadring {

/// A context object describing a commutative ring of characteristic 2 whose
/// elements are `R::value_type`. Subtraction is never required.
template <class R>
concept Char2Ring = std::equality_comparable<R> &&
    requires(const R& r, const typename R::value_type& a) {
      { r.zero() } -> std::convertible_to<typename R::value_type>;
      { r.one() } -> std::convertible_to<typename R::value_type>;
      { r.add(a, a) } -> std::convertible_to<typename R::value_type>;
      { r.mul(a, a) } -> std::convertible_to<typename R::value_type>;
      { r.is_zero(a) } -> std::convertible_to<bool>;
      { r.name() } -> std::convertible_to<std::string>;
    };

template <Char2Ring R>
class Matrix {
 public:
  using value_type = typename R::value_type;

  Matrix(R ring, std::size_t rows, std::size_t cols)
      : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, ring_.zero()) {}

  Matrix(R ring, std::size_t rows, std::size_t cols, std::vector<value_type> entries)
      : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
      throw ShapeError("matrix " + std::to_string(rows_) + "x" + std::to_string(cols_) + " given " +
                       std::to_string(entries_.size()) + " entries");
  }

  static Matrix identity(const R& ring, std::size_t n) {
    Matrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = ring.one();
    return m;
  }

  const R& ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  const std::vector<value_type>& entries() const noexcept { return entries_; }

  value_type& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const value_type& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [&](const value_type& v) { return ring_.is_zero(v); });
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  R ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<value_type> entries_;
};

using RingMatrix = Matrix<Ring>;

namespace detail {
template <Char2Ring R>
void check_ring(const R& a, const R& b) {
  if (!(a == b)) throw ContextMismatch("context mismatch: " + a.name() + " vs " + b.name());
}
}  // namespace detail

template <Char2Ring R>
Matrix<R> operator+(const Matrix<R>& a, const Matrix<R>& b) {
  detail::check_ring(a.ring(), b.ring());
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("matrix sum shape mismatch");
  Matrix<R> r(a.ring(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a.ring().add(a(i, j), b(i, j));
  return r;
}

template <Char2Ring R>
Matrix<R> operator*(const Matrix<R>& a, const Matrix<R>& b) {
  detail::check_ring(a.ring(), b.ring());
  if (a.cols() != b.rows())
    throw ShapeError("matrix product " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                     " * " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  const R& ring = a.ring();
  Matrix<R> r(ring, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t l = 0; l < a.cols(); ++l) {
      if (ring.is_zero(a(i, l))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) = ring.add(r(i, j), ring.mul(a(i, l), b(l, j)));
    }
  }
  return r;
}

/// c * M for a scalar c of the entry ring.
template <Char2Ring R>
Matrix<R> scale(const typename R::value_type& c, const Matrix<R>& m) {
  Matrix<R> r(m.ring(), m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m.ring().mul(c, m(i, j));
  return r;
}

template <Char2Ring R>
Matrix<R> transpose(const Matrix<R>& m) {
  Matrix<R> r(m.ring(), m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(j, i) = m(i, j);
  return r;
}

template <Char2Ring R>
Matrix<R> pow(Matrix<R> m, std::uint64_t e) {
  if (!m.is_square()) throw ShapeError("power of a non-square matrix");
  Matrix<R> r = Matrix<R>::identity(m.ring(), m.rows());
  while (e != 0) {
    if (e & 1) r = r * m;
    e >>= 1;
    if (e != 0) m = m * m;
  }
  return r;
}

/// Univariate polynomial, coefficients in ascending degree. Trailing zero
/// coefficients are trimmed, so the zero polynomial has no coefficients.
template <Char2Ring R>
class Polynomial {
 public:
  using value_type = typename R::value_type;

  explicit Polynomial(R ring) : ring_(std::move(ring)) {}
  Polynomial(R ring, std::vector<value_type> coeffs) : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
    normalize();
  }

  /// The monomial x^n.
  static Polynomial monomial(const R& ring, std::size_t n) {
    std::vector<value_type> c(n + 1, ring.zero());
    c[n] = ring.one();
    return Polynomial(ring, std::move(c));
  }

  const R& ring() const noexcept { return ring_; }
  const std::vector<value_type>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree, or -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

  value_type coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : ring_.zero(); }
  value_type leading() const { return coeffs_.empty() ? ring_.zero() : coeffs_.back(); }

  /// Horner evaluation at a scalar.
  value_type evaluate(const value_type& x) const {
    value_type acc = ring_.zero();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = ring_.add(ring_.mul(acc, x), *it);
    return acc;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && ring_.is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  R ring_;
  std::vector<value_type> coeffs_;
};

using RingPolynomial = Polynomial<Ring>;

template <Char2Ring R>
Polynomial<R> operator+(const Polynomial<R>& a, const Polynomial<R>& b) {
  detail::check_ring(a.ring(), b.ring());
  const std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  std::vector<typename R::value_type> c;
  c.reserve(n);
  for (std::size_t i = 0; i < n; ++i) c.push_back(a.ring().add(a.coeff(i), b.coeff(i)));
  return Polynomial<R>(a.ring(), std::move(c));
}

template <Char2Ring R>
Polynomial<R> operator*(const Polynomial<R>& a, const Polynomial<R>& b) {
  detail::check_ring(a.ring(), b.ring());
  if (a.is_zero() || b.is_zero()) return Polynomial<R>(a.ring());
  const R& ring = a.ring();
  std::vector<typename R::value_type> c(a.coeffs().size() + b.coeffs().size() - 1, ring.zero());
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j)
      c[i + j] = ring.add(c[i + j], ring.mul(a.coeffs()[i], b.coeffs()[j]));
  return Polynomial<R>(ring, std::move(c));
}

/// Quotient and remainder of a by a monic divisor b.
template <Char2Ring R>
std::pair<Polynomial<R>, Polynomial<R>> divmod_monic(const Polynomial<R>& a, const Polynomial<R>& b) {
  detail::check_ring(a.ring(), b.ring());
  const R& ring = a.ring();
  if (b.is_zero() || !(b.leading() == ring.one())) throw ShapeError("divisor must be monic");
  std::vector<typename R::value_type> rem = a.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  if (rem.size() <= db) return {Polynomial<R>(ring), a};
  std::vector<typename R::value_type> quot(rem.size() - db, ring.zero());
  for (std::size_t top = rem.size(); top-- > db;) {
    const auto c = rem[top];
    if (ring.is_zero(c)) continue;
    quot[top - db] = c;
    for (std::size_t i = 0; i <= db; ++i) rem[top - db + i] = ring.add(rem[top - db + i], ring.mul(c, b.coeffs()[i]));
  }
  rem.resize(db);
  return {Polynomial<R>(ring, std::move(quot)), Polynomial<R>(ring, std::move(rem))};
}

/// Characteristic polynomial det(xI - M) by Berkowitz's division-free
/// recurrence. Returns a monic polynomial of degree s = side of M.
///
/// The leading principal submatrices are grown one row/column at a time.
/// With a = M[i][i], row r = M[i][0..i), column c = M[0..i)[i] and A the
/// leading i x i block, the charpoly of the (i+1) block is the product of
/// the lower-triangular Toeplitz matrix with first column
/// (1, a, rc, rAc, rA^2c, ...) and the previous coefficient vector (signs
/// vanish in characteristic 2).
template <Char2Ring R>
Polynomial<R> charpoly_berkowitz(const Matrix<R>& m) {
  if (!m.is_square()) throw ShapeError("characteristic polynomial of a non-square matrix");
  const R& ring = m.ring();
  const std::size_t n = m.rows();
  using V = typename R::value_type;
  // Coefficients in descending degree: prev[0] is the x^i coefficient.
  std::vector<V> prev{ring.one()};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<V> toeplitz{ring.one(), m(i, i)};
    std::vector<V> v(i);  // A^j c
    for (std::size_t r = 0; r < i; ++r) v[r] = m(r, i);
    for (std::size_t j = 0; j < i; ++j) {
      V dot = ring.zero();
      for (std::size_t r = 0; r < i; ++r) dot = ring.add(dot, ring.mul(m(i, r), v[r]));
      toeplitz.push_back(dot);
      if (j + 1 < i) {
        std::vector<V> next(i, ring.zero());
        for (std::size_t r = 0; r < i; ++r)
          for (std::size_t q = 0; q < i; ++q) next[r] = ring.add(next[r], ring.mul(m(r, q), v[q]));
        v = std::move(next);
      }
    }
    std::vector<V> cur(i + 2, ring.zero());
    for (std::size_t d = 0; d < cur.size(); ++d)
      for (std::size_t l = 0; l <= std::min(d, i); ++l)
        cur[d] = ring.add(cur[d], ring.mul(toeplitz[d - l], prev[l]));
    prev = std::move(cur);
  }
  std::reverse(prev.begin(), prev.end());
  return Polynomial<R>(ring, std::move(prev));
}

inline constexpr std::size_t kDefaultMinorsOracleLimit = 6;

namespace detail {
// Leibniz expansion of the principal minor on `idx`; signs vanish in
// characteristic 2.
template <Char2Ring R>
typename R::value_type leibniz_minor(const Matrix<R>& m, const std::vector<std::size_t>& idx) {
  const R& ring = m.ring();
  std::vector<std::size_t> perm(idx.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  auto total = ring.zero();
  do {
    auto term = ring.one();
    for (std::size_t r = 0; r < idx.size(); ++r) term = ring.mul(term, m(idx[r], idx[perm[r]]));
    total = ring.add(total, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}
}  // namespace detail

/// Characteristic polynomial assembled from principal minors: the
/// coefficient of x^(s-j) is the sum of all j x j principal minors.
/// Exponential cost; intended as an independent cross-check.
template <Char2Ring R>
Polynomial<R> charpoly_minors_oracle(const Matrix<R>& m, std::size_t limit = kDefaultMinorsOracleLimit) {
  if (!m.is_square()) throw ShapeError("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  if (n > limit)
    throw LimitExceeded("minors oracle limited to side " + std::to_string(limit) + ", got " + std::to_string(n));
  const R& ring = m.ring();
  std::vector<typename R::value_type> c(n + 1, ring.zero());
  c[n] = ring.one();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t b = 0; b < n; ++b)
      if ((mask >> b) & 1) idx.push_back(b);
    const std::size_t j = idx.size();
    c[n - j] = ring.add(c[n - j], detail::leibniz_minor(m, idx));
  }
  return Polynomial<R>(ring, std::move(c));
}

/// Determinant: the constant term of the characteristic polynomial.
template <Char2Ring R>
typename R::value_type mat_det(const Matrix<R>& m) {
  return charpoly_berkowitz(m).coeff(0);
}

/// p(M) = sum p_i M^i for a polynomial over the entry ring of M.
template <Char2Ring R>
Matrix<R> poly_eval_at_matrix(const Polynomial<R>& p, const Matrix<R>& m) {
  detail::check_ring(p.ring(), m.ring());
  if (!m.is_square()) throw ShapeError("polynomial evaluated at a non-square matrix");
  Matrix<R> acc(m.ring(), m.rows(), m.cols());
  const Matrix<R> id = Matrix<R>::identity(m.ring(), m.rows());
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * m + scale(*it, id);
  return acc;
}

template <Char2Ring R>
struct CayleyHamiltonResult {
  bool holds;
  Polynomial<R> charpoly;
  Matrix<R> residual;  // charpoly(M) evaluated at M
};

template <Char2Ring R>
CayleyHamiltonResult<R> cayley_hamilton_check(const Matrix<R>& m) {
  Polynomial<R> q = charpoly_berkowitz(m);
  Matrix<R> residual = poly_eval_at_matrix(q, m);
  const bool ok = residual.is_zero();
  return {ok, std::move(q), std::move(residual)};
}

/// Checks p(M)^2 == sum p_i^2 M^(2i), the latter computed term by term.
template <Char2Ring R>
bool frobenius_eval_check(const Polynomial<R>& p, const Matrix<R>& m) {
  const Matrix<R> pm = poly_eval_at_matrix(p, m);
  const Matrix<R> lhs = pm * pm;
  const R& ring = m.ring();
  const Matrix<R> m2 = m * m;
  Matrix<R> rhs(ring, m.rows(), m.cols());
  Matrix<R> power = Matrix<R>::identity(ring, m.rows());
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    const auto& c = p.coeffs()[i];
    rhs = rhs + scale(ring.mul(c, c), power);
    power = power * m2;
  }
  return lhs == rhs;
}

// Ring-specific overloads: a polynomial over R may be evaluated at a matrix
// over H_k(R) through the scalar action q_i * I.

enum class ScalarAction {
  lift,   // embed each coefficient as q_i * I in H_k(R), then evaluate
  scale,  // multiply each first-row entry of M^i by q_i directly
};

inline RingMatrix poly_eval_at_matrix(const RingPolynomial& p, const RingMatrix& m,
                                      ScalarAction action = ScalarAction::lift) {
  if (p.ring() == m.ring()) return poly_eval_at_matrix<Ring>(p, m);
  const Ring& had = m.ring();
  if (!had.is_hadamard() || !(had.base() == p.ring()))
    throw ContextMismatch("polynomial over " + p.ring().name() + " cannot act on a matrix over " + had.name());
  if (!m.is_square()) throw ShapeError("polynomial evaluated at a non-square matrix");
  if (action == ScalarAction::lift) {
    std::vector<Repr> lifted;
    lifted.reserve(p.coeffs().size());
    for (const Repr& c : p.coeffs()) lifted.push_back(had.lift(c));
    return poly_eval_at_matrix<Ring>(RingPolynomial(had, std::move(lifted)), m);
  }
  RingMatrix acc(had, m.rows(), m.cols());
  RingMatrix power = RingMatrix::identity(had, m.rows());
  for (const Repr& c : p.coeffs()) {
    RingMatrix term(had, m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) term(i, j) = had.scale(c, power(i, j));
    acc = acc + term;
    power = power * m;
  }
  return acc;
}

}  // namespace hadring
