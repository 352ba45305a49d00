#pragma once

// The group algebra R[G] for G = (F_2^k, xor), its isomorphisms with H_k(R)
// and with R[x_1..x_k]/(x_i^2 - 1), and the augmentation ideal.
//
// Group elements are indexed by integers 0 .. 2^k - 1 through the map
// bin(j) = (j_0, ..., j_{k-1}) with j = sum_l j_l 2^(k-1-l): digit j_0 is the
// most significant bit. The standard basis vector e_i therefore has index
// 2^(k-1-i), and the identity e has index 0.

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hadring/error.hpp"
#include "hadring/hadamard.hpp"
#include "hadring/ring.hpp"

namespace hadring {

/// Digits (j_0, ..., j_{k-1}) of j, most significant first.
inline std::vector<std::uint8_t> bin(unsigned k, std::size_t j) {
  std::vector<std::uint8_t> digits(k);
  for (unsigned l = 0; l < k; ++l) digits[l] = static_cast<std::uint8_t>((j >> (k - 1 - l)) & 1);
  return digits;
}

inline std::size_t unbin(const std::vector<std::uint8_t>& digits) {
  std::size_t j = 0;
  for (std::uint8_t d : digits) j = (j << 1) | (d & 1);
  return j;
}

/// Index of the standard basis vector e_i of F_2^k.
inline std::size_t standard_basis_index(unsigned k, unsigned i) {
  if (i >= k) throw ShapeError("standard basis index " + std::to_string(i) + " out of range for k = " + std::to_string(k));
  return std::size_t{1} << (k - 1 - i);
}

class GroupAlgebraElement {
 public:
  GroupAlgebraElement(Ring base, unsigned k, std::vector<Repr> coeffs)
      : base_(std::move(base)), k_(k), coeffs_(std::move(coeffs)) {
    if (k_ > kMaxHadamardLevel) throw ShapeError("group rank " + std::to_string(k_) + " too large");
    if (coeffs_.size() != order())
      throw ShapeError("group algebra element needs " + std::to_string(order()) + " coefficients");
    for (const Repr& a : coeffs_)
      if (!base_.contains(a)) throw ShapeError("coefficient is not an element of " + base_.name());
  }

  static GroupAlgebraElement zero(const Ring& base, unsigned k) {
    return GroupAlgebraElement(base, k, std::vector<Repr>(std::size_t{1} << k, base.zero()));
  }

  /// The basis element g (coefficient 1 at g).
  static GroupAlgebraElement group_element(const Ring& base, unsigned k, std::size_t g) {
    if (g >= (std::size_t{1} << k)) throw ShapeError("group element index out of range");
    GroupAlgebraElement a = zero(base, k);
    a.coeffs_[g] = base.one();
    return a;
  }

  static GroupAlgebraElement identity(const Ring& base, unsigned k) { return group_element(base, k, 0); }

  /// Uniform element of the augmentation ideal: the coefficient of e is set
  /// to the sum of the others.
  static GroupAlgebraElement sample_ideal(const Ring& base, unsigned k, Rng& rng) {
    std::vector<Repr> c;
    c.reserve(std::size_t{1} << k);
    for (std::size_t g = 0; g < (std::size_t{1} << k); ++g) c.push_back(base.sample(rng));
    Repr sum = base.zero();
    for (std::size_t g = 1; g < c.size(); ++g) sum = base.add(sum, c[g]);
    c[0] = std::move(sum);
    return GroupAlgebraElement(base, k, std::move(c));
  }

  const Ring& base() const noexcept { return base_; }
  unsigned rank() const noexcept { return k_; }
  std::size_t order() const noexcept { return std::size_t{1} << k_; }
  const std::vector<Repr>& coeffs() const noexcept { return coeffs_; }
  const Repr& coeff(std::size_t g) const { return coeffs_[g]; }

  bool is_zero() const {
    for (const Repr& a : coeffs_)
      if (!base_.is_zero(a)) return false;
    return true;
  }

  friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    return a.k_ == b.k_ && a.base_ == b.base_ && a.coeffs_ == b.coeffs_;
  }

 private:
  Ring base_;
  unsigned k_;
  std::vector<Repr> coeffs_;
};

namespace detail {
inline void check_compatible(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  check_same(a.base(), b.base());
  if (a.rank() != b.rank())
    throw ShapeError("group ranks differ: " + std::to_string(a.rank()) + " vs " + std::to_string(b.rank()));
}
}  // namespace detail

inline GroupAlgebraElement operator+(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  detail::check_compatible(a, b);
  std::vector<Repr> c(a.order());
  for (std::size_t g = 0; g < a.order(); ++g) c[g] = a.base().add(a.coeff(g), b.coeff(g));
  return GroupAlgebraElement(a.base(), a.rank(), std::move(c));
}

/// Convolution product: (sum a_g g)(sum b_h h) = sum_{g,h} a_g b_h (g xor h).
inline GroupAlgebraElement ga_mul(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  detail::check_compatible(a, b);
  const Ring& r = a.base();
  std::vector<Repr> c(a.order(), r.zero());
  for (std::size_t g = 0; g < a.order(); ++g) {
    if (r.is_zero(a.coeff(g))) continue;
    for (std::size_t h = 0; h < a.order(); ++h) c[g ^ h] = r.add(c[g ^ h], r.mul(a.coeff(g), b.coeff(h)));
  }
  return GroupAlgebraElement(r, a.rank(), std::move(c));
}

inline GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  return ga_mul(a, b);
}

/// (a_{i xor j}) -> sum_j a_j bin(j).
inline GroupAlgebraElement ga_from_hadamard(const HadamardMatrix& h) {
  return GroupAlgebraElement(h.base(), h.level(), h.row());
}

inline HadamardMatrix ga_to_hadamard(const GroupAlgebraElement& a) {
  return HadamardMatrix(a.base(), a.rank(), a.coeffs());
}

/// The augmentation map: sum of coefficients.
inline RingElement ga_augmentation(const GroupAlgebraElement& a) {
  Repr sum = a.base().zero();
  for (const Repr& c : a.coeffs()) sum = a.base().add(sum, c);
  return {a.base(), std::move(sum)};
}

inline bool in_augmentation_ideal(const GroupAlgebraElement& a) { return ga_augmentation(a).is_zero(); }

/// Product of augmentation-ideal members; vanishes whenever at least k+1
/// factors are given. The empty product is e.
inline GroupAlgebraElement ga_ideal_product(const Ring& base, unsigned k,
                                            const std::vector<GroupAlgebraElement>& factors) {
  GroupAlgebraElement acc = GroupAlgebraElement::identity(base, k);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (!in_augmentation_ideal(factors[i]))
      throw NotInIdeal("factor " + std::to_string(i) + " has nonzero augmentation");
    acc = acc * factors[i];
  }
  return acc;
}

/// prod_{i<k} (e_i + e), which equals sum_{g in G} g.
inline GroupAlgebraElement canonical_ideal_product(const Ring& base, unsigned k) {
  std::vector<GroupAlgebraElement> factors;
  for (unsigned i = 0; i < k; ++i)
    factors.push_back(GroupAlgebraElement::group_element(base, k, standard_basis_index(k, i)) +
                      GroupAlgebraElement::identity(base, k));
  return ga_ideal_product(base, k, factors);
}

/// sum_{g in G} g.
inline GroupAlgebraElement sum_of_group(const Ring& base, unsigned k) {
  return GroupAlgebraElement(base, k, std::vector<Repr>(std::size_t{1} << k, base.one()));
}

/// Element of R[x_1..x_k]/(x_1^2 - 1, ..., x_k^2 - 1), stored as the
/// coefficients of the 2^k square-free monomials. Monomial x_1^{i_0} ...
/// x_k^{i_{k-1}} is stored as its exponent vector (i_0, ..., i_{k-1}).
class MultilinearPolynomial {
 public:
  struct Term {
    std::vector<std::uint8_t> exponents;
    Repr coefficient;
  };

  MultilinearPolynomial(Ring base, unsigned k) : base_(std::move(base)), k_(k) {}

  const Ring& base() const noexcept { return base_; }
  unsigned variables() const noexcept { return k_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }

  /// Adds c * x^exponents, reducing every exponent modulo 2.
  void add_term(std::vector<std::uint8_t> exponents, const Repr& c) {
    if (exponents.size() != k_) throw ShapeError("monomial has wrong number of variables");
    for (auto& e : exponents) e &= 1;
    for (auto it = terms_.begin(); it != terms_.end(); ++it) {
      if (it->exponents == exponents) {
        it->coefficient = base_.add(it->coefficient, c);
        if (base_.is_zero(it->coefficient)) terms_.erase(it);
        return;
      }
    }
    if (!base_.is_zero(c)) terms_.push_back({std::move(exponents), c});
  }

  Repr coefficient(const std::vector<std::uint8_t>& exponents) const {
    for (const Term& t : terms_)
      if (t.exponents == exponents) return t.coefficient;
    return base_.zero();
  }

  /// Rendering such as "x1*x3 + 1" (coefficients in hex when not 1).
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const Term& t : terms_) {
      if (!out.empty()) out += " + ";
      std::string mono;
      for (unsigned v = 0; v < k_; ++v)
        if (t.exponents[v]) mono += (mono.empty() ? "" : "*") + std::string("x") + std::to_string(v + 1);
      const bool unit = base_.is_one(t.coefficient);
      if (mono.empty())
        out += base_.to_hex(t.coefficient);
      else
        out += unit ? mono : base_.to_hex(t.coefficient) + "*" + mono;
    }
    return out;
  }

  friend bool operator==(const MultilinearPolynomial& a, const MultilinearPolynomial& b) {
    if (!(a.base_ == b.base_) || a.k_ != b.k_ || a.terms_.size() != b.terms_.size()) return false;
    for (const Term& t : a.terms_)
      if (b.coefficient(t.exponents) != t.coefficient) return false;
    return true;
  }

 private:
  Ring base_;
  unsigned k_;
  std::vector<Term> terms_;
};

/// Product with x_i^2 = 1 applied to every monomial.
inline MultilinearPolynomial operator*(const MultilinearPolynomial& a, const MultilinearPolynomial& b) {
  detail::check_same(a.base(), b.base());
  if (a.variables() != b.variables()) throw ShapeError("variable counts differ");
  MultilinearPolynomial r(a.base(), a.variables());
  for (const auto& s : a.terms()) {
    for (const auto& t : b.terms()) {
      std::vector<std::uint8_t> e(a.variables());
      for (unsigned v = 0; v < a.variables(); ++v) e[v] = static_cast<std::uint8_t>(s.exponents[v] + t.exponents[v]);
      r.add_term(std::move(e), a.base().mul(s.coefficient, t.coefficient));
    }
  }
  return r;
}

/// Group element bin(j) maps to the monomial with exponent vector bin(j).
inline MultilinearPolynomial ga_to_polyrep(const GroupAlgebraElement& a) {
  MultilinearPolynomial p(a.base(), a.rank());
  for (std::size_t g = 0; g < a.order(); ++g) p.add_term(bin(a.rank(), g), a.coeff(g));
  return p;
}

inline GroupAlgebraElement ga_from_polyrep(const MultilinearPolynomial& p) {
  GroupAlgebraElement a = GroupAlgebraElement::zero(p.base(), p.variables());
  std::vector<Repr> c = a.coeffs();
  for (const auto& t : p.terms()) {
    const std::size_t g = unbin(t.exponents);
    c[g] = p.base().add(c[g], t.coefficient);
  }
  return GroupAlgebraElement(p.base(), p.variables(), std::move(c));
}

}  // namespace hadring
