#pragma once

// Finite commutative rings of characteristic 2.
//
// Three kinds of context are supported:
//   binary-field   GF(2^n) = F_2[u]/(f), f irreducible of degree n
//   quotient-ring  F_2[u]/(f) for an arbitrary f of degree m >= 1
//   hadamard-ring  H_k(R), the 2^k x 2^k Hadamard matrices over a context R
//
// Every element is a flat vector of words. A leaf element (field or quotient
// ring) is one word holding the reduced representative. A hadamard-ring
// element is the concatenation of its first row a_0 .. a_{2^k-1}, each entry
// laid out as an element of the base context. Addition is word-wise XOR at
// every level.

#include <algorithm>
#include <array>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hadring/error.hpp"
#include "hadring/gf2x.hpp"
#include "hadring/random.hpp"

namespace hadring {

using Word = std::uint64_t;
using Repr = std::vector<Word>;

enum class RingKind { binary_field, quotient_ring, hadamard_ring };

/// Largest supported modulus degree for leaf rings.
inline constexpr unsigned kMaxModulusDegree = 63;
/// Largest supported Hadamard level (side 2^k).
inline constexpr unsigned kMaxHadamardLevel = 12;

/// Default irreducible moduli for GF(2^n), n = 1..16.
inline constexpr std::array<Word, 17> kDefaultModuli = {
    0,      0x3,    0x7,    0xB,    0x13,   0x25,   0x43,   0x83,   0x11B,
    0x203,  0x409,  0x805,  0x1009, 0x201B, 0x4021, 0x8003, 0x1002B};

inline Word default_modulus(unsigned n) {
  if (n == 0 || n >= kDefaultModuli.size())
    throw SpecError("no default modulus for GF(2^" + std::to_string(n) + ")");
  return kDefaultModuli[n];
}

namespace detail {

inline std::string hex_string(Word v) {
  char buf[17];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, 16);
  return std::string(buf, end);
}

/// Accepts "0x..." (hex), "0b..." (binary) or bare hex.
inline Word parse_modulus(std::string_view text) {
  int base = 16;
  if (text.starts_with("0x") || text.starts_with("0X")) {
    text.remove_prefix(2);
  } else if (text.starts_with("0b") || text.starts_with("0B")) {
    text.remove_prefix(2);
    base = 2;
  }
  Word v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v, base);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
    throw SpecError("malformed modulus '" + std::string(text) + "'");
  return v;
}

inline unsigned parse_unsigned(std::string_view text, const char* what) {
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v, 10);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
    throw SpecError(std::string("malformed ") + what + " '" + std::string(text) + "'");
  return v;
}

}  // namespace detail

/// Description of a ring context; value type with structural equality.
class RingSpec {
 public:
  static RingSpec binary_field(unsigned n, std::optional<Word> modulus = std::nullopt) {
    RingSpec s;
    s.kind_ = RingKind::binary_field;
    s.degree_ = n;
    s.modulus_ = modulus ? *modulus : default_modulus(n);
    return s;
  }

  static RingSpec quotient_ring(Word modulus) {
    RingSpec s;
    s.kind_ = RingKind::quotient_ring;
    s.modulus_ = modulus;
    const int d = gf2x::degree(modulus);
    s.degree_ = d < 0 ? 0 : static_cast<unsigned>(d);
    return s;
  }

  static RingSpec hadamard_ring(const RingSpec& base, unsigned k) {
    RingSpec s;
    s.kind_ = RingKind::hadamard_ring;
    s.base_ = std::make_shared<const RingSpec>(base);
    s.level_ = k;
    return s;
  }

  /// Parses `gf2:<n>[:<modulus>]`, `quot:<modulus>` or `had:<base-spec>:<k>`.
  static RingSpec parse(std::string_view text) {
    const auto fail = [&](const std::string& why) -> SpecError {
      return SpecError("bad ring spec '" + std::string(text) + "': " + why);
    };
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) throw fail("missing ':'");
    const std::string_view head = text.substr(0, colon);
    const std::string_view rest = text.substr(colon + 1);
    if (head == "gf2") {
      const auto c = rest.find(':');
      const unsigned n = detail::parse_unsigned(rest.substr(0, c), "field degree");
      if (c == std::string_view::npos) return binary_field(n);
      return binary_field(n, detail::parse_modulus(rest.substr(c + 1)));
    }
    if (head == "quot") return quotient_ring(detail::parse_modulus(rest));
    if (head == "had") {
      const auto c = rest.rfind(':');
      if (c == std::string_view::npos) throw fail("expected had:<base>:<k>");
      return hadamard_ring(parse(rest.substr(0, c)),
                           detail::parse_unsigned(rest.substr(c + 1), "hadamard level"));
    }
    throw fail("unknown ring kind '" + std::string(head) + "'");
  }

  std::string to_string() const {
    switch (kind_) {
      case RingKind::binary_field:
        return "gf2:" + std::to_string(degree_) + ":0x" + detail::hex_string(modulus_);
      case RingKind::quotient_ring:
        return "quot:0x" + detail::hex_string(modulus_);
      case RingKind::hadamard_ring:
        return "had:" + base_->to_string() + ":" + std::to_string(level_);
    }
    return {};
  }

  RingKind kind() const noexcept { return kind_; }
  unsigned degree() const noexcept { return degree_; }
  Word modulus() const noexcept { return modulus_; }
  unsigned level() const noexcept { return level_; }
  const RingSpec& base() const {
    if (!base_) throw SpecError("ring spec has no base ring");
    return *base_;
  }

  friend bool operator==(const RingSpec& a, const RingSpec& b) {
    if (a.kind_ != b.kind_) return false;
    if (a.kind_ == RingKind::hadamard_ring) return a.level_ == b.level_ && *a.base_ == *b.base_;
    return a.degree_ == b.degree_ && a.modulus_ == b.modulus_;
  }

 private:
  RingKind kind_ = RingKind::binary_field;
  unsigned degree_ = 0;
  Word modulus_ = 0;
  unsigned level_ = 0;
  std::shared_ptr<const RingSpec> base_;
};

namespace detail {

struct RingNode {
  RingSpec spec;
  RingKind kind;
  std::size_t width = 1;      // words per element
  std::size_t bit_width = 0;  // bits of the packed representative
  // leaf rings
  unsigned degree = 0;
  Word modulus = 0;
  bool field = false;
  // hadamard rings
  std::shared_ptr<const RingNode> base;
  unsigned level = 0;
};

inline std::shared_ptr<const RingNode> make_node(const RingSpec& spec) {
  auto node = std::make_shared<RingNode>();
  node->spec = spec;
  node->kind = spec.kind();
  switch (spec.kind()) {
    case RingKind::binary_field:
    case RingKind::quotient_ring: {
      const int d = gf2x::degree(spec.modulus());
      if (d < 1) throw SpecError("modulus of degree " + std::to_string(d) + " in " + spec.to_string());
      if (static_cast<unsigned>(d) > kMaxModulusDegree)
        throw SpecError("modulus degree above " + std::to_string(kMaxModulusDegree));
      node->degree = static_cast<unsigned>(d);
      node->modulus = spec.modulus();
      node->field = gf2x::is_irreducible(spec.modulus());
      if (spec.kind() == RingKind::binary_field) {
        if (node->degree != spec.degree())
          throw SpecError("modulus degree " + std::to_string(d) + " does not match n = " +
                          std::to_string(spec.degree()));
        if (!node->field) throw SpecError("reducible modulus for binary field " + spec.to_string());
      }
      node->width = 1;
      node->bit_width = node->degree;
      break;
    }
    case RingKind::hadamard_ring: {
      if (spec.level() > kMaxHadamardLevel)
        throw SpecError("hadamard level above " + std::to_string(kMaxHadamardLevel));
      node->base = make_node(spec.base());
      node->level = spec.level();
      node->width = node->base->width << spec.level();
      node->bit_width = node->base->bit_width << spec.level();
      break;
    }
  }
  return node;
}

using In = std::span<const Word>;
using Out = std::span<Word>;

inline void set_one(const RingNode& n, Out out) {
  std::fill(out.begin(), out.end(), Word{0});
  if (n.kind == RingKind::hadamard_ring)
    set_one(*n.base, out.first(n.base->width));
  else
    out[0] = 1;
}

// out must not alias a or b.
inline void mul_into(const RingNode& n, In a, In b, Out out) {
  if (n.kind != RingKind::hadamard_ring) {
    out[0] = gf2x::mulmod(a[0], b[0], n.modulus, n.degree);
    return;
  }
  // First row of the product: c_j = sum_i a_i * b_{i xor j}.
  const std::size_t size = std::size_t{1} << n.level;
  const std::size_t w = n.base->width;
  std::vector<Word> tmp(w);
  std::fill(out.begin(), out.end(), Word{0});
  for (std::size_t j = 0; j < size; ++j) {
    Out c = out.subspan(j * w, w);
    for (std::size_t i = 0; i < size; ++i) {
      mul_into(*n.base, a.subspan(i * w, w), b.subspan((i ^ j) * w, w), tmp);
      for (std::size_t t = 0; t < w; ++t) c[t] ^= tmp[t];
    }
  }
}

inline void sample_into(const RingNode& n, Rng& rng, Out out) {
  if (n.kind != RingKind::hadamard_ring) {
    out[0] = rng.bits(n.degree);
    return;
  }
  const std::size_t w = n.base->width;
  for (std::size_t i = 0; i < (std::size_t{1} << n.level); ++i)
    sample_into(*n.base, rng, out.subspan(i * w, w));
}

inline bool reduced(const RingNode& n, In v) {
  if (n.kind != RingKind::hadamard_ring) return gf2x::degree(v[0]) < static_cast<int>(n.degree);
  const std::size_t w = n.base->width;
  for (std::size_t i = 0; i < (std::size_t{1} << n.level); ++i)
    if (!reduced(*n.base, v.subspan(i * w, w))) return false;
  return true;
}

// Bit packing: entry i of a hadamard element occupies bits
// [i * base_bits, (i + 1) * base_bits).
inline void pack(const RingNode& n, In v, std::vector<bool>& bits, std::size_t offset) {
  if (n.kind != RingKind::hadamard_ring) {
    for (unsigned b = 0; b < n.degree; ++b) bits[offset + b] = ((v[0] >> b) & 1) != 0;
    return;
  }
  const std::size_t w = n.base->width;
  for (std::size_t i = 0; i < (std::size_t{1} << n.level); ++i)
    pack(*n.base, v.subspan(i * w, w), bits, offset + i * n.base->bit_width);
}

inline void unpack(const RingNode& n, const std::vector<bool>& bits, std::size_t offset, Out v) {
  if (n.kind != RingKind::hadamard_ring) {
    Word x = 0;
    for (unsigned b = 0; b < n.degree; ++b)
      if (bits[offset + b]) x |= Word{1} << b;
    v[0] = x;
    return;
  }
  const std::size_t w = n.base->width;
  for (std::size_t i = 0; i < (std::size_t{1} << n.level); ++i)
    unpack(*n.base, bits, offset + i * n.base->bit_width, v.subspan(i * w, w));
}

}  // namespace detail

/// Handle to an immutable ring context. Cheap to copy; safe to share
/// between threads.
class Ring {
 public:
  using value_type = Repr;

  /// Builds and validates a context (irreducibility for binary fields,
  /// positive modulus degree, characteristic 2).
  explicit Ring(const RingSpec& spec) : node_(detail::make_node(spec)) {
    if (!is_zero(add(one(), one())))
      throw SpecError("ring " + spec.to_string() + " does not have characteristic 2");
  }

  const RingSpec& spec() const noexcept { return node_->spec; }
  RingKind kind() const noexcept { return node_->kind; }
  std::string name() const { return node_->spec.to_string(); }
  std::size_t width() const noexcept { return node_->width; }
  std::size_t bit_width() const noexcept { return node_->bit_width; }
  bool is_leaf() const noexcept { return node_->kind != RingKind::hadamard_ring; }
  bool is_hadamard() const noexcept { return node_->kind == RingKind::hadamard_ring; }

  /// True when every nonzero element is invertible.
  bool is_field() const noexcept {
    const detail::RingNode* n = node_.get();
    while (n->kind == RingKind::hadamard_ring) {
      if (n->level != 0) return false;
      n = n->base.get();
    }
    return n->field;
  }

  unsigned modulus_degree() const {
    require_leaf("modulus_degree");
    return node_->degree;
  }
  Word modulus() const {
    require_leaf("modulus");
    return node_->modulus;
  }

  Ring base() const {
    require_hadamard("base");
    return Ring(node_->base);
  }
  unsigned level() const {
    require_hadamard("level");
    return node_->level;
  }
  /// Number of first-row entries (2^k) of a hadamard-ring element.
  std::size_t row_length() const {
    require_hadamard("row_length");
    return std::size_t{1} << node_->level;
  }

  Repr zero() const { return Repr(width(), 0); }
  Repr one() const {
    Repr r(width());
    detail::set_one(*node_, r);
    return r;
  }

  Repr add(const Repr& a, const Repr& b) const {
    Repr r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] ^= b[i];
    return r;
  }
  // Characteristic 2: subtraction is addition.
  Repr sub(const Repr& a, const Repr& b) const { return add(a, b); }

  Repr mul(const Repr& a, const Repr& b) const {
    Repr r(width());
    detail::mul_into(*node_, a, b, r);
    return r;
  }
  Repr square(const Repr& a) const { return mul(a, a); }

  Repr pow(Repr a, std::uint64_t e) const {
    Repr r = one();
    while (e != 0) {
      if (e & 1) r = mul(r, a);
      e >>= 1;
      if (e != 0) a = mul(a, a);
    }
    return r;
  }

  /// Multiplicative inverse; throws NotInvertible for zero and zero divisors.
  /// A Hadamard element H satisfies H^2 = lambda(H)^2 I, so H is a unit iff
  /// its eigenvalue is, with H^-1 = lambda(H)^-2 H.
  Repr inverse(const Repr& a) const {
    if (is_leaf()) {
      auto inv = gf2x::invmod(a[0], node_->modulus);
      if (!inv) throw NotInvertible("element " + to_hex(a) + " is not invertible in " + name());
      return Repr{*inv};
    }
    const Ring b = base();
    Repr lambda = b.zero();
    for (const Repr& entry : split(a)) lambda = b.add(lambda, entry);
    Repr lambda_inv;
    try {
      lambda_inv = b.inverse(lambda);
    } catch (const NotInvertible&) {
      throw NotInvertible("element " + to_hex(a) + " is not invertible in " + name());
    }
    return scale(b.square(lambda_inv), a);
  }

  bool equal(const Repr& a, const Repr& b) const { return a == b; }
  bool is_zero(const Repr& a) const {
    return std::all_of(a.begin(), a.end(), [](Word w) { return w == 0; });
  }
  bool is_one(const Repr& a) const { return a == one(); }

  /// True when `v` has this ring's width and is fully reduced.
  bool contains(const Repr& v) const {
    return v.size() == width() && detail::reduced(*node_, v);
  }

  /// Leaf element whose representative has the bit pattern of `bits`.
  Repr from_uint(Word bits) const {
    require_leaf("from_uint");
    if (gf2x::degree(bits) >= static_cast<int>(node_->degree))
      throw ShapeError("value 0x" + detail::hex_string(bits) + " does not fit in " + name());
    return Repr{bits};
  }

  /// Uniform element; consumes the generator deterministically.
  Repr sample(Rng& rng) const {
    Repr r(width());
    detail::sample_into(*node_, rng, r);
    return r;
  }

  /// Embeds a base-ring scalar c as c * I.
  Repr lift(const Repr& c) const {
    require_hadamard("lift");
    Repr r = zero();
    std::copy(c.begin(), c.end(), r.begin());
    return r;
  }

  /// Scalar action of a base-ring element on a hadamard-ring element.
  Repr scale(const Repr& c, const Repr& v) const {
    require_hadamard("scale");
    const Ring b = base();
    std::vector<Repr> row = split(v);
    for (Repr& entry : row) entry = b.mul(c, entry);
    return join(row);
  }

  /// First row of a hadamard-ring element.
  std::vector<Repr> split(const Repr& v) const {
    require_hadamard("split");
    const std::size_t w = node_->base->width;
    std::vector<Repr> row;
    row.reserve(row_length());
    for (std::size_t i = 0; i < row_length(); ++i)
      row.emplace_back(v.begin() + static_cast<std::ptrdiff_t>(i * w),
                       v.begin() + static_cast<std::ptrdiff_t>((i + 1) * w));
    return row;
  }

  Repr join(const std::vector<Repr>& row) const {
    require_hadamard("join");
    if (row.size() != row_length()) throw ShapeError("first row has wrong length for " + name());
    Repr r;
    r.reserve(width());
    for (const Repr& entry : row) {
      if (entry.size() != node_->base->width) throw ShapeError("entry width mismatch in " + name());
      r.insert(r.end(), entry.begin(), entry.end());
    }
    return r;
  }

  /// Lowercase hex of the bit-packed representative, no prefix, "0" for zero.
  std::string to_hex(const Repr& v) const {
    if (is_leaf()) return detail::hex_string(v[0]);
    std::vector<bool> bits(bit_width(), false);
    detail::pack(*node_, v, bits, 0);
    std::string out;
    const std::size_t digits = (bits.size() + 3) / 4;
    for (std::size_t d = digits; d-- > 0;) {
      unsigned nib = 0;
      for (unsigned b = 0; b < 4; ++b) {
        const std::size_t pos = d * 4 + b;
        if (pos < bits.size() && bits[pos]) nib |= 1u << b;
      }
      if (out.empty() && nib == 0) continue;
      out.push_back("0123456789abcdef"[nib]);
    }
    return out.empty() ? "0" : out;
  }

  Repr from_hex(std::string_view text) const {
    if (text.starts_with("0x") || text.starts_with("0X")) text.remove_prefix(2);
    if (text.empty()) throw SpecError("empty element literal for " + name());
    std::vector<bool> bits(text.size() * 4, false);
    for (std::size_t i = 0; i < text.size(); ++i) {
      const char ch = text[text.size() - 1 - i];
      unsigned nib;
      if (ch >= '0' && ch <= '9')
        nib = static_cast<unsigned>(ch - '0');
      else if (ch >= 'a' && ch <= 'f')
        nib = static_cast<unsigned>(ch - 'a' + 10);
      else if (ch >= 'A' && ch <= 'F')
        nib = static_cast<unsigned>(ch - 'A' + 10);
      else
        throw SpecError("bad hex digit in element literal '" + std::string(text) + "'");
      for (unsigned b = 0; b < 4; ++b) bits[i * 4 + b] = ((nib >> b) & 1) != 0;
    }
    for (std::size_t pos = bit_width(); pos < bits.size(); ++pos)
      if (bits[pos])
        throw SpecError("element literal '" + std::string(text) + "' is not reduced in " + name());
    bits.resize(std::max(bits.size(), bit_width()), false);
    Repr r(width());
    detail::unpack(*node_, bits, 0, r);
    return r;
  }

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.node_ == b.node_ || a.node_->spec == b.node_->spec;
  }

 private:
  explicit Ring(std::shared_ptr<const detail::RingNode> node) : node_(std::move(node)) {}

  void require_leaf(const char* op) const {
    if (!is_leaf()) throw SpecError(std::string(op) + " needs a field or quotient ring, got " + name());
  }
  void require_hadamard(const char* op) const {
    if (!is_hadamard()) throw SpecError(std::string(op) + " needs a hadamard ring, got " + name());
  }

  std::shared_ptr<const detail::RingNode> node_;
};

inline Ring ring_make(const RingSpec& spec) { return Ring(spec); }
inline Ring ring_make(std::string_view spec) { return Ring(RingSpec::parse(spec)); }

/// The hadamard-ring context H_k(base).
inline Ring hadamard_ring(const Ring& base, unsigned k) {
  return Ring(RingSpec::hadamard_ring(base.spec(), k));
}

/// An element tagged with its context. Arithmetic between elements of
/// different contexts throws ContextMismatch.
struct RingElement {
  Ring ring;
  Repr value;

  std::string to_hex() const { return ring.to_hex(value); }
  bool is_zero() const { return ring.is_zero(value); }

  friend bool operator==(const RingElement& a, const RingElement& b) {
    return a.ring == b.ring && a.value == b.value;
  }
};

namespace detail {
inline void check_same(const Ring& a, const Ring& b) {
  if (!(a == b)) throw ContextMismatch("context mismatch: " + a.name() + " vs " + b.name());
}
}  // namespace detail

inline RingElement ring_add(const RingElement& a, const RingElement& b) {
  detail::check_same(a.ring, b.ring);
  return {a.ring, a.ring.add(a.value, b.value)};
}

inline RingElement ring_mul(const RingElement& a, const RingElement& b) {
  detail::check_same(a.ring, b.ring);
  return {a.ring, a.ring.mul(a.value, b.value)};
}

inline RingElement ring_inverse(const RingElement& a) { return {a.ring, a.ring.inverse(a.value)}; }

inline RingElement ring_sample(const Ring& ring, Rng& rng) { return {ring, ring.sample(rng)}; }

inline RingElement operator+(const RingElement& a, const RingElement& b) { return ring_add(a, b); }
inline RingElement operator*(const RingElement& a, const RingElement& b) { return ring_mul(a, b); }

}  // namespace hadring
