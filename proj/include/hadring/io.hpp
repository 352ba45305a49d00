#pragma once

// JSON forms of the library's values. Ring elements are lowercase hex
// strings of their bit-packed representative; rings are spec strings.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hadring/conjecture.hpp"
#include "hadring/error.hpp"
#include "hadring/group_algebra.hpp"
#include "hadring/hadamard.hpp"
#include "hadring/matrix.hpp"
#include "hadring/ring.hpp"
#include "hadring/starkad.hpp"

namespace hadring::io {

using json = nlohmann::json;

namespace detail {

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SpecError(std::string("missing field '") + key + "'");
  return j.at(key);
}

inline std::size_t size_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    throw SpecError(std::string("field '") + key + "' must be a non-negative integer");
  return v.get<std::size_t>();
}

inline Ring ring_field(const json& j) {
  const json& v = field(j, "ring");
  if (!v.is_string()) throw SpecError("field 'ring' must be a spec string");
  return ring_make(v.get<std::string>());
}

inline Repr element(const Ring& ring, const json& v) {
  if (!v.is_string()) throw SpecError("ring elements must be hex strings");
  return ring.from_hex(v.get<std::string>());
}

inline json elements(const Ring& ring, const std::vector<Repr>& values) {
  json a = json::array();
  for (const Repr& v : values) a.push_back(ring.to_hex(v));
  return a;
}

inline std::vector<Repr> element_list(const Ring& ring, const json& v, std::size_t expected, const char* what) {
  if (!v.is_array()) throw SpecError(std::string(what) + " must be an array");
  if (v.size() != expected)
    throw SpecError(std::string(what) + " has " + std::to_string(v.size()) + " entries, expected " +
                    std::to_string(expected));
  std::vector<Repr> out;
  out.reserve(expected);
  for (const json& e : v) out.push_back(element(ring, e));
  return out;
}

inline unsigned level_field(const json& j) {
  const std::size_t k = size_field(j, "k");
  if (k > kMaxHadamardLevel) throw SpecError("level k = " + std::to_string(k) + " too large");
  return static_cast<unsigned>(k);
}

}  // namespace detail

inline json to_json(const RingMatrix& m) {
  return {{"ring", m.ring().name()},
          {"rows", m.rows()},
          {"cols", m.cols()},
          {"entries", detail::elements(m.ring(), m.entries())}};
}

inline RingMatrix matrix_from_json(const json& j) {
  const Ring ring = detail::ring_field(j);
  const std::size_t rows = detail::size_field(j, "rows");
  const std::size_t cols = detail::size_field(j, "cols");
  return RingMatrix(ring, rows, cols, detail::element_list(ring, detail::field(j, "entries"), rows * cols, "entries"));
}

inline json to_json(const RingPolynomial& p) {
  return {{"ring", p.ring().name()}, {"coeffs", detail::elements(p.ring(), p.coeffs())}};
}

inline RingPolynomial polynomial_from_json(const json& j) {
  const Ring ring = detail::ring_field(j);
  const json& c = detail::field(j, "coeffs");
  if (!c.is_array()) throw SpecError("coeffs must be an array");
  return RingPolynomial(ring, detail::element_list(ring, c, c.size(), "coeffs"));
}

inline json to_json(const HadamardMatrix& h) {
  return {{"ring", h.base().name()}, {"k", h.level()}, {"row", detail::elements(h.base(), h.row())}};
}

inline HadamardMatrix hadamard_from_json(const json& j) {
  const Ring base = detail::ring_field(j);
  const unsigned k = detail::level_field(j);
  return HadamardMatrix(base, k, detail::element_list(base, detail::field(j, "row"), std::size_t{1} << k, "row"));
}

inline json to_json(const GroupAlgebraElement& a) {
  return {{"ring", a.base().name()}, {"k", a.rank()}, {"coeffs", detail::elements(a.base(), a.coeffs())}};
}

inline GroupAlgebraElement group_algebra_from_json(const json& j) {
  const Ring base = detail::ring_field(j);
  const unsigned k = detail::level_field(j);
  return GroupAlgebraElement(base, k,
                             detail::element_list(base, detail::field(j, "coeffs"), std::size_t{1} << k, "coeffs"));
}

inline json to_json(const BlockHadamardMatrix& m) {
  const Ring base = m.base();
  json blocks = json::array();
  for (std::size_t i = 0; i < m.blocks(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.blocks(); ++j) row.push_back(detail::elements(base, m.block(i, j).row()));
    blocks.push_back(std::move(row));
  }
  return {{"ring", base.name()}, {"k", m.level()}, {"s", m.blocks()}, {"blocks", std::move(blocks)}};
}

inline BlockHadamardMatrix block_from_json(const json& j) {
  const Ring base = detail::ring_field(j);
  const unsigned k = detail::level_field(j);
  const std::size_t s = detail::size_field(j, "s");
  const json& rows = detail::field(j, "blocks");
  if (!rows.is_array() || rows.size() != s) throw SpecError("blocks must be an array of s rows");
  std::vector<HadamardMatrix> blocks;
  for (const json& row : rows) {
    if (!row.is_array() || row.size() != s) throw SpecError("each block row must hold s blocks");
    for (const json& b : row)
      blocks.emplace_back(base, k, detail::element_list(base, b, std::size_t{1} << k, "block row"));
  }
  return BlockHadamardMatrix(base, k, s, blocks);
}

inline json to_json(const InvariantReport& r) {
  return {{"t", r.t},
          {"s", r.s},
          {"k", r.k},
          {"l", r.l},
          {"bound_new", r.bound_new},
          {"bound_old", r.bound_old},
          {"dim_lower_bound", r.dim_lower_bound}};
}

inline InvariantReport report_from_json(const json& j) {
  InvariantReport r;
  r.t = detail::size_field(j, "t");
  r.s = detail::size_field(j, "s");
  r.k = static_cast<unsigned>(detail::size_field(j, "k"));
  r.l = detail::size_field(j, "l");
  r.bound_new = detail::size_field(j, "bound_new");
  r.bound_old = detail::size_field(j, "bound_old");
  r.dim_lower_bound = detail::size_field(j, "dim_lower_bound");
  return r;
}

/// Full evidence of a conjecture check.
inline json to_json(const ConjectureReport& r) {
  return {{"ok", r.ok()},
          {"q", to_json(r.q)},
          {"Q", to_json(r.big_q)},
          {"q_of_m_squared", to_json(r.q_of_m_squared)},
          {"cayley_hamilton_residual", to_json(r.cayley_hamilton_residual)},
          {"conjecture_holds", r.conjecture_holds},
          {"cayley_hamilton_holds", r.cayley_hamilton_holds},
          {"coefficients_correspond", r.coefficients_correspond},
          {"squares_are_scalar", r.squares_are_scalar},
          {"frobenius_chain_holds", r.frobenius_chain_holds},
          {"scalar_action_paths_agree", r.scalar_action_paths_agree}};
}

/// Parses JSON text, turning syntax errors into SpecError.
inline json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw SpecError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace hadring::io
