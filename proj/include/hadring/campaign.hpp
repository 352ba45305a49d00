#pragma once

// Seeded randomized verification campaigns. Trial i draws from the stream
// (seed, i), and outcomes are aggregated in trial order, so a report depends
// only on the configuration and not on the number of worker threads.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "hadring/conjecture.hpp"
#include "hadring/group_algebra.hpp"
#include "hadring/io.hpp"
#include "hadring/ring.hpp"

namespace hadring {

struct CampaignConfig {
  std::string ring;
  unsigned k = 1;
  std::size_t s = 1;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  std::optional<std::string> output;
};

inline void validate(const CampaignConfig& c) {
  if (c.trials < 1) throw SpecError("trials must be at least 1");
  if (c.s < 1) throw SpecError("s must be at least 1");
  if (c.k > kMaxHadamardLevel) throw SpecError("k must be at most " + std::to_string(kMaxHadamardLevel));
}

namespace detail {

// Order matters: it is the order of keys in the "checks" object.
inline const std::vector<std::string>& verify_check_names() {
  static const std::vector<std::string> names = {
      "conjecture",         "cayley_hamilton", "coefficient_correspondence", "squares_scalar",
      "frobenius_chain",    "scalar_action",   "diagram",                    "kernel_nilpotency",
      "group_algebra_nilpotency"};
  return names;
}

struct TrialOutcome {
  std::vector<bool> passed;  // indexed like verify_check_names()
  std::size_t kernel_index = 0;
  io::json violations = io::json::array();
};

inline TrialOutcome run_verify_trial(const Ring& base, const CampaignConfig& c, std::size_t trial) {
  Rng rng(c.seed, trial);
  TrialOutcome out;
  const auto note = [&](const char* check, io::json evidence) {
    out.violations.push_back({{"trial", trial}, {"check", check}, {"evidence", std::move(evidence)}});
  };

  const BlockHadamardMatrix m = BlockHadamardMatrix::sample(base, c.k, c.s, rng);
  const ConjectureReport r = verify_conjecture(m);
  const DiagramReport d = diagram_check(m);
  const BlockHadamardMatrix kernel = BlockHadamardMatrix::sample_kernel(base, c.k, c.s, rng);
  const NilpotencyReport n = kernel_power_nilpotency(kernel);

  std::vector<GroupAlgebraElement> factors;
  for (unsigned i = 0; i <= c.k; ++i) factors.push_back(GroupAlgebraElement::sample_ideal(base, c.k, rng));
  const GroupAlgebraElement product = ga_ideal_product(base, c.k, factors);

  out.passed = {r.conjecture_holds,      r.cayley_hamilton_holds, r.coefficients_correspond,
                r.squares_are_scalar,    r.frobenius_chain_holds, r.scalar_action_paths_agree,
                d.ok(),                  n.ok(),                  product.is_zero()};
  out.kernel_index = n.index;

  if (!r.ok()) note("conjecture", {{"matrix", io::to_json(m)}, {"report", io::to_json(r)}});
  if (!d.ok())
    note("diagram", {{"matrix", io::to_json(m)},
                     {"eigenvalue_square", d.eigenvalue_square},
                     {"determinant_square", d.determinant_square}});
  if (!n.ok())
    note("kernel_nilpotency", {{"matrix", io::to_json(kernel)},
                               {"index", n.index},
                               {"power_2s_zero", n.power_2s_zero},
                               {"power_k1_zero", n.power_k1_zero}});
  if (!product.is_zero()) {
    io::json fs = io::json::array();
    for (const auto& f : factors) fs.push_back(io::to_json(f));
    note("group_algebra_nilpotency", {{"factors", std::move(fs)}, {"product", io::to_json(product)}});
  }
  return out;
}

template <class Fn>
void for_each_trial(std::size_t trials, unsigned jobs, Fn&& fn) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::min<std::size_t>(trials, 256))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < trials; ++i) fn(i);
    return;
  }
  std::vector<std::jthread> workers;
  for (unsigned w = 0; w < jobs; ++w)
    workers.emplace_back([&, w] {
      for (std::size_t i = w; i < trials; i += jobs) fn(i);
    });
}

}  // namespace detail

/// Runs `trials` seeded instances of every check and returns the JSON
/// report. "ok" is true iff no check failed.
inline io::json run_verify_campaign(const CampaignConfig& c, unsigned jobs = 1) {
  validate(c);
  const Ring base = ring_make(c.ring);
  if (!base.is_leaf()) throw SpecError("verify campaigns need a field or quotient ring as base, got " + base.name());

  std::vector<detail::TrialOutcome> outcomes(c.trials);
  detail::for_each_trial(c.trials, jobs, [&](std::size_t i) { outcomes[i] = detail::run_verify_trial(base, c, i); });

  const auto& names = detail::verify_check_names();
  std::vector<std::size_t> passed(names.size(), 0);
  std::size_t max_index = 0;
  io::json violations = io::json::array();
  for (const auto& o : outcomes) {
    for (std::size_t n = 0; n < names.size(); ++n) passed[n] += o.passed[n] ? 1 : 0;
    max_index = std::max(max_index, o.kernel_index);
    for (const auto& v : o.violations) violations.push_back(v);
  }

  io::json checks = io::json::object();
  bool ok = true;
  for (std::size_t n = 0; n < names.size(); ++n) {
    checks[names[n]] = {{"passed", passed[n]}, {"failed", c.trials - passed[n]}};
    ok = ok && passed[n] == c.trials;
  }
  return {{"command", "verify"},
          {"ring", base.name()},
          {"k", c.k},
          {"s", c.s},
          {"trials", c.trials},
          {"seed", c.seed},
          {"checks", std::move(checks)},
          {"max_kernel_nilpotency_index", max_index},
          {"violations", std::move(violations)},
          {"ok", ok}};
}

/// Samples products of k+1 augmentation-ideal elements (all must vanish) and
/// checks that prod (e_i + e) equals the nonzero sum of all group elements.
inline io::json run_nilpotency_campaign(const std::string& ring, unsigned k, std::size_t samples,
                                        std::uint64_t seed, unsigned jobs = 1) {
  if (k > kMaxHadamardLevel) throw SpecError("k must be at most " + std::to_string(kMaxHadamardLevel));
  if (samples < 1) throw SpecError("samples must be at least 1");
  const Ring base = ring_make(ring);
  if (!base.is_leaf()) throw SpecError("nilpotency campaigns need a field or quotient ring, got " + base.name());

  std::vector<char> zero(samples, 0);
  detail::for_each_trial(samples, jobs, [&](std::size_t i) {
    Rng rng(seed, i);
    std::vector<GroupAlgebraElement> factors;
    for (unsigned f = 0; f <= k; ++f) factors.push_back(GroupAlgebraElement::sample_ideal(base, k, rng));
    zero[i] = ga_ideal_product(base, k, factors).is_zero() ? 1 : 0;
  });
  const std::size_t zeros = static_cast<std::size_t>(std::count(zero.begin(), zero.end(), 1));

  const GroupAlgebraElement canonical = canonical_ideal_product(base, k);
  const bool is_sum = canonical == sum_of_group(base, k);
  const bool nonzero = !canonical.is_zero();
  return {{"command", "nilpotency"},
          {"ring", base.name()},
          {"k", k},
          {"samples", samples},
          {"seed", seed},
          {"zero_products", zeros},
          {"nonzero_products", samples - zeros},
          {"canonical_product_is_group_sum", is_sum},
          {"canonical_product_nonzero", nonzero},
          {"ok", zeros == samples && is_sum && nonzero}};
}

}  // namespace hadring
