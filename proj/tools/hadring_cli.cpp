// hadring: command-line front-end.
//
// Exit codes: 0 success, 1 property or structure violation, 2 usage or
// input error. Standard output carries JSON only.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hadring/hadring.hpp"

namespace {

using hadring::io::json;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw hadring::SpecError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return hadring::io::parse(buf.str());
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

std::vector<hadring::Repr> parse_points(const hadring::Ring& field, const std::vector<std::string>& hex) {
  std::vector<hadring::Repr> out;
  for (const auto& h : hex) out.push_back(field.from_hex(h));
  return out;
}

struct VerifyOptions {
  hadring::CampaignConfig config;
  unsigned jobs = 1;
};

int run_verify(const VerifyOptions& o) {
  const json report = hadring::run_verify_campaign(o.config, o.jobs);
  if (o.config.output) {
    std::ofstream out(*o.config.output);
    if (!out) throw hadring::SpecError("cannot write '" + *o.config.output + "'");
    out << report.dump(2) << '\n';
  }
  emit(report);
  if (!report.at("ok").get<bool>()) {
    std::cerr << "verify: property violations found (see report)\n";
    return kViolation;
  }
  return kOk;
}

struct CharpolyOptions {
  std::string input;
  std::string algo = "berkowitz";
  std::size_t limit = hadring::kDefaultMinorsOracleLimit;
};

int run_charpoly(const CharpolyOptions& o) {
  const hadring::RingMatrix m = hadring::io::matrix_from_json(read_json_file(o.input));
  const hadring::RingPolynomial p =
      o.algo == "minors" ? hadring::charpoly_minors_oracle(m, o.limit) : hadring::charpoly_berkowitz(m);
  emit(hadring::io::to_json(p));
  return kOk;
}

struct AnalyzeOptions {
  std::optional<std::string> input;
  bool starkad_like = false;
  std::string ring = "gf2:8:0x11b";
  std::size_t t = 16;
  unsigned k = 0;
};

int run_analyze(const AnalyzeOptions& o) {
  std::optional<hadring::RingMatrix> m;
  if (o.starkad_like) {
    const hadring::Ring field = hadring::ring_make(o.ring);
    m = hadring::cauchy_build(hadring::starkad_like_spec(field, o.t));
  } else {
    const json j = read_json_file(*o.input);
    if (j.contains("blocks"))
      m = hadring::flatten(hadring::io::block_from_json(j));
    else
      m = hadring::io::matrix_from_json(j);
  }
  hadring::InvariantReport r;
  try {
    r = hadring::analyze(*m, o.k);
  } catch (const hadring::BlockNotHadamard& e) {
    std::cerr << "analyze: not block-Hadamard at k = " << o.k << ": block (" << e.block_row() << ","
              << e.block_col() << "), entry (" << e.row() << "," << e.col() << ")\n";
    return kViolation;
  }
  emit(hadring::io::to_json(r));
  if (!r.within_bound()) {
    std::cerr << "analyze: dependency degree " << r.l << " exceeds 2s = " << r.bound_new << "\n";
    return kViolation;
  }
  return kOk;
}

struct NilpotencyOptions {
  std::string ring = "gf2:1:0x3";
  unsigned k = 1;
  std::size_t samples = 200;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
};

int run_nilpotency(const NilpotencyOptions& o) {
  const json report = hadring::run_nilpotency_campaign(o.ring, o.k, o.samples, o.seed, o.jobs);
  emit(report);
  return report.at("ok").get<bool>() ? kOk : kViolation;
}

struct CauchyOptions {
  std::string ring = "gf2:8:0x11b";
  std::size_t t = 16;
  std::vector<std::string> x;
  std::vector<std::string> y;
  std::optional<unsigned> k;
};

int run_cauchy(const CauchyOptions& o) {
  const hadring::Ring field = hadring::ring_make(o.ring);
  const hadring::CauchySpec spec = o.x.empty() && o.y.empty()
                                       ? hadring::starkad_like_spec(field, o.t)
                                       : hadring::CauchySpec{field, parse_points(field, o.x), parse_points(field, o.y)};
  const hadring::RingMatrix m = hadring::cauchy_build(spec);
  if (o.k) {
    try {
      const auto blocks = hadring::block_hadamard_detect(m, *o.k);
      std::cerr << "cauchy: block-Hadamard at k = " << *o.k << " with s = " << blocks.blocks() << "\n";
    } catch (const hadring::BlockNotHadamard& e) {
      std::cerr << "cauchy: not block-Hadamard at k = " << *o.k << ": block (" << e.block_row() << ","
                << e.block_col() << "), entry (" << e.row() << "," << e.col() << ")\n";
      emit(hadring::io::to_json(m));
      return kViolation;
    }
  }
  emit(hadring::io::to_json(m));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hadamard matrices over characteristic-2 rings: verification and analysis"};
  app.require_subcommand(1);

  VerifyOptions verify;
  std::string out_path;
  auto* v = app.add_subcommand("verify", "Randomized campaign checking q(M)^2 = 0 and related identities");
  v->add_option("--ring", verify.config.ring, "Base ring spec (gf2:<n>:<mod>, quot:<mod>)")->required();
  v->add_option("--k", verify.config.k, "Hadamard level")->required();
  v->add_option("--s", verify.config.s, "Number of block rows")->required();
  v->add_option("--trials", verify.config.trials, "Number of random instances")->required();
  v->add_option("--seed", verify.config.seed, "Campaign seed")->required();
  v->add_option("--out", out_path, "Also write the report to this file");
  v->add_option("--jobs", verify.jobs, "Worker threads")->check(CLI::PositiveNumber);

  CharpolyOptions charpoly;
  auto* c = app.add_subcommand("charpoly", "Characteristic polynomial of a matrix JSON file");
  c->add_option("--in", charpoly.input, "Matrix JSON file")->required();
  c->add_option("--algo", charpoly.algo, "berkowitz or minors")->check(CLI::IsMember({"berkowitz", "minors"}));
  c->add_option("--limit", charpoly.limit, "Size limit of the minors oracle");

  AnalyzeOptions analyze;
  std::string analyze_in;
  auto* a = app.add_subcommand("analyze", "Power-dependency degree of a block-Hadamard linear layer");
  auto* a_in = a->add_option("--in", analyze_in, "Matrix or block-matrix JSON file");
  auto* a_sl = a->add_flag("--starkad-like", analyze.starkad_like, "Analyze the built-in Cauchy layer");
  a_in->excludes(a_sl);
  a->add_option("--ring", analyze.ring, "Field for --starkad-like");
  a->add_option("--t", analyze.t, "Layer width for --starkad-like");
  a->add_option("--k", analyze.k, "Block level")->required();

  NilpotencyOptions nil;
  auto* n = app.add_subcommand("nilpotency", "Augmentation-ideal nilpotency campaign");
  n->add_option("--ring", nil.ring, "Base ring spec");
  n->add_option("--k", nil.k, "Group rank")->required();
  n->add_option("--samples", nil.samples, "Number of sampled products");
  n->add_option("--seed", nil.seed, "Campaign seed")->required();
  n->add_option("--jobs", nil.jobs, "Worker threads")->check(CLI::PositiveNumber);

  CauchyOptions cauchy;
  unsigned cauchy_k = 0;
  auto* y = app.add_subcommand("cauchy", "Build a Cauchy matrix, optionally check block structure, emit JSON");
  y->add_option("--ring", cauchy.ring, "Binary field spec");
  y->add_option("--t", cauchy.t, "Width of the starkad-like default layer");
  y->add_option("--x", cauchy.x, "Hex points x_i (comma separated)")->delimiter(',');
  y->add_option("--y", cauchy.y, "Hex points y_j (comma separated)")->delimiter(',');
  auto* y_k = y->add_option("--k", cauchy_k, "Check block-Hadamard structure at this level");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (v->parsed()) {
      if (!out_path.empty()) verify.config.output = out_path;
      return run_verify(verify);
    }
    if (c->parsed()) return run_charpoly(charpoly);
    if (a->parsed()) {
      if (!analyze.starkad_like && analyze_in.empty()) {
        std::cerr << "analyze: one of --in or --starkad-like is required\n";
        return kUsage;
      }
      if (!analyze_in.empty()) analyze.input = analyze_in;
      return run_analyze(analyze);
    }
    if (n->parsed()) return run_nilpotency(nil);
    if (y->parsed()) {
      if (y_k->count() > 0) cauchy.k = cauchy_k;
      return run_cauchy(cauchy);
    }
  } catch (const hadring::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
