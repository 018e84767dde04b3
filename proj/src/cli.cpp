#include "polco/cli.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "polco/errors.hpp"
#include "polco/io.hpp"
#include "polco/measures.hpp"
#include "polco/relations.hpp"
#include "polco/states.hpp"

namespace polco::cli {

namespace {

struct Config {
  std::string input;
  std::string out;
  std::string kind;
  std::string name;
  std::string relation;
  std::string split_text;
  std::string format = "json";
  int dim = 0;
  int rank = 0;
  std::uint64_t seed = 0;
  std::int64_t samples = 1000;
  std::optional<double> tol;
  bool equal_weights = false;
};

/// Usage-level failure detected after CLI11 parsing.
struct UsageError : Error {
  using Error::Error;
};

std::optional<Split> parse_split(const std::string& text) {
  if (text.empty()) return std::nullopt;
  const auto x = text.find('x');
  if (x == std::string::npos) throw UsageError("--split must look like AxB, got '" + text + "'");
  try {
    std::size_t used_a = 0, used_b = 0;
    const int a = std::stoi(text.substr(0, x), &used_a);
    const int b = std::stoi(text.substr(x + 1), &used_b);
    if (used_a != x || used_b != text.size() - x - 1 || a < 1 || b < 1) throw std::invalid_argument("split");
    return Split{a, b};
  } catch (const std::logic_error&) {
    throw UsageError("--split must look like AxB, got '" + text + "'");
  }
}

void emit(const Config& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + cfg.out + "'");
  file << text;
}

std::string dump(const io::Json& j) { return j.dump() + "\n"; }

// Normalized view of an input document.
struct Input {
  std::optional<StateVector> state;
  std::optional<ComplexMatrix> matrix;
  std::optional<Split> split;
  double intensity = 1.0;
  std::string hash;
};

Input load_input(const Config& cfg) {
  if (cfg.input.empty()) throw UsageError("--input is required");
  const auto doc = io::read_document(cfg.input);
  const auto cli_split = parse_split(cfg.split_text);
  Input in;
  if (const auto* v = std::get_if<io::RawVector>(&doc)) {
    in.hash = content_hash(v->amplitudes);
    in.intensity = norm_sq(v->amplitudes);
    in.split = v->split ? v->split : cli_split;
    in.state = StateVector::normalized(v->amplitudes, in.split);
  } else {
    const auto& m = std::get<io::MatrixDocument>(doc);
    in.hash = content_hash(m.matrix.data());
    in.split = m.split ? m.split : cli_split;
    in.matrix = m.matrix;
  }
  return in;
}

// --- analyze ------------------------------------------------------------------

int cmd_analyze(const Config& cfg, std::ostream& out) {
  const Input in = load_input(cfg);
  MeasureReport report;
  if (in.state) {
    report = analyze(*in.state);
    report.intensity = in.intensity;
  } else {
    ComplexMatrix m = *in.matrix;
    if (m.dim() != 2 && m.dim() != 3) {
      if (!in.split) {
        throw ValidationError("a " + std::to_string(m.dim()) + "x" + std::to_string(m.dim()) +
                              " matrix needs a split to be reduced; pass --split AxB");
      }
      const auto full = validate_density(m, false);
      if (!full.hermitian || !full.psd) throw ValidationError("parent matrix is not a valid density matrix");
      m = partial_trace(m, in.split->a, in.split->b, Subsystem::A);
    }
    report = analyze(m);
  }

  if (cfg.format == "csv") {
    emit(cfg, io::to_csv(report, in.hash), out);
  } else if (cfg.format == "table") {
    emit(cfg, io::to_table(report, in.hash), out);
  } else {
    emit(cfg, dump(io::to_json(report, in.hash)), out);
  }
  return kSuccess;
}

// --- generate -----------------------------------------------------------------

int cmd_generate(const Config& cfg, std::ostream& out) {
  const auto split = parse_split(cfg.split_text);
  int dim = cfg.dim;
  if (split) {
    if (dim != 0 && dim != split->a * split->b) throw UsageError("--dim does not match --split");
    dim = split->a * split->b;
  }

  io::Json doc;
  if (cfg.kind == "named") {
    if (cfg.name.empty()) throw UsageError("--kind named needs --name");
    doc = io::to_json(named_state(parse_named_state(cfg.name)));
  } else if (cfg.kind == "haar-pure") {
    if (dim < 2) throw UsageError("--kind haar-pure needs --dim >= 2 or --split");
    doc = io::to_json(haar_pure(dim, cfg.seed, split));
  } else if (cfg.kind == "mixed") {
    if (dim < 2) throw UsageError("--kind mixed needs --dim >= 2 or --split");
    if (!split && dim != 2 && dim != 3) throw UsageError("mixed matrices beyond 3x3 need --split so they can be reduced");
    const int rank = cfg.rank > 0 ? cfg.rank : dim;
    if (rank > dim) throw UsageError("--rank must not exceed the dimension");
    doc = io::to_json(random_mixed(dim, rank, cfg.seed, cfg.equal_weights));
    if (split) doc["split"] = io::Json::array({split->a, split->b});
  } else {
    throw UsageError("--kind must be haar-pure, mixed or named");
  }
  emit(cfg, dump(doc), out);
  return kSuccess;
}

// --- verify -------------------------------------------------------------------

int cmd_verify(const Config& cfg, std::ostream& out) {
  const double tolerance = cfg.tol.value_or(tol::rel);
  std::ostringstream text;
  bool all_pass = true;
  bool header = true;

  const auto write_verdict = [&](const RelationVerdict& v) {
    all_pass = all_pass && v.pass;
    if (cfg.format == "csv") {
      text << io::to_csv(v, header);
    } else if (cfg.format == "table") {
      text << io::to_table(v) << '\n';
    } else {
      text << dump(io::to_json(v));
    }
    header = false;
  };

  if (!cfg.input.empty()) {
    const Input in = load_input(cfg);
    const RelationOptions opts{tolerance, Subsystem::A};
    std::vector<RelationId> relations;
    if (!cfg.relation.empty() && cfg.relation != "all") {
      relations.push_back(parse_relation(cfg.relation));
    } else {
      relations = in.state ? applicable_relations(*in.state) : applicable_relations(*in.matrix);
    }
    if (relations.empty()) throw PreconditionError("no relation applies to this input");
    for (RelationId r : relations) {
      RelationVerdict v;
      if (in.state) {
        v = check(r, *in.state, opts);
      } else {
        ComplexMatrix m = *in.matrix;
        const double tr = m.trace().real();
        if (tr > tol::norm && r != RelationId::mixed_parent_bound) m *= 1.0 / tr;
        v = check(r, m, opts);
      }
      write_verdict(v);
    }
    emit(cfg, text.str(), out);
    return all_pass ? kSuccess : kVerificationFailed;
  }

  if (cfg.relation.empty()) throw UsageError("verify needs --relation (or --input)");
  std::vector<RelationId> relations;
  if (cfg.relation == "all") {
    relations = all_relations();
  } else {
    relations.push_back(parse_relation(cfg.relation));
  }
  CampaignParams params;
  params.dim = cfg.dim;
  params.rank = cfg.rank;
  params.tolerance = tolerance;
  for (RelationId r : relations) {
    CampaignParams p = params;
    // --dim only means something for the relations that take one.
    if (r != RelationId::duality && r != RelationId::mixed_triality && r != RelationId::entanglement_bridge) {
      p.dim = 0;
      p.rank = r == RelationId::pct || r == RelationId::mixed_parent_bound ? params.rank : 0;
    }
    const CampaignSummary s = run_campaign(r, cfg.samples, cfg.seed, p);
    all_pass = all_pass && s.failures == 0;
    if (cfg.format == "csv") {
      text << io::to_csv(s, header);
    } else if (cfg.format == "table") {
      text << io::to_table(s) << '\n';
    } else {
      text << dump(io::to_json(s));
    }
    header = false;
  }
  emit(cfg, text.str(), out);
  return all_pass ? kSuccess : kVerificationFailed;
}

int cmd_constants(const Config& cfg, std::ostream& out) {
  emit(cfg, io::constants_document().dump(2) + "\n", out);
  return kSuccess;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Complementarity measures for 2x2 and 3x3 polarization-coherence matrices", "polco"};
  app.require_subcommand(1);
  Config cfg;

  const auto add_seed = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "RNG seed")->envname("POLCO_SEED");
  };
  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));
  };

  auto* analyze_cmd = app.add_subcommand("analyze", "Measures of a state or polarization-coherence matrix");
  analyze_cmd->add_option("--input", cfg.input, "Matrix or state JSON")->required();
  analyze_cmd->add_option("--split", cfg.split_text, "Bipartite split AxB");
  analyze_cmd->add_option("--out", cfg.out, "Output file (default stdout)");
  add_format(analyze_cmd);

  auto* generate_cmd = app.add_subcommand("generate", "Write a named or random state");
  generate_cmd->add_option("--kind", cfg.kind, "haar-pure, mixed or named")->required();
  generate_cmd->add_option("--name", cfg.name, "Named state (with --kind named)");
  generate_cmd->add_option("--dim", cfg.dim, "Dimension");
  generate_cmd->add_option("--split", cfg.split_text, "Bipartite split AxB");
  generate_cmd->add_option("--rank", cfg.rank, "Rank of a mixed state")->check(CLI::PositiveNumber);
  generate_cmd->add_flag("--equal-weights", cfg.equal_weights, "Equal mixing weights for --kind mixed");
  generate_cmd->add_option("--out", cfg.out, "Output file (default stdout)");
  add_seed(generate_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Check complementarity relations on an input or a sampling campaign");
  verify_cmd->add_option("--relation", cfg.relation, "Relation id, or 'all'");
  verify_cmd->add_option("--input", cfg.input, "Check a single matrix or state instead of sampling");
  verify_cmd->add_option("--split", cfg.split_text, "Bipartite split AxB for --input");
  verify_cmd->add_option("--samples", cfg.samples, "Campaign size")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--dim", cfg.dim, "Dimension for duality, mixed-triality, entanglement-bridge");
  verify_cmd->add_option("--rank", cfg.rank, "Fixed rank for mixed samples (default: cycle)")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--tol", cfg.tol, "Relation tolerance")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--out", cfg.out, "Output file (default stdout)");
  add_seed(verify_cmd);
  add_format(verify_cmd);

  auto* constants_cmd = app.add_subcommand("constants", "Generator tables and SU(3) structure constants");
  constants_cmd->add_option("--out", cfg.out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(cfg, out);
    if (*generate_cmd) return cmd_generate(cfg, out);
    if (*verify_cmd) return cmd_verify(cfg, out);
    return cmd_constants(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const UnknownRelation& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const UnknownState& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "invalid input: " << e.what() << '\n';
    return kValidationError;
  }
}

}  // namespace polco::cli
