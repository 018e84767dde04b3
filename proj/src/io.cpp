#include "polco/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "polco/errors.hpp"

namespace polco::io {

namespace {

Json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

Json split_json(const Split& s) { return Json::array({s.a, s.b}); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

double as_double(const Json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string(what) + " must be a number");
  return j.get<double>();
}

int as_dim(const Json& j) {
  if (!j.is_number_integer() || j.get<long long>() < 1) throw ParseError("\"dim\" must be a positive integer");
  return static_cast<int>(j.get<long long>());
}

std::vector<double> number_array(const Json& j, std::size_t expected, const char* what) {
  if (!j.is_array() || j.size() != expected) {
    throw ParseError(std::string(what) + " must be an array of " + std::to_string(expected) + " numbers");
  }
  std::vector<double> out;
  out.reserve(expected);
  for (const auto& x : j) out.push_back(as_double(x, what));
  return out;
}

std::optional<Split> split_from_json(const Json& j) {
  if (!j.contains("split") || j.at("split").is_null()) return std::nullopt;
  const auto& s = j.at("split");
  if (!s.is_array() || s.size() != 2 || !s[0].is_number_integer() || !s[1].is_number_integer()) {
    throw ParseError("\"split\" must be [dA, dB]");
  }
  return Split{s[0].get<int>(), s[1].get<int>()};
}

Json tensor_entries(bool symmetric) {
  const auto& sc = structure_constants();
  Json out = Json::array();
  for (int i = 0; i < 8; ++i) {
    for (int j = symmetric ? i : i + 1; j < 8; ++j) {
      for (int k = symmetric ? j : j + 1; k < 8; ++k) {
        const double v = symmetric ? sc.d(i, j, k) : sc.f(i, j, k);
        if (v != 0.0) out.push_back(Json::array({i + 1, j + 1, k + 1, v}));
      }
    }
  }
  return out;
}

}  // namespace

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

Json to_json(const ComplexMatrix& m) {
  Json re = Json::array();
  Json im = Json::array();
  for (int r = 0; r < m.dim(); ++r) {
    Json rr = Json::array();
    Json ir = Json::array();
    for (int c = 0; c < m.dim(); ++c) {
      rr.push_back(m(r, c).real());
      ir.push_back(m(r, c).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ir));
  }
  return Json{{"dim", m.dim()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

Json to_json(const StateVector& v) {
  Json re = Json::array();
  Json im = Json::array();
  for (const auto& z : v.amplitudes()) {
    re.push_back(z.real());
    im.push_back(z.imag());
  }
  Json out{{"dim", v.dim()}, {"re", std::move(re)}, {"im", std::move(im)}};
  if (v.split()) out["split"] = split_json(*v.split());
  return out;
}

Json to_json(const StokesVector& s) { return Json{{"n", s.n}, {"s", s.components}}; }

Json tolerance_set(double rel) {
  return Json{{"herm", tol::herm}, {"psd", tol::psd}, {"norm", tol::norm}, {"num", tol::num}, {"rel", rel}};
}

Json to_json(const MeasureReport& r, const std::string& input_hash) {
  Json out;
  out["input_hash"] = input_hash;
  out["dim_n"] = r.dim_n;
  out["predictability_sq"] = number(r.predictability_sq);
  out["coherence_hs_sq"] = number(r.coherence_hs_sq);
  if (r.degree_pol_sq) out["degree_pol_sq"] = number(*r.degree_pol_sq);
  out["linear_entropy_sq"] = number(r.linear_entropy_sq);
  if (r.entanglement_sq) out["entanglement_sq"] = number(*r.entanglement_sq);
  out["stokes_norm_sq"] = number(r.stokes_norm_sq);
  out["stokes"] = to_json(r.stokes);
  out["intensity"] = number(r.intensity);
  out["basis_label"] = r.basis_label;
  Json raw;
  raw["predictability_sq"] = number(r.raw.predictability_sq);
  raw["coherence_hs_sq"] = number(r.raw.coherence_hs_sq);
  raw["linear_entropy_sq"] = number(r.raw.linear_entropy_sq);
  if (r.raw.entanglement_sq) raw["entanglement_sq"] = number(*r.raw.entanglement_sq);
  out["raw"] = std::move(raw);
  out["tolerances"] = tolerance_set();
  return out;
}

Json to_json(const RelationVerdict& v) {
  Json out;
  out["relation"] = std::string(to_string(v.relation));
  out["lhs"] = number(v.lhs);
  out["rhs"] = number(v.rhs);
  out["residual"] = number(v.residual);
  out["tolerance"] = v.tolerance;
  out["pass"] = v.pass;
  out["state_ref"] = v.state_ref;
  Json comps = Json::array();
  for (const auto& c : v.companions) {
    comps.push_back(Json{{"name", c.name}, {"lhs", number(c.lhs)}, {"rhs", number(c.rhs)}, {"residual", number(c.residual)}});
  }
  out["companions"] = std::move(comps);
  if (!v.note.empty()) out["note"] = v.note;
  return out;
}

Json to_json(const CampaignSummary& s) {
  Json out;
  out["relation"] = std::string(to_string(s.relation));
  out["n_samples"] = s.n_samples;
  out["max_residual"] = number(s.max_residual);
  out["mean_residual"] = number(s.mean_residual);
  out["failures"] = s.failures;
  out["errors"] = s.errors;
  out["seed"] = s.seed;
  out["tolerance"] = s.tolerance;
  out["dim"] = s.dim;
  out["rank"] = s.rank;
  return out;
}

Json constants_document() {
  Json pauli = Json::array();
  for (const auto& g : generators(2).generators) pauli.push_back(to_json(g));
  Json gell_mann = Json::array();
  for (const auto& g : generators(3).generators) gell_mann.push_back(to_json(g));
  Json out;
  out["pauli"] = std::move(pauli);
  out["gell_mann"] = std::move(gell_mann);
  out["index_base"] = 1;
  out["d"] = tensor_entries(true);
  out["f"] = tensor_entries(false);
  return out;
}

ComplexMatrix matrix_from_json(const Json& j) {
  const int n = as_dim(field(j, "dim"));
  const auto& re = field(j, "re");
  if (!re.is_array() || re.size() != static_cast<std::size_t>(n)) throw ParseError("\"re\" must have dim rows");
  const bool has_im = j.contains("im") && !j.at("im").is_null();
  if (has_im && (!j.at("im").is_array() || j.at("im").size() != static_cast<std::size_t>(n))) {
    throw ParseError("\"im\" must have dim rows");
  }
  std::vector<Complex> entries;
  entries.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    const auto re_row = number_array(re[static_cast<std::size_t>(r)], static_cast<std::size_t>(n), "matrix row of \"re\"");
    std::vector<double> im_row(static_cast<std::size_t>(n), 0.0);
    if (has_im) im_row = number_array(j.at("im")[static_cast<std::size_t>(r)], static_cast<std::size_t>(n), "matrix row of \"im\"");
    for (int c = 0; c < n; ++c) entries.emplace_back(re_row[static_cast<std::size_t>(c)], im_row[static_cast<std::size_t>(c)]);
  }
  return ComplexMatrix(n, std::move(entries));
}

RawVector vector_from_json(const Json& j) {
  const int n = as_dim(field(j, "dim"));
  const auto re = number_array(field(j, "re"), static_cast<std::size_t>(n), "\"re\"");
  std::vector<double> im(static_cast<std::size_t>(n), 0.0);
  if (j.contains("im") && !j.at("im").is_null()) im = number_array(j.at("im"), static_cast<std::size_t>(n), "\"im\"");
  RawVector out;
  for (int k = 0; k < n; ++k) out.amplitudes.emplace_back(re[static_cast<std::size_t>(k)], im[static_cast<std::size_t>(k)]);
  out.split = split_from_json(j);
  if (out.split && static_cast<long long>(out.split->a) * out.split->b != n) throw ParseError("\"split\" does not factor \"dim\"");
  return out;
}

StokesVector stokes_from_json(const Json& j) {
  const auto& n = field(j, "n");
  if (!n.is_number_integer() || (n.get<int>() != 2 && n.get<int>() != 3)) throw ParseError("\"n\" must be 2 or 3");
  StokesVector s;
  s.n = n.get<int>();
  s.components = number_array(field(j, "s"), static_cast<std::size_t>(s.n * s.n - 1), "\"s\"");
  return s;
}

Document document_from_json(const Json& j) {
  const auto& re = field(j, "re");
  if (re.is_array() && !re.empty() && re[0].is_array()) {
    MatrixDocument doc{matrix_from_json(j), split_from_json(j)};
    if (doc.split && doc.split->a * doc.split->b != doc.matrix.dim()) throw ParseError("\"split\" does not factor \"dim\"");
    return doc;
  }
  return vector_from_json(j);
}

Document read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
  return document_from_json(j);
}

// --- CSV / table -------------------------------------------------------------------

namespace {

using Row = std::vector<std::pair<std::string, std::string>>;

Row report_row(const MeasureReport& r, const std::string& input_hash) {
  Row row;
  row.emplace_back("input_hash", input_hash);
  row.emplace_back("dim_n", std::to_string(r.dim_n));
  row.emplace_back("predictability_sq", format_double(r.predictability_sq));
  row.emplace_back("coherence_hs_sq", format_double(r.coherence_hs_sq));
  if (r.degree_pol_sq) row.emplace_back("degree_pol_sq", format_double(*r.degree_pol_sq));
  row.emplace_back("linear_entropy_sq", format_double(r.linear_entropy_sq));
  if (r.entanglement_sq) row.emplace_back("entanglement_sq", format_double(*r.entanglement_sq));
  row.emplace_back("stokes_norm_sq", format_double(r.stokes_norm_sq));
  for (std::size_t i = 0; i < r.stokes.components.size(); ++i) {
    row.emplace_back("s" + std::to_string(i + 1), format_double(r.stokes.components[i]));
  }
  row.emplace_back("intensity", format_double(r.intensity));
  row.emplace_back("basis_label", r.basis_label);
  return row;
}

Row summary_row(const CampaignSummary& s) {
  return {{"relation", std::string(to_string(s.relation))},
          {"n_samples", std::to_string(s.n_samples)},
          {"max_residual", format_double(s.max_residual)},
          {"mean_residual", format_double(s.mean_residual)},
          {"failures", std::to_string(s.failures)},
          {"errors", std::to_string(s.errors)},
          {"seed", std::to_string(s.seed)},
          {"tolerance", format_double(s.tolerance)},
          {"dim", std::to_string(s.dim)},
          {"rank", std::to_string(s.rank)}};
}

Row verdict_row(const RelationVerdict& v) {
  return {{"relation", std::string(to_string(v.relation))},
          {"lhs", format_double(v.lhs)},
          {"rhs", format_double(v.rhs)},
          {"residual", format_double(v.residual)},
          {"tolerance", format_double(v.tolerance)},
          {"pass", v.pass ? "true" : "false"},
          {"state_ref", v.state_ref}};
}

std::string csv(const Row& row, bool header) {
  std::string keys, values;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) {
      keys += ',';
      values += ',';
    }
    keys += row[i].first;
    values += row[i].second;
  }
  return header ? keys + "\n" + values + "\n" : values + "\n";
}

std::string table(const Row& row) {
  std::size_t width = 0;
  for (const auto& [k, _] : row) width = std::max(width, k.size());
  std::ostringstream out;
  for (const auto& [k, v] : row) out << std::left << std::setw(static_cast<int>(width) + 2) << k << v << '\n';
  return out.str();
}

}  // namespace

std::string to_csv(const MeasureReport& r, const std::string& input_hash) { return csv(report_row(r, input_hash), true); }
std::string to_csv(const CampaignSummary& s, bool header) { return csv(summary_row(s), header); }
std::string to_csv(const RelationVerdict& v, bool header) { return csv(verdict_row(v), header); }

std::string to_table(const MeasureReport& r, const std::string& input_hash) { return table(report_row(r, input_hash)); }
std::string to_table(const CampaignSummary& s) { return table(summary_row(s)); }
std::string to_table(const RelationVerdict& v) { return table(verdict_row(v)); }

}  // namespace polco::io
