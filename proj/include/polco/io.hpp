#pragma once

// JSON and CSV encodings.
//
//   matrix: {"dim": n, "re": [[...]], "im": [[...]]}            row-major
//   vector: {"dim": n, "re": [...], "im": [...], "split": [dA, dB]}
//   stokes: {"n": 2|3, "s": [...]}
//
// Doubles are written as the shortest decimal string that round-trips.

#include <optional>
#include <string>
#include <variant>

#include "json.hpp"

#include "polco/measures.hpp"
#include "polco/relations.hpp"
#include "polco/su_basis.hpp"

namespace polco::io {

using Json = nlohmann::ordered_json;

Json to_json(const ComplexMatrix& m);
Json to_json(const StateVector& v);
Json to_json(const StokesVector& s);
Json to_json(const MeasureReport& r, const std::string& input_hash);
Json to_json(const RelationVerdict& v);
Json to_json(const CampaignSummary& s);
Json tolerance_set(double rel = tol::rel);

/// Generator tables plus the nonzero structure constants, 1-based indices,
/// d listed for i <= j <= k and f for i < j < k.
Json constants_document();

/// A vector document before normalization.
struct RawVector {
  CVector amplitudes;
  std::optional<Split> split;
};

struct MatrixDocument {
  ComplexMatrix matrix;
  std::optional<Split> split;
};

using Document = std::variant<MatrixDocument, RawVector>;

/// Throws ParseError on malformed documents.
ComplexMatrix matrix_from_json(const Json& j);
RawVector vector_from_json(const Json& j);
StokesVector stokes_from_json(const Json& j);
/// Dispatches on the shape of "re".
Document document_from_json(const Json& j);
Document read_document(const std::string& path);

std::string format_double(double x);

/// Header line and value line.
std::string to_csv(const MeasureReport& r, const std::string& input_hash);
std::string to_csv(const CampaignSummary& s, bool header);
std::string to_csv(const RelationVerdict& v, bool header);

std::string to_table(const MeasureReport& r, const std::string& input_hash);
std::string to_table(const CampaignSummary& s);
std::string to_table(const RelationVerdict& v);

}  // namespace polco::io
