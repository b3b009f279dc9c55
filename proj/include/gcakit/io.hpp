#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "gcakit/dense.hpp"
#include "gcakit/monomial.hpp"
#include "gcakit/report.hpp"
#include "gcakit/skewnormal.hpp"

namespace gcakit::io {

/// Insertion-ordered JSON so emitted field order is fixed.
using Json = nlohmann::ordered_json;

/// {"num": n, "den": d}
Json to_json(Phase p);
/// {"kind": "monomial", "dim", "target", "phase": [{num, den}, ...]}
Json to_json(const MonomialMatrix& m);
/// {"kind": "dense", "rows", "cols", "data": [{re, im}, ...]} row-major.
Json to_json(const DenseMatrix& m);
/// Nested row arrays of numbers.
Json to_json(const RealMatrix& m);
Json to_json(const IntMatrix& m);
/// {"overall", "checks": [{name, pass, detail, deviation}, ...]}
Json to_json(const VerificationReport& r);
Json complex_to_json(Complex z);

/// Accepts {num, den} or [num, den].
Phase phase_from_json(const Json& j);
/// Accepts a monomial document only.
MonomialMatrix monomial_from_json(const Json& j);
/// Accepts dense or monomial documents.
DenseMatrix dense_from_json(const Json& j);
RealMatrix real_matrix_from_json(const Json& j);
IntMatrix int_matrix_from_json(const Json& j);
/// Accepts a number, [re, im] or {re, im}.
Complex complex_from_json(const Json& j);
VerificationReport report_from_json(const Json& j);

/// Parses text; malformed JSON throws Error(InvalidInput).
Json parse(std::string_view text);
/// Reads a file, or parses the argument itself when it starts with '{' or '['.
Json load(const std::string& path_or_inline);

/// Compact single-line JSON, floats with 17 significant digits, then a newline.
std::string emit(const Json& j);
/// Aligned text rendering; matrices as grids, phases as w<den>^<num>.
std::string render_text(const Json& j);

}  // namespace gcakit::io
