#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "dlie/aybe.hpp"
#include "dlie/bracket.hpp"
#include "dlie/ncpoly.hpp"
#include "dlie/operators.hpp"

namespace dlie {

// Raised on malformed input files; `field` names the offending entry.
struct IoError : std::runtime_error {
    std::string field;
    IoError(const std::string& fld, const std::string& msg)
        : std::runtime_error(msg + " (field: " + fld + ")"), field(fld) {}
};

// All file formats are JSON with 1-based indices and rationals as strings.
//
// operator: { "n": int, "entries": [ { "from": [i,j], "to": [ ["p/q",k,l], ... ] }, ... ] }
// bracket:  { "dim": int, "lambda": "p/q", "table": [ { "args": [p,q], "value": [ ["c",k,l], ... ] }, ... ] }
// tensor:   { "n": int, "terms": [ ["p/q", i, j, k, l], ... ] }
// ncpoly:   { "terms": [ ["p/q", [letter, ...]], ... ] }
//
// Omitted units / pairs are zero. Writers emit the canonical form: entries
// sorted by index, no zero terms, two-space indentation, trailing newline.

MatrixOperator operator_from_json(const nlohmann::json& j);
nlohmann::json operator_to_json(const MatrixOperator& r);

struct BracketFile {
    FiniteBracket bracket;
    Rational lambda;
};
BracketFile bracket_from_json(const nlohmann::json& j);
nlohmann::json bracket_to_json(const FiniteBracket& b, const Rational& lambda);

ATensor2 tensor_from_json(const nlohmann::json& j);
nlohmann::json tensor_to_json(const ATensor2& t);

NCPoly ncpoly_from_json(const nlohmann::json& j);
nlohmann::json ncpoly_to_json(const NCPoly& p);
nlohmann::json nctensor_to_json(const NCTensor2& t);

nlohmann::json matrix_to_json(const Matrix& m);          // [ ["p/q",k,l], ... ]
nlohmann::json tensor2_to_json(const Tensor2& t);        // [ ["c",k,l], ... ]

// Canonical serialization (sorted keys, indent 2, newline-terminated).
std::string canonical_dump(const nlohmann::json& j);

nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace dlie
