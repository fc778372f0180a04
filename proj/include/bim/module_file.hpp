#pragma once

#include <string>

#include <json.hpp>

#include "bim/bimodule.hpp"

namespace bim {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const MatrixQ& m);
Json to_json(const VectorQ& v);

/// Two-space indented JSON with arrays of scalars kept on one line.
std::string pretty(const Json& j);

Rational rational_from_json(const Json& j);
MatrixQ matrix_from_json(const Json& j, std::size_t rows, std::size_t cols);

/// Module file: {"dim", "X", "Y", "kappa", "lambda"?, "mu"?, "meta"?}, entries as "p/q" strings.
/// Integers are also accepted as JSON numbers. Throws ParseError.
BIModule parse_module(const std::string& text);
std::string serialize_module(const BIModule& m);

BIModule read_module(const std::string& path);
void write_module(const std::string& path, const BIModule& m);

}  // namespace bim
