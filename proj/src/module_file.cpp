#include "bim/module_file.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "bim/errors.hpp"

namespace bim {

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const VectorQ& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_json(x));
    return out;
}

Json to_json(const MatrixQ& m) {
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
    return out;
}

namespace {

bool is_flat(const Json& j) {
    return std::none_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); });
}

void pretty_into(std::string& out, const Json& j, int depth) {
    const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
    const std::string close(static_cast<std::size_t>(2 * depth), ' ');
    if (j.is_array() && !j.empty() && !is_flat(j)) {
        out += "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            out += pad;
            pretty_into(out, j[i], depth + 1);
            out += i + 1 < j.size() ? ",\n" : "\n";
        }
        out += close + "]";
    } else if (j.is_array()) {
        out += "[";
        for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
        out += "]";
    } else if (j.is_object() && !j.empty()) {
        out += "{\n";
        std::size_t i = 0;
        for (const auto& [k, v] : j.items()) {
            out += pad + Json(k).dump() + ": ";
            pretty_into(out, v, depth + 1);
            out += ++i < j.size() ? ",\n" : "\n";
        }
        out += close + "}";
    } else {
        out += j.dump();
    }
}

}  // namespace

std::string pretty(const Json& j) {
    std::string out;
    pretty_into(out, j, 0);
    return out + "\n";
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) throw ParseError("expected a rational as \"p/q\" string, got " + j.dump());
    auto r = Rational::try_parse(j.get<std::string>());
    if (!r) throw ParseError("malformed rational \"" + j.get<std::string>() + "\"");
    return *r;
}

MatrixQ matrix_from_json(const Json& j, std::size_t rows, std::size_t cols) {
    if (!j.is_array() || j.size() != rows) throw ParseError("matrix must be an array of " + std::to_string(rows) + " rows");
    MatrixQ m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const Json& row = j[r];
        if (!row.is_array() || row.size() != cols)
            throw ParseError("matrix row " + std::to_string(r) + " must have " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational_from_json(row[c]);
    }
    return m;
}

BIModule parse_module(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("module file must be a JSON object");
    for (const char* key : {"dim", "X", "Y", "kappa"})
        if (!j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
    if (!j["dim"].is_number_unsigned() || j["dim"].get<std::size_t>() == 0)
        throw ParseError("\"dim\" must be a positive integer");
    const auto n = j["dim"].get<std::size_t>();

    BIModule m(matrix_from_json(j["X"], n, n), matrix_from_json(j["Y"], n, n), rational_from_json(j["kappa"]));
    if (j.contains("lambda") && !j["lambda"].is_null()) m.lambda = rational_from_json(j["lambda"]);
    if (j.contains("mu") && !j["mu"].is_null()) m.mu = rational_from_json(j["mu"]);
    if (j.contains("meta")) {
        if (!j["meta"].is_object()) throw ParseError("\"meta\" must be an object");
        for (const auto& [k, v] : j["meta"].items()) m.meta[k] = v.is_string() ? v.get<std::string>() : v.dump();
    }
    return m;
}

std::string serialize_module(const BIModule& m) {
    Json j;
    j["dim"] = m.dim;
    j["X"] = to_json(m.X);
    j["Y"] = to_json(m.Y);
    j["kappa"] = to_json(m.kappa);
    if (m.lambda) j["lambda"] = to_json(*m.lambda);
    if (m.mu) j["mu"] = to_json(*m.mu);
    if (!m.meta.empty()) {
        Json meta = Json::object();
        for (const auto& [k, v] : m.meta) meta[k] = v;
        j["meta"] = meta;
    }
    return pretty(j);
}

BIModule read_module(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_module(ss.str());
}

void write_module(const std::string& path, const BIModule& m) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << serialize_module(m);
}

}  // namespace bim
