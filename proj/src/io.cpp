#include "strassen/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace strassen {

namespace {

using nlohmann::json;

json field_to_json(const FieldDesc& f) {
    if (f.is_rational()) return "rational";
    return json{{"prime", f.p}};
}

FieldDesc field_from_json(const json& j) {
    if (j.is_string() && j.get<std::string>() == "rational") return FieldDesc::rationals();
    if (j.is_object() && j.contains("prime") && j["prime"].is_number_unsigned())
        return FieldDesc::prime(j["prime"].get<std::uint64_t>());
    throw ParseError("field must be \"rational\" or {\"prime\": p}");
}

json mat2_to_json(const Mat2& m) {
    return json::array({json::array({m.at(0, 0).str(), m.at(0, 1).str()}),
                        json::array({m.at(1, 0).str(), m.at(1, 1).str()})});
}

Mat2 mat2_from_json(const json& j, const FieldDesc& field, const char* what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 || !j[1].is_array() ||
        j[1].size() != 2)
        throw ParseError(std::string(what) + " must be a 2x2 array");
    Mat2 m(field);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t k = 0; k < 2; ++k) {
            if (!j[i][k].is_string()) throw ParseError(std::string(what) + " entries must be scalar strings");
            m.at(i, k) = parse_scalar(j[i][k].get<std::string>(), field);
        }
    return m;
}

json pair_to_json(const Scalar& a, const Scalar& b) { return json::array({a.str(), b.str()}); }

std::array<Scalar, 2> pair_from_json(const json& j, const FieldDesc& field, const char* what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
        throw ParseError(std::string(what) + " must be a pair of scalar strings");
    return {parse_scalar(j[0].get<std::string>(), field), parse_scalar(j[1].get<std::string>(), field)};
}

json parse_document(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON");
    return j;
}

}  // namespace

std::string algorithm_to_json(const BilinearAlgorithm& alg) {
    json terms = json::array();
    for (const auto& t : alg.terms())
        terms.push_back(json{{"x", mat2_to_json(t.x)}, {"y", mat2_to_json(t.y)}, {"z", mat2_to_json(t.z)}});
    json j{{"field", field_to_json(alg.field())}, {"rank", alg.rank()}, {"terms", std::move(terms)}};
    return j.dump(2) + "\n";
}

BilinearAlgorithm algorithm_from_json(const std::string& text) {
    json j = parse_document(text);
    if (!j.is_object() || !j.contains("field") || !j.contains("rank") || !j.contains("terms"))
        throw ParseError("scheme file needs field, rank and terms");
    FieldDesc field = field_from_json(j["field"]);
    if (!j["terms"].is_array()) throw ParseError("terms must be an array");
    if (!j["rank"].is_number_unsigned() || j["rank"].get<std::size_t>() != j["terms"].size())
        throw ParseError("rank does not match the term count");

    std::vector<BilinearTerm> terms;
    for (const auto& t : j["terms"]) {
        if (!t.is_object() || !t.contains("x") || !t.contains("y") || !t.contains("z"))
            throw ParseError("each term needs x, y and z");
        terms.push_back(BilinearTerm{mat2_from_json(t["x"], field, "x"), mat2_from_json(t["y"], field, "y"),
                                     mat2_from_json(t["z"], field, "z")});
    }
    return BilinearAlgorithm(field, std::move(terms));
}

std::string params_to_json(const Params& p) {
    json j{{"field", field_to_json(p.field())},
           {"v", json::array({pair_to_json(p.v[0][0], p.v[0][1]), pair_to_json(p.v[1][0], p.v[1][1]),
                              pair_to_json(p.v[2][0], p.v[2][1])})},
           {"lambda", json::array({pair_to_json(p.l[0][0], p.l[0][1]), pair_to_json(p.l[1][0], p.l[1][1]),
                                   pair_to_json(p.l[2][0], p.l[2][1])})}};
    return j.dump(2) + "\n";
}

Params params_from_json(const std::string& text) {
    json j = parse_document(text);
    if (!j.is_object() || !j.contains("field") || !j.contains("v") || !j.contains("lambda"))
        throw ParseError("parameter file needs field, v and lambda");
    FieldDesc field = field_from_json(j["field"]);
    if (!j["v"].is_array() || j["v"].size() != 3 || !j["lambda"].is_array() || j["lambda"].size() != 3)
        throw ParseError("v and lambda must each list three pairs");

    auto vec = [&](const json& e) {
        auto c = pair_from_json(e, field, "v entry");
        return Vec2(c[0], c[1]);
    };
    auto cov = [&](const json& e) {
        auto c = pair_from_json(e, field, "lambda entry");
        return CoVec2(c[0], c[1]);
    };
    return Params{{vec(j["v"][0]), vec(j["v"][1]), vec(j["v"][2])},
                  {cov(j["lambda"][0]), cov(j["lambda"][1]), cov(j["lambda"][2])}};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

BilinearAlgorithm load_algorithm(const std::string& path) { return algorithm_from_json(read_file(path)); }
void save_algorithm(const BilinearAlgorithm& alg, const std::string& path) {
    write_file(path, algorithm_to_json(alg));
}
Params load_params(const std::string& path) { return params_from_json(read_file(path)); }
void save_params(const Params& p, const std::string& path) { write_file(path, params_to_json(p)); }

namespace {

std::vector<std::vector<std::string>> split_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::istringstream cs(line);
        std::string cell;
        while (std::getline(cs, cell, ',')) {
            std::size_t a = cell.find_first_not_of(" \t");
            std::size_t b = cell.find_last_not_of(" \t");
            cells.push_back(a == std::string::npos ? "" : cell.substr(a, b - a + 1));
        }
        rows.push_back(std::move(cells));
    }
    if (rows.empty()) throw ParseError("empty matrix file");
    for (const auto& r : rows)
        if (r.size() != rows.size())
            throw ParseError("matrix file must be square; got " + std::to_string(rows.size()) +
                             " rows and a row of " + std::to_string(r.size()) + " entries");
    return rows;
}

}  // namespace

DenseMatrix<Scalar> matrix_from_csv(const std::string& text, const FieldDesc& field) {
    auto rows = split_csv(text);
    DenseMatrix<Scalar> m(rows.size(), Scalar::zero(field));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j) m.at(i, j) = parse_scalar(rows[i][j], field);
    return m;
}

DenseMatrix<double> matrix_from_csv_double(const std::string& text) {
    auto rows = split_csv(text);
    DenseMatrix<double> m(rows.size(), 0.0);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j) {
            try {
                std::size_t used = 0;
                m.at(i, j) = std::stod(rows[i][j], &used);
                if (used != rows[i][j].size()) throw ParseError("bad number '" + rows[i][j] + "'");
            } catch (const std::logic_error&) {
                throw ParseError("bad number '" + rows[i][j] + "'");
            }
        }
    return m;
}

std::string matrix_to_csv(const DenseMatrix<Scalar>& m) {
    std::string out;
    for (std::size_t i = 0; i < m.n(); ++i) {
        for (std::size_t j = 0; j < m.n(); ++j) {
            if (j) out += ",";
            out += m.at(i, j).str();
        }
        out += "\n";
    }
    return out;
}

std::string matrix_to_csv(const DenseMatrix<double>& m) {
    std::string out;
    char buf[64];
    for (std::size_t i = 0; i < m.n(); ++i) {
        for (std::size_t j = 0; j < m.n(); ++j) {
            if (j) out += ",";
            std::snprintf(buf, sizeof buf, "%.17g", m.at(i, j));
            out += buf;
        }
        out += "\n";
    }
    return out;
}

DenseMatrix<Scalar> load_matrix_csv(const std::string& path, const FieldDesc& field) {
    return matrix_from_csv(read_file(path), field);
}
DenseMatrix<double> load_matrix_csv_double(const std::string& path) {
    return matrix_from_csv_double(read_file(path));
}

FactorMatrices to_factor_matrices(const BilinearAlgorithm& alg) {
    FactorMatrices f;
    for (const auto& t : alg.terms()) {
        std::array<Scalar, 4> u = {t.x.at(0, 0), t.x.at(1, 0), t.x.at(0, 1), t.x.at(1, 1)};
        std::array<Scalar, 4> v = {t.y.at(0, 0), t.y.at(1, 0), t.y.at(0, 1), t.y.at(1, 1)};
        std::array<Scalar, 4> w = {t.z.at(0, 0), t.z.at(0, 1), t.z.at(1, 0), t.z.at(1, 1)};
        f.u.push_back(std::move(u));
        f.v.push_back(std::move(v));
        f.w.push_back(std::move(w));
    }
    return f;
}

std::string factor_matrices_to_json(const BilinearAlgorithm& alg) {
    FactorMatrices f = to_factor_matrices(alg);
    auto rows = [](const std::vector<std::array<Scalar, 4>>& m) {
        json out = json::array();
        for (const auto& row : m)
            out.push_back(json::array({row[0].str(), row[1].str(), row[2].str(), row[3].str()}));
        return out;
    };
    json j{{"field", field_to_json(alg.field())}, {"rank", alg.rank()}, {"block", 2},
           {"u", rows(f.u)},     {"v", rows(f.v)},  {"w", rows(f.w)}};
    return j.dump(2) + "\n";
}

}  // namespace strassen
