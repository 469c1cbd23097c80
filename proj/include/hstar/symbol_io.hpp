#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "hstar/errors.hpp"
#include "hstar/harmonics.hpp"
#include "hstar/symbol.hpp"

namespace hstar {

// On-disk symbol format:
// { "n": int, "sigma": float, "basis": "<tag>",
//   "blocks": [ { "row_degree": int, "col_degree": int,
//                 "re": [[float,...],...], "im": [[float,...],...] } ] }
// Degrees must be even, shapes must match harmonic_dim, and the basis tag
// must be the one this library writes; anything else is rejected with the
// offending field named.

inline nlohmann::ordered_json symbol_to_json(const Symbol& f) {
    nlohmann::ordered_json j;
    j["n"] = f.n;
    j["sigma"] = f.sigma;
    j["basis"] = HarmonicBasis::tag();
    j["blocks"] = nlohmann::ordered_json::array();
    for (const auto& [k, b] : f.blocks) {
        nlohmann::ordered_json jb;
        jb["row_degree"] = k.first;
        jb["col_degree"] = k.second;
        nlohmann::ordered_json re = nlohmann::ordered_json::array();
        nlohmann::ordered_json im = nlohmann::ordered_json::array();
        for (long i = 0; i < b.rows(); ++i) {
            nlohmann::ordered_json rrow = nlohmann::ordered_json::array();
            nlohmann::ordered_json irow = nlohmann::ordered_json::array();
            for (long jj = 0; jj < b.cols(); ++jj) {
                rrow.push_back(b(i, jj).real());
                irow.push_back(b(i, jj).imag());
            }
            re.push_back(std::move(rrow));
            im.push_back(std::move(irow));
        }
        jb["re"] = std::move(re);
        jb["im"] = std::move(im);
        j["blocks"].push_back(std::move(jb));
    }
    return j;
}

inline Symbol symbol_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("symbol: top level must be an object");
    if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<int>() < 3)
        throw ParseError("n: expected an integer >= 3");
    if (!j.contains("sigma") || !j["sigma"].is_number() || j["sigma"].get<double>() == 0.0)
        throw ParseError("sigma: expected a nonzero number");
    if (!j.contains("basis") || j["basis"] != HarmonicBasis::tag())
        throw ParseError(std::string("basis: unknown tag, expected ") + HarmonicBasis::tag());
    if (!j.contains("blocks") || !j["blocks"].is_array())
        throw ParseError("blocks: expected an array");

    Symbol f(j["n"].get<int>(), j["sigma"].get<double>());
    for (const auto& jb : j["blocks"]) {
        if (!jb.contains("row_degree") || !jb["row_degree"].is_number_integer())
            throw ParseError("row_degree: expected an integer");
        if (!jb.contains("col_degree") || !jb["col_degree"].is_number_integer())
            throw ParseError("col_degree: expected an integer");
        const int l = jb["row_degree"].get<int>();
        const int m = jb["col_degree"].get<int>();
        if (l < 0 || l % 2 != 0) throw ParseError("row_degree: must be even and >= 0");
        if (m < 0 || m % 2 != 0) throw ParseError("col_degree: must be even and >= 0");
        if (f.block(l, m)) throw ParseError("blocks: duplicate degree pair");
        const long rows = harmonic_dim(f.n, l);
        const long cols = harmonic_dim(f.n, m);
        for (const char* part : {"re", "im"}) {
            if (!jb.contains(part) || !jb[part].is_array() ||
                static_cast<long>(jb[part].size()) != rows)
                throw ParseError(std::string(part) + ": expected " + std::to_string(rows) +
                                 " rows");
            for (const auto& row : jb[part])
                if (!row.is_array() || static_cast<long>(row.size()) != cols)
                    throw ParseError(std::string(part) + ": expected rows of " +
                                     std::to_string(cols) + " numbers");
        }
        Eigen::MatrixXcd b(rows, cols);
        for (long i = 0; i < rows; ++i)
            for (long jj = 0; jj < cols; ++jj)
                b(i, jj) = Complex(jb["re"][i][jj].get<double>(),
                                   jb["im"][i][jj].get<double>());
        f.set_block(l, m, std::move(b));
    }
    return f;
}

inline void write_symbol(const Symbol& f, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("write_symbol: cannot open " + path);
    out << symbol_to_json(f).dump(1) << "\n";
}

inline Symbol read_symbol(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("read_symbol: cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("invalid JSON: ") + ex.what());
    }
    return symbol_from_json(j);
}

} // namespace hstar
