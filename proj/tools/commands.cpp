#include "commands.hpp"

#include "pascalrank/pascal.hpp"
#include "pascalrank/rank.hpp"
#include "pascalrank/subpair.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace pascalrank::cli {

namespace {

using Json = nlohmann::ordered_json;

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> tokens;
    std::string current;
    for (char ch : text) {
        if (ch == ',') {
            tokens.push_back(current);
            current.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            current += ch;
        }
    }
    tokens.push_back(current);
    if (tokens.size() == 1 && tokens.front().empty()) tokens.clear();
    return tokens;
}

Json json_selection(const Selection& s) {
    Json arr = Json::array();
    for (std::uint64_t v : s) arr.push_back(v);
    return arr;
}

Json json_indices(const std::vector<std::size_t>& idx) {
    Json arr = Json::array();
    for (std::size_t v : idx) arr.push_back(v);
    return arr;
}

// big integers go out as decimal strings, never as JSON numbers
Json json_matrix(const ExactMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            row.push_back(m(i, j).get_str());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Json json_rational(const Rational& v, unsigned places) {
    Json obj = Json::object();
    obj["fraction"] = fraction_string(v);
    obj["decimal"] = format_decimal(v, places);
    return obj;
}

Json json_coefficient(std::uint64_t degree, const Rational& v, unsigned places) {
    Json obj = Json::object();
    obj["degree"] = degree;
    obj["fraction"] = fraction_string(v);
    obj["decimal"] = format_decimal(v, places);
    return obj;
}

Json payload_skeleton(const std::string& command, const Selection& r, const Selection& c) {
    Json payload = Json::object();
    payload["command"] = command;
    payload["inputs"] = Json::object();
    payload["inputs"]["rows"] = json_selection(r);
    payload["inputs"]["cols"] = json_selection(c);
    return payload;
}

std::string dump(const Json& payload) {
    return payload.dump(2) + "\n";
}

std::string matrix_text(const ExactMatrix& m, const std::string& indent) {
    if (m.rows() == 0 || m.cols() == 0) {
        return indent + "(empty)\n";
    }
    std::vector<std::size_t> width(m.cols(), 0);
    for (std::size_t j = 0; j < m.cols(); ++j) {
        for (std::size_t i = 0; i < m.rows(); ++i) {
            width[j] = std::max(width[j], m(i, j).get_str().size());
        }
    }
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out += indent;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            std::string entry = m(i, j).get_str();
            if (j > 0) out += "  ";
            out.append(width[j] - entry.size(), ' ');
            out += entry;
        }
        out += '\n';
    }
    return out;
}

std::string indices_text(const std::vector<std::size_t>& idx) {
    std::string out = "[";
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i > 0) out += ", ";
        out += std::to_string(idx[i]);
    }
    return out + "]";
}

std::string shape(const ExactMatrix& m) {
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

} // namespace

Selection parse_selection(const std::string& text, const std::string& flag) {
    std::vector<std::string> tokens = split_csv(text);
    std::vector<std::uint64_t> values;
    values.reserve(tokens.size());
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const std::string& tok = tokens[i];
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
            throw std::invalid_argument(flag + ": entry " + std::to_string(i) + " ('" + tok +
                                        "') is not a non-negative integer");
        }
        values.push_back(value);
    }
    try {
        return Selection(std::move(values));
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(flag + ": " + e.what());
    }
}

std::vector<Rational> parse_data(const std::string& text, const std::string& flag) {
    std::vector<std::string> tokens = split_csv(text);
    std::vector<Rational> values;
    values.reserve(tokens.size());
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        try {
            values.push_back(parse_rational(tokens[i]));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(flag + ": entry " + std::to_string(i) + ": " + e.what());
        }
    }
    return values;
}

std::string run_matrix(const Selection& r, const Selection& c, const Format& fmt) {
    ExactMatrix m = pascal_submatrix(r, c);
    if (fmt.json) {
        Json payload = payload_skeleton("matrix", r, c);
        payload["results"] = Json::object();
        payload["results"]["rows"] = m.rows();
        payload["results"]["cols"] = m.cols();
        payload["results"]["entries"] = json_matrix(m);
        return dump(payload);
    }
    std::ostringstream out;
    out << "r = " << r.to_string() << "\n";
    out << "c = " << c.to_string() << "\n";
    out << "T[r,c] (" << shape(m) << "):\n" << matrix_text(m, "  ");
    return out.str();
}

std::string run_subpair(const Selection& r, const Selection& c, const Format& fmt) {
    SubPairIndices pair = maximal_subpair(r, c);
    Selection sub_rows = r.at_positions(pair.alpha);
    Selection sub_cols = c.at_positions(pair.beta);
    if (fmt.json) {
        Json payload = payload_skeleton("subpair", r, c);
        payload["results"] = Json::object();
        payload["results"]["length"] = pair.length();
        payload["results"]["alpha"] = json_indices(pair.alpha);
        payload["results"]["beta"] = json_indices(pair.beta);
        payload["results"]["sub_rows"] = json_selection(sub_rows);
        payload["results"]["sub_cols"] = json_selection(sub_cols);
        return dump(payload);
    }
    std::ostringstream out;
    out << "r = " << r.to_string() << "\n";
    out << "c = " << c.to_string() << "\n";
    out << "length = " << pair.length() << "\n";
    out << "alpha = " << indices_text(pair.alpha) << "\n";
    out << "beta = " << indices_text(pair.beta) << "\n";
    out << "sub rows = " << sub_rows.to_string() << "\n";
    out << "sub cols = " << sub_cols.to_string() << "\n";
    return out.str();
}

std::string run_rank(const Selection& r, const Selection& c, const Format& fmt) {
    RankReport report = rank_report(r, c);
    ExactMatrix ones = index_matrix(report.pair, r.size(), c.size());
    if (fmt.json) {
        Json payload = payload_skeleton("rank", r, c);
        payload["results"] = Json::object();
        payload["results"]["rank"] = report.rank;
        payload["results"]["alpha"] = json_indices(report.pair.alpha);
        payload["results"]["beta"] = json_indices(report.pair.beta);
        payload["results"]["row_basis"] = json_selection(report.row_basis);
        payload["results"]["col_basis"] = json_selection(report.col_basis);
        payload["results"]["core"] = json_matrix(report.core);
        payload["results"]["index_matrix"] = json_matrix(ones);
        return dump(payload);
    }
    std::ostringstream out;
    out << "r = " << r.to_string() << "\n";
    out << "c = " << c.to_string() << "\n";
    out << "rank = " << report.rank << "\n";
    out << "alpha = " << indices_text(report.pair.alpha) << "\n";
    out << "beta = " << indices_text(report.pair.beta) << "\n";
    out << "row basis = " << report.row_basis.to_string() << "\n";
    out << "col basis = " << report.col_basis.to_string() << "\n";
    out << "core (" << shape(report.core) << "):\n" << matrix_text(report.core, "  ");
    out << "index matrix (" << shape(ones) << "):\n" << matrix_text(ones, "  ");
    return out.str();
}

std::string run_invertible(const Selection& r, const Selection& c, const Format& fmt) {
    bool invertible = is_invertible(r, c);
    std::size_t violation = 0;
    if (!invertible) {
        while (r[violation] <= c[violation]) ++violation;
    }
    if (fmt.json) {
        Json payload = payload_skeleton("invertible", r, c);
        payload["results"] = Json::object();
        payload["results"]["invertible"] = invertible;
        if (invertible) {
            payload["results"]["violation_position"] = nullptr;
        } else {
            payload["results"]["violation_position"] = violation;
        }
        return dump(payload);
    }
    std::ostringstream out;
    out << "r = " << r.to_string() << "\n";
    out << "c = " << c.to_string() << "\n";
    if (invertible) {
        out << "invertible = yes (r <= c componentwise)\n";
    } else {
        out << "invertible = no (r[" << violation << "] = " << r[violation] << " > c["
            << violation << "] = " << c[violation] << ", zero diagonal entry)\n";
    }
    return out.str();
}

std::string run_fit(const Selection& r, const Selection& c, const std::vector<Rational>& y,
                    const Format& fmt) {
    LacunaryFit fitted = fit(r, c, y);
    std::string poly = polynomial_string(fitted, fmt.places);
    if (fmt.json) {
        Json payload = payload_skeleton("fit", r, c);
        Json data = Json::array();
        for (const Rational& v : y) data.push_back(fraction_string(v));
        payload["inputs"]["data"] = std::move(data);
        payload["results"] = Json::object();
        payload["results"]["degrees"] = json_selection(fitted.degrees);
        Json coeffs = Json::array();
        for (std::size_t j = 0; j < fitted.coefficients.size(); ++j) {
            coeffs.push_back(json_coefficient(fitted.degrees[j], fitted.coefficients[j],
                                              fmt.places));
        }
        payload["results"]["coefficients"] = std::move(coeffs);
        payload["results"]["residual_sq"] = json_rational(fitted.residual_sq, fmt.places);
        payload["results"]["polynomial"] = poly;
        return dump(payload);
    }
    std::ostringstream out;
    out << "r = " << r.to_string() << "\n";
    out << "c = " << c.to_string() << "\n";
    out << "degrees = " << fitted.degrees.to_string() << "\n";
    out << "coefficients:\n";
    for (std::size_t j = 0; j < fitted.coefficients.size(); ++j) {
        out << "  b[" << j << "] = " << fraction_string(fitted.coefficients[j]) << " ~ "
            << format_decimal(fitted.coefficients[j], fmt.places) << "  (x^"
            << fitted.degrees[j] << ")\n";
    }
    out << "residual^2 = " << fraction_string(fitted.residual_sq) << " ~ "
        << format_decimal(fitted.residual_sq, fmt.places) << "\n";
    out << "f(x) = " << poly << "\n";
    return out.str();
}

} // namespace pascalrank::cli
