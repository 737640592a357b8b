#pragma once

#include <nlohmann/json.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include "equivalence.hpp"
#include "matrix.hpp"

// Shared file formats.
//
//   Matrix   {"mode": "rational"|"float", "rows": R, "cols": C, "data": [...]}
//            row-major data; rational entries are strings "p/q" or "p",
//            float entries are numbers
//   Witness  {"T": M, "T_minus": M, "T_equals": M}                 (similarity)
//            {"P": M, "Q": M, "P_minus": M, "Q_minus": M}          (equivalence)
//   Params   {"Z": M, "Z1": M}

namespace ginv::io {

using json = nlohmann::json;
using AnyMatrix = std::variant<Matrix<Rational>, Matrix<double>>;

inline Mode mode_of(const AnyMatrix& m) { return m.index() == 0 ? Mode::Rational : Mode::Float; }

template <Field T>
json to_json(const Matrix<T>& m) {
    json data = json::array();
    for (const auto& v : m.data()) {
        if constexpr (scalar_traits<T>::exact) {
            data.push_back(format_rational(v));
        } else {
            data.push_back(v);
        }
    }
    return {{"mode", mode_name(scalar_traits<T>::mode)}, {"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

namespace detail {

inline std::size_t dimension(const json& j, const char* key, const std::string& where) {
    if (!j.contains(key) || !j[key].is_number_unsigned())
        throw parse_error(where + ": \"" + key + "\" must be a non-negative integer");
    return j[key].get<std::size_t>();
}

} // namespace detail

inline AnyMatrix any_matrix_from_json(const json& j, const std::string& where = "matrix") {
    if (!j.is_object()) throw parse_error(where + ": matrix must be a JSON object");
    if (!j.contains("mode") || !j["mode"].is_string()) throw parse_error(where + ": missing string field \"mode\"");
    const Mode mode = [&] {
        try {
            return mode_from_name(j["mode"].get<std::string>());
        } catch (const parse_error& e) {
            throw parse_error(where + ": " + e.what());
        }
    }();
    const auto rows = detail::dimension(j, "rows", where);
    const auto cols = detail::dimension(j, "cols", where);
    if (!j.contains("data") || !j["data"].is_array()) throw parse_error(where + ": missing array field \"data\"");
    const auto& data = j["data"];
    if (data.size() != rows * cols)
        throw parse_error(where + ": data has " + std::to_string(data.size()) + " entries, expected " +
                          std::to_string(rows * cols));

    auto entry_where = [&](std::size_t k) { return where + ": data[" + std::to_string(k) + "]"; };
    if (mode == Mode::Rational) {
        std::vector<Rational> v;
        v.reserve(data.size());
        for (std::size_t k = 0; k < data.size(); ++k) {
            const auto& e = data[k];
            if (e.is_string()) {
                try {
                    v.push_back(parse_rational(e.get<std::string>()));
                } catch (const parse_error& err) {
                    throw parse_error(entry_where(k) + ": " + err.what());
                }
            } else if (e.is_number_integer()) {
                v.push_back(Rational(e.get<long>()));
            } else {
                throw parse_error(entry_where(k) + ": rational entry must be a string \"p/q\" or an integer");
            }
        }
        return Matrix<Rational>(rows, cols, std::move(v));
    }
    std::vector<double> v;
    v.reserve(data.size());
    for (std::size_t k = 0; k < data.size(); ++k) {
        if (!data[k].is_number()) throw parse_error(entry_where(k) + ": float entry must be a number");
        v.push_back(data[k].get<double>());
    }
    return Matrix<double>(rows, cols, std::move(v));
}

// Parses a matrix that must already be in mode T; no silent coercion.
template <Field T>
Matrix<T> matrix_from_json(const json& j, const std::string& where = "matrix") {
    auto any = any_matrix_from_json(j, where);
    if (auto* m = std::get_if<Matrix<T>>(&any)) return std::move(*m);
    throw mode_error(where + ": expected mode " + std::string(mode_name(scalar_traits<T>::mode)) + ", found " +
                     std::string(mode_name(mode_of(any))));
}

inline json parse_json_text(const std::string& text, const std::string& where) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw parse_error(where + ": syntax error at byte offset " + std::to_string(e.byte) + ": " + e.what());
    }
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error(path + ": cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str(), path);
}

inline void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw error(path + ": cannot write file");
    out << j.dump(2) << '\n';
}

namespace detail {

template <Field T>
Matrix<T> member(const json& j, const char* key, const std::string& where) {
    if (!j.contains(key)) throw parse_error(where + ": missing member \"" + key + "\"");
    return matrix_from_json<T>(j[key], where + "/" + key);
}

} // namespace detail

inline bool is_similarity_witness(const json& j) { return j.is_object() && j.contains("T"); }
inline bool is_equivalence_witness(const json& j) { return j.is_object() && j.contains("P"); }

template <Field T>
json to_json(const PseudoSimilarityWitness<T>& w) {
    return {{"T", to_json(w.t)}, {"T_minus", to_json(w.t_minus)}, {"T_equals", to_json(w.t_equals)}};
}

template <Field T>
json to_json(const PseudoEquivalenceWitness<T>& w) {
    return {{"P", to_json(w.p)}, {"Q", to_json(w.q)}, {"P_minus", to_json(w.p_minus)}, {"Q_minus", to_json(w.q_minus)}};
}

template <Field T>
PseudoSimilarityWitness<T> similarity_witness_from_json(const json& j, const std::string& where = "witness") {
    return {detail::member<T>(j, "T", where), detail::member<T>(j, "T_minus", where),
            detail::member<T>(j, "T_equals", where)};
}

template <Field T>
PseudoEquivalenceWitness<T> equivalence_witness_from_json(const json& j, const std::string& where = "witness") {
    return {detail::member<T>(j, "P", where), detail::member<T>(j, "Q", where), detail::member<T>(j, "P_minus", where),
            detail::member<T>(j, "Q_minus", where)};
}

// Mode of every matrix nested in a witness or params document; throws on a mix.
inline Mode document_mode(const json& j, const std::string& where) {
    if (!j.is_object()) throw parse_error(where + ": expected a JSON object");
    if (j.contains("mode")) return mode_of(any_matrix_from_json(j, where));
    std::optional<Mode> mode;
    for (const auto& [key, value] : j.items()) {
        const Mode m = mode_of(any_matrix_from_json(value, where + "/" + key));
        if (mode && *mode != m) throw mode_error(where + ": members mix rational and float matrices");
        mode = m;
    }
    if (!mode) throw parse_error(where + ": empty document");
    return *mode;
}

// Re-encodes every matrix of a document into mode `to` (explicit conversion).
inline json convert_document(const json& j, Mode to) {
    auto convert_matrix = [&](const json& m) {
        auto any = any_matrix_from_json(m);
        return std::visit(
            [&](const auto& mat) -> json {
                if (to == Mode::Rational) return to_json(convert<Rational>(mat));
                return to_json(convert<double>(mat));
            },
            any);
    };
    if (j.contains("mode")) return convert_matrix(j);
    json out = json::object();
    for (const auto& [key, value] : j.items()) out[key] = convert_matrix(value);
    return out;
}

} // namespace ginv::io
