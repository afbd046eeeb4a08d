#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orecode/matrix.hpp"

namespace orecode {

/// One `[row]` block of a reproduction config: the field, skew-ring and code
/// data plus the expected classical/quantum parameters. `s = 0` describes a
/// plain skew-cyclic row over F_q (single generator, no Gray image).
struct ReproRow {
    std::string label;
    int p = 0;
    int m = 1;
    std::vector<int> modulus;  ///< ascending coefficients; empty = shipped default
    int s = 0;
    int n = 0;
    int theta_power = 1;
    std::string beta = "0";                ///< field literal
    std::vector<std::string> generators;   ///< polynomial strings, one per component
    std::vector<std::vector<std::string>> gray_rows;  ///< field literals, row-major
    std::optional<std::array<int, 3>> expected_classical;  ///< [n, k, d]
    std::optional<std::array<int, 3>> expected_quantum;    ///< [[n, k, d]]
    std::map<int, std::string> printed_h;        ///< component -> printed left cofactor
    std::map<int, std::string> printed_h_prime;  ///< component -> printed right cofactor
    std::string existing_code;  ///< bibliographic comparison, displayed verbatim
};

struct ReproConfig {
    std::vector<ReproRow> rows;
};

/// Plain-text sectioned config: `[row]` headers, `key = value` lines,
/// `#` comments. Throws SyntaxError with location info.
ReproConfig parse_config_text(const std::string& text);
ReproConfig parse_config_file(const std::string& path);

/// Matrix file format: one row per line, space-separated field literals,
/// `#` comment lines allowed.
MatrixOverFq parse_matrix_text(const FieldSpecPtr& spec, const std::string& text);
MatrixOverFq parse_matrix_file(const FieldSpecPtr& spec, const std::string& path);

/// Modulus strings like "x^3+x+1" over F_p (ascending coefficient vector).
std::vector<int> parse_modulus(const std::string& text, int p);

}  // namespace orecode
