#include "orecode/config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace orecode {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::string strip_comment(const std::string& line) {
    size_t pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(trim(item));
    return out;
}

int parse_int(const std::string& s, const std::string& key, int line_no) {
    try {
        size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument("trailing junk");
        return v;
    } catch (const std::exception&) {
        throw SyntaxError("bad integer for '" + key + "': '" + s + "'", line_no, 1);
    }
}

/// "[n,k,d]" or "[[n,k,d]]", optionally with a trailing "_q" tag.
std::array<int, 3> parse_triple(std::string s, const std::string& key, int line_no) {
    size_t underscore = s.find("]_");
    if (underscore != std::string::npos) s = s.substr(0, underscore + 1);
    std::string digits;
    std::vector<int> vals;
    for (char c : s) {
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
        } else {
            if (!digits.empty()) vals.push_back(parse_int(digits, key, line_no));
            digits.clear();
        }
    }
    if (!digits.empty()) vals.push_back(parse_int(digits, key, line_no));
    if (vals.size() != 3)
        throw SyntaxError("'" + key + "' must contain three integers", line_no, 1);
    return {vals[0], vals[1], vals[2]};
}

void finish_row(ReproRow& row, int line_no, std::vector<ReproRow>& rows) {
    if (row.p == 0) throw SyntaxError("row '" + row.label + "' is missing p", line_no, 1);
    if (row.n == 0) throw SyntaxError("row '" + row.label + "' is missing n", line_no, 1);
    if (row.generators.empty())
        throw SyntaxError("row '" + row.label + "' has no generators", line_no, 1);
    if (static_cast<int>(row.generators.size()) != row.s + 1)
        throw SyntaxError("row '" + row.label + "': generator count must equal s+1", line_no, 1);
    if (row.expected_classical && row.expected_quantum) {
        const auto& c = *row.expected_classical;
        const auto& qp = *row.expected_quantum;
        if (qp[0] != c[0] || qp[1] != 2 * c[1] - c[0] || qp[2] != c[2])
            throw SyntaxError("row '" + row.label +
                                  "': expected quantum parameters are inconsistent with the "
                                  "classical ones (need k_q = 2k - n)",
                              line_no, 1);
    }
    rows.push_back(std::move(row));
    row = ReproRow{};
}

}  // namespace

std::vector<int> parse_modulus(const std::string& text, int p) {
    // Degree-indexed integer coefficients of terms c, c*x^k, x^k.
    std::vector<int> coeffs;
    auto bump = [&](int deg, int c) {
        if (deg >= static_cast<int>(coeffs.size())) coeffs.resize(deg + 1, 0);
        coeffs[deg] = ((coeffs[deg] + c) % p + p) % p;
    };
    std::string cleaned;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) cleaned.push_back(c);
    if (cleaned.empty()) throw SyntaxError("empty modulus", 1, 1);
    size_t pos = 0;
    int sign = 1;
    while (pos < cleaned.size()) {
        int coeff = 1;
        bool have_coeff = false;
        size_t start = pos;
        while (pos < cleaned.size() && std::isdigit(static_cast<unsigned char>(cleaned[pos]))) ++pos;
        if (pos > start) {
            coeff = std::stoi(cleaned.substr(start, pos - start));
            have_coeff = true;
        }
        int deg = 0;
        if (pos < cleaned.size() && cleaned[pos] == '*') ++pos;
        if (pos < cleaned.size() && cleaned[pos] == 'x') {
            ++pos;
            deg = 1;
            if (pos < cleaned.size() && cleaned[pos] == '^') {
                ++pos;
                size_t estart = pos;
                while (pos < cleaned.size() && std::isdigit(static_cast<unsigned char>(cleaned[pos])))
                    ++pos;
                if (pos == estart)
                    throw SyntaxError("bad exponent in modulus", 1, static_cast<int>(pos) + 1);
                deg = std::stoi(cleaned.substr(estart, pos - estart));
            }
        } else if (!have_coeff) {
            throw SyntaxError("unexpected character in modulus", 1, static_cast<int>(pos) + 1);
        }
        bump(deg, sign * coeff);
        if (pos < cleaned.size()) {
            if (cleaned[pos] == '+') sign = 1;
            else if (cleaned[pos] == '-') sign = -1;
            else throw SyntaxError("expected '+' or '-' in modulus", 1, static_cast<int>(pos) + 1);
            ++pos;
        }
    }
    return coeffs;
}

ReproConfig parse_config_text(const std::string& text) {
    ReproConfig config;
    ReproRow row;
    bool in_row = false;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = trim(strip_comment(raw));
        if (line.empty()) continue;
        if (line == "[row]") {
            if (in_row) finish_row(row, line_no, config.rows);
            in_row = true;
            continue;
        }
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw SyntaxError("expected 'key = value'", line_no, 1);
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (!in_row) throw SyntaxError("'" + key + "' appears before the first [row]", line_no, 1);

        if (key == "label") {
            row.label = value;
        } else if (key == "p") {
            row.p = parse_int(value, key, line_no);
        } else if (key == "m") {
            row.m = parse_int(value, key, line_no);
        } else if (key == "modulus") {
            if (row.p == 0)
                throw SyntaxError("modulus must come after p", line_no, 1);
            row.modulus = parse_modulus(value, row.p);
        } else if (key == "s") {
            row.s = parse_int(value, key, line_no);
        } else if (key == "n") {
            row.n = parse_int(value, key, line_no);
        } else if (key == "theta_power") {
            row.theta_power = parse_int(value, key, line_no);
        } else if (key == "beta") {
            row.beta = value;
        } else if (key == "gens") {
            row.generators = split(value, ';');
        } else if (key == "gray") {
            for (const auto& r : split(value, '/')) {
                std::vector<std::string> entries;
                std::stringstream ss(r);
                std::string tok;
                while (ss >> tok) entries.push_back(tok);
                if (entries.empty())
                    throw SyntaxError("empty Gray matrix row", line_no, 1);
                row.gray_rows.push_back(std::move(entries));
            }
        } else if (key == "expected_classical") {
            row.expected_classical = parse_triple(value, key, line_no);
        } else if (key == "expected_quantum") {
            row.expected_quantum = parse_triple(value, key, line_no);
        } else if (key == "existing") {
            row.existing_code = value;
        } else if (key.rfind("h", 0) == 0 && key.size() >= 2) {
            // h<i> = printed left cofactor, h<i>_prime = printed right cofactor
            bool prime = key.size() > 6 && key.substr(key.size() - 6) == "_prime";
            std::string idx_str = prime ? key.substr(1, key.size() - 7) : key.substr(1);
            bool numeric = !idx_str.empty();
            for (char c : idx_str)
                if (!std::isdigit(static_cast<unsigned char>(c))) numeric = false;
            if (!numeric)
                throw SyntaxError("unknown key '" + key + "'", line_no, 1);
            int idx = parse_int(idx_str, key, line_no);
            if (prime) row.printed_h_prime[idx] = value;
            else row.printed_h[idx] = value;
        } else {
            throw SyntaxError("unknown key '" + key + "'", line_no, 1);
        }
    }
    if (in_row) finish_row(row, line_no, config.rows);
    if (config.rows.empty()) throw SyntaxError("config contains no [row] blocks", line_no, 1);
    return config;
}

ReproConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidParameters("cannot open config file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

MatrixOverFq parse_matrix_text(const FieldSpecPtr& spec, const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    MatrixOverFq out(spec, 0, 0);
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = trim(strip_comment(raw));
        if (line.empty()) continue;
        std::vector<FieldElement> row;
        std::stringstream ss(line);
        std::string tok;
        while (ss >> tok) {
            try {
                row.push_back(spec->parse_literal(tok));
            } catch (const Error& e) {
                throw SyntaxError(e.what(), line_no, 1);
            }
        }
        try {
            out.append_row(row);
        } catch (const Error&) {
            throw SyntaxError("ragged matrix row", line_no, 1);
        }
    }
    if (out.rows() == 0) throw SyntaxError("matrix file contains no rows", 1, 1);
    return out;
}

MatrixOverFq parse_matrix_file(const FieldSpecPtr& spec, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidParameters("cannot open matrix file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_matrix_text(spec, buf.str());
}

}  // namespace orecode
