// Command-line front end: thin composition of the library modules. All
// algebra lives behind the orecode:: calls; this file only parses flags,
// wires pipelines together and prints key = value reports (or JSON).

#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "orecode/codes.hpp"
#include "orecode/config.hpp"
#include "orecode/css.hpp"
#include "orecode/distance.hpp"
#include "orecode/explain.hpp"
#include "orecode/graymap.hpp"
#include "orecode/repro.hpp"
#include "orecode/util.hpp"

using json = nlohmann::json;
using namespace orecode;

namespace {

struct FieldArgs {
    uint64_t q = 0;
    int p = 0;
    int m = 0;
    std::string modulus;
    int theta_power = -1;  // -1: default (1 for extensions, 0 for prime fields)
    std::string beta = "0";

    void attach(CLI::App* app, bool with_ring = true) {
        app->add_option("--q", q, "field order p^m (uses the shipped modulus)");
        app->add_option("--p", p, "characteristic (alternative to --q)");
        app->add_option("--m", m, "extension degree (with --p)");
        app->add_option("--modulus", modulus, "modulus polynomial over F_p, e.g. \"x^3+x+1\"");
        if (with_ring) {
            app->add_option("--theta-power", theta_power,
                            "Frobenius power t with theta(a) = a^(p^t); default 1 (0 when m = 1)");
            app->add_option("--beta", beta, "derivation scalar (field literal; 0 disables)");
        }
    }

    FieldSpecPtr field() const {
        FieldSpecPtr spec;
        if (q) {
            if (!modulus.empty()) {
                auto probe = FieldSpec::from_order(q);
                spec = FieldSpec::create(probe->p(), probe->m(),
                                         parse_modulus(modulus, probe->p()));
            } else {
                spec = FieldSpec::from_order(q);
            }
        } else if (p) {
            int mm = m > 0 ? m : 1;
            spec = FieldSpec::create(p, mm,
                                     modulus.empty() ? std::vector<int>{}
                                                     : parse_modulus(modulus, p));
        } else {
            throw InvalidParameters("specify the field with --q or --p/--m");
        }
        return spec;
    }

    SkewRing ring() const {
        FieldSpecPtr spec = field();
        int t = theta_power >= 0 ? theta_power : (spec->m() > 1 ? 1 : 0);
        return SkewRing{spec, DerivationSpec(t, spec->parse_literal(beta))};
    }
};

GrayMatrix load_gray(const FieldSpecPtr& spec, const std::string& inline_rows,
                     const std::string& file) {
    if (!file.empty()) return GrayMatrix::create(parse_matrix_file(spec, file));
    if (inline_rows.empty()) throw InvalidParameters("supply --gray or --gray-file");
    std::string text = inline_rows;
    for (auto& c : text)
        if (c == '/') c = '\n';
    return GrayMatrix::create(parse_matrix_text(spec, text));
}

std::vector<SkewPoly> parse_gens(const SkewRing& ring, const std::string& gens) {
    std::vector<SkewPoly> out;
    std::stringstream ss(gens);
    std::string item;
    while (std::getline(ss, item, ';')) out.push_back(SkewPoly::parse(ring, item));
    if (out.empty()) throw InvalidParameters("--gens must list at least one polynomial");
    return out;
}

void emit(const json& record, bool as_json) {
    if (as_json) {
        std::cout << record.dump(2) << "\n";
        return;
    }
    for (auto& [key, value] : record.items()) {
        if (value.is_string())
            std::cout << key << " = " << value.get<std::string>() << "\n";
        else
            std::cout << key << " = " << value.dump() << "\n";
    }
}

json report_to_json(const ReproReport& report) {
    json rows = json::array();
    for (const auto& row : report.rows) {
        json checks = json::array();
        for (const auto& c : row.checks)
            checks.push_back({{"key", c.key},
                              {"computed", c.computed},
                              {"expected", c.expected},
                              {"pass", c.pass}});
        rows.push_back({{"label", row.label},
                        {"checks", checks},
                        {"existing", row.existing_code},
                        {"error", row.error},
                        {"pass", row.pass()}});
    }
    return {{"rows", rows}, {"overall", report.all_pass()}};
}

MatrixOverFq hamming7_parity(const FieldSpecPtr& f2) {
    // Columns are the binary expansions of 1..7.
    MatrixOverFq h(f2, 3, 7);
    for (int col = 1; col <= 7; ++col)
        for (int bit = 0; bit < 3; ++bit)
            if (col & (1 << bit)) h.set_rep(bit, col - 1, 1);
    return h;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"skew polynomial rings, (theta,im)- and (gamma,delta)-cyclic codes, "
                 "Gray images and CSS quantum codes over R_{q,s}"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "emit one structured JSON record");

    // ---- field ----
    auto* field_cmd = app.add_subcommand("field", "inspect a field or evaluate one operation");
    FieldArgs field_args;
    field_args.attach(field_cmd);
    std::string field_op = "info", lit_a, lit_b;
    uint64_t pow_e = 1;
    field_cmd->add_option("--op", field_op,
                          "info|add|sub|mul|div|inv|pow|trace|frobenius|derivation|log");
    field_cmd->add_option("--a", lit_a, "first operand (field literal)");
    field_cmd->add_option("--b", lit_b, "second operand (field literal)");
    field_cmd->add_option("--e", pow_e, "exponent for --op pow / power for frobenius");

    // ---- skew ----
    auto* skew_cmd = app.add_subcommand("skew", "skew polynomial arithmetic");
    skew_cmd->require_subcommand(1);
    FieldArgs skew_args;
    std::string poly_f, poly_g;
    auto* skew_mul_cmd = skew_cmd->add_subcommand("mul", "f * g");
    auto* skew_divmod_cmd = skew_cmd->add_subcommand("divmod", "right division f = q*g + r");
    auto* skew_central_cmd = skew_cmd->add_subcommand("central", "centrality test of f");
    for (auto* sub : {skew_mul_cmd, skew_divmod_cmd, skew_central_cmd}) {
        skew_args.attach(sub);
        sub->add_option("-f", poly_f, "polynomial")->required();
    }
    skew_mul_cmd->add_option("-g", poly_g, "polynomial")->required();
    skew_divmod_cmd->add_option("-g", poly_g, "divisor polynomial")->required();

    // ---- code ----
    auto* code_cmd = app.add_subcommand("code", "skew-cyclic code construction and search");
    code_cmd->require_subcommand(1);
    FieldArgs code_args;
    int code_n = 0, search_max_deg = 1;
    std::string code_gens;
    bool search_dual = false;
    uint64_t search_budget = 10000000;
    auto* code_build = code_cmd->add_subcommand("build", "build from generators (s+1 of them)");
    auto* code_dual = code_cmd->add_subcommand("dualcheck", "dual-containment of every component");
    auto* code_search = code_cmd->add_subcommand("search", "enumerate right divisors of x^n - 1");
    for (auto* sub : {code_build, code_dual, code_search}) {
        code_args.attach(sub);
        sub->add_option("--n", code_n, "code length")->required();
    }
    code_build->add_option("--gens", code_gens, "generators \"g0;g1;...;gs\"")->required();
    code_dual->add_option("--gens", code_gens, "generators \"g0;g1;...;gs\"")->required();
    code_search->add_option("--max-deg", search_max_deg, "maximum generator degree");
    code_search->add_flag("--dual-containing", search_dual, "keep only dual-containing codes");
    code_search->add_option("--budget", search_budget, "candidate budget (default 1e7)");

    // ---- gray ----
    auto* gray_cmd = app.add_subcommand("gray", "Gray images of codes over R_{q,s}");
    gray_cmd->require_subcommand(1);
    FieldArgs gray_args;
    int gray_n = 0;
    std::string gray_gens, gray_inline, gray_file;
    auto* gray_image = gray_cmd->add_subcommand("image", "generator matrix of phi(C)");
    auto* gray_dual = gray_cmd->add_subcommand("dualcheck", "phi(C)^perp = phi(C^perp)");
    for (auto* sub : {gray_image, gray_dual}) {
        gray_args.attach(sub);
        sub->add_option("--n", gray_n, "code length")->required();
        sub->add_option("--gens", gray_gens, "component generators \"g0;...;gs\"")->required();
        sub->add_option("--gray", gray_inline, "inline matrix, rows separated by '/'");
        sub->add_option("--gray-file", gray_file, "matrix file (rows of field literals)");
    }
    bool gray_print = false;
    gray_image->add_flag("--print-matrix", gray_print, "print the image generator matrix");

    // ---- distance ----
    auto* dist_cmd = app.add_subcommand("distance", "minimum-distance engines");
    FieldArgs dist_args;
    dist_args.attach(dist_cmd, /*with_ring=*/false);
    std::string dist_method = "auto", gen_file, parity_file;
    int dist_wmax = 6;
    dist_cmd->add_option("--method", dist_method, "auto|exhaustive|columns");
    dist_cmd->add_option("--gen-file", gen_file, "generator matrix file");
    dist_cmd->add_option("--parity-file", parity_file, "parity-check matrix file");
    dist_cmd->add_option("--w-max", dist_wmax, "column-search weight cap (<= 8)");

    // ---- quantum ----
    auto* quantum_cmd = app.add_subcommand("quantum", "CSS machinery");
    quantum_cmd->require_subcommand(1);
    auto* q_params = quantum_cmd->add_subcommand("params", "[[n,2k-n,d]]_q from [n,k,d]_q");
    int qp_n = 0, qp_k = 0, qp_d = 0;
    uint64_t qp_q = 0;
    q_params->add_option("--n", qp_n)->required();
    q_params->add_option("--k", qp_k)->required();
    q_params->add_option("--d", qp_d)->required();
    q_params->add_option("--q", qp_q)->required();

    auto* q_css = quantum_cmd->add_subcommand("css", "build a CSS code and its syndrome table");
    FieldArgs css_args;
    css_args.attach(q_css, /*with_ring=*/false);
    std::string css_toy, h1_file, h2_file, error_lit;
    q_css->add_option("--toy", css_toy, "hamming7: the [7,4,3] self-CSS demo");
    q_css->add_option("--h1-file", h1_file, "parity matrix of C1");
    q_css->add_option("--h2-file", h2_file, "parity matrix of C2 (default: --h1-file)");
    q_css->add_option("--error", error_lit, "Pauli literal [a_1,..,a_n | b_1,..,b_n] to decode");

    auto* q_verify = quantum_cmd->add_subcommand("verify-operators",
                                                 "dense-matrix qudit operator checks");
    int vp = 2, vm = 1;
    q_verify->add_option("--p", vp, "characteristic")->required();
    q_verify->add_option("--m", vm, "extension degree");

    // ---- reproduce ----
    auto* repro_cmd = app.add_subcommand("reproduce", "run a reproduction config");
    std::string config_path;
    bool no_timestamp = false;
    repro_cmd->add_option("--config", config_path, "config file")->required();
    repro_cmd->add_flag("--no-timestamp", no_timestamp, "suppress the timestamp header");

    // ---- explain ----
    auto* explain_cmd = app.add_subcommand("explain", "notes on the machinery");
    std::string subject;
    explain_cmd->add_option("subject", subject, "topic id (run without one to list)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*field_cmd) {
            SkewRing ring = field_args.ring();
            const FieldSpecPtr& F = ring.field;
            json rec{{"p", F->p()}, {"m", F->m()}, {"q", F->order()}};
            std::string mod;
            for (int i = F->m(); i >= 0; --i) {
                int c = F->modulus()[i];
                if (!c) continue;
                if (!mod.empty()) mod += "+";
                if (i == 0 || c != 1) mod += std::to_string(c);
                if (i >= 1) mod += (c != 1 ? "*x" : "x");
                if (i >= 2) mod += "^" + std::to_string(i);
            }
            rec["modulus"] = mod;
            if (field_op == "info") {
                rec["generator"] = F->generator().str();
            } else if (field_op == "trace") {
                rec["trace"] = field_trace(F->parse_literal(lit_a)).str();
            } else if (field_op == "inv") {
                rec["result"] = F->parse_literal(lit_a).inverse().str();
            } else if (field_op == "pow") {
                rec["result"] = F->parse_literal(lit_a).pow(pow_e).str();
            } else if (field_op == "frobenius") {
                rec["result"] = frobenius(F->parse_literal(lit_a), static_cast<int>(pow_e)).str();
            } else if (field_op == "derivation") {
                rec["result"] = ring.im(F->parse_literal(lit_a)).str();
            } else if (field_op == "log") {
                rec["result"] = std::to_string(F->parse_literal(lit_a).as_power_of_w());
            } else {
                FieldElement a = F->parse_literal(lit_a), b = F->parse_literal(lit_b);
                if (field_op == "add") rec["result"] = (a + b).str();
                else if (field_op == "sub") rec["result"] = (a - b).str();
                else if (field_op == "mul") rec["result"] = (a * b).str();
                else if (field_op == "div") rec["result"] = (a / b).str();
                else throw InvalidParameters("unknown --op '" + field_op + "'");
            }
            emit(rec, as_json);
        } else if (*skew_cmd) {
            SkewRing ring = skew_args.ring();
            SkewPoly f = SkewPoly::parse(ring, poly_f);
            if (*skew_mul_cmd) {
                SkewPoly g = SkewPoly::parse(ring, poly_g);
                emit({{"product", skew_mul(f, g).str()}}, as_json);
            } else if (*skew_divmod_cmd) {
                SkewPoly g = SkewPoly::parse(ring, poly_g);
                DivModResult r = right_divmod(f, g);
                emit({{"quotient", r.quotient.str()},
                      {"remainder", r.remainder.str()},
                      {"divides", r.remainder.is_zero()}},
                     as_json);
            } else {
                emit({{"central", is_central(f)}}, as_json);
            }
        } else if (*code_cmd) {
            SkewRing ring = code_args.ring();
            if (*code_search) {
                DivisorEnumeration e =
                    enumerate_right_divisors(ring, code_n, search_max_deg, search_dual, search_budget);
                json divisors = json::array();
                for (const auto& g : e.divisors) divisors.push_back(g.str());
                emit({{"count", e.divisors.size()},
                      {"candidates_tested", e.candidates_tested},
                      {"divisors", divisors}},
                     as_json);
            } else {
                std::vector<SkewPoly> gens = parse_gens(ring, code_gens);
                json rec;
                if (gens.size() == 1) {
                    ThetaCyclicCode code = ThetaCyclicCode::build(gens[0], code_n);
                    rec["n"] = code.n();
                    rec["k"] = code.k();
                    rec["g_monic"] = code.g_monic().str();
                    rec["h"] = code.h().str();
                    rec["h_prime"] = code.h_prime().str();
                    rec["dual_containing"] = code.dual_containing();
                    if (*code_dual && !code.dual_containing()) {
                        emit(rec, as_json);
                        return 1;
                    }
                } else {
                    auto rqs = RqsSpec::create(ring.field, static_cast<int>(gens.size()) - 1,
                                               ring.derivation);
                    GammaCyclicCode code = GammaCyclicCode::build(rqs, code_n, gens);
                    rec["n"] = code.n();
                    rec["s"] = code.s();
                    rec["k_total"] = code.total_dimension();
                    rec["cardinality"] = code.cardinality_power();
                    json comps = json::array();
                    for (const auto& c : code.components())
                        comps.push_back({{"k", c.k()},
                                         {"g_monic", c.g_monic().str()},
                                         {"dual_containing", c.dual_containing()}});
                    rec["components"] = comps;
                    int failing = -1;
                    bool dual = code.dual_containing(&failing);
                    rec["dual_containing"] = dual;
                    if (!dual) rec["failing_component"] = failing;
                    if (*code_dual && !dual) {
                        emit(rec, as_json);
                        return 1;
                    }
                }
                emit(rec, as_json);
            }
        } else if (*gray_cmd) {
            SkewRing ring = gray_args.ring();
            std::vector<SkewPoly> gens = parse_gens(ring, gray_gens);
            if (gens.size() < 2) throw InvalidParameters("gray commands need s >= 1 (2+ generators)");
            auto rqs = RqsSpec::create(ring.field, static_cast<int>(gens.size()) - 1, ring.derivation);
            GammaCyclicCode code = GammaCyclicCode::build(rqs, gray_n, gens);
            GrayMatrix gm = load_gray(ring.field, gray_inline, gray_file);
            if (*gray_image) {
                MatrixOverFq image = gray_image_code(code, gm);
                json rec{{"N", image.cols()},
                         {"K", image.rank()},
                         {"scalar_c_G", gm.scalar().str()},
                         {"cardinality", code.cardinality_power()}};
                if (gray_print) rec["matrix"] = image.str();
                emit(rec, as_json);
            } else {
                bool ok = duality_commutes_check(code, gm);
                emit({{"duality_commutes", ok}}, as_json);
                if (!ok) return 1;
            }
        } else if (*dist_cmd) {
            FieldSpecPtr F = dist_args.field();
            std::optional<DistanceReport> report;
            if (dist_method == "exhaustive" || (dist_method == "auto" && !gen_file.empty())) {
                if (gen_file.empty()) throw InvalidParameters("--method exhaustive needs --gen-file");
                report = min_distance_exhaustive(parse_matrix_file(F, gen_file));
            } else {
                MatrixOverFq parity = !parity_file.empty()
                                          ? parse_matrix_file(F, parity_file)
                                          : parse_matrix_file(F, gen_file).kernel_basis();
                report = min_distance_columns(parity, dist_wmax);
            }
            json rec;
            if (report->conclusive()) {
                rec["d"] = report->d;
                json wit = json::array();
                for (int c : report->witness_columns) wit.push_back(c);
                rec["witness"] = wit;
            } else {
                rec["d"] = "> " + std::to_string(report->lower_bound_certified);
            }
            rec["certified_lower_bound"] = report->lower_bound_certified;
            rec["method"] =
                report->method == DistanceMethod::Exhaustive ? "exhaustive" : "columns";
            emit(rec, as_json);
        } else if (*quantum_cmd) {
            if (*q_params) {
                QuantumParams params =
                    quantum_params_from_classical(qp_n, qp_k, qp_d, static_cast<uint32_t>(qp_q));
                emit({{"quantum", params.str()},
                      {"singleton_slack", params.singleton_slack()}},
                     as_json);
            } else if (*q_css) {
                MatrixOverFq h1(nullptr, 0, 0), h2(nullptr, 0, 0);
                if (css_toy == "hamming7") {
                    FieldSpecPtr f2 = FieldSpec::create(2, 1);
                    h1 = hamming7_parity(f2);
                    h2 = h1;
                } else if (!h1_file.empty()) {
                    FieldSpecPtr F = css_args.field();
                    h1 = parse_matrix_file(F, h1_file);
                    h2 = h2_file.empty() ? h1 : parse_matrix_file(F, h2_file);
                } else {
                    throw InvalidParameters("supply --toy hamming7 or --h1-file");
                }
                CssCode css = CssCode::build(h1, h2);
                json rec{{"n", css.n()},
                         {"stabilizer_generators", css.stabilizer_generators()},
                         {"size", css.size_power()},
                         {"check_matrix", css.check_matrix().str()}};
                bool table = css.build_syndrome_table(1);
                rec["syndrome_table"] = table ? "full" : "per-block";
                rec["syndrome_table_entries"] = css.syndrome_table_size();
                if (!error_lit.empty()) {
                    PauliVector e = PauliVector::parse(h1.spec(), error_lit);
                    auto s = css.syndrome(e);
                    json sj = json::array();
                    for (int v : s) sj.push_back(v);
                    rec["syndrome"] = sj;
                    auto decoded = css.decode_basis_error(s);
                    rec["decoded"] = decoded ? decoded->str() : "Unknown";
                }
                emit(rec, as_json);
            } else if (*q_verify) {
                OperatorAlgebraReport rep = verify_operator_algebra(vp, vm);
                emit({{"p", rep.p},
                      {"m", rep.m},
                      {"max_residual", rep.max_residual},
                      {"ok", rep.ok}},
                     as_json);
                if (!rep.ok) return 1;
            }
        } else if (*repro_cmd) {
            ReproConfig config = parse_config_file(config_path);
            ReproReport report = reproduce(config);
            if (as_json)
                std::cout << report_to_json(report).dump(2) << "\n";
            else
                std::cout << format_report(report, !no_timestamp);
            return report.all_pass() ? 0 : 1;
        } else if (*explain_cmd) {
            if (subject.empty()) {
                for (const auto& s : explain_subjects()) std::cout << s << "\n";
            } else {
                std::cout << explain(subject) << "\n";
            }
        }
    } catch (const SyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
