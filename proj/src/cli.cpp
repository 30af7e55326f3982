#include "leibniz/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "leibniz/basis.hpp"
#include "leibniz/format.hpp"
#include "leibniz/parser.hpp"
#include "leibniz/verify.hpp"

namespace leibniz {

namespace {

struct UsageError : Error {
    using Error::Error;
};

std::vector<std::string> split_names(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

Conventions load_conventions(const std::string& path) {
    return path.empty() ? Conventions{} : conventions_from_file(path);
}

DiPoly eval_input(const HallOrderConfig& order, const std::string& text) {
    ParsedValue v = parse_expression(order, text);
    if (std::holds_alternative<StandardSequence>(v))
        throw Error("expected an expression, got a standard sequence");
    if (std::holds_alternative<SignedTree>(v))
        return eval_expr(Expr::from_tree(std::get<SignedTree>(v)));
    return eval_expr(std::get<ExprPtr>(v));
}

Monomial require_monomial(const HallOrderConfig& order, const DiPoly& p) {
    if (p.term_count() != 1 || p.terms().begin()->second != 1)
        throw Error("expression does not evaluate to a single monomial: " +
                    poly_text(order, p));
    return p.terms().begin()->first;
}

std::vector<Claim> parse_claim_list(const std::string& text) {
    if (text == "all") return {kAllClaims.begin(), kAllClaims.end()};
    std::vector<Claim> out;
    for (const std::string& name : split_names(text)) {
        auto c = claim_from_name(name);
        if (!c) throw UsageError("unknown claim '" + name + "'");
        out.push_back(*c);
    }
    return out;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hall-basis calculator and claim harness for free Leibniz algebras"};
    app.name("leib");
    app.require_subcommand(1);

    std::string alphabet = "x,y";
    std::string conventions_path;
    bool unicode = false;
    bool structured = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--alphabet", alphabet,
                        "comma-separated generator names, greatest first")
            ->capture_default_str();
        cmd->add_option("--conventions", conventions_path,
                        "conventions file (key = value lines)");
    };

    int max_degree = 0;
    auto* hall = app.add_subcommand("hall", "list the Hall trees per degree");
    add_common(hall);
    hall->add_option("--max-degree", max_degree, "largest degree to list")->required();
    hall->add_flag("--structured", structured, "emit JSON");

    std::string expr_text, expr_text2;
    auto* eval_cmd = app.add_subcommand("eval", "evaluate an expression to a polynomial");
    add_common(eval_cmd);
    eval_cmd->add_option("expr", expr_text, "expression")->required();
    eval_cmd->add_flag("--unicode", unicode, "print the product symbols in Unicode");
    eval_cmd->add_flag("--structured", structured, "emit JSON");

    auto* bracket_cmd = app.add_subcommand("bracket", "bracket of two expressions");
    add_common(bracket_cmd);
    bracket_cmd->add_option("expr1", expr_text, "first expression")->required();
    bracket_cmd->add_option("expr2", expr_text2, "second expression")->required();
    bracket_cmd->add_flag("--unicode", unicode, "print the product symbols in Unicode");
    bracket_cmd->add_flag("--structured", structured, "emit JSON");

    auto* factorize_cmd =
        app.add_subcommand("factorize", "Hall factorization of a monomial-valued expression");
    add_common(factorize_cmd);
    factorize_cmd->add_option("expr", expr_text, "expression")->required();

    auto* bracket_hall_cmd =
        app.add_subcommand("bracket-hall", "expand the bracket of two Hall trees over Hall trees");
    add_common(bracket_hall_cmd);
    bracket_hall_cmd->add_option("tree1", expr_text, "first Hall tree")->required();
    bracket_hall_cmd->add_option("tree2", expr_text2, "second Hall tree")->required();

    auto* tob_cmd = app.add_subcommand("to-b", "expand an expression over the terminal-sequence family");
    add_common(tob_cmd);
    tob_cmd->add_option("expr", expr_text, "expression")->required();

    std::string claims_text = "all";
    std::string out_path;
    bool sweep = false;
    bool timings = false;
    auto* verify_cmd = app.add_subcommand("verify", "run the claim harness");
    add_common(verify_cmd);
    verify_cmd->add_option("--claims", claims_text, "'all' or a comma-separated claim list")
        ->capture_default_str();
    verify_cmd->add_option("--max-degree", max_degree, "largest degree to check")->required();
    verify_cmd->add_option("--out", out_path, "report destination (stdout when omitted)");
    verify_cmd->add_flag("--sweep", sweep,
                         "run every claim under all 16 combinations of the four binary conventions");
    verify_cmd->add_flag("--timings", timings,
                         "embed measured elapsed_ms in the report (breaks byte determinism)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        HallOrderConfig order = make_order(split_names(alphabet));
        Conventions conv = load_conventions(conventions_path);
        FormatOptions fmt{unicode};

        if (app.got_subcommand(hall)) {
            if (max_degree < 1) throw UsageError("--max-degree must be >= 1");
            if (structured) {
                nlohmann::ordered_json doc;
                doc["alphabet"] = order.alphabet;
                doc["max_degree"] = max_degree;
                nlohmann::ordered_json degrees = nlohmann::ordered_json::array();
                for (int d = 1; d <= max_degree; ++d) {
                    nlohmann::ordered_json entry;
                    entry["degree"] = d;
                    nlohmann::ordered_json trees = nlohmann::ordered_json::array();
                    for (const SignedTree& t : enumerate_hall(order, conv, d))
                        trees.push_back(tree_text(order, t));
                    entry["trees"] = std::move(trees);
                    degrees.push_back(std::move(entry));
                }
                doc["degrees"] = std::move(degrees);
                out << doc.dump(2) << "\n";
            } else {
                for (int d = 1; d <= max_degree; ++d) {
                    out << "# degree " << d << "\n";
                    for (const SignedTree& t : enumerate_hall(order, conv, d))
                        out << tree_text(order, t) << "\n";
                }
            }
            return 0;
        }

        if (app.got_subcommand(eval_cmd)) {
            DiPoly p = eval_input(order, expr_text);
            out << (structured ? structured_poly(order, p) : format_poly(order, p, fmt) + "\n");
            return 0;
        }

        if (app.got_subcommand(bracket_cmd)) {
            DiPoly p = bracket(eval_input(order, expr_text), eval_input(order, expr_text2));
            out << (structured ? structured_poly(order, p) : format_poly(order, p, fmt) + "\n");
            return 0;
        }

        if (app.got_subcommand(factorize_cmd)) {
            Monomial m = require_monomial(order, eval_input(order, expr_text));
            out << sequence_text(order, factorize_monomial(order, conv, m)) << "\n";
            return 0;
        }

        if (app.got_subcommand(bracket_hall_cmd)) {
            SignedTree t1 = parse_tree(order, expr_text);
            SignedTree t2 = parse_tree(order, expr_text2);
            out << hall_combination_text(order, bracket_hall(order, conv, t1, t2)) << "\n";
            return 0;
        }

        if (app.got_subcommand(tob_cmd)) {
            DiPoly p = eval_input(order, expr_text);
            out << b_combination_text(order, to_b_basis(order, conv, p)) << "\n";
            return 0;
        }

        if (app.got_subcommand(verify_cmd)) {
            if (max_degree < 1) throw UsageError("--max-degree must be >= 1");
            if (sweep) {
                auto rows = run_convention_sweep(order, max_degree);
                std::string doc = render_sweep(rows, order, max_degree);
                if (out_path.empty()) {
                    out << doc;
                } else {
                    std::ofstream f(out_path, std::ios::binary);
                    if (!f) throw Error("cannot open '" + out_path + "'");
                    f << doc;
                    if (!f) throw Error("failed writing '" + out_path + "'");
                    for (const SweepRow& r : rows)
                        out << claim_name(r.claim) << " under {" << "rise="
                            << to_string(r.conventions.rise_strictness)
                            << ", pair=" << to_string(r.conventions.hall_pair_strictness)
                            << ", tie=" << to_string(r.conventions.def1_tie_at_i_equals_j)
                            << ", middle=" << to_string(r.conventions.middle_tracking)
                            << "}: " << status_name(r.status) << " ("
                            << r.counterexample_count << " counterexamples)\n";
                }
                return 0;
            }
            std::vector<Claim> claims = parse_claim_list(claims_text);
            std::vector<ClaimReport> reports = run_claims(order, conv, claims, max_degree);
            for (const ClaimReport& r : reports)
                if (!out_path.empty())
                    out << claim_name(r.claim) << ": " << status_name(r.status) << " ("
                        << r.counterexamples.size() << " counterexamples, "
                        << r.instances_checked << " instances, " << r.elapsed_ms << " ms)\n";
            if (!timings)
                for (ClaimReport& r : reports) r.elapsed_ms = 0;
            if (out_path.empty())
                out << render_report(reports);
            else
                write_report(reports, out_path);
            return 0;
        }

        throw UsageError("no subcommand selected");
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace leibniz
