// pretzelpoly: Kauffman bracket and Alexander-Conway polynomials of pretzel
// links, with closed-form, tangle-reduction, state-sum and skein backends.
//
// Exit codes: 0 success, 2 usage/spec error, 3 method precondition error,
// 4 enumeration budget exceeded, 1 verification failure.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pretzelpoly/bracket.hpp"
#include "pretzelpoly/conway.hpp"
#include "pretzelpoly/verify.hpp"

using pretzel::BracketMethod;
using pretzel::BracketResult;
using pretzel::LaurentPoly;
using pretzel::PretzelSpec;
using ordered_json = nlohmann::ordered_json;

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

// ---- family detection for the closed bracket formulas ----

// spec of shape (1,1,n) with positive n
std::optional<int> p11n_param(const PretzelSpec& spec) {
    if (spec.columns() == 3 && spec.tangles[0] == 1 && spec.tangles[1] == 1 &&
        spec.tangles[2] >= 1)
        return spec.tangles[2];
    return std::nullopt;
}

// spec of shape (1,...,1,n): m >= 1 leading ones, positive trailing n
std::optional<std::pair<int, int>> general_params(const PretzelSpec& spec) {
    if (spec.columns() < 2 || spec.tangles.back() < 1)
        return std::nullopt;
    for (int i = 0; i + 1 < spec.columns(); ++i)
        if (spec.tangles[static_cast<std::size_t>(i)] != 1)
            return std::nullopt;
    return std::make_pair(spec.columns() - 1, spec.tangles.back());
}

// Resolves a bracket computation. `method` is one of auto, statesum, tangle,
// closed. Auto resolution order: closed formula, then tangle reduction (the
// state sum stays behind an explicit flag since the tangle path covers every
// spec exactly). The three-strand closed form leaves out P(1,1,1); a closed
// request for it transparently runs the state sum instead.
BracketResult run_bracket(const PretzelSpec& spec, const std::string& method, int budget) {
    if (method == "statesum")
        return bracket_statesum(spec, budget);
    if (method == "tangle")
        return bracket_tangle_eval(spec);

    const auto n3 = p11n_param(spec);
    if (n3 && *n3 >= 2)
        return pretzel::bracket_closed_p11n(*n3);
    if (method == "closed" && n3 && *n3 == 1) {
        std::cerr << "note: the closed form does not cover P(1,1,1); using the state sum\n";
        return bracket_statesum(spec, budget);
    }
    if (!n3)
        if (const auto mn = general_params(spec))
            return pretzel::bracket_closed_general(mn->first, mn->second);

    if (method == "closed")
        throw pretzel::PreconditionError("no closed formula covers P(" + spec.to_string() +
                                         "); try --method tangle or statesum");
    return pretzel::bracket_tangle_eval(spec);
}

struct ConwayResult {
    LaurentPoly polynomial{pretzel::Var::Z};
    std::string method;
};

ConwayResult run_conway(const PretzelSpec& spec, const std::string& method) {
    if (spec.columns() != 3 || spec.tangles[0] != 1 || spec.tangles[1] != 1)
        throw pretzel::PreconditionError("Conway polynomials are implemented for the family "
                                         "P(1,1,n); got P(" +
                                         spec.to_string() + ")");
    const int n = spec.tangles[2];
    if (method == "skein")
        return {pretzel::conway_skein_p11n(n), "skein"};
    if (method == "closed" || method == "auto")
        return {pretzel::conway_closed_p11n(n), "closed"};
    throw std::invalid_argument("method '" + method + "' does not apply to the conway invariant");
}

std::string render(const LaurentPoly& p, const std::string& format) {
    return format == "latex" ? pretzel::to_latex(p) : pretzel::to_text(p);
}

// ---- compute ----

struct ComputeArgs {
    std::string invariant;
    std::string pretzel;
    std::string method = "auto";
    std::string format = "text";
    int max_crossings = pretzel::kDefaultCrossingBudget;
};

int run_compute(const ComputeArgs& args) {
    const PretzelSpec spec = PretzelSpec::parse(args.pretzel);

    LaurentPoly poly(pretzel::Var::A);
    std::string method;
    std::uint64_t state_count = 0;
    const Timer timer;
    if (args.invariant == "bracket") {
        if (args.method == "skein")
            throw std::invalid_argument("method 'skein' applies to the conway invariant");
        const BracketResult r = run_bracket(spec, args.method, args.max_crossings);
        poly = r.polynomial;
        method = pretzel::method_name(r.method);
        state_count = r.state_count;
    } else {
        const ConwayResult r = run_conway(spec, args.method);
        poly = r.polynomial;
        method = r.method;
    }
    const double elapsed = timer.ms();

    if (args.format == "json") {
        ordered_json rec;
        rec["spec"] = spec.to_string();
        rec["invariant"] = args.invariant;
        rec["method"] = method;
        rec["text"] = pretzel::to_text(poly);
        rec["polynomial"] = ordered_json::parse(pretzel::to_json(poly));
        rec["elapsed_ms"] = elapsed;
        if (state_count > 0)
            rec["state_count"] = state_count;
        std::cout << rec.dump() << "\n";
    } else {
        std::cout << render(poly, args.format) << "\n";
    }

    std::cerr << "method=" << method;
    if (state_count > 0)
        std::cerr << " states=" << state_count;
    std::cerr << " elapsed_ms=" << elapsed << "\n";
    return 0;
}

// ---- table ----

struct TableArgs {
    std::string invariant;
    std::string family = "p11n";
    std::string range;
    int m = 0;
    std::string methods = "auto";
    std::string format = "text";
    int max_crossings = pretzel::kDefaultCrossingBudget;
};

std::pair<int, int> parse_range(const std::string& text) {
    const auto sep = text.find("..");
    if (sep == std::string::npos)
        throw std::invalid_argument("range must look like a..b, got '" + text + "'");
    try {
        const int lo = std::stoi(text.substr(0, sep));
        const int hi = std::stoi(text.substr(sep + 2));
        return {lo, hi};
    } catch (const std::exception&) {
        throw std::invalid_argument("range must look like a..b, got '" + text + "'");
    }
}

std::vector<std::string> split_methods(const std::string& text) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = text.find(',', pos);
        out.push_back(text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                  : comma - pos));
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return out;
}

struct TableCell {
    std::string method;
    std::string text;
};

int run_table(const TableArgs& args) {
    const auto [lo, hi] = parse_range(args.range);
    const auto methods = split_methods(args.methods);
    for (const auto& m : methods) {
        const bool bracket_ok = m == "auto" || m == "statesum" || m == "tangle" || m == "closed";
        const bool conway_ok = m == "auto" || m == "closed" || m == "skein";
        if (args.invariant == "bracket" ? !bracket_ok : !conway_ok)
            throw std::invalid_argument("method '" + m + "' does not apply to the " +
                                        args.invariant + " invariant");
    }
    if (args.invariant == "conway" && args.family != "p11n")
        throw std::invalid_argument("conway tables cover the p11n family only");
    if (args.family == "p1m_n" && args.m < 1)
        throw std::invalid_argument("family p1m_n needs --m >= 1 single-crossing tangles");

    struct Row {
        int n;
        std::vector<TableCell> cells;
    };
    std::vector<Row> rows;
    for (int n = lo; n <= hi; ++n) {
        if (n == 0)
            continue;  // no pretzel tangle of length zero
        PretzelSpec spec;
        if (args.family == "p11n") {
            spec.tangles = {1, 1, n};
        } else {
            spec.tangles.assign(static_cast<std::size_t>(args.m), 1);
            spec.tangles.push_back(n);
        }
        Row row{n, {}};
        for (const auto& m : methods) {
            TableCell cell;
            try {
                if (args.invariant == "bracket") {
                    const auto r = run_bracket(spec, m, args.max_crossings);
                    cell.method = pretzel::method_name(r.method);
                    cell.text = (args.format == "latex") ? pretzel::to_latex(r.polynomial)
                                                         : pretzel::to_text(r.polynomial);
                } else {
                    const auto r = run_conway(spec, m);
                    cell.method = r.method;
                    cell.text = (args.format == "latex") ? pretzel::to_latex(r.polynomial)
                                                         : pretzel::to_text(r.polynomial);
                }
            } catch (const pretzel::PreconditionError&) {
                cell.method = m;
                cell.text = "n/a";
            } catch (const pretzel::BudgetError&) {
                cell.method = m;
                cell.text = "n/a (budget)";
            }
            row.cells.push_back(std::move(cell));
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty())
        throw std::invalid_argument("range " + args.range + " selects no valid parameter values");

    if (args.format == "csv") {
        std::cout << "n";
        for (const auto& m : methods)
            std::cout << ',' << m;
        std::cout << "\n";
        for (const auto& row : rows) {
            std::cout << row.n;
            for (const auto& cell : row.cells)
                std::cout << ',' << cell.text;
            std::cout << "\n";
        }
    } else if (args.format == "json") {
        ordered_json doc;
        doc["invariant"] = args.invariant;
        doc["family"] = args.family;
        if (args.family == "p1m_n")
            doc["m"] = args.m;
        doc["methods"] = methods;
        doc["rows"] = ordered_json::array();
        for (const auto& row : rows) {
            ordered_json jrow;
            jrow["n"] = row.n;
            jrow["cells"] = ordered_json::array();
            for (const auto& cell : row.cells)
                jrow["cells"].push_back({{"method", cell.method}, {"text", cell.text}});
            doc["rows"].push_back(std::move(jrow));
        }
        std::cout << doc.dump() << "\n";
    } else if (args.format == "latex") {
        std::cout << "\\begin{tabular}{l";
        for (std::size_t i = 0; i < methods.size(); ++i)
            std::cout << 'l';
        std::cout << "}\n$n$";
        for (const auto& m : methods)
            std::cout << " & " << m;
        std::cout << " \\\\\n\\hline\n";
        for (const auto& row : rows) {
            std::cout << row.n;
            for (const auto& cell : row.cells)
                std::cout << " & $" << cell.text << "$";
            std::cout << " \\\\\n";
        }
        std::cout << "\\end{tabular}\n";
    } else {
        std::vector<std::size_t> width(methods.size());
        for (const auto& row : rows)
            for (std::size_t i = 0; i < row.cells.size(); ++i)
                width[i] = std::max(width[i], row.cells[i].text.size());
        for (const auto& row : rows) {
            std::cout << row.n;
            for (std::size_t i = 0; i < row.cells.size(); ++i) {
                std::cout << "  " << row.cells[i].text;
                if (i + 1 < row.cells.size())
                    std::cout << std::string(width[i] - row.cells[i].text.size(), ' ');
            }
            std::cout << "\n";
        }
    }
    return 0;
}

// ---- verify ----

struct VerifyArgs {
    int max_crossings = pretzel::kDefaultCrossingBudget;
    std::string only;
    std::uint64_t seed = pretzel::VerifyOptions{}.seed;
};

int run_verify_cmd(const VerifyArgs& args) {
    pretzel::VerifyOptions options;
    options.max_crossings = args.max_crossings;
    options.only = args.only;
    options.seed = args.seed;

    const auto results = pretzel::run_verify(options);
    long failed_checks = 0;
    for (const auto& r : results) {
        if (!r.passed())
            ++failed_checks;
        std::cout << r.name << ": checked=" << r.checked << " failed=" << r.failed
                  << " skipped=" << r.skipped << " -> " << (r.passed() ? "PASS" : "FAIL") << "\n";
        for (const auto& n : r.notes)
            std::cout << "    " << n << "\n";
    }
    std::cout << "verify: " << (results.size() - static_cast<std::size_t>(failed_checks)) << "/"
              << results.size() << " checks passed\n";
    return failed_checks == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kauffman bracket and Alexander-Conway polynomials of pretzel links"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "pretzelpoly 0.1.0");

    ComputeArgs compute;
    auto* cmd_compute = app.add_subcommand("compute", "compute one invariant of one pretzel link");
    cmd_compute->add_option("invariant", compute.invariant, "bracket or conway")
        ->required()
        ->check(CLI::IsMember({"bracket", "conway"}));
    cmd_compute->add_option("--pretzel", compute.pretzel, "comma-separated tangle sizes, e.g. 1,1,-4")
        ->required();
    cmd_compute->add_option("--method", compute.method, "computation method")
        ->check(CLI::IsMember({"auto", "statesum", "tangle", "closed", "skein"}));
    cmd_compute->add_option("--format", compute.format, "output format")
        ->check(CLI::IsMember({"text", "json", "latex"}));
    cmd_compute->add_option("--max-crossings", compute.max_crossings,
                            "state-sum enumeration budget");

    TableArgs table;
    auto* cmd_table = app.add_subcommand("table", "tabulate an invariant over a parameter range");
    cmd_table->add_option("invariant", table.invariant, "bracket or conway")
        ->required()
        ->check(CLI::IsMember({"bracket", "conway"}));
    cmd_table->add_option("--family", table.family, "p11n for P(1,1,n), p1m_n for P(1,...,1,n)")
        ->check(CLI::IsMember({"p11n", "p1m_n"}));
    cmd_table->add_option("--range", table.range, "inclusive parameter range a..b")->required();
    cmd_table->add_option("--m", table.m, "number of single-crossing tangles (family p1m_n)");
    cmd_table->add_option("--methods", table.methods, "comma-separated methods, one column each");
    cmd_table->add_option("--format", table.format, "output format")
        ->check(CLI::IsMember({"text", "csv", "json", "latex"}));
    cmd_table->add_option("--max-crossings", table.max_crossings, "state-sum enumeration budget");

    VerifyArgs verify;
    auto* cmd_verify = app.add_subcommand("verify", "run the formula-vs-oracle check suite");
    cmd_verify->add_option("--max-crossings", verify.max_crossings,
                           "skip sweeps that would enumerate more crossings than this");
    cmd_verify->add_option("--only", verify.only, "run a single check by name");
    cmd_verify->add_option("--seed", verify.seed, "seed for the randomized checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_compute->parsed())
            return run_compute(compute);
        if (cmd_table->parsed())
            return run_table(table);
        return run_verify_cmd(verify);
    } catch (const pretzel::BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const pretzel::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        // covers InvalidSpecError and CLI usage problems
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
