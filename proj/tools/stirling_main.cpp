// Command-line front end: exact coefficient tables, Stirling-series
// evaluation, and numerical verification suites in text/json/csv.

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stirling/analytic.hpp"
#include "stirling/approximant.hpp"
#include "stirling/oracle.hpp"
#include "stirling/quadrature.hpp"
#include "stirling/series.hpp"

using json = nlohmann::ordered_json;
using namespace stirling;

namespace {

constexpr const char* kSchemaVersion = "1";

struct Options {
    std::string format = "text";
    int digits = 64;
};

int default_digits() {
    if (const char* env = std::getenv("STIRLING_DIGITS")) {
        try {
            int d = std::stoi(env);
            if (d >= 16 && d <= 10000) return d;
        } catch (...) {
        }
        std::fprintf(stderr, "warning: ignoring invalid STIRLING_DIGITS=%s\n", env);
    }
    return 64;
}

void emit_json(const std::string& command, json payload) {
    json record;
    record["schema_version"] = kSchemaVersion;
    record["command"] = command;
    record["payload"] = std::move(payload);
    std::printf("%s\n", record.dump(2).c_str());
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

std::vector<BigRat> parse_rational_list(const std::string& text) {
    std::vector<BigRat> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string::npos) comma = text.size();
        std::string item = text.substr(start, comma - start);
        if (!item.empty()) out.push_back(parse_rational(item));
        start = comma + 1;
        if (comma == text.size()) break;
    }
    if (out.empty()) throw std::invalid_argument("empty list: " + text);
    return out;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    for (const BigRat& r : parse_rational_list(text)) {
        if (r.get_den() != 1) throw std::invalid_argument("expected integer list: " + text);
        out.push_back(static_cast<int>(r.get_num().get_si()));
    }
    return out;
}

int cmd_coeffs(int max, const Options& opt) {
    CoeffTable table = compute_coefficients(max);
    if (opt.format == "json") {
        json coeffs = json::array();
        for (int i = 0; i <= max; ++i) {
            coeffs.push_back({{"index", i},
                              {"rational_part", to_string(table.a(i).rational_part())},
                              {"sqrt2_part", to_string(table.a(i).sqrt2_part())},
                              {"rendering", table.a(i).to_string()}});
        }
        emit_json("coeffs", {{"max", max}, {"coefficients", std::move(coeffs)}});
    } else if (opt.format == "csv") {
        std::printf("index,rational_part,sqrt2_part\n");
        for (int i = 0; i <= max; ++i)
            std::printf("%d,%s,%s\n", i, csv_quote(to_string(table.a(i).rational_part())).c_str(),
                        csv_quote(to_string(table.a(i).sqrt2_part())).c_str());
    } else {
        for (int i = 0; i <= max; ++i)
            std::printf("a_%d = %s\n", i, table.a(i).to_string().c_str());
    }
    return 0;
}

int cmd_stirling(int max, const Options& opt) {
    StirlingSeries series = stirling_coefficients(compute_coefficients(2 * max));
    if (opt.format == "json") {
        json coeffs = json::array();
        for (int k = 0; k <= max; ++k)
            coeffs.push_back({{"index", k}, {"value", to_string(series.c(k))}});
        emit_json("stirling", {{"max", max}, {"coefficients", std::move(coeffs)}});
    } else if (opt.format == "csv") {
        std::printf("index,value\n");
        for (int k = 0; k <= max; ++k)
            std::printf("%d,%s\n", k, csv_quote(to_string(series.c(k))).c_str());
    } else {
        for (int k = 0; k <= max; ++k)
            std::printf("c_%d = %s\n", k, to_string(series.c(k)).c_str());
    }
    return 0;
}

json row_to_json(const ApproxRow& row, int digits) {
    return {{"s", to_string(row.s)},
            {"order", row.order},
            {"digits", digits},
            {"reference", to_decimal_string(row.reference, digits)},
            {"approx", to_decimal_string(row.approx, digits)},
            {"rel_error", to_decimal_string(row.rel_error, 6)},
            {"scaled_error", to_decimal_string(row.scaled_error, 6)}};
}

int cmd_approx(const std::string& s_text, int order, const Options& opt) {
    PrecisionContext ctx(opt.digits);
    BigRat s = parse_rational(s_text);
    StirlingSeries series = stirling_coefficients(compute_coefficients(2 * order + 2));
    ApproximationReport report = error_table({s}, {order}, series, ctx);
    const ApproxRow& row = report.rows.at(0);
    if (opt.format == "json") {
        emit_json("approx", row_to_json(row, opt.digits));
    } else if (opt.format == "csv") {
        std::printf("s,order,digits,reference,approx,rel_error,scaled_error\n");
        std::printf("%s,%d,%d,%s,%s,%s,%s\n", csv_quote(to_string(row.s)).c_str(), row.order,
                    opt.digits, to_decimal_string(row.reference, opt.digits).c_str(),
                    to_decimal_string(row.approx, opt.digits).c_str(),
                    to_decimal_string(row.rel_error, 6).c_str(),
                    to_decimal_string(row.scaled_error, 6).c_str());
    } else {
        std::printf("s            = %s\n", to_string(row.s).c_str());
        std::printf("order        = %d\n", row.order);
        std::printf("digits       = %d\n", opt.digits);
        std::printf("reference    = %s\n", to_decimal_string(row.reference, opt.digits).c_str());
        std::printf("approx       = %s\n", to_decimal_string(row.approx, opt.digits).c_str());
        std::printf("rel_error    = %s\n", to_decimal_string(row.rel_error, 6).c_str());
        std::printf("scaled_error = %s\n", to_decimal_string(row.scaled_error, 6).c_str());
    }
    return 0;
}

int cmd_table(const std::string& s_list_text, const std::string& orders_text, const Options& opt) {
    PrecisionContext ctx(opt.digits);
    std::vector<BigRat> s_list = parse_rational_list(s_list_text);
    std::vector<int> orders = parse_int_list(orders_text);
    int max_order = 0;
    for (int n : orders) {
        if (n < 0 || n > 100) throw std::invalid_argument("order out of range [0, 100]");
        max_order = std::max(max_order, n);
    }
    StirlingSeries series = stirling_coefficients(compute_coefficients(2 * max_order + 2));
    ApproximationReport report = error_table(s_list, orders, series, ctx);

    if (opt.format == "json") {
        json rows = json::array();
        for (const ApproxRow& row : report.rows) rows.push_back(row_to_json(row, opt.digits));
        emit_json("table", {{"digits", opt.digits}, {"rows", std::move(rows)}});
    } else if (opt.format == "csv") {
        std::printf("s,order,digits,reference,approx,rel_error,scaled_error\n");
        for (const ApproxRow& row : report.rows)
            std::printf("%s,%d,%d,%s,%s,%s,%s\n", csv_quote(to_string(row.s)).c_str(), row.order,
                        opt.digits, to_decimal_string(row.reference, opt.digits).c_str(),
                        to_decimal_string(row.approx, opt.digits).c_str(),
                        to_decimal_string(row.rel_error, 6).c_str(),
                        to_decimal_string(row.scaled_error, 6).c_str());
    } else {
        std::printf("%-8s %-6s %-14s %-14s\n", "s", "order", "rel_error", "scaled_error");
        for (const ApproxRow& row : report.rows)
            std::printf("%-8s %-6d %-14s %-14s\n", to_string(row.s).c_str(), row.order,
                        to_decimal_string(row.rel_error, 6).c_str(),
                        to_decimal_string(row.scaled_error, 6).c_str());
    }
    return 0;
}

struct Check {
    std::string name;
    std::string measured;
    std::string tolerance;
    bool pass = false;
};

void run_oracle_checks(std::vector<Check>& checks, const PrecisionContext& ctx) {
    CoeffTable table = compute_coefficients(20);
    StirlingSeries series = stirling_coefficients(table);
    StirlingSeries oracle = stirling_from_bernoulli(10);
    bool equal = true;
    for (int k = 0; k <= 10; ++k) equal = equal && oracle.c(k) == series.c(k);
    checks.push_back({"stirling-coefficients-vs-bernoulli-route (k<=10)",
                      equal ? "EXACT MATCH" : "MISMATCH", "exact rational equality", equal});

    const int digits = std::max(ctx.digits, 60);
    PrecisionContext m1(digits);
    const int bits = working_bits(m1);
    for (int n = 1; n <= 3; ++n) {
        Method1Estimate est = method1_estimate(n, table, m1);
        Real exact = qsqrt2_to_real(table.a(n), m1);
        Real err(0, bits);
        err = est.value - exact;
        err = abs_real(err);
        Real tol(0, bits);
        tol = abs_real(exact) * to_real(make_rational(1, 100000000), bits);
        checks.push_back({"limit-formula a_" + std::to_string(n) + " (" + std::to_string(digits) +
                              " digits, " + std::to_string(est.stabilized_digits) + " stable)",
                          "|err| = " + to_decimal_string(err, 3), "1e-8 relative",
                          err <= tol && est.stabilized_digits >= 4});
    }
}

void run_identity_checks(std::vector<Check>& checks, const PrecisionContext& ctx) {
    const int bits = working_bits(ctx);
    Real tol = to_real(make_rational(1, 10000000000L), bits);
    for (long sv : {1L, 2L, 5L, 10L, 20L}) {
        BigRat s(sv);
        Real gamma = gamma_reference(s + 1, ctx);
        Real s_real = to_real(s, bits);

        IntegralResult lap = laplace_integral(s, ctx);
        Real lhs(0, bits);
        lhs = pow_real(s_real, s_real + 1, bits) * exp_real(-s_real, bits) * lap.value;
        Real rel_lap(0, bits);
        rel_lap = abs_real(lhs - gamma) / gamma;
        checks.push_back({"laplace-identity s=" + std::to_string(sv),
                          "rel residual = " + to_decimal_string(rel_lap, 3), "1e-10",
                          rel_lap <= tol});

        IntegralResult sub = substituted_integral(s, ctx);
        Real lhs2(0, bits);
        lhs2 = power_term(s, ctx) * sqrt_pos(s_real, bits) * sub.value;
        Real rel_sub(0, bits);
        rel_sub = abs_real(lhs2 - gamma) / gamma;
        checks.push_back({"gaussian-substitution-identity s=" + std::to_string(sv),
                          "rel residual = " + to_decimal_string(rel_sub, 3), "1e-10",
                          rel_sub <= tol});

        Real cross(0, bits);
        cross = abs_real(lhs - lhs2) / gamma;
        checks.push_back({"route-agreement s=" + std::to_string(sv),
                          "rel gap = " + to_decimal_string(cross, 3), "1e-10", cross <= tol});
    }
}

void run_limit_checks(std::vector<Check>& checks, const PrecisionContext& ctx) {
    const int bits = working_bits(ctx);
    std::vector<BigRat> s_list{BigRat(1), BigRat(10), BigRat(100), BigRat(1000)};
    std::vector<LimitPoint> points = limit_check_e9(s_list, ctx);
    bool decreasing = true;
    std::string devs;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (i + 1 < points.size() && !(points[i].deviation > points[i + 1].deviation))
            decreasing = false;
        if (!devs.empty()) devs += " > ";
        devs += to_decimal_string(points[i].deviation, 5);
    }
    checks.push_back({"limit-deviation-decreasing s=1,10,100,1000", devs,
                      "strictly decreasing", decreasing});

    // leading error term: deviation * s -> sqrt(2 pi)/12
    Real target(0, bits);
    target = sqrt_two_pi(ctx) / 12;
    Real scaled(0, bits);
    scaled = points.back().deviation * to_real(points.back().s, bits);
    Real gap(0, bits);
    gap = abs_real(scaled - target) / target;
    checks.push_back({"limit-rate s=1000 (deviation*s vs sqrt(2pi)/12)",
                      "rel gap = " + to_decimal_string(gap, 3), "0.15", gap <= Real(0.15, bits)});
}

int cmd_verify(const std::string& suite, const Options& opt) {
    PrecisionContext ctx(opt.digits);
    std::vector<Check> checks;
    if (suite == "oracles" || suite == "all") run_oracle_checks(checks, ctx);
    if (suite == "identities" || suite == "all") run_identity_checks(checks, ctx);
    if (suite == "limits" || suite == "all") run_limit_checks(checks, ctx);

    int passed = 0;
    for (const Check& c : checks) passed += c.pass ? 1 : 0;
    const bool all_pass = passed == static_cast<int>(checks.size());

    if (opt.format == "json") {
        json rows = json::array();
        for (const Check& c : checks)
            rows.push_back({{"name", c.name},
                            {"measured", c.measured},
                            {"tolerance", c.tolerance},
                            {"pass", c.pass}});
        emit_json("verify", {{"suite", suite},
                             {"digits", opt.digits},
                             {"checks", std::move(rows)},
                             {"passed", passed},
                             {"total", static_cast<int>(checks.size())},
                             {"pass", all_pass}});
    } else if (opt.format == "csv") {
        std::printf("name,measured,tolerance,pass\n");
        for (const Check& c : checks)
            std::printf("%s,%s,%s,%s\n", csv_quote(c.name).c_str(), csv_quote(c.measured).c_str(),
                        csv_quote(c.tolerance).c_str(), c.pass ? "true" : "false");
    } else {
        for (const Check& c : checks)
            std::printf("%-52s %-36s tol %-12s %s\n", c.name.c_str(), c.measured.c_str(),
                        c.tolerance.c_str(), c.pass ? "PASS" : "FAIL");
        std::printf("summary: %d/%zu checks passed\n", passed, checks.size());
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Stirling-series coefficients for Gamma(s+1) with verification suites"};
    app.require_subcommand(1);
    app.fallthrough();  // inherited by subcommands: --digits/--format may follow them

    Options opt;
    opt.digits = default_digits();
    app.add_option("--digits", opt.digits, "working precision in significant digits")
        ->check(CLI::Range(16, 10000));
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    int coeffs_max = 10;
    CLI::App* coeffs = app.add_subcommand("coeffs", "MacLaurin coefficients a_n, exact");
    coeffs->add_option("--max", coeffs_max, "largest index")->check(CLI::Range(0, 200));

    int stirling_max = 10;
    CLI::App* stirling_cmd =
        app.add_subcommand("stirling", "Stirling series coefficients c_k, exact");
    stirling_cmd->add_option("--max", stirling_max, "largest index")->check(CLI::Range(0, 100));

    std::string approx_s = "10";
    int approx_order = 5;
    CLI::App* approx = app.add_subcommand("approx", "truncated-series approximation of Gamma(s+1)");
    approx->add_option("--s", approx_s, "evaluation point (decimal or p/q)");
    approx->add_option("--order", approx_order, "truncation order")->check(CLI::Range(0, 100));

    std::string table_s = "10,20,40,80";
    std::string table_orders = "0,1,5";
    CLI::App* table = app.add_subcommand("table", "error table over s and order lists");
    table->add_option("--s-list", table_s, "comma-separated s values");
    table->add_option("--orders", table_orders, "comma-separated orders");

    std::string suite = "all";
    CLI::App* verify = app.add_subcommand("verify", "verification suites");
    verify->add_option("--suite", suite, "which suite")
        ->check(CLI::IsMember({"identities", "oracles", "limits", "all"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (coeffs->parsed()) return cmd_coeffs(coeffs_max, opt);
        if (stirling_cmd->parsed()) return cmd_stirling(stirling_max, opt);
        if (approx->parsed()) return cmd_approx(approx_s, approx_order, opt);
        if (table->parsed()) return cmd_table(table_s, table_orders, opt);
        if (verify->parsed()) return cmd_verify(suite, opt);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
