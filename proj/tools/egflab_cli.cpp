// Batch front end: one pipeline per invocation, composition via files.
// Every JSON report embeds the run configuration; identical configurations
// produce byte-identical output.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "egflab/bestpossible.hpp"
#include "egflab/classes.hpp"
#include "egflab/diagnostics.hpp"
#include "egflab/oracles.hpp"
#include "egflab/power_series.hpp"
#include "egflab/saddle.hpp"
#include "egflab/smoothing.hpp"

using namespace egf;
using nlohmann::json;

namespace {

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Output {
    std::string path = "-";       // "-" = stdout
    std::string format = "json";  // json | csv
};

json base_config(const std::string& command, unsigned order) {
    json c;
    c["command"] = command;
    c["order"] = order;
    c["precision_bits"] = current_precision_bits();
    return c;
}

void emit(const Output& out, const json& report, const std::string& csv) {
    std::string payload;
    if (out.format == "json") {
        payload = report.dump(2);
        payload += '\n';
    } else if (out.format == "csv") {
        std::ostringstream hdr;
        hdr << "# config: " << report.at("config").dump() << '\n';
        payload = hdr.str() + csv;
    } else {
        throw usage_error("unknown format: " + out.format);
    }
    if (out.path == "-") {
        std::cout << payload;
    } else {
        std::ofstream f(out.path, std::ios::binary);
        if (!f) throw usage_error("cannot open output file: " + out.path);
        f << payload;
    }
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw usage_error("cannot open input file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

json parse_json_file(const std::string& path) {
    try {
        return json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        throw usage_error("malformed JSON in " + path + ": " + e.what());
    }
}

// Rule arguments: either a path to a rule JSON file or a shorthand:
//   constant-one | 1/n! | n^n/n! | floor-power:p/q | power:p/q |
//   support:a,b,c | broom-labelled | broom-unlabelled
RulePtr load_rule(const std::string& arg) {
    if (arg.size() > 5 && arg.substr(arg.size() - 5) == ".json") {
        try {
            return SequenceRule::from_json(parse_json_file(arg));
        } catch (const std::exception& e) {
            throw usage_error("bad rule file " + arg + ": " + e.what());
        }
    }
    try {
        if (arg == "constant-one") return SequenceRule::constant_one();
        if (arg == "1/n!") return SequenceRule::power_over_factorial(Rational(0), true);
        if (arg == "n^n/n!") return SequenceRule::power_over_factorial(Rational(1), false);
        if (arg == "broom-labelled" || arg == "broom-unlabelled")
            return SequenceRule::named_builtin(arg);
        auto colon = arg.find(':');
        if (colon != std::string::npos) {
            std::string head = arg.substr(0, colon), tail = arg.substr(colon + 1);
            if (head == "floor-power")
                return SequenceRule::power_over_factorial(rational_from_string(tail), true);
            if (head == "power")
                return SequenceRule::power_over_factorial(rational_from_string(tail), false);
            if (head == "support") {
                std::set<unsigned> s;
                std::istringstream ss(tail);
                std::string tok;
                while (std::getline(ss, tok, ',')) s.insert(std::stoul(tok));
                return SequenceRule::binary_support(s);
            }
        }
    } catch (const usage_error&) {
        throw;
    } catch (const std::exception& e) {
        throw usage_error("bad rule argument '" + arg + "': " + e.what());
    }
    throw usage_error("unrecognized rule argument: " + arg);
}

RationalSeries load_series(const std::string& path) {
    try {
        json j = parse_json_file(path);
        // accept either a bare series or a full report from another command
        if (j.contains("series")) j = j.at("series");
        return series_from_json(j);
    } catch (const usage_error&) {
        throw;
    } catch (const std::exception& e) {
        throw usage_error("bad series file " + path + ": " + e.what());
    }
}

std::vector<unsigned> parse_unsigned_list(const std::string& arg) {
    std::vector<unsigned> out;
    std::istringstream ss(arg);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoul(tok));
    if (out.empty()) throw usage_error("empty list argument");
    return out;
}

// --- pipelines, each returning (json report, csv body) -------------------

std::pair<json, std::string> run_exp(const std::string& rule_arg, unsigned order,
                                     bool egf_weight) {
    auto rule = load_rule(rule_arg);
    auto g = RationalSeries::from_rule(*rule, order, egf_weight);
    auto f = series_exp(g);
    json rep;
    rep["config"] = base_config("exp", order);
    rep["config"]["rule"] = rule->to_json();
    rep["config"]["egf_weight"] = egf_weight;
    rep["series"] = series_to_json(f);
    std::ostringstream csv;
    csv << "n,f,count\n";
    json counts = json::array();
    for (unsigned n = 0; n <= order; ++n) {
        Rational c = f[n] * factorial(n);
        bool integral = denominator(c) == 1;
        csv << n << ',' << rational_to_string(f[n]) << ','
            << (integral ? numerator(c).str() : std::string()) << '\n';
        counts.push_back(integral ? json(numerator(c).str()) : json(nullptr));
    }
    rep["integer_counts"] = counts;
    return {rep, csv.str()};
}

std::pair<json, std::string> run_log(const std::string& series_path) {
    auto f = load_series(series_path);
    auto g = series_log(f);
    json rep;
    rep["config"] = base_config("log", f.order());
    rep["config"]["series_file"] = series_path;
    rep["series"] = series_to_json(g);
    return {rep, series_to_csv(g)};
}

std::pair<json, std::string> run_euler(const std::string& rule_arg, unsigned order) {
    auto rule = load_rule(rule_arg);
    auto a = euler_product(*rule, order);
    json rep;
    rep["config"] = base_config("euler", order);
    rep["config"]["rule"] = rule->to_json();
    rep["series"] = series_to_json(a);
    return {rep, series_to_csv(a)};
}

std::pair<json, std::string> run_ratios(const std::string& series_path, unsigned start,
                                        double kappa, double delta) {
    auto f = load_series(series_path);
    TrendConfig cfg;
    cfg.kappa = kappa;
    cfg.delta = delta;
    auto report = ratio_sequence(f, start, cfg);
    json rep;
    rep["config"] = base_config("ratios", f.order());
    rep["config"]["series_file"] = series_path;
    rep["config"]["start"] = start;
    rep["config"]["kappa"] = kappa;
    rep["config"]["delta"] = delta;
    rep["ratios"] = ratio_report_to_json(report);
    return {rep, ratio_report_to_csv(report)};
}

std::pair<json, std::string> run_saddle(const std::string& poly_path,
                                        const std::vector<unsigned>& ns) {
    auto g = load_series(poly_path);
    std::vector<SaddleReport> reports;
    json arr = json::array();
    for (unsigned n : ns) {
        auto r = hayman_estimate(g, n);
        arr.push_back(saddle_report_to_json(r));
        reports.push_back(std::move(r));
    }
    json rep;
    rep["config"] = base_config("saddle", g.order());
    rep["config"]["poly_file"] = poly_path;
    rep["config"]["n"] = ns;
    rep["saddle"] = arr;
    return {rep, saddle_reports_to_csv(reports)};
}

std::pair<json, std::string> run_exponent_fit(const std::string& poly_path,
                                              const std::vector<unsigned>& sample) {
    auto g = load_series(poly_path);
    auto fit = exponent_fit(g, sample);
    json rep;
    rep["config"] = base_config("exponent-fit", g.order());
    rep["config"]["poly_file"] = poly_path;
    rep["config"]["sample"] = sample;
    json table = json::array();
    std::ostringstream csv;
    csv << "n,s\n";
    for (const auto& [n, s] : fit.s) {
        table.push_back({{"n", n}, {"s", bigfloat_to_string(s)}});
        csv << n << ',' << bigfloat_to_string(s) << '\n';
    }
    rep["fit"] = {{"degree", fit.degree},
                  {"s", table},
                  {"drift_first", bigfloat_to_string(fit.drift_first)},
                  {"drift_last", bigfloat_to_string(fit.drift_last)}};
    return {rep, csv.str()};
}

std::pair<json, std::string> run_split(const std::string& series_path, unsigned ell) {
    auto g = load_series(series_path);
    auto parts = split_at(g, ell);
    json rep;
    rep["config"] = base_config("split", g.order());
    rep["config"]["series_file"] = series_path;
    rep["config"]["ell"] = ell;
    rep["low"] = series_to_json(parts.low);
    rep["high"] = series_to_json(parts.high);
    return {rep, series_to_csv(parts.low) + series_to_csv(parts.high)};
}

std::pair<json, std::string> run_cr_bound(const std::string& rule_arg, unsigned order,
                                          unsigned ell, long L,
                                          const std::vector<int>& rs) {
    auto rule = load_rule(rule_arg);
    auto g = RationalSeries::from_rule(*rule, order);
    if (L < 0) L = smallest_certified_onset(g);
    if (L < 0) throw check_failure("cr-bound: no certified positivity onset");
    auto split = split_at(g, ell);
    json rep;
    rep["config"] = base_config("cr-bound", order);
    rep["config"]["rule"] = rule->to_json();
    rep["config"]["ell"] = ell;
    rep["config"]["L"] = L;
    rep["config"]["r"] = rs;
    json table = json::array();
    std::ostringstream csv;
    csv << "r,C_r,argmax_n,window_lo,window_hi,lemma_max_quotient\n";
    for (int r : rs) {
        auto cb = cr_bound(g, split, r, static_cast<unsigned>(L));
        auto chk = lemma31_check(g, split, cb);
        table.push_back({{"r", r},
                         {"C_r", rational_to_string(cb.value)},
                         {"argmax_n", cb.argmax_n},
                         {"window_lo", cb.window_lo},
                         {"window_hi", cb.window_hi},
                         {"lemma_holds", chk.holds},
                         {"lemma_max_quotient", rational_to_string(chk.max_quotient)}});
        csv << r << ',' << rational_to_string(cb.value) << ',' << cb.argmax_n << ','
            << cb.window_lo << ',' << cb.window_hi << ','
            << rational_to_string(chk.max_quotient) << '\n';
    }
    rep["cr_table"] = table;
    return {rep, csv.str()};
}

std::pair<json, std::string> run_theorem_demo(const std::string& rule_arg,
                                              const std::string& theta_arg,
                                              unsigned order, double kappa,
                                              double delta) {
    auto rule = load_rule(rule_arg);
    Rational theta = rational_from_string(theta_arg);
    TrendConfig cfg;
    cfg.kappa = kappa;
    cfg.delta = delta;
    auto demo = theorem_demo(*rule, theta, order, cfg);
    json rep;
    rep["config"] = base_config("theorem-demo", order);
    rep["config"]["rule"] = rule->to_json();
    rep["config"]["theta"] = theta_arg;
    rep["config"]["kappa"] = kappa;
    rep["config"]["delta"] = delta;
    rep["demo"] = theorem_demo_to_json(demo);
    return {rep, theorem_demo_to_csv(demo)};
}

std::pair<json, std::string> run_counterexample(const std::string& t_arg, unsigned M,
                                                unsigned stages, unsigned order,
                                                unsigned search_cap) {
    auto t = load_rule(t_arg);
    auto res = build_counterexample(*t, M, stages, order, search_cap);
    json rep;
    rep["config"] = base_config("counterexample", order);
    rep["config"]["t"] = t->to_json();
    rep["config"]["M"] = M;
    rep["config"]["stages"] = stages;
    rep["config"]["search_cap"] = search_cap;
    rep["counterexample"] = counterexample_to_json(res);
    return {rep, counterexample_ratio_csv(res)};
}

std::pair<json, std::string> run_class(const std::string& name, unsigned order,
                                       const std::string& check, unsigned colors) {
    ClassSpec spec = builtin_class(name);
    if (colors > 1) spec = color_wrapper(spec, colors);
    json rep;
    rep["config"] = base_config("class", order);
    rep["config"]["name"] = name;
    rep["config"]["check"] = check;
    rep["config"]["colors"] = colors;
    json verdicts = json::array();
    std::ostringstream csv;
    csv << "side,criterion,verdict\n";
    std::istringstream ss(check);
    std::string side;
    while (std::getline(ss, side, ',')) {
        LawConfig cfg;
        LawVerdict v;
        if (side == "labelled") v = labelled_01_verdict(spec, order, cfg);
        else if (side == "unlabelled") v = unlabelled_01_verdict(spec, order, cfg);
        else throw usage_error("class: --check entries must be labelled|unlabelled");
        verdicts.push_back(verdict_to_json(v));
        csv << v.side << ',' << v.criterion << ',' << verdict_name(v.verdict) << '\n';
    }
    rep["verdicts"] = verdicts;
    return {rep, csv.str()};
}

std::pair<json, std::string> run_oracle(const std::string& cls, unsigned n,
                                        const std::string& side) {
    auto c = oracle_count(cls, n, side);
    json rep;
    rep["config"] = base_config("oracle", n);
    rep["config"]["class"] = cls;
    rep["config"]["side"] = side;
    rep["count"] = {{"class", c.class_name},
                    {"n", c.n},
                    {"side", c.side},
                    {"count", c.count.str()},
                    {"method", c.method}};
    std::ostringstream csv;
    csv << "class,n,side,count\n"
        << c.class_name << ',' << c.n << ',' << c.side << ',' << c.count.str() << '\n';
    return {rep, csv.str()};
}

std::pair<json, std::string> run_radius(const std::string& rule_arg, unsigned window) {
    auto rule = load_rule(rule_arg);
    auto est = radius_estimate(*rule, window);
    json rep;
    rep["config"] = base_config("radius", window);
    rep["config"]["rule"] = rule->to_json();
    rep["radius"] = {{"estimate", bigfloat_to_string(est.estimate)},
                     {"band", bigfloat_to_string(est.band)},
                     {"window_lo", est.window_lo},
                     {"window_hi", est.window_hi}};
    std::ostringstream csv;
    csv << "estimate,band,window_lo,window_hi\n"
        << bigfloat_to_string(est.estimate) << ',' << bigfloat_to_string(est.band)
        << ',' << est.window_lo << ',' << est.window_hi << '\n';
    return {rep, csv.str()};
}

// --- selftests: canned runs diffed against golden files ------------------

std::string selftest_series_file(const std::string& dir) {
    // small fixed polynomial x + x^2 at order 12, written once per run
    std::vector<Rational> c(13, Rational(0));
    c[1] = 1;
    c[2] = 1;
    RationalSeries g(12, std::move(c));
    std::string path = dir + "/selftest_poly.json";
    std::ofstream f(path, std::ios::binary);
    f << series_to_json(g).dump(2) << '\n';
    return path;
}

std::pair<json, std::string> selftest_run(const std::string& cmd,
                                          const std::string& tmpdir) {
    if (cmd == "exp") return run_exp("constant-one", 12, true);
    if (cmd == "log") {
        auto f = series_exp(RationalSeries::from_rule(*SequenceRule::constant_one(),
                                                      12, true));
        std::string path = tmpdir + "/selftest_exp.json";
        std::ofstream out(path, std::ios::binary);
        out << series_to_json(f).dump(2) << '\n';
        out.close();
        return run_log(path);
    }
    if (cmd == "euler") return run_euler("constant-one", 20);
    if (cmd == "ratios") {
        auto a = euler_product(*SequenceRule::constant_one(), 40);
        std::string path = tmpdir + "/selftest_partitions.json";
        std::ofstream out(path, std::ios::binary);
        out << series_to_json(a).dump(2) << '\n';
        out.close();
        return run_ratios(path, 2, 5.0, 0.05);
    }
    if (cmd == "saddle") return run_saddle(selftest_series_file(tmpdir), {5, 10});
    if (cmd == "exponent-fit")
        return run_exponent_fit(selftest_series_file(tmpdir), {20, 40});
    if (cmd == "split") return run_split(selftest_series_file(tmpdir), 1);
    if (cmd == "cr-bound") return run_cr_bound("1/n!", 40, 3, -1, {-1, 0, 1, 2});
    if (cmd == "theorem-demo")
        return run_theorem_demo("floor-power:1/2", "1/2", 60, 5.0, 0.05);
    if (cmd == "counterexample") return run_counterexample("n^n/n!", 1, 3, 60, 500);
    if (cmd == "class")
        return run_class("equivalence-relations", 60, "labelled,unlabelled", 1);
    if (cmd == "oracle") return run_oracle("equivalence-relations", 4, "labelled");
    if (cmd == "radius") return run_radius("broom-unlabelled", 120);
    throw usage_error("no selftest for command: " + cmd);
}

int do_selftest(const std::string& cmd, const std::string& golden_dir, bool update) {
    // selftest fixes its own precision so golden bytes are reproducible
    PrecisionGuard guard(kDefaultPrecisionBits);
    std::string tmpdir = golden_dir;
    auto [rep, csv] = selftest_run(cmd, tmpdir);
    (void)csv;
    std::string got = rep.dump(2) + "\n";
    std::string path = golden_dir + "/" + cmd + ".golden.json";
    if (update) {
        std::ofstream f(path, std::ios::binary);
        if (!f) throw usage_error("cannot write golden file: " + path);
        f << got;
        std::cout << "updated " << path << '\n';
        return 0;
    }
    std::string want = read_file(path);
    if (got != want) {
        std::cerr << "selftest mismatch against " << path << "\n--- got ---\n"
                  << got << "--- want ---\n"
                  << want;
        return 1;
    }
    std::cout << cmd << " selftest: ok\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exercises exp/log series engines, saddle estimates, smoothing "
                 "bounds, and 0-1 law criteria for component-count sequences"};
    app.require_subcommand(1);

    unsigned precision = kDefaultPrecisionBits;
    app.add_option("--precision", precision, "working precision in bits")
        ->envname("EGFLAB_PRECISION");

    Output out;
    std::string golden_dir = "golden";
    bool selftest = false, update_golden = false;

    // shared per-subcommand state
    std::string rule_arg, series_path, theta_arg = "1/2", check = "labelled,unlabelled";
    std::string cls_name, side = "labelled", n_list = "10", sample_list = "50,100";
    unsigned order = 40, start = 1, ell = 2, M = 1, stages = 3, search_cap = 500;
    unsigned window = 200, colors = 1, oracle_n = 4;
    long L = -1;
    double kappa = 5.0, delta = 0.05;
    std::vector<int> rs = {-1, 0, 1, 2};
    bool egf_weight = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", out.path, "output path, - for stdout");
        sub->add_option("--format", out.format, "json or csv");
        sub->add_flag("--selftest", selftest, "run the canned example and diff goldens");
        sub->add_flag("--update-golden", update_golden, "rewrite the golden file");
        sub->add_option("--golden-dir", golden_dir, "directory of golden files");
    };

    auto* c_exp = app.add_subcommand("exp", "f = exp(g) from a component rule");
    c_exp->add_option("--rule", rule_arg, "rule file or shorthand");
    c_exp->add_option("--order", order, "truncation order N");
    c_exp->add_flag("--egf", egf_weight, "weight the rule by 1/n!");
    add_common(c_exp);

    auto* c_log = app.add_subcommand("log", "g = log(f) from a series file");
    c_log->add_option("--series", series_path, "series JSON file");
    add_common(c_log);

    auto* c_euler = app.add_subcommand("euler", "Euler product over a type-count rule");
    c_euler->add_option("--rule", rule_arg, "rule file or shorthand");
    c_euler->add_option("--order", order, "truncation order N");
    add_common(c_euler);

    auto* c_ratios = app.add_subcommand("ratios", "ratio sequence and trend label");
    c_ratios->add_option("--series", series_path, "series JSON file");
    c_ratios->add_option("--start", start, "first index n0");
    c_ratios->add_option("--kappa", kappa, "diverging threshold");
    c_ratios->add_option("--delta", delta, "tending-to-one threshold");
    add_common(c_ratios);

    auto* c_saddle = app.add_subcommand("saddle", "saddle-point coefficient estimates");
    c_saddle->add_option("--poly", series_path, "polynomial series JSON file");
    c_saddle->add_option("--n", n_list, "comma-separated target indices");
    add_common(c_saddle);

    auto* c_fit = app.add_subcommand("exponent-fit", "growth exponent table");
    c_fit->add_option("--poly", series_path, "polynomial series JSON file");
    c_fit->add_option("--sample", sample_list, "comma-separated sample indices");
    add_common(c_fit);

    auto* c_split = app.add_subcommand("split", "split a series at degree ell");
    c_split->add_option("--series", series_path, "series JSON file");
    c_split->add_option("--ell", ell, "split degree");
    add_common(c_split);

    auto* c_cr = app.add_subcommand("cr-bound", "C_r bounds and the convolution check");
    c_cr->add_option("--rule", rule_arg, "rule file or shorthand");
    c_cr->add_option("--order", order, "truncation order N");
    c_cr->add_option("--ell", ell, "split degree");
    c_cr->add_option("--L", L, "positivity onset; -1 = certify automatically");
    c_cr->add_option("--r", rs, "shifts");
    add_common(c_cr);

    auto* c_demo = app.add_subcommand("theorem-demo", "end-to-end smoothing demo");
    c_demo->add_option("--rule", rule_arg, "rule file or shorthand");
    c_demo->add_option("--theta", theta_arg, "exponent theta as p/q");
    c_demo->add_option("--order", order, "truncation order N");
    c_demo->add_option("--kappa", kappa, "diverging threshold");
    c_demo->add_option("--delta", delta, "tending-to-one threshold");
    add_common(c_demo);

    auto* c_cx = app.add_subcommand("counterexample", "staged ratio-violation build");
    c_cx->add_option("--t", rule_arg, "target rule file or shorthand");
    c_cx->add_option("--M", M, "prefix length");
    c_cx->add_option("--stages", stages, "number of stages");
    c_cx->add_option("--order", order, "series order");
    c_cx->add_option("--search-cap", search_cap, "degree search cap");
    add_common(c_cx);

    auto* c_class = app.add_subcommand("class", "0-1 law verdicts for a builtin class");
    c_class->add_option("--name", cls_name, "class name");
    c_class->add_option("--order", order, "window size N");
    c_class->add_option("--check", check, "labelled,unlabelled");
    c_class->add_option("--colors", colors, "labelled color wrapper");
    add_common(c_class);

    auto* c_oracle = app.add_subcommand("oracle", "exhaustive enumeration count");
    c_oracle->add_option("--class", cls_name, "class name");
    c_oracle->add_option("--n", oracle_n, "structure size");
    c_oracle->add_option("--side", side, "labelled or unlabelled");
    add_common(c_oracle);

    auto* c_radius = app.add_subcommand("radius", "root-test radius of a rule");
    c_radius->add_option("--rule", rule_arg, "rule file or shorthand");
    c_radius->add_option("--window", window, "tail window size");
    add_common(c_radius);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        set_precision_bits(precision);
        CLI::App* sub = app.get_subcommands().front();
        const std::string cmd = sub->get_name();

        if (selftest || update_golden) return do_selftest(cmd, golden_dir, update_golden);

        std::pair<json, std::string> result;
        if (cmd == "exp") result = run_exp(rule_arg, order, egf_weight);
        else if (cmd == "log") result = run_log(series_path);
        else if (cmd == "euler") result = run_euler(rule_arg, order);
        else if (cmd == "ratios") result = run_ratios(series_path, start, kappa, delta);
        else if (cmd == "saddle") result = run_saddle(series_path, parse_unsigned_list(n_list));
        else if (cmd == "exponent-fit")
            result = run_exponent_fit(series_path, parse_unsigned_list(sample_list));
        else if (cmd == "split") result = run_split(series_path, ell);
        else if (cmd == "cr-bound") result = run_cr_bound(rule_arg, order, ell, L, rs);
        else if (cmd == "theorem-demo")
            result = run_theorem_demo(rule_arg, theta_arg, order, kappa, delta);
        else if (cmd == "counterexample")
            result = run_counterexample(rule_arg, M, stages, order, search_cap);
        else if (cmd == "class") result = run_class(cls_name, order, check, colors);
        else if (cmd == "oracle") result = run_oracle(cls_name, oracle_n, side);
        else if (cmd == "radius") result = run_radius(rule_arg, window);
        else throw usage_error("unknown command: " + cmd);

        result.first["config"]["format"] = out.format;
        result.first["config"]["kappa"] = kappa;
        result.first["config"]["delta"] = delta;
        emit(out, result.first, result.second);
        return 0;
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
