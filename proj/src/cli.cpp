#include "planar/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <optional>
#include <sstream>
#include <stdexcept>

#include "planar/binomial.hpp"
#include "planar/errors.hpp"
#include "planar/roots.hpp"
#include "planar/series.hpp"
#include "planar/tree.hpp"
#include "planar/verify.hpp"

namespace planar::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Format { text, json, csv };

class VerificationFailed : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// --- input -------------------------------------------------------------------

// "TREE=COEFF", e.g. "(x x)=-1/8". The split is at the last '='.
PlanarSeries parse_terms(const std::vector<std::string>& terms) {
    PlanarSeries f;
    for (const auto& item : terms) {
        const auto eq = item.rfind('=');
        if (eq == std::string::npos) throw ParseError("term must look like TREE=COEFF", 0);
        f.add_term(parse_tree(item.substr(0, eq)), parse_rational(item.substr(eq + 1)));
    }
    return f;
}

// "2:2,3:1" -> arity 2 twice, arity 3 once. The empty string is the profile of x.
ArityProfile parse_profile(const std::string& text) {
    std::map<std::size_t, std::size_t> counts;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        const auto colon = item.find(':');
        if (colon == std::string::npos) throw ParseError("profile entries look like ARITY:COUNT", 0);
        std::size_t arity = 0;
        std::size_t count = 0;
        try {
            arity = std::stoul(item.substr(0, colon));
            count = std::stoul(item.substr(colon + 1));
        } catch (const std::logic_error&) {
            throw ParseError("profile entries look like ARITY:COUNT", 0);
        }
        if (arity < 2) throw ParseError("profile arities must be >= 2", 0);
        counts[arity] += count;
    }
    return ArityProfile::from_counts(counts);
}

// --- output ------------------------------------------------------------------

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void write_trees(std::ostream& out, const std::vector<PlanarTree>& trees, Format format) {
    switch (format) {
    case Format::text:
        for (const auto& t : trees) out << render_tree(t) << '\n';
        out << "count: " << trees.size() << '\n';
        break;
    case Format::csv:
        out << "tree\n";
        for (const auto& t : trees) out << render_tree(t) << '\n';
        break;
    case Format::json: {
        json doc;
        doc["trees"] = json::array();
        for (const auto& t : trees) doc["trees"].push_back(render_tree(t));
        doc["count"] = trees.size();
        out << doc.dump(2) << '\n';
        break;
    }
    }
}

void write_verdict_line(std::ostream& out, Format format, bool passed) {
    const char* verdict = passed ? "pass" : "fail";
    if (format == Format::csv)
        out << "#check," << verdict << '\n';
    else
        out << "check: " << verdict << '\n';
}

void write_series(std::ostream& out, const PlanarSeries& f, Format format,
                  std::optional<bool> check = std::nullopt) {
    switch (format) {
    case Format::text:
        for (const auto& [t, c] : f.terms()) out << to_string(c) << '\t' << render_tree(t) << '\n';
        break;
    case Format::csv:
        out << "tree,coeff\n";
        for (const auto& [t, c] : f.terms()) out << render_tree(t) << ',' << to_string(c) << '\n';
        break;
    case Format::json: {
        json doc;
        doc["terms"] = json::array();
        for (const auto& [t, c] : f.terms())
            doc["terms"].push_back({{"tree", render_tree(t)}, {"coeff", to_string(c)}});
        if (f.truncation()) doc["max_degree"] = *f.truncation();
        if (check) doc["check"] = *check ? "pass" : "fail";
        out << doc.dump(2) << '\n';
        return;
    }
    }
    if (check) write_verdict_line(out, format, *check);
}

void write_tensor(std::ostream& out, const TensorSeries& f, Format format) {
    switch (format) {
    case Format::text:
        for (const auto& [k, c] : f.terms())
            out << to_string(c) << '\t' << render_tree(k.first) << '\t' << render_tree(k.second) << '\n';
        break;
    case Format::csv:
        out << "left,right,coeff\n";
        for (const auto& [k, c] : f.terms())
            out << render_tree(k.first) << ',' << render_tree(k.second) << ',' << to_string(c) << '\n';
        break;
    case Format::json: {
        json doc;
        doc["terms"] = json::array();
        for (const auto& [k, c] : f.terms())
            doc["terms"].push_back(
                {{"left", render_tree(k.first)}, {"right", render_tree(k.second)}, {"coeff", to_string(c)}});
        out << doc.dump(2) << '\n';
        break;
    }
    }
}

void write_verify(std::ostream& out, const std::string& suite, std::size_t max_degree,
                  const std::vector<verify::CheckResult>& results, Format format) {
    std::size_t passed = 0;
    for (const auto& r : results) passed += r.passed() ? 1 : 0;
    switch (format) {
    case Format::text:
        for (const auto& r : results) {
            out << (r.passed() ? "PASS " : "FAIL ") << r.suite << '/' << r.name << " cases=" << r.cases;
            if (!r.passed()) out << " counterexample: " << *r.counterexample;
            out << '\n';
        }
        out << "passed " << passed << '/' << results.size() << '\n';
        break;
    case Format::csv:
        out << "suite,check,cases,status,counterexample\n";
        for (const auto& r : results)
            out << r.suite << ',' << r.name << ',' << r.cases << ',' << (r.passed() ? "pass" : "fail") << ','
                << csv_field(r.counterexample.value_or("")) << '\n';
        break;
    case Format::json: {
        json doc;
        doc["suite"] = suite;
        doc["max_degree"] = max_degree;
        doc["checks"] = json::array();
        for (const auto& r : results) {
            json item;
            item["suite"] = r.suite;
            item["check"] = r.name;
            item["cases"] = r.cases;
            item["status"] = r.passed() ? "pass" : "fail";
            item["counterexample"] = r.counterexample ? json(*r.counterexample) : json(nullptr);
            doc["checks"].push_back(std::move(item));
        }
        doc["passed"] = passed == results.size();
        out << doc.dump(2) << '\n';
        break;
    }
    }
}

void require_cap(std::size_t degree, std::size_t cap, const char* what) {
    if (degree > cap)
        throw ResourceError(std::string(what) + " " + std::to_string(degree) + " exceeds cap " +
                            std::to_string(cap) + " (raise it with --cap)");
}

// --- subcommands -------------------------------------------------------------

struct Options {
    std::string format = "text";

    std::optional<std::size_t> degree;
    std::optional<std::string> profile;
    std::size_t enumeration_cap = default_enumeration_cap;

    std::string t, s, v;
    bool oracle = false;
    std::size_t oracle_cap = default_oracle_cap;

    std::vector<std::string> terms;
    std::optional<std::size_t> max_degree;
    std::size_t series_cap = default_enumeration_cap;
    bool check = false;
    std::string mode = "root";

    std::string suite = "all";
};

Format format_of(const Options& o) {
    if (o.format == "json") return Format::json;
    if (o.format == "csv") return Format::csv;
    return Format::text;
}

void cmd_trees(const Options& o, std::ostream& out) {
    std::vector<PlanarTree> trees;
    if (o.profile) {
        const auto nu = parse_profile(*o.profile);
        if (o.degree && *o.degree != nu.degree)
            throw CLI::ValidationError("trees", "--degree disagrees with the degree of --profile");
        require_cap(nu.degree, o.enumeration_cap, "degree");
        trees = enumerate_profile(nu, o.enumeration_cap);
    } else if (o.degree) {
        require_cap(*o.degree, o.enumeration_cap, "degree");
        trees = enumerate_trees(*o.degree, o.enumeration_cap);
    } else {
        throw CLI::ValidationError("trees", "give --degree or --profile");
    }
    write_trees(out, trees, format_of(o));
}

void cmd_binom(const Options& o, std::ostream& out) {
    const auto t = parse_tree(o.t);
    const auto s = parse_tree(o.s);
    Count value = 0;
    std::optional<PlanarTree> v;
    if (!o.v.empty()) v = parse_tree(o.v);
    if (o.oracle) {
        value = v ? binom2_oracle(t, s, *v, o.oracle_cap) : binom1_oracle(t, s, o.oracle_cap);
    } else {
        BinomialTable table;
        value = v ? table.second(t, s, *v) : table.first(t, s);
    }
    switch (format_of(o)) {
    case Format::text: out << value << '\n'; break;
    case Format::csv:
        out << "t,s,v,coefficient\n"
            << render_tree(t) << ',' << render_tree(s) << ',' << (v ? render_tree(*v) : "") << ',' << value
            << '\n';
        break;
    case Format::json: {
        json doc;
        doc["t"] = render_tree(t);
        doc["s"] = render_tree(s);
        if (v) doc["v"] = render_tree(*v);
        doc["coefficient"] = std::to_string(value);
        out << doc.dump(2) << '\n';
        break;
    }
    }
}

void cmd_expand(const Options& o, std::ostream& out) {
    const auto t = parse_tree(o.t);
    if (t.is_empty()) throw CLI::ValidationError("expand", "--t must not be the unit tree");
    const auto base = o.terms.empty() ? PlanarSeries::one_plus_x() : parse_terms(o.terms);
    write_series(out, power(base, t, o.max_degree), format_of(o));
}

void cmd_delta(const Options& o, std::ostream& out) {
    write_tensor(out, coaddition(parse_tree(o.t)), format_of(o));
}

void cmd_derive(const Options& o, std::ostream& out) {
    if (o.t.empty() == o.terms.empty()) throw CLI::ValidationError("derive", "give exactly one of --t or --term");
    const auto f = o.terms.empty() ? PlanarSeries::monomial(parse_tree(o.t)) : parse_terms(o.terms);
    write_series(out, derive(f), format_of(o));
}

void cmd_power(const Options& o, std::ostream& out) {
    const auto t = parse_tree(o.t);
    const auto s = parse_tree(o.s);
    if (t.is_empty() || s.is_empty()) throw CLI::ValidationError("power", "trees must not be the unit");
    const auto ts = tree_power(t, s);
    std::optional<bool> verdict;
    if (o.check) {
        const auto base = o.terms.empty() ? PlanarSeries::one_plus_x() : parse_terms(o.terms);
        verdict = power(power(base, t), s) == power(base, ts);
    }
    const auto format = format_of(o);
    switch (format) {
    case Format::text: out << render_tree(ts) << '\n'; break;
    case Format::csv: out << "tree\n" << render_tree(ts) << '\n'; break;
    case Format::json: {
        json doc;
        doc["tree"] = render_tree(ts);
        if (verdict) doc["check"] = *verdict ? "pass" : "fail";
        out << doc.dump(2) << '\n';
        break;
    }
    }
    if (verdict && format != Format::json) write_verdict_line(out, format, *verdict);
    if (verdict && !*verdict) throw VerificationFailed("power check failed");
}

void cmd_root(const Options& o, std::ostream& out) {
    const auto t = parse_tree(o.t);
    if (t.degree() < 2) throw CLI::ValidationError("root", "--t must have degree >= 2");
    const auto n = o.max_degree.value_or(4);
    require_cap(n, o.series_cap, "max degree");
    PlanarSeries result;
    std::optional<bool> verdict;
    if (o.mode == "root") {
        const auto target =
            o.s.empty() ? PlanarSeries::one_plus_x() : power(PlanarSeries::one_plus_x(), parse_tree(o.s), n);
        if (o.s.empty())
            result = root(t, n);
        else
            result = generalized_root(t, parse_tree(o.s), n);
        if (o.check) verdict = agree_through(power(result, t, n), target, n);
    } else if (o.mode == "exp") {
        result = exp_t(t, n);
        if (o.check)
            verdict = agree_through(power(result, t, n),
                                    dilate(result, Rational(static_cast<long>(t.degree()))), n);
    } else {
        result = log_t(t, n);
        if (o.check) verdict = agree_through(compose(exp_t(t, n), result), PlanarSeries::one_plus_x(), n);
    }
    write_series(out, result, format_of(o), verdict);
    if (verdict && !*verdict) throw VerificationFailed("root check failed");
}

void cmd_verify(const Options& o, std::ostream& out) {
    const auto n = o.max_degree.value_or(4);
    require_cap(n, o.series_cap, "max degree");
    const auto results = verify::run_suite(o.suite, n);
    write_verify(out, o.suite, n, results, format_of(o));
    for (const auto& r : results)
        if (!r.passed()) throw VerificationFailed("verification failed");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Planar rooted tree calculus: binomial coefficients, powers, co-addition and roots"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();

    auto* trees = app.add_subcommand("trees", "List all trees of a degree or arity profile");
    trees->add_option("--degree", o.degree, "Number of leaves");
    trees->add_option("--profile", o.profile, "Arity counts, e.g. 2:2,3:1");
    trees->add_option("--cap", o.enumeration_cap, "Largest degree allowed")->capture_default_str();

    auto* binom = app.add_subcommand("binom", "Binomial coefficient (T over S) or (T over S, V)");
    binom->add_option("--t", o.t, "Tree T")->required();
    binom->add_option("--s", o.s, "Tree S")->required();
    binom->add_option("--v", o.v, "Tree V (second kind)");
    binom->add_flag("--oracle", o.oracle, "Count leaf subsets by brute force");
    binom->add_option("--cap", o.oracle_cap, "Largest degree of T for --oracle")->capture_default_str();

    auto* expand = app.add_subcommand("expand", "Expand the T-th power of 1 + x (or of --term series)");
    expand->add_option("--t", o.t, "Tree T")->required();
    expand->add_option("--term", o.terms, "Base series term TREE=COEFF, repeatable");
    expand->add_option("--max-degree", o.max_degree, "Truncation degree");

    auto* delta_cmd = app.add_subcommand("delta", "Co-addition of x^T");
    delta_cmd->add_option("--t", o.t, "Tree T")->required();

    auto* derive_cmd = app.add_subcommand("derive", "Derivative of x^T or of a --term series");
    derive_cmd->add_option("--t", o.t, "Tree T");
    derive_cmd->add_option("--term", o.terms, "Series term TREE=COEFF, repeatable");

    auto* power_cmd = app.add_subcommand("power", "The tree power T^S");
    power_cmd->add_option("--t", o.t, "Tree T")->required();
    power_cmd->add_option("--s", o.s, "Tree S")->required();
    power_cmd->add_option("--term", o.terms, "Series f for --check (default 1 + x)");
    power_cmd->add_flag("--check", o.check, "Verify (f^T)^S = f^(T^S)");

    auto* root_cmd = app.add_subcommand("root", "T-th root of 1 + x, or exp_T / log_T");
    root_cmd->add_option("--t", o.t, "Tree T, degree >= 2")->required();
    root_cmd->add_option("--s", o.s, "Solve f^T = (1 + x)^S instead");
    root_cmd->add_option("--max-degree", o.max_degree, "Solve through this degree (default 4)");
    root_cmd->add_option("--mode", o.mode, "root, exp or log")
        ->check(CLI::IsMember({"root", "exp", "log"}))
        ->capture_default_str();
    root_cmd->add_flag("--check", o.check, "Re-verify the defining equation");
    root_cmd->add_option("--cap", o.series_cap, "Largest --max-degree allowed")->capture_default_str();

    auto* verify_cmd = app.add_subcommand("verify", "Run identity suites exhaustively");
    verify_cmd->add_option("--suite", o.suite, "binom1, binom2, powers, delta, derive, roots, catalan or all")
        ->check([](const std::string& s) { return verify::is_suite(s) ? std::string() : "unknown suite " + s; })
        ->capture_default_str();
    verify_cmd->add_option("--max-degree", o.max_degree, "Degree bound (default 4)");
    verify_cmd->add_option("--cap", o.series_cap, "Largest --max-degree allowed")->capture_default_str();

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        if (trees->parsed()) cmd_trees(o, out);
        else if (binom->parsed()) cmd_binom(o, out);
        else if (expand->parsed()) cmd_expand(o, out);
        else if (delta_cmd->parsed()) cmd_delta(o, out);
        else if (derive_cmd->parsed()) cmd_derive(o, out);
        else if (power_cmd->parsed()) cmd_power(o, out);
        else if (root_cmd->parsed()) cmd_root(o, out);
        else if (verify_cmd->parsed()) cmd_verify(o, out);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    } catch (const VerificationFailed& e) {
        err << "error: " << e.what() << '\n';
        return exit_verification_failed;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << '\n';
        return exit_resource;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_ok;
}

} // namespace planar::cli
