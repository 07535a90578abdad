#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "csv.hpp"
#include "ginicor/dist_cor.hpp"
#include "ginicor/error.hpp"
#include "ginicor/gini_cor.hpp"
#include "ginicor/inference.hpp"
#include "ginicor/parallel.hpp"
#include "ginicor/simulate.hpp"

#ifndef GINICOR_VERSION
#define GINICOR_VERSION "dev"
#endif

namespace ginicor::cli {

using json = nlohmann::ordered_json;

double round12(double value) {
    if (!std::isfinite(value)) return value;
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.12g", value);
    return std::strtod(buffer, nullptr);
}

namespace {

std::string format12(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.12g", value);
    return buffer;
}

std::string trim(const std::string& text) {
    const auto first = text.find_first_not_of(" \t");
    if (first == std::string::npos) return {};
    const auto last = text.find_last_not_of(" \t");
    return text.substr(first, last - first + 1);
}

double parse_double(const std::string& text, const std::string& what) {
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(trim(text), &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != trim(text).size()) {
        throw_usage("cannot parse " + what + " '" + text + "'");
    }
    return value;
}

// ---------------------------------------------------------------------------
// Options

struct Options {
    std::string data;
    std::string label;
    std::vector<std::string> features;
    double alpha = 1.0;
    std::string kind = "V";
    std::string format = "json";
    std::string output;
    unsigned threads = 0;
    std::string config;

    std::string flavor = "unbiased";
    double level = 0.95;
    std::string statistic = "gcor";
    std::size_t permutations = 200;
    double gamma = 0.05;
    std::uint64_t seed = 0;
    double rho0 = 0.0;
    std::size_t top = 0;

    double p = 0.5;
    double theta = 1.0;
    double beta = 4.0;
    double a = 3.0;
    double r = 3.0;

    std::vector<std::string> mixtures;
    std::vector<std::size_t> n_values;
    std::vector<std::size_t> d_values;
    std::size_t reps = 0;
    std::vector<std::string> statistics;
};

/// key = value lines; '#' and ';' start comments, [section] lines are ignored.
std::vector<std::pair<std::string, std::string>> read_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw_data("cannot read config file '" + path + "'");
    std::vector<std::pair<std::string, std::string>> entries;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        const std::string body = trim(line.substr(0, line.find_first_of("#;")));
        if (body.empty() || body.front() == '[') continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos) {
            throw_usage("config line " + std::to_string(number) + " is not key = value");
        }
        std::string key = trim(body.substr(0, eq));
        std::string value = trim(body.substr(eq + 1));
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
            value = value.substr(1, value.size() - 2);
        }
        entries.emplace_back(std::move(key), std::move(value));
    }
    return entries;
}

bool has_flag(const std::vector<std::string>& args, const std::string& flag) {
    return std::any_of(args.begin(), args.end(), [&](const std::string& a) {
        return a == flag || a.rfind(flag + "=", 0) == 0;
    });
}

/// Appends config entries that the command line does not already set.
std::vector<std::string> merge_config(std::vector<std::string> args) {
    std::string path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
        if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
    }
    if (path.empty()) return args;
    const auto original = args;
    for (const auto& [key, value] : read_config(path)) {
        const std::string flag = "--" + key;
        if (key == "config" || has_flag(original, flag)) continue;
        args.push_back(flag);
        args.push_back(value);
    }
    return args;
}

// ---------------------------------------------------------------------------
// Output

struct Report {
    explicit Report(std::string name = {}) : command(std::move(name)) {}

    std::string command;
    json inputs = json::object();
    json result = json::object();
    json table;  // experiment cells, when present
};

void write_csv_value(std::ostream& out, const json& value) {
    if (value.is_number_float()) {
        out << format12(value.get<double>());
    } else if (value.is_string()) {
        const auto text = value.get<std::string>();
        if (text.find_first_of(",\"\n") == std::string::npos) {
            out << text;
        } else {
            std::string quoted = "\"";
            for (char c : text) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
            out << quoted << '"';
        }
    } else {
        out << value.dump();
    }
}

void flatten(std::ostream& out, const std::string& prefix, const json& value) {
    if (value.is_object()) {
        for (const auto& [key, child] : value.items()) {
            flatten(out, prefix.empty() ? key : prefix + "." + key, child);
        }
    } else if (value.is_array()) {
        for (std::size_t i = 0; i < value.size(); ++i) {
            flatten(out, prefix + "." + std::to_string(i), value[i]);
        }
    } else {
        out << prefix << ',';
        write_csv_value(out, value);
        out << '\n';
    }
}

json meta() { return json{{"version", GINICOR_VERSION}, {"library", "ginicor"}}; }

void render(const Report& report, const std::string& format, std::ostream& out) {
    if (format == "json") {
        json doc{{"command", report.command},
                 {"inputs", report.inputs},
                 {"result", report.result},
                 {"meta", meta()}};
        out << doc.dump(2) << '\n';
        return;
    }
    if (!report.table.is_null()) {
        // One JSON metadata line, then one row per cell.
        json header{{"command", report.command}, {"inputs", report.inputs}, {"meta", meta()}};
        out << "# " << header.dump() << '\n';
        out << "design,method,n,d,value,spread,reps\n";
        for (const auto& cell : report.table) {
            write_csv_value(out, cell["design"]);
            for (const char* key : {"method", "n", "d", "value", "spread", "reps"}) {
                out << ',';
                write_csv_value(out, cell[key]);
            }
            out << '\n';
        }
        return;
    }
    out << "field,value\n";
    flatten(out, "inputs", report.inputs);
    flatten(out, "result", report.result);
    flatten(out, "meta", meta());
}

// ---------------------------------------------------------------------------
// Commands

struct Context {
    Options& options;
    std::ostream& err;
    bool seed_given = false;
};

Alpha alpha_of(const Options& o) { return Alpha(o.alpha); }

cli::LoadedData load(const Options& o) {
    if (o.data.empty()) throw_usage("--data is required");
    if (o.label.empty()) throw_usage("--label is required");
    return load_dataset(read_csv_file(o.data), o.label, o.features);
}

json data_inputs(const Options& o, const LoadedData& loaded) {
    return json{{"data", o.data},
                {"label", loaded.label_name},
                {"features", loaded.feature_names},
                {"n", loaded.dataset.size()},
                {"alpha", round12(o.alpha)}};
}

std::uint64_t resolve_seed(Context& ctx) {
    if (!ctx.seed_given) {
        std::random_device device;
        ctx.options.seed = (static_cast<std::uint64_t>(device()) << 32) ^ device();
        ctx.err << "seed: " << ctx.options.seed << " (generated)\n";
    }
    return ctx.options.seed;
}

Report command_gcor(Context& ctx) {
    const Options& o = ctx.options;
    const auto loaded = load(o);
    const auto kind = parse_estimator_kind(o.kind);
    const auto report = gcor(loaded.dataset, alpha_of(o), kind);

    Report out{"gcor"};
    out.inputs = data_inputs(o, loaded);
    out.inputs["kind"] = std::string(to_string(kind));
    json classes = json::array();
    const auto& groups = loaded.dataset.groups();
    for (std::size_t k = 0; k < groups.num_groups(); ++k) {
        classes.push_back({{"level", loaded.dataset.levels()[k]},
                           {"count", groups.counts[k]},
                           {"proportion", round12(report.proportions[k])},
                           {"gmd", round12(report.per_group_gmd[k])}});
    }
    out.result = {{"estimate", round12(report.estimate)},
                  {"covariance", round12(report.covariance)},
                  {"total_gmd", round12(report.total_gmd)},
                  {"fast_path", report.fast_path},
                  {"classes", classes}};
    return out;
}

Report command_dcor(Context& ctx) {
    const Options& o = ctx.options;
    const auto loaded = load(o);
    DistanceReport report;
    if (o.flavor == "unbiased") {
        report = dcov_unbiased(loaded.dataset, alpha_of(o));
    } else if (o.flavor == "plugin") {
        report = dcov_plugin(loaded.dataset, alpha_of(o));
    } else {
        throw_usage("--flavor must be unbiased or plugin");
    }
    Report out{"dcor"};
    out.inputs = data_inputs(o, loaded);
    out.inputs["flavor"] = std::string(to_string(report.flavor));
    out.result = {{"dcor", report.dcor_undefined ? json(nullptr) : json(round12(report.dcor))},
                  {"dcov_xy", round12(report.dcov_xy)},
                  {"dcov_xx", round12(report.dcov_xx)},
                  {"dcov_yy", round12(report.dcov_yy)},
                  {"defined", !report.dcor_undefined}};
    return out;
}

Report command_r2(Context& ctx) {
    const Options& o = ctx.options;
    const auto loaded = load(o);
    Report out{"r2"};
    out.inputs = data_inputs(o, loaded);
    out.inputs.erase("alpha");
    out.result = {{"r2", round12(pearson_r2(loaded.dataset))}};
    return out;
}

Report command_ci(Context& ctx) {
    const Options& o = ctx.options;
    const auto loaded = load(o);
    const auto kind = parse_estimator_kind(o.kind);
    const auto interval = jackknife_ci(loaded.dataset, alpha_of(o), kind, o.level);
    Report out{"ci"};
    out.inputs = data_inputs(o, loaded);
    out.inputs["kind"] = std::string(to_string(kind));
    out.inputs["level"] = round12(o.level);
    out.result = {{"estimate", round12(interval.estimate)},
                  {"se", round12(interval.se)},
                  {"lower", round12(interval.lower)},
                  {"upper", round12(interval.upper)},
                  {"raw_lower", round12(interval.raw_lower)},
                  {"raw_upper", round12(interval.raw_upper)}};
    return out;
}

Report command_test(Context& ctx) {
    Options& o = ctx.options;
    const auto loaded = load(o);
    const auto kind = parse_estimator_kind(o.kind);
    const auto statistic = parse_test_statistic(o.statistic);
    const std::uint64_t seed = resolve_seed(ctx);
    auto result =
        permutation_test(loaded.dataset, alpha_of(o), statistic, o.permutations, o.gamma, seed, kind);

    Report out{"test"};
    out.inputs = data_inputs(o, loaded);
    out.inputs["kind"] = std::string(to_string(kind));
    out.inputs["statistic"] = std::string(to_string(statistic));
    out.inputs["permutations"] = o.permutations;
    out.inputs["gamma"] = round12(o.gamma);
    out.inputs["seed"] = seed;
    out.result = {{"observed", round12(result.observed)},
                  {"p_value", round12(result.p_value)},
                  {"critical_value", round12(result.critical_value)},
                  {"rejects", result.rejects()}};
    if (o.rho0 != 0.0) {
        if (statistic != TestStatistic::gcor) {
            throw_usage("power at --rho0 is available for the gcor statistic");
        }
        const double se = jackknife_ci(loaded.dataset, alpha_of(o), kind, 0.95).se;
        out.inputs["rho0"] = round12(o.rho0);
        out.result["se"] = round12(se);
        out.result["power"] = round12(power_at(o.rho0, result.critical_value, se));
    }
    return out;
}

Report command_screen(Context& ctx) {
    const Options& o = ctx.options;
    const auto loaded = load(o);
    const std::size_t top = o.top == 0 ? loaded.dataset.dims() : o.top;
    const auto ranked = screen_features(loaded.dataset, top, alpha_of(o));
    Report out{"screen"};
    out.inputs = data_inputs(o, loaded);
    out.inputs["top"] = top;
    json rows = json::array();
    for (const auto& f : ranked) {
        json row{{"feature", loaded.feature_names[f.feature]},
                 {"index", f.feature},
                 {"estimate", f.degenerate ? json(nullptr) : json(round12(f.estimate))},
                 {"degenerate", f.degenerate}};
        if (alpha_of(o).is_one()) row["seconds"] = round12(f.seconds);
        rows.push_back(row);
    }
    out.result = {{"ranked", rows}};
    return out;
}

Report command_oracle(Context& ctx, const std::string& which) {
    const Options& o = ctx.options;
    Report out{"oracle " + which};
    if (which == "exp") {
        const auto c = exp_mixture_corrs(o.p, o.theta, o.beta);
        out.inputs = {{"p", round12(o.p)}, {"theta", round12(o.theta)}, {"beta", round12(o.beta)}};
        out.result = {{"rho_g", round12(c.rho_g)},
                      {"rho_d", round12(c.rho_d)},
                      {"rho_p2", round12(c.rho_p2)},
                      {"delta_12", round12(c.delta_12)},
                      {"dcov_xy", round12(c.dcov_xy)},
                      {"dcov_xx_printed", round12(c.dcov_xx_printed)},
                      {"dcov_xx_integral", round12(c.dcov_xx_integral)},
                      {"rho_d_integral", round12(c.rho_d_consistent)}};
    } else if (which == "normal-location") {
        const auto c = normal_location_corrs(o.p, o.a);
        out.inputs = {{"p", round12(o.p)}, {"a", round12(o.a)}};
        out.result = {{"rho_g", round12(c.rho_g)},
                      {"rho_p2", round12(c.rho_p2)},
                      {"delta_12_over_sigma", round12(normal_location_g(o.a))}};
    } else {
        out.inputs = {{"p", round12(o.p)}, {"r", round12(o.r)}};
        out.result = {{"rho_g", round12(normal_scale_gcor(o.p, o.r))}, {"rho_p2", 0.0}};
    }
    return out;
}

json cells_json(const ExperimentResult& result) {
    json cells = json::array();
    for (const auto& c : result.cells) {
        cells.push_back({{"design", c.design},
                         {"method", c.method},
                         {"n", c.n},
                         {"d", c.d},
                         {"value", round12(c.value)},
                         {"spread", round12(c.spread)},
                         {"reps", c.reps}});
    }
    return cells;
}

StatisticChoice parse_statistic_choice(const std::string& text) {
    const auto colon = text.find(':');
    StatisticChoice choice;
    choice.statistic = parse_test_statistic(trim(text.substr(0, colon)));
    if (colon != std::string::npos) {
        choice.alpha = Alpha(parse_double(text.substr(colon + 1), "alpha"));
    }
    return choice;
}

Report command_sim(Context& ctx, const std::string& which) {
    Options& o = ctx.options;
    Report out{"sim " + which};
    ExperimentResult result;
    if (which == "timing") {
        const std::vector<std::size_t> d_values = o.d_values.empty() ? std::vector<std::size_t>{1}
                                                                     : o.d_values;
        const std::vector<std::size_t> n_values =
            o.n_values.empty() ? std::vector<std::size_t>{2000, 4000, 8000, 16000} : o.n_values;
        const std::size_t reps = o.reps == 0 ? 5 : o.reps;
        const std::uint64_t seed = resolve_seed(ctx);
        result = timing_benchmark(d_values, n_values, reps, seed);
        out.inputs = {{"d", d_values}, {"n", n_values}, {"reps", reps}, {"seed", seed}};
    } else {
        if (o.mixtures.empty()) throw_usage("--mixture is required");
        std::vector<MixtureSpec> designs;
        json described = json::array();
        for (const auto& text : o.mixtures) {
            designs.push_back(parse_mixture(text));
            described.push_back(designs.back().describe());
        }
        if (o.n_values.size() > 1) throw_usage("--n takes one sample size here");
        const std::uint64_t seed = resolve_seed(ctx);
        if (which == "coverage") {
            if (designs.size() != 1) throw_usage("coverage takes exactly one --mixture");
            const std::size_t n = o.n_values.empty() ? 120 : o.n_values.front();
            const std::size_t reps = o.reps == 0 ? 1000 : o.reps;
            const auto kind = parse_estimator_kind(o.kind);
            result = coverage_experiment(designs.front(), n, o.level, reps, alpha_of(o), kind, seed);
            out.inputs = {{"mixture", described.front()},
                          {"n", n},
                          {"level", round12(o.level)},
                          {"alpha", round12(o.alpha)},
                          {"kind", std::string(to_string(kind))},
                          {"reps", reps},
                          {"seed", seed}};
        } else {
            const std::size_t n = o.n_values.empty() ? 60 : o.n_values.front();
            const std::size_t reps = o.reps == 0 ? 500 : o.reps;
            std::vector<StatisticChoice> statistics;
            json names = json::array();
            const std::vector<std::string> requested =
                o.statistics.empty() ? std::vector<std::string>{"gcor:1", "dcor:1"} : o.statistics;
            for (const auto& s : requested) {
                statistics.push_back(parse_statistic_choice(s));
                names.push_back(s);
            }
            result = power_experiment(designs, n, o.permutations, o.gamma, statistics, reps, seed);
            out.inputs = {{"mixtures", described},    {"n", n},
                          {"permutations", o.permutations}, {"gamma", round12(o.gamma)},
                          {"statistics", names},      {"reps", reps},
                          {"seed", seed}};
        }
    }
    out.table = cells_json(result);
    out.result = {{"experiment", result.experiment}, {"cells", out.table}};
    return out;
}

void emit(const Report& report, const Options& o, std::ostream& out) {
    if (o.output.empty()) {
        render(report, o.format, out);
        return;
    }
    std::ofstream file(o.output, std::ios::binary);
    if (!file) throw_data("cannot write output file '" + o.output + "'");
    render(report, o.format, file);
}

int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::usage:
            return 1;
        case ErrorKind::data:
            return 2;
        case ErrorKind::numeric:
            return 3;
    }
    return 3;
}

std::string_view kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::usage:
            return "usage";
        case ErrorKind::data:
            return "data";
        case ErrorKind::numeric:
            return "numeric";
    }
    return "numeric";
}

}  // namespace

MixtureSpec parse_mixture(const std::string& text) {
    std::vector<std::string> terms;
    std::string current;
    int depth = 0;
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == '+' && depth == 0) {
            terms.push_back(trim(current));
            current.clear();
        } else {
            current += c;
        }
    }
    terms.push_back(trim(current));

    MixtureSpec spec;
    std::size_t weighted = 0;
    for (const auto& term : terms) {
        const auto open = term.find('(');
        const auto close = term.rfind(')');
        if (open == std::string::npos || close == std::string::npos || close < open ||
            trim(term.substr(close + 1)).size() != 0) {
            throw_usage("cannot parse mixture term '" + term + "'");
        }
        std::string head = trim(term.substr(0, open));
        std::string family = head;
        double weight = 0.0;
        const auto split = head.find_last_of(" *");
        if (split != std::string::npos) {
            weight = parse_double(head.substr(0, split), "mixture weight");
            family = trim(head.substr(split + 1));
            ++weighted;
        }
        std::vector<double> args;
        std::stringstream inner(term.substr(open + 1, close - open - 1));
        std::string piece;
        while (std::getline(inner, piece, ',')) args.push_back(parse_double(piece, "parameter"));

        auto need = [&](std::size_t count) {
            if (args.size() != count) {
                throw_usage(family + " takes " + std::to_string(count) + " parameter(s)");
            }
        };
        if (family == "exp") {
            need(1);
            spec.components.push_back(Component::exponential(args[0]));
        } else if (family == "normal") {
            need(2);
            spec.components.push_back(Component::normal(args[0], args[1]));
        } else if (family == "cauchy") {
            need(2);
            spec.components.push_back(Component::cauchy(args[0], args[1]));
        } else if (family == "mvn") {
            need(1);
            if (!(args[0] >= 1.0) || args[0] != std::floor(args[0])) {
                throw_usage("mvn dimension must be a positive integer");
            }
            spec.components.push_back(Component::standard_mv_normal(static_cast<std::size_t>(args[0])));
        } else {
            throw_usage("unknown mixture family '" + family + "'");
        }
        spec.weights.push_back(weight);
    }
    if (weighted == 0) {
        std::fill(spec.weights.begin(), spec.weights.end(), 1.0 / static_cast<double>(terms.size()));
    } else if (weighted != terms.size()) {
        throw_usage("give a weight on every mixture term or on none");
    }
    spec.validate();
    return spec;
}

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Gini correlation between numerical features and a categorical label", "ginicor"};
    app.require_subcommand(1);
    app.set_version_flag("--version", GINICOR_VERSION);

    app.add_option("--data", o.data, "CSV file with a header row");
    app.add_option("--label", o.label, "label column (name or 1-based number)");
    app.add_option("--features", o.features, "feature columns, comma separated")->delimiter(',');
    app.add_option("--alpha", o.alpha, "distance exponent in (0, 2]");
    app.add_option("--kind", o.kind, "GMD estimator: U or V")->check(CLI::IsMember({"U", "V", "u", "v"}));
    app.add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--output", o.output, "write the report to this file");
    app.add_option("--threads", o.threads, "worker thread cap (0 = all cores)");
    app.add_option("--config", o.config, "key = value file of option defaults");
    app.add_option("--flavor", o.flavor, "dcor flavor: unbiased or plugin");
    app.add_option("--level", o.level, "confidence level");
    app.add_option("--statistic", o.statistic, "test statistic: gcor or dcor");
    app.add_option("--m", o.permutations, "number of permutations");
    app.add_option("--gamma", o.gamma, "significance level");
    auto* seed_option = app.add_option("--seed", o.seed, "master seed (generated when absent)");
    app.add_option("--rho0", o.rho0, "alternative for the power calculation");
    app.add_option("--top", o.top, "number of features to keep (default all)");
    app.add_option("--p", o.p, "mixing proportion of the first component");
    app.add_option("--theta", o.theta, "first exponential scale");
    app.add_option("--beta", o.beta, "second exponential scale");
    app.add_option("--a", o.a, "standardized mean gap |mu1 - mu2| / sigma");
    app.add_option("--r", o.r, "scale ratio sigma2 / sigma1");
    app.add_option("--mixture", o.mixtures, "mixture, e.g. '0.5 exp(1) + 0.5 exp(4)'");
    app.add_option("--n", o.n_values, "sample size(s), comma separated")->delimiter(',');
    app.add_option("--d", o.d_values, "dimension(s), comma separated")->delimiter(',');
    app.add_option("--reps", o.reps, "replicates");
    app.add_option("--statistics", o.statistics, "statistic:alpha pairs, comma separated")
        ->delimiter(',');

    std::string command;
    std::string variant;
    auto add = [&](CLI::App& parent, const std::string& name, const std::string& help,
                   std::string& target) {
        auto* sub = parent.add_subcommand(name, help);
        sub->fallthrough();
        sub->callback([&target, name] { target = name; });
        return sub;
    };
    add(app, "gcor", "Gini correlation", command);
    add(app, "dcor", "distance correlation baseline", command);
    add(app, "r2", "Pearson R^2 baseline", command);
    add(app, "ci", "jackknife confidence interval", command);
    add(app, "test", "permutation test of independence", command);
    add(app, "screen", "rank features by Gini correlation", command);
    auto* oracle = add(app, "oracle", "population values of two-component mixtures", command);
    oracle->require_subcommand(1);
    add(*oracle, "exp", "two-component exponential mixture", variant);
    add(*oracle, "normal-location", "normal mixture with a mean shift", variant);
    add(*oracle, "normal-scale", "normal mixture with a scale change", variant);
    auto* sim = add(app, "sim", "simulation experiments", command);
    sim->require_subcommand(1);
    add(*sim, "coverage", "jackknife interval coverage", variant);
    add(*sim, "power", "size and power of permutation tests", variant);
    add(*sim, "timing", "fast path versus distance correlation timing", variant);

    try {
        std::vector<std::string> args = merge_config(raw_args);
        std::reverse(args.begin(), args.end());
        try {
            app.parse(args);
        } catch (const CLI::ParseError& e) {
            const int code = app.exit(e, out, err);
            return code == 0 ? 0 : 1;
        }

        const ScopedThreadLimit threads(o.threads);
        Context ctx{o, err, seed_option->count() > 0};
        Report report;
        if (command == "gcor") report = command_gcor(ctx);
        else if (command == "dcor") report = command_dcor(ctx);
        else if (command == "r2") report = command_r2(ctx);
        else if (command == "ci") report = command_ci(ctx);
        else if (command == "test") report = command_test(ctx);
        else if (command == "screen") report = command_screen(ctx);
        else if (command == "oracle") report = command_oracle(ctx, variant);
        else report = command_sim(ctx, variant);
        emit(report, o, out);
        return 0;
    } catch (const Error& e) {
        err << "error (" << kind_name(e.kind()) << "): " << e.what() << '\n';
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        err << "error (numeric): " << e.what() << '\n';
        return 3;
    }
}

}  // namespace ginicor::cli
