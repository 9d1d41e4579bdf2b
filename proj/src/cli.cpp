#include "eprb/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "eprb/errors.hpp"

namespace eprb::cli {

namespace {

using json = nlohmann::ordered_json;
using models::ModelKind;

constexpr double kDegree = std::numbers::pi / 180.0;
constexpr double kCoverageSigmas = 3.0;
constexpr double kSlopeLow = -0.6;
constexpr double kSlopeHigh = -0.4;
constexpr std::size_t kConvergeDecades[] = {1000, 10000, 100000, 1000000};

std::string_view trim(std::string_view text) {
    const auto first = text.find_first_not_of(" \t");
    if (first == std::string_view::npos) return {};
    const auto last = text.find_last_not_of(" \t");
    return text.substr(first, last - first + 1);
}

double parse_real(std::string_view text, std::string_view what) {
    double value = 0.0;
    const char* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc{} || ptr != end || !std::isfinite(value)) {
        throw UsageError("cannot parse " + std::string(what) + " '" + std::string(text) + "'");
    }
    return value;
}

std::vector<std::string_view> split(std::string_view text, char separator) {
    std::vector<std::string_view> parts;
    std::size_t begin = 0;
    while (true) {
        const auto pos = text.find(separator, begin);
        parts.push_back(text.substr(begin, pos - begin));
        if (pos == std::string_view::npos) break;
        begin = pos + 1;
    }
    return parts;
}

json number(double value) { return std::isfinite(value) ? json(value) : json(nullptr); }

ModelKind parse_model(const std::string& name) {
    if (name == "furry") return ModelKind::FurryLinear;
    if (name == "hbt") return ModelKind::CircularHbt;
    return ModelKind::QmReference;
}

models::ContractionMode parse_contraction(const std::string& name) {
    if (name == "bilinear") return models::ContractionMode::BilinearMagnitude;
    if (name == "hermitian") return models::ContractionMode::HermitianMagnitude;
    return models::ContractionMode::Eq6Literal;
}

estimators::CoincidenceForm parse_form(const std::string& name) {
    if (name == "factorized") return estimators::CoincidenceForm::Factorized;
    if (name == "coherence") return estimators::CoincidenceForm::Coherence;
    return estimators::CoincidenceForm::Auto;
}

json grid_json(const GridSpec& grid) {
    return {{"start", grid.start}, {"stop", grid.stop}, {"count", grid.count}};
}

json config_json(const RunConfig& config) {
    json j;
    j["command"] = config.command;
    j["model"] = models::to_string(config.model.kind);
    j["convention"] = models::to_string(config.model.channel_convention);
    j["estimator"] = config.estimator;
    j["contraction"] = models::to_string(config.contraction);
    j["form"] = estimators::to_string(config.form);
    j["nodes"] = config.nodes;
    j["samples"] = config.samples;
    j["seed"] = config.seed;
    j["seeds"] = config.seeds;
    j["grid"] = grid_json(config.grid);
    j["settings"] = {config.settings.a, config.settings.a_prime, config.settings.b,
                     config.settings.b_prime};
    j["a"] = config.a;
    j["b"] = config.b;
    j["phi"] = config.phi;
    j["tolerance"] = config.tolerance;
    j["degrees"] = config.degrees;
    j["format"] = config.format == OutputFormat::Csv ? "csv" : "json";
    j["output"] = config.output;
    return j;
}

// What a command produces; rendered as CSV or JSON afterwards.
struct Report {
    std::string csv;
    json results = json::array();
    json summary = json::object();
};

class CsvWriter {
public:
    explicit CsvWriter(std::initializer_list<std::string_view> header) { row(header); }

    void row(std::initializer_list<std::string_view> cells) {
        bool first = true;
        for (std::string_view cell : cells) {
            if (!first) text_ += ',';
            text_ += cell;
            first = false;
        }
        text_ += '\n';
    }

    std::string take() { return std::move(text_); }

private:
    std::string text_;
};

estimators::EstimatorSpec estimator_spec(const RunConfig& config, unsigned threads) {
    if (config.estimator == "quadrature") return estimators::QuadratureConfig{config.nodes};
    if (config.estimator == "mc") {
        return estimators::MonteCarloConfig{config.samples, config.seed, threads};
    }
    return estimators::ClosedFormConfig{};
}

Report cmd_scan(const RunConfig& config, unsigned threads) {
    const std::vector<double> grid = config.grid.points();
    const auto curve = estimators::scan_curve(
        config.model, grid, {estimator_spec(config, threads), config.contraction, config.form});

    CsvWriter csv{"phi_radians", "probability", "std_error", "method"};
    Report report;
    double lowest = curve.values.front().mean;
    double highest = lowest;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const auto& value = curve.values[i];
        const auto method = estimators::to_string(value.method);
        csv.row({format_number(grid[i]), format_number(value.mean),
                 format_number(value.std_error), method});
        report.results.push_back({{"phi_radians", number(grid[i])},
                                  {"probability", number(value.mean)},
                                  {"std_error", number(value.std_error)},
                                  {"method", method}});
        lowest = std::min(lowest, value.mean);
        highest = std::max(highest, value.mean);
    }
    report.csv = csv.take();
    report.summary = {{"points", grid.size()},
                      {"form", estimators::to_string(curve.form)},
                      {"min_probability", number(lowest)},
                      {"max_probability", number(highest)}};
    return report;
}

Report cmd_compare(const RunConfig& config, unsigned threads) {
    const std::vector<double> grid = config.grid.points();
    const estimators::CurveOptions options{estimator_spec(config, threads), config.contraction,
                                           estimators::CoincidenceForm::Auto};
    const auto furry = estimators::scan_curve({ModelKind::FurryLinear}, grid, options);
    const auto hbt = estimators::scan_curve({ModelKind::CircularHbt}, grid, options);
    const models::SourceModel qm{ModelKind::QmReference, config.model.channel_convention};

    CsvWriter csv{"phi_radians", "furry", "hbt", "qm"};
    Report report;
    double furry_min = furry.values.front().mean;
    double hbt_min = hbt.values.front().mean;
    double qm_min = models::closed_form(qm, grid.front());
    double max_diff_hbt_qm = 0.0;
    double max_diff_furry_qm = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double phi = grid[i];
        const double f = furry.values[i].mean;
        const double h = hbt.values[i].mean;
        const double q = models::closed_form(qm, phi);
        furry_min = std::min(furry_min, f);
        hbt_min = std::min(hbt_min, h);
        qm_min = std::min(qm_min, q);
        max_diff_hbt_qm = std::max(max_diff_hbt_qm, std::abs(h - q));
        max_diff_furry_qm = std::max(max_diff_furry_qm, std::abs(f - q));
        csv.row({format_number(phi), format_number(f), format_number(h), format_number(q)});
        report.results.push_back({{"phi_radians", number(phi)},
                                  {"furry", number(f)},
                                  {"furry_std_error", number(furry.values[i].std_error)},
                                  {"hbt", number(h)},
                                  {"hbt_std_error", number(hbt.values[i].std_error)},
                                  {"qm", number(q)}});
    }
    report.csv = csv.take();
    report.summary = {{"points", grid.size()},
                      {"furry_min", number(furry_min)},
                      {"hbt_min", number(hbt_min)},
                      {"qm_min", number(qm_min)},
                      {"max_abs_diff_hbt_qm", number(max_diff_hbt_qm)},
                      {"max_abs_diff_furry_qm", number(max_diff_furry_qm)}};
    return report;
}

Report cmd_chsh(const RunConfig& config) {
    const bell::ChshResult result = bell::chsh_S(config.model, config.settings);
    const auto& s = config.settings;
    struct Pair {
        const char* name;
        double a;
        double b;
        double e;
    };
    const Pair pairs[] = {{"a,b", s.a, s.b, result.e_ab},
                          {"a,b'", s.a, s.b_prime, result.e_ab_prime},
                          {"a',b", s.a_prime, s.b, result.e_a_prime_b},
                          {"a',b'", s.a_prime, s.b_prime, result.e_a_prime_b_prime}};

    Report report;
    CsvWriter csv{"quantity", "value"};
    for (const Pair& pair : pairs) {
        report.results.push_back({{"pair", pair.name},
                                  {"a", number(pair.a)},
                                  {"b", number(pair.b)},
                                  {"correlation", number(pair.e)}});
        csv.row({std::string("E(") + pair.name + ")", format_number(pair.e)});
    }
    const bool violates = result.violates_lhv();
    csv.row({"s_value", format_number(result.s_value)});
    csv.row({"abs_s", format_number(result.abs_s())});
    csv.row({"lhv_bound", format_number(result.lhv_bound)});
    csv.row({"violates_lhv", violates ? "true" : "false"});
    report.csv = csv.take();
    report.summary = {{"s_value", number(result.s_value)},
                      {"abs_s", number(result.abs_s())},
                      {"lhv_bound", number(result.lhv_bound)},
                      {"violates_lhv", violates}};
    return report;
}

Report cmd_decompose(const RunConfig& config) {
    const auto decomposition =
        bell::decompose_conditional(config.model, config.a, config.b, config.nodes);
    const auto check = bell::factorizability_check(decomposition, config.tolerance);
    const double reconstructed = bell::reconstruct(decomposition);
    const double closed = models::closed_form(config.model, config.b - config.a);

    Report report;
    CsvWriter csv{"lambda", "weight", "p_a", "p_b", "p_b_given_a", "degenerate"};
    for (const auto& node : decomposition.nodes) {
        csv.row({format_number(node.lambda), format_number(node.weight), format_number(node.p_a),
                 format_number(node.p_b), format_number(node.p_b_pass_given_a),
                 node.degenerate ? "true" : "false"});
        report.results.push_back({{"lambda", number(node.lambda)},
                                  {"weight", number(node.weight)},
                                  {"p_a", number(node.p_a)},
                                  {"p_b", number(node.p_b)},
                                  {"p_b_given_a", number(node.p_b_pass_given_a)},
                                  {"p_not_b_given_a", number(node.p_b_block_given_a)},
                                  {"degenerate", node.degenerate}});
    }
    report.csv = csv.take();
    report.summary = {
        {"factorizable", check.factorizable},
        {"max_deviation", number(check.max_deviation)},
        {"argmax_lambda", check.argmax_lambda ? number(*check.argmax_lambda) : json(nullptr)},
        {"degenerate_nodes", check.degenerate_nodes},
        {"reconstructed", number(reconstructed)},
        {"closed_form", number(closed)},
        {"reconstruction_error", number(std::abs(reconstructed - closed))}};
    return report;
}

// Least-squares slope of log(y) against log(x).
double log_log_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(y[i] > 0.0)) return std::numeric_limits<double>::quiet_NaN();
        const double lx = std::log(x[i]);
        const double ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

Report cmd_converge(const RunConfig& config, unsigned threads) {
    if (config.seeds == 0) throw UsageError("--seeds must be positive");
    if (config.model.kind == ModelKind::QmReference) {
        throw ModelError("the qm reference has no per-realization integrand to sample");
    }
    const bool furry = config.model.kind == ModelKind::FurryLinear;
    const double target = furry ? models::furry_closed_form(config.phi)
                                : models::coherence_closed_form(config.phi, config.contraction);

    Report report;
    CsvWriter csv{"samples", "mean_estimate", "mean_abs_error", "mean_std_error", "coverage"};
    std::vector<double> sizes;
    std::vector<double> errors;
    for (std::size_t samples : kConvergeDecades) {
        double sum_mean = 0.0, sum_abs = 0.0, sum_se = 0.0;
        std::size_t covered = 0;
        for (std::size_t s = 0; s < config.seeds; ++s) {
            const estimators::MonteCarloConfig mc{samples, config.seed + s, threads};
            const auto estimate =
                furry ? estimators::factorized_coincidence(config.model, config.phi, mc)
                      : estimators::coherence_coincidence(config.model, config.phi,
                                                          config.contraction, mc);
            const double error = std::abs(estimate.mean - target);
            sum_mean += estimate.mean;
            sum_abs += error;
            sum_se += estimate.std_error;
            if (error <= kCoverageSigmas * estimate.std_error) ++covered;
        }
        const double n = static_cast<double>(config.seeds);
        const double coverage = static_cast<double>(covered) / n;
        sizes.push_back(static_cast<double>(samples));
        errors.push_back(sum_se / n);
        csv.row({std::to_string(samples), format_number(sum_mean / n), format_number(sum_abs / n),
                 format_number(sum_se / n), format_number(coverage)});
        report.results.push_back({{"samples", samples},
                                  {"mean_estimate", number(sum_mean / n)},
                                  {"mean_abs_error", number(sum_abs / n)},
                                  {"mean_std_error", number(sum_se / n)},
                                  {"coverage", number(coverage)}});
    }
    const double slope = log_log_slope(sizes, errors);
    report.csv = csv.take();
    report.summary = {{"target", number(target)},
                      {"phi", number(config.phi)},
                      {"seeds", config.seeds},
                      {"coverage_sigmas", kCoverageSigmas},
                      {"std_error_slope", number(slope)},
                      {"slope_in_range", slope >= kSlopeLow && slope <= kSlopeHigh}};
    return report;
}

std::string render(const RunConfig& config, Report report) {
    if (config.format == OutputFormat::Csv) return std::move(report.csv);
    json document;
    document["schema"] = kSchemaVersion;
    document["config"] = config_json(config);
    document["results"] = std::move(report.results);
    document["summary"] = std::move(report.summary);
    return document.dump(2) + "\n";
}

void emit(const RunConfig& config, const std::string& text, std::ostream& out) {
    if (config.output == "-") {
        out << text;
        out.flush();
        return;
    }
    std::ofstream file(config.output, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open output file '" + config.output + "'");
    file << text;
    file.flush();
    if (!file) throw IoError("failed writing output file '" + config.output + "'");
}

// Raw option text; angles are converted once --degrees is known.
struct RawOptions {
    std::string model;
    std::string estimator;
    std::string contraction = "eq6";
    std::string convention = "orthogonal";
    std::string form = "auto";
    std::string grid = "0:pi:181";
    std::string settings = "0,pi/4,pi/8,3pi/8";
    std::string a = "0";
    std::string b = "pi/8";
    std::string phi = "pi/3";
    std::string format;
    std::optional<std::uint64_t> seed;
    unsigned threads = 0;
};

}  // namespace

std::vector<double> GridSpec::points() const {
    if (count == 0) throw UsageError("grid count must be positive");
    if (count == 1) return {start};
    std::vector<double> out(count);
    const double step = (stop - start) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i + 1 < count; ++i) {
        out[i] = start + step * static_cast<double>(i);
    }
    out.back() = stop;
    return out;
}

double parse_angle(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty()) throw UsageError("empty angle");
    double sign = 1.0;
    if (s.front() == '-' || s.front() == '+') {
        sign = s.front() == '-' ? -1.0 : 1.0;
        s.remove_prefix(1);
    }
    const auto pos = s.find("pi");
    if (pos == std::string_view::npos) return sign * parse_real(s, "angle");

    std::string_view coefficient = s.substr(0, pos);
    std::string_view divisor = s.substr(pos + 2);
    if (!coefficient.empty() && coefficient.back() == '*') coefficient.remove_suffix(1);
    const double scale = coefficient.empty() ? 1.0 : parse_real(coefficient, "angle coefficient");
    double denominator = 1.0;
    if (!divisor.empty()) {
        if (divisor.front() != '/') {
            throw UsageError("cannot parse angle '" + std::string(text) + "'");
        }
        denominator = parse_real(divisor.substr(1), "angle divisor");
        if (denominator == 0.0) throw UsageError("angle divisor is zero");
    }
    return sign * scale * std::numbers::pi / denominator;
}

GridSpec parse_grid(std::string_view text, double unit_scale) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) {
        throw UsageError("grid must be start:stop:count, got '" + std::string(text) + "'");
    }
    GridSpec grid;
    grid.start = parse_angle(parts[0]) * unit_scale;
    grid.stop = parse_angle(parts[1]) * unit_scale;
    const std::string_view count = trim(parts[2]);
    const auto [ptr, ec] = std::from_chars(count.data(), count.data() + count.size(), grid.count);
    if (count.empty() || ec != std::errc{} || ptr != count.data() + count.size() ||
        grid.count == 0) {
        throw UsageError("grid count must be a positive integer, got '" + std::string(count) +
                         "'");
    }
    if (grid.count > 1 && !(grid.stop > grid.start)) {
        throw UsageError("grid stop must exceed start");
    }
    return grid;
}

bell::ChshSettings parse_settings(std::string_view text, double unit_scale) {
    const auto parts = split(text, ',');
    if (parts.size() != 4) {
        throw UsageError("settings must be four comma-separated angles a,a',b,b'");
    }
    return {parse_angle(parts[0]) * unit_scale, parse_angle(parts[1]) * unit_scale,
            parse_angle(parts[2]) * unit_scale, parse_angle(parts[3]) * unit_scale};
}

std::string format_number(double value) {
    char buffer[64];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
    return std::string(buffer, ptr);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Classical-optics simulations of two-station polarization coincidences"};
    app.require_subcommand(1);

    RunConfig config;
    RawOptions raw;

    const std::vector<std::string> model_names{"furry", "hbt", "qm"};
    auto add_model = [&](CLI::App* sub) {
        sub->add_option("--model", raw.model, "Source model")
            ->check(CLI::IsMember(model_names));
        sub->add_option("--convention", raw.convention, "QM channel convention")
            ->check(CLI::IsMember({"orthogonal", "parallel"}))
            ->capture_default_str();
    };
    auto add_estimator = [&](CLI::App* sub) {
        sub->add_option("--estimator", raw.estimator, "Averaging method")
            ->check(CLI::IsMember({"closed-form", "quadrature", "mc"}));
        sub->add_option("--nodes", config.nodes, "Quadrature nodes")->capture_default_str();
        sub->add_option("--samples", config.samples, "Monte Carlo samples")
            ->capture_default_str();
        sub->add_option("--seed", raw.seed, "Monte Carlo seed");
    };
    auto add_contraction = [&](CLI::App* sub) {
        sub->add_option("--contraction", raw.contraction, "Coherence numerator contraction")
            ->check(CLI::IsMember({"eq6", "bilinear", "hermitian"}))
            ->capture_default_str();
    };
    auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--degrees", config.degrees, "Angles on the command line are in degrees");
        sub->add_option("--output", config.output, "Output path, '-' for stdout")
            ->capture_default_str();
        sub->add_option("--format", raw.format, "Output format")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--threads", raw.threads,
                        "Worker threads for Monte Carlo; 0 uses every core")
            ->capture_default_str();
    };

    CLI::App* scan = app.add_subcommand("scan", "Coincidence curve P(phi) over an angle grid");
    add_model(scan);
    add_estimator(scan);
    add_contraction(scan);
    scan->add_option("--form", raw.form, "Coincidence expression for sampled estimators")
        ->check(CLI::IsMember({"auto", "factorized", "coherence"}))
        ->capture_default_str();
    scan->add_option("--grid", raw.grid, "start:stop:count, inclusive")->capture_default_str();
    add_common(scan);

    CLI::App* compare = app.add_subcommand("compare", "Furry vs HBT vs QM discrepancy table");
    compare->add_option("--convention", raw.convention, "QM channel convention")
        ->check(CLI::IsMember({"orthogonal", "parallel"}))
        ->capture_default_str();
    add_estimator(compare);
    add_contraction(compare);
    compare->add_option("--grid", raw.grid, "start:stop:count, inclusive")
        ->capture_default_str();
    add_common(compare);

    CLI::App* chsh = app.add_subcommand("chsh", "CHSH value against the local bound");
    add_model(chsh);
    chsh->add_option("--settings", raw.settings, "a,a',b,b'")->capture_default_str();
    add_common(chsh);

    CLI::App* decompose =
        app.add_subcommand("decompose", "Conditional decomposition and factorizability");
    add_model(decompose);
    decompose->add_option("--a", raw.a, "Polarizer angle at A")->capture_default_str();
    decompose->add_option("--b", raw.b, "Polarizer angle at B")->capture_default_str();
    decompose->add_option("--nodes", config.nodes, "Hidden-variable grid nodes")
        ->capture_default_str();
    decompose->add_option("--tol", config.tolerance, "Factorizability tolerance")
        ->capture_default_str();
    add_common(decompose);

    CLI::App* converge = app.add_subcommand("converge", "Monte Carlo error scaling study");
    add_model(converge);
    add_contraction(converge);
    converge->add_option("--phi", raw.phi, "Polarizer angle difference")->capture_default_str();
    converge->add_option("--seeds", config.seeds, "Independent seeds per sample size")
        ->capture_default_str();
    converge->add_option("--seed", raw.seed, "First seed");
    add_common(converge);

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.emplace_back("eprb");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& arg : argv_storage) argv.push_back(arg.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        CLI::App* chosen = app.get_subcommands().front();
        config.command = chosen->get_name();
        const double unit = config.degrees ? kDegree : 1.0;
        const bool converging = config.command == "converge";
        if (raw.model.empty()) raw.model = converging ? "furry" : "hbt";
        if (raw.estimator.empty()) {
            raw.estimator = config.command == "compare" ? "quadrature" : "closed-form";
        }
        config.seed = raw.seed.value_or(converging ? 1 : 0);
        config.model = {parse_model(raw.model),
                        raw.convention == "parallel" ? models::ChannelConvention::ParallelPass
                                                     : models::ChannelConvention::OrthogonalPass};
        config.estimator = raw.estimator;
        config.contraction = parse_contraction(raw.contraction);
        config.form = parse_form(raw.form);
        config.grid = parse_grid(raw.grid, unit);
        config.settings = parse_settings(raw.settings, unit);
        config.a = parse_angle(raw.a) * unit;
        config.b = parse_angle(raw.b) * unit;
        config.phi = parse_angle(raw.phi) * unit;
        if (converging) config.estimator = "mc";
        if (raw.format.empty()) {
            config.format = config.command == "scan" ? OutputFormat::Csv : OutputFormat::Json;
        } else {
            config.format = raw.format == "csv" ? OutputFormat::Csv : OutputFormat::Json;
        }
        const unsigned threads =
            raw.threads != 0 ? raw.threads : std::max(1U, std::thread::hardware_concurrency());

        Report report;
        if (config.command == "scan") {
            report = cmd_scan(config, threads);
        } else if (config.command == "compare") {
            report = cmd_compare(config, threads);
        } else if (config.command == "chsh") {
            report = cmd_chsh(config);
        } else if (config.command == "decompose") {
            report = cmd_decompose(config);
        } else {
            report = cmd_converge(config, threads);
        }
        emit(config, render(config, std::move(report)), out);
        return kExitOk;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace eprb::cli
