// Command-line front end: simulate coinless 2D quantum walks of a single
// photon over polarization, path and orbital angular momentum, quantify the
// generated entanglement, and emit the optical layout that realizes a walk.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <stdexcept>
#include <string>

#include "hyperwalk/entanglement.hpp"
#include "hyperwalk/io.hpp"
#include "hyperwalk/layout.hpp"
#include "hyperwalk/operators.hpp"
#include "hyperwalk/recurrence.hpp"
#include "hyperwalk/state.hpp"

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kOracleThreshold = 1e-12;

// Flags shared by the simulation subcommands. Angle-valued flags are
// radians unless --deg is given; conversion applies only to values the user
// actually passed, never to defaults.
struct CommonOptions {
    std::string out;
    std::string format = "csv";
    long long seed = 0;  // reserved; accepted and ignored
    bool degrees = false;

    std::string kind = "modified-pauli";
    std::string plate = "q";
    double alpha = kPi / 4;
    double beta = 0.0;
    int steps = 0;

    std::vector<std::pair<CLI::Option*, double*>> angle_flags;

    void finalize_angles() {
        if (!degrees) return;
        for (auto& [option, value] : angle_flags) {
            if (option->count() > 0) {
                *value *= kPi / 180.0;
            }
        }
    }

    hyperwalk::InitialStateParams init() const { return {alpha, beta}; }
};

void add_output_flags(CLI::App* sub, CommonOptions& opts,
                      const std::vector<std::string>& formats) {
    std::string joined;
    for (const auto& format : formats) {
        joined += (joined.empty() ? "" : "|") + format;
    }
    sub->add_option("--out", opts.out, "Output file (default: stdout)");
    sub->add_option("--format", opts.format, "Output format: " + joined)
        ->check(CLI::IsMember(formats));
    sub->add_option("--seed", opts.seed,
                    "Reserved for future stochastic features (ignored)");
    sub->add_flag("--deg", opts.degrees,
                  "Interpret all angle flags as degrees");
}

void add_walk_flags(CLI::App* sub, CommonOptions& opts) {
    sub->add_option("--variant", opts.kind,
                    "Walk family: modified-pauli|pauli|alternate|modified-alternate");
    sub->add_option(
        "--plate", opts.plate,
        "Plate modes: \"q\", {\"xi\":,\"zeta\":,\"theta\":} or {\"u1\":[..],\"u2\":[..]}");
    auto* alpha = sub->add_option("--alpha", opts.alpha,
                                  "Initial polarization angle alpha (default pi/4)");
    auto* beta = sub->add_option("--beta", opts.beta,
                                 "Initial polarization phase beta (default 0)");
    opts.angle_flags.push_back({alpha, &opts.alpha});
    opts.angle_flags.push_back({beta, &opts.beta});
}

std::ostream& open_output(const CommonOptions& opts, std::ofstream& file) {
    if (opts.out.empty()) {
        return std::cout;
    }
    file.open(opts.out);
    if (!file) {
        throw std::runtime_error("cannot open output file: " + opts.out);
    }
    return file;
}

double rounded(double value) { return hyperwalk::round_to_output_precision(value); }

int run_walk(const CommonOptions& opts) {
    const hyperwalk::WalkVariant variant =
        hyperwalk::parse_variant_spec(opts.kind, opts.plate);
    const hyperwalk::WalkState state = hyperwalk::evolve(
        hyperwalk::make_initial_state(opts.init()), variant, opts.steps);
    std::ofstream file;
    std::ostream& out = open_output(opts, file);
    if (opts.format == "json") {
        hyperwalk::write_state_json(state, out);
    } else {
        hyperwalk::write_distribution_csv(state, out);
    }
    return 0;
}

int run_negativity(const CommonOptions& opts, const std::string& pair_token,
                   bool curve) {
    const auto [first, second] = hyperwalk::parse_dof_pair(pair_token);
    const hyperwalk::WalkVariant variant =
        hyperwalk::parse_variant_spec(opts.kind, opts.plate);
    std::ofstream file;
    std::ostream& out = open_output(opts, file);
    if (curve) {
        const auto points = hyperwalk::negativity_curve(variant, opts.init(),
                                                        first, second, opts.steps);
        if (opts.format == "json") {
            nlohmann::ordered_json j;
            j["pair"] = pair_token;
            j["curve"] = nlohmann::ordered_json::array();
            for (const auto& [n, value] : points) {
                j["curve"].push_back({{"n", n}, {"negativity", rounded(value)}});
            }
            out << j.dump(2) << "\n";
        } else {
            hyperwalk::write_curve_csv(points, out);
        }
        return 0;
    }
    const hyperwalk::WalkState state = hyperwalk::evolve(
        hyperwalk::make_initial_state(opts.init()), variant, opts.steps);
    const double value = hyperwalk::negativity_between(state, first, second);
    if (opts.format == "json") {
        nlohmann::ordered_json j;
        j["pair"] = pair_token;
        j["steps"] = opts.steps;
        j["negativity"] = rounded(value);
        out << j.dump(2) << "\n";
    } else {
        out << hyperwalk::format_double(value) << "\n";
    }
    return 0;
}

int run_sweep(const CommonOptions& opts, const std::string& param_token,
              const std::string& pair_token, const hyperwalk::SweepSpec& spec,
              const hyperwalk::Su2Params& fixed) {
    const auto [first, second] = hyperwalk::parse_dof_pair(pair_token);
    const auto points = hyperwalk::parameter_sweep(spec, fixed, opts.init(),
                                                   opts.steps, first, second);
    std::ofstream file;
    std::ostream& out = open_output(opts, file);
    if (opts.format == "json") {
        nlohmann::ordered_json j;
        j["param"] = param_token;
        j["pair"] = pair_token;
        j["steps"] = opts.steps;
        j["points"] = nlohmann::ordered_json::array();
        for (const auto& [angle, value] : points) {
            j["points"].push_back(
                {{"angle_rad", rounded(angle)}, {"negativity", rounded(value)}});
        }
        out << j.dump(2) << "\n";
    } else {
        hyperwalk::write_sweep_csv(points, out);
    }
    return 0;
}

int run_layout(const CommonOptions& opts, const std::string& realization_token) {
    const hyperwalk::OpticalLayout layout = hyperwalk::emit_layout(
        opts.steps, hyperwalk::realization_from_name(realization_token));
    std::ofstream file;
    std::ostream& out = open_output(opts, file);
    out << (opts.format == "dot" ? hyperwalk::layout_dot(layout)
                                 : hyperwalk::layout_json(layout));
    return 0;
}

int run_oracle_check(const CommonOptions& opts, const hyperwalk::Su2Params& params,
                     double perturb_theta) {
    const hyperwalk::AmplitudeGrids grids =
        hyperwalk::oracle_evolve(opts.init(), params, opts.steps);
    hyperwalk::Su2Params operator_params = params;
    operator_params.theta += perturb_theta;
    const hyperwalk::WalkVariant variant{
        hyperwalk::WalkKind::ModifiedPauli,
        hyperwalk::pair_from_params(operator_params)};
    const hyperwalk::WalkState state = hyperwalk::evolve(
        hyperwalk::make_initial_state(opts.init()), variant, opts.steps);
    const double deviation = hyperwalk::compare_with_operator(grids, state);

    std::ofstream file;
    std::ostream& out = open_output(opts, file);
    if (opts.format == "json") {
        nlohmann::ordered_json j;
        j["steps"] = opts.steps;
        j["max_deviation"] = rounded(deviation);
        j["threshold"] = kOracleThreshold;
        out << j.dump(2) << "\n";
    } else {
        out << hyperwalk::format_double(deviation) << "\n";
    }
    return deviation < kOracleThreshold ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Coinless 2D quantum walk simulator: single-photon evolution over "
        "polarization, path and orbital angular momentum"};
    app.require_subcommand(1);

    CommonOptions opts;

    auto* walk = app.add_subcommand(
        "walk", "Evolve a walk and write the site probability distribution");
    add_walk_flags(walk, opts);
    walk->add_option("--steps", opts.steps, "Number of steps")
        ->required()
        ->check(CLI::NonNegativeNumber);
    add_output_flags(walk, opts, {"csv", "json"});

    std::string pair_token;
    bool curve = false;
    auto* negativity = app.add_subcommand(
        "negativity", "Entanglement negativity between two degrees of freedom");
    add_walk_flags(negativity, opts);
    negativity->add_option("--pair", pair_token, "Kept pair: pol-oam|pol-path|path-oam")
        ->required();
    negativity->add_option("--steps", opts.steps, "Number of steps")
        ->required()
        ->check(CLI::NonNegativeNumber);
    negativity->add_flag("--curve", curve, "Emit one value per step 1..steps");
    add_output_flags(negativity, opts, {"csv", "json"});

    std::string param_token;
    hyperwalk::SweepSpec spec;
    hyperwalk::Su2Params fixed;
    auto* sweep = app.add_subcommand(
        "sweep", "Negativity as one plate angle sweeps over a grid");
    sweep->add_option("--param", param_token, "Swept angle: xi|zeta|theta")
        ->required()
        ->check(CLI::IsMember({"xi", "zeta", "theta"}));
    auto* from = sweep->add_option("--from", spec.from, "Grid start")->required();
    auto* to = sweep->add_option("--to", spec.to, "Grid end (inclusive)")->required();
    auto* step = sweep->add_option("--step", spec.step, "Grid spacing")->required();
    auto* xi = sweep->add_option("--xi", fixed.xi, "Fixed xi (default 0)");
    auto* zeta = sweep->add_option("--zeta", fixed.zeta, "Fixed zeta (default 0)");
    auto* theta = sweep->add_option("--theta", fixed.theta, "Fixed theta (default 0)");
    sweep->add_option("--pair", pair_token, "Kept pair: pol-oam|pol-path|path-oam")
        ->required();
    sweep->add_option("--steps", opts.steps, "Number of steps")
        ->required()
        ->check(CLI::NonNegativeNumber);
    auto* sweep_alpha =
        sweep->add_option("--alpha", opts.alpha, "Initial polarization angle");
    auto* sweep_beta =
        sweep->add_option("--beta", opts.beta, "Initial polarization phase");
    add_output_flags(sweep, opts, {"csv", "json"});
    opts.angle_flags.push_back({from, &spec.from});
    opts.angle_flags.push_back({to, &spec.to});
    opts.angle_flags.push_back({step, &spec.step});
    opts.angle_flags.push_back({xi, &fixed.xi});
    opts.angle_flags.push_back({zeta, &fixed.zeta});
    opts.angle_flags.push_back({theta, &fixed.theta});
    opts.angle_flags.push_back({sweep_alpha, &opts.alpha});
    opts.angle_flags.push_back({sweep_beta, &opts.beta});

    std::string realization_token = "jplate";
    auto* layout = app.add_subcommand(
        "layout", "Optical element grid realizing an n-step walk");
    layout->add_option("--steps", opts.steps, "Number of steps")
        ->required()
        ->check(CLI::PositiveNumber);
    layout->add_option("--realization", realization_token,
                       "jplate|qplate-modified|qplate-pauli");
    add_output_flags(layout, opts, {"json", "dot"});

    hyperwalk::Su2Params oracle_params{0.0, -kPi / 2, kPi / 4};
    double perturb_theta = 0.0;
    auto* oracle = app.add_subcommand(
        "oracle-check",
        "Cross-validate operator evolution against the amplitude recurrences");
    oracle->add_option("--steps", opts.steps, "Number of steps")
        ->required()
        ->check(CLI::NonNegativeNumber);
    auto* oxi = oracle->add_option("--xi", oracle_params.xi, "Plate xi (default 0)");
    auto* ozeta =
        oracle->add_option("--zeta", oracle_params.zeta, "Plate zeta (default -pi/2)");
    auto* otheta =
        oracle->add_option("--theta", oracle_params.theta, "Plate theta (default pi/4)");
    auto* oalpha =
        oracle->add_option("--alpha", opts.alpha, "Initial polarization angle");
    auto* obeta =
        oracle->add_option("--beta", opts.beta, "Initial polarization phase");
    auto* operturb = oracle->add_option(
        "--perturb-theta", perturb_theta,
        "Test mode: offset the operator-side theta to force a mismatch");
    add_output_flags(oracle, opts, {"csv", "json"});
    opts.angle_flags.push_back({oxi, &oracle_params.xi});
    opts.angle_flags.push_back({ozeta, &oracle_params.zeta});
    opts.angle_flags.push_back({otheta, &oracle_params.theta});
    opts.angle_flags.push_back({oalpha, &opts.alpha});
    opts.angle_flags.push_back({obeta, &opts.beta});
    opts.angle_flags.push_back({operturb, &perturb_theta});

    // The layout formats are json and dot; default to json there.
    layout->callback([&] {
        if (layout->count("--format") == 0) opts.format = "json";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        opts.finalize_angles();
        if (walk->parsed()) {
            return run_walk(opts);
        }
        if (negativity->parsed()) {
            return run_negativity(opts, pair_token, curve);
        }
        if (sweep->parsed()) {
            std::string pt = param_token;
            spec.param = pt == "xi"     ? hyperwalk::SweepParam::Xi
                         : pt == "zeta" ? hyperwalk::SweepParam::Zeta
                                        : hyperwalk::SweepParam::Theta;
            return run_sweep(opts, param_token, pair_token, spec, fixed);
        }
        if (layout->parsed()) {
            return run_layout(opts, realization_token);
        }
        if (oracle->parsed()) {
            return run_oracle_check(opts, oracle_params, perturb_theta);
        }
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
