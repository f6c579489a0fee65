#include "cohpol/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string_view>

#include <CLI11.hpp>
#include <json.hpp>

#include "cohpol/channels.hpp"
#include "cohpol/io.hpp"
#include "cohpol/metrics.hpp"

namespace cohpol::cli {
namespace {

using Row = std::vector<std::optional<double>>;

std::optional<double> opt(const std::optional<PolarizationDegree>& p) {
    return p ? std::optional<double>(p->p) : std::nullopt;
}

void append_stokes(Row& row, const StokesVector& s) {
    row.insert(row.end(), {s.s0, s.s1, s.s2, s.s3});
}

}  // namespace

NumberFormatter::NumberFormatter(int significant_digits) : digits_(significant_digits) {
    if (digits_ < 1 || digits_ > 17) throw InputError("float digits must lie in [1, 17]");
}

NumberFormatter NumberFormatter::from_environment() {
    const char* value = std::getenv("COHPOL_FLOAT_DIGITS");
    if (value == nullptr || *value == '\0') return NumberFormatter();
    char* end = nullptr;
    const long digits = std::strtol(value, &end, 10);
    if (*end != '\0') throw InputError(std::string("COHPOL_FLOAT_DIGITS is not an integer: ") + value);
    return NumberFormatter(static_cast<int>(digits));
}

std::string NumberFormatter::operator()(double value) const {
    // Normalize negative zero so golden files do not flip on rounding.
    if (value == 0.0) value = 0.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits_, value);
    std::string s(buf);
    // snprintf honours LC_NUMERIC; force '.' regardless of the process locale.
    std::replace(s.begin(), s.end(), ',', '.');
    return s;
}

void write_table(std::ostream& out, const Table& table, OutputFormat format, const NumberFormatter& fmt) {
    if (format == OutputFormat::Csv) {
        for (std::size_t c = 0; c < table.columns.size(); ++c) out << (c ? "," : "") << table.columns[c];
        out << '\n';
        for (const auto& row : table.rows) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                out << (c ? "," : "") << (row[c] ? fmt(*row[c]) : "undefined");
            }
            out << '\n';
        }
        return;
    }

    nlohmann::ordered_json doc = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        nlohmann::ordered_json column = nlohmann::ordered_json::array();
        for (const auto& row : table.rows) {
            if (row[c]) {
                column.push_back(std::stod(fmt(*row[c])));
            } else {
                column.push_back("undefined");
            }
        }
        doc[table.columns[c]] = std::move(column);
    }
    out << doc.dump(2) << '\n';
}

Table run_metrics(const MetricsConfig& config) {
    const DensityMatrix rho = io::load_state(config.state);

    Table table;
    table.columns = {"mu_re", "mu_im", "abs_mu", "s0_q0", "s1_q0", "s2_q0", "s3_q0",
                     "s0_q1", "s1_q1", "s2_q1", "s3_q1", "p0",    "p1"};
    Row row;
    if (auto mu = degree_of_coherence(rho)) {
        row.insert(row.end(), {mu->mu.real(), mu->mu.imag(), mu->modulus()});
    } else {
        row.insert(row.end(), 3, std::nullopt);
    }
    append_stokes(row, stokes(rho, Slit::Q0));
    append_stokes(row, stokes(rho, Slit::Q1));
    row.push_back(opt(degree_of_polarization(rho, Slit::Q0)));
    row.push_back(opt(degree_of_polarization(rho, Slit::Q1)));
    table.rows.push_back(std::move(row));
    return table;
}

Table run_screen(const ScreenConfig& config) {
    const DensityMatrix rho = io::load_state(config.state);
    const auto samples = pattern(rho, config.geometry, config.y_min, config.y_max, config.points);

    double peak = 0.0;
    for (const auto& s : samples) peak = std::max(peak, s.rho_total);

    Table table;
    table.columns = {"y", "rho_total", "rho_q0", "rho_q1", "rho_normalized"};
    for (const auto& s : samples) {
        table.rows.push_back({s.y, s.rho_total, s.rho_q0, s.rho_q1, peak > 0.0 ? s.rho_total / peak : 0.0});
    }
    return table;
}

Table run_propagate(const PropagateConfig& config) {
    const auto curve = polarization_curve(config.pair, config.z_max, config.steps);
    Table table;
    table.columns = {"z_over_z1", "w1", "w2", "p", "abs_mu"};
    for (const auto& s : curve) {
        table.rows.push_back({s.z / config.pair.z1, s.w1, s.w2, s.p, std::abs(s.mu)});
    }
    return table;
}

Table run_evolve(const EvolveConfig& config) {
    const DensityMatrix rho0 = io::load_state(config.state);
    const io::ChannelSpec spec = io::load_channel(config.channel);

    Table table;
    table.columns = {"t", "abs_mu", "p0", "p1"};

    if (spec.kind) {
        for (const auto& s : decay_report(rho0, *spec.kind, config.gamma, config.t_max, config.steps)) {
            table.rows.push_back({s.t, s.abs_mu, s.p0, s.p1});
        }
        return table;
    }

    if (config.steps < 1) throw InputError("--steps must be at least 1");
    const KrausChannel channel = spec.channel();
    DensityMatrix rho = rho0;
    for (int k = 0; k < config.steps; ++k) {
        if (k > 0) rho = channel.apply(rho);
        const auto mu = degree_of_coherence(rho);
        if (!mu) throw DomainError("state leaves a slit unpopulated; coherence is undefined");
        table.rows.push_back({static_cast<double>(k), mu->modulus(), opt(degree_of_polarization(rho, Slit::Q0)),
                              opt(degree_of_polarization(rho, Slit::Q1))});
    }
    return table;
}

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Coherence and polarization toolkit for two-slit photon density matrices"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string out_path;
    std::string format_name = "csv";
    app.add_option("--out", out_path, "Output file (default: stdout)");
    app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"csv", "json"}));

    MetricsConfig metrics;
    auto* metrics_cmd = app.add_subcommand("metrics", "Degree of coherence, Stokes parameters and degrees of polarization");
    metrics_cmd->add_option("--state", metrics.state, "State JSON file")->required();

    ScreenConfig screen;
    auto* screen_cmd = app.add_subcommand("screen", "Double-slit detection-screen pattern");
    screen_cmd->add_option("--state", screen.state, "State JSON file")->required();
    screen_cmd->add_option("--k", screen.geometry.wavenumber, "Wavenumber [rad/m]")->required();
    screen_cmd->add_option("--slit-sep", screen.geometry.slit_separation, "Slit separation [m]")->required();
    screen_cmd->add_option("--distance", screen.geometry.screen_distance, "Mask-to-screen distance [m]")->required();
    screen_cmd->add_option("--y-min", screen.y_min, "Lower screen coordinate [m]")->required();
    screen_cmd->add_option("--y-max", screen.y_max, "Upper screen coordinate [m]")->required();
    screen_cmd->add_option("--points", screen.points, "Number of samples")->capture_default_str();

    PropagateConfig propagate;
    double w1 = 0.5;
    auto* propagate_cmd = app.add_subcommand("propagate", "Degree of polarization along free-space propagation");
    propagate_cmd->add_option("--z1", propagate.pair.z1, "Rayleigh length of the H subensemble [m]")->capture_default_str();
    propagate_cmd->add_option("--z2", propagate.pair.z2, "Rayleigh length of the V subensemble [m]")->capture_default_str();
    propagate_cmd->add_option("--w1", w1, "Initial H population")->capture_default_str();
    propagate_cmd->add_option("--z-max", propagate.z_max, "Largest propagation distance [m]")->capture_default_str();
    propagate_cmd->add_option("--steps", propagate.steps, "Number of samples")->capture_default_str();

    EvolveConfig evolve;
    auto* evolve_cmd = app.add_subcommand("evolve", "Coherence and polarization decay under a dephasing channel");
    evolve_cmd->add_option("--state", evolve.state, "State JSON file")->required();
    evolve_cmd->add_option("--channel", evolve.channel, "Channel JSON file")->required();
    evolve_cmd->add_option("--gamma", evolve.gamma, "Interaction rate [1/s]")->capture_default_str();
    evolve_cmd->add_option("--t-max", evolve.t_max, "Final time [s]")->capture_default_str();
    evolve_cmd->add_option("--steps", evolve.steps, "Number of samples")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }

    try {
        const NumberFormatter fmt = NumberFormatter::from_environment();
        const OutputFormat format = format_name == "json" ? OutputFormat::Json : OutputFormat::Csv;

        Table table;
        if (metrics_cmd->parsed()) {
            table = run_metrics(metrics);
        } else if (screen_cmd->parsed()) {
            table = run_screen(screen);
        } else if (propagate_cmd->parsed()) {
            propagate.pair.w1_0 = w1;
            propagate.pair.w2_0 = 1.0 - w1;
            table = run_propagate(propagate);
        } else {
            table = run_evolve(evolve);
        }

        if (out_path.empty()) {
            write_table(out, table, format, fmt);
        } else {
            std::ofstream file(out_path);
            if (!file) throw InputError("cannot open '" + out_path + "' for writing");
            write_table(file, table, format, fmt);
        }
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    }
    return kSuccess;
}

}  // namespace cohpol::cli
