#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <ostream>
#include <thread>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "casimir/casimir.hpp"

namespace casimir::cli {

namespace {

struct Options {
    std::string m1 = "perfect";
    std::string m2 = "perfect";
    double length = 1.0;
    double tol = 1e-10;
    std::string method = "quad";
    std::string rule = "adaptive";
    int n_max = 1024;
    std::string format = "csv";
    int jobs = 1;
    bool si = false;
    double length_unit = 1.0;
    bool allow_noncausal = false;

    // sweep
    double start = 0.5;
    double stop = 4.0;
    int count = 8;
    std::string spacing = "linear";

    // modes
    double la = 1.0;
    double lb = 2.0;
    std::vector<double> boxes{500.0, 1000.0, 2000.0};
    double kmax_l = 2000.0;
    double kmax = 0.0;
    int resolution = 2;
    std::string cutoff = "gaussian";

    // validate
    std::string model;
    double k_lo = 1e-3;
    double k_hi = 1e3;
    int points = 200;
};

using Field = std::variant<double, std::string>;
using Record = std::vector<std::pair<std::string, Field>>;

std::string format_number(double v) {
    if (v == 0.0) v = 0.0;  // no "-0"
    if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10e", v);
    return buf;
}

std::string csv_field(const Field& f) {
    if (const double* d = std::get_if<double>(&f)) return format_number(*d);
    const std::string& s = std::get<std::string>(f);
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string o = "\"";
    for (char c : s) {
        if (c == '"') o += '"';
        o += c;
    }
    return o + "\"";
}

void write_csv(std::ostream& out, const std::vector<std::string>& header, const std::vector<Record>& rows) {
    for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
    out << '\n';
    for (const Record& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i].second);
        out << '\n';
    }
}

// One object per line; numbers keep the CSV formatting, non-finite ones become null.
void write_json(std::ostream& out, const std::vector<Record>& rows) {
    out << "[";
    for (std::size_t r = 0; r < rows.size(); ++r) {
        out << (r ? ",\n " : "\n ") << "{";
        for (std::size_t i = 0; i < rows[r].size(); ++i) {
            const auto& [key, value] = rows[r][i];
            out << (i ? "," : "") << nlohmann::json(key).dump() << ":";
            if (const double* d = std::get_if<double>(&value)) {
                out << (std::isfinite(*d) ? format_number(*d) : "null");
            } else {
                out << nlohmann::json(std::get<std::string>(value)).dump();
            }
        }
        out << "}";
    }
    out << (rows.empty() ? "]\n" : "\n]\n");
}

void emit(std::ostream& out, const Options& opt, const std::vector<std::string>& header,
          const std::vector<Record>& rows) {
    if (opt.format == "json") {
        write_json(out, rows);
    } else {
        write_csv(out, header, rows);
    }
}

QuadratureSpec quadrature(const Options& opt) {
    QuadratureSpec spec;
    spec.rel_tol = opt.tol;
    spec.rule = opt.rule == "laguerre" ? QuadratureRule::GaussLaguerre : QuadratureRule::Adaptive;
    spec.allow_noncausal = opt.allow_noncausal;
    return spec;
}

CavityConfig cavity(const Options& opt, double length) {
    return {parse_model_spec(opt.m1), parse_model_spec(opt.m2), length};
}

ForceResult force(const Options& opt, const CavityConfig& config) {
    if (opt.method == "series") return casimir_force_series(config, opt.n_max, quadrature(opt));
    return casimir_force(config, quadrature(opt));
}

EnergyResult energy(const Options& opt, const CavityConfig& config) {
    if (opt.method == "series") return casimir_energy_series(config, opt.n_max, quadrature(opt));
    return casimir_energy(config, quadrature(opt));
}

double out_length(const Options& opt, double l) { return opt.si ? units::length_to_si(l, opt.length_unit) : l; }
double out_force(const Options& opt, double f) { return opt.si ? units::force_to_si(f, opt.length_unit) : f; }
double out_energy(const Options& opt, double e) { return opt.si ? units::energy_to_si(e, opt.length_unit) : e; }
std::string unit_label(const Options& opt) { return opt.si ? "SI" : "reduced"; }

// Outcome of one task run on a worker thread.
struct Failure {
    std::string message;
    int code;
};

int exit_code_for(const Error& e) { return e.is_numerical() ? kNumericalFailure : kUsageError; }

// Runs tasks[i] on up to `jobs` threads; results come back in input order.
template <class T>
std::vector<std::variant<T, Failure>> run_parallel(const std::vector<std::function<T()>>& tasks, int jobs) {
    std::vector<std::variant<T, Failure>> results(tasks.size(), Failure{"not run", kNumericalFailure});
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            try {
                results[i] = tasks[i]();
            } catch (const Error& e) {
                results[i] = Failure{e.what(), exit_code_for(e)};
            } catch (const std::exception& e) {
                results[i] = Failure{e.what(), kNumericalFailure};
            }
        }
    };
    const std::size_t threads = std::min<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), tasks.size());
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (std::thread& t : pool) t.join();
    return results;
}

int cmd_force(const Options& opt, std::ostream& out) {
    const CavityConfig config = cavity(opt, opt.length);
    const ForceResult f = force(opt, config);
    emit(out, opt, {"L", "force", "force_err", "method", "units"},
         {{{"L", out_length(opt, opt.length)},
           {"force", out_force(opt, f.value)},
           {"force_err", out_force(opt, f.error)},
           {"method", f.method},
           {"units", unit_label(opt)}}});
    return kSuccess;
}

int cmd_energy(const Options& opt, std::ostream& out) {
    const CavityConfig config = cavity(opt, opt.length);
    const EnergyResult e = energy(opt, config);
    emit(out, opt, {"L", "energy", "energy_err", "method", "units"},
         {{{"L", out_length(opt, opt.length)},
           {"energy", out_energy(opt, e.value)},
           {"energy_err", out_energy(opt, e.error)},
           {"method", e.method},
           {"units", unit_label(opt)}}});
    return kSuccess;
}

std::vector<double> sweep_points(const Options& opt) {
    if (!(opt.start > 0.0) || !(opt.stop > opt.start) || opt.count < 2) {
        throw InvalidParameter("sweep needs 0 < start < stop and count >= 2");
    }
    std::vector<double> ls(static_cast<std::size_t>(opt.count));
    for (int i = 0; i < opt.count; ++i) {
        const double u = static_cast<double>(i) / (opt.count - 1);
        ls[i] = opt.spacing == "log" ? opt.start * std::pow(opt.stop / opt.start, u)
                                     : opt.start + u * (opt.stop - opt.start);
    }
    ls.back() = opt.stop;
    return ls;
}

int cmd_sweep(const Options& opt, std::ostream& out, std::ostream& err) {
    const std::vector<double> ls = sweep_points(opt);
    // Parse once up front so malformed specs are a usage error, not N failures.
    const CavityConfig base = cavity(opt, ls.front());

    std::vector<std::function<Record()>> tasks;
    for (double l : ls) {
        tasks.emplace_back([&opt, &base, l] {
            const CavityConfig config = base.with_distance(l);
            const ForceResult f = force(opt, config);
            const EnergyResult e = energy(opt, config);
            return Record{{"L", out_length(opt, l)},
                          {"force", out_force(opt, f.value)},
                          {"energy", out_energy(opt, e.value)},
                          {"force_err", out_force(opt, f.error)},
                          {"energy_err", out_energy(opt, e.error)}};
        });
    }

    std::vector<Record> rows;
    int code = kSuccess;
    const auto results = run_parallel(tasks, opt.jobs);
    for (std::size_t i = 0; i < results.size(); ++i) {
        if (const Record* r = std::get_if<Record>(&results[i])) {
            rows.push_back(*r);
        } else {
            const Failure& f = std::get<Failure>(results[i]);
            err << "error: L = " << format_number(ls[i]) << ": " << f.message << '\n';
            code = std::max(code, f.code);
        }
    }
    emit(out, opt, {"L", "force", "energy", "force_err", "energy_err"}, rows);
    return code;
}

int cmd_modes(const Options& opt, std::ostream& out, std::ostream& err) {
    const ScattererModel left = parse_model_spec(opt.m1);
    const ScattererModel right = parse_model_spec(opt.m2);
    if (opt.boxes.empty()) throw InvalidParameter("modes needs at least one box length");
    const double k_max = opt.kmax > 0.0 ? opt.kmax : opt.kmax_l / std::min(opt.la, opt.lb);

    QuadratureSpec spec = quadrature(opt);
    spec.allow_noncausal = true;
    const double integral =
        opt.la == opt.lb ? 0.0
                         : casimir_energy(CavityConfig(left, right, opt.la), spec).value -
                               casimir_energy(CavityConfig(left, right, opt.lb), spec).value;

    std::vector<std::function<double()>> tasks;
    for (double box_length : opt.boxes) {
        tasks.emplace_back([&, box_length] {
            BoxSpec box;
            box.length = box_length;
            box.k_max = k_max;
            box.resolution = opt.resolution;
            box.cutoff = opt.cutoff == "sharp" ? CutoffProfile::Sharp : CutoffProfile::Gaussian;
            return energy_difference_oracle(left, right, opt.la, opt.lb, box);
        });
    }

    std::vector<Record> rows;
    std::vector<double> deviations;
    int code = kSuccess;
    const auto results = run_parallel(tasks, opt.jobs);
    for (std::size_t i = 0; i < results.size(); ++i) {
        if (const double* oracle = std::get_if<double>(&results[i])) {
            const double diff = std::abs(*oracle - integral);
            const double deviation = integral != 0.0 ? diff / std::abs(integral) : diff;
            deviations.push_back(deviation);
            rows.push_back({{"box", out_length(opt, opt.boxes[i])},
                            {"k_max", opt.si ? k_max / opt.length_unit : k_max},
                            {"oracle", out_energy(opt, *oracle)},
                            {"integral", out_energy(opt, integral)},
                            {"deviation", deviation}});
        } else {
            const Failure& f = std::get<Failure>(results[i]);
            err << "error: box " << format_number(opt.boxes[i]) << ": " << f.message << '\n';
            code = std::max(code, f.code);
        }
    }
    emit(out, opt, {"box", "k_max", "oracle", "integral", "deviation"}, rows);

    if (deviations.size() >= 2) {
        int decreasing = 0;
        for (std::size_t i = 1; i < deviations.size(); ++i) decreasing += deviations[i] <= deviations[i - 1];
        err << "trend: deviation decreased in " << decreasing << " of " << deviations.size() - 1
            << " box refinements\n";
    }
    return code;
}

int cmd_validate(const Options& opt, std::ostream& out, std::ostream& err) {
    const ScattererModel m = parse_model_spec(opt.model);
    if (!(opt.k_lo > 0.0) || !(opt.k_hi > opt.k_lo) || opt.points < 2) {
        throw InvalidParameter("validate needs 0 < kmin < kmax and points >= 2");
    }
    double unitarity = 0.0, det_identity = 0.0, round_trip_residual = 0.0;
    bool transfer_defined = true;
    for (int i = 0; i < opt.points; ++i) {
        const double k = opt.k_lo * std::pow(opt.k_hi / opt.k_lo, static_cast<double>(i) / (opt.points - 1));
        const ScatteringMatrix s = eval(m, k);
        unitarity = std::max(unitarity, unitarity_residual(s));
        det_identity = std::max(det_identity, det_identity_residual(s));
        try {
            const ScatteringMatrix back = transfer_to_s(s_to_transfer(s));
            round_trip_residual = std::max(round_trip_residual, max_abs_diff(back.matrix(), s.matrix()));
        } catch (const DegenerateConversion&) {
            transfer_defined = false;
        }
    }
    if (!transfer_defined) {
        err << "note: transfer matrix undefined for '" << m.spec() << "' (t = 0); S<->T round trip skipped\n";
        round_trip_residual = std::nan("");
    }
    if (!m.causal()) err << "note: '" << m.spec() << "' is flagged non-causal\n";

    constexpr double kLimit = 1e-10;
    const bool ok = unitarity < kLimit && det_identity < kLimit && (!transfer_defined || round_trip_residual < kLimit);
    emit(out, opt, {"model", "unitarity", "det_identity", "roundtrip", "causal", "symmetric", "status"},
         {{{"model", m.spec()},
           {"unitarity", unitarity},
           {"det_identity", det_identity},
           {"roundtrip", round_trip_residual},
           {"causal", std::string(m.causal() ? "yes" : "no")},
           {"symmetric", std::string(m.symmetric() ? "yes" : "no")},
           {"status", std::string(ok ? "ok" : "violation")}}});
    return ok ? kSuccess : kNumericalFailure;
}

void add_output_flags(CLI::App* sub, Options& opt) {
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_flag("--si", opt.si, "Report SI values (metres, newtons, joules)");
    sub->add_option("--L-unit", opt.length_unit, "Length unit in metres used with --si")
        ->check(CLI::PositiveNumber);
}

void add_model_flags(CLI::App* sub, Options& opt) {
    sub->add_option("--m1", opt.m1, "Left mirror model spec");
    sub->add_option("--m2", opt.m2, "Right mirror model spec");
    sub->add_option("--tol", opt.tol, "Relative tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--method", opt.method, "Integration method")->check(CLI::IsMember({"quad", "series"}));
    sub->add_option("--rule", opt.rule, "Quadrature rule for --method quad")
        ->check(CLI::IsMember({"adaptive", "laguerre"}));
    sub->add_option("--nmax", opt.n_max, "Series terms for --method series")->check(CLI::Range(8, 1 << 20));
    sub->add_flag("--allow-noncausal", opt.allow_noncausal, "Rotate the contour even for non-causal models");
    sub->add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::Range(1, 256));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"One-dimensional Casimir energies and forces from scattering data", "casimir"};
    app.require_subcommand(1);

    CLI::App* force_cmd = app.add_subcommand("force", "Casimir force between two mirrors");
    CLI::App* energy_cmd = app.add_subcommand("energy", "Casimir energy of two mirrors");
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "Force and energy over a range of distances");
    CLI::App* modes_cmd = app.add_subcommand("modes", "Finite-box mode-sum check of energy differences");
    CLI::App* validate_cmd = app.add_subcommand("validate", "Unitarity and determinant checks for one model");

    for (CLI::App* sub : {force_cmd, energy_cmd}) {
        add_model_flags(sub, opt);
        add_output_flags(sub, opt);
        sub->add_option("--L", opt.length, "Mirror distance")->check(CLI::PositiveNumber);
    }

    add_model_flags(sweep_cmd, opt);
    add_output_flags(sweep_cmd, opt);
    sweep_cmd->add_option("--start", opt.start, "First distance");
    sweep_cmd->add_option("--stop", opt.stop, "Last distance");
    sweep_cmd->add_option("--count", opt.count, "Number of distances");
    sweep_cmd->add_option("--spacing", opt.spacing, "Distance spacing")->check(CLI::IsMember({"linear", "log"}));

    add_model_flags(modes_cmd, opt);
    add_output_flags(modes_cmd, opt);
    modes_cmd->add_option("--La", opt.la, "First distance")->check(CLI::PositiveNumber);
    modes_cmd->add_option("--Lb", opt.lb, "Second distance")->check(CLI::PositiveNumber);
    modes_cmd->add_option("--box", opt.boxes, "Box lengths")->delimiter(',');
    modes_cmd->add_option("--kmax-L", opt.kmax_l, "Cutoff times the smaller distance")->check(CLI::PositiveNumber);
    modes_cmd->add_option("--kmax", opt.kmax, "Absolute wavenumber cutoff (overrides --kmax-L)")
        ->check(CLI::PositiveNumber);
    modes_cmd->add_option("--resolution", opt.resolution, "Phase samples per mode spacing")->check(CLI::Range(1, 64));
    modes_cmd->add_option("--cutoff", opt.cutoff, "Cutoff profile")->check(CLI::IsMember({"gaussian", "sharp"}));

    validate_cmd->add_option("model", opt.model, "Model spec")->required();
    validate_cmd->add_option("--kmin", opt.k_lo, "Smallest wavenumber");
    validate_cmd->add_option("--kmax", opt.k_hi, "Largest wavenumber");
    validate_cmd->add_option("--points", opt.points, "Log-spaced grid points");
    add_output_flags(validate_cmd, opt);

    std::vector<const char*> argv{"casimir"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    try {
        if (force_cmd->parsed()) return cmd_force(opt, out);
        if (energy_cmd->parsed()) return cmd_energy(opt, out);
        if (sweep_cmd->parsed()) return cmd_sweep(opt, out, err);
        if (modes_cmd->parsed()) return cmd_modes(opt, out, err);
        return cmd_validate(opt, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kNumericalFailure;
    }
}

}  // namespace casimir::cli
