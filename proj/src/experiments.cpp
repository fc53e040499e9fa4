#include "statedist/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "statedist/pgm.hpp"
#include "statedist/rmt.hpp"
#include "statedist/sampling.hpp"
#include "statedist/spectral.hpp"

namespace statedist {

namespace {

// Runs trial(i) for i in [0, count) across up to `threads` workers and
// returns results indexed by trial, so aggregation is order-independent.
std::vector<double> parallel_trials(std::size_t count, std::size_t threads,
                                    const std::function<double(std::size_t)>& trial) {
    std::vector<double> results(count, 0.0);
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) results[i] = trial(i);
        return results;
    }
    const std::size_t workers = std::min(threads, count);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::exception_ptr error;
    std::mutex error_mutex;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < count; i += workers) results[i] = trial(i);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    return results;
}

struct MeanStd {
    double mean = 0.0;
    double std = 0.0;
};

MeanStd mean_and_sample_std(const std::vector<double>& values) {
    MeanStd out;
    for (double v : values) out.mean += v;
    out.mean /= static_cast<double>(values.size());
    if (values.size() > 1) {
        double ss = 0.0;
        for (double v : values) ss += (v - out.mean) * (v - out.mean);
        out.std = std::sqrt(ss / static_cast<double>(values.size() - 1));
    }
    return out;
}

std::vector<double> arange(double lo, double hi, double step) {
    std::vector<double> grid;
    for (int i = 0;; ++i) {
        const double v = lo + step * i;
        if (v > hi + 0.5 * step) break;
        grid.push_back(v);
    }
    return grid;
}

const char kCsvTrue[] = "true";
const char kCsvFalse[] = "false";

std::string csv_bool(bool b) { return b ? kCsvTrue : kCsvFalse; }

}  // namespace

std::vector<double> default_fig1_grid() {
    std::vector<double> grid = arange(0.1, 2.0, 0.1);
    for (double r = 3.0; r <= 10.0 + 1e-12; r += 1.0) grid.push_back(r);
    return grid;
}

std::vector<double> default_fig2_grid() { return arange(0.0, 1.0, 0.01); }

std::vector<double> default_report_grid() { return default_fig1_grid(); }

std::vector<Fig1Row> run_fig1(const ExperimentConfig& config) {
    if (config.dim < 2) throw ValidationError("fig1: dim must be >= 2");
    if (config.runs < 1) throw ValidationError("fig1: runs must be >= 1");
    const std::vector<double> grid = config.grid.empty() ? default_fig1_grid() : config.grid;
    for (double r : grid)
        if (!(r > 0.0)) throw ValidationError("fig1: grid values must be positive");

    std::vector<Fig1Row> rows;
    rows.reserve(grid.size());
    for (std::size_t gi = 0; gi < grid.size(); ++gi) {
        const double r = grid[gi];
        const auto n = static_cast<std::size_t>(
            std::max<long long>(1, std::llround(r * static_cast<double>(config.dim))));
        const std::uint64_t stream_base = gi * config.runs;
        const auto trial = [&, n](std::size_t t) {
            SeededRng rng(config.seed, stream_base + t);
            return pgm_success_pure(random_pure_ensemble(n, config.dim, rng));
        };
        const MeanStd stats =
            mean_and_sample_std(parallel_trials(config.runs, config.threads, trial));
        rows.push_back({r, expected_pgm_bound(r), stats.mean, stats.std, config.runs});
    }
    return rows;
}

std::vector<Fig2Row> run_fig2(const ExperimentConfig& config) {
    const std::vector<double> grid = config.grid.empty() ? default_fig2_grid() : config.grid;
    const double coeff = 1.0 - 64.0 / (9.0 * std::numbers::pi * std::numbers::pi);
    std::vector<Fig2Row> rows;
    rows.reserve(grid.size());
    for (double r : grid) {
        if (!(r >= 0.0 && r <= 1.0))
            throw ValidationError("fig2: grid values must lie in [0, 1]");
        const double quad = elliptic_f(r);
        const double bound = r * std::numbers::pi * std::sqrt(1.0 - r * coeff);
        rows.push_back({r, quad, bound, quad - bound});
    }
    return rows;
}

MpHistResult run_mp_hist(const ExperimentConfig& config) {
    if (config.dim < 2) throw ValidationError("mp-hist: dim must be >= 2");
    if (config.bins < 40) throw ValidationError("mp-hist: need at least 40 bins");
    double ratio = 1.0;
    if (!config.grid.empty()) {
        if (config.grid.size() != 1)
            throw ValidationError("mp-hist: grid must hold a single ratio");
        ratio = config.grid[0];
        if (!(ratio > 0.0 && ratio <= 1.0))
            throw ValidationError("mp-hist: ratio must lie in (0, 1]");
    }
    const std::size_t d = config.dim;
    const auto n = static_cast<std::size_t>(
        std::max<long long>(d, std::llround(static_cast<double>(d) / ratio)));
    const double r = static_cast<double>(d) / static_cast<double>(n);

    SeededRng rng(config.seed, 0);
    const ComplexMatrix sample = ginibre(d, n, rng);
    ComplexMatrix wishart = outer_gram_of(sample);
    wishart *= 1.0 / static_cast<double>(n);
    std::vector<double> eigs = eig_hermitian_values(wishart);
    std::sort(eigs.begin(), eigs.end());

    const double a2 = (1.0 - std::sqrt(r)) * (1.0 - std::sqrt(r));
    const double b2 = (1.0 + std::sqrt(r)) * (1.0 + std::sqrt(r));
    const double lo = std::min(a2, eigs.front());
    const double hi = std::max(b2, eigs.back());
    const double width = (hi - lo) / static_cast<double>(config.bins);

    std::vector<std::size_t> counts(config.bins, 0);
    for (double v : eigs) {
        auto bin = static_cast<std::size_t>((v - lo) / width);
        if (bin >= config.bins) bin = config.bins - 1;
        ++counts[bin];
    }

    MpHistResult result;
    result.rows.reserve(config.bins);
    const double mass = static_cast<double>(d) * width;
    for (std::size_t b = 0; b < config.bins; ++b) {
        const double center = lo + width * (static_cast<double>(b) + 0.5);
        result.rows.push_back(
            {center, static_cast<double>(counts[b]) / mass, mp_eigen_density(center, r)});
    }

    double sup = 0.0;
    for (std::size_t i = 0; i < eigs.size(); ++i) {
        const double cdf = mp_eigen_cdf(eigs[i], r);
        const double above = static_cast<double>(i + 1) / static_cast<double>(eigs.size());
        const double below = static_cast<double>(i) / static_cast<double>(eigs.size());
        sup = std::max({sup, std::abs(cdf - above), std::abs(cdf - below)});
    }
    result.sup_cdf_deviation = sup;
    return result;
}

AnalyzeResult run_analyze(const ExperimentConfig& config) {
    if (config.in_path.empty()) throw ValidationError("analyze: input path required");
    const Ensemble e = load_ensemble(config.in_path);
    AnalyzeResult result;
    if (const auto* pure = std::get_if<PureEnsemble>(&e)) {
        result.is_pure = true;
        result.pure = bound_report(*pure);
        return result;
    }
    const auto& mixed = std::get<MixedEnsemble>(e);
    result.is_pure = false;
    result.mixed.pgm_exact = pgm_success_mixed(mixed);
    result.mixed.fidelity_bound = mixed_fidelity_bound(mixed);
    result.mixed.naive_bound = naive_mixed_bound(mixed);
    double guessing = 0.0;
    for (double p : mixed.probs) guessing += p * p;
    result.mixed.guessing_baseline = guessing;
    result.mixed.fidelity_ok = result.mixed.fidelity_bound <= result.mixed.pgm_exact + 1e-9;
    result.mixed.naive_exceeds_pgm = result.mixed.naive_bound > result.mixed.pgm_exact + 1e-9;
    return result;
}

std::vector<OracleIdRow> run_oracle_id(const ExperimentConfig& config) {
    if (config.n_bits < 1 || config.n_bits > 12)
        throw ValidationError("oracle-id: bits must lie in [1, 12]");
    if (config.runs < 1) throw ValidationError("oracle-id: runs must be >= 1");
    const std::size_t big_d = std::size_t{1} << config.n_bits;
    const std::vector<double> grid = config.grid.empty() ? std::vector<double>{1.0} : config.grid;

    std::vector<OracleIdRow> rows;
    rows.reserve(grid.size());
    for (std::size_t gi = 0; gi < grid.size(); ++gi) {
        const double r = grid[gi];
        if (!(r > 0.0)) throw ValidationError("oracle-id: grid values must be positive");
        const auto big_n = static_cast<std::size_t>(
            std::max<long long>(1, std::llround(r * static_cast<double>(big_d))));
        const std::uint64_t stream_base = gi * config.runs;
        const auto trial = [&, big_n](std::size_t t) {
            SeededRng rng(config.seed, stream_base + t);
            return pgm_success_pure(random_oracle_ensemble(big_n, config.n_bits, rng));
        };
        const std::vector<double> values =
            parallel_trials(config.runs, config.threads, trial);
        const MeanStd stats = mean_and_sample_std(values);
        const double tail = cube_tail(big_n, big_d, config.eps);
        OracleIdRow row;
        row.big_n = big_n;
        row.big_d = big_d;
        row.bound = expected_pgm_bound(static_cast<double>(big_n) / static_cast<double>(big_d));
        row.empirical_mean = stats.mean;
        row.empirical_min = *std::min_element(values.begin(), values.end());
        row.tail_at_eps = tail;
        row.tail_at_eps_clipped = std::min(tail, 1.0);
        row.runs = config.runs;
        rows.push_back(row);
    }
    return rows;
}

ReportResult run_report(const ExperimentConfig& config) {
    if (config.dim < 1) throw ValidationError("report: dim must be >= 1");
    const std::vector<double> grid = config.grid.empty() ? default_report_grid() : config.grid;
    ReportResult result;
    result.rows.reserve(grid.size());
    for (double r : grid) {
        if (!(r > 0.0)) throw ValidationError("report: grid values must be positive");
        const auto n = static_cast<std::size_t>(
            std::max<long long>(1, std::llround(r * static_cast<double>(config.dim))));
        const double sphere = sphere_tail(n, config.dim, config.eps);
        const double cube = cube_tail(n, config.dim, config.eps);
        result.rows.push_back({r, n, expected_pgm_bound(r), sphere, std::min(sphere, 1.0),
                               cube, std::min(cube, 1.0)});
    }
    result.break_even = break_even_ratio();
    return result;
}

// --- rendering ---------------------------------------------------------------

namespace {

std::string join_csv_row(const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) line += ',';
        line += cells[i];
    }
    line += '\n';
    return line;
}

// minimal JSON emitters; numbers use the same 17-digit form as CSV
std::string json_field(const std::string& name, const std::string& value, bool quote) {
    return "\"" + name + "\": " + (quote ? "\"" + value + "\"" : value);
}

struct JsonRows {
    std::string command;
    std::vector<std::string> rows;        // rendered row objects
    std::vector<std::string> footers;     // rendered "name": value entries

    std::string str() const {
        std::string out = "{\n  \"command\": \"" + command + "\",\n  \"rows\": [\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            out += "    " + rows[i];
            out += (i + 1 < rows.size()) ? ",\n" : "\n";
        }
        out += "  ]";
        for (const auto& f : footers) out += ",\n  " + f;
        out += "\n}\n";
        return out;
    }
};

std::string json_object(const std::vector<std::string>& fields) {
    std::string out = "{";
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ", ";
        out += fields[i];
    }
    out += "}";
    return out;
}

}  // namespace

std::string render_fig1(const std::vector<Fig1Row>& rows, OutputFormat format) {
    if (format == OutputFormat::csv) {
        std::string out = "r,bound,empirical_mean,empirical_std,runs\n";
        for (const auto& row : rows)
            out += join_csv_row({format_decimal(row.r), format_decimal(row.bound),
                                 format_decimal(row.empirical_mean),
                                 format_decimal(row.empirical_std), std::to_string(row.runs)});
        return out;
    }
    JsonRows doc;
    doc.command = "fig1";
    for (const auto& row : rows)
        doc.rows.push_back(json_object({
            json_field("r", format_decimal(row.r), false),
            json_field("bound", format_decimal(row.bound), false),
            json_field("empirical_mean", format_decimal(row.empirical_mean), false),
            json_field("empirical_std", format_decimal(row.empirical_std), false),
            json_field("runs", std::to_string(row.runs), false),
        }));
    return doc.str();
}

std::string render_fig2(const std::vector<Fig2Row>& rows, OutputFormat format) {
    if (format == OutputFormat::csv) {
        std::string out = "r,quadrature_value,bound_value,error\n";
        for (const auto& row : rows)
            out += join_csv_row({format_decimal(row.r), format_decimal(row.quadrature_value),
                                 format_decimal(row.bound_value), format_decimal(row.error)});
        return out;
    }
    JsonRows doc;
    doc.command = "fig2";
    for (const auto& row : rows)
        doc.rows.push_back(json_object({
            json_field("r", format_decimal(row.r), false),
            json_field("quadrature_value", format_decimal(row.quadrature_value), false),
            json_field("bound_value", format_decimal(row.bound_value), false),
            json_field("error", format_decimal(row.error), false),
        }));
    return doc.str();
}

std::string render_mp_hist(const MpHistResult& result, OutputFormat format) {
    if (format == OutputFormat::csv) {
        std::string out = "bin_center,empirical_density,mp_density\n";
        for (const auto& row : result.rows)
            out += join_csv_row({format_decimal(row.bin_center),
                                 format_decimal(row.empirical_density),
                                 format_decimal(row.mp_density)});
        out += "# sup_cdf_deviation," + format_decimal(result.sup_cdf_deviation) + "\n";
        return out;
    }
    JsonRows doc;
    doc.command = "mp-hist";
    for (const auto& row : result.rows)
        doc.rows.push_back(json_object({
            json_field("bin_center", format_decimal(row.bin_center), false),
            json_field("empirical_density", format_decimal(row.empirical_density), false),
            json_field("mp_density", format_decimal(row.mp_density), false),
        }));
    doc.footers.push_back(
        json_field("sup_cdf_deviation", format_decimal(result.sup_cdf_deviation), false));
    return doc.str();
}

std::string render_analyze(const AnalyzeResult& result, OutputFormat format) {
    if (format == OutputFormat::csv) {
        if (result.is_pure) {
            std::string out =
                "kind,pgm_exact,inner_product_bound,eigenvalue_bound,guessing_baseline,"
                "inner_product_ok,eigenvalue_ok\n";
            const auto& r = result.pure;
            out += join_csv_row({"pure", format_decimal(r.pgm_exact),
                                 format_decimal(r.inner_product_bound),
                                 format_decimal(r.eigenvalue_bound),
                                 format_decimal(r.guessing_baseline),
                                 csv_bool(r.inner_product_ok), csv_bool(r.eigenvalue_ok)});
            return out;
        }
        std::string out =
            "kind,pgm_exact,fidelity_bound,naive_bound,guessing_baseline,fidelity_ok,"
            "naive_exceeds_pgm\n";
        const auto& r = result.mixed;
        out += join_csv_row({"mixed", format_decimal(r.pgm_exact),
                             format_decimal(r.fidelity_bound), format_decimal(r.naive_bound),
                             format_decimal(r.guessing_baseline), csv_bool(r.fidelity_ok),
                             csv_bool(r.naive_exceeds_pgm)});
        return out;
    }
    JsonRows doc;
    doc.command = "analyze";
    if (result.is_pure) {
        const auto& r = result.pure;
        doc.rows.push_back(json_object({
            json_field("kind", "pure", true),
            json_field("pgm_exact", format_decimal(r.pgm_exact), false),
            json_field("inner_product_bound", format_decimal(r.inner_product_bound), false),
            json_field("eigenvalue_bound", format_decimal(r.eigenvalue_bound), false),
            json_field("guessing_baseline", format_decimal(r.guessing_baseline), false),
            json_field("inner_product_ok", r.inner_product_ok ? "true" : "false", false),
            json_field("eigenvalue_ok", r.eigenvalue_ok ? "true" : "false", false),
        }));
    } else {
        const auto& r = result.mixed;
        doc.rows.push_back(json_object({
            json_field("kind", "mixed", true),
            json_field("pgm_exact", format_decimal(r.pgm_exact), false),
            json_field("fidelity_bound", format_decimal(r.fidelity_bound), false),
            json_field("naive_bound", format_decimal(r.naive_bound), false),
            json_field("guessing_baseline", format_decimal(r.guessing_baseline), false),
            json_field("fidelity_ok", r.fidelity_ok ? "true" : "false", false),
            json_field("naive_exceeds_pgm", r.naive_exceeds_pgm ? "true" : "false", false),
        }));
    }
    return doc.str();
}

std::string render_oracle_id(const std::vector<OracleIdRow>& rows, OutputFormat format) {
    if (format == OutputFormat::csv) {
        std::string out =
            "N,D,bound,empirical_mean,empirical_min,tail_at_eps,tail_at_eps_clipped,runs\n";
        for (const auto& row : rows)
            out += join_csv_row({std::to_string(row.big_n), std::to_string(row.big_d),
                                 format_decimal(row.bound), format_decimal(row.empirical_mean),
                                 format_decimal(row.empirical_min),
                                 format_decimal(row.tail_at_eps),
                                 format_decimal(row.tail_at_eps_clipped),
                                 std::to_string(row.runs)});
        return out;
    }
    JsonRows doc;
    doc.command = "oracle-id";
    for (const auto& row : rows)
        doc.rows.push_back(json_object({
            json_field("N", std::to_string(row.big_n), false),
            json_field("D", std::to_string(row.big_d), false),
            json_field("bound", format_decimal(row.bound), false),
            json_field("empirical_mean", format_decimal(row.empirical_mean), false),
            json_field("empirical_min", format_decimal(row.empirical_min), false),
            json_field("tail_at_eps", format_decimal(row.tail_at_eps), false),
            json_field("tail_at_eps_clipped", format_decimal(row.tail_at_eps_clipped), false),
            json_field("runs", std::to_string(row.runs), false),
        }));
    return doc.str();
}

std::string render_report(const ReportResult& result, OutputFormat format) {
    if (format == OutputFormat::csv) {
        std::string out =
            "r,n,expected_pgm_bound,sphere_tail,sphere_tail_clipped,cube_tail,"
            "cube_tail_clipped\n";
        for (const auto& row : result.rows)
            out += join_csv_row({format_decimal(row.r), std::to_string(row.n),
                                 format_decimal(row.expected_bound),
                                 format_decimal(row.sphere_tail_raw),
                                 format_decimal(row.sphere_tail_clipped),
                                 format_decimal(row.cube_tail_raw),
                                 format_decimal(row.cube_tail_clipped)});
        out += "# break_even_ratio," + format_decimal(result.break_even) + "\n";
        return out;
    }
    JsonRows doc;
    doc.command = "report";
    for (const auto& row : result.rows)
        doc.rows.push_back(json_object({
            json_field("r", format_decimal(row.r), false),
            json_field("n", std::to_string(row.n), false),
            json_field("expected_pgm_bound", format_decimal(row.expected_bound), false),
            json_field("sphere_tail", format_decimal(row.sphere_tail_raw), false),
            json_field("sphere_tail_clipped", format_decimal(row.sphere_tail_clipped), false),
            json_field("cube_tail", format_decimal(row.cube_tail_raw), false),
            json_field("cube_tail_clipped", format_decimal(row.cube_tail_clipped), false),
        }));
    doc.footers.push_back(
        json_field("break_even_ratio", format_decimal(result.break_even), false));
    return doc.str();
}

std::string run_command(const std::string& command, const ExperimentConfig& config) {
    if (command == "fig1") return render_fig1(run_fig1(config), config.format);
    if (command == "fig2") return render_fig2(run_fig2(config), config.format);
    if (command == "mp-hist") return render_mp_hist(run_mp_hist(config), config.format);
    if (command == "analyze") return render_analyze(run_analyze(config), config.format);
    if (command == "oracle-id") return render_oracle_id(run_oracle_id(config), config.format);
    if (command == "report") return render_report(run_report(config), config.format);
    throw ValidationError("unknown command: " + command);
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
    if (!out) throw std::runtime_error("failed writing output file: " + path);
}

}  // namespace statedist
