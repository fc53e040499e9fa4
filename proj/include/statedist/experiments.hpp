// Batch experiment runners behind the CLI. Every runner is a pure function
// of its configuration: rerunning with the same seed produces byte-identical
// output, whether trials execute serially or across threads (results are
// merged by trial index before any aggregation).
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "statedist/bounds.hpp"

namespace statedist {

enum class OutputFormat { csv, json };

struct ExperimentConfig {
    std::uint64_t seed = 1;
    std::size_t dim = 50;
    std::vector<double> grid;  // per-command default when empty
    std::size_t runs = 10;
    double eps = 0.1;
    std::size_t n_bits = 8;  // oracle-id domain size exponent, D = 2^n_bits
    std::size_t bins = 50;   // mp-hist histogram resolution
    std::string in_path;
    std::string out_path;  // empty -> stdout
    OutputFormat format = OutputFormat::csv;
    std::size_t threads = 1;
};

// Default r grids following the published panels.
std::vector<double> default_fig1_grid();    // 0.1 .. 2.0 step 0.1, then 3 .. 10 step 1
std::vector<double> default_fig2_grid();    // 0 .. 1 step 0.01
std::vector<double> default_report_grid();  // same as fig1

struct Fig1Row {
    double r = 0.0;
    double bound = 0.0;
    double empirical_mean = 0.0;
    double empirical_std = 0.0;  // sample standard deviation; 0 for a single run
    std::size_t runs = 0;
};
std::vector<Fig1Row> run_fig1(const ExperimentConfig& config);

struct Fig2Row {
    double r = 0.0;
    double quadrature_value = 0.0;
    double bound_value = 0.0;
    double error = 0.0;  // quadrature_value - bound_value, nonnegative in theory
};
std::vector<Fig2Row> run_fig2(const ExperimentConfig& config);

struct MpHistRow {
    double bin_center = 0.0;
    double empirical_density = 0.0;
    double mp_density = 0.0;
};
struct MpHistResult {
    std::vector<MpHistRow> rows;
    double sup_cdf_deviation = 0.0;
};
MpHistResult run_mp_hist(const ExperimentConfig& config);

struct MixedBoundReport {
    double pgm_exact = 0.0;
    double fidelity_bound = 0.0;
    double naive_bound = 0.0;
    double guessing_baseline = 0.0;
    bool fidelity_ok = false;        // fidelity_bound <= pgm_exact + 1e-9
    bool naive_exceeds_pgm = false;  // the naive formula overshot P^pgm
};
struct AnalyzeResult {
    bool is_pure = false;
    BoundReport pure;        // populated when is_pure
    MixedBoundReport mixed;  // populated otherwise
};
AnalyzeResult run_analyze(const ExperimentConfig& config);

struct OracleIdRow {
    std::size_t big_n = 0;  // ensemble size N
    std::size_t big_d = 0;  // oracle dimension D = 2^n_bits
    double bound = 0.0;
    double empirical_mean = 0.0;
    double empirical_min = 0.0;
    double tail_at_eps = 0.0;
    double tail_at_eps_clipped = 0.0;
    std::size_t runs = 0;
};
std::vector<OracleIdRow> run_oracle_id(const ExperimentConfig& config);

struct ReportRow {
    double r = 0.0;
    std::size_t n = 0;
    double expected_bound = 0.0;
    double sphere_tail_raw = 0.0;
    double sphere_tail_clipped = 0.0;
    double cube_tail_raw = 0.0;
    double cube_tail_clipped = 0.0;
};
struct ReportResult {
    std::vector<ReportRow> rows;
    double break_even = 0.0;
};
ReportResult run_report(const ExperimentConfig& config);

// Renderers; CSV uses "\n" line endings, a header row, and 17-significant-
// digit decimals. JSON mirrors the same fields.
std::string render_fig1(const std::vector<Fig1Row>& rows, OutputFormat format);
std::string render_fig2(const std::vector<Fig2Row>& rows, OutputFormat format);
std::string render_mp_hist(const MpHistResult& result, OutputFormat format);
std::string render_analyze(const AnalyzeResult& result, OutputFormat format);
std::string render_oracle_id(const std::vector<OracleIdRow>& rows, OutputFormat format);
std::string render_report(const ReportResult& result, OutputFormat format);

// Runs the named command and returns the rendered output.
std::string run_command(const std::string& command, const ExperimentConfig& config);

void write_text_file(const std::string& path, const std::string& text);

}  // namespace statedist
