#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fct::model {

/*
 * Heuristic failure-probability model.  Everything here is double
 * precision evaluated in log space; the exactness requirements live in
 * the solver, not in the model.
 */
struct ModelParams {
    double landau_ramanujan_k = 0.76422365358922;  // displayed as 0.764
    double usable_divisor_fraction = 1.0 / 3.0;
    double orbit_constant = 2.0;
};

// P(f1 fails) ~ K / sqrt(ln p)
double p_f1(double ln_p, const ModelParams& params = {});

// P(f2 fails | first M sources) << (1/M)^{fraction * ln N}
double p_f2_truncated(std::uint32_t depth_m, double ln_n, const ModelParams& params = {});

// P(f2 fails | full orbit) << (2/sqrt(p))^{fraction * ln p}
double p_f2_full(double ln_p, const ModelParams& params = {});

// P(f0 fails | M sources) << ((p - M)/p)^{(M * fraction) * ln p}
double p_f0(std::uint32_t depth_m, double ln_p, const ModelParams& params = {});

struct ExpectedFailures {
    double value;
    bool in_regime;  // (1 - 2 ln2 / ln p) > 0.5, i.e. ln p > 4 ln 2
};

// E(N) << N exp(-(ln p)^2 / 12); flagged out-of-regime below the validity
// threshold instead of silently extrapolating.
ExpectedFailures expected_failures(double sample_n, double ln_p);

// Truncated-search variant E(N) << N (1/M)^{fraction * ln p}.
double expected_failures_truncated(double sample_n, double ln_p, std::uint32_t depth_m,
                                   const ModelParams& params = {});

// N exp(-((ln N)^{2/3}) / c), the comparison bound taken verbatim with the
// natural logarithm.  See vaughan_sweep for the interpretation search.
double vaughan_bound(double sample_n, double c = 1.0);

struct VaughanInterpretation {
    std::string log_base;    // "ln", "log10", "log2", or "(2/3)*ln R" for the matched form
    std::string n_choice;    // "sample" or "range"
    double value;
    double rel_error_vs_printed;
};

// Sweeps {ln, log10, log2} x {N = sample, N = range} against a printed
// reference value, plus the one reading that actually reproduces the
// reference column: E = N_sample * range^{-2/3}.
std::vector<VaughanInterpretation> vaughan_sweep(double sample_n, double range,
                                                 double printed_value);

// Which exponent drives the Borel-Cantelli tail term.
enum class TailBound {
    simplified,      // exp(-(ln p)^2 / 12), the large-p simplification
    pre_simplified,  // exp(-(ln p)^2/6 + (ln2/3) ln p), valid from small p
};

// Partial sum of the failure-probability tail over primes p <= x_max.
// Exact prime enumeration below 1e8, logarithmic-integral density above.
double borel_cantelli_partial_sum(double x_max, TailBound form = TailBound::pre_simplified);

struct TableRow {
    std::uint32_t depth_m;
    double range_exp10;   // range = 10^range_exp10
    double sample_exp10;  // N = 10^sample_exp10
    double fct_expected;
    double vaughan_verbatim;
    double vaughan_matched;  // N_sample * range^{-2/3}
};

std::vector<TableRow> table_compare(
    const std::vector<std::tuple<std::uint32_t, double, double>>& rows);

// Aligned text rendering of table_compare plus the interpretation notes.
std::string render_table(const std::vector<TableRow>& rows);

}  // namespace fct::model
