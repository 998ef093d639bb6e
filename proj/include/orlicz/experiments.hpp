#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orlicz/musielak.hpp"
#include "orlicz/sampled_function.hpp"
#include "orlicz/verify.hpp"

namespace orlicz::experiments {

using json = nlohmann::ordered_json;

struct ReportRow {
    std::string label;  // empty for single-group reports
    double parameter = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;
};

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
};

struct ExperimentReport {
    std::string name;
    json params;
    std::vector<ReportRow> rows;
    std::optional<LinearFit> fit;
    std::vector<verify::CheckVerdict> verdicts;
    long long runtime_ms = 0;

    bool all_passed() const;
    json to_json() const;
    std::string to_csv() const;
    std::string to_tsv_plot() const;
    static ExperimentReport from_json(const json& j);
};

/// Indicator family with the analytic maximal oracle: rhs = int_B0 Psi(x, Mf)
/// vs lhs = 2 log log(1/delta); one grid cross-validation row at delta = 2^-8.
ExperimentReport delta_scaling(std::span<const double> deltas,
                               const MusielakGauge& gauge, int n);

/// Arc-spike family on the torus: Psi0 functional of the Poisson maximal
/// function vs the L log log L functional, plus the pointwise
/// poisson >= c * hl comparison.
ExperimentReport periodic_identification(std::span<const SampledFunction> family,
                                         std::span<const double> rs);

enum class SpikeKind { antisymmetric, one_signed };

/// Truncated H^log functional of the smooth maximal function split into the
/// 2B part and the tail part; asserts the local bound and the tail
/// convergence/divergence dichotomy.
ExperimentReport zygmund_membership(double delta, int n, double x_max,
                                    SpikeKind kind = SpikeKind::antisymmetric);

/// Dual-path tables: quadrature F_alpha vs the closed form for the Sjolin
/// gauge; log-space vs linear-space evaluation for the Lie target gauge;
/// derivative spot checks.
ExperimentReport sjolin_lie_tables(std::span<const double> t_grid);

std::vector<double> default_t_grid(int count = 20);

} // namespace orlicz::experiments
