#include "permcycle/experiment.hpp"

#include <cmath>
#include <stdexcept>

#include "permcycle/fixpoints.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace permcycle {

double miss_probability(std::uint64_t c, std::size_t n, double fraction) {
    if (n == 0) throw std::domain_error("empty domain");
    if (c > n) throw std::domain_error("more fixed points than points");
    if (fraction < 0 || fraction > 1) throw std::domain_error("fraction outside [0, 1]");
    return std::pow(1.0 - static_cast<double>(c) / static_cast<double>(n),
                    static_cast<double>(n) * fraction);
}

namespace {

void validate(const ExperimentConfig& cfg) {
    if (cfg.n == 0 || cfg.trials == 0) throw std::domain_error("n and trials must be >= 1");
    if (cfg.ks.empty()) throw std::domain_error("at least one k required");
    for (std::uint64_t k : cfg.ks)
        if (k == 0) throw std::domain_error("k must be >= 1");
    if (cfg.fraction < 0 || cfg.fraction > 1) throw std::domain_error("fraction outside [0, 1]");
}

// per-trial fixed-point counts and miss values, reduced in trial order so
// the report is invariant under scheduling
ExperimentReport reduce(const ExperimentConfig& cfg,
                        const std::vector<std::vector<std::uint64_t>>& counts) {
    ExperimentReport rep;
    rep.config = cfg;
    const double t = static_cast<double>(cfg.trials);
    for (std::size_t ki = 0; ki < cfg.ks.size(); ++ki) {
        double missSum = 0, missSq = 0, fpSum = 0, fpSq = 0;
        for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
            const double c = static_cast<double>(counts[trial][ki]);
            const double miss = miss_probability(counts[trial][ki], cfg.n, cfg.fraction);
            missSum += miss;
            missSq += miss * miss;
            fpSum += c;
            fpSq += c * c;
        }
        ExperimentRow row;
        row.k = cfg.ks[ki];
        row.meanMissProbability = missSum / t;
        row.meanFixedPoints = fpSum / t;
        const double missVar =
            std::max(0.0, (missSq - missSum * missSum / t) / std::max(1.0, t - 1));
        const double fpVar = std::max(0.0, (fpSq - fpSum * fpSum / t) / std::max(1.0, t - 1));
        row.standardError = std::sqrt(missVar / t);
        row.fixedPointsStdError = std::sqrt(fpVar / t);
        rep.rows.push_back(row);
    }
    return rep;
}

} // namespace

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
    validate(cfg);
    std::vector<std::vector<std::uint64_t>> counts(cfg.trials);

#ifdef _OPENMP
    const int workers = cfg.workers > 0 ? cfg.workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 8) num_threads(workers)
#endif
    for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
        SplitMix64 rng = SplitMix64::stream(cfg.seed, trial);
        Permutation pi = random_permutation(cfg.n, rng);
        CycleDecomposition d = cycle_decomposition(pi);
        std::vector<std::uint64_t>& row = counts[trial];
        row.resize(cfg.ks.size());
        for (std::size_t ki = 0; ki < cfg.ks.size(); ++ki) {
            std::uint64_t c = 0;
            for (std::size_t len = 1; len < d.lengthHistogram.size(); ++len)
                if (d.lengthHistogram[len] != 0)
                    c += static_cast<std::uint64_t>(d.lengthHistogram[len]) *
                         fixed_points_from_cycle(len, cfg.ks[ki]);
            row[ki] = c;
        }
    }
    return reduce(cfg, counts);
}

ExperimentReport run_experiment_reference(const ExperimentConfig& cfg) {
    validate(cfg);
    std::vector<std::vector<std::uint64_t>> counts(cfg.trials);
    for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
        SplitMix64 rng = SplitMix64::stream(cfg.seed, trial);
        Permutation pi = random_permutation(cfg.n, rng);
        counts[trial].resize(cfg.ks.size());
        for (std::size_t ki = 0; ki < cfg.ks.size(); ++ki)
            counts[trial][ki] = count_fixed_points(permutation_power(pi, cfg.ks[ki]));
    }
    return reduce(cfg, counts);
}

} // namespace permcycle
