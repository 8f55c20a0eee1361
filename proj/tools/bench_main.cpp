// Wall-time comparison of the OpenMP kernels against their serial
// counterparts, with an exact-equality check on the outputs (the library
// contract is that worker count never changes a report).

#include <chrono>
#include <cstdio>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "permcycle/attacks.hpp"
#include "permcycle/experiment.hpp"
#include "permcycle/keeloq.hpp"
#include "permcycle/permutation.hpp"

using namespace permcycle;

namespace {

double time_call(const std::function<void()>& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool rows_equal(const ExperimentReport& a, const ExperimentReport& b) {
    if (a.rows.size() != b.rows.size()) return false;
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        const ExperimentRow& x = a.rows[i];
        const ExperimentRow& y = b.rows[i];
        if (x.k != y.k || x.meanMissProbability != y.meanMissProbability ||
            x.standardError != y.standardError || x.meanFixedPoints != y.meanFixedPoints ||
            x.fixedPointsStdError != y.fixedPointsStdError)
            return false;
    }
    return true;
}

bool reports_equal(const AttackReport& a, const AttackReport& b) {
    return a.succeeded == b.succeeded && a.recoveredKey == b.recoveredKey &&
           a.fixedPointsFound == b.fixedPointsFound &&
           a.candidatesExamined == b.candidatesExamined &&
           a.matchingPropertyHits == b.matchingPropertyHits;
}

void print_row(const char* name, double serial, double parallel, int workers, bool match) {
    std::printf("%-34s %9.3f s %9.3f s %8d   %s\n", name, serial, parallel, workers,
                match ? "identical" : "MISMATCH");
}

} // namespace

int main() {
#ifdef _OPENMP
    const int maxWorkers = omp_get_max_threads();
#else
    const int maxWorkers = 1;
#endif
    std::printf("%-34s %11s %11s %8s   %s\n", "kernel", "serial", "parallel", "workers",
                "outputs");
    bool allMatch = true;

    {
        ExperimentConfig cfg;
        cfg.n = 4000;
        cfg.trials = 2000;
        cfg.ks = {1, 8, 1081080};
        cfg.seed = 3;
        ExperimentReport one, many, ref;
        cfg.workers = 1;
        const double tOne = time_call([&] { one = run_experiment(cfg); });
        cfg.workers = maxWorkers;
        const double tMany = time_call([&] { many = run_experiment(cfg); });
        const bool match = rows_equal(one, many);
        allMatch = allMatch && match;
        print_row("simulate n=4000 trials=2000", tOne, tMany, maxWorkers, match);

        cfg.workers = 1;
        const double tRef = time_call([&] { ref = run_experiment_reference(cfg); });
        const bool refMatch = rows_equal(one, ref);
        allMatch = allMatch && refMatch;
        print_row("  vs serial reference (pi^k route)", tRef, tMany, maxWorkers, refMatch);
    }

    {
        const MiniParams p = MiniParams::for_width(14);
        SplitMix64 rng = SplitMix64::stream(42, 0);
        const KeeloqKey key = rng.next() & p.key_mask();
        const Codebook cb = build_codebook(p, key, 1.0, 1);
        AttackReport one, many;
        const double tOne = time_call([&] { one = bard_attack(cb, 1); });
        const double tMany = time_call([&] { many = bard_attack(cb, maxWorkers); });
        const bool match = reports_equal(one, many);
        allMatch = allMatch && match;
        print_row("bard attack w=14", tOne, tMany, maxWorkers, match);
    }

    {
        const MiniParams p = MiniParams::for_width(12);
        SplitMix64 rng = SplitMix64::stream(43, 0);
        const KeeloqKey key = rng.next() & p.key_mask();
        const Codebook cb = build_codebook(p, key, 1.0, 1);
        AttackReport one, many;
        const double tOne = time_call([&] { one = cbw_attack(cb, 1); });
        const double tMany = time_call([&] { many = cbw_attack(cb, maxWorkers); });
        const bool match = reports_equal(one, many);
        allMatch = allMatch && match;
        print_row("cbw attack w=12", tOne, tMany, maxWorkers, match);
    }

    return allMatch ? 0 : 1;
}
