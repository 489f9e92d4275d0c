#pragma once

#include "wakes/verify.hpp"

namespace wakes {

// Exhaustive verification drivers. Every per-component computation is pure,
// so the parallel kernels split work across OpenMP threads with no shared
// state; the serial loops are the reference implementations, kept for
// testing and for the benchmark target.

struct ComponentResult {
    HyperbolicComponent h;
    bool covered = false;
    bool residual_finite = false;
    size_t residual_count = 0;
    bool residual_all_xi = false;
    bool remark_holds = false;
    bool remark_consistent = false;  // remark condition forces empty residual
    bool structural_ok = false;
    bool overlap_ok = false;  // kneading prefix/flip against every proper
                              // conspicuous component
    bool converse_evidence = false;
    bool flip = false;
    std::vector<std::string> failures;

    bool ok() const {
        return covered && residual_finite && residual_all_xi && remark_consistent &&
               structural_ok && overlap_ok;
    }
};

struct PoolSweepResult {
    std::vector<ComponentResult> results;  // pool order: (period, theta_minus)
    size_t failure_count() const;
    bool all_ok() const { return failure_count() == 0; }
    size_t converse_hits() const;  // return-time steps with R_n covering Pi0
};

ComponentResult verify_component(const HyperbolicComponent& h,
                                 const ComponentPool& pool);

PoolSweepResult sweep_verify_serial(const ComponentPool& pool);
PoolSweepResult sweep_verify_parallel(const ComponentPool& pool, int jobs);
// jobs <= 1 runs the serial reference, 0 means all logical CPUs.
PoolSweepResult sweep_verify(const ComponentPool& pool, int jobs = 0);

// The Corollary 4.2 equivalence sweep over (component, angle) pairs:
// difference-locus contract, opposite letters, and Disc <=> marker parse
// success away from Xi(H). Xi points are labelled exceptional and skipped.
struct CorollaryCounts {
    size_t pairs = 0;
    size_t disc_hits = 0;
    size_t exceptional = 0;
    size_t equivalence_failures = 0;
    size_t difference_failures = 0;
    size_t parse_errors = 0;

    bool ok() const {
        return equivalence_failures == 0 && difference_failures == 0 &&
               parse_errors == 0;
    }
    CorollaryCounts& operator+=(const CorollaryCounts& rhs);
};

// All angles k/denominator, k = 0..denominator-1 (stored reduced).
std::vector<Angle> angle_grid(uint64_t denominator);

CorollaryCounts check_corollary_pair(const HyperbolicComponent& h, const Angle& theta,
                                     const ComponentPool& pool);

CorollaryCounts sweep_corollary_serial(const ComponentPool& pool, uint32_t max_period,
                                       const std::vector<Angle>& angles);
CorollaryCounts sweep_corollary_parallel(const ComponentPool& pool, uint32_t max_period,
                                         const std::vector<Angle>& angles, int jobs);
CorollaryCounts sweep_corollary(const ComponentPool& pool, uint32_t max_period,
                                const std::vector<Angle>& angles, int jobs = 0);

}  // namespace wakes
