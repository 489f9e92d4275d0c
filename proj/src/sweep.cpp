#include "wakes/sweep.hpp"

#include <omp.h>

namespace wakes {

size_t PoolSweepResult::failure_count() const {
    size_t n = 0;
    for (const auto& r : results)
        if (!r.ok()) ++n;
    return n;
}

size_t PoolSweepResult::converse_hits() const {
    size_t n = 0;
    for (const auto& r : results)
        if (r.converse_evidence) ++n;
    return n;
}

ComponentResult verify_component(const HyperbolicComponent& h,
                                 const ComponentPool& pool) {
    ComponentResult res;
    res.h = h;

    auto rep = verify_main_theorem(h, pool);
    res.covered = rep.covered;
    res.residual_finite = rep.residual_finite;
    res.residual_count = rep.residual_points.size();
    res.residual_all_xi = true;
    for (bool b : rep.residual_in_xi) res.residual_all_xi = res.residual_all_xi && b;
    if (!rep.residual_finite)
        res.failures.push_back("residual contains a nondegenerate arc");

    res.remark_holds = remark_condition(h);
    res.remark_consistent = !res.remark_holds || rep.residual_points.empty();
    if (!res.remark_consistent)
        res.failures.push_back("remark condition with nonempty residual");

    RQTrace trace = rq_trace(h, pool);
    LeafSystem leaves = leaves_of(h);
    CheckReport checks = structural_checks(h, trace, leaves, pool);
    res.structural_ok = checks.all_passed();
    res.converse_evidence = checks.converse_evidence;
    res.flip = leaves.flip;
    res.failures.insert(res.failures.end(), checks.failures.begin(),
                        checks.failures.end());

    res.overlap_ok = true;
    for (const auto& hp : conspicuous_components(h, pool)) {
        if (hp == h) continue;
        uint32_t m = hp.period;
        bool prefix = hp.kneading.prefix(m - 1) == h.kneading.prefix(m - 1);
        bool flipped = hp.kneading.at(m - 1) == opposite(h.kneading.at(m - 1));
        if (!prefix || !flipped) {
            res.overlap_ok = false;
            res.failures.push_back("overlap lemma fails against " + hp.str());
        }
    }
    return res;
}

PoolSweepResult sweep_verify_serial(const ComponentPool& pool) {
    PoolSweepResult out;
    out.results.resize(pool.components.size());
    for (size_t i = 0; i < pool.components.size(); ++i)
        out.results[i] = verify_component(pool.components[i], pool);
    return out;
}

PoolSweepResult sweep_verify_parallel(const ComponentPool& pool, int jobs) {
    if (jobs <= 0) jobs = omp_get_max_threads();
    PoolSweepResult out;
    out.results.resize(pool.components.size());
    const auto n = static_cast<std::ptrdiff_t>(pool.components.size());
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
    for (std::ptrdiff_t i = 0; i < n; ++i)
        out.results[i] = verify_component(pool.components[i], pool);
    return out;
}

PoolSweepResult sweep_verify(const ComponentPool& pool, int jobs) {
    if (jobs == 1) return sweep_verify_serial(pool);
    return sweep_verify_parallel(pool, jobs);
}

CorollaryCounts& CorollaryCounts::operator+=(const CorollaryCounts& rhs) {
    pairs += rhs.pairs;
    disc_hits += rhs.disc_hits;
    exceptional += rhs.exceptional;
    equivalence_failures += rhs.equivalence_failures;
    difference_failures += rhs.difference_failures;
    parse_errors += rhs.parse_errors;
    return *this;
}

std::vector<Angle> angle_grid(uint64_t denominator) {
    std::vector<Angle> out;
    out.reserve(denominator);
    for (uint64_t k = 0; k < denominator; ++k) out.emplace_back(k, denominator);
    return out;
}

CorollaryCounts check_corollary_pair(const HyperbolicComponent& h, const Angle& theta,
                                     const ComponentPool& pool) {
    CorollaryCounts c;
    c.pairs = 1;

    // Difference locus: positions where the two codings split must be
    // exactly the visits to the closed star piece, with opposite letters.
    size_t depth = exact_depth(theta);
    auto diffs = compare_codings(h, theta, depth);
    ArcSet pi0 = h.pi0();
    size_t di = 0;
    bool contract_ok = true;
    Angle cur = theta;
    for (size_t m = 0; m < depth; ++m) {
        bool in_star = pi0.contains(cur);
        bool differs = di < diffs.size() && diffs[di].position == m;
        if (differs && diffs[di].plus_symbol != opposite(diffs[di].minus_symbol))
            contract_ok = false;
        if (in_star != differs) contract_ok = false;
        if (differs) ++di;
        cur = cur.doubled();
    }
    if (di != diffs.size()) contract_ok = false;
    if (!contract_ok) c.difference_failures = 1;

    bool disc = disc_contains(h, theta);
    if (disc) c.disc_hits = 1;
    if (xi_contains(h, theta)) {
        c.exceptional = 1;  // outside the corollary's scope
        return c;
    }
    try {
        auto chain = marker_decomposition(h, theta, pool);
        if (chain.has_value() != disc) c.equivalence_failures = 1;
    } catch (const TheoremViolation&) {
        c.parse_errors = 1;
    }
    return c;
}

CorollaryCounts sweep_corollary_serial(const ComponentPool& pool, uint32_t max_period,
                                       const std::vector<Angle>& angles) {
    CorollaryCounts total;
    for (const auto& h : pool.components) {
        if (h.period > max_period) continue;
        for (const Angle& theta : angles) total += check_corollary_pair(h, theta, pool);
    }
    return total;
}

CorollaryCounts sweep_corollary_parallel(const ComponentPool& pool, uint32_t max_period,
                                         const std::vector<Angle>& angles, int jobs) {
    if (jobs <= 0) jobs = omp_get_max_threads();
    std::vector<const HyperbolicComponent*> comps;
    for (const auto& h : pool.components)
        if (h.period <= max_period) comps.push_back(&h);

    CorollaryCounts total;
    const auto n = static_cast<std::ptrdiff_t>(comps.size());
#pragma omp parallel num_threads(jobs)
    {
        CorollaryCounts local;
#pragma omp for schedule(dynamic) nowait
        for (std::ptrdiff_t i = 0; i < n; ++i)
            for (const Angle& theta : angles)
                local += check_corollary_pair(*comps[i], theta, pool);
#pragma omp critical
        total += local;
    }
    return total;
}

CorollaryCounts sweep_corollary(const ComponentPool& pool, uint32_t max_period,
                                const std::vector<Angle>& angles, int jobs) {
    if (jobs == 1) return sweep_corollary_serial(pool, max_period, angles);
    return sweep_corollary_parallel(pool, max_period, angles, jobs);
}

}  // namespace wakes
