// Acceptance suite: runs every criterion end to end and prints one verdict
// line per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "wakes/pool_io.hpp"
#include "wakes/report.hpp"
#include "wakes/sweep.hpp"

using namespace wakes;

namespace {

int g_failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

void verdict(int idx, const char* name, bool pass, double secs,
             const std::string& detail = "") {
    std::printf("criterion %d (%s): %s (%.2f s)%s%s\n", idx, name,
                pass ? "PASS" : "FAIL", secs, detail.empty() ? "" : " -- ",
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

std::string read_file(const char* path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return {};
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int64_t moebius(uint32_t m) {
    int64_t result = 1;
    for (uint32_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            m /= p;
            if (m % p == 0) return 0;
            result = -result;
        }
    }
    if (m > 1) result = -result;
    return result;
}

int64_t exact_angle_count(uint32_t n) {
    int64_t total = 0;
    for (uint32_t d = 1; d <= n; ++d)
        if (n % d == 0) total += moebius(n / d) * ((int64_t{1} << d) - 1);
    return total;
}

// ---------------------------------------------------------------------------

void criterion_1(const ComponentPool& pool6) {
    Timer t;
    std::string got = appendix_a_text(pool6);
    std::string golden = read_file("tests/golden/appendix_a.txt");
    bool pass = !golden.empty() && got == golden;
    // The golden file itself must carry the published values.
    const char* probes[] = {
        "K(H_Lob) = BABBA", "Khat(H_Lob) = BABB",  "K(H_4) = BABB",
        "K(H_6) = BABBBB",  "K(H_6') = BBABBB",    "[26e, 36e] -> [52e, 10e]",
        "[26/63, 37/63]",   "K(H'_4) = BBAA",      "K(H'_5) = BBABA",
        "denominator 62",   "denominator 10",      "denominator 126",
        "(74, 100e) u (26e, 52)"};
    for (const char* p : probes) pass = pass && got.find(p) != std::string::npos;
    double secs = t.seconds();
    verdict(1, "appendix A golden reproduction", pass && secs < 1.0, secs,
            pass ? "" : "output drifted from the golden tables");
}

void criterion_2(const ComponentPool& pool6) {
    Timer t;
    struct Row {
        uint64_t am, bm, ap, bp;
        uint32_t per;
        const char* k;
        const char* khat;
    };
    const Row rows[] = {{1, 3, 2, 3, 2, "BA", "B"},
                        {1, 7, 2, 7, 3, "BBA", "BB"},
                        {3, 7, 4, 7, 3, "BAA", "BA"},
                        {6, 15, 9, 15, 4, "BABB", "BAB"},
                        {13, 31, 18, 31, 5, "BABBA", "BABB"}};
    bool pass = true;
    for (const Row& r : rows) {
        const auto* c = pool6.find(Angle(r.am, r.bm), Angle(r.ap, r.bp));
        if (!c) {
            pass = false;
            continue;
        }
        std::string k, khat;
        for (Sym s : c->kneading.head) k += sym_str(s);
        for (Sym s : c->discarded.head) khat += sym_str(s);
        pass = pass && c->period == r.per && k == r.k && khat == r.khat;
    }
    double secs = t.seconds();
    verdict(2, "kneading table", pass && secs < 1.0, secs);
}

PoolSweepResult criterion_3(const ComponentPool& pool10) {
    Timer t;
    bool pass = true;
    std::string detail;

    for (uint32_t n = 2; n <= 10; ++n) {
        int64_t expect = exact_angle_count(n) / 2;
        int64_t got = static_cast<int64_t>(pool10.of_period(n).size());
        if (got != expect) {
            pass = false;
            detail = "component count off at period " + std::to_string(n);
        }
    }
    if (pool10.of_period(4).size() != 6) pass = false;

    PoolSweepResult sweep = sweep_verify(pool10, 0);
    size_t bad = 0;
    for (const auto& r : sweep.results) {
        bool ok = r.covered && r.residual_finite && r.residual_all_xi &&
                  r.remark_consistent;
        if (!ok) {
            ++bad;
            if (detail.empty()) detail = "first failure at " + r.h.str();
        }
    }
    pass = pass && bad == 0;
    double secs = t.seconds();
    verdict(3, "exhaustive coverage verification, period <= 10",
            pass && secs < 300.0, secs,
            detail.empty() ? std::to_string(sweep.results.size()) + " components, 0 failures"
                           : detail);
    return sweep;
}

void criterion_4(const ComponentPool& pool10) {
    Timer t;
    std::vector<Angle> angles = angle_grid((uint64_t{1} << 12) - 1);
    auto dyadic = angle_grid(uint64_t{1} << 12);
    angles.insert(angles.end(), dyadic.begin(), dyadic.end());
    CorollaryCounts counts = sweep_corollary(pool10, 7, angles, 0);
    bool pass = counts.ok();
    double secs = t.seconds();
    std::string detail = std::to_string(counts.pairs) + " pairs, " +
                         std::to_string(counts.disc_hits) + " in Disc, " +
                         std::to_string(counts.exceptional) + " exceptional, " +
                         std::to_string(counts.equivalence_failures + counts.parse_errors +
                                        counts.difference_failures) +
                         " counterexamples";
    verdict(4, "corollary equivalence sweep, period <= 7", pass && secs < 600.0, secs,
            detail);
}

void criterion_5(const ComponentPool& pool10) {
    Timer t;
    size_t pairs = 0, bad = 0;
    for (const auto& h : pool10.components) {
        for (const auto& hp : conspicuous_components(h, pool10)) {
            if (hp == h) continue;
            ++pairs;
            uint32_t m = hp.period;
            bool prefix = hp.kneading.prefix(m - 1) == h.kneading.prefix(m - 1);
            bool flipped = hp.kneading.at(m - 1) == opposite(h.kneading.at(m - 1));
            if (!prefix || !flipped) ++bad;
        }
    }
    double secs = t.seconds();
    verdict(5, "kneading overlap lemma, period <= 10", bad == 0, secs,
            std::to_string(pairs) + " conspicuous pairs, " + std::to_string(bad) +
                " failures");
}

void criterion_6(const PoolSweepResult& sweep) {
    Timer t;
    size_t bad = 0, with_returns = 0, converse_ok = 0;
    for (const auto& r : sweep.results) {
        if (!r.structural_ok) ++bad;
        ++with_returns;
        if (r.converse_evidence) ++converse_ok;
    }
    double secs = t.seconds();
    std::string detail = "converse evidence record: " + std::to_string(converse_ok) +
                         "/" + std::to_string(with_returns) +
                         " components have every return time covering Pi0 "
                         "(recorded, not asserted)";
    verdict(6, "structural suite, period <= 10", bad == 0, secs, detail);
}

void criterion_7(const ComponentPool& pool10) {
    Timer t;
    bool pass = true;
    std::string detail;

    // Pairing against the kneading-class adjacency oracle.
    for (uint32_t n = 2; n <= 6 && pass; ++n) {
        auto expect = oracle::pair_by_kneading_class(n);
        auto got = pool10.of_period(n);
        if (got.size() != expect.size()) {
            pass = false;
            detail = "pairing count at period " + std::to_string(n);
            break;
        }
        for (size_t i = 0; i < got.size(); ++i) {
            if (!(got[i]->theta_minus == expect[i].first &&
                  got[i]->theta_plus == expect[i].second)) {
                pass = false;
                detail = "pairing disagrees at period " + std::to_string(n);
            }
        }
    }

    std::vector<const HyperbolicComponent*> comps;
    for (const auto& h : pool10.components)
        if (h.period <= 6) comps.push_back(&h);

    // Kneadings through the dual membership route.
    for (const auto* h : comps)
        if (!(h->kneading == oracle::kneading_by_pieces(h->theta_minus, h->period))) {
            pass = false;
            detail = "kneading oracle disagrees at " + h->str();
        }

    // 500 sampled angles, fixed seed.
    std::mt19937 rng(20260808);
    std::uniform_int_distribution<int> den(2, 2048);
    std::vector<Angle> samples;
    while (samples.size() < 500) {
        int q = den(rng);
        std::uniform_int_distribution<int> num(0, q - 1);
        samples.emplace_back(num(rng), q);
    }

    // Cylinder sets against itinerary prefixes; Disc against the direct
    // coding comparison.
    for (const auto* h : comps) {
        auto spec = h->star_partition();
        std::vector<std::vector<Sym>> words;
        words.push_back(h->kneading.head);
        auto khat_star = h->discarded.head;
        khat_star.push_back(Sym::Star);
        words.push_back(khat_star);
        words.push_back({Sym::B});
        words.push_back({Sym::B, Sym::A});
        for (const auto& w : words) {
            ArcSet cyl = cylinder_set(spec, w);
            for (const Angle& theta : samples) {
                auto pre = itinerary_prefix(spec, theta, w.size());
                if (cyl.contains(theta) != (pre == w)) {
                    pass = false;
                    detail = "cylinder oracle disagrees at " + h->str();
                }
            }
        }
        for (const Angle& theta : samples) {
            if (disc_contains(*h, theta) !=
                oracle::disc_by_coding_comparison(*h, theta)) {
                pass = false;
                detail = "Disc oracle disagrees at " + h->str() + " / " + theta.str();
            }
        }
    }

    double secs = t.seconds();
    verdict(7, "naive enumeration oracle cross-validation", pass, secs,
            detail.empty() ? "pairing, kneadings, cylinders, Disc all agree" : detail);
}

}  // namespace

int main() {
    std::printf("acceptance suite\n");
    Timer total;

    ComponentPool pool6 = pair_periodic_angles(6);
    criterion_1(pool6);
    criterion_2(pool6);

    ComponentPool pool10 = pair_periodic_angles(10);
    PoolSweepResult sweep = criterion_3(pool10);
    criterion_4(pool10);
    criterion_5(pool10);
    criterion_6(sweep);
    criterion_7(pool10);

    std::printf("%d of 7 criteria passed (total %.2f s)\n", 7 - g_failures,
                total.seconds());
    return g_failures == 0 ? 0 : 1;
}
