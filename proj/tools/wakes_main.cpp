// Command-line surface for the wake-combinatorics library: pool listings,
// kneading and conspicuousness queries, theorem verification, Disc/marker
// queries, disk figures, and the appendix report.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "wakes/pool_io.hpp"
#include "wakes/render.hpp"
#include "wakes/report.hpp"
#include "wakes/sweep.hpp"
#include "wakes/verify.hpp"

using namespace wakes;
using nlohmann::json;

namespace {

struct CommonOpts {
    uint32_t max_period = 0;  // 0: derived from the component's period
    std::string format = "text";
    std::string out_file;
    std::optional<std::filesystem::path> pool_file;
    int jobs = 0;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_jobs = false) {
    cmd->add_option("--max-period", o.max_period, "pool depth (periods 2..P)");
    cmd->add_option("--format", o.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--out", o.out_file, "write output to a file");
    cmd->add_option("--pool", o.pool_file, "pool cache file to reuse");
    if (with_jobs) cmd->add_option("--jobs", o.jobs, "worker threads (0 = all CPUs)");
}

void emit(const CommonOpts& o, const std::string& text) {
    if (o.out_file.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(o.out_file, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + o.out_file);
    out << text;
}

ComponentPool get_pool(const CommonOpts& o, uint32_t at_least) {
    uint32_t p = std::max(o.max_period, at_least);
    std::string warnings;
    ComponentPool pool = load_or_build_pool(p, o.pool_file, &warnings);
    if (!warnings.empty()) std::cerr << warnings;
    return pool;
}

uint32_t period_of_angle(const Angle& a, const std::string& which) {
    auto p = a.exact_period();
    if (!p)
        throw CLI::ValidationError(which + " " + a.str() +
                                   " has an even denominator and is not periodic "
                                   "under doubling");
    return *p;
}

// Validates that the pair really bounds a hyperbolic component and explains
// the failure otherwise: period mismatch, kneading mismatch, or a chord that
// crosses the actual pairing.
HyperbolicComponent resolve_component(const Angle& tm, const Angle& tp,
                                      const ComponentPool& pool) {
    if (!(tm < tp))
        throw CLI::ValidationError("need theta_minus < theta_plus");
    uint32_t pm = period_of_angle(tm, "theta_minus");
    uint32_t pp = period_of_angle(tp, "theta_plus");
    if (pm != pp)
        throw CLI::ValidationError("period mismatch: " + tm.str() + " has period " +
                                   std::to_string(pm) + " but " + tp.str() +
                                   " has period " + std::to_string(pp));
    if (const auto* c = pool.find(tm, tp)) return *c;

    auto km = kneading_of_angle(tm, pm).prefix(pm - 1);
    auto kp = kneading_of_angle(tp, pm).prefix(pm - 1);
    if (km != kp)
        throw CLI::ValidationError("kneading mismatch: the angle kneadings of " +
                                   tm.str() + " and " + tp.str() +
                                   " disagree before the period");
    for (const auto& c : pool.components) {
        if (c.theta_minus == tm || c.theta_plus == tm)
            throw CLI::ValidationError("crossing chord: " + tm.str() + " pairs with " +
                                       (c.theta_minus == tm ? c.theta_plus.str()
                                                            : c.theta_minus.str()));
        if (c.theta_minus == tp || c.theta_plus == tp)
            throw CLI::ValidationError("crossing chord: " + tp.str() + " pairs with " +
                                       (c.theta_minus == tp ? c.theta_plus.str()
                                                            : c.theta_minus.str()));
    }
    throw CLI::ValidationError("no component with wake angles " + tm.str() + ", " +
                               tp.str());
}

std::string word_str(const Word& w) {
    std::string s;
    for (Sym sym : w.head) s += sym_str(sym);
    return s;
}

json component_json(const HyperbolicComponent& c) {
    json j;
    j["period"] = c.period;
    j["theta_minus"] = c.theta_minus.str();
    j["theta_plus"] = c.theta_plus.str();
    j["kneading"] = word_str(c.kneading);
    j["discarded_kneading"] = word_str(c.discarded);
    return j;
}

int cmd_components(const CommonOpts& o) {
    ComponentPool pool = get_pool(o, 2);
    if (o.format == "json") {
        emit(o, pool_to_json(pool) + "\n");
        return 0;
    }
    std::string out = "period  theta-     theta+     K           Khat\n";
    for (const auto& c : pool.components) {
        char line[160];
        std::snprintf(line, sizeof line, "%-7u %-10s %-10s %-11s %s\n", c.period,
                      c.theta_minus.str().c_str(), c.theta_plus.str().c_str(),
                      word_str(c.kneading).c_str(), word_str(c.discarded).c_str());
        out += line;
    }
    emit(o, out);
    return 0;
}

int cmd_kneading(const CommonOpts& o, const Angle& tm, const Angle& tp) {
    uint32_t p = period_of_angle(tm, "theta_minus");
    CommonOpts opts = o;
    opts.max_period = std::max(o.max_period, p);
    ComponentPool pool = get_pool(opts, p);
    HyperbolicComponent c = resolve_component(tm, tp, pool);
    if (o.format == "json") {
        emit(o, component_json(c).dump(2) + "\n");
        return 0;
    }
    emit(o, "component " + c.str() + "\nperiod " + std::to_string(c.period) + "\nK    " +
            word_str(c.kneading) + "\nKhat " + word_str(c.discarded) + "\n");
    return 0;
}

int cmd_conspicuous(const CommonOpts& o, const Angle& tm, const Angle& tp) {
    uint32_t p = period_of_angle(tm, "theta_minus");
    ComponentPool pool = get_pool(o, p);
    HyperbolicComponent c = resolve_component(tm, tp, pool);
    auto cons = conspicuous_components(c, pool);
    auto rt = return_times(c, pool);
    if (o.format == "json") {
        json j;
        j["component"] = component_json(c);
        j["conspicuous"] = json::array();
        for (const auto& x : cons) j["conspicuous"].push_back(component_json(x));
        j["return_times"] = rt;
        emit(o, j.dump(2) + "\n");
        return 0;
    }
    std::string out = "conspicuous to " + c.str() + " (decreasing period):\n";
    for (const auto& x : cons)
        out += "  " + x.str() + "  per " + std::to_string(x.period) + "  K " +
               word_str(x.kneading) + (x == c ? "  (itself)" : "") + "\n";
    out += "return times:";
    for (uint32_t t : rt) out += " " + std::to_string(t);
    if (rt.empty()) out += " none";
    out += "\n";
    emit(o, out);
    return 0;
}

json verification_json(const ComponentResult& r) {
    json j;
    j["component"] = component_json(r.h);
    j["covered"] = r.covered;
    j["residual_finite"] = r.residual_finite;
    j["residual_count"] = r.residual_count;
    j["residual_all_in_xi"] = r.residual_all_xi;
    j["remark_condition"] = r.remark_holds;
    j["structural_checks"] = r.structural_ok;
    j["overlap_lemma"] = r.overlap_ok;
    j["converse_evidence"] = r.converse_evidence;
    j["flip"] = r.flip;
    j["failures"] = r.failures;
    return j;
}

std::string verification_text(const ComponentResult& r, const ComponentPool& pool) {
    auto rep = verify_main_theorem(r.h, pool);
    std::string out = "component " + r.h.str() + "  per " +
                      std::to_string(r.h.period) + "  K " + word_str(r.h.kneading) +
                      "\n";
    out += "  conspicuous:";
    for (const auto& c : rep.conspicuous_used) out += " " + c.str();
    out += "\n  covered: " + std::string(r.covered ? "yes" : "NO");
    out += "\n  residual:";
    if (rep.residual_points.empty()) out += " empty";
    for (size_t i = 0; i < rep.residual_points.size(); ++i)
        out += " " + rep.residual_points[i].str() +
               (rep.residual_in_xi[i] ? " (in Xi)" : " (NOT in Xi)");
    out += "\n  remark condition: " + std::string(r.remark_holds ? "yes" : "no");
    out += "\n  structural checks: " + std::string(r.structural_ok ? "pass" : "FAIL");
    out += "\n  overlap lemma: " + std::string(r.overlap_ok ? "pass" : "FAIL");
    out += "\n  flip: " + std::string(r.flip ? "yes" : "no");
    for (const auto& f : r.failures) out += "\n  failure: " + f;
    out += "\n";
    return out;
}

int cmd_verify(const CommonOpts& o, const std::string& tm_s, const std::string& tp_s,
               bool all) {
    if (all) {
        uint32_t p = o.max_period ? o.max_period : 8;
        CommonOpts opts = o;
        opts.max_period = p;
        ComponentPool pool = get_pool(opts, p);
        PoolSweepResult sw = sweep_verify(pool, o.jobs);
        if (o.format == "json") {
            json j;
            j["max_period"] = p;
            j["components"] = json::array();
            for (const auto& r : sw.results) j["components"].push_back(verification_json(r));
            j["failures"] = sw.failure_count();
            emit(o, j.dump(2) + "\n");
        } else {
            std::string out;
            for (const auto& r : sw.results) {
                out += (r.ok() ? "ok   " : "FAIL ") + r.h.str() + "  per " +
                       std::to_string(r.h.period) + "  K " + word_str(r.h.kneading) +
                       "  residual " + std::to_string(r.residual_count) + "\n";
            }
            out += "components: " + std::to_string(sw.results.size()) +
                   ", failures: " + std::to_string(sw.failure_count()) + "\n";
            emit(o, out);
        }
        return sw.all_ok() ? 0 : 1;
    }

    Angle tm = Angle::parse(tm_s), tp = Angle::parse(tp_s);
    uint32_t p = period_of_angle(tm, "theta_minus");
    ComponentPool pool = get_pool(o, p);
    HyperbolicComponent c = resolve_component(tm, tp, pool);
    ComponentResult r = verify_component(c, pool);
    if (o.format == "json") {
        json j = verification_json(r);
        auto rep = verify_main_theorem(c, pool);
        j["conspicuous"] = json::array();
        for (const auto& x : rep.conspicuous_used)
            j["conspicuous"].push_back(component_json(x));
        j["residual"] = json::array();
        for (size_t i = 0; i < rep.residual_points.size(); ++i) {
            json e;
            e["angle"] = rep.residual_points[i].str();
            e["in_xi"] = static_cast<bool>(rep.residual_in_xi[i]);
            j["residual"].push_back(e);
        }
        j["rq_trace"] = json::parse(rq_trace_json(rq_trace(c, pool)));
        emit(o, j.dump(2) + "\n");
    } else {
        emit(o, verification_text(r, pool));
    }
    return r.ok() ? 0 : 1;
}

int cmd_disc(const CommonOpts& o, const Angle& tm, const Angle& tp,
             const Angle& theta, size_t depth) {
    uint32_t p = period_of_angle(tm, "theta_minus");
    ComponentPool pool = get_pool(o, p);
    HyperbolicComponent c = resolve_component(tm, tp, pool);
    bool in_disc = disc_contains(c, theta);

    // First entry time into the closed wake interval.
    std::optional<size_t> first_m;
    if (in_disc) {
        Angle cur = theta.doubled();
        for (size_t m = 1; m <= exact_depth(theta) + 1; ++m) {
            if (c.theta_minus <= cur && cur <= c.theta_plus) {
                first_m = m;
                break;
            }
            cur = cur.doubled();
        }
    }
    size_t d = depth ? depth : exact_depth(theta);
    auto diffs = compare_codings(c, theta, d);

    if (o.format == "json") {
        json j;
        j["component"] = component_json(c);
        j["theta"] = theta.str();
        j["in_disc"] = in_disc;
        if (first_m) j["first_entry"] = *first_m;
        j["in_xi"] = xi_contains(c, theta);
        j["differences"] = json::array();
        for (const auto& dd : diffs) {
            json e;
            e["position"] = dd.position;
            e["plus"] = sym_str(dd.plus_symbol);
            e["minus"] = sym_str(dd.minus_symbol);
            j["differences"].push_back(e);
        }
        emit(o, j.dump(2) + "\n");
        return 0;
    }
    std::string out = theta.str() + (in_disc ? " is in Disc" : " is not in Disc") +
                      c.str() + "\n";
    if (first_m) out += "first entry at m = " + std::to_string(*first_m) + "\n";
    if (xi_contains(c, theta)) out += "note: theta lies in Xi (exceptional)\n";
    out += "coding differences (depth " + std::to_string(d) + "):";
    if (diffs.empty()) out += " none";
    for (const auto& dd : diffs)
        out += " " + std::to_string(dd.position) + ":(" + sym_str(dd.plus_symbol) + "," +
               sym_str(dd.minus_symbol) + ")";
    out += "\n";
    emit(o, out);
    return 0;
}

int cmd_marker(const CommonOpts& o, const Angle& tm, const Angle& tp,
               const Angle& theta, size_t depth) {
    uint32_t p = period_of_angle(tm, "theta_minus");
    ComponentPool pool = get_pool(o, p);
    HyperbolicComponent c = resolve_component(tm, tp, pool);
    std::optional<MarkerChain> chain;
    std::string violation;
    try {
        chain = marker_decomposition(c, theta, pool, depth);
    } catch (const TheoremViolation& e) {
        violation = e.what();
    }

    if (o.format == "json") {
        json j;
        j["component"] = component_json(c);
        j["theta"] = theta.str();
        j["in_disc"] = chain.has_value() || !violation.empty();
        if (!violation.empty()) j["violation"] = violation;
        if (chain) {
            j["first_star"] = chain->first_star;
            j["infinite"] = chain->infinite;
            j["exceptional"] = chain->exceptional;
            j["marker"] = chain->str();
            j["star_positions"] = chain->star_positions;
            j["blocks"] = json::array();
            for (const auto& b : chain->blocks) {
                json e;
                e["period"] = b.period;
                e["component"] = b.component.str();
                e["kind"] = b.terminal ? "terminal-K" : "Khat-star";
                j["blocks"].push_back(e);
            }
            j["cycle_start"] = chain->cycle_start;
        }
        emit(o, j.dump(2) + "\n");
        return violation.empty() ? 0 : 2;
    }

    if (!violation.empty()) {
        emit(o, "THEOREM VIOLATION: " + violation + "\n");
        return 2;
    }
    if (!chain) {
        emit(o, theta.str() + " is not in Disc" + c.str() + "; no marker\n");
        return 0;
    }
    std::string out = "marker for " + theta.str() + " against " + c.str() + ":\n  " +
                      chain->str() + "\n  first star at position " +
                      std::to_string(chain->first_star) + "\n";
    if (chain->exceptional) out += "  exceptional: theta lies in Xi\n";
    if (chain->infinite) out += "  infinite chain (case b)\n";
    for (const auto& b : chain->blocks)
        out += "  block per " + std::to_string(b.period) + " " +
               (b.terminal ? "terminal-K" : "Khat-star") + " via " + b.component.str() +
               "\n";
    emit(o, out);
    return 0;
}

int cmd_render(const CommonOpts& o, const Angle& tm, const Angle& tp,
               const std::string& step_s, uint32_t size_px, bool no_labels) {
    uint32_t p = period_of_angle(tm, "theta_minus");
    ComponentPool pool = get_pool(o, p);
    RenderSpec spec;
    spec.component = resolve_component(tm, tp, pool);
    if (step_s != "all") spec.step = static_cast<uint32_t>(std::stoul(step_s));
    spec.size_px = size_px;
    spec.labels = !no_labels;
    emit(o, render_svg(spec, pool));
    return 0;
}

int cmd_report(const CommonOpts& o) {
    CommonOpts opts = o;
    opts.max_period = std::max<uint32_t>(o.max_period, 6);
    ComponentPool pool = get_pool(opts, 6);
    emit(o, o.format == "json" ? appendix_a_json(pool) + "\n" : appendix_a_text(pool));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact combinatorics of Mandelbrot wakes: kneading sequences, "
                 "conspicuous components, and pseudo-monodromy markers"};
    app.require_subcommand(1);

    CommonOpts o_components, o_kneading, o_conspicuous, o_verify, o_disc, o_marker,
        o_render, o_report;
    std::string tm_s, tp_s, theta_s, step_s = "all";
    size_t depth = 0;
    uint32_t size_px = 320;
    bool all = false, no_labels = false;

    auto* c_components = app.add_subcommand("components", "list the component pool");
    add_common(c_components, o_components);

    auto* c_kneading = app.add_subcommand("kneading", "kneading data of one component");
    c_kneading->add_option("theta_minus", tm_s)->required();
    c_kneading->add_option("theta_plus", tp_s)->required();
    add_common(c_kneading, o_kneading);

    auto* c_conspicuous =
        app.add_subcommand("conspicuous", "conspicuous components and return times");
    c_conspicuous->add_option("theta_minus", tm_s)->required();
    c_conspicuous->add_option("theta_plus", tp_s)->required();
    add_common(c_conspicuous, o_conspicuous);

    auto* c_verify = app.add_subcommand(
        "verify", "run the coding-coverage and structural verification");
    c_verify->add_option("theta_minus", tm_s);
    c_verify->add_option("theta_plus", tp_s);
    c_verify->add_flag("--all", all, "sweep every component of the pool");
    add_common(c_verify, o_verify, true);

    auto* c_disc = app.add_subcommand("disc", "Disc membership and coding differences");
    c_disc->add_option("theta_minus", tm_s)->required();
    c_disc->add_option("theta_plus", tp_s)->required();
    c_disc->add_option("theta", theta_s)->required();
    c_disc->add_option("--depth", depth, "difference positions to report");
    add_common(c_disc, o_disc);

    auto* c_marker = app.add_subcommand("marker", "marker decomposition of one angle");
    c_marker->add_option("theta_minus", tm_s)->required();
    c_marker->add_option("theta_plus", tp_s)->required();
    c_marker->add_option("theta", theta_s)->required();
    c_marker->add_option("--depth", depth, "display depth cap");
    add_common(c_marker, o_marker);

    auto* c_render = app.add_subcommand("render", "disk figure of the R/Q orbit");
    c_render->add_option("theta_minus", tm_s)->required();
    c_render->add_option("theta_plus", tp_s)->required();
    c_render->add_option("--step", step_s, "step number, or 'all' for a filmstrip");
    c_render->add_option("--size", size_px, "canvas edge per disk, pixels");
    c_render->add_flag("--no-labels", no_labels, "omit numerator labels");
    add_common(c_render, o_render);

    auto* c_report = app.add_subcommand("report", "regenerate the worked examples");
    add_common(c_report, o_report);

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_components->parsed()) return cmd_components(o_components);
        if (c_kneading->parsed())
            return cmd_kneading(o_kneading, Angle::parse(tm_s), Angle::parse(tp_s));
        if (c_conspicuous->parsed())
            return cmd_conspicuous(o_conspicuous, Angle::parse(tm_s), Angle::parse(tp_s));
        if (c_verify->parsed()) {
            if (!all && (tm_s.empty() || tp_s.empty()))
                throw CLI::ValidationError("verify needs two angles or --all");
            return cmd_verify(o_verify, tm_s, tp_s, all);
        }
        if (c_disc->parsed())
            return cmd_disc(o_disc, Angle::parse(tm_s), Angle::parse(tp_s),
                            Angle::parse(theta_s), depth);
        if (c_marker->parsed())
            return cmd_marker(o_marker, Angle::parse(tm_s), Angle::parse(tp_s),
                              Angle::parse(theta_s), depth);
        if (c_render->parsed())
            return cmd_render(o_render, Angle::parse(tm_s), Angle::parse(tp_s), step_s,
                              size_px, no_labels);
        if (c_report->parsed()) return cmd_report(o_report);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
