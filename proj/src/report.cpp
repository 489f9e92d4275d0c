#include "wakes/report.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include <json.hpp>

#include "wakes/verify.hpp"

namespace wakes {

namespace {

using nlohmann::json;

uint64_t numerator_over(const Angle& a, uint64_t den) {
    Natural d{den};
    auto [q, r] = Natural::divmod(a.num() * d, a.den());
    if (!r.is_zero())
        throw std::logic_error("angle " + a.str() + " is off the 1/" +
                               std::to_string(den) + " lattice");
    return q.to_u64();
}

uint64_t common_denominator(const HyperbolicComponent& h) {
    Natural l = Natural::lcm(h.theta_minus.den(), h.theta_plus.den());
    return (l + l).to_u64();
}

std::string word_str(const Word& w) {
    std::string s;
    for (size_t i = 0; i < w.head.size(); ++i) s += sym_str(w.head[i]);
    return s;
}

// One worked example: the subject component, display names, and whether the
// table tracks the closed sets or (as in most of the appendix) the open
// interiors.
struct ExampleSpec {
    std::string title;
    Angle tm, tp;
    std::string name;
    std::map<std::string, std::string> aliases;  // "p/q,p/q" -> display name
    bool open_variant = false;
};

std::string fmt_arc(const Arc& a, uint64_t den, const std::vector<Angle>& marks) {
    auto mark = [&](const Angle& x) {
        std::string s = std::to_string(numerator_over(x, den));
        for (const Angle& m : marks)
            if (m == x) return s + "e";
        return s;
    };
    std::string s;
    s += a.start_closed ? '[' : '(';
    s += mark(a.start);
    s += ", ";
    s += mark(a.end);
    s += a.end_closed ? ']' : ')';
    return s;
}

std::string fmt_arcs(const std::vector<Arc>& arcs, uint64_t den,
                     const std::vector<Angle>& marks) {
    std::string s;
    for (size_t i = 0; i < arcs.size(); ++i) {
        if (i) s += " u ";
        s += fmt_arc(arcs[i], den, marks);
    }
    return s;
}

// Pieces print unreduced over the fixed denominator, the way the appendix
// writes them ("[2/10, 3/10]" rather than "[1/5, 3/10]").
std::string fmt_arcset_fractions(const ArcSet& set, uint64_t den) {
    std::string s;
    auto arcs = set.arcs();
    for (size_t i = 0; i < arcs.size(); ++i) {
        if (i) s += " u ";
        const Arc& a = arcs[i];
        s += a.start_closed ? '[' : '(';
        s += std::to_string(numerator_over(a.start, den)) + "/" + std::to_string(den);
        s += ", ";
        s += std::to_string(numerator_over(a.end, den)) + "/" + std::to_string(den);
        s += a.end_closed ? ']' : ')';
    }
    return s;
}

Arc map_arc(const Arc& a) {
    if (a.full || !(a.length() < Rational(1, 2)))
        throw std::logic_error("display arc too long for an exact image");
    return {a.start.doubled(), a.end.doubled(), a.start_closed, a.end_closed, false};
}

std::vector<Arc> intersect_arcs(const std::vector<Arc>& arcs, const ArcSet& piece) {
    std::vector<Arc> out;
    for (const Arc& a : arcs) {
        ArcSet cut = ArcSet::from_arc(a).intersect(piece);
        auto sub = cut.arcs();
        out.insert(out.end(), sub.begin(), sub.end());
    }
    // Q rows are listed in circle order.
    std::sort(out.begin(), out.end(),
              [](const Arc& x, const Arc& y) { return x.start < y.start; });
    return out;
}

struct TableRow {
    std::string label;                  // empty for plain continuation rows
    std::vector<std::string> stages;    // formatted arc unions, joined by ->
    std::string coding_line;
    json stages_json = json::array();
};

struct ExampleOutput {
    std::string header;
    std::vector<TableRow> rows;
    std::vector<std::string> remarks;
    json as_json;
};

std::string coding_triple(const Word& k, uint32_t upto, bool final_row) {
    std::string prefix;
    for (uint32_t i = 0; i + 1 < upto; ++i) prefix += sym_str(k.at(i));
    std::string last = sym_str(k.at(upto - 1));
    std::string flipped = sym_str(opposite(k.at(upto - 1)));
    if (final_row) return prefix + last + " or " + prefix + sym_str(Sym::Star);
    return prefix + flipped + ", " + prefix + sym_str(Sym::Star) + " or " + prefix + last;
}

ExampleOutput build_example(const ExampleSpec& ex, const ComponentPool& pool) {
    const HyperbolicComponent* hp = pool.find(ex.tm, ex.tp);
    if (!hp) throw std::logic_error("example component missing from the pool");
    const HyperbolicComponent& h = *hp;
    const uint32_t n = h.period;
    const uint64_t den = common_denominator(h);
    auto spec = h.star_partition();
    auto returns = return_times(h, pool);

    auto display_name = [&](const HyperbolicComponent& c) -> std::string {
        auto it = ex.aliases.find(c.theta_minus.str() + "," + c.theta_plus.str());
        return it != ex.aliases.end() ? it->second : c.str();
    };

    ExampleOutput out;
    out.as_json["title"] = ex.title;
    out.as_json["component"] = ex.name;
    out.as_json["theta_minus"] = h.theta_minus.str();
    out.as_json["theta_plus"] = h.theta_plus.str();
    out.as_json["period"] = n;
    out.as_json["kneading"] = word_str(h.kneading);
    out.as_json["denominator"] = den;

    // Header: the subject with its pieces, then the proper conspicuous
    // components with their kneadings, ordered by increasing period.
    std::string head;
    head += "  (1) Pi1(" + ex.name + ") = [" + h.theta_minus.str() + ", " +
            h.theta_plus.str() + "], star-piece = " +
            fmt_arcset_fractions(spec.piece(Sym::Star), den) +
            ",\n      A-piece = " + fmt_arcset_fractions(spec.piece(Sym::A), den) +
            ", B-piece = " + fmt_arcset_fractions(spec.piece(Sym::B), den) + ",\n      K(" +
            ex.name + ") = " + word_str(h.kneading) + ", Khat(" + ex.name + ") = " +
            word_str(h.discarded) + ", per(" + ex.name + ") = " + std::to_string(n);
    auto cons = conspicuous_components(h, pool);
    std::reverse(cons.begin(), cons.end());  // increasing period, subject last
    int item = 2;
    json cons_json = json::array();
    for (const auto& c : cons) {
        if (c == h) continue;
        std::string nm = display_name(c);
        head += ",\n  (" + std::to_string(item++) + ") Pi1(" + nm + ") = [" +
                c.theta_minus.str() + ", " + c.theta_plus.str() + "], K(" + nm +
                ") = " + word_str(c.kneading) + ", per(" + nm +
                ") = " + std::to_string(c.period);
        json cj;
        cj["name"] = nm;
        cj["theta_minus"] = c.theta_minus.str();
        cj["theta_plus"] = c.theta_plus.str();
        cj["period"] = c.period;
        cj["kneading"] = word_str(c.kneading);
        cons_json.push_back(cj);
    }
    out.as_json["conspicuous"] = cons_json;
    out.header = head;

    // The orbit table. Example 1 follows the closed sets from Pi1; the other
    // examples track the open interior, as the appendix does.
    std::vector<Arc> state;
    std::string start_label;
    if (ex.open_variant) {
        state.push_back(Arc::open(h.theta_minus, h.theta_plus));
        start_label = "int(Pi1(" + ex.name + "))";
    } else {
        state.push_back(Arc::closed(h.theta_minus, h.theta_plus));
        start_label = "Pi1(" + ex.name + ")";
    }

    std::vector<Angle> marks = {h.theta_minus, h.theta_plus};
    auto next_return = [&](uint32_t from) {
        for (uint32_t r : returns)
            if (r >= from) return r;
        return n;
    };

    TableRow row;
    row.label = start_label;
    row.stages.push_back(fmt_arcs(state, den, marks));
    auto push_stage_json = [&](const std::vector<Arc>& arcs, const char* kind,
                               uint32_t step) {
        json sj;
        sj["kind"] = kind;
        sj["step"] = step;
        json list = json::array();
        for (const Arc& a : arcs) {
            json aj;
            aj["start"] = numerator_over(a.start, den);
            aj["end"] = numerator_over(a.end, den);
            aj["start_closed"] = a.start_closed;
            aj["end_closed"] = a.end_closed;
            json mk = json::array();
            for (const Angle& m : marks)
                if (a.start == m || a.end == m) mk.push_back(numerator_over(m, den));
            aj["marks"] = mk;
            list.push_back(aj);
        }
        sj["arcs"] = list;
        row.stages_json.push_back(sj);
    };
    push_stage_json(state, "R", 1);

    uint32_t step = 1;
    while (step < n) {
        uint32_t stop = next_return(step + 1);
        // Advance R steps until the next return time (or the final step).
        while (step < stop) {
            std::vector<Arc> next;
            for (const Arc& a : state) next.push_back(map_arc(a));
            state = next;
            ++step;
            for (Angle& m : marks) m = m.doubled();
            row.stages.push_back(fmt_arcs(state, den, marks));
            push_stage_json(state, "R", step);
        }
        row.coding_line = coding_triple(h.kneading, step, step == n);
        out.rows.push_back(row);
        if (step == n) break;
        // Cut at the return time and open the next row with Q_step.
        Sym k = h.kneading.at(step - 1);
        ArcSet piece = ex.open_variant ? spec.piece(k) : spec.piece(k).closure();
        state = intersect_arcs(state, piece);
        std::string prefix;
        for (uint32_t i = 0; i < step; ++i) prefix += sym_str(h.kneading.at(i));
        row = TableRow{};
        row.label = "the " + prefix + "-part";
        row.stages.push_back(fmt_arcs(state, den, marks));
        push_stage_json(state, "Q", step);
    }

    // Remarks: the flip phenomenon, shown on the subject when present.
    LeafSystem leaves = leaves_of(h);
    if (leaves.flip) {
        out.remarks.push_back("remark: l0 = {" + leaves.major.a.str() + ", " +
                              leaves.major.b.str() +
                              "} is invariant but flipped by sigma^" +
                              std::to_string(n / 2));
        Word itin = itinerary(spec, h.theta_minus, 4 * n);
        out.remarks.push_back("        I_" + ex.name + "(" + h.theta_minus.str() +
                              ") = I_" + ex.name + "(" + h.theta_plus.str() + ") = " +
                              itin.str() + ", outside every T_K(H') u T_Khat(H')" +
                              sym_str(Sym::Star));
    }

    json rows_json = json::array();
    for (const auto& r : out.rows) {
        json rj;
        rj["label"] = r.label;
        rj["coding"] = r.coding_line;
        rj["stages"] = r.stages_json;
        rows_json.push_back(rj);
    }
    out.as_json["rows"] = rows_json;
    return out;
}

std::vector<ExampleSpec> appendix_examples() {
    std::vector<ExampleSpec> out;
    ExampleSpec e1;
    e1.title = "Example 1";
    e1.tm = Angle(13, 31);
    e1.tp = Angle(18, 31);
    e1.name = "H_Lob";
    e1.aliases = {{"3/7,4/7", "H_Air"}};
    e1.open_variant = false;
    out.push_back(e1);

    ExampleSpec e2;
    e2.title = "Example 2";
    e2.tm = Angle(2, 5);
    e2.tp = Angle(3, 5);
    e2.name = "H_4";
    e2.aliases = {{"3/7,4/7", "H_Air"}};
    e2.open_variant = true;
    out.push_back(e2);

    ExampleSpec e3;
    e3.title = "Example 3";
    e3.tm = Angle(26, 63);
    e3.tp = Angle(37, 63);
    e3.name = "H_6";
    e3.aliases = {{"3/7,4/7", "H_Air"}, {"13/31,18/31", "H_5"}};
    e3.open_variant = true;
    out.push_back(e3);

    ExampleSpec e4;
    e4.title = "Example 4";
    e4.tm = Angle(10, 63);
    e4.tp = Angle(17, 63);
    e4.name = "H_6'";
    e4.aliases = {{"1/5,4/15", "H'_4"}, {"5/31,6/31", "H'_5"}};
    e4.open_variant = true;
    out.push_back(e4);
    return out;
}

}  // namespace

std::string appendix_a_text(const ComponentPool& pool) {
    if (pool.max_period < 6)
        throw std::invalid_argument("the appendix needs a pool of period >= 6");
    std::string out;
    for (const auto& ex : appendix_examples()) {
        ExampleOutput built = build_example(ex, pool);
        out += ex.title + " (" + ex.name + ")\n";
        out += built.header + "\n";
        uint64_t den = common_denominator(*pool.find(ex.tm, ex.tp));
        out += "  numerators over the denominator " + std::to_string(den) + ":\n";
        for (const auto& row : built.rows) {
            out += "  " + row.label + " = ";
            for (size_t i = 0; i < row.stages.size(); ++i) {
                if (i) out += " -> ";
                out += row.stages[i];
            }
            out += "\n    coding: " + row.coding_line + "\n";
        }
        for (const auto& r : built.remarks) out += "  " + r + "\n";
        out += "\n";
    }
    return out;
}

std::string appendix_a_json(const ComponentPool& pool) {
    if (pool.max_period < 6)
        throw std::invalid_argument("the appendix needs a pool of period >= 6");
    json out;
    out["report"] = "appendix-a";
    json arr = json::array();
    for (const auto& ex : appendix_examples()) arr.push_back(build_example(ex, pool).as_json);
    out["examples"] = arr;
    return out.dump(2);
}

std::string rq_trace_json(const RQTrace& trace) {
    const uint64_t den = common_denominator(trace.h);
    json out;
    out["theta_minus"] = trace.h.theta_minus.str();
    out["theta_plus"] = trace.h.theta_plus.str();
    out["period"] = trace.h.period;
    out["denominator"] = den;
    out["return_times"] = trace.returns;
    json steps = json::array();
    auto arcs_json = [&](const ArcSet& set, const std::vector<Angle>& marks) {
        json list = json::array();
        for (const Arc& a : set.arcs()) {
            json aj;
            aj["start"] = numerator_over(a.start, den);
            aj["end"] = numerator_over(a.end, den);
            aj["start_closed"] = a.start_closed;
            aj["end_closed"] = a.end_closed;
            json mk = json::array();
            for (const Angle& m : marks)
                if (a.start == m || a.end == m) mk.push_back(numerator_over(m, den));
            aj["marks"] = mk;
            list.push_back(aj);
        }
        return list;
    };
    for (size_t nstep = 0; nstep < trace.r.size(); ++nstep) {
        json sj;
        sj["n"] = nstep;
        sj["R"] = arcs_json(trace.r[nstep], trace.endpoint_marks[nstep]);
        if (nstep < trace.q.size())
            sj["Q"] = arcs_json(trace.q[nstep], trace.endpoint_marks[nstep]);
        steps.push_back(sj);
    }
    out["steps"] = steps;
    return out.dump(2);
}

}  // namespace wakes
