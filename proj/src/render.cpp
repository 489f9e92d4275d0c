#include "wakes/render.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace wakes {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v + 0.0);  // normalize -0
    return buf;
}

struct Canvas {
    double cx, cy, radius;

    std::pair<double, double> at(double turn, double r_scale = 1.0) const {
        double a = 2 * kPi * turn;
        return {cx + radius * r_scale * std::cos(a),
                cy - radius * r_scale * std::sin(a)};
    }
};

std::string polyline(const std::vector<std::pair<double, double>>& pts,
                     const char* stroke, double width) {
    std::string d;
    for (size_t i = 0; i < pts.size(); ++i) {
        d += i ? " L " : "M ";
        d += num(pts[i].first) + " " + num(pts[i].second);
    }
    return "<path d=\"" + d + "\" fill=\"none\" stroke=\"" + stroke +
           "\" stroke-width=\"" + num(width) + "\" stroke-linecap=\"round\"/>\n";
}

std::string draw_circle_arc(const Canvas& c, const Arc& arc, const char* stroke,
                            double width) {
    if (arc.is_point()) {
        auto [x, y] = c.at(arc.start.to_double());
        return "<circle cx=\"" + num(x) + "\" cy=\"" + num(y) + "\" r=\"" +
               num(width * 1.5) + "\" fill=\"" + stroke + "\"/>\n";
    }
    double a = arc.start.to_double();
    double b = arc.full ? a + 1.0 : arc.end.to_double();
    if (b <= a) b += 1.0;
    int steps = std::max(8, static_cast<int>(256 * (b - a)));
    std::vector<std::pair<double, double>> pts;
    for (int i = 0; i <= steps; ++i)
        pts.push_back(c.at(a + (b - a) * i / steps));
    return polyline(pts, stroke, width);
}

std::string draw_chord(const Canvas& c, const Leaf& leaf, const char* stroke,
                       double width) {
    double ta = leaf.a.to_double(), tb = leaf.b.to_double();
    double ax = std::cos(2 * kPi * ta), ay = std::sin(2 * kPi * ta);
    double bx = std::cos(2 * kPi * tb), by = std::sin(2 * kPi * tb);
    double dot = ax * bx + ay * by;
    std::vector<std::pair<double, double>> pts;
    if (std::fabs(1.0 + dot) < 1e-9) {
        // Antipodal endpoints: the geodesic is a diameter.
        pts.push_back(c.at(ta));
        pts.push_back(c.at(tb));
        return polyline(pts, stroke, width);
    }
    // Circle through both endpoints orthogonal to the unit circle.
    double ox = (ax + bx) / (1.0 + dot), oy = (ay + by) / (1.0 + dot);
    double r = std::sqrt(ox * ox + oy * oy - 1.0);
    double pa = std::atan2(ay - oy, ax - ox);
    double pb = std::atan2(by - oy, bx - ox);
    double delta = pb - pa;
    while (delta > kPi) delta -= 2 * kPi;
    while (delta < -kPi) delta += 2 * kPi;
    int steps = 32;
    for (int i = 0; i <= steps; ++i) {
        double t = pa + delta * i / steps;
        double x = ox + r * std::cos(t), y = oy + r * std::sin(t);
        pts.push_back({c.cx + c.radius * x, c.cy - c.radius * y});
    }
    return polyline(pts, stroke, width);
}

uint64_t numerator_over(const Angle& a, uint64_t den) {
    Natural d{den};
    auto [q, r] = Natural::divmod(a.num() * d, a.den());
    if (!r.is_zero()) throw std::logic_error("label angle off the lattice");
    return q.to_u64();
}

std::string draw_disk(const Canvas& c, const RQTrace& trace, uint32_t step,
                      uint64_t den, bool labels) {
    std::string out;
    const double thin = c.radius / 110.0, thick = c.radius / 45.0;
    out += "<circle cx=\"" + num(c.cx) + "\" cy=\"" + num(c.cy) + "\" r=\"" +
           num(c.radius) + "\" fill=\"none\" stroke=\"#cccccc\" stroke-width=\"" +
           num(thin) + "\"/>\n";

    const bool has_q = step < trace.q.size();
    for (const auto& e : polygon_edges(trace, step, TraceSet::R))
        out += e.is_arc ? draw_circle_arc(c, e.arc, "#999999", thick)
                        : draw_chord(c, e.chord, "#999999", thin * 1.6);
    if (has_q) {
        for (const auto& e : polygon_edges(trace, step, TraceSet::Q))
            out += e.is_arc ? draw_circle_arc(c, e.arc, "#000000", thick)
                            : draw_chord(c, e.chord, "#000000", thin * 1.6);
    }

    if (labels) {
        const auto& marks = trace.endpoint_marks[step];
        auto label_one = [&](const Angle& x) {
            std::string text = std::to_string(numerator_over(x, den));
            for (const Angle& m : marks)
                if (m == x) text += "e";
            auto [lx, ly] = c.at(x.to_double(), 1.12);
            return "<text x=\"" + num(lx) + "\" y=\"" + num(ly) +
                   "\" font-size=\"" + num(c.radius / 9.0) +
                   "\" text-anchor=\"middle\" dominant-baseline=\"middle\" "
                   "font-family=\"sans-serif\">" +
                   text + "</text>\n";
        };
        for (const Arc& a : trace.r[step].arcs()) {
            out += label_one(a.start);
            if (!a.is_point() && !a.full) out += label_one(a.end);
        }
    }
    return out;
}

}  // namespace

std::string render_svg(const RenderSpec& spec, const ComponentPool& pool) {
    const HyperbolicComponent* h =
        pool.find(spec.component.theta_minus, spec.component.theta_plus);
    if (!h) throw std::invalid_argument("component not in the pool");
    if (spec.step && *spec.step > h->period)
        throw std::invalid_argument("step exceeds the period");

    RQTrace trace = rq_trace(*h, pool);
    Natural l = Natural::lcm(h->theta_minus.den(), h->theta_plus.den());
    uint64_t den = (l + l).to_u64();

    std::vector<uint32_t> steps;
    if (spec.step) {
        steps.push_back(*spec.step);
    } else {
        for (uint32_t i = 0; i <= h->period; ++i) steps.push_back(i);
    }

    const double pad = spec.size_px * 0.05;
    const double cell = spec.size_px;
    const double width = cell * steps.size(), height = cell;
    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
                      "width=\"" + num(width) + "\" height=\"" + num(height) +
                      "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
    for (size_t i = 0; i < steps.size(); ++i) {
        Canvas c{cell * i + cell / 2, cell / 2, cell / 2 - 2.4 * pad};
        out += "<g>\n";
        out += draw_disk(c, trace, steps[i], den, spec.labels);
        out += "<text x=\"" + num(cell * i + cell / 2) + "\" y=\"" +
               num(height - pad / 2) + "\" font-size=\"" + num(cell / 22.0) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\">n = " +
               std::to_string(steps[i]) + "</text>\n";
        out += "</g>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace wakes
