// SPDX-License-Identifier: Apache-2.0

#include "castelbound/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace castelbound::svg {

using numerics::rat;

namespace {

struct mapper {
    double b_min, b_max, a_max;
    double w = 840, h = 520, margin = 40;
    double x(double b) const { return margin + (b - b_min) / (b_max - b_min) * (w - 2 * margin); }
    double y(double a) const { return h - margin - a / a_max * (h - 2 * margin); }
};

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << v;
    return os.str();
}

} // namespace

std::string wall_diagram(long long d, long long n, const std::vector<wall_entry>& walls) {
    double bd = -std::sqrt((double)d / (double)n);
    double b_min = bd - 1.0, a_max = 1.0, t_max = bd;
    for (const auto& e : walls) {
        if (!e.wall.is_semicircle()) continue;
        const auto& c = e.wall.circle();
        double center = c.center.to_double_lossy();
        double r = std::sqrt(c.radius_sq.to_double_lossy());
        b_min = std::min(b_min, center - r - 0.5);
        a_max = std::max(a_max, r + 0.3);
        t_max = std::max(t_max, center + r);
    }
    mapper m{b_min, 0.6, a_max};

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << m.w << "\" height=\""
       << m.h << "\" viewBox=\"0 0 " << m.w << " " << m.h << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // Neutrality window: the strip between the highest wall tangency and 0.
    os << "<rect x=\"" << fmt(m.x(t_max)) << "\" y=\"" << fmt(m.y(a_max)) << "\" width=\""
       << fmt(m.x(0) - m.x(t_max)) << "\" height=\"" << fmt(m.y(0) - m.y(a_max))
       << "\" fill=\"#e8f0fe\"/>\n";

    // Axes.
    os << "<line x1=\"" << fmt(m.x(b_min)) << "\" y1=\"" << fmt(m.y(0)) << "\" x2=\""
       << fmt(m.x(0.6)) << "\" y2=\"" << fmt(m.y(0))
       << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    os << "<line x1=\"" << fmt(m.x(0)) << "\" y1=\"" << fmt(m.y(0)) << "\" x2=\""
       << fmt(m.x(0)) << "\" y2=\"" << fmt(m.y(a_max))
       << "\" stroke=\"black\" stroke-width=\"1\"/>\n";

    // b_d marker.
    os << "<line x1=\"" << fmt(m.x(bd)) << "\" y1=\"" << fmt(m.y(0) - 6) << "\" x2=\""
       << fmt(m.x(bd)) << "\" y2=\"" << fmt(m.y(0) + 6)
       << "\" stroke=\"#c00\" stroke-width=\"2\"/>\n";
    os << "<text x=\"" << fmt(m.x(bd) - 12) << "\" y=\"" << fmt(m.y(0) + 20)
       << "\" font-size=\"12\" fill=\"#c00\">b_d</text>\n";

    // Hyperbola Re Z = 0 for (1, 0, -d/n): a^2 = b^2 - 2d/n.
    os << "<polyline fill=\"none\" stroke=\"#888\" stroke-dasharray=\"4 3\" points=\"";
    double twod = 2.0 * (double)d / (double)n;
    for (double b = b_min; b <= -std::sqrt(twod); b += 0.02) {
        double a = std::sqrt(b * b - twod);
        if (a > a_max) continue;
        os << fmt(m.x(b)) << "," << fmt(m.y(a)) << " ";
    }
    os << "\"/>\n";

    for (const auto& e : walls) {
        if (!e.wall.is_semicircle()) {
            double b = e.wall.line().b.to_double_lossy();
            os << "<line x1=\"" << fmt(m.x(b)) << "\" y1=\"" << fmt(m.y(0)) << "\" x2=\""
               << fmt(m.x(b)) << "\" y2=\"" << fmt(m.y(a_max))
               << "\" stroke=\"#06c\" stroke-width=\"1.5\"/>\n";
            continue;
        }
        const auto& c = e.wall.circle();
        double center = c.center.to_double_lossy();
        double r = std::sqrt(c.radius_sq.to_double_lossy());
        os << "<path d=\"M " << fmt(m.x(center - r)) << " " << fmt(m.y(0)) << " A "
           << fmt(m.x(center + r) - m.x(center)) << " " << fmt(m.y(0) - m.y(r)) << " 0 0 1 "
           << fmt(m.x(center + r)) << " " << fmt(m.y(0))
           << "\" fill=\"none\" stroke=\"#06c\" stroke-width=\"1.5\"/>\n";
        os << "<text x=\"" << fmt(m.x(center)) << "\" y=\"" << fmt(m.y(r) - 4)
           << "\" font-size=\"11\" text-anchor=\"middle\" fill=\"#06c\">" << e.label
           << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace castelbound::svg
