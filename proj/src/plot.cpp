#include "cyclic_stab/plot.hpp"

#include <cstdio>
#include <sstream>

namespace cstab {

namespace {

constexpr double kSize = 400, kCenter = 200, kScale = 100;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    std::string s = buf;
    return s == "-0.00" ? "0.00" : s;
}

double px(const Rat& re) { return kCenter + kScale * re.get_d(); }
double py(const Rat& im) { return kCenter - kScale * im.get_d(); }

}  // namespace

std::string render_svg(const CategoryPresentation* c, const ChargeTriple* r, const ChargePath* path) {
    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
      << "\" viewBox=\"0 0 " << kSize << " " << kSize << "\" font-family=\"monospace\" font-size=\"12\">\n";
    o << "<rect x=\"0\" y=\"0\" width=\"400\" height=\"400\" fill=\"white\"/>\n";
    o << "<line class=\"axis\" x1=\"0\" y1=\"200\" x2=\"400\" y2=\"200\" stroke=\"#999\" stroke-width=\"1\"/>\n";
    o << "<line class=\"axis\" x1=\"200\" y1=\"0\" x2=\"200\" y2=\"400\" stroke=\"#999\" stroke-width=\"1\"/>\n";
    o << "<circle class=\"pillar\" cx=\"200\" cy=\"200\" r=\"4\" fill=\"black\"/>\n";
    if (path && !path->empty()) {
        size_t rank = path->front().size();
        for (size_t k = 0; k < rank; ++k) {
            bool moves = false;
            for (const auto& s : *path)
                if (!(s.at(k) == path->front().at(k))) moves = true;
            if (!moves) continue;
            o << "<polyline class=\"path\" fill=\"none\" stroke=\"#555\" stroke-dasharray=\"3,3\" points=\"";
            for (size_t i = 0; i < path->size(); ++i)
                o << (i ? " " : "") << fmt(px((*path)[i][k].re)) << "," << fmt(py((*path)[i][k].im));
            o << "\"/>\n";
        }
    }
    if (c && r) {
        for (const auto& obj : c->objects) {
            if (!r->v.count(obj)) continue;
            Complex z = r->charge(obj);
            double x = px(z.re), y = py(z.im);
            o << "<line class=\"charge\" x1=\"200.00\" y1=\"200.00\" x2=\"" << fmt(x) << "\" y2=\"" << fmt(y)
              << "\" stroke=\"#1f4e99\" stroke-width=\"2\"/>\n";
            double lx = x + (x >= kCenter ? 6 : -6), ly = y + (y > kCenter ? 14 : -6);
            o << "<text x=\"" << fmt(lx) << "\" y=\"" << fmt(ly) << "\" text-anchor=\""
              << (x >= kCenter ? "start" : "end") << "\">" << c->name(obj) << "</text>\n";
        }
    }
    o << "</svg>\n";
    return o.str();
}

}  // namespace cstab
