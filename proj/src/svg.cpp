#include "fronts/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "fronts/types.hpp"

namespace fronts {
namespace {

constexpr double kWidth = 800.0, kHeight = 600.0;
constexpr double kMargin = 60.0;

std::string num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

struct Frame {
    double x0, x1, y0, y1;  // data ranges

    double px(double x) const {
        const double span = x1 > x0 ? x1 - x0 : 1.0;
        return kMargin + (x - x0) / span * (kWidth - 2 * kMargin);
    }
    double py(double y) const {
        const double span = y1 > y0 ? y1 - y0 : 1.0;
        return kHeight - kMargin - (y - y0) / span * (kHeight - 2 * kMargin);
    }
};

void open_doc(std::ostringstream& o) {
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << int(kWidth)
      << "\" height=\"" << int(kHeight) << "\" viewBox=\"0 0 " << int(kWidth)
      << " " << int(kHeight) << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

void axes(std::ostringstream& o, const Frame& f, const std::string& xlabel,
          const std::string& ylabel) {
    o << "<g stroke=\"black\" stroke-width=\"1\">\n"
      << "<line x1=\"" << num(kMargin) << "\" y1=\"" << num(kHeight - kMargin)
      << "\" x2=\"" << num(kWidth - kMargin) << "\" y2=\""
      << num(kHeight - kMargin) << "\"/>\n"
      << "<line x1=\"" << num(kMargin) << "\" y1=\"" << num(kMargin)
      << "\" x2=\"" << num(kMargin) << "\" y2=\"" << num(kHeight - kMargin)
      << "\"/>\n</g>\n";
    for (int i = 0; i <= 5; ++i) {
        const double xv = f.x0 + (f.x1 - f.x0) * i / 5.0;
        const double yv = f.y0 + (f.y1 - f.y0) * i / 5.0;
        o << "<text x=\"" << num(f.px(xv)) << "\" y=\"" << num(kHeight - kMargin + 20)
          << "\" font-size=\"12\" text-anchor=\"middle\">" << num(xv) << "</text>\n";
        o << "<text x=\"" << num(kMargin - 8) << "\" y=\"" << num(f.py(yv) + 4)
          << "\" font-size=\"12\" text-anchor=\"end\">" << num(yv) << "</text>\n";
    }
    o << "<text x=\"" << num(kWidth / 2) << "\" y=\"" << num(kHeight - 15)
      << "\" font-size=\"14\" text-anchor=\"middle\">" << xlabel << "</text>\n";
    o << "<text x=\"18\" y=\"" << num(kHeight / 2)
      << "\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
      << num(kHeight / 2) << ")\">" << ylabel << "</text>\n";
}

template <class GetX, class GetY, class Seq>
void polyline(std::ostringstream& o, const Frame& f, const Seq& seq, GetX gx,
              GetY gy, const std::string& color, const std::string& dash = "") {
    o << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\"";
    if (!dash.empty()) o << " stroke-dasharray=\"" << dash << "\"";
    o << " points=\"";
    bool first = true;
    for (const auto& s : seq) {
        if (!first) o << " ";
        first = false;
        o << num(f.px(gx(s))) << "," << num(f.py(gy(s)));
    }
    o << "\"/>\n";
}

void legend_entry(std::ostringstream& o, int slot, const std::string& color,
                  const std::string& text, const std::string& dash = "") {
    const double y = kMargin + 18.0 * slot;
    o << "<line x1=\"" << num(kWidth - kMargin - 150) << "\" y1=\"" << num(y)
      << "\" x2=\"" << num(kWidth - kMargin - 120) << "\" y2=\"" << num(y)
      << "\" stroke=\"" << color << "\" stroke-width=\"1.5\"";
    if (!dash.empty()) o << " stroke-dasharray=\"" << dash << "\"";
    o << "/>\n<text x=\"" << num(kWidth - kMargin - 112) << "\" y=\"" << num(y + 4)
      << "\" font-size=\"12\">" << text << "</text>\n";
}

}  // namespace

std::string svg_fronts_plot(const std::vector<CoupledRecord>& records,
                            const SpeedTable& table) {
    if (records.empty()) throw DataError("fronts plot needs a non-empty time series");
    Frame f{records.front().t, records.back().t, 0.0, 0.0};
    for (const auto& r : records) f.y1 = std::max({f.y1, r.g, r.h});
    const double t0 = records.front().t, tend = records.back().t;
    const double ref_b = records.front().g + table.kbar_beta * (tend - t0);
    const double ref_m = records.front().h + table.kund_mu * (tend - t0);
    f.y1 = std::max({f.y1, ref_b, ref_m}) * 1.05;

    std::ostringstream o;
    open_doc(o);
    axes(o, f, "t", "front position");
    polyline(o, f, records, [](const CoupledRecord& r) { return r.t; },
             [](const CoupledRecord& r) { return r.g; }, "#1f77b4");
    polyline(o, f, records, [](const CoupledRecord& r) { return r.t; },
             [](const CoupledRecord& r) { return r.h; }, "#d62728");
    const std::array<std::pair<double, double>, 2> rb{{{t0, records.front().g},
                                                       {tend, ref_b}}};
    const std::array<std::pair<double, double>, 2> rm{{{t0, records.front().h},
                                                       {tend, ref_m}}};
    polyline(o, f, rb, [](const auto& p) { return p.first; },
             [](const auto& p) { return p.second; }, "#1f77b4", "6 4");
    polyline(o, f, rm, [](const auto& p) { return p.first; },
             [](const auto& p) { return p.second; }, "#d62728", "6 4");
    legend_entry(o, 0, "#1f77b4", "g(t)");
    legend_entry(o, 1, "#d62728", "h(t)");
    legend_entry(o, 2, "#1f77b4", "slope kbar_beta = " + num(table.kbar_beta),
                 "6 4");
    legend_entry(o, 3, "#d62728", "slope kund_mu = " + num(table.kund_mu), "6 4");
    o << "</svg>\n";
    return o.str();
}

std::string svg_profile_plot(const Snapshot& snap) {
    if (snap.x.empty()) throw DataError("profile plot needs a non-empty snapshot");
    Frame f{snap.x.front(), snap.x.back(), 0.0, 0.0};
    for (size_t i = 0; i < snap.x.size(); ++i)
        f.y1 = std::max({f.y1, snap.u[i], snap.v[i]});
    f.y1 = f.y1 > 0.0 ? f.y1 * 1.05 : 1.0;

    std::vector<size_t> idx(snap.x.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;

    std::ostringstream o;
    open_doc(o);
    axes(o, f, "x", "density");
    polyline(o, f, idx, [&](size_t i) { return snap.x[i]; },
             [&](size_t i) { return snap.u[i]; }, "#1f77b4");
    polyline(o, f, idx, [&](size_t i) { return snap.x[i]; },
             [&](size_t i) { return snap.v[i]; }, "#d62728");
    legend_entry(o, 0, "#1f77b4", "u(x)");
    legend_entry(o, 1, "#d62728", "v(x)");
    o << "<text x=\"" << num(kWidth / 2) << "\" y=\"" << num(kMargin - 20)
      << "\" font-size=\"14\" text-anchor=\"middle\">t = " << num(snap.t)
      << "</text>\n";
    o << "</svg>\n";
    return o.str();
}

std::string svg_phase_map(const std::vector<PhaseCell>& cells, int rows, int cols,
                          const std::string& xlabel, const std::string& ylabel) {
    if (rows <= 0 || cols <= 0 || int(cells.size()) != rows * cols)
        throw DataError("phase map needs rows*cols cells");
    const double cw = (kWidth - 2 * kMargin) / cols;
    const double ch = (kHeight - 2 * kMargin) / rows;
    auto color = [](const std::string& label) -> const char* {
        if (label == "both") return "#2ca02c";
        if (label == "prey") return "#1f77b4";
        if (label == "predator") return "#d62728";
        if (label == "none") return "#cccccc";
        return "#000000";  // failed
    };

    std::ostringstream o;
    open_doc(o);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            const PhaseCell& cell = cells[size_t(r) * cols + c];
            const double x = kMargin + c * cw;
            const double y = kHeight - kMargin - (r + 1) * ch;
            o << "<rect x=\"" << num(x) << "\" y=\"" << num(y) << "\" width=\""
              << num(cw) << "\" height=\"" << num(ch) << "\" fill=\""
              << color(cell.label) << "\" stroke=\"white\"/>\n";
            if (r == 0)
                o << "<text x=\"" << num(x + cw / 2) << "\" y=\""
                  << num(kHeight - kMargin + 20)
                  << "\" font-size=\"12\" text-anchor=\"middle\">" << num(cell.x)
                  << "</text>\n";
            if (c == 0)
                o << "<text x=\"" << num(kMargin - 8) << "\" y=\""
                  << num(y + ch / 2 + 4)
                  << "\" font-size=\"12\" text-anchor=\"end\">" << num(cell.y)
                  << "</text>\n";
        }
    }
    o << "<text x=\"" << num(kWidth / 2) << "\" y=\"" << num(kHeight - 15)
      << "\" font-size=\"14\" text-anchor=\"middle\">" << xlabel << "</text>\n";
    o << "<text x=\"18\" y=\"" << num(kHeight / 2)
      << "\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
      << num(kHeight / 2) << ")\">" << ylabel << "</text>\n";
    o << "</svg>\n";
    return o.str();
}

}  // namespace fronts
