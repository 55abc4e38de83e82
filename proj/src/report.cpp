#include "d2dsim/report.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <vector>

namespace d2dsim {

void write_sweep_csv(std::ostream& os, const SweepReport& report) {
    os << "axis_value,algorithm,mean_sum_rate,stderr,trials,excluded_trials,mean_energy\n";
    auto row = [&](const SweepPoint& p, const char* label, const SweepPointStats& s) {
        os << p.value << ',' << label << ',' << s.mean_sum_rate << ',' << s.sem << ','
           << p.trials << ',' << p.excluded << ',' << s.mean_energy << '\n';
    };
    for (const auto& p : report.points) {
        row(p, "4SA", p.fourstep);
        row(p, "RA", p.ra);
    }
}

namespace {

struct Series {
    std::vector<double> x, y, err;
    const char* color;
    const char* name;
    bool dashed;
};

std::string polyline(const Series& s, const std::function<double(double)>& px,
                     const std::function<double(double)>& py) {
    std::ostringstream os;
    os << "  <polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\"";
    if (s.dashed) os << " stroke-dasharray=\"6,4\"";
    os << " points=\"";
    for (size_t i = 0; i < s.x.size(); ++i)
        os << px(s.x[i]) << ',' << py(s.y[i]) << ' ';
    os << "\"/>\n";
    for (size_t i = 0; i < s.x.size(); ++i) {
        const double cx = px(s.x[i]);
        os << "  <circle cx=\"" << cx << "\" cy=\"" << py(s.y[i]) << "\" r=\"2.5\" fill=\""
           << s.color << "\"/>\n";
        if (s.err[i] > 0.0) {
            os << "  <line x1=\"" << cx << "\" y1=\"" << py(s.y[i] - s.err[i]) << "\" x2=\"" << cx
               << "\" y2=\"" << py(s.y[i] + s.err[i]) << "\" stroke=\"" << s.color
               << "\" stroke-width=\"1\"/>\n";
        }
    }
    return os.str();
}

} // namespace

void write_sweep_svg(std::ostream& os, const SweepReport& report, const std::string& title,
                     bool log_x) {
    constexpr double w = 640, h = 440, ml = 64, mr = 20, mt = 40, mb = 48;

    Series s4{{}, {}, {}, "#1f6fb4", "4SA", false};
    Series sra{{}, {}, {}, "#c0392b", "RA", true};
    for (const auto& p : report.points) {
        const double x = log_x ? std::log2(p.value) : p.value;
        if (std::isfinite(p.fourstep.mean_sum_rate)) {
            s4.x.push_back(x);
            s4.y.push_back(p.fourstep.mean_sum_rate);
            s4.err.push_back(p.fourstep.sem);
        }
        if (std::isfinite(p.ra.mean_sum_rate)) {
            sra.x.push_back(x);
            sra.y.push_back(p.ra.mean_sum_rate);
            sra.err.push_back(p.ra.sem);
        }
    }

    double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    bool any = false;
    for (const Series* s : {&s4, &sra}) {
        for (size_t i = 0; i < s->x.size(); ++i) {
            if (!any) {
                xmin = xmax = s->x[i];
                ymin = ymax = s->y[i];
                any = true;
            }
            xmin = std::min(xmin, s->x[i]);
            xmax = std::max(xmax, s->x[i]);
            ymin = std::min(ymin, s->y[i] - s->err[i]);
            ymax = std::max(ymax, s->y[i] + s->err[i]);
        }
    }
    if (xmax == xmin) xmax = xmin + 1;
    if (ymax == ymin) ymax = ymin + 1;
    const double ypad = 0.05 * (ymax - ymin);
    ymin -= ypad;
    ymax += ypad;

    auto px = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * (w - ml - mr); };
    auto py = [&](double y) { return h - mb - (y - ymin) / (ymax - ymin) * (h - mt - mb); };

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
       << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n"
       << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
       << "  <text x=\"" << w / 2 << "\" y=\"22\" text-anchor=\"middle\" font-family=\"sans-serif\""
       << " font-size=\"14\">" << title << "</text>\n";

    // axes + ticks
    os << "  <line x1=\"" << ml << "\" y1=\"" << h - mb << "\" x2=\"" << w - mr << "\" y2=\""
       << h - mb << "\" stroke=\"black\"/>\n"
       << "  <line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << h - mb
       << "\" stroke=\"black\"/>\n";
    constexpr int ticks = 5;
    for (int i = 0; i <= ticks; ++i) {
        const double fx = xmin + (xmax - xmin) * i / ticks;
        const double fy = ymin + (ymax - ymin) * i / ticks;
        std::ostringstream xv, yv;
        xv << std::setprecision(4) << (log_x ? std::exp2(fx) : fx);
        yv << std::setprecision(4) << fy;
        os << "  <line x1=\"" << px(fx) << "\" y1=\"" << h - mb << "\" x2=\"" << px(fx)
           << "\" y2=\"" << h - mb + 4 << "\" stroke=\"black\"/>\n"
           << "  <text x=\"" << px(fx) << "\" y=\"" << h - mb + 18
           << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" << xv.str()
           << "</text>\n"
           << "  <line x1=\"" << ml - 4 << "\" y1=\"" << py(fy) << "\" x2=\"" << ml << "\" y2=\""
           << py(fy) << "\" stroke=\"black\"/>\n"
           << "  <text x=\"" << ml - 8 << "\" y=\"" << py(fy) + 4
           << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << yv.str()
           << "</text>\n";
    }
    os << "  <text x=\"" << (ml + w - mr) / 2 << "\" y=\"" << h - 10
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
       << axis_name(report.axis) << (log_x ? " (log scale)" : "") << "</text>\n"
       << "  <text x=\"16\" y=\"" << (mt + h - mb) / 2
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\""
       << " transform=\"rotate(-90 16 " << (mt + h - mb) / 2 << ")\">sum rate (bits/s/Hz)</text>\n";

    for (const Series* s : {&s4, &sra})
        if (!s->x.empty()) os << polyline(*s, px, py);

    // legend
    const double lx = w - mr - 110, ly = mt + 10;
    os << "  <rect x=\"" << lx - 8 << "\" y=\"" << ly - 14 << "\" width=\"110\" height=\"40\""
       << " fill=\"white\" stroke=\"#888\"/>\n";
    int li = 0;
    for (const Series* s : {&s4, &sra}) {
        const double y = ly + li * 18;
        os << "  <line x1=\"" << lx << "\" y1=\"" << y << "\" x2=\"" << lx + 26 << "\" y2=\"" << y
           << "\" stroke=\"" << s->color << "\" stroke-width=\"1.5\""
           << (s->dashed ? " stroke-dasharray=\"6,4\"" : "") << "/>\n"
           << "  <text x=\"" << lx + 32 << "\" y=\"" << y + 4
           << "\" font-family=\"sans-serif\" font-size=\"12\">" << s->name << "</text>\n";
        ++li;
    }
    os << "</svg>\n";
}

void write_allocation_csv(std::ostream& os, const AllocationResult& result) {
    os << "cue,cluster,rate,p_c,p_d...\n";
    for (const auto& pair : result.matched) {
        os << pair.cue << ',' << pair.cluster << ',' << pair.rate << ',' << pair.powers.p_c;
        for (int i = 0; i < int(pair.powers.p_d.size()); ++i) os << ',' << pair.powers.p_d(i);
        os << '\n';
    }
}

} // namespace d2dsim
