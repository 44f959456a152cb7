#include "replearn/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <stdexcept>

namespace replearn {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

// Fixed three-stop gradient (pale yellow -> orange -> dark red) over the
// clamped [0, 0.25] error scale.
std::string error_color(double err) {
    double t = std::clamp(err / 0.25, 0.0, 1.0);
    const int stops[3][3] = {{255, 255, 204}, {253, 141, 60}, {128, 0, 38}};
    double pos = t * 2.0;
    int seg = pos < 1.0 ? 0 : 1;
    double f = pos - seg;
    char buf[8];
    std::snprintf(buf, sizeof(buf), "#%02x%02x%02x",
                  static_cast<int>(std::lround(stops[seg][0] + f * (stops[seg + 1][0] - stops[seg][0]))),
                  static_cast<int>(std::lround(stops[seg][1] + f * (stops[seg + 1][1] - stops[seg][1]))),
                  static_cast<int>(std::lround(stops[seg][2] + f * (stops[seg + 1][2] - stops[seg][2]))));
    return buf;
}

std::string text_el(double x, double y, const std::string& s, const std::string& anchor = "middle",
                    int size = 11) {
    return "<text x=\"" + fmt(x) + "\" y=\"" + fmt(y) + "\" font-family=\"sans-serif\" font-size=\"" +
           std::to_string(size) + "\" text-anchor=\"" + anchor + "\">" + s + "</text>\n";
}

}  // namespace

std::string svg_heatmap(std::span<const SummaryCell> summary) {
    if (summary.empty()) throw std::invalid_argument("empty summary");
    std::set<int> n_set, m_set;
    std::map<std::pair<int, int>, const SummaryCell*> cells;
    for (const auto& c : summary) {
        n_set.insert(c.n);
        m_set.insert(c.m);
        cells[{c.n, c.m}] = &c;
    }
    const std::vector<int> ns(n_set.begin(), n_set.end());
    const std::vector<int> ms(m_set.begin(), m_set.end());

    const double cell_w = 34, cell_h = 26;
    const double left = 70, top = 40, bottom = 70, right = 40;
    const double plot_w = cell_w * ms.size(), plot_h = cell_h * ns.size();
    const double width = left + plot_w + right, height = top + plot_h + bottom;

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width) + "\" height=\"" +
           fmt(height) + "\" viewBox=\"0 0 " + fmt(width) + " " + fmt(height) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg += text_el(left + plot_w / 2, 20, "mean generalisation error", "middle", 13);

    for (std::size_t yi = 0; yi < ns.size(); ++yi) {
        // Smallest n at the bottom row.
        const double y = top + plot_h - (yi + 1) * cell_h;
        for (std::size_t xi = 0; xi < ms.size(); ++xi) {
            const double x = left + xi * cell_w;
            auto it = cells.find({ns[yi], ms[xi]});
            std::string fill = "#d9d9d9";
            std::string title = "no data";
            if (it != cells.end() && it->second->count > 0) {
                fill = error_color(it->second->mean_gen_error);
                title = "n=" + std::to_string(ns[yi]) + " m=" + std::to_string(ms[xi]) +
                        " mean=" + fmt(it->second->mean_gen_error);
            }
            svg += "<rect x=\"" + fmt(x) + "\" y=\"" + fmt(y) + "\" width=\"" + fmt(cell_w) +
                   "\" height=\"" + fmt(cell_h) + "\" fill=\"" + fill +
                   "\" stroke=\"white\" stroke-width=\"1\"><title>" + title + "</title></rect>\n";
        }
        svg += text_el(left - 8, top + plot_h - (yi + 0.5) * cell_h + 4, std::to_string(ns[yi]), "end");
    }
    for (std::size_t xi = 0; xi < ms.size(); ++xi)
        svg += text_el(left + (xi + 0.5) * cell_w, top + plot_h + 16, std::to_string(ms[xi]));
    svg += text_el(left + plot_w / 2, top + plot_h + 34, "m (examples per task)");
    svg += text_el(16, top + plot_h / 2, "n", "middle", 12);

    // Legend: fixed [0, 0.25] scale.
    const double ly = height - 24, lw = 120, lx = left;
    for (int i = 0; i < 24; ++i) {
        svg += "<rect x=\"" + fmt(lx + i * (lw / 24)) + "\" y=\"" + fmt(ly) + "\" width=\"" +
               fmt(lw / 24 + 0.5) + "\" height=\"10\" fill=\"" + error_color(0.25 * i / 23.0) + "\"/>\n";
    }
    svg += text_el(lx, ly - 4, "0", "start", 10);
    svg += text_el(lx + lw, ly - 4, "0.25 (scale fixed)", "start", 10);
    svg += "</svg>\n";
    return svg;
}

std::string svg_scatter(std::span<const ScatterPoint> scatter) {
    if (scatter.empty()) throw std::invalid_argument("empty scatter");
    for (const auto& p : scatter)
        if (p.rep_output.size() != 2)
            throw std::invalid_argument("scatter SVG needs a 2-D representation");

    const double size = 420, margin = 50;
    const double plot = size - 2 * margin;
    auto px = [&](double v) { return margin + v * plot; };
    auto py = [&](double v) { return size - margin - v * plot; };

    std::set<int> cats;
    for (const auto& p : scatter) cats.insert(p.ones_count);

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(size) + "\" height=\"" + fmt(size) +
           "\" viewBox=\"0 0 " + fmt(size) + " " + fmt(size) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg += "<rect x=\"" + fmt(margin) + "\" y=\"" + fmt(margin) + "\" width=\"" + fmt(plot) +
           "\" height=\"" + fmt(plot) + "\" fill=\"none\" stroke=\"#555555\"/>\n";
    svg += text_el(size / 2, size - 12, "representation output 1");
    svg += text_el(14, size / 2, "2", "middle");
    svg += text_el(margin, size - margin + 16, "0", "middle", 10);
    svg += text_el(size - margin, size - margin + 16, "1", "middle", 10);
    svg += text_el(margin - 10, size - margin + 4, "0", "end", 10);
    svg += text_el(margin - 10, margin + 4, "1", "end", 10);

    const char* colors[4] = {"#1b63a5", "#cc4b00", "#1d8a30", "#8d2fa8"};
    auto marker = [&](int shape_idx, double cx, double cy, const std::string& color) {
        const double r = 4.0;
        switch (shape_idx % 4) {
            case 0:
                return "<circle cx=\"" + fmt(cx) + "\" cy=\"" + fmt(cy) + "\" r=\"" + fmt(r) +
                       "\" fill=\"none\" stroke=\"" + color + "\"/>\n";
            case 1:
                return "<rect x=\"" + fmt(cx - r) + "\" y=\"" + fmt(cy - r) + "\" width=\"" + fmt(2 * r) +
                       "\" height=\"" + fmt(2 * r) + "\" fill=\"none\" stroke=\"" + color + "\"/>\n";
            case 2:
                return "<path d=\"M " + fmt(cx) + " " + fmt(cy - r) + " L " + fmt(cx - r) + " " +
                       fmt(cy + r) + " L " + fmt(cx + r) + " " + fmt(cy + r) +
                       " Z\" fill=\"none\" stroke=\"" + color + "\"/>\n";
            default:
                return "<path d=\"M " + fmt(cx) + " " + fmt(cy - r) + " L " + fmt(cx + r) + " " + fmt(cy) +
                       " L " + fmt(cx) + " " + fmt(cy + r) + " L " + fmt(cx - r) + " " + fmt(cy) +
                       " Z\" fill=\"none\" stroke=\"" + color + "\"/>\n";
        }
    };

    std::vector<int> cat_list(cats.begin(), cats.end());
    auto cat_index = [&](int c) {
        return static_cast<int>(std::find(cat_list.begin(), cat_list.end(), c) - cat_list.begin());
    };
    for (const auto& p : scatter) {
        const int ci = cat_index(p.ones_count);
        svg += marker(ci, px(p.rep_output[0]), py(p.rep_output[1]), colors[ci % 4]);
    }
    for (std::size_t i = 0; i < cat_list.size(); ++i) {
        const double lx = margin + 8, ly = margin + 14 + 16 * i;
        svg += marker(static_cast<int>(i), lx, ly - 4, colors[i % 4]);
        svg += text_el(lx + 10, ly, std::to_string(cat_list[i]) + " ones", "start", 10);
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace replearn
