#include "tdesign/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace tdesign {

namespace {

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

}  // namespace

std::string render_svg(const DesignFile& file) {
    if (file.kind != "euclidean")
        throw std::invalid_argument("render_svg: only euclidean designs can be rendered");
    if (file.dim != 2)
        throw std::invalid_argument("render_svg: only planar (dim=2) designs can be rendered");
    if (file.points.empty()) throw std::invalid_argument("render_svg: empty design");

    const WeightedPointSet x = to_point_set(file);
    const LayeredDesign ld = layer_decompose(x);

    const double rmax = *std::max_element(ld.radii.begin(), ld.radii.end());
    const double scale = 280.0 / rmax;
    double wmax = 0.0;
    for (double w : x.weights()) wmax = std::max(wmax, w);

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" "
           "viewBox=\"-320 -320 640 640\">\n";
    svg += "  <rect x=\"-320\" y=\"-320\" width=\"640\" height=\"640\" fill=\"white\"/>\n";
    svg += "  <line x1=\"-320\" y1=\"0\" x2=\"320\" y2=\"0\" stroke=\"#dddddd\"/>\n";
    svg += "  <line x1=\"0\" y1=\"-320\" x2=\"0\" y2=\"320\" stroke=\"#dddddd\"/>\n";
    for (double r : ld.radii)
        svg += "  <circle cx=\"0\" cy=\"0\" r=\"" + fmt(r * scale) +
               "\" fill=\"none\" stroke=\"#bbbbbb\" stroke-dasharray=\"4 3\"/>\n";
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double px = x.point(i)[0] * scale;
        const double py = -x.point(i)[1] * scale;  // SVG y axis points down
        const double marker = std::max(2.0, 12.0 * std::sqrt(x.weight(i) / wmax));
        svg += "  <circle cx=\"" + fmt(px) + "\" cy=\"" + fmt(py) + "\" r=\"" + fmt(marker) +
               "\" fill=\"#1f6fb2\" fill-opacity=\"0.75\" stroke=\"#10405f\"/>\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace tdesign
