#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>

#include "dirseq/io.hpp"

namespace dirseq {

namespace {

std::string fixed6(double v) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(6) << v;
    return os.str();
}

// Evenly spaced hues, full saturation; deterministic per class index.
std::string class_color(int index, int classes) {
    double h = 360.0 * index / std::max(classes, 1);
    double c = 0.85, m = 0.10;
    double hp = h / 60.0;
    double x = c * (1.0 - std::fabs(std::fmod(hp, 2.0) - 1.0));
    double r = 0, g = 0, b = 0;
    switch (static_cast<int>(hp) % 6) {
        case 0: r = c; g = x; break;
        case 1: r = x; g = c; break;
        case 2: g = c; b = x; break;
        case 3: g = x; b = c; break;
        case 4: r = x; b = c; break;
        default: r = c; b = x; break;
    }
    auto hex = [&](double v) {
        int byte = static_cast<int>(std::lround((v + m) * 255.0));
        std::ostringstream os;
        os << std::hex << std::setw(2) << std::setfill('0') << std::min(255, std::max(0, byte));
        return os.str();
    };
    return "#" + hex(r) + hex(g) + hex(b);
}

}  // namespace

std::string render_svg(const Configuration& cfg) {
    // Group connecting lines by direction class, each class by supporting
    // line; one segment is drawn per line, between its extreme points.
    std::map<Direction, std::vector<std::vector<int>>, AngleLess> classes;
    for (int i = 0; i < cfg.size(); ++i) {
        for (int j = i + 1; j < cfg.size(); ++j) {
            Direction dir = Direction::through(cfg.points[static_cast<std::size_t>(i)],
                                               cfg.points[static_cast<std::size_t>(j)]);
            auto& lines = classes[dir];
            FieldScalar key = cfg.points[static_cast<std::size_t>(i)].x * dir.dy -
                              cfg.points[static_cast<std::size_t>(i)].y * dir.dx;
            bool placed = false;
            for (auto& line : lines) {
                FieldScalar k0 = cfg.points[static_cast<std::size_t>(line[0])].x * dir.dy -
                                 cfg.points[static_cast<std::size_t>(line[0])].y * dir.dx;
                if (k0 == key) {
                    for (int m : {i, j})
                        if (std::find(line.begin(), line.end(), m) == line.end()) line.push_back(m);
                    placed = true;
                    break;
                }
            }
            if (!placed) lines.push_back({i, j});
        }
    }

    double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    for (std::size_t i = 0; i < cfg.points.size(); ++i) {
        double x = cfg.points[i].x.to_double();
        double y = cfg.points[i].y.to_double();
        if (i == 0 || x < min_x) min_x = x;
        if (i == 0 || x > max_x) max_x = x;
        if (i == 0 || y < min_y) min_y = y;
        if (i == 0 || y > max_y) max_y = y;
    }
    const double span = std::max({max_x - min_x, max_y - min_y, 1.0});
    const double margin = 0.12 * span;
    const double scale = 640.0 / (span + 2 * margin);
    auto sx = [&](double x) { return (x - min_x + margin) * scale; };
    auto sy = [&](double y) { return (max_y - y + margin) * scale; };  // y grows upward

    std::ostringstream os;
    const double w = (max_x - min_x + 2 * margin) * scale;
    const double h = (max_y - min_y + 2 * margin) * scale;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fixed6(w)
       << "\" height=\"" << fixed6(h) << "\" viewBox=\"0 0 " << fixed6(w) << " " << fixed6(h)
       << "\">\n";
    os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    const int total_classes = static_cast<int>(classes.size());
    int index = 0;
    for (const auto& [dir, lines] : classes) {
        os << "  <g class=\"direction-" << index << "\" stroke=\""
           << class_color(index, total_classes) << "\" stroke-width=\"1.5\">\n";
        for (const auto& line : lines) {
            // extreme members along the direction
            int lo = line[0], hi = line[0];
            for (int m : line) {
                auto along = [&](int q) {
                    return cfg.points[static_cast<std::size_t>(q)].x * dir.dx +
                           cfg.points[static_cast<std::size_t>(q)].y * dir.dy;
                };
                if (along(m) < along(lo)) lo = m;
                if (along(m) > along(hi)) hi = m;
            }
            const Point& a = cfg.points[static_cast<std::size_t>(lo)];
            const Point& b = cfg.points[static_cast<std::size_t>(hi)];
            os << "    <line x1=\"" << fixed6(sx(a.x.to_double())) << "\" y1=\""
               << fixed6(sy(a.y.to_double())) << "\" x2=\"" << fixed6(sx(b.x.to_double()))
               << "\" y2=\"" << fixed6(sy(b.y.to_double())) << "\"/>\n";
        }
        os << "  </g>\n";
        ++index;
    }
    for (const Point& p : cfg.points) {
        os << "  <circle cx=\"" << fixed6(sx(p.x.to_double())) << "\" cy=\""
           << fixed6(sy(p.y.to_double())) << "\" r=\"4.5\" fill=\"black\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace dirseq
