#include "annulus/report.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include <json.hpp>

#include "annulus/instance_io.hpp"

namespace annulus {

ResultRecord make_record(const std::string& algorithm,
                         const std::optional<Solution>& sol, double elapsed_ms) {
    ResultRecord rec;
    rec.algorithm = algorithm;
    rec.elapsed_ms = elapsed_ms;
    if (!sol) return rec;
    rec.has_solution = true;
    rec.width = sol->width;
    rec.outer = sol->annulus.outer;
    rec.inner = sol->annulus.inner;
    rec.inner_support = sol->annulus.inner_support;
    rec.outer_support = sol->annulus.outer_support;
    rec.strip_a = sol->a_id;
    rec.strip_b = sol->b_id;
    rec.origin = sol->origin;
    return rec;
}

ResultRecord make_record(const std::string& algorithm,
                         const std::optional<PointInnerSolution>& sol,
                         double elapsed_ms) {
    ResultRecord rec;
    rec.algorithm = algorithm;
    rec.elapsed_ms = elapsed_ms;
    if (!sol) return rec;
    rec.has_solution = true;
    rec.width = sol->width;
    rec.outer = sol->outer;
    rec.center = Point{sol->center_id, (sol->outer.xmin + sol->outer.xmax) / 2,
                       (sol->outer.ymin + sol->outer.ymax) / 2};
    rec.origin = "degenerate";
    return rec;
}

namespace {

std::string rect_text(const AxisRect& r) {
    return "[" + format_coord(r.xmin) + ", " + format_coord(r.xmax) + "] x [" +
           format_coord(r.ymin) + ", " + format_coord(r.ymax) + "]";
}

std::string support_text(const std::array<int, 4>& s) {
    return "top=" + std::to_string(s[kEdgeTop]) +
           " right=" + std::to_string(s[kEdgeRight]) +
           " bottom=" + std::to_string(s[kEdgeBottom]) +
           " left=" + std::to_string(s[kEdgeLeft]);
}

}  // namespace

std::string to_text(const ResultRecord& rec) {
    std::string out = "algorithm: " + rec.algorithm + "\n";
    if (!rec.has_solution) {
        out += "no annulus exists\n";
        return out;
    }
    out += "width " + format_coord(rec.width) + "\n";
    out += "outer " + rect_text(rec.outer) + "\n";
    if (rec.inner) {
        out += "inner " + rect_text(*rec.inner) + "\n";
        out += "inner support: " + support_text(rec.inner_support) + "\n";
        out += "outer support: " + support_text(rec.outer_support) + "\n";
    }
    if (rec.center) {
        out += "center point " + std::to_string(rec.center->id) + " at (" +
               format_coord(rec.center->x) + ", " + format_coord(rec.center->y) +
               ")\n";
    }
    if (!rec.origin.empty()) {
        out += "origin: " + rec.origin + "\n";
    }
    return out;
}

std::string to_json(const ResultRecord& rec) {
    using json = nlohmann::ordered_json;
    json j;
    j["algorithm"] = rec.algorithm;
    if (!rec.has_solution) {
        j["width"] = nullptr;
        j["outer"] = nullptr;
    } else {
        j["width"] = rec.width;
        j["outer"] = {{"xmin", rec.outer.xmin},
                      {"ymin", rec.outer.ymin},
                      {"xmax", rec.outer.xmax},
                      {"ymax", rec.outer.ymax}};
    }
    if (rec.inner) {
        j["inner"] = {{"xmin", rec.inner->xmin},
                      {"ymin", rec.inner->ymin},
                      {"xmax", rec.inner->xmax},
                      {"ymax", rec.inner->ymax}};
    } else {
        j["inner"] = nullptr;
    }
    if (rec.center) {
        j["center"] = {{"id", rec.center->id},
                       {"x", rec.center->x},
                       {"y", rec.center->y}};
    } else {
        j["center"] = nullptr;
    }
    if (rec.strip_a >= 0) {
        j["strip"] = {{"a", rec.strip_a}, {"b", rec.strip_b}};
    } else {
        j["strip"] = nullptr;
    }
    j["elapsed_ms"] = rec.elapsed_ms;
    return j.dump();
}

namespace {

struct SvgFrame {
    double scale, ox, oy;  // svg_x = (x - ox) * scale; svg_y = (oy - y) * scale
    double x(double v) const { return (v - ox) * scale; }
    double y(double v) const { return (oy - v) * scale; }
};

void svg_rect(std::ostream& out, const SvgFrame& f, const AxisRect& r,
              const char* stroke) {
    out << "  <rect x=\"" << format_coord(f.x(r.xmin)) << "\" y=\""
        << format_coord(f.y(r.ymax)) << "\" width=\""
        << format_coord((r.xmax - r.xmin) * f.scale) << "\" height=\""
        << format_coord((r.ymax - r.ymin) * f.scale) << "\" fill=\"none\" stroke=\""
        << stroke << "\" stroke-width=\"2\"/>\n";
}

}  // namespace

void render_svg(std::ostream& out, std::span<const Point> points,
                const ResultRecord& rec) {
    double xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
    bool first = true;
    auto grow = [&](double x, double y) {
        if (first) {
            xmin = xmax = x;
            ymin = ymax = y;
            first = false;
            return;
        }
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    };
    for (const Point& p : points) grow(p.x, p.y);
    if (rec.has_solution) {
        grow(rec.outer.xmin, rec.outer.ymin);
        grow(rec.outer.xmax, rec.outer.ymax);
    }
    const double span = std::max({xmax - xmin, ymax - ymin, 1.0});
    const double margin = 0.05 * span;
    xmin -= margin;
    ymin -= margin;
    xmax += margin;
    ymax += margin;

    constexpr double kView = 640.0;
    SvgFrame f{kView / std::max(xmax - xmin, ymax - ymin), xmin, ymax};
    const double w = (xmax - xmin) * f.scale;
    const double h = (ymax - ymin) * f.scale;

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
        << format_coord(w) << "\" height=\"" << format_coord(h)
        << "\" viewBox=\"0 0 " << format_coord(w) << " " << format_coord(h)
        << "\">\n";
    if (rec.has_solution) {
        svg_rect(out, f, rec.outer, "#1f6fb2");
        if (rec.inner) {
            svg_rect(out, f, *rec.inner, "#2ca05a");
        }
        if (rec.center) {
            const double cx = f.x(rec.center->x);
            const double cy = f.y(rec.center->y);
            const double arm = 6.0;
            out << "  <path d=\"M " << format_coord(cx - arm) << " "
                << format_coord(cy) << " L " << format_coord(cx + arm) << " "
                << format_coord(cy) << " M " << format_coord(cx) << " "
                << format_coord(cy - arm) << " L " << format_coord(cx) << " "
                << format_coord(cy + arm)
                << "\" stroke=\"#2ca05a\" stroke-width=\"2\"/>\n";
        }
    }
    for (const Point& p : points) {
        out << "  <circle cx=\"" << format_coord(f.x(p.x)) << "\" cy=\""
            << format_coord(f.y(p.y)) << "\" r=\"3\" fill=\"#d03525\"/>\n";
    }
    out << "</svg>\n";
}

bool revalidate(const ResultRecord& rec, std::span<const Point> points) {
    if (!rec.has_solution) return true;
    if (rec.inner) {
        Annulus a;
        a.outer = rec.outer;
        a.inner = *rec.inner;
        a.widths = annulus_widths(a.outer, a.inner);
        a.inner_support = rec.inner_support;
        a.outer_support = rec.outer_support;
        return a.widths.width == rec.width && a.widths.width > 0 &&
               is_empty_annulus(a, points) && annulus_well_formed(a, points);
    }
    if (rec.center) {
        for (const Point& p : points) {
            if (p.id != rec.center->id && strictly_inside(p, rec.outer)) {
                return false;
            }
        }
        return rec.width > 0;
    }
    return false;
}

}  // namespace annulus
