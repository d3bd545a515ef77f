#include "annulus/instance_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_set>

namespace annulus {

std::string format_coord(double v) {
    char buf[64];
    char* end;
    if (v == std::floor(v) && std::fabs(v) < 1e15) {
        auto res = std::to_chars(buf, buf + sizeof(buf),
                                 static_cast<long long>(v));
        end = res.ptr;
    } else {
        auto res = std::to_chars(buf, buf + sizeof(buf), v);
        end = res.ptr;
    }
    return std::string(buf, end);
}

ParsedInstance parse_instance(std::istream& in) {
    ParsedInstance out;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r\n\v\f") == std::string::npos) continue;
        std::istringstream fields(line);
        double x, y;
        if (!(fields >> x >> y)) {
            throw ParseError(line_no, "expected \"x y\", got \"" + line + "\"");
        }
        std::string trailing;
        if (fields >> trailing) {
            throw ParseError(line_no, "trailing data \"" + trailing + "\"");
        }
        if (!std::isfinite(x) || !std::isfinite(y)) {
            throw ParseError(line_no, "coordinates must be finite");
        }
        const int id = static_cast<int>(out.points.size());
        out.points.push_back({id, x, y});
        out.source_lines.push_back(line_no);
    }
    return out;
}

ParsedInstance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    return parse_instance(in);
}

std::string format_instance(std::span<const Point> points,
                            const std::string& header_comment) {
    std::string out;
    if (!header_comment.empty()) {
        out += "# " + header_comment + "\n";
    }
    for (const Point& p : points) {
        out += format_coord(p.x) + " " + format_coord(p.y) + "\n";
    }
    return out;
}

void save_instance(const std::string& path, std::span<const Point> points,
                   const std::string& header_comment) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    out << format_instance(points, header_comment);
}

namespace {

// Rejection-sampled uniform in [0, bound]; independent of the standard
// library's distribution implementations, so sequences are stable across
// platforms for a fixed seed.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t span = bound + 1;
    if (span == 0) return rng();  // bound == UINT64_MAX
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t r;
    do {
        r = rng();
    } while (r >= limit);
    return r % span;
}

std::vector<long long> sample_distinct(int count, long long max_inclusive,
                                       std::mt19937_64& rng) {
    std::vector<long long> values;
    values.reserve(count);
    if (max_inclusive + 1 <= 4LL * count) {
        std::vector<long long> pool(max_inclusive + 1);
        std::iota(pool.begin(), pool.end(), 0LL);
        for (int i = 0; i < count; ++i) {
            const auto j = i + static_cast<long long>(
                                   bounded(rng, pool.size() - 1 - i));
            std::swap(pool[i], pool[j]);
            values.push_back(pool[i]);
        }
    } else {
        std::unordered_set<long long> seen;
        while (static_cast<int>(values.size()) < count) {
            const auto v = static_cast<long long>(bounded(rng, max_inclusive));
            if (seen.insert(v).second) values.push_back(v);
        }
    }
    return values;
}

}  // namespace

std::vector<Point> generate_instance(int n, std::uint64_t seed,
                                     long long coord_max) {
    if (n < 1) {
        throw std::invalid_argument("generate_instance: n must be >= 1");
    }
    if (coord_max < n) {
        throw std::invalid_argument(
            "generate_instance: coord-max must be >= n to draw distinct coordinates");
    }
    std::mt19937_64 rng(seed);
    const std::vector<long long> xs = sample_distinct(n, coord_max, rng);
    std::vector<long long> ys = sample_distinct(n, coord_max, rng);
    for (int i = n - 1; i > 0; --i) {
        std::swap(ys[i], ys[bounded(rng, i)]);
    }
    std::vector<Point> points(n);
    for (int i = 0; i < n; ++i) {
        points[i] = {i, static_cast<double>(xs[i]), static_cast<double>(ys[i])};
    }
    return points;
}

namespace {

double min_nonzero_gap(std::span<const Point> points) {
    double gap = std::numeric_limits<double>::infinity();
    for (int axis = 0; axis < 2; ++axis) {
        std::vector<double> vals;
        vals.reserve(points.size());
        for (const Point& p : points) vals.push_back(axis == 0 ? p.x : p.y);
        std::sort(vals.begin(), vals.end());
        for (size_t i = 1; i < vals.size(); ++i) {
            const double d = vals[i] - vals[i - 1];
            if (d > 0) gap = std::min(gap, d);
        }
    }
    return gap;
}

}  // namespace

std::vector<Point> perturb_points(std::span<const Point> points) {
    std::vector<Point> out(points.begin(), points.end());
    if (out.size() < 2) return out;
    const double gap = min_nonzero_gap(points);
    if (!std::isfinite(gap)) {
        throw std::invalid_argument(
            "perturb: all coordinates identical, nothing to anchor jitter to");
    }
    const double eps = gap / (4.0 * static_cast<double>(out.size()));
    for (int axis = 0; axis < 2; ++axis) {
        std::vector<int> order(out.size());
        std::iota(order.begin(), order.end(), 0);
        auto coord = [&](int i) { return axis == 0 ? out[i].x : out[i].y; };
        std::sort(order.begin(), order.end(), [&](int i, int j) {
            if (coord(i) != coord(j)) return coord(i) < coord(j);
            return out[i].id < out[j].id;
        });
        for (size_t rank = 0; rank < order.size(); ++rank) {
            double& v = axis == 0 ? out[order[rank]].x : out[order[rank]].y;
            v += static_cast<double>(rank) * eps;
        }
    }
    return out;
}

}  // namespace annulus
