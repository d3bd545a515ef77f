#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "annulus/geometry.hpp"

namespace testutil {

// Points with ids assigned in listing order.
inline std::vector<annulus::Point> pts(
    std::initializer_list<std::pair<double, double>> coords) {
    std::vector<annulus::Point> out;
    out.reserve(coords.size());
    int id = 0;
    for (const auto& [x, y] : coords) {
        out.push_back({id++, x, y});
    }
    return out;
}

inline annulus::AxisRect rect(double xmin, double ymin, double xmax, double ymax) {
    return {xmin, ymin, xmax, ymax};
}

}  // namespace testutil
