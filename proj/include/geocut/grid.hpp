#pragma once

#include <cmath>
#include <vector>

namespace geocut {

// Grid points are generated from integer indices (r = low + i*mesh) rather
// than by repeated addition, so every run and every thread count sees
// bit-identical r values.
inline std::vector<double> mesh_grid(double low, double high, double mesh) {
    std::vector<double> grid;
    if (mesh <= 0 || high < low) return grid;
    const auto count = static_cast<std::size_t>(std::floor((high - low) / mesh + 0.5)) + 1;
    grid.reserve(count);
    for (std::size_t i = 0; i < count; ++i) grid.push_back(low + static_cast<double>(i) * mesh);
    return grid;
}

// Multiples of mesh strictly inside (1, 2): 1+mesh, 1+2*mesh, ...
// For mesh 0.001 this is the canonical 999-point sweep grid.
inline std::vector<double> interior_grid(double mesh) {
    std::vector<double> grid;
    if (mesh <= 0) return grid;
    for (std::size_t i = 1;; ++i) {
        const double r = 1.0 + static_cast<double>(i) * mesh;
        if (r >= 2.0 - mesh * 0.5) break;
        grid.push_back(r);
    }
    return grid;
}

}  // namespace geocut
