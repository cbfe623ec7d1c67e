#include "lgriffiths/triangle_grid.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

#include "lgriffiths/errors.hpp"

namespace lgriffiths {

std::ostream& operator<<(std::ostream& os, const LatticePoint& p) { return os << '(' << p.a << ',' << p.b << ')'; }

TriangleGrid::TriangleGrid(int N) : N_(N) {
    if (N < 0) throw std::invalid_argument("TriangleGrid: negative N");
    points_.reserve(count(N));
    for (int a = 0; a <= N; ++a) {
        for (int b = 0; a + b <= N; ++b) points_.push_back({a, b});
    }
}

std::size_t TriangleGrid::count(int N) {
    auto n = static_cast<std::size_t>(N);
    return (n + 1) * (n + 2) / 2;
}

std::optional<std::size_t> TriangleGrid::find(int a, int b) const {
    if (!contains(a, b)) return std::nullopt;
    // Rows a' < a contribute (N - a' + 1) points each.
    auto n = static_cast<std::size_t>(N_);
    auto ua = static_cast<std::size_t>(a);
    std::size_t before = ua * (n + 1) - ua * (ua - 1) / 2;
    return before + static_cast<std::size_t>(b);
}

std::size_t TriangleGrid::index_of(const LatticePoint& p) const {
    if (auto k = find(p.a, p.b)) return *k;
    throw OutOfDomain("point (" + std::to_string(p.a) + "," + std::to_string(p.b) + ") outside triangle N=" +
                      std::to_string(N_));
}

}  // namespace lgriffiths
