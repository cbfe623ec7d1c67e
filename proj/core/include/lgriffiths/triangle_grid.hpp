#pragma once

/**
 * @file triangle_grid.hpp
 * @brief The triangular index set {(a,b) : a,b >= 0, a+b <= N}.
 *
 * Both the degree pairs (i,j) and the variable pairs (x,y) of the bivariate
 * families live on this set. Points are ordered lexicographically by (a,b),
 * and index_of is the inverse of that ordering.
 */

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

namespace lgriffiths {

struct LatticePoint {
    int a = 0;
    int b = 0;

    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

std::ostream& operator<<(std::ostream& os, const LatticePoint& p);

class TriangleGrid {
public:
    explicit TriangleGrid(int N);

    [[nodiscard]] int N() const { return N_; }
    [[nodiscard]] std::size_t size() const { return points_.size(); }
    [[nodiscard]] const std::vector<LatticePoint>& points() const { return points_; }
    [[nodiscard]] const LatticePoint& operator[](std::size_t index) const { return points_[index]; }

    [[nodiscard]] bool contains(int a, int b) const { return a >= 0 && b >= 0 && a + b <= N_; }
    [[nodiscard]] bool contains(const LatticePoint& p) const { return contains(p.a, p.b); }

    /// Position of p in points(). Throws OutOfDomain if p is not in the grid.
    [[nodiscard]] std::size_t index_of(const LatticePoint& p) const;
    [[nodiscard]] std::optional<std::size_t> find(int a, int b) const;

    /// (N+1)(N+2)/2
    static std::size_t count(int N);

    friend bool operator==(const TriangleGrid& lhs, const TriangleGrid& rhs) { return lhs.N_ == rhs.N_; }

private:
    int N_;
    std::vector<LatticePoint> points_;
};

}  // namespace lgriffiths
