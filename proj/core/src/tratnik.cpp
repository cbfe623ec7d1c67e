#include "lgriffiths/tratnik.hpp"

#include <stdexcept>
#include <string>

namespace lgriffiths::tratnik {

namespace {

void require_degree(int i, int j, int N) {
    if (i < 0 || j < 0 || i + j > N) {
        throw OutOfDomain("Tratnik degree (" + std::to_string(i) + "," + std::to_string(j) + ") outside triangle N=" +
                          std::to_string(N));
    }
}

void require_point(int x, int y, int N, const char* what) {
    if (x < 0 || y < 0 || x + y > N) {
        throw OutOfDomain(std::string(what) + " (" + std::to_string(x) + "," + std::to_string(y) +
                          ") outside triangle N=" + std::to_string(N));
    }
}

}  // namespace

TratnikParams::TratnikParams(Rational p1, Rational p2, int N) : p1_(std::move(p1)), p2_(std::move(p2)), N_(N) {
    krawtchouk::require_valid_p(p1_, "p1");
    krawtchouk::require_valid_p(p2_, "p2");
    if (N_ < 0) throw std::invalid_argument("Tratnik size N must be non-negative");
}

std::string_view to_string(TRelationId rel) {
    switch (rel) {
        case TRelationId::RecX: return "RecX";
        case TRelationId::RecY: return "RecY";
        case TRelationId::DiffJ: return "DiffJ";
        case TRelationId::DiffI: return "DiffI";
    }
    return "?";
}

TRelationId parse_trelation(std::string_view name) {
    for (auto rel : kAllTRelations) {
        if (to_string(rel) == name) return rel;
    }
    throw std::invalid_argument("unknown Tratnik relation '" + std::string(name) + "'");
}

bool acts_on_degrees(TRelationId rel) { return rel == TRelationId::RecX || rel == TRelationId::RecY; }

Rational t_eval(int i, int j, int x, int y, const TratnikParams& params) {
    const int N = params.N();
    require_degree(i, j, N);
    // x > N-j kills the first factor through its binomial prefactor; checking
    // it first keeps the second factor's degree j within its size N-x.
    if (x < 0 || x > N - j) return Rational(0);
    if (y < 0 || y > N - x) return Rational(0);
    using krawtchouk::k_eval;
    using krawtchouk::KrawtchoukParams;
    return k_eval(i, x, KrawtchoukParams(params.p1(), N - j)) * k_eval(j, y, KrawtchoukParams(params.p2(), N - x));
}

TratnikTable::TratnikTable(const TratnikParams& params)
    : params_(params), grid_(params.N()), values_(grid_.size(), grid_.size()) {
    const int N = params.N();
    krawtchouk::KrawtchoukFamily k1(params.p1(), N);
    krawtchouk::KrawtchoukFamily k2(params.p2(), N);
    for (std::size_t d = 0; d < grid_.size(); ++d) {
        const auto [i, j] = grid_[d];
        for (std::size_t v = 0; v < grid_.size(); ++v) {
            const auto [x, y] = grid_[v];
            if (x > N - j) continue;
            values_(d, v) = k1.value(i, x, N - j) * k2.value(j, y, N - x);
        }
    }
}

const Rational& TratnikTable::at(int i, int j, int x, int y) const {
    auto d = grid_.find(i, j);
    if (!d) require_degree(i, j, grid_.N());
    auto v = grid_.find(x, y);
    if (!v) return zero_;
    return values_(*d, *v);
}

Stencil t_stencil(TRelationId rel, const LatticePoint& center, const TratnikParams& params) {
    const Rational& p1 = params.p1();
    const Rational& p2 = params.p2();
    const Rational q1 = Rational(1) - p1;
    const Rational q2 = Rational(1) - p2;
    const int N = params.N();
    Stencil s;
    auto& c = s.coefficients;  // (0,0) (1,0) (-1,0) (0,1) (0,-1) (1,-1) (-1,1)

    switch (rel) {
        case TRelationId::RecX: {
            const int i = center.a;
            const int M = N - center.a - center.b;
            c[1] = p1 * M;
            c[2] = q1 * i;
            c[0] = -(p1 * M + q1 * i);
            break;
        }
        case TRelationId::RecY: {
            const int i = center.a;
            const int j = center.b;
            const int M = N - i - j;
            c[1] = -p1 * p2 * M;
            c[2] = -q1 * p2 * i;
            c[3] = p2 * M;
            c[4] = q1 * q2 * j;
            c[5] = p1 * q2 * j;
            c[6] = p2 * i;
            c[0] = -(q1 * p2 * M + q2 * j + p1 * p2 * i);
            break;
        }
        case TRelationId::DiffJ: {
            const int y = center.b;
            const int L = N - center.a - center.b;
            c[3] = q2 * (y + 1);
            c[4] = p2 * (L + 1);
            c[0] = -(q2 * (y + 1) + p2 * (L + 1));
            break;
        }
        case TRelationId::DiffI: {
            const int x = center.a;
            const int y = center.b;
            const int L = N - x - y;
            c[1] = q1 * (x + 1);
            c[2] = p1 * q2 * (L + 1);
            c[3] = -p1 * q2 * (y + 1);
            c[4] = -p1 * p2 * (L + 1);
            c[5] = q1 * p2 / q2 * (x + 1);
            c[6] = p1 * q2 * (y + 1);
            c[0] = -(q1 * (x + 1) + p1 * p2 * (y + 1) + p1 * q2 * (L + 1));
            break;
        }
    }
    return s;
}

Rational t_eigenvalue(TRelationId rel, const LatticePoint& opposite) {
    switch (rel) {
        case TRelationId::RecX: return Rational(-opposite.a);
        case TRelationId::RecY: return Rational(-opposite.b);
        case TRelationId::DiffJ: return Rational(-(opposite.b + 1));
        case TRelationId::DiffI: return Rational(-(opposite.a + 1));
    }
    return Rational(0);
}

namespace {

template <typename Eval>
Rational residual_with(TRelationId rel, int i, int j, int x, int y, const TratnikParams& params, Eval&& eval) {
    const int N = params.N();
    require_degree(i, j, N);
    require_point(x, y, N, "Tratnik variable");
    if (acts_on_degrees(rel)) {
        Stencil s = t_stencil(rel, {i, j}, params);
        return stencil_residual(t_eigenvalue(rel, {x, y}), s, i, j, [&](int a, int b) { return eval(a, b, x, y); });
    }
    Stencil s = t_stencil(rel, {x, y}, params);
    return stencil_residual(t_eigenvalue(rel, {i, j}), s, x, y, [&](int a, int b) { return eval(i, j, a, b); });
}

}  // namespace

Rational t_relation_residual(TRelationId rel, int i, int j, int x, int y, const TratnikParams& params) {
    return residual_with(rel, i, j, x, y, params,
                         [&](int a, int b, int u, int v) { return t_eval(a, b, u, v, params); });
}

Rational t_relation_residual(TRelationId rel, int i, int j, int x, int y, const TratnikTable& table) {
    return residual_with(rel, i, j, x, y, table.params(),
                         [&](int a, int b, int u, int v) -> const Rational& { return table.at(a, b, u, v); });
}

RationalMatrix t_gram_diagnostic(const WeightFunction& weight, const TratnikParams& params) {
    TratnikTable table(params);
    const TriangleGrid& grid = table.grid();
    const std::size_t dim = grid.size();
    std::vector<Rational> w;
    w.reserve(dim);
    for (const auto& pt : grid.points()) w.push_back(weight(pt.a, pt.b));

    RationalMatrix gram(dim, dim);
    const RationalMatrix& F = table.values();
    for (std::size_t d = 0; d < dim; ++d) {
        for (std::size_t e = d; e < dim; ++e) {
            Rational sum(0);
            for (std::size_t v = 0; v < dim; ++v) {
                if (w[v].is_zero()) continue;
                sum += w[v] * F(d, v) * F(e, v);
            }
            gram(d, e) = sum;
            gram(e, d) = sum;
        }
    }
    return gram;
}

Rational trinomial_weight(int x, int y, const TratnikParams& params) {
    const int N = params.N();
    require_point(x, y, N, "trinomial weight");
    const Rational& p1 = params.p1();
    const Rational& p2 = params.p2();
    const Rational q1 = Rational(1) - p1;
    const Rational q2 = Rational(1) - p2;
    return factorial(x) * factorial(y) * factorial(N - x - y) * (q1 / (p1 * q2)).pow(x) * (q2 / p2).pow(y);
}

Rational trinomial_gram_diagonal(int i, int j, const TratnikParams& params) {
    const int N = params.N();
    require_degree(i, j, N);
    const Rational& p1 = params.p1();
    const Rational& p2 = params.p2();
    const Rational q1 = Rational(1) - p1;
    const Rational q2 = Rational(1) - p2;
    return factorial(i) * factorial(j) * factorial(N - i - j) * (q1 / p1).pow(i) * (q2 / p2).pow(j) * q1.pow(j) /
           (q1 * q2).pow(N);
}

std::optional<std::vector<Rational>> diagonalizing_weights(const RationalMatrix& table) {
    const std::size_t degrees = table.rows();
    const std::size_t vars = table.cols();
    const std::size_t pairs = degrees * (degrees - (degrees > 0 ? 1 : 0)) / 2;
    RationalMatrix conditions(pairs, vars);
    std::size_t row = 0;
    for (std::size_t d = 0; d < degrees; ++d) {
        for (std::size_t e = d + 1; e < degrees; ++e, ++row) {
            for (std::size_t v = 0; v < vars; ++v) conditions(row, v) = table(d, v) * table(e, v);
        }
    }
    auto basis = nullspace(conditions);
    if (basis.size() != 1 || basis.front().empty() || basis.front()[0].is_zero()) return std::nullopt;
    auto w = std::move(basis.front());
    Rational scale = w[0].reciprocal();
    for (auto& value : w) value *= scale;
    return w;
}

}  // namespace lgriffiths::tratnik
