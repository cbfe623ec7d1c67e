#include "lgriffiths/griffiths.hpp"

#include <stdexcept>
#include <string>

#include "lgriffiths/rational_sqrt.hpp"

namespace lgriffiths::griffiths {

using krawtchouk::k_eval;
using krawtchouk::KrawtchoukFamily;
using krawtchouk::KrawtchoukParams;

namespace {

void require_degree(int i, int j, int N) {
    if (i < 0 || j < 0 || i + j > N) {
        throw OutOfDomain("Griffiths degree (" + std::to_string(i) + "," + std::to_string(j) +
                          ") outside triangle N=" + std::to_string(N));
    }
}

void require_point(int x, int y, int N, const char* what) {
    if (x < 0 || y < 0 || x + y > N) {
        throw OutOfDomain(std::string(what) + " (" + std::to_string(x) + "," + std::to_string(y) +
                          ") outside triangle N=" + std::to_string(N));
    }
}

bool in_triangle(int x, int y, int N) { return x >= 0 && y >= 0 && x + y <= N; }

Rational direct_sum(int i, int j, int x, int y, const ParamSet& P) {
    const int N = P.N();
    Rational sum(0);
    Rational lambda_power(1);
    for (int a = 0; a <= N - j; lambda_power *= P.lambda(), ++a) {
        // k_j(y; p2, N-a) vanishes for y > N-a; k_a(x; p3, N-y) would then have
        // degree a above its size.
        if (a > N - y) break;
        Rational term = k_eval(i, a, KrawtchoukParams(P.p1(), N - j));
        if (term.is_zero()) continue;
        term *= k_eval(j, y, KrawtchoukParams(P.p2(), N - a));
        if (term.is_zero()) continue;
        term *= k_eval(a, x, KrawtchoukParams(P.p3(), N - y));
        sum += lambda_power * term;
    }
    return sum;
}

Rational via_tratnik_xy(int i, int j, int x, int y, const ParamSet& P) {
    const int N = P.N();
    tratnik::TratnikParams tp(P.p1(), P.p2(), N);
    Rational sum(0);
    Rational lambda_power(1);
    for (int a = 0; a <= N - j; lambda_power *= P.lambda(), ++a) {
        Rational t = tratnik::t_eval(i, j, a, y, tp);
        if (t.is_zero()) continue;
        sum += lambda_power * t * k_eval(a, x, KrawtchoukParams(P.p3(), N - y));
    }
    return sum;
}

Rational via_tratnik_yx(int i, int j, int x, int y, const ParamSet& P) {
    const int N = P.N();
    tratnik::TratnikParams tp(P.p2(), P.p3(), N);
    Rational sum(0);
    Rational lambda_power(1);
    for (int a = 0; a <= N - j; lambda_power *= P.lambda(), ++a) {
        Rational k = k_eval(i, a, KrawtchoukParams(P.p1(), N - j));
        if (k.is_zero()) continue;
        sum += lambda_power * k * tratnik::t_eval(j, a, y, x, tp);
    }
    return sum;
}

}  // namespace

ParamSet::ParamSet(Rational p1, Rational p2, Rational p3, Rational lambda, int N)
    : p1_(std::move(p1)), p2_(std::move(p2)), p3_(std::move(p3)), lambda_(std::move(lambda)), N_(N) {
    krawtchouk::require_valid_p(p1_, "p1");
    krawtchouk::require_valid_p(p2_, "p2");
    krawtchouk::require_valid_p(p3_, "p3");
    if (lambda_.is_zero()) throw DegenerateParams("lambda must be nonzero");
    if (N_ < 0) throw std::invalid_argument("Griffiths size N must be non-negative");
}

ParamSet ParamSet::with_lambda(Rational lambda) const { return {p1_, p2_, p3_, std::move(lambda), N_}; }

ParamSet ParamSet::partner() const { return with_lambda(mu(p1_, p2_, p3_) / lambda_); }

std::string_view to_string(EvalMethod method) {
    switch (method) {
        case EvalMethod::DirectSum: return "DirectSum";
        case EvalMethod::ViaTratnikXY: return "ViaTratnikXY";
        case EvalMethod::ViaTratnikYX: return "ViaTratnikYX";
    }
    return "?";
}

std::string_view to_string(GRelationId rel) {
    switch (rel) {
        case GRelationId::RecX: return "RecX";
        case GRelationId::RecY: return "RecY";
        case GRelationId::DiffI: return "DiffI";
        case GRelationId::DiffJ: return "DiffJ";
    }
    return "?";
}

GRelationId parse_grelation(std::string_view name) {
    for (auto rel : kAllGRelations) {
        if (to_string(rel) == name) return rel;
    }
    throw std::invalid_argument("unknown Griffiths relation '" + std::string(name) + "'");
}

bool acts_on_degrees(GRelationId rel) { return rel == GRelationId::RecX || rel == GRelationId::RecY; }

Rational g_eval(int i, int j, int x, int y, const ParamSet& params, EvalMethod method) {
    require_degree(i, j, params.N());
    if (!in_triangle(x, y, params.N())) return Rational(0);
    switch (method) {
        case EvalMethod::DirectSum: return direct_sum(i, j, x, y, params);
        case EvalMethod::ViaTratnikXY: return via_tratnik_xy(i, j, x, y, params);
        case EvalMethod::ViaTratnikYX: return via_tratnik_yx(i, j, x, y, params);
    }
    return Rational(0);
}

Rational g_lambda_zero_term(int i, int j, int x, int y, const ParamSet& params) {
    const int N = params.N();
    require_degree(i, j, N);
    if (!in_triangle(x, y, N)) return Rational(0);
    const Rational& p3 = params.p3();
    return k_eval(j, y, KrawtchoukParams(params.p2(), N)) * (p3 / (Rational(1) - p3)).pow(x) * binomial(N - y, x);
}

Rational g_tilde_eval(int i, int j, int x, int y, const ParamSet& params) {
    const int N = params.N();
    require_degree(i, j, N);
    const Rational& p1 = params.p1();
    const Rational& p2 = params.p2();
    const Rational q1 = Rational(1) - p1;
    ParamSet shifted = params.with_lambda(params.lambda() * q1 / p1);
    return (p1 / q1).pow(i) * (p2 / (Rational(1) - p2)).pow(j) /
           (factorial(i) * factorial(j) * factorial(N - i - j)) * g_eval(i, j, x, y, shifted);
}

Rational g_duality_residual(int i, int j, int x, int y, const ParamSet& params) {
    const int N = params.N();
    require_degree(i, j, N);
    require_point(x, y, N, "duality variable");
    ParamSet swapped(params.p3(), params.p2(), params.p1(), params.lambda(), N);
    return g_tilde_eval(i, j, x, y, params) - g_tilde_eval(x, y, i, j, swapped);
}

GriffithsTable::GriffithsTable(const ParamSet& params)
    : params_(params), grid_(params.N()), values_(grid_.size(), grid_.size()) {
    const int N = params.N();
    KrawtchoukFamily k1(params.p1(), N);
    KrawtchoukFamily k2(params.p2(), N);
    KrawtchoukFamily k3(params.p3(), N);
    std::vector<Rational> lambda_powers(static_cast<std::size_t>(N + 1));
    lambda_powers[0] = Rational(1);
    for (std::size_t a = 1; a < lambda_powers.size(); ++a) lambda_powers[a] = lambda_powers[a - 1] * params.lambda();

    for (std::size_t d = 0; d < grid_.size(); ++d) {
        const auto [i, j] = grid_[d];
        for (std::size_t v = 0; v < grid_.size(); ++v) {
            const auto [x, y] = grid_[v];
            Rational sum(0);
            for (int a = 0; a <= N - j && a <= N - y; ++a) {
                const Rational& f1 = k1.value(i, a, N - j);
                if (f1.is_zero()) continue;
                const Rational& f2 = k2.value(j, y, N - a);
                if (f2.is_zero()) continue;
                sum += lambda_powers[static_cast<std::size_t>(a)] * f1 * f2 * k3.value(a, x, N - y);
            }
            values_(d, v) = std::move(sum);
        }
    }
}

const Rational& GriffithsTable::at(int i, int j, int x, int y) const {
    auto d = grid_.find(i, j);
    if (!d) require_degree(i, j, grid_.N());
    auto v = grid_.find(x, y);
    if (!v) return zero_;
    return values_(*d, *v);
}

Stencil g_stencil(GRelationId rel, const LatticePoint& center, const ParamSet& params) {
    const Rational& p1 = params.p1();
    const Rational& p2 = params.p2();
    const Rational& p3 = params.p3();
    const Rational& l = params.lambda();
    const Rational one(1);
    const Rational q1 = one - p1;
    const Rational q2 = one - p2;
    const Rational q3 = one - p3;
    const int N = params.N();
    Stencil s;
    auto& c = s.coefficients;  // (0,0) (1,0) (-1,0) (0,1) (0,-1) (1,-1) (-1,1)

    switch (rel) {
        case GRelationId::RecX: {
            const int i = center.a;
            const int j = center.b;
            const int M = N - i - j;
            c[1] = q1 / l * (l * p1 * q3 / q1 - p3) * (l * p1 * q2 / q1 + one) * M;
            c[2] = -q1 / l * (l * q3 + p3) * (l * q2 - one) * i;
            c[3] = p2 * (l * p1 * q3 / q1 - p3) * M;
            c[4] = -q1 * p3 / l * (l * q2 - one) * j;
            c[5] = -p3 / l * (l * p1 * q2 + one - p1) * j;
            c[6] = -p2 * (l * q3 + p3) * i;
            c[0] = -((l * q3 + p3) * (l * p1 * q2 + one - p1) / l * i + p2 * p3 * j -
                     (l * q2 - one) * (l * p1 * q3 - p3 * q1) / l * M);
            break;
        }
        case GRelationId::RecY: {
            const int i = center.a;
            const int j = center.b;
            const int M = N - i - j;
            c[1] = -p1 * p2 * M;
            c[2] = -p2 * q1 * i;
            c[3] = p2 * M;
            c[4] = q1 * q2 * j;
            c[5] = p1 * q2 * j;
            c[6] = p2 * i;
            c[0] = -(p1 * p2 * i + q2 * j + p2 * q1 * M);
            break;
        }
        case GRelationId::DiffI: {
            const int x = center.a;
            const int y = center.b;
            const int L = N - x - y;
            const Rational bracket = l * p1 * q2 * q3 - p3 * q1;
            c[1] = Rational(x + 1) * (one - l) / l * q3 * (l * p1 * (p2 - one) + p1 - one);
            c[2] = -Rational(L + 1) * (l * (p3 - one) - p3) / (l * (p3 - one)) * bracket;
            c[3] = -Rational(1 + y) * p1 * q2 * (one - l);
            c[4] = -Rational(L + 1) * p2 / (l * q2) * bracket;
            c[5] = -Rational(x + 1) * p2 * q3 / (l * q2) * (l * p1 * q2 + one - p1);
            c[6] = -Rational(y + 1) * p1 * q2 / q3 * (l * q3 + p3);
            c[0] = -(Rational(x) / l * (l * q3 + p3) * (l * p1 * q2 + one - p1) + Rational(y) * p1 * p2 +
                     Rational(L) * (one - l) / l * bracket);
            break;
        }
        case GRelationId::DiffJ: {
            const int x = center.a;
            const int y = center.b;
            const int L = N - x - y;
            c[1] = -Rational(x + 1) * p2 * q3;
            c[2] = -Rational(L + 1) * p2 * p3;
            c[3] = Rational(y + 1) * q2;
            c[4] = Rational(L + 1) * p2 * q3;
            c[5] = Rational(x + 1) * p2 * q3;
            c[6] = Rational(y + 1) * q2 * p3 / q3;
            c[0] = -(Rational(x) * p3 * p2 + Rational(y) * q2 + Rational(L) * p2 * q3);
            break;
        }
    }
    return s;
}

Rational g_eigenvalue(GRelationId rel, const LatticePoint& opposite) {
    switch (rel) {
        case GRelationId::RecX: return Rational(-opposite.a);
        case GRelationId::RecY: return Rational(-opposite.b);
        case GRelationId::DiffI: return Rational(-opposite.a);
        case GRelationId::DiffJ: return Rational(-opposite.b);
    }
    return Rational(0);
}

namespace {

template <typename Eval>
Rational residual_with(GRelationId rel, int i, int j, int x, int y, const ParamSet& params, Eval&& eval) {
    const int N = params.N();
    require_degree(i, j, N);
    require_point(x, y, N, "Griffiths variable");
    if (acts_on_degrees(rel)) {
        Stencil s = g_stencil(rel, {i, j}, params);
        return stencil_residual(g_eigenvalue(rel, {x, y}), s, i, j, [&](int a, int b) { return eval(a, b, x, y); });
    }
    Stencil s = g_stencil(rel, {x, y}, params);
    return stencil_residual(g_eigenvalue(rel, {i, j}), s, x, y, [&](int a, int b) { return eval(i, j, a, b); });
}

}  // namespace

Rational g_relation_residual(GRelationId rel, int i, int j, int x, int y, const ParamSet& params) {
    return residual_with(rel, i, j, x, y, params,
                         [&](int a, int b, int u, int v) { return g_eval(a, b, u, v, params); });
}

Rational g_relation_residual(GRelationId rel, int i, int j, int x, int y, const GriffithsTable& table) {
    return residual_with(rel, i, j, x, y, table.params(),
                         [&](int a, int b, int u, int v) -> const Rational& { return table.at(a, b, u, v); });
}

Rational mu(const Rational& p1, const Rational& p2, const Rational& p3) {
    if (p1.is_zero() || p2.is_one() || p3.is_one()) {
        throw DegenerateParams("mu undefined: needs p1 != 0, p2 != 1, p3 != 1");
    }
    const Rational one(1);
    return (one - p1) * p3 / (p1 * (one - p2) * (one - p3));
}

Rational omega(int x, int y, const Rational& pa, const Rational& pb, int N) {
    require_point(x, y, N, "omega");
    krawtchouk::require_valid_p(pa, "pa");
    krawtchouk::require_valid_p(pb, "pb");
    const Rational one(1);
    return factorial(x) * factorial(y) * factorial(N - x - y) * ((one - pa) / pa).pow(y) * ((one - pb) / pb).pow(x) *
           (one - pb).pow(y);
}

Rational biorth_weight(int x, int y, const ParamSet& params) {
    return omega(x, y, params.p2(), params.p3(), params.N()) / (Rational(1) - params.p3()).pow(2L * y);
}

Rational biorth_diagonal(int i, int j, const ParamSet& params) {
    const Rational one(1);
    return omega(i, j, params.p2(), params.p1(), params.N()) /
           ((one - params.p1()) * (one - params.p2()) * (one - params.p3())).pow(params.N());
}

RationalMatrix g_pairing_gram(const ParamSet& params, const WeightFunction& weight) {
    GriffithsTable left(params);
    GriffithsTable right(params.partner());
    const TriangleGrid& grid = left.grid();
    const std::size_t dim = grid.size();
    std::vector<Rational> w;
    w.reserve(dim);
    for (const auto& pt : grid.points()) w.push_back(weight(pt.a, pt.b));

    // Pre-weight the left table so each entry is a plain dot product.
    RationalMatrix weighted = left.values();
    for (std::size_t d = 0; d < dim; ++d) {
        for (std::size_t v = 0; v < dim; ++v) weighted(d, v) *= w[v];
    }
    return weighted * right.values().transpose();
}

RationalMatrix g_biorth_gram(const ParamSet& params) {
    return g_pairing_gram(params, [&](int x, int y) { return biorth_weight(x, y, params); });
}

std::optional<std::pair<Rational, Rational>> orthogonal_lambdas(const Rational& p1, const Rational& p2,
                                                                const Rational& p3) {
    auto root = rational_sqrt(mu(p1, p2, p3));
    if (!root) return std::nullopt;
    return std::make_pair(*root, -*root);
}

Rational p3_for_square_mu(const Rational& p1, const Rational& p2, const Rational& s) {
    Rational scaled = s * s * p1 * (Rational(1) - p2);
    return scaled / (Rational(1) - p1 + scaled);
}

}  // namespace lgriffiths::griffiths
