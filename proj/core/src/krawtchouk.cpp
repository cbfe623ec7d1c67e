#include "lgriffiths/krawtchouk.hpp"

#include <stdexcept>
#include <string>

namespace lgriffiths::krawtchouk {

namespace {

std::string describe(int n, int x, int N) {
    return "(n=" + std::to_string(n) + ", x=" + std::to_string(x) + ", N=" + std::to_string(N) + ")";
}

template <typename Lookup>
Rational sum_terms(const std::vector<RelationTerm>& terms, Lookup&& lookup) {
    Rational sum(0);
    for (const auto& term : terms) {
        // A vanishing coefficient drops the term before evaluation; this is how
        // boundary degrees such as k_{N+1}(x; p, N) stay unreferenced.
        if (term.coefficient.is_zero()) continue;
        if (term.size < 0 || term.degree < 0 || term.degree > term.size) {
            throw std::logic_error("relation term references degree " + std::to_string(term.degree) + " at size " +
                                   std::to_string(term.size) + " with nonzero coefficient");
        }
        sum += term.coefficient * lookup(term.degree, term.arg, term.size);
    }
    return sum;
}

template <typename Lookup>
Rational residual_with(RelationId rel, int i, int x, const KrawtchoukParams& params, Lookup&& lookup) {
    if (!relation_domain(rel, params.N()).contains(i, x)) {
        throw OutOfDomain(std::string("relation ") + std::string(to_string(rel)) + " outside admissible domain at " +
                          describe(i, x, params.N()));
    }
    RelationInstance inst = relation_terms(rel, i, x, params);
    return sum_terms(inst.lhs, lookup) - sum_terms(inst.rhs, lookup);
}

}  // namespace

void require_valid_p(const Rational& p, std::string_view name) {
    if (p.is_zero() || p.is_one()) {
        throw DegenerateParams(std::string(name) + " must not be 0 or 1 (got " + p.to_string() + ")");
    }
}

KrawtchoukParams::KrawtchoukParams(Rational p, int N) : p_(std::move(p)), N_(N) {
    require_valid_p(p_, "p");
    if (N_ < 0) throw std::invalid_argument("Krawtchouk size N must be non-negative");
}

Rational k_eval(int i, int x, const KrawtchoukParams& params) {
    const int N = params.N();
    if (i < 0 || i > N) {
        throw OutOfDomain("k_eval: degree " + std::to_string(i) + " outside 0.." + std::to_string(N));
    }
    if (x < 0 || x > N) return Rational(0);
    const Rational& p = params.p();
    Rational ratio = p / (Rational(1) - p);
    return ratio.pow(x) * binomial(N, x) * hyp2f1_terminating(i, x, N, p.reciprocal());
}

Rational k_weight(int x, const KrawtchoukParams& params) {
    const int N = params.N();
    if (x < 0 || x > N) {
        throw OutOfDomain("k_weight: x=" + std::to_string(x) + " outside 0.." + std::to_string(N));
    }
    const Rational& p = params.p();
    return ((Rational(1) - p) / p).pow(x) * factorial(x) * factorial(N - x);
}

RationalMatrix k_gram(const KrawtchoukParams& params) {
    const int N = params.N();
    const auto dim = static_cast<std::size_t>(N + 1);
    RationalMatrix values(dim, dim);  // values(i, x) = k_i(x)
    for (int i = 0; i <= N; ++i) {
        for (int x = 0; x <= N; ++x) values(i, x) = k_eval(i, x, params);
    }
    std::vector<Rational> weights;
    for (int x = 0; x <= N; ++x) weights.push_back(k_weight(x, params));

    RationalMatrix gram(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t l = i; l < dim; ++l) {
            Rational sum(0);
            for (std::size_t x = 0; x < dim; ++x) sum += weights[x] * values(i, x) * values(l, x);
            gram(i, l) = sum;
            gram(l, i) = sum;
        }
    }
    return gram;
}

Rational k_gram_diagonal(int i, const KrawtchoukParams& params) {
    return k_weight(i, params) / (Rational(1) - params.p()).pow(params.N());
}

Rational k_duality_residual(int i, int x, const KrawtchoukParams& params) {
    const int N = params.N();
    if (i < 0 || i > N || x < 0 || x > N) {
        throw OutOfDomain("k_duality_residual: indices outside 0.." + std::to_string(N));
    }
    return k_weight(x, params) * k_eval(i, x, params) - k_weight(i, params) * k_eval(x, i, params);
}

KrawtchoukFamily::KrawtchoukFamily(Rational p, int max_size) : p_(std::move(p)), max_size_(max_size) {
    require_valid_p(p_, "p");
    if (max_size_ < 0) throw std::invalid_argument("KrawtchoukFamily: negative max_size");
    tables_.resize(static_cast<std::size_t>(max_size_ + 1));
    for (int size = 0; size <= max_size_; ++size) {
        KrawtchoukParams params(p_, size);
        auto& table = tables_[static_cast<std::size_t>(size)];
        table.reserve(static_cast<std::size_t>((size + 1) * (size + 1)));
        for (int i = 0; i <= size; ++i) {
            for (int x = 0; x <= size; ++x) table.push_back(k_eval(i, x, params));
        }
    }
}

const Rational& KrawtchoukFamily::value(int i, int x, int size) const {
    if (size < 0 || size > max_size_) {
        throw OutOfDomain("KrawtchoukFamily: size " + std::to_string(size) + " outside 0.." +
                          std::to_string(max_size_));
    }
    if (x < 0 || x > size) return zero_;
    if (i < 0 || i > size) {
        throw OutOfDomain("KrawtchoukFamily: degree " + std::to_string(i) + " outside 0.." + std::to_string(size));
    }
    return tables_[static_cast<std::size_t>(size)][static_cast<std::size_t>(i * (size + 1) + x)];
}

std::string_view to_string(RelationId rel) {
    switch (rel) {
        case RelationId::Difference: return "Difference";
        case RelationId::Recurrence: return "Recurrence";
        case RelationId::ContigDiff1: return "ContigDiff1";
        case RelationId::ContigDiff2: return "ContigDiff2";
        case RelationId::ContigRecu1: return "ContigRecu1";
        case RelationId::ContigRecu2: return "ContigRecu2";
        case RelationId::Forward: return "Forward";
        case RelationId::Backward: return "Backward";
        case RelationId::DualForward: return "DualForward";
        case RelationId::DualBackward: return "DualBackward";
        case RelationId::ShiftedDiff1: return "ShiftedDiff1";
        case RelationId::ShiftedDiff2: return "ShiftedDiff2";
        case RelationId::ShiftedRecu1: return "ShiftedRecu1";
        case RelationId::ShiftedRecu2: return "ShiftedRecu2";
    }
    return "?";
}

std::string_view heading(RelationId rel) {
    switch (rel) {
        case RelationId::Difference: return "Difference relation";
        case RelationId::Recurrence: return "Recurrence relation";
        case RelationId::ContigDiff1: return "Contiguity difference relation (I)";
        case RelationId::ContigDiff2: return "Contiguity difference relation (II)";
        case RelationId::ContigRecu1: return "Contiguity recurrence relation (I)";
        case RelationId::ContigRecu2: return "Contiguity recurrence relation (II)";
        case RelationId::Forward: return "Forward relation";
        case RelationId::Backward: return "Backward relation";
        case RelationId::DualForward: return "Dual forward relation";
        case RelationId::DualBackward: return "Dual backward relation";
        case RelationId::ShiftedDiff1: return "Shifted difference relations (I)";
        case RelationId::ShiftedDiff2: return "Shifted difference relations (II)";
        case RelationId::ShiftedRecu1: return "Shifted recurrence relations (I)";
        case RelationId::ShiftedRecu2: return "Shifted recurrence relations (II)";
    }
    return "?";
}

RelationId parse_relation(std::string_view name) {
    for (RelationId rel : kAllRelations) {
        if (to_string(rel) == name) return rel;
    }
    throw std::invalid_argument("unknown Krawtchouk relation '" + std::string(name) + "'");
}

AdmissibleRect relation_domain(RelationId rel, int N) {
    AdmissibleRect rect{0, N, 0, N};
    switch (rel) {
        case RelationId::ContigDiff1:
        case RelationId::ShiftedDiff2:
            rect.degree_max = N - 1;
            break;
        case RelationId::Backward:
        case RelationId::ShiftedDiff1:
            rect.degree_min = 1;
            break;
        default:
            break;
    }
    return rect;
}

RelationInstance relation_terms(RelationId rel, int n, int x, const KrawtchoukParams& params) {
    const Rational& p = params.p();
    const int N = params.N();
    const Rational q = Rational(1) - p;
    const Rational one(1);
    RelationInstance inst;
    auto& L = inst.lhs;
    auto& R = inst.rhs;

    switch (rel) {
        case RelationId::Difference:
            // -(n+1) k_n(x) = (1-p)(x+1) k_n(x+1) + p(N-x+1) k_n(x-1) - [(1-p)(x+1) + p(N-x+1)] k_n(x)
            L = {{Rational(-(n + 1)), n, x, N}};
            R = {{q * (x + 1), n, x + 1, N},
                 {p * (N - x + 1), n, x - 1, N},
                 {-(q * (x + 1) + p * (N - x + 1)), n, x, N}};
            break;
        case RelationId::Recurrence:
            // -x k_n(x) = p(N-n) k_{n+1}(x) + n(1-p) k_{n-1}(x) - [p(N-n) + n(1-p)] k_n(x)
            L = {{Rational(-x), n, x, N}};
            R = {{p * (N - n), n + 1, x, N}, {q * n, n - 1, x, N}, {-(p * (N - n) + q * n), n, x, N}};
            break;
        case RelationId::ContigDiff1:
            // k_n(x; N) = k_n(x; N-1) + p/(1-p) k_n(x-1; N-1)
            L = {{one, n, x, N}};
            R = {{one, n, x, N - 1}, {p / q, n, x - 1, N - 1}};
            break;
        case RelationId::ContigDiff2:
            // (N+1-n)/(1-p) k_n(x; N) = (N+1-x) k_n(x; N+1) + (x+1) k_n(x+1; N+1)
            L = {{Rational(N + 1 - n) / q, n, x, N}};
            R = {{Rational(N + 1 - x), n, x, N + 1}, {Rational(x + 1), n, x + 1, N + 1}};
            break;
        case RelationId::ContigRecu1:
            // (N-x) k_n(x; N) = (N-n) k_n(x; N-1) + n k_{n-1}(x; N-1)
            L = {{Rational(N - x), n, x, N}};
            R = {{Rational(N - n), n, x, N - 1}, {Rational(n), n - 1, x, N - 1}};
            break;
        case RelationId::ContigRecu2:
            // k_n(x; N) = p k_{n+1}(x; N+1) + (1-p) k_n(x; N+1)
            L = {{one, n, x, N}};
            R = {{p, n + 1, x, N + 1}, {q, n, x, N + 1}};
            break;
        case RelationId::Forward:
            // (n+1)/(1-p) k_n(x; N) = p/(1-p)(N+1-x) k_{n+1}(x; N+1) - (x+1) k_{n+1}(x+1; N+1)
            L = {{Rational(n + 1) / q, n, x, N}};
            R = {{p / q * (N + 1 - x), n + 1, x, N + 1}, {Rational(-(x + 1)), n + 1, x + 1, N + 1}};
            break;
        case RelationId::Backward:
            // k_n(x; N) = k_{n-1}(x; N-1) - k_{n-1}(x-1; N-1)
            L = {{one, n, x, N}};
            R = {{one, n - 1, x, N - 1}, {Rational(-1), n - 1, x - 1, N - 1}};
            break;
        case RelationId::DualForward:
            // 1/(1-p) k_n(x; N) = k_n(x+1; N+1) - k_{n+1}(x+1; N+1)
            L = {{q.reciprocal(), n, x, N}};
            R = {{one, n, x + 1, N + 1}, {Rational(-1), n + 1, x + 1, N + 1}};
            break;
        case RelationId::DualBackward:
            // x k_n(x; N) = p(N-n)/(1-p) k_n(x-1; N-1) - n k_{n-1}(x-1; N-1)
            L = {{Rational(x), n, x, N}};
            R = {{p * (N - n) / q, n, x - 1, N - 1}, {Rational(-n), n - 1, x - 1, N - 1}};
            break;
        case RelationId::ShiftedDiff1:
            // (N+1-n)/(1-p) k_n(x) = (x+1) k_{n-1}(x+1) - (N+1-x) k_{n-1}(x-1) + (N-2x) k_{n-1}(x)
            L = {{Rational(N + 1 - n) / q, n, x, N}};
            R = {{Rational(x + 1), n - 1, x + 1, N},
                 {Rational(-(N + 1 - x)), n - 1, x - 1, N},
                 {Rational(N - 2 * x), n - 1, x, N}};
            break;
        case RelationId::ShiftedDiff2:
            // (n+1) k_n(x) = -(1-p)(x+1) k_{n+1}(x+1) + p^2/(1-p)(N+1-x) k_{n+1}(x-1) - p(2x-N) k_{n+1}(x)
            L = {{Rational(n + 1), n, x, N}};
            R = {{-q * (x + 1), n + 1, x + 1, N},
                 {p * p / q * (N + 1 - x), n + 1, x - 1, N},
                 {-p * (2 * x - N), n + 1, x, N}};
            break;
        case RelationId::ShiftedRecu1:
            // x k_n(x) = p^2(N-n)/(1-p) k_{n+1}(x-1) - n(1-p) k_{n-1}(x-1) + p(N-2n) k_n(x-1)
            L = {{Rational(x), n, x, N}};
            R = {{p * p * (N - n) / q, n + 1, x - 1, N}, {-q * n, n - 1, x - 1, N}, {p * (N - 2 * n), n, x - 1, N}};
            break;
        case RelationId::ShiftedRecu2:
            // (N-x)/(1-p) k_n(x) = (n-N) k_{n+1}(x+1) + n k_{n-1}(x+1) + (N-2n) k_n(x+1)
            L = {{Rational(N - x) / q, n, x, N}};
            R = {{Rational(n - N), n + 1, x + 1, N}, {Rational(n), n - 1, x + 1, N}, {Rational(N - 2 * n), n, x + 1, N}};
            break;
    }
    return inst;
}

Rational k_relation_residual(RelationId rel, int i, int x, const KrawtchoukParams& params) {
    return residual_with(rel, i, x, params, [&](int degree, int arg, int size) {
        return k_eval(degree, arg, KrawtchoukParams(params.p(), size));
    });
}

Rational k_relation_residual(RelationId rel, int i, int x, const KrawtchoukParams& params,
                             const KrawtchoukFamily& family) {
    if (family.p() != params.p() || family.max_size() < params.N() + 1) {
        throw std::invalid_argument("k_relation_residual: family does not cover params");
    }
    return residual_with(rel, i, x, params,
                         [&](int degree, int arg, int size) -> const Rational& { return family.value(degree, arg, size); });
}

}  // namespace lgriffiths::krawtchouk
