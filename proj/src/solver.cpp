#include "tubings/solver.hpp"

#include "tubings/errors.hpp"

namespace tubings {

const char* variant_name(Variant v) {
    switch (v) {
        case Variant::Full: return "full";
        case Variant::Rainbow: return "rainbow";
        case Variant::Chain: return "chain";
        case Variant::Odd: return "odd";
        case Variant::Chord: return "chord";
    }
    return "?";
}

Variant variant_from_name(const std::string& name) {
    if (name == "full") return Variant::Full;
    if (name == "rainbow") return Variant::Rainbow;
    if (name == "chain") return Variant::Chain;
    if (name == "odd") return Variant::Odd;
    if (name == "chord") return Variant::Chord;
    throw PreconditionError("unknown variant '" + name + "'");
}

IntSeries SolverResult::gamma_partial(int j) const {
    if (j < 0 || j > spec.m()) throw PreconditionError("gamma_partial: j out of range");
    IntSeries g = IntSeries::x(order);
    for (int i = 1; i <= j; ++i) g = g + layers[static_cast<std::size_t>(i - 1)];
    return g;
}

namespace {

// Per-coefficient multiplier of the variant's differential operator.
inline long op_multiplier(Variant v, int r) {
    switch (v) {
        case Variant::Full:
        case Variant::Chord: return 2L * r - 1;
        case Variant::Chain:
        case Variant::Odd: return r;
        case Variant::Rainbow: return 1;
    }
    return 0;
}

inline bool gamma_prefactor(Variant v) {
    return v == Variant::Full || v == Variant::Rainbow || v == Variant::Odd;
}

} // namespace

SolverResult solve(const AlphabetSpec& spec, int order, Variant variant) {
    if (order < 1) throw PreconditionError("order must be >= 1");
    const int m = spec.m();
    const int N = order;

    std::vector<Int> g(static_cast<std::size_t>(N) + 1);
    g[1] = 1;
    // op_gj[j][r] = multiplier(r) * gamma_j[r], maintained incrementally so
    // each order costs one dot product per layer.
    std::vector<std::vector<Int>> L(static_cast<std::size_t>(m) + 1,
                                    std::vector<Int>(static_cast<std::size_t>(N) + 1));
    std::vector<std::vector<Int>> op_gj(static_cast<std::size_t>(m) + 1,
                                        std::vector<Int>(static_cast<std::size_t>(N) + 1));
    for (int j = 1; j <= m; ++j) op_gj[static_cast<std::size_t>(j)][1] = op_multiplier(variant, 1);

    const bool pref_gamma = gamma_prefactor(variant);
    Int acc;
    for (int n = 2; n <= N; ++n) {
        for (int j = 1; j <= m; ++j) {
            auto& ogj = op_gj[static_cast<std::size_t>(j)];
            if (pref_gamma) {
                acc = 0;
                for (int p = 1; p < n; ++p) acc += g[static_cast<std::size_t>(p)] * ogj[static_cast<std::size_t>(n - p)];
            } else {
                acc = ogj[static_cast<std::size_t>(n - 1)];
            }
            L[static_cast<std::size_t>(j)][static_cast<std::size_t>(n)] = spec.a(j) * acc;
        }
        Int gn = 0;
        Int gjn = 0;
        for (int j = 1; j <= m; ++j) {
            gn += L[static_cast<std::size_t>(j)][static_cast<std::size_t>(n)];
            gjn += L[static_cast<std::size_t>(j)][static_cast<std::size_t>(n)];
            op_gj[static_cast<std::size_t>(j)][static_cast<std::size_t>(n)] = op_multiplier(variant, n) * gjn;
        }
        g[static_cast<std::size_t>(n)] = gn;
    }

    SolverResult res{spec, variant, N, IntSeries(std::move(g)), {}};
    res.layers.reserve(static_cast<std::size_t>(m));
    for (int j = 1; j <= m; ++j)
        res.layers.emplace_back(std::move(L[static_cast<std::size_t>(j)]));
    return res;
}

bool verify_factorized_ode(const SolverResult& res) {
    const int N = res.order;
    IntSeries h = res.gamma;
    for (int j = res.spec.m(); j >= 1; --j) {
        IntSeries gDh = series_mul(res.gamma, pointing_op(h));
        for (int n = 0; n <= N; ++n) h[n] -= res.spec.a(j) * gDh[n];
    }
    return h == IntSeries::x(N);
}

} // namespace tubings
