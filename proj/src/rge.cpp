#include "tubings/rge.hpp"

#include "tubings/errors.hpp"

namespace tubings {

GPolynomial rge_expand(const SolverResult& res, int max_power) {
    if (max_power < 1) throw PreconditionError("max_power must be >= 1");
    GPolynomial out;
    out.order = res.order;
    out.max_power = max_power;
    RatSeries gamma = to_rational(res.gamma);
    out.columns.push_back(gamma);
    for (int k = 2; k <= max_power; ++k) {
        RatSeries next = series_mul(gamma, pointing_op(out.columns.back()));
        for (int n = 0; n <= out.order; ++n) next[n] /= k;
        out.columns.push_back(std::move(next));
    }
    return out;
}

} // namespace tubings
