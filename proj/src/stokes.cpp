#include "tubings/stokes.hpp"

#include "tubings/errors.hpp"

namespace tubings {

namespace {

// alpha^{z+beta} Gamma(z+beta) at integer z
BigFloat gamma_ab(const AsymptoticParams& p, long z, int prec) {
    BigFloat zb = BigFloat::from(z, prec) + BigFloat::from(p.beta, prec);
    return BigFloat::from(p.alpha, prec).pow(zb) * BigFloat::gamma(zb);
}

} // namespace

StokesEstimate estimate_stokes(const std::vector<Rat>& g, const AsymptoticParams& params,
                               int depth, int precision_bits) {
    const int N = static_cast<int>(g.size()) - 1;
    if (depth < 1) throw PreconditionError("depth must be >= 1");
    if (N < depth + 10)
        throw PreconditionError("sequence too short: need at least depth + 10 terms");
    const int prec = precision_bits;
    const int n0 = N - depth;

    // r_n = g_n / (alpha^{n+beta} Gamma(n+beta)) for n = n0 .. N
    std::vector<BigFloat> r;
    r.reserve(static_cast<std::size_t>(depth) + 1);
    for (int n = n0; n <= N; ++n)
        r.push_back(BigFloat::from(g[static_cast<std::size_t>(n)], prec) / gamma_ab(params, n, prec));

    // Stage-d Richardson estimate from r(n0..n0+d):
    //   R_d = sum_{j=0}^d r(n0+j) (n0+j)^d (-1)^{d+j} / (j! (d-j)!)
    // eliminating the first d powers of 1/n. Weights are exact rationals.
    std::vector<BigFloat> stages;
    for (int d = 0; d <= depth; ++d) {
        BigFloat acc(prec);
        Int fact_j = 1;
        for (int j = 0; j <= d; ++j) {
            if (j > 0) fact_j *= j;
            Int fact_dj = 1;
            for (int i = 2; i <= d - j; ++i) fact_dj *= i;
            Int num = 1;
            for (int i = 0; i < d; ++i) num *= n0 + j;
            Rat w(num, fact_j * fact_dj);
            w.canonicalize();
            if ((d + j) % 2) w = -w;
            acc = acc + r[static_cast<std::size_t>(j)] * BigFloat::from(w, prec);
        }
        stages.push_back(acc);
    }

    StokesEstimate out{stages.back(), precision_bits, depth, BigFloat(prec), {}, true};
    for (int d = 1; d <= depth; ++d)
        out.stage_residuals.push_back((stages[static_cast<std::size_t>(d)] -
                                       stages[static_cast<std::size_t>(d - 1)])
                                          .abs());
    out.residual = out.stage_residuals.back();
    for (std::size_t i = out.stage_residuals.size() >= 3 ? out.stage_residuals.size() - 3 : 0;
         i + 1 < out.stage_residuals.size(); ++i)
        if (out.stage_residuals[i] < out.stage_residuals[i + 1]) out.monotone_tail = false;

    // Residual blow-up signals that rounding noise beat the expansion.
    BigFloat least = out.stage_residuals.front();
    for (const auto& s : out.stage_residuals)
        if (s < least) least = s;
    if (!least.is_zero() && out.residual > least * BigFloat::from(1000L, prec))
        throw PrecisionError("Richardson residuals blew up: raise precision or lower depth");
    return out;
}

TailReport tail_check(const std::vector<Rat>& g, const AsymSeries& asym, const BigFloat& S,
                      int truncation, int window_lo, int window_hi, int precision_bits) {
    const int N = static_cast<int>(g.size()) - 1;
    if (window_lo < 1 || window_hi > N || window_lo > window_hi)
        throw PreconditionError("window out of range");
    if (truncation < 0 || truncation > static_cast<int>(asym.c.size()))
        throw PreconditionError("truncation exceeds available expansion coefficients");
    const int prec = precision_bits;
    TailReport rep;
    rep.truncation = truncation;
    for (int n = window_lo; n <= window_hi; ++n) {
        BigFloat num = BigFloat::from(g[static_cast<std::size_t>(n)], prec);
        for (int k = 0; k < truncation; ++k)
            num = num - gamma_ab(asym.params, n - k, prec) * S *
                            BigFloat::from(asym.c[static_cast<std::size_t>(k)], prec);
        rep.n.push_back(n);
        rep.remainder.push_back(num / gamma_ab(asym.params, n - truncation, prec));
    }
    rep.bounded = true;
    if (rep.remainder.size() >= 2) {
        BigFloat first = rep.remainder.front().abs();
        BigFloat last = rep.remainder.back().abs();
        BigFloat two = BigFloat::from(2L, prec);
        BigFloat one = BigFloat::from(1L, prec);
        if (last > (first + one) * two) rep.bounded = false;
    }
    return rep;
}

} // namespace tubings
