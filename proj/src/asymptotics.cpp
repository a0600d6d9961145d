#include "tubings/asymptotics.hpp"

#include <utility>

#include "tubings/errors.hpp"

namespace tubings {

namespace {

// Affine form c0 + sum coef_s * sym_s over at most a couple of live
// symbols. The order-by-order solves below never need more than two.
class LinExpr {
public:
    LinExpr() = default;
    explicit LinExpr(Rat c) : c_(std::move(c)) {}
    static LinExpr symbol(int id) {
        LinExpr e;
        e.terms_.emplace_back(id, Rat(1));
        return e;
    }

    LinExpr& operator+=(const LinExpr& o) {
        c_ += o.c_;
        for (const auto& [id, co] : o.terms_) add_term(id, co);
        return *this;
    }
    LinExpr& sub_scaled(const LinExpr& o, const Rat& s) {
        c_ -= o.c_ * s;
        for (const auto& [id, co] : o.terms_) add_term(id, -co * s);
        return *this;
    }
    LinExpr& add_scaled(const LinExpr& o, const Rat& s) {
        c_ += o.c_ * s;
        for (const auto& [id, co] : o.terms_) add_term(id, co * s);
        return *this;
    }
    LinExpr& operator*=(const Rat& s) {
        c_ *= s;
        for (auto& [id, co] : terms_) co *= s;
        prune();
        return *this;
    }
    void substitute(int id, const Rat& v) {
        for (auto it = terms_.begin(); it != terms_.end(); ++it) {
            if (it->first == id) {
                c_ += it->second * v;
                terms_.erase(it);
                return;
            }
        }
    }
    bool is_constant() const { return terms_.empty(); }
    const Rat& constant_part() const { return c_; }
    Rat coefficient(int id) const {
        for (const auto& [i, co] : terms_)
            if (i == id) return co;
        return Rat(0);
    }

private:
    void add_term(int id, const Rat& co) {
        for (auto it = terms_.begin(); it != terms_.end(); ++it) {
            if (it->first == id) {
                it->second += co;
                if (it->second == 0) terms_.erase(it);
                return;
            }
        }
        if (co != 0) terms_.emplace_back(id, co);
    }
    void prune() {
        std::erase_if(terms_, [](const auto& t) { return t.second == 0; });
    }

    Rat c_;
    std::vector<std::pair<int, Rat>> terms_;
};

std::vector<RatSeries> partial_sums(const SolverResult& solver) {
    std::vector<RatSeries> gj;
    gj.reserve(static_cast<std::size_t>(solver.spec.m()) + 1);
    for (int j = 0; j <= solver.spec.m(); ++j)
        gj.push_back(to_rational(solver.gamma_partial(j)));
    return gj;
}

void require_distinct(const AlphabetSpec& spec) {
    if (!spec.distinct()) throw DegenerateSpectrumError(spec.first_repeated());
}

} // namespace

AsymptoticParams asym_params(const AlphabetSpec& spec, int q) {
    require_distinct(spec);
    if (q < 1 || q > spec.m()) throw PreconditionError("sector index out of range");
    const long aq = spec.a(q);
    Rat alpha(2 * aq);
    Rat sum(0), prod(1);
    for (int i = 1; i <= spec.m(); ++i) {
        if (i == q) continue;
        sum += spec.a(i);
        prod *= Rat(aq, aq - spec.a(i));
    }
    Rat beta = sum / (2 * aq) + prod / 2;
    beta.canonicalize();
    return AsymptoticParams{q, std::move(alpha), std::move(beta)};
}

namespace {

class AodeSolver {
public:
    AodeSolver(const SolverResult& solver, int q, int depth, Rat beta)
        : m_(solver.spec.m()), q_(q), K_(depth), spec_(solver.spec), beta_(std::move(beta)) {
        if (q_ < 1 || q_ > m_) throw PreconditionError("sector index out of range");
        if (K_ < 0) throw PreconditionError("depth must be >= 0");
        if (solver.order < K_ + m_ + 2)
            throw InsufficientOrderError("need solver order >= depth + m + 2 = " +
                                         std::to_string(K_ + m_ + 2) + ", have " +
                                         std::to_string(solver.order));
        alpha_ = Rat(2 * spec_.a(q_));
        gamma_ = to_rational(solver.gamma);
        gj_ = partial_sums(solver);
        A_.assign(static_cast<std::size_t>(m_) + 1,
                  std::vector<LinExpr>(static_cast<std::size_t>(K_) + 2));
    }

    AsymSeries run() {
        // order 0: the kernel vector, leading coefficient pinned to 1
        for (int j = 1; j < q_; ++j) at(j, 0) = LinExpr(Rat(0));
        at(q_, 0) = LinExpr(Rat(1));
        for (int j = q_ + 1; j <= m_; ++j) solve_row(j, 0);

        int live = -1;
        for (int l = 1; l <= K_ + 1; ++l) {
            for (int j = 1; j < q_; ++j) solve_row(j, l);
            LinExpr con = (q_ >= 2) ? at(q_ - 1, l) : LinExpr(Rat(0));
            con += rhs_rest(q_, l);
            if (l == 1) {
                // the order-x^1 row-q equation carries no unknown; it holds
                // exactly iff beta is the sector value
                if (!con.is_constant() || con.constant_part() != 0)
                    throw PreconditionError("beta fails the order-x^1 consistency equation");
            } else {
                Rat coef = con.coefficient(live);
                if (coef == 0) throw std::logic_error("free coefficient dropped out of row q");
                Rat val = -con.constant_part() / coef;
                substitute_all(live, val);
                con.substitute(live, val);
                if (!con.is_constant() || con.constant_part() != 0)
                    throw std::logic_error("row-q constraint not satisfiable");
            }
            if (l <= K_) {
                live = l;
                at(q_, l) = LinExpr::symbol(live);
                for (int j = q_ + 1; j <= m_; ++j) solve_row(j, l);
            }
        }

        AsymSeries out;
        out.params = AsymptoticParams{q_, alpha_, beta_};
        out.layers.assign(static_cast<std::size_t>(m_), std::vector<Rat>(static_cast<std::size_t>(K_) + 1));
        for (int j = 1; j <= m_; ++j)
            for (int n = 0; n <= K_; ++n) {
                const LinExpr& e = at(j, n);
                if (!e.is_constant()) throw std::logic_error("unresolved symbol in output");
                out.layers[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(n)] = e.constant_part();
            }
        out.c = out.layers.back();
        return out;
    }

private:
    LinExpr& at(int j, int n) { return A_[static_cast<std::size_t>(j)][static_cast<std::size_t>(n)]; }

    // Row j at order n, moved off the diagonal:
    //   ((alpha - 2a_j)/alpha) A_j[n] = A_{j-1}[n] + rhs_rest(j, n)
    void solve_row(int j, int n) {
        LinExpr e = (j >= 1) ? at(j - 1, n) : LinExpr(Rat(0));
        e += rhs_rest(j, n);
        Rat d = Rat(1) - Rat(2 * spec_.a(j)) / alpha_;
        e *= Rat(1) / d;
        at(j, n) = std::move(e);
    }

    // Everything in row j, order n, that involves only already-known data:
    //   a_j (A_m (2xd-1) gamma_j)[n]
    // + a_j (gamma (2xd-1-2beta) A_j)[n]
    // + (2a_j/alpha) (gamma A_j / x)[n]  minus its diagonal term at p = 1.
    LinExpr rhs_rest(int j, int n) {
        const Rat aj(spec_.a(j));
        const Rat two_over_alpha = Rat(2) / alpha_;
        LinExpr tot;
        for (int r = 1; r <= n; ++r) {
            int p = n - r;
            const Rat& gr = gj_[static_cast<std::size_t>(j)][r];
            if (gr != 0) tot.add_scaled(at(m_, p), aj * Rat(2 * r - 1) * gr);
        }
        for (int p = 1; p <= n; ++p) {
            int r = n - p;
            const Rat& gp = gamma_[p];
            if (gp != 0) tot.add_scaled(at(j, r), aj * gp * (Rat(2 * r - 1) - 2 * beta_));
        }
        for (int p = 2; p <= n + 1; ++p) {
            int r = n + 1 - p;
            const Rat& gp = gamma_[p];
            if (gp != 0) tot.add_scaled(at(j, r), aj * two_over_alpha * gp);
        }
        return tot;
    }

    void substitute_all(int id, const Rat& v) {
        for (auto& row : A_)
            for (auto& e : row) e.substitute(id, v);
    }

    int m_, q_, K_;
    AlphabetSpec spec_;
    Rat alpha_, beta_;
    RatSeries gamma_;
    std::vector<RatSeries> gj_;
    std::vector<std::vector<LinExpr>> A_;
};

// Closed forms the solve must reproduce at orders 0 and 1 (with S_q = 1):
// leading coefficients c_k = prod_{j=q+1}^k alpha/(alpha-2a_j) for k >= q,
// 0 below, and for k <= q-1 the first-order values
// d_k = (prod_{j=q+1}^m alpha/(alpha-2a_j)) sum_{j<=k} a_j prod_{i=j}^k alpha/(alpha-2a_i).
void check_low_order_closed_forms(const AlphabetSpec& spec, int q, const AsymSeries& s) {
    const Rat& alpha = s.params.alpha;
    Rat ck(1);
    for (int k = 1; k <= spec.m(); ++k) {
        Rat want = Rat(0);
        if (k >= q) {
            if (k > q) ck *= alpha / (alpha - Rat(2 * spec.a(k)));
            want = ck;
        }
        if (s.layers[static_cast<std::size_t>(k - 1)][0] != want)
            throw std::logic_error("order-0 kernel vector mismatch");
    }
    Rat pref(1);
    for (int j = q + 1; j <= spec.m(); ++j) pref *= alpha / (alpha - Rat(2 * spec.a(j)));
    for (int k = 1; k <= q - 1; ++k) {
        Rat sum(0);
        for (int j = 1; j <= k; ++j) {
            Rat t(spec.a(j));
            for (int i = j; i <= k; ++i) t *= alpha / (alpha - Rat(2 * spec.a(i)));
            sum += t;
        }
        if (s.layers[static_cast<std::size_t>(k - 1)][1] != pref * sum)
            throw std::logic_error("order-1 d_k closed form mismatch");
    }
}

} // namespace

AsymSeries asym_series(const SolverResult& solver, int q, int depth) {
    require_distinct(solver.spec);
    AsymptoticParams p = asym_params(solver.spec, q);
    AsymSeries s = AodeSolver(solver, q, depth, p.beta).run();
    check_low_order_closed_forms(solver.spec, q, s);
    return s;
}

AsymSeries asym_series_with_beta(const SolverResult& solver, int q, int depth, const Rat& beta) {
    require_distinct(solver.spec);
    return AodeSolver(solver, q, depth, beta).run();
}

bool verify_asym_series(const SolverResult& solver, const AsymSeries& series) {
    const int m = solver.spec.m();
    const int K = static_cast<int>(series.c.size()) - 1;
    const Rat& alpha = series.params.alpha;
    const Rat& beta = series.params.beta;
    RatSeries gamma = to_rational(solver.gamma);
    auto gj = partial_sums(solver);
    auto A = [&](int j, int n) -> Rat {
        if (j == 0) return Rat(0);
        return series.layers[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(n)];
    };
    for (int j = 1; j <= m; ++j) {
        const Rat aj(solver.spec.a(j));
        for (int n = 0; n <= K; ++n) {
            Rat lhs = A(j, n) - A(j - 1, n);
            Rat rhs(0);
            for (int r = 1; r <= n; ++r) rhs += aj * A(m, n - r) * Rat(2 * r - 1) * gj[static_cast<std::size_t>(j)][r];
            for (int p = 1; p <= n; ++p)
                rhs += aj * gamma[p] * (Rat(2 * (n - p) - 1) - 2 * beta) * A(j, n - p);
            for (int p = 1; p <= n + 1; ++p) {
                int r = n + 1 - p;
                if (r <= K) rhs += aj * (Rat(2) / alpha) * gamma[p] * A(j, r);
            }
            if (lhs != rhs) return false;
        }
    }
    return true;
}

std::vector<AsymptoticParams> transseries_sectors(const AlphabetSpec& spec) {
    require_distinct(spec);
    const int m = spec.m();
    const Rat g2 = Rat(solve(spec, 2).gamma[2]);
    std::vector<AsymptoticParams> out;
    out.reserve(static_cast<std::size_t>(m));
    for (int q = 1; q <= m; ++q) {
        Rat alpha(2 * spec.a(q));
        // order x^0 of the linearized chain: pure products
        std::vector<Rat> v0(static_cast<std::size_t>(m) + 1);
        v0[static_cast<std::size_t>(m)] = 1;
        for (int j = m; j >= 1; --j)
            v0[static_cast<std::size_t>(j - 1)] =
                (Rat(1) - Rat(2 * spec.a(j)) / alpha) * v0[static_cast<std::size_t>(j)];
        if (v0[0] != 0) throw std::logic_error("alpha = 2a_q must annihilate the leading order");
        // order x^1, affine in beta
        const int kBeta = 0;
        std::vector<LinExpr> v1(static_cast<std::size_t>(m) + 1);
        for (int j = m; j >= 1; --j) {
            const Rat aj(spec.a(j));
            LinExpr term = LinExpr::symbol(kBeta);
            term *= Rat(-2) * aj * v0[static_cast<std::size_t>(j)];
            term += LinExpr(-aj * v0[static_cast<std::size_t>(j)] +
                            aj * (Rat(2) / alpha) * g2 * v0[static_cast<std::size_t>(j)] + aj);
            v1[static_cast<std::size_t>(j - 1)] = v1[static_cast<std::size_t>(j)];
            v1[static_cast<std::size_t>(j - 1)] *= Rat(1) - Rat(2) * aj / alpha;
            v1[static_cast<std::size_t>(j - 1)].sub_scaled(term, Rat(1));
        }
        Rat coef = v1[0].coefficient(kBeta);
        if (coef == 0) throw DegenerateSpectrumError(spec.first_repeated());
        Rat beta = -v1[0].constant_part() / coef;
        beta.canonicalize();
        out.push_back(AsymptoticParams{q, std::move(alpha), std::move(beta)});
    }
    return out;
}

std::vector<Rat> fluctuation_series(const SolverResult& solver, int q, int depth) {
    require_distinct(solver.spec);
    const int m = solver.spec.m();
    const int K = depth;
    if (K < 0) throw PreconditionError("depth must be >= 0");
    if (solver.order < K + m + 2)
        throw InsufficientOrderError("need solver order >= depth + m + 2 = " +
                                     std::to_string(K + m + 2) + ", have " +
                                     std::to_string(solver.order));
    AsymptoticParams p = asym_params(solver.spec, q);
    const Rat& alpha = p.alpha;
    const Rat& beta = p.beta;
    RatSeries gamma = to_rational(solver.gamma);
    auto gj = partial_sums(solver);

    // v_m = 1 + u_1 x + u_2 x^2 + ...; v_{j-1} = v_j - a_j gamma Dt(v_j)
    // - a_j ((2xd-1)gamma_j) v_m, with Dt = (2/alpha)/x + 2x d/dx - 1 - 2beta.
    // v_0[k] = 0 is automatic at k = 0, 1 and pins u_{k-1} for k >= 2.
    std::vector<std::vector<LinExpr>> v(static_cast<std::size_t>(m) + 1,
                                        std::vector<LinExpr>(static_cast<std::size_t>(K) + 2));
    std::vector<Rat> u(static_cast<std::size_t>(K) + 1);
    u[0] = 1;
    for (int k = 0; k <= K + 1; ++k) {
        v[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)] =
            (k == 0) ? LinExpr(Rat(1)) : LinExpr::symbol(k);
        for (int j = m; j >= 1; --j) {
            const Rat aj(solver.spec.a(j));
            LinExpr e = v[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
            for (int p = 1; p <= k + 1; ++p) {
                const Rat& gp = gamma[p];
                if (gp == 0) continue;
                int r1 = k - p + 1;
                if (r1 >= 0)
                    e.sub_scaled(v[static_cast<std::size_t>(j)][static_cast<std::size_t>(r1)],
                                 aj * (Rat(2) / alpha) * gp);
                int r2 = k - p;
                if (r2 >= 0)
                    e.sub_scaled(v[static_cast<std::size_t>(j)][static_cast<std::size_t>(r2)],
                                 aj * gp * (Rat(2 * r2 - 1) - 2 * beta));
            }
            for (int r = 1; r <= k; ++r) {
                const Rat& gjr = gj[static_cast<std::size_t>(j)][r];
                if (gjr != 0)
                    e.sub_scaled(v[static_cast<std::size_t>(m)][static_cast<std::size_t>(k - r)],
                                 aj * Rat(2 * r - 1) * gjr);
            }
            v[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(k)] = std::move(e);
        }
        LinExpr con = v[0][static_cast<std::size_t>(k)];
        // u_k propagates down the chain with the same vanishing product of
        // factors that selected alpha, so it must drop out here
        if (con.coefficient(k) != 0)
            throw std::logic_error("u_k failed to drop out of the order-k constraint");
        if (k <= 1) {
            if (!con.is_constant() || con.constant_part() != 0)
                throw std::logic_error("transseries parameters fail low-order consistency");
        } else {
            Rat coef = con.coefficient(k - 1);
            if (coef == 0) throw std::logic_error("fluctuation coefficient dropped out");
            Rat val = -con.constant_part() / coef;
            u[static_cast<std::size_t>(k - 1)] = val;
            for (auto& row : v)
                for (auto& e : row) e.substitute(k - 1, val);
        }
    }
    return u;
}

} // namespace tubings
