#include "monospec/intrel.hpp"

#include <gmpxx.h>

#include <cmath>
#include <numeric>
#include <string>
#include <vector>

namespace monospec {

namespace {

mpz_class to_mpz(const BigReal& t) {
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), t.raw(), MPFR_RNDN);
    return z;
}

BigReal l2_norm(const std::vector<BigReal>& x, mpfr_prec_t bits) {
    BigReal s(0L, bits);
    for (const auto& v : x) s += v * v;
    return sqrt(s);
}

} // namespace

std::optional<RelationResult> find_relation(const std::vector<BigReal>& x,
                                            double max_norm,
                                            const PrecisionContext& ctx) {
    const int n = static_cast<int>(x.size());
    if (n == 0) throw domain_error("find_relation: empty input");
    if (!(max_norm >= 1)) throw domain_error("find_relation: max_norm must be >= 1");

    const long required =
        static_cast<long>(std::ceil(n * std::log10(max_norm))) + 40;
    if (ctx.digits() < required)
        throw precision_error("find_relation: precision budget demands digits >= " +
                                  std::to_string(required) + " for length " +
                                  std::to_string(n) + " and norm bound " +
                                  std::to_string(static_cast<long long>(max_norm)),
                              required);

    const mpfr_prec_t bits = ctx.bits();
    BigReal xnorm = l2_norm(x, bits);
    BigReal resid_tol = BigReal::pow10(-(ctx.digits() - 15), bits) * xnorm;

    // trivial cases: an exactly-zero entry is its own relation
    for (int i = 0; i < n; ++i) {
        if (x[i].is_zero()) {
            std::vector<long long> c(n, 0);
            c[i] = 1;
            return RelationResult{c, ctx.real(0), max_norm};
        }
    }
    if (n == 1) return std::nullopt;   // single nonzero value has no relation

    // ---- PSLQ level 1 (Bailey's formulation) ----
    std::vector<BigReal> y(n);
    std::vector<std::vector<BigReal>> H(n, std::vector<BigReal>(n - 1, BigReal(0L, bits)));
    std::vector<std::vector<mpz_class>> B(n, std::vector<mpz_class>(n, 0));
    for (int i = 0; i < n; ++i) B[i][i] = 1;

    {
        std::vector<BigReal> s(n, BigReal(0L, bits));
        BigReal t(0L, bits);
        for (int i = n - 1; i >= 0; --i) {
            t += x[i] * x[i];
            s[i] = sqrt(t);
        }
        BigReal inv = ctx.real(1) / s[0];
        for (int i = 0; i < n; ++i) y[i] = x[i] * inv;
        for (int i = 0; i < n; ++i) s[i] *= inv;
        for (int j = 0; j < n - 1; ++j) {
            H[j][j] = s[j + 1] / s[j];
            BigReal tj = y[j] / (s[j] * s[j + 1]);
            for (int i = j + 1; i < n; ++i) H[i][j] = -y[i] * tj;
        }
    }

    const BigReal eps = BigReal::pow10(-(ctx.digits() + ctx.guard() - 10), bits);
    const BigReal teps = eps * BigReal::pow10(12, bits);

    auto hermite_reduce = [&](int i, int jstart) {
        for (int j = jstart; j >= 0; --j) {
            BigReal t = round_nearest(H[i][j] / H[j][j]);
            if (t.is_zero()) continue;
            mpz_class tz = to_mpz(t);
            y[j] += t * y[i];
            for (int k = 0; k <= j; ++k) H[i][k] -= t * H[j][k];
            for (int k = 0; k < n; ++k) B[k][j] += tz * B[k][i];
        }
    };

    // initial full reduction
    for (int i = 1; i < n; ++i) hermite_reduce(i, i - 1);

    auto min_y_index = [&]() {
        int idx = 0;
        BigReal m = abs(y[0]);
        for (int i = 1; i < n; ++i) {
            BigReal a = abs(y[i]);
            if (a < m) { m = a; idx = i; }
        }
        return std::pair<int, BigReal>(idx, m);
    };

    auto extract = [&](int jm) -> std::optional<RelationResult> {
        std::vector<long long> c(n);
        long long maxc = 0;
        for (int i = 0; i < n; ++i) {
            if (!B[i][jm].fits_slong_p()) return std::nullopt;
            c[i] = B[i][jm].get_si();
            long long a = c[i] < 0 ? -c[i] : c[i];
            if (a > maxc) maxc = a;
        }
        if (maxc == 0 || static_cast<double>(maxc) > max_norm) return std::nullopt;
        BigReal res(0L, bits);
        for (int i = 0; i < n; ++i) res += ctx.real(c[i]) * x[i];
        res = abs(res);
        if (res > resid_tol) return std::nullopt;
        return RelationResult{c, res, max_norm};
    };

    const BigReal gamma = ctx.real(2) / sqrt(ctx.real(3));
    const BigReal bound_cut =
        sqrt(ctx.real(n)) * BigReal::from_double(max_norm, ctx.bits());
    const long itmax = 10L * n * ctx.digits();

    {
        auto [jm, ymin] = min_y_index();
        if (ymin < eps) {
            auto r = extract(jm);
            if (r) return r;
        }
    }

    for (long iter = 0; iter < itmax; ++iter) {
        // pivot: maximize gamma^i |H_ii|
        int im = 0;
        {
            BigReal best(0L, bits);
            BigReal g(1L, bits);
            for (int i = 0; i < n - 1; ++i) {
                g *= gamma;
                BigReal v = g * abs(H[i][i]);
                if (v > best) { best = v; im = i; }
            }
        }
        const int im1 = im + 1;
        swap(y[im], y[im1]);
        for (int k = 0; k < n - 1; ++k) swap(H[im][k], H[im1][k]);
        for (int k = 0; k < n; ++k) std::swap(B[k][im], B[k][im1]);

        if (im <= n - 3) {
            BigReal t1 = H[im][im], t2 = H[im][im1];
            BigReal t0 = sqrt(t1 * t1 + t2 * t2);
            t1 /= t0;
            t2 /= t0;
            for (int i = im; i < n; ++i) {
                BigReal a = H[i][im], b = H[i][im1];
                H[i][im] = t1 * a + t2 * b;
                H[i][im1] = t1 * b - t2 * a;
            }
        }
        for (int i = im1; i < n; ++i)
            hermite_reduce(i, (i == im1) ? i - 1 : im1);

        auto [jm, ymin] = min_y_index();
        if (ymin < teps) {
            if (ymin < eps) {
                auto r = extract(jm);
                if (r) return r;
                // a relation exists but violates the norm bound or residual;
                // fall through to the bound check below
            } else {
                throw precision_error(
                    "find_relation: precision exhausted before a decision", required);
            }
        }
        // norm bound: every relation has |c|_2 >= 1/max|H_jj|
        BigReal hmax(0L, bits);
        for (int j = 0; j < n - 1; ++j) {
            BigReal a = abs(H[j][j]);
            if (a > hmax) hmax = a;
        }
        if (ctx.real(1) / hmax > bound_cut) return std::nullopt;
        if (ymin < eps) {
            // detected but not extractable within bounds and bound not yet
            // certifying: cannot iterate reliably past this point
            throw precision_error(
                "find_relation: relation outside norm bound; search undecidable "
                "at this precision", required);
        }
    }
    throw precision_error("find_relation: iteration cap reached without a decision",
                          required);
}

std::optional<QRational> rational_detect(const BigReal& x, long long max_den,
                                         const PrecisionContext& ctx) {
    if (max_den < 1) throw domain_error("rational_detect: max_den must be >= 1");
    const mpfr_prec_t bits = ctx.bits();
    BigReal tol = BigReal::pow10(-(ctx.digits() - 15), bits);

    // continued-fraction convergents
    long long p_prev = 1, q_prev = 0;   // h_{-1}, k_{-1}
    long long p_cur, q_cur;             // h_0, k_0
    BigReal a0 = floor(x);
    p_cur = a0.to_long();
    q_cur = 1;
    BigReal frac = x - a0;
    for (int it = 0; it < 256; ++it) {
        if (frac.is_zero()) break;
        BigReal inv = ctx.real(1) / frac;
        BigReal ak = floor(inv);
        // guard against absurd terms (the value is effectively rational here)
        if (ak > ctx.real(4) * ctx.real(max_den) * ctx.real(max_den)) break;
        long long a = ak.to_long();
        __int128 qn = static_cast<__int128>(a) * q_cur + q_prev;
        if (qn > max_den) break;
        __int128 pn = static_cast<__int128>(a) * p_cur + p_prev;
        p_prev = p_cur; q_prev = q_cur;
        p_cur = static_cast<long long>(pn);
        q_cur = static_cast<long long>(qn);
        frac = inv - ak;
    }
    QRational cand(p_cur, q_cur);
    BigReal err = abs(x - cand.to_real(ctx));
    if (err <= tol) return cand;
    return std::nullopt;
}

AlgebraicityReport algebraicity_probe(const BigReal& x, int dmax, double hmax,
                                      const PrecisionContext& ctx) {
    if (dmax < 1) throw domain_error("algebraicity_probe: dmax must be >= 1");
    std::vector<BigReal> powers;
    powers.reserve(dmax + 1);
    powers.push_back(ctx.real(1));
    for (int i = 1; i <= dmax; ++i) powers.push_back(powers.back() * x);
    auto rel = find_relation(powers, hmax, ctx);
    AlgebraicityReport rep{std::nullopt, ctx.digits(), dmax, hmax};
    if (!rel) return rep;
    std::vector<long long> c = rel->coeffs;
    while (c.size() > 1 && c.back() == 0) c.pop_back();
    // a vanishing low block is a power of x; x != 0 here, so divide it out
    if (!x.is_zero())
        while (c.size() > 1 && c.front() == 0) c.erase(c.begin());
    long long g = 0;
    for (long long v : c) g = std::gcd(g, v < 0 ? -v : v);
    if (g > 1)
        for (auto& v : c) v /= g;
    if (c.back() < 0)
        for (auto& v : c) v = -v;
    rep.found = std::move(c);
    return rep;
}

std::pair<std::vector<long>, BigReal> find_target_combo(
    const std::vector<BigComplex>& z, const BigComplex& target, long max_norm,
    const PrecisionContext& ctx) {
    if (z.size() != 2)
        throw domain_error("find_target_combo: implemented for two values");
    std::vector<long> best_c{0, 0};
    BigReal best(ctx.bits());
    bool first = true;
    for (long u = -max_norm; u <= max_norm; ++u) {
        for (long v = -max_norm; v <= max_norm; ++v) {
            if (u == 0 && v == 0) continue;
            BigComplex comb{u * z[0].re + v * z[1].re - target.re,
                            u * z[0].im + v * z[1].im - target.im};
            BigReal res = abs(comb);
            if (first || res < best) {
                best = res;
                best_c = {u, v};
                first = false;
            }
        }
    }
    return {best_c, best};
}

} // namespace monospec
