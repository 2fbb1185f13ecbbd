#include "skewlab/quantities.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace skewlab {
namespace {

constexpr double kNegClamp = 1e-10;
constexpr double kSumAgreeTol = 1e-9;
constexpr double kKDecompTol = 1e-9;
constexpr double kURouteRelTol = 1e-8;
constexpr double kURouteAbsTol = 1e-12;

double lp(double lam, double t) { return eigenvalue_power(lam, t); }

// Exact +0.0 for anything nonpositive (std::max would keep -0.0).
double clamp_nonneg(double v) { return v <= 0.0 ? 0.0 : v; }

/// Fractional powers of rho shared by one evaluation.
struct Powers {
    CMatrix a, b, sum, comp, one_minus_a, one_minus_b;

    Powers(const DensityOperator& rho, const SkewParams& p)
        : a(matrix_power(rho, p.alpha())),
          b(matrix_power(rho, p.beta())),
          sum(matrix_power(rho, p.sum())),
          comp(matrix_power(rho, p.one_minus_sum())),
          one_minus_a(matrix_power(rho, p.one_minus_alpha())),
          one_minus_b(matrix_power(rho, p.one_minus_beta())) {}
};

/// Eigenbasis data for the spectral sums: eigenvalues plus matrix elements
/// a_mn = <psi_m| X |psi_n> of the raw and centered operators.
struct SpectralData {
    RVector lam;
    CMatrix raw;      // eigenbasis elements of A
    CMatrix centered; // eigenbasis elements of A - Tr(rho A) I

    SpectralData(const DensityOperator& rho, const HSOperator& op) {
        lam = rho.eigenvalues();
        raw = to_eigenbasis(rho, op);
        Cplx mean = 0.0;
        for (Eigen::Index m = 0; m < raw.rows(); ++m)
            mean += lam[m] * raw(m, m);
        centered = raw;
        centered.diagonal().array() -= mean;
    }
};

QuantityResult make_complex(Cplx v, EvalPath path) {
    return {v, path, std::abs(v.imag())};
}

QuantityResult make_real_nonneg(Cplx v, EvalPath path, const char* name) {
    double re = v.real();
    if (re < -kNegClamp)
        throw NumericalInconsistency(std::string(name) + " came out " +
                                     std::to_string(re) +
                                     ", more negative than round-off allows");
    return {Cplx(clamp_nonneg(re), v.imag()), path, std::abs(v.imag())};
}

Cplx cov_trace(const DensityOperator& rho, const HSOperator& a, const HSOperator& b,
               const SkewParams& p) {
    const Powers pw(rho, p);
    const CMatrix adag = a.matrix().adjoint();
    const CMatrix bdag = b.matrix().adjoint();
    const Cplx t1 = (rho.matrix() * adag * b.matrix()).trace();
    const Cplx t2 = (pw.sum * a.matrix() * pw.comp * bdag).trace();
    const Cplx t3 = rho.expectation(b.matrix()) * rho.expectation(adag);
    const Cplx t4 = rho.expectation(a.matrix()) * rho.expectation(bdag);
    return 0.5 * (t1 + t2 - t3 - t4);
}

Cplx cov_spectral(const DensityOperator& rho, const HSOperator& a,
                  const HSOperator& b, const SkewParams& p) {
    const SpectralData sa(rho, a), sb(rho, b);
    const double s = p.one_minus_sum();
    const auto d = sa.lam.size();
    Cplx acc = 0.0;
    for (Eigen::Index m = 0; m < d; ++m) {
        const double wm = lp(sa.lam[m], p.sum());
        for (Eigen::Index n = 0; n < d; ++n) {
            acc += wm * (lp(sa.lam[m], s) * std::conj(sa.centered(n, m)) * sb.centered(n, m) +
                         lp(sa.lam[n], s) * sa.centered(m, n) * std::conj(sb.centered(m, n)));
        }
    }
    return 0.5 * acc;
}

Cplx corr_trace(const DensityOperator& rho, const HSOperator& a, const HSOperator& b,
                const SkewParams& p) {
    const Powers pw(rho, p);
    const CMatrix adag = a.matrix().adjoint();
    const CMatrix bdag = b.matrix().adjoint();
    const Cplx t1 = (rho.matrix() * adag * b.matrix()).trace();
    const Cplx t2 = (pw.sum * a.matrix() * pw.comp * bdag).trace();
    const Cplx t3 = (pw.one_minus_b * adag * pw.b * b.matrix()).trace();
    const Cplx t4 = (pw.a * a.matrix() * pw.one_minus_a * bdag).trace();
    return 0.5 * (t1 + t2 - t3 - t4);
}

Cplx corr_spectral(const DensityOperator& rho, const HSOperator& a,
                   const HSOperator& b, const SkewParams& p) {
    const SpectralData sa(rho, a), sb(rho, b);
    const double al = p.alpha(), be = p.beta(), s = p.one_minus_sum();
    const auto d = sa.lam.size();
    Cplx acc = 0.0;
    for (Eigen::Index m = 0; m < d; ++m) {
        for (Eigen::Index n = 0; n < d; ++n) {
            const double w = lp(sa.lam[m], al) * (lp(sa.lam[m], be) - lp(sa.lam[n], be));
            if (w == 0.0)
                continue;
            acc += w * (lp(sa.lam[m], s) * std::conj(sa.centered(n, m)) * sb.centered(n, m) +
                        lp(sa.lam[n], s) * sa.centered(m, n) * std::conj(sb.centered(m, n)));
        }
    }
    return 0.5 * acc;
}

Cplx c_trace(const DensityOperator& rho, const HSOperator& a, const HSOperator& b,
             const SkewParams& p) {
    const Powers pw(rho, p);
    const Cplx t3 = (pw.one_minus_b * a.matrix().adjoint() * pw.b * b.matrix()).trace();
    const Cplx t4 = (pw.a * a.matrix() * pw.one_minus_a * b.matrix().adjoint()).trace();
    return 0.5 * (t3 + t4);
}

Cplx c_spectral(const DensityOperator& rho, const HSOperator& a, const HSOperator& b,
                const SkewParams& p) {
    const SpectralData sa(rho, a), sb(rho, b);
    const double al = p.alpha(), be = p.beta();
    const auto d = sa.lam.size();
    Cplx acc = 0.0;
    for (Eigen::Index m = 0; m < d; ++m) {
        for (Eigen::Index n = 0; n < d; ++n) {
            acc += lp(sa.lam[m], 1.0 - be) * lp(sa.lam[n], be) *
                       std::conj(sa.raw(n, m)) * sb.raw(n, m) +
                   lp(sa.lam[m], al) * lp(sa.lam[n], 1.0 - al) * sa.raw(m, n) *
                       std::conj(sb.raw(m, n));
        }
    }
    return 0.5 * acc;
}

Cplx i_trace(const HSOperator& a, const Powers& pw) {
    const CMatrix ca = commutator(pw.a, a.matrix().adjoint());
    const CMatrix cb = commutator(pw.b, a.matrix());
    return -0.5 * (ca * cb * pw.comp).trace();
}

/// The three equivalent eigenvalue sums for mgwyd_i; mutual agreement is
/// asserted before the first is returned.
double i_spectral(const DensityOperator& rho, const HSOperator& a, const SkewParams& p) {
    const SpectralData sa(rho, a);
    const double al = p.alpha(), be = p.beta(), s = p.one_minus_sum();
    const auto d = sa.lam.size();
    double s1 = 0.0, s2 = 0.0, s3 = 0.0;
    for (Eigen::Index m = 0; m < d; ++m) {
        for (Eigen::Index n = 0; n < d; ++n) {
            const double amn2 = std::norm(sa.centered(m, n));
            const double anm2 = std::norm(sa.centered(n, m));
            s1 += lp(sa.lam[m], al) * (lp(sa.lam[m], be) - lp(sa.lam[n], be)) *
                  (lp(sa.lam[m], s) * anm2 + lp(sa.lam[n], s) * amn2);
            s2 += (lp(sa.lam[m], al) - lp(sa.lam[n], al)) *
                  (lp(sa.lam[m], be) - lp(sa.lam[n], be)) * lp(sa.lam[n], s) * amn2;
            if (m < n)
                s3 += (lp(sa.lam[m], al) - lp(sa.lam[n], al)) *
                      (lp(sa.lam[m], be) - lp(sa.lam[n], be)) *
                      (lp(sa.lam[m], s) * anm2 + lp(sa.lam[n], s) * amn2);
        }
    }
    s1 *= 0.5;
    s2 *= 0.5;
    s3 *= 0.5;
    const double scale = std::max({1.0, std::abs(s1), std::abs(s2), std::abs(s3)});
    if (std::abs(s1 - s2) > kSumAgreeTol * scale ||
        std::abs(s1 - s3) > kSumAgreeTol * scale)
        throw NumericalInconsistency("mgwyd_i spectral sums disagree: " +
                                     std::to_string(s1) + ", " + std::to_string(s2) +
                                     ", " + std::to_string(s3));
    return s1;
}

Cplx j_trace(const DensityOperator& rho, const HSOperator& a, const Powers& pw) {
    const HSOperator a0 = center(rho, a);
    const CMatrix xa = anticommutator(pw.a, a0.matrix().adjoint());
    const CMatrix xb = anticommutator(pw.b, a0.matrix());
    return 0.5 * (xa * xb * pw.comp).trace();
}

double j_spectral(const DensityOperator& rho, const HSOperator& a, const SkewParams& p) {
    const SpectralData sa(rho, a);
    const double al = p.alpha(), be = p.beta(), s = p.one_minus_sum();
    const auto d = sa.lam.size();
    double acc = 0.0;
    for (Eigen::Index m = 0; m < d; ++m) {
        for (Eigen::Index n = 0; n < d; ++n) {
            acc += lp(sa.lam[m], al) * (lp(sa.lam[m], be) + lp(sa.lam[n], be)) *
                   (lp(sa.lam[m], s) * std::norm(sa.centered(n, m)) +
                    lp(sa.lam[n], s) * std::norm(sa.centered(m, n)));
        }
    }
    return 0.5 * acc;
}

/// K and L differ from I and J only in the commutator-vs-anticommutator sign
/// that survives squaring the weighted mean (rho^a + rho^b)/2.
Cplx k_trace_checked(const DensityOperator& rho, const HSOperator& a,
                     const Powers& pw) {
    const HSOperator a0 = center(rho, a);
    const CMatrix mean = 0.5 * (pw.a + pw.b);
    const CMatrix cl = commutator(mean, a0.matrix().adjoint());
    const CMatrix cr = commutator(mean, a0.matrix());
    const Cplx k = -0.5 * (cl * cr * pw.comp).trace();

    // Decomposition through the pure-alpha and pure-beta commutators.
    const CMatrix caa = commutator(pw.a, a0.matrix().adjoint()) *
                        commutator(pw.a, a0.matrix()) * pw.comp;
    const CMatrix cbb = commutator(pw.b, a0.matrix().adjoint()) *
                        commutator(pw.b, a0.matrix()) * pw.comp;
    const Cplx decomposed =
        -0.125 * (caa.trace() + cbb.trace()) + 0.5 * i_trace(a, pw);
    if (std::abs(k - decomposed) > kKDecompTol * std::max(1.0, std::abs(k)))
        throw NumericalInconsistency("mwgwyd_k decomposition identity violated: " +
                                     std::to_string(k.real()) + " vs " +
                                     std::to_string(decomposed.real()));
    return k;
}

double k_spectral(const DensityOperator& rho, const HSOperator& a, const SkewParams& p) {
    const SpectralData sa(rho, a);
    const double al = p.alpha(), be = p.beta(), s = p.one_minus_sum();
    const auto d = sa.lam.size();
    double quad = 0.0, cross = 0.0;
    for (Eigen::Index m = 0; m < d; ++m) {
        for (Eigen::Index n = 0; n < d; ++n) {
            const double da = lp(sa.lam[m], al) - lp(sa.lam[n], al);
            const double db = lp(sa.lam[m], be) - lp(sa.lam[n], be);
            const double w = lp(sa.lam[n], s) * std::norm(sa.centered(m, n));
            quad += (da * da + db * db) * w;
            cross += da * db * w;
        }
    }
    return 0.125 * quad + 0.25 * cross;
}

Cplx l_trace(const DensityOperator& rho, const HSOperator& a, const Powers& pw) {
    const HSOperator a0 = center(rho, a);
    const CMatrix mean = 0.5 * (pw.a + pw.b);
    const CMatrix xl = anticommutator(mean, a0.matrix().adjoint());
    const CMatrix xr = anticommutator(mean, a0.matrix());
    return 0.5 * (xl * xr * pw.comp).trace();
}

double l_spectral(const DensityOperator& rho, const HSOperator& a, const SkewParams& p) {
    const SpectralData sa(rho, a);
    const double al = p.alpha(), be = p.beta(), s = p.one_minus_sum();
    const auto d = sa.lam.size();
    double quad = 0.0, cross = 0.0;
    for (Eigen::Index m = 0; m < d; ++m) {
        for (Eigen::Index n = 0; n < d; ++n) {
            const double pa = lp(sa.lam[m], al) + lp(sa.lam[n], al);
            const double pb = lp(sa.lam[m], be) + lp(sa.lam[n], be);
            const double w = lp(sa.lam[n], s) * std::norm(sa.centered(m, n));
            quad += (pa * pa + pb * pb) * w;
            cross += pa * pb * w;
        }
    }
    return 0.125 * quad + 0.25 * cross;
}

} // namespace

QuantityResult covariance(const DensityOperator& rho, const HSOperator& a,
                          const HSOperator& b, const SkewParams& params, EvalPath path) {
    require_same_dim(rho, a);
    require_same_dim(a, b);
    const Cplx v = path == EvalPath::TraceFormula ? cov_trace(rho, a, b, params)
                                                  : cov_spectral(rho, a, b, params);
    return make_complex(v, path);
}

QuantityResult variance(const DensityOperator& rho, const HSOperator& a,
                        const SkewParams& params, EvalPath path) {
    require_same_dim(rho, a);
    const Cplx v = path == EvalPath::TraceFormula ? cov_trace(rho, a, a, params)
                                                  : cov_spectral(rho, a, a, params);
    return make_real_nonneg(v, path, "variance");
}

QuantityResult correlation(const DensityOperator& rho, const HSOperator& a,
                           const HSOperator& b, const SkewParams& params, EvalPath path) {
    require_same_dim(rho, a);
    require_same_dim(a, b);
    const Cplx v = path == EvalPath::TraceFormula ? corr_trace(rho, a, b, params)
                                                  : corr_spectral(rho, a, b, params);
    return make_complex(v, path);
}

QuantityResult c_quantity(const DensityOperator& rho, const HSOperator& a,
                          const HSOperator& b, const SkewParams& params, EvalPath path) {
    require_same_dim(rho, a);
    require_same_dim(a, b);
    const Cplx v = path == EvalPath::TraceFormula ? c_trace(rho, a, b, params)
                                                  : c_spectral(rho, a, b, params);
    return make_complex(v, path);
}

QuantityResult c_self(const DensityOperator& rho, const HSOperator& a,
                      const SkewParams& params, EvalPath path) {
    require_same_dim(rho, a);
    const Cplx v = path == EvalPath::TraceFormula ? c_trace(rho, a, a, params)
                                                  : c_spectral(rho, a, a, params);
    return make_real_nonneg(v, path, "c_self");
}

QuantityResult mgwyd_i(const DensityOperator& rho, const HSOperator& a,
                       const SkewParams& params, EvalPath path) {
    require_same_dim(rho, a);
    if (path == EvalPath::SpectralSum)
        return make_real_nonneg(i_spectral(rho, a, params), path, "mgwyd_i");
    const Powers pw(rho, params);
    return make_real_nonneg(i_trace(a, pw), path, "mgwyd_i");
}

QuantityResult companion_j(const DensityOperator& rho, const HSOperator& a,
                           const SkewParams& params, EvalPath path) {
    require_same_dim(rho, a);
    if (path == EvalPath::SpectralSum)
        return make_real_nonneg(j_spectral(rho, a, params), path, "companion_j");
    const Powers pw(rho, params);
    return make_real_nonneg(j_trace(rho, a, pw), path, "companion_j");
}

QuantityResult u_quantity(const DensityOperator& rho, const HSOperator& a,
                          const SkewParams& params, EvalPath path) {
    const double iv = mgwyd_i(rho, a, params, path).real();
    const double jv = companion_j(rho, a, params, path).real();
    const double vv = variance(rho, a, params, path).real();

    double prod = iv * jv;
    double via_var = vv * vv - (vv - iv) * (vv - iv);
    // Agreement is asserted on the radicands: near zero both roots are
    // sqrt-amplified round-off and their ratio is meaningless.
    if (std::abs(prod - via_var) >
        kURouteRelTol * std::max(std::abs(prod), std::abs(via_var)) + kURouteAbsTol)
        throw NumericalInconsistency("u_quantity routes disagree: I*J = " +
                                     std::to_string(prod) + ", variance route = " +
                                     std::to_string(via_var));
    for (double* radicand : {&prod, &via_var}) {
        if (*radicand < -kNegClamp)
            throw NumericalInconsistency("u_quantity radicand " +
                                         std::to_string(*radicand) + " is negative");
        *radicand = clamp_nonneg(*radicand);
    }
    return {Cplx(std::sqrt(prod), 0.0), path, 0.0};
}

QuantityResult mwgwyd_k(const DensityOperator& rho, const HSOperator& a,
                        const SkewParams& params, EvalPath path) {
    require_same_dim(rho, a);
    if (path == EvalPath::SpectralSum)
        return make_real_nonneg(k_spectral(rho, a, params), path, "mwgwyd_k");
    const Powers pw(rho, params);
    return make_real_nonneg(k_trace_checked(rho, a, pw), path, "mwgwyd_k");
}

QuantityResult companion_l(const DensityOperator& rho, const HSOperator& a,
                           const SkewParams& params, EvalPath path) {
    require_same_dim(rho, a);
    if (path == EvalPath::SpectralSum)
        return make_real_nonneg(l_spectral(rho, a, params), path, "companion_l");
    const Powers pw(rho, params);
    return make_real_nonneg(l_trace(rho, a, pw), path, "companion_l");
}

QuantityResult w_quantity(const DensityOperator& rho, const HSOperator& a,
                          const SkewParams& params, EvalPath path) {
    const double kv = mwgwyd_k(rho, a, params, path).real();
    const double lv = companion_l(rho, a, params, path).real();
    // mwgwyd_k / companion_l already reject values below -1e-10.
    return {Cplx(std::sqrt(clamp_nonneg(kv) * clamp_nonneg(lv)), 0.0), path, 0.0};
}

} // namespace skewlab
