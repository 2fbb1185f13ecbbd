#include "skewlab/inequalities.hpp"

#include <bit>
#include <cmath>

namespace skewlab {
namespace {

constexpr double kDomainSlop = 1e-12;
constexpr double kDominationTol = 1e-10;

double spow(double x, double t) {
    if (t == 0.0)
        return 1.0;
    if (x <= 0.0)
        return 0.0;
    return std::pow(x, t);
}

void require_scalar_args(double x, double y) {
    if (!(x >= 0.0) || !(y >= 0.0))
        throw InvalidParams("lemma arguments must be nonnegative");
}

std::uint64_t scalar_digest(double x, double y, const SkewParams& p) {
    return Digest().add(x).add(y).add(p.alpha()).add(p.beta()).value();
}

std::uint64_t operator_digest(const DensityOperator& rho, const HSOperator& a,
                              const HSOperator& b, const SkewParams& p) {
    return Digest()
        .add(static_cast<std::uint64_t>(rho.dim()))
        .add(rho.matrix())
        .add(a.matrix())
        .add(b.matrix())
        .add(p.alpha())
        .add(p.beta())
        .value();
}

struct TheoremSides {
    double u_product; // U(A) * U(B)
    double w_product; // W(A) * W(B)
    double corr_sq;   // |Corr(A,B)|^2
};

TheoremSides theorem_sides(const DensityOperator& rho, const HSOperator& a,
                           const HSOperator& b, const SkewParams& p, EvalPath path,
                           bool with_w) {
    TheoremSides out{};
    out.u_product = u_quantity(rho, a, p, path).real() * u_quantity(rho, b, p, path).real();
    if (with_w)
        out.w_product =
            w_quantity(rho, a, p, path).real() * w_quantity(rho, b, p, path).real();
    out.corr_sq = std::norm(correlation(rho, a, b, p, path).value);
    return out;
}

CheckResult corollary_check(const char* name, bool domain, const DensityOperator& rho,
                            const HSOperator& a, const HSOperator& b,
                            const SkewParams& p, const Tolerance& tol, EvalPath path,
                            double coefficient) {
    if (!domain)
        throw ParamsOutsideTheoremDomain(std::string(name) +
                                         ": exponents violate the hypothesis");
    const TheoremSides sides = theorem_sides(rho, a, b, p, path, true);
    if (sides.w_product < sides.u_product - kDominationTol)
        throw NumericalInconsistency(std::string(name) + ": W product " +
                                     std::to_string(sides.w_product) +
                                     " fell below U product " +
                                     std::to_string(sides.u_product));
    return make_check(name, Relation::GreaterEqual, sides.w_product,
                      coefficient * sides.corr_sq,
                      tol.bound(sides.w_product, coefficient * sides.corr_sq),
                      operator_digest(rho, a, b, p));
}

} // namespace

CheckResult make_check(std::string name, Relation relation, double lhs, double rhs,
                       double tol, std::uint64_t digest) {
    if (!std::isfinite(lhs) || !std::isfinite(rhs))
        throw NumericalInconsistency("check '" + name + "' produced non-finite sides");
    CheckResult out;
    out.name = std::move(name);
    out.relation = relation;
    out.lhs = lhs;
    out.rhs = rhs;
    switch (relation) {
    case Relation::GreaterEqual: out.slack = lhs - rhs; break;
    case Relation::LessEqual: out.slack = rhs - lhs; break;
    case Relation::Equal: out.slack = -std::abs(lhs - rhs); break;
    }
    out.tol = tol;
    out.holds = out.slack >= -tol;
    out.inputs_digest = digest;
    return out;
}

const char* relation_label(Relation r) {
    switch (r) {
    case Relation::GreaterEqual: return "lhs>=rhs";
    case Relation::LessEqual: return "lhs<=rhs";
    case Relation::Equal: return "lhs==rhs";
    }
    return "?";
}

Digest& Digest::add(double v) {
    return add(std::bit_cast<std::uint64_t>(v));
}

Digest& Digest::add(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
        state_ ^= (v >> (8 * i)) & 0xffULL;
        state_ *= 0x100000001b3ULL;
    }
    return *this;
}

Digest& Digest::add(const CMatrix& m) {
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            add(m(r, c).real());
            add(m(r, c).imag());
        }
    return *this;
}

bool lemma1_in_domain(const SkewParams& p) {
    return p.beta() <= std::min(p.alpha(), 1.0 - p.alpha()) + kDomainSlop;
}

bool lemma2_in_domain(const SkewParams& p) {
    return p.beta() <= std::min(4.0 * p.alpha(), 1.0 - p.alpha()) + kDomainSlop;
}

CheckResult check_lemma1_product(double x, double y, const SkewParams& p,
                                 const Tolerance& tol) {
    require_scalar_args(x, y);
    if (!lemma1_in_domain(p))
        throw ParamsOutsideLemmaDomain("lemma1 requires beta <= min{alpha, 1-alpha}");
    const double a = p.alpha(), b = p.beta();
    const double lhs = (spow(x, a) + spow(y, a)) * std::abs(spow(x, b) - spow(y, b));
    const double rhs = std::abs(x - y);
    return make_check("lemma1_product", Relation::LessEqual, lhs, rhs,
                      tol.bound(lhs, rhs), scalar_digest(x, y, p));
}

CheckResult check_lemma1_quadratic(double x, double y, const SkewParams& p,
                                   const Tolerance& tol) {
    require_scalar_args(x, y);
    if (!lemma1_in_domain(p))
        throw ParamsOutsideLemmaDomain("lemma1 requires beta <= min{alpha, 1-alpha}");
    const double a = p.alpha(), b = p.beta();
    const double lhs = 4.0 * a * b * (x - y) * (x - y);
    const double rhs =
        (spow(x, 2 * a) - spow(y, 2 * a)) * (spow(x, 2 * b) - spow(y, 2 * b));
    return make_check("lemma1_quadratic", Relation::LessEqual, lhs, rhs,
                      tol.bound(lhs, rhs), scalar_digest(x, y, p));
}

CheckResult check_lemma2(double x, double y, const SkewParams& p, const Tolerance& tol) {
    require_scalar_args(x, y);
    if (!lemma2_in_domain(p))
        throw ParamsOutsideLemmaDomain("lemma2 requires beta <= min{4 alpha, 1-alpha}");
    const double a = p.alpha(), b = p.beta();
    const double diff = spow(x, a + b) - spow(x, a) * spow(y, b);
    const double lhs = diff * diff;
    const double rhs =
        (spow(x, 2 * a) - spow(y, 2 * a)) * (spow(x, 2 * b) - spow(y, 2 * b));
    return make_check("lemma2", Relation::LessEqual, lhs, rhs, tol.bound(lhs, rhs),
                      scalar_digest(x, y, p));
}

bool theorem1_in_domain(const SkewParams& p) { return lemma1_in_domain(p); }
bool theorem2_in_domain(const SkewParams& p) { return lemma2_in_domain(p); }

CheckResult check_theorem1(const DensityOperator& rho, const HSOperator& a,
                           const HSOperator& b, const SkewParams& p,
                           const Tolerance& tol, EvalPath path) {
    if (!theorem1_in_domain(p))
        throw ParamsOutsideTheoremDomain(
            "theorem1 requires beta <= min{alpha, 1-alpha}");
    const TheoremSides sides = theorem_sides(rho, a, b, p, path, false);
    const double rhs = 4.0 * p.alpha() * p.beta() * sides.corr_sq;
    return make_check("theorem1", Relation::GreaterEqual, sides.u_product, rhs,
                      tol.bound(sides.u_product, rhs), operator_digest(rho, a, b, p));
}

CheckResult check_theorem2(const DensityOperator& rho, const HSOperator& a,
                           const HSOperator& b, const SkewParams& p,
                           const Tolerance& tol, EvalPath path) {
    if (!theorem2_in_domain(p))
        throw ParamsOutsideTheoremDomain(
            "theorem2 requires beta <= min{4 alpha, 1-alpha}");
    const TheoremSides sides = theorem_sides(rho, a, b, p, path, false);
    const double rhs = 0.25 * sides.corr_sq;
    return make_check("theorem2", Relation::GreaterEqual, sides.u_product, rhs,
                      tol.bound(sides.u_product, rhs), operator_digest(rho, a, b, p));
}

CheckResult check_corollary1(const DensityOperator& rho, const HSOperator& a,
                             const HSOperator& b, const SkewParams& p,
                             const Tolerance& tol, EvalPath path) {
    return corollary_check("corollary1", theorem1_in_domain(p), rho, a, b, p, tol,
                           path, 4.0 * p.alpha() * p.beta());
}

CheckResult check_corollary2(const DensityOperator& rho, const HSOperator& a,
                             const HSOperator& b, const SkewParams& p,
                             const Tolerance& tol, EvalPath path) {
    return corollary_check("corollary2", theorem2_in_domain(p), rho, a, b, p, tol,
                           path, 0.25);
}

BoundComparison compare_bounds(const SkewParams& p) {
    if (!theorem1_in_domain(p) || !theorem2_in_domain(p))
        return BoundComparison::DomainsDisjoint;
    const double coeff = 4.0 * p.alpha() * p.beta();
    if (std::abs(coeff - 0.25) <= 1e-15)
        return BoundComparison::Equal;
    return coeff > 0.25 ? BoundComparison::Theorem1Tighter
                        : BoundComparison::Theorem2Tighter;
}

const char* bound_comparison_label(BoundComparison c) {
    switch (c) {
    case BoundComparison::Theorem1Tighter: return "Theorem1Tighter";
    case BoundComparison::Theorem2Tighter: return "Theorem2Tighter";
    case BoundComparison::Equal: return "Equal";
    case BoundComparison::DomainsDisjoint: return "DomainsDisjoint";
    }
    return "?";
}

} // namespace skewlab
