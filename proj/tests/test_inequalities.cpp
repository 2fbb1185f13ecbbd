#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "skewlab/inequalities.hpp"
#include "skewlab/rng.hpp"
#include "skewlab/states.hpp"

using namespace skewlab;

TEST_CASE("lemma checks are exact at coinciding arguments") {
    const SkewParams p(0.4, 0.3);
    for (auto* check : {&check_lemma1_product, &check_lemma1_quadratic}) {
        const CheckResult r = (*check)(0.3, 0.3, p, {});
        CHECK(r.lhs == 0.0);
        CHECK(r.slack == 0.0);
        CHECK(r.holds);
    }
    const CheckResult r = check_lemma2(0.3, 0.3, SkewParams(0.2, 0.6), {});
    // lhs squares a ~1e-17 cancellation residual, so allow 1e-30 dust.
    CHECK(std::abs(r.slack) <= 1e-30);
    CHECK(r.holds);
}

TEST_CASE("lemma equality cases at the domain corners") {
    const CheckResult p = check_lemma1_product(1.0, 0.0, SkewParams(0.5, 0.5), {});
    CHECK(p.lhs == doctest::Approx(1.0));
    CHECK(p.rhs == doctest::Approx(1.0));
    CHECK(p.holds);

    const CheckResult q = check_lemma1_quadratic(1.0, 0.0, SkewParams(0.5, 0.5), {});
    CHECK(q.lhs == doctest::Approx(1.0));
    CHECK(q.rhs == doctest::Approx(1.0));
    CHECK(q.holds);

    const CheckResult l2 = check_lemma2(1.0, 0.0, SkewParams(0.2, 0.6), {});
    CHECK(l2.lhs == doctest::Approx(1.0));
    CHECK(l2.rhs == doctest::Approx(1.0));
    CHECK(l2.holds);
}

TEST_CASE("lemma domain gates") {
    CHECK_THROWS_AS(check_lemma1_product(0.5, 0.2, SkewParams(0.2, 0.5), {}),
                    ParamsOutsideLemmaDomain);
    CHECK_THROWS_AS(check_lemma1_quadratic(0.5, 0.2, SkewParams(0.3, 0.8 - 0.3), {}),
                    ParamsOutsideLemmaDomain);
    CHECK_THROWS_AS(check_lemma2(0.5, 0.2, SkewParams(0.1, 0.5), {}),
                    ParamsOutsideLemmaDomain);
    CHECK_THROWS_AS(check_lemma1_product(-0.1, 0.2, SkewParams(0.4, 0.2), {}),
                    InvalidParams);
}

TEST_CASE("the quadratic lemma holds across its domain on the unit interval") {
    SplitMix64 rng(314159);
    double worst = 1.0;
    for (int i = 0; i < 10000; ++i) {
        const double x = rng.uniform(), y = rng.uniform();
        const double a = rng.uniform();
        const double b = rng.uniform() * std::min(a, 1.0 - a);
        const CheckResult r = check_lemma1_quadratic(x, y, SkewParams(a, b), {0.0, 1e-12});
        CHECK(r.holds);
        worst = std::min(worst, r.slack);
    }
    CHECK(worst >= -1e-12);
}

TEST_CASE("the product and third scalar bounds fail on documented counterexamples") {
    // These two inequalities are not true on their stated domains; the checks
    // must measure that honestly rather than mask it.
    const CheckResult p = check_lemma1_product(0.5, 0.0, SkewParams(0.25, 0.25), {});
    CHECK_FALSE(p.holds);
    CHECK(p.lhs == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
    CHECK(p.rhs == doctest::Approx(0.5));
    CHECK(p.slack == doctest::Approx(0.5 - std::sqrt(0.5)).epsilon(1e-12));

    const CheckResult l2 = check_lemma2(1.0, 0.001, SkewParams(0.2, 0.6), {});
    CHECK_FALSE(l2.holds);
    CHECK(l2.slack < -0.01);
}

TEST_CASE("CheckResult invariant: holds iff slack >= -tol") {
    SplitMix64 rng(555);
    for (int i = 0; i < 300; ++i) {
        const double x = rng.uniform(), y = rng.uniform();
        const double a = rng.uniform();
        const double b = rng.uniform() * std::min(a, 1.0 - a);
        const CheckResult r = check_lemma1_product(x, y, SkewParams(a, b), {});
        CHECK(r.holds == (r.slack >= -r.tol));
        CHECK(std::isfinite(r.lhs));
        CHECK(std::isfinite(r.rhs));
    }
}

TEST_CASE("input digests are deterministic and input-sensitive") {
    const SkewParams p(0.4, 0.2);
    const CheckResult a = check_lemma1_product(0.3, 0.7, p, {});
    const CheckResult b = check_lemma1_product(0.3, 0.7, p, {});
    const CheckResult c = check_lemma1_product(0.3, 0.7000001, p, {});
    CHECK(a.inputs_digest == b.inputs_digest);
    CHECK(a.inputs_digest != c.inputs_digest);
}

TEST_CASE("theorem checks vanish identically at the maximally mixed point") {
    const auto [a, b] = sweep_operators();
    for (const DensityOperator& rho : {werner(0.75), isotropic(0.25)}) {
        const CheckResult t1 = check_theorem1(rho, a, b, SkewParams(0.55, 0.4), {});
        CHECK(std::abs(t1.lhs) <= 1e-10);
        CHECK(std::abs(t1.rhs) <= 1e-10);
        CHECK(t1.holds);
        const CheckResult t2 = check_theorem2(rho, a, b, SkewParams(0.75, 0.2), {});
        CHECK(std::abs(t2.lhs) <= 1e-10);
        CHECK(std::abs(t2.rhs) <= 1e-10);
        CHECK(t2.holds);
    }
}

TEST_CASE("theorem checks hold on random draws at the pinned exponents") {
    for (std::uint64_t i = 0; i < 60; ++i) {
        SplitMix64 rng = SplitMix64::stream(8080, i);
        const int d = 2 + static_cast<int>(i % 5);
        const DensityOperator rho = random_density(d, d, rng.next());
        const HSOperator a = random_operator(d, rng.next());
        const HSOperator b = random_operator(d, rng.next());

        const CheckResult t1 = check_theorem1(rho, a, b, SkewParams(0.55, 0.4), {0, 1e-9});
        CHECK(t1.holds);
        const CheckResult t2 = check_theorem2(rho, a, b, SkewParams(0.75, 0.2), {0, 1e-9});
        CHECK(t2.holds);

        const CheckResult c1 = check_corollary1(rho, a, b, SkewParams(0.55, 0.4), {0, 1e-9});
        CHECK(c1.holds);
        CHECK(c1.lhs >= t1.lhs - 1e-10);
        const CheckResult c2 = check_corollary2(rho, a, b, SkewParams(0.75, 0.2), {0, 1e-9});
        CHECK(c2.holds);
        CHECK(c2.lhs >= t2.lhs - 1e-10);
    }
}

TEST_CASE("theorem checks enforce their hypotheses") {
    const auto [a, b] = sweep_operators();
    const DensityOperator rho = werner(0.3);
    CHECK_THROWS_AS(check_theorem1(rho, a, b, SkewParams(0.2, 0.5), {}),
                    ParamsOutsideTheoremDomain);
    CHECK_THROWS_AS(check_theorem2(rho, a, b, SkewParams(0.1, 0.5), {}),
                    ParamsOutsideTheoremDomain);
    CHECK_THROWS_AS(check_corollary1(rho, a, b, SkewParams(0.2, 0.5), {}),
                    ParamsOutsideTheoremDomain);
}

TEST_CASE("theorem sides are symmetric under operator exchange") {
    SplitMix64 rng(99);
    const DensityOperator rho = random_density(4, 4, rng.next());
    const HSOperator a = random_operator(4, rng.next());
    const HSOperator b = random_operator(4, rng.next());
    const SkewParams p(0.55, 0.4);
    const CheckResult ab = check_theorem1(rho, a, b, p, {});
    const CheckResult ba = check_theorem1(rho, b, a, p, {});
    CHECK(std::abs(ab.lhs - ba.lhs) <= 1e-10);
    CHECK(std::abs(ab.rhs - ba.rhs) <= 1e-9 * std::max(1.0, std::abs(ab.rhs)));
}

TEST_CASE("compare_bounds reports the arithmetically tighter coefficient") {
    CHECK(compare_bounds(SkewParams(0.25, 0.25)) == BoundComparison::Equal);
    CHECK(compare_bounds(SkewParams(0.5, 0.5)) == BoundComparison::Theorem1Tighter);
    CHECK(compare_bounds(SkewParams(0.2, 0.2)) == BoundComparison::Theorem2Tighter);
    // Only the second hypothesis admits beta in (alpha, 4 alpha].
    CHECK(compare_bounds(SkewParams(0.1, 0.3)) == BoundComparison::DomainsDisjoint);
    // Neither hypothesis admits beta > 1 - alpha or beta > 4 alpha.
    CHECK(compare_bounds(SkewParams(0.05, 0.9)) == BoundComparison::DomainsDisjoint);
}

TEST_CASE("tolerance bound combines relative and absolute floors") {
    const Tolerance t{1e-9, 1e-12};
    CHECK(t.bound(0.0, 0.0) == 1e-12);
    CHECK(t.bound(2.0, 1.0) == doctest::Approx(2e-9));
    CHECK(t.bound(-3.0, 1.0) == doctest::Approx(3e-9));
}
