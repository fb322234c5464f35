#include <doctest.h>

#include <cmath>
#include <functional>
#include <limits>

#include "rejectlab/distributions.hpp"
#include "rejectlab/experiments.hpp"
#include "rejectlab/rng.hpp"

using namespace rejectlab;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Composite Simpson quadrature, the independent integration oracle for the
// Gaussian masses.
double simpson(double lo, double hi, int panels, const std::function<double(double)>& f) {
    const double h = (hi - lo) / panels;
    double acc = f(lo) + f(hi);
    for (int k = 1; k < panels; ++k)
        acc += f(lo + k * h) * (k % 2 ? 4.0 : 2.0);
    return acc * h / 3.0;
}

} // namespace

TEST_CASE("class priors validate") {
    CHECK_THROWS_AS(ClassPrior(0.6, 0.6), ConstraintViolation);
    CHECK_THROWS_AS(ClassPrior(1.0, 0.0), ConstraintViolation);
    CHECK_NOTHROW(ClassPrior(2.0 / 3.0, 1.0 / 3.0));
}

TEST_CASE("uniform overlap case classification") {
    const ClassPrior half(0.5, 0.5);
    CHECK(UniformClassModel(half, 0.0, 1.0, 0.5, 2.5).overlap_case ==
          UniformOverlap::PartialOverlap);
    CHECK(UniformClassModel(half, 0.0, 4.0, 1.0, 2.0).overlap_case ==
          UniformOverlap::FullOverlapByClass1);
    CHECK(UniformClassModel(half, 0.0, 1.0, 2.0, 3.0).overlap_case == UniformOverlap::Separated);
    CHECK(UniformClassModel(half, 2.0, 3.0, 0.0, 1.0).overlap_case == UniformOverlap::Separated);
    // class 2 reaching left of class 1 while overlapping is not representable
    CHECK_THROWS_AS(UniformClassModel(half, 0.5, 2.5, 0.0, 1.0), ConstraintViolation);
    CHECK_THROWS_AS(UniformClassModel(half, 1.0, 0.0, 0.0, 1.0), ConstraintViolation);
}

TEST_CASE("posterior at the symmetric midpoint") {
    const ClassModel m{GaussianClassModel(ClassPrior(0.5, 0.5), -1.0, 1.0, 1.0, 1.0)};
    const Posterior p = posterior(m, 0.0);
    CHECK(p.pt1_given_x == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(p.pt2_given_x == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("posterior of the uniform overlap region") {
    const ClassModel m{example4_model()};
    // density 1 vs 1/2 at equal priors: (2/3, 1/3) on the overlap
    const Posterior p = posterior(m, 0.75);
    CHECK(p.pt1_given_x == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(p.pt2_given_x == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    // below the class-2 support the first branch applies
    const Posterior lo = posterior(m, 0.25);
    CHECK(lo.pt1_given_x == 1.0);
    CHECK(lo.pt2_given_x == 0.0);
    CHECK_THROWS_AS(posterior(m, 3.0), ZeroMixtureDensity);
    CHECK_THROWS_AS(posterior(m, -1.0), ZeroMixtureDensity);
}

TEST_CASE("likelihood ratio values") {
    const ClassModel symmetric{GaussianClassModel(ClassPrior(0.5, 0.5), -1.0, 1.0, 1.0, 1.0)};
    CHECK(likelihood_ratio(symmetric, 0.0) == doctest::Approx(1.0).epsilon(1e-12));

    // prior ratio 2 crossover sits near 0.347, so the ratio there is 1
    const ClassModel ratio2{example2_model(2.0)};
    CHECK(likelihood_ratio(ratio2, 0.347) == doctest::Approx(1.0).epsilon(1e-2));

    // hand-expanded densities: 0.8 * N(0;0,2) / (0.2 * N(0;0,1)) = (0.8/2) / 0.2
    const ClassModel ex3{example3_model()};
    CHECK(likelihood_ratio(ex3, 0.0) == doctest::Approx(2.0).epsilon(1e-12));

    const ClassModel u{example4_model()};
    CHECK(likelihood_ratio(u, 0.25) == kInf);
    CHECK(likelihood_ratio(u, 2.0) == 0.0);
    CHECK_THROWS_AS(likelihood_ratio(u, 5.0), ZeroMixtureDensity);
}

TEST_CASE("class mass closed forms") {
    const ClassModel g{example1_model()};
    CHECK(class_mass(g, 1, -kInf, kInf) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(class_mass(g, 2, -kInf, kInf) == doctest::Approx(0.5).epsilon(1e-12));

    // class-1 mass inside the zero-one Bayes middle region, plus the class-2
    // mass outside it, reproduces the no-reject errors of the first scenario
    const double e1 = class_mass(g, 1, -0.238, 3.571);
    const double e2 = class_mass(g, 2, -kInf, -0.238) + class_mass(g, 2, 3.571, kInf);
    CHECK(e1 == doctest::Approx(0.170).epsilon(2e-3));
    CHECK(e2 == doctest::Approx(0.057).epsilon(2e-2));

    const ClassModel u{example4_model()};
    CHECK(class_mass(u, 2, 0.5, 1.0) == doctest::Approx(0.125).epsilon(1e-15)); // 0.5 * 0.5/2
    CHECK(class_mass(u, 1, -10.0, 10.0) == 0.5);
    CHECK(class_mass(u, 1, -kInf, kInf) == 0.5); // exact, not approximate
    CHECK(class_mass(u, 2, -kInf, kInf) == 0.5);
    CHECK_THROWS_AS(class_mass(u, 1, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("gaussian densities integrate to one (quadrature oracle)") {
    const GaussianClassModel g = example1_model();
    const ClassModel m{g};
    for (int cls : {1, 2}) {
        const double mu = cls == 1 ? g.mu1 : g.mu2;
        const double sigma = cls == 1 ? g.sigma1 : g.sigma2;
        const double total = simpson(mu - 10 * sigma, mu + 10 * sigma, 4000,
                                     [&](double x) { return class_density(m, cls, x); });
        CHECK(total == doctest::Approx(1.0).epsilon(1e-6));
        // and the mass seen through erf agrees with quadrature on a window
        const double viaerf = class_mass(m, cls, mu - sigma, mu + 2 * sigma);
        const double viaquad = prior_of(m).p1 * simpson(mu - sigma, mu + 2 * sigma, 4000,
                                                        [&](double x) {
                                                            return class_density(m, cls, x);
                                                        });
        CHECK(viaerf == doctest::Approx(viaquad).epsilon(1e-9));
    }
}

TEST_CASE("posterior components sum to one across the support") {
    const ClassModel g{example3_model()};
    for (double x = -8.0; x <= 8.0; x += 0.0625) {
        const Posterior p = posterior(g, x);
        CHECK(std::fabs(p.pt1_given_x + p.pt2_given_x - 1.0) <= 1e-12);
    }
    const ClassModel u{example4_model()};
    for (double x = 0.01; x <= 2.49; x += 0.01) {
        const Posterior p = posterior(u, x);
        CHECK(std::fabs(p.pt1_given_x + p.pt2_given_x - 1.0) <= 1e-12);
    }
}

TEST_CASE("likelihood ratio equals the posterior ratio") {
    const ClassModel g{example1_model()};
    for (double x = -6.0; x <= 6.0; x += 0.25) {
        const Posterior p = posterior(g, x);
        if (p.pt1_given_x <= 0.0 || p.pt2_given_x <= 0.0)
            continue;
        const double lr = likelihood_ratio(g, x);
        const double ratio = p.pt1_given_x / p.pt2_given_x;
        CHECK(std::fabs(lr - ratio) <= 1e-10 * std::max(1.0, std::fabs(ratio)));
    }
}

TEST_CASE("equal sigmas give a strictly monotone likelihood ratio") {
    const ClassModel g{example2_model(4.0)};
    double prev = likelihood_ratio(g, -6.0);
    for (double x = -5.75; x <= 6.0; x += 0.25) {
        const double cur = likelihood_ratio(g, x);
        CHECK(cur < prev); // mu1 < mu2: decreasing in x
        prev = cur;
    }
}

TEST_CASE("class mass is additive over adjacent intervals") {
    const ClassModel g{example1_model()};
    const ClassModel u{example4_model()};
    for (int k = 0; k < 200; ++k) {
        const double a = -6.0 + 12.0 * uniform_open(splitmix64_at(7, 3 * k));
        const double b = a + 8.0 * uniform_open(splitmix64_at(7, 3 * k + 1));
        const double mid = a + (b - a) * uniform_open(splitmix64_at(7, 3 * k + 2));
        for (const ClassModel* m : {&g, &u}) {
            for (int cls : {1, 2}) {
                const double whole = class_mass(*m, cls, a, b);
                const double split =
                    class_mass(*m, cls, a, mid) + class_mass(*m, cls, mid, b);
                CHECK(std::fabs(whole - split) <= 1e-12);
            }
        }
    }
}

TEST_CASE("support components") {
    const auto gaussian = support_components(ClassModel{example1_model()});
    REQUIRE(gaussian.size() == 1);
    CHECK(gaussian[0].lo == -kInf);
    CHECK(gaussian[0].hi == kInf);

    const auto partial = support_components(ClassModel{example4_model()});
    REQUIRE(partial.size() == 1);
    CHECK(partial[0].lo == 0.0);
    CHECK(partial[0].hi == 2.5);

    const auto split = support_components(
        ClassModel{UniformClassModel(ClassPrior(0.5, 0.5), 0.0, 1.0, 2.0, 3.0)});
    REQUIRE(split.size() == 2);
    CHECK(split[0].hi == 1.0);
    CHECK(split[1].lo == 2.0);
}
