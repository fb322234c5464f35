#include "rejectlab/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace rejectlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const double kLogSqrt2Pi = 0.5 * std::log(2.0 * M_PI);

double log_normal_pdf(double x, double mu, double sigma) {
    const double z = (x - mu) / sigma;
    return -0.5 * z * z - std::log(sigma) - kLogSqrt2Pi;
}

// P(lo <= X <= hi) for X ~ N(mu, sigma) through the error function.
double normal_interval(double lo, double hi, double mu, double sigma) {
    const double inv = 1.0 / (sigma * M_SQRT2);
    const double zlo = std::isinf(lo) ? -kInf : (lo - mu) * inv;
    const double zhi = std::isinf(hi) ? kInf : (hi - mu) * inv;
    return 0.5 * (std::erf(zhi) - std::erf(zlo));
}

} // namespace

ClassPrior::ClassPrior(double p1_, double p2_) : p1(p1_), p2(p2_) {
    if (!(p1 > 0.0 && p1 < 1.0) || !(p2 > 0.0 && p2 < 1.0))
        throw ConstraintViolation("class priors must lie strictly inside (0, 1)");
    if (std::fabs(p1 + p2 - 1.0) > 1e-12)
        throw ConstraintViolation("class priors must sum to 1 (|p1 + p2 - 1| <= 1e-12)");
}

GaussianClassModel::GaussianClassModel(ClassPrior prior_, double mu1_, double sigma1_,
                                       double mu2_, double sigma2_)
    : prior(prior_), mu1(mu1_), sigma1(sigma1_), mu2(mu2_), sigma2(sigma2_) {
    if (!(sigma1 > 0.0) || !(sigma2 > 0.0))
        throw ConstraintViolation("Gaussian class model requires sigma1 > 0 and sigma2 > 0");
    if (!std::isfinite(mu1) || !std::isfinite(mu2) || !std::isfinite(sigma1) ||
        !std::isfinite(sigma2))
        throw ConstraintViolation("Gaussian class model requires finite parameters");
}

UniformClassModel::UniformClassModel(ClassPrior prior_, double a1_, double b1_, double a2_,
                                     double b2_)
    : prior(prior_), a1(a1_), b1(b1_), a2(a2_), b2(b2_), overlap_case(UniformOverlap::Separated) {
    if (!(a1 < b1) || !(a2 < b2))
        throw ConstraintViolation("uniform class model requires a1 < b1 and a2 < b2");
    if (b1 < a2 || b2 < a1) {
        overlap_case = UniformOverlap::Separated;
    } else if (a1 <= a2 && b2 <= b1) {
        overlap_case = UniformOverlap::FullOverlapByClass1;
    } else if (a1 <= a2 && a2 <= b1 && b1 <= b2) {
        overlap_case = UniformOverlap::PartialOverlap;
    } else {
        throw ConstraintViolation(
            "unsupported uniform support orientation: class 2 extends left of class 1; "
            "swap the class labels");
    }
}

double UniformClassModel::overlap_lo() const { return std::max(a1, a2); }

double UniformClassModel::overlap_hi() const { return std::min(b1, b2); }

double UniformClassModel::overlap_likelihood_ratio() const {
    return (prior.p1 / (b1 - a1)) / (prior.p2 / (b2 - a2));
}

double UniformClassModel::overlap_posterior1() const {
    const double w1 = prior.p1 / (b1 - a1);
    const double w2 = prior.p2 / (b2 - a2);
    return w1 / (w1 + w2);
}

const ClassPrior& prior_of(const ClassModel& model) {
    return std::visit([](const auto& m) -> const ClassPrior& { return m.prior; }, model);
}

double class_density(const ClassModel& model, int class_index, double x) {
    if (class_index != 1 && class_index != 2)
        throw std::invalid_argument("class_index must be 1 or 2");
    if (const auto* g = std::get_if<GaussianClassModel>(&model)) {
        const double mu = class_index == 1 ? g->mu1 : g->mu2;
        const double sigma = class_index == 1 ? g->sigma1 : g->sigma2;
        return std::exp(log_normal_pdf(x, mu, sigma));
    }
    const auto& u = std::get<UniformClassModel>(model);
    const double a = class_index == 1 ? u.a1 : u.a2;
    const double b = class_index == 1 ? u.b1 : u.b2;
    return (x >= a && x <= b) ? 1.0 / (b - a) : 0.0;
}

Posterior posterior(const ClassModel& model, double x) {
    if (const auto* g = std::get_if<GaussianClassModel>(&model)) {
        // Log-space logistic, evaluated from both sides so the smaller
        // component keeps full relative precision in the tails.
        const double l1 = std::log(g->prior.p1) + log_normal_pdf(x, g->mu1, g->sigma1);
        const double l2 = std::log(g->prior.p2) + log_normal_pdf(x, g->mu2, g->sigma2);
        return Posterior{1.0 / (1.0 + std::exp(l2 - l1)), 1.0 / (1.0 + std::exp(l1 - l2))};
    }
    const auto& u = std::get<UniformClassModel>(model);
    const double d1 = u.prior.p1 * class_density(model, 1, x);
    const double d2 = u.prior.p2 * class_density(model, 2, x);
    const double mix = d1 + d2;
    if (mix <= 0.0)
        throw ZeroMixtureDensity("mixture density is zero at x = " + std::to_string(x));
    return Posterior{d1 / mix, d2 / mix};
}

double likelihood_ratio(const ClassModel& model, double x) {
    if (const auto* g = std::get_if<GaussianClassModel>(&model)) {
        const double l1 = std::log(g->prior.p1) + log_normal_pdf(x, g->mu1, g->sigma1);
        const double l2 = std::log(g->prior.p2) + log_normal_pdf(x, g->mu2, g->sigma2);
        return std::exp(l1 - l2); // overflow to +inf is the intended tagged value
    }
    const auto& u = std::get<UniformClassModel>(model);
    const double d1 = u.prior.p1 * class_density(model, 1, x);
    const double d2 = u.prior.p2 * class_density(model, 2, x);
    if (d2 > 0.0)
        return d1 / d2;
    if (d1 > 0.0)
        return kInf;
    throw ZeroMixtureDensity("mixture density is zero at x = " + std::to_string(x));
}

double class_mass(const ClassModel& model, int class_index, double lo, double hi) {
    if (class_index != 1 && class_index != 2)
        throw std::invalid_argument("class_index must be 1 or 2");
    if (!(lo <= hi))
        throw std::invalid_argument("class_mass requires lo <= hi");
    if (const auto* g = std::get_if<GaussianClassModel>(&model)) {
        const double p = class_index == 1 ? g->prior.p1 : g->prior.p2;
        const double mu = class_index == 1 ? g->mu1 : g->mu2;
        const double sigma = class_index == 1 ? g->sigma1 : g->sigma2;
        return p * normal_interval(lo, hi, mu, sigma);
    }
    const auto& u = std::get<UniformClassModel>(model);
    const double p = class_index == 1 ? u.prior.p1 : u.prior.p2;
    const double a = class_index == 1 ? u.a1 : u.a2;
    const double b = class_index == 1 ? u.b1 : u.b2;
    const double cut_lo = std::max(lo, a);
    const double cut_hi = std::min(hi, b);
    if (cut_hi <= cut_lo)
        return 0.0;
    return p * (cut_hi - cut_lo) / (b - a);
}

std::vector<Interval> support_components(const ClassModel& model) {
    if (std::holds_alternative<GaussianClassModel>(model))
        return {Interval{-kInf, kInf}};
    const auto& u = std::get<UniformClassModel>(model);
    if (u.overlap_case == UniformOverlap::Separated) {
        if (u.b1 < u.a2)
            return {Interval{u.a1, u.b1}, Interval{u.a2, u.b2}};
        return {Interval{u.a2, u.b2}, Interval{u.a1, u.b1}};
    }
    return {Interval{std::min(u.a1, u.a2), std::max(u.b1, u.b2)}};
}

} // namespace rejectlab
