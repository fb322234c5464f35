#pragma once

#include <variant>
#include <vector>

#include "rejectlab/errors.hpp"

namespace rejectlab {

// Class priors of a binary problem. Both components strictly interior and
// summing to one (checked to 1e-12 on construction).
struct ClassPrior {
    double p1;
    double p2;

    ClassPrior(double p1_, double p2_);
};

struct Posterior {
    double pt1_given_x;
    double pt2_given_x;
};

// Two univariate Gaussian class conditionals with exactly known parameters.
struct GaussianClassModel {
    ClassPrior prior;
    double mu1;
    double sigma1;
    double mu2;
    double sigma2;

    GaussianClassModel(ClassPrior prior_, double mu1_, double sigma1_, double mu2_,
                       double sigma2_);
};

enum class UniformOverlap {
    PartialOverlap,      // a1 <= a2 <= b1 <= b2
    FullOverlapByClass1, // a1 <= a2 <= b2 <= b1
    Separated,           // disjoint supports (either class may sit left)
};

// Two uniform class conditionals. Supports are closed intervals; the overlap
// case is derived from the interval arithmetic on construction. Orientations
// with class 2 extending left of class 1 in an overlapping configuration are
// rejected: swap the class labels to express them.
struct UniformClassModel {
    ClassPrior prior;
    double a1;
    double b1;
    double a2;
    double b2;
    UniformOverlap overlap_case;

    UniformClassModel(ClassPrior prior_, double a1_, double b1_, double a2_, double b2_);

    // Overlap interval [lo, hi]; only meaningful for the overlapping cases.
    double overlap_lo() const;
    double overlap_hi() const;
    // Constant likelihood ratio p(x|t1)p(t1) / (p(x|t2)p(t2)) on the overlap.
    double overlap_likelihood_ratio() const;
    // Constant p(t1|x) on the overlap.
    double overlap_posterior1() const;
};

using ClassModel = std::variant<GaussianClassModel, UniformClassModel>;

const ClassPrior& prior_of(const ClassModel& model);

// Conditional density p(x|t_i), i in {1, 2}.
double class_density(const ClassModel& model, int class_index, double x);

// Posterior (p(t1|x), p(t2|x)); requires mixture density > 0 at x.
Posterior posterior(const ClassModel& model, double x);

// p(x|t1)p(t1) / (p(x|t2)p(t2)); +infinity when only class 1 has mass at x.
// Throws ZeroMixtureDensity when both conditionals vanish.
double likelihood_ratio(const ClassModel& model, double x);

// p(t_i) * integral of p(x|t_i) over [lo, hi]; lo/hi may be infinite.
// Gaussian masses go through erf, uniform masses through exact interval
// arithmetic.
double class_mass(const ClassModel& model, int class_index, double lo, double hi);

struct Interval {
    double lo;
    double hi;
};

// Components of the set where the mixture density is positive, in increasing
// order. Gaussians report a single unbounded interval.
std::vector<Interval> support_components(const ClassModel& model);

} // namespace rejectlab
