#pragma once

#include <string>
#include <vector>

#include "rejectlab/distributions.hpp"
#include "rejectlab/mi_classifier.hpp"

namespace rejectlab {

// -e log2 e - (1-e) log2(1-e); zero at the endpoints.
double binary_entropy(double e);

// Smallest e in [0, 0.5] with binary_entropy(e) = h; bisection to 1e-12.
double invert_binary_entropy(double h);

// General Fano lower bound (H(T|Y) - H(E)) / log2(m - 1); defined for three
// or more classes only. The binary case uses the tightened inversion of
// H(E) >= H(T|Y) instead.
double fano_lower_bound_general(int m, double h_t_given_y, double h_e);

struct BoundReport {
    double h_t_given_y = 0;
    double e = 0;
    double fano_lb = 0;        // binary case: the tightened inversion
    double kovalevskij_ub = 0; // H(T|Y) / 2
    double modified_lb = 0;    // solves H(E) = H(T|Y) on [0, 0.5]
    double modified_ub = 0;    // min(p1, p2, H(T|Y) / 2)
    double p_min = 0;
    bool satisfies_modified_lb = false;
    bool satisfies_modified_ub = false;
    bool exceeds_const_half = false; // e > 0.5, beyond even the constant bound
};

// Bound report for one classifier outcome. `e` must agree with the joint's
// off-diagonal mass to 1e-10.
BoundReport bounds(const ClassPrior& prior, const JointDistribution& joint, double e);

struct ScatterPoint {
    std::string label;
    ClassPrior prior;
    JointDistribution joint;
    double e;
};

struct LabeledBoundReport {
    std::string label;
    BoundReport report;
};

std::vector<LabeledBoundReport> bounds_scatter(const std::vector<ScatterPoint>& points);

} // namespace rejectlab
