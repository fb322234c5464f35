#include "rejectlab/info_bounds.hpp"

#include <algorithm>
#include <cmath>

namespace rejectlab {

double binary_entropy(double e) {
    if (!(e >= 0.0 && e <= 1.0))
        throw std::invalid_argument("binary_entropy requires e in [0, 1]");
    if (e == 0.0 || e == 1.0)
        return 0.0;
    return -e * std::log2(e) - (1.0 - e) * std::log2(1.0 - e);
}

double invert_binary_entropy(double h) {
    if (!(h >= 0.0 && h <= 1.0))
        throw std::invalid_argument("invert_binary_entropy requires h in [0, 1]");
    if (h == 0.0)
        return 0.0;
    if (h == 1.0)
        return 0.5;
    double lo = 0.0, hi = 0.5;
    for (int it = 0; it < 60 && hi - lo > 1e-12; ++it) {
        const double mid = 0.5 * (lo + hi);
        (binary_entropy(mid) < h ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double fano_lower_bound_general(int m, double h_t_given_y, double h_e) {
    if (m < 3)
        throw std::invalid_argument(
            "the general Fano form divides by log2(m - 1); use the binary inversion for m = 2");
    return (h_t_given_y - h_e) / std::log2(static_cast<double>(m - 1));
}

BoundReport bounds(const ClassPrior& prior, const JointDistribution& joint, double e) {
    const double joint_e = joint.p[0][1] + joint.p[1][0];
    if (std::fabs(e - joint_e) > 1e-10)
        throw InconsistentInput("stated error rate disagrees with the joint's error mass");
    const NiResult r = ni(joint);
    BoundReport b;
    b.h_t_given_y = r.h_t_given_y;
    b.e = e;
    b.modified_lb = invert_binary_entropy(std::min(r.h_t_given_y, 1.0));
    b.fano_lb = b.modified_lb;
    b.kovalevskij_ub = 0.5 * r.h_t_given_y;
    b.p_min = std::min(prior.p1, prior.p2);
    b.modified_ub = std::min(b.p_min, b.kovalevskij_ub);
    b.satisfies_modified_lb = e >= b.modified_lb - 1e-9;
    b.satisfies_modified_ub = e <= b.modified_ub + 1e-9;
    b.exceeds_const_half = e > 0.5;
    return b;
}

std::vector<LabeledBoundReport> bounds_scatter(const std::vector<ScatterPoint>& points) {
    std::vector<LabeledBoundReport> out;
    out.reserve(points.size());
    for (const auto& pt : points)
        out.push_back(LabeledBoundReport{pt.label, bounds(pt.prior, pt.joint, pt.e)});
    return out;
}

} // namespace rejectlab
