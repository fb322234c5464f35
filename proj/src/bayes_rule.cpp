#include "rejectlab/bayes_rule.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "rejectlab/mi_classifier.hpp"

namespace rejectlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require(bool ok, const char* what) {
    if (!ok)
        throw ConstraintViolation(what);
}

// Chow ordering plus the chain constraint for an active reject option.
void check_rejection_costs(const CostMatrix& c) {
    require(c.at(1, 1) >= 0.0 && c.at(2, 2) >= 0.0,
            "cost constraint violated: correct-decision costs must be nonnegative");
    require(c.at(1, 2) > c.at(1, 3), "cost constraint violated: need lambda12 > lambda13");
    require(c.at(1, 3) > c.at(1, 1), "cost constraint violated: need lambda13 > lambda11");
    require(c.at(2, 1) > c.at(2, 3), "cost constraint violated: need lambda21 > lambda23");
    require(c.at(2, 3) > c.at(2, 2), "cost constraint violated: need lambda23 > lambda22");
    const double low = (c.at(2, 3) - c.at(2, 2)) / (c.at(1, 2) - c.at(1, 3));
    const double mid = (c.at(2, 1) - c.at(2, 2)) / (c.at(1, 2) - c.at(1, 1));
    const double high = (c.at(2, 1) - c.at(2, 3)) / (c.at(1, 3) - c.at(1, 1));
    if (!(low > 0.0 && low < mid && mid < high)) {
        std::ostringstream os;
        os << "cost chain constraint violated: need 0 < (l23-l22)/(l12-l13) < "
              "(l21-l22)/(l12-l11) < (l21-l23)/(l13-l11), got "
           << low << " / " << mid << " / " << high;
        throw ConstraintViolation(os.str());
    }
}

void check_no_reject_costs(const CostMatrix& c) {
    require(c.at(1, 1) >= 0.0 && c.at(2, 2) >= 0.0,
            "cost constraint violated: correct-decision costs must be nonnegative");
    require(c.at(1, 2) > c.at(1, 1), "cost constraint violated: need lambda12 > lambda11");
    require(c.at(2, 1) > c.at(2, 2), "cost constraint violated: need lambda21 > lambda22");
}

Decision label_for(double lr, const DeltaPair& d) {
    if (lr > d.delta1)
        return Decision::Class1;
    if (lr <= d.delta2)
        return Decision::Class2;
    return Decision::Reject;
}

// Smaller rank wins a boundary point: the y2 rule is non-strict, the y3 band
// is closed at the top, the y1 rule is strict.
int tie_rank(Decision d) {
    switch (d) {
    case Decision::Class2: return 0;
    case Decision::Reject: return 1;
    case Decision::Class1: return 2;
    }
    return 3;
}

} // namespace

CostMatrix CostMatrix::zero_one() {
    CostMatrix c;
    c.lambda = {{{0.0, 1.0, 0.0}, {1.0, 0.0, 0.0}}};
    return c;
}

CostMatrix CostMatrix::chow(double tr) {
    CostMatrix c;
    c.lambda = {{{0.0, 1.0, tr}, {1.0, 0.0, tr}}};
    return c;
}

CostMatrix CostMatrix::scaled(double factor) const {
    CostMatrix c = *this;
    for (auto& row : c.lambda)
        for (auto& v : row)
            v *= factor;
    return c;
}

RejectThresholds thresholds_from_costs(const CostMatrix& costs) {
    check_rejection_costs(costs);
    const double tr1 = (costs.at(1, 3) - costs.at(1, 1)) /
                       (costs.at(1, 3) - costs.at(1, 1) + costs.at(2, 1) - costs.at(2, 3));
    const double tr2 = (costs.at(2, 3) - costs.at(2, 2)) /
                       (costs.at(1, 2) - costs.at(1, 3) + costs.at(2, 3) - costs.at(2, 2));
    return RejectThresholds{tr1, tr2};
}

CostMatrix costs_from_thresholds(const RejectThresholds& tr, double lambda21) {
    if (!(tr.tr1 > 0.0) || !(tr.tr2 > 0.0))
        throw DegenerateThresholds("costs_from_thresholds requires tr1 > 0 and tr2 > 0");
    if (!(tr.tr1 + tr.tr2 < 1.0))
        throw DegenerateThresholds("costs_from_thresholds requires tr1 + tr2 < 1");
    const double d2 = tr.tr2 / (1.0 - tr.tr2);
    const double d1 = (1.0 - tr.tr1) / tr.tr1;
    if (!(lambda21 > d2 && lambda21 < d1)) {
        std::ostringstream os;
        os << "lambda21 must lie strictly between tr2/(1-tr2) = " << d2
           << " and (1-tr1)/tr1 = " << d1 << " to satisfy the cost chain";
        throw ConstraintViolation(os.str());
    }
    const double denom = 1.0 - tr.tr1 - tr.tr2;
    CostMatrix c;
    c.at(1, 1) = 0.0;
    c.at(1, 2) = 1.0;
    c.at(2, 2) = 0.0;
    c.at(2, 1) = lambda21;
    // Algebraic inverse of the threshold formulas under l11 = l22 = 0,
    // l12 = 1; round-trips for every lambda21 in the admissible interval.
    c.at(1, 3) = tr.tr1 * (lambda21 * (1.0 - tr.tr2) - tr.tr2) / denom;
    c.at(2, 3) = tr.tr2 * (1.0 - tr.tr1 * (1.0 + lambda21)) / denom;
    return c;
}

std::pair<CostMatrix, CostMatrix> demonstrate_redundancy(const RejectThresholds& tr) {
    if (!(tr.tr1 > 0.0) || !(tr.tr2 > 0.0) || !(tr.tr1 + tr.tr2 < 1.0))
        throw DegenerateThresholds(
            "redundancy demonstration requires strictly interior thresholds");
    const double d2 = tr.tr2 / (1.0 - tr.tr2);
    const double d1 = (1.0 - tr.tr1) / tr.tr1;
    // Unit error costs when admissible, otherwise the geometric midpoint of
    // the admissible lambda21 interval (equal error costs are impossible once
    // a threshold reaches 0.5).
    const double l21 = (d2 < 1.0 && 1.0 < d1) ? 1.0 : std::sqrt(d1 * d2);
    CostMatrix unit_errors = costs_from_thresholds(tr, l21);
    CostMatrix unit_rejects;
    unit_rejects.at(1, 1) = 0.0;
    unit_rejects.at(2, 2) = 0.0;
    unit_rejects.at(1, 3) = 1.0;
    unit_rejects.at(2, 3) = 1.0;
    unit_rejects.at(1, 2) = 1.0 / tr.tr2;
    unit_rejects.at(2, 1) = 1.0 / tr.tr1;
    return {unit_errors, unit_rejects};
}

std::vector<double> gaussian_boundaries(const GaussianClassModel& m, double delta) {
    if (!(delta > 0.0) || !std::isfinite(delta))
        return {};
    const double p1 = m.prior.p1;
    const double p2 = m.prior.p2;
    if (m.sigma1 == m.sigma2) {
        if (m.mu1 == m.mu2)
            return {}; // constant likelihood ratio, no crossing
        const double sigma2 = m.sigma1 * m.sigma1;
        const double x = 0.5 * (m.mu1 + m.mu2) +
                         sigma2 / (m.mu2 - m.mu1) * std::log(p1 / (p2 * delta));
        return {x};
    }
    const double s1 = m.sigma1 * m.sigma1;
    const double s2 = m.sigma2 * m.sigma2;
    const double alpha =
        (m.mu1 - m.mu2) * (m.mu1 - m.mu2) -
        2.0 * (s1 - s2) * std::log(p1 * m.sigma2 / (p2 * m.sigma1 * delta));
    if (!(alpha > 0.0))
        return {};
    const double center = (m.mu2 * s1 - m.mu1 * s2) / (s1 - s2);
    const double spread = m.sigma1 * m.sigma2 * std::sqrt(alpha) / (s1 - s2);
    double lo = center - spread;
    double hi = center + spread;
    if (lo > hi)
        std::swap(lo, hi);
    return {lo, hi};
}

CrossoverAnalysis crossover_points(const GaussianClassModel& m) {
    CrossoverAnalysis out;
    const double s1 = m.sigma1 * m.sigma1;
    const double s2 = m.sigma2 * m.sigma2;
    out.alpha = (m.mu1 - m.mu2) * (m.mu1 - m.mu2) -
                2.0 * (s1 - s2) * std::log(m.prior.p1 * m.sigma2 / (m.prior.p2 * m.sigma1));
    out.points = gaussian_boundaries(m, 1.0);
    out.count = static_cast<int>(out.points.size());
    return out;
}

PosteriorExtrema posterior_extrema(const GaussianClassModel& m) {
    if (m.sigma1 == m.sigma2) {
        if (m.mu1 == m.mu2) {
            const double p1 = m.prior.p1;
            return PosteriorExtrema{p1, p1, 1.0 - p1, 1.0 - p1};
        }
        return PosteriorExtrema{0.0, 1.0, 0.0, 1.0};
    }
    const double s1 = m.sigma1 * m.sigma1;
    const double s2 = m.sigma2 * m.sigma2;
    // Stationary point of ln LR(x); same center as the boundary formula.
    const double xstar = (m.mu2 * s1 - m.mu1 * s2) / (s1 - s2);
    const double lr_ext = likelihood_ratio(ClassModel{m}, xstar);
    const double p1_ext = lr_ext / (1.0 + lr_ext);
    if (m.sigma1 > m.sigma2) {
        // LR attains its minimum at xstar and grows unbounded in the tails.
        return PosteriorExtrema{p1_ext, 1.0, 0.0, 1.0 - p1_ext};
    }
    return PosteriorExtrema{0.0, p1_ext, 1.0 - p1_ext, 1.0};
}

void validate_thresholds(const RejectThresholds& tr, bool relaxed) {
    if (!(tr.tr1 >= 0.0) || !(tr.tr2 >= 0.0))
        throw DegenerateThresholds("rejection thresholds must be nonnegative");
    const double sum = tr.tr1 + tr.tr2;
    if (sum > 1.0) {
        std::ostringstream os;
        os << "threshold constraint violated: tr1 + tr2 must stay in (0, 1], got " << sum;
        throw DegenerateThresholds(os.str());
    }
    // A zero threshold removes a class region entirely (reject-all, or
    // one-class-and-reject); those regimes are opt-in.
    if (!relaxed && !(tr.tr1 > 0.0 && tr.tr2 > 0.0))
        throw DegenerateThresholds(
            "zero thresholds suppress a class region; enable relaxed mode to allow them");
}

RejectThresholds thresholds_from_deltas(const DeltaPair& d) {
    const double tr1 = std::isinf(d.delta1) ? 0.0 : 1.0 / (1.0 + d.delta1);
    const double tr2 = std::isinf(d.delta2) ? 1.0 : d.delta2 / (1.0 + d.delta2);
    return RejectThresholds{tr1, tr2};
}

DeltaPair deltas_from_thresholds(const RejectThresholds& tr) {
    const double d1 = tr.tr1 == 0.0 ? kInf : (1.0 - tr.tr1) / tr.tr1;
    const double d2 = tr.tr2 >= 1.0 ? kInf : tr.tr2 / (1.0 - tr.tr2);
    return DeltaPair{d1, d2};
}

DeltaPair deltas_from(const Policy& policy, bool reject_option, bool relaxed) {
    if (const auto* costs = std::get_if<CostMatrix>(&policy)) {
        if (reject_option) {
            const RejectThresholds tr = thresholds_from_costs(*costs);
            return deltas_from_thresholds(tr);
        }
        check_no_reject_costs(*costs);
        const double d = (costs->at(2, 1) - costs->at(2, 2)) / (costs->at(1, 2) - costs->at(1, 1));
        return DeltaPair{d, d};
    }
    const auto& tr = std::get<RejectThresholds>(policy);
    if (!reject_option) {
        if (tr.tr1 != 0.5 || tr.tr2 != 0.5)
            throw DegenerateThresholds("no-rejection mode requires tr1 = tr2 = 0.5");
        return DeltaPair{1.0, 1.0};
    }
    validate_thresholds(tr, relaxed);
    return deltas_from_thresholds(tr);
}

DecisionRegions DecisionRegions::from_intervals(std::vector<LabeledInterval> segments) {
    std::sort(segments.begin(), segments.end(),
              [](const LabeledInterval& a, const LabeledInterval& b) { return a.lo < b.lo; });
    DecisionRegions out;
    for (const auto& seg : segments) {
        if (!(seg.lo < seg.hi))
            continue; // zero-width pieces carry no mass
        if (!out.segments_.empty() && out.segments_.back().label == seg.label &&
            out.segments_.back().hi == seg.lo) {
            out.segments_.back().hi = seg.hi;
            continue;
        }
        if (!out.segments_.empty() && seg.lo < out.segments_.back().hi)
            throw std::invalid_argument("decision regions must be disjoint");
        out.segments_.push_back(seg);
    }
    if (out.segments_.empty())
        throw std::invalid_argument("decision regions must not be empty");
    for (std::size_t k = 1; k < out.segments_.size(); ++k) {
        if (out.segments_[k].lo == out.segments_[k - 1].hi)
            out.boundary_points_.push_back(out.segments_[k].lo);
    }
    return out;
}

Decision DecisionRegions::decide(double x) const {
    const LabeledInterval* hit = nullptr;
    const LabeledInterval* second = nullptr;
    for (const auto& seg : segments_) {
        if (x < seg.lo)
            break;
        if (x <= seg.hi) {
            if (!hit)
                hit = &seg;
            else
                second = &seg;
        }
    }
    if (!hit)
        throw ZeroMixtureDensity("query point lies outside the labeled support");
    if (second && tie_rank(second->label) < tie_rank(hit->label))
        return second->label;
    return hit->label;
}

bool DecisionRegions::has_label(Decision d) const {
    return std::any_of(segments_.begin(), segments_.end(),
                       [d](const LabeledInterval& s) { return s.label == d; });
}

namespace {

DecisionRegions gaussian_regions(const GaussianClassModel& m, const DeltaPair& d) {
    std::vector<double> pts = gaussian_boundaries(m, d.delta1);
    for (double x : gaussian_boundaries(m, d.delta2))
        pts.push_back(x);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    const ClassModel model{m};
    std::vector<LabeledInterval> segs;
    std::vector<double> edges;
    edges.push_back(-kInf);
    for (double x : pts)
        edges.push_back(x);
    edges.push_back(kInf);
    for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
        const double lo = edges[k];
        const double hi = edges[k + 1];
        double probe;
        if (std::isinf(lo) && std::isinf(hi))
            probe = 0.5 * (m.mu1 + m.mu2);
        else if (std::isinf(lo))
            probe = hi - 1.0;
        else if (std::isinf(hi))
            probe = lo + 1.0;
        else
            probe = 0.5 * (lo + hi);
        segs.push_back(LabeledInterval{lo, hi, label_for(likelihood_ratio(model, probe), d)});
    }
    return DecisionRegions::from_intervals(std::move(segs));
}

DecisionRegions uniform_regions(const UniformClassModel& u, const DeltaPair& d) {
    struct Piece {
        double lo, hi, lr;
    };
    std::vector<Piece> pieces;
    const double rho = u.overlap_likelihood_ratio();
    switch (u.overlap_case) {
    case UniformOverlap::PartialOverlap:
        if (u.a1 < u.a2)
            pieces.push_back({u.a1, u.a2, kInf});
        pieces.push_back({u.a2, u.b1, rho});
        if (u.b1 < u.b2)
            pieces.push_back({u.b1, u.b2, 0.0});
        break;
    case UniformOverlap::FullOverlapByClass1:
        if (u.a1 < u.a2)
            pieces.push_back({u.a1, u.a2, kInf});
        pieces.push_back({u.a2, u.b2, rho});
        if (u.b2 < u.b1)
            pieces.push_back({u.b2, u.b1, kInf});
        break;
    case UniformOverlap::Separated:
        pieces.push_back({u.a1, u.b1, kInf});
        pieces.push_back({u.a2, u.b2, 0.0});
        std::sort(pieces.begin(), pieces.end(),
                  [](const Piece& a, const Piece& b) { return a.lo < b.lo; });
        break;
    }
    std::vector<LabeledInterval> segs;
    for (const auto& piece : pieces)
        segs.push_back(LabeledInterval{piece.lo, piece.hi, label_for(piece.lr, d)});
    return DecisionRegions::from_intervals(std::move(segs));
}

} // namespace

DecisionRegions regions_from_deltas(const ClassModel& model, const DeltaPair& deltas) {
    if (!(deltas.delta2 <= deltas.delta1))
        throw DegenerateThresholds("delta pair requires delta2 <= delta1");
    if (const auto* g = std::get_if<GaussianClassModel>(&model))
        return gaussian_regions(*g, deltas);
    return uniform_regions(std::get<UniformClassModel>(model), deltas);
}

DecisionRegions bayes_regions(const ClassModel& model, const Policy& policy, bool reject_option,
                              bool relaxed) {
    return regions_from_deltas(model, deltas_from(policy, reject_option, relaxed));
}

OutcomeReport evaluate(const ClassModel& model, const DecisionRegions& regions,
                       const std::optional<CostMatrix>& costs) {
    OutcomeReport r;
    for (const auto& seg : regions.segments()) {
        const double m1 = class_mass(model, 1, seg.lo, seg.hi);
        const double m2 = class_mass(model, 2, seg.lo, seg.hi);
        switch (seg.label) {
        case Decision::Class1:
            r.cr1 += m1;
            r.e2 += m2;
            break;
        case Decision::Class2:
            r.e1 += m1;
            r.cr2 += m2;
            break;
        case Decision::Reject:
            r.rej1 += m1;
            r.rej2 += m2;
            break;
        }
    }
    r.cr = r.cr1 + r.cr2;
    r.e = r.e1 + r.e2;
    r.rej = r.rej1 + r.rej2;
    r.accuracy = (r.cr + r.e) > 0.0 ? r.cr / (r.cr + r.e) : kNaN;
    if (costs) {
        r.risk = costs->at(1, 1) * r.cr1 + costs->at(1, 2) * r.e1 + costs->at(1, 3) * r.rej1 +
                 costs->at(2, 1) * r.e2 + costs->at(2, 2) * r.cr2 + costs->at(2, 3) * r.rej2;
    }
    const NiResult info = ni(joint_from_regions(model, regions));
    r.ni = info.ni;
    r.h_t_given_y = info.h_t_given_y;
    r.regions = regions;
    return r;
}

Decision uniform_overlap_decision(const UniformClassModel& model, const DeltaPair& deltas) {
    return label_for(model.overlap_likelihood_ratio(), deltas);
}

Decision uniform_single_threshold_decision(const UniformClassModel& model, double tr) {
    if (!(tr >= 0.0 && tr <= 1.0))
        throw DegenerateThresholds("scan threshold must lie in [0, 1]");
    const double q1 = model.overlap_posterior1();
    const double q2 = 1.0 - q1;
    // Above tr = 0.5 the symmetric pair leaves the admissible set and both
    // class rules can fire at once; the non-strict y2 rule takes precedence.
    if (q2 >= 1.0 - tr)
        return Decision::Class2;
    if (q1 > 1.0 - tr)
        return Decision::Class1;
    return Decision::Reject;
}

double uniform_error_closed_form(const UniformClassModel& u, Decision overlap_label) {
    const double p1 = u.prior.p1;
    const double p2 = u.prior.p2;
    switch (u.overlap_case) {
    case UniformOverlap::PartialOverlap:
        switch (overlap_label) {
        case Decision::Class1: return p2 * (u.b1 - u.a2) / (u.b2 - u.a2);
        case Decision::Class2: return p1 * (u.b1 - u.a2) / (u.b1 - u.a1);
        case Decision::Reject: return 0.0;
        }
        break;
    case UniformOverlap::FullOverlapByClass1:
        switch (overlap_label) {
        case Decision::Class1: return p2;
        case Decision::Class2: return p1 * (u.b2 - u.a2) / (u.b1 - u.a1);
        case Decision::Reject: return 0.0;
        }
        break;
    case UniformOverlap::Separated:
        return 0.0;
    }
    return 0.0;
}

double uniform_reject_closed_form(const UniformClassModel& u, Decision overlap_label) {
    if (overlap_label != Decision::Reject || u.overlap_case == UniformOverlap::Separated)
        return 0.0;
    const double p1 = u.prior.p1;
    const double p2 = u.prior.p2;
    if (u.overlap_case == UniformOverlap::PartialOverlap)
        return (u.b1 - u.a2) * (p1 / (u.b1 - u.a1) + p2 / (u.b2 - u.a2));
    return p1 * (u.b2 - u.a2) / (u.b1 - u.a1) + p2;
}

std::pair<DecisionRegions, OutcomeReport> uniform_bayes_decide(const UniformClassModel& model,
                                                               const Policy& policy,
                                                               bool reject_option, bool relaxed) {
    const DeltaPair d = deltas_from(policy, reject_option, relaxed);
    DecisionRegions regions = regions_from_deltas(ClassModel{model}, d);
    const CostMatrix* costs = std::get_if<CostMatrix>(&policy);
    OutcomeReport report =
        evaluate(ClassModel{model}, regions,
                 costs ? std::optional<CostMatrix>(*costs) : std::nullopt);
    report.thresholds = thresholds_from_deltas(d);
    return {std::move(regions), std::move(report)};
}

OutcomeReport mirror_outcome(const OutcomeReport& in, double center) {
    OutcomeReport out = in;
    std::swap(out.cr1, out.cr2);
    std::swap(out.e1, out.e2);
    std::swap(out.rej1, out.rej2);
    // Reflect the partition about the midpoint and swap the class labels.
    std::vector<LabeledInterval> segs;
    for (const auto& seg : in.regions.segments()) {
        Decision label = seg.label;
        if (label == Decision::Class1)
            label = Decision::Class2;
        else if (label == Decision::Class2)
            label = Decision::Class1;
        segs.push_back(
            LabeledInterval{2.0 * center - seg.hi, 2.0 * center - seg.lo, label});
    }
    out.regions = DecisionRegions::from_intervals(std::move(segs));
    return out;
}

namespace {

SweepRow bayes_sweep_point(const GaussianClassModel& base, double ratio) {
    const ClassPrior prior(ratio / (1.0 + ratio), 1.0 / (1.0 + ratio));
    const GaussianClassModel m(prior, base.mu1, base.sigma1, base.mu2, base.sigma2);
    const ClassModel model{m};
    DecisionRegions regions = regions_from_deltas(model, DeltaPair{1.0, 1.0});
    OutcomeReport outcome = evaluate(model, regions, CostMatrix::zero_one());
    outcome.thresholds = RejectThresholds{0.5, 0.5};
    SweepRow row;
    row.ratio = ratio;
    row.fnr = outcome.e2 / prior.p2;
    row.x_b = regions.boundary_points().empty() ? kNaN : regions.boundary_points().front();
    row.ni = outcome.ni;
    row.h_t_given_y = outcome.h_t_given_y;
    row.outcome = std::move(outcome);
    return row;
}

} // namespace

std::vector<SweepRow> imbalance_sweep(const GaussianClassModel& base,
                                      const std::vector<double>& ratios) {
    if (base.sigma1 != base.sigma2)
        throw ConstraintViolation("imbalance sweep requires sigma1 == sigma2");
    const double center = 0.5 * (base.mu1 + base.mu2);
    std::vector<SweepRow> rows;
    rows.reserve(ratios.size());
    for (double ratio : ratios) {
        if (!(ratio > 0.0))
            throw ConstraintViolation("sweep ratios must be positive");
        if (ratio >= 1.0) {
            rows.push_back(bayes_sweep_point(base, ratio));
            continue;
        }
        // Reuse the reciprocal-ratio solution with class indices swapped.
        SweepRow mirrored = bayes_sweep_point(base, 1.0 / ratio);
        SweepRow row;
        row.ratio = ratio;
        row.outcome = mirror_outcome(mirrored.outcome, center);
        row.fnr = row.outcome.e2 * (1.0 + ratio); // p(t2) = 1 / (1 + ratio)
        row.x_b = 2.0 * center - mirrored.x_b;
        row.ni = mirrored.ni;
        row.h_t_given_y = mirrored.h_t_given_y;
        rows.push_back(std::move(row));
    }
    return rows;
}

RejectionScenario classify_rejection_scenario(const GaussianClassModel& m,
                                              const RejectThresholds& tr, bool relaxed) {
    validate_thresholds(tr, relaxed);
    if (tr.tr1 == 0.0 && tr.tr2 == 0.0)
        return RejectionScenario::RejectAll;
    if (tr.tr1 + tr.tr2 == 1.0)
        return RejectionScenario::NoRejection;
    const DeltaPair d = deltas_from_thresholds(tr);
    const CrossoverAnalysis cross = crossover_points(m);
    const double s1 = m.sigma1 * m.sigma1;
    const double s2 = m.sigma2 * m.sigma2;
    // Extremum of LR over the line: a minimum when sigma1 > sigma2, a maximum
    // when sigma1 < sigma2, absent (range (0, inf)) for equal sigmas.
    double lr_ext = kNaN;
    if (m.sigma1 != m.sigma2)
        lr_ext = likelihood_ratio(ClassModel{m}, (m.mu2 * s1 - m.mu1 * s2) / (s1 - s2));
    if (cross.count > 0) {
        const bool r1_empty =
            m.sigma1 < m.sigma2 ? d.delta1 >= lr_ext : std::isinf(d.delta1);
        const bool r2_empty =
            m.sigma1 > m.sigma2 ? d.delta2 < lr_ext : d.delta2 <= 0.0;
        if (r1_empty)
            return RejectionScenario::ClassTwoAndReject;
        if (r2_empty)
            return RejectionScenario::ClassOneAndReject;
        return RejectionScenario::GeneralRejection;
    }
    // Zero crossovers: one class dominates the posteriors everywhere.
    if (m.sigma1 > m.sigma2) {
        // lr_ext is the minimum of LR; class 1 is the majority.
        if (d.delta1 <= lr_ext)
            return RejectionScenario::MajorityTakingAll;
        if (d.delta2 < lr_ext)
            return RejectionScenario::MajorityAndReject;
        if (std::isinf(d.delta1))
            return RejectionScenario::MinorityAndReject;
        return RejectionScenario::GeneralRejection;
    }
    // lr_ext is the maximum of LR; class 2 is the majority.
    if (d.delta2 >= lr_ext)
        return RejectionScenario::MajorityTakingAll;
    if (std::isinf(d.delta1) || d.delta1 >= lr_ext)
        return RejectionScenario::MajorityAndReject;
    if (d.delta2 == 0.0)
        return RejectionScenario::MinorityAndReject;
    return RejectionScenario::GeneralRejection;
}

const char* to_string(RejectionScenario s) {
    switch (s) {
    case RejectionScenario::NoRejection: return "no_rejection";
    case RejectionScenario::RejectAll: return "reject_all";
    case RejectionScenario::GeneralRejection: return "general_rejection";
    case RejectionScenario::ClassOneAndReject: return "class1_and_reject";
    case RejectionScenario::ClassTwoAndReject: return "class2_and_reject";
    case RejectionScenario::MajorityTakingAll: return "majority_taking_all";
    case RejectionScenario::MajorityAndReject: return "majority_and_reject";
    case RejectionScenario::MinorityAndReject: return "minority_and_reject";
    }
    return "unknown";
}

const char* to_string(Decision d) {
    switch (d) {
    case Decision::Class1: return "y1";
    case Decision::Class2: return "y2";
    case Decision::Reject: return "y3";
    }
    return "unknown";
}

} // namespace rejectlab
