#include "rejectlab/mi_classifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace rejectlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kZeroFloor = 1e-300; // joint entries below this count as exact zeros

double plog2p(double p) { return p < kZeroFloor ? 0.0 : p * std::log2(p); }

} // namespace

double entropy_prior(const ClassPrior& prior) { return -plog2p(prior.p1) - plog2p(prior.p2); }

NiResult ni(const JointDistribution& joint) {
    const double pt[2] = {joint.row_sum(0), joint.row_sum(1)};
    const double py[3] = {joint.col_sum(0), joint.col_sum(1), joint.col_sum(2)};
    const double ht = -plog2p(pt[0]) - plog2p(pt[1]);
    if (!(ht > 0.0))
        throw DegenerateTarget("H(T) = 0: one class carries all the probability");
    double info = 0.0;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 3; ++j) {
            const double pij = joint.p[i][j];
            if (pij < kZeroFloor)
                continue;
            info += pij * std::log2(pij / (pt[i] * py[j]));
        }
    }
    // I(T,Y) lies in [0, H(T)] exactly; wipe the one-ulp fp excursions so
    // downstream identities (H(T|Y) >= 0, NI <= 1) hold without slack.
    info = std::clamp(info, 0.0, ht);
    NiResult out;
    out.mutual_information = info;
    out.ni = info / ht;
    out.h_t_given_y = ht - info;
    return out;
}

JointDistribution joint_from_regions(const ClassModel& model, const DecisionRegions& regions) {
    JointDistribution joint;
    for (const auto& seg : regions.segments()) {
        const int j = decision_index(seg.label);
        joint.p[0][j] += class_mass(model, 1, seg.lo, seg.hi);
        joint.p[1][j] += class_mass(model, 2, seg.lo, seg.hi);
    }
    return joint;
}

JointDistribution joint_from_confusion(const AugmentedConfusionMatrix& cm) {
    if (cm.row_total(0) == 0 || cm.row_total(1) == 0)
        throw InconsistentInput("confusion matrix requires a positive total per class");
    if (cm.n != cm.row_total(0) + cm.row_total(1))
        throw InconsistentInput("confusion matrix total n does not match the cell sums");
    JointDistribution joint;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j)
            joint.p[i][j] = static_cast<double>(cm.c[i][j]) / static_cast<double>(cm.n);
    return joint;
}

RejectThresholds equivalent_thresholds(const GaussianClassModel& model,
                                       const std::vector<double>& points) {
    const ClassModel m{model};
    std::vector<double> pts = points;
    std::sort(pts.begin(), pts.end());
    const auto tr1_at = [&](double x) { return 1.0 - posterior(m, x).pt1_given_x; };
    const auto tr2_at = [&](double x) { return 1.0 - posterior(m, x).pt2_given_x; };
    if (pts.size() == 1) {
        return RejectThresholds{tr1_at(pts[0]), tr2_at(pts[0])};
    }
    if (pts.size() == 2) {
        // One point sits on the y1/y3 frontier (larger LR), the other on the
        // y3/y2 frontier. Under mu1 < mu2 with equal sigmas that is
        // left/right; the LR ordering covers the swapped orientation too.
        const double lr_a = likelihood_ratio(m, pts[0]);
        const double lr_b = likelihood_ratio(m, pts[1]);
        const double x_hi = lr_a >= lr_b ? pts[0] : pts[1];
        const double x_lo = lr_a >= lr_b ? pts[1] : pts[0];
        return RejectThresholds{tr1_at(x_hi), tr2_at(x_lo)};
    }
    if (pts.size() == 4) {
        const double lr_outer = likelihood_ratio(m, pts[0]);
        const double lr_inner = likelihood_ratio(m, pts[1]);
        const bool outer_is_class1_frontier = lr_outer >= lr_inner;
        const double t1a = outer_is_class1_frontier ? tr1_at(pts[0]) : tr1_at(pts[1]);
        const double t1b = outer_is_class1_frontier ? tr1_at(pts[3]) : tr1_at(pts[2]);
        const double t2a = outer_is_class1_frontier ? tr2_at(pts[1]) : tr2_at(pts[0]);
        const double t2b = outer_is_class1_frontier ? tr2_at(pts[2]) : tr2_at(pts[3]);
        if (std::fabs(t1a - t1b) > 1e-6 || std::fabs(t2a - t2b) > 1e-6)
            throw InconsistentPair(
                "boundary-point pairs disagree on the implied thresholds; the input is not "
                "the boundary set of a single rule");
        return RejectThresholds{0.5 * (t1a + t1b), 0.5 * (t2a + t2b)};
    }
    throw std::invalid_argument("equivalent thresholds need 1, 2 or 4 boundary points");
}

namespace {

struct Probe {
    double ni = -1.0;
    double i = 0.0;
    double hty = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;
};

// Total order: larger NI first, ties toward the smaller (d1, d2).
bool better(const Probe& a, const Probe& b) {
    if (a.ni != b.ni)
        return a.ni > b.ni;
    if (a.d1 != b.d1)
        return a.d1 < b.d1;
    return a.d2 < b.d2;
}

Probe eval_probe(const ClassModel& model, double d1, double d2) {
    const DecisionRegions regions = regions_from_deltas(model, DeltaPair{d1, d2});
    const NiResult r = ni(joint_from_regions(model, regions));
    return Probe{r.ni, r.mutual_information, r.h_t_given_y, d1, d2};
}

struct SearchState {
    Probe best;
    double max_i = -kInf;
    double min_hty = kInf;

    void absorb(const Probe& p) {
        if (better(p, best))
            best = p;
        max_i = std::max(max_i, p.i);
        min_hty = std::min(min_hty, p.hty);
    }
    void merge(const SearchState& o) {
        if (better(o.best, best))
            best = o.best;
        max_i = std::max(max_i, o.max_i);
        min_hty = std::min(min_hty, o.min_hty);
    }
};

constexpr double kLogLo = -6.0; // log10 of the smallest grid delta
constexpr double kLogHi = 6.0;
constexpr int kLineGrid = 2001;
constexpr int kPairGrid = 201;
constexpr double kRefineFloor = 1e-9;   // stop once the log-delta step drops below
constexpr double kNiImprove = 1e-12;    // smallest improvement worth moving for

void line_grid_stage(const ClassModel& model, SearchState& state, Execution exec) {
    const double step = (kLogHi - kLogLo) / (kLineGrid - 1);
    if (exec == Execution::Parallel) {
#pragma omp parallel
        {
            SearchState local;
#pragma omp for schedule(static) nowait
            for (int k = 0; k < kLineGrid; ++k) {
                const double d = std::pow(10.0, kLogLo + step * k);
                local.absorb(eval_probe(model, d, d));
            }
#pragma omp critical
            state.merge(local);
        }
    } else {
        for (int k = 0; k < kLineGrid; ++k) {
            const double d = std::pow(10.0, kLogLo + step * k);
            state.absorb(eval_probe(model, d, d));
        }
    }
}

void pair_grid_stage(const ClassModel& model, SearchState& state, Execution exec) {
    const double step = (kLogHi - kLogLo) / (kPairGrid - 1);
    const long total = static_cast<long>(kPairGrid) * (kPairGrid + 1) / 2;
    const auto probe_at = [&](long flat) {
        // Unflatten the triangular index: row i holds i + 1 entries (j <= i).
        long i = static_cast<long>((std::sqrt(8.0 * static_cast<double>(flat) + 1.0) - 1.0) / 2.0);
        while ((i + 1) * (i + 2) / 2 <= flat)
            ++i;
        while (i * (i + 1) / 2 > flat)
            --i;
        const long j = flat - i * (i + 1) / 2;
        const double d1 = std::pow(10.0, kLogLo + step * static_cast<double>(i));
        const double d2 = std::pow(10.0, kLogLo + step * static_cast<double>(j));
        return eval_probe(model, d1, d2);
    };
    if (exec == Execution::Parallel) {
#pragma omp parallel
        {
            SearchState local;
#pragma omp for schedule(static) nowait
            for (long k = 0; k < total; ++k)
                local.absorb(probe_at(k));
#pragma omp critical
            state.merge(local);
        }
    } else {
        for (long k = 0; k < total; ++k)
            state.absorb(probe_at(k));
    }
}

// Deterministic compass refinement in log-delta space. `pair_mode` keeps the
// band ordering u2 <= u1 intact and adds the diagonal moves so the search can
// slide along the no-rejection edge.
void refine(const ClassModel& model, SearchState& state, double initial_step, bool pair_mode) {
    Probe cur = state.best;
    double u1 = std::log(cur.d1);
    double u2 = std::log(cur.d2);
    double h = initial_step;
    static const double kLineDirs[2][2] = {{1.0, 1.0}, {-1.0, -1.0}};
    static const double kPairDirs[6][2] = {{1.0, 0.0},  {-1.0, 0.0}, {0.0, 1.0},
                                           {0.0, -1.0}, {1.0, 1.0},  {-1.0, -1.0}};
    const auto dirs = pair_mode ? kPairDirs : kLineDirs;
    const int ndirs = pair_mode ? 6 : 2;
    long guard = 0;
    while (h >= kRefineFloor && guard++ < 200000) {
        Probe best_n;
        double bu1 = u1, bu2 = u2;
        for (int k = 0; k < ndirs; ++k) {
            const double v1 = u1 + h * dirs[k][0];
            const double v2 = u2 + h * dirs[k][1];
            if (v2 > v1)
                continue;
            const Probe p = eval_probe(model, std::exp(v1), std::exp(v2));
            state.max_i = std::max(state.max_i, p.i);
            state.min_hty = std::min(state.min_hty, p.hty);
            if (better(p, best_n)) {
                best_n = p;
                bu1 = v1;
                bu2 = v2;
            }
        }
        if (best_n.ni > cur.ni + kNiImprove) {
            cur = best_n;
            u1 = bu1;
            u2 = bu2;
        } else {
            h *= 0.5;
        }
    }
    if (better(cur, state.best))
        state.best = cur;
}

MISolution finalize_gaussian(const ClassModel& model, const SearchState& state,
                             bool reject_option) {
    MISolution sol;
    sol.deltas = DeltaPair{state.best.d1, state.best.d2};
    sol.regions = regions_from_deltas(model, sol.deltas);
    sol.joint = joint_from_regions(model, sol.regions);
    const NiResult r = ni(sol.joint);
    sol.ni = r.ni;
    sol.h_t_given_y = r.h_t_given_y;
    sol.thresholds = thresholds_from_deltas(sol.deltas);
    sol.searched_max_i = state.max_i;
    sol.searched_min_h_t_given_y = state.min_hty;
    if (!reject_option) {
        sol.cost_ratio_lambda21 = state.best.d1;
    } else if (sol.thresholds.tr1 > 0.0 && sol.thresholds.tr2 > 0.0 &&
               sol.thresholds.tr1 + sol.thresholds.tr2 < 1.0) {
        sol.equivalent_costs = demonstrate_redundancy(sol.thresholds);
    }
    return sol;
}

MISolution gaussian_mi(const ClassModel& model, const GaussianClassModel& g, bool reject_option,
                       Execution exec) {
    // Closed form: equal sigmas and balanced priors put the single boundary
    // exactly on the midpoint, so delta = 1 is the optimum.
    if (!reject_option && g.sigma1 == g.sigma2 && g.prior.p1 == g.prior.p2) {
        SearchState state;
        state.absorb(eval_probe(model, 1.0, 1.0));
        return finalize_gaussian(model, state, false);
    }
    const double line_step = (kLogHi - kLogLo) / (kLineGrid - 1) * std::log(10.0);
    SearchState line_state;
    line_grid_stage(model, line_state, exec);
    refine(model, line_state, line_step, false);
    if (!reject_option)
        return finalize_gaussian(model, line_state, false);

    const double pair_step = (kLogHi - kLogLo) / (kPairGrid - 1) * std::log(10.0);
    SearchState state;
    pair_grid_stage(model, state, exec);
    refine(model, state, pair_step, true);
    // Second deterministic seed: refine from the no-rejection optimum so the
    // reject-mode result can never fall below it.
    SearchState from_line;
    from_line.best = line_state.best;
    from_line.max_i = state.max_i;
    from_line.min_hty = state.min_hty;
    refine(model, from_line, pair_step, true);
    state.max_i = from_line.max_i;
    state.min_hty = from_line.min_hty;
    if (better(from_line.best, state.best))
        state.best = from_line.best;
    return finalize_gaussian(model, state, true);
}

MISolution uniform_mi(const ClassModel& model, const UniformClassModel& u, bool reject_option) {
    MISolution sol;
    if (u.overlap_case == UniformOverlap::Separated) {
        sol.deltas = DeltaPair{1.0, 1.0};
        sol.regions = regions_from_deltas(model, sol.deltas);
        sol.joint = joint_from_regions(model, sol.regions);
        const NiResult r = ni(sol.joint);
        sol.ni = r.ni;
        sol.h_t_given_y = r.h_t_given_y;
        sol.thresholds = thresholds_from_deltas(sol.deltas);
        sol.searched_max_i = r.mutual_information;
        sol.searched_min_h_t_given_y = r.h_t_given_y;
        return sol;
    }
    const double rho = u.overlap_likelihood_ratio();
    // Delta pairs realizing each overlap label through the common region
    // engine. The full-overlap y1 labeling scores NI = 0 and is enumerated
    // after the alternatives, so it can never win a tie.
    struct Candidate {
        Decision label;
        DeltaPair deltas;
    };
    std::vector<Candidate> candidates;
    if (reject_option) {
        candidates.push_back({Decision::Reject, DeltaPair{2.0 * rho, 0.5 * rho}});
        candidates.push_back({Decision::Class2, DeltaPair{rho, rho}});
        candidates.push_back({Decision::Class1, DeltaPair{0.5 * rho, 0.5 * rho}});
    } else {
        candidates.push_back({Decision::Class2, DeltaPair{rho, rho}});
        candidates.push_back({Decision::Class1, DeltaPair{0.5 * rho, 0.5 * rho}});
    }
    bool have = false;
    Probe best;
    DeltaPair best_deltas{1.0, 1.0};
    double max_i = -kInf, min_hty = kInf;
    for (const auto& cand : candidates) {
        const Probe p = eval_probe(model, cand.deltas.delta1, cand.deltas.delta2);
        max_i = std::max(max_i, p.i);
        min_hty = std::min(min_hty, p.hty);
        if (!have || p.ni > best.ni) {
            have = true;
            best = p;
            best_deltas = cand.deltas;
        }
    }
    sol.deltas = best_deltas;
    sol.regions = regions_from_deltas(model, sol.deltas);
    sol.joint = joint_from_regions(model, sol.regions);
    const NiResult r = ni(sol.joint);
    sol.ni = r.ni;
    sol.h_t_given_y = r.h_t_given_y;
    // Regime-boundary thresholds at the constant overlap posterior.
    const double q1 = u.overlap_posterior1();
    sol.thresholds = RejectThresholds{1.0 - q1, q1};
    sol.searched_max_i = max_i;
    sol.searched_min_h_t_given_y = min_hty;
    return sol;
}

} // namespace

MISolution mi_optimize(const ClassModel& model, bool reject_option, Execution exec) {
    if (const auto* g = std::get_if<GaussianClassModel>(&model))
        return gaussian_mi(model, *g, reject_option, exec);
    return uniform_mi(model, std::get<UniformClassModel>(model), reject_option);
}

namespace {

SweepRow mi_sweep_point(const GaussianClassModel& base, double ratio, Execution exec) {
    const ClassPrior prior(ratio / (1.0 + ratio), 1.0 / (1.0 + ratio));
    const GaussianClassModel m(prior, base.mu1, base.sigma1, base.mu2, base.sigma2);
    const ClassModel model{m};
    MISolution sol = mi_optimize(model, false, exec);
    OutcomeReport outcome = evaluate(model, sol.regions);
    outcome.thresholds = sol.thresholds;
    SweepRow row;
    row.ratio = ratio;
    row.fnr = outcome.e2 / prior.p2;
    row.x_b = sol.regions.boundary_points().empty()
                  ? std::numeric_limits<double>::quiet_NaN()
                  : sol.regions.boundary_points().front();
    row.ni = sol.ni;
    row.h_t_given_y = sol.h_t_given_y;
    row.outcome = std::move(outcome);
    return row;
}

} // namespace

std::vector<SweepRow> mi_imbalance_sweep(const GaussianClassModel& base,
                                         const std::vector<double>& ratios, Execution exec) {
    if (base.sigma1 != base.sigma2)
        throw ConstraintViolation("imbalance sweep requires sigma1 == sigma2");
    const double center = 0.5 * (base.mu1 + base.mu2);
    std::vector<SweepRow> rows;
    rows.reserve(ratios.size());
    for (double ratio : ratios) {
        if (!(ratio > 0.0))
            throw ConstraintViolation("sweep ratios must be positive");
        if (ratio >= 1.0) {
            rows.push_back(mi_sweep_point(base, ratio, exec));
            continue;
        }
        SweepRow mirrored = mi_sweep_point(base, 1.0 / ratio, exec);
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

} // namespace rejectlab
