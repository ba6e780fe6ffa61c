#include "tachyon/verify.hpp"

#include "tachyon/derivation.hpp"
#include "tachyon/fourmomentum.hpp"
#include "tachyon/serialization.hpp"
#include "tachyon/symmetry.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

namespace tachyon {

namespace {

constexpr double kPi = std::numbers::pi;

// Margin kept from the tachyon constraint boundary and from w.V = c^2 when
// sampling, so residuals measure the formulas and not the conditioning.
constexpr double kSamplingMargin = 1e-3;

double relative(double a, double b) { return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)}); }

double relative(const CovariantFourVector& a, const CovariantFourVector& b) {
    const double scale = std::max({1.0, std::abs(a.a0), a.a.norm()});
    return std::max(std::abs(a.a0 - b.a0), (a.a - b.a).norm()) / scale;
}

double event_distance(const SpacetimeEvent& a, const SpacetimeEvent& b, double c) {
    return std::max({std::abs(a.t - b.t) * c, std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

// FNV-1a, so random streams do not depend on the standard library's hash.
std::uint32_t stream_id(const std::string& name) {
    std::uint32_t h = 2166136261u;
    for (unsigned char ch : name) {
        h ^= ch;
        h *= 16777619u;
    }
    return h;
}

class Sampler {
public:
    Sampler(std::uint64_t seed, const std::string& stream, const UnitSystem& units) : units_(units) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          stream_id(stream)};
        rng_.seed(seq);
    }

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin() { return integer(0, 1) == 1; }
    SignChoice sign_choice() { return coin() ? SignChoice::plus : SignChoice::minus; }

    Vec3 unit() {
        Vec3 v;
        do {
            v = Vec3(uniform(-1, 1), uniform(-1, 1), uniform(-1, 1));
        } while (v.squaredNorm() < 1e-4 || v.squaredNorm() > 1.0);
        return v.normalized();
    }

    SpacetimeEvent event() {
        const double c = units_.c;
        return {uniform(-1, 1), c * uniform(-1, 1), c * uniform(-1, 1), c * uniform(-1, 1)};
    }

    Vec3 subluminal(double max_beta = 0.9) { return uniform(0.0, max_beta) * units_.c * unit(); }

    TachyonState tachyon() {
        while (true) {
            TachyonState t;
            t.mu = uniform(0.5, 2.0);
            t.w = uniform(1.05, 5.0) * units_.c * unit();
            t.s = unit();
            t.pseudo = coin();
            if (satisfies_constraint(t.w, t.s, units_, kSamplingMargin))
                return t;
        }
    }

    std::vector<double> phases(int n, double range = kPi) {
        std::vector<double> out(n);
        for (double& p : out)
            p = uniform(-range, range);
        return out;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    const UnitSystem& units_;
    std::mt19937_64 rng_;
};

using Witness = std::function<nlohmann::json()>;

// Accumulates the worst residual of one check with the inputs that produced it.
class Tracker {
public:
    Tracker(std::string name, Comparison cmp, double threshold) {
        result_.check = std::move(name);
        result_.comparison = cmp;
        result_.threshold = threshold;
        result_.max_residual = cmp == Comparison::above ? INFINITY : 0.0;
    }

    Tracker& param(const std::string& key, nlohmann::json value) {
        result_.parameters[key] = std::move(value);
        return *this;
    }

    void observe(double residual, const Witness& witness) {
        ++result_.samples;
        const bool worse = result_.comparison == Comparison::above ? !(residual >= result_.max_residual)
                                                                   : !(residual <= result_.max_residual);
        if (worse)
            result_.max_residual = residual;
        if (worse || result_.witnesses.empty())
            result_.witnesses = nlohmann::json::array({witness()});
    }

    CheckResult done() {
        if (result_.samples == 0)
            result_.max_residual = 0.0;
        return std::move(result_);
    }

private:
    CheckResult result_;
};

nlohmann::json phases_json(std::span<const double> ph) {
    return nlohmann::json(std::vector<double>(ph.begin(), ph.end()));
}

nlohmann::json event_pair(const SpacetimeEvent& a, const SpacetimeEvent& b) {
    return {{"a", to_json(a)}, {"b", to_json(b)}};
}

class SuiteRunner {
public:
    SuiteRunner(const VerifyConfig& cfg, std::vector<CheckResult>& out)
        : cfg_(cfg), units_(cfg.units), c_(cfg.units.c), out_(out) {}

    void kinematics();
    void fourvectors();
    void axioms();
    void derivation_checks();

private:
    Sampler sampler(const std::string& check) const { return Sampler(cfg_.seed, check, units_); }
    void add(Tracker& t) { out_.push_back(t.done()); }

    void fringe_check();

    const VerifyConfig& cfg_;
    const UnitSystem& units_;
    double c_;
    std::vector<CheckResult>& out_;
};

// ---------------------------------------------------------------- kinematics

void SuiteRunner::kinematics() {
    const int N = cfg_.trials;
    const double K = 1.0 / units_.c2();
    {
        Tracker t("interval_subluminal", Comparison::below, 1e-10);
        t.param("max_beta", 0.95);
        auto s = sampler("interval_subluminal");
        for (int i = 0; i < N; ++i) {
            const auto a = s.event(), b = s.event();
            const double before = interval(a, b, units_);
            const Vec3 V = s.subluminal(0.95);
            const double r3 = relative(before, interval(lorentz_boost(a, V, units_), lorentz_boost(b, V, units_), units_));
            const auto boost = GeneralBoost::lorentz(V.x(), units_);
            const double r1 = relative(before, interval(boost_subluminal(a, boost), boost_subluminal(b, boost), units_));
            t.observe(std::max(r1, r3), [&] { return nlohmann::json{{"events", event_pair(a, b)}, {"V", to_json(V)}}; });
        }
        add(t);
    }
    {
        Tracker t("interval_superluminal", Comparison::below, 1e-10);
        t.param("W_over_c", {1.05, 20.0}).param("signs", {"plus", "minus"});
        auto s = sampler("interval_superluminal");
        for (int i = 0; i < N; ++i) {
            const auto a = s.event(), b = s.event();
            const double before = interval(a, b, units_);
            const SignChoice sign = s.sign_choice();
            const double W = (s.coin() ? 1 : -1) * s.uniform(1.05, 20.0) * c_;
            const auto boost = GeneralBoost::superluminal(W, units_, sign);
            const double r1 = relative(before, interval_superluminal(boost_superluminal(a, boost, units_),
                                                                     boost_superluminal(b, boost, units_), units_));
            const Vec3 W3 = s.uniform(1.05, 20.0) * c_ * s.unit();
            const double r3 = relative(before, interval_superluminal(boost_superluminal_3d(a, W3, units_, sign),
                                                                     boost_superluminal_3d(b, W3, units_, sign), units_));
            const double inf = relative(before, interval_superluminal(infinite_boost(a, units_), infinite_boost(b, units_), units_));
            t.observe(std::max({r1, r3, inf}), [&] {
                return nlohmann::json{{"events", event_pair(a, b)}, {"W", W}, {"W3", to_json(W3)},
                                      {"sign", sign == SignChoice::plus ? "plus" : "minus"}};
            });
        }
        add(t);
    }
    {
        Tracker t("round_trip", Comparison::below, 1e-10);
        t.param("K_c2", {-1, 0, 1});
        auto s = sampler("round_trip");
        for (int i = 0; i < N; ++i) {
            const double k = (s.integer(-1, 1)) * K;
            const double V = s.uniform(-0.9, 0.9) * c_;
            const auto e = s.event();
            const auto back = boost_subluminal(boost_subluminal(e, GeneralBoost::subluminal(k, V)),
                                               GeneralBoost::subluminal(k, -V));
            const SignChoice sign = s.sign_choice();
            const auto sup = GeneralBoost::superluminal((s.coin() ? 1 : -1) * s.uniform(1.05, 20.0) * c_, units_, sign);
            const auto back_sup = unboost_superluminal(boost_superluminal(e, sup, units_), sup, units_);
            const double r = std::max(event_distance(back, e, c_), event_distance(back_sup, e, c_)) / c_;
            t.observe(r, [&] { return nlohmann::json{{"event", to_json(e)}, {"K", k}, {"V", V}, {"W", sup.V}}; });
        }
        add(t);
    }
    {
        Tracker t("collinear_composition", Comparison::below, 1e-10);
        auto s = sampler("collinear_composition");
        for (int i = 0; i < N; ++i) {
            const double k = (s.integer(-1, 1)) * K;
            const double V1 = s.uniform(-0.9, 0.9) * c_, V2 = s.uniform(-0.9, 0.9) * c_;
            const auto e = s.event();
            const auto two = boost_subluminal(boost_subluminal(e, GeneralBoost::subluminal(k, V1)),
                                              GeneralBoost::subluminal(k, V2));
            const auto one = boost_subluminal(e, GeneralBoost::subluminal(k, compose_collinear(k, V1, V2)));
            t.observe(event_distance(one, two, c_) / c_,
                      [&] { return nlohmann::json{{"event", to_json(e)}, {"K", k}, {"V1", V1}, {"V2", V2}}; });
        }
        add(t);
    }
    {
        Tracker t("metric_constant", Comparison::below, 1e-10);
        auto s = sampler("metric_constant");
        for (int i = 0; i < N; ++i) {
            const double k = s.uniform(-1, 1) * K;
            const double V = (s.coin() ? 1 : -1) * s.uniform(0.05, 0.9) * c_;
            const double got = metric_constant_from(coefficient_A(k, V), coefficient_A(k, -V), V);
            t.observe(std::abs(got - k) / K, [&] { return nlohmann::json{{"K", k}, {"V", V}}; });
        }
        add(t);
    }
    {
        Tracker t("antisymmetric_branch", Comparison::below, 1e-10);
        auto s = sampler("antisymmetric_branch");
        for (int i = 0; i < N; ++i) {
            const auto e = s.event();
            const double W = s.uniform(1.05, 20.0) * c_;
            const SignChoice sign = s.sign_choice();
            const auto fwd = boost_superluminal(e, GeneralBoost::superluminal(W, units_, sign), units_);
            const auto rev = boost_superluminal({-e.t, e.x, e.y, e.z}, GeneralBoost::superluminal(-W, units_, sign), units_);
            const double r = std::max(std::abs(rev.chi + fwd.chi) / c_, std::abs(rev.tau.x() - fwd.tau.x()));
            t.observe(r, [&] { return nlohmann::json{{"event", to_json(e)}, {"W", W}}; });
        }
        add(t);
    }
    {
        Tracker t("sign_independence", Comparison::below, 1e-10);
        auto s = sampler("sign_independence");
        for (int i = 0; i < N; ++i) {
            const double W1 = (s.coin() ? 1 : -1) * s.uniform(1.1, 8.0) * c_;
            const double W2 = (s.coin() ? 1 : -1) * s.uniform(1.1, 8.0) * c_;
            const SuperluminalCoords x{c_ * s.uniform(-1, 1), Vec3(s.uniform(-1, 1), s.uniform(-1, 1), s.uniform(-1, 1))};
            const auto minus = superluminal_to_superluminal(x, W1, W2, units_, SignChoice::minus);
            const auto plus = superluminal_to_superluminal(x, W1, W2, units_, SignChoice::plus);
            const double u = compose_collinear(1.0 / units_.c2(), -units_.c2() / W1, units_.c2() / W2);
            const auto sub = boost_subluminal({x.tau.x(), x.chi, 0, 0}, GeneralBoost::lorentz(u, units_));
            const double r = std::max({std::abs(minus.chi - plus.chi) / c_, (minus.tau - plus.tau).norm(),
                                       std::abs(minus.chi - sub.x) / c_, std::abs(minus.tau.x() - sub.t)});
            t.observe(r, [&] { return nlohmann::json{{"W1", W1}, {"W2", W2}, {"chi", x.chi}, {"tau", to_json(x.tau)}}; });
        }
        add(t);
    }
    {
        Tracker t("root_two_fixed_point", Comparison::below, 1e-12);
        const double w = std::sqrt(2.0) * c_;
        t.param("w_over_c", std::sqrt(2.0));
        for (SignChoice sign : {SignChoice::minus, SignChoice::plus}) {
            const double dx = superluminal_length(1.0, w, units_, sign);
            const double dt = superluminal_time_flow(1.0, w, units_, sign).dt;
            t.observe(std::max(std::abs(std::abs(dx) - 1.0), std::abs(std::abs(dt) - 1.0)),
                      [&] { return nlohmann::json{{"length", dx}, {"time_flow", dt}}; });
        }
        add(t);
    }
    {
        Tracker t("infinite_boost_example", Comparison::below, 1e-12);
        const SpacetimeEvent e{1, 2, 3, 4};
        const auto out = infinite_boost(e, units_);
        const double r = std::max({std::abs(out.chi - c_), (out.tau - Vec3(2, 3, 4) / c_).norm(),
                                   relative(interval({}, e, units_), interval_superluminal({}, out, units_))});
        t.observe(r, [&] { return nlohmann::json{{"event", to_json(e)}, {"result", to_json(out)}}; });
        add(t);
    }
}

// --------------------------------------------------------------- fourvectors

void SuiteRunner::fourvectors() {
    const int N = cfg_.trials;
    {
        Tracker t("covariance_timelike_massive", Comparison::below, 1e-9);
        auto s = sampler("covariance_timelike_massive");
        for (int i = 0; i < N; ++i) {
            const MassiveState st{s.uniform(0.5, 2.0), s.subluminal()};
            const Vec3 V = s.subluminal();
            const auto lhs = boost_four_vector(four_vector(st, units_), V, units_);
            const auto rhs = four_vector(transform_state(st, V, units_), units_);
            t.observe(relative(lhs, rhs), [&] { return nlohmann::json{{"state", to_json(st)}, {"V", to_json(V)}}; });
        }
        add(t);
    }
    {
        Tracker t("covariance_spacelike_s", Comparison::below, 1e-9);
        auto s = sampler("covariance_spacelike_s");
        for (int i = 0; i < N; ++i) {
            const SpacelikeParams p{s.subluminal(), s.unit()};
            const Vec3 V = s.subluminal();
            const auto lhs = boost_four_vector(four_vector(p, units_), V, units_);
            const auto rhs = four_vector(transform_params(p, V, units_), units_);
            t.observe(relative(lhs, rhs),
                      [&] { return nlohmann::json{{"v", to_json(p.v)}, {"s", to_json(p.s)}, {"V", to_json(V)}}; });
        }
        add(t);
    }
    Tracker sign_rule("helicity_sign_rule", Comparison::exact, 0.0);
    sign_rule.param("rule", "sgn(s'.w') = sgn(s.w) sgn(c^2 - w.V)");
    Tracker constraint("constraint_preserved", Comparison::exact, 0.0);
    for (Family family : {Family::tachyon, Family::tachyon_dual}) {
        const std::string name = std::string("covariance_") + to_string(family);
        Tracker t(name, Comparison::below, 1e-9);
        auto s = sampler(name);
        int skipped = 0, flips = 0;
        for (int i = 0; i < N; ++i) {
            const auto st = s.tachyon();
            const Vec3 V = s.subluminal();
            const double gap = units_.c2() - st.w.dot(V);
            if (std::abs(gap) < kSamplingMargin * units_.c2()) {
                ++skipped;
                continue;
            }
            const auto lhs = boost_four_vector(four_vector(st, family, units_, cfg_.tol), V, units_);
            const auto moved = transform_state(st, V, units_, cfg_.tol);
            const auto rhs = four_vector(moved, family, units_, cfg_.tol);
            const auto witness = [&] { return nlohmann::json{{"state", to_json(st)}, {"V", to_json(V)}}; };
            t.observe(relative(lhs, rhs), witness);

            const auto h = helicity_transform(st, V, units_, cfg_.tol);
            const int expected = st.helicity() * (gap > 0 ? 1 : -1);
            int mismatches = (!h || *h != expected) + (moved.helicity() != expected);
            if (family == Family::tachyon)
                mismatches += (lhs.a0 > 0 ? 1 : -1) != expected;
            flips += gap < 0;
            sign_rule.observe(mismatches, witness);
            constraint.observe(satisfies_constraint(moved.w, moved.s, units_, 0.0) ? 0.0 : 1.0, witness);
        }
        t.param("skipped_near_infinite_velocity", skipped).param("helicity_flips", flips);
        add(t);
    }
    add(sign_rule);
    add(constraint);
    {
        Tracker t("wigner_rotation", Comparison::below, 1e-9);
        auto s = sampler("wigner_rotation");
        for (int i = 0; i < N; ++i) {
            const Vec3 v = s.subluminal(0.95), V = s.subluminal(0.95);
            const Mat3 R = wigner_rotation(v, V, units_);
            const Mat4 L = boost_matrix(transform_velocity(v, V, units_), units_) * boost_matrix(V, units_) *
                           boost_matrix(-v, units_);
            const double r = std::max({(R.transpose() * R - Mat3::Identity()).norm(), std::abs(R.determinant() - 1.0),
                                       std::abs(L(0, 0) - 1.0), L.row(0).tail<3>().norm(),
                                       (L.block<3, 3>(1, 1) - R).norm()});
            t.observe(r, [&] { return nlohmann::json{{"v", to_json(v)}, {"V", to_json(V)}}; });
        }
        add(t);
    }
    {
        Tracker t("infinite_velocity_frame", Comparison::below, 1e-10);
        auto s = sampler("infinite_velocity_frame");
        for (int i = 0; i < N; ++i) {
            const auto st = s.tachyon();
            const Vec3 V = infinite_velocity_frame(st, units_, cfg_.tol);
            const double r = std::abs(st.w.dot(V) - units_.c2()) / units_.c2() + (V.norm() < c_ ? 0.0 : 1.0);
            t.observe(r, [&] { return nlohmann::json{{"state", to_json(st)}, {"V", to_json(V)}}; });
        }
        add(t);
    }
    {
        Tracker t("infinite_velocity_frame_example", Comparison::below, 1e-12);
        TachyonState st;
        st.w = Vec3(2 * c_, 0, 0);
        st.s = Vec3::UnitX();
        const Vec3 V = infinite_velocity_frame(st, units_, cfg_.tol);
        t.observe((V - Vec3(c_ / 2, 0, 0)).norm() / c_, [&] { return nlohmann::json{{"state", to_json(st)}, {"V", to_json(V)}}; });
        add(t);
    }
    const Process decay = unique_decay_process(1.0, 1.0, Vec3::UnitX(), units_);
    const auto process_witness = [&] { return nlohmann::json{{"m", 1.0}, {"mu", 1.0}}; };
    {
        Tracker t("unique_decay_conservation", Comparison::below, 1e-10);
        const auto res = conservation_residual(decay, units_);
        const auto tach = energy_momentum(std::get<TachyonState>(decay[2].state), units_);
        const UniqueDecay d = solve_unique_decay(1.0, 1.0, units_);
        const double r = std::max({res.total() / units_.c2(), std::abs(tach.p.norm() - c_) / c_, std::abs(tach.E),
                                   std::abs(d.speed - unique_decay_speed_closed_form(1.0, 1.0, units_)) / c_});
        t.param("speed", d.speed);
        t.observe(r, process_witness);
        add(t);
    }
    {
        Tracker t("parity_violation", Comparison::above, 0.1);
        t.param("rules", "helicity-like");
        const auto p = apply_discrete_symmetry(decay, DiscreteOp::P, SymmetryRuleSet::helicity_like());
        t.observe(conservation_residual(p, units_).total() / c_, process_witness);
        add(t);
    }
    {
        Tracker t("time_reversal_conservation", Comparison::below, 1e-10);
        t.param("rules", "helicity-like");
        const auto p = apply_discrete_symmetry(decay, DiscreteOp::T, SymmetryRuleSet::helicity_like());
        t.observe(conservation_residual(p, units_).total() / units_.c2(), process_witness);
        add(t);
    }
    {
        Tracker t("cpt_conservation", Comparison::below, 1e-10);
        t.param("rules", {"helicity-like", "alternative"});
        for (const auto& rules : {SymmetryRuleSet::helicity_like(), SymmetryRuleSet::alternative()}) {
            const auto p = apply_discrete_symmetry(decay, DiscreteOp::CPT, rules);
            t.observe(conservation_residual(p, units_).total() / units_.c2(), process_witness);
        }
        add(t);
    }
}

// -------------------------------------------------------------------- axioms

void SuiteRunner::axioms() {
    const InvariantParams params{cfg_.alpha, cfg_.A_exp};
    Tracker sym("symmetry", Comparison::below, 1e-10);
    Tracker inv("inversion", Comparison::below, 1e-10);
    Tracker comp("composition", Comparison::below, 1e-10);
    Tracker norm("normalization", Comparison::below, 1e-10);
    for (Tracker* t : {&sym, &inv, &comp, &norm})
        t->param("A_exp", cfg_.A_exp).param("alpha", {cfg_.alpha.real(), cfg_.alpha.imag()}).param("max_nm", 64);
    auto s = sampler("axioms");
    for (int n = 1; n <= 64; ++n) {
        for (int m = 1; n * m <= 64; ++m) {
            std::mt19937_64 rng(s.engine()());
            const AxiomReport rep = check_axioms(params, n, m, cfg_.trials, rng);
            for (const auto& ax : rep.axioms) {
                Tracker* t = ax.axiom == "symmetry"      ? &sym
                             : ax.axiom == "inversion"   ? &inv
                             : ax.axiom == "composition" ? &comp
                                                         : &norm;
                t->observe(ax.max_residual, [&] {
                    return nlohmann::json{{"n", n}, {"m", m}, {"phi", ax.witness_phi}, {"xi", ax.witness_xi}};
                });
            }
        }
    }
    add(sym);
    add(inv);
    add(comp);
    add(norm);

    {
        Tracker t("frame_shift", Comparison::below, 1e-10);
        auto fs = sampler("frame_shift");
        for (int i = 0; i < cfg_.trials; ++i) {
            const double p1 = fs.uniform(-10, 10), p2 = fs.uniform(-10, 10), d = fs.uniform(-10, 10);
            t.observe(frame_shift_check(p1, p2, d, params),
                      [&] { return nlohmann::json{{"phi1", p1}, {"phi2", p2}, {"delta", d}}; });
        }
        add(t);
    }
    {
        Tracker t("amplitude_identity", Comparison::below, 1e-10);
        t.param("relation", "P(alpha=i) = n^(2-A) |<B|A>|^2");
        auto as = sampler("amplitude_identity");
        for (int i = 0; i < cfg_.trials; ++i) {
            const auto ph = as.phases(as.integer(1, 16), 10.0);
            const double n = static_cast<double>(ph.size());
            const double P = invariant_P(ph, {Complex(0, 1), cfg_.A_exp});
            const double amp = std::norm(amplitude(ph)) * std::pow(n, 2.0 - cfg_.A_exp);
            t.observe(relative(P, amp), [&] { return nlohmann::json{{"phases", phases_json(ph)}}; });
        }
        add(t);
    }
    {
        Tracker t("nonseparability", Comparison::above, 0.1);
        const auto fit = nonseparability_witness();
        t.param("fit", {{"f0", fit.f0}, {"fpi", fit.fpi}});
        t.observe(fit.residual, [] { return nlohmann::json{{"points", {{0, 0}, {0, kPi}, {kPi, kPi}}}}; });
        add(t);
    }
    fringe_check();
}

void SuiteRunner::fringe_check() {
    Tracker t("two_path_fringe", Comparison::below, 1e-10);
    const MirrorGeometry mirror;
    t.param("geometry", {{"mass", mirror.mass}, {"duration", mirror.duration}}).param("points", 1000);
    const auto scan = interference_scan([&](double dphi) { return mirror(mirror.offset_for(dphi, units_), units_); },
                                        0.0, 2 * kPi, 1000, units_);
    for (const auto& pt : scan)
        t.observe(std::abs(pt.P - 0.5 * (1 + std::cos(pt.param))),
                  [&] { return nlohmann::json{{"delta_phi", pt.param}, {"P", pt.P}}; });
    const double at_pi = interference_scan([&](double d) { return mirror(mirror.offset_for(d, units_), units_); },
                                           kPi, kPi, 1, units_)[0].P;
    t.observe(std::abs(at_pi), [&] { return nlohmann::json{{"delta_phi", kPi}, {"P", at_pi}}; });
    add(t);
}

// ----------------------------------------------------------------- appendixB

void SuiteRunner::derivation_checks() {
    {
        Tracker t("newton_identity_exhaustive", Comparison::exact, 0.0);
        t.param("grid", {-2, 2}).param("max_size", 5).param("max_t", 8);
        std::vector<std::vector<std::int64_t>> sets;
        std::vector<std::int64_t> cur;
        const std::function<void(int)> grow = [&](int len) {
            if (static_cast<int>(cur.size()) == len) {
                sets.push_back(cur);
                return;
            }
            for (std::int64_t v = cur.empty() ? -2 : cur.back(); v <= 2; ++v) {
                cur.push_back(v);
                grow(len);
                cur.pop_back();
            }
        };
        for (int len = 1; len <= 5; ++len)
            grow(len);
        for (const auto& phi : sets)
            for (const auto& xi : sets)
                for (unsigned tt = 0; tt <= 8; ++tt) {
                    const auto r = newton_identity_residual<std::int64_t>(tt, phi, xi);
                    t.observe(static_cast<double>(std::abs(r)),
                              [&] { return nlohmann::json{{"t", tt}, {"phi", phi}, {"xi", xi}}; });
                }
        add(t);
    }
    {
        Tracker t("newton_identity_random", Comparison::exact, 0.0);
        t.param("arithmetic", "arbitrary precision").param("magnitude", 1000000).param("max_t", 12);
        auto s = sampler("newton_identity_random");
        for (int i = 0; i < cfg_.trials; ++i) {
            std::vector<BigInt> phi(s.integer(1, 6)), xi(s.integer(1, 6));
            for (auto& p : phi)
                p = s.integer(-1000000, 1000000);
            for (auto& x : xi)
                x = s.integer(-1000000, 1000000);
            const unsigned tt = s.integer(0, 12);
            const BigInt r = newton_identity_residual<BigInt>(tt, phi, xi);
            t.observe(r == 0 ? 0.0 : 1.0, [&] {
                nlohmann::json w{{"t", tt}, {"phi", nlohmann::json::array()}, {"xi", nlohmann::json::array()}};
                for (const auto& p : phi)
                    w["phi"].push_back(p.str());
                for (const auto& x : xi)
                    w["xi"].push_back(x.str());
                return w;
            });
        }
        add(t);
    }
    {
        Tracker t("cauchy_exact", Comparison::exact, 0.0);
        t.param("alpha", {"1", "-3/7", "5/2"}).param("A_exp", {1, 2, 3}).param("max_order", 10).param("max_size", 4);
        for (const Rational& alpha : {Rational(1), Rational(-3, 7), Rational(5, 2)})
            for (int A : {1, 2, 3})
                for (int k = 0; k <= 10; ++k)
                    for (int sk = 0; sk <= 10; ++sk)
                        for (int n = 1; n <= 4; n += 3)
                            for (int m = 1; m <= 4; ++m) {
                                const Rational r = cauchy_solution_residual_exact(alpha, A, k, sk, n, m);
                                t.observe(r == 0 ? 0.0 : std::max(std::abs(r.convert_to<double>()), std::numeric_limits<double>::min()), [&] {
                                    return nlohmann::json{{"alpha", alpha.str()}, {"A_exp", A}, {"k", k},
                                                          {"s", sk}, {"n", n}, {"m", m}};
                                });
                            }
        add(t);
    }
    const CoefficientFamily family{cfg_.A_exp, cfg_.alpha, 30, 0.0};
    {
        Tracker t("cauchy_solution", Comparison::below, 1e-12);
        t.param("A_exp", cfg_.A_exp).param("alpha", {cfg_.alpha.real(), cfg_.alpha.imag()}).param("max_order", 10);
        CoefficientFamily perturbed = family;
        perturbed.perturbation = 1e-6;
        Tracker power("cauchy_perturbation_detected", Comparison::above, 0.0);
        power.param("perturbation", 1e-6).param("max_order", 10);
        for (int k = 0; k <= 10; ++k)
            for (int sk = 0; sk <= 10; ++sk)
                for (int n = 1; n <= 4; ++n)
                    for (int m = 1; m <= 4; ++m) {
                        const auto w = [&] { return nlohmann::json{{"k", k}, {"s", sk}, {"n", n}, {"m", m}}; };
                        t.observe(cauchy_solution_check(family, k, sk, n, m), w);
                        if (k + sk > 0)
                            power.observe(cauchy_solution_check(perturbed, k, sk, n, m), w);
                    }
        add(t);
        add(power);
    }
    {
        Tracker t("truncated_reconstruction", Comparison::below, 1e-10);
        t.param("K", family.max_order).param("phase_range", {-kPi, kPi});
        auto s = sampler("truncated_reconstruction");
        for (int i = 0; i < cfg_.trials; ++i) {
            const auto ph = s.phases(s.integer(1, 10));
            const Complex got = truncated_reconstruction(ph, family);
            const Complex want = invariant_value(ph, {cfg_.alpha, cfg_.A_exp});
            t.observe(relative_residual(got, want), [&] { return nlohmann::json{{"phases", phases_json(ph)}}; });
        }
        add(t);
    }
    {
        Tracker t("product_closure", Comparison::below, 1e-10);
        t.param("alphas", "(i, -i, 2i, -2i) and random pairs");
        auto s = sampler("product_closure");
        for (int i = 0; i < std::max(1, cfg_.trials / 10); ++i) {
            ProductSolution sol;
            if (i == 0) {
                sol.alphas = {Complex(0, 1), Complex(0, -1), Complex(0, 2), Complex(0, -2)};
            } else {
                for (int j = s.integer(1, 3); j > 0; --j) {
                    const Complex a(0, s.uniform(0.2, 2.0));
                    sol.alphas.push_back(a);
                    sol.alphas.push_back(-a);
                }
            }
            sol.A_exp = static_cast<double>(sol.alphas.size());
            const int n = i == 0 ? 2 : s.integer(1, 4), m = i == 0 ? 2 : s.integer(1, 4);
            std::mt19937_64 rng(s.engine()());
            const AxiomReport rep = product_closure_check(sol, n, m, 10, rng);
            for (const auto& ax : rep.axioms)
                t.observe(ax.max_residual, [&] {
                    nlohmann::json alphas = nlohmann::json::array();
                    for (const auto& a : sol.alphas)
                        alphas.push_back({a.real(), a.imag()});
                    return nlohmann::json{{"axiom", ax.axiom}, {"alphas", alphas}, {"n", n}, {"m", m},
                                          {"phi", ax.witness_phi}, {"xi", ax.witness_xi}};
                });
        }
        add(t);
    }
    {
        Tracker t("unpaired_inversion_witness", Comparison::above, 0.1);
        const ProductSolution sol{{Complex(0, 1)}, 1.0};
        const std::vector<double> phi{0.0, 1.0}, neg{0.0, -1.0};
        t.param("alphas", {{0.0, 1.0}});
        t.observe(relative_residual(sol(phi), sol(neg)), [&] { return nlohmann::json{{"phi", phi}}; });
        add(t);
    }
    {
        Tracker t("multi_index_cauchy", Comparison::below, 1e-12);
        t.param("max_factors", 3).param("max_nm", 16).param("max_order", 4);
        auto s = sampler("multi_index_cauchy");
        for (int i = 0; i < cfg_.trials; ++i) {
            const int N = 1 + i % 3;
            std::vector<Complex> alphas(N);
            for (auto& a : alphas)
                a = Complex(s.uniform(-1.5, 1.5), s.uniform(-1.5, 1.5));
            std::vector<int> ks(N), ss(N);
            for (int& k : ks)
                k = s.integer(0, 4);
            for (int& v : ss)
                v = s.integer(0, 4);
            const int n = s.integer(1, 4), m = s.integer(1, 16 / n);
            t.observe(multi_index_cauchy_check(alphas, cfg_.A_exp, ks, ss, n, m),
                      [&] { return nlohmann::json{{"N", N}, {"k", ks}, {"s", ss}, {"n", n}, {"m", m}}; });
        }
        add(t);
    }
}

} // namespace

bool CheckResult::passed() const {
    switch (comparison) {
    case Comparison::below: return max_residual < threshold;
    case Comparison::above: return max_residual > threshold;
    case Comparison::exact: return max_residual == 0.0;
    }
    return false;
}

bool VerifyReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

const char* to_string(Comparison c) {
    switch (c) {
    case Comparison::below: return "below";
    case Comparison::above: return "above";
    case Comparison::exact: return "exact";
    }
    return "?";
}

nlohmann::json VerifyReport::to_json() const {
    nlohmann::json checks_json = nlohmann::json::array();
    for (const auto& c : checks) {
        checks_json.push_back({{"check", c.check},
                               {"parameters", c.parameters},
                               {"comparison", tachyon::to_string(c.comparison)},
                               {"max_residual", c.max_residual},
                               {"threshold", c.threshold},
                               {"samples", c.samples},
                               {"passed", c.passed()},
                               {"witnesses", c.passed() ? nlohmann::json::array() : c.witnesses}});
    }
    nlohmann::json out{{"suite", suite}, {"seed", seed}, {"trials", trials}, {"passed", passed()}, {"checks", checks_json}};
    if (expect_fail)
        out["expected_failure"] = {{"requested", true}, {"observed", !passed()}};
    return out;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"kinematics", "fourvectors", "axioms", "appendixB", "all"};
    return names;
}

VerifyReport run_suite(const std::string& suite, const VerifyConfig& config) {
    if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
        throw std::invalid_argument("unknown suite '" + suite + "'");
    if (config.trials < 0)
        throw std::invalid_argument("trials must be non-negative");
    if (!(config.tol > 0.0))
        throw std::invalid_argument("tolerance must be positive");
    VerifyReport report;
    report.suite = suite;
    report.seed = config.seed;
    report.trials = config.trials;
    report.expect_fail = config.expect_fail;
    if (config.trials == 0)
        return report;
    SuiteRunner runner(config, report.checks);
    const bool all = suite == "all";
    if (all || suite == "kinematics")
        runner.kinematics();
    if (all || suite == "fourvectors")
        runner.fourvectors();
    if (all || suite == "axioms")
        runner.axioms();
    if (all || suite == "appendixB")
        runner.derivation_checks();
    return report;
}

} // namespace tachyon
