// Command-line front end: frame transforms, four-momenta, path amplitudes,
// fringe scans and the verification suites.
//
// Exit codes: 0 ok, 1 malformed input, 2 regime or constraint violation,
// 3 enumeration cap exceeded, 4 verification failure.

#include "tachyon/fourmomentum.hpp"
#include "tachyon/lattice.hpp"
#include "tachyon/serialization.hpp"
#include "tachyon/verify.hpp"

#include <CLI11.hpp>
#include <fmt/core.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

using namespace tachyon;

namespace {

enum ExitCode { kOk = 0, kParse = 1, kRegime = 2, kCap = 3, kVerify = 4 };

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    double c = 1.0;
    double hbar = 1.0;
    double tol = kDefaultTolerance;
    std::string sign = "minus";

    UnitSystem units() const { return UnitSystem(c, hbar); }
    SignChoice sign_choice() const { return sign == "plus" ? SignChoice::plus : SignChoice::minus; }
};

// "0.6", "0.6c", "0.3c,0.2c,0" (a bare scalar lies along x).
Vec3 parse_velocity(const std::string& text, double c) {
    std::vector<double> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto first = item.find_first_not_of(" \t");
        const auto last = item.find_last_not_of(" \t");
        if (first == std::string::npos)
            throw ParseError("empty velocity component in '" + text + "'");
        item = item.substr(first, last - first + 1);
        double scale = 1.0;
        if (item.back() == 'c') {
            scale = c;
            item.pop_back();
        }
        std::size_t used = 0;
        double value = 0.0;
        try {
            value = std::stod(item, &used);
        } catch (const std::exception&) {
            throw ParseError("cannot parse velocity '" + text + "'");
        }
        if (used != item.size() || !std::isfinite(value))
            throw ParseError("cannot parse velocity '" + text + "'");
        parts.push_back(value * scale);
    }
    if (parts.size() == 1)
        return {parts[0], 0.0, 0.0};
    if (parts.size() == 3)
        return {parts[0], parts[1], parts[2]};
    throw ParseError("velocity must have 1 or 3 components: '" + text + "'");
}

bool is_collinear(const std::string& text) { return text.find(',') == std::string::npos; }

json read_json(const std::string& inline_text, const std::string& path) {
    std::string text;
    if (!inline_text.empty()) {
        text = inline_text;
    } else if (!path.empty() && path != "-") {
        std::ifstream in(path);
        if (!in)
            throw ParseError("cannot open '" + path + "'");
        text.assign(std::istreambuf_iterator<char>(in), {});
    } else {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    }
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

// ---------------------------------------------------------------- transform

struct TransformArgs {
    std::string event, in, V, W;
    bool infinite = false;
    std::optional<double> K;
};

int cmd_transform(const Globals& g, const TransformArgs& a) {
    const int chosen = !a.V.empty() + !a.W.empty() + a.infinite;
    if (chosen != 1)
        throw ParseError("transform: give exactly one of --V, --W, --infinite");
    const UnitSystem units = g.units();
    SpacetimeEvent e;
    try {
        e = event_from_json(read_json(a.event, a.in));
    } catch (const json::exception& ex) {
        throw ParseError(ex.what());
    } catch (const std::invalid_argument& ex) {
        throw ParseError(ex.what());
    }
    json out{{"input", to_json(e)}, {"interval_before", interval({}, e, units)}};
    if (!a.V.empty()) {
        const Vec3 V = parse_velocity(a.V, units.c);
        SpacetimeEvent r;
        if (is_collinear(a.V)) {
            const double K = a.K.value_or(1.0 / units.c2());
            r = boost_subluminal(e, GeneralBoost::subluminal(K, V.x()));
            out["K"] = K;
        } else {
            if (!(V.squaredNorm() < units.c2()))
                throw RegimeError("transform: |V| must be below c");
            r = lorentz_boost(e, V, units);
        }
        out["regime"] = "subluminal";
        out["V"] = to_json(V);
        out["output"] = to_json(r);
        out["interval_after"] = interval({}, r, units);
    } else {
        SuperluminalCoords r;
        if (a.infinite) {
            r = infinite_boost(e, units);
            out["regime"] = "infinite";
        } else {
            const Vec3 W = parse_velocity(a.W, units.c);
            r = is_collinear(a.W) ? boost_superluminal(e, GeneralBoost::superluminal(W.x(), units, g.sign_choice()), units)
                                  : boost_superluminal_3d(e, W, units, g.sign_choice());
            out["regime"] = "superluminal";
            out["W"] = to_json(W);
            out["sign"] = g.sign;
        }
        out["output"] = to_json(r);
        out["interval_after"] = interval_superluminal({}, r, units);
    }
    emit(out);
    return kOk;
}

// ----------------------------------------------------------------- momentum

struct MomentumArgs {
    std::string state, in, boost;
};

int cmd_momentum(const Globals& g, const MomentumArgs& a) {
    const UnitSystem units = g.units();
    std::variant<MassiveState, TachyonState> state;
    try {
        state = state_from_json(read_json(a.state, a.in));
    } catch (const json::exception& ex) {
        throw ParseError(ex.what());
    } catch (const std::invalid_argument& ex) {
        throw ParseError(ex.what());
    }
    std::optional<Vec3> V;
    if (!a.boost.empty())
        V = parse_velocity(a.boost, units.c);

    json out;
    if (const auto* m = std::get_if<MassiveState>(&state)) {
        const auto em = energy_momentum(*m, units);
        out = {{"state", to_json(*m)}, {"E", em.E}, {"p", to_json(em.p)}, {"four_vector", to_json(four_vector(*m, units))}};
        if (V) {
            const auto moved = transform_state(*m, *V, units);
            const auto em2 = energy_momentum(moved, units);
            out["boost"] = {{"V", to_json(*V)}, {"state", to_json(moved)}, {"E", em2.E}, {"p", to_json(em2.p)}};
        }
    } else {
        const auto& t = std::get<TachyonState>(state);
        validate(t, units, g.tol);
        const auto em = energy_momentum(t, units);
        out = {{"state", to_json(t)},
               {"E", em.E},
               {"p", to_json(em.p)},
               {"helicity", t.helicity()},
               {"four_vector", to_json(four_vector(t, Family::tachyon, units, g.tol))}};
        out["infinite_velocity_frame"] =
            t.infinite_speed ? json(nullptr) : to_json(infinite_velocity_frame(t, units, g.tol));
        if (V) {
            json b{{"V", to_json(*V)}};
            const auto h = helicity_transform(t, *V, units, g.tol);
            if (!h) {
                b["infinite_velocity"] = true;
                b["anti_tachyon"] = nullptr;
            } else {
                b["infinite_velocity"] = false;
                b["helicity"] = *h;
                b["anti_tachyon"] = *h != t.helicity();
                const auto moved = transform_state(t, *V, units, g.tol);
                const auto em2 = energy_momentum(moved, units);
                b["state"] = to_json(moved);
                b["E"] = em2.E;
                b["p"] = to_json(em2.p);
            }
            out["boost"] = b;
        }
    }
    emit(out);
    return kOk;
}

// ---------------------------------------------------------------- amplitude

struct AmplitudeArgs {
    std::string ensemble, in;
    bool lattice = false;
    bool transfer = false;
    int steps = 2;
    int displacement = 0;
    double dt = 1.0, dx = 0.5, mass = 1.0;
    std::string moves = "-1,1";
    std::uint64_t cap = 1'000'000;
    double origin_t = 0.0, origin_x = 0.0;
};

std::vector<int> parse_moves(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size())
                throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ParseError("cannot parse moves '" + text + "'");
        }
    }
    return out;
}

json amplitude_json(Complex amp, double P, std::uint64_t n) {
    return {{"amplitude", {{"re", amp.real()}, {"im", amp.imag()}}}, {"P", P}, {"n", n}};
}

int cmd_amplitude(const Globals& g, const AmplitudeArgs& a) {
    const UnitSystem units = g.units();
    if (a.lattice) {
        LatticeSpec spec;
        spec.origin = {a.origin_t, a.origin_x, 0, 0};
        spec.steps = a.steps;
        spec.displacement = a.displacement;
        spec.dt = a.dt;
        spec.dx = a.dx;
        spec.mass = a.mass;
        spec.moves = parse_moves(a.moves);
        spec.enumeration_cap = a.cap;
        try {
            spec.validate(units);
        } catch (const std::invalid_argument& ex) {
            throw ParseError(ex.what());
        }
        const LatticeSum sum = a.transfer ? lattice_path_sum_transfer(spec, units) : lattice_path_sum(spec, units);
        json out = amplitude_json(sum.amplitude, sum.P, sum.paths);
        out["method"] = a.transfer ? "transfer" : "enumerate";
        out["sink"] = to_json(spec.sink());
        emit(out);
        return kOk;
    }
    PathEnsemble ens;
    try {
        ens = ensemble_from_json(read_json(a.ensemble, a.in));
    } catch (const json::exception& ex) {
        throw ParseError(ex.what());
    } catch (const std::invalid_argument& ex) {
        throw ParseError(ex.what());
    }
    const auto ph = phases(ens, units);
    json out = amplitude_json(amplitude(ph), invariant_P(ph), ph.size());
    out["phases"] = ph;
    emit(out);
    return kOk;
}

// --------------------------------------------------------------------- scan

struct ScanArgs {
    std::string param = "phase";
    double from = 0.0;
    double to = 2 * std::numbers::pi;
    int points = 1000;
    double mass = 1.0, duration = 10.0;
    std::string out;
};

int cmd_scan(const Globals& g, const ScanArgs& a) {
    const UnitSystem units = g.units();
    const MirrorGeometry mirror{a.mass, a.duration};
    if (a.points < 1)
        throw ParseError("scan: --points must be positive");
    std::vector<ScanPoint> rows;
    try {
        if (a.param == "phase")
            rows = interference_scan([&](double d) { return mirror(mirror.offset_for(d, units), units); }, a.from, a.to,
                                     a.points, units);
        else
            rows = interference_scan([&](double d) { return mirror(d, units); }, a.from, a.to, a.points, units);
    } catch (const std::invalid_argument& ex) {
        throw ParseError(ex.what());
    }
    std::string csv = "param,P\n";
    for (const auto& r : rows)
        csv += fmt::format("{:.17g},{:.17g}\n", r.param, r.P);
    if (a.out.empty() || a.out == "-") {
        std::cout << csv;
    } else {
        std::ofstream f(a.out);
        if (!f)
            throw ParseError("cannot write '" + a.out + "'");
        f << csv;
    }
    return kOk;
}

// ------------------------------------------------------------------- verify

struct VerifyArgs {
    std::string suite = "all";
    int trials = 100;
    std::uint64_t seed = 7;
    double A_exp = 2.0;
    std::string out;
    bool expect_fail = false;
};

int cmd_verify(const Globals& g, const VerifyArgs& a) {
    VerifyConfig cfg;
    cfg.units = g.units();
    cfg.tol = g.tol;
    cfg.seed = a.seed;
    cfg.trials = a.trials;
    cfg.sign = g.sign_choice();
    cfg.A_exp = a.A_exp;
    cfg.expect_fail = a.expect_fail;
    VerifyReport report;
    try {
        report = run_suite(a.suite, cfg);
    } catch (const std::invalid_argument& ex) {
        throw ParseError(ex.what());
    }
    const std::string text = report.to_json().dump(2) + "\n";
    if (a.out.empty() || a.out == "-") {
        std::cout << text;
    } else {
        std::ofstream f(a.out);
        if (!f)
            throw ParseError("cannot write '" + a.out + "'");
        f << text;
    }
    return report.passed() ? kOk : kVerify;
}

constexpr const char* kTransformHelp = R"(
Subluminal (collinear, metric constant K, default 1/c^2):
  x' = A(V)(x - V t),  t' = A(V)(t - K V x),  A(V) = 1/sqrt(1 - K V^2),  y' = y, z' = z
  A comma-separated --V is a full 3D Lorentz boost.
Superluminal (|W| > c, sign s = -1 for minus, +1 for plus):
  chi = s sgn(W)(x - W t)/sqrt(W^2/c^2 - 1),  tau_x = s sgn(W)(t - W x/c^2)/sqrt(W^2/c^2 - 1)
  tau_y = y/c, tau_z = z/c.  A comma-separated --W boosts by c^2 W/|W|^2 and then applies
  the infinite map.
Infinite velocity:  chi = c t,  tau = r/c.
Intervals:  c^2 t^2 - r^2 before,  chi^2 - c^2 tau^2 after (measured from the origin).
Velocities accept a trailing 'c' (0.6c). The event is read from --event, --in or stdin.)";

constexpr const char* kMomentumHelp = R"(
Massive:   E = m c^2 gamma,  p = m gamma v.
Tachyon:   E = mu c^2 h/sqrt(w^2/c^2 - 1),  p = mu h w/sqrt(w^2/c^2 - 1),  h = sgn(s.w).
           Valid states need |w| > c and w^2 - c^2 < (s.w)^2.  With "infinite": true,
           E = 0 and p = mu c h w/|w|.
Boost V:   w' follows the relativistic velocity addition law and
           h' = h sgn(c^2 - w.V): the tachyon turns into an anti-tachyon when w.V > c^2 and
           moves infinitely fast when w.V = c^2.
Infinite-velocity frame:
           V = c^2 (w - h sqrt(w^2 - c^2) s)/(w^2 - |s.w| sqrt(w^2 - c^2)),  w.V = c^2.)";

constexpr const char* kAmplitudeHelp = R"(
Phase of a path:   phi = (1/hbar) sum over segments (E dt - p.dr).
Amplitude:         <B|A> = (1/n) sum_k exp(i phi_k).
Invariant:         P = n^-2 (sum exp(i phi_k))(sum exp(-i phi_k)) = |<B|A>|^2.
Lattice segments carry the massive energy-momentum of their slope, so each phase is
m c^2 (proper time)/hbar.  Enumeration order is depth first with moves in the listed order.)";

constexpr const char* kScanHelp = R"(
Two paths from (0,0) to (T,0): one at rest, one reflected at (T/2, d).
Phase difference  dphi = m c^2 (T - 2 sqrt(T^2/4 - d^2/c^2))/hbar,  P = (1 + cos dphi)/2.
--param phase sweeps dphi directly, --param offset sweeps d.  Output is CSV "param,P".)";

constexpr const char* kVerifyHelp = R"(
Suites: kinematics (interval preservation, round trips, composition, sign conventions),
fourvectors (covariance of all four families, sign rule, Wigner rotation, infinite-velocity
frame, unique decay and discrete symmetries), axioms (symmetry, inversion, composition,
identical-phase normalization P(phi,...,phi) = P(phi) which needs A = 2, frame shift,
two-path fringe), appendixB (power-sum binomial identity, Cauchy coefficient equation
k! s! a(n)_k a(m)_s = (k+s)! a(nm)_{k+s} with a(n)_k = n^-A alpha^k/k!, truncated series,
product closure).  Exit 4 on any violated check.)";

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Frame transformations, tachyon four-momenta and path amplitudes"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--c", g.c, "Speed of light")->check(CLI::PositiveNumber);
    app.add_option("--hbar", g.hbar, "Action quantum")->check(CLI::PositiveNumber);
    app.add_option("--tol", g.tol, "Library tolerance")->envname("TACHYON_TOL")->check(CLI::PositiveNumber);
    app.add_option("--sign", g.sign, "Superluminal sign convention")->check(CLI::IsMember({"plus", "minus"}));

    TransformArgs ta;
    auto* transform = app.add_subcommand("transform", "Transform an event into another frame");
    transform->footer(kTransformHelp);
    transform->add_option("--event", ta.event, "Event JSON {\"t\",\"x\",\"y\",\"z\"}");
    transform->add_option("--in", ta.in, "Read the event from a file");
    transform->add_option("--V", ta.V, "Subluminal frame velocity");
    transform->add_option("--W", ta.W, "Superluminal frame velocity");
    transform->add_flag("--infinite", ta.infinite, "Frame moving infinitely fast");
    transform->add_option("--K", ta.K, "Metric constant for collinear --V");

    MomentumArgs ma;
    auto* momentum = app.add_subcommand("momentum", "Energy-momentum of a massive or tachyonic state");
    momentum->footer(kMomentumHelp);
    momentum->add_option("--state", ma.state, "State JSON {\"mu\",\"w\",\"s\",\"pseudo\"} or {\"m\",\"v\"}");
    momentum->add_option("--in", ma.in, "Read the state from a file");
    momentum->add_option("--boost", ma.boost, "Frame velocity");

    AmplitudeArgs aa;
    auto* amp = app.add_subcommand("amplitude", "Amplitude <B|A> of a path ensemble or lattice");
    amp->footer(kAmplitudeHelp);
    amp->add_option("--ensemble", aa.ensemble, "Ensemble JSON");
    amp->add_option("--in", aa.in, "Read the ensemble from a file");
    amp->add_flag("--lattice", aa.lattice, "Sum over lattice paths instead");
    amp->add_flag("--transfer", aa.transfer, "Use the transfer-matrix evaluation");
    amp->add_option("--steps", aa.steps, "Lattice time steps");
    amp->add_option("--displacement", aa.displacement, "Net displacement in units of dx");
    amp->add_option("--dt", aa.dt, "Lattice time spacing");
    amp->add_option("--dx", aa.dx, "Lattice space spacing");
    amp->add_option("--mass", aa.mass, "Particle mass");
    amp->add_option("--moves", aa.moves, "Allowed moves per step, e.g. -1,0,1");
    amp->add_option("--cap", aa.cap, "Enumeration cap");
    amp->add_option("--origin-t", aa.origin_t, "Lattice origin time");
    amp->add_option("--origin-x", aa.origin_x, "Lattice origin position");

    ScanArgs sa;
    auto* scan = app.add_subcommand("scan", "Two-path interference fringe as CSV");
    scan->footer(kScanHelp);
    scan->add_option("--param", sa.param, "Swept parameter")->check(CLI::IsMember({"phase", "offset"}));
    scan->add_option("--from", sa.from, "Start of the sweep");
    scan->add_option("--to", sa.to, "End of the sweep");
    scan->add_option("--points", sa.points, "Number of points");
    scan->add_option("--mass", sa.mass, "Particle mass");
    scan->add_option("--duration", sa.duration, "Source-sink time separation");
    scan->add_option("--out", sa.out, "CSV output file");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Run the property suites");
    verify->footer(kVerifyHelp);
    verify->add_option("--suite", va.suite, "kinematics|fourvectors|axioms|appendixB|all")
        ->check(CLI::IsMember(suite_names()));
    verify->add_option("--trials", va.trials, "Random trials per check")->check(CLI::NonNegativeNumber);
    verify->add_option("--seed", va.seed, "Random seed");
    verify->add_option("--A-exp", va.A_exp, "Normalization exponent of the invariant");
    verify->add_flag("--expect-fail", va.expect_fail, "Mark the report as an intended failure");
    verify->add_option("--out", va.out, "Write the report to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kParse;
    }

    try {
        if (*transform)
            return cmd_transform(g, ta);
        if (*momentum)
            return cmd_momentum(g, ma);
        if (*amp)
            return cmd_amplitude(g, aa);
        if (*scan)
            return cmd_scan(g, sa);
        return cmd_verify(g, va);
    } catch (const ParseError& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return kParse;
    } catch (const RegimeError& e) {
        fmt::print(stderr, "regime error: {}\n", e.what());
        return kRegime;
    } catch (const EnumerationCapExceeded& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return kCap;
    } catch (const std::exception& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return kParse;
    }
}
