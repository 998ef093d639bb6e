#include "orlicz/orlicz_function.hpp"

#include <cmath>
#include <limits>

#include "orlicz/errors.hpp"
#include "orlicz/log_plus.hpp"
#include "orlicz/quadrature.hpp"

namespace orlicz {

namespace {

// Threshold where the fourth iterated log+ becomes positive: e^(e^e).
const double kFourthIterateOnset = std::exp(std::exp(M_E));

OrliczFunction make_psi0() {
    return {"psi0",
            [](double t) { return t / std::log(M_E + t); },
            [](double t) {
                const double L = std::log(M_E + t);
                return 1.0 / L - t / ((M_E + t) * L * L);
            }};
}

OrliczFunction make_llogl() {
    return {"llogl",
            [](double t) { return t * log_plus(t); },
            [](double t) { return t <= 1.0 ? 0.0 : std::log(t) + 1.0; }};
}

OrliczFunction make_lloglogl() {
    return {"lloglogl",
            [](double t) { return t * log_plus_iter(t, 2); },
            [](double t) {
                if (t <= M_E) return 0.0;
                const double l = std::log(t);
                return std::log(l) + 1.0 / l;
            }};
}

OrliczFunction make_sjolin() {
    return {"sjolin",
            [](double t) { return t * log_plus(t) * log_plus_iter(t, 2); },
            [](double t) {
                if (t <= M_E) return 0.0;
                const double l = std::log(t);
                const double ll = std::log(l);
                return l * ll + ll + 1.0;
            }};
}

OrliczFunction make_lie() {
    return {"lie",
            [](double t) { return t * log_plus_iter(t, 2) * log_plus_iter(t, 4); },
            [](double t) {
                if (t <= kFourthIterateOnset) return 0.0;
                const double l1 = std::log(t);
                const double l2 = std::log(l1);
                const double l3 = std::log(l2);
                const double l4 = std::log(l3);
                return l2 * l4 + l4 / l1 + 1.0 / (l1 * l3);
            }};
}

// Degenerate factor gauges for product splits.
OrliczFunction make_factor(const std::string& name) {
    if (name == "id")
        return {"id", [](double t) { return t; }, [](double) { return 1.0; }};
    if (name == "one")
        return {"one", [](double) { return 1.0; }, [](double) { return 0.0; }};
    if (name == "logp")
        return {"logp", [](double t) { return log_plus(t); },
                [](double t) { return t <= 1.0 ? 0.0 : 1.0 / t; }};
    if (name == "loglogp")
        return {"loglogp", [](double t) { return log_plus_iter(t, 2); },
                [](double t) { return t <= M_E ? 0.0 : 1.0 / (t * std::log(t)); }};
    if (name == "log4p")
        return {"log4p", [](double t) { return log_plus_iter(t, 4); },
                [](double t) {
                    if (t <= kFourthIterateOnset) return 0.0;
                    const double l1 = std::log(t);
                    const double l2 = std::log(l1);
                    const double l3 = std::log(l2);
                    return 1.0 / (t * l1 * l2 * l3);
                }};
    return {};
}

} // namespace

OrliczFunction compose_product(const OrliczFunction& m, const OrliczFunction& s) {
    OrliczFunction out(
        "product:" + m.name() + ":" + s.name(),
        [m, s](double t) { return m.eval(t) * s.eval(t); },
        [m, s](double t) { return m.deriv(t) * s.eval(t) + m.eval(t) * s.deriv(t); });
    out.set_factors(m, s);
    return out;
}

OrliczFunction gauge_registry(const std::string& name) {
    if (name == "psi0") return make_psi0();
    if (name == "llogl") return make_llogl();
    if (name == "lloglogl") return make_lloglogl();
    if (name == "sjolin") return make_sjolin();
    if (name == "lie") return make_lie();
    if (auto f = make_factor(name); !f.name().empty()) return f;
    if (name.rfind("product:", 0) == 0) {
        const std::string rest = name.substr(8);
        const auto colon = rest.find(':');
        if (colon == std::string::npos)
            throw InvalidInput("product gauge needs two factors: " + name);
        return compose_product(gauge_registry(rest.substr(0, colon)),
                               gauge_registry(rest.substr(colon + 1)));
    }
    throw InvalidInput("unknown gauge: " + name);
}

std::vector<std::string> gauge_registry_names() {
    return {"psi0", "llogl", "lloglogl", "sjolin", "lie",
            "id",   "one",   "logp",     "loglogp", "log4p"};
}

double f_alpha(const OrliczFunction& phi, double alpha, double t) {
    if (!(alpha > 0.0)) throw InvalidInput("f_alpha requires alpha > 0");
    if (t <= alpha) return 0.0;
    return integrate_split([&phi](double s) { return phi.deriv(s) / s; },
                           alpha, t, {1.0, M_E, kFourthIterateOnset});
}

double closed_form_F_sjolin(double t) {
    const double l = log_plus(t);
    const double ll = log_plus_iter(t, 2);
    return 0.5 * l * l * ll + l * ll - 0.25 * l * l;
}

std::pair<double, double> lie_log_factors(double u) {
    const double l1 = u > 0.0 ? u : 0.0;
    return {log_plus(l1), log_plus_iter(l1, 3)};
}

double lie_log_value(double u) {
    const auto [l2, l4] = lie_log_factors(u);
    if (l2 <= 0.0 || l4 <= 0.0 || u <= 0.0)
        return -std::numeric_limits<double>::infinity();
    return u + std::log(l2) + std::log(l4);
}

} // namespace orlicz
