#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace orlicz {

/// An evaluable gauge t >= 0 -> Phi(t) >= 0 together with its a.e. derivative.
///
/// Built-ins (addressable through the registry):
///   psi0      t / log(e + t)
///   llogl     t log+ t
///   lloglogl  t log+log+ t
///   sjolin    t log+ t log+log+ t
///   lie       t log+log+ t log+log+log+log+ t
/// plus degenerate factor gauges (id, one, logp, loglogp, log4p) usable as
/// product components. Products are addressable as "product:<m>:<s>".
class OrliczFunction {
  public:
    using Fn = std::function<double(double)>;

    OrliczFunction() = default;
    OrliczFunction(std::string name, Fn eval, Fn deriv)
        : name_(std::move(name)), eval_(std::move(eval)), deriv_(std::move(deriv)) {}

    const std::string& name() const { return name_; }
    double operator()(double t) const { return eval_(t); }
    double eval(double t) const { return eval_(t); }
    /// Right-derivative, valid a.e.; zero on the flat side of log+ kinks.
    double deriv(double t) const { return deriv_(t); }

    bool has_factors() const { return factors_ != nullptr; }
    const std::pair<OrliczFunction, OrliczFunction>& factors() const { return *factors_; }

    void set_factors(OrliczFunction m, OrliczFunction s) {
        factors_ = std::make_shared<std::pair<OrliczFunction, OrliczFunction>>(
            std::move(m), std::move(s));
    }

  private:
    std::string name_;
    Fn eval_;
    Fn deriv_;
    std::shared_ptr<std::pair<OrliczFunction, OrliczFunction>> factors_;
};

/// Product gauge Phi = M*S with the product rule on the a.e. derivatives.
OrliczFunction compose_product(const OrliczFunction& m, const OrliczFunction& s);

/// Look up a gauge by name: built-in, factor, or "product:<m>:<s>".
/// Throws InvalidInput for unknown names.
OrliczFunction gauge_registry(const std::string& name);
std::vector<std::string> gauge_registry_names();

/// F_alpha(t) = int_alpha^t deriv(s)/s ds by adaptive quadrature (rel 1e-9).
/// Returns 0 when t <= alpha. Splits at the log+ kinks s = 1, e.
double f_alpha(const OrliczFunction& phi, double alpha, double t);

/// The displayed antiderivative of psi_sjolin(s)/s:
///   1/2 (log+ t)^2 log+log+ t + log+ t log+log+ t - 1/4 (log+ t)^2.
double closed_form_F_sjolin(double t);

/// Lie gauge in log-space: factors of Phi(e^u) = e^u * L2 * L4 for u = log t.
/// Returns {L2, L4} = {log+ u, log+log+log+ u}; valid for u far beyond the
/// range where t itself is representable.
std::pair<double, double> lie_log_factors(double u);

/// log Phi_lie(e^u); -inf where the gauge vanishes.
double lie_log_value(double u);

} // namespace orlicz
