#include "donoghue/herglotz.hpp"

#include <cmath>
#include <stdexcept>

namespace donoghue {

PerturbedHerglotz::PerturbedHerglotz(double q, DiscreteMeasure m)
    : Q(q), measure(std::move(m)), a(normalization(measure)) {
    if (!std::isfinite(Q))
        throw std::invalid_argument("PerturbedHerglotz: Q must be finite");
}

Complex evaluate(const PerturbedHerglotz& f, Complex z) {
    if (z.imag() == 0.0)
        throw std::domain_error("evaluate: z must be off the real axis");
    Complex sum = f.Q;
    for (const Atom& atom : f.measure.atoms()) {
        const double lam = atom.position;
        sum += atom.weight * (1.0 / (lam - z) - lam / (1.0 + lam * lam));
    }
    return sum;
}

PerturbedHerglotz perturb(const PerturbedHerglotz& f, double dQ) {
    if (!std::isfinite(dQ))
        throw std::invalid_argument("perturb: dQ must be finite");
    return PerturbedHerglotz(f.Q + dQ, f.measure);
}

Classification classify(const PerturbedHerglotz& f) {
    const double a = f.a;
    ClassTag tag{};
    tag.perturbed = (f.Q != 0.0);
    if (std::abs(a - 1.0) <= 1e-12 * std::max(a, 1.0)) {
        tag.family = Family::M;
        tag.kappa0 = 0.0;
    } else if (a < 1.0) {
        tag.family = Family::M_kappa;
        tag.kappa0 = (1.0 - a) / (1.0 + a);
    } else {
        tag.family = Family::M_kappa_inv;
        tag.kappa0 = (a - 1.0) / (1.0 + a);
    }
    return {tag, f.Q, a};
}

std::vector<double> mass_growth_diagnostic(const PerturbedHerglotz& f,
                                           const std::vector<double>& etas) {
    std::vector<double> out;
    out.reserve(etas.size());
    double prev = 0.0;
    for (std::size_t i = 0; i < etas.size(); ++i) {
        const double eta = etas[i];
        if (!(eta > 0.0))
            throw std::invalid_argument("mass_growth_diagnostic: etas must be positive");
        if (i > 0 && eta <= prev)
            throw std::invalid_argument("mass_growth_diagnostic: etas must be increasing");
        prev = eta;
        // eta * Im V(i eta) = sum w_i eta^2 / (lambda_i^2 + eta^2)
        double v = 0.0;
        for (const Atom& atom : f.measure.atoms())
            v += atom.weight * eta * eta / (atom.position * atom.position + eta * eta);
        out.push_back(v);
    }
    return out;
}

} // namespace donoghue
