#include "donoghue/measure.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace donoghue {

DiscreteMeasure::DiscreteMeasure(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.empty())
        throw std::invalid_argument("DiscreteMeasure: needs at least one atom");
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        const Atom& a = atoms_[i];
        if (!std::isfinite(a.position) || !std::isfinite(a.weight))
            throw std::invalid_argument("DiscreteMeasure: non-finite atom");
        if (a.weight <= 0.0)
            throw std::invalid_argument("DiscreteMeasure: weight must be positive");
        if (i > 0 && atoms_[i - 1].position >= a.position)
            throw std::invalid_argument("DiscreteMeasure: positions must be strictly increasing");
    }
}

DiscreteMeasure make_measure(const std::vector<std::pair<double, double>>& pairs) {
    if (pairs.empty())
        throw std::invalid_argument("make_measure: empty input");
    std::vector<Atom> atoms;
    atoms.reserve(pairs.size());
    for (const auto& [pos, w] : pairs) {
        if (!std::isfinite(pos) || !std::isfinite(w))
            throw std::invalid_argument("make_measure: non-finite value");
        if (w <= 0.0)
            throw std::invalid_argument("make_measure: weight must be positive");
        atoms.push_back({pos, w});
    }
    std::sort(atoms.begin(), atoms.end(),
              [](const Atom& x, const Atom& y) { return x.position < y.position; });
    std::vector<Atom> merged;
    merged.reserve(atoms.size());
    for (const Atom& a : atoms) {
        if (!merged.empty() && merged.back().position == a.position)
            merged.back().weight += a.weight;
        else
            merged.push_back(a);
    }
    return DiscreteMeasure(std::move(merged));
}

double normalization(const DiscreteMeasure& m) {
    double a = 0.0;
    for (const Atom& atom : m.atoms())
        a += atom.weight / (1.0 + atom.position * atom.position);
    return a;
}

double real_part_constant(const DiscreteMeasure& m) {
    double c = 0.0;
    for (const Atom& atom : m.atoms())
        c += atom.weight * atom.position / (1.0 + atom.position * atom.position);
    return c;
}

DiscreteMeasure rescale_to(const DiscreteMeasure& m, double a_target) {
    if (!(a_target > 0.0) || !std::isfinite(a_target))
        throw std::invalid_argument("rescale_to: target normalization must be positive");
    const double factor = a_target / normalization(m);
    std::vector<Atom> atoms = m.atoms();
    for (Atom& a : atoms)
        a.weight *= factor;
    return DiscreteMeasure(std::move(atoms));
}

double total_mass(const DiscreteMeasure& m) {
    double s = 0.0;
    for (const Atom& atom : m.atoms())
        s += atom.weight;
    return s;
}

} // namespace donoghue
