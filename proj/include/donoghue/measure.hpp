#pragma once

#include <utility>
#include <vector>

namespace donoghue {

/// One point mass of a discrete Borel measure.
struct Atom {
    double position = 0.0;
    double weight = 0.0;
};

/// Finite discrete measure: atoms sorted by position, strictly increasing,
/// all weights positive, at least one atom. Immutable after construction.
class DiscreteMeasure {
public:
    explicit DiscreteMeasure(std::vector<Atom> atoms);

    const std::vector<Atom>& atoms() const { return atoms_; }
    std::size_t size() const { return atoms_.size(); }

private:
    std::vector<Atom> atoms_;
};

/// Builds a measure from (position, weight) pairs. Pairs are sorted and
/// duplicate positions merged by summing weights.
DiscreteMeasure make_measure(const std::vector<std::pair<double, double>>& pairs);

/// a = sum w_i / (1 + lambda_i^2)
double normalization(const DiscreteMeasure& m);

/// C = sum w_i * lambda_i / (1 + lambda_i^2)
double real_part_constant(const DiscreteMeasure& m);

/// Returns a copy with all weights scaled so that normalization() == a_target.
DiscreteMeasure rescale_to(const DiscreteMeasure& m, double a_target);

/// Total mass sum w_i.
double total_mass(const DiscreteMeasure& m);

} // namespace donoghue
