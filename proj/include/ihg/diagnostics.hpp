#pragma once

#include "ihg/hypergraph.hpp"
#include "ihg/solver.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace ihg {

struct NecessaryCondition {
    std::vector<Rational> values; // sum_j A_ij A_ji per vertex, i.e. diag(A^2)
    bool passes = true;           // every value < 1
};

struct Diagnostics {
    bool well_defined = false;
    Rational det_i_minus_a;
    NecessaryCondition necessary;
    bool sufficient = false;                    // acyclic dependency digraph (A nilpotent)
    std::optional<bool> configured_universally; // only when well-defined
    std::optional<std::vector<InfoForm>> forms;
};

/// Positive for every nu, eps > 0 exactly when no coefficient is negative and
/// no form is identically zero.
inline bool positive_for_all_params(const std::vector<InfoForm>& forms) {
    return std::all_of(forms.begin(), forms.end(), [](const InfoForm& f) {
        return f.nu_coeff >= 0 && f.eps_coeff >= 0 && !(f.nu_coeff == 0 && f.eps_coeff == 0);
    });
}

inline Diagnostics diagnose(const ImplicationHypergraph& h) {
    Diagnostics d;
    auto a = adjacency_matrix(h);
    const auto n = h.size();

    d.necessary.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < n; ++j) s += a(i, j) * a(j, i);
        d.necessary.passes = d.necessary.passes && s < 1;
        d.necessary.values[i] = s;
    }

    d.sufficient = is_acyclic(h);

    auto solved = solve_system(h);
    d.det_i_minus_a = solved.determinant;
    d.well_defined = solved.forms.has_value();
    if (d.well_defined) {
        d.configured_universally = positive_for_all_params(*solved.forms);
        d.forms = std::move(solved.forms);
    }
    return d;
}

} // namespace ihg
