#pragma once

// Propositional information as exact closed forms a*nu + b*eps.
//
// Each non-leaf p_i satisfies I_i = sum_j A_ij (I_j + eps) and each leaf has
// I_i = nu, so I = (I - A)^{-1} (eps * A 1 + nu * l). The solve is split into
// two exact systems, (I - A) a = l and (I - A) b = A 1, giving the nu and eps
// coefficients separately.

#include "ihg/errors.hpp"
#include "ihg/hypergraph.hpp"
#include "ihg/matrix.hpp"
#include "ihg/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace ihg {

/// I = nu_coeff * nu + eps_coeff * eps.
struct InfoForm {
    Rational nu_coeff;
    Rational eps_coeff;

    friend bool operator==(const InfoForm& a, const InfoForm& b) {
        return a.nu_coeff == b.nu_coeff && a.eps_coeff == b.eps_coeff;
    }
    friend InfoForm operator+(const InfoForm& a, const InfoForm& b) {
        return {Rational(a.nu_coeff + b.nu_coeff), Rational(a.eps_coeff + b.eps_coeff)};
    }
    friend InfoForm operator*(const Rational& s, const InfoForm& f) {
        return {Rational(s * f.nu_coeff), Rational(s * f.eps_coeff)};
    }
};

/// Renders as "3/2*nu + 2*eps"; a negative eps coefficient uses " - ".
inline std::string to_string(const InfoForm& f) {
    std::string out = to_fraction_string(f.nu_coeff) + "*nu";
    if (f.eps_coeff < 0)
        out += " - " + to_fraction_string(Rational(-f.eps_coeff)) + "*eps";
    else
        out += " + " + to_fraction_string(f.eps_coeff) + "*eps";
    return out;
}

/// Leaf information unit and per-implication increment. Both strictly positive.
class Params {
public:
    Params(Rational nu, Rational eps) : nu_(std::move(nu)), eps_(std::move(eps)) {
        if (nu_ <= 0 || eps_ <= 0) throw NonPositiveParams("nu and eps must be strictly positive");
    }

    const Rational& nu() const noexcept { return nu_; }
    const Rational& eps() const noexcept { return eps_; }

private:
    Rational nu_;
    Rational eps_;
};

/// A_ij = sum over edges with p_i in the tail and p_j in the head of 1/|tail|.
/// Every head member receives a full share; parallel contributions add up.
inline RationalMatrix adjacency_matrix(const ImplicationHypergraph& h) {
    RationalMatrix a(h.size(), h.size());
    for (const auto& e : h.edges()) {
        Rational share(1, e.tail.size());
        for (auto i : e.tail)
            for (auto j : e.head) a(i, j) += share;
    }
    return a;
}

inline std::vector<int> leaf_vector(const ImplicationHypergraph& h) {
    std::vector<int> l(h.size(), 0);
    for (auto v : leaves(h)) l[v] = 1;
    return l;
}

/// Exact solution, or nullopt when det(I - A) = 0. `determinant` is det(I - A).
struct SymbolicSolution {
    Rational determinant;
    std::optional<std::vector<InfoForm>> forms;
};

inline SymbolicSolution solve_system(const ImplicationHypergraph& h) {
    const std::size_t n = h.size();
    auto a = adjacency_matrix(h);
    auto l = leaf_vector(h);

    RationalMatrix rhs(n, 2);
    for (std::size_t i = 0; i < n; ++i) {
        rhs(i, 0) = l[i];
        Rational row_sum = 0;
        for (std::size_t j = 0; j < n; ++j) row_sum += a(i, j);
        rhs(i, 1) = row_sum;
    }

    auto solved = solve_exact(RationalMatrix::identity(n) - a, rhs);
    SymbolicSolution out{solved.determinant, std::nullopt};
    if (solved.solution) {
        std::vector<InfoForm> forms(n);
        for (std::size_t i = 0; i < n; ++i) forms[i] = {(*solved.solution)(i, 0), (*solved.solution)(i, 1)};
        out.forms = std::move(forms);
    }
    return out;
}

/// Throws NotWellDefined when 1 is an eigenvalue of A.
inline std::vector<InfoForm> solve_symbolic(const ImplicationHypergraph& h) {
    auto s = solve_system(h);
    if (!s.forms) throw NotWellDefined();
    return std::move(*s.forms);
}

inline Rational evaluate(const InfoForm& f, const Params& p) { return f.nu_coeff * p.nu() + f.eps_coeff * p.eps(); }

inline std::vector<Rational> evaluate(const std::vector<InfoForm>& forms, const Params& p) {
    std::vector<Rational> out;
    out.reserve(forms.size());
    for (const auto& f : forms) out.push_back(evaluate(f, p));
    return out;
}

struct ConfiguredResult {
    bool configured = false;
    std::optional<std::string> reason; // set whenever configured is false
};

/// Configured at fixed (nu, eps): well-defined and every value strictly positive.
inline ConfiguredResult is_configured(const ImplicationHypergraph& h, const Params& p) {
    auto s = solve_system(h);
    if (!s.forms) return {false, "not well-defined: det(I - A) = 0"};
    auto values = evaluate(*s.forms, p);
    for (std::size_t i = 0; i < values.size(); ++i)
        if (values[i] <= 0)
            return {false, "information of '" + h.id(i) + "' is " + to_fraction_string(values[i]) + ", not positive"};
    return {true, std::nullopt};
}

} // namespace ihg
