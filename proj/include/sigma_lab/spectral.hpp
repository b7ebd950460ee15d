#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "sigma_lab/graph.hpp"
#include "sigma_lab/rational.hpp"

namespace sigmalab {

/// Laplacian eigenvalue approximations, sorted descending.
struct Spectrum {
    std::vector<double> values;

    int size() const { return static_cast<int>(values.size()); }
    double operator[](int i) const { return values[i]; }
    double sum() const;
};

/// Sign counts (positive, zero, negative) of the eigenvalues of a shifted
/// Laplacian. n_plus + n_zero + n_minus = n.
struct Inertia {
    int n_plus = 0;
    int n_zero = 0;
    int n_minus = 0;
    bool operator==(const Inertia&) const = default;
};

/// Raised when the QL iteration fails to converge; carries the graph so the
/// failing instance can be reproduced.
class EigensolverError : public std::runtime_error {
public:
    EigensolverError(const std::string& message, Graph graph)
        : std::runtime_error(message), graph_(std::move(graph)) {}
    const Graph& graph() const { return graph_; }

private:
    Graph graph_;
};

/// L(G) = D(G) - A(G). Requires n >= 1.
std::vector<std::vector<long long>> laplacian(const Graph& g);

/// Exactly 2m/n as a reduced fraction. Requires n >= 1.
Rational average_degree(const Graph& g);

/// Floating spectrum via Householder tridiagonalization + implicit-shift QL
/// (no external solver). `tol` is the relative off-diagonal convergence
/// threshold; each eigenvalue gets at most 50 sweeps.
Spectrum eigenvalues(const Graph& g, double tol = 1e-14);

/// Exact eigenvalue sign counts of L(G) - t*I, by symmetric congruence
/// elimination over the rationals (Sylvester's law of inertia). A zero
/// diagonal with nonzero off-diagonals is handled by a 2x2 block pivot
/// contributing one positive and one negative eigenvalue.
Inertia inertia_shifted(const Graph& g, const Rational& t);

/// Exact #{i : mu_i >= t}.
int count_eigenvalues_at_least(const Graph& g, const Rational& t);

/// Number of Laplacian eigenvalues >= the average degree, computed exactly.
/// Always >= 1 for n >= 1.
int sigma(const Graph& g);

/// Floating-point cross-check of sigma: counts spectrum values above
/// 2m/n - tie_tol. Independent of the exact path.
int sigma_float(const Graph& g, double tie_tol = 1e-9);

/// Spectrum of a join from the spectra of the parts: n1+n2, the shifted
/// nonzero-slot values of each side, and 0. Each input must end near zero.
Spectrum join_spectrum(const Spectrum& s1, int n1, const Spectrum& s2, int n2);

/// Multiset union, re-sorted descending.
Spectrum union_spectrum(const Spectrum& s1, const Spectrum& s2);

/// Exact multiplicity of the eigenvalue n.
int multiplicity_of_n(const Graph& g);

}  // namespace sigmalab
