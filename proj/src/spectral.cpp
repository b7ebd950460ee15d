#include "sigma_lab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace sigmalab {

namespace {

constexpr int kMaxSweeps = 50;

void require_nonempty(const Graph& g, const char* op) {
    if (g.vertex_count() < 1)
        throw std::invalid_argument(std::string(op) + ": graph must have at least one vertex");
}

// Householder reduction of a symmetric matrix (row-major, destroyed) to
// tridiagonal form. d receives the diagonal, e the subdiagonal (e[0] = 0).
void householder_tridiagonalize(std::vector<double>& a, int n, std::vector<double>& d,
                                std::vector<double>& e) {
    for (int i = n - 1; i >= 1; --i) {
        const int l = i - 1;
        double h = 0.0;
        if (l > 0) {
            double scale = 0.0;
            for (int k = 0; k <= l; ++k) scale += std::fabs(a[i * n + k]);
            if (scale == 0.0) {
                e[i] = a[i * n + l];
            } else {
                for (int k = 0; k <= l; ++k) {
                    a[i * n + k] /= scale;
                    h += a[i * n + k] * a[i * n + k];
                }
                double f = a[i * n + l];
                double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                a[i * n + l] = f - g;
                f = 0.0;
                for (int j = 0; j <= l; ++j) {
                    g = 0.0;
                    for (int k = 0; k <= j; ++k) g += a[j * n + k] * a[i * n + k];
                    for (int k = j + 1; k <= l; ++k) g += a[k * n + j] * a[i * n + k];
                    e[j] = g / h;
                    f += e[j] * a[i * n + j];
                }
                const double hh = f / (h + h);
                for (int j = 0; j <= l; ++j) {
                    f = a[i * n + j];
                    const double g2 = e[j] - hh * f;
                    e[j] = g2;
                    for (int k = 0; k <= j; ++k) a[j * n + k] -= f * e[k] + g2 * a[i * n + k];
                }
            }
        } else {
            e[i] = a[i * n + l];
        }
    }
    e[0] = 0.0;
    for (int i = 0; i < n; ++i) d[i] = a[i * n + i];
}

// Implicit-shift QL iteration on a tridiagonal matrix; eigenvalues land in d
// unsorted. Throws on non-convergence within kMaxSweeps per eigenvalue.
void ql_implicit_shift(std::vector<double>& d, std::vector<double>& e, int n, double tol,
                       const Graph& origin) {
    for (int i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= tol * dd + 1e-290) break;
            }
            if (m != l) {
                if (iter++ == kMaxSweeps)
                    throw EigensolverError("eigensolver: QL iteration did not converge", origin);
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                int i;
                for (i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                }
                if (r == 0.0 && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

// Exact inertia of a symmetric rational matrix by congruence elimination.
Inertia rational_symmetric_inertia(std::vector<mpq_class>& a, int n) {
    Inertia result;
    std::vector<int> active(n);
    std::iota(active.begin(), active.end(), 0);
    auto at = [&](int i, int j) -> mpq_class& { return a[static_cast<std::size_t>(i) * n + j]; };

    while (!active.empty()) {
        int pivot = -1;
        for (int idx : active)
            if (sgn(at(idx, idx)) != 0) {
                pivot = idx;
                break;
            }
        if (pivot >= 0) {
            const mpq_class d = at(pivot, pivot);
            if (sgn(d) > 0)
                ++result.n_plus;
            else
                ++result.n_minus;
            active.erase(std::find(active.begin(), active.end(), pivot));
            for (std::size_t ji = 0; ji < active.size(); ++ji) {
                const int j = active[ji];
                if (sgn(at(j, pivot)) == 0) continue;
                const mpq_class f = at(j, pivot) / d;
                for (std::size_t ki = ji; ki < active.size(); ++ki) {
                    const int k = active[ki];
                    at(j, k) -= f * at(pivot, k);
                    if (k != j) at(k, j) = at(j, k);
                }
            }
        } else {
            // Diagonal of the active block is all zero; look for a 2x2 pivot.
            int bi = -1, bj = -1;
            for (std::size_t ii = 0; ii < active.size() && bi < 0; ++ii)
                for (std::size_t jj = ii + 1; jj < active.size(); ++jj)
                    if (sgn(at(active[ii], active[jj])) != 0) {
                        bi = active[ii];
                        bj = active[jj];
                        break;
                    }
            if (bi < 0) {
                // Active block is entirely zero.
                result.n_zero += static_cast<int>(active.size());
                break;
            }
            ++result.n_plus;
            ++result.n_minus;
            const mpq_class b = at(bi, bj);
            active.erase(std::find(active.begin(), active.end(), bi));
            active.erase(std::find(active.begin(), active.end(), bj));
            for (std::size_t ui = 0; ui < active.size(); ++ui) {
                const int u = active[ui];
                for (std::size_t vi = ui; vi < active.size(); ++vi) {
                    const int v = active[vi];
                    at(u, v) -= (at(u, bi) * at(bj, v) + at(u, bj) * at(bi, v)) / b;
                    if (v != u) at(v, u) = at(u, v);
                }
            }
        }
    }
    return result;
}

}  // namespace

double Spectrum::sum() const { return std::accumulate(values.begin(), values.end(), 0.0); }

std::vector<std::vector<long long>> laplacian(const Graph& g) {
    require_nonempty(g, "laplacian");
    const int n = g.vertex_count();
    std::vector<std::vector<long long>> L(n, std::vector<long long>(n, 0));
    for (int v = 0; v < n; ++v) {
        L[v][v] = g.degree(v);
        for (int u : g.neighbors(v)) L[v][u] = -1;
    }
    return L;
}

Rational average_degree(const Graph& g) {
    require_nonempty(g, "average_degree");
    return Rational(2 * g.edge_count(), g.vertex_count());
}

Spectrum eigenvalues(const Graph& g, double tol) {
    require_nonempty(g, "eigenvalues");
    const int n = g.vertex_count();
    std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
    for (int v = 0; v < n; ++v) {
        a[static_cast<std::size_t>(v) * n + v] = g.degree(v);
        for (int u : g.neighbors(v)) a[static_cast<std::size_t>(v) * n + u] = -1.0;
    }
    std::vector<double> d(n, 0.0), e(n, 0.0);
    if (n == 1) {
        d[0] = a[0];
    } else {
        householder_tridiagonalize(a, n, d, e);
        ql_implicit_shift(d, e, n, tol, g);
    }
    std::sort(d.begin(), d.end(), std::greater<double>());
    return Spectrum{std::move(d)};
}

Inertia inertia_shifted(const Graph& g, const Rational& t) {
    require_nonempty(g, "inertia_shifted");
    const int n = g.vertex_count();
    std::vector<mpq_class> a(static_cast<std::size_t>(n) * n, mpq_class(0));
    for (int v = 0; v < n; ++v) {
        a[static_cast<std::size_t>(v) * n + v] = mpq_class(g.degree(v)) - t.raw();
        for (int u : g.neighbors(v)) a[static_cast<std::size_t>(v) * n + u] = -1;
    }
    return rational_symmetric_inertia(a, n);
}

int count_eigenvalues_at_least(const Graph& g, const Rational& t) {
    const Inertia in = inertia_shifted(g, t);
    return in.n_plus + in.n_zero;
}

int sigma(const Graph& g) {
    require_nonempty(g, "sigma");
    return count_eigenvalues_at_least(g, average_degree(g));
}

int sigma_float(const Graph& g, double tie_tol) {
    require_nonempty(g, "sigma_float");
    const double avg = 2.0 * static_cast<double>(g.edge_count()) / g.vertex_count();
    const Spectrum spec = eigenvalues(g);
    int count = 0;
    for (double mu : spec.values)
        if (mu >= avg - tie_tol) ++count;
    return count;
}

Spectrum join_spectrum(const Spectrum& s1, int n1, const Spectrum& s2, int n2) {
    constexpr double kZeroTol = 1e-6;
    if (n1 < 1 || n2 < 1) throw std::invalid_argument("join_spectrum: parts must be nonempty");
    if (s1.size() != n1 || s2.size() != n2)
        throw std::invalid_argument("join_spectrum: spectrum length does not match vertex count");
    if (std::fabs(s1.values.back()) > kZeroTol || std::fabs(s2.values.back()) > kZeroTol)
        throw std::invalid_argument("join_spectrum: input spectrum lacks a zero eigenvalue");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n1) + n2);
    out.push_back(static_cast<double>(n1) + n2);
    for (int i = 0; i + 1 < n1; ++i) out.push_back(s1.values[i] + n2);
    for (int i = 0; i + 1 < n2; ++i) out.push_back(s2.values[i] + n1);
    out.push_back(0.0);
    std::sort(out.begin(), out.end(), std::greater<double>());
    return Spectrum{std::move(out)};
}

Spectrum union_spectrum(const Spectrum& s1, const Spectrum& s2) {
    std::vector<double> out = s1.values;
    out.insert(out.end(), s2.values.begin(), s2.values.end());
    std::sort(out.begin(), out.end(), std::greater<double>());
    return Spectrum{std::move(out)};
}

int multiplicity_of_n(const Graph& g) {
    require_nonempty(g, "multiplicity_of_n");
    return inertia_shifted(g, Rational(g.vertex_count())).n_zero;
}

}  // namespace sigmalab
