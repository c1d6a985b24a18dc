#include "beno/fvm.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace beno {

double norm2(const std::vector<double>& v) {
    double acc = 0;
    for (double x : v) acc += x * x;
    return std::sqrt(acc);
}

double rel_diff2(const std::vector<double>& a, const std::vector<double>& b) {
    assert(a.size() == b.size());
    double num = 0, den = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        num += d * d;
        den += b[i] * b[i];
    }
    if (den == 0) return std::sqrt(num);
    return std::sqrt(num / den);
}

void LinearOperator::apply(const std::vector<double>& u, std::vector<double>& out) const {
    out.resize(static_cast<size_t>(n));
    const double inv_h2 = 1.0 / (h * h);
    for (int c = 0; c < n; ++c) {
        double acc = 0;
        for (int nb : neighbors[static_cast<size_t>(c)])
            if (nb >= 0) acc += u[static_cast<size_t>(nb)];
        acc -= (interior_degree[static_cast<size_t>(c)] +
                2 * dirichlet_faces[static_cast<size_t>(c)]) * u[static_cast<size_t>(c)];
        out[static_cast<size_t>(c)] = acc * inv_h2;
    }
}

LinearOperator assemble_operator(const Domain& domain, BcKind bc,
                                 const std::vector<double>& g) {
    if (g.size() != domain.boundary.interfaces.size())
        throw std::invalid_argument("assemble_operator: g size mismatch");

    LinearOperator op;
    op.n = domain.num_cells();
    op.h = domain.h;
    op.bc = bc;
    op.neighbors.assign(static_cast<size_t>(op.n), {-1, -1, -1, -1});
    op.interior_degree.assign(static_cast<size_t>(op.n), 0);
    op.dirichlet_faces.assign(static_cast<size_t>(op.n), 0);
    op.rhs_boundary.assign(static_cast<size_t>(op.n), 0.0);

    for (int iy = 0; iy < domain.base_n; ++iy) {
        for (int ix = 0; ix < domain.base_n; ++ix) {
            const int c = domain.cell_at(ix, iy);
            if (c < 0) continue;
            const std::array<int, 4> nbrs = {domain.cell_at(ix + 1, iy), domain.cell_at(ix - 1, iy),
                                             domain.cell_at(ix, iy + 1), domain.cell_at(ix, iy - 1)};
            for (int k = 0; k < 4; ++k) {
                op.neighbors[static_cast<size_t>(c)][static_cast<size_t>(k)] = nbrs[static_cast<size_t>(k)];
                if (nbrs[static_cast<size_t>(k)] >= 0) ++op.interior_degree[static_cast<size_t>(c)];
            }
        }
    }

    const double inv_h2 = 1.0 / (op.h * op.h);
    for (size_t j = 0; j < domain.boundary.interfaces.size(); ++j) {
        const auto& bi = domain.boundary.interfaces[j];
        const size_t c = static_cast<size_t>(bi.cell);
        if (bc == BcKind::Dirichlet) {
            // face flux 2 (g - u_c) / h: -2/h^2 joins the diagonal, the g part
            // moves to the rhs
            ++op.dirichlet_faces[c];
            op.rhs_boundary[c] -= 2.0 * g[j] * inv_h2;
        } else {
            // prescribed flux g through the face
            op.rhs_boundary[c] -= g[j] / op.h;
        }
    }
    op.singular = (bc == BcKind::Neumann);
    return op;
}

int default_max_iter(int base_n) { return 200 * base_n * base_n; }

namespace {

double relative_residual(const LinearOperator& op, const std::vector<double>& u,
                         const std::vector<double>& rhs, double rhs_norm,
                         std::vector<double>& scratch) {
    op.apply(u, scratch);
    double acc = 0;
    for (size_t i = 0; i < rhs.size(); ++i) {
        const double r = scratch[i] - rhs[i];
        acc += r * r;
    }
    const double rn = std::sqrt(acc);
    return rhs_norm == 0 ? rn : rn / rhs_norm;
}

void subtract_mean(std::vector<double>& v) {
    double mean = 0;
    for (double x : v) mean += x;
    mean /= static_cast<double>(v.size());
    for (double& x : v) x -= mean;
}

}  // namespace

std::pair<std::vector<double>, SolveReport> gauss_seidel(
    const LinearOperator& op, std::vector<double> rhs, double tol, int max_iter,
    double omega, std::vector<double>* residual_history) {
    if (tol <= 0) throw std::invalid_argument("gauss_seidel: tol must be positive");
    if (op.singular) subtract_mean(rhs);

    const double rhs_norm = norm2(rhs);
    std::vector<double> u(static_cast<size_t>(op.n), 0.0);
    std::vector<double> scratch;
    SolveReport rep;

    double res = relative_residual(op, u, rhs, rhs_norm, scratch);
    if (residual_history) residual_history->push_back(res);

    const double inv_h2 = 1.0 / (op.h * op.h);
    while (res > tol && rep.iterations < max_iter) {
        for (int c = 0; c < op.n; ++c) {
            double acc = 0;
            for (int nb : op.neighbors[static_cast<size_t>(c)])
                if (nb >= 0) acc += u[static_cast<size_t>(nb)];
            const double diag = -(op.interior_degree[static_cast<size_t>(c)] +
                                  2 * op.dirichlet_faces[static_cast<size_t>(c)]) * inv_h2;
            const double next = (rhs[static_cast<size_t>(c)] - acc * inv_h2) / diag;
            u[static_cast<size_t>(c)] += omega * (next - u[static_cast<size_t>(c)]);
        }
        if (op.singular) subtract_mean(u);
        ++rep.iterations;
        res = relative_residual(op, u, rhs, rhs_norm, scratch);
        if (residual_history) residual_history->push_back(res);
    }
    rep.final_residual = res;
    rep.converged = res <= tol;
    return {std::move(u), rep};
}

SolutionSample solve_poisson(const Domain& domain, const SourceField& f,
                             const std::vector<double>& g, BcKind bc,
                             double tol, int max_iter) {
    if (f.values.size() != domain.interior_cells.size())
        throw std::invalid_argument("solve_poisson: f size mismatch");
    if (max_iter < 0) max_iter = default_max_iter(domain.base_n);

    const LinearOperator op = assemble_operator(domain, bc, g);
    std::vector<double> rhs(f.values);
    for (size_t i = 0; i < rhs.size(); ++i) rhs[i] += op.rhs_boundary[i];

    auto [u, rep] = gauss_seidel(op, std::move(rhs), tol, max_iter);

    SolutionSample s;
    s.domain = domain;
    s.f = f;
    s.g = g;
    s.u = std::move(u);
    s.bc = bc;
    s.report = rep;
    s.has_solution = true;
    return s;
}

std::vector<double> discrete_green_column(const Domain& domain, int j, double tol) {
    const int n = domain.num_cells();
    if (j < 0 || j >= n) throw std::invalid_argument("discrete_green_column: index out of range");
    const std::vector<double> g0(domain.boundary.interfaces.size(), 0.0);
    const LinearOperator op = assemble_operator(domain, BcKind::Dirichlet, g0);
    std::vector<double> rhs(static_cast<size_t>(n), 0.0);
    rhs[static_cast<size_t>(j)] = 1.0 / (domain.h * domain.h);
    auto [col, rep] = gauss_seidel(op, std::move(rhs), tol, default_max_iter(domain.base_n));
    if (!rep.converged) throw std::runtime_error("discrete_green_column: solver did not converge");
    return col;
}

double superposition_check(const Domain& domain, const SourceField& f,
                           const std::vector<double>& g, double tol) {
    const std::vector<double> g0(g.size(), 0.0);
    SourceField f0;
    f0.values.assign(f.values.size(), 0.0);

    const auto full = solve_poisson(domain, f, g, BcKind::Dirichlet, tol);
    const auto interior_only = solve_poisson(domain, f, g0, BcKind::Dirichlet, tol);
    const auto boundary_only = solve_poisson(domain, f0, g, BcKind::Dirichlet, tol);

    double num = 0, den = 0;
    for (size_t i = 0; i < full.u.size(); ++i) {
        const double d = full.u[i] - interior_only.u[i] - boundary_only.u[i];
        num += d * d;
        den += full.u[i] * full.u[i];
    }
    if (den == 0) return std::sqrt(num);
    return std::sqrt(num / den);
}

}  // namespace beno
