#pragma once

#include <array>
#include <vector>

#include "beno/domain.hpp"

namespace beno {

enum class BcKind { Dirichlet, Neumann };

// Matrix-free cell-centered discretization of the Laplacian. The implied row
// for cell c is (sum_nbr u_nbr - (deg + 2*ndir) u_c) / h^2 with Dirichlet
// boundary values moved to the right-hand side; Neumann faces contribute to
// the rhs only. Coefficients are kept as integer counts until applied so the
// diagonal-dominance check is exact.
struct LinearOperator {
    int n = 0;
    double h = 0;
    BcKind bc = BcKind::Dirichlet;
    std::vector<std::array<int, 4>> neighbors;  // interior neighbor ids, -1 when absent
    std::vector<int> interior_degree;           // number of interior-face links
    std::vector<int> dirichlet_faces;           // boundary faces entering the diagonal
    std::vector<double> rhs_boundary;           // per-cell contribution from g
    bool singular = false;                      // all-Neumann constant nullspace

    double diag(int c) const {
        return -(interior_degree[static_cast<size_t>(c)] +
                 2 * dirichlet_faces[static_cast<size_t>(c)]) / (h * h);
    }
    void apply(const std::vector<double>& u, std::vector<double>& out) const;
};

struct SolveReport {
    int iterations = 0;
    double final_residual = 0;
    bool converged = false;
};

struct SolutionSample {
    Domain domain;
    SourceField f;
    std::vector<double> g;
    std::vector<double> u;
    BcKind bc = BcKind::Dirichlet;
    SolveReport report;
    bool has_solution = false;
};

LinearOperator assemble_operator(const Domain& domain, BcKind bc,
                                 const std::vector<double>& g);

constexpr double kDefaultSolverTol = 1e-10;
int default_max_iter(int base_n);  // 200 * base_n^2

// In-place sweeps in the fixed cell storage order until the relative residual
// ||P u - rhs|| / ||rhs|| drops below tol (absolute when ||rhs|| = 0).
// Singular all-Neumann systems are pinned to mean zero. residual_history, when
// given, records the residual after every sweep.
std::pair<std::vector<double>, SolveReport> gauss_seidel(
    const LinearOperator& op, std::vector<double> rhs, double tol, int max_iter,
    double omega = 1.0, std::vector<double>* residual_history = nullptr);

SolutionSample solve_poisson(const Domain& domain, const SourceField& f,
                             const std::vector<double>& g, BcKind bc,
                             double tol = kDefaultSolverTol, int max_iter = -1);

// Column j of the discrete Green's function: solves P col = e_j / h^2 with
// homogeneous Dirichlet values.
std::vector<double> discrete_green_column(const Domain& domain, int j,
                                          double tol = kDefaultSolverTol);

// Relative l2 norm of solve(f,g) - solve(f,0) - solve(0,g).
double superposition_check(const Domain& domain, const SourceField& f,
                           const std::vector<double>& g,
                           double tol = kDefaultSolverTol);

double norm2(const std::vector<double>& v);
double rel_diff2(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace beno
