#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace beno {

// Corner-cut rectilinear domains on the unit square. A domain is a base_n x
// base_n cell grid with axis-aligned square blocks removed from up to four
// corners; the PDE lives on the remaining cell centers.

struct BoundaryInterface {
    double x = 0, y = 0;    // face midpoint
    double nx = 0, ny = 0;  // outward unit normal (axis-aligned)
    double t = 0;           // arc length of the face start, counterclockwise
    int cell = -1;          // interior cell on the inward side
};

struct BoundarySet {
    std::vector<BoundaryInterface> interfaces;  // counterclockwise trace
    std::vector<double> values;                 // g, one per interface
    double perimeter = 0;
};

struct Domain {
    int base_n = 0;
    double h = 0;  // = 1 / base_n
    std::array<int, 4> cut_specs{};                    // SW, SE, NE, NW cut sizes in cells
    std::vector<std::array<double, 2>> interior_cells;  // centers, row-major scan order
    std::vector<int> cell_index;                        // base_n*base_n -> interior id or -1
    BoundarySet boundary;

    int cell_at(int ix, int iy) const {
        if (ix < 0 || iy < 0 || ix >= base_n || iy >= base_n) return -1;
        return cell_index[static_cast<size_t>(iy) * base_n + ix];
    }
    int num_cells() const { return static_cast<int>(interior_cells.size()); }
};

enum class SourceFamily { Sinusoidal, Exponential, Logarithmic, Polynomial };

struct SourceParams {
    SourceFamily family = SourceFamily::Sinusoidal;
    double amplitude = 1.0;
    double a = 0.0, b = 0.0, phase = 0.0;
    std::array<double, 10> poly{};  // c_pq for p+q <= 3, ordered (p,q) lexicographic
};

struct SourceField {
    std::vector<double> values;  // one per interior cell
    SourceParams params;
};

// Builds the domain for explicit cut sizes (0 = corner kept). Used by
// generate_domain and directly by tests that pin the cuts.
Domain make_domain(int base_n, const std::array<int, 4>& cuts);

// Appendix-C style sampling: n_corners distinct corners chosen at random, cut
// sizes uniform on [1, base_n/2 - 1]. Throws std::invalid_argument for
// base_n < 8 or n_corners outside 0..4.
Domain generate_domain(int base_n, int n_corners, uint64_t seed);

double evaluate_source(const SourceParams& p, double x, double y);
SourceParams sample_source_params(uint64_t seed);
SourceField sample_source(const Domain& domain, uint64_t seed);

// g(t) = A sin(2*pi*t/lambda + phase) evaluated at the interface arc coordinates.
std::vector<double> sinusoid_boundary(const BoundarySet& b, double amplitude,
                                      double wavelength, double phase);
BoundarySet sample_boundary_values(const BoundarySet& boundary, uint64_t seed,
                                   bool homogeneous);

struct NodeDistances {
    std::vector<double> dx, dy;  // per interior cell, axis-ray distance to boundary
    std::vector<double> dc;      // per interface, distance to interior centroid
};
NodeDistances interior_boundary_distances(const Domain& domain);

}  // namespace beno
