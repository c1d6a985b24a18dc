#include "beno/domain.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "beno/rng.hpp"

namespace beno {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool in_cut(int ix, int iy, int base_n, const std::array<int, 4>& cuts) {
    const int n = base_n;
    if (cuts[0] > 0 && ix < cuts[0] && iy < cuts[0]) return true;              // SW
    if (cuts[1] > 0 && ix >= n - cuts[1] && iy < cuts[1]) return true;         // SE
    if (cuts[2] > 0 && ix >= n - cuts[2] && iy >= n - cuts[2]) return true;    // NE
    if (cuts[3] > 0 && ix < cuts[3] && iy >= n - cuts[3]) return true;         // NW
    return false;
}

struct DirectedFace {
    int sx, sy, ex, ey;  // grid-vertex endpoints, start -> end
    double nx, ny;
    int cell;
};

}  // namespace

Domain make_domain(int base_n, const std::array<int, 4>& cuts) {
    if (base_n < 2) throw std::invalid_argument("make_domain: base_n must be >= 2");
    for (int s : cuts) {
        if (s < 0 || (s > 0 && s > base_n / 2 - 1))
            throw std::invalid_argument("make_domain: cut size outside [0, base_n/2 - 1]");
    }

    Domain d;
    d.base_n = base_n;
    d.h = 1.0 / base_n;
    d.cut_specs = cuts;
    d.cell_index.assign(static_cast<size_t>(base_n) * base_n, -1);

    for (int iy = 0; iy < base_n; ++iy) {
        for (int ix = 0; ix < base_n; ++ix) {
            if (in_cut(ix, iy, base_n, cuts)) continue;
            d.cell_index[static_cast<size_t>(iy) * base_n + ix] = d.num_cells();
            d.interior_cells.push_back({(ix + 0.5) * d.h, (iy + 0.5) * d.h});
        }
    }

    // Collect boundary faces as directed segments with the interior on the
    // left, i.e. direction = outward normal rotated +90 degrees. Following
    // start->end links then traces the polygon counterclockwise.
    std::vector<DirectedFace> faces;
    for (int iy = 0; iy < base_n; ++iy) {
        for (int ix = 0; ix < base_n; ++ix) {
            const int c = d.cell_at(ix, iy);
            if (c < 0) continue;
            if (d.cell_at(ix + 1, iy) < 0)  // east, normal (1,0), walk north
                faces.push_back({ix + 1, iy, ix + 1, iy + 1, 1, 0, c});
            if (d.cell_at(ix - 1, iy) < 0)  // west, normal (-1,0), walk south
                faces.push_back({ix, iy + 1, ix, iy, -1, 0, c});
            if (d.cell_at(ix, iy + 1) < 0)  // north, normal (0,1), walk west
                faces.push_back({ix + 1, iy + 1, ix, iy + 1, 0, 1, c});
            if (d.cell_at(ix, iy - 1) < 0)  // south, normal (0,-1), walk east
                faces.push_back({ix, iy, ix + 1, iy, 0, -1, c});
        }
    }

    const int vdim = base_n + 1;
    std::vector<int> outgoing(static_cast<size_t>(vdim) * vdim, -1);
    for (size_t i = 0; i < faces.size(); ++i) {
        const size_t key = static_cast<size_t>(faces[i].sx) * vdim + faces[i].sy;
        assert(outgoing[key] < 0 && "boundary vertex with two outgoing faces");
        outgoing[key] = static_cast<int>(i);
    }

    // Trace starts at the lexicographically smallest boundary vertex (x, then y).
    int start = -1;
    for (size_t key = 0; key < outgoing.size(); ++key) {
        if (outgoing[key] >= 0) {
            start = static_cast<int>(key);
            break;
        }
    }
    assert(start >= 0);

    d.boundary.perimeter = faces.size() * d.h;
    int key = start;
    for (size_t step = 0; step < faces.size(); ++step) {
        const int fi = outgoing[static_cast<size_t>(key)];
        assert(fi >= 0 && "open boundary loop");
        const DirectedFace& f = faces[static_cast<size_t>(fi)];
        BoundaryInterface bi;
        bi.x = 0.5 * (f.sx + f.ex) * d.h;
        bi.y = 0.5 * (f.sy + f.ey) * d.h;
        bi.nx = f.nx;
        bi.ny = f.ny;
        bi.t = step * d.h;
        bi.cell = f.cell;
        d.boundary.interfaces.push_back(bi);
        key = f.ex * vdim + f.ey;
    }
    assert(key == start && "boundary trace did not close");
    d.boundary.values.assign(d.boundary.interfaces.size(), 0.0);
    return d;
}

Domain generate_domain(int base_n, int n_corners, uint64_t seed) {
    if (base_n < 8) throw std::invalid_argument("generate_domain: base_n must be >= 8");
    if (n_corners < 0 || n_corners > 4)
        throw std::invalid_argument("generate_domain: n_corners must be in 0..4");

    Rng rng(seed);
    std::vector<int> order{0, 1, 2, 3};
    rng.shuffle(order);
    std::array<bool, 4> chosen{};
    for (int i = 0; i < n_corners; ++i) chosen[static_cast<size_t>(order[i])] = true;

    std::array<int, 4> cuts{};
    for (int k = 0; k < 4; ++k)
        if (chosen[static_cast<size_t>(k)]) cuts[static_cast<size_t>(k)] = rng.uniform_int(1, base_n / 2 - 1);
    return make_domain(base_n, cuts);
}

double evaluate_source(const SourceParams& p, double x, double y) {
    switch (p.family) {
        case SourceFamily::Sinusoidal:
            return p.amplitude * std::sin(p.a * x + p.b * y + p.phase);
        case SourceFamily::Exponential:
            return p.amplitude * std::exp(p.a * x + p.b * y);
        case SourceFamily::Logarithmic:
            return p.amplitude * std::log(std::max(1.0 + p.a * x + p.b * y, 0.1));
        case SourceFamily::Polynomial: {
            double acc = 0.0;
            int idx = 0;
            for (int pw = 0; pw <= 3; ++pw)
                for (int q = 0; q + pw <= 3; ++q)
                    acc += p.poly[static_cast<size_t>(idx++)] * std::pow(x, pw) * std::pow(y, q);
            return p.amplitude * acc;
        }
    }
    return 0.0;
}

SourceParams sample_source_params(uint64_t seed) {
    Rng rng(seed);
    SourceParams p;
    p.family = static_cast<SourceFamily>(rng.uniform_int(0, 3));
    p.amplitude = rng.uniform(0.5, 2.0);
    switch (p.family) {
        case SourceFamily::Sinusoidal:
            p.a = rng.uniform(0.5, 2 * kPi);
            p.b = rng.uniform(0.5, 2 * kPi);
            p.phase = rng.uniform(0, 2 * kPi);
            break;
        case SourceFamily::Exponential: {
            p.a = rng.uniform(0.5, 2 * kPi);
            p.b = rng.uniform(0.5, 2 * kPi);
            // keep max(a x + b y) <= 2 on the unit square so max|f| <= A e^2
            const double s = p.a + p.b;
            if (s > 2.0) {
                p.a *= 2.0 / s;
                p.b *= 2.0 / s;
            }
            break;
        }
        case SourceFamily::Logarithmic:
            p.a = rng.uniform(0.5, 2 * kPi);
            p.b = rng.uniform(0.5, 2 * kPi);
            break;
        case SourceFamily::Polynomial:
            for (auto& c : p.poly) c = rng.uniform(-1.0, 1.0);
            break;
    }
    return p;
}

SourceField sample_source(const Domain& domain, uint64_t seed) {
    SourceField f;
    f.params = sample_source_params(seed);
    f.values.reserve(domain.interior_cells.size());
    for (const auto& c : domain.interior_cells)
        f.values.push_back(evaluate_source(f.params, c[0], c[1]));
    return f;
}

std::vector<double> sinusoid_boundary(const BoundarySet& b, double amplitude,
                                      double wavelength, double phase) {
    std::vector<double> g;
    g.reserve(b.interfaces.size());
    for (const auto& bi : b.interfaces)
        g.push_back(amplitude * std::sin(2 * kPi * bi.t / wavelength + phase));
    return g;
}

BoundarySet sample_boundary_values(const BoundarySet& boundary, uint64_t seed,
                                   bool homogeneous) {
    BoundarySet out = boundary;
    if (homogeneous) {
        out.values.assign(out.interfaces.size(), 0.0);
        return out;
    }
    Rng rng(seed);
    const double wavelength = rng.uniform(1.0, 5.0);
    const double phase = rng.uniform(0.0, 2 * kPi);
    const double amplitude = rng.uniform(0.5, 2.0);
    out.values = sinusoid_boundary(out, amplitude, wavelength, phase);
    return out;
}

NodeDistances interior_boundary_distances(const Domain& domain) {
    NodeDistances nd;
    const int n = domain.num_cells();
    nd.dx.resize(static_cast<size_t>(n));
    nd.dy.resize(static_cast<size_t>(n));

    auto ray_cells = [&](int ix, int iy, int dx, int dy) {
        int m = 0;
        while (domain.cell_at(ix + (m + 1) * dx, iy + (m + 1) * dy) >= 0) ++m;
        return (m + 0.5) * domain.h;
    };

    for (int iy = 0; iy < domain.base_n; ++iy) {
        for (int ix = 0; ix < domain.base_n; ++ix) {
            const int c = domain.cell_at(ix, iy);
            if (c < 0) continue;
            nd.dx[static_cast<size_t>(c)] = std::min(ray_cells(ix, iy, 1, 0), ray_cells(ix, iy, -1, 0));
            nd.dy[static_cast<size_t>(c)] = std::min(ray_cells(ix, iy, 0, 1), ray_cells(ix, iy, 0, -1));
        }
    }

    double cx = 0, cy = 0;
    for (const auto& c : domain.interior_cells) {
        cx += c[0];
        cy += c[1];
    }
    cx /= std::max(n, 1);
    cy /= std::max(n, 1);
    nd.dc.reserve(domain.boundary.interfaces.size());
    for (const auto& bi : domain.boundary.interfaces)
        nd.dc.push_back(std::hypot(bi.x - cx, bi.y - cy));
    return nd;
}

}  // namespace beno
