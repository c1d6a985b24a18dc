#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace beno {

// Dense row-major tensor of doubles. Rank is usually 1 or 2.
struct Tensor {
    std::vector<int64_t> shape;
    std::vector<double> values;

    Tensor() = default;
    explicit Tensor(std::vector<int64_t> s) : shape(std::move(s)) {
        values.assign(static_cast<size_t>(numel_of(shape)), 0.0);
    }
    Tensor(int64_t n, int64_t m) : Tensor(std::vector<int64_t>{n, m}) {}

    static int64_t numel_of(const std::vector<int64_t>& s);

    int64_t numel() const { return static_cast<int64_t>(values.size()); }
    int64_t rows() const { return shape.empty() ? 1 : shape[0]; }
    int64_t cols() const { return shape.size() < 2 ? 1 : shape[1]; }

    double& at(int64_t i, int64_t j) { return values[static_cast<size_t>(i * cols() + j)]; }
    double at(int64_t i, int64_t j) const { return values[static_cast<size_t>(i * cols() + j)]; }

    double* data() { return values.data(); }
    const double* data() const { return values.data(); }

    bool same_shape(const Tensor& o) const { return shape == o.shape; }
    bool all_finite() const;

    static Tensor scalar(double v) {
        Tensor t(std::vector<int64_t>{1});
        t.values[0] = v;
        return t;
    }
};

std::string shape_str(const std::vector<int64_t>& s);

// Throws std::runtime_error when t contains NaN or Inf.
void check_finite(const Tensor& t, const char* context);

}  // namespace beno
