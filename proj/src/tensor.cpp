#include "beno/tensor.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace beno {

int64_t Tensor::numel_of(const std::vector<int64_t>& s) {
    int64_t n = 1;
    for (int64_t d : s) n *= d;
    return n;
}

bool Tensor::all_finite() const {
    for (double v : values)
        if (!std::isfinite(v)) return false;
    return true;
}

std::string shape_str(const std::vector<int64_t>& s) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << "]";
    return os.str();
}

void check_finite(const Tensor& t, const char* context) {
    if (!t.all_finite())
        throw std::runtime_error(std::string("non-finite value in ") + context);
}

}  // namespace beno
