#include "texsim/matrix.hpp"

namespace texsim {

double squared_norm(const RealMatrix& m) {
    double s = 0.0;
    for (double v : m.data) s += v * v;
    return s;
}

double squared_norm(const ComplexMatrix& m) {
    double s = 0.0;
    for (const auto& v : m.data) s += std::norm(v);
    return s;
}

}  // namespace texsim
