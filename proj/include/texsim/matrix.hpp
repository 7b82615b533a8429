#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace texsim {

// Dense row-major real matrix.
struct RealMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> data;

    RealMatrix() = default;
    RealMatrix(int r, int c, double fill = 0.0)
        : rows(r), cols(c), data(static_cast<size_t>(r) * static_cast<size_t>(c), fill) {}

    double& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
    double at(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }
    size_t size() const { return data.size(); }
};

// Dense row-major complex matrix.
struct ComplexMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::complex<double>> data;

    ComplexMatrix() = default;
    ComplexMatrix(int r, int c)
        : rows(r), cols(c), data(static_cast<size_t>(r) * static_cast<size_t>(c)) {}

    std::complex<double>& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
    const std::complex<double>& at(int r, int c) const {
        return data[static_cast<size_t>(r) * cols + c];
    }
    size_t size() const { return data.size(); }
};

double squared_norm(const RealMatrix& m);
double squared_norm(const ComplexMatrix& m);

}  // namespace texsim
