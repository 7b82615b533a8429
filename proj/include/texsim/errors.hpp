#pragma once

#include <stdexcept>
#include <string>

namespace texsim {

// Base class for all texsim errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Shape mismatch between images, channels or matrices.
class dimension_error : public error {
public:
    explicit dimension_error(const std::string& msg) : error(msg) {}
};

// Invalid or infeasible transform/runtime parameters.
class parameter_error : public error {
public:
    explicit parameter_error(const std::string& msg) : error(msg) {}
};

// A decomposition whose wedge set does not match its parameters.
class structure_error : public error {
public:
    explicit structure_error(const std::string& msg) : error(msg) {}
};

// Two objects that cannot be compared (different layouts or sizes).
class incompatibility_error : public error {
public:
    explicit incompatibility_error(const std::string& msg) : error(msg) {}
};

// Non-finite values where finite arithmetic is required.
class numeric_error : public error {
public:
    explicit numeric_error(const std::string& msg) : error(msg) {}
};

// Unreadable, corrupt or malformed input data.
class data_error : public error {
public:
    explicit data_error(const std::string& msg) : error(msg) {}
};

// An experiment setup that cannot be evaluated (e.g. S < 2, degenerate labels).
class config_error : public error {
public:
    explicit config_error(const std::string& msg) : error(msg) {}
};

// All-zero singular value spectrum; callers map this to effective rank 0.
class zero_spectrum_error : public error {
public:
    explicit zero_spectrum_error(const std::string& msg) : error(msg) {}
};

}  // namespace texsim
