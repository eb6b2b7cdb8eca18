// errors.hpp: exception types shared by the optobath modules

#pragma once

#include <stdexcept>
#include <string>

namespace optobath {

// Invalid parameter set or configuration document (CLI exit code 2).
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A response function was evaluated exactly on an undamped pole.
class PoleError : public std::domain_error {
public:
    PoleError(const std::string& what, double omega)
        : std::domain_error(what), omega_(omega) {}
    double omega() const noexcept { return omega_; }

private:
    double omega_;
};

// A closed form whose denominator vanishes (eta at g_c,max, etc.).
class DivergenceError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Operation called outside the regime where its formula is stated.
class RegimeError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double achieved_error)
        : std::runtime_error(what), achieved_error_(achieved_error) {}
    double achieved_error() const noexcept { return achieved_error_; }

private:
    double achieved_error_;
};

// Linear dynamics are unstable (or diverged during integration).
class InstabilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace optobath
