#pragma once

#include <stdexcept>
#include <string>

namespace potrisk {

// Error categories map onto CLI exit codes: input 2, domain 3, convergence 4.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

class convergence_error : public std::runtime_error {
public:
    explicit convergence_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace potrisk
