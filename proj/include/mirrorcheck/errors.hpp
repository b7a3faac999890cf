#pragma once

#include <stdexcept>
#include <string>

namespace mirrorcheck {

// A caller violated a documented precondition (bad constant term, bad input data).
class precondition_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Reading a series coefficient beyond its truncation order.
class truncation_error : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// An exact division did not come out exact (nonzero remainder, non-integer quotient).
class inexact_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A linear system has no solution.
class inconsistent_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A computed result disagrees with the value it is checked against.
class verification_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace mirrorcheck
