// Error codes shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace qfgl {

enum class errc {
    non_prime,
    size_cap_exceeded,
    division_by_zero,
    even_characteristic,
    iteration_cap_exceeded,
    enumeration_cap_exceeded,
    graph_cap_exceeded,
    clique_cap_exceeded,
    not_symmetric,
    not_a_divisor,
    zero_form,
    trivial_character,
    wrong_form_class,
    degree_divides_char,
    constant_polynomial,
    odd_degree,
    invalid_argument,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::non_prime: return "NonPrime";
        case errc::size_cap_exceeded: return "SizeCapExceeded";
        case errc::division_by_zero: return "DivisionByZero";
        case errc::even_characteristic: return "EvenCharacteristic";
        case errc::iteration_cap_exceeded: return "IterationCapExceeded";
        case errc::enumeration_cap_exceeded: return "EnumerationCapExceeded";
        case errc::graph_cap_exceeded: return "GraphCapExceeded";
        case errc::clique_cap_exceeded: return "CliqueCapExceeded";
        case errc::not_symmetric: return "NotSymmetric";
        case errc::not_a_divisor: return "NotADivisor";
        case errc::zero_form: return "ZeroForm";
        case errc::trivial_character: return "TrivialCharacter";
        case errc::wrong_form_class: return "WrongFormClass";
        case errc::degree_divides_char: return "DegreeDividesChar";
        case errc::constant_polynomial: return "ConstantPolynomial";
        case errc::odd_degree: return "OddDegree";
        case errc::invalid_argument: return "InvalidArgument";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    errc code() const { return code_; }

    // Cap violations get a dedicated exit code in the CLI.
    bool is_cap() const {
        return code_ == errc::size_cap_exceeded || code_ == errc::iteration_cap_exceeded ||
               code_ == errc::enumeration_cap_exceeded || code_ == errc::graph_cap_exceeded ||
               code_ == errc::clique_cap_exceeded;
    }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool cond, errc code, const std::string& msg) {
    if (!cond) fail(code, msg);
}

}  // namespace qfgl
