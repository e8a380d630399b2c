#pragma once

#include <stdexcept>
#include <string>

namespace shiftcert {

// Bad argument values or an invalid spec/config object.
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Vector/matrix shape mismatch, or a construction that needs more dimensions
// than are available.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Numerical failure: rank deficiency, non-finite inputs, degenerate samples.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A bound or condition check does not apply to the given model/shift
// (empty nuisance support, C3 violated, ...).
struct CertificateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Formula evaluated outside its mathematical domain.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Config file problems (unknown keys, wrong types, missing fields).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Missing/empty columns when rendering plots or parsing tabular data.
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace shiftcert
