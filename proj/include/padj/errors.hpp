#pragma once

#include <stdexcept>
#include <string>

namespace padj {

/// Malformed argument: bad permutation literal, out-of-range index, etc.
class input_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A request that would exceed a configured size limit (factorial blowup guard).
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Internal identity failed to hold, e.g. a multiplicity that does not divide exactly.
class consistency_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Quantity with no value, e.g. the mean over an empty class.
class undefined_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace padj
