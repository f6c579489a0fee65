#pragma once

#include <stdexcept>
#include <string>

namespace cohpol {

// Malformed or out-of-range input (bad file, bad parameter, invalid state).
class InputError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Well-formed input for which the requested quantity does not exist,
// e.g. a coherence degree for a state with an empty slit.
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

}  // namespace cohpol
