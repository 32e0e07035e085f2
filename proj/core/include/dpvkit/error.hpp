#pragma once

#include <stdexcept>
#include <string>

namespace dpvkit {

// Root of all toolkit errors. Failures that make a result impossible throw;
// findings that a caller may tolerate are reported as Diagnostic values instead.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dpvkit
