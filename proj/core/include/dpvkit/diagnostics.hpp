#pragma once

#include <compare>
#include <string>
#include <vector>

namespace dpvkit {

// A non-fatal finding. `code` is a stable machine identifier, `path` locates
// the finding inside the checked artifact (may be empty), `message` is for
// humans.
struct Diagnostic {
    std::string code;
    std::string path;
    std::string message;

    auto operator<=>(const Diagnostic&) const = default;
};

using Diagnostics = std::vector<Diagnostic>;

}  // namespace dpvkit
