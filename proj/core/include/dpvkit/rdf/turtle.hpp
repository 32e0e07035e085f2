#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "dpvkit/error.hpp"
#include "dpvkit/rdf/graph.hpp"

namespace dpvkit::rdf {

struct SourcePosition {
    std::size_t line = 1;
    std::size_t column = 1;
};

class ParseError : public Error {
public:
    ParseError(SourcePosition position, std::string token, const std::string& what);

    SourcePosition position() const noexcept { return position_; }
    const std::string& token() const noexcept { return token_; }

private:
    SourcePosition position_;
    std::string token_;
};

class UndefinedPrefixError : public ParseError {
public:
    UndefinedPrefixError(SourcePosition position, std::string prefix);

    const std::string& prefix() const noexcept { return prefix_; }

private:
    std::string prefix_;
};

/// Parses the Turtle subset used by DPV documents:
///   @prefix directives, `a`, comma object lists, semicolon predicate lists,
///   anonymous blank nodes `[ ... ]`, labeled blank nodes `_:label`,
///   plain/typed/language-tagged literals, IRIs in angle brackets, prefixed
///   names, and `#` comments.
/// Collections `( )`, `@base`, and bare numeric/boolean literals are outside
/// the subset and raise ParseError rather than being skipped.
/// Anonymous blank nodes receive fresh labels `b0`, `b1`, ... in document
/// order (never colliding with explicit labels).
Graph parse_turtle(std::string_view document);

/// Deterministic Turtle output: prefix declarations sorted by label, subjects
/// sorted by term kind then string, predicates and objects likewise. IRIs
/// under a declared namespace are compacted to prefixed names; everything
/// else stays in angle brackets. Output is byte-identical for equal graphs
/// and re-parses to an isomorphic graph. LF line endings.
std::string serialize_turtle(const Graph& g);

}  // namespace dpvkit::rdf
