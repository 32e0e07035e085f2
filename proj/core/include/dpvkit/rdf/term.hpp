#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>

#include "dpvkit/error.hpp"

namespace dpvkit::rdf {

// An absolute IRI. Two IRIs are equal iff their strings are codepoint-equal;
// no normalization is applied.
class Iri {
public:
    explicit Iri(std::string value) : value_(std::move(value)) {
        if (value_.empty() || value_.find(':') == std::string::npos)
            throw Error("not an absolute IRI: '" + value_ + "'");
    }

    const std::string& str() const noexcept { return value_; }

    auto operator<=>(const Iri&) const = default;

private:
    std::string value_;
};

enum class TermKind { Iri, BlankNode, Literal };

// One RDF term: an IRI, a blank node (label stored without the `_:` sigil),
// or a literal. A literal carries at most one of datatype and language tag.
class Term {
public:
    static Term iri(Iri value) {
        return Term(TermKind::Iri, std::move(value).str(), std::nullopt, std::nullopt);
    }
    static Term blank(std::string label) {
        if (label.empty()) throw Error("blank node label must be non-empty");
        return Term(TermKind::BlankNode, std::move(label), std::nullopt, std::nullopt);
    }
    static Term literal(std::string lexical, std::optional<Iri> datatype = std::nullopt,
                        std::optional<std::string> language = std::nullopt) {
        if (datatype && language)
            throw Error("literal cannot carry both a datatype and a language tag");
        return Term(TermKind::Literal, std::move(lexical), std::move(datatype),
                    std::move(language));
    }

    TermKind kind() const noexcept { return kind_; }
    bool is_iri() const noexcept { return kind_ == TermKind::Iri; }
    bool is_blank() const noexcept { return kind_ == TermKind::BlankNode; }
    bool is_literal() const noexcept { return kind_ == TermKind::Literal; }

    // IRI string, blank label, or literal lexical form depending on kind.
    const std::string& value() const noexcept { return value_; }

    Iri as_iri() const {
        if (!is_iri()) throw Error("term is not an IRI: " + value_);
        return Iri(value_);
    }

    const std::optional<Iri>& datatype() const noexcept { return datatype_; }
    const std::optional<std::string>& language() const noexcept { return language_; }

    auto operator<=>(const Term&) const = default;

private:
    Term(TermKind kind, std::string value, std::optional<Iri> datatype,
         std::optional<std::string> language)
        : kind_(kind),
          value_(std::move(value)),
          datatype_(std::move(datatype)),
          language_(std::move(language)) {}

    // Member order doubles as the sort order: kind first, then string.
    TermKind kind_;
    std::string value_;
    std::optional<Iri> datatype_;
    std::optional<std::string> language_;
};

struct Triple {
    Triple(Term subject, Iri predicate, Term object)
        : subject(std::move(subject)), predicate(std::move(predicate)), object(std::move(object)) {
        if (this->subject.is_literal())
            throw Error("triple subject cannot be a literal");
    }

    Term subject;
    Iri predicate;
    Term object;

    auto operator<=>(const Triple&) const = default;
};

}  // namespace dpvkit::rdf
