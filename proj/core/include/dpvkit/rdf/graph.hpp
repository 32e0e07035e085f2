#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dpvkit/rdf/term.hpp"

namespace dpvkit::rdf {

// A set of triples plus the prefix map of the document it came from.
// Construction is single-owner; once handed out, a Graph is only read, so
// concurrent lookups are safe.
class Graph {
public:
    Graph() = default;

    // Binds `label` to `ns`. Rebinding a label to a different namespace throws.
    void add_prefix(const std::string& label, const Iri& ns);

    // Set semantics: inserting an existing triple is a no-op.
    void insert(Triple t) { triples_.insert(std::move(t)); }

    bool contains(const Triple& t) const { return triples_.count(t) != 0; }
    bool has(const Term& s, const Iri& p, const Term& o) const {
        return contains(Triple(s, p, o));
    }

    std::size_t size() const noexcept { return triples_.size(); }
    bool empty() const noexcept { return triples_.empty(); }

    const std::set<Triple>& triples() const noexcept { return triples_; }
    const std::map<std::string, Iri>& prefixes() const noexcept { return prefixes_; }

    // All objects of (subject, predicate, ?), in term order.
    std::vector<Term> objects(const Term& subject, const Iri& predicate) const;

    // First object of (subject, predicate, ?), if any.
    std::optional<Term> object(const Term& subject, const Iri& predicate) const;

    // Subjects having an rdf:type triple with the given object, in term order.
    std::vector<Term> subjects_of_type(const Iri& type) const;

    std::vector<Triple> with_predicate(const Iri& predicate) const;

    // Every distinct blank node label occurring in subject or object position.
    std::set<std::string> blank_labels() const;

    bool operator==(const Graph& other) const {
        return triples_ == other.triples_ && prefixes_ == other.prefixes_;
    }

private:
    std::map<std::string, Iri> prefixes_;
    std::set<Triple> triples_;
};

// Union of several graphs. Prefix maps are merged (conflicting bindings for
// the same label throw); blank node labels are renamed per input graph so
// nodes from different documents never collapse.
Graph merge_graphs(const std::vector<Graph>& graphs);

}  // namespace dpvkit::rdf
