#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dpvkit/error.hpp"
#include "dpvkit/rdf/graph.hpp"

namespace dpvkit::vocab {

enum class SemanticsMode { RdfsSkos, Owl2 };

std::string to_string(SemanticsMode mode);

enum class ConceptStatus { Accepted, Deprecated };

struct Concept {
    rdf::Iri iri;
    std::optional<std::string> label;
    std::optional<std::string> definition;
    // Family roots this concept belongs to; computed from hierarchy
    // reachability against the declared top-concept set. A top concept's
    // only family is itself.
    std::set<rdf::Iri> top_concepts;
    ConceptStatus status = ConceptStatus::Accepted;

    bool operator==(const Concept&) const = default;
};

enum class HierarchyRelation { Broader, SubClassOf };

struct HierarchyEdge {
    rdf::Iri child;
    rdf::Iri parent;
    HierarchyRelation relation;

    auto operator<=>(const HierarchyEdge&) const = default;
};

class LoadError : public Error {
public:
    using Error::Error;
};

class CycleError : public LoadError {
public:
    explicit CycleError(std::vector<rdf::Iri> cycle);
    const std::vector<rdf::Iri>& cycle() const noexcept { return cycle_; }

private:
    std::vector<rdf::Iri> cycle_;
};

class DanglingEdgeError : public LoadError {
public:
    explicit DanglingEdgeError(rdf::Iri unknown);
    const rdf::Iri& unknown() const noexcept { return unknown_; }

private:
    rdf::Iri unknown_;
};

class MixedModeError : public LoadError {
public:
    MixedModeError();
};

class UnknownConceptError : public Error {
public:
    explicit UnknownConceptError(const rdf::Iri& iri);
};

class UnknownPropertyError : public Error {
public:
    explicit UnknownPropertyError(const rdf::Iri& iri);
};

class UnknownFamilyError : public Error {
public:
    explicit UnknownFamilyError(const rdf::Iri& iri);
};

// A vocabulary view over an RDF graph: concepts, their hierarchy, and the
// ranged properties. Validated on construction (edge endpoints must be known
// concepts, the hierarchy must be acyclic, property ranges must name declared
// top concepts) and immutable afterwards, so concurrent reads are safe.
class ConceptGraph {
public:
    ConceptGraph();  // empty, rdfs-skos

    ConceptGraph(SemanticsMode mode, std::map<rdf::Iri, Concept> concepts,
                 std::set<HierarchyEdge> edges, std::map<rdf::Iri, rdf::Iri> properties,
                 std::set<rdf::Iri> declared_tops, rdf::Graph source);

    SemanticsMode mode() const noexcept { return mode_; }
    const std::map<rdf::Iri, Concept>& concepts() const noexcept { return concepts_; }
    const std::set<HierarchyEdge>& edges() const noexcept { return edges_; }
    const std::map<rdf::Iri, rdf::Iri>& properties() const noexcept { return properties_; }
    const std::set<rdf::Iri>& declared_tops() const noexcept { return declared_tops_; }
    const rdf::Graph& source() const noexcept { return source_; }

    bool has_concept(const rdf::Iri& iri) const { return concepts_.count(iri) != 0; }
    const Concept& concept_at(const rdf::Iri& iri) const;

    // Direct parents, sorted. Empty for unknown IRIs.
    const std::vector<rdf::Iri>& parents_of(const rdf::Iri& iri) const;

    // Semantic equality; the backing source graph is deliberately excluded so
    // that two serializations of the same vocabulary compare equal.
    bool operator==(const ConceptGraph& other) const {
        return mode_ == other.mode_ && concepts_ == other.concepts_ && edges_ == other.edges_ &&
               properties_ == other.properties_ && declared_tops_ == other.declared_tops_;
    }

private:
    void validate_and_index();

    SemanticsMode mode_ = SemanticsMode::RdfsSkos;
    std::map<rdf::Iri, Concept> concepts_;
    std::set<HierarchyEdge> edges_;
    std::map<rdf::Iri, rdf::Iri> properties_;
    std::set<rdf::Iri> declared_tops_;
    rdf::Graph source_;
    std::map<rdf::Iri, std::vector<rdf::Iri>> parent_index_;
};

}  // namespace dpvkit::vocab
