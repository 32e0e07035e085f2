#include "dpvkit/vocab/concept_graph.hpp"

#include <algorithm>
#include <deque>

namespace dpvkit::vocab {

std::string to_string(SemanticsMode mode) {
    return mode == SemanticsMode::RdfsSkos ? "rdfs-skos" : "owl2";
}

namespace {

std::string join_cycle(const std::vector<rdf::Iri>& cycle) {
    std::string out;
    for (const rdf::Iri& iri : cycle) {
        if (!out.empty()) out += " -> ";
        out += "<" + iri.str() + ">";
    }
    return out;
}

}  // namespace

CycleError::CycleError(std::vector<rdf::Iri> cycle)
    : LoadError("hierarchy contains a cycle: " + join_cycle(cycle)), cycle_(std::move(cycle)) {}

DanglingEdgeError::DanglingEdgeError(rdf::Iri unknown)
    : LoadError("hierarchy edge references unknown concept <" + unknown.str() + ">"),
      unknown_(std::move(unknown)) {}

MixedModeError::MixedModeError()
    : LoadError("document mixes skos:broader and rdfs:subClassOf hierarchies; "
                "expected a single serialization") {}

UnknownConceptError::UnknownConceptError(const rdf::Iri& iri)
    : Error("unknown concept <" + iri.str() + ">") {}

UnknownPropertyError::UnknownPropertyError(const rdf::Iri& iri)
    : Error("unknown property (no declared range): <" + iri.str() + ">") {}

UnknownFamilyError::UnknownFamilyError(const rdf::Iri& iri)
    : Error("concept <" + iri.str() + "> reaches no declared top concept") {}

ConceptGraph::ConceptGraph() = default;

ConceptGraph::ConceptGraph(SemanticsMode mode, std::map<rdf::Iri, Concept> concepts,
                           std::set<HierarchyEdge> edges, std::map<rdf::Iri, rdf::Iri> properties,
                           std::set<rdf::Iri> declared_tops, rdf::Graph source)
    : mode_(mode),
      concepts_(std::move(concepts)),
      edges_(std::move(edges)),
      properties_(std::move(properties)),
      declared_tops_(std::move(declared_tops)),
      source_(std::move(source)) {
    validate_and_index();
}

const Concept& ConceptGraph::concept_at(const rdf::Iri& iri) const {
    auto it = concepts_.find(iri);
    if (it == concepts_.end()) throw UnknownConceptError(iri);
    return it->second;
}

const std::vector<rdf::Iri>& ConceptGraph::parents_of(const rdf::Iri& iri) const {
    static const std::vector<rdf::Iri> none;
    auto it = parent_index_.find(iri);
    return it == parent_index_.end() ? none : it->second;
}

void ConceptGraph::validate_and_index() {
    const HierarchyRelation expected =
        mode_ == SemanticsMode::RdfsSkos ? HierarchyRelation::Broader : HierarchyRelation::SubClassOf;

    for (const HierarchyEdge& e : edges_) {
        if (e.relation != expected)
            throw LoadError("edge relation does not match " + to_string(mode_) + " mode");
        if (concepts_.count(e.child) == 0) throw DanglingEdgeError(e.child);
        if (concepts_.count(e.parent) == 0) throw DanglingEdgeError(e.parent);
        parent_index_[e.child].push_back(e.parent);
    }
    for (auto& [child, parents] : parent_index_) std::sort(parents.begin(), parents.end());

    for (const auto& [property, range] : properties_)
        if (declared_tops_.count(range) == 0)
            throw LoadError("range of property <" + property.str() +
                            "> is not a declared top concept: <" + range.str() + ">");

    // Cycle check: iterative DFS with colors; reconstructs one cycle path.
    enum class Color { White, Grey, Black };
    std::map<rdf::Iri, Color> color;
    std::map<rdf::Iri, rdf::Iri> came_from;
    for (const auto& [iri, c] : concepts_) color.emplace(iri, Color::White);
    for (const auto& [start, c] : concepts_) {
        if (color[start] != Color::White) continue;
        std::vector<std::pair<rdf::Iri, std::size_t>> stack{{start, 0}};
        color[start] = Color::Grey;
        while (!stack.empty()) {
            auto& [node, next] = stack.back();
            const std::vector<rdf::Iri>& parents = parents_of(node);
            if (next < parents.size()) {
                rdf::Iri parent = parents[next++];
                if (color[parent] == Color::Grey) {
                    std::vector<rdf::Iri> cycle{parent};
                    for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
                        cycle.push_back(it->first);
                        if (it->first == parent) break;
                    }
                    std::reverse(cycle.begin(), cycle.end());
                    throw CycleError(std::move(cycle));
                }
                if (color[parent] == Color::White) {
                    color[parent] = Color::Grey;
                    stack.emplace_back(parent, 0);
                }
            } else {
                color[node] = Color::Black;
                stack.pop_back();
            }
        }
    }

    // Family membership: reachable declared tops; a top concept is its own
    // (sole direct) family.
    for (auto& [iri, c] : concepts_) {
        std::set<rdf::Iri> families;
        if (declared_tops_.count(iri) != 0) families.insert(iri);
        std::deque<rdf::Iri> queue{iri};
        std::set<rdf::Iri> seen{iri};
        while (!queue.empty()) {
            rdf::Iri node = queue.front();
            queue.pop_front();
            for (const rdf::Iri& parent : parents_of(node)) {
                if (!seen.insert(parent).second) continue;
                if (declared_tops_.count(parent) != 0) families.insert(parent);
                queue.push_back(parent);
            }
        }
        c.top_concepts = std::move(families);
    }
}

}  // namespace dpvkit::vocab
