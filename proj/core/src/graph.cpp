#include "dpvkit/rdf/graph.hpp"

#include <algorithm>

#include "dpvkit/rdf/namespaces.hpp"

namespace dpvkit::rdf {

void Graph::add_prefix(const std::string& label, const Iri& ns) {
    auto [it, inserted] = prefixes_.emplace(label, ns);
    if (!inserted && it->second != ns)
        throw Error("prefix '" + label + ":' already bound to <" + it->second.str() +
                    ">, cannot rebind to <" + ns.str() + ">");
}

std::vector<Term> Graph::objects(const Term& subject, const Iri& predicate) const {
    std::vector<Term> out;
    for (const Triple& t : triples_)
        if (t.subject == subject && t.predicate == predicate) out.push_back(t.object);
    return out;
}

std::optional<Term> Graph::object(const Term& subject, const Iri& predicate) const {
    for (const Triple& t : triples_)
        if (t.subject == subject && t.predicate == predicate) return t.object;
    return std::nullopt;
}

std::vector<Term> Graph::subjects_of_type(const Iri& type) const {
    std::vector<Term> out;
    const Term object = Term::iri(type);
    for (const Triple& t : triples_)
        if (t.predicate == ns::rdf_type && t.object == object) out.push_back(t.subject);
    return out;
}

std::vector<Triple> Graph::with_predicate(const Iri& predicate) const {
    std::vector<Triple> out;
    for (const Triple& t : triples_)
        if (t.predicate == predicate) out.push_back(t);
    return out;
}

std::set<std::string> Graph::blank_labels() const {
    std::set<std::string> labels;
    for (const Triple& t : triples_) {
        if (t.subject.is_blank()) labels.insert(t.subject.value());
        if (t.object.is_blank()) labels.insert(t.object.value());
    }
    return labels;
}

Graph merge_graphs(const std::vector<Graph>& graphs) {
    Graph merged;
    std::set<std::string> used;
    std::size_t counter = 0;
    for (const Graph& g : graphs) {
        for (const auto& [label, ns] : g.prefixes()) merged.add_prefix(label, ns);

        // Rename this graph's blank labels when they are already taken.
        std::map<std::string, std::string> rename;
        for (const std::string& label : g.blank_labels()) {
            std::string fresh = label;
            while (used.count(fresh) != 0) fresh = "m" + std::to_string(counter++);
            used.insert(fresh);
            rename.emplace(label, fresh);
        }
        auto mapped = [&rename](const Term& t) {
            if (!t.is_blank()) return t;
            return Term::blank(rename.at(t.value()));
        };
        for (const Triple& t : g.triples())
            merged.insert(Triple(mapped(t.subject), t.predicate, mapped(t.object)));
    }
    return merged;
}

}  // namespace dpvkit::rdf
