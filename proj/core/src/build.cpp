#include "dpvkit/build/build.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "dpvkit/rdf/namespaces.hpp"
#include "dpvkit/vocab/convert.hpp"
#include "dpvkit/vocab/load.hpp"
#include "dpvkit/vocab/query.hpp"

namespace dpvkit::build {

namespace ns = rdf::ns;

namespace {

// RFC 4180-style rows: quoted fields may contain commas, escaped quotes and
// newlines.
std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool quoted = false;
    bool any = false;

    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    i += 2;
                } else {
                    quoted = false;
                    ++i;
                }
            } else {
                field += c;
                ++i;
            }
            continue;
        }
        switch (c) {
            case '"':
                quoted = true;
                any = true;
                ++i;
                break;
            case ',':
                row.push_back(std::move(field));
                field.clear();
                any = true;
                ++i;
                break;
            case '\r': ++i; break;
            case '\n':
                if (any || !field.empty() || !row.empty()) {
                    row.push_back(std::move(field));
                    rows.push_back(std::move(row));
                }
                field.clear();
                row.clear();
                any = false;
                ++i;
                break;
            default:
                field += c;
                any = true;
                ++i;
        }
    }
    if (quoted) throw BuildError("unterminated quoted CSV field");
    if (any || !field.empty() || !row.empty()) {
        row.push_back(std::move(field));
        rows.push_back(std::move(row));
    }
    return rows;
}

const std::vector<std::string> kHeader = {"term",       "type",   "parent", "top_concept",
                                          "definition", "status", "range"};

}  // namespace

std::vector<SourceRow> read_sheet(const std::string& csv_text) {
    auto rows = parse_csv(csv_text);
    if (rows.empty()) return {};
    if (rows.front() != kHeader) {
        std::string want;
        for (const std::string& h : kHeader) want += (want.empty() ? "" : ",") + h;
        throw BuildError("sheet header must be exactly: " + want);
    }

    std::vector<SourceRow> out;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto& cells = rows[i];
        if (cells.size() != kHeader.size())
            throw BuildError("row " + std::to_string(i + 1) + " has " +
                             std::to_string(cells.size()) + " fields, expected " +
                             std::to_string(kHeader.size()));
        SourceRow row;
        row.term = cells[0];
        if (row.term.empty()) throw BuildError("row " + std::to_string(i + 1) + " has no term");
        if (cells[1] == "class") row.type = RowType::Class;
        else if (cells[1] == "property") row.type = RowType::Property;
        else
            throw BuildError("row " + std::to_string(i + 1) + " (" + row.term +
                             "): type must be 'class' or 'property', got '" + cells[1] + "'");
        row.parent = cells[2];
        row.top_concept = cells[3];
        row.definition = cells[4];
        if (cells[5] == "deprecated") row.deprecated = true;
        else if (!cells[5].empty() && cells[5] != "accepted")
            throw BuildError("row " + std::to_string(i + 1) + " (" + row.term +
                             "): status must be 'accepted' or 'deprecated'");
        row.range = cells[6];
        if (row.type == RowType::Class && !row.range.empty())
            throw BuildError("row " + std::to_string(i + 1) + " (" + row.term +
                             "): only property rows may declare a range");
        out.push_back(std::move(row));
    }
    return out;
}

std::vector<SourceRow> read_sheet_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw BuildError("cannot open sheet: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return read_sheet(buffer.str());
}

namespace {

struct NameResolver {
    const registry::Registry& reg;
    rdf::Iri ext_ns;
    std::map<std::string, const SourceRow*> local;  // term -> row

    rdf::Iri resolve(const std::string& name, const std::string& row_term) const {
        auto colon = name.find(':');
        if (colon != std::string::npos) {
            std::string prefix = name.substr(0, colon);
            std::string local_name = name.substr(colon + 1);
            auto prefixes = reg.prefix_map();
            auto it = prefixes.find(prefix);
            if (it == prefixes.end())
                throw BuildError("row '" + row_term + "': unresolved qualified name '" + name +
                                 "' (unknown prefix '" + prefix + "')");
            return rdf::Iri(it->second.str() + local_name);
        }
        if (local.count(name) == 0)
            throw BuildError("row '" + row_term + "': unresolved parent '" + name +
                             "' is not a term in this sheet");
        return rdf::Iri(ext_ns.str() + name);
    }

    bool is_local(const std::string& name) const { return name.find(':') == std::string::npos; }
};

// Prefixes actually used by the triples, drawn from the registry plus the
// usual W3C namespaces, so serialization stays compact and stable.
void bind_used_prefixes(rdf::Graph& g, const registry::Registry& reg) {
    std::map<std::string, rdf::Iri> candidates = reg.prefix_map();
    candidates.emplace("rdf", rdf::Iri(ns::rdf));
    candidates.emplace("rdfs", rdf::Iri(ns::rdfs));
    candidates.emplace("owl", rdf::Iri(ns::owl));
    candidates.emplace("skos", rdf::Iri(ns::skos));
    candidates.emplace("sw", rdf::Iri(ns::vocab_status));
    candidates.emplace("xsd", rdf::Iri(ns::xsd));

    auto used = [&g](const rdf::Iri& namespace_iri) {
        const std::string& p = namespace_iri.str();
        auto covers = [&p](const std::string& s) {
            return s.size() > p.size() && s.compare(0, p.size(), p) == 0 &&
                   s.find('/', p.size()) == std::string::npos &&
                   s.find('#', p.size()) == std::string::npos;
        };
        for (const rdf::Triple& t : g.triples()) {
            if (t.subject.is_iri() && covers(t.subject.value())) return true;
            if (covers(t.predicate.str())) return true;
            if (t.object.is_iri() && covers(t.object.value())) return true;
            if (t.object.is_literal() && t.object.datatype() && covers(t.object.datatype()->str()))
                return true;
        }
        return false;
    };
    for (const auto& [label, namespace_iri] : candidates)
        if (g.prefixes().count(label) == 0 && used(namespace_iri))
            g.add_prefix(label, namespace_iri);
}

}  // namespace

BuildResult build(const std::vector<SourceRow>& rows, const registry::ExtensionDescriptor& entry,
                  const std::string& version, const registry::Registry& reg,
                  const rdf::Graph* base) {
    if (std::find(entry.versions.begin(), entry.versions.end(), version) == entry.versions.end())
        throw BuildError("extension '" + entry.short_name + "' has no version '" + version + "'");

    NameResolver resolver{reg, reg.concept_namespace(entry.short_name), {}};
    for (const SourceRow& row : rows) {
        auto [it, inserted] = resolver.local.emplace(row.term, &row);
        if (!inserted) throw BuildError("duplicate term '" + row.term + "' in sheet");
    }

    // Local parents must match their child's kind; the qualified ones are
    // vouched for by the base vocabulary.
    for (const SourceRow& row : rows) {
        if (row.parent.empty() || !resolver.is_local(row.parent)) continue;
        auto it = resolver.local.find(row.parent);
        if (it == resolver.local.end())
            throw BuildError("row '" + row.term + "': unresolved parent '" + row.parent +
                             "' is not a term in this sheet");
        if (it->second->type != row.type)
            throw BuildError("row '" + row.term + "': parent '" + row.parent +
                             "' must be a " +
                             (row.type == RowType::Class ? "class" : "property"));
    }

    rdf::Graph skos_graph;
    for (const SourceRow& row : rows) {
        const rdf::Term subject = rdf::Term::iri(rdf::Iri(resolver.ext_ns.str() + row.term));
        if (row.type == RowType::Class) {
            skos_graph.insert(rdf::Triple(subject, ns::rdf_type, rdf::Term::iri(ns::skos_concept)));
            if (!row.top_concept.empty())
                skos_graph.insert(rdf::Triple(
                    subject, ns::rdf_type,
                    rdf::Term::iri(resolver.resolve(row.top_concept, row.term))));
            if (!row.parent.empty())
                skos_graph.insert(rdf::Triple(subject, ns::skos_broader,
                                              rdf::Term::iri(resolver.resolve(row.parent,
                                                                              row.term))));
        } else {
            skos_graph.insert(rdf::Triple(subject, ns::rdf_type, rdf::Term::iri(ns::rdf_property)));
            if (!row.parent.empty())
                skos_graph.insert(rdf::Triple(subject, ns::rdfs_sub_property_of,
                                              rdf::Term::iri(resolver.resolve(row.parent,
                                                                              row.term))));
            if (!row.range.empty())
                skos_graph.insert(rdf::Triple(
                    subject, ns::rdfs_range,
                    rdf::Term::iri(resolver.resolve(row.range, row.term))));
        }
        skos_graph.insert(rdf::Triple(subject, ns::skos_pref_label, rdf::Term::literal(row.term)));
        if (!row.definition.empty())
            skos_graph.insert(
                rdf::Triple(subject, ns::skos_definition, rdf::Term::literal(row.definition)));
        if (row.deprecated)
            skos_graph.insert(
                rdf::Triple(subject, ns::term_status, rdf::Term::literal("deprecated")));
    }
    bind_used_prefixes(skos_graph, reg);

    rdf::Graph full_skos =
        base != nullptr ? rdf::merge_graphs({*base, skos_graph}) : skos_graph;

    vocab::ConceptGraph full_cg;
    try {
        full_cg = vocab::load_vocabulary(full_skos, vocab::SemanticsMode::RdfsSkos,
                                         reg.all_top_concepts());
    } catch (const vocab::DanglingEdgeError& e) {
        throw BuildError("unresolved parent <" + e.unknown().str() +
                         ">: not in this sheet and no base vocabulary provides it");
    }

    // Convert, then keep only this extension's subjects: context concepts
    // belong to their own release files.
    vocab::ConceptGraph owl_cg = vocab::to_owl2(full_cg);
    rdf::Graph owl_graph;
    const std::string& prefix_str = resolver.ext_ns.str();
    for (const rdf::Triple& t : owl_cg.source().triples()) {
        if (!t.subject.is_iri()) continue;
        const std::string& s = t.subject.value();
        if (s.size() > prefix_str.size() && s.compare(0, prefix_str.size(), prefix_str) == 0)
            owl_graph.insert(t);
    }
    bind_used_prefixes(owl_graph, reg);

    VocabSnapshot snapshot{entry.short_name, version, resolver.ext_ns, std::move(full_cg)};
    return BuildResult{std::move(snapshot), std::move(skos_graph), std::move(owl_graph)};
}

namespace {

struct ScopedIris {
    std::set<rdf::Iri> classes;
    std::set<rdf::Iri> properties;
    std::set<rdf::Iri> all;
};

ScopedIris scoped_iris(const VocabSnapshot& s) {
    const std::string& p = s.ns.str();
    auto in_scope = [&p](const rdf::Iri& iri) {
        const std::string& v = iri.str();
        return v.size() > p.size() && v.compare(0, p.size(), p) == 0;
    };
    ScopedIris out;
    for (const auto& [iri, c] : s.concept_graph.concepts())
        if (in_scope(iri)) {
            out.classes.insert(iri);
            out.all.insert(iri);
        }
    for (const auto& [iri, range] : s.concept_graph.properties())
        if (in_scope(iri)) {
            out.properties.insert(iri);
            out.all.insert(iri);
        }
    return out;
}

}  // namespace

DiffReport diff(const VocabSnapshot& older, const VocabSnapshot& newer) {
    if (older.name != newer.name)
        throw BuildError("cannot diff different extensions: '" + older.name + "' vs '" +
                         newer.name + "'");

    ScopedIris old_iris = scoped_iris(older);
    ScopedIris new_iris = scoped_iris(newer);

    DiffReport report;
    report.extension = older.name;
    report.old_version = older.version;
    report.new_version = newer.version;
    report.old_counts = {old_iris.all.size(), old_iris.classes.size(), old_iris.properties.size()};
    report.new_counts = {new_iris.all.size(), new_iris.classes.size(), new_iris.properties.size()};

    std::set_difference(new_iris.all.begin(), new_iris.all.end(), old_iris.all.begin(),
                        old_iris.all.end(), std::inserter(report.added, report.added.end()));
    std::set_difference(old_iris.all.begin(), old_iris.all.end(), new_iris.all.begin(),
                        new_iris.all.end(), std::inserter(report.removed, report.removed.end()));
    std::set_intersection(old_iris.all.begin(), old_iris.all.end(), new_iris.all.begin(),
                          new_iris.all.end(),
                          std::inserter(report.retained, report.retained.end()));
    return report;
}

std::string changelog_json(const DiffReport& report) {
    auto iri_array = [](const std::set<rdf::Iri>& iris) {
        auto arr = nlohmann::ordered_json::array();
        for (const rdf::Iri& iri : iris) arr.push_back(iri.str());
        return arr;
    };
    auto counts = [](const DiffCounts& c) {
        nlohmann::ordered_json out;
        out["total"] = c.total;
        out["classes"] = c.classes;
        out["properties"] = c.properties;
        return out;
    };

    nlohmann::ordered_json doc;
    doc["extension"] = report.extension;
    doc["old_version"] = report.old_version;
    doc["new_version"] = report.new_version;
    doc["added"] = iri_array(report.added);
    doc["removed"] = iri_array(report.removed);
    doc["retained"] = iri_array(report.retained);
    doc["counts"]["old"] = counts(report.old_counts);
    doc["counts"]["new"] = counts(report.new_counts);
    return doc.dump(2) + "\n";
}

std::string emit_index(const VocabSnapshot& s) {
    ScopedIris scope = scoped_iris(s);

    // Exactly one group per concept: its lexicographically first family.
    std::map<std::string, std::vector<rdf::Iri>> groups;
    for (const rdf::Iri& iri : scope.classes) {
        const vocab::Concept& c = s.concept_graph.concept_at(iri);
        std::string key = c.top_concepts.empty() ? "" : c.top_concepts.begin()->str();
        groups[key].push_back(iri);
    }

    nlohmann::ordered_json doc;
    doc["vocabulary"] = s.name;
    doc["version"] = s.version;
    doc["namespace"] = s.ns.str();
    doc["concepts"] = scope.classes.size();
    doc["groups"] = nlohmann::ordered_json::array();
    for (const auto& [family, members] : groups) {
        nlohmann::ordered_json group;
        if (family.empty()) group["top_concept"] = nullptr;
        else group["top_concept"] = family;
        group["concepts"] = nlohmann::ordered_json::array();
        for (const rdf::Iri& iri : members) {
            const vocab::Concept& c = s.concept_graph.concept_at(iri);
            nlohmann::ordered_json entry;
            entry["iri"] = iri.str();
            entry["label"] = c.label ? nlohmann::ordered_json(*c.label) : nullptr;
            entry["definition"] = c.definition ? nlohmann::ordered_json(*c.definition) : nullptr;
            auto families = nlohmann::ordered_json::array();
            for (const rdf::Iri& f : c.top_concepts) families.push_back(f.str());
            entry["families"] = std::move(families);
            auto chain = nlohmann::ordered_json::array();
            for (const rdf::Iri& a : vocab::ancestors(s.concept_graph, iri))
                chain.push_back(a.str());
            entry["ancestors"] = std::move(chain);
            group["concepts"].push_back(std::move(entry));
        }
        doc["groups"].push_back(std::move(group));
    }
    return doc.dump(2) + "\n";
}

}  // namespace dpvkit::build
