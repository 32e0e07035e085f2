#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dpvkit/error.hpp"
#include "dpvkit/rdf/term.hpp"

namespace dpvkit::registry {

class RegistryError : public Error {
public:
    using Error::Error;
};

// One extension of the vocabulary: a separately namespaced concept
// collection. Jurisdictional extensions live under `legal/<code>[/<law>]`
// with a lowercase ISO 3166-1 code path; thematic extensions (pd, tech, ...)
// carry no jurisdiction. The core vocabulary is the descriptor with an empty
// base_path.
struct ExtensionDescriptor {
    std::string short_name;   // lookup key, e.g. "pd", "legal/eu/gdpr", "dpv"
    std::string base_path;    // path under the root namespace; "" for core
    std::string prefix;       // CURIE label, e.g. "eu-gdpr"
    std::vector<std::string> versions;
    std::optional<std::string> jurisdiction;
    std::set<rdf::Iri> top_concepts;

    bool operator==(const ExtensionDescriptor&) const = default;
};

struct Resolution {
    std::string extension;  // descriptor short_name
    std::string version;
    std::string local_name;  // empty for a namespace/document IRI

    bool operator==(const Resolution&) const = default;
};

// Offline resolver for the versioned-IRI scheme: extension namespaces are the
// root suffixed with a version segment and the extension path; unversioned
// IRIs mean the latest version. Purely local, no dereferencing.
class Registry {
public:
    Registry(rdf::Iri root, std::vector<ExtensionDescriptor> extensions, std::string latest);

    const rdf::Iri& root() const noexcept { return root_; }
    const std::string& latest() const noexcept { return latest_; }
    const std::map<std::string, ExtensionDescriptor>& extensions() const noexcept {
        return extensions_;
    }

    // Lookup by short_name or CURIE prefix.
    const ExtensionDescriptor& extension(const std::string& name) const;
    bool has_extension(const std::string& name) const;

    /// Namespace IRI of one release: root + "/" + version (+ "/" + path for
    /// non-core extensions). Throws for unregistered extensions or versions.
    rdf::Iri versioned_iri(const std::string& extension, const std::string& version) const;

    /// Decomposes a concept or document IRI under the root into (extension,
    /// version, local name). Unversioned IRIs resolve to the latest version;
    /// fragment and slash local names are both accepted.
    Resolution resolve(const rdf::Iri& iri) const;

    /// ISO 3166-1 code path for legal extensions; absent for thematic ones.
    std::optional<std::string> jurisdiction_of(const std::string& extension) const;

    /// Concept namespace of an extension (fragment style): root[/path] + "#".
    rdf::Iri concept_namespace(const std::string& extension) const;

    /// CURIE prefix -> concept namespace for every registered extension.
    std::map<std::string, rdf::Iri> prefix_map() const;

    /// Union of every extension's declared top concepts.
    std::set<rdf::Iri> all_top_concepts() const;

    bool operator==(const Registry& other) const {
        return root_ == other.root_ && latest_ == other.latest_ &&
               extensions_ == other.extensions_;
    }

private:
    rdf::Iri root_;
    std::string latest_;
    std::map<std::string, ExtensionDescriptor> extensions_;  // by short_name
    std::map<std::string, std::string> prefix_to_name_;
    std::set<std::string> known_versions_;
};

/// The bundled registry: the core vocabulary plus every published extension
/// (pd, loc, legal, the EU and national law extensions, risk, tech, ai,
/// justifications), versions 1.0 and 2.0, latest 2.0.
Registry default_registry();

/// Manifest I/O. The manifest is a JSON document:
///   {"root": ..., "latest": ..., "extensions": [{"short_name": ...,
///    "base_path": ..., "prefix": ..., "versions": [...],
///    "jurisdiction": ..., "top_concepts": [...]}]}
/// A machine-readable schema ships with the fixtures.
Registry parse_manifest(const std::string& json_text);
Registry load_manifest_file(const std::string& path);
std::string manifest_json(const Registry& reg);

}  // namespace dpvkit::registry
