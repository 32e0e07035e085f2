#include "dpvkit/registry/registry.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dpvkit/dpv.hpp"

namespace dpvkit::registry {

namespace {

std::vector<std::string> split_path(const std::string& path) {
    std::vector<std::string> out;
    std::string part;
    std::istringstream in(path);
    while (std::getline(in, part, '/'))
        if (!part.empty()) out.push_back(part);
    return out;
}

bool looks_like_version(const std::string& segment) {
    return !segment.empty() &&
           segment.find_first_not_of("0123456789.") == std::string::npos;
}

void check_descriptor(const ExtensionDescriptor& d) {
    if (d.short_name.empty()) throw RegistryError("extension short_name must be non-empty");
    for (const std::string& segment : split_path(d.short_name))
        if (looks_like_version(segment))
            throw RegistryError("short_name '" + d.short_name +
                                "' must not contain a version segment");
    if (d.versions.empty())
        throw RegistryError("extension '" + d.short_name + "' declares no versions");
    if (d.jurisdiction) {
        const std::string& code = *d.jurisdiction;
        if (code.empty() ||
            std::any_of(code.begin(), code.end(),
                        [](unsigned char c) { return std::isupper(c) != 0; }))
            throw RegistryError("jurisdiction code '" + code + "' must be lowercase");
        const std::string want = "legal/" + code;
        if (d.base_path != want && d.base_path.rfind(want + "/", 0) != 0)
            throw RegistryError("jurisdictional extension '" + d.short_name +
                                "' must live under '" + want + "'");
    }
}

}  // namespace

Registry::Registry(rdf::Iri root, std::vector<ExtensionDescriptor> extensions, std::string latest)
    : root_(std::move(root)), latest_(std::move(latest)) {
    for (ExtensionDescriptor& d : extensions) {
        check_descriptor(d);
        known_versions_.insert(d.versions.begin(), d.versions.end());
        if (!d.prefix.empty()) {
            auto [it, inserted] = prefix_to_name_.emplace(d.prefix, d.short_name);
            if (!inserted)
                throw RegistryError("prefix '" + d.prefix + "' registered twice");
        }
        std::string key = d.short_name;
        if (!extensions_.emplace(std::move(key), std::move(d)).second)
            throw RegistryError("extension registered twice");
    }
    if (known_versions_.count(latest_) == 0)
        throw RegistryError("latest version '" + latest_ + "' is not declared by any extension");
}

bool Registry::has_extension(const std::string& name) const {
    return extensions_.count(name) != 0 || prefix_to_name_.count(name) != 0;
}

const ExtensionDescriptor& Registry::extension(const std::string& name) const {
    auto it = extensions_.find(name);
    if (it != extensions_.end()) return it->second;
    auto alias = prefix_to_name_.find(name);
    if (alias != prefix_to_name_.end()) return extensions_.at(alias->second);
    throw RegistryError("unknown extension '" + name + "'");
}

rdf::Iri Registry::versioned_iri(const std::string& ext, const std::string& version) const {
    const ExtensionDescriptor& d = extension(ext);
    if (std::find(d.versions.begin(), d.versions.end(), version) == d.versions.end())
        throw RegistryError("extension '" + d.short_name + "' has no version '" + version + "'");
    std::string iri = root_.str() + "/" + version;
    if (!d.base_path.empty()) iri += "/" + d.base_path;
    return rdf::Iri(iri);
}

Resolution Registry::resolve(const rdf::Iri& iri) const {
    const std::string& s = iri.str();
    const std::string& root = root_.str();

    auto fail = [&]() -> RegistryError {
        return RegistryError("IRI <" + s + "> does not resolve under <" + root + ">");
    };

    if (s.compare(0, root.size(), root) != 0) throw fail();
    std::string rest = s.substr(root.size());

    if (rest.empty()) return {extension("").short_name, latest_, ""};
    if (rest[0] == '#') return {extension("").short_name, latest_, rest.substr(1)};
    if (rest[0] != '/') throw fail();
    rest.erase(0, 1);

    std::string local;
    bool has_fragment = false;
    if (auto hash = rest.find('#'); hash != std::string::npos) {
        has_fragment = true;
        local = rest.substr(hash + 1);
        rest = rest.substr(0, hash);
    }

    std::vector<std::string> segments = split_path(rest);
    std::string version = latest_;
    bool versioned = false;
    if (!segments.empty() && known_versions_.count(segments.front()) != 0) {
        version = segments.front();
        versioned = true;
        segments.erase(segments.begin());
    }

    auto join = [](const std::vector<std::string>& parts, std::size_t count) {
        std::string out;
        for (std::size_t i = 0; i < count; ++i) {
            if (i > 0) out += "/";
            out += parts[i];
        }
        return out;
    };

    auto find_by_path = [this](const std::string& path) -> const ExtensionDescriptor* {
        for (const auto& [name, d] : extensions_)
            if (d.base_path == path) return &d;
        return nullptr;
    };

    const ExtensionDescriptor* descriptor = nullptr;
    if (has_fragment) {
        descriptor = find_by_path(join(segments, segments.size()));
    } else if ((descriptor = find_by_path(join(segments, segments.size()))) != nullptr) {
        // Whole path is an extension: a namespace/document IRI, empty local.
    } else if (!segments.empty()) {
        // Slash-style local name: last segment is the concept.
        descriptor = find_by_path(join(segments, segments.size() - 1));
        if (descriptor != nullptr) local = segments.back();
    }
    if (descriptor == nullptr) throw fail();

    if (versioned &&
        std::find(descriptor->versions.begin(), descriptor->versions.end(), version) ==
            descriptor->versions.end())
        throw RegistryError("extension '" + descriptor->short_name + "' has no version '" +
                            version + "' (in <" + s + ">)");

    return {descriptor->short_name, version, local};
}

std::optional<std::string> Registry::jurisdiction_of(const std::string& ext) const {
    return extension(ext).jurisdiction;
}

rdf::Iri Registry::concept_namespace(const std::string& ext) const {
    const ExtensionDescriptor& d = extension(ext);
    std::string iri = root_.str();
    if (!d.base_path.empty()) iri += "/" + d.base_path;
    return rdf::Iri(iri + "#");
}

std::map<std::string, rdf::Iri> Registry::prefix_map() const {
    std::map<std::string, rdf::Iri> out;
    for (const auto& [name, d] : extensions_)
        if (!d.prefix.empty()) out.emplace(d.prefix, concept_namespace(name));
    return out;
}

std::set<rdf::Iri> Registry::all_top_concepts() const {
    std::set<rdf::Iri> out;
    for (const auto& [name, d] : extensions_)
        out.insert(d.top_concepts.begin(), d.top_concepts.end());
    return out;
}

Registry default_registry() {
    const std::vector<std::string> both{"1.0", "2.0"};
    std::vector<ExtensionDescriptor> extensions;

    extensions.push_back({"dpv", "", "dpv", both, std::nullopt,
                          {dpv::Purpose, dpv::Processing, dpv::PersonalData, dpv::LegalBasis,
                           dpv::ConsentStatus, dpv::Location}});
    extensions.push_back({"pd", "pd", "pd", both, std::nullopt, {}});
    extensions.push_back({"loc", "loc", "loc", both, std::nullopt, {}});
    extensions.push_back({"legal", "legal", "legal", both, std::nullopt, {}});
    extensions.push_back({"legal/eu/gdpr", "legal/eu/gdpr", "eu-gdpr", both, "eu", {}});
    extensions.push_back({"legal/eu/dga", "legal/eu/dga", "eu-dga", both, "eu", {}});
    extensions.push_back({"legal/eu/aiact", "legal/eu/aiact", "eu-aiact", both, "eu", {}});
    // The EU fundamental-rights collection follows the law-style path.
    extensions.push_back({"legal/eu/rights", "legal/eu/rights", "eu-rights", both, "eu", {}});
    extensions.push_back({"legal/ie", "legal/ie", "legal-ie", both, "ie", {}});
    extensions.push_back({"legal/de", "legal/de", "legal-de", both, "de", {}});
    extensions.push_back({"legal/gb", "legal/gb", "legal-gb", both, "gb", {}});
    extensions.push_back({"legal/us", "legal/us", "legal-us", both, "us", {}});
    extensions.push_back({"risk", "risk", "risk", both, std::nullopt, {}});
    extensions.push_back({"tech", "tech", "tech", both, std::nullopt, {}});
    extensions.push_back({"ai", "ai", "ai", both, std::nullopt, {}});
    extensions.push_back(
        {"justifications", "justifications", "justifications", both, std::nullopt, {}});

    return Registry(rdf::Iri("https://w3id.org/dpv"), std::move(extensions), "2.0");
}

Registry parse_manifest(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw RegistryError(std::string("manifest is not valid JSON: ") + e.what());
    }
    try {
        rdf::Iri root(doc.at("root").get<std::string>());
        std::string latest = doc.at("latest").get<std::string>();
        std::vector<ExtensionDescriptor> extensions;
        for (const auto& entry : doc.at("extensions")) {
            ExtensionDescriptor d;
            d.short_name = entry.at("short_name").get<std::string>();
            d.base_path = entry.at("base_path").get<std::string>();
            d.prefix = entry.value("prefix", d.short_name);
            d.versions = entry.at("versions").get<std::vector<std::string>>();
            if (entry.contains("jurisdiction") && !entry["jurisdiction"].is_null())
                d.jurisdiction = entry["jurisdiction"].get<std::string>();
            if (entry.contains("top_concepts"))
                for (const auto& iri : entry["top_concepts"])
                    d.top_concepts.insert(rdf::Iri(iri.get<std::string>()));
            extensions.push_back(std::move(d));
        }
        return Registry(std::move(root), std::move(extensions), std::move(latest));
    } catch (const nlohmann::json::exception& e) {
        throw RegistryError(std::string("manifest is missing required fields: ") + e.what());
    }
}

Registry load_manifest_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw RegistryError("cannot open manifest file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_manifest(buffer.str());
}

std::string manifest_json(const Registry& reg) {
    nlohmann::ordered_json doc;
    doc["root"] = reg.root().str();
    doc["latest"] = reg.latest();
    doc["extensions"] = nlohmann::ordered_json::array();
    for (const auto& [name, d] : reg.extensions()) {
        nlohmann::ordered_json entry;
        entry["short_name"] = d.short_name;
        entry["base_path"] = d.base_path;
        entry["prefix"] = d.prefix;
        entry["versions"] = d.versions;
        if (d.jurisdiction) entry["jurisdiction"] = *d.jurisdiction;
        auto tops = nlohmann::ordered_json::array();
        for (const rdf::Iri& iri : d.top_concepts) tops.push_back(iri.str());
        entry["top_concepts"] = std::move(tops);
        doc["extensions"].push_back(std::move(entry));
    }
    return doc.dump(2) + "\n";
}

}  // namespace dpvkit::registry
