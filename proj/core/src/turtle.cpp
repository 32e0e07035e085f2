#include "dpvkit/rdf/turtle.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "dpvkit/rdf/namespaces.hpp"

namespace dpvkit::rdf {

ParseError::ParseError(SourcePosition position, std::string token, const std::string& what)
    : Error("syntax error at " + std::to_string(position.line) + ":" +
            std::to_string(position.column) + ": " + what),
      position_(position),
      token_(std::move(token)) {}

UndefinedPrefixError::UndefinedPrefixError(SourcePosition position, std::string prefix)
    : ParseError(position, prefix + ":", "undefined prefix '" + prefix + ":'"),
      prefix_(std::move(prefix)) {}

namespace {

enum class TokenKind {
    IriRef,
    PrefixedName,  // prefix + local (local may be empty: a namespace reference)
    BlankLabel,
    String,
    LangTag,
    HatHat,
    A,
    PrefixDirective,
    Dot,
    Semicolon,
    Comma,
    OpenBracket,
    CloseBracket,
    End,
};

struct Token {
    TokenKind kind;
    std::string value;   // iri / local / label / lexical form / language
    std::string prefix;  // PrefixedName only
    SourcePosition pos;
    std::string text;  // raw spelling, for error messages
};

bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '%';
}

class Lexer {
public:
    explicit Lexer(std::string_view input) : in_(input) {}

    std::vector<Token> run() {
        std::vector<Token> tokens;
        while (true) {
            skip_trivia();
            SourcePosition pos = pos_;
            if (eof()) {
                tokens.push_back({TokenKind::End, "", "", pos, "<end of input>"});
                return tokens;
            }
            char c = peek();
            if (c == '<') {
                tokens.push_back(lex_iriref());
            } else if (c == '"') {
                tokens.push_back(lex_string());
            } else if (c == '@') {
                tokens.push_back(lex_at_word());
            } else if (c == '^') {
                get();
                if (peek() != '^') throw ParseError(pos, "^", "expected '^^'");
                get();
                tokens.push_back({TokenKind::HatHat, "", "", pos, "^^"});
            } else if (c == '_' && at(1) == ':') {
                tokens.push_back(lex_blank_label());
            } else if (c == '.') {
                get();
                tokens.push_back({TokenKind::Dot, "", "", pos, "."});
            } else if (c == ';') {
                get();
                tokens.push_back({TokenKind::Semicolon, "", "", pos, ";"});
            } else if (c == ',') {
                get();
                tokens.push_back({TokenKind::Comma, "", "", pos, ","});
            } else if (c == '[') {
                get();
                tokens.push_back({TokenKind::OpenBracket, "", "", pos, "["});
            } else if (c == ']') {
                get();
                tokens.push_back({TokenKind::CloseBracket, "", "", pos, "]"});
            } else if (c == '(' || c == ')') {
                throw ParseError(pos, std::string(1, c),
                                 "collections are outside the supported Turtle subset");
            } else if (is_name_char(c) || c == ':') {
                tokens.push_back(lex_word());
            } else {
                throw ParseError(pos, std::string(1, c),
                                 "unexpected character '" + std::string(1, c) + "'");
            }
        }
    }

private:
    bool eof() const { return index_ >= in_.size(); }
    char peek() const { return eof() ? '\0' : in_[index_]; }
    char at(std::size_t ahead) const {
        return index_ + ahead < in_.size() ? in_[index_ + ahead] : '\0';
    }

    char get() {
        char c = in_[index_++];
        if (c == '\n') {
            ++pos_.line;
            pos_.column = 1;
        } else {
            ++pos_.column;
        }
        return c;
    }

    void skip_trivia() {
        while (!eof()) {
            char c = peek();
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                get();
            } else if (c == '#') {
                while (!eof() && peek() != '\n') get();
            } else {
                return;
            }
        }
    }

    Token lex_iriref() {
        SourcePosition pos = pos_;
        get();  // '<'
        std::string value;
        while (true) {
            if (eof()) throw ParseError(pos, value, "unterminated IRI");
            char c = get();
            if (c == '>') break;
            if (c == '\n') throw ParseError(pos, value, "newline inside IRI");
            if (c == '\\') {
                value += lex_escape(pos, /*in_iri=*/true);
            } else {
                value += c;
            }
        }
        if (value.empty() || value.find(':') == std::string::npos)
            throw ParseError(pos, value, "IRI must be absolute: <" + value + ">");
        return {TokenKind::IriRef, value, "", pos, "<" + value + ">"};
    }

    Token lex_string() {
        SourcePosition pos = pos_;
        get();  // opening quote
        if (peek() == '"' && at(1) == '"')
            throw ParseError(pos, "\"\"\"",
                             "triple-quoted strings are outside the supported Turtle subset");
        std::string value;
        while (true) {
            if (eof()) throw ParseError(pos, value, "unterminated string literal");
            char c = get();
            if (c == '"') break;
            if (c == '\n') throw ParseError(pos, value, "newline inside string literal");
            if (c == '\\') {
                value += lex_escape(pos, /*in_iri=*/false);
            } else {
                value += c;
            }
        }
        return {TokenKind::String, value, "", pos, "\"" + value + "\""};
    }

    std::string lex_escape(SourcePosition start, bool in_iri) {
        if (eof()) throw ParseError(start, "\\", "dangling escape");
        char c = get();
        switch (c) {
            case 't': return "\t";
            case 'b': return "\b";
            case 'n': return "\n";
            case 'r': return "\r";
            case 'f': return "\f";
            case '"': return "\"";
            case '\'': return "'";
            case '\\': return "\\";
            case '>':
                if (in_iri) return ">";
                break;
            case 'u': return encode_utf8(lex_hex(start, 4));
            case 'U': return encode_utf8(lex_hex(start, 8));
            default: break;
        }
        throw ParseError(start, std::string("\\") + c,
                         "invalid escape sequence '\\" + std::string(1, c) + "'");
    }

    unsigned lex_hex(SourcePosition start, int digits) {
        unsigned code = 0;
        for (int i = 0; i < digits; ++i) {
            if (eof()) throw ParseError(start, "", "truncated unicode escape");
            char c = get();
            code <<= 4;
            if (c >= '0' && c <= '9') code |= static_cast<unsigned>(c - '0');
            else if (c >= 'a' && c <= 'f') code |= static_cast<unsigned>(c - 'a' + 10);
            else if (c >= 'A' && c <= 'F') code |= static_cast<unsigned>(c - 'A' + 10);
            else throw ParseError(start, std::string(1, c), "invalid unicode escape");
        }
        return code;
    }

    static std::string encode_utf8(unsigned code) {
        std::string out;
        if (code < 0x80) {
            out += static_cast<char>(code);
        } else if (code < 0x800) {
            out += static_cast<char>(0xc0 | (code >> 6));
            out += static_cast<char>(0x80 | (code & 0x3f));
        } else if (code < 0x10000) {
            out += static_cast<char>(0xe0 | (code >> 12));
            out += static_cast<char>(0x80 | ((code >> 6) & 0x3f));
            out += static_cast<char>(0x80 | (code & 0x3f));
        } else {
            out += static_cast<char>(0xf0 | (code >> 18));
            out += static_cast<char>(0x80 | ((code >> 12) & 0x3f));
            out += static_cast<char>(0x80 | ((code >> 6) & 0x3f));
            out += static_cast<char>(0x80 | (code & 0x3f));
        }
        return out;
    }

    Token lex_at_word() {
        SourcePosition pos = pos_;
        get();  // '@'
        std::string word;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '-') word += get();
        if (word == "prefix") return {TokenKind::PrefixDirective, "", "", pos, "@prefix"};
        if (word == "base")
            throw ParseError(pos, "@base", "@base is outside the supported Turtle subset");
        if (word.empty()) throw ParseError(pos, "@", "expected language tag or directive");
        return {TokenKind::LangTag, word, "", pos, "@" + word};
    }

    Token lex_blank_label() {
        SourcePosition pos = pos_;
        get();  // '_'
        get();  // ':'
        std::string label = lex_name_part(pos);
        if (label.empty()) throw ParseError(pos, "_:", "blank node label must be non-empty");
        return {TokenKind::BlankLabel, label, "", pos, "_:" + label};
    }

    // Name characters plus '.' when followed by another name character, so a
    // statement-terminating dot is never swallowed.
    std::string lex_name_part(SourcePosition) {
        std::string out;
        while (true) {
            char c = peek();
            if (is_name_char(c)) {
                out += get();
            } else if (c == '.' && is_name_char(at(1))) {
                out += get();
            } else {
                return out;
            }
        }
    }

    Token lex_word() {
        SourcePosition pos = pos_;
        std::string head = lex_name_part(pos);
        if (peek() == ':') {
            get();
            if (!head.empty() && std::isdigit(static_cast<unsigned char>(head[0])))
                throw ParseError(pos, head + ":", "prefix label cannot start with a digit");
            std::string local = lex_name_part(pos);
            return {TokenKind::PrefixedName, local, head, pos, head + ":" + local};
        }
        if (head == "a") return {TokenKind::A, "", "", pos, "a"};
        if (head == "true" || head == "false")
            throw ParseError(pos, head,
                             "boolean shorthand literals are outside the supported Turtle subset");
        if (!head.empty() && (std::isdigit(static_cast<unsigned char>(head[0])) ||
                              head[0] == '+' || head[0] == '-'))
            throw ParseError(pos, head,
                             "numeric shorthand literals are outside the supported Turtle subset");
        throw ParseError(pos, head, "unexpected token '" + head + "'");
    }

    std::string_view in_;
    std::size_t index_ = 0;
    SourcePosition pos_{1, 1};
};

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {
        for (const Token& t : tokens_)
            if (t.kind == TokenKind::BlankLabel) used_labels_.insert(t.value);
    }

    Graph run() {
        while (peek().kind != TokenKind::End) {
            if (peek().kind == TokenKind::PrefixDirective) {
                parse_prefix_directive();
            } else {
                parse_statement();
            }
        }
        return std::move(graph_);
    }

private:
    const Token& peek() const { return tokens_[index_]; }
    const Token& get() { return tokens_[index_++]; }

    const Token& expect(TokenKind kind, const std::string& what) {
        if (peek().kind != kind)
            throw ParseError(peek().pos, peek().text, "expected " + what + ", found '" +
                                                          peek().text + "'");
        return get();
    }

    void parse_prefix_directive() {
        get();  // @prefix
        const Token& name = expect(TokenKind::PrefixedName, "prefix label");
        if (!name.value.empty())
            throw ParseError(name.pos, name.text, "expected 'label:' in @prefix directive");
        const Token& iri = expect(TokenKind::IriRef, "namespace IRI");
        expect(TokenKind::Dot, "'.'");
        graph_.add_prefix(name.prefix, Iri(iri.value));
    }

    void parse_statement() {
        Term subject = parse_subject();
        // `[ ... ] .` is a complete statement; other subjects need predicates.
        if (!(subject_was_bracket_list_ && peek().kind == TokenKind::Dot))
            parse_predicate_object_list(subject);
        expect(TokenKind::Dot, "'.'");
    }

    Term parse_subject() {
        subject_was_bracket_list_ = false;
        const Token& t = peek();
        switch (t.kind) {
            case TokenKind::IriRef: return Term::iri(Iri(get().value));
            case TokenKind::PrefixedName: return Term::iri(resolve_pname(get()));
            case TokenKind::BlankLabel: return Term::blank(get().value);
            case TokenKind::OpenBracket:
                subject_was_bracket_list_ = true;
                return parse_blank_node_property_list();
            default:
                throw ParseError(t.pos, t.text, "expected subject, found '" + t.text + "'");
        }
    }

    void parse_predicate_object_list(const Term& subject) {
        while (true) {
            Iri predicate = parse_verb();
            parse_object_list(subject, predicate);
            if (peek().kind != TokenKind::Semicolon) return;
            while (peek().kind == TokenKind::Semicolon) get();
            // Trailing semicolon before '.' or ']' is permitted.
            if (peek().kind == TokenKind::Dot || peek().kind == TokenKind::CloseBracket) return;
        }
    }

    Iri parse_verb() {
        const Token& t = peek();
        switch (t.kind) {
            case TokenKind::A: get(); return ns::rdf_type;
            case TokenKind::IriRef: return Iri(get().value);
            case TokenKind::PrefixedName: return resolve_pname(get());
            default:
                throw ParseError(t.pos, t.text, "expected predicate, found '" + t.text + "'");
        }
    }

    void parse_object_list(const Term& subject, const Iri& predicate) {
        while (true) {
            Term object = parse_object();
            graph_.insert(Triple(subject, predicate, object));
            if (peek().kind != TokenKind::Comma) return;
            get();
        }
    }

    Term parse_object() {
        const Token& t = peek();
        switch (t.kind) {
            case TokenKind::IriRef: return Term::iri(Iri(get().value));
            case TokenKind::PrefixedName: return Term::iri(resolve_pname(get()));
            case TokenKind::BlankLabel: return Term::blank(get().value);
            case TokenKind::OpenBracket: return parse_blank_node_property_list();
            case TokenKind::String: return parse_literal();
            default:
                throw ParseError(t.pos, t.text, "expected object, found '" + t.text + "'");
        }
    }

    Term parse_literal() {
        const Token& lexical = get();
        if (peek().kind == TokenKind::LangTag)
            return Term::literal(lexical.value, std::nullopt, get().value);
        if (peek().kind == TokenKind::HatHat) {
            get();
            const Token& dt = peek();
            if (dt.kind == TokenKind::IriRef) return Term::literal(lexical.value, Iri(get().value));
            if (dt.kind == TokenKind::PrefixedName)
                return Term::literal(lexical.value, resolve_pname(get()));
            throw ParseError(dt.pos, dt.text, "expected datatype IRI after '^^'");
        }
        return Term::literal(lexical.value);
    }

    Term parse_blank_node_property_list() {
        expect(TokenKind::OpenBracket, "'['");
        Term node = fresh_blank();
        if (peek().kind != TokenKind::CloseBracket) parse_predicate_object_list(node);
        expect(TokenKind::CloseBracket, "']'");
        return node;
    }

    Term fresh_blank() {
        std::string label;
        do {
            label = "b" + std::to_string(blank_counter_++);
        } while (used_labels_.count(label) != 0);
        used_labels_.insert(label);
        return Term::blank(label);
    }

    Iri resolve_pname(const Token& t) {
        auto it = graph_.prefixes().find(t.prefix);
        if (it == graph_.prefixes().end()) throw UndefinedPrefixError(t.pos, t.prefix);
        return Iri(it->second.str() + t.value);
    }

    std::vector<Token> tokens_;
    std::size_t index_ = 0;
    Graph graph_;
    std::set<std::string> used_labels_;
    std::size_t blank_counter_ = 0;
    bool subject_was_bracket_list_ = false;
};

std::string escape_literal(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04X", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

bool valid_local_name(std::string_view local) {
    if (local.empty() || local.back() == '.') return false;
    for (char c : local)
        if (!is_name_char(c) && c != '.') return false;
    return true;
}

// Longest declared namespace wins; ties go to the lexicographically smallest
// label. Returns empty when no declared namespace covers the IRI.
std::string compact_iri(const Graph& g, const Iri& iri) {
    const std::string& s = iri.str();
    std::string best_label;
    std::size_t best_len = 0;
    bool found = false;
    for (const auto& [label, ns] : g.prefixes()) {
        const std::string& p = ns.str();
        if (s.size() <= p.size() || s.compare(0, p.size(), p) != 0) continue;
        if (!valid_local_name(std::string_view(s).substr(p.size()))) continue;
        if (!found || p.size() > best_len) {
            found = true;
            best_len = p.size();
            best_label = label;
        }
    }
    if (!found) return "";
    return best_label + ":" + s.substr(best_len);
}

std::string render_iri(const Graph& g, const Iri& iri) {
    std::string compact = compact_iri(g, iri);
    if (!compact.empty()) return compact;
    return "<" + iri.str() + ">";
}

std::string render_term(const Graph& g, const Term& t) {
    switch (t.kind()) {
        case TermKind::Iri: return render_iri(g, Iri(t.value()));
        case TermKind::BlankNode: return "_:" + t.value();
        case TermKind::Literal: {
            std::string out = "\"" + escape_literal(t.value()) + "\"";
            if (t.language()) out += "@" + *t.language();
            if (t.datatype()) out += "^^" + render_iri(g, *t.datatype());
            return out;
        }
    }
    return "";
}

std::string render_predicate(const Graph& g, const Iri& p) {
    if (p == ns::rdf_type) return "a";
    return render_iri(g, p);
}

}  // namespace

Graph parse_turtle(std::string_view document) {
    return Parser(Lexer(document).run()).run();
}

std::string serialize_turtle(const Graph& g) {
    std::ostringstream out;
    for (const auto& [label, ns_iri] : g.prefixes())
        out << "@prefix " << label << ": <" << ns_iri.str() << "> .\n";
    if (!g.prefixes().empty() && !g.triples().empty()) out << "\n";

    // The triple set is already ordered subject-major, so one pass groups
    // subjects and predicates.
    const Term* subject = nullptr;
    const Iri* predicate = nullptr;
    for (const Triple& t : g.triples()) {
        if (subject == nullptr || t.subject != *subject) {
            if (subject != nullptr) out << " .\n";
            out << render_term(g, t.subject) << " " << render_predicate(g, t.predicate) << " "
                << render_term(g, t.object);
        } else if (t.predicate != *predicate) {
            out << " ;\n    " << render_predicate(g, t.predicate) << " "
                << render_term(g, t.object);
        } else {
            out << ", " << render_term(g, t.object);
        }
        subject = &t.subject;
        predicate = &t.predicate;
    }
    if (subject != nullptr) out << " .\n";
    return out.str();
}

}  // namespace dpvkit::rdf
