#include "icmkit/io.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace icmkit {

namespace {

struct Token {
    std::string text;
    int column = 0;  // 1-based
};

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string current;
    for (char ch : text) {
        if (ch == '\n') {
            lines.push_back(current);
            current.clear();
        } else {
            current.push_back(ch);
        }
    }
    if (!current.empty()) lines.push_back(current);
    for (std::string& line : lines)
        if (!line.empty() && line.back() == '\r') line.pop_back();
    return lines;
}

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        if (i >= line.size()) break;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

bool is_header(const std::string& line) {
    if (line.rfind("#vertices", 0) != 0) return false;
    return line.size() == 9 || line[9] == ' ' || line[9] == '\t';
}

int parse_count(const std::string& digits, const std::string& what) {
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw parse_error(what + " wants a number, got '" + digits + "'");
    if (digits.size() > 9) throw parse_error(what + " value '" + digits + "' is out of range");
    return std::stoi(digits);
}

// Shared state for files with an optional #vertices header.
class LabelTable {
public:
    void fix(std::vector<std::string> names, int line) {
        if (fixed_) throw parse_error("duplicate #vertices header", line);
        if (started_) throw parse_error("#vertices header must precede all data lines", line);
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (index_.count(names[i]))
                throw parse_error("duplicate vertex label '" + names[i] + "'", line);
            index_[names[i]] = static_cast<int>(i);
        }
        names_ = std::move(names);
        fixed_ = true;
    }

    int lookup(const Token& token, int line) {
        started_ = true;
        auto it = index_.find(token.text);
        if (it != index_.end()) return it->second;
        if (fixed_)
            throw parse_error("unknown vertex label '" + token.text + "'", line, token.column);
        if (static_cast<int>(names_.size()) >= kMaxVertices)
            throw parse_error("more than " + std::to_string(kMaxVertices) + " vertex labels", line,
                              token.column);
        int id = static_cast<int>(names_.size());
        names_.push_back(token.text);
        index_[token.text] = id;
        return id;
    }

    void mark_started() { started_ = true; }

    VertexSet vertex_set() const { return VertexSet(names_); }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> index_;
    bool fixed_ = false;
    bool started_ = false;
};

}  // namespace

SimplicialComplex parse_facets(const std::string& text) {
    LabelTable labels;
    std::vector<Face> facets;
    bool any_facet = false;
    std::vector<std::string> lines = split_lines(text);
    for (std::size_t li = 0; li < lines.size(); ++li) {
        int lineno = static_cast<int>(li) + 1;
        const std::string& raw = lines[li];
        if (is_header(raw)) {
            std::vector<Token> tokens = tokenize(raw);
            std::vector<std::string> names;
            for (std::size_t t = 1; t < tokens.size(); ++t) names.push_back(tokens[t].text);
            labels.fix(std::move(names), lineno);
            continue;
        }
        std::string line = raw;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::vector<Token> tokens = tokenize(line);
        if (tokens.empty()) continue;
        if (tokens.size() == 1 && tokens[0].text == "empty-face") {
            labels.mark_started();
            facets.push_back(Face::empty());
            any_facet = true;
            continue;
        }
        Face f;
        for (const Token& token : tokens) {
            if (token.text == "empty-face")
                throw parse_error("'empty-face' cannot appear beside labels", lineno, token.column);
            int v = labels.lookup(token, lineno);
            if (f.contains(v))
                throw parse_error("repeated vertex '" + token.text + "' in one facet", lineno,
                                  token.column);
            f = f.with(v);
        }
        facets.push_back(f);
        any_facet = true;
    }
    if (!any_facet) return SimplicialComplex::void_complex(labels.vertex_set());
    return SimplicialComplex::from_facets(labels.vertex_set(), std::move(facets));
}

std::string serialize_facets(const SimplicialComplex& c) {
    std::ostringstream out;
    out << "#vertices";
    for (const std::string& name : c.vertices().names) out << ' ' << name;
    out << '\n';
    for (Face f : c.facets()) {
        if (f.is_empty()) {
            out << "empty-face\n";
            continue;
        }
        bool first = true;
        for (int v : f.members()) {
            if (!first) out << ' ';
            out << c.vertices().names[static_cast<std::size_t>(v)];
            first = false;
        }
        out << '\n';
    }
    return out.str();
}

Graph parse_edges(const std::string& text) {
    LabelTable labels;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> lines = split_lines(text);
    for (std::size_t li = 0; li < lines.size(); ++li) {
        int lineno = static_cast<int>(li) + 1;
        const std::string& raw = lines[li];
        if (is_header(raw)) {
            std::vector<Token> tokens = tokenize(raw);
            std::vector<std::string> names;
            for (std::size_t t = 1; t < tokens.size(); ++t) names.push_back(tokens[t].text);
            labels.fix(std::move(names), lineno);
            continue;
        }
        std::string line = raw;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::vector<Token> tokens = tokenize(line);
        if (tokens.empty()) continue;
        if (tokens.size() != 2)
            throw parse_error("an edge line needs exactly two labels", lineno, tokens[0].column);
        int a = labels.lookup(tokens[0], lineno);
        int b = labels.lookup(tokens[1], lineno);
        if (a == b)
            throw parse_error("loops are not allowed", lineno, tokens[1].column);
        edges.emplace_back(a, b);
    }
    return Graph::from_edges(labels.vertex_set(), edges);
}

std::string serialize_edges(const Graph& g) {
    std::ostringstream out;
    out << "#vertices";
    for (const std::string& name : g.vertices.names) out << ' ' << name;
    out << '\n';
    for (auto [a, b] : g.edges())
        out << g.vertices.names[static_cast<std::size_t>(a)] << ' '
            << g.vertices.names[static_cast<std::size_t>(b)] << '\n';
    return out.str();
}

Graph parse_generator(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw parse_error("generator spec wants kind:<arg>, got '" + spec + "'");
    std::string kind = spec.substr(0, colon);
    std::string arg = spec.substr(colon + 1);
    if (kind == "path") return path_graph(parse_count(arg, "path"));
    if (kind == "cycle") return cycle_graph(parse_count(arg, "cycle"));
    if (kind == "complete") return complete_graph(parse_count(arg, "complete"));
    if (kind == "dtree") {
        DTreeRecipe recipe;
        std::stringstream steps(arg);
        std::string step;
        while (std::getline(steps, step, '/')) {
            std::stringstream fields(step);
            std::string field;
            DTreeRecipe::Step s;
            bool first = true;
            while (std::getline(fields, field, ',')) {
                int value = parse_count(field, "dtree recipe");
                if (first) {
                    s.clique_size = value;
                    first = false;
                } else {
                    if (value < 1 || value > kMaxVertices)
                        throw parse_error("dtree attachment vertex out of range");
                    s.attachment = s.attachment.with(value - 1);
                }
            }
            if (first) throw parse_error("empty dtree recipe step");
            recipe.steps.push_back(s);
        }
        if (recipe.steps.empty()) throw parse_error("empty dtree recipe");
        return dtree(recipe);
    }
    throw parse_error("unknown generator '" + kind + "'");
}

}  // namespace icmkit
