#include "spectro/ccs.hpp"

#include <algorithm>
#include <cctype>

namespace spectro {

ProcessTerm ProcessTerm::nil() {
    static const std::shared_ptr<const Node> node =
        std::make_shared<Node>(Node{Kind::nil, Action{}, {}, {}});
    return ProcessTerm(node);
}

ProcessTerm ProcessTerm::prefix(Action action, ProcessTerm continuation) {
    return ProcessTerm(std::make_shared<Node>(Node{
        Kind::prefix, std::move(action), {}, {std::move(continuation)}}));
}

ProcessTerm ProcessTerm::choice(std::vector<ProcessTerm> branches) {
    std::vector<ProcessTerm> flat;
    for (auto& b : branches) {
        if (b.kind() == Kind::choice)
            flat.insert(flat.end(), b.branches().begin(), b.branches().end());
        else
            flat.push_back(std::move(b));
    }
    if (flat.size() == 1) return flat.front();
    return ProcessTerm(
        std::make_shared<Node>(Node{Kind::choice, Action{}, {}, std::move(flat)}));
}

ProcessTerm ProcessTerm::reference(std::string name) {
    return ProcessTerm(
        std::make_shared<Node>(Node{Kind::reference, Action{}, std::move(name), {}}));
}

int compare(const ProcessTerm& a, const ProcessTerm& b) {
    if (a.node_ == b.node_) return 0;
    auto ka = static_cast<int>(a.kind()), kb = static_cast<int>(b.kind());
    if (ka != kb) return ka < kb ? -1 : 1;
    switch (a.kind()) {
        case ProcessTerm::Kind::nil:
            return 0;
        case ProcessTerm::Kind::prefix: {
            int c = a.action().name().compare(b.action().name());
            if (c) return c < 0 ? -1 : 1;
            return compare(a.continuation(), b.continuation());
        }
        case ProcessTerm::Kind::reference: {
            int c = a.reference_name().compare(b.reference_name());
            return c < 0 ? -1 : c > 0 ? 1 : 0;
        }
        case ProcessTerm::Kind::choice: {
            const auto& xs = a.branches();
            const auto& ys = b.branches();
            for (std::size_t i = 0; i < xs.size() && i < ys.size(); ++i) {
                int c = compare(xs[i], ys[i]);
                if (c) return c;
            }
            if (xs.size() != ys.size()) return xs.size() < ys.size() ? -1 : 1;
            return 0;
        }
    }
    return 0;
}

bool ProcessTerm::operator==(const ProcessTerm& o) const {
    return compare(*this, o) == 0;
}

bool ProcessTerm::operator<(const ProcessTerm& o) const {
    return compare(*this, o) < 0;
}

std::string ProcessTerm::to_string() const {
    switch (kind()) {
        case Kind::nil:
            return "0";
        case Kind::reference:
            return reference_name();
        case Kind::prefix: {
            const ProcessTerm& cont = continuation();
            if (cont.kind() == Kind::nil) return action().name();
            if (cont.kind() == Kind::choice)
                return action().name() + ".(" + cont.to_string() + ")";
            return action().name() + "." + cont.to_string();
        }
        case Kind::choice: {
            std::string out;
            for (std::size_t i = 0; i < branches().size(); ++i) {
                if (i) out += " + ";
                out += branches()[i].to_string();
            }
            return out;
        }
    }
    return {};
}

void ProcessDefinitions::add(std::string name, ProcessTerm term) {
    if (contains(name))
        throw ParseError("duplicate definition of '" + name + "'", 0, 0);
    bindings_.emplace_back(std::move(name), std::move(term));
}

bool ProcessDefinitions::contains(const std::string& name) const {
    for (const auto& [n, t] : bindings_)
        if (n == name) return true;
    return false;
}

const ProcessTerm& ProcessDefinitions::lookup(const std::string& name) const {
    for (const auto& [n, t] : bindings_)
        if (n == name) return t;
    throw ParseError("unresolved reference to '" + name + "'", 0, 0);
}

namespace {

void collect_references(const ProcessTerm& t, std::vector<std::string>& out) {
    switch (t.kind()) {
        case ProcessTerm::Kind::nil:
            break;
        case ProcessTerm::Kind::reference:
            out.push_back(t.reference_name());
            break;
        case ProcessTerm::Kind::prefix:
            collect_references(t.continuation(), out);
            break;
        case ProcessTerm::Kind::choice:
            for (const auto& b : t.branches()) collect_references(b, out);
            break;
    }
}

}  // namespace

void ProcessDefinitions::check_references() const {
    for (const auto& [name, term] : bindings_) {
        std::vector<std::string> refs;
        collect_references(term, refs);
        for (const auto& r : refs)
            if (!contains(r))
                throw ParseError("unresolved reference to '" + r + "'", 0, 0);
    }
}

namespace {

std::string format_parse_error(const std::string& message, int line, int column) {
    if (line > 0 && column > 0)
        return message + " at line " + std::to_string(line) + ", column " +
               std::to_string(column);
    if (line > 0) return message + " at line " + std::to_string(line);
    if (column > 0) return message + " at column " + std::to_string(column);
    return message;
}

}  // namespace

ParseError::ParseError(std::string message, int line, int column)
    : std::runtime_error(format_parse_error(message, line, column)),
      line_(line),
      column_(column) {}

namespace {

// Single-pass recursive-descent parser over one definition line.
class LineParser {
public:
    LineParser(std::string_view text, int line_no)
        : text_(text), line_(line_no), pos_(0) {}

    ProcessTerm parse_term() {
        std::vector<ProcessTerm> branches;
        branches.push_back(parse_prefix());
        skip_ws();
        while (peek() == '+') {
            ++pos_;
            branches.push_back(parse_prefix());
            skip_ws();
        }
        if (branches.size() == 1) return branches.front();
        return ProcessTerm::choice(std::move(branches));
    }

    void expect_end() {
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("unexpected input '" + std::string(1, text_[pos_]) + "'",
                             line_, static_cast<int>(pos_) + 1);
    }

    std::string parse_pname() {
        skip_ws();
        if (!std::isupper(static_cast<unsigned char>(peek())))
            throw ParseError("expected process name", line_,
                             static_cast<int>(pos_) + 1);
        return parse_ident();
    }

    void expect(char c) {
        skip_ws();
        if (peek() != c)
            throw ParseError(std::string("expected '") + c + "'", line_,
                             static_cast<int>(pos_) + 1);
        ++pos_;
    }

private:
    ProcessTerm parse_prefix() {
        skip_ws();
        char c = peek();
        if (std::islower(static_cast<unsigned char>(c))) {
            Action act{parse_ident()};
            skip_ws();
            if (peek() == '.') {
                ++pos_;
                return ProcessTerm::prefix(std::move(act), parse_prefix());
            }
            // bare action means action.0
            return ProcessTerm::prefix(std::move(act), ProcessTerm::nil());
        }
        return parse_atom();
    }

    ProcessTerm parse_atom() {
        skip_ws();
        char c = peek();
        if (c == '0') {
            ++pos_;
            return ProcessTerm::nil();
        }
        if (std::isupper(static_cast<unsigned char>(c)))
            return ProcessTerm::reference(parse_ident());
        if (c == '(') {
            ++pos_;
            ProcessTerm t = parse_term();
            skip_ws();
            if (peek() != ')')
                throw ParseError("unclosed parenthesis", line_,
                                 static_cast<int>(pos_) + 1);
            ++pos_;
            return t;
        }
        throw ParseError(c == '\0' ? "unexpected end of definition"
                                   : "unexpected character '" + std::string(1, c) + "'",
                         line_, static_cast<int>(pos_) + 1);
    }

    std::string parse_ident() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                text_[pos_] == '_'))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r'))
            ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    std::string_view text_;
    int line_;
    std::size_t pos_;
};

std::string_view strip_comment(std::string_view line) {
    auto pos = line.find("//");
    return pos == std::string_view::npos ? line : line.substr(0, pos);
}

bool blank(std::string_view s) {
    return s.find_first_not_of(" \t\r") == std::string_view::npos;
}

}  // namespace

ProcessDefinitions parse(std::string_view text) {
    ProcessDefinitions defs;
    int line_no = 0;
    std::size_t offset = 0;
    while (offset <= text.size()) {
        auto nl = text.find('\n', offset);
        std::string_view line = text.substr(
            offset, nl == std::string_view::npos ? text.size() - offset : nl - offset);
        ++line_no;
        offset = nl == std::string_view::npos ? text.size() + 1 : nl + 1;

        line = strip_comment(line);
        if (blank(line)) continue;

        LineParser p(line, line_no);
        std::string name = p.parse_pname();
        if (defs.contains(name))
            throw ParseError("duplicate definition of '" + name + "'", line_no, 0);
        p.expect('=');
        ProcessTerm term = p.parse_term();
        p.expect_end();
        defs.add(std::move(name), std::move(term));
    }
    defs.check_references();
    return defs;
}

}  // namespace spectro
