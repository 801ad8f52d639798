#ifndef SPECTRO_CCS_HPP
#define SPECTRO_CCS_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace spectro {

// Visible action label. Names start with a lowercase letter; identity and
// ordering are by name.
class Action {
public:
    Action() = default;
    explicit Action(std::string name) : name_(std::move(name)) {}

    const std::string& name() const { return name_; }

    bool operator==(const Action& o) const { return name_ == o.name_; }
    bool operator!=(const Action& o) const { return name_ != o.name_; }
    bool operator<(const Action& o) const { return name_ < o.name_; }

private:
    std::string name_;
};

// A term of the BCCSP fragment: action prefixing, n-ary choice, the completed
// process 0, and named references to other definitions. Terms are immutable
// and shared; Choice nodes are flattened (no Choice directly under Choice)
// and have at least two branches.
class ProcessTerm {
public:
    enum class Kind { nil, prefix, choice, reference };

    static ProcessTerm nil();
    static ProcessTerm prefix(Action action, ProcessTerm continuation);
    static ProcessTerm choice(std::vector<ProcessTerm> branches);
    static ProcessTerm reference(std::string name);

    Kind kind() const { return node_->kind; }
    const Action& action() const { return node_->action; }
    const ProcessTerm& continuation() const { return node_->children[0]; }
    const std::vector<ProcessTerm>& branches() const { return node_->children; }
    const std::string& reference_name() const { return node_->name; }

    // Minimal-parenthesis rendering; prefix of 0 prints as the bare action.
    std::string to_string() const;

    // Structural equality / ordering (branch order significant).
    bool operator==(const ProcessTerm& o) const;
    bool operator<(const ProcessTerm& o) const;

private:
    struct Node {
        Kind kind;
        Action action;                      // prefix
        std::string name;                   // reference
        std::vector<ProcessTerm> children;  // prefix: 1, choice: >= 2
    };
    explicit ProcessTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;

    friend int compare(const ProcessTerm& a, const ProcessTerm& b);
};

int compare(const ProcessTerm& a, const ProcessTerm& b);

// Named process bindings in definition order. Names are unique and every
// reference occurring in a bound term resolves to some binding.
class ProcessDefinitions {
public:
    void add(std::string name, ProcessTerm term);

    bool contains(const std::string& name) const;
    const ProcessTerm& lookup(const std::string& name) const;

    const std::vector<std::pair<std::string, ProcessTerm>>& bindings() const {
        return bindings_;
    }

    // Throws ParseError naming the first unresolved reference, if any.
    void check_references() const;

private:
    std::vector<std::pair<std::string, ProcessTerm>> bindings_;
};

// Raised on malformed input and unresolved references. Positions are
// 1-based; column 0 means "whole line / unknown".
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, int line, int column);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// Parses a definition file:
//   file       := (definition NEWLINE)*
//   definition := PNAME "=" term
//   term       := prefix ("+" prefix)*
//   prefix     := ACTION "." prefix | atom
//   atom       := "0" | PNAME | "(" term ")"
// A bare ACTION in atom position abbreviates ACTION.0. "//" starts a line
// comment. "+" associates n-ary, "." is right-associative and binds tighter.
ProcessDefinitions parse(std::string_view text);

}  // namespace spectro

#endif
