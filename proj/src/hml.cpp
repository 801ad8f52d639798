#include "spectro/hml.hpp"

#include <algorithm>
#include <cctype>

namespace spectro {

namespace {

std::size_t hash_combine(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2));
}

// Price of the implicit one-element conjunction around a negation; the
// identity on anything that is not a negation.
Price hatted_price(const Formula& f) {
    if (f.kind() != Formula::Kind::negation) return f.price();
    const Price& p = f.price();
    return Price(0, Price::succ(p.conjunctions()), 0, 0, 0, 0).join(p);
}

Price conjunction_price(const std::vector<Formula>& conjuncts) {
    Price joined = Price::zero();
    Price::Component depth = 0;
    Price::Component positive = 0;
    Price::Component flat = 0;
    for (const Formula& c : conjuncts) {
        joined = joined.join(c.price());
        depth = std::max(depth, Price::succ(c.price().conjunctions()));
        if (c.kind() != Formula::Kind::negation) {
            ++positive;
            if (c.is_flat_observation()) ++flat;
        }
    }
    return Price(0, depth, positive - flat, positive, 0, 0).join(joined);
}

}  // namespace

Formula Formula::make(Node n) {
    switch (n.kind) {
        case Kind::observation: {
            const Formula& body = n.body[0];
            n.price = Price(Price::succ(body.price().observations()), 0, 0, 0, 0, 0)
                          .join(hatted_price(body));
            n.height = body.height() + 1;
            n.hash = hash_combine(hash_combine(1, std::hash<std::string>{}(
                                                      n.action.name())),
                                  body.hash());
            break;
        }
        case Kind::negation: {
            const Formula& body = n.body[0];
            const Price& p = body.price();
            n.price = Price(0, 0, 0, 0, Price::succ(p.negations()),
                            p.observations())
                          .join(p);
            n.height = body.height() + 1;
            n.hash = hash_combine(2, body.hash());
            break;
        }
        case Kind::conjunction: {
            n.price = conjunction_price(n.conjuncts);
            n.height = 0;
            n.hash = 3;
            for (const Formula& c : n.conjuncts) {
                n.height = std::max(n.height, c.height());
                n.hash = hash_combine(n.hash, c.hash());
            }
            if (!n.conjuncts.empty()) ++n.height;
            break;
        }
    }
    return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::top() {
    static const Formula t = make(Node{Kind::conjunction, {}, {}, {}, {}, 0, 0});
    return t;
}

Formula Formula::obs(Action action, Formula body) {
    return make(Node{Kind::observation, std::move(action),
                     {std::move(body)}, {}, {}, 0, 0});
}

Formula Formula::neg(Formula body) {
    return make(Node{Kind::negation, {}, {std::move(body)}, {}, {}, 0, 0});
}

Formula Formula::conj(std::vector<Formula> conjuncts) {
    std::vector<Formula> flat;
    flat.reserve(conjuncts.size());
    for (auto& c : conjuncts) {
        if (c.kind() == Kind::conjunction)
            flat.insert(flat.end(), c.conjuncts().begin(), c.conjuncts().end());
        else
            flat.push_back(std::move(c));
    }
    std::sort(flat.begin(), flat.end(), FormulaLess{});
    flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
    if (flat.size() == 1) return flat.front();
    return make(Node{Kind::conjunction, {}, {}, std::move(flat), {}, 0, 0});
}

Formula with_implicit_conjunction(const Formula& f) {
    if (f.kind() != Formula::Kind::negation) return f;
    return Formula::make(
        Formula::Node{Formula::Kind::conjunction, {}, {}, {f}, {}, 0, 0});
}

bool Formula::is_flat_observation() const {
    return kind() == Kind::observation && body().is_top();
}

int compare(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return 0;
    auto ka = static_cast<int>(a.kind()), kb = static_cast<int>(b.kind());
    if (ka != kb) return ka < kb ? -1 : 1;
    switch (a.kind()) {
        case Formula::Kind::observation: {
            int c = a.action().name().compare(b.action().name());
            if (c) return c < 0 ? -1 : 1;
            return compare(a.body(), b.body());
        }
        case Formula::Kind::negation:
            return compare(a.body(), b.body());
        case Formula::Kind::conjunction: {
            const auto& xs = a.conjuncts();
            const auto& ys = b.conjuncts();
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

bool Formula::operator==(const Formula& o) const {
    if (node_ == o.node_) return true;
    if (node_->hash != o.node_->hash) return false;
    return compare(*this, o) == 0;
}

std::string Formula::to_string() const {
    switch (kind()) {
        case Kind::observation:
            if (body().is_top()) return "<" + action().name() + ">";
            return "<" + action().name() + ">" + body().to_string();
        case Kind::negation:
            return "!" + body().to_string();
        case Kind::conjunction: {
            if (conjuncts().empty()) return "T";
            if (conjuncts().size() == 1) return conjuncts()[0].to_string();
            std::string out = "/\\{";
            for (std::size_t i = 0; i < conjuncts().size(); ++i) {
                if (i) out += ", ";
                out += conjuncts()[i].to_string();
            }
            out += '}';
            return out;
        }
    }
    return {};
}

bool satisfies(const Lts& lts, StateId p, const Formula& f) {
    switch (f.kind()) {
        case Formula::Kind::observation:
            for (const auto& [action, target] : lts.out(p))
                if (action == f.action() && satisfies(lts, target, f.body()))
                    return true;
            return false;
        case Formula::Kind::conjunction:
            for (const Formula& c : f.conjuncts())
                if (!satisfies(lts, p, c)) return false;
            return true;
        case Formula::Kind::negation:
            return !satisfies(lts, p, f.body());
    }
    return false;
}

bool distinguishes(const Lts& lts, const Formula& f, StateId p,
                   const StateSet& qs) {
    if (!satisfies(lts, p, f)) return false;
    for (StateId q : qs)
        if (satisfies(lts, q, f)) return false;
    return true;
}

namespace {

class FormulaParser {
public:
    explicit FormulaParser(std::string_view text) : text_(text), pos_(0) {}

    Formula parse() {
        Formula f = parse_formula();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("unexpected input in formula '" +
                                 std::string(text_.substr(pos_)) + "'",
                             0, static_cast<int>(pos_) + 1);
        return f;
    }

private:
    Formula parse_formula() {
        skip_ws();
        char c = peek();
        if (c == 'T') {
            ++pos_;
            return Formula::top();
        }
        if (c == '!') {
            ++pos_;
            return Formula::neg(parse_formula());
        }
        if (c == '<') {
            ++pos_;
            std::string name = parse_action();
            if (peek() != '>')
                throw ParseError("expected '>' in observation", 0,
                                 static_cast<int>(pos_) + 1);
            ++pos_;
            if (starts_formula())
                return Formula::obs(Action{std::move(name)}, parse_formula());
            return Formula::obs(Action{std::move(name)});
        }
        if (c == '/') {
            if (text_.substr(pos_).rfind("/\\", 0) != 0)
                throw ParseError("expected '/\\' conjunction", 0,
                                 static_cast<int>(pos_) + 1);
            pos_ += 2;
            skip_ws();
            if (peek() != '{')
                throw ParseError("expected '{' after '/\\'", 0,
                                 static_cast<int>(pos_) + 1);
            ++pos_;
            std::vector<Formula> conjuncts;
            skip_ws();
            if (peek() != '}') {
                conjuncts.push_back(parse_formula());
                skip_ws();
                while (peek() == ',') {
                    ++pos_;
                    conjuncts.push_back(parse_formula());
                    skip_ws();
                }
            }
            if (peek() != '}')
                throw ParseError("unclosed conjunction", 0,
                                 static_cast<int>(pos_) + 1);
            ++pos_;
            return Formula::conj(std::move(conjuncts));
        }
        throw ParseError(c == '\0' ? "unexpected end of formula"
                                   : "unexpected character '" +
                                         std::string(1, c) + "' in formula",
                         0, static_cast<int>(pos_) + 1);
    }

    bool starts_formula() {
        skip_ws();
        char c = peek();
        return c == 'T' || c == '!' || c == '<' || c == '/';
    }

    std::string parse_action() {
        if (!std::islower(static_cast<unsigned char>(peek())))
            throw ParseError("expected action name", 0,
                             static_cast<int>(pos_) + 1);
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                text_[pos_] == '_'))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    std::string_view text_;
    std::size_t pos_;
};

}  // namespace

Formula parse_formula(std::string_view text) {
    return FormulaParser(text).parse();
}

}  // namespace spectro
