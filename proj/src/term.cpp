#include "stone/term.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace stone {

TermPtr make_zero() { return std::make_shared<Term>(Term{Term::Kind::Zero, {}, nullptr, nullptr}); }
TermPtr make_one() { return std::make_shared<Term>(Term{Term::Kind::One, {}, nullptr, nullptr}); }
TermPtr make_var(std::string name) {
    return std::make_shared<Term>(Term{Term::Kind::Var, std::move(name), nullptr, nullptr});
}
TermPtr make_not(TermPtr t) {
    return std::make_shared<Term>(Term{Term::Kind::Not, {}, std::move(t), nullptr});
}
TermPtr make_and(TermPtr a, TermPtr b) {
    return std::make_shared<Term>(Term{Term::Kind::And, {}, std::move(a), std::move(b)});
}
TermPtr make_or(TermPtr a, TermPtr b) {
    return std::make_shared<Term>(Term{Term::Kind::Or, {}, std::move(a), std::move(b)});
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    TermPtr run() {
        TermPtr t = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw SyntaxError(pos_, "end of input, '+' or '*'");
        return t;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    TermPtr expr() {
        TermPtr t = term();
        while (peek() == '+') {
            ++pos_;
            t = make_or(std::move(t), term());
        }
        return t;
    }

    TermPtr term() {
        TermPtr t = factor();
        while (peek() == '*') {
            ++pos_;
            t = make_and(std::move(t), factor());
        }
        return t;
    }

    TermPtr factor() {
        char c = peek();
        if (c == '!') {
            ++pos_;
            return make_not(factor());
        }
        if (c == '0') { ++pos_; return make_zero(); }
        if (c == '1') { ++pos_; return make_one(); }
        if (c == '(') {
            ++pos_;
            TermPtr t = expr();
            if (peek() != ')')
                throw SyntaxError(pos_, "')'");
            ++pos_;
            return t;
        }
        if (c >= 'a' && c <= 'z') {
            std::size_t start = pos_;
            ++pos_;
            while (pos_ < text_.size()) {
                char d = text_[pos_];
                if ((d >= 'a' && d <= 'z') || (d >= '0' && d <= '9') || d == '_') ++pos_;
                else break;
            }
            return make_var(text_.substr(start, pos_ - start));
        }
        throw SyntaxError(pos_, "'!', '0', '1', identifier or '('");
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

void collect_vars(const Term& t, std::set<std::string>& out) {
    switch (t.kind) {
    case Term::Kind::Var: out.insert(t.var); break;
    case Term::Kind::Not: collect_vars(*t.lhs, out); break;
    case Term::Kind::And:
    case Term::Kind::Or:
        collect_vars(*t.lhs, out);
        collect_vars(*t.rhs, out);
        break;
    default: break;
    }
}

} // namespace

TermPtr parse(const std::string& text) { return Parser(text).run(); }

std::vector<std::string> variables(const Term& t) {
    std::set<std::string> s;
    collect_vars(t, s);
    return {s.begin(), s.end()};
}

bool evaluate(const Term& t, std::uint32_t assignment,
              const std::vector<std::string>& generators) {
    switch (t.kind) {
    case Term::Kind::Zero: return false;
    case Term::Kind::One: return true;
    case Term::Kind::Var: {
        auto it = std::find(generators.begin(), generators.end(), t.var);
        if (it == generators.end())
            throw UnknownVariable(t.var);
        auto j = static_cast<unsigned>(it - generators.begin());
        auto g = static_cast<unsigned>(generators.size());
        return (assignment >> (g - 1 - j)) & 1;
    }
    case Term::Kind::Not: return !evaluate(*t.lhs, assignment, generators);
    case Term::Kind::And:
        return evaluate(*t.lhs, assignment, generators) &&
               evaluate(*t.rhs, assignment, generators);
    case Term::Kind::Or:
        return evaluate(*t.lhs, assignment, generators) ||
               evaluate(*t.rhs, assignment, generators);
    }
    throw InputError("corrupt term");
}

namespace {

std::string minterm(std::uint32_t model, const std::vector<std::string>& gens) {
    auto g = static_cast<unsigned>(gens.size());
    std::string out;
    for (unsigned j = 0; j < g; ++j) {
        if (j) out += "*";
        if (!((model >> (g - 1 - j)) & 1)) out += "!";
        out += gens[j];
    }
    return out;
}

} // namespace

Presentation::Presentation(std::vector<std::string> generators,
                           std::vector<std::pair<TermPtr, TermPtr>> relations)
    : gens_(std::move(generators)), rels_(std::move(relations)), algebra_(BoolAlgebra::z2()) {
    if (gens_.empty())
        throw InputError("a presentation needs at least one generator");
    if (gens_.size() > 4)
        throw SizeGuard("presentations are limited to 4 generators");
    for (const auto& [l, r] : rels_) {
        for (const auto& v : variables(*l))
            if (std::find(gens_.begin(), gens_.end(), v) == gens_.end())
                throw UnknownVariable(v);
        for (const auto& v : variables(*r))
            if (std::find(gens_.begin(), gens_.end(), v) == gens_.end())
                throw UnknownVariable(v);
    }

    auto g = static_cast<unsigned>(gens_.size());
    for (std::uint32_t a = 0; a < (1u << g); ++a) {
        bool ok = true;
        // A relation t1 = t2 is the constraint (t1 xor t2) = 0.
        for (const auto& [l, r] : rels_)
            if (evaluate(*l, a, gens_) != evaluate(*r, a, gens_)) { ok = false; break; }
        if (ok) models_.push_back(a);
    }
    if (models_.empty())
        throw UnsatisfiablePresentation("the relations admit no satisfying assignment");

    auto m = static_cast<unsigned>(models_.size());
    std::vector<std::string> names(std::size_t{1} << m);
    for (Elem e = 0; e < names.size(); ++e) {
        if (e == 0) { names[e] = "0"; continue; }
        if (e + 1 == names.size()) { names[e] = "1"; continue; }
        std::string s;
        for (int i = static_cast<int>(m) - 1; i >= 0; --i) {
            if (!((e >> static_cast<unsigned>(i)) & 1)) continue;
            if (!s.empty()) s += " + ";
            s += minterm(models_[static_cast<std::size_t>(i)], gens_);
        }
        names[e] = s;
    }
    algebra_ = BoolAlgebra::from_models(m, std::move(names));
}

Elem Presentation::canonicalize(const Term& t) const {
    auto m = static_cast<unsigned>(models_.size());
    Elem e = 0;
    for (unsigned i = 0; i < m; ++i)
        if (evaluate(t, models_[i], gens_)) e |= Elem{1} << i;
    return e;
}

std::string Presentation::print_canonical(Elem e) const { return algebra_.element_name(e); }

} // namespace stone
