#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "stone/term.hpp"

using namespace stone;

TEST_CASE("parse precedence and grouping") {
    TermPtr t = parse("a * !b + c");
    REQUIRE(t->kind == Term::Kind::Or);
    CHECK(t->lhs->kind == Term::Kind::And);
    CHECK(t->lhs->lhs->var == "a");
    CHECK(t->lhs->rhs->kind == Term::Kind::Not);
    CHECK(t->lhs->rhs->lhs->var == "b");
    CHECK(t->rhs->var == "c");

    TermPtr g = parse("a * (b + c)");
    REQUIRE(g->kind == Term::Kind::And);
    CHECK(g->lhs->var == "a");
    CHECK(g->rhs->kind == Term::Kind::Or);
}

TEST_CASE("left associativity") {
    TermPtr t = parse("a + b + c");
    REQUIRE(t->kind == Term::Kind::Or);
    CHECK(t->lhs->kind == Term::Kind::Or);
    CHECK(t->rhs->var == "c");
}

TEST_CASE("syntax errors carry positions") {
    try {
        parse("a + * b");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.position() == 4);
    }
    CHECK_THROWS_AS(parse(""), SyntaxError);
    CHECK_THROWS_AS(parse("a + "), SyntaxError);
    CHECK_THROWS_AS(parse("(a"), SyntaxError);
    CHECK_THROWS_AS(parse("a b"), SyntaxError);
    CHECK_THROWS_AS(parse("A"), SyntaxError);
}

TEST_CASE("evaluate under Z2 semantics") {
    std::vector<std::string> gens = {"a", "b"};
    // Assignment mask: generator j holds bit (g-1-j); {a:1,b:0} is mask 0b10.
    CHECK(evaluate(*parse("a * !b"), 0b10, gens));
    for (std::uint32_t m = 0; m < 4; ++m) {
        CHECK(evaluate(*parse("a + !a"), m, gens));
        CHECK_FALSE(evaluate(*parse("a * !a"), m, gens));
    }
    CHECK_THROWS_AS(evaluate(*parse("q"), 0, gens), UnknownVariable);
}

TEST_CASE("canonicalize in the free algebra on two generators") {
    Presentation p({"a", "b"}, {});
    CHECK(p.models().size() == 4);
    CHECK(p.canonicalize(*parse("a*b + a*!b")) == p.canonicalize(*parse("a")));
    CHECK(p.canonicalize(*parse("0")) == p.algebra().zero());
    CHECK(p.canonicalize(*parse("1")) == p.algebra().one());
}

TEST_CASE("relations quotient the algebra") {
    Presentation p({"a", "b"}, {{parse("a * b"), make_zero()}});
    CHECK(p.models().size() == 3);
    CHECK(p.canonicalize(*parse("a * b")) == p.algebra().zero());
    CHECK(p.algebra().size() == 8);
}

TEST_CASE("unsatisfiable presentation is rejected") {
    CHECK_THROWS_AS(Presentation({"a"}, {{parse("a"), parse("!a")}}),
                    UnsatisfiablePresentation);
    CHECK_THROWS_AS(Presentation({"a"}, {{parse("a * q"), make_zero()}}), UnknownVariable);
}

TEST_CASE("canonical printing") {
    Presentation p({"a", "b"}, {});
    CHECK(p.print_canonical(p.algebra().zero()) == "0");
    CHECK(p.print_canonical(p.algebra().one()) == "1");
    CHECK(p.print_canonical(p.canonicalize(*parse("a"))) == "a*b + a*!b");
}

TEST_CASE("print/parse round trip on every element") {
    Presentation free({"a", "b"}, {});
    Presentation rel({"a", "b", "c"}, {{parse("a * b"), parse("c")}});
    for (const Presentation* p : {&free, &rel})
        for (Elem e = 0; e < p->algebra().size(); ++e)
            CHECK(p->canonicalize(*parse(p->print_canonical(e))) == e);
}

TEST_CASE("element count is two to the number of models") {
    Presentation p({"a", "b"}, {{parse("a + b"), make_one()}});
    CHECK(p.models().size() == 3);
    CHECK(p.algebra().size() == 8);
}

TEST_CASE("evaluation is a homomorphism to Z2") {
    std::vector<std::string> gens = {"a", "b", "c"};
    std::mt19937 rng(7);
    auto random_term = [&](auto&& self, int depth) -> TermPtr {
        switch (rng() % (depth > 3 ? 3 : 6)) {
        case 0: return make_zero();
        case 1: return make_one();
        case 2: return make_var(gens[rng() % gens.size()]);
        case 3: return make_not(self(self, depth + 1));
        case 4: return make_and(self(self, depth + 1), self(self, depth + 1));
        default: return make_or(self(self, depth + 1), self(self, depth + 1));
        }
    };
    for (int i = 0; i < 200; ++i) {
        TermPtr s = random_term(random_term, 0);
        TermPtr t = random_term(random_term, 0);
        std::uint32_t m = rng() % 8;
        CHECK(evaluate(*make_or(s, t), m, gens) == (evaluate(*s, m, gens) || evaluate(*t, m, gens)));
        CHECK(evaluate(*make_and(s, t), m, gens) == (evaluate(*s, m, gens) && evaluate(*t, m, gens)));
        CHECK(evaluate(*make_not(s), m, gens) == !evaluate(*s, m, gens));
    }
}

TEST_CASE("generator guard") {
    std::vector<std::string> many = {"a", "b", "c", "d", "e"};
    CHECK_THROWS_AS(Presentation(many, {}), SizeGuard);
}
