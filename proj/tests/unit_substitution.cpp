#include <doctest.h>

#include "clogic/substitution.hpp"
#include "helpers.hpp"

using namespace clogic;
using namespace clogic::testing;

namespace {

TheoryDocument doc() {
    return theory(
        "sort A;\n"
        "fun f : A, A -> A;\n"
        "fun f1 : A -> A;\n"
        "fun g : A -> A;\n"
        "const k : A;\n"
        "rel R : A, A;\n"
        "rel R3 : A, A, A;\n"
        "rel phi : A, A;\n");
}

Variable v(const std::string& n) { return {n, "A"}; }
Term tv(const std::string& n) { return Term::var(n, "A"); }

}  // namespace

TEST_CASE("extension appends identity pairs for untargeted context variables") {
    auto d = doc();
    Substitution theta({{term(d, "[y:A] f1(y)"), v("x")}, {tv("u"), v("w")}});
    Substitution ext = extend(theta, Context{v("w"), v("z")});
    CHECK(to_string(ext, true) == "[f1(y), u, z / x, w, z]");
    CHECK(to_string(extend(Substitution{}, Context{v("a"), v("b")}), true) == "[a, b / a, b]");
    CHECK(extend(theta, Context{}) == theta);
}

TEST_CASE("term substitution is simultaneous") {
    auto d = doc();
    Term t = term(d, "[x:A, y:A] f(x, y)");
    Substitution theta({tv("x"), tv("z")}, Context{v("y"), v("x")});
    CHECK(to_string(apply(t, theta)) == "f(z, x)");
    Term seq = apply(apply(t, Substitution({tv("x")}, Context{v("y")})), Substitution({tv("z")}, Context{v("x")}));
    CHECK(to_string(seq) == "f(z, z)");
    CHECK(apply(tv("x"), Substitution{}) == tv("x"));
}

TEST_CASE("term in context takes the canonical context of the extension") {
    auto d = doc();
    TermInContext xyfx = term_in_context(d, "[x:A, y:A] f1(x)");
    Substitution theta({term(d, "[z:A] g(z)"), tv("w")}, Context{v("x"), v("w")});
    CHECK(to_string(apply_in_context(xyfx, theta)) == "z, w, y . f1(g(z))");
    TermInContext xx = term_in_context(d, "[x:A] x");
    CHECK(apply_in_context(xx, Substitution{}) == xx);
    TermInContext abga = term_in_context(d, "[a:A, b:A] g(a)");
    auto r = apply_in_context(abga, Substitution({term(d, "[] k")}, Context{v("a")}));
    CHECK(to_string(r) == "b . g(k)");
}

TEST_CASE("formula substitution avoids capture") {
    auto d = doc();
    Formula f = formula(d, "[y:A] exists x:A. R(x, y)");
    Formula r = apply(f, Substitution({tv("x")}, Context{v("y")}));
    REQUIRE(r.kind() == Formula::Kind::Exists);
    CHECK(r.bound() != v("x"));
    CHECK(alpha_equivalent(r, formula(d, "[x:A] exists x':A. R(x', x)")));

    Formula g = formula(d, "[x:A] exists z:A. phi(x, z)");
    Formula rg = apply(g, Substitution({term(d, "[y:A] f1(y)")}, Context{v("z")}));
    CHECK(alpha_equivalent(rg, g));
    CHECK(apply(Formula::top(), Substitution({tv("q")}, Context{v("x")})) == Formula::top());
}

TEST_CASE("formula in context follows the case table") {
    auto d = doc();
    auto zf = formula_in_context(d, "[y:A, z:A, w:A] exists x:A. R3(x, y, z)");
    auto r = apply_in_context(zf, Substitution({term(d, "[x:A] f1(x)")}, Context{v("y")}));
    CHECK(to_string(r.ctx) == "[x:A, z:A, w:A]");
    CHECK(alpha_equivalent(r.body, formula(d, "[x:A, z:A] exists x':A. R3(x', f1(x), z)")));
    auto top = formula_in_context(d, "[a:A, b:A] top");
    auto rt = apply_in_context(top, Substitution({tv("c")}, Context{v("a")}));
    CHECK(to_string(rt.ctx) == "[c:A, b:A]");
    CHECK(rt.body == Formula::top());
    auto ra = formula_in_context(d, "[a:A] R(a, a)");
    CHECK(apply_in_context(ra, Substitution{}) == ra);
}

TEST_CASE("composition") {
    auto d = doc();
    Substitution t1({tv("u"), tv("b"), term(d, "[y:A] f1(y)")}, Context{v("u"), v("b"), v("x")});
    Substitution t2({tv("u"), tv("b"), tv("k"), tv("a"), term(d, "[z:A] g(z)")},
                    Context{v("u"), v("b"), v("k"), v("a"), v("y")});
    Substitution c = compose(t1, t2);
    CHECK(to_string(c, true) == "[u, b, k, a, f1(g(z)), g(z) / u, b, k, a, x, y]");
    CHECK(compose(t1, Substitution{}) == t1);
    CHECK(compose(Substitution{}, t1) == t1);
    Substitution fy({term(d, "[y:A] f1(y)")}, Context{v("x")});
    Substitution gz({term(d, "[z:A] g(z)")}, Context{v("y")});
    Substitution fg = compose(fy, gz);
    CHECK(to_string(*fg.lookup(v("x"))) == "f1(g(z))");
    CHECK(to_string(*fg.lookup(v("y"))) == "g(z)");
    Term gx = term(d, "[x:A] g(x)");
    CHECK(to_string(apply(gx, fg)) == "g(f1(g(z)))");
}

TEST_CASE("substitution invariants") {
    CHECK_THROWS_AS(Substitution({{Term::var("a", "A"), Variable{"x", "A"}}, {Term::var("b", "A"), Variable{"x", "A"}}}),
                    LogicError);
    CHECK_THROWS_AS(Substitution({{Term::var("a", "B"), Variable{"x", "A"}}}), LogicError);
    CHECK(Substitution{}.empty());
}

TEST_CASE("fresh variables avoid the given names") {
    FreshVariableSource fresh({Variable{"x", "A"}, Variable{"x_1", "A"}});
    Variable a = fresh.fresh(Variable{"x", "A"});
    Variable b = fresh.fresh(Variable{"x", "A"});
    CHECK(a.name != "x");
    CHECK(a.name != "x_1");
    CHECK(a != b);
    CHECK(a.sort == "A");
}
