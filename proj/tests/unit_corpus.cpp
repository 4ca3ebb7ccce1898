#include <doctest.h>

#include <map>
#include <set>
#include <sstream>

#include "clogic/corpus.hpp"
#include "clogic/inference.hpp"
#include "clogic/normal_form.hpp"
#include "clogic/unification.hpp"
#include "helpers.hpp"

using namespace clogic;

namespace {

const CorpusLibrary& library() {
    static CorpusLibrary lib;
    return lib;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
            continue;
        }
        if (c != ' ' || depth > 0) cur += c;
    }
    out.push_back(cur);
    return out;
}

// Reads a printed "[s1, ..., sn / y1, ..., yn]" as a set of replacement/target pairs.
std::set<std::pair<std::string, std::string>> pairs_of(const std::string& printed) {
    auto slash = printed.find(" / ");
    auto reps = split_list(printed.substr(1, slash - 1));
    auto targets = split_list(printed.substr(slash + 3, printed.size() - slash - 4));
    REQUIRE(reps.size() == targets.size());
    std::set<std::pair<std::string, std::string>> out;
    for (std::size_t i = 0; i < reps.size(); ++i) out.emplace(reps[i], targets[i]);
    return out;
}

}  // namespace

TEST_CASE("the corpus lists the worked examples") {
    std::set<std::string> names;
    for (const auto& e : list_corpus()) names.insert(e.name);
    for (const char* n : {"pl-fc-section3", "fo-fc-section6", "fo-fc-section6-open", "counterexample-section5",
                          "points-lines", "points-lines-model", "unify-section4"})
        CHECK_MESSAGE(names.count(n), n);
    CHECK_THROWS_AS(library().find("no-such-entry"), LogicError);
}

TEST_CASE("derived-rule proofs by category") {
    std::map<std::string, int> counts;
    int derived = 0;
    for (const auto& e : library().entries()) {
        if (e.group.rfind("rules/", 0) != 0) continue;
        CHECK(e.kind == "proof");
        ++derived;
        ++counts[e.group.substr(6)];
    }
    CHECK(derived == 38);
    const std::map<std::string, int> expected{
        {"equality", 2},       {"permutation", 1},     {"assoc-comm", 4},      {"top-bot", 4},
        {"frobenius", 2},      {"two-rule", 2},        {"distributive", 4},    {"or-exists", 2},
        {"implication", 4},    {"negation", 2},        {"contradiction", 1},   {"double-negation", 2},
        {"contrapositive", 2}, {"de-morgan", 4},       {"resolution", 2},
    };
    CHECK(counts == expected);
    std::set<std::string> files;
    for (const auto& e : library().entries())
        if (e.kind == "proof") CHECK(files.insert(e.file("proof")).second);
}

TEST_CASE("every proof entry checks in its declared fragment") {
    for (const auto& e : library().entries()) {
        if (e.kind != "proof") continue;
        CHECK(e.expected == "ok");
        const auto& p = library().proof(e.name);
        CHECK_MESSAGE(to_string(p.derivation.fragment) == e.extra.at("fragment"), e.name);
        auto r = library().check_proof(e.name);
        CHECK_MESSAGE(r.ok(), e.name << ": " << (r.ok() ? "" : to_string(r.errors[0])));
    }
}

TEST_CASE("model entries give their recorded verdicts") {
    for (const auto& e : library().entries()) {
        if (e.kind != "model") continue;
        auto doc = library().theory(e.name);
        FiniteModel m = library().model(e.name);
        CHECK(validate_model(m).empty());
        auto sequents = lines_of(e.extra.at("sequents"));
        auto verdicts = lines_of(e.extra.at("verdicts"));
        REQUIRE(sequents.size() == verdicts.size());
        for (std::size_t i = 0; i < sequents.size(); ++i) {
            bool sat = satisfies(m, parse_sequent(sequents[i], doc));
            CHECK_MESSAGE((sat ? "satisfied" : "refuted") == verdicts[i], e.name << ": " << sequents[i]);
        }
    }
}

TEST_CASE("chain entries give their recorded answers") {
    for (const auto& e : library().entries()) {
        if (e.kind != "chain-case") continue;
        auto doc = library().theory(e.name);
        auto goal = as_normal_horn(parse_sequent(e.extra.at("goal"), doc));
        auto r = forward_chaining(doc.theory, goal);
        REQUIRE(r.status != ChainStatus::BudgetExhausted);
        CHECK_MESSAGE((r.status == ChainStatus::Derivable ? "true" : "false") == e.expected, e.name);
        if (r.derivation) CHECK(check_derivation(*r.derivation, doc.theory).ok());
    }
}

TEST_CASE("the unification entry gives its recorded unifier") {
    const auto& e = library().find("unify-section4");
    auto doc = library().theory(e.name);
    auto lhs = parse_unify_items(read_text_file(e.file("lhs")), doc, UnifyItemKind::Term);
    auto rhs = parse_unify_items(read_text_file(e.file("rhs")), doc, UnifyItemKind::Term);
    auto u = unify_terms_in_context(lhs.terms, rhs.terms);
    REQUIRE(u.ok());
    CHECK(to_string(u.theta(), true) == e.expected);
    CHECK(pairs_of(to_string(u.theta(), true)) == pairs_of(e.extra.at("displayed")));
}
