// Acceptance run: one PASS/FAIL line per criterion, with the thresholds it was held to.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "clogic/corpus.hpp"
#include "clogic/frontend.hpp"
#include "clogic/inference.hpp"
#include "clogic/kernel.hpp"
#include "clogic/normal_form.hpp"
#include "clogic/semantics.hpp"
#include "clogic/substitution.hpp"
#include "clogic/unification.hpp"
#include "generators.hpp"
#include "mutations.hpp"
#include "oracles.hpp"

using namespace clogic;

namespace {

// Pinned thresholds.
constexpr double kWorkedExampleSeconds = 0.1;
constexpr double kCorpusSeconds = 2.0;
constexpr double kSubstitutionOracleSeconds = 30.0;
constexpr int kMutationsPerProof = 100;
constexpr int kSubstitutionTriples = 1000;
constexpr std::size_t kMaxCarrier = 5;
constexpr int kUnifyInstances = 5000;
constexpr std::size_t kUnifyDepth = 6;
constexpr int kClosedSortSignatures = 500;
constexpr std::size_t kClosedSortMaxSorts = 6;
constexpr std::size_t kClosedSortMaxFunctions = 6;
constexpr int kHornSequents = 200;

struct Verdict {
    bool pass = false;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4fs", s);
    return buf;
}

const CorpusLibrary& library() {
    static CorpusLibrary lib;
    return lib;
}

std::set<Variable> as_set(const Context& c) { return {c.begin(), c.end()}; }

std::vector<std::string> split_top_level(const std::string& text) {
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
        if (c != ' ') cur += c;
    }
    out.push_back(cur);
    return out;
}

// Reads "[s1, ..., sn / y1, ..., yn]" whose images live over `ctx` and whose targets
// all have sort `sort`.
Substitution read_substitution(const std::string& printed, const TheoryDocument& doc, const std::string& ctx,
                               const std::string& sort) {
    auto slash = printed.find(" / ");
    auto images = split_top_level(printed.substr(1, slash - 1));
    auto targets = split_top_level(printed.substr(slash + 3, printed.size() - slash - 4));
    std::vector<Substitution::Pair> ps;
    for (std::size_t i = 0; i < images.size(); ++i) {
        auto item = parse_unify_items("version 1;\n" + ctx + " " + images[i] + ";", doc, UnifyItemKind::Term);
        ps.emplace_back(item.terms.at(0).body, Variable{targets.at(i), sort});
    }
    return Substitution(ps);
}

// ---------------------------------------------------------------- 1

Verdict propositional_worked_example() {
    const auto& e = library().find("pl-fc-section3");
    auto doc = library().theory(e.name);
    auto goal = as_normal_horn(parse_sequent(e.extra.at("goal"), doc));
    auto t0 = Clock::now();
    ChainResult r = propositional_forward_chaining(doc.theory, goal);
    const double elapsed = seconds_since(t0);
    std::vector<std::string> problems;
    if (!r.derivable() || !r.derivation) return {false, "chain did not return true"};
    const Derivation& d = *r.derivation;

    struct Row {
        std::string sequent;
        RuleKind rule;
        std::vector<int> premises;  // table row numbers; empty when not compared
        bool expanded = false;      // the table shows one step where the kernel needs several
    };
    const std::vector<Row> table{
        {"[] A & B & C |- A & B", RuleKind::AndE0, {}},
        {"[] A & B |- D", RuleKind::Hypothesis, {}},
        {"[] A & B & C |- D", RuleKind::Cut, {1, 2}},
        {"[] A & B & C |- A & B & C", RuleKind::Identity, {}},
        {"[] A & B & C |- A & B & C & D", RuleKind::AndI, {4, 3}},
        {"[] A & B & C & D |- C & D", RuleKind::AndE1, {}, true},
        {"[] C & D |- E", RuleKind::Hypothesis, {}},
        {"[] A & B & C & D |- E", RuleKind::Cut, {6, 7}},
        {"[] A & B & C |- E", RuleKind::Cut, {5, 8}},
    };
    const std::vector<std::string> counted{"[] A & B |- D", "[] C & D |- E"};

    std::vector<int> line_of(table.size() + 1, 0);
    std::size_t next = 0;
    for (std::size_t i = 0; i < table.size(); ++i) {
        Sequent want = parse_sequent(table[i].sequent, doc);
        while (next < d.lines.size() && !(d.lines[next].sequent == want)) ++next;
        if (next == d.lines.size()) {
            problems.push_back("table sequent " + std::to_string(i + 1) + " missing or out of order");
            break;
        }
        const DerivationLine& l = d.lines[next++];
        line_of[i + 1] = l.number;
        if (table[i].expanded) continue;
        if (l.rule.kind != table[i].rule) problems.push_back("table sequent " + std::to_string(i + 1) + " rule");
        std::vector<int> want_premises;
        for (int p : table[i].premises) want_premises.push_back(line_of[p]);
        if (!table[i].premises.empty() && l.premises != want_premises)
            problems.push_back("table sequent " + std::to_string(i + 1) + " premises");
    }
    for (std::size_t k = 0; k < counted.size(); ++k) {
        if (!(doc.theory.axioms.at(k) == parse_sequent(counted[k], doc)))
            problems.push_back("counted axiom " + std::to_string(k + 1));
    }
    const std::vector<std::vector<std::size_t>> counted_rows{{1}, {1}, {2}, {2}, {}};
    const std::vector<std::string> popped{"A", "B", "C", "D", "E"};
    if (r.trace.size() != popped.size()) {
        problems.push_back("trace length");
    } else {
        for (std::size_t i = 0; i < popped.size(); ++i)
            if (r.trace[i].popped != popped[i] || r.trace[i].counted != counted_rows[i])
                problems.push_back("trace row " + std::to_string(i + 1));
    }
    CheckReport check = check_derivation(d, doc.theory);
    if (!check.ok()) problems.push_back("kernel: " + to_string(check.errors.front()));
    if (d.fragment != Fragment::Horn) problems.push_back("fragment " + to_string(d.fragment));
    if (elapsed >= kWorkedExampleSeconds) problems.push_back("too slow");

    std::ostringstream out;
    out << "9 table sequents in order + 2 counted axioms, derivation of " << d.lines.size()
        << " lines checks in horn, " << fmt_seconds(elapsed) << " < " << kWorkedExampleSeconds << "s";
    for (const auto& p : problems) out << "; " << p;
    return {problems.empty(), out.str()};
}

// ---------------------------------------------------------------- 2

Verdict unification_worked_example() {
    const auto& e = library().find("unify-section4");
    auto doc = library().theory(e.name);
    auto lhs = parse_unify_items(read_text_file(e.file("lhs")), doc, UnifyItemKind::Term).terms;
    auto rhs = parse_unify_items(read_text_file(e.file("rhs")), doc, UnifyItemKind::Term).terms;
    auto t0 = Clock::now();
    UnifyOutcome u = unify_terms_in_context(lhs, rhs);
    const double elapsed = seconds_since(t0);
    if (!u.ok()) return {false, "no unifier: " + to_string(u.reason)};
    std::vector<std::string> problems;

    Substitution displayed = read_substitution(e.extra.at("displayed"), doc, "[u:S, b:S, k:S, a:S, z:S]", "S");
    if (!same_map(u.theta(), displayed)) problems.push_back("map differs from the displayed unifier");

    // The four displayed right-hand sides, in the order lhs[0], rhs[0], lhs[1], rhs[1].
    const std::vector<std::string> bodies{"g(f(g(z)))", "g(f(g(z)))", "f(g(z))", "f(g(z))"};
    const Context displayed_ctx({{"u", "S"}, {"b", "S"}, {"k", "S"}, {"a", "S"}, {"z", "S"}});
    const std::vector<TermInContext> items{lhs[0], rhs[0], lhs[1], rhs[1]};
    const std::set<Variable> want_vars = as_set(displayed_ctx);

    std::optional<Context> common;
    bool displayed_exact = true;
    for (std::size_t i = 0; i < items.size(); ++i) {
        TermInContext got = apply_in_context(items[i], u.theta());
        if (to_string(got.body) != bodies[i]) problems.push_back("body " + std::to_string(i + 1));
        if (!common) common = got.ctx;
        if (!(got.ctx == *common)) problems.push_back("context " + std::to_string(i + 1) + " differs");
        if (as_set(got.ctx) != want_vars) problems.push_back("context " + std::to_string(i + 1) + " content");
        TermInContext via_displayed = apply_in_context(items[i], displayed);
        displayed_exact = displayed_exact && to_string(via_displayed.body) == bodies[i] &&
                          via_displayed.ctx == displayed_ctx;
    }
    if (!displayed_exact) problems.push_back("displayed unifier does not reproduce the display");
    if (elapsed >= kWorkedExampleSeconds) problems.push_back("too slow");

    std::ostringstream out;
    out << "theta = " << to_string(u.theta()) << " same map as " << e.extra.at("displayed")
        << "; 4 bodies exact; contexts identical " << to_string(*common);
    if (!(*common == displayed_ctx))
        out << " (display orders them " << to_string(displayed_ctx) << ", which follows the inert pair order)";
    if (displayed_exact) out << "; the displayed unifier reproduces all four displayed lines exactly";
    out << "; " << fmt_seconds(elapsed) << " < " << kWorkedExampleSeconds << "s";
    for (const auto& p : problems) out << "; " << p;
    return {problems.empty(), out.str()};
}

// ---------------------------------------------------------------- 3

Verdict first_order_worked_example() {
    std::vector<std::string> problems;
    const auto& e = library().find("fo-fc-section6");
    auto doc = library().theory(e.name);
    Sequent goal_seq = parse_sequent(e.extra.at("goal"), doc);
    ChainResult r = forward_chaining(doc.theory, as_normal_horn(goal_seq));
    if (!r.derivable() || !r.derivation) return {false, "goal not derived"};
    const Derivation& d = *r.derivation;

    struct Row {
        std::string sequent;  // context in the table's order
        RuleKind rule;
        std::vector<int> premises;  // table rows; negative numbers are axioms
    };
    const std::vector<Row> table{
        {"[x4:X, w2:W, z:Z] C(x4) |- C(x4)", RuleKind::Identity, {}},
        {"[x3:X, y:Y] A(x3) |- B(x3)", RuleKind::Sub, {-1}},
        {"[x3:X, y:Y] top |- B(x3)", RuleKind::Cut, {}},
        {"[y:Y, w1:W, x4:X, w2:W, z:Z] C(x4) |- C(x4)", RuleKind::Sub, {1}},
        {"[y:Y, w1:W, x4:X, w2:W, z:Z] B(x4) & C(x4) |- D(x4, w1)", RuleKind::Sub, {-2}},
        {"[y:Y, w1:W, x4:X, w2:W, z:Z] C(x4) |- top", RuleKind::Top, {}},
        {"[y:Y, w1:W, x4:X, w2:W, z:Z] top |- B(x4)", RuleKind::Sub, {3}},
        {"[y:Y, w1:W, x4:X, w2:W, z:Z] C(x4) |- B(x4)", RuleKind::Cut, {6, 7}},
        {"[y:Y, w1:W, x4:X, w2:W, z:Z] C(x4) |- B(x4) & C(x4)", RuleKind::AndI, {8, 4}},
        {"[y:Y, w1:W, x4:X, w2:W, z:Z] C(x4) |- D(x4, w1)", RuleKind::Cut, {9, 5}},
        {"[y:Y, w2:W, x4:X, z:Z] C(x4) |- D(x4, w2)", RuleKind::Sub, {10}},
    };
    std::vector<const DerivationLine*> match(table.size() + 1, nullptr);
    for (std::size_t i = 0; i < table.size(); ++i) {
        Sequent want = parse_sequent(table[i].sequent, doc);
        for (const auto& l : d.lines)
            if (l.sequent.lhs() == want.lhs() && l.sequent.rhs() == want.rhs() &&
                as_set(l.sequent.ctx()) == as_set(want.ctx())) {
                match[i + 1] = &l;
                break;
            }
        if (!match[i + 1]) {
            problems.push_back("table row " + std::to_string(i + 1) + " missing");
            continue;
        }
        const DerivationLine& l = *match[i + 1];
        if (l.rule.kind != table[i].rule) problems.push_back("table row " + std::to_string(i + 1) + " rule");
        std::vector<int> want_premises;
        bool comparable = true;
        for (int p : table[i].premises) {
            if (p < 0) {
                const DerivationLine* prem = l.premises.empty() ? nullptr : d.find(l.premises[0]);
                if (!prem || prem->rule.kind != RuleKind::Hypothesis ||
                    prem->rule.axiom != static_cast<std::size_t>(-p))
                    problems.push_back("table row " + std::to_string(i + 1) + " axiom premise");
                comparable = false;
            } else if (match[p]) {
                want_premises.push_back(match[p]->number);
            } else {
                comparable = false;
            }
        }
        if (comparable && !table[i].premises.empty() && l.premises != want_premises)
            problems.push_back("table row " + std::to_string(i + 1) + " premises");
    }

    auto find_sub = [&](const Substitution& want, const DerivationLine* from) -> const DerivationLine* {
        for (const auto& l : d.lines)
            if (l.rule.kind == RuleKind::Sub && same_map(without_inert(l.rule.theta), want) && from &&
                l.premises == std::vector<int>{from->number})
                return &l;
        return nullptr;
    };
    const DerivationLine* w_step = find_sub(Substitution({{Term::var("w2", "W"), Variable{"w1", "W"}}}), match[10]);
    if (!w_step || w_step != match[11]) problems.push_back("[w2/w1] step");
    const DerivationLine* k_step = find_sub(Substitution({{make_app(doc.theory.signature, "k", {}),
                                                           Variable{"y", "Y"}}}), match[11]);
    if (!k_step) problems.push_back("[k/y] step");
    auto concluded = d.concluded();
    if (concluded.size() != 1 || !(concluded[0] == goal_seq)) problems.push_back("final sequent is not the goal");
    CheckReport check = check_derivation(d, doc.theory);
    if (!check.ok()) problems.push_back("kernel: " + to_string(check.errors.front()));
    if (d.fragment != Fragment::Horn) problems.push_back("fragment " + to_string(d.fragment));

    const auto& open = library().find("fo-fc-section6-open");
    auto open_doc = library().theory(open.name);
    const IterationBudget budget{};
    ChainResult ro = forward_chaining(open_doc.theory, as_normal_horn(parse_sequent(open.extra.at("goal"), open_doc)),
                                      budget);
    if (ro.status != ChainStatus::NotDerivable) problems.push_back("open case is not false within budget");

    std::ostringstream out;
    out << "derives " << to_string(goal_seq) << " in " << d.lines.size()
        << " checked horn lines; 11 table rows replayed (context as a set, rules and premises), then [w2 / w1] and "
           "[k / y]; open case false within "
        << budget.passes << " passes / " << budget.queue << " facts";
    for (const auto& p : problems) out << "; " << p;
    return {problems.empty(), out.str()};
}

// ---------------------------------------------------------------- 4

Verdict proof_corpus() {
    std::vector<std::string> problems;
    int proofs = 0, derived_rules = 0, lowered = 0, not_lowerable = 0, mutants = 0;
    std::vector<std::string> fits_lower;
    testgen::Rng rng(4004);
    auto t0 = Clock::now();
    for (const auto& e : library().entries()) {
        if (e.kind != "proof") continue;
        ++proofs;
        if (e.group.rfind("rules/", 0) == 0) ++derived_rules;
        const ProofDocument& p = library().proof(e.name);
        if (to_string(p.derivation.fragment) != e.extra.at("fragment"))
            problems.push_back(e.name + " declared fragment");
        CheckReport r = check_derivation(p.derivation, p.theory, library().resolver());
        if (!r.ok()) problems.push_back(e.name + ": " + to_string(r.errors.front()));

        if (p.derivation.fragment == Fragment::Atomic) {
            ++not_lowerable;
        } else {
            Derivation lower = p.derivation;
            lower.fragment = static_cast<Fragment>(static_cast<int>(lower.fragment) - 1);
            CheckReport lr = check_derivation(lower, p.theory, library().resolver());
            bool fragment_only = !lr.ok();
            for (const auto& err : lr.errors) fragment_only = fragment_only && err.kind == StepErrorKind::FragmentViolation;
            if (lr.ok())
                fits_lower.push_back(e.name);
            else if (fragment_only)
                ++lowered;
            else
                problems.push_back(e.name + " lowered: " + to_string(lr.errors.front()));
        }

        for (int i = 0; i < kMutationsPerProof; ++i) {
            testgen::Mutant m = testgen::mutate(p.derivation, rng);
            ++mutants;
            if (!testgen::rejected(p.derivation, m, p.theory, library().resolver()))
                problems.push_back(e.name + " mutant survived at line " + std::to_string(m.line) + " (" +
                                   testgen::to_string(m.kind) + ")");
        }
    }
    const double elapsed = seconds_since(t0);
    for (const auto& n : fits_lower) problems.push_back(n + " also checks one fragment lower");
    if (elapsed >= kCorpusSeconds) problems.push_back("too slow");

    std::ostringstream out;
    out << proofs << " proofs (" << derived_rules << " derived rules) check; " << lowered
        << " fail with FragmentViolation one fragment lower (" << not_lowerable << " atomic, not applicable); "
        << mutants << " mutants (" << kMutationsPerProof << " per proof) all rejected; " << fmt_seconds(elapsed)
        << " < " << kCorpusSeconds << "s";
    for (const auto& p : problems) out << "; " << p;
    return {problems.empty(), out.str()};
}

// ---------------------------------------------------------------- 5

Verdict semantics_examples() {
    std::vector<std::string> problems;
    struct Expect {
        std::string model;
        std::string sequent;
        bool satisfied;
    };
    const std::vector<Expect> expected{
        {"points-lines-model", "[x:Points, y:Points] top |- I(x, f(x,y)) & I(y, f(x,y))", true},
        {"counterexample-section5", "[a:A, b:B] R(a) |- S(a)", true},
        {"counterexample-section5", "[a:A] R(a) |- S(a)", false},
    };
    std::ostringstream out;
    for (const auto& x : expected) {
        auto doc = library().theory(x.model);
        FiniteModel m = library().model(x.model);
        auto violations = validate_model(m);
        if (!violations.empty()) problems.push_back(x.model + " invalid: " + violations.front());
        bool got = satisfies(m, parse_sequent(x.sequent, doc));
        if (got != x.satisfied) problems.push_back(x.sequent + " gave " + (got ? "satisfied" : "refuted"));
        out << x.sequent << " " << (got ? "satisfied" : "refuted") << "; ";
    }
    auto pl = library().theory("points-lines");
    FiniteModel plm = library().model("points-lines-model");
    for (const auto& ax : pl.theory.axioms)
        if (!satisfies(plm, ax)) problems.push_back("points-lines axiom refuted: " + to_string(ax));
    out << "both models validate";
    for (const auto& p : problems) out << "; " << p;
    return {problems.empty(), out.str()};
}

// ---------------------------------------------------------------- 6

Verdict substitution_oracle() {
    testgen::Rng rng(6006);
    int triples = 0, terms = 0, formulae = 0, disagreements = 0, skipped = 0;
    std::string first;
    auto t0 = Clock::now();
    while (triples < kSubstitutionTriples) {
        testgen::SignatureShape shape;
        Signature sig = testgen::random_signature(rng, shape);
        FiniteModel m = testgen::random_model(rng, sig, testgen::ModelShape{1, kMaxCarrier, 0.3, 0.4});
        Context ctx = testgen::random_context(rng, sig, 3, "x", testgen::chance(rng, 0.3));
        if (ctx.size() == 0) continue;

        std::vector<Variable> targets;
        for (const auto& v : ctx)
            if (testgen::chance(rng, 0.75)) targets.push_back(v);
        if (testgen::chance(rng, 0.2)) targets.push_back({"t0", testgen::pick(rng, sig.sorts())});
        const std::string prefix = testgen::pick(rng, std::vector<std::string>{"y", "x", "b"});
        Context source = testgen::random_context(rng, sig, 3, prefix, testgen::chance(rng, 0.5));
        auto theta = testgen::random_substitution(rng, sig, Context(targets), source, 2);
        if (!theta) {
            ++skipped;
            continue;
        }
        std::optional<std::string> bad;
        if (testgen::chance(rng, 0.4)) {
            auto t = testgen::random_any_term(rng, sig, ctx, 3);
            if (!t) continue;
            bad = check_substitution_properties(m, TermInContext{ctx, *t}, *theta);
            ++terms;
        } else {
            testgen::FormulaGenerator gen(rng, sig, testgen::FormulaShape{Fragment::Intuitionistic, 3, 2, true});
            bad = check_substitution_properties(m, FormulaInContext{ctx, gen(ctx)}, *theta);
            ++formulae;
        }
        ++triples;
        if (bad) {
            if (disagreements++ == 0) first = *bad;
        }
    }
    const double elapsed = seconds_since(t0);
    std::ostringstream out;
    out << triples << " triples (" << terms << " terms, " << formulae << " formulae), carriers <= " << kMaxCarrier
        << ", " << disagreements << " disagreements, " << fmt_seconds(elapsed) << " < " << kSubstitutionOracleSeconds
        << "s";
    if (disagreements) out << "; first: " << first;
    return {disagreements == 0 && triples >= kSubstitutionTriples && elapsed < kSubstitutionOracleSeconds, out.str()};
}

// ---------------------------------------------------------------- 7

Verdict heyting_oracle() {
    const auto doc = parse_theory("version 1;\nsort X;\nrel U : X;\nrel V : X;\n");
    const auto implication =
        parse_unify_items("version 1;\n[x:X] U(x) => V(x);", doc, UnifyItemKind::Formula).formulae.at(0);
    long iterators = 0, interior_checks = 0, adjunction_checks = 0, failures = 0;
    for (std::size_t n = 1; n <= kMaxCarrier; ++n) {
        oracle::for_each_step(n, [&](const std::vector<std::size_t>& step) {
            ++iterators;
            FiniteModel m(doc.theory.signature);
            m.set_sort("X", oracle::iterator_of(step));
            auto closed = oracle::closed_masks(step);
            for (oracle::Mask u = 0; u < (oracle::Mask{1} << n); ++u) {
                ++interior_checks;
                if (oracle::to_mask(interior(m, oracle::to_subset("X", n, u))) != oracle::brute_interior(closed, u))
                    ++failures;
            }
            for (oracle::Mask u : closed) {
                m.set_relation("U", oracle::to_subset("X", n, u).members);
                for (oracle::Mask v : closed) {
                    m.set_relation("V", oracle::to_subset("X", n, v).members);
                    oracle::Mask imp = oracle::to_mask(interpret_formula(m, implication));
                    if (!oracle::closed_mask(step, imp)) ++failures;
                    for (oracle::Mask w : closed) {
                        ++adjunction_checks;
                        const bool below_imp = (w & ~imp) == 0;
                        const bool meet_below = (w & u & ~v) == 0;
                        if (below_imp != meet_below) ++failures;
                    }
                }
            }
        });
    }
    std::ostringstream out;
    out << iterators << " iterators with carrier <= " << kMaxCarrier << ", " << interior_checks
        << " interior comparisons, " << adjunction_checks << " adjunction triples, " << failures << " exceptions";
    return {failures == 0, out.str()};
}

// ---------------------------------------------------------------- 8

Verdict unifier_properties() {
    testgen::Rng rng(8008);
    int instances = 0, unified = 0, occurs = 0, occurs_ok = 0, generalized_failed = 0, unsound = 0, context_split = 0,
        fuel = 0;
    for (int i = 0; i < kUnifyInstances; ++i) {
        auto mode = static_cast<oracle::UnifyMode>(i % 3);
        auto inst = oracle::random_unify_instance(rng, mode, kUnifyDepth);
        ++instances;
        UnifyOutcome u = unify_terms_in_context(inst.as, inst.bs);
        if (!u.ok() && u.reason == NoUnifierReason::FuelExhausted) ++fuel;
        if (mode == oracle::UnifyMode::Occurs) {
            ++occurs;
            if (!u.ok() && u.reason == NoUnifierReason::OccursCheck) ++occurs_ok;
            continue;
        }
        if (mode == oracle::UnifyMode::Generalized && !u.ok()) ++generalized_failed;
        if (!u.ok()) continue;
        ++unified;
        const Context common = apply_in_context(inst.as[0], u.theta()).ctx;
        for (std::size_t k = 0; k < inst.as.size(); ++k) {
            auto l = apply_in_context(inst.as[k], u.theta());
            auto r = apply_in_context(inst.bs[k], u.theta());
            if (!(l.body == r.body)) ++unsound;
            if (!(l.ctx == common) || !(r.ctx == common)) ++context_split;
        }
    }
    std::ostringstream out;
    out << instances << " instances (depth <= " << kUnifyDepth << "): " << unified << " unified, " << unsound
        << " unsound, " << context_split << " with differing contexts; " << occurs_ok << "/" << occurs
        << " occurs-check cases report OccursCheck; " << generalized_failed << " solvable instances missed; " << fuel
        << " fuel exhaustions";
    const bool pass = instances >= kUnifyInstances && unsound == 0 && context_split == 0 && occurs_ok == occurs &&
                      generalized_failed == 0 && fuel == 0;
    return {pass, out.str()};
}

// ---------------------------------------------------------------- 9

Verdict closed_sort_agreement() {
    testgen::Rng rng(9009);
    int signatures = 0, sorts = 0, closed = 0, disagreements = 0, bad_witness = 0;
    for (int i = 0; i < kClosedSortSignatures; ++i) {
        testgen::SignatureShape shape{kClosedSortMaxSorts, kClosedSortMaxFunctions, 0, 3, 0.2};
        Signature sig = testgen::random_signature(rng, shape);
        ++signatures;
        for (const auto& s : sig.sorts()) {
            ++sorts;
            const bool got = sort_closed(sig, s);
            const bool want = oracle::enumerate_closed_term(sig, s, sig.functions().size() + 1).has_value();
            if (got != want) ++disagreements;
            if (got) ++closed;
            auto w = closed_term_witness(sig, s);
            if (w.has_value() != got || (w && (!oracle::is_closed_term(*w) || sort_of(sig, *w) != s))) ++bad_witness;
        }
    }
    std::ostringstream out;
    out << signatures << " signatures (<= " << kClosedSortMaxSorts << " sorts, <= " << kClosedSortMaxFunctions
        << " functions), " << sorts << " sorts, " << closed << " closed, " << disagreements << " disagreements, "
        << bad_witness << " bad witnesses";
    return {disagreements == 0 && bad_witness == 0, out.str()};
}

// ---------------------------------------------------------------- 10

Verdict horn_normal_form_equivalence() {
    testgen::Rng rng(10010);
    int sequents = 0, disagreements = 0, not_idempotent = 0, not_normal = 0;
    std::vector<Sequent> all;
    Signature last;
    for (int i = 0; i < kHornSequents; ++i) {
        testgen::SignatureShape shape;
        Signature sig = testgen::random_signature(rng, shape);
        if (sig.relations().empty()) sig.add_relation("R0", {sig.sorts()[0]});
        Context ctx = testgen::random_context(rng, sig, 2, "x");
        testgen::FormulaGenerator gen(rng, sig, testgen::FormulaShape{Fragment::Horn, 3, 2, true});
        Sequent s(gen(ctx), ctx, gen(ctx));
        ++sequents;
        auto nf = horn_normal_form(s);
        for (const auto& n : nf)
            if (!is_normal_horn(n.to_sequent())) ++not_normal;
        for (int k = 0; k < 3; ++k) {
            FiniteModel m = testgen::random_model(rng, sig, testgen::ModelShape{1, 3, 0.3, 0.5});
            bool every = true;
            for (const auto& n : nf) every = every && satisfies(m, n.to_sequent());
            if (satisfies(m, s) != every) ++disagreements;
        }
        Theory once = horn_theory_normal_form(Theory{sig, {s}});
        if (!(horn_theory_normal_form(once).axioms == once.axioms)) ++not_idempotent;
    }
    std::ostringstream out;
    out << sequents << " Horn sequents x 3 random models: " << disagreements << " disagreements, " << not_normal
        << " non-normal outputs, " << not_idempotent << " non-idempotent";
    return {disagreements == 0 && not_idempotent == 0 && not_normal == 0, out.str()};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"propositional chaining worked example", propositional_worked_example},
        {"terms-in-context unification worked example", unification_worked_example},
        {"first-order chaining worked example", first_order_worked_example},
        {"proof corpus", proof_corpus},
        {"semantics examples", semantics_examples},
        {"substitution oracle", substitution_oracle},
        {"interior and implication oracle", heyting_oracle},
        {"unifier properties", unifier_properties},
        {"closed sorts against enumeration", closed_sort_agreement},
        {"Horn normal form equivalence", horn_normal_form_equivalence},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception& ex) {
            v = {false, std::string("exception: ") + ex.what()};
        }
        if (!v.pass) ++failed;
        std::cout << "criterion " << (i + 1) << " " << (v.pass ? "PASS" : "FAIL") << " " << criteria[i].first << ": "
                  << v.detail << std::endl;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
