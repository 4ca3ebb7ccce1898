#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "clogic/corpus.hpp"
#include "clogic/frontend.hpp"
#include "clogic/inference.hpp"
#include "clogic/normal_form.hpp"
#include "clogic/semantics.hpp"
#include "clogic/unification.hpp"

using namespace clogic;

namespace {

constexpr int exit_true = 0;
constexpr int exit_false = 1;
constexpr int exit_usage = 2;
constexpr int exit_budget = 3;

struct Options {
    bool unicode = false;
    std::string corpus_entry;
    std::vector<std::string> files;

    std::string goal;
    bool trace = false;
    bool derivation = false;
    std::size_t budget_passes = IterationBudget{}.passes;
    std::size_t budget_queue = IterationBudget{}.queue;

    std::string unify_kind;
    std::string theory_file;
    std::vector<std::string> sequents;
};

PrintOptions print_options(const Options& o) { return PrintOptions{o.unicode}; }

TheoryDocument load_theory(const std::string& path) { return parse_theory(read_text_file(path), path); }

std::vector<std::string> split_lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);)
        if (!line.empty()) out.push_back(line);
    return out;
}

// Fills the positional arguments of a subcommand from a manifest entry.
std::optional<CorpusEntry> corpus_entry(const Options& o) {
    if (o.corpus_entry.empty()) return std::nullopt;
    CorpusLibrary lib;
    return lib.find(o.corpus_entry);
}

void need_files(const Options& o, std::size_t n, const std::string& usage) {
    if (o.files.size() != n) throw CLI::ValidationError("expected " + usage);
}

bool is_propositional(const Theory& t, const Sequent& goal) {
    if (!t.signature.sorts().empty() || !goal.ctx().empty()) return false;
    for (const auto& a : t.axioms)
        if (!a.ctx().empty()) return false;
    return true;
}

int cmd_check(Options o) {
    if (auto e = corpus_entry(o)) o.files = {e->file("theory")};
    need_files(o, 1, "<theory>");
    TheoryDocument doc = load_theory(o.files[0]);
    const Theory& t = doc.theory;
    std::cout << "sorts " << t.signature.sorts().size() << ", functions " << t.signature.functions().size()
              << ", relations " << t.signature.relations().size() << ", axioms " << t.axioms.size() << "\n";
    for (std::size_t i = 0; i < t.axioms.size(); ++i)
        std::cout << "axiom " << i + 1 << " [" << to_string(classify(t.axioms[i])) << "] "
                  << to_string(t.axioms[i], print_options(o)) << "\n";
    std::cout << "fragment " << to_string(classify(t)) << "\n";
    return exit_true;
}

int cmd_normalize(Options o) {
    if (auto e = corpus_entry(o)) o.files = {e->file("theory")};
    need_files(o, 1, "<theory>");
    TheoryDocument doc = load_theory(o.files[0]);
    Theory n = horn_theory_normal_form(doc.theory);
    if (o.unicode) {
        for (const auto& a : n.axioms) std::cout << to_string(a, print_options(o)) << "\n";
    } else {
        std::cout << print_theory(n);
    }
    return exit_true;
}

int cmd_chain(Options o) {
    if (auto e = corpus_entry(o)) {
        o.files = {e->file("theory")};
        if (o.goal.empty() && e->extra.count("goal")) o.goal = e->extra.at("goal");
    }
    need_files(o, 1, "<theory>");
    if (o.goal.empty()) throw CLI::ValidationError("--goal is required");
    TheoryDocument doc = load_theory(o.files[0]);
    Sequent goal_seq = parse_sequent(o.goal, doc, "--goal");
    Theory t = doc.theory;
    bool normal = true;
    for (const auto& a : t.axioms) normal = normal && is_normal_horn(a);
    if (!normal) t = horn_theory_normal_form(t);
    NormalHornSequent goal = as_normal_horn(goal_seq);

    ChainResult r;
    if (is_propositional(t, goal_seq)) {
        r = propositional_forward_chaining(t, goal);
    } else {
        r = forward_chaining(t, goal, IterationBudget{o.budget_passes, o.budget_queue});
    }
    if (o.trace) std::cout << format_trace(r);
    if (o.derivation && r.derivation) std::cout << print_proof(*r.derivation, &t);
    switch (r.status) {
    case ChainStatus::Derivable:
        std::cout << "true\n";
        return exit_true;
    case ChainStatus::NotDerivable:
        std::cout << "false\n";
        return exit_false;
    case ChainStatus::BudgetExhausted:
        std::cout << "budget exhausted\n";
        return exit_budget;
    }
    return exit_false;
}

int cmd_unify(Options o) {
    if (auto e = corpus_entry(o)) {
        o.files = {e->file("lhs"), e->file("rhs")};
        if (o.unify_kind.empty()) o.unify_kind = e->extra.at("item-kind");
        if (o.theory_file.empty() && e->files.count("theory")) o.theory_file = e->file("theory");
    } else if (!o.files.empty()) {
        o.unify_kind = o.files.front();
        o.files.erase(o.files.begin());
    }
    need_files(o, 2, "<kind> <lhs-file> <rhs-file>");
    UnifyItemKind kind;
    if (o.unify_kind == "terms" || o.unify_kind == "terms-in-context")
        kind = UnifyItemKind::Term;
    else if (o.unify_kind == "formulae" || o.unify_kind == "formulas" || o.unify_kind == "formulae-in-context")
        kind = UnifyItemKind::Formula;
    else
        throw CLI::ValidationError("kind must be terms or formulae");
    TheoryDocument base;
    if (!o.theory_file.empty()) base = load_theory(o.theory_file);
    UnifyDocument lhs = parse_unify_items(read_text_file(o.files[0]), base, kind, o.files[0]);
    UnifyDocument rhs = parse_unify_items(read_text_file(o.files[1]), base, kind, o.files[1]);

    UnifyOutcome u = kind == UnifyItemKind::Term ? unify_terms_in_context(lhs.terms, rhs.terms)
                                                 : unify_formulae_in_context(lhs.formulae, rhs.formulae);
    if (!u.ok()) {
        std::cout << "no unifier: " << to_string(u.reason) << "\n";
        return exit_false;
    }
    std::cout << to_string(u.theta(), true) << "\n";
    if (kind == UnifyItemKind::Term) {
        for (std::size_t i = 0; i < lhs.terms.size(); ++i)
            std::cout << to_string(lhs.terms[i]) << "  ~>  " << to_string(apply_in_context(lhs.terms[i], u.theta()))
                      << "\n"
                      << to_string(rhs.terms[i]) << "  ~>  " << to_string(apply_in_context(rhs.terms[i], u.theta()))
                      << "\n";
    } else {
        const PrintOptions po = print_options(o);
        for (std::size_t i = 0; i < lhs.formulae.size(); ++i)
            std::cout << to_string(lhs.formulae[i], po) << "  ~>  "
                      << to_string(apply_in_context(lhs.formulae[i], u.theta()), po) << "\n"
                      << to_string(rhs.formulae[i], po) << "  ~>  "
                      << to_string(apply_in_context(rhs.formulae[i], u.theta()), po) << "\n";
    }
    return exit_true;
}

int cmd_check_proof(Options o) {
    if (auto e = corpus_entry(o)) {
        o.files.clear();
        if (e->files.count("theory")) o.files.push_back(e->file("theory"));
        o.files.push_back(e->file("proof"));
    }
    if (o.files.empty() || o.files.size() > 2) throw CLI::ValidationError("expected [<theory>] <proof>");
    TheoryDocument base;
    if (o.files.size() == 2) base = load_theory(o.files[0]);
    const std::string& path = o.files.back();
    ProofDocument p = parse_proof(read_text_file(path), base, path);
    CorpusLibrary lib;
    CheckReport r = check_derivation(p.derivation, p.theory, lib.resolver());
    for (const auto& line : p.derivation.lines) {
        bool bad = false;
        for (const auto& err : r.errors)
            if (err.line == line.number) {
                std::cout << "line " << line.number << ": " << to_string(err.kind) << ": " << err.message << "\n";
                bad = true;
            }
        if (!bad) std::cout << "line " << line.number << ": ok\n";
    }
    for (const auto& err : r.errors)
        if (!p.derivation.find(err.line)) std::cout << to_string(err) << "\n";
    std::cout << (r.ok() ? "proof ok" : "proof rejected") << " (" << to_string(p.derivation.fragment) << ")\n";
    return r.ok() ? exit_true : exit_false;
}

int cmd_model_check(Options o) {
    if (auto e = corpus_entry(o)) {
        o.files = {e->file("theory"), e->file("model")};
        if (o.sequents.empty() && e->extra.count("sequents")) o.sequents = split_lines(e->extra.at("sequents"));
    }
    need_files(o, 2, "<theory> <model>");
    TheoryDocument doc = load_theory(o.files[0]);
    FiniteModel m = parse_model(read_text_file(o.files[1]), doc.theory.signature, o.files[1]);
    std::cout << "model valid\n";
    std::vector<Sequent> targets;
    if (o.sequents.empty()) {
        targets = doc.theory.axioms;
    } else {
        for (const auto& s : o.sequents) targets.push_back(parse_sequent(s, doc, "--sequent"));
    }
    bool all = true;
    for (const auto& s : targets) {
        bool ok = satisfies(m, s);
        all = all && ok;
        std::cout << (ok ? "satisfied  " : "refuted    ") << to_string(s, print_options(o)) << "\n";
    }
    return all ? exit_true : exit_false;
}

int cmd_closed_sort(Options o) {
    if (auto e = corpus_entry(o)) o.files.insert(o.files.begin(), e->file("theory"));
    need_files(o, 2, "<theory> <sort>");
    const std::string sort = o.files[1];
    TheoryDocument doc = load_theory(o.files[0]);
    const Signature& sig = doc.theory.signature;
    if (!sig.has_sort(sort)) throw LogicError(ErrorKind::UnknownSort, "unknown sort " + sort);
    if (sort_closed(sig, sort)) {
        auto w = closed_term_witness(sig, sort);
        std::cout << "closed" << (w ? " (witness " + to_string(*w) + ")" : std::string()) << "\n";
        return exit_true;
    }
    std::cout << "open\n";
    return exit_false;
}

int cmd_list() {
    for (const auto& e : list_corpus()) {
        std::cout << e.name << "  " << e.kind << "  " << e.group;
        if (!e.expected.empty()) std::cout << "  expect " << e.expected;
        std::cout << "\n";
    }
    return exit_true;
}

bool input_error(ErrorKind k) {
    switch (k) {
    case ErrorKind::ParseError:
    case ErrorKind::UnknownSymbol:
    case ErrorKind::UnknownSort:
    case ErrorKind::ArityMismatch:
    case ErrorKind::SortMismatch:
    case ErrorKind::UnsuitableContext:
    case ErrorKind::BoundFreeClash:
    case ErrorKind::DuplicateSymbol:
    case ErrorKind::DuplicateVariable:
    case ErrorKind::UnknownCorpusEntry:
    case ErrorKind::ModelError:
        return true;
    default:
        return false;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Categorical logic toolkit: theories, forward chaining, unification, proofs and finite models"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--unicode", o.unicode, "Print formulae with logical symbols");

    auto with_corpus = [&](CLI::App* sub) {
        sub->add_option("--corpus", o.corpus_entry, "Take inputs from a bundled corpus entry");
    };

    auto* check = app.add_subcommand("check", "Parse and classify a theory");
    check->add_option("theory", o.files, "Theory file (.clt)");
    with_corpus(check);

    auto* normalize = app.add_subcommand("normalize", "Print the Horn normal form of a theory");
    normalize->add_option("theory", o.files, "Theory file (.clt)");
    with_corpus(normalize);

    auto* chain = app.add_subcommand("chain", "Forward chaining for a Horn goal sequent");
    chain->add_option("theory", o.files, "Theory file (.clt)");
    chain->add_option("--goal", o.goal, "Goal sequent, e.g. \"[] A & B |- C\"");
    chain->add_flag("--trace", o.trace, "Print the queue trace");
    chain->add_flag("--derivation", o.derivation, "Print the derivation as a proof script");
    chain->add_option("--budget-passes", o.budget_passes, "Maximum passes over the axioms");
    chain->add_option("--budget-queue", o.budget_queue, "Maximum number of queued facts");
    with_corpus(chain);

    auto* unify = app.add_subcommand("unify", "Unify two lists of terms or formulae in context");
    unify->add_option("args", o.files, "<terms|formulae> <lhs-file> <rhs-file>");
    unify->add_option("--theory", o.theory_file, "Theory supplying the signature");
    with_corpus(unify);

    auto* check_proof = app.add_subcommand("check-proof", "Check a proof script line by line");
    check_proof->add_option("files", o.files, "[<theory>] <proof>");
    with_corpus(check_proof);

    auto* model_check = app.add_subcommand("model-check", "Validate a finite model and test sequents in it");
    model_check->add_option("files", o.files, "<theory> <model>");
    model_check->add_option("--sequent", o.sequents, "Sequent to test instead of the axioms");
    with_corpus(model_check);

    auto* closed_sort = app.add_subcommand("closed-sort", "Decide whether a sort has a closed term");
    closed_sort->add_option("args", o.files, "<theory> <sort>");
    with_corpus(closed_sort);

    auto* list = app.add_subcommand("list", "List the bundled corpus");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_true : exit_usage;
    }

    try {
        if (*check) return cmd_check(o);
        if (*normalize) return cmd_normalize(o);
        if (*chain) return cmd_chain(o);
        if (*unify) return cmd_unify(o);
        if (*check_proof) return cmd_check_proof(o);
        if (*model_check) return cmd_model_check(o);
        if (*closed_sort) return cmd_closed_sort(o);
        if (*list) return cmd_list();
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const LogicError& e) {
        std::cerr << e.what() << "\n";
        return input_error(e.kind()) ? exit_usage : exit_false;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
