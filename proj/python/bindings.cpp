#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "clogic/corpus.hpp"
#include "clogic/frontend.hpp"
#include "clogic/inference.hpp"
#include "clogic/kernel.hpp"
#include "clogic/normal_form.hpp"
#include "clogic/semantics.hpp"
#include "clogic/unification.hpp"

namespace py = pybind11;
using namespace clogic;

namespace {

using Declaration = std::tuple<std::string, std::vector<std::string>, std::string>;
using Binding = std::pair<std::string, std::string>;

std::vector<Binding> bindings_of(const Context& c) {
    std::vector<Binding> out;
    for (const auto& v : c) out.emplace_back(v.name, v.sort);
    return out;
}

struct PySequent {
    Sequent sequent;

    std::string str() const { return to_string(sequent); }
    std::string lhs() const { return to_string(sequent.lhs()); }
    std::string rhs() const { return to_string(sequent.rhs()); }
    std::vector<Binding> context() const { return bindings_of(sequent.ctx()); }
    std::string fragment() const { return to_string(classify(sequent)); }
    bool is_normal_horn() const { return clogic::is_normal_horn(sequent); }
};

struct PyTheory {
    TheoryDocument doc;

    static PyTheory parse(const std::string& text) { return {parse_theory(text)}; }
    static PyTheory load(const std::string& path) { return {parse_theory(read_text_file(path), path)}; }

    std::vector<std::string> sorts() const { return doc.theory.signature.sorts(); }
    std::vector<Declaration> functions() const {
        std::vector<Declaration> out;
        for (const auto& f : doc.theory.signature.functions()) out.emplace_back(f.name, f.args, f.result);
        return out;
    }
    std::vector<std::pair<std::string, std::vector<std::string>>> relations() const {
        std::vector<std::pair<std::string, std::vector<std::string>>> out;
        for (const auto& r : doc.theory.signature.relations()) out.emplace_back(r.name, r.args);
        return out;
    }
    std::vector<PySequent> axioms() const {
        std::vector<PySequent> out;
        for (const auto& a : doc.theory.axioms) out.push_back({a});
        return out;
    }
    std::string fragment() const { return to_string(classify(doc.theory)); }
    PySequent sequent(const std::string& text) const { return {parse_sequent(text, doc)}; }
    PyTheory normalized() const { return {TheoryDocument{horn_theory_normal_form(doc.theory), doc.variables}}; }
    std::string str() const { return print_theory(doc.theory); }
};

struct PyTraceRow {
    std::vector<std::string> history;
    std::vector<bool> settled;
    std::string popped;
    std::vector<std::size_t> counted;
    std::vector<std::string> derived;
};

struct PyChainResult {
    std::string status;
    std::vector<PyTraceRow> trace;
    std::optional<std::string> derivation;
    std::string trace_text;

    bool derivable() const { return status == to_string(ChainStatus::Derivable); }
};

bool is_propositional(const Theory& t, const Sequent& goal) {
    if (!t.signature.sorts().empty() || !goal.ctx().empty()) return false;
    for (const auto& a : t.axioms)
        if (!a.ctx().empty()) return false;
    return true;
}

PyChainResult chain(const PyTheory& theory, const std::string& goal, std::size_t passes, std::size_t queue) {
    const Theory& t = theory.doc.theory;
    Sequent goal_seq = parse_sequent(goal, theory.doc);
    NormalHornSequent normal = as_normal_horn(goal_seq);
    ChainResult r = is_propositional(t, goal_seq) ? propositional_forward_chaining(t, normal)
                                                  : forward_chaining(t, normal, IterationBudget{passes, queue});
    PyChainResult out;
    out.status = to_string(r.status);
    for (const auto& row : r.trace) out.trace.push_back({row.history, row.settled, row.popped, row.counted, row.derived});
    if (r.derivation) out.derivation = print_proof(*r.derivation, &t);
    out.trace_text = format_trace(r);
    return out;
}

struct PyUnification {
    bool ok = false;
    std::string reason;
    std::optional<std::string> theta;
    std::vector<std::string> results;  // each lhs item after the unifier, then each rhs item
};

PyUnification unify(const PyTheory& theory, const std::string& lhs, const std::string& rhs, const std::string& kind) {
    if (kind != "terms" && kind != "formulae") throw py::value_error("kind must be 'terms' or 'formulae'");
    const bool terms = kind == "terms";
    const UnifyItemKind k = terms ? UnifyItemKind::Term : UnifyItemKind::Formula;
    UnifyDocument l = parse_unify_items(lhs, theory.doc, k, "<lhs>");
    UnifyDocument r = parse_unify_items(rhs, theory.doc, k, "<rhs>");
    UnifyOutcome u = terms ? unify_terms_in_context(l.terms, r.terms) : unify_formulae_in_context(l.formulae, r.formulae);
    PyUnification out;
    out.ok = u.ok();
    if (!u.ok()) {
        out.reason = to_string(u.reason);
        return out;
    }
    out.theta = to_string(u.theta(), true);
    auto push = [&](const UnifyDocument& d) {
        if (terms)
            for (const auto& t : d.terms) out.results.push_back(to_string(apply_in_context(t, u.theta())));
        else
            for (const auto& f : d.formulae) out.results.push_back(to_string(apply_in_context(f, u.theta())));
    };
    push(l);
    push(r);
    return out;
}

struct PyProofReport {
    bool ok = false;
    std::string fragment;
    std::vector<std::tuple<int, std::string, std::string>> errors;
    std::vector<std::string> conclusions;
};

PyProofReport report_of(const ProofDocument& p, const TheoremResolver& resolver) {
    CheckReport r = check_derivation(p.derivation, p.theory, resolver);
    PyProofReport out;
    out.ok = r.ok();
    out.fragment = to_string(p.derivation.fragment);
    for (const auto& e : r.errors) out.errors.emplace_back(e.line, to_string(e.kind), e.message);
    for (const auto& s : p.derivation.concluded()) out.conclusions.push_back(to_string(s));
    return out;
}

const CorpusLibrary& library() {
    static CorpusLibrary lib;
    return lib;
}

PyProofReport check_proof(const std::string& text, const std::optional<PyTheory>& theory) {
    ProofDocument p = parse_proof(text, theory ? theory->doc : TheoryDocument{});
    return report_of(p, library().resolver());
}

struct PyModel {
    FiniteModel model;
    TheoryDocument doc;

    static PyModel parse(const std::string& text, const PyTheory& theory) {
        return {parse_model(text, theory.doc.theory.signature), theory.doc};
    }
    std::vector<std::string> validate() const { return validate_model(model); }
    bool satisfies(const std::string& sequent) const { return clogic::satisfies(model, parse_sequent(sequent, doc)); }
    std::vector<std::string> carrier(const std::string& sort) const { return model.carrier(sort).elems; }
    std::vector<std::size_t> step(const std::string& sort) const { return model.carrier(sort).step; }
    std::string str() const { return print_model(model); }
};

}  // namespace

PYBIND11_MODULE(_clogic, m) {
    m.doc() = "Multi-sorted categorical logic: theories, unification, forward chaining, proofs and finite models";

    static py::exception<LogicError> logic_error(m, "LogicError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const LogicError& e) {
            py::set_error(logic_error, (to_string(e.kind()) + ": " + e.what()).c_str());
        }
    });

    py::class_<PySequent>(m, "Sequent")
        .def_property_readonly("lhs", &PySequent::lhs)
        .def_property_readonly("rhs", &PySequent::rhs)
        .def_property_readonly("context", &PySequent::context)
        .def_property_readonly("fragment", &PySequent::fragment)
        .def("is_normal_horn", &PySequent::is_normal_horn)
        .def("__eq__", [](const PySequent& a, const PySequent& b) { return a.sequent == b.sequent; })
        .def("__str__", &PySequent::str)
        .def("__repr__", [](const PySequent& s) { return "Sequent('" + s.str() + "')"; });

    py::class_<PyTheory>(m, "Theory")
        .def_static("parse", &PyTheory::parse, py::arg("text"))
        .def_static("load", &PyTheory::load, py::arg("path"))
        .def_property_readonly("sorts", &PyTheory::sorts)
        .def_property_readonly("functions", &PyTheory::functions)
        .def_property_readonly("relations", &PyTheory::relations)
        .def_property_readonly("axioms", &PyTheory::axioms)
        .def_property_readonly("fragment", &PyTheory::fragment)
        .def("sequent", &PyTheory::sequent, py::arg("text"))
        .def("normalized", &PyTheory::normalized)
        .def("__str__", &PyTheory::str);

    py::class_<PyTraceRow>(m, "TraceRow")
        .def_readonly("history", &PyTraceRow::history)
        .def_readonly("settled", &PyTraceRow::settled)
        .def_readonly("popped", &PyTraceRow::popped)
        .def_readonly("counted", &PyTraceRow::counted)
        .def_readonly("derived", &PyTraceRow::derived);

    py::class_<PyChainResult>(m, "ChainResult")
        .def_readonly("status", &PyChainResult::status)
        .def_readonly("trace", &PyChainResult::trace)
        .def_readonly("derivation", &PyChainResult::derivation)
        .def_readonly("trace_text", &PyChainResult::trace_text)
        .def_property_readonly("derivable", &PyChainResult::derivable);

    py::class_<PyUnification>(m, "Unification")
        .def_readonly("ok", &PyUnification::ok)
        .def_readonly("reason", &PyUnification::reason)
        .def_readonly("theta", &PyUnification::theta)
        .def_readonly("results", &PyUnification::results);

    py::class_<PyProofReport>(m, "ProofReport")
        .def_readonly("ok", &PyProofReport::ok)
        .def_readonly("fragment", &PyProofReport::fragment)
        .def_readonly("errors", &PyProofReport::errors)
        .def_readonly("conclusions", &PyProofReport::conclusions);

    py::class_<PyModel>(m, "Model")
        .def_static("parse", &PyModel::parse, py::arg("text"), py::arg("theory"))
        .def("validate", &PyModel::validate)
        .def("satisfies", &PyModel::satisfies, py::arg("sequent"))
        .def("carrier", &PyModel::carrier, py::arg("sort"))
        .def("step", &PyModel::step, py::arg("sort"))
        .def("__str__", &PyModel::str);

    m.def("chain", &chain, py::arg("theory"), py::arg("goal"), py::arg("passes") = IterationBudget{}.passes,
          py::arg("queue") = IterationBudget{}.queue,
          "Forward chaining for a Horn goal; propositional input uses the propositional procedure.");
    m.def("unify", &unify, py::arg("theory"), py::arg("lhs"), py::arg("rhs"), py::arg("kind") = "terms",
          "Unify two lists of items written `[ctx] body;`.");
    m.def("check_proof", &check_proof, py::arg("text"), py::arg("theory") = std::nullopt,
          "Check a proof script; corpus proofs may be cited by name.");
    m.def(
        "closed_sort",
        [](const PyTheory& t, const std::string& sort) { return sort_closed(t.doc.theory.signature, sort); },
        py::arg("theory"), py::arg("sort"));
    m.def(
        "closed_term",
        [](const PyTheory& t, const std::string& sort) -> std::optional<std::string> {
            auto w = closed_term_witness(t.doc.theory.signature, sort);
            if (!w) return std::nullopt;
            return to_string(*w);
        },
        py::arg("theory"), py::arg("sort"));

    m.def("corpus_directory", &corpus_directory);
    m.def("corpus_entries", []() {
        std::vector<py::dict> out;
        for (const auto& e : library().entries()) {
            py::dict d;
            d["name"] = e.name;
            d["kind"] = e.kind;
            d["group"] = e.group;
            d["files"] = e.files;
            d["expected"] = e.expected;
            d["extra"] = e.extra;
            out.push_back(d);
        }
        return out;
    });
    m.def(
        "check_corpus_proof",
        [](const std::string& name) { return report_of(library().proof(name), library().resolver()); },
        py::arg("name"));
}
