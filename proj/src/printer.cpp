#include <sstream>

#include "clogic/frontend.hpp"

namespace clogic {

namespace {

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += xs[i];
    }
    return out;
}

void print_declarations(std::ostringstream& out, const Theory& t) {
    const Signature& sig = t.signature;
    for (const auto& s : sig.sorts()) out << "sort " << s << ";\n";
    for (const auto& f : sig.functions()) {
        if (f.args.empty())
            out << "const " << f.name << " : " << f.result << ";\n";
        else
            out << "fun " << f.name << " : " << join(f.args, ", ") << " -> " << f.result << ";\n";
    }
    for (const auto& r : sig.relations()) {
        if (r.args.empty())
            out << "prop " << r.name << ";\n";
        else
            out << "rel " << r.name << " : " << join(r.args, ", ") << ";\n";
    }
    for (const auto& a : t.axioms) out << "axiom " << to_string(a) << ";\n";
}

std::string tuple_text(const FiniteModel& m, const std::vector<std::string>& sorts, std::size_t k) {
    auto idx = m.decode(sorts, k);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < sorts.size(); ++i) labels.push_back(m.carrier(sorts[i]).elems[idx[i]]);
    return "(" + join(labels, ", ") + ")";
}

}  // namespace

std::string print_theory(const Theory& t) {
    std::ostringstream out;
    out << "version 1;\n";
    print_declarations(out, t);
    return out.str();
}

std::string print_model(const FiniteModel& m) {
    const Signature& sig = m.signature();
    std::ostringstream out;
    out << "version 1;\n";
    for (const auto& s : sig.sorts()) {
        const FiniteIterator& it = m.carrier(s);
        out << "iterator " << s << " {\n  elems " << join(it.elems, " ") << ";\n";
        std::vector<std::string> steps;
        for (std::size_t i = 0; i < it.size(); ++i) steps.push_back(it.elems[i] + "->" + it.elems[it.step[i]]);
        out << "  step " << join(steps, " ") << ";\n}\n";
    }
    for (const auto& f : sig.functions()) {
        out << "fun " << f.name << " {\n";
        const auto& table = m.function_table(f.name);
        for (std::size_t k = 0; k < table.size(); ++k)
            out << "  " << tuple_text(m, f.args, k) << " -> " << m.carrier(f.result).elems[table[k]] << ";\n";
        out << "}\n";
    }
    for (const auto& r : sig.relations()) {
        out << "rel " << r.name << " {\n";
        const auto& mem = m.relation_members(r.name);
        for (std::size_t k = 0; k < mem.size(); ++k)
            if (mem[k]) out << "  " << tuple_text(m, r.args, k) << ";\n";
        out << "}\n";
    }
    return out.str();
}

std::string print_proof(const Derivation& d, const Theory* declarations) {
    std::ostringstream out;
    out << "version 1;\nfragment " << to_string(d.fragment) << ";\n";
    if (declarations) print_declarations(out, *declarations);
    for (const auto& line : d.lines)
        out << line.number << ": " << to_string(line.sequent) << " ; " << format_rule(line, &d) << ";\n";
    if (!d.conclusions.empty()) {
        std::vector<std::string> cs;
        for (int c : d.conclusions) cs.push_back(std::to_string(c));
        out << "conclude " << join(cs, ", ") << ";\n";
    }
    return out.str();
}

}  // namespace clogic
