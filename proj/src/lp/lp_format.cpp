#include "hetsim/lp/lp_format.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hetsim::lp {

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_terms(std::ostream& out, const std::vector<Term>& terms,
                 const std::vector<Variable>& vars) {
    bool first = true;
    for (const auto& t : terms) {
        if (t.coeff == 0.0) continue;
        if (first) {
            if (t.coeff < 0.0) out << "- ";
            first = false;
        } else {
            out << (t.coeff < 0.0 ? " - " : " + ");
        }
        out << num(std::abs(t.coeff)) << ' ' << vars[t.var].name;
    }
    if (first) out << "0";
}

}  // namespace

void write_lp(const MilpProgram& prog, std::ostream& out) {
    const auto& vars = prog.variables();

    out << "Maximize\n obj: ";
    std::vector<Term> obj_terms;
    for (int j = 0; j < prog.num_variables(); ++j) {
        if (prog.objective()[j] != 0.0) obj_terms.push_back({j, prog.objective()[j]});
    }
    write_terms(out, obj_terms, vars);
    out << "\nSubject To\n";
    for (const auto& c : prog.constraints()) {
        out << ' ' << c.name << ": ";
        write_terms(out, c.terms, vars);
        switch (c.rel) {
            case Relation::LessEq: out << " <= "; break;
            case Relation::Equal: out << " = "; break;
            case Relation::GreaterEq: out << " >= "; break;
        }
        out << num(c.rhs) << '\n';
    }
    out << "Bounds\n";
    for (const auto& v : vars) {
        const bool lo_inf = v.lower <= -kInfinity;
        const bool hi_inf = v.upper >= kInfinity;
        out << ' ';
        if (lo_inf && hi_inf) {
            out << v.name << " free";
        } else if (lo_inf) {
            out << v.name << " <= " << num(v.upper);
        } else if (hi_inf) {
            out << v.name << " >= " << num(v.lower);
        } else if (v.lower == v.upper) {
            out << v.name << " = " << num(v.lower);
        } else {
            out << num(v.lower) << " <= " << v.name << " <= " << num(v.upper);
        }
        out << '\n';
    }
    bool any_binary = false;
    for (const auto& v : vars) any_binary = any_binary || v.kind == VarKind::Binary;
    if (any_binary) {
        out << "Binaries\n";
        for (const auto& v : vars) {
            if (v.kind == VarKind::Binary) out << ' ' << v.name << '\n';
        }
    }
    out << "End\n";
}

std::string write_lp_string(const MilpProgram& prog) {
    std::ostringstream os;
    write_lp(prog, os);
    return os.str();
}

namespace {

struct Parser {
    std::vector<std::string> tokens;
    std::size_t pos = 0;

    bool done() const { return pos >= tokens.size(); }
    const std::string& peek() const {
        static const std::string empty;
        return done() ? empty : tokens[pos];
    }
    std::string take() {
        if (done()) throw std::invalid_argument("lp parse: unexpected end of input");
        return tokens[pos++];
    }
    bool accept(const std::string& t) {
        if (!done() && tokens[pos] == t) {
            ++pos;
            return true;
        }
        return false;
    }
};

bool is_number(const std::string& t) {
    char* end = nullptr;
    std::strtod(t.c_str(), &end);
    return end != t.c_str() && *end == '\0';
}

bool is_relation(const std::string& t) { return t == "<=" || t == ">=" || t == "="; }

// name registry preserving first-seen order
struct VarTable {
    std::map<std::string, int> index;
    std::vector<std::string> names;
    std::vector<double> lo, hi;
    std::vector<bool> binary;

    int get(const std::string& name) {
        auto it = index.find(name);
        if (it != index.end()) return it->second;
        const int id = static_cast<int>(names.size());
        index.emplace(name, id);
        names.push_back(name);
        lo.push_back(0.0);
        hi.push_back(kInfinity);
        binary.push_back(false);
        return id;
    }
};

std::vector<Term> parse_terms(Parser& p, VarTable& vars) {
    std::vector<Term> terms;
    double sign = 1.0;
    while (!p.done()) {
        const std::string& t = p.peek();
        if (is_relation(t) || t == "Subject" || t == "Bounds" || t == "Binaries" || t == "End" ||
            t.back() == ':') {
            break;
        }
        if (t == "+") {
            sign = 1.0;
            p.take();
            continue;
        }
        if (t == "-") {
            sign = -1.0;
            p.take();
            continue;
        }
        double coeff = sign;
        if (is_number(t)) {
            coeff = sign * std::strtod(p.take().c_str(), nullptr);
            if (p.done() || is_relation(p.peek())) {
                // bare constant: only the canonical empty "0" marker
                if (coeff != 0.0) throw std::invalid_argument("lp parse: stray constant in row");
                sign = 1.0;
                continue;
            }
        }
        const int var = vars.get(p.take());
        terms.push_back({var, coeff});
        sign = 1.0;
    }
    return terms;
}

}  // namespace

MilpProgram parse_lp(std::istream& in) {
    Parser p;
    std::string line;
    while (std::getline(in, line)) {
        const auto comment = line.find('\\');
        if (comment != std::string::npos) line.erase(comment);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) p.tokens.push_back(tok);
    }

    VarTable vars;

    // Pre-register variables from the Bounds section so the declaration
    // order survives a write -> parse round trip.
    {
        std::size_t i = 0;
        while (i < p.tokens.size() && p.tokens[i] != "Bounds") ++i;
        if (i < p.tokens.size()) {
            ++i;
            while (i < p.tokens.size() && p.tokens[i] != "Binaries" && p.tokens[i] != "End") {
                if (!is_number(p.tokens[i]) && p.tokens[i] != "<=" && p.tokens[i] != ">=" &&
                    p.tokens[i] != "=" && p.tokens[i] != "free") {
                    vars.get(p.tokens[i]);
                }
                ++i;
            }
        }
    }

    if (!p.accept("Maximize")) throw std::invalid_argument("lp parse: expected 'Maximize'");

    // objective
    std::vector<Term> obj;
    {
        const std::string label = p.take();  // "obj:"
        if (label.back() != ':') throw std::invalid_argument("lp parse: expected objective label");
        obj = parse_terms(p, vars);
    }

    if (!p.accept("Subject") || !p.accept("To")) {
        throw std::invalid_argument("lp parse: expected 'Subject To'");
    }

    struct RawCon {
        std::string name;
        std::vector<Term> terms;
        Relation rel;
        double rhs;
    };
    std::vector<RawCon> cons;
    while (!p.done() && p.peek() != "Bounds" && p.peek() != "Binaries" && p.peek() != "End") {
        std::string label = p.take();
        if (label.back() != ':') throw std::invalid_argument("lp parse: expected constraint label");
        label.pop_back();
        RawCon c;
        c.name = label;
        c.terms = parse_terms(p, vars);
        const std::string rel = p.take();
        if (!is_relation(rel)) throw std::invalid_argument("lp parse: expected relation");
        c.rel = rel == "<=" ? Relation::LessEq : (rel == ">=" ? Relation::GreaterEq : Relation::Equal);
        const std::string rhs = p.take();
        if (!is_number(rhs)) throw std::invalid_argument("lp parse: expected rhs number");
        c.rhs = std::strtod(rhs.c_str(), nullptr);
        cons.push_back(std::move(c));
    }

    if (p.accept("Bounds")) {
        while (!p.done() && p.peek() != "Binaries" && p.peek() != "End") {
            const std::string first = p.take();
            if (is_number(first)) {
                // lo <= name <= hi
                const double lo = std::strtod(first.c_str(), nullptr);
                if (p.take() != "<=") throw std::invalid_argument("lp parse: malformed bound");
                const int var = vars.get(p.take());
                if (p.take() != "<=") throw std::invalid_argument("lp parse: malformed bound");
                const double hi = std::strtod(p.take().c_str(), nullptr);
                vars.lo[var] = lo;
                vars.hi[var] = hi;
            } else {
                const int var = vars.get(first);
                if (p.accept("free")) {
                    vars.lo[var] = -kInfinity;
                    vars.hi[var] = kInfinity;
                } else {
                    const std::string rel = p.take();
                    const double v = std::strtod(p.take().c_str(), nullptr);
                    if (rel == ">=") {
                        vars.lo[var] = v;
                        vars.hi[var] = kInfinity;
                    } else if (rel == "<=") {
                        vars.lo[var] = -kInfinity;
                        vars.hi[var] = v;
                    } else if (rel == "=") {
                        vars.lo[var] = v;
                        vars.hi[var] = v;
                    } else {
                        throw std::invalid_argument("lp parse: malformed bound");
                    }
                }
            }
        }
    }
    if (p.accept("Binaries")) {
        while (!p.done() && p.peek() != "End") vars.binary[vars.get(p.take())] = true;
    }
    if (!p.accept("End")) throw std::invalid_argument("lp parse: expected 'End'");

    MilpProgram prog;
    for (std::size_t j = 0; j < vars.names.size(); ++j) {
        if (vars.binary[j]) {
            prog.add_binary(vars.names[j]);
        } else {
            prog.add_continuous(vars.names[j], vars.lo[j], vars.hi[j]);
        }
    }
    for (const auto& t : obj) prog.set_objective(t.var, t.coeff);
    for (auto& c : cons) prog.add_constraint(c.name, std::move(c.terms), c.rel, c.rhs);
    return prog;
}

MilpProgram parse_lp_string(const std::string& text) {
    std::istringstream is(text);
    return parse_lp(is);
}

MilpProgram parse_lp_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open LP file: " + path);
    return parse_lp(in);
}

}  // namespace hetsim::lp
