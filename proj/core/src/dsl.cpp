#include "biamalg/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

#include "biamalg/error.hpp"
#include "biamalg/json_io.hpp"

namespace biamalg::dsl {

using nlohmann::json;

std::string to_string(const Diagnostic& d) {
    std::string out = std::to_string(d.pos.line) + ":" + std::to_string(d.pos.col) + ": " + d.message;
    if (!d.witness.empty()) out += " [witness: " + d.witness + "]";
    return out;
}

namespace {

// ---------------------------------------------------------------- lexing

enum class Tok { ident, integer, punct, newline, end };

struct Token {
    Tok kind = Tok::end;
    std::string text;
    std::int64_t value = 0;
    Pos pos;
};

std::string describe(const Token& t) {
    switch (t.kind) {
        case Tok::newline: return "end of line";
        case Tok::end: return "end of input";
        default: return "'" + t.text + "'";
    }
}

struct LexError {
    Pos pos;
    std::string message;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

/// Tokens of one physical line (without the trailing newline token).
std::vector<Token> lex_line(const std::string& line, int lineno, std::optional<LexError>& err) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto at = [&](std::size_t k) { return k < line.size() ? line[k] : '\0'; };
    while (i < line.size()) {
        char c = line[i];
        Pos pos{lineno, static_cast<int>(i) + 1};
        if (c == '#') break;
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
            continue;
        }
        if (ident_start(c)) {
            std::size_t k = i;
            while (k < line.size() && (ident_char(line[k]) || (line[k] == '-' && ident_start(at(k + 1))))) ++k;
            out.push_back({Tok::ident, line.substr(i, k - i), 0, pos});
            i = k;
            continue;
        }
        if (digit(c) || (c == '-' && digit(at(i + 1)))) {
            std::size_t k = i + 1;
            while (k < line.size() && digit(line[k])) ++k;
            std::int64_t v = 0;
            auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + k, v);
            if (ec != std::errc{} || ptr != line.data() + k) {
                err = LexError{pos, "integer literal out of range: " + line.substr(i, k - i)};
                return out;
            }
            out.push_back({Tok::integer, line.substr(i, k - i), v, pos});
            i = k;
            continue;
        }
        if (c == '-' && at(i + 1) == '>') {
            out.push_back({Tok::punct, "->", 0, pos});
            i += 2;
            continue;
        }
        if (std::string_view("=()[]<>,:+*&").find(c) != std::string_view::npos) {
            out.push_back({Tok::punct, std::string(1, c), 0, pos});
            ++i;
            continue;
        }
        err = LexError{pos, std::string("unexpected character '") + c + "'"};
        return out;
    }
    out.push_back({Tok::newline, "", 0, Pos{lineno, static_cast<int>(line.size()) + 1}});
    return out;
}

// ---------------------------------------------------------------- parsing

const std::set<std::string>& reserved() {
    static const std::set<std::string> words{
        "ring", "ideal", "hom",  "bowtie", "amalg", "dup",   "cpi",   "check", "export", "in",  "as",
        "Z",    "prod",  "poly", "quot",   "sub",   "loc",   "idz",   "gen",   "zero",   "unit", "rad",
        "ker",  "pre",   "can",  "id",     "proj1", "proj2",
    };
    return words;
}

struct SyntaxError {
    Pos pos;
    std::string message;
};

class LineParser {
public:
    explicit LineParser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    Stmt statement() {
        const Token& kw = peek();
        if (kw.kind != Tok::ident) fail("expected a statement keyword (ring, ideal, hom, bowtie, amalg, dup, cpi, check, export)");
        Stmt s;
        s.pos = kw.pos;
        std::string word = next().text;
        if (word == "ring") {
            s.kind = StmtKind::ring;
            s.name = binder();
            expect("=");
            ring_expr(s);
        } else if (word == "ideal") {
            s.kind = StmtKind::ideal;
            s.name = binder();
            expect_word("in");
            s.ring = reference().name;
            s.args.push_back(Ref{s.ring, false, last_pos_});
            expect("=");
            ideal_expr(s);
        } else if (word == "hom") {
            s.kind = StmtKind::hom;
            s.name = binder();
            expect(":");
            Ref src = reference();
            expect("->");
            Ref tgt = reference();
            s.ring = src.name;
            s.target = tgt.name;
            s.args = {src, tgt};
            expect("=");
            hom_expr(s);
        } else if (word == "bowtie" || word == "amalg" || word == "dup" || word == "cpi") {
            s.kind = word == "bowtie" ? StmtKind::bowtie
                     : word == "amalg" ? StmtKind::amalg
                     : word == "dup"   ? StmtKind::dup
                                       : StmtKind::cpi;
            s.name = binder();
            expect("=");
            expect_word(word);
            s.op = word;
            expect("(");
            std::size_t arity = word == "bowtie" ? 4 : 2;
            std::size_t maps = word == "bowtie" ? 2 : word == "amalg" ? 1 : 0;
            for (std::size_t k = 0; k < arity; ++k) {
                if (k > 0) expect(",");
                s.args.push_back(k < maps ? map_ref() : reference());
            }
            expect(")");
        } else if (word == "check") {
            s.kind = StmtKind::check;
            const Token& t = peek();
            if (t.kind != Tok::ident ||
                std::find(check_names().begin(), check_names().end(), t.text) == check_names().end())
                fail("expected a check name (pullback, conductor, quotients, transfer, spec, localize, recognize, "
                     "idealize-coincide), found " + describe(t));
            s.op = next().text;
            while (peek().kind == Tok::ident && peek().text != "as") s.args.push_back(reference());
            auto [lo, hi] = check_arity(s.op);
            if (s.args.size() < lo || s.args.size() > hi)
                throw SyntaxError{s.pos, "check " + s.op + " takes " +
                                             (lo == hi ? std::to_string(lo) : std::to_string(lo) + " or " + std::to_string(hi)) +
                                             " argument(s), found " + std::to_string(s.args.size())};
            if (peek().kind == Tok::ident && peek().text == "as") {
                next();
                s.alias = true;
                s.name = binder();
            } else {
                s.name = default_check_name(s);
            }
        } else if (word == "export") {
            s.kind = StmtKind::export_;
            s.args.push_back(reference());
        } else {
            throw SyntaxError{kw.pos, "unknown statement keyword '" + word +
                                          "'; expected ring, ideal, hom, bowtie, amalg, dup, cpi, check or export"};
        }
        if (peek().kind != Tok::newline) fail("expected end of line");
        return s;
    }

    static std::pair<std::size_t, std::size_t> check_arity(const std::string& op) {
        if (op == "recognize") return {4, 4};
        if (op == "quotients") return {1, 2};
        if (op == "idealize-coincide") return {2, 2};
        return {1, 1};
    }

    Pos binder_pos() const { return binder_pos_; }

private:
    const Token& peek() const { return toks_[std::min(i_, toks_.size() - 1)]; }
    const Token& next() {
        const Token& t = peek();
        last_pos_ = t.pos;
        if (i_ < toks_.size() - 1) ++i_;
        return t;
    }
    [[noreturn]] void fail(const std::string& what) const {
        const Token& t = peek();
        std::string msg = what;
        if (what.find("found") == std::string::npos) msg += ", found " + describe(t);
        throw SyntaxError{t.pos, msg};
    }
    void expect(const std::string& punct) {
        if (peek().kind != Tok::punct || peek().text != punct) fail("expected '" + punct + "'");
        next();
    }
    void expect_word(const std::string& w) {
        if (peek().kind != Tok::ident || peek().text != w) fail("expected '" + w + "'");
        next();
    }
    std::string binder() {
        const Token& t = peek();
        if (t.kind != Tok::ident) fail("expected a binding name");
        if (reserved().count(t.text)) throw SyntaxError{t.pos, "'" + t.text + "' is reserved and cannot be bound"};
        binder_pos_ = t.pos;
        return next().text;
    }
    Ref reference() {
        const Token& t = peek();
        if (t.kind != Tok::ident || reserved().count(t.text)) fail("expected a name");
        Ref r{t.text, false, t.pos};
        next();
        return r;
    }
    Ref map_ref() {
        if (peek().kind == Tok::ident && peek().text == "id") {
            Pos p = next().pos;
            expect("(");
            Ref r = reference();
            expect(")");
            r.identity = true;
            r.pos = p;
            return r;
        }
        return reference();
    }
    ElemLit element() {
        const Token& t = peek();
        if (t.kind == Tok::integer) return ElemLit{false, {next().value}};
        if (t.kind == Tok::punct && t.text == "<") {
            next();
            ElemLit e{true, {}};
            if (peek().kind != Tok::integer) fail("expected an integer coordinate");
            e.values.push_back(next().value);
            while (peek().kind == Tok::punct && peek().text == ",") {
                next();
                if (peek().kind != Tok::integer) fail("expected an integer coordinate");
                e.values.push_back(next().value);
            }
            expect(">");
            return e;
        }
        fail("expected an element (integer or <coordinates>)");
    }
    std::vector<ElemLit> element_list(const std::string& close) {
        std::vector<ElemLit> out;
        if (peek().kind == Tok::punct && peek().text == close) return out;
        out.push_back(element());
        while (peek().kind == Tok::punct && peek().text == ",") {
            next();
            out.push_back(element());
        }
        return out;
    }
    void ring_expr(Stmt& s) {
        const Token& t = peek();
        static const std::set<std::string> ops{"Z", "prod", "poly", "quot", "sub", "loc", "idz"};
        if (t.kind != Tok::ident || !ops.count(t.text))
            fail("expected a ring expression (Z, prod, poly, quot, sub, loc, idz)");
        s.op = next().text;
        expect("(");
        if (s.op == "Z") {
            if (peek().kind != Tok::integer) fail("expected an integer modulus");
            s.n = next().value;
        } else if (s.op == "prod" || s.op == "quot" || s.op == "idz") {
            s.args.push_back(reference());
            expect(",");
            s.args.push_back(reference());
        } else {
            s.args.push_back(reference());
            expect(",");
            expect("[");
            s.elems = element_list("]");
            expect("]");
        }
        expect(")");
    }
    void ideal_expr(Stmt& s) {
        const Token& t = peek();
        if (t.kind != Tok::ident) fail("expected an ideal expression");
        if (t.text == "zero" || t.text == "unit") {
            s.op = next().text;
            return;
        }
        if (t.text == "gen") {
            s.op = next().text;
            expect("(");
            s.elems = element_list(")");
            expect(")");
            return;
        }
        if (t.text == "rad" || t.text == "ker") {
            s.op = next().text;
            expect("(");
            s.args.push_back(reference());
            expect(")");
            return;
        }
        if (t.text == "pre") {
            s.op = next().text;
            expect("(");
            s.args.push_back(reference());
            expect(",");
            s.args.push_back(reference());
            expect(")");
            return;
        }
        s.args.push_back(reference());
        const Token& o = peek();
        if (o.kind == Tok::punct && (o.text == "+" || o.text == "*" || o.text == "&")) {
            s.op = o.text == "+" ? "sum" : o.text == "*" ? "product" : "meet";
            next();
            s.args.push_back(reference());
            return;
        }
        fail("expected '+', '*' or '&'");
    }
    void hom_expr(Stmt& s) {
        const Token& t = peek();
        if (t.kind == Tok::punct && t.text == "[") {
            next();
            s.op = "images";
            s.elems = element_list("]");
            expect("]");
            return;
        }
        if (t.kind == Tok::ident && (t.text == "can" || t.text == "id" || t.text == "proj1" || t.text == "proj2")) {
            s.op = next().text;
            return;
        }
        fail("expected '[' generator images or one of can, id, proj1, proj2");
    }

    std::vector<Token> toks_;
    std::size_t i_ = 0;
    Pos last_pos_;
    Pos binder_pos_;
};

std::string print_elem(const ElemLit& e) {
    if (!e.coords) return std::to_string(e.values.front());
    std::string out = "<";
    for (std::size_t k = 0; k < e.values.size(); ++k) out += (k ? ", " : "") + std::to_string(e.values[k]);
    return out + ">";
}

std::string print_elems(const std::vector<ElemLit>& es) {
    std::string out;
    for (std::size_t k = 0; k < es.size(); ++k) out += (k ? ", " : "") + print_elem(es[k]);
    return out;
}

std::string print_ref(const Ref& r) { return r.identity ? "id(" + r.name + ")" : r.name; }

}  // namespace

std::string default_check_name(const Stmt& s) {
    std::string out = s.op;
    std::replace(out.begin(), out.end(), '-', '_');
    for (const auto& a : s.args) out += "_" + a.name;
    return out;
}

ParseResult parse(const std::string& text) {
    ParseResult result;
    std::map<std::string, Pos> bound;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::optional<LexError> lex_err;
        auto toks = lex_line(line, lineno, lex_err);
        if (lex_err) {
            result.diagnostics.push_back({lex_err->pos, lex_err->message, {}});
            continue;
        }
        if (toks.size() == 1) continue;
        LineParser p(toks);
        try {
            Stmt s = p.statement();
            bool ok = true;
            for (const auto& r : s.args) {
                if (!bound.count(r.name)) {
                    result.diagnostics.push_back({r.pos, "unresolved name '" + r.name + "'", {}});
                    ok = false;
                }
            }
            if (s.kind != StmtKind::export_) {
                Pos at = s.kind == StmtKind::check && !s.alias ? s.pos : p.binder_pos();
                if (auto it = bound.find(s.name); it != bound.end()) {
                    result.diagnostics.push_back({at,
                                                  "duplicate binding '" + s.name + "' (first bound at " +
                                                      std::to_string(it->second.line) + ":" +
                                                      std::to_string(it->second.col) + ")",
                                                  {}});
                    ok = false;
                } else {
                    bound.emplace(s.name, at);
                }
            }
            if (ok) result.ast.stmts.push_back(std::move(s));
        } catch (const SyntaxError& e) {
            result.diagnostics.push_back({e.pos, e.message, {}});
        }
    }
    return result;
}

std::string print(const Ast& ast) {
    std::string out;
    for (const auto& s : ast.stmts) {
        switch (s.kind) {
            case StmtKind::ring:
                out += "ring " + s.name + " = " + s.op + "(";
                if (s.op == "Z")
                    out += std::to_string(s.n);
                else if (s.op == "prod" || s.op == "quot" || s.op == "idz")
                    out += s.args[0].name + ", " + s.args[1].name;
                else
                    out += s.args[0].name + ", [" + print_elems(s.elems) + "]";
                out += ")";
                break;
            case StmtKind::ideal:
                out += "ideal " + s.name + " in " + s.ring + " = ";
                if (s.op == "zero" || s.op == "unit")
                    out += s.op;
                else if (s.op == "gen")
                    out += "gen(" + print_elems(s.elems) + ")";
                else if (s.op == "rad" || s.op == "ker")
                    out += s.op + "(" + s.args[1].name + ")";
                else if (s.op == "pre")
                    out += "pre(" + s.args[1].name + ", " + s.args[2].name + ")";
                else
                    out += s.args[1].name + (s.op == "sum" ? " + " : s.op == "product" ? " * " : " & ") +
                           s.args[2].name;
                break;
            case StmtKind::hom:
                out += "hom " + s.name + " : " + s.ring + " -> " + s.target + " = ";
                out += s.op == "images" ? "[" + print_elems(s.elems) + "]" : s.op;
                break;
            case StmtKind::bowtie:
            case StmtKind::amalg:
            case StmtKind::dup:
            case StmtKind::cpi: {
                out += s.op + " " + s.name + " = " + s.op + "(";
                for (std::size_t k = 0; k < s.args.size(); ++k) out += (k ? ", " : "") + print_ref(s.args[k]);
                out += ")";
                break;
            }
            case StmtKind::check:
                out += "check " + s.op;
                for (const auto& a : s.args) out += " " + a.name;
                if (s.alias) out += " as " + s.name;
                break;
            case StmtKind::export_:
                out += "export " + s.args[0].name;
                break;
        }
        out += "\n";
    }
    return out;
}

// ---------------------------------------------------------------- evaluation

std::string kind_name(const Value& v) {
    static const char* names[] = {"ring",   "ideal",    "hom",           "bi-amalgamation",
                                  "report", "spectrum", "cpi-extension", "recognition"};
    return names[v.index()];
}

const Binding* Session::find(const std::string& name) const {
    for (const auto& b : bindings)
        if (b.name == name) return &b;
    return nullptr;
}

std::vector<std::string> Session::checks() const {
    std::vector<std::string> out;
    for (const auto& b : bindings)
        if (std::holds_alternative<Report>(b.value) || std::holds_alternative<SpecBowtie>(b.value) ||
            std::holds_alternative<Recognized>(b.value))
            out.push_back(b.name);
    return out;
}

namespace {

struct EvalError {
    EvalError(Pos p, std::string m) : pos(p), message(std::move(m)) {}
    Pos pos;
    std::string message;
    std::string witness;
    bool budget = false;
};

std::vector<const Report*> reports_in(const Value& v) {
    if (auto p = std::get_if<BiAmalgamation>(&v)) return {&p->construction};
    if (auto p = std::get_if<Report>(&v)) return {p};
    if (auto p = std::get_if<SpecBowtie>(&v)) return {&p->report};
    if (auto p = std::get_if<Cpi>(&v)) return {&p->result.report, &p->result.w.construction};
    if (auto p = std::get_if<Recognized>(&v)) return {&p->result.report};
    return {};
}

class Evaluator {
public:
    explicit Evaluator(Session& s) : s_(s) {}

    void run(const Ast& ast) {
        for (const auto& st : ast.stmts) {
            try {
                exec(st);
            } catch (const EvalError& e) {
                s_.diagnostics.push_back({e.pos, e.message, e.witness});
                s_.status = e.budget ? Status::budget : Status::error;
                return;
            } catch (const Error& e) {
                s_.diagnostics.push_back({st.pos, std::string(to_string(e.code())) + ": " + e.what(), e.witness()});
                s_.status = e.code() == Errc::budget_exceeded || e.code() == Errc::size_cap ? Status::budget : Status::error;
                return;
            } catch (const std::exception& e) {
                s_.diagnostics.push_back({st.pos, e.what(), {}});
                s_.status = Status::error;
                return;
            }
        }
        bool failed = false, unknown = false;
        for (const auto& b : s_.bindings) {
            for (const Report* r : reports_in(b.value)) {
                failed = failed || r->any_failed();
                unknown = unknown || r->any_unknown();
            }
        }
        s_.status = failed ? Status::check_failed : unknown ? Status::budget : Status::pass;
    }

private:
    const Value& lookup(const Ref& r) {
        const Binding* b = s_.find(r.name);
        if (!b) throw EvalError{r.pos, "no such binding: " + r.name};
        return b->value;
    }

    [[noreturn]] static void wrong_kind(const Ref& r, const Value& v, const std::string& want) {
        throw EvalError{r.pos, "'" + r.name + "' is a " + kind_name(v) + ", expected " + want};
    }

    FiniteRing ring(const Ref& r) {
        const Value& v = lookup(r);
        if (auto p = std::get_if<FiniteRing>(&v)) return *p;
        if (auto p = std::get_if<BiAmalgamation>(&v)) return p->w;
        if (auto p = std::get_if<Cpi>(&v)) return p->result.ring;
        wrong_kind(r, v, "ring");
    }
    Ideal ideal(const Ref& r) {
        const Value& v = lookup(r);
        if (auto p = std::get_if<Ideal>(&v)) return *p;
        wrong_kind(r, v, "ideal");
    }
    RingHom hom(const Ref& r) {
        if (r.identity) return identity_hom(ring(r));
        const Value& v = lookup(r);
        if (auto p = std::get_if<RingHom>(&v)) return *p;
        wrong_kind(r, v, "hom");
    }
    BiAmalgamation bowtie(const Ref& r) {
        const Value& v = lookup(r);
        if (auto p = std::get_if<BiAmalgamation>(&v)) return *p;
        if (auto p = std::get_if<Cpi>(&v)) return p->result.w;
        wrong_kind(r, v, "bi-amalgamation");
    }
    Ideal ideal_in(const Ref& r, const FiniteRing& ring, const std::string& ring_name) {
        Ideal i = ideal(r);
        if (!(i.ring() == ring)) throw EvalError{r.pos, "ideal '" + r.name + "' does not live in " + ring_name};
        return i;
    }

    static Element element(const FiniteRing& r, const ElemLit& e) {
        if (!e.coords) return r.scale(r.one(), e.values.front());
        if (e.values.size() != r.rank())
            throw Error(Errc::invalid_argument, "element has " + std::to_string(e.values.size()) +
                                                    " coordinates, ring has rank " + std::to_string(r.rank()));
        return r.element(e.values);
    }
    static std::vector<Element> elements(const FiniteRing& r, const std::vector<ElemLit>& es) {
        std::vector<Element> out;
        for (const auto& e : es) out.push_back(element(r, e));
        return out;
    }

    void bind(const Stmt& st, Value v) {
        if (auto p = std::get_if<FiniteRing>(&v)) name_ring(*p, st.name);
        if (auto p = std::get_if<BiAmalgamation>(&v)) name_ring(p->w, st.name);
        if (auto p = std::get_if<Cpi>(&v)) name_ring(p->result.ring, st.name);
        s_.bindings.push_back({st.name, std::move(v), st.pos});
    }
    void name_ring(const FiniteRing& r, const std::string& name) { s_.ring_names.emplace(r.id(), name); }

    void exec(const Stmt& st) {
        switch (st.kind) {
            case StmtKind::ring: return exec_ring(st);
            case StmtKind::ideal: return exec_ideal(st);
            case StmtKind::hom: return exec_hom(st);
            case StmtKind::bowtie: {
                auto w = bi_amalgamate(hom(st.args[0]), hom(st.args[1]), ideal(st.args[2]), ideal(st.args[3]));
                return bind_bowtie(st, std::move(w));
            }
            case StmtKind::amalg: return bind_bowtie(st, amalgamation(hom(st.args[0]), ideal(st.args[1])));
            case StmtKind::dup: {
                FiniteRing a = ring(st.args[0]);
                return bind_bowtie(st, duplication(a, ideal_in(st.args[1], a, st.args[0].name)));
            }
            case StmtKind::cpi: {
                FiniteRing a = ring(st.args[0]);
                Cpi c{cpi_extension(a, ideal_in(st.args[1], a, st.args[0].name))};
                canon_.push_back({c.result.w.to_b});
                canon_.push_back({c.result.w.to_c});
                bind(st, std::move(c));
                return;
            }
            case StmtKind::check: return exec_check(st);
            case StmtKind::export_:
                lookup(st.args[0]);
                s_.exports.push_back(st.args[0].name);
                return;
        }
    }

    void bind_bowtie(const Stmt& st, BiAmalgamation w) {
        canon_.push_back({w.to_b});
        canon_.push_back({w.to_c});
        bind(st, std::move(w));
    }

    void exec_ring(const Stmt& st) {
        if (st.op == "Z") return bind(st, make_zmod(st.n));
        if (st.op == "prod") {
            Product p = make_product(ring(st.args[0]), ring(st.args[1]));
            canon_.push_back({p.proj_left});
            canon_.push_back({p.proj_right});
            projections_.emplace(p.ring.id(), std::pair{p.proj_left, p.proj_right});
            return bind(st, p.ring);
        }
        if (st.op == "poly") {
            FiniteRing r = ring(st.args[0]);
            auto coeffs = elements(r, st.elems);
            return bind(st, make_poly_quotient(r, coeffs));
        }
        if (st.op == "quot") {
            FiniteRing r = ring(st.args[0]);
            Quotient q = quotient_ring(r, ideal_in(st.args[1], r, st.args[0].name));
            canon_.push_back({q.map});
            return bind(st, q.ring);
        }
        if (st.op == "sub") {
            FiniteRing r = ring(st.args[0]);
            auto gens = elements(r, st.elems);
            Subring s = subring_generated(r, std::span<const Element>(gens));
            canon_.push_back({s.embedding});
            return bind(st, s.ring);
        }
        if (st.op == "loc") {
            FiniteRing r = ring(st.args[0]);
            auto gens = elements(r, st.elems);
            Localization l = localize(r, std::span<const Element>(gens));
            canon_.push_back({l.map});
            return bind(st, l.ring);
        }
        FiniteRing a = ring(st.args[0]);
        return bind(st, idealization(a, ideal_in(st.args[1], a, st.args[0].name)));
    }

    void exec_ideal(const Stmt& st) {
        FiniteRing r = ring(st.args[0]);
        auto in_r = [&](const Ideal& i, const Ref& at) {
            if (!(i.ring() == r)) throw EvalError{at.pos, "result does not live in " + st.ring};
            return i;
        };
        if (st.op == "zero") return bind(st, zero_ideal(r));
        if (st.op == "unit") return bind(st, unit_ideal(r));
        if (st.op == "gen") {
            auto gens = elements(r, st.elems);
            return bind(st, ideal_generated(r, std::span<const Element>(gens)));
        }
        if (st.op == "rad") return bind(st, radical(ideal_in(st.args[1], r, st.ring)));
        if (st.op == "ker") return bind(st, in_r(kernel(hom(st.args[1])), st.args[1]));
        if (st.op == "pre") {
            RingHom f = hom(st.args[1]);
            return bind(st, in_r(preimage(f, ideal(st.args[2])), st.args[1]));
        }
        Ideal a = ideal_in(st.args[1], r, st.ring), b = ideal_in(st.args[2], r, st.ring);
        if (st.op == "sum") return bind(st, ideal_sum(a, b));
        if (st.op == "product") return bind(st, ideal_product(a, b));
        return bind(st, ideal_intersection(a, b));
    }

    void exec_hom(const Stmt& st) {
        FiniteRing src = ring(st.args[0]), tgt = ring(st.args[1]);
        if (st.op == "images") return bind(st, make_hom(src, tgt, elements(tgt, st.elems)));
        if (st.op == "id") {
            if (!(src == tgt)) throw EvalError{st.pos, "id needs source = target"};
            return bind(st, identity_hom(src));
        }
        if (st.op == "proj1" || st.op == "proj2") {
            auto it = projections_.find(src.id());
            if (it == projections_.end())
                throw EvalError{st.args[0].pos, "'" + st.ring + "' was not built with prod"};
            const RingHom& p = st.op == "proj1" ? it->second.first : it->second.second;
            if (!(p.target() == tgt))
                throw EvalError{st.args[1].pos, st.op + " of '" + st.ring + "' does not land in '" + st.target + "'"};
            return bind(st, p);
        }
        if (src == tgt) return bind(st, identity_hom(src));
        for (const auto& c : canon_)
            if (c.source() == src && c.target() == tgt) return bind(st, c);
        if (src.rank() == 1 && src.generator(0) == src.one()) return bind(st, make_hom(src, tgt, {tgt.one()}));
        throw EvalError{st.pos, "no canonical map " + st.ring + " -> " + st.target};
    }

    void exec_check(const Stmt& st) {
        const std::string& op = st.op;
        if (op == "recognize") {
            Recognized r{recognize_pullback(hom(st.args[0]), hom(st.args[1]), hom(st.args[2]), hom(st.args[3]))};
            bind(st, std::move(r));
            return;
        }
        if (op == "idealize-coincide") {
            FiniteRing a = ring(st.args[0]);
            bind(st, idealization_coincidence(a, ideal_in(st.args[1], a, st.args[0].name)));
            return;
        }
        BiAmalgamation w = bowtie(st.args[0]);
        if (op == "spec") {
            bind(st, spec_bowtie(w));
            return;
        }
        Report rep;
        if (op == "pullback") rep = as_pullback(w);
        else if (op == "conductor") rep = conductor_square(w);
        else if (op == "transfer") rep = verify_transfer(w);
        else if (op == "localize") rep = verify_spec_localization(w);
        else {
            Ideal i = st.args.size() > 1 ? ideal_in(st.args[1], w.a, "the base ring of " + st.args[0].name)
                                         : zero_ideal(w.a);
            rep = quotient_isos_check(w, i);
        }
        bind(st, std::move(rep));
    }

    Session& s_;
    std::vector<RingHom> canon_;
    std::map<RingId, std::pair<RingHom, RingHom>> projections_;
};

}  // namespace

Session eval(const Ast& ast) {
    Session s;
    s.bindings.reserve(ast.stmts.size());
    Evaluator(s).run(ast);
    return s;
}

Session run(const std::string& text) {
    ParseResult p = parse(text);
    if (!p.ok()) {
        Session s;
        s.diagnostics = std::move(p.diagnostics);
        s.status = Status::error;
        return s;
    }
    return eval(p.ast);
}

namespace {

std::string ring_ref(const Session& s, const FiniteRing& r) {
    auto it = s.ring_names.find(r.id());
    return it == s.ring_names.end() ? "anonymous" : it->second;
}

json value_json(const Session& s, const Value& v) {
    return std::visit(
        [&](const auto& x) -> json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, FiniteRing>) {
                json j = ring_to_json(x);
                j["order"] = x.size();
                return j;
            } else if constexpr (std::is_same_v<T, Ideal>) {
                return ideal_to_json(x, ring_ref(s, x.ring()));
            } else if constexpr (std::is_same_v<T, RingHom>) {
                return hom_to_json(x, ring_ref(s, x.source()), ring_ref(s, x.target()));
            } else if constexpr (std::is_same_v<T, BiAmalgamation>) {
                ComponentIds ids;
                ids.a = ring_ref(s, x.a);
                ids.b = ring_ref(s, x.b);
                ids.c = ring_ref(s, x.c);
                return biamalg_to_json(x, ids);
            } else if constexpr (std::is_same_v<T, Report>) {
                return report_to_json(x);
            } else if constexpr (std::is_same_v<T, SpecBowtie>) {
                return spectrum_to_json(x);
            } else if constexpr (std::is_same_v<T, Cpi>) {
                json sset = json::array();
                for (Index i : x.result.s) sset.push_back(x.result.w.a.coords(i));
                return json{{"ring", ring_to_json(x.result.ring)},
                            {"order", x.result.ring.size()},
                            {"S", sset},
                            {"bowtie", biamalg_to_json(x.result.w)},
                            {"report", report_to_json(x.result.report)}};
            } else {
                json j{{"recognized", x.result.recognized()}, {"report", report_to_json(x.result.report)}};
                if (x.result.j) j["J"] = ideal_to_json(*x.result.j, ring_ref(s, x.result.j->ring()));
                if (x.result.jp) j["Jp"] = ideal_to_json(*x.result.jp, ring_ref(s, x.result.jp->ring()));
                if (x.result.w) j["order"] = x.result.w->w.size();
                return j;
            }
        },
        v);
}

std::string status_name(Status st) {
    switch (st) {
        case Status::pass: return "pass";
        case Status::check_failed: return "check-failed";
        case Status::error: return "error";
        case Status::budget: return "budget-exceeded";
    }
    return "error";
}

const Report& report_of(const Value& v) {
    if (auto p = std::get_if<SpecBowtie>(&v)) return p->report;
    if (auto p = std::get_if<Recognized>(&v)) return p->result.report;
    return std::get<Report>(v);
}

}  // namespace

nlohmann::json export_binding(const Session& s, const std::string& name) {
    const Binding* b = s.find(name);
    if (!b) throw Error(Errc::invalid_argument, "no such binding: " + name);
    return json{{"schema", json_schema}, {"name", name}, {"kind", kind_name(b->value)}, {"value", value_json(s, b->value)}};
}

nlohmann::json export_session(const Session& s) {
    json exports = json::array(), checks = json::array(), diags = json::array();
    for (const auto& n : s.exports) {
        json e = export_binding(s, n);
        e.erase("schema");
        exports.push_back(std::move(e));
    }
    for (const auto& n : s.checks()) {
        const Report& r = report_of(s.find(n)->value);
        json failing = json::array();
        for (const auto& c : r.checks)
            if (!c.passed()) failing.push_back(json{{"check", c.name}, {"status", to_string(c.status)}, {"witness", c.witness}});
        checks.push_back(json{{"name", n}, {"pass", r.all_passed()}, {"count", r.checks.size()}, {"not_passed", failing}});
    }
    for (const auto& d : s.diagnostics)
        diags.push_back(json{{"line", d.pos.line}, {"col", d.pos.col}, {"message", d.message}, {"witness", d.witness}});
    return json{{"schema", json_schema}, {"status", status_name(s.status)}, {"exports", exports}, {"checks", checks},
                {"diagnostics", diags}};
}

int exit_code(const Session& s) {
    switch (s.status) {
        case Status::pass: return 0;
        case Status::check_failed: return 1;
        case Status::error: return 2;
        case Status::budget: return 3;
    }
    return 2;
}

}  // namespace biamalg::dsl
