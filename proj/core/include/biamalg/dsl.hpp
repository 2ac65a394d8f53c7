#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "biamalg/biamalg.hpp"
#include "biamalg/spectrum.hpp"

namespace biamalg::dsl {

/// 1-based source position.
struct Pos {
    int line = 1;
    int col = 1;
};

struct Diagnostic {
    Pos pos;
    std::string message;
    /// Library witness payload, for evaluation errors.
    std::string witness;
};

std::string to_string(const Diagnostic& d);

/// `7` is 7·1; `<1,0,2>` lists coordinates.
struct ElemLit {
    bool coords = false;
    std::vector<std::int64_t> values;

    friend bool operator==(const ElemLit&, const ElemLit&) = default;
};

/// A reference to an earlier binding, optionally wrapped as id(NAME).
struct Ref {
    std::string name;
    bool identity = false;
    Pos pos;

    friend bool operator==(const Ref& a, const Ref& b) { return a.name == b.name && a.identity == b.identity; }
};

enum class StmtKind { ring, ideal, hom, bowtie, amalg, dup, cpi, check, export_ };

/// One statement. Field use by kind:
///   ring   NAME = op(args..., elems | n)        op in Z prod poly quot sub loc idz
///   ideal  NAME in ring = op(args..., elems)    op in gen sum product meet rad ker pre zero unit
///   hom    NAME : ring -> target = op           op in images can id proj1 proj2
///   bowtie/amalg/dup/cpi NAME = op(args...)
///   check  op args... [as NAME]
///   export args[0]
struct Stmt {
    StmtKind kind = StmtKind::ring;
    Pos pos;
    std::string name;
    std::string op;
    std::string ring;
    std::string target;
    std::vector<Ref> args;
    std::vector<ElemLit> elems;
    std::int64_t n = 0;
    /// check statements: whether `as NAME` was written.
    bool alias = false;

    /// Equality of everything except positions.
    friend bool operator==(const Stmt& a, const Stmt& b) {
        return a.kind == b.kind && a.name == b.name && a.op == b.op && a.ring == b.ring && a.target == b.target &&
               a.args == b.args && a.elems == b.elems && a.n == b.n && a.alias == b.alias;
    }
};

struct Ast {
    std::vector<Stmt> stmts;
    friend bool operator==(const Ast&, const Ast&) = default;
};

struct ParseResult {
    Ast ast;
    std::vector<Diagnostic> diagnostics;
    bool ok() const { return diagnostics.empty(); }
};

inline const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names{"pullback", "conductor", "quotients", "transfer",
                                                "spec",     "localize",  "recognize", "idealize-coincide"};
    return names;
}

/// Binding name a check statement introduces when no `as NAME` is given.
std::string default_check_name(const Stmt& s);

/// Syntax, duplicate bindings and unresolved references are all reported
/// here, each with a position.
ParseResult parse(const std::string& text);

/// Canonical source text; parse(print(a)).ast == a.
std::string print(const Ast& ast);

struct Recognized {
    Recognition result;
};

struct Cpi {
    CpiExtension result;
};

using Value = std::variant<FiniteRing, Ideal, RingHom, BiAmalgamation, Report, SpecBowtie, Cpi, Recognized>;

std::string kind_name(const Value& v);

struct Binding {
    std::string name;
    Value value;
    Pos pos;
};

enum class Status {
    pass,
    /// Some check failed.
    check_failed,
    /// Parse or evaluation error.
    error,
    /// A search budget or the ring size cap was exhausted.
    budget,
};

struct Session {
    std::vector<Binding> bindings;
    std::vector<std::string> exports;
    std::vector<Diagnostic> diagnostics;
    Status status = Status::pass;
    /// Binding name of each named ring, for JSON references.
    std::map<RingId, std::string> ring_names;

    const Binding* find(const std::string& name) const;
    /// Names of the check reports, in order.
    std::vector<std::string> checks() const;
};

/// Evaluates bindings in order, stopping at the first library error.
Session eval(const Ast& ast);

/// Parse then evaluate; parse errors leave the session empty.
Session run(const std::string& text);

/// {"schema":"biamalg/1","name":..,"kind":..,"value":..}. Throws
/// Errc::invalid_argument with message "no such binding: NAME".
nlohmann::json export_binding(const Session& s, const std::string& name);

/// {"schema":"biamalg/1","exports":[..],"checks":[{"name":..,"pass":..}]}
nlohmann::json export_session(const Session& s);

/// Process exit code for a session: 0 pass, 1 check failure, 2 error, 3 budget.
int exit_code(const Session& s);

}  // namespace biamalg::dsl
