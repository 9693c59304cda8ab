#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "spa/term.hpp"

namespace spa {

struct Variable {
  std::string name;  // "v0", "v1", … in left-to-right path order
  friend bool operator==(const Variable&, const Variable&) = default;
  friend auto operator<=>(const Variable&, const Variable&) = default;
};

/// Resolved property-path expression; leaves carry expanded IRI terms.
struct PathExpr {
  enum class Op { Link, Inverse, Sequence, Alternative, ZeroOrMore, OneOrMore, ZeroOrOne };

  Op op = Op::Link;
  Term link;  // Op::Link only
  std::shared_ptr<const PathExpr> left;
  std::shared_ptr<const PathExpr> right;
};

using PatternTerm = std::variant<Term, Variable>;
using PatternPredicate = std::variant<Term, Variable, PathExpr>;

struct TriplePattern {
  PatternTerm subject;
  PatternPredicate predicate;
  PatternTerm object;
};

struct RegexFilter {
  Variable var;
  std::string pattern;  // case-sensitive, applied to str(term)
};

enum class SortDirection { Ascending, Descending };

struct OrderSpec {
  Variable var;
  SortDirection direction;
};

struct SliceSpec {
  std::uint64_t limit;
  std::uint64_t offset = 0;
};

enum class AggregateKind { Count, Sum, Avg };

struct AggregateSpec {
  AggregateKind kind;
  Variable var;    // the terminal variable being aggregated (DISTINCT)
  Variable alias;  // output column
};

/// Compiled read query. Solutions are always DISTINCT; evaluation order is
/// patterns, filters, then either the aggregate or order/project/distinct/slice.
struct QueryPlan {
  std::vector<TriplePattern> patterns;
  std::vector<RegexFilter> filters;
  std::optional<OrderSpec> order;
  std::optional<SliceSpec> slice;
  std::optional<AggregateSpec> aggregate;
  std::vector<Variable> projection;  // empty when aggregate is set
};

// --- how the shaper nests the solution table --------------------------------

struct NestLevel {
  Variable var;
  bool literal_capable;  // whether this level's keys may be literals
};

struct InstanceSetTerminal {
  Variable var;
};
struct TermSetTerminal {
  Variable var;
};
struct ObjectViewTerminal {
  Variable property;
  Variable object;
};
struct AggregateTerminal {
  Variable alias;
};
using Terminal =
    std::variant<InstanceSetTerminal, TermSetTerminal, ObjectViewTerminal, AggregateTerminal>;

struct ShapeDescriptor {
  std::vector<NestLevel> levels;  // one per non-terminal wildcard
  Terminal terminal;
};

struct CompiledQuery {
  QueryPlan plan;
  ShapeDescriptor shape;
};

}  // namespace spa
