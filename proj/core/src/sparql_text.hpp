#pragma once

#include <set>
#include <string>
#include <string_view>

#include "spa/prefix_map.hpp"
#include "spa/query_plan.hpp"
#include "spa/term.hpp"

namespace spa::detail {

/// Renders terms, variables and path expressions as SPARQL text while
/// recording which prefixes the output uses, so the prologue only declares
/// what the query needs.
class SparqlWriter {
 public:
  explicit SparqlWriter(const PrefixMap& prefixes) : prefixes_(prefixes) {}

  std::string term(const Term& t);
  std::string pattern_term(const PatternTerm& t);
  std::string predicate(const PatternPredicate& p);
  std::string path(const PathExpr& expr, int parent_precedence);
  static std::string variable(const Variable& v) { return "?" + v.name; }

  /// Sorted PREFIX declarations for everything rendered so far, followed by
  /// a blank line; empty when no prefix was used.
  std::string prologue() const;

 private:
  const PrefixMap& prefixes_;
  std::set<std::string> used_;
};

std::string escape_string_literal(std::string_view s);

/// Conservative check that a CURIE local name is legal SPARQL PN_LOCAL
/// without escaping.
bool pn_local_safe(std::string_view local);

}  // namespace spa::detail
