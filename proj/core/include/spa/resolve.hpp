#pragma once

#include "spa/api_path.hpp"
#include "spa/prefix_map.hpp"
#include "spa/query_plan.hpp"

namespace spa {

/// Expands a concrete RES token (CURIE/IRI, skolem reference, or literal)
/// into a term. Wildcards are the caller's business.
Term resolve_res(const ResRef& ref, const PrefixMap& prefixes);

/// Expands a literal path token, resolving its datatype token.
Term resolve_literal(const LiteralRef& ref, const PrefixMap& prefixes);

/// Expands a property-path AST into a plan-level path expression.
PathExpr resolve_path(const PathAst& ast, const PrefixMap& prefixes);

}  // namespace spa
