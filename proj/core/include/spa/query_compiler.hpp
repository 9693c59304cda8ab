#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spa/api_path.hpp"
#include "spa/prefix_map.hpp"
#include "spa/query_plan.hpp"

namespace spa {

struct CompileOptions {
  /// Cap appended when the client sends no limit(); explicit limits are
  /// clamped to it.
  std::uint64_t max_limit = 10000;
};

/// Compiles GET semantics for a /class or /resource path into a query plan
/// plus the nesting descriptor for the shaper.
CompiledQuery compile_get(const ApiPath& path, const PrefixMap& prefixes,
                          const CompileOptions& options = {});

/// Applies parsed RQL operators to a compiled query: regex filters, sort,
/// limit/offset and aggregates over the terminal variable.
void map_rql(const std::vector<RqlOp>& ops, CompiledQuery& query, const PrefixMap& prefixes,
             const CompileOptions& options);

/// Deterministic SPARQL 1.1 SELECT text for a plan: DISTINCT projection,
/// PREFIX declarations for every prefix used, FILTER regex / ORDER BY /
/// LIMIT / OFFSET clauses as present.
std::string serialize_sparql(const QueryPlan& plan, const PrefixMap& prefixes);

}  // namespace spa
