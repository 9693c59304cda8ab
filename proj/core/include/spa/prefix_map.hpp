#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "spa/term.hpp"

namespace spa {

/// Immutable-after-startup prefix registry. Expands path tokens (CURIEs,
/// angle-bracketed IRIs, skolem `_:label` references) into terms and compacts
/// terms back into wire ids.
class PrefixMap {
 public:
  /// rdf, rdfs, owl, xsd, foaf, skos, dbo, dbr.
  static PrefixMap builtin_defaults();

  /// Adds or overrides one mapping. Only valid before the service starts.
  void add(std::string prefix, std::string namespace_iri);

  /// Loads `prefix<TAB>namespace-iri` lines, UTF-8, `#` comments ignored.
  /// Entries add to (and may override) what is already present.
  void load_file(const std::string& path);
  void load(std::istream& in, const std::string& origin = "<stream>");

  /// Token forms: `prefix:local`, `<iri>`, `_:label`.
  Term expand(std::string_view token) const;

  /// Longest-namespace-match CURIE, `_:label` for skolem nodes, `<iri>`
  /// fallback when no prefix applies or the local name is not path-safe.
  std::string compact(const Term& term) const;

  struct Resolution {
    std::map<std::string, std::string> namespaces;
    std::vector<std::string> unknown;
  };
  /// Looks up a comma-separated prefix list; missing prefixes are reported,
  /// not failures.
  Resolution resolve_prefixes(std::string_view list) const;

  const std::map<std::string, std::string>& entries() const { return entries_; }

 private:
  std::map<std::string, std::string> entries_;
};

/// `[A-Za-z][A-Za-z0-9_-]*`
bool is_valid_prefix(std::string_view prefix);

/// Non-empty and slash-free, the path-token constraint for CURIE locals.
bool is_valid_local(std::string_view local);

}  // namespace spa
