#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace spa {

// ---------------------------------------------------------------------------
// Parsed request paths.
//
// A path alternates resource (RES) and property (PROP) segments, starting
// with RES. The class segment of /class lives in the entry point, so
// `segments` always begins at the first instance position. Tokens are kept
// unexpanded; prefix resolution happens at compile time.
// ---------------------------------------------------------------------------

struct Wildcard {
  friend bool operator==(const Wildcard&, const Wildcard&) = default;
};

/// A CURIE (`dbo:capital`) or an angle-bracketed IRI (`<http://…>`).
struct CurieOrIri {
  std::string token;
  friend bool operator==(const CurieOrIri&, const CurieOrIri&) = default;
};

/// A skolem blank-node reference, written `_:label` in paths.
struct SkolemRef {
  std::string label;
  friend bool operator==(const SkolemRef&, const SkolemRef&) = default;
};

/// A literal path token: `lexical@lang` or `lexical^^datatype`. Appears in
/// RES positions, chiefly as the object of a depth-3 DELETE.
struct LiteralRef {
  std::string lexical;
  std::string language;   // empty unless the @lang form
  std::string datatype;   // raw token (CURIE or <iri>); empty means xsd:string
  friend bool operator==(const LiteralRef&, const LiteralRef&) = default;
};

/// SPARQL 1.1 property-path expression tree. Leaves are unexpanded
/// CURIE/<iri> tokens; inside brackets `*` is the closure operator,
/// never the API wildcard.
struct PathAst {
  enum class Op { Link, Inverse, Sequence, Alternative, ZeroOrMore, OneOrMore, ZeroOrOne };

  Op op = Op::Link;
  std::string link;  // Op::Link only
  std::shared_ptr<const PathAst> left;
  std::shared_ptr<const PathAst> right;  // binary operators only

  friend bool operator==(const PathAst& a, const PathAst& b);
};

using ResRef = std::variant<CurieOrIri, SkolemRef, LiteralRef, Wildcard>;
using PropRef = std::variant<CurieOrIri, Wildcard, PathAst>;

struct ResSegment {
  ResRef value;
  friend bool operator==(const ResSegment&, const ResSegment&) = default;
};
struct PropSegment {
  PropRef value;
  friend bool operator==(const PropSegment&, const PropSegment&) = default;
};
using Segment = std::variant<ResSegment, PropSegment>;

struct RqlOp {
  enum class Kind { Regex, Sort, Limit, Count, Sum, Avg };
  Kind kind;
  std::vector<std::string> args;
  friend bool operator==(const RqlOp&, const RqlOp&) = default;
};

struct ClassEntry {
  ResRef class_ref;
  friend bool operator==(const ClassEntry&, const ClassEntry&) = default;
};
struct ResourceEntry {
  friend bool operator==(const ResourceEntry&, const ResourceEntry&) = default;
};
struct NamespaceEntry {
  std::vector<std::string> prefixes;
  friend bool operator==(const NamespaceEntry&, const NamespaceEntry&) = default;
};
using EntryPoint = std::variant<ClassEntry, ResourceEntry, NamespaceEntry>;

struct ApiPath {
  EntryPoint entry;
  std::vector<Segment> segments;
  std::vector<RqlOp> rql;

  friend bool operator==(const ApiPath&, const ApiPath&) = default;
};

/// Parses a request path (undecoded; segments are percent-decoded
/// individually, so a literal `/` inside a segment must arrive encoded)
/// plus the raw query string holding RQL operators.
ApiPath parse_api_path(std::string_view raw_path, std::string_view raw_query);

/// Parses a bracketed property-path expression, outer brackets stripped.
/// Precedence: unary ^ and postfix * + ? bind tighter than /, which binds
/// tighter than |.
PathAst parse_property_path(std::string_view text);

/// Parses the query string into RQL operators. Operators are split on `&`
/// and top-level `,`; each has the form name(args).
std::vector<RqlOp> parse_rql(std::string_view raw_query);

/// Inverse of parse_api_path, for round-trip checks and link generation.
std::string serialize_api_path(const ApiPath& path);

std::string percent_decode(std::string_view text);
std::string percent_encode_segment(std::string_view text);

/// Renders one RES token (CURIE, `<iri>`, `_:label`, `lexical@lang`, …).
std::string res_token(const ResRef& ref);

}  // namespace spa
