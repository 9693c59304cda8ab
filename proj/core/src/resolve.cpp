#include "spa/resolve.hpp"

#include "spa/errors.hpp"

namespace spa {

Term resolve_literal(const LiteralRef& ref, const PrefixMap& prefixes) {
  if (!ref.language.empty()) return Term::literal(ref.lexical, ref.language);
  if (ref.datatype.empty()) return Term::literal(ref.lexical);
  const Term datatype = prefixes.expand(ref.datatype);
  if (!datatype.is_iri()) {
    throw ApiError(ErrorCode::MalformedSegment, "datatype must be an IRI: " + ref.datatype);
  }
  return Term::literal(ref.lexical, "", datatype.value());
}

Term resolve_res(const ResRef& ref, const PrefixMap& prefixes) {
  if (const auto* curie = std::get_if<CurieOrIri>(&ref)) return prefixes.expand(curie->token);
  if (const auto* skolem = std::get_if<SkolemRef>(&ref)) return Term::bnode(skolem->label);
  if (const auto* lit = std::get_if<LiteralRef>(&ref)) return resolve_literal(*lit, prefixes);
  throw ApiError(ErrorCode::Internal, "cannot resolve a wildcard segment");
}

PathExpr resolve_path(const PathAst& ast, const PrefixMap& prefixes) {
  PathExpr expr;
  switch (ast.op) {
    case PathAst::Op::Link: {
      expr.op = PathExpr::Op::Link;
      expr.link = prefixes.expand(ast.link);
      if (!expr.link.is_iri()) {
        throw ApiError(ErrorCode::MalformedSegment, "property must be an IRI: " + ast.link);
      }
      return expr;
    }
    case PathAst::Op::Inverse: expr.op = PathExpr::Op::Inverse; break;
    case PathAst::Op::Sequence: expr.op = PathExpr::Op::Sequence; break;
    case PathAst::Op::Alternative: expr.op = PathExpr::Op::Alternative; break;
    case PathAst::Op::ZeroOrMore: expr.op = PathExpr::Op::ZeroOrMore; break;
    case PathAst::Op::OneOrMore: expr.op = PathExpr::Op::OneOrMore; break;
    case PathAst::Op::ZeroOrOne: expr.op = PathExpr::Op::ZeroOrOne; break;
  }
  if (ast.left) expr.left = std::make_shared<const PathExpr>(resolve_path(*ast.left, prefixes));
  if (ast.right) expr.right = std::make_shared<const PathExpr>(resolve_path(*ast.right, prefixes));
  return expr;
}

}  // namespace spa
