#include "sparql_text.hpp"

#include <cctype>

namespace spa::detail {

std::string escape_string_literal(std::string_view s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (const char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

bool pn_local_safe(std::string_view local) {
  if (local.empty()) return false;
  auto word = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
  };
  if (!word(local.front())) return false;
  if (local.back() == '.') return false;
  for (const char c : local) {
    if (!word(c) && c != '-' && c != '.') return false;
  }
  return true;
}

std::string SparqlWriter::term(const Term& t) {
  switch (t.kind()) {
    case TermKind::BNode:
      // skolem wire form: the relative IRI _:label
      return "<_:" + t.value() + ">";
    case TermKind::Iri: {
      const std::string compacted = prefixes_.compact(t);
      if (compacted.front() == '<') return compacted;
      const auto colon = compacted.find(':');
      if (!pn_local_safe(std::string_view(compacted).substr(colon + 1))) {
        return "<" + t.value() + ">";
      }
      used_.insert(compacted.substr(0, colon));
      return compacted;
    }
    case TermKind::Literal: {
      std::string out = "\"" + escape_string_literal(t.value()) + "\"";
      if (!t.language().empty()) {
        out += "@" + t.language();
      } else if (t.datatype() != iris::xsd_string) {
        out += "^^" + term(Term::iri(t.datatype()));
      }
      return out;
    }
  }
  return "";
}

std::string SparqlWriter::pattern_term(const PatternTerm& t) {
  if (const auto* v = std::get_if<Variable>(&t)) return variable(*v);
  return term(std::get<Term>(t));
}

namespace {
int path_precedence(const PathExpr& expr) {
  switch (expr.op) {
    case PathExpr::Op::Alternative: return 1;
    case PathExpr::Op::Sequence: return 2;
    case PathExpr::Op::Inverse:
    case PathExpr::Op::ZeroOrMore:
    case PathExpr::Op::OneOrMore:
    case PathExpr::Op::ZeroOrOne: return 3;
    case PathExpr::Op::Link: return 4;
  }
  return 4;
}
}  // namespace

std::string SparqlWriter::path(const PathExpr& expr, int parent_precedence) {
  const int prec = path_precedence(expr);
  std::string out;
  switch (expr.op) {
    case PathExpr::Op::Link:
      out = term(expr.link);
      break;
    case PathExpr::Op::Inverse:
      out = "^" + path(*expr.left, 4);
      break;
    case PathExpr::Op::Sequence:
      out = path(*expr.left, 2) + "/" + path(*expr.right, 3);
      break;
    case PathExpr::Op::Alternative:
      out = path(*expr.left, 1) + "|" + path(*expr.right, 2);
      break;
    case PathExpr::Op::ZeroOrMore:
      out = path(*expr.left, 4) + "*";
      break;
    case PathExpr::Op::OneOrMore:
      out = path(*expr.left, 4) + "+";
      break;
    case PathExpr::Op::ZeroOrOne:
      out = path(*expr.left, 4) + "?";
      break;
  }
  if (prec < parent_precedence) return "(" + out + ")";
  return out;
}

std::string SparqlWriter::predicate(const PatternPredicate& p) {
  if (const auto* v = std::get_if<Variable>(&p)) return variable(*v);
  if (const auto* t = std::get_if<Term>(&p)) return term(*t);
  return path(std::get<PathExpr>(p), 0);
}

std::string SparqlWriter::prologue() const {
  if (used_.empty()) return "";
  std::string out;
  const auto& entries = prefixes_.entries();
  for (const auto& prefix : used_) {
    out += "PREFIX " + prefix + ": <" + entries.at(prefix) + ">\n";
  }
  out += "\n";
  return out;
}

}  // namespace spa::detail
