#include "spa/api_path.hpp"

#include <cctype>
#include <optional>

#include "spa/errors.hpp"
#include "spa/prefix_map.hpp"

namespace spa {

bool operator==(const PathAst& a, const PathAst& b) {
  if (a.op != b.op || a.link != b.link) return false;
  auto eq = [](const std::shared_ptr<const PathAst>& x, const std::shared_ptr<const PathAst>& y) {
    if (!x || !y) return !x && !y;
    return *x == *y;
  };
  return eq(a.left, b.left) && eq(a.right, b.right);
}

namespace {

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

std::vector<std::string_view> split_on(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

bool is_curie_token(std::string_view tok) {
  const auto colon = tok.find(':');
  if (colon == std::string_view::npos || colon == 0) return false;
  return is_valid_prefix(tok.substr(0, colon)) && is_valid_local(tok.substr(colon + 1));
}

bool is_angle_iri(std::string_view tok) {
  if (tok.size() < 3 || tok.front() != '<' || tok.back() != '>') return false;
  const auto inner = tok.substr(1, tok.size() - 2);
  return inner.find('<') == std::string_view::npos && inner.find('>') == std::string_view::npos;
}

bool is_language_tag(std::string_view tag) {
  if (tag.empty()) return false;
  bool first_block = true;
  std::size_t block_len = 0;
  for (const char c : tag) {
    if (c == '-') {
      if (block_len == 0) return false;
      first_block = false;
      block_len = 0;
      continue;
    }
    const bool alpha = std::isalpha(static_cast<unsigned char>(c)) != 0;
    const bool digit = std::isdigit(static_cast<unsigned char>(c)) != 0;
    if (first_block ? !alpha : !(alpha || digit)) return false;
    if (++block_len > 8) return false;
  }
  return block_len > 0;
}

std::optional<LiteralRef> try_literal_token(std::string_view tok) {
  const auto caret = tok.rfind("^^");
  if (caret != std::string_view::npos) {
    const std::string_view dt = tok.substr(caret + 2);
    if (!is_curie_token(dt) && !is_angle_iri(dt)) return std::nullopt;
    return LiteralRef{std::string(tok.substr(0, caret)), "", std::string(dt)};
  }
  const auto at = tok.rfind('@');
  if (at != std::string_view::npos && is_language_tag(tok.substr(at + 1))) {
    return LiteralRef{std::string(tok.substr(0, at)), std::string(tok.substr(at + 1)), ""};
  }
  return std::nullopt;
}

ResRef parse_res_token(const std::string& tok) {
  if (tok == "*") return Wildcard{};
  if (tok.size() >= 2 && tok[0] == '_' && tok[1] == ':') {
    const std::string_view label = std::string_view(tok).substr(2);
    if (label.empty() || label.find('/') != std::string_view::npos) {
      throw ApiError(ErrorCode::MalformedSegment, "invalid skolem id: " + tok);
    }
    return SkolemRef{std::string(label)};
  }
  if (!tok.empty() && tok.front() == '<') {
    if (!is_angle_iri(tok)) {
      throw ApiError(ErrorCode::MalformedSegment, "malformed IRI segment: " + tok);
    }
    return CurieOrIri{tok};
  }
  if (is_curie_token(tok)) return CurieOrIri{tok};
  if (auto lit = try_literal_token(tok)) return *lit;
  throw ApiError(ErrorCode::MalformedSegment, "not a resource segment: " + tok);
}

PropRef parse_prop_token(const std::string& tok) {
  if (tok == "*") return Wildcard{};
  if (!tok.empty() && tok.front() == '(') {
    if (tok.size() < 3 || tok.back() != ')') {
      throw ApiError(ErrorCode::UnbalancedParens, "unterminated property path: " + tok);
    }
    return parse_property_path(std::string_view(tok).substr(1, tok.size() - 2));
  }
  if (is_curie_token(tok) || is_angle_iri(tok)) return CurieOrIri{tok};
  throw ApiError(ErrorCode::MalformedSegment, "not a property segment: " + tok);
}

// --- property path expressions ---------------------------------------------

class PathExprParser {
 public:
  explicit PathExprParser(std::string_view text) : text_(text) {}

  PathAst parse() {
    PathAst ast = parse_alternative();
    if (!eof()) {
      throw ApiError(ErrorCode::UnbalancedParens, "unexpected ')' in property path");
    }
    return ast;
  }

 private:
  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  static std::shared_ptr<const PathAst> box(PathAst ast) {
    return std::make_shared<const PathAst>(std::move(ast));
  }

  PathAst parse_alternative() {
    PathAst node = parse_sequence();
    while (!eof() && peek() == '|') {
      ++pos_;
      PathAst rhs = parse_sequence();
      PathAst alt;
      alt.op = PathAst::Op::Alternative;
      alt.left = box(std::move(node));
      alt.right = box(std::move(rhs));
      node = std::move(alt);
    }
    return node;
  }

  PathAst parse_sequence() {
    PathAst node = parse_unary();
    while (!eof() && peek() == '/') {
      ++pos_;
      PathAst rhs = parse_unary();
      PathAst seq;
      seq.op = PathAst::Op::Sequence;
      seq.left = box(std::move(node));
      seq.right = box(std::move(rhs));
      node = std::move(seq);
    }
    return node;
  }

  PathAst parse_unary() {
    if (!eof() && peek() == '^') {
      ++pos_;
      PathAst inv;
      inv.op = PathAst::Op::Inverse;
      inv.left = box(parse_unary());
      return inv;
    }
    PathAst node = parse_primary();
    bool modified = false;
    while (!eof() && (peek() == '*' || peek() == '+' || peek() == '?')) {
      if (modified) {
        throw ApiError(ErrorCode::UnknownOperator,
                       std::string("repeated path modifier '") + peek() + "'");
      }
      PathAst mod;
      mod.op = peek() == '*'   ? PathAst::Op::ZeroOrMore
               : peek() == '+' ? PathAst::Op::OneOrMore
                               : PathAst::Op::ZeroOrOne;
      ++pos_;
      mod.left = box(std::move(node));
      node = std::move(mod);
      modified = true;
    }
    return node;
  }

  PathAst parse_primary() {
    if (eof() || peek() == ')' || peek() == '|') {
      throw ApiError(ErrorCode::EmptyAlternative, "empty operand in property path");
    }
    const char c = peek();
    if (c == '(') {
      ++pos_;
      PathAst inner = parse_alternative();
      if (eof() || peek() != ')') {
        throw ApiError(ErrorCode::UnbalancedParens, "missing ')' in property path");
      }
      ++pos_;
      return inner;
    }
    if (c == '*' || c == '+' || c == '?' || c == '/') {
      throw ApiError(ErrorCode::UnknownOperator, std::string("unexpected '") + c + "'");
    }
    return parse_leaf();
  }

  PathAst parse_leaf() {
    PathAst leaf;
    leaf.op = PathAst::Op::Link;
    if (peek() == '<') {
      const auto end = text_.find('>', pos_);
      if (end == std::string_view::npos) {
        throw ApiError(ErrorCode::MalformedSegment, "unterminated IRI in property path");
      }
      leaf.link = std::string(text_.substr(pos_, end - pos_ + 1));
      pos_ = end + 1;
      if (!is_angle_iri(leaf.link)) {
        throw ApiError(ErrorCode::MalformedSegment, "malformed IRI in property path: " + leaf.link);
      }
      return leaf;
    }
    const std::size_t start = pos_;
    while (!eof()) {
      const char c = peek();
      if (c == '^' || c == '|' || c == '/' || c == '*' || c == '+' || c == '?' || c == '(' ||
          c == ')') {
        break;
      }
      ++pos_;
    }
    leaf.link = std::string(text_.substr(start, pos_ - start));
    if (!is_curie_token(leaf.link)) {
      throw ApiError(ErrorCode::MalformedSegment,
                     "not a property in path expression: '" + leaf.link + "'");
    }
    return leaf;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// --- RQL --------------------------------------------------------------------

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (const char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

RqlOp parse_rql_op(std::string_view tok) {
  const auto open = tok.find('(');
  if (open == std::string_view::npos || tok.back() != ')') {
    throw ApiError(ErrorCode::MalformedRql, "expected name(args): " + std::string(tok));
  }
  const std::string_view name = tok.substr(0, open);
  const std::string_view inner = tok.substr(open + 1, tok.size() - open - 2);

  if (name == "regex") return RqlOp{RqlOp::Kind::Regex, {std::string(inner)}};
  if (name == "sort") {
    if (inner.empty() || (inner[0] != '+' && inner[0] != '-')) {
      throw ApiError(ErrorCode::MalformedRql, "sort needs a +/- direction: " + std::string(tok));
    }
    return RqlOp{RqlOp::Kind::Sort, {std::string(inner)}};
  }
  if (name == "limit") {
    std::vector<std::string> args;
    for (const auto part : split_on(inner, ',')) {
      if (!all_digits(part)) {
        throw ApiError(ErrorCode::MalformedRql, "limit takes non-negative integers: " + std::string(tok));
      }
      args.emplace_back(part);
    }
    if (args.empty() || args.size() > 2) {
      throw ApiError(ErrorCode::MalformedRql, "limit(count[,offset]): " + std::string(tok));
    }
    return RqlOp{RqlOp::Kind::Limit, std::move(args)};
  }
  if (name == "count" || name == "sum" || name == "avg") {
    if (!inner.empty()) {
      throw ApiError(ErrorCode::MalformedRql, "aggregate takes no arguments: " + std::string(tok));
    }
    const auto kind = name == "count" ? RqlOp::Kind::Count
                      : name == "sum" ? RqlOp::Kind::Sum
                                      : RqlOp::Kind::Avg;
    return RqlOp{kind, {}};
  }
  throw ApiError(ErrorCode::UnsupportedRqlOperator, "unsupported RQL operator: " + std::string(name));
}

}  // namespace

std::string percent_decode(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '%') {
      out.push_back(text[i]);
      continue;
    }
    if (i + 2 >= text.size()) {
      throw ApiError(ErrorCode::MalformedSegment, "truncated percent escape");
    }
    const int hi = hex_digit(text[i + 1]);
    const int lo = hex_digit(text[i + 2]);
    if (hi < 0 || lo < 0) {
      throw ApiError(ErrorCode::MalformedSegment, "invalid percent escape");
    }
    out.push_back(static_cast<char>(hi * 16 + lo));
    i += 2;
  }
  return out;
}

std::string percent_encode_segment(std::string_view text) {
  static constexpr char hex[] = "0123456789ABCDEF";
  std::string out;
  out.reserve(text.size());
  for (const char c : text) {
    const auto u = static_cast<unsigned char>(c);
    if (c == '%' || c == '/' || c == '?' || c == '#' || u < 0x21 || u == 0x7F) {
      out.push_back('%');
      out.push_back(hex[u >> 4]);
      out.push_back(hex[u & 0xF]);
    } else {
      out.push_back(c);
    }
  }
  return out;
}

PathAst parse_property_path(std::string_view text) {
  return PathExprParser(text).parse();
}

std::vector<RqlOp> parse_rql(std::string_view raw_query) {
  std::string query;
  try {
    query = percent_decode(raw_query);
  } catch (const ApiError&) {
    throw ApiError(ErrorCode::MalformedRql, "invalid percent escape in query string");
  }

  // split on '&' and ',' outside parentheses
  std::vector<std::string> tokens;
  std::string current;
  int depth = 0;
  for (const char c : query) {
    if (c == '(') ++depth;
    if (c == ')' && --depth < 0) {
      throw ApiError(ErrorCode::MalformedRql, "unbalanced ')' in query string");
    }
    if (depth == 0 && (c == '&' || c == ',')) {
      tokens.push_back(std::move(current));
      current.clear();
      continue;
    }
    current.push_back(c);
  }
  if (depth != 0) {
    throw ApiError(ErrorCode::MalformedRql, "unbalanced '(' in query string");
  }
  tokens.push_back(std::move(current));

  std::vector<RqlOp> ops;
  bool have_aggregate = false, have_sort = false, have_limit = false;
  for (const auto& tok : tokens) {
    if (tok.empty()) continue;
    RqlOp op = parse_rql_op(tok);
    switch (op.kind) {
      case RqlOp::Kind::Count:
      case RqlOp::Kind::Sum:
      case RqlOp::Kind::Avg:
        if (have_aggregate) {
          throw ApiError(ErrorCode::DuplicateAggregate, "at most one aggregate per request");
        }
        have_aggregate = true;
        break;
      case RqlOp::Kind::Sort:
        if (have_sort) throw ApiError(ErrorCode::MalformedRql, "duplicate sort()");
        have_sort = true;
        break;
      case RqlOp::Kind::Limit:
        if (have_limit) throw ApiError(ErrorCode::MalformedRql, "duplicate limit()");
        have_limit = true;
        break;
      case RqlOp::Kind::Regex:
        break;
    }
    ops.push_back(std::move(op));
  }
  return ops;
}

ApiPath parse_api_path(std::string_view raw_path, std::string_view raw_query) {
  if (raw_path.empty() || raw_path[0] != '/') {
    throw ApiError(ErrorCode::UnknownEntryPoint, "path must start with /api");
  }
  auto raw_parts = split_on(raw_path.substr(1), '/');
  if (!raw_parts.empty() && raw_parts.back().empty()) raw_parts.pop_back();  // trailing slash

  std::vector<std::string> parts;
  parts.reserve(raw_parts.size());
  for (const auto part : raw_parts) {
    if (part.empty()) {
      throw ApiError(ErrorCode::MalformedSegment, "empty path segment");
    }
    parts.push_back(percent_decode(part));
  }

  if (parts.empty() || parts[0] != "api") {
    throw ApiError(ErrorCode::UnknownEntryPoint, "path must start with /api");
  }
  if (parts.size() < 2) {
    throw ApiError(ErrorCode::UnknownEntryPoint, "missing entry point after /api");
  }

  ApiPath path;
  std::size_t first_segment = 2;
  const std::string& entry = parts[1];
  if (entry == "class") {
    if (parts.size() < 3) {
      throw ApiError(ErrorCode::EmptyClass, "/class requires a class segment");
    }
    path.entry = ClassEntry{parse_res_token(parts[2])};
    first_segment = 3;
  } else if (entry == "resource") {
    path.entry = ResourceEntry{};
  } else if (entry == "namespace") {
    if (parts.size() != 3) {
      throw ApiError(ErrorCode::MalformedSegment, "/namespace takes one prefix-list segment");
    }
    NamespaceEntry ns;
    for (const auto tok : split_on(parts[2], ',')) {
      if (!is_valid_prefix(tok)) {
        throw ApiError(ErrorCode::MalformedSegment, "invalid prefix token: " + std::string(tok));
      }
      ns.prefixes.emplace_back(tok);
    }
    path.entry = std::move(ns);
    path.rql = parse_rql(raw_query);
    return path;
  } else {
    throw ApiError(ErrorCode::UnknownEntryPoint, "unknown entry point: /" + entry);
  }

  for (std::size_t i = first_segment; i < parts.size(); ++i) {
    const bool res_position = ((i - first_segment) % 2 == 0);
    if (res_position) {
      path.segments.emplace_back(ResSegment{parse_res_token(parts[i])});
    } else {
      path.segments.emplace_back(PropSegment{parse_prop_token(parts[i])});
    }
  }
  path.rql = parse_rql(raw_query);
  return path;
}

// --- serialization ----------------------------------------------------------

namespace {

// precedence: alternative < sequence < unary/postfix < leaf
int ast_precedence(const PathAst& ast) {
  switch (ast.op) {
    case PathAst::Op::Alternative: return 1;
    case PathAst::Op::Sequence: return 2;
    case PathAst::Op::Inverse:
    case PathAst::Op::ZeroOrMore:
    case PathAst::Op::OneOrMore:
    case PathAst::Op::ZeroOrOne: return 3;
    case PathAst::Op::Link: return 4;
  }
  return 4;
}

void print_ast(const PathAst& ast, int parent_prec, std::string& out) {
  const int prec = ast_precedence(ast);
  const bool parens = prec < parent_prec;
  if (parens) out.push_back('(');
  switch (ast.op) {
    case PathAst::Op::Link:
      out += ast.link;
      break;
    case PathAst::Op::Inverse:
      out.push_back('^');
      print_ast(*ast.left, 4, out);
      break;
    case PathAst::Op::Sequence:
      print_ast(*ast.left, 2, out);
      out.push_back('/');
      print_ast(*ast.right, 3, out);
      break;
    case PathAst::Op::Alternative:
      print_ast(*ast.left, 1, out);
      out.push_back('|');
      print_ast(*ast.right, 2, out);
      break;
    case PathAst::Op::ZeroOrMore:
    case PathAst::Op::OneOrMore:
    case PathAst::Op::ZeroOrOne:
      print_ast(*ast.left, 4, out);
      out.push_back(ast.op == PathAst::Op::ZeroOrMore   ? '*'
                    : ast.op == PathAst::Op::OneOrMore ? '+'
                                                       : '?');
      break;
  }
  if (parens) out.push_back(')');
}

std::string prop_token(const PropRef& ref) {
  if (std::holds_alternative<Wildcard>(ref)) return "*";
  if (const auto* curie = std::get_if<CurieOrIri>(&ref)) return curie->token;
  std::string out = "(";
  print_ast(std::get<PathAst>(ref), 0, out);
  out.push_back(')');
  return out;
}

std::string rql_query(const std::vector<RqlOp>& ops) {
  std::string out;
  for (const auto& op : ops) {
    if (!out.empty()) out.push_back('&');
    switch (op.kind) {
      case RqlOp::Kind::Regex: out += "regex"; break;
      case RqlOp::Kind::Sort: out += "sort"; break;
      case RqlOp::Kind::Limit: out += "limit"; break;
      case RqlOp::Kind::Count: out += "count"; break;
      case RqlOp::Kind::Sum: out += "sum"; break;
      case RqlOp::Kind::Avg: out += "avg"; break;
    }
    out.push_back('(');
    for (std::size_t i = 0; i < op.args.size(); ++i) {
      if (i > 0) out.push_back(',');
      for (const char c : op.args[i]) {
        if (c == '%' || c == '#' || static_cast<unsigned char>(c) < 0x21) {
          static constexpr char hex[] = "0123456789ABCDEF";
          const auto u = static_cast<unsigned char>(c);
          out.push_back('%');
          out.push_back(hex[u >> 4]);
          out.push_back(hex[u & 0xF]);
        } else {
          out.push_back(c);
        }
      }
    }
    out.push_back(')');
  }
  return out;
}

}  // namespace

std::string res_token(const ResRef& ref) {
  if (std::holds_alternative<Wildcard>(ref)) return "*";
  if (const auto* curie = std::get_if<CurieOrIri>(&ref)) return curie->token;
  if (const auto* skolem = std::get_if<SkolemRef>(&ref)) return "_:" + skolem->label;
  const auto& lit = std::get<LiteralRef>(ref);
  if (!lit.language.empty()) return lit.lexical + "@" + lit.language;
  return lit.lexical + "^^" + (lit.datatype.empty() ? "xsd:string" : lit.datatype);
}

std::string serialize_api_path(const ApiPath& path) {
  std::string out = "/api";
  if (const auto* cls = std::get_if<ClassEntry>(&path.entry)) {
    out += "/class/" + percent_encode_segment(res_token(cls->class_ref));
  } else if (std::holds_alternative<ResourceEntry>(path.entry)) {
    out += "/resource";
  } else {
    const auto& ns = std::get<NamespaceEntry>(path.entry);
    out += "/namespace/";
    for (std::size_t i = 0; i < ns.prefixes.size(); ++i) {
      if (i > 0) out.push_back(',');
      out += ns.prefixes[i];
    }
  }
  for (const auto& segment : path.segments) {
    out.push_back('/');
    if (const auto* res = std::get_if<ResSegment>(&segment)) {
      out += percent_encode_segment(res_token(res->value));
    } else {
      out += percent_encode_segment(prop_token(std::get<PropSegment>(segment).value));
    }
  }
  if (!path.rql.empty()) {
    out.push_back('?');
    out += rql_query(path.rql);
  }
  return out;
}

}  // namespace spa
