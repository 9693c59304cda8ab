#include "spa/term.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cstdlib>

namespace spa {

Term Term::iri(std::string value) {
  Term t;
  t.kind_ = TermKind::Iri;
  t.value_ = std::move(value);
  return t;
}

Term Term::bnode(std::string label) {
  Term t;
  t.kind_ = TermKind::BNode;
  t.value_ = std::move(label);
  return t;
}

Term Term::literal(std::string lexical, std::string language, std::string datatype) {
  Term t;
  t.kind_ = TermKind::Literal;
  t.value_ = std::move(lexical);
  if (!language.empty()) {
    std::transform(language.begin(), language.end(), language.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    t.language_ = std::move(language);
    t.datatype_ = iris::rdf_lang_string;
  } else {
    t.datatype_ = datatype.empty() ? iris::xsd_string : std::move(datatype);
  }
  return t;
}

std::string Term::str_form() const {
  if (kind_ == TermKind::BNode) return "_:" + value_;
  return value_;
}

bool is_numeric_datatype(std::string_view datatype) {
  static constexpr std::string_view xsd = "http://www.w3.org/2001/XMLSchema#";
  if (datatype.size() <= xsd.size() || datatype.substr(0, xsd.size()) != xsd) return false;
  const std::string_view local = datatype.substr(xsd.size());
  static constexpr std::array<std::string_view, 13> names = {
      "integer",          "decimal",            "double",           "float",
      "long",             "int",                "short",            "byte",
      "nonNegativeInteger", "nonPositiveInteger", "negativeInteger", "positiveInteger",
      "unsignedLong"};
  return std::find(names.begin(), names.end(), local) != names.end();
}

std::optional<double> numeric_value(const Term& term) {
  if (!term.is_literal() || !is_numeric_datatype(term.datatype())) return std::nullopt;
  const std::string& lex = term.value();
  if (lex.empty()) return std::nullopt;
  char* end = nullptr;
  const double v = std::strtod(lex.c_str(), &end);
  if (end != lex.c_str() + lex.size()) return std::nullopt;
  return v;
}

bool order_less(const Term& a, const Term& b) {
  const auto av = numeric_value(a);
  const auto bv = numeric_value(b);
  if (av && bv && *av != *bv) return *av < *bv;

  auto rank = [](TermKind k) {
    switch (k) {
      case TermKind::BNode: return 0;
      case TermKind::Iri: return 1;
      case TermKind::Literal: return 2;
    }
    return 3;
  };
  if (rank(a.kind()) != rank(b.kind())) return rank(a.kind()) < rank(b.kind());
  if (a.value() != b.value()) return a.value() < b.value();
  if (a.language() != b.language()) return a.language() < b.language();
  return a.datatype() < b.datatype();
}

std::string format_decimal(double value) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                 std::chars_format::general, 15);
  return std::string(buf.data(), res.ptr);
}

}  // namespace spa
