#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace spa {

namespace iris {
inline constexpr char rdf_type[] = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr char rdf_lang_string[] = "http://www.w3.org/1999/02/22-rdf-syntax-ns#langString";
inline constexpr char xsd_string[] = "http://www.w3.org/2001/XMLSchema#string";
inline constexpr char xsd_integer[] = "http://www.w3.org/2001/XMLSchema#integer";
inline constexpr char xsd_decimal[] = "http://www.w3.org/2001/XMLSchema#decimal";
}  // namespace iris

enum class TermKind : std::uint8_t { Iri, BNode, Literal };

/// One RDF node: an IRI, a skolemized blank node, or a literal.
///
/// Literals always carry a datatype IRI; plain literals default to xsd:string
/// and language-tagged literals are forced to rdf:langString. Language tags
/// are normalized to lowercase.
class Term {
 public:
  Term() = default;

  static Term iri(std::string value);
  static Term bnode(std::string label);
  static Term literal(std::string lexical, std::string language = "",
                      std::string datatype = "");

  TermKind kind() const { return kind_; }
  bool is_iri() const { return kind_ == TermKind::Iri; }
  bool is_bnode() const { return kind_ == TermKind::BNode; }
  bool is_literal() const { return kind_ == TermKind::Literal; }

  /// IRI string, blank node label, or literal lexical form.
  const std::string& value() const { return value_; }
  /// Datatype IRI (literals only, always present).
  const std::string& datatype() const { return datatype_; }
  /// Language tag (literals only, empty unless rdf:langString).
  const std::string& language() const { return language_; }

  /// The SPARQL str() view of the term; skolem bnodes yield "_:label".
  std::string str_form() const;

  friend bool operator==(const Term&, const Term&) = default;
  friend std::strong_ordering operator<=>(const Term&, const Term&) = default;

 private:
  TermKind kind_{TermKind::Iri};
  std::string value_;
  std::string datatype_;
  std::string language_;
};

struct Triple {
  Term subject;
  Term predicate;
  Term object;

  friend bool operator==(const Triple&, const Triple&) = default;
  friend std::strong_ordering operator<=>(const Triple&, const Triple&) = default;
};

/// True for the XML Schema numeric datatypes we compare and aggregate over.
bool is_numeric_datatype(std::string_view datatype);

/// Numeric value of a literal, when its datatype is numeric and the lexical
/// form parses.
std::optional<double> numeric_value(const Term& term);

/// Total order used for ORDER BY: numeric literals by value, then
/// bnode < iri < literal, then lexical fields.
bool order_less(const Term& a, const Term& b);

/// Locale-independent shortest decimal rendering used for sum/avg results.
std::string format_decimal(double value);

}  // namespace spa
