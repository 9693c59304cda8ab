#include "spa/prefix_map.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "spa/errors.hpp"

namespace spa {

bool is_valid_prefix(std::string_view prefix) {
  if (prefix.empty() || !std::isalpha(static_cast<unsigned char>(prefix[0]))) return false;
  for (const char c : prefix.substr(1)) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-') return false;
  }
  return true;
}

bool is_valid_local(std::string_view local) {
  return !local.empty() && local.find('/') == std::string_view::npos;
}

PrefixMap PrefixMap::builtin_defaults() {
  PrefixMap map;
  map.add("rdf", "http://www.w3.org/1999/02/22-rdf-syntax-ns#");
  map.add("rdfs", "http://www.w3.org/2000/01/rdf-schema#");
  map.add("owl", "http://www.w3.org/2002/07/owl#");
  map.add("xsd", "http://www.w3.org/2001/XMLSchema#");
  map.add("foaf", "http://xmlns.com/foaf/0.1/");
  map.add("skos", "http://www.w3.org/2004/02/skos/core#");
  map.add("dbo", "http://dbpedia.org/ontology/");
  map.add("dbr", "http://dbpedia.org/resource/");
  return map;
}

void PrefixMap::add(std::string prefix, std::string namespace_iri) {
  if (!is_valid_prefix(prefix)) {
    throw ApiError(ErrorCode::ParseError, "invalid prefix '" + prefix + "'");
  }
  // absolute IRI: require a scheme
  const auto colon = namespace_iri.find(':');
  if (colon == std::string::npos || colon == 0) {
    throw ApiError(ErrorCode::ParseError,
                   "namespace for '" + prefix + "' is not an absolute IRI: " + namespace_iri);
  }
  entries_[std::move(prefix)] = std::move(namespace_iri);
}

void PrefixMap::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ApiError(ErrorCode::ParseError, "cannot open prefix file: " + path);
  }
  load(in, path);
}

void PrefixMap::load(std::istream& in, const std::string& origin) {
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw ApiError(ErrorCode::ParseError,
                     origin + ":" + std::to_string(lineno) + ": expected prefix<TAB>namespace");
    }
    add(line.substr(0, tab), line.substr(tab + 1));
  }
}

Term PrefixMap::expand(std::string_view token) const {
  if (token.empty()) {
    throw ApiError(ErrorCode::MalformedSegment, "empty id token");
  }
  if (token.front() == '<') {
    if (token.size() < 3 || token.back() != '>') {
      throw ApiError(ErrorCode::MalformedSegment, "unterminated IRI token: " + std::string(token));
    }
    std::string_view inner = token.substr(1, token.size() - 2);
    if (inner.substr(0, 2) == "_:") {
      return Term::bnode(std::string(inner.substr(2)));
    }
    return Term::iri(std::string(inner));
  }
  if (token.substr(0, 2) == "_:") {
    const std::string_view label = token.substr(2);
    if (label.empty() || label.find('/') != std::string_view::npos) {
      throw ApiError(ErrorCode::MalformedSegment, "invalid skolem id: " + std::string(token));
    }
    return Term::bnode(std::string(label));
  }
  const auto colon = token.find(':');
  if (colon == std::string_view::npos) {
    throw ApiError(ErrorCode::MalformedSegment, "not an id token: " + std::string(token));
  }
  const std::string_view prefix = token.substr(0, colon);
  const std::string_view local = token.substr(colon + 1);
  if (!is_valid_prefix(prefix) || !is_valid_local(local)) {
    throw ApiError(ErrorCode::MalformedSegment, "malformed CURIE: " + std::string(token));
  }
  const auto it = entries_.find(std::string(prefix));
  if (it == entries_.end()) {
    throw ApiError(ErrorCode::UnknownPrefix, "unknown prefix '" + std::string(prefix) + "'");
  }
  return Term::iri(it->second + std::string(local));
}

std::string PrefixMap::compact(const Term& term) const {
  if (term.is_bnode()) return "_:" + term.value();
  const std::string& iri = term.value();
  const std::map<std::string, std::string>::value_type* best = nullptr;
  for (const auto& entry : entries_) {
    const std::string& ns = entry.second;
    if (iri.size() <= ns.size() || iri.compare(0, ns.size(), ns) != 0) continue;
    if (!is_valid_local(std::string_view(iri).substr(ns.size()))) continue;
    if (best == nullptr || ns.size() > best->second.size()) best = &entry;
    // equal lengths: std::map iteration order already prefers the
    // lexicographically smallest prefix
  }
  if (best == nullptr) return "<" + iri + ">";
  return best->first + ":" + iri.substr(best->second.size());
}

PrefixMap::Resolution PrefixMap::resolve_prefixes(std::string_view list) const {
  Resolution res;
  std::size_t start = 0;
  while (start <= list.size()) {
    const auto comma = list.find(',', start);
    const std::string_view tok =
        list.substr(start, comma == std::string_view::npos ? list.size() - start : comma - start);
    if (!tok.empty()) {
      const auto it = entries_.find(std::string(tok));
      if (it != entries_.end()) {
        res.namespaces.emplace(it->first, it->second);
      } else {
        res.unknown.emplace_back(tok);
      }
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return res;
}

}  // namespace spa
