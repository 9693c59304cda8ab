#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

namespace spa {

/// Every failure the service can surface. Each code maps to exactly one
/// HTTP status via http_status().
enum class ErrorCode {
  // path grammar
  UnknownEntryPoint,
  EmptyClass,
  MalformedSegment,
  MalformedRql,
  UnsupportedRqlOperator,
  DuplicateAggregate,
  UnbalancedParens,
  UnknownOperator,
  EmptyAlternative,
  // prefix resolution
  UnknownPrefix,
  // query compilation
  UnsupportedShape,
  SortKeyOnObjectView,
  // request bodies and update compilation
  MalformedBody,
  UnknownField,
  InvalidValueObject,
  PostTargetTooDeep,
  PostOnWildcard,
  PutOnWildcard,
  PutOnPropTerminal,
  DeleteOnWildcard,
  DeleteWithPropertyPath,
  DepthOutOfRange,
  // upstream endpoint
  UpstreamUnreachable,
  UpstreamError,
  MalformedResults,
  // routing
  NotFound,
  MethodNotAllowed,
  // data ingestion / internal
  ParseError,
  Internal,
};

class ApiError : public std::runtime_error {
 public:
  ApiError(ErrorCode code, const std::string& message, std::string upstream_detail = "")
      : std::runtime_error(message), code_(code), upstream_detail_(std::move(upstream_detail)) {}

  ErrorCode code() const { return code_; }
  const std::string& upstream_detail() const { return upstream_detail_; }

 private:
  ErrorCode code_;
  std::string upstream_detail_;
};

constexpr std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownEntryPoint: return "UnknownEntryPoint";
    case ErrorCode::EmptyClass: return "EmptyClass";
    case ErrorCode::MalformedSegment: return "MalformedSegment";
    case ErrorCode::MalformedRql: return "MalformedRql";
    case ErrorCode::UnsupportedRqlOperator: return "UnsupportedRqlOperator";
    case ErrorCode::DuplicateAggregate: return "DuplicateAggregate";
    case ErrorCode::UnbalancedParens: return "UnbalancedParens";
    case ErrorCode::UnknownOperator: return "UnknownOperator";
    case ErrorCode::EmptyAlternative: return "EmptyAlternative";
    case ErrorCode::UnknownPrefix: return "UnknownPrefix";
    case ErrorCode::UnsupportedShape: return "UnsupportedShape";
    case ErrorCode::SortKeyOnObjectView: return "SortKeyOnObjectView";
    case ErrorCode::MalformedBody: return "MalformedBody";
    case ErrorCode::UnknownField: return "UnknownField";
    case ErrorCode::InvalidValueObject: return "InvalidValueObject";
    case ErrorCode::PostTargetTooDeep: return "PostTargetTooDeep";
    case ErrorCode::PostOnWildcard: return "PostOnWildcard";
    case ErrorCode::PutOnWildcard: return "PutOnWildcard";
    case ErrorCode::PutOnPropTerminal: return "PutOnPropTerminal";
    case ErrorCode::DeleteOnWildcard: return "DeleteOnWildcard";
    case ErrorCode::DeleteWithPropertyPath: return "DeleteWithPropertyPath";
    case ErrorCode::DepthOutOfRange: return "DepthOutOfRange";
    case ErrorCode::UpstreamUnreachable: return "UpstreamUnreachable";
    case ErrorCode::UpstreamError: return "UpstreamError";
    case ErrorCode::MalformedResults: return "MalformedResults";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::MethodNotAllowed: return "MethodNotAllowed";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Internal";
}

constexpr int http_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotFound: return 404;
    case ErrorCode::MethodNotAllowed: return 405;
    case ErrorCode::UpstreamUnreachable:
    case ErrorCode::UpstreamError:
    case ErrorCode::MalformedResults: return 502;
    case ErrorCode::ParseError:
    case ErrorCode::Internal: return 500;
    default: return 400;
  }
}

/// All codes, for exhaustive mapping tests.
constexpr std::array<ErrorCode, 29> all_error_codes() {
  return {ErrorCode::UnknownEntryPoint, ErrorCode::EmptyClass, ErrorCode::MalformedSegment,
          ErrorCode::MalformedRql, ErrorCode::UnsupportedRqlOperator, ErrorCode::DuplicateAggregate,
          ErrorCode::UnbalancedParens, ErrorCode::UnknownOperator, ErrorCode::EmptyAlternative,
          ErrorCode::UnknownPrefix, ErrorCode::UnsupportedShape, ErrorCode::SortKeyOnObjectView,
          ErrorCode::MalformedBody, ErrorCode::UnknownField, ErrorCode::InvalidValueObject,
          ErrorCode::PostTargetTooDeep, ErrorCode::PostOnWildcard, ErrorCode::PutOnWildcard,
          ErrorCode::PutOnPropTerminal, ErrorCode::DeleteOnWildcard,
          ErrorCode::DeleteWithPropertyPath, ErrorCode::DepthOutOfRange,
          ErrorCode::UpstreamUnreachable, ErrorCode::UpstreamError, ErrorCode::MalformedResults,
          ErrorCode::NotFound, ErrorCode::MethodNotAllowed, ErrorCode::ParseError,
          ErrorCode::Internal};
}

}  // namespace spa
