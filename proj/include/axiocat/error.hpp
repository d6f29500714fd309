#pragma once

#include <stdexcept>
#include <string>

namespace axiocat {

enum class ErrorKind {
  shape,
  domain,
  numerical,
  degenerate_data,
  ambiguous_column,
  incomplete_bundle,
  precondition_failed,
  incomparable,
  disconnected_graph,
  embedding_rank,
  not_separable,
  undefined_ratio,
  stratify,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::shape: return "ShapeError";
    case ErrorKind::domain: return "DomainError";
    case ErrorKind::numerical: return "NumericalError";
    case ErrorKind::degenerate_data: return "DegenerateData";
    case ErrorKind::ambiguous_column: return "AmbiguousColumn";
    case ErrorKind::incomplete_bundle: return "IncompleteBundle";
    case ErrorKind::precondition_failed: return "PreconditionFailed";
    case ErrorKind::incomparable: return "Incomparable";
    case ErrorKind::disconnected_graph: return "DisconnectedGraph";
    case ErrorKind::embedding_rank: return "EmbeddingRankError";
    case ErrorKind::not_separable: return "NotSeparable";
    case ErrorKind::undefined_ratio: return "UndefinedRatio";
    case ErrorKind::stratify: return "StratifyError";
  }
  return "Error";
}

// Base of every error the library throws. The kind lets callers (the CLI in
// particular) map failures to exit codes without a catch per subclass.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

template <ErrorKind K>
class KindedError : public Error {
 public:
  explicit KindedError(const std::string& what) : Error(K, what) {}
};

using ShapeError = KindedError<ErrorKind::shape>;
using DomainError = KindedError<ErrorKind::domain>;
using NumericalError = KindedError<ErrorKind::numerical>;
using DegenerateData = KindedError<ErrorKind::degenerate_data>;
using AmbiguousColumn = KindedError<ErrorKind::ambiguous_column>;
using IncompleteBundle = KindedError<ErrorKind::incomplete_bundle>;
using PreconditionFailed = KindedError<ErrorKind::precondition_failed>;
using Incomparable = KindedError<ErrorKind::incomparable>;
using EmbeddingRankError = KindedError<ErrorKind::embedding_rank>;
using NotSeparable = KindedError<ErrorKind::not_separable>;
using UndefinedRatio = KindedError<ErrorKind::undefined_ratio>;
using StratifyError = KindedError<ErrorKind::stratify>;

}  // namespace axiocat
