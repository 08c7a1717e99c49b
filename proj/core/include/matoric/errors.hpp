#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace matoric {

/// Base class for all library errors. `input_error()` distinguishes bad
/// input (CLI exit 2) from failed verification (CLI exit 1).
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg, bool input = true)
      : std::runtime_error(msg), input_(input) {}
  bool input_error() const { return input_; }

 private:
  bool input_;
};

class EmptyBasesError : public Error {
 public:
  EmptyBasesError() : Error("matroid has no bases") {}
};

namespace detail {
inline std::string set_text(const std::vector<int>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}
}  // namespace detail

class UnequalCardinalityError : public Error {
 public:
  UnequalCardinalityError(std::vector<int> a, std::vector<int> b)
      : Error("bases have unequal cardinality: " + detail::set_text(a) + " vs " +
              detail::set_text(b)),
        first(std::move(a)),
        second(std::move(b)) {}
  std::vector<int> first, second;
};

/// Exchange axiom violation with the witness triple (B, B', x): no y in
/// B' \ B makes (B u {y}) \ {x} a basis.
class ExchangeError : public Error {
 public:
  ExchangeError(std::vector<int> a, std::vector<int> b, int elem)
      : Error("exchange axiom fails for B=" + detail::set_text(a) + ", B'=" + detail::set_text(b) +
              ", x=" + std::to_string(elem)),
        first(std::move(a)),
        second(std::move(b)),
        x(elem) {}
  std::vector<int> first, second;
  int x;
};

class BadParamsError : public Error {
 public:
  explicit BadParamsError(const std::string& msg) : Error(msg) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& msg) : Error("parse error: " + msg) {}
};

class UnknownVariableError : public Error {
 public:
  explicit UnknownVariableError(const std::string& var)
      : Error("variable not in order domain: " + var) {}
};

class AmbientMismatchError : public Error {
 public:
  AmbientMismatchError() : Error("binomial sets have different ambient variable sets") {}
};

class ColoopAnchorError : public Error {
 public:
  ColoopAnchorError() : Error("anchor element is a coloop (gamma = 0)") {}
};

class DegenerateAnchorError : public Error {
 public:
  explicit DegenerateAnchorError(const std::string& msg) : Error(msg) {}
};

class UnbalancedSplitError : public Error {
 public:
  UnbalancedSplitError() : Error("binomial sides have unbalanced low/high split", false) {}
};

class BlockMismatchError : public Error {
 public:
  explicit BlockMismatchError(const std::string& msg) : Error(msg) {}
};

/// A claimed identity failed its check (oracle disagreement, bad witness, ...).
class VerificationError : public Error {
 public:
  explicit VerificationError(const std::string& msg) : Error(msg, false) {}
};

}  // namespace matoric
