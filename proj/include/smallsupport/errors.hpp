#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace smallsupport {

// Malformed or invalid input data: broken files, tables that are not Latin,
// point sets that are not designs, mismatched sizes. CLI exit code 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Structurally valid input that falls outside an operation's hypothesis:
// identity permutations, degenerate degrees, enumeration ceilings.
// CLI exit code 2.
class HypothesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A property that holds by theorem failed on concrete data. This never
// signals bad input; it signals a bug. CLI exit code 3.
class PropertyViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class OrderOneError : public HypothesisError {
 public:
  OrderOneError() : HypothesisError("order 1: witness hypothesis unsatisfiable") {}
};

class DegenerateDegreeError : public HypothesisError {
 public:
  DegenerateDegreeError()
      : HypothesisError("degree < 2: log n is not positive") {}
};

class HypothesisFailsError : public HypothesisError {
 public:
  explicit HypothesisFailsError(const std::string& what) : HypothesisError(what) {}
};

class TooLargeError : public HypothesisError {
 public:
  explicit TooLargeError(const std::string& what) : HypothesisError(what) {}
};

class IdentityInputError : public HypothesisError {
 public:
  IdentityInputError() : HypothesisError("identity permutation not accepted here") {}
};

class SizeMismatchError : public InputError {
 public:
  explicit SizeMismatchError(const std::string& what) : InputError(what) {}
};

class NotLatinError : public InputError {
 public:
  enum class Axis { Row, Column };

  NotLatinError(Axis axis, std::size_t index, std::uint32_t symbol)
      : InputError((axis == Axis::Row ? "row " : "column ") + std::to_string(index) +
                   ": symbol " + std::to_string(symbol) + " repeated"),
        axis_(axis),
        index_(index),
        symbol_(symbol) {}

  Axis axis() const { return axis_; }
  std::size_t index() const { return index_; }
  std::uint32_t symbol() const { return symbol_; }

 private:
  Axis axis_;
  std::size_t index_;
  std::uint32_t symbol_;
};

class NotAutomorphismError : public InputError {
 public:
  NotAutomorphismError() : InputError("permutation is not an automorphism of the square") {}
};

class ClosureViolationError : public PropertyViolation {
 public:
  explicit ClosureViolationError(const std::string& what) : PropertyViolation(what) {}
};

class BadLineSizeError : public InputError {
 public:
  BadLineSizeError(std::size_t line_index, const std::string& what)
      : InputError("line " + std::to_string(line_index) + ": " + what),
        line_index_(line_index) {}

  std::size_t line_index() const { return line_index_; }

 private:
  std::size_t line_index_;
};

class PairCoverageError : public InputError {
 public:
  enum class Kind { Never, Twice };

  PairCoverageError(Kind kind, std::uint32_t a, std::uint32_t b)
      : InputError("pair {" + std::to_string(a) + "," + std::to_string(b) + "} " +
                   (kind == Kind::Never ? "lies on no line" : "lies on more than one line")),
        kind_(kind),
        a_(a),
        b_(b) {}

  Kind kind() const { return kind_; }
  std::uint32_t first_point() const { return a_; }
  std::uint32_t second_point() const { return b_; }

 private:
  Kind kind_;
  std::uint32_t a_;
  std::uint32_t b_;
};

class NotStsError : public InputError {
 public:
  explicit NotStsError(const std::string& what) : InputError(what) {}
};

}  // namespace smallsupport
