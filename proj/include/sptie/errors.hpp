#ifndef SPTIE_ERRORS_HPP
#define SPTIE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sptie {

/// Input text does not conform to its declared format.
class ParseError : public std::runtime_error
{
public:
  ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line)
  {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// Well-formed input that violates a data-model invariant.
class ValidationError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error
{
public:
  using std::domain_error::domain_error;
};

/// Vector length does not match the candidate count.
class DimensionError : public std::length_error
{
public:
  using std::length_error::length_error;
};

/// Exhaustive procedure asked to run beyond its configured size.
class CapacityError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// A polynomial-time solver was handed an instance outside the cases it covers.
class NotApplicableError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Caller broke a documented precondition.
class ContractError : public std::logic_error
{
public:
  using std::logic_error::logic_error;
};

} // namespace sptie

#endif // SPTIE_ERRORS_HPP
