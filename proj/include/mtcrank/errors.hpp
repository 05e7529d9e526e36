#ifndef MTCRANK_ERRORS_HPP
#define MTCRANK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mtcrank
{

/// Base class of every error raised by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

// Malformed input. The CLI maps these to exit status 2.
class InputError : public Error
{
public:
  using Error::Error;
};

// Well-formed input that violates a mathematical requirement. Exit status 1.
class DomainError : public Error
{
public:
  using Error::Error;
};

class InvalidDegree : public InputError
{
public:
  using InputError::InputError;
};

class InvalidPermutation : public InputError
{
public:
  using InputError::InputError;
};

class DegreeMismatch : public InputError
{
public:
  using InputError::InputError;
};

class ParseError : public InputError
{
public:
  using InputError::InputError;
};

class UnknownLabel : public InputError
{
public:
  using InputError::InputError;
};

class DuplicateLabel : public InputError
{
public:
  using InputError::InputError;
};

class InvalidRational : public InputError
{
public:
  using InputError::InputError;
};

class OutOfRange : public InputError
{
public:
  using InputError::InputError;
};

class NotPrime : public InputError
{
public:
  using InputError::InputError;
};

class UnknownElement : public InputError
{
public:
  using InputError::InputError;
};

class GroupTooLarge : public DomainError
{
public:
  using DomainError::DomainError;
};

class TooLarge : public DomainError
{
public:
  using DomainError::DomainError;
};

class DualityViolation : public DomainError
{
public:
  using DomainError::DomainError;
};

/// Raised when the two independent routes to the same number disagree.
/// Never expected on valid data; indicates a bug.
class InconsistencyError : public DomainError
{
public:
  using DomainError::DomainError;
};

} // namespace mtcrank

#endif
