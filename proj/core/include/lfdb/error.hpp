#pragma once

#include <stdexcept>
#include <string>

namespace lfdb {

/// Input outside an operation's mathematical domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Evaluation requested at a pole of the function.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Operation is not implemented for this kind of object.
class UnsupportedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotFoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A resource is held by another writer.
class BusyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lfdb
