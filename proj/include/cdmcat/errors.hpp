#pragma once

#include <stdexcept>
#include <string>

namespace cdmcat {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// -- input / document errors --------------------------------------------

class ParseError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// -- taxonomy / label errors --------------------------------------------

class UnknownCategoryError : public Error {
 public:
  explicit UnknownCategoryError(const std::string& id)
      : Error("unknown category id: " + id), id_(id) {}
  const std::string& id() const { return id_; }

 private:
  std::string id_;
};

// -- relevance / aggregation errors -------------------------------------

class NotACandidateError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class EmptyEnsembleError : public Error {
 public:
  using Error::Error;
};

// -- metrics errors ------------------------------------------------------

class DegenerateSampleError : public Error {
 public:
  using Error::Error;
};

class EmptyExpertError : public Error {
 public:
  using Error::Error;
};

class NoValidSamplesError : public Error {
 public:
  using Error::Error;
};

// -- client / transport errors -------------------------------------------

class InvalidTierError : public Error {
 public:
  using Error::Error;
};

class AncestorMismatchError : public Error {
 public:
  using Error::Error;
};

class TransportError : public Error {
 public:
  using Error::Error;
};

class MalformedResponseError : public Error {
 public:
  using Error::Error;
};

class StorageError : public Error {
 public:
  using Error::Error;
};

// -- harness errors -------------------------------------------------------

class InvalidExpertLabelError : public Error {
 public:
  using Error::Error;
};

class UnknownMemberError : public Error {
 public:
  using Error::Error;
};

class NoCachedRelevanceError : public Error {
 public:
  using Error::Error;
};

}  // namespace cdmcat
