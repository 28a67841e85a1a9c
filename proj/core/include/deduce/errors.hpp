#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace deduce {

// Root of every error the library reports.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class InvalidAtom : public Error {
 public:
  explicit InvalidAtom(const std::string& name)
      : Error("invalid atom name '" + name + "'"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class MissingAtom : public Error {
 public:
  explicit MissingAtom(const std::string& name)
      : Error("valuation has no value for atom '" + name + "'"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class TooManyAtoms : public Error {
 public:
  TooManyAtoms(std::size_t count, std::size_t limit)
      : Error("formula has " + std::to_string(count) + " atoms; the limit is " +
              std::to_string(limit)),
        count_(count),
        limit_(limit) {}
  std::size_t count() const noexcept { return count_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t count_;
  std::size_t limit_;
};

class UnknownRule : public Error {
 public:
  explicit UnknownRule(const std::string& name)
      : Error("unknown rule '" + name + "'"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class UnknownPredicate : public Error {
 public:
  explicit UnknownPredicate(const std::string& name)
      : Error("model has no extension for predicate '" + name + "'"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class InvalidSyllogism : public Error {
 public:
  using Error::Error;
};

// A search or output would exceed the configured resource bounds.
class CapacityError : public Error {
 public:
  using Error::Error;
};

}  // namespace deduce
