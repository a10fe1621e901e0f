#pragma once

#include <stdexcept>
#include <string>

namespace qck {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// malformed user input: words, flags, JSON documents
class ParseError : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// everything below signals data that parsed but is unusable
class InvalidData : public Error {
 public:
  using Error::Error;
};

class NonIntegralPairing : public InvalidData {
 public:
  using InvalidData::InvalidData;
};

class IndexOutOfRange : public InvalidData {
 public:
  using InvalidData::InvalidData;
};

class RankTooSmall : public InvalidData {
 public:
  using InvalidData::InvalidData;
};

class UnknownElement : public InvalidData {
 public:
  using InvalidData::InvalidData;
};

class MismatchedType : public InvalidData {
 public:
  using InvalidData::InvalidData;
};

class NotSeminormal : public InvalidData {
 public:
  using InvalidData::InvalidData;
};

class UnsupportedAlphabet : public InvalidData {
 public:
  using InvalidData::InvalidData;
};

class InvalidPair : public InvalidData {
 public:
  using InvalidData::InvalidData;
};

}  // namespace qck
