#pragma once

#include <stdexcept>
#include <string>

#include "wreath/bignat.hpp"

namespace wreath {

// A label's node structure does not match the tree it claims to live on.
class ShapeMismatch : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

class InvalidLabel : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

// Base for every "configured cap exceeded" condition; the CLI maps it to
// exit code 3.
class LimitError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

class CountExceedsLimit : public LimitError
{
public:
  CountExceedsLimit(BigNat predicted, BigNat limit)
  : LimitError("predicted irreducible count " + predicted.str() +
               " exceeds limit " + limit.str()),
    predicted_(std::move(predicted))
  {}

  const BigNat& predicted() const { return predicted_; }

private:
  BigNat predicted_;
};

class CapExceeded : public LimitError
{
public:
  using LimitError::LimitError;
};

class BoundOverflowGuard : public LimitError
{
public:
  using LimitError::LimitError;
};

}  // namespace wreath
