#pragma once

#include <stdexcept>
#include <string>

namespace faqai {

/// Base class of every error raised by the engine.
class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed CSV or query input.
class ParseError : public Error
{
  public:
    using Error::Error;
};

/// The join hypergraph admits no hypertree decomposition.
class CyclicJoin : public Error
{
  public:
    CyclicJoin() : Error("cyclic join: no table can be eliminated") { }
    using Error::Error;
};

/// An exact count no longer fits the 128-bit counter.
class OverflowError : public Error
{
  public:
    using Error::Error;
};

/// A size cap (materialization rows or carrier entries) was exceeded.
class CapExceeded : public Error
{
  public:
    using Error::Error;
};

/// A query that the engine refuses to evaluate. `what()` carries the reason.
class ValidationError : public Error
{
  public:
    using Error::Error;
};

class UnknownName : public Error
{
  public:
    using Error::Error;
};

}
