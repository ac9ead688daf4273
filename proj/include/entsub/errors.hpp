#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace entsub {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside its documented domain (negative count, index out
/// of bounds, substitution parameter outside [0, d-2], ...).
class RangeError : public Error {
  public:
    using Error::Error;
};

/// An occupation vector does not sum to the required total.
class TotalMismatch : public Error {
  public:
    using Error::Error;
};

/// Two states (or a state and a matrix shape) disagree on local dimensions.
class DimsMismatch : public Error {
  public:
    using Error::Error;
};

/// A per-site coefficient list has the wrong length.
class ShapeMismatch : public Error {
  public:
    using Error::Error;
};

/// A site subset is malformed (empty, duplicate, out of range, too large).
class BadPartition : public Error {
  public:
    using Error::Error;
};

/// An operation that needs a nonzero state received the zero state.
class ZeroState : public Error {
  public:
    using Error::Error;
};

/// A generator has fewer than two terms, so no orthocomplement rows exist.
class TooFewTerms : public Error {
  public:
    using Error::Error;
};

/// A spec/parameter combination is inconsistent (e.g. a substitution
/// parameter supplied together with heterogeneous local dimensions).
class SpecMismatch : public Error {
  public:
    using Error::Error;
};

/// A decomposition's scheme tag does not match its stored basis payload.
class SchemeUnsupported : public Error {
  public:
    using Error::Error;
};

/// Candidate product-basis members failed the span-rank certificate.
/// `colliding` lists the 0-based member indices that did not enlarge the span.
class RankDeficient : public Error {
  public:
    RankDeficient(const std::string& what, std::vector<std::size_t> colliding)
        : Error(what), colliding_(std::move(colliding)) {}
    const std::vector<std::size_t>& colliding() const { return colliding_; }

  private:
    std::vector<std::size_t> colliding_;
};

/// Point selection kept failing the span certificate after bounded retries.
class ExhaustedRetries : public Error {
  public:
    using Error::Error;
};

/// Malformed serialized input (JSON shape, rational string, index list).
class ParseError : public Error {
  public:
    using Error::Error;
};

} // namespace entsub
