#pragma once

#include <stdexcept>
#include <string>

namespace coadjoint {

/// Malformed or out-of-range input: bad type strings, rank mismatches,
/// non-dominant highest weights, off-sphere points and the like.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The weight does not integrate to a character of the stabilizer.
class NotQuantizable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A well-formed request outside the hypotheses an algorithm supports.
class Unsupported : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Torus point too close to the singular set of the Weyl denominator.
class SingularTorusPoint : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace coadjoint
