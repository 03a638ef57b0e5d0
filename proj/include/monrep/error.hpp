// monrep - exact representation theory for finite monoids
// SPDX-License-Identifier: Apache-2.0

#ifndef MONREP_ERROR_HPP
#define MONREP_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace monrep {

//! Base class for every error thrown by this library.
struct Error : std::runtime_error {
  explicit Error(std::string const& msg) : std::runtime_error(msg) {}
};

//! A multiplication table has no two-sided identity element.
struct NoIdentityError : Error {
  NoIdentityError() : Error("multiplication table has no identity element") {}
};

//! A multiplication table fails associativity; the witness triple satisfies
//! (a * b) * c != a * (b * c).
struct NotAssociativeError : Error {
  std::uint32_t a, b, c;
  NotAssociativeError(std::uint32_t a_, std::uint32_t b_, std::uint32_t c_)
      : Error("multiplication table is not associative at ("
              + std::to_string(a_) + ", " + std::to_string(b_) + ", "
              + std::to_string(c_) + ")"),
        a(a_), b(b_), c(c_) {}
};

//! A generated monoid exceeded the configured element cap.
struct SizeLimitError : Error {
  explicit SizeLimitError(std::size_t cap)
      : Error("generated monoid exceeds the size cap of "
              + std::to_string(cap)) {}
};

//! The closure of a seed set is not a group of units.
struct NotAGroupError : Error {
  explicit NotAGroupError(std::string const& why)
      : Error("seed set does not generate a group: " + why) {}
};

//! A matrix entry index is outside the entry field.
struct InvalidFieldElementError : Error {
  explicit InvalidFieldElementError(std::uint64_t value, std::uint64_t q)
      : Error("entry " + std::to_string(value)
              + " is not an element of a field of order " + std::to_string(q)) {}
};

//! The coefficient characteristic divides the subgroup order, so the
//! averaging idempotent does not exist.
struct CharDividesSubgroupError : Error {
  CharDividesSubgroupError(std::uint64_t p, std::size_t k)
      : Error("characteristic " + std::to_string(p) + " divides |K| = "
              + std::to_string(k)) {}
};

//! Proposed matrices fail the homomorphism laws of a representation.
struct NotARepresentationError : Error {
  explicit NotARepresentationError(std::string const& why)
      : Error("matrices do not form a representation: " + why) {}
};

//! Internal consistency failure: the convolution of two double-coset
//! indicators was not constant on double cosets.
struct NonConstantConvolutionError : Error {
  NonConstantConvolutionError()
      : Error("convolution of coset indicators is not coset-constant "
              "(internal invariant violated)") {}
};

//! The randomised irreducibility test gave up before reaching a verdict.
struct InconclusiveError : Error {
  InconclusiveError()
      : Error("irreducibility test inconclusive after the attempt budget") {}
};

//! A module of dimension zero was passed where a verdict is required.
struct ZeroModuleError : Error {
  ZeroModuleError() : Error("dimension-zero module has no irreducibility verdict") {}
};

//! Structured input (a monoid file or a CLI argument) failed validation.
struct ParseError : Error {
  explicit ParseError(std::string const& what_failed)
      : Error("invalid input: " + what_failed) {}
};

}  // namespace monrep

#endif  // MONREP_ERROR_HPP
