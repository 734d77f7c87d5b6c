#pragma once

#include <stdexcept>
#include <string>

namespace torelli {

// Base class for all errors raised by this library.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed word text (bad token, zero exponent, stray characters).
struct syntax_error : error {
  using error::error;
};

// A generator index lies outside the range admitted by the surface
// parameters (x-indices run 1..g, y-indices 1..b-1).
struct index_error : error {
  using error::error;
};

// An operation that needs an even projection length was handed a word
// whose projection has odd length.
struct parity_error : error {
  using error::error;
};

// A word was passed to a routine that only accepts members of the
// kernel subgroup it certifies.
struct membership_error : error {
  using error::error;
};

// Structural precondition failed: dimension mismatch, exponent-sum
// constraint violated, inconsistent coset table, and so on.
struct constraint_error : error {
  using error::error;
};

}  // namespace torelli
