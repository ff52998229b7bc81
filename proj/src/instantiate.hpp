#pragma once

#include "elt/numbers.hpp"

// Expands X once per shipped layer ring.
#define ELT_FOR_EACH_RING(X) \
  X(::elt::Integer)          \
  X(::elt::Rational)         \
  X(::elt::GaussianRational)

#define ELT_FOR_EACH_FIELD(X) \
  X(::elt::Rational)          \
  X(::elt::GaussianRational)
