#ifndef CURRENTS_ERRORS_HPP
#define CURRENTS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace currents {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct NonFiniteValue : Error {
  using Error::Error;
};

struct EpsilonTooLarge : Error {
  using Error::Error;
};

struct DegreeUnderflow : Error {
  using Error::Error;
};

struct NotTopDegree : Error {
  using Error::Error;
};

struct ChartCountZero : Error {
  using Error::Error;
};

struct DegenerateCrossing : Error {
  using Error::Error;
};

struct NonIsolated : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

struct ValidationError : Error {
  using Error::Error;
};

// Quadrature ran past its box budget without converging.
struct QuadratureBudget : Error {
  using Error::Error;
};

}  // namespace currents

#endif
