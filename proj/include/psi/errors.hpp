// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace psi {

/// Base class for all library failures.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Invalid shape parameters, config fields, or unsupported combinations.
class ConfigError : public Error {
  public:
    using Error::Error;
};

class PointNotInterior : public Error {
  public:
    using Error::Error;
};

class DegenerateDomain : public Error {
  public:
    using Error::Error;
};

class EmptyInterior : public Error {
  public:
    using Error::Error;
};

class UnsupportedDimension : public Error {
  public:
    using Error::Error;
};

class NonFiniteSample : public Error {
  public:
    using Error::Error;
};

class NormalsUnavailable : public Error {
  public:
    using Error::Error;
};

class HessianUnavailable : public Error {
  public:
    using Error::Error;
};

class StepExitsDomain : public Error {
  public:
    using Error::Error;
};

/// Evaluation refused because the point sits inside the boundary guard layer.
class NumericUnderflow : public Error {
  public:
    using Error::Error;
};

class RadiusOutsideRings : public Error {
  public:
    using Error::Error;
};

class BracketSignFailure : public Error {
  public:
    using Error::Error;
};

class MaxIterations : public Error {
  public:
    using Error::Error;
};

class LineSearchStall : public Error {
  public:
    using Error::Error;
};

class DisagreementExceedsTolerance : public Error {
  public:
    using Error::Error;
};

class CutoffTooSmall : public Error {
  public:
    using Error::Error;
};

}  // namespace psi
