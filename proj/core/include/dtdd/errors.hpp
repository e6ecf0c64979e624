// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace dtdd {

/// Invalid or infeasible simulation configuration (bad grid size, too many
/// UEs, unknown config keys, ...).
class ConfigurationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A caller violated an operation's precondition, e.g. assembling a
/// precoder matrix with more rows than transmit antennas.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The compound channel matrix is numerically rank deficient.
class SingularChannelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The power-control solver failed to converge or reported unboundedness.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dtdd
