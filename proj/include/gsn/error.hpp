// Copyright 2026 The gsngame Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gsn {

enum class ErrorCode {
  NonPositiveChannelNoise,
  NegativeParameter,
  InfeasiblePower,
  DegenerateObservation,
  RequiresTransmitters,
  ZeroObservationPower,
  DegenerateCEO,
  RateDomain,
  NotPSD,
  ZeroSamples,
  NoAdversaries,
  InvalidGrid,
  DegenerateCorrelation,
  DegenerateMarginal,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries a code so callers (the CLI in
/// particular) can map it onto an exit status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gsn
