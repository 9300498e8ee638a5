// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PEBBLE_ERROR_HPP
#define PEBBLE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace pebble {

enum class errc {
  // parameters
  non_positive_lambda,
  negative_parameter,
  parameter_condition_violated,
  lambda_not_one,
  no_feasible_lambda,
  mixed_hyperedge_sizes,
  // input documents
  parse_error,
  dangling_reference,
  duplicate_incidence,
  duplicate_name,
  // game moves
  insufficient_pebbles,
  source_has_no_pebble,
  source_not_endpoint,
  already_accepted,
  empty_target_pebbles,
  path_not_in_d,
  not_a_failure_state,
  invariant_violated,
  // oracles and generators
  instance_too_large,
  not_sparse_input,
  ground_set_mismatch,
  infeasible_size,
  post_check_failed,
};

constexpr std::string_view errc_name(errc code) noexcept {
  switch (code) {
    case errc::non_positive_lambda: return "NonPositiveLambda";
    case errc::negative_parameter: return "NegativeParameter";
    case errc::parameter_condition_violated: return "ParameterConditionViolated";
    case errc::lambda_not_one: return "LambdaNotOne";
    case errc::no_feasible_lambda: return "NoFeasibleLambda";
    case errc::mixed_hyperedge_sizes: return "MixedHyperedgeSizes";
    case errc::parse_error: return "ParseError";
    case errc::dangling_reference: return "DanglingReference";
    case errc::duplicate_incidence: return "DuplicateIncidence";
    case errc::duplicate_name: return "DuplicateName";
    case errc::insufficient_pebbles: return "InsufficientPebbles";
    case errc::source_has_no_pebble: return "SourceHasNoPebble";
    case errc::source_not_endpoint: return "SourceNotEndpoint";
    case errc::already_accepted: return "AlreadyAccepted";
    case errc::empty_target_pebbles: return "EmptyTargetPebbles";
    case errc::path_not_in_d: return "PathNotInD";
    case errc::not_a_failure_state: return "NotAFailureState";
    case errc::invariant_violated: return "InvariantViolated";
    case errc::instance_too_large: return "InstanceTooLarge";
    case errc::not_sparse_input: return "NotSparseInput";
    case errc::ground_set_mismatch: return "GroundSetMismatch";
    case errc::infeasible_size: return "InfeasibleSize";
    case errc::post_check_failed: return "PostCheckFailed";
  }
  return "Unknown";
}

/// Single exception type for the library; `code()` tells callers what failed.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace pebble

#endif  // PEBBLE_ERROR_HPP
