#pragma once

#include <stdexcept>
#include <string>

namespace igg {

enum class ErrorCode {
  invalid_spec,
  parse_error,
  order_cap_exceeded,
  subgroup_cap_exceeded,
  vertex_cap_exceeded,
  prime_does_not_divide_order,
  not_a_p_group,
  mixed_lattice,
  index_out_of_range,
  out_of_range,
  not_odd_power_of_two,
  precondition_violated,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  ErrorCode code() const { return code_; }

  // short machine-parsable tag, used in the CLI "error[tag]:" prefix
  const char* tag() const {
    switch (code_) {
      case ErrorCode::invalid_spec: return "spec";
      case ErrorCode::parse_error: return "parse";
      case ErrorCode::order_cap_exceeded: return "cap";
      case ErrorCode::subgroup_cap_exceeded: return "cap";
      case ErrorCode::vertex_cap_exceeded: return "cap";
      case ErrorCode::prime_does_not_divide_order: return "domain";
      case ErrorCode::not_a_p_group: return "domain";
      case ErrorCode::mixed_lattice: return "domain";
      case ErrorCode::index_out_of_range: return "domain";
      case ErrorCode::out_of_range: return "domain";
      case ErrorCode::not_odd_power_of_two: return "domain";
      case ErrorCode::precondition_violated: return "domain";
    }
    return "domain";
  }

  bool is_cap() const {
    return code_ == ErrorCode::order_cap_exceeded || code_ == ErrorCode::subgroup_cap_exceeded ||
           code_ == ErrorCode::vertex_cap_exceeded;
  }
  bool is_parse() const {
    return code_ == ErrorCode::parse_error || code_ == ErrorCode::invalid_spec;
  }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) { throw Error(code, msg); }

} // namespace igg
