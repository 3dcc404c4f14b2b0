#pragma once

#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace blockscope {

enum class Errc {
  malformed_permutation,
  enumeration_bound_exceeded,
  division_by_zero,
  bad_exponent,
  not_algebraic_integer,
  lifting_failure,
  defect_class_not_found,
  correspondent_not_found,
  ambiguous_correspondent,
  not_cyclic_defect,
  size_bound_exceeded,
  parse_error,
  duplicate_name,
  unknown_command,
  proven_statement_violated,
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

const char* errc_name(Errc code);

// Global cap on the number of elements any one group may enumerate.
// Overridable via the BLOCKSCOPE_MAX_ORDER environment variable (see CLI).
inline std::atomic<long>& max_group_order() {
  static std::atomic<long> bound{20000};
  return bound;
}

}  // namespace blockscope
