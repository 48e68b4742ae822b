#ifndef SCF_COMMON_HPP
#define SCF_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace scf {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

// Domain/usage errors: bad parameters, unsupported ranges. CLI maps these to exit code 1.
class error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Arithmetic impossibilities that signal a bug, not bad input. CLI maps these to exit code 2.
class internal_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

std::string to_string(u128 v);
u128 parse_u128(const std::string& s);

inline long double to_ld(u128 v) { return static_cast<long double>(v); }

} // namespace scf

#endif
