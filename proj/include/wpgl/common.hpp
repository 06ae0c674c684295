#ifndef WPGL_COMMON_HPP
#define WPGL_COMMON_HPP

#include <stdexcept>
#include <string>

namespace wpgl {

// Library-level error: precondition violations, malformed input, math
// failures (singular matrix, division by zero). The CLI maps these to
// exit code 2 unless noted otherwise.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw Error(msg);
}

}  // namespace wpgl

#endif
