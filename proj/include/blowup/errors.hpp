#pragma once

#include <stdexcept>
#include <string>

namespace blowup {

// Base for all computational failures that callers may want to catch and
// turn into per-statement diagnostics instead of aborting a session.
struct kernel_error : std::runtime_error {
  explicit kernel_error(const std::string& what) : std::runtime_error(what) {}
};

struct ring_mismatch_error : kernel_error {
  explicit ring_mismatch_error(const std::string& what) : kernel_error(what) {}
};

// Depth of the zero module is undefined; signaled distinctly.
struct zero_module_error : kernel_error {
  explicit zero_module_error(const std::string& what) : kernel_error(what) {}
};

// Saturation failed to stabilize within the iteration cap.
struct saturation_limit_error : kernel_error {
  explicit saturation_limit_error(const std::string& what) : kernel_error(what) {}
};

}  // namespace blowup
