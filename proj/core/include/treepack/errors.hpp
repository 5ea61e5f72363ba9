#pragma once

#include <stdexcept>
#include <string>

namespace treepack {

/// Invalid instance data, unknown labels, or bad parameters supplied by the
/// caller.  The command line tool maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive scan would exceed the configured caps.  This is a distinct
/// error, never a silent truncation; the command line tool maps it to exit
/// code 3.
class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace treepack
