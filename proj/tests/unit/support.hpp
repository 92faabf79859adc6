#pragma once

#include <optional>

#include "rbcm/error.hpp"

namespace rbcm::test {

// Kind of the Error thrown by f, nullopt when it returns normally.
template <class F>
std::optional<ErrorKind> thrown_kind(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

}  // namespace rbcm::test
