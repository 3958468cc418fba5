#pragma once

#include <algorithm>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace twcubic {

/// Outcome of one verification; witness explains a failure (or a skip).
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string witness;
};

inline bool all_pass(const std::vector<CheckResult>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

inline void append(std::vector<CheckResult>& into, const std::vector<CheckResult>& more) {
  into.insert(into.end(), more.begin(), more.end());
}

namespace detail {

template <class T>
void show(std::ostream& os, const T& v) {
  if constexpr (requires { os << v; }) {
    os << v;
  } else {
    os << '(';
    bool first = true;
    for (const auto& x : v) {
      os << (first ? "" : ",");
      show(os, x);
      first = false;
    }
    os << ')';
  }
}

}  // namespace detail

/// Check that `got == want`, with both values in the witness on failure.
template <class A, class B>
CheckResult expect_eq(std::string name, const A& got, const B& want) {
  CheckResult c{std::move(name), got == want, {}};
  if (!c.pass) {
    std::ostringstream os;
    os << "got ";
    detail::show(os, got);
    os << ", expected ";
    detail::show(os, want);
    c.witness = os.str();
  }
  return c;
}

}  // namespace twcubic
