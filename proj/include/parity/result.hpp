#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace parity {

// Raised when a construction that is supposed to be verified contradicts its
// own postcondition. Callers treat this as an internal consistency alarm,
// never as bad user input.
class soundness_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Value-or-reason result. The reason names the precondition or hypothesis
// that failed, so callers can surface it verbatim.
template <typename T>
class Result {
 public:
  Result(T value) : state_(std::in_place_index<0>, std::move(value)) {}

  static Result failure(std::string why) {
    return Result(std::in_place_index<1>, std::move(why));
  }

  explicit operator bool() const { return state_.index() == 0; }
  bool ok() const { return state_.index() == 0; }

  const T& operator*() const& { return std::get<0>(state_); }
  T& operator*() & { return std::get<0>(state_); }
  const T* operator->() const { return &std::get<0>(state_); }
  T&& take() && { return std::get<0>(std::move(state_)); }

  const std::string& error() const { return std::get<1>(state_); }

 private:
  template <typename... A>
  explicit Result(std::in_place_index_t<1> tag, A&&... a)
      : state_(tag, std::forward<A>(a)...) {}

  std::variant<T, std::string> state_;
};

}  // namespace parity
