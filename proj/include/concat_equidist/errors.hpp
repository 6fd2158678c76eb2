#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace concat_equidist {

// Bad argument to a library call (base out of range, n = 0, empty input ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Membership of a tail value could not be decided within the digit budget.
class UndecidedError : public std::runtime_error {
 public:
  UndecidedError(const std::string& what, std::vector<int> prefix)
      : std::runtime_error(what), prefix_(std::move(prefix)) {}

  const std::vector<int>& prefix() const noexcept { return prefix_; }

 private:
  std::vector<int> prefix_;
};

}  // namespace concat_equidist
