#pragma once

#include <stdexcept>
#include <string>

namespace tbmap {

/// Malformed configuration or input file.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Failure while executing a run.
class RunError : public std::runtime_error {
 public:
  explicit RunError(const std::string& what) : std::runtime_error(what) {}
};

/// Exhaustive search refused: the chromosome space exceeds the cap.
class SearchSpaceExceeded : public RunError {
 public:
  SearchSpaceExceeded(double search_space, double cap)
      : RunError("search space " + std::to_string(search_space) +
                 " exceeds cap " + std::to_string(cap)),
        search_space_(search_space),
        cap_(cap) {}

  double search_space() const { return search_space_; }
  double cap() const { return cap_; }

 private:
  double search_space_;
  double cap_;
};

}  // namespace tbmap
