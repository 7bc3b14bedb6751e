#pragma once

#include <string>
#include <vector>

namespace tenscat {

/// Suite result with one entry per check, residual and indices included.
struct Report {
  struct Check {
    std::string id;
    bool pass = true;
    double residual = 0;
    std::string indices;
  };

  std::string suite;
  double tolerance = 1e-9;
  std::vector<Check> checks;
  double wall_ms = 0;

  void add(std::string id, double residual, std::string indices = "");
  void add_bool(std::string id, bool ok, std::string indices = "");
  void merge(const Report& other, const std::string& prefix = "");
  bool passed() const;
  double worst() const;
  std::size_t failed_count() const;
  std::string to_text() const;
  std::string to_json() const;
};

}  // namespace tenscat
