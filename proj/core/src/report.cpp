#include "tenscat/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace tenscat {

void Report::add(std::string id, double residual, std::string indices) {
  checks.push_back({std::move(id), residual <= tolerance, residual, std::move(indices)});
}

void Report::add_bool(std::string id, bool ok, std::string indices) {
  checks.push_back({std::move(id), ok, ok ? 0.0 : 1.0, std::move(indices)});
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (auto c : other.checks) {
    c.id = prefix.empty() ? c.id : prefix + "." + c.id;
    checks.push_back(std::move(c));
  }
}

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

double Report::worst() const {
  double w = 0;
  for (const auto& c : checks) w = std::max(w, c.residual);
  return w;
}

std::size_t Report::failed_count() const {
  std::size_t k = 0;
  for (const auto& c : checks)
    if (!c.pass) ++k;
  return k;
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << "suite " << suite << " (tol " << tolerance << ")\n";
  for (const auto& c : checks) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", c.residual);
    os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.id << "  residual=" << buf;
    if (!c.indices.empty()) os << "  at " << c.indices;
    os << "\n";
  }
  os << "  " << (checks.size() - failed_count()) << "/" << checks.size() << " checks passed\n";
  return os.str();
}

namespace {
std::string esc(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out.push_back('\\');
    out.push_back(ch);
  }
  return out;
}
}  // namespace

std::string Report::to_json() const {
  std::ostringstream os;
  os << "{\"suite\":\"" << esc(suite) << "\",\"tolerance\":" << tolerance << ",\"wall_ms\":"
     << wall_ms << ",\"checks\":[";
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const auto& c = checks[i];
    if (i) os << ",";
    os << "{\"id\":\"" << esc(c.id) << "\",\"status\":\"" << (c.pass ? "pass" : "fail")
       << "\",\"residual\":" << c.residual << ",\"indices\":\"" << esc(c.indices) << "\"}";
  }
  os << "],\"summary\":{\"total\":" << checks.size() << ",\"failed\":" << failed_count() << "}}";
  return os.str();
}

}  // namespace tenscat
