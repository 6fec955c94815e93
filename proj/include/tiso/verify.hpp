#pragma once

// Mechanical checks of the identities the library relies on. Each property
// counts the instances it examined and keeps a sample of the failures.

#include <cstdint>
#include <string>
#include <vector>

#include "tiso/rect.hpp"

namespace tiso {

struct PropertyResult {
  std::string module;
  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::vector<std::string> samples;  // first few failure messages
  std::string skipped;               // nonempty: reason the property did not run

  bool ok() const { return failures == 0; }
  bool check(bool condition, const std::string& message);
  template <typename F>
  bool check_lazy(bool condition, F&& message) {
    ++checks;
    if (!condition) record(message());
    return condition;
  }
  void record(const std::string& message);
};

struct SuiteReport {
  RectShape shape;
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::vector<PropertyResult> properties;

  bool ok() const;
  std::size_t failed_properties() const;
};

/// Degree window used when none is given: one full period, 0..mn.
std::int64_t default_window_hi(const RectShape& shape);

std::vector<PropertyResult> verify_rect(const RectShape& shape);
std::vector<PropertyResult> verify_reflect(const RectShape& shape);
/// Orbit and affine properties on degrees lo..hi. They are reported as
/// skipped for shapes the modules refuse.
std::vector<PropertyResult> verify_orbit(const RectShape& shape, std::int64_t lo, std::int64_t hi);
std::vector<PropertyResult> verify_affine(const RectShape& shape, std::int64_t lo, std::int64_t hi);

SuiteReport run_suite(const RectShape& shape, std::int64_t lo, std::int64_t hi);

}  // namespace tiso
