#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hyper {

/// Outcome of a single axiom or property check. On failure carries the
/// lexicographically first witness (element indices) and a readable message.
struct Diagnostic {
  std::string check;
  bool ok = true;
  std::vector<int> witness;
  std::string message;

  static Diagnostic pass(std::string name) {
    return Diagnostic{std::move(name), true, {}, {}};
  }
  static Diagnostic fail(std::string name, std::vector<int> witness,
                         std::string message) {
    return Diagnostic{std::move(name), false, std::move(witness),
                      std::move(message)};
  }

  explicit operator bool() const { return ok; }
};

/// A batch of diagnostics, e.g. all axioms of a structure definition.
struct DiagnosticBundle {
  std::vector<Diagnostic> items;

  bool ok() const {
    for (const auto& d : items)
      if (!d.ok) return false;
    return true;
  }
  const Diagnostic* first_failure() const {
    for (const auto& d : items)
      if (!d.ok) return &d;
    return nullptr;
  }
  void add(Diagnostic d) { items.push_back(std::move(d)); }
  std::string summary() const {
    std::string out;
    for (const auto& d : items) {
      if (d.ok) continue;
      if (!out.empty()) out += "; ";
      out += d.check + ": " + d.message;
    }
    return out.empty() ? "ok" : out;
  }
};

/// Value-or-diagnostic result: `value` is set exactly when `diag.ok`.
template <typename T>
struct Checked {
  std::optional<T> value;
  Diagnostic diag = Diagnostic::pass("");

  bool ok() const { return diag.ok; }
  const T& operator*() const { return *value; }
  const T* operator->() const { return &*value; }
};

/// Value-or-bundle result for composite verifiers.
template <typename T>
struct Verified {
  std::optional<T> value;
  DiagnosticBundle diagnostics;

  bool ok() const { return diagnostics.ok(); }
  const T& operator*() const { return *value; }
  const T* operator->() const { return &*value; }
};

}  // namespace hyper
