#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace qwitt {

/// Outcome of a verification sweep. Only the first few counterexamples are
/// kept verbatim; `failed` counts all of them.
struct CheckReport {
  static constexpr std::size_t kMaxRecorded = 25;

  std::string name;
  long long checked = 0;
  long long failed = 0;
  std::vector<std::string> counterexamples;
  std::vector<std::string> notes;

  bool ok() const { return failed == 0; }

  void pass() { ++checked; }
  void fail(std::string what) {
    ++checked;
    ++failed;
    if (counterexamples.size() < kMaxRecorded) counterexamples.push_back(std::move(what));
  }
  void record(bool good, const std::string& what) { good ? pass() : fail(what); }
  void merge(const CheckReport& o) {
    checked += o.checked;
    failed += o.failed;
    for (const auto& c : o.counterexamples)
      if (counterexamples.size() < kMaxRecorded) counterexamples.push_back(c);
    notes.insert(notes.end(), o.notes.begin(), o.notes.end());
  }
};

}  // namespace qwitt
