#ifndef RELCALC_CARRIER_HPP
#define RELCALC_CARRIER_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace relcalc {

/// A finite carrier: elements are the indices 0..size-1.  Labels are
/// optional display names; the kernel identifies carriers by size only.
struct Carrier {
  std::size_t size = 0;
  std::vector<std::string> labels;  // empty, or exactly size distinct names

  Carrier() = default;
  explicit Carrier(std::size_t n) : size(n) {}
  Carrier(std::size_t n, std::vector<std::string> ls)
      : size(n), labels(std::move(ls)) {
    validate();
  }

  void validate() const {
    if (labels.empty()) return;
    if (labels.size() != size)
      throw std::invalid_argument("carrier: label count must equal size");
    std::unordered_set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != labels.size())
      throw std::invalid_argument("carrier: labels must be distinct");
  }

  std::string label(std::size_t i) const {
    return labels.empty() ? std::to_string(i) : labels[i];
  }
};

}  // namespace relcalc

#endif
