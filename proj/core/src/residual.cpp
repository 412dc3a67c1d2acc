#include "nova/residual.hpp"

namespace nova {

void Residual::absorb(const Residual& other, const std::string& prefix) {
  for (const Witness& w : other.witnesses_) {
    if (done()) return;
    witnesses_.push_back({prefix + w.identity, w.tuple, w.value});
  }
}

std::string Residual::summary(std::size_t max_items) const {
  if (zero()) return "zero";
  std::string out = std::to_string(witnesses_.size()) + " nonzero:";
  for (std::size_t i = 0; i < witnesses_.size() && i < max_items; ++i) {
    const Witness& w = witnesses_[i];
    out += " " + w.identity + "(";
    for (std::size_t k = 0; k < w.tuple.size(); ++k)
      out += (k ? "," : "") + std::to_string(w.tuple[k]);
    out += ")=" + w.value.to_string();
  }
  if (witnesses_.size() > max_items) out += " ...";
  return out;
}

}  // namespace nova
