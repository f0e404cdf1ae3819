#include "qwitt/tscalar.hpp"

namespace qwitt {

std::string TScalar::to_string() const {
  std::vector<std::string> pieces;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k].is_zero()) continue;
    std::string mono;
    if (k == 1) mono = "t";
    if (k > 1) mono = "t^" + std::to_string(k);
    pieces.push_back(k == 0 ? c_[k].to_string() : coefficient_times(c_[k], mono));
  }
  if (pieces.size() == 1 && c_.size() == 1) return pieces.front();
  return join_signed(pieces);
}

std::ostream& operator<<(std::ostream& os, const TScalar& s) { return os << s.to_string(); }

}  // namespace qwitt
