#include "ampcal/state_label.hpp"

#include <cctype>
#include <stdexcept>

namespace ampcal {

bool is_valid_label(std::string_view text) {
  if (text.empty()) return false;
  unsigned char first = static_cast<unsigned char>(text[0]);
  if (!std::isalpha(first) && first != '_') return false;
  for (std::size_t i = 1; i < text.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (!std::isalnum(c) && c != '_') return false;
  }
  return true;
}

StateLabel::StateLabel(std::string name) : name_(std::move(name)) {
  if (!is_valid_label(name_)) {
    throw std::invalid_argument("invalid state label: '" + name_ + "'");
  }
}

}  // namespace ampcal
