#ifndef AMPCAL_STATE_LABEL_HPP
#define AMPCAL_STATE_LABEL_HPP

#include <compare>
#include <string>
#include <string_view>

namespace ampcal {

bool is_valid_label(std::string_view text);

// Case-sensitive state identifier: letter or underscore followed by
// letters, digits or underscores.
class StateLabel {
 public:
  explicit StateLabel(std::string name);

  const std::string& str() const { return name_; }

  friend bool operator==(const StateLabel&, const StateLabel&) = default;
  friend auto operator<=>(const StateLabel&, const StateLabel&) = default;

 private:
  std::string name_;
};

}  // namespace ampcal

#endif  // AMPCAL_STATE_LABEL_HPP
