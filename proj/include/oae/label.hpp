#pragma once

#include <string>

#include "oae/errors.hpp"

namespace oae {

enum class Label { improved, nonimproved };

inline const char* to_string(Label label) {
  return label == Label::improved ? "improved" : "nonimproved";
}

inline Label label_from_string(const std::string& s) {
  if (s == "improved") return Label::improved;
  if (s == "nonimproved") return Label::nonimproved;
  throw Error(ErrorCode::invalid_input, "unknown label '" + s + "'");
}

}  // namespace oae
