#pragma once

#include <json.hpp>

#include "wreath/labels.hpp"

namespace wreath {

using ordered_json = nlohmann::ordered_json;

/// Leaf: {"shape":[2,1]}.
/// Internal: {"sigma":{"alpha":[1,1],"shapes":[[1],[1]]},"children":[...]}.
ordered_json label_to_json(const LabelNode& node);

inline ordered_json label_to_json(const TreeLabel& label)
{ return label_to_json(label.root()); }

/// Rebuilds a label on T(shape). Throws ShapeMismatch when the nesting does
/// not fit the tree and std::invalid_argument for malformed values.
TreeLabel label_from_json(const RVector& shape, const ordered_json& j);

}  // namespace wreath
