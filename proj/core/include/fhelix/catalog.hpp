#pragma once

#include <span>
#include <string_view>

#include "fhelix/curve_spec.hpp"

namespace fhelix {

struct CatalogEntry {
  std::string_view name;
  std::string_view description;
  std::string_view document;  // spec document text
};

/// Built-in specs, in listing order.
std::span<const CatalogEntry> catalog();

/// nullptr when absent.
const CatalogEntry* find_catalog_entry(std::string_view name);

/// Parsed spec of a built-in entry. Throws Error(invalid_value) for unknown names.
CurveSpec catalog_spec(std::string_view name);

}  // namespace fhelix
