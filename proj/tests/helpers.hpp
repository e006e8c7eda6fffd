#pragma once

#include "abelcover/runner.hpp"

namespace abelcover::testing {

inline std::vector<CatalogEntry> shipped_catalog(
    const std::map<std::string, long long>& overrides = {}) {
    return load_catalog(default_catalog_path(), overrides);
}

inline const CatalogEntry& entry_by_id(const std::vector<CatalogEntry>& entries,
                                       const std::string& id) {
    for (const auto& e : entries)
        if (e.id == id)
            return e;
    throw InputError("missing catalog entry " + id);
}

}  // namespace abelcover::testing
