#pragma once

#include "branchdec/catalog.hpp"
#include "branchdec/parabolic.hpp"
#include "branchdec/root_datum.hpp"

#include <memory>
#include <string>

namespace branchdec::testing {

inline DatumPtr datum(const std::string& name) { return std::make_shared<const RootDatum>(build_root_datum(name)); }

inline ThetaStableParabolic parabolic(const std::string& name, std::initializer_list<long> x) {
    return build_parabolic(datum(name), RationalVector::from_ints(x));
}

/// The catalog shipped in the source tree, loaded once per test binary.
inline const CatalogBundle& source_catalog() {
    static const CatalogBundle cat = load_catalog(BRANCHDEC_SOURCE_CATALOG);
    return cat;
}

}  // namespace branchdec::testing
