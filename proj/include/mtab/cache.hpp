#pragma once

#include <memory>
#include <string>

#include "mtab/schur.hpp"

namespace mtab {

/// Process-wide module cache. Always memoizes in memory (shared lock for
/// readers, exclusive for the single writer); when a cache directory is set,
/// constructed modules are also persisted as versioned JSON of exact
/// fractions keyed by a content hash of (shape, n, side), and later loads
/// rebuild the weight-stratum solvers from the stored vectors (re-verifying
/// independence).
void set_module_cache_dir(const std::string& dir);  // "" disables disk cache
std::string module_cache_dir();

std::shared_ptr<const LabeledModule> cached_schur_module(const SkewShape& shape, int n);
std::shared_ptr<const LabeledModule> cached_weyl_module(const SkewShape& shape, int n);

/// Content hash used in cache file names; stable across runs.
std::string module_cache_key(const SkewShape& shape, int n, bool weyl);

/// Straightening against the cached module of the shape.
RatVec straighten(const SkewShape& shape, int n, const Tableau& T);

void clear_module_memo();  // test hook

}  // namespace mtab
