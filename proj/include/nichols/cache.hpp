#pragma once

#include <string>

namespace nichols {

class Algebra;

// Versioned text cache of computed layers, keyed by the braiding content
// hash inside the file header. Loading returns false (and leaves the
// algebra untouched) on a missing file; it throws on a version or hash
// mismatch. Stores atomically (write-then-rename).
bool cache_load(Algebra& A, const std::string& path);
void cache_store(const Algebra& A, const std::string& path);

}  // namespace nichols
