#ifndef GCS4_EMBEDDED_DATA_HPP
#define GCS4_EMBEDDED_DATA_HPP

#include <string>
#include <string_view>
#include <vector>

namespace gcs4::data {

/// Contents of data/<name> as compiled into the binary (names use '/'
/// separators relative to the data directory, e.g. "catalogue.json").
/// Throws std::out_of_range for unknown names.
std::string_view get(std::string_view name);

/// All embedded entry names, sorted.
std::vector<std::string> names();

}  // namespace gcs4::data

#endif
