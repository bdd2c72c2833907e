#ifndef POUI_IO_HPP
#define POUI_IO_HPP

#include <string>

namespace poui {

/// Writes content to path atomically: a temp file in the same directory is
/// written, flushed, then renamed over the target.  Either the complete file
/// appears or nothing does.  Throws IoError on failure.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace poui

#endif
