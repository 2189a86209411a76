#pragma once

// Text formats.
//
// .asc   line 1 "n r", then n lines of n space-separated colors.
// .perm  line 1 "n g", then g lines of n space-separated 0-based images.
//
// Writers emit LF line endings and no trailing whitespace.

#include <filesystem>
#include <iosfwd>

#include "scheme_forge/groups.hpp"
#include "scheme_forge/scheme.hpp"

namespace scheme_forge {

/// Throws ParseError on malformed text; scheme axiom failures propagate
/// as InvalidScheme subclasses.
Scheme read_scheme(std::istream& in);
Scheme read_scheme_file(const std::filesystem::path& path);
void write_scheme(std::ostream& out, const Scheme& x);

PermGroup read_group(std::istream& in);
PermGroup read_group_file(const std::filesystem::path& path);
void write_group(std::ostream& out, const PermGroup& g);

}  // namespace scheme_forge
