#pragma once

#include <filesystem>
#include <iosfwd>

#include "kmm/symbols.hpp"

namespace kmm::io {

/// Header-free instance files: raw bytes (one symbol per byte) or
/// whitespace-separated decimal tokens below kMaxInputSymbol.
enum class Format { Bytes, Tokens };

SymbolString parse_tokens(std::istream& in);
/// Throws std::runtime_error if the file cannot be read or a token is invalid.
SymbolString read_instance(const std::filesystem::path& path, Format format);

void write_tokens(std::ostream& out, SymbolView s);
void write_instance(const std::filesystem::path& path, SymbolView s);

}  // namespace kmm::io
