#include "kmm/instance_io.hpp"

#include <fstream>
#include <iterator>
#include <stdexcept>
#include <string>

namespace kmm::io {

SymbolString parse_tokens(std::istream& in) {
  std::vector<Symbol> out;
  std::string token;
  while (in >> token) {
    if (token.empty() || token.size() > 10 ||
        token.find_first_not_of("0123456789") != std::string::npos) {
      throw std::runtime_error("invalid token '" + token + "'");
    }
    const unsigned long long v = std::stoull(token);
    if (v >= kMaxInputSymbol) throw std::runtime_error("token " + token + " is reserved");
    out.push_back(static_cast<Symbol>(v));
  }
  return SymbolString(std::move(out));
}

SymbolString read_instance(const std::filesystem::path& path, Format format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  if (format == Format::Tokens) return parse_tokens(in);
  const std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return SymbolString::from_bytes(bytes);
}

void write_tokens(std::ostream& out, SymbolView s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out << ' ';
    out << s[i];
  }
  out << '\n';
}

void write_instance(const std::filesystem::path& path, SymbolView s) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_tokens(out, s);
}

}  // namespace kmm::io
