#include "exactrv/entropy.hpp"

#include <bit>
#include <fstream>
#include <string>

namespace exactrv {

std::uint64_t rand_uniform(bit_source& src, std::uint64_t bound) {
  if (bound == 0) return 0;
  const int width = std::bit_width(bound);
  for (;;) {
    std::uint64_t v = 0;
    for (int i = 0; i < width; ++i) v = (v << 1) | src.next_bit();
    if (v <= bound) return v;
  }
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed ^ (0x9e3779b97f4a7c15ull * (stream + 1));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::vector<std::uint8_t> load_tape(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open tape file: " + path.string());
  std::vector<std::uint8_t> bits;
  char c;
  while (in.get(c)) {
    if (c == '0' || c == '1') {
      bits.push_back(static_cast<std::uint8_t>(c - '0'));
    } else if (c != '\n' && c != '\r' && c != ' ' && c != '\t') {
      throw std::runtime_error("unexpected byte in tape file: " + path.string());
    }
  }
  return bits;
}

void save_tape(const std::filesystem::path& path, std::span<const std::uint8_t> bits) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open tape file for writing: " + path.string());
  std::string line;
  line.reserve(bits.size() + 1);
  for (const auto b : bits) line.push_back(b ? '1' : '0');
  line.push_back('\n');
  out.write(line.data(), static_cast<std::streamsize>(line.size()));
  if (!out) throw std::runtime_error("failed writing tape file: " + path.string());
}

}  // namespace exactrv
