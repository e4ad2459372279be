#include "semilab/sg_io.hpp"

#include <fstream>
#include <sstream>

#include "semilab/util.hpp"

namespace semilab {

namespace {

// Strip comments and blank lines, returning the data tokens line by line.
std::vector<std::string> data_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream probe(line);
    std::string tok;
    if (probe >> tok) lines.push_back(line);
  }
  return lines;
}

}  // namespace

Semigroup read_sg(std::istream& in) {
  const std::vector<std::string> lines = data_lines(in);
  std::size_t at = 0;
  auto next_line = [&]() -> const std::string& {
    if (at >= lines.size()) throw FormatError("unexpected end of .sg input");
    return lines[at++];
  };

  int n = 0;
  {
    std::istringstream ss(next_line());
    if (!(ss >> n) || n <= 0) throw FormatError("first data line must be a positive size");
    std::string extra;
    if (ss >> extra) throw FormatError("trailing tokens after size");
  }
  std::optional<int> declared_zero;
  if (at < lines.size()) {
    std::istringstream ss(lines[at]);
    std::string head;
    ss >> head;
    if (head == "zero:") {
      int z;
      if (!(ss >> z) || z < 0 || z >= n) throw FormatError("bad zero declaration");
      declared_zero = z;
      ++at;
    }
  }
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x) {
    std::istringstream ss(next_line());
    for (int y = 0; y < n; ++y)
      if (!(ss >> table[x][y]))
        throw FormatError("row " + std::to_string(x) + " is too short");
    std::string extra;
    if (ss >> extra) throw FormatError("row " + std::to_string(x) + " is too long");
  }
  if (at != lines.size()) throw FormatError("trailing data after the table");
  return Semigroup::validate(table, declared_zero);
}

Semigroup read_sg_string(const std::string& text) {
  std::istringstream ss(text);
  return read_sg(ss);
}

Semigroup read_sg_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw FormatError("cannot open " + path);
  return read_sg(f);
}

std::string write_sg(const Semigroup& s) {
  std::ostringstream out;
  out << s.size() << "\n";
  if (s.zero()) out << "zero: " << *s.zero() << "\n";
  for (int x = 0; x < s.size(); ++x) {
    for (int y = 0; y < s.size(); ++y) {
      if (y) out << ' ';
      out << s.at(x, y);
    }
    out << "\n";
  }
  return out.str();
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x00000100000001b3ULL;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

std::string sg_digest(const Semigroup& s) { return fnv1a_hex(write_sg(s)); }

}  // namespace semilab
