#include "smallsupport/io.hpp"

#include <charconv>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>

#include "smallsupport/errors.hpp"

namespace smallsupport {

namespace {

// from_chars-based token scanner; fast enough for million-entry image tables.
class TokenReader {
 public:
  explicit TokenReader(std::istream& in)
      : text_(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()) {}

  std::uint64_t next_uint(const char* what) {
    skip_whitespace();
    if (pos_ >= text_.size()) {
      throw InputError(std::string("unexpected end of input while reading ") + what);
    }
    std::uint64_t value = 0;
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin) {
      throw InputError(std::string("expected an integer for ") + what + " near \"" +
                       text_.substr(pos_, 12) + "\"");
    }
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

  bool at_end() {
    skip_whitespace();
    return pos_ >= text_.size();
  }

 private:
  void skip_whitespace() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
            text_[pos_] == '\r')) {
      ++pos_;
    }
  }

  std::string text_;
  std::size_t pos_ = 0;
};

Permutation parse_permutation(TokenReader& reader) {
  const std::uint64_t n = reader.next_uint("the point count");
  if (n == 0) throw InputError("point count must be at least 1");
  if (n > (1u << 30)) throw InputError("point count too large");
  std::vector<Point> images;
  images.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    images.push_back(static_cast<Point>(reader.next_uint("an image value")));
  }
  return Permutation(std::move(images));
}

}  // namespace

Permutation read_permutation(std::istream& in) {
  TokenReader reader(in);
  Permutation pi = parse_permutation(reader);
  if (!reader.at_end()) throw InputError("trailing data after image table");
  return pi;
}

void write_permutation(std::ostream& out, const Permutation& pi) {
  out << pi.size() << '\n';
  for (std::size_t i = 0; i < pi.size(); ++i) {
    out << pi.images()[i] << (i + 1 == pi.size() ? '\n' : ' ');
  }
}

LatinSquare read_latin_square(std::istream& in) {
  TokenReader reader(in);
  const std::uint64_t n = reader.next_uint("the order");
  if (n == 0) throw InputError("order must be at least 1");
  if (n > 64) throw InputError("Latin square order too large");
  std::vector<std::vector<Point>> rows(n, std::vector<Point>(n));
  for (std::uint64_t r = 0; r < n; ++r) {
    for (std::uint64_t c = 0; c < n; ++c) {
      rows[r][c] = static_cast<Point>(reader.next_uint("a table entry"));
    }
  }
  if (!reader.at_end()) throw InputError("trailing data after table");
  return LatinSquare::from_rows(rows);
}

void write_latin_square(std::ostream& out, const LatinSquare& square) {
  const std::size_t n = square.order();
  out << n << '\n';
  for (Point r = 0; r < n; ++r) {
    for (Point c = 0; c < n; ++c) {
      out << square.at(r, c) << (c + 1 == n ? '\n' : ' ');
    }
  }
}

SteinerDesign read_design(std::istream& in) {
  TokenReader reader(in);
  const std::uint64_t n = reader.next_uint("the point count");
  const std::uint64_t k = reader.next_uint("the line size");
  if (n == 0) throw InputError("point count must be at least 1");
  if (n > 4096) throw InputError("point count too large");
  if (k < 3) throw InputError("line size must be at least 3, got " + std::to_string(k));
  std::vector<std::vector<Point>> lines;
  while (!reader.at_end()) {
    std::vector<Point> line;
    line.reserve(k);
    for (std::uint64_t i = 0; i < k; ++i) {
      line.push_back(static_cast<Point>(reader.next_uint("a line point")));
    }
    lines.push_back(std::move(line));
  }
  return SteinerDesign::validate(n, k, std::move(lines));
}

void write_design(std::ostream& out, const SteinerDesign& design) {
  out << design.point_count() << ' ' << design.line_size() << '\n';
  for (const auto& line : design.lines()) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      out << line[i] << (i + 1 == line.size() ? '\n' : ' ');
    }
  }
}

std::array<Permutation, 3> read_autotopism_triple(std::istream& in) {
  TokenReader reader(in);
  Permutation alpha = parse_permutation(reader);
  Permutation beta = parse_permutation(reader);
  Permutation gamma = parse_permutation(reader);
  if (!reader.at_end()) throw InputError("trailing data after third permutation");
  return {std::move(alpha), std::move(beta), std::move(gamma)};
}

void write_autotopism_triple(std::ostream& out, const Permutation& alpha,
                             const Permutation& beta, const Permutation& gamma) {
  write_permutation(out, alpha);
  out << '\n';
  write_permutation(out, beta);
  out << '\n';
  write_permutation(out, gamma);
}

namespace {

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  return in;
}

}  // namespace

Permutation load_permutation(const std::string& path) {
  auto in = open_or_throw(path);
  return read_permutation(in);
}

LatinSquare load_latin_square(const std::string& path) {
  auto in = open_or_throw(path);
  return read_latin_square(in);
}

SteinerDesign load_design(const std::string& path) {
  auto in = open_or_throw(path);
  return read_design(in);
}

}  // namespace smallsupport
