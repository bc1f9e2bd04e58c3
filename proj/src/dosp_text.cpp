#include <cctype>
#include <charconv>

#include "hstarlab/dosp.hpp"

namespace hstarlab {

std::string format_dosp(const Dosp& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.block_count(); ++i) {
    if (i > 0) out += ',';
    out += '{';
    const Block& block = p.blocks()[i];
    for (std::size_t j = 0; j < block.size(); ++j) {
      if (j > 0) out += ',';
      out += std::to_string(block[j]);
    }
    out += "}_";
    out += std::to_string(p.gaps()[i]);
  }
  out += ')';
  return out;
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ == text_.size();
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  int integer() {
    skip_space();
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    int value = 0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range) fail("integer out of range");
    if (ec != std::errc() || ptr == first) fail("expected an integer");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw DospError(DospError::Kind::Syntax, "syntax error at offset " + std::to_string(pos_) + ": " + message);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Dosp parse_dosp(std::string_view text, int k, int n) {
  Cursor cur(text);
  std::vector<Block> blocks;
  std::vector<int> gaps;
  cur.expect('(');
  do {
    cur.expect('{');
    Block block;
    // "{}" parses; the constructor reports it as an empty block.
    if (cur.peek() != '}') {
      do {
        block.push_back(cur.integer());
      } while (cur.accept(','));
    }
    cur.expect('}');
    cur.expect('_');
    gaps.push_back(cur.integer());
    blocks.push_back(std::move(block));
  } while (cur.accept(','));
  cur.expect(')');
  if (!cur.at_end()) cur.fail("trailing characters");
  return Dosp(std::move(blocks), std::move(gaps), k, n);
}

}  // namespace hstarlab
