#include "kh/codec.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <map>
#include <sstream>

#include "kh/error.hpp"

namespace kh {
namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) != token)
      throw ParseError("expected '" + std::string(token) + "'", pos_);
    pos_ += token.size();
  }

  long integer() {
    skip_space();
    const std::size_t start = pos_;
    long value = 0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    if (pos_ < text_.size() && text_[pos_] == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range) throw ParseError("integer out of range", start);
    if (ec != std::errc{}) throw ParseError("expected an integer", start);
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

  std::size_t position() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

void validate_pd(const PdCode& code) {
  if (code.crossings.empty()) throw InvalidDiagram("PD code has no crossings");
  const int n = static_cast<int>(code.crossings.size());
  std::map<int, int> counts;
  for (const auto& x : code.crossings)
    for (int label : x) {
      if (label < 1) throw InvalidDiagram("PD label " + std::to_string(label) + " is not positive");
      ++counts[label];
    }
  const int highest = counts.rbegin()->first;
  for (int label = 1; label <= std::max(highest, 2 * n); ++label)
    if (!counts.contains(label))
      throw InvalidDiagram("PD labels are not contiguous: label " + std::to_string(label) + " is missing from 1.." +
                           std::to_string(std::max(highest, 2 * n)));
  for (const auto& [label, count] : counts)
    if (count != 2)
      throw InvalidDiagram("PD label " + std::to_string(label) + " occurs " + std::to_string(count) +
                           " times; every label must occur exactly twice");
}

PdCode parse_pd(std::string_view text) {
  Scanner in(text);
  PdCode code;
  in.expect("PD");
  in.expect("[");
  do {
    std::array<int, 4> x{};
    in.expect("X");
    in.expect("(");
    for (int i = 0; i < 4; ++i) {
      if (i > 0) in.expect(",");
      const std::size_t at = in.position();
      const long v = in.integer();
      if (v < 1 || v > 1'000'000) throw ParseError("edge label must be a positive integer", at);
      x[static_cast<std::size_t>(i)] = static_cast<int>(v);
    }
    in.expect(")");
    code.crossings.push_back(x);
    if (!in.peek(',')) break;
    in.expect(",");
  } while (true);
  in.expect("]");
  if (!in.at_end()) throw ParseError("trailing characters after PD code", in.position());
  validate_pd(code);
  return code;
}

std::string serialize_pd(const PdCode& code) {
  std::ostringstream os;
  os << "PD[";
  for (std::size_t k = 0; k < code.crossings.size(); ++k) {
    const auto& x = code.crossings[k];
    os << (k == 0 ? "" : ",") << "X(" << x[0] << ',' << x[1] << ',' << x[2] << ',' << x[3] << ')';
  }
  os << ']';
  return os.str();
}

BraidWord parse_braid(std::string_view text) {
  Scanner in(text);
  BraidWord word;
  int declared = 0;
  if (in.peek('s')) {
    in.expect("strands");
    in.expect("=");
    const std::size_t at = in.position();
    const long k = in.integer();
    if (k < 2 || k > 1000) throw ParseError("strand count must be at least 2", at);
    declared = static_cast<int>(k);
    in.expect(";");
  }
  int widest = 0;
  while (!in.at_end()) {
    const std::size_t at = in.position();
    const long letter = in.integer();
    if (letter == 0) throw ParseError("braid letter 0 is not a generator", at);
    if (std::labs(letter) > 999) throw ParseError("braid letter out of range", at);
    if (declared != 0 && std::labs(letter) > declared - 1)
      throw ParseError("braid letter " + std::to_string(letter) + " needs more than " + std::to_string(declared) +
                           " strands",
                       at);
    widest = std::max(widest, static_cast<int>(std::labs(letter)));
    word.letters.push_back(static_cast<int>(letter));
  }
  if (word.letters.empty()) throw ParseError("empty braid word", in.position());
  word.strands = declared != 0 ? declared : widest + 1;
  return word;
}

std::string serialize_braid(const BraidWord& word) {
  std::ostringstream os;
  os << "strands=" << word.strands << ';';
  for (int letter : word.letters) os << ' ' << letter;
  return os.str();
}

}  // namespace kh
