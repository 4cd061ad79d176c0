#include "cantor/group_word.hpp"

#include <cctype>
#include <cstdlib>

#include "cantor/error.hpp"

namespace cantor {

FreeWord FreeWord::parse(const std::string& text) {
  FreeWord w;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*')) ++i;
  };
  skip();
  if (text.substr(i) == "1" || i == text.size()) return w;
  while (i < text.size()) {
    if (text[i] != 'x') throw Error(ErrorCode::InvalidArgument, "bad word '" + text + "'");
    ++i;
    if (i < text.size() && text[i] == '_') ++i;
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) throw Error(ErrorCode::InvalidArgument, "missing generator index in '" + text + "'");
    int g = std::atoi(text.substr(start, i - start).c_str());
    if (g < 1) throw Error(ErrorCode::InvalidArgument, "generator index must be >= 1");
    if (text.compare(i, 3, "^-1") == 0) {
      g = -g;
      i += 3;
    }
    w.letters.push_back(g);
    skip();
  }
  return w;
}

bool FreeWord::is_reduced() const {
  for (std::size_t i = 1; i < letters.size(); ++i) {
    if (letters[i] == -letters[i - 1]) return false;
  }
  return true;
}

FreeWord FreeWord::reduced() const {
  FreeWord out;
  for (int a : letters) {
    if (!out.letters.empty() && out.letters.back() == -a) {
      out.letters.pop_back();
    } else {
      out.letters.push_back(a);
    }
  }
  return out;
}

FreeWord FreeWord::inverse() const {
  FreeWord out;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) out.letters.push_back(-*it);
  return out;
}

FreeWord FreeWord::times(const FreeWord& o) const {
  FreeWord w = *this;
  w.letters.insert(w.letters.end(), o.letters.begin(), o.letters.end());
  return w.reduced();
}

std::string FreeWord::str() const {
  if (letters.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) s += " ";
    s += "x" + std::to_string(std::abs(letters[i]));
    if (letters[i] < 0) s += "^-1";
  }
  return s;
}

std::vector<FreeWord> enumerate_reduced(int m, int r, bool include_empty) {
  std::vector<FreeWord> out;
  std::vector<FreeWord> layer{FreeWord{}};
  if (include_empty) out.push_back(FreeWord{});
  for (int len = 1; len <= r; ++len) {
    std::vector<FreeWord> next;
    for (const auto& w : layer) {
      for (int g = 1; g <= m; ++g) {
        for (int s : {g, -g}) {
          if (!w.letters.empty() && w.letters.back() == -s) continue;
          FreeWord x = w;
          x.letters.push_back(s);
          next.push_back(std::move(x));
        }
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

}  // namespace cantor
