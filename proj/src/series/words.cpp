#include "barrlab/error.hpp"
#include "barrlab/series/series.hpp"

namespace barrlab {

Card words_below(Card alphabet, Card n) {
  Card total = 0;
  Card layer = 1;
  for (Card len = 0; len < n; ++len) {
    auto next = checked_add(total, layer);
    if (!next) throw Error(ErrorKind::BlowUpGuard, "too many words to index");
    total = *next;
    if (alphabet == 0) break;
    auto grown = checked_mul(layer, alphabet);
    if (!grown) {
      if (len + 1 < n) throw Error(ErrorKind::BlowUpGuard, "too many words to index");
      break;
    }
    layer = *grown;
  }
  return total;
}

Element word_index(Card alphabet, const Word& w) {
  Element lex = 0;
  for (auto letter : w) lex = lex * alphabet + letter;
  return words_below(alphabet, w.size()) + lex;
}

Word word_at(Card alphabet, Element index) {
  Card len = 0;
  Card layer = 1;
  while (index >= layer) {
    index -= layer;
    layer *= alphabet;
    ++len;
  }
  Word w(len);
  for (Card i = len; i-- > 0;) {
    w[i] = static_cast<std::uint32_t>(index % alphabet);
    index /= alphabet;
  }
  return w;
}

std::vector<Word> words_up_to(Card alphabet, Card n) {
  const Card count = words_below(alphabet, n);
  if (count > blowup_guard()) {
    throw Error(ErrorKind::BlowUpGuard, std::to_string(count) + " words exceed the guard");
  }
  std::vector<Word> out;
  out.reserve(count);
  for (Element i = 0; i < count; ++i) out.push_back(word_at(alphabet, i));
  return out;
}

std::string format_word(const FinSet& alphabet, const Word& w) {
  if (w.empty()) return "";
  std::string s;
  for (auto letter : w) s += alphabet.label(letter);
  return s;
}

Word parse_word(const FinSet& alphabet, const std::string& text) {
  Word w;
  std::size_t pos = 0;
  while (pos < text.size()) {
    bool matched = false;
    for (Element a = 0; a < alphabet.size() && !matched; ++a) {
      const std::string l = alphabet.label(a);
      if (!l.empty() && text.compare(pos, l.size(), l) == 0) {
        w.push_back(static_cast<std::uint32_t>(a));
        pos += l.size();
        matched = true;
      }
    }
    if (!matched) {
      throw Error(ErrorKind::InvalidInput,
                  "word '" + text + "' has a letter outside " + alphabet.name());
    }
  }
  return w;
}

}  // namespace barrlab
