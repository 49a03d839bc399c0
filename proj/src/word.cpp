#include "boxspace/word.hpp"

namespace boxspace {

bool is_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == inverse_letter(w[i - 1])) return false;
  return true;
}

Word reduce_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (!out.empty() && out.back() == inverse_letter(l))
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word inverse_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& l : out) l = inverse_letter(l);
  return out;
}

Word concat_reduced(const Word& a, const Word& b) {
  Word all = a;
  all.insert(all.end(), b.begin(), b.end());
  return reduce_word(all);
}

Word power_word(const Word& w, unsigned e) {
  Word out;
  for (unsigned i = 0; i < e; ++i) out.insert(out.end(), w.begin(), w.end());
  return reduce_word(out);
}

Word commutator_word(const Word& a, const Word& b) {
  Word all = a;
  all.insert(all.end(), b.begin(), b.end());
  const Word ai = inverse_word(a), bi = inverse_word(b);
  all.insert(all.end(), ai.begin(), ai.end());
  all.insert(all.end(), bi.begin(), bi.end());
  return reduce_word(all);
}

std::uint64_t reduced_word_count(unsigned rank, unsigned len) {
  if (len == 0) return 1;
  std::uint64_t c = 2 * rank;
  for (unsigned i = 1; i < len; ++i) c *= 2 * rank - 1;
  return c;
}

namespace {

void extend(unsigned rank, unsigned len, Word& w, const std::function<void(const Word&)>& f) {
  if (w.size() == len) {
    f(w);
    return;
  }
  for (unsigned l = 0; l < 2 * rank; ++l) {
    if (!w.empty() && w.back() == inverse_letter(static_cast<Letter>(l))) continue;
    w.push_back(static_cast<Letter>(l));
    extend(rank, len, w, f);
    w.pop_back();
  }
}

}  // namespace

void for_each_reduced_word(unsigned rank, unsigned len, const std::function<void(const Word&)>& f) {
  Word w;
  w.reserve(len);
  extend(rank, len, w, f);
}

}  // namespace boxspace
