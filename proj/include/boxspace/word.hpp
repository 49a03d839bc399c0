#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace boxspace {

// Letter 2i is generator i, letter 2i+1 its inverse.
using Letter = std::uint8_t;
using Word = std::vector<Letter>;

constexpr Letter inverse_letter(Letter l) { return l ^ 1; }

bool is_reduced(const Word& w);
Word reduce_word(const Word& w);
Word inverse_word(const Word& w);
Word concat_reduced(const Word& a, const Word& b);
Word power_word(const Word& w, unsigned e);
// a b a^-1 b^-1, reduced.
Word commutator_word(const Word& a, const Word& b);

// Number of reduced words of length exactly len over `rank` generators.
std::uint64_t reduced_word_count(unsigned rank, unsigned len);

// Calls f on every reduced word of length exactly len, in lexicographic letter order.
void for_each_reduced_word(unsigned rank, unsigned len, const std::function<void(const Word&)>& f);

}  // namespace boxspace
