#pragma once

#include "ratcalc/errors.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace ratcalc {

// Ordered finite set of distinct letter names. Alphabets are shared
// immutably between words, series and representations; two alphabets are
// the same domain iff their letter lists are equal.
class Alphabet {
public:
    explicit Alphabet(std::vector<std::string> letters);

    size_t size() const { return letters_.size(); }
    const std::string& letter(uint32_t i) const { return letters_[i]; }
    const std::vector<std::string>& letters() const { return letters_; }
    // index of the named letter, or throws
    uint32_t index_of(std::string_view name) const;
    bool contains(std::string_view name) const;

    bool operator==(const Alphabet& o) const { return letters_ == o.letters_; }
    bool operator!=(const Alphabet& o) const { return !(*this == o); }

private:
    std::vector<std::string> letters_;
    std::map<std::string, uint32_t, std::less<>> index_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(std::vector<std::string> letters);

inline bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
    return a == b || *a == *b;
}

// Element of the free monoid over an alphabet, stored as letter indices.
class Word {
public:
    Word() = default; // the empty word of no particular alphabet
    Word(AlphabetPtr alphabet, std::vector<uint32_t> letters);

    size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    uint32_t operator[](size_t i) const { return letters_[i]; }
    const std::vector<uint32_t>& letters() const { return letters_; }
    const AlphabetPtr& alphabet() const { return alphabet_; }

    Word prefix(size_t len) const; // first len letters
    Word suffix(size_t len) const; // last len letters
    Word appended(uint32_t letter) const;

    bool operator==(const Word& o) const { return letters_ == o.letters_; }
    bool operator!=(const Word& o) const { return !(*this == o); }

private:
    AlphabetPtr alphabet_;
    std::vector<uint32_t> letters_;
};

// Length-then-lexicographic order on letter indices; the canonical
// iteration and output order everywhere.
struct WordOrder {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.letters() < b.letters();
    }
};

Word concat(const Word& u, const Word& v); // alphabet mismatch throws

// Word literal syntax: juxtaposed letter identifiers, '_' for the empty
// word; whitespace is ignored. Longest letter name wins at each step.
Word parse_word(const AlphabetPtr& alphabet, std::string_view text);
std::string format_word(const Word& w);

// All words of length exactly n / at most n, in length-lex order.
std::vector<Word> words_of_length(const AlphabetPtr& alphabet, size_t n);
std::vector<Word> words_up_to(const AlphabetPtr& alphabet, size_t max_len);

} // namespace ratcalc
