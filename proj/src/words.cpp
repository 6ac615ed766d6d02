#include "ratcalc/words.hpp"

#include <cctype>

namespace ratcalc {

namespace {

bool valid_letter_name(std::string_view s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (char c : s) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    }
    return true;
}

} // namespace

Alphabet::Alphabet(std::vector<std::string> letters) : letters_(std::move(letters)) {
    if (letters_.empty()) throw Error("alphabet must be non-empty");
    for (uint32_t i = 0; i < letters_.size(); ++i) {
        if (!valid_letter_name(letters_[i]))
            throw Error("bad letter name '" + letters_[i] + "' (identifier expected)");
        if (!index_.emplace(letters_[i], i).second)
            throw Error("duplicate letter '" + letters_[i] + "' in alphabet");
    }
}

uint32_t Alphabet::index_of(std::string_view name) const {
    auto it = index_.find(name);
    if (it == index_.end())
        throw Error("unknown letter '" + std::string(name) + "'");
    return it->second;
}

bool Alphabet::contains(std::string_view name) const {
    return index_.find(name) != index_.end();
}

AlphabetPtr make_alphabet(std::vector<std::string> letters) {
    return std::make_shared<const Alphabet>(std::move(letters));
}

Word::Word(AlphabetPtr alphabet, std::vector<uint32_t> letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
    for (uint32_t x : letters_) {
        if (x >= alphabet_->size()) throw Error("letter index out of range for alphabet");
    }
}

Word Word::prefix(size_t len) const {
    return Word(alphabet_, std::vector<uint32_t>(letters_.begin(), letters_.begin() + len));
}

Word Word::suffix(size_t len) const {
    return Word(alphabet_, std::vector<uint32_t>(letters_.end() - len, letters_.end()));
}

Word Word::appended(uint32_t letter) const {
    std::vector<uint32_t> ls = letters_;
    ls.push_back(letter);
    return Word(alphabet_, std::move(ls));
}

Word concat(const Word& u, const Word& v) {
    if (u.empty()) return v;
    if (v.empty()) return u;
    if (!same_alphabet(u.alphabet(), v.alphabet()))
        throw DomainMismatchError("concat: words over different alphabets");
    std::vector<uint32_t> ls = u.letters();
    ls.insert(ls.end(), v.letters().begin(), v.letters().end());
    return Word(u.alphabet(), std::move(ls));
}

Word parse_word(const AlphabetPtr& alphabet, std::string_view text) {
    std::vector<uint32_t> letters;
    size_t pos = 0;
    bool saw_empty_marker = false;
    while (pos < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            continue;
        }
        if (text[pos] == '_') {
            saw_empty_marker = true;
            ++pos;
            continue;
        }
        // greedy longest letter-name match
        size_t best = 0;
        uint32_t best_idx = 0;
        for (uint32_t i = 0; i < alphabet->size(); ++i) {
            const std::string& name = alphabet->letter(i);
            if (name.size() > best && text.substr(pos, name.size()) == name) {
                best = name.size();
                best_idx = i;
            }
        }
        if (best == 0)
            throw ParseError("cannot read a letter at position " + std::to_string(pos) +
                             " of word '" + std::string(text) + "'");
        letters.push_back(best_idx);
        pos += best;
    }
    if (saw_empty_marker && !letters.empty())
        throw ParseError("'_' (empty word) cannot be mixed with letters in '" + std::string(text) + "'");
    return Word(alphabet, std::move(letters));
}

std::string format_word(const Word& w) {
    if (w.empty()) return "_";
    std::string s;
    for (uint32_t x : w.letters()) s += w.alphabet()->letter(x);
    return s;
}

std::vector<Word> words_of_length(const AlphabetPtr& alphabet, size_t n) {
    std::vector<Word> out;
    std::vector<uint32_t> cur(n, 0);
    const uint32_t m = static_cast<uint32_t>(alphabet->size());
    while (true) {
        out.emplace_back(alphabet, cur);
        size_t i = n;
        while (i > 0 && cur[i - 1] == m - 1) {
            cur[i - 1] = 0;
            --i;
        }
        if (i == 0) break;
        ++cur[i - 1];
    }
    return out;
}

std::vector<Word> words_up_to(const AlphabetPtr& alphabet, size_t max_len) {
    std::vector<Word> out;
    for (size_t n = 0; n <= max_len; ++n) {
        auto layer = words_of_length(alphabet, n);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

} // namespace ratcalc
