#include "noncomm/word.hpp"

#include "noncomm/error.hpp"

#include <algorithm>

namespace noncomm {

Word Word::parse(std::string_view text) {
    std::vector<Letter> letters;
    letters.reserve(text.size());
    for (char c : text) {
        if (c == 'A') {
            letters.push_back(Letter::L0);
        } else if (c == 'B') {
            letters.push_back(Letter::L1);
        } else {
            throw Error(ErrorKind::Parse, "invalid letter '" + std::string(1, c) + "' in word \"" +
                                              std::string(text) + "\" (expected A or B)");
        }
    }
    return Word(std::move(letters));
}

std::size_t Word::count(Letter letter) const noexcept {
    return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), letter));
}

std::string Word::str() const {
    std::string out;
    out.reserve(letters_.size());
    for (Letter l : letters_) out.push_back(l == Letter::L0 ? 'A' : 'B');
    return out;
}

Word operator+(const Word& lhs, const Word& rhs) {
    std::vector<Letter> letters;
    letters.reserve(lhs.size() + rhs.size());
    letters.insert(letters.end(), lhs.letters_.begin(), lhs.letters_.end());
    letters.insert(letters.end(), rhs.letters_.begin(), rhs.letters_.end());
    return Word(std::move(letters));
}

std::strong_ordering operator<=>(const Word& lhs, const Word& rhs) {
    if (auto c = lhs.size() <=> rhs.size(); c != 0) return c;
    return lhs.letters_ <=> rhs.letters_;
}

}  // namespace noncomm
