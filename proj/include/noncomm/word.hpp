#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace noncomm {

/// L0 is encoded as 0 ('A'), L1 as 1 ('B').
enum class Letter : std::uint8_t { L0 = 0, L1 = 1 };

/// A product of L0/L1 factors, leftmost factor first.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    /// Parses 'A'/'B' text; "" is the empty word. Throws Error(Parse) on other characters.
    static Word parse(std::string_view text);

    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    const std::vector<Letter>& letters() const noexcept { return letters_; }

    std::size_t count(Letter letter) const noexcept;

    /// 'A'/'B' text; the empty word gives "".
    std::string str() const;

    friend Word operator+(const Word& lhs, const Word& rhs);

    friend bool operator==(const Word&, const Word&) = default;
    /// Shortlex: shorter words first, then lexicographic with L0 < L1.
    friend std::strong_ordering operator<=>(const Word& lhs, const Word& rhs);

private:
    std::vector<Letter> letters_;
};

}  // namespace noncomm
