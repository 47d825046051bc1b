#include "noncomm/permsum.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace noncomm {

std::size_t enumeration_cap() {
    const char* env = std::getenv("NONCOMM_RECUR_CAP");
    if (env == nullptr || *env == '\0') return default_enumeration_cap;
    try {
        std::size_t consumed = 0;
        const unsigned long value = std::stoul(env, &consumed);
        if (consumed == std::char_traits<char>::length(env)) return value;
    } catch (const std::exception&) {
    }
    throw Error(ErrorKind::Parse, std::string("NONCOMM_RECUR_CAP must be a nonnegative integer, got \"") + env + "\"");
}

BigInt count_terms(unsigned u, unsigned v) {
    return binomial(static_cast<long>(u) + v, std::min(u, v));
}

std::vector<Word> enumerate_words(unsigned u, unsigned v, std::size_t cap) {
    const std::size_t length = static_cast<std::size_t>(u) + v;
    if (length > cap)
        throw Error(ErrorKind::CapExceeded, "enumeration of words with u + v = " + std::to_string(length) +
                                                " exceeds the cap of " + std::to_string(cap) +
                                                " letters (set NONCOMM_RECUR_CAP to raise it)");

    std::vector<Letter> letters(u, Letter::L0);
    letters.insert(letters.end(), v, Letter::L1);
    std::vector<Word> out;
    out.reserve(count_terms(u, v).get_ui());
    // next_permutation walks the distinct arrangements of a multiset in lexicographic order.
    do {
        out.emplace_back(letters);
    } while (std::next_permutation(letters.begin(), letters.end()));
    return out;
}

bool stifel_check(long n, long k) {
    return binomial(n, k) + binomial(n, k + 1) == binomial(n + 1, k + 1);
}

}  // namespace noncomm
