#pragma once

#include <string>
#include <vector>

namespace promisefa {

/// Calls fn(word) for every word over the alphabet with length <= max_len,
/// in length-then-lexicographic order. fn returning false stops early.
template <class Fn>
void for_each_word(const std::string& alphabet, int max_len, Fn&& fn) {
    std::string word;
    bool stop = false;
    auto by_len = [&](auto&& self, int remaining) -> void {
        if (stop) return;
        if (remaining == 0) {
            if (!fn(static_cast<const std::string&>(word))) stop = true;
            return;
        }
        for (char c : alphabet) {
            word.push_back(c);
            self(self, remaining - 1);
            word.pop_back();
            if (stop) return;
        }
    };
    for (int len = 0; len <= max_len && !stop; ++len) by_len(by_len, len);
}

inline std::vector<std::string> all_words(const std::string& alphabet, int max_len) {
    std::vector<std::string> out;
    for_each_word(alphabet, max_len, [&](const std::string& w) {
        out.push_back(w);
        return true;
    });
    return out;
}

}  // namespace promisefa
