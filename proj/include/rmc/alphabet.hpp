#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "rmc/errors.hpp"

namespace rmc {

/// A symbol of the finite alphabet, interned to a dense id in [0, |alphabet|).
struct Symbol {
    int id = 0;

    friend bool operator==(Symbol a, Symbol b) { return a.id == b.id; }
    friend bool operator!=(Symbol a, Symbol b) { return a.id != b.id; }
};

/// Ordered finite alphabet. The ordering is fixed at construction and defines
/// the "first symbol" used for all deterministic tie-breaks.
class Alphabet {
  public:
    Alphabet() = default;

    explicit Alphabet(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
        if (tokens_.empty())
            throw UsageError("alphabet must be nonempty");
        for (int i = 0; i < static_cast<int>(tokens_.size()); ++i) {
            const std::string& t = tokens_[i];
            if (t.empty() || t == "*" || t == "#")
                throw UsageError("invalid alphabet token '" + t + "'");
            if (!ids_.emplace(t, i).second)
                throw UsageError("duplicate alphabet token '" + t + "'");
        }
    }

    /// Alphabet used when the matrix contains no symbol at all.
    static Alphabet synthetic() { return Alphabet({"a"}); }

    int size() const { return static_cast<int>(tokens_.size()); }
    Symbol first() const { return Symbol{0}; }

    const std::string& token(int id) const { return tokens_.at(static_cast<size_t>(id)); }
    const std::string& token(Symbol s) const { return token(s.id); }

    /// Id of a token, or -1 if the token is not part of the alphabet.
    int id_of(const std::string& token) const {
        auto it = ids_.find(token);
        return it == ids_.end() ? -1 : it->second;
    }

    const std::vector<std::string>& tokens() const { return tokens_; }

    friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.tokens_ == b.tokens_; }

  private:
    std::vector<std::string> tokens_;
    std::unordered_map<std::string, int> ids_;
};

} // namespace rmc
