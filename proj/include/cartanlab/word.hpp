#pragma once

#include <string>
#include <vector>

#include "cartanlab/field.hpp"
#include "cartanlab/matrix.hpp"

namespace cartanlab {

/// One letter of a group word: generator index (0-based) and sign.
struct Letter {
    int index = 0;
    int sign = 1; // +1 or -1

    bool operator==(const Letter&) const = default;
};

/// Word in the generators of a finitely generated group.
struct GroupWord {
    std::vector<Letter> letters;

    static GroupWord empty() { return {}; }

    int length() const { return static_cast<int>(letters.size()); }

    GroupWord appended(Letter l) const {
        GroupWord w = *this;
        w.letters.push_back(l);
        return w;
    }

    /// Reversed letters with flipped signs.
    GroupWord inverse() const {
        GroupWord w;
        w.letters.reserve(letters.size());
        for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
            w.letters.push_back({it->index, -it->sign});
        }
        return w;
    }

    /// "a b^-1 a"; the empty word prints as "1".
    std::string str(const std::vector<std::string>& labels) const {
        if (letters.empty()) return "1";
        std::string out;
        for (std::size_t i = 0; i < letters.size(); ++i) {
            if (i) out += ' ';
            const std::size_t idx = static_cast<std::size_t>(letters[i].index);
            out += idx < labels.size() ? labels[idx] : "g" + std::to_string(idx + 1);
            if (letters[i].sign < 0) out += "^-1";
        }
        return out;
    }

    bool operator==(const GroupWord&) const = default;
};

/// Finitely many SL elements (or pairs) generating a subgroup; all share one
/// dimension and one coefficient domain, and each has det = 1.
template <class Elem>
struct GeneratorSet {
    FieldDescriptor field;
    int n = 0;
    std::vector<Elem> generators;
    std::vector<std::string> labels;

    const Elem& at(int index) const {
        if (index < 0 || index >= static_cast<int>(generators.size())) {
            throw WordIndexError("generator index " + std::to_string(index) + " out of range");
        }
        return generators[static_cast<std::size_t>(index)];
    }

    std::size_t size() const { return generators.size(); }
};

/// Default labels g1, g2, ... when the input provides none.
inline std::vector<std::string> default_labels(std::size_t count) {
    std::vector<std::string> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back("g" + std::to_string(i + 1));
    return out;
}

/// Left-to-right product of generators and inverses; the empty word gives
/// the identity.
template <class Elem>
Elem evaluate_word(const GroupWord& w, const GeneratorSet<Elem>& gens) {
    if (gens.generators.empty()) throw WordIndexError("empty generator set");
    Elem acc = Elem::identity_like(gens.generators[0]);
    for (const Letter& l : w.letters) {
        const Elem& g = gens.at(l.index);
        acc = acc * (l.sign > 0 ? g : g.inverse());
    }
    return acc;
}

} // namespace cartanlab
