#pragma once

#include "cartanlab/matrix.hpp"
#include "cartanlab/word.hpp"

namespace cartanlab {

/// Element of G x G as a first-class pair; all group operations act
/// componentwise.  Keeping pairs explicit (rather than block matrices) keeps
/// the per-factor Cartan projection explicit.
template <class S>
struct PairElem {
    SquareMatrix<S> left;
    SquareMatrix<S> right;

    static PairElem identity_like(const PairElem& proto) {
        return {SquareMatrix<S>::identity_like(proto.left), SquareMatrix<S>::identity_like(proto.right)};
    }

    PairElem operator*(const PairElem& o) const { return {left * o.left, right * o.right}; }

    PairElem inverse() const { return {left.inverse(), right.inverse()}; }

    bool operator==(const PairElem& o) const { return left == o.left && right == o.right; }
    bool operator!=(const PairElem& o) const { return !(*this == o); }

    std::string key() const { return left.key() + "|" + right.key(); }

    std::size_t bit_size() const { return left.bit_size() + right.bit_size(); }
};

/// Pairs generator i of the left set with generator i of the right set.
template <class S>
GeneratorSet<PairElem<S>> pair_group(const GeneratorSet<SquareMatrix<S>>& left,
                                     const GeneratorSet<SquareMatrix<S>>& right) {
    if (left.generators.size() != right.generators.size()) {
        throw DomainMismatchError("pair_group requires equally many generators on both sides");
    }
    if (left.field != right.field) throw DomainMismatchError("pair_group requires one field");
    if (left.n != right.n) throw DimensionError("pair_group requires one dimension");
    GeneratorSet<PairElem<S>> out;
    out.field = left.field;
    out.n = left.n;
    out.generators.reserve(left.generators.size());
    for (std::size_t i = 0; i < left.generators.size(); ++i) {
        out.generators.push_back({left.generators[i], right.generators[i]});
    }
    out.labels.reserve(left.generators.size());
    for (std::size_t i = 0; i < left.generators.size(); ++i) {
        const std::string l = i < left.labels.size() ? left.labels[i] : "g" + std::to_string(i + 1);
        const std::string r = i < right.labels.size() ? right.labels[i] : "h" + std::to_string(i + 1);
        out.labels.push_back("(" + l + "," + r + ")");
    }
    return out;
}

} // namespace cartanlab
