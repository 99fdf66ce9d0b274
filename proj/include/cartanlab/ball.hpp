#pragma once

#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cartanlab/word.hpp"

namespace cartanlab {

struct EnumConfig {
    int max_radius = 4;
    std::size_t max_elements = 200000;
    bool parallel = true;
};

template <class Elem>
struct BallEntry {
    Elem element;
    GroupWord word; // a shortest word for this element
    int length = 0;
    std::string key;
};

/// Word ball B_L of a finitely generated group: every element reachable by a
/// word of length <= L, exactly deduplicated by canonical key.  Entries are
/// ordered by (word length, key); the identity with the empty word is entry 0.
template <class Elem>
class Ball {
public:
    Ball(GeneratorSet<Elem> gens, int radius, std::vector<BallEntry<Elem>> entries)
        : gens_(std::move(gens)), radius_(radius), entries_(std::move(entries)) {
        for (std::size_t i = 0; i < entries_.size(); ++i) index_.emplace(entries_[i].key, i);
    }

    int radius() const { return radius_; }
    std::size_t size() const { return entries_.size(); }
    const GeneratorSet<Elem>& generators() const { return gens_; }
    const std::vector<BallEntry<Elem>>& entries() const { return entries_; }

    const BallEntry<Elem>* find(const std::string& key) const {
        auto it = index_.find(key);
        return it == index_.end() ? nullptr : &entries_[it->second];
    }

    bool contains(const Elem& e) const { return find(e.key()) != nullptr; }

private:
    GeneratorSet<Elem> gens_;
    int radius_;
    std::vector<BallEntry<Elem>> entries_;
    std::map<std::string, std::size_t> index_;
};

/// Element cap hit: carries the ball completed through the last full radius.
template <class Elem>
class BallCapError : public Error {
public:
    BallCapError(Ball<Elem> partial, int completed_radius)
        : Error("element cap exceeded; completed radius " + std::to_string(completed_radius)),
          partial_ball(std::move(partial)),
          completed_radius(completed_radius) {}

    Ball<Elem> partial_ball;
    int completed_radius;
};

namespace detail {

template <class Elem>
struct Candidate {
    std::string key;
    std::size_t parent;
    std::size_t action;
    Elem element;
};

/// Breadth-first closure B_{L+1} = B_L u (B_L * generators^{+-}).  The
/// parallel and serial paths pick identical shortest words: candidates of a
/// level are ranked by (key, parent, action) and the first per key wins,
/// which reproduces the serial first-discovered rule under the fixed
/// generator ordering g1, g1^-1, g2, g2^-1, ...
template <class Elem>
Ball<Elem> generate_ball_impl(const GeneratorSet<Elem>& gens, const EnumConfig& cfg, bool parallel) {
    if (gens.generators.empty()) throw WordIndexError("empty generator set");
    if (cfg.max_radius < 0 || cfg.max_elements == 0) throw Error("enum caps must be positive");

    std::vector<Elem> actions;
    std::vector<Letter> action_letters;
    for (std::size_t i = 0; i < gens.generators.size(); ++i) {
        actions.push_back(gens.generators[i]);
        action_letters.push_back({static_cast<int>(i), +1});
        actions.push_back(gens.generators[i].inverse());
        action_letters.push_back({static_cast<int>(i), -1});
    }

    std::vector<BallEntry<Elem>> entries;
    const Elem id = Elem::identity_like(gens.generators[0]);
    entries.push_back({id, GroupWord::empty(), 0, id.key()});
    std::map<std::string, std::size_t> seen;
    seen.emplace(entries[0].key, 0);

    std::vector<std::size_t> frontier{0};

    for (int level = 1; level <= cfg.max_radius && !frontier.empty(); ++level) {
        std::vector<detail::Candidate<Elem>> candidates;
        const std::size_t fsize = frontier.size();
        const std::size_t asize = actions.size();

        if (parallel) {
            std::vector<std::vector<detail::Candidate<Elem>>> per_thread;
#pragma omp parallel
            {
#pragma omp single
                per_thread.resize(static_cast<std::size_t>(omp_get_num_threads()));
                auto& mine = per_thread[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
                for (std::size_t fi = 0; fi < fsize; ++fi) {
                    const Elem& base = entries[frontier[fi]].element;
                    for (std::size_t ai = 0; ai < asize; ++ai) {
                        Elem next = base * actions[ai];
                        std::string key = next.key();
                        mine.push_back({std::move(key), fi, ai, std::move(next)});
                    }
                }
            }
            std::size_t total = 0;
            for (const auto& v : per_thread) total += v.size();
            candidates.reserve(total);
            for (auto& v : per_thread) {
                for (auto& c : v) candidates.push_back(std::move(c));
            }
        } else {
            candidates.reserve(fsize * asize);
            for (std::size_t fi = 0; fi < fsize; ++fi) {
                const Elem& base = entries[frontier[fi]].element;
                for (std::size_t ai = 0; ai < asize; ++ai) {
                    Elem next = base * actions[ai];
                    std::string key = next.key();
                    candidates.push_back({std::move(key), fi, ai, std::move(next)});
                }
            }
        }

        std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
            if (a.key != b.key) return a.key < b.key;
            if (a.parent != b.parent) return a.parent < b.parent;
            return a.action < b.action;
        });

        std::vector<std::size_t> next_frontier;
        std::vector<BallEntry<Elem>> fresh;
        const std::string* prev_key = nullptr;
        for (auto& c : candidates) {
            if (prev_key && *prev_key == c.key) continue;
            prev_key = &c.key;
            if (seen.contains(c.key)) continue;
            GroupWord w = entries[frontier[c.parent]].word.appended(action_letters[c.action]);
            fresh.push_back({std::move(c.element), std::move(w), level, c.key});
        }

        if (entries.size() + fresh.size() > cfg.max_elements) {
            throw BallCapError<Elem>(Ball<Elem>(gens, level - 1, std::move(entries)), level - 1);
        }

        // fresh is key-sorted already; append and record the new frontier
        for (auto& e : fresh) {
            seen.emplace(e.key, entries.size());
            next_frontier.push_back(entries.size());
            entries.push_back(std::move(e));
        }
        frontier = std::move(next_frontier);
    }

    return Ball<Elem>(gens, cfg.max_radius, std::move(entries));
}

} // namespace detail

template <class Elem>
Ball<Elem> generate_ball(const GeneratorSet<Elem>& gens, const EnumConfig& cfg) {
    return detail::generate_ball_impl(gens, cfg, cfg.parallel);
}

/// Single-worker reference path; bit-identical to generate_ball by contract.
template <class Elem>
Ball<Elem> generate_ball_serial(const GeneratorSet<Elem>& gens, const EnumConfig& cfg) {
    return detail::generate_ball_impl(gens, cfg, false);
}

/// Least m <= max_order with g^m = 1, if any (nullopt signals possibly
/// infinite order).
template <class Elem>
std::optional<int> element_order(const Elem& g, int max_order = 64) {
    if (max_order < 1) throw Error("max_order must be >= 1");
    const Elem id = Elem::identity_like(g);
    Elem acc = g;
    for (int m = 1; m <= max_order; ++m) {
        if (acc == id) return m;
        acc = acc * g;
    }
    return std::nullopt;
}

/// Element cap for ball enumeration: CARTAN_LAB_MAX_ELEMENTS overrides.
inline std::size_t default_max_elements() {
    if (const char* env = std::getenv("CARTAN_LAB_MAX_ELEMENTS")) {
        const long long v = std::atoll(env);
        if (v > 0) return static_cast<std::size_t>(v);
    }
    return 200000;
}

} // namespace cartanlab
