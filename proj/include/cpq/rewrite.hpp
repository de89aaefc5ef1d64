#pragma once

// Oriented quadratic rewriting to PBW normal form.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cpq/ncpoly.hpp"

namespace cpq {

struct Rule {
    Gen lhs_first;
    Gen lhs_second;
    NCPoly rhs;
    /// False for derived localization rules whose right side may be longer than two letters.
    bool order_checked = true;
};

/// A critical-pair failure found by the local confluence check.
struct ConfluenceFailure {
    Word overlap;
    NCPoly left_path;
    NCPoly right_path;
};

/// Rewriting system over a finite alphabet with a degree-lexicographic order.
///
/// Generators carry a rank; words compare first by length and then
/// lexicographically by rank. Every rule rewrites a two-letter word. A word is
/// normal when no adjacent pair is the left side of a rule.
class RewriteSystem {
public:
    explicit RewriteSystem(std::string name = {});
    RewriteSystem(const RewriteSystem& o);
    RewriteSystem& operator=(const RewriteSystem& o);

    const std::string& name() const { return name_; }

    /// Append g to the alphabet with the next rank (larger than every rank so far).
    void add_generator(Gen g);
    /// Insert g with an explicit rank; ranks may be fractional via spacing.
    void add_generator(Gen g, std::int64_t rank);
    bool has_generator(Gen g) const { return rank_.count(g.code()) != 0; }
    std::int64_t rank(Gen g) const;
    std::vector<Gen> alphabet() const;

    bool word_less(const Word& a, const Word& b) const;
    /// Largest word of p under the order; p must be nonzero.
    Word leading_word(const NCPoly& p) const;

    void add_rule(Gen a, Gen b, const NCPoly& rhs, bool check_order = true);
    /// Turn relations (each = 0) into rules by online Gaussian elimination
    /// against the current rules. Throws OrientationFailure when a leading
    /// word is not a two-letter word.
    void orient_relations(const std::vector<NCPoly>& relations);
    const Rule* find_rule(Gen a, Gen b) const;
    const std::vector<Rule>& rules() const { return rules_; }

    /// Pairs (a, b) of alphabet letters with rank(a) > rank(b) that have no rule.
    std::vector<std::pair<Gen, Gen>> ungoverned_inversions() const;

    bool is_normal(const Word& w) const;
    /// Unique normal form; idempotent and linear. Throws NonTerminating past the step budget.
    NCPoly normal_form(const NCPoly& p) const;
    NCPoly nf_product(const NCPoly& a, const NCPoly& b) const { return normal_form(a * b); }
    bool reduces_to_zero(const NCPoly& p) const { return normal_form(p).is_zero(); }

    void set_step_budget(std::size_t steps) { step_budget_ = steps; }

    // -- involution and adjoined-element data

    void set_star(Gen g, const NCPoly& image) { star_[g.code()] = image; }
    bool has_star(Gen g) const { return star_.count(g.code()) != 0; }
    /// Anti-multiplicative image; coefficients are fixed (q is real).
    /// Throws UnsupportedGenerator for letters without a declared image.
    NCPoly star(const NCPoly& p) const;

    void set_value(Gen g, const NCPoly& value) { value_[g.code()] = value; }
    std::optional<NCPoly> value(Gen g) const;
    /// Replace adjoined letters (rho_r, L, ...) by their defining polynomials.
    NCPoly expand(const NCPoly& p) const;

    void clear_cache() const;

private:
    struct WordHash {
        std::size_t operator()(const Word& w) const;
    };
    static std::uint64_t pair_key(Gen a, Gen b) {
        return (static_cast<std::uint64_t>(a.code()) << 32) | b.code();
    }
    NCPoly mul_normal(const Word& u, Gen g, std::size_t depth) const;
    NCPoly nf_concat(const Word& prefix, const Word& v, std::size_t depth) const;
    void count_step() const;

    std::string name_;
    std::unordered_map<std::uint32_t, std::int64_t> rank_;
    std::int64_t next_rank_ = 0;
    std::vector<Rule> rules_;
    std::unordered_map<std::uint64_t, std::size_t> rule_index_;
    std::unordered_map<std::uint32_t, NCPoly> star_;
    std::unordered_map<std::uint32_t, NCPoly> value_;
    std::size_t step_budget_ = 1000000;

    mutable std::unique_ptr<std::mutex> cache_mutex_ = std::make_unique<std::mutex>();
    mutable std::unordered_map<Word, NCPoly, WordHash> cache_;
    mutable std::size_t steps_ = 0;
};

/// Every overlap a·b·c of two rules, reduced both ways. Empty result = locally confluent.
std::vector<ConfluenceFailure> local_confluence_failures(const RewriteSystem& sys,
                                                         std::size_t max_failures = 16);

/// Number of normal words of each length 0..max_len over the given letters.
std::vector<std::size_t> normal_word_counts(const RewriteSystem& sys, const std::vector<Gen>& letters,
                                            int max_len);

}  // namespace cpq
