#include "cpq/rewrite.hpp"

#include <algorithm>
#include <functional>

#include "cpq/errors.hpp"

namespace cpq {

namespace {
thread_local std::size_t tl_steps = 0;
constexpr std::size_t kMaxDepth = 50000;
}  // namespace

std::size_t RewriteSystem::WordHash::operator()(const Word& w) const {
    std::size_t h = 1469598103934665603ull;
    for (auto g : w) {
        h ^= g.code();
        h *= 1099511628211ull;
    }
    return h;
}

RewriteSystem::RewriteSystem(std::string name) : name_(std::move(name)) {}

RewriteSystem::RewriteSystem(const RewriteSystem& o)
    : name_(o.name_),
      rank_(o.rank_),
      next_rank_(o.next_rank_),
      rules_(o.rules_),
      rule_index_(o.rule_index_),
      star_(o.star_),
      value_(o.value_),
      step_budget_(o.step_budget_) {}

RewriteSystem& RewriteSystem::operator=(const RewriteSystem& o) {
    if (this == &o) return *this;
    name_ = o.name_;
    rank_ = o.rank_;
    next_rank_ = o.next_rank_;
    rules_ = o.rules_;
    rule_index_ = o.rule_index_;
    star_ = o.star_;
    value_ = o.value_;
    step_budget_ = o.step_budget_;
    clear_cache();
    return *this;
}

void RewriteSystem::add_generator(Gen g) {
    add_generator(g, next_rank_);
}

void RewriteSystem::add_generator(Gen g, std::int64_t rank) {
    rank_[g.code()] = rank;
    next_rank_ = std::max(next_rank_, rank + 1024);
    clear_cache();
}

std::int64_t RewriteSystem::rank(Gen g) const {
    auto it = rank_.find(g.code());
    if (it == rank_.end()) throw UnknownGenerator("generator " + to_string(g) + " is not in system " + name_);
    return it->second;
}

std::vector<Gen> RewriteSystem::alphabet() const {
    std::vector<std::pair<std::int64_t, Gen>> v;
    for (const auto& [c, r] : rank_) v.emplace_back(r, Gen::from_code(c));
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Gen> out;
    for (const auto& [r, g] : v) out.push_back(g);
    return out;
}

bool RewriteSystem::word_less(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] == b[k]) continue;
        return rank(a[k]) < rank(b[k]);
    }
    return false;
}

Word RewriteSystem::leading_word(const NCPoly& p) const {
    const Word* best = nullptr;
    for (const auto& [w, c] : p.terms())
        if (!best || word_less(*best, w)) best = &w;
    return best ? *best : Word{};
}

void RewriteSystem::add_rule(Gen a, Gen b, const NCPoly& rhs, bool check_order) {
    const Word lhs{a, b};
    rank(a);
    rank(b);
    if (check_order) {
        for (const auto& [w, c] : rhs.terms()) {
            for (auto g : w) rank(g);
            if (!word_less(w, lhs))
                throw OrientationFailure("rule " + to_string(lhs) + " -> " + rhs.str() + " in " + name_ +
                                         " is not order-decreasing");
        }
    }
    const auto key = pair_key(a, b);
    if (auto it = rule_index_.find(key); it != rule_index_.end()) {
        rules_[it->second] = Rule{a, b, rhs, check_order};
    } else {
        rule_index_[key] = rules_.size();
        rules_.push_back(Rule{a, b, rhs, check_order});
    }
    clear_cache();
}

void RewriteSystem::orient_relations(const std::vector<NCPoly>& relations) {
    for (const auto& rel : relations) {
        NCPoly p = normal_form(rel);
        if (p.is_zero()) continue;
        Word lead = leading_word(p);
        if (lead.size() != 2)
            throw OrientationFailure("relation " + rel.str() + " has leading word " + to_string(lead) +
                                     " of length " + std::to_string(lead.size()) + " in " + name_);
        QRat c = p.coeff(lead);
        p.add_term(lead, -c);
        add_rule(lead[0], lead[1], p * (-c.inv()));
    }
}

const Rule* RewriteSystem::find_rule(Gen a, Gen b) const {
    auto it = rule_index_.find(pair_key(a, b));
    return it == rule_index_.end() ? nullptr : &rules_[it->second];
}

std::vector<std::pair<Gen, Gen>> RewriteSystem::ungoverned_inversions() const {
    std::vector<std::pair<Gen, Gen>> out;
    auto alpha = alphabet();
    for (auto a : alpha)
        for (auto b : alpha)
            if (rank(a) > rank(b) && !find_rule(a, b)) out.emplace_back(a, b);
    return out;
}

bool RewriteSystem::is_normal(const Word& w) const {
    for (std::size_t k = 0; k + 1 < w.size(); ++k)
        if (find_rule(w[k], w[k + 1])) return false;
    return true;
}

void RewriteSystem::count_step() const {
    if (++tl_steps > step_budget_)
        throw NonTerminating("rewriting in " + name_ + " exceeded the step budget of " +
                             std::to_string(step_budget_));
}

NCPoly RewriteSystem::mul_normal(const Word& u, Gen g, std::size_t depth) const {
    if (depth > kMaxDepth) throw NonTerminating("rewriting in " + name_ + " exceeded the recursion limit");
    const Rule* r = u.empty() ? nullptr : find_rule(u.back(), g);
    Word w = u;
    w.push_back(g);
    if (!r) return NCPoly(w);
    {
        std::lock_guard<std::mutex> lock(*cache_mutex_);
        if (auto it = cache_.find(w); it != cache_.end()) return it->second;
    }
    count_step();
    Word prefix(u.begin(), u.end() - 1);
    NCPoly out;
    for (const auto& [v, c] : r->rhs.terms()) {
        NCPoly part = nf_concat(prefix, v, depth + 1);
        part *= c;
        out += part;
    }
    {
        std::lock_guard<std::mutex> lock(*cache_mutex_);
        if (cache_.size() > 2000000) cache_.clear();
        cache_.emplace(std::move(w), out);
    }
    return out;
}

NCPoly RewriteSystem::nf_concat(const Word& prefix, const Word& v, std::size_t depth) const {
    NCPoly cur(prefix);
    for (auto x : v) {
        NCPoly next;
        for (const auto& [w, c] : cur.terms()) {
            NCPoly t = mul_normal(w, x, depth + 1);
            t *= c;
            next += t;
        }
        cur = std::move(next);
        if (cur.is_zero()) break;
    }
    return cur;
}

NCPoly RewriteSystem::normal_form(const NCPoly& p) const {
    tl_steps = 0;
    NCPoly out;
    for (const auto& [w, c] : p.terms()) {
        NCPoly t = nf_concat(Word{}, w, 0);
        t *= c;
        out += t;
    }
    return out;
}

NCPoly RewriteSystem::star(const NCPoly& p) const {
    NCPoly out;
    for (const auto& [w, c] : p.terms()) {
        NCPoly t = c;
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            auto s = star_.find(it->code());
            if (s == star_.end())
                throw UnsupportedGenerator("no *-image declared for " + to_string(*it) + " in " + name_);
            t = t * s->second;
        }
        out += t;
    }
    return out;
}

std::optional<NCPoly> RewriteSystem::value(Gen g) const {
    auto it = value_.find(g.code());
    if (it == value_.end()) return std::nullopt;
    return it->second;
}

NCPoly RewriteSystem::expand(const NCPoly& p) const {
    // values may mention earlier adjoined letters (rho_r = rho_{r-1} + z_r zb^r)
    std::function<NCPoly(Gen)> sub = [&](Gen g) {
        auto it = value_.find(g.code());
        return it == value_.end() ? NCPoly(g) : it->second.substitute(sub);
    };
    return p.substitute(sub);
}

void RewriteSystem::clear_cache() const {
    std::lock_guard<std::mutex> lock(*cache_mutex_);
    cache_.clear();
}

std::vector<ConfluenceFailure> local_confluence_failures(const RewriteSystem& sys, std::size_t max_failures) {
    std::unordered_map<std::uint32_t, std::vector<const Rule*>> by_first;
    for (const auto& r : sys.rules()) by_first[r.lhs_first.code()].push_back(&r);
    std::vector<ConfluenceFailure> out;
    for (const auto& r1 : sys.rules()) {
        auto it = by_first.find(r1.lhs_second.code());
        if (it == by_first.end()) continue;
        for (const Rule* r2 : it->second) {
            NCPoly left = sys.normal_form(r1.rhs * NCPoly(r2->lhs_second));
            NCPoly right = sys.normal_form(NCPoly(r1.lhs_first) * r2->rhs);
            if (!(left == right)) {
                out.push_back({Word{r1.lhs_first, r1.lhs_second, r2->lhs_second}, left, right});
                if (out.size() >= max_failures) return out;
            }
        }
    }
    return out;
}

std::vector<std::size_t> normal_word_counts(const RewriteSystem& sys, const std::vector<Gen>& letters,
                                            int max_len) {
    std::vector<std::size_t> counts(static_cast<std::size_t>(max_len) + 1, 0);
    counts[0] = 1;
    // frontier holds the last letter of each normal word of the current length
    std::vector<std::size_t> frontier(letters.size(), 1);
    if (max_len >= 1) counts[1] = letters.size();
    for (int len = 2; len <= max_len; ++len) {
        std::vector<std::size_t> next(letters.size(), 0);
        for (std::size_t a = 0; a < letters.size(); ++a)
            for (std::size_t b = 0; b < letters.size(); ++b)
                if (!sys.find_rule(letters[a], letters[b])) next[b] += frontier[a];
        frontier = std::move(next);
        std::size_t total = 0;
        for (auto n : frontier) total += n;
        counts[static_cast<std::size_t>(len)] = total;
    }
    return counts;
}

}  // namespace cpq
