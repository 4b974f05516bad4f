#ifndef TOURNEY_SEARCH_HPP
#define TOURNEY_SEARCH_HPP

#include "tourney/audit.hpp"
#include "tourney/error.hpp"
#include "tourney/methods.hpp"
#include "tourney/problem.hpp"

#include <boost/container_hash/hash.hpp>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace tourney
{

/// Which candidate problems the search may use as inputs of a witness.
enum class Domain
{
    All,
    Connected,
    Irreducible,
    RoundRobin,
};

constexpr std::string_view to_string(Domain d)
{
    switch (d)
    {
    case Domain::All: return "all";
    case Domain::Connected: return "connected";
    case Domain::Irreducible: return "irreducible";
    case Domain::RoundRobin: return "roundrobin";
    }
    return "?";
}

inline std::optional< Domain > parse_domain(std::string_view text)
{
    for (auto d : {Domain::All, Domain::Connected, Domain::Irreducible, Domain::RoundRobin})
        if (to_string(d) == text)
            return d;
    return std::nullopt;
}

enum class SearchMode
{
    Exhaustive,
    Random,
};

/// Candidate tournaments live on the half-integer grid: for every pair, m_ij in [0, max_matches]
/// (a common m in [1, max_matches] for round-robin) and an integer result a_ij with |a_ij| <= m_ij.
struct SearchConfig
{
    std::vector< std::size_t > object_counts{3};
    unsigned                   max_matches = 1;
    Domain                     domain      = Domain::All;
    SearchMode                 mode        = SearchMode::Exhaustive;
    std::uint64_t              seed        = 0;
    std::size_t                budget      = 1'000'000; // candidate witnesses examined at most
    std::size_t                max_hits    = 0;         // 0: collect every violation

    void validate() const
    {
        if (object_counts.empty())
            throw Error(ErrorCode::PreconditionUnmet, "search needs at least one object count");
        for (auto n : object_counts)
            if (n < 2)
                throw Error(ErrorCode::FewerThanTwoObjects, "object counts must be at least two");
        if (max_matches == 0)
            throw Error(ErrorCode::PreconditionUnmet, "max_matches must be positive");
        if (budget == 0)
            throw Error(ErrorCode::PreconditionUnmet, "budget must be positive");
    }
};

struct SearchResult
{
    std::vector< Witness > witnesses;
    std::size_t            searched     = 0; // candidate witnesses examined
    std::size_t            inadmissible = 0; // skipped because a method precondition failed
    bool                   budget_exhausted = false;
};

namespace detail
{

/// Compact candidate: the doubled tournament 2T (integers on the half-integer grid), row-major.
struct Grid
{
    std::size_t        n = 0;
    std::vector< int > twice;
    int                total = 0; // sum of m_ij over unordered pairs

    int& at(std::size_t i, std::size_t j) { return twice[i * n + j]; }
    int  at(std::size_t i, std::size_t j) const { return twice[i * n + j]; }
    int  matches(std::size_t i, std::size_t j) const { return (at(i, j) + at(j, i)) / 2; }

    friend bool operator==(const Grid&, const Grid&) = default;
};

struct GridHash
{
    std::size_t operator()(const Grid& g) const { return boost::hash_range(g.twice.begin(), g.twice.end()); }
};

inline Grid empty_grid(std::size_t n) { return {n, std::vector< int >(n * n, 0), 0}; }

inline void set_pair(Grid& g, std::size_t i, std::size_t j, int m, int a)
{
    g.total += m - g.matches(i, j);
    g.at(i, j) = m + a;
    g.at(j, i) = m - a;
}

inline Grid add(const Grid& x, const Grid& y)
{
    Grid out = x;
    for (std::size_t k = 0; k < out.twice.size(); ++k)
        out.twice[k] += y.twice[k];
    out.total += y.total;
    return out;
}

inline RankingProblem to_problem(const Grid& g)
{
    Matrix t(g.n, g.n);
    for (std::size_t i = 0; i < g.n; ++i)
        for (std::size_t j = 0; j < g.n; ++j)
            t(i, j) = Rational(g.at(i, j), 2);
    return RankingProblem(default_labels(g.n), std::move(t));
}

inline Grid permute(const Grid& g, const Permutation& sigma)
{
    Grid out = g;
    for (std::size_t i = 0; i < g.n; ++i)
        for (std::size_t j = 0; j < g.n; ++j)
            out.at(sigma.image(i), sigma.image(j)) = g.at(i, j);
    return out;
}

inline Grid transposed(const Grid& g)
{
    Grid out = g;
    for (std::size_t i = 0; i < g.n; ++i)
        for (std::size_t j = 0; j < g.n; ++j)
            out.at(i, j) = g.at(j, i);
    return out;
}

template < typename Arc >
bool grid_reaches_all(std::size_t n, Arc arc)
{
    std::vector< bool >        seen(n, false);
    std::vector< std::size_t > stack{0};
    seen[0]           = true;
    std::size_t count = 1;
    while (!stack.empty())
    {
        const auto u = stack.back();
        stack.pop_back();
        for (std::size_t v = 0; v < n; ++v)
            if (!seen[v] && arc(u, v))
            {
                seen[v] = true;
                ++count;
                stack.push_back(v);
            }
    }
    return count == n;
}

inline bool in_domain(const Grid& g, Domain domain)
{
    switch (domain)
    {
    case Domain::All: return true;
    case Domain::Connected:
        return grid_reaches_all(g.n, [&](std::size_t u, std::size_t v) { return g.matches(u, v) > 0; });
    case Domain::Irreducible:
        return grid_reaches_all(g.n, [&](std::size_t u, std::size_t v) { return g.at(u, v) > 0; }) &&
               grid_reaches_all(g.n, [&](std::size_t u, std::size_t v) { return g.at(v, u) > 0; });
    case Domain::RoundRobin: {
        const int m = g.matches(0, 1);
        for (std::size_t i = 0; i < g.n; ++i)
            for (std::size_t j = i + 1; j < g.n; ++j)
                if (g.matches(i, j) != m)
                    return false;
        return m >= 1;
    }
    }
    return false;
}

/// (m, a) choices for one pair, ordered lexicographically by the doubled entries (m + a, m - a).
inline std::vector< std::pair< int, int > > pair_options(int min_m, int max_m)
{
    std::vector< std::pair< int, int > > out;
    for (int m = min_m; m <= max_m; ++m)
        for (int a = -m; a <= m; ++a)
            out.emplace_back(m, a);
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        return std::pair(x.first + x.second, x.first - x.second) < std::pair(y.first + y.second, y.first - y.second);
    });
    return out;
}

inline std::vector< std::pair< std::size_t, std::size_t > > unordered_pairs(std::size_t n)
{
    std::vector< std::pair< std::size_t, std::size_t > > out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            out.emplace_back(i, j);
    return out;
}

/// Every grid with n objects inside the domain, in canonical order: ascending total matches,
/// then lexicographic on the doubled tournament (row-major).
inline std::vector< Grid > enumerate_grids(std::size_t n, unsigned max_matches, Domain domain)
{
    const auto          pairs = unordered_pairs(n);
    std::vector< Grid > out;

    auto emit_all = [&](int min_m, int max_m) {
        const auto options = pair_options(min_m, max_m);
        std::vector< std::size_t > choice(pairs.size(), 0);
        while (true)
        {
            Grid g = empty_grid(n);
            for (std::size_t p = 0; p < pairs.size(); ++p)
                set_pair(g, pairs[p].first, pairs[p].second, options[choice[p]].first, options[choice[p]].second);
            if (in_domain(g, domain))
                out.push_back(std::move(g));

            std::size_t p = pairs.size();
            while (p > 0 && ++choice[p - 1] == options.size())
                choice[--p] = 0;
            if (p == 0)
                break;
        }
    };

    if (domain == Domain::RoundRobin)
        for (int m = 1; m <= static_cast< int >(max_matches); ++m)
            emit_all(m, m);
    else
        emit_all(0, static_cast< int >(max_matches));

    std::sort(out.begin(), out.end(),
              [](const Grid& x, const Grid& y) { return std::tie(x.total, x.twice) < std::tie(y.total, y.twice); });
    return out;
}

/// Memoized ratings keyed by grid; nullopt marks an inadmissible problem.
class RatingCache
{
public:
    explicit RatingCache(MethodSpec spec) : spec_(std::move(spec)) {}

    const std::optional< RatingVector >& get(const Grid& g)
    {
        if (auto it = cache_.find(g); it != cache_.end())
            return it->second;
        std::optional< RatingVector > value;
        try
        {
            value = rate(to_problem(g), spec_);
        }
        catch (const Error& e)
        {
            if (!is_method_precondition(e.code()))
                throw;
        }
        return cache_.emplace(g, std::move(value)).first->second;
    }

private:
    MethodSpec                                                         spec_;
    std::unordered_map< Grid, std::optional< RatingVector >, GridHash > cache_;
};

/// Candidate examination shared by both enumeration modes. Returns false once the search must stop.
class Evaluator
{
public:
    Evaluator(Axiom axiom, const MethodSpec& spec, const SearchConfig& config, SearchResult& result)
        : axiom_(axiom), spec_(spec), config_(config), result_(result), cache_(spec)
    {}

    [[nodiscard]] bool stopped() const { return stopped_; }

    /// Counts a candidate that could not be drawn inside the domain.
    void consume()
    {
        if (begin())
            skip();
    }

    void single(const Grid& p, const std::optional< Permutation >& sigma)
    {
        if (!begin())
            return;
        const auto& f = cache_.get(p);
        if (!f)
            return skip();
        std::vector< Violation > v;
        switch (axiom_)
        {
        case Axiom::NEU: {
            const auto& g = cache_.get(permute(p, *sigma));
            if (!g)
                return skip();
            v = neu_violations(*f, *g, *sigma);
            break;
        }
        case Axiom::SYM: v = sym_violations(*f); break;
        case Axiom::INV: {
            const auto& g = cache_.get(transposed(p));
            if (!g)
                return skip();
            v = inv_violations(*f, *g);
            break;
        }
        default: break;
        }
        if (!v.empty())
            record(SingleWitness{to_problem(p), sigma});
    }

    void pair(const Grid& p, const Grid& q)
    {
        if (!begin())
            return;
        const auto& f = cache_.get(p);
        if (!f)
            return skip();
        const auto& g = cache_.get(q);
        if (!g)
            return skip();
        if (axiom_ == Axiom::FP && !(is_flat(*f) && is_flat(*g)))
            return skip();
        const auto& h = cache_.get(add(p, q));
        if (!h)
            return skip();
        if (!additivity_violations(axiom_, *f, *g, *h).empty())
            record(PairWitness{to_problem(p), to_problem(q)});
    }

    void independence(const Grid& p, const Grid& q, std::size_t k, std::size_t l)
    {
        if (!begin())
            return;
        const auto& f = cache_.get(p);
        if (!f)
            return skip();
        const auto& g = cache_.get(q);
        if (!g)
            return skip();
        if (!independence_violations(*f, *g, k, l).empty())
            record(IndependenceWitness{to_problem(p), to_problem(q), k, l});
    }

    /// Rating flatness of a grid, used to restrict FP candidates.
    bool flat_rating(const Grid& g)
    {
        const auto& f = cache_.get(g);
        return f && is_flat(*f);
    }

private:
    bool begin()
    {
        if (stopped_)
            return false;
        if (result_.searched >= config_.budget)
        {
            result_.budget_exhausted = true;
            stopped_                 = true;
            return false;
        }
        ++result_.searched;
        return true;
    }

    void skip() { ++result_.inadmissible; }

    void record(Witness w)
    {
        // Every reported witness is confirmed by the public checker.
        if (!check(axiom_, spec_, w).violated())
            throw std::logic_error("search hit failed re-verification");
        result_.witnesses.push_back(std::move(w));
        if (config_.max_hits != 0 && result_.witnesses.size() >= config_.max_hits)
            stopped_ = true;
    }

    Axiom               axiom_;
    MethodSpec          spec_;
    const SearchConfig& config_;
    SearchResult&       result_;
    RatingCache         cache_;
    bool                stopped_ = false;
};

inline std::vector< Permutation > nonidentity_permutations(std::size_t n)
{
    std::vector< std::size_t > m(n);
    for (std::size_t k = 0; k < n; ++k)
        m[k] = k;
    std::vector< Permutation > out;
    while (std::next_permutation(m.begin(), m.end()))
        out.emplace_back(m);
    return out;
}

inline void exhaustive(Axiom axiom, std::size_t n, const SearchConfig& config, Evaluator& eval)
{
    auto grids = enumerate_grids(n, config.max_matches, config.domain);

    switch (witness_kind(axiom))
    {
    case WitnessKind::Single: {
        if (axiom == Axiom::SYM)
            std::erase_if(grids, [](const Grid& g) {
                for (std::size_t k = 0; k < g.twice.size(); ++k)
                    if (g.twice[k] != g.twice[(k % g.n) * g.n + k / g.n])
                        return true;
                return false;
            });
        const auto perms = nonidentity_permutations(n);
        for (const auto& p : grids)
        {
            if (axiom == Axiom::NEU)
                for (const auto& sigma : perms)
                    eval.single(p, sigma);
            else
                eval.single(p, std::nullopt);
            if (eval.stopped())
                return;
        }
        return;
    }
    case WitnessKind::Pair: {
        if (axiom == Axiom::FP)
            std::erase_if(grids, [&](const Grid& g) { return !eval.flat_rating(g); });
        if (axiom == Axiom::RCS)
        {
            // Pairs (i, j), j >= i, sharing one matches matrix; totals ascend with i.
            std::map< std::vector< int >, std::vector< std::size_t > > by_matches;
            for (std::size_t i = 0; i < grids.size(); ++i)
            {
                std::vector< int > key;
                for (std::size_t a = 0; a < n; ++a)
                    for (std::size_t b = 0; b < n; ++b)
                        key.push_back(grids[i].matches(a, b));
                by_matches[std::move(key)].push_back(i);
            }
            std::vector< const std::vector< std::size_t >* > group_of(grids.size());
            for (const auto& [key, members] : by_matches)
                for (auto i : members)
                    group_of[i] = &members;
            for (std::size_t i = 0; i < grids.size(); ++i)
                for (auto j : *group_of[i])
                {
                    if (j < i)
                        continue;
                    eval.pair(grids[i], grids[j]);
                    if (eval.stopped())
                        return;
                }
            return;
        }
        // Pairs (i, j), j >= i, by ascending combined total matches, then by (i, j).
        if (grids.empty())
            return;
        const int max_total = grids.back().total;
        std::vector< std::size_t > group_begin(max_total + 2, grids.size());
        for (std::size_t i = grids.size(); i-- > 0;)
            group_begin[grids[i].total] = i;
        for (int t = max_total; t >= 0; --t)
            group_begin[t] = std::min(group_begin[t], group_begin[t + 1]);
        for (int combined = 0; combined <= 2 * max_total; ++combined)
            for (std::size_t i = 0; i < grids.size(); ++i)
            {
                const int other = combined - grids[i].total;
                if (other < grids[i].total)
                    break;
                if (other > max_total)
                    continue;
                for (std::size_t j = std::max(i, group_begin[other]); j < group_begin[other + 1]; ++j)
                {
                    eval.pair(grids[i], grids[j]);
                    if (eval.stopped())
                        return;
                }
            }
        return;
    }
    case WitnessKind::Independence: {
        if (n < 4)
            return;
        const auto pairs   = unordered_pairs(n);
        const int  min_m   = config.domain == Domain::RoundRobin ? 1 : 0;
        const auto options = pair_options(min_m, static_cast< int >(config.max_matches));
        for (const auto& p : grids)
            for (const auto& [k, l] : pairs)
                for (const auto& [m, a] : options)
                {
                    const int old_m = p.matches(k, l);
                    if (axiom == Axiom::IIR && m != old_m)
                        continue;
                    Grid q = p;
                    set_pair(q, k, l, m, a);
                    if (q == p || !in_domain(q, config.domain))
                        continue;
                    eval.independence(p, q, k, l);
                    if (eval.stopped())
                        return;
                }
        return;
    }
    }
}

class RandomDraw
{
public:
    RandomDraw(const SearchConfig& config, std::size_t index) : config_(config)
    {
        std::seed_seq seq{static_cast< std::uint32_t >(config.seed), static_cast< std::uint32_t >(config.seed >> 32),
                          static_cast< std::uint32_t >(index), static_cast< std::uint32_t >(std::uint64_t(index) >> 32)};
        rng_.seed(seq);
    }

    int uniform(int lo, int hi) { return std::uniform_int_distribution< int >(lo, hi)(rng_); }

    std::size_t objects()
    {
        return config_.object_counts[static_cast< std::size_t >(uniform(0, int(config_.object_counts.size()) - 1))];
    }

    /// Matches drawn per pair (or one common value for round-robin); results uniform in [-m, m],
    /// or zero when `flat`. Retries a bounded number of times to land inside the domain.
    std::optional< Grid > problem(std::size_t n, bool flat)
    {
        for (int attempt = 0; attempt < 64; ++attempt)
        {
            Grid      g        = empty_grid(n);
            const int common_m = uniform(1, int(config_.max_matches));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                {
                    const int m = config_.domain == Domain::RoundRobin ? common_m : uniform(0, int(config_.max_matches));
                    set_pair(g, i, j, m, flat ? 0 : uniform(-m, m));
                }
            if (in_domain(g, config_.domain))
                return g;
        }
        return std::nullopt;
    }

    /// Same matches as `base`, fresh results.
    std::optional< Grid > same_matches(const Grid& base)
    {
        for (int attempt = 0; attempt < 64; ++attempt)
        {
            Grid g = base;
            for (std::size_t i = 0; i < g.n; ++i)
                for (std::size_t j = i + 1; j < g.n; ++j)
                {
                    const int m = base.matches(i, j);
                    set_pair(g, i, j, m, uniform(-m, m));
                }
            if (in_domain(g, config_.domain))
                return g;
        }
        return std::nullopt;
    }

    Permutation permutation(std::size_t n)
    {
        std::vector< std::size_t > m(n);
        for (std::size_t k = 0; k < n; ++k)
            m[k] = k;
        for (std::size_t k = n; k > 1; --k)
            std::swap(m[k - 1], m[static_cast< std::size_t >(uniform(0, int(k) - 1))]);
        return Permutation(std::move(m));
    }

private:
    const SearchConfig& config_;
    std::mt19937_64     rng_;
};

inline void random(Axiom axiom, const SearchConfig& config, Evaluator& eval)
{
    for (std::size_t index = 0; !eval.stopped(); ++index)
    {
        RandomDraw draw(config, index);
        const auto n    = draw.objects();
        const bool flat = axiom == Axiom::SYM || axiom == Axiom::FP;
        const auto p    = draw.problem(n, flat);
        if (!p)
        {
            eval.consume();
            continue;
        }
        switch (witness_kind(axiom))
        {
        case WitnessKind::Single:
            if (axiom == Axiom::NEU)
                eval.single(*p, draw.permutation(n));
            else
                eval.single(*p, std::nullopt);
            break;
        case WitnessKind::Pair: {
            const auto q = axiom == Axiom::RCS ? draw.same_matches(*p) : draw.problem(n, flat);
            if (q)
                eval.pair(*p, *q);
            else
                eval.consume();
            break;
        }
        case WitnessKind::Independence: {
            if (n < 4)
            {
                eval.consume();
                break;
            }
            const auto pairs  = unordered_pairs(n);
            const auto [k, l] = pairs[static_cast< std::size_t >(draw.uniform(0, int(pairs.size()) - 1))];
            const int old_m   = p->matches(k, l);
            int       m       = old_m;
            if (axiom == Axiom::IIM && config.domain != Domain::RoundRobin)
                m = draw.uniform(0, int(config.max_matches));
            Grid q = *p;
            set_pair(q, k, l, m, draw.uniform(-m, m));
            if (q == *p || !in_domain(q, config.domain))
            {
                eval.consume();
                break;
            }
            eval.independence(*p, q, k, l);
            break;
        }
        }
    }
}

} // namespace detail

/// Looks for witnesses on which `method` violates `axiom`. Deterministic for a fixed config.
/// Exhaustive mode walks object counts in ascending order and, per count, candidate grids in
/// canonical order (ascending total matches, then lexicographic doubled tournament); pair
/// witnesses (i, j) with j >= i are ordered by combined total matches, then by (i, j).
/// Random mode derives candidate k from (seed, k) alone. Every returned witness has been
/// re-checked with `check` and is violated.
inline SearchResult search(const MethodSpec& spec, Axiom axiom, const SearchConfig& config)
{
    config.validate();
    SearchResult      result;
    detail::Evaluator eval(axiom, spec, config, result);

    if (config.mode == SearchMode::Exhaustive)
    {
        auto counts = config.object_counts;
        std::sort(counts.begin(), counts.end());
        counts.erase(std::unique(counts.begin(), counts.end()), counts.end());
        for (auto n : counts)
        {
            detail::exhaustive(axiom, n, config, eval);
            if (eval.stopped())
                break;
        }
    }
    else
    {
        detail::random(axiom, config, eval);
    }
    return result;
}

} // namespace tourney

#endif // TOURNEY_SEARCH_HPP
