#ifndef TOURNEY_AUDIT_HPP
#define TOURNEY_AUDIT_HPP

#include "tourney/error.hpp"
#include "tourney/methods.hpp"
#include "tourney/problem.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace tourney
{

enum class Axiom
{
    NEU, // neutrality
    SYM, // symmetry
    INV, // inversion
    CS,  // consistency
    FP,  // flatness preservation
    EP,  // equality preservation
    RCS, // result consistency
    IIM, // independence of irrelevant matches
    IIR, // independence of irrelevant results
};

inline constexpr Axiom all_axioms[] = {Axiom::NEU, Axiom::SYM, Axiom::INV, Axiom::CS,  Axiom::FP,
                                       Axiom::EP,  Axiom::RCS, Axiom::IIM, Axiom::IIR};

constexpr std::string_view to_string(Axiom a)
{
    switch (a)
    {
    case Axiom::NEU: return "NEU";
    case Axiom::SYM: return "SYM";
    case Axiom::INV: return "INV";
    case Axiom::CS: return "CS";
    case Axiom::FP: return "FP";
    case Axiom::EP: return "EP";
    case Axiom::RCS: return "RCS";
    case Axiom::IIM: return "IIM";
    case Axiom::IIR: return "IIR";
    }
    return "?";
}

inline std::optional< Axiom > parse_axiom(std::string_view text)
{
    for (auto a : all_axioms)
        if (to_string(a) == text)
            return a;
    return std::nullopt;
}

/// Single problem for NEU (with a permutation), SYM and INV.
struct SingleWitness
{
    RankingProblem               problem;
    std::optional< Permutation > sigma;
};

/// Two problems on the same objects for CS, FP, EP and RCS.
struct PairWitness
{
    RankingProblem first;
    RankingProblem second;
};

/// Two problems that differ only in the comparisons between objects k and l (IIM, IIR).
struct IndependenceWitness
{
    RankingProblem first;
    RankingProblem second;
    std::size_t    k = 0;
    std::size_t    l = 0;
};

using Witness = std::variant< SingleWitness, PairWitness, IndependenceWitness >;

/// Relative order of f_i and f_j.
enum class Relation
{
    Less,
    Equal,
    Greater,
};

constexpr char symbol(Relation r)
{
    return r == Relation::Less ? '<' : r == Relation::Equal ? '=' : '>';
}

constexpr Relation reversed(Relation r)
{
    return r == Relation::Less ? Relation::Greater : r == Relation::Greater ? Relation::Less : Relation::Equal;
}

inline Relation compare(const RatingVector& f, std::size_t i, std::size_t j)
{
    if (f[i] < f[j])
        return Relation::Less;
    if (f[i] > f[j])
        return Relation::Greater;
    return Relation::Equal;
}

struct Violation
{
    std::size_t             i = 0;
    std::size_t             j = 0;
    std::vector< Relation > inputs; // relation in each premise problem
    Relation                output = Relation::Equal;
};

enum class Verdict
{
    Satisfied,
    Violated,
};

struct AuditReport
{
    Axiom                    axiom;
    MethodSpec               method;
    std::string              witness;
    Verdict                  verdict = Verdict::Satisfied;
    std::vector< Violation > violations;

    [[nodiscard]] bool violated() const noexcept { return verdict == Verdict::Violated; }
    [[nodiscard]] bool violated_at(std::size_t i, std::size_t j) const
    {
        for (const auto& v : violations)
            if ((v.i == i && v.j == j) || (v.i == j && v.j == i))
                return true;
        return false;
    }
};

namespace detail
{
inline bool is_method_precondition(ErrorCode code)
{
    return code == ErrorCode::DisconnectedProblem || code == ErrorCode::ReducibleProblem ||
           code == ErrorCode::UndefinedForSmallN || code == ErrorCode::NoComparisons;
}

/// Rates `problem`, turning a method precondition failure into PreconditionError so callers
/// can tell an inadmissible witness from a violation.
inline RatingVector rate_admissible(const RankingProblem& problem, const MethodSpec& spec)
{
    try
    {
        return rate(problem, spec);
    }
    catch (const PreconditionError&)
    {
        throw;
    }
    catch (const Error& e)
    {
        if (is_method_precondition(e.code()))
            throw PreconditionError(e.code(), e.what());
        throw;
    }
}

inline AuditReport finish(Axiom axiom, const MethodSpec& spec, std::string witness, std::vector< Violation > violations)
{
    AuditReport report{axiom, spec, std::move(witness), Verdict::Satisfied, std::move(violations)};
    if (!report.violations.empty())
        report.verdict = Verdict::Violated;
    return report;
}

inline std::string sigma_text(const Permutation& sigma)
{
    std::string out;
    for (std::size_t k = 0; k < sigma.size(); ++k)
        out += (k ? "," : "") + std::to_string(sigma.image(k) + 1);
    return out;
}

// Definition-level CS/RCS quantifier for one ordered pair: given f_i >= f_j in both inputs,
// the sum must keep f_i >= f_j, strictly if either input was strict.
inline bool consistent_ordered(Relation a, Relation b, Relation out)
{
    if (a == Relation::Less || b == Relation::Less)
        return true;
    if (a == Relation::Greater || b == Relation::Greater)
        return out == Relation::Greater;
    return out != Relation::Less;
}
} // namespace detail

namespace detail
{
inline std::vector< Violation > neu_violations(const RatingVector& f, const RatingVector& g, const Permutation& sigma)
{
    std::vector< Violation > out;
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = i + 1; j < f.size(); ++j)
        {
            const auto before = compare(f, i, j);
            const auto after  = compare(g, sigma.image(i), sigma.image(j));
            if (before != after)
                out.push_back({i, j, {before}, after});
        }
    return out;
}

inline std::vector< Violation > sym_violations(const RatingVector& f)
{
    std::vector< Violation > out;
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = i + 1; j < f.size(); ++j)
            if (const auto r = compare(f, i, j); r != Relation::Equal)
                out.push_back({i, j, {}, r});
    return out;
}

// g is the rating of the negated problem.
inline std::vector< Violation > inv_violations(const RatingVector& f, const RatingVector& g)
{
    std::vector< Violation > out;
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = i + 1; j < f.size(); ++j)
        {
            const auto before = compare(f, i, j);
            const auto after  = compare(g, i, j);
            if (after != reversed(before))
                out.push_back({i, j, {before}, after});
        }
    return out;
}

inline bool is_flat(const RatingVector& f)
{
    for (std::size_t i = 1; i < f.size(); ++i)
        if (f[i] != f[0])
            return false;
    return true;
}

// f, g rate the two inputs, h their sum.
inline std::vector< Violation > additivity_violations(Axiom axiom, const RatingVector& f, const RatingVector& g,
                                                      const RatingVector& h)
{
    std::vector< Violation > out;
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = i + 1; j < f.size(); ++j)
        {
            const auto a  = compare(f, i, j);
            const auto b  = compare(g, i, j);
            const auto s  = compare(h, i, j);
            bool       ok = true;
            switch (axiom)
            {
            case Axiom::CS:
            case Axiom::RCS:
                ok = consistent_ordered(a, b, s) && consistent_ordered(reversed(a), reversed(b), reversed(s));
                break;
            case Axiom::EP: ok = !(a == Relation::Equal && b == Relation::Equal) || s == Relation::Equal; break;
            case Axiom::FP: ok = s == Relation::Equal; break;
            default: break;
            }
            if (!ok)
                out.push_back({i, j, {a, b}, s});
        }
    return out;
}

inline std::vector< Violation > independence_violations(const RatingVector& f, const RatingVector& g, std::size_t k,
                                                         std::size_t l)
{
    std::vector< Violation > out;
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = i + 1; j < f.size(); ++j)
        {
            if (i == k || i == l || j == k || j == l)
                continue;
            const auto before = compare(f, i, j);
            const auto after  = compare(g, i, j);
            if (before != after)
                out.push_back({i, j, {before}, after});
        }
    return out;
}

inline void require_additivity_axiom(Axiom axiom)
{
    if (axiom != Axiom::CS && axiom != Axiom::FP && axiom != Axiom::EP && axiom != Axiom::RCS)
        throw Error(ErrorCode::WitnessMismatch, std::string(to_string(axiom)) + " is not an additivity axiom");
}

// Structural validation of an independence witness (everything except method preconditions).
inline void validate_independence(Axiom axiom, const IndependenceWitness& w)
{
    if (axiom != Axiom::IIM && axiom != Axiom::IIR)
        throw Error(ErrorCode::WitnessMismatch, std::string(to_string(axiom)) + " is not an independence axiom");
    const auto& p = w.first;
    const auto& q = w.second;
    const auto  n = p.size();
    if (p.labels() != q.labels())
        throw Error(ErrorCode::LabelMismatch, "independence witnesses need identical object lists");
    if (n < 4)
        throw PreconditionError(ErrorCode::UndefinedForSmallN, "independence axioms need at least four objects");
    if (w.k >= n || w.l >= n || w.k == w.l)
        throw Error(ErrorCode::NotSingleDifference, "changed pair must name two distinct objects");

    bool differs = false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
        {
            if (p.t(i, j) == q.t(i, j))
                continue;
            if (!((i == w.k && j == w.l) || (i == w.l && j == w.k)))
                throw Error(ErrorCode::NotSingleDifference,
                            "problems also differ at (" + p.labels()[i] + "," + p.labels()[j] + ")");
            differs = true;
        }
    if (!differs)
        throw Error(ErrorCode::NotSingleDifference, "problems do not differ at the changed pair");
    if (axiom == Axiom::IIR && p.t(w.k, w.l) + p.t(w.l, w.k) != q.t(w.k, w.l) + q.t(w.l, w.k))
        throw Error(ErrorCode::MatchesChanged, "IIR keeps the number of matches between k and l");
}
} // namespace detail

/// NEU, SYM or INV on a single problem.
inline AuditReport check_invariance(Axiom axiom, const MethodSpec& spec, const SingleWitness& witness)
{
    const auto& p       = witness.problem;
    std::string summary = "single(n=" + std::to_string(p.size());
    std::vector< Violation > violations;

    switch (axiom)
    {
    case Axiom::NEU: {
        if (!witness.sigma)
            throw Error(ErrorCode::WitnessMismatch, "NEU needs a permutation");
        summary += ", sigma=" + detail::sigma_text(*witness.sigma);
        const auto f = detail::rate_admissible(p, spec);
        const auto g = detail::rate_admissible(permute(p, *witness.sigma), spec);
        violations   = detail::neu_violations(f, g, *witness.sigma);
        break;
    }
    case Axiom::SYM: {
        if (!is_flat(p))
            throw Error(ErrorCode::NotFlat, "SYM needs a problem with A = O");
        violations = detail::sym_violations(detail::rate_admissible(p, spec));
        break;
    }
    case Axiom::INV: {
        const auto f = detail::rate_admissible(p, spec);
        const auto g = detail::rate_admissible(negate(p), spec);
        violations   = detail::inv_violations(f, g);
        break;
    }
    default: throw Error(ErrorCode::WitnessMismatch, std::string(to_string(axiom)) + " is not an invariance axiom");
    }
    return detail::finish(axiom, spec, summary + ")", std::move(violations));
}

/// CS, FP, EP or RCS on a pair of problems and their sum.
inline AuditReport check_additivity(Axiom axiom, const MethodSpec& spec, const PairWitness& witness)
{
    const auto& p = witness.first;
    const auto& q = witness.second;
    detail::require_additivity_axiom(axiom);
    if (p.labels() != q.labels())
        throw Error(ErrorCode::LabelMismatch, "additivity witnesses need identical object lists");
    if (axiom == Axiom::RCS && derive(p).matches != derive(q).matches)
        throw Error(ErrorCode::MatchesMismatch, "RCS needs equal matches matrices");

    const auto f = detail::rate_admissible(p, spec);
    const auto g = detail::rate_admissible(q, spec);
    if (axiom == Axiom::FP && !(detail::is_flat(f) && detail::is_flat(g)))
        throw Error(ErrorCode::NotFlat, "FP needs flat ratings in both problems");
    const auto h = detail::rate_admissible(sum_problems(p, q), spec);
    return detail::finish(axiom, spec, "pair(n=" + std::to_string(p.size()) + ")",
                          detail::additivity_violations(axiom, f, g, h));
}

/// IIM or IIR: the relative order of every pair disjoint from {k, l} must not change.
inline AuditReport check_independence(Axiom axiom, const MethodSpec& spec, const IndependenceWitness& witness)
{
    detail::validate_independence(axiom, witness);
    const auto& p = witness.first;
    const auto  f = detail::rate_admissible(p, spec);
    const auto  g = detail::rate_admissible(witness.second, spec);
    const std::string summary = "independence(n=" + std::to_string(p.size()) + ", changed=" + p.labels()[witness.k] +
                                "," + p.labels()[witness.l] + ")";
    return detail::finish(axiom, spec, summary, detail::independence_violations(f, g, witness.k, witness.l));
}

/// Dispatches on the witness shape; a shape that does not fit the axiom is WitnessMismatch.
inline AuditReport check(Axiom axiom, const MethodSpec& spec, const Witness& witness)
{
    return std::visit(
        [&](const auto& w) -> AuditReport {
            using W = std::decay_t< decltype(w) >;
            if constexpr (std::is_same_v< W, SingleWitness >)
                return check_invariance(axiom, spec, w);
            else if constexpr (std::is_same_v< W, PairWitness >)
                return check_additivity(axiom, spec, w);
            else
                return check_independence(axiom, spec, w);
        },
        witness);
}

enum class WitnessKind
{
    Single,
    Pair,
    Independence,
};

constexpr WitnessKind witness_kind(Axiom a)
{
    switch (a)
    {
    case Axiom::NEU:
    case Axiom::SYM:
    case Axiom::INV: return WitnessKind::Single;
    case Axiom::CS:
    case Axiom::FP:
    case Axiom::EP:
    case Axiom::RCS: return WitnessKind::Pair;
    case Axiom::IIM:
    case Axiom::IIR: return WitnessKind::Independence;
    }
    return WitnessKind::Single;
}

} // namespace tourney

#endif // TOURNEY_AUDIT_HPP
