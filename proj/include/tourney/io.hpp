#ifndef TOURNEY_IO_HPP
#define TOURNEY_IO_HPP

#include "tourney/audit.hpp"
#include "tourney/error.hpp"
#include "tourney/methods.hpp"
#include "tourney/problem.hpp"
#include "tourney/rational.hpp"

#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace tourney
{

namespace detail
{
inline std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

inline std::string_view strip_comment(std::string_view s)
{
    if (const auto hash = s.find('#'); hash != std::string_view::npos)
        s = s.substr(0, hash);
    return trim(s);
}

inline std::vector< std::string_view > split(std::string_view s, char sep)
{
    std::vector< std::string_view > out;
    std::size_t                     start = 0;
    while (true)
    {
        const auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos)
            return out;
        start = pos + 1;
    }
}

inline std::vector< std::string > split_ws(std::string_view s)
{
    std::vector< std::string > out;
    std::istringstream         in{std::string(s)};
    for (std::string tok; in >> tok;)
        out.push_back(tok);
    return out;
}

inline std::string at_line(std::size_t line, const std::string& what)
{
    return "line " + std::to_string(line) + ": " + what;
}

// Re-throws a model error with the offending line number attached.
template < typename Fn >
auto with_line(std::size_t line, Fn fn)
{
    try
    {
        return fn();
    }
    catch (const Error& e)
    {
        throw Error(e.code(), at_line(line, e.what()));
    }
}

inline bool is_labels_line(std::string_view s) { return s.rfind("labels:", 0) == 0; }

inline std::vector< std::string > parse_labels_line(std::string_view s)
{
    s.remove_prefix(std::string_view("labels:").size());
    std::string text(s);
    for (auto& c : text)
        if (c == ',')
            c = ' ';
    return split_ws(text);
}
} // namespace detail

/// Lines `label_i,label_j,t_ij,t_ji` (one encounter block each). Accepts an optional
/// `i,j,tij,tji` header, `#` comments, and a `labels: ...` line declaring objects up front
/// (so objects without any comparison can be included). Objects are indexed in
/// first-appearance order; repeated pairs accumulate.
inline RankingProblem parse_match_list(std::string_view text)
{
    std::vector< std::string >                     labels;
    std::unordered_map< std::string, std::size_t > index;
    std::vector< Contribution >                    entries;

    auto intern = [&](std::string_view name) {
        std::string key(name);
        if (index.emplace(key, labels.size()).second)
            labels.push_back(key);
    };

    std::size_t line_no = 0;
    bool        seen_data = false;
    std::istringstream in{std::string(text)};
    for (std::string raw; std::getline(in, raw);)
    {
        ++line_no;
        const auto line = detail::strip_comment(raw);
        if (line.empty())
            continue;
        if (detail::is_labels_line(line))
        {
            for (const auto& name : detail::parse_labels_line(line))
                intern(name);
            continue;
        }
        const auto fields = detail::split(line, ',');
        if (!seen_data && fields.size() == 4 && fields[0] == "i" && fields[1] == "j" && fields[2] == "tij" &&
            fields[3] == "tji")
        {
            seen_data = true;
            continue;
        }
        seen_data = true;
        if (fields.size() != 4)
            throw Error(ErrorCode::ParseError, detail::at_line(line_no, "expected label_i,label_j,t_ij,t_ji"));
        if (fields[0].empty() || fields[1].empty())
            throw Error(ErrorCode::ParseError, detail::at_line(line_no, "empty object label"));
        const auto tij = parse_rational(fields[2]);
        const auto tji = parse_rational(fields[3]);
        if (!tij || !tji)
            throw Error(ErrorCode::ParseError, detail::at_line(line_no, "malformed score"));
        if (fields[0] == fields[1])
            throw Error(ErrorCode::DiagonalNonZero,
                        detail::at_line(line_no, "object '" + std::string(fields[0]) + "' compared with itself"));
        if (*tij < 0 || *tji < 0)
            throw Error(ErrorCode::NegativeEntry, detail::at_line(line_no, "scores must be nonnegative"));
        const Rational block = *tij + *tji;
        if (!is_integer(block))
            throw Error(ErrorCode::NonIntegerPairSum,
                        detail::at_line(line_no, "t_ij + t_ji = " + to_string(block) + " is not an integer"));
        if (block == 0)
            throw Error(ErrorCode::ParseError, detail::at_line(line_no, "encounter block without comparisons"));

        intern(fields[0]);
        intern(fields[1]);
        entries.push_back({std::string(fields[0]), std::string(fields[1]), *tij});
        entries.push_back({std::string(fields[1]), std::string(fields[0]), *tji});
    }
    return detail::with_line(line_no, [&] { return build_problem(labels, entries); });
}

/// First line n, then n rows of n rational entries of T; an optional `labels: ...` line may
/// precede n. Blank lines and `#` comments are ignored.
inline RankingProblem parse_matrix(std::string_view text)
{
    std::vector< std::string > labels;
    std::optional< std::size_t > n;
    std::size_t                  row = 0;
    Matrix                       t;
    std::size_t                  line_no = 0;

    std::istringstream in{std::string(text)};
    for (std::string raw; std::getline(in, raw);)
    {
        ++line_no;
        const auto line = detail::strip_comment(raw);
        if (line.empty())
            continue;
        if (!n && detail::is_labels_line(line))
        {
            labels = detail::parse_labels_line(line);
            continue;
        }
        if (!n)
        {
            const auto size = parse_rational(line);
            if (!size || !is_integer(*size) || *size < 0)
                throw Error(ErrorCode::ParseError, detail::at_line(line_no, "expected the object count n"));
            n = numerator(*size).convert_to< std::size_t >();
            if (*n < 2)
                throw Error(ErrorCode::FewerThanTwoObjects, detail::at_line(line_no, "n must be at least 2"));
            if (labels.empty())
                labels = default_labels(*n);
            if (labels.size() != *n)
                throw Error(ErrorCode::DimensionMismatch,
                            detail::at_line(line_no, std::to_string(labels.size()) + " labels for n = " + std::to_string(*n)));
            t = Matrix(*n, *n);
            continue;
        }
        if (row == *n)
            throw Error(ErrorCode::DimensionMismatch, detail::at_line(line_no, "more than n rows"));
        const auto cells = detail::split_ws(line);
        if (cells.size() != *n)
            throw Error(ErrorCode::DimensionMismatch,
                        detail::at_line(line_no, "expected " + std::to_string(*n) + " entries, got " +
                                                     std::to_string(cells.size())));
        for (std::size_t j = 0; j < *n; ++j)
        {
            const auto value = parse_rational(cells[j]);
            if (!value)
                throw Error(ErrorCode::ParseError, detail::at_line(line_no, "malformed entry '" + cells[j] + "'"));
            t(row, j) = *value;
        }
        ++row;
    }
    if (!n)
        throw Error(ErrorCode::ParseError, "empty matrix file");
    if (row != *n)
        throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(*n) + " rows, got " + std::to_string(row));
    return detail::with_line(line_no, [&] { return RankingProblem(labels, t); });
}

/// Matrix file text that `parse_matrix` reads back to the identical problem.
inline std::string render_matrix(const RankingProblem& problem)
{
    std::string out = "labels:";
    for (const auto& l : problem.labels())
        out += " " + l;
    out += "\n" + std::to_string(problem.size()) + "\n";
    for (std::size_t i = 0; i < problem.size(); ++i)
    {
        for (std::size_t j = 0; j < problem.size(); ++j)
            out += (j ? " " : "") + to_string(problem.t(i, j));
        out += "\n";
    }
    return out;
}

/// One `label<TAB>p/q<TAB>decimal` line per object, best first (ties by index), then the tier line.
inline std::string render_rating(const RatingVector& rating, const std::vector< std::string >& labels, bool exact_only = false)
{
    const auto  order = ranking(rating);
    std::string out;
    for (const auto& tier : order.tiers)
        for (auto i : tier)
        {
            out += labels.at(i) + "\t" + to_string(rating[i]);
            if (!exact_only)
                out += "\t" + to_decimal(rating[i], 4);
            out += "\n";
        }
    out += order.describe(labels) + "\n";
    return out;
}

inline std::string render_report(const AuditReport& report, const std::vector< std::string >& labels)
{
    std::string out;
    out += "axiom: " + std::string(to_string(report.axiom)) + "\n";
    out += "method: " + report.method.describe() + "\n";
    out += "witness: " + report.witness + "\n";
    out += std::string("verdict: ") + (report.violated() ? "violated" : "satisfied") + "\n";
    for (const auto& v : report.violations)
    {
        out += "violation: " + labels.at(v.i) + " vs " + labels.at(v.j) + " inputs [";
        for (std::size_t k = 0; k < v.inputs.size(); ++k)
            out += (k ? " " : "") + std::string(1, symbol(v.inputs[k]));
        out += "] output [" + std::string(1, symbol(v.output)) + "]\n";
    }
    return out;
}

} // namespace tourney

#endif // TOURNEY_IO_HPP
