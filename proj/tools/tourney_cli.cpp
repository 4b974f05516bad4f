// Command-line front end: rank, audit, search, reproduce.
//
// Exit status: 0 success / PASS / no violation, 1 violation found or FAIL,
// 2 usage or parse error, 3 method precondition unmet.

#include "tourney/tourney.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace
{

using namespace tourney;

constexpr int kOk           = 0;
constexpr int kViolation    = 1;
constexpr int kUsage        = 2;
constexpr int kPrecondition = 3;

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RankingProblem load(const std::string& path, const std::string& format)
{
    const auto text = read_file(path);
    try
    {
        return format == "matches" ? parse_match_list(text) : parse_matrix(text);
    }
    catch (const Error& e)
    {
        throw Error(e.code(), path + ": " + e.what());
    }
}

MethodSpec method_spec(const std::string& method, const std::string& epsilon)
{
    const auto m = parse_method(method);
    if (!m)
        throw CLI::ValidationError("--method", "unknown method '" + method + "'");
    MethodSpec spec{*m, EpsilonChoice::reasonable()};
    if (*m == Method::GeneralizedRowSum)
    {
        if (epsilon.empty())
            throw CLI::ValidationError("--epsilon", "grs needs --epsilon RATIONAL or --epsilon reasonable");
        if (epsilon != "reasonable")
        {
            const auto value = parse_rational(epsilon, 64);
            if (!value)
                throw CLI::ValidationError("--epsilon", "malformed rational '" + epsilon + "'");
            spec.epsilon = EpsilonChoice::of(*value);
        }
    }
    return spec;
}

Axiom axiom_id(const std::string& text)
{
    const auto a = parse_axiom(text);
    if (!a)
        throw CLI::ValidationError("--axiom", "unknown axiom '" + text + "'");
    return *a;
}

std::size_t object_index(const RankingProblem& p, std::string_view token)
{
    for (std::size_t k = 0; k < p.size(); ++k)
        if (p.labels()[k] == token)
            return k;
    if (const auto r = parse_rational(token); r && is_integer(*r) && *r >= 1 && *r <= p.size())
        return numerator(*r).convert_to< std::size_t >() - 1;
    throw CLI::ValidationError("--changed-pair", "unknown object '" + std::string(token) + "'");
}

Permutation parse_sigma(const std::string& text, std::size_t n)
{
    std::vector< std::size_t > images;
    std::stringstream          ss(text);
    for (std::string tok; std::getline(ss, tok, ',');)
    {
        const auto r = parse_rational(tok);
        if (!r || !is_integer(*r) || *r < 1)
            throw CLI::ValidationError("--sigma", "expected comma-separated 1-based images");
        images.push_back(numerator(*r).convert_to< std::size_t >() - 1);
    }
    if (images.size() != n)
        throw CLI::ValidationError("--sigma", "permutation must list " + std::to_string(n) + " images");
    return Permutation(std::move(images));
}

void print_witness(const Witness& w)
{
    std::visit(
        [](const auto& x) {
            using W = std::decay_t< decltype(x) >;
            if constexpr (std::is_same_v< W, SingleWitness >)
                std::cout << render_matrix(x.problem);
            else
            {
                std::cout << "first:\n" << render_matrix(x.first) << "second:\n" << render_matrix(x.second);
                if constexpr (std::is_same_v< W, IndependenceWitness >)
                    std::cout << "changed pair: " << x.first.labels()[x.k] << "," << x.first.labels()[x.l] << "\n";
            }
        },
        w);
}

const std::vector< std::string >& witness_labels(const Witness& w)
{
    return std::visit(
        [](const auto& x) -> const std::vector< std::string >& {
            if constexpr (std::is_same_v< std::decay_t< decltype(x) >, SingleWitness >)
                return x.problem.labels();
            else
                return x.first.labels();
        },
        w);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact ranking of generalized paired-comparison tournaments and axiom audits"};
    app.require_subcommand(1);

    std::string method, epsilon, format = "matrix", axiom, file, file2, sigma, changed;
    bool        exact_only = false;

    auto* rank = app.add_subcommand("rank", "Rate and rank the objects of a problem");
    rank->add_option("--method", method, "score|grs|ls|fb|dfb|cfb")->required();
    rank->add_option("--epsilon", epsilon, "RATIONAL or 'reasonable' (grs only)");
    rank->add_option("--format", format, "matrix|matches")->check(CLI::IsMember({"matrix", "matches"}));
    rank->add_flag("--exact", exact_only, "Suppress the decimal column");
    rank->add_option("FILE", file)->required();

    auto* audit = app.add_subcommand("audit", "Check one axiom on an explicit witness");
    audit->add_option("--axiom", axiom, "NEU|SYM|INV|CS|FP|EP|RCS|IIM|IIR")->required();
    audit->add_option("--method", method)->required();
    audit->add_option("--epsilon", epsilon);
    audit->add_option("--format", format)->check(CLI::IsMember({"matrix", "matches"}));
    audit->add_option("--sigma", sigma, "Permutation as 1-based images, e.g. 2,1,4,3");
    audit->add_option("--changed-pair", changed, "I,J (labels or 1-based indices)");
    audit->add_option("FILE", file)->required();
    audit->add_option("FILE2", file2);

    std::size_t max_n = 0, min_n = 0, budget = 1'000'000, max_hits = 10;
    unsigned    max_matches = 1;
    std::uint64_t seed      = 0;
    std::string   domain = "all", mode = "exhaustive";
    auto*         search_cmd = app.add_subcommand("search", "Search small problems for axiom violations");
    search_cmd->add_option("--axiom", axiom)->required();
    search_cmd->add_option("--method", method)->required();
    search_cmd->add_option("--epsilon", epsilon);
    search_cmd->add_option("--max-n", max_n, "Largest object count")->required()->check(CLI::Range(2, 8));
    search_cmd->add_option("--min-n", min_n, "Smallest object count (default: 3, or 4 for IIM/IIR)");
    search_cmd->add_option("--max-matches", max_matches, "Per-pair match bound")->required()->check(CLI::Range(1, 8));
    search_cmd->add_option("--domain", domain)->check(CLI::IsMember({"all", "connected", "irreducible", "roundrobin"}));
    search_cmd->add_option("--mode", mode)->check(CLI::IsMember({"exhaustive", "random"}));
    search_cmd->add_option("--seed", seed);
    search_cmd->add_option("--budget", budget, "Candidates examined at most")->check(CLI::PositiveNumber);
    search_cmd->add_option("--max-hits", max_hits, "Stop after this many violations (0: all)");

    std::string example;
    auto*       reproduce_cmd = app.add_subcommand("reproduce", "Recompute a worked example");
    reproduce_cmd->add_option("--example", example, "1..8 or all")->required();

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e)
    {
        app.exit(e);
        return kUsage;
    }

    try
    {
        if (*rank)
        {
            const auto spec    = method_spec(method, epsilon);
            const auto problem = load(file, format);
            std::cout << render_rating(rate(problem, spec), problem.labels(), exact_only);
            return kOk;
        }

        if (*audit)
        {
            const auto spec = method_spec(method, epsilon);
            const auto ax   = axiom_id(axiom);
            const auto p    = load(file, format);
            Witness    witness = SingleWitness{p, std::nullopt};
            switch (witness_kind(ax))
            {
            case WitnessKind::Single:
                if (!file2.empty())
                    throw CLI::ValidationError("FILE2", std::string(to_string(ax)) + " takes a single problem");
                if (ax == Axiom::NEU)
                {
                    if (sigma.empty())
                        throw CLI::ValidationError("--sigma", "NEU needs --sigma");
                    witness = SingleWitness{p, parse_sigma(sigma, p.size())};
                }
                break;
            case WitnessKind::Pair:
                if (file2.empty())
                    throw CLI::ValidationError("FILE2", std::string(to_string(ax)) + " needs two problems");
                witness = PairWitness{p, load(file2, format)};
                break;
            case WitnessKind::Independence: {
                if (file2.empty())
                    throw CLI::ValidationError("FILE2", std::string(to_string(ax)) + " needs two problems");
                const auto  q = load(file2, format);
                std::size_t k = 0, l = 0;
                if (!changed.empty())
                {
                    const auto comma = changed.find(',');
                    if (comma == std::string::npos)
                        throw CLI::ValidationError("--changed-pair", "expected I,J");
                    k = object_index(p, std::string_view(changed).substr(0, comma));
                    l = object_index(p, std::string_view(changed).substr(comma + 1));
                }
                else
                {
                    // Infer the changed pair from the first differing entry.
                    bool found = false;
                    for (std::size_t i = 0; i < p.size() && !found; ++i)
                        for (std::size_t j = 0; j < p.size() && !found; ++j)
                            if (q.size() == p.size() && p.t(i, j) != q.t(i, j))
                            {
                                k     = std::min(i, j);
                                l     = std::max(i, j);
                                found = true;
                            }
                    if (!found)
                        throw Error(ErrorCode::NotSingleDifference, "the two problems are identical");
                }
                witness = IndependenceWitness{p, q, k, l};
                break;
            }
            }
            const auto report = check(ax, spec, witness);
            std::cout << render_report(report, p.labels());
            return report.violated() ? kViolation : kOk;
        }

        if (*search_cmd)
        {
            const auto   spec = method_spec(method, epsilon);
            const auto   ax   = axiom_id(axiom);
            SearchConfig config;
            if (min_n == 0)
                min_n = witness_kind(ax) == WitnessKind::Independence ? 4 : 3;
            if (min_n < 2 || min_n > max_n)
                throw CLI::ValidationError("--min-n", "need 2 <= min-n <= max-n");
            config.object_counts.clear();
            for (auto n = min_n; n <= max_n; ++n)
                config.object_counts.push_back(n);
            config.max_matches = max_matches;
            config.domain      = *parse_domain(domain);
            config.mode        = mode == "random" ? SearchMode::Random : SearchMode::Exhaustive;
            config.seed        = seed;
            config.budget      = budget;
            config.max_hits    = max_hits;

            const auto result = search(spec, ax, config);
            for (std::size_t k = 0; k < result.witnesses.size(); ++k)
            {
                std::cout << "== witness " << k + 1 << "\n";
                print_witness(result.witnesses[k]);
                std::cout << render_report(check(ax, spec, result.witnesses[k]), witness_labels(result.witnesses[k]));
            }
            std::cout << "searched: " << result.searched << "\ninadmissible: " << result.inadmissible
                      << "\nviolations: " << result.witnesses.size()
                      << (result.budget_exhausted ? "\nbudget exhausted\n" : "\n");
            return result.witnesses.empty() ? kOk : kViolation;
        }

        if (*reproduce_cmd)
        {
            std::vector< int > ids;
            if (example == "all")
                ids = {1, 2, 3, 4, 5, 6, 7, 8};
            else
            {
                const auto r = parse_rational(example);
                if (!r || !is_integer(*r))
                    throw Error(ErrorCode::UnknownExample, "expected 1..8 or all, got '" + example + "'");
                ids.push_back(numerator(*r).convert_to< int >());
            }
            bool all_pass = true;
            for (int id : ids)
            {
                const auto result = reproduce(id);
                std::cout << result.text();
                all_pass = all_pass && result.passed();
            }
            return all_pass ? kOk : kViolation;
        }
    }
    catch (const CLI::Error& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    catch (const PreconditionError& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return kPrecondition;
    }
    catch (const Error& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.code())
        {
        case ErrorCode::DisconnectedProblem:
        case ErrorCode::ReducibleProblem:
        case ErrorCode::UndefinedForSmallN:
        case ErrorCode::NoComparisons: return kPrecondition;
        default: return kUsage;
        }
    }
    return kUsage;
}
