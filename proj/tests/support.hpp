#ifndef TOURNEY_TESTS_SUPPORT_HPP
#define TOURNEY_TESTS_SUPPORT_HPP

#include "tourney/tourney.hpp"

#include <gtest/gtest.h>

#include <initializer_list>
#include <string>

inline tourney::Vector vec(std::initializer_list< const char* > cells)
{
    tourney::Vector v;
    for (const auto* c : cells)
        v.push_back(tourney::rational(c));
    return v;
}

inline std::string show(const tourney::Vector& v)
{
    std::string out = "[";
    for (std::size_t k = 0; k < v.size(); ++k)
        out += (k ? ", " : "") + tourney::to_string(v[k]);
    return out + "]";
}

#define EXPECT_VEC_EQ(actual, expected) EXPECT_EQ(show(actual), show(expected))

template < typename Fn >
tourney::ErrorCode error_of(Fn&& fn)
{
    try
    {
        fn();
    }
    catch (const tourney::Error& e)
    {
        return e.code();
    }
    ADD_FAILURE() << "expected an Error";
    return tourney::ErrorCode::ParseError;
}

#endif // TOURNEY_TESTS_SUPPORT_HPP
