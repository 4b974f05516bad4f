#ifndef TOURNEY_TOURNEY_HPP
#define TOURNEY_TOURNEY_HPP

#include "tourney/audit.hpp"
#include "tourney/error.hpp"
#include "tourney/examples.hpp"
#include "tourney/io.hpp"
#include "tourney/matrix.hpp"
#include "tourney/methods.hpp"
#include "tourney/problem.hpp"
#include "tourney/rational.hpp"
#include "tourney/search.hpp"

#endif // TOURNEY_TOURNEY_HPP
