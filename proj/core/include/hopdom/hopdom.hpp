#ifndef HOPDOM_HOPDOM_HPP
#define HOPDOM_HOPDOM_HPP

#include "hopdom/decomposition.hpp"
#include "hopdom/generator.hpp"
#include "hopdom/graph.hpp"
#include "hopdom/oracle.hpp"
#include "hopdom/solver.hpp"

#endif  // HOPDOM_HOPDOM_HPP
