#ifndef SEMIMATCH_SEMIMATCH_HPP_
#define SEMIMATCH_SEMIMATCH_HPP_

#include "bipartite.hpp"
#include "exception.hpp"
#include "factors.hpp"
#include "green.hpp"
#include "matching.hpp"
#include "structure.hpp"
#include "table.hpp"

#endif  // SEMIMATCH_SEMIMATCH_HPP_
