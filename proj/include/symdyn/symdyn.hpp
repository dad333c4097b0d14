#pragma once

#include "symdyn/error.hpp"
#include "symdyn/words.hpp"
#include "symdyn/tiling.hpp"
#include "symdyn/substitution.hpp"
#include "symdyn/graphs.hpp"
#include "symdyn/language.hpp"
#include "symdyn/characterize.hpp"
#include "symdyn/sliding_code.hpp"
#include "symdyn/conjugacy.hpp"
