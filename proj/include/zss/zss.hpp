#pragma once

#include "zss/matrix.hpp"
#include "zss/search.hpp"
#include "zss/split.hpp"
#include "zss/symmetry.hpp"
#include "zss/verify.hpp"
