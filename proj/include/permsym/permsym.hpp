#pragma once

// Umbrella header.

#include "permsym/campaign.hpp"
#include "permsym/classes.hpp"
#include "permsym/composition.hpp"
#include "permsym/errors.hpp"
#include "permsym/multiset.hpp"
#include "permsym/ordered_partition.hpp"
#include "permsym/permutation.hpp"
#include "permsym/promotion.hpp"
#include "permsym/psi.hpp"
#include "permsym/qsym.hpp"
#include "permsym/rs.hpp"
#include "permsym/shuffle.hpp"
#include "permsym/tableau.hpp"
#include "permsym/verifier.hpp"
