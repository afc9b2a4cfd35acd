#pragma once

#include "classical_schur.hpp"
#include "compositions.hpp"
#include "identities.hpp"
#include "labeled_poset.hpp"
#include "mn_rule.hpp"
#include "numeric.hpp"
#include "qsym.hpp"
#include "rewrites.hpp"
#include "surjections.hpp"
