#pragma once

#include "bitvec.hpp"
#include "cubic_form.hpp"
#include "errors.hpp"
#include "exact_int.hpp"
#include "hadamard.hpp"
#include "hurwitzian_sets.hpp"
#include "identities.hpp"
#include "max_clique.hpp"
#include "polarization.hpp"
#include "quadruples.hpp"
#include "serialize.hpp"
#include "twisted_algebra.hpp"
#include "vecset.hpp"
