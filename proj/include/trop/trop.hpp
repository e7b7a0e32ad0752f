#pragma once

/// Umbrella header.

#include "trop/basic_open.hpp"
#include "trop/comparison.hpp"
#include "trop/correspondence.hpp"
#include "trop/fgid.hpp"
#include "trop/fields.hpp"
#include "trop/finite_ring.hpp"
#include "trop/fraction_semiring.hpp"
#include "trop/gluing.hpp"
#include "trop/groebner.hpp"
#include "trop/hom.hpp"
#include "trop/ideal.hpp"
#include "trop/ideal_theory.hpp"
#include "trop/integers.hpp"
#include "trop/localize.hpp"
#include "trop/localized.hpp"
#include "trop/mpoly.hpp"
#include "trop/numeric.hpp"
#include "trop/parse.hpp"
#include "trop/presheaf.hpp"
#include "trop/report.hpp"
#include "trop/rng.hpp"
#include "trop/semiring.hpp"
#include "trop/site.hpp"
#include "trop/spectrum.hpp"
#include "trop/submodule.hpp"
#include "trop/upoly.hpp"
#include "trop/valuation.hpp"
