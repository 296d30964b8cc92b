#pragma once

// Critical hole sizes for periodic orbits of the beta-transformation with a
// hole at zero: combinatorics on binary words (Farey / Lyndon / Perron), the
// bullet substitution operator, butterfly chains, certified numerics over
// exact rationals, and an independent brute-force oracle.

#include "bullet.hpp"
#include "chains.hpp"
#include "critical.hpp"
#include "extremal.hpp"
#include "farey.hpp"
#include "numerics.hpp"
#include "oracle.hpp"
#include "sequence.hpp"
#include "word.hpp"
