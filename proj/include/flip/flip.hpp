#pragma once

// Umbrella header: everything needed to decide flippability of vertical
// Heegaard splittings of totally orientable Seifert fibered spaces.

#include "flip/classifier.hpp"
#include "flip/errors.hpp"
#include "flip/json_io.hpp"
#include "flip/nielsen.hpp"
#include "flip/numeric.hpp"
#include "flip/presentations.hpp"
#include "flip/seifert.hpp"
#include "flip/splittings.hpp"
#include "flip/words.hpp"
