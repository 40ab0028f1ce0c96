#pragma once

// Umbrella header for the Cayley-Klein geometry library.

#include "ck/bracket.hpp"
#include "ck/catalog_io.hpp"
#include "ck/classify.hpp"
#include "ck/errors.hpp"
#include "ck/generators.hpp"
#include "ck/involutions.hpp"
#include "ck/killing.hpp"
#include "ck/linalg.hpp"
#include "ck/numeric.hpp"
#include "ck/rank_one.hpp"
#include "ck/rank_two.hpp"
#include "ck/report.hpp"
#include "ck/signature.hpp"
#include "ck/trig.hpp"
#include "ck/vector_rep.hpp"
#include "ck/verify.hpp"
