#pragma once

#include "sfb/basis.hpp"
#include "sfb/calculus.hpp"
#include "sfb/coeff.hpp"
#include "sfb/engine.hpp"
#include "sfb/io.hpp"
#include "sfb/manifold.hpp"
#include "sfb/parse.hpp"
#include "sfb/phi.hpp"
#include "sfb/random.hpp"
#include "sfb/relations.hpp"
#include "sfb/term.hpp"
