// Convenience include for the whole library.
#pragma once

#include "qfgl/bits.hpp"
#include "qfgl/caps.hpp"
#include "qfgl/charsum.hpp"
#include "qfgl/errors.hpp"
#include "qfgl/formgraph.hpp"
#include "qfgl/gf.hpp"
#include "qfgl/graphalgo.hpp"
#include "qfgl/harness.hpp"
#include "qfgl/subspace.hpp"
