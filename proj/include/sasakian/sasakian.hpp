#pragma once
// Convenience umbrella: pulls in the whole library.

#include "sasakian/algebra_io.hpp"
#include "sasakian/builders.hpp"
#include "sasakian/errors.hpp"
#include "sasakian/formality.hpp"
#include "sasakian/graded_algebra.hpp"
#include "sasakian/gysin.hpp"
#include "sasakian/lefschetz.hpp"
#include "sasakian/matrix.hpp"
#include "sasakian/minimal_model.hpp"
#include "sasakian/random_algebra.hpp"
#include "sasakian/rational.hpp"
#include "sasakian/report.hpp"
#include "sasakian/sym_index.hpp"
