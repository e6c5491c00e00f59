#pragma once

// Umbrella header.

#include "qsg/complex_matrix.hpp"
#include "qsg/embedding.hpp"
#include "qsg/mat2.hpp"
#include "qsg/multivector.hpp"
#include "qsg/qubit.hpp"
#include "qsg/quregister.hpp"
#include "qsg/report.hpp"
#include "qsg/rng.hpp"
#include "qsg/rotor.hpp"
#include "qsg/schmidt.hpp"
#include "qsg/suites.hpp"
#include "qsg/tables.hpp"
#include "qsg/verdict.hpp"
#include "qsg/words.hpp"
