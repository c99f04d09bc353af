// Umbrella header.
#pragma once

#include "khoreo/bracket.hpp"
#include "khoreo/braid.hpp"
#include "khoreo/complex.hpp"
#include "khoreo/cube.hpp"
#include "khoreo/diagram.hpp"
#include "khoreo/faces.hpp"
#include "khoreo/frobenius.hpp"
#include "khoreo/fuzz.hpp"
#include "khoreo/goeritz.hpp"
#include "khoreo/laurent.hpp"
#include "khoreo/lee.hpp"
#include "khoreo/linalg.hpp"
#include "khoreo/moves.hpp"
#include "khoreo/rational.hpp"
#include "khoreo/resolution.hpp"
#include "khoreo/sparse_matrix.hpp"
#include "khoreo/thinness.hpp"
#include "khoreo/util.hpp"
#include "khoreo/verify.hpp"
