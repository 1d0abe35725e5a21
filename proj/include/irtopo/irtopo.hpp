#pragma once

#include "irtopo/category.hpp"
#include "irtopo/embeddings.hpp"
#include "irtopo/error.hpp"
#include "irtopo/homotopy.hpp"
#include "irtopo/json_io.hpp"
#include "irtopo/oracles.hpp"
#include "irtopo/point_set.hpp"
#include "irtopo/rational.hpp"
#include "irtopo/space.hpp"
#include "irtopo/spectra.hpp"
#include "irtopo/verifier.hpp"
