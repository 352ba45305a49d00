#pragma once

#include "hadring/campaign.hpp"
#include "hadring/conjecture.hpp"
#include "hadring/error.hpp"
#include "hadring/gf2x.hpp"
#include "hadring/group_algebra.hpp"
#include "hadring/hadamard.hpp"
#include "hadring/io.hpp"
#include "hadring/matrix.hpp"
#include "hadring/random.hpp"
#include "hadring/ring.hpp"
#include "hadring/starkad.hpp"
