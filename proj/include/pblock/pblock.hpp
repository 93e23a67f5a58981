#pragma once

#include "pblock/abacus.hpp"
#include "pblock/block.hpp"
#include "pblock/hooks.hpp"
#include "pblock/mullineux.hpp"
#include "pblock/partition.hpp"
#include "pblock/render.hpp"
#include "pblock/verify.hpp"
