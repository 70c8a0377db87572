#pragma once

#include "sodlab/apps.hpp"
#include "sodlab/bigint.hpp"
#include "sodlab/bwb.hpp"
#include "sodlab/character.hpp"
#include "sodlab/kverify.hpp"
#include "sodlab/partition.hpp"
#include "sodlab/sod.hpp"
#include "sodlab/weight.hpp"
