#pragma once

#include "ssyt/count.hpp"
#include "ssyt/enumerate_shapes.hpp"
#include "ssyt/errors.hpp"
#include "ssyt/exact_count.hpp"
#include "ssyt/hooks.hpp"
#include "ssyt/integer_nullspace.hpp"
#include "ssyt/involutions.hpp"
#include "ssyt/memo_cache.hpp"
#include "ssyt/partition.hpp"
#include "ssyt/plane_partition.hpp"
#include "ssyt/random_source.hpp"
#include "ssyt/recurrence.hpp"
#include "ssyt/sampler.hpp"
#include "ssyt/sequence.hpp"
#include "ssyt/shape_family.hpp"
#include "ssyt/shape_text.hpp"
#include "ssyt/tableau.hpp"
#include "ssyt/total_sequence.hpp"
#include "ssyt/walk_count.hpp"
