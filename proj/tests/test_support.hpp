#pragma once

#include "diskdyn/sampling.hpp"

namespace diskdyn::proptest {

using sampling::Generator;

}  // namespace diskdyn::proptest
