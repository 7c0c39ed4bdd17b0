#pragma once

#include "wedder/errors.hpp"
#include "wedder/zarith.hpp"
#include "wedder/abfield.hpp"
#include "wedder/groupzoo.hpp"
#include "wedder/wedderburn.hpp"
#include "wedder/schur.hpp"
#include "wedder/critical.hpp"
#include "wedder/io.hpp"
