#pragma once

// Packed algebraic data types: build, traverse and rewrite serialized values
// in place, without a deserialisation step.

#include "packed/adt.hpp"
#include "packed/buffer.hpp"
#include "packed/error.hpp"
#include "packed/needs.hpp"
#include "packed/reader.hpp"
#include "packed/transform.hpp"
#include "packed/wire.hpp"
