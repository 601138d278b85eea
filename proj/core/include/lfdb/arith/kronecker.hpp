#pragma once

#include <cstdint>

#include "lfdb/arith/character.hpp"

namespace lfdb::arith {

bool is_discriminant(std::int64_t d);
bool is_fundamental_discriminant(std::int64_t d);

/// Kronecker symbol (D/n) for n >= 1. Throws DomainError unless D = 0 or 1 mod 4.
int kronecker(std::int64_t discriminant, std::int64_t n);

/// The character mod |D| agreeing with kronecker(D, .); D must be fundamental.
DirichletCharacter kronecker_character(std::int64_t discriminant);

}  // namespace lfdb::arith
