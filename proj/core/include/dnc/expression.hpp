#pragma once

#include <string>
#include <string_view>

#include "dnc/algebra.hpp"

namespace dnc {

/// Parses an element expression.
///
///   element := ['+'|'-'] term (('+'|'-') term)*
///   term    := item (['*'] item)*
///   item    := '(' element ')' | scalar | phase | factor
///   scalar  := int ['/' int] ['i'] | 'i'
///   phase   := ('w'|'z') '[' int ',' int ']' ['^' int] | 'r' '[' int '/' int ']'
///   factor  := ('s'|'u') index ['*'] ['^' int]
///
/// A '*' directly after a generator is its adjoint; elsewhere it is
/// multiplication. Items are juxtaposed, so "s2 s1" is the product s_2 s_1.
/// Negative powers need a unitary generator; 'u' is accepted only for
/// unitary indices. Throws SyntaxError, IndexOutOfRange or UnitaryOnly.
ExactElement parse_expression(std::string_view text, const Signature& sig);

/// Canonical text of x. Every term is a scalar, at most one phase and a
/// normal monomial, so the output parses back to x.
std::string print_expression(const Signature& sig, const ExactElement& x);

/// Human-readable text of a numeric element (not meant for re-parsing).
std::string print_expression(const Signature& sig, const NumericElement& x);

} // namespace dnc
