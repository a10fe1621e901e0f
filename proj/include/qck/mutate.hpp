#pragma once

#include <random>
#include <string>

#include "qck/qc_core.hpp"

namespace qck {

// Single-entry corruptions of a valid quasi-crystal table. Each kind breaks
// at least one clause of the axioms, so the validator must flag the result.
enum class MutationKind { PhiShift, EpsShift, RedirectE, DeleteF, AddE, WtShift, PosInfWithEdge, NegInfWithEdge };
inline constexpr int kMutationKinds = 8;

std::string to_string(MutationKind k);

struct Mutation {
  MutationKind kind;
  int element;
  int index;  // 1-based
  QuasiCrystalTable table;
};

// throws InvalidData when the table offers no site for any kind
Mutation mutate(const QuasiCrystalTable& t, std::mt19937_64& rng);
// one given kind; throws InvalidData if no site exists
Mutation mutate(const QuasiCrystalTable& t, MutationKind kind, std::mt19937_64& rng);

}  // namespace qck
