#pragma once

#include "deglab/reduction.hpp"
#include "deglab/term.hpp"

namespace deglab {

// Simultaneous contraction of all redexes of degree d, by structural
// recursion. Requires d >= 1 (DegreeZero) and a typable term.
TermPtr simp_d(const TermPtr& t, int d);

// simp_1(...simp_{D-1}(simp_D(t))...) with D = maxdeg(t); the normal form.
TermPtr simpfull(const TermPtr& t);

// Witnessing reduction sequences: t ->d* simp_d(t) and t ->g* simpfull(t).
ReductionSeq simp_d_witness(const TermPtr& t, int d);
ReductionSeq simpfull_witness(const TermPtr& t);

// weight(simpfull(M)) for a pure typable term (NotPure / Untypable).
long long w_measure(const TermPtr& m);

}  // namespace deglab
