/**
 * Seeded random rings, modules and short exact sequences for property
 * suites.  Everything is a function of the generator state, so a seed
 * reproduces a run.
 */
#ifndef FINDIM_RANDOM_HPP
#define FINDIM_RANDOM_HPP

#include <random>

#include "findim/engine.hpp"

namespace findim::gen {

using Rng = std::mt19937_64;

/** Uniform integer in [lo, hi]. */
long long uniform(Rng& g, long long lo, long long hi);

/**
 * A small module over r: presented Z-modules, cyclic k[x]-modules, monomial
 * quotients over k[x1..xm], quotients of projectives over finite-dimensional
 * algebras.  Z/n and Z_(p) get cyclic modules.
 */
Module random_module(const RingPtr& r, Rng& g);

/** A module of finite projective dimension (certified by the caller if needed). */
Module random_fpr_module(const RingPtr& r, Rng& g, Index cap = default_cap);

/** Componentwise direct sum of two sequences over the same ring. */
Ses sum_ses(const Ses& x, const Ses& y);

/**
 * A short exact sequence with maps (except over k[x1..xm], where graded
 * sequences carry no maps): split, syzygy, multiplication
 * 0 -> R/(a) -> R/(ab) -> R/(b) -> 0 over PIDs, radical and triple sequences
 * over finite-dimensional algebras, and sums of two of these.
 */
Ses random_ses(const RingPtr& r, Rng& g);

/** Corner algebras of dimension at most 4 over k. */
std::vector<AlgebraTable> corner_catalogue(FieldKind k);

/**
 * A triangular ring (R, S, M) with corners from the catalogue and M = R (S a
 * field), S (R a field), or R (x)_k S, projective on both sides.
 */
RingPtr random_triangular(FieldKind k, Rng& g);

}   // namespace findim::gen

#endif
